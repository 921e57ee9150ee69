"""scikit-learn style wrappers.

The "samples" here are whole automata: ``fit`` computes a state partition for
one :class:`~hoplab.dfa.Dfa` and ``transform`` returns the reduced automaton.
Hyper-parameters go through ``get_params``/``set_params`` so the minimizers
can be cloned and grid-searched like any other estimator.
"""

from __future__ import annotations

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .cover import CoverSpec, minimize_cover
from .dfa import Dfa, check_dfa
from .hopcroft import ChoiceTrace, TiePolicy, hopcroft_minimize, quotient
from .oracle import moore_partition


class HopcroftMinimizer(TransformerMixin, BaseEstimator):
    """Hopcroft minimization with explicit worklist strategy and tie policy.

    Parameters
    ----------
    strategy : {"fifo", "lifo"}
    tie : {"minstate", "maxstate", "lookahead", "trace"}
        Choice between equal-size fragments.
    placement : {"larger", "smaller", "trace"}
        Which fragment keeps the worklist slot of a split listed block.
    trace : ChoiceTrace or None
        Decisions to replay when ``tie`` or ``placement`` is ``"trace"``.

    Attributes
    ----------
    partition_ : RefinablePartition
    stats_ : RunStats
    trace_ : ChoiceTrace
    labels_ : list of int
        Block index of every state.
    n_blocks_ : int
    """

    def __init__(self, strategy="fifo", tie="minstate", placement="larger", trace=None):
        self.strategy = strategy
        self.tie = tie
        self.placement = placement
        self.trace = trace

    def _policy(self):
        return TiePolicy(self.tie, self.placement, self.trace)

    def fit(self, X: Dfa, y=None):
        X = check_dfa(X)
        self.partition_, self.stats_, self.trace_ = hopcroft_minimize(X, self.strategy, self._policy())
        self.labels_ = self.partition_.labels()
        self.n_blocks_ = len(self.partition_)
        self.n_states_in_ = X.num_states
        return self

    def transform(self, X: Dfa) -> Dfa:
        check_is_fitted(self, "partition_")
        X = check_dfa(X)
        if X.num_states != self.n_states_in_:
            raise ValueError(
                f"fitted on {self.n_states_in_} states, got an automaton with {X.num_states}"
            )
        return quotient(X, self.partition_)

    def replay(self) -> "HopcroftMinimizer":
        """Unfitted copy that reproduces this run decision for decision."""
        check_is_fitted(self, "trace_")
        return self.__class__(self.strategy, "trace", "trace", ChoiceTrace(list(self.trace_.decisions)))


class MooreMinimizer(TransformerMixin, BaseEstimator):
    """Reference minimizer (iterated signature refinement)."""

    def fit(self, X: Dfa, y=None):
        X = check_dfa(X)
        self.partition_ = moore_partition(X)
        self.labels_ = self.partition_.labels()
        self.n_blocks_ = len(self.partition_)
        return self

    def transform(self, X: Dfa) -> Dfa:
        check_is_fitted(self, "partition_")
        return quotient(check_dfa(X), self.partition_)


class CoverMinimizer(TransformerMixin, BaseEstimator):
    """Minimal cover automaton for the words of length <= ``l`` accepted by the input.

    Attributes
    ----------
    automaton_ : Dfa
        The minimal DFCA.
    stats_ : RunStats
        Statistics of the first refinement pass.
    n_blocks_ : int
    """

    def __init__(self, l=0, strategy="fifo", tie="minstate", placement="larger"):
        self.l = l
        self.strategy = strategy
        self.tie = tie
        self.placement = placement

    def fit(self, X: Dfa, y=None):
        X = check_dfa(X)
        res = minimize_cover(X, CoverSpec(self.l), self.strategy, TiePolicy(self.tie, self.placement))
        self.automaton_ = res.automaton
        self.stats_ = res.stats
        self.n_blocks_ = res.blocks
        self.fitted_input_ = X
        return self

    def transform(self, X: Dfa) -> Dfa:
        check_is_fitted(self, "automaton_")
        if check_dfa(X) != self.fitted_input_:
            raise ValueError("transform expects the automaton passed to fit")
        return self.automaton_
