"""Hopcroft minimization laboratory: controllable nondeterminism, splitter
instrumentation, exhaustive tie search, and cover-automata minimization."""

from .cover import (
    CoverSpec,
    is_cover_automaton,
    korner_minimize,
    merge_similar,
    minimal_dfca_check,
    minimize_cover,
    similar_states,
    state_levels,
)
from .dfa import (
    Dfa,
    accepted_lengths,
    accepts,
    check_dfa,
    cyclic_automaton,
    de_bruijn_sequence,
    is_de_bruijn,
    random_dfa,
    random_unary_dfa,
    state_signature,
    validate_dfa,
)
from .estimators import CoverMinimizer, HopcroftMinimizer, MooreMinimizer
from .hopcroft import (
    ChoiceTrace,
    Decision,
    Placement,
    RunStats,
    Strategy,
    TieChoice,
    TiePolicy,
    Worklist,
    hopcroft_minimize,
    quotient,
    run_with_trace,
)
from .oracle import SearchResult, dfa_equivalent, enumerate_cyclic, exhaustive_tie_search, moore_partition
from .partition import RefinablePartition

__version__ = "0.1.0"
