import itertools

import pytest

from hoplab import (
    TiePolicy,
    cyclic_automaton,
    de_bruijn_sequence,
    dfa_equivalent,
    enumerate_cyclic,
    exhaustive_tie_search,
    hopcroft_minimize,
    moore_partition,
    random_dfa,
    run_with_trace,
)
from hoplab.errors import AlphabetMismatch, NotUnary, SearchBudgetExceeded, SizeTooLarge
from hoplab.oracle import enumeration_csv

from conftest import random_corpus
from naive import naive_mass


def _walk(d, p, w):
    for a in w:
        p = d.transitions[p][a]
    return p


def _brute_classes(d):
    # words shorter than |Q| suffice to separate inequivalent states
    words = [w for n in range(d.num_states) for w in itertools.product(range(d.alphabet_size), repeat=n)]
    sig = {p: tuple(_walk(d, p, w) in d.finals for w in words) for p in range(d.num_states)}
    groups = {}
    for p in range(d.num_states):
        groups.setdefault(sig[p], []).append(p)
    return sorted(tuple(g) for g in groups.values())


def test_moore_examples(alternating):
    assert len(moore_partition(cyclic_automaton(de_bruijn_sequence(3)))) == 8
    assert moore_partition(random_dfa(20, 2, 1.0, 4)).blocks() == [tuple(range(20))]
    assert moore_partition(alternating).blocks() == [(0, 2), (1, 3)]


@pytest.mark.parametrize("seed", range(40))
def test_moore_matches_word_enumeration(seed):
    d = random_dfa(1 + seed % 7, 1 + seed % 2, 0.4, seed)
    assert moore_partition(d).blocks() == _brute_classes(d)


def test_equivalence_examples(alternating):
    assert dfa_equivalent(alternating, alternating)
    assert dfa_equivalent(alternating, cyclic_automaton("10"))
    assert not dfa_equivalent(cyclic_automaton("10", 0), cyclic_automaton("10", 1))
    with pytest.raises(AlphabetMismatch):
        dfa_equivalent(alternating, random_dfa(2, 2, 0.5, 0))


@pytest.mark.parametrize("seed", range(30))
def test_equivalence_matches_bounded_enumeration(seed):
    a = random_dfa(1 + seed % 5, 1 + seed % 2, 0.5, seed)
    b = random_dfa(1 + (seed * 3) % 5, a.alphabet_size, 0.5, seed + 1000)
    bound = a.num_states * b.num_states
    words = [w for n in range(bound) for w in itertools.product(range(a.alphabet_size), repeat=n)]
    expected = all((_walk(a, a.start, w) in a.finals) == (_walk(b, b.start, w) in b.finals) for w in words)
    assert dfa_equivalent(a, b) == expected


def test_search_de_bruijn_order3_fifo():
    d = cyclic_automaton(de_bruijn_sequence(3))
    res = exhaustive_tie_search(d, "fifo")
    assert res.objective == 12
    assert res.branch_count == 128


def test_search_lifo_order3_reaches_bound_too():
    # the decision tree contains a LIFO run with no in-list split reaching 12;
    # confirmed with the independent set-based simulator
    d = cyclic_automaton(de_bruijn_sequence(3))
    res = exhaustive_tie_search(d, "lifo")
    assert res.objective == 12
    mass, blocks, events = naive_mass(d, "lifo", [x.choice for x in res.witness.decisions])
    assert (mass, events) == (12, 0)
    assert len(blocks) == 8


def test_naive_brute_force_agrees_on_order3():
    d = cyclic_automaton(de_bruijn_sequence(3))
    for strategy in ("fifo", "lifo"):
        best = max(naive_mass(d, strategy, ch)[0] for ch in itertools.product((0, 1), repeat=9))
        assert best == exhaustive_tie_search(d, strategy).objective


def test_search_all_final():
    res = exhaustive_tie_search(cyclic_automaton("11111111"), "fifo")
    assert (res.objective, res.branch_count) == (0, 1)


@pytest.mark.parametrize("strategy", ["fifo", "lifo"])
@pytest.mark.parametrize("word", ["11101000", "00011011", "10110100", "1100", "101100111000"])
def test_witness_replays_to_objective(strategy, word):
    d = cyclic_automaton(word)
    res = exhaustive_tie_search(d, strategy)
    _, stats = run_with_trace(d, strategy, res.witness)
    assert stats.total_splitter_mass == res.objective
    assert naive_mass(d, strategy, [x.choice for x in res.witness.decisions])[0] == res.objective


@pytest.mark.parametrize("strategy", ["fifo", "lifo"])
def test_search_dominates_policies(strategy):
    for d in random_corpus(40, alphabets=(1,), max_states=14, seed=23):
        best = exhaustive_tie_search(d, strategy).objective
        for tie in ("minstate", "maxstate", "lookahead"):
            for placement in ("larger", "smaller"):
                _, stats, _ = hopcroft_minimize(d, strategy, TiePolicy(tie, placement))
                assert stats.total_splitter_mass <= best


def test_search_budget():
    d = cyclic_automaton(de_bruijn_sequence(3))
    with pytest.raises(SearchBudgetExceeded) as exc:
        exhaustive_tie_search(d, "fifo", branch_cap=5)
    assert exc.value.best.branch_count == 5
    assert exc.value.best.objective <= 12


def test_search_guards():
    with pytest.raises(NotUnary):
        exhaustive_tie_search(random_dfa(4, 2, 0.5, 0))
    with pytest.raises(SizeTooLarge):
        exhaustive_tie_search(cyclic_automaton("1" * 33))


def test_enumerate_size2():
    rows = enumerate_cyclic(2, "fifo")
    assert [(p, m) for p, _, m, _ in rows] == [("00", 0), ("01", 1), ("10", 1), ("11", 0)]


def test_enumerate_guards():
    with pytest.raises(SizeTooLarge):
        enumerate_cyclic(17)
    with pytest.raises(ValueError):
        enumerate_cyclic(0)


def test_enumerate_parallel_matches_sequential():
    assert enumerate_cyclic(5, "lifo", jobs=2) == enumerate_cyclic(5, "lifo")


def test_enumeration_csv():
    text = enumeration_csv(enumerate_cyclic(2, "fifo"), "fifo")
    assert text.splitlines() == [
        "pattern,is_de_bruijn,strategy,max_mass,branch_count",
        "00,false,fifo,0,1",
        "01,true,fifo,1,2",
        "10,true,fifo,1,2",
        "11,false,fifo,0,1",
    ]
