import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hoplab import (
    Dfa,
    accepted_lengths,
    accepts,
    cyclic_automaton,
    de_bruijn_sequence,
    is_de_bruijn,
    random_dfa,
    random_unary_dfa,
    state_signature,
    validate_dfa,
)
from hoplab.errors import (
    BadLetter,
    IncompleteTransition,
    IndexOutOfRange,
    NotUnary,
    OffsetOutOfRange,
    OrderTooLarge,
)


def test_single_state_loop_is_valid():
    validate_dfa(Dfa(1, 1, [(0,)], 0, {0}))


def test_missing_transition():
    d = Dfa(2, 2, [(1,), (0, 1)], 0, {0})
    with pytest.raises(IncompleteTransition) as exc:
        validate_dfa(d)
    assert (exc.value.state, exc.value.letter) == (0, 1)


def test_missing_entry_for_letter_zero():
    with pytest.raises(IncompleteTransition):
        validate_dfa(Dfa(1, 1, [(None,)], 0, set()))


def test_final_out_of_range():
    d = Dfa(4, 1, [(1,), (2,), (3,), (0,)], 0, {5})
    with pytest.raises(IndexOutOfRange) as exc:
        validate_dfa(d)
    assert exc.value.field == "finals"


@pytest.mark.parametrize(
    "d, field",
    [
        (Dfa(0, 1, [], 0, set()), "num_states"),
        (Dfa(1, 0, [()], 0, set()), "alphabet_size"),
        (Dfa(2, 1, [(0,), (1,)], 2, set()), "start"),
        (Dfa(2, 1, [(0,), (7,)], 0, set()), "transitions"),
    ],
)
def test_index_errors(d, field):
    with pytest.raises(IndexOutOfRange) as exc:
        validate_dfa(d)
    assert exc.value.field == field


@pytest.mark.parametrize(
    "order, word",
    [(1, "10"), (2, "1100"), (3, "11101000")],
)
def test_de_bruijn_examples(order, word):
    assert de_bruijn_sequence(order) == word


def test_de_bruijn_order_guard():
    with pytest.raises(OrderTooLarge):
        de_bruijn_sequence(25)
    with pytest.raises(ValueError):
        de_bruijn_sequence(0)


@pytest.mark.parametrize("k", range(1, 13))
def test_de_bruijn_is_de_bruijn(k):
    w = de_bruijn_sequence(k)
    assert len(w) == 2**k
    assert w.startswith("1" * k)
    assert is_de_bruijn(w)


@pytest.mark.parametrize(
    "w, expected",
    [("11101000", True), ("11111111", False), ("1100", True), ("10", True), ("110", False), ("", False), ("1", False)],
)
def test_is_de_bruijn(w, expected):
    assert is_de_bruijn(w) is expected


def _brute_is_de_bruijn(w):
    n = len(w)
    k = n.bit_length() - 1
    if n < 2 or 2**k != n:
        return False
    windows = ["".join(w[(i + j) % n] for j in range(k)) for i in range(n)]
    return len(set(windows)) == n


@given(st.text(alphabet="01", min_size=0, max_size=16))
def test_is_de_bruijn_matches_brute_force(w):
    assert is_de_bruijn(w) == _brute_is_de_bruijn(w)


def test_cyclic_automaton_db3_cycle(db3_cycle):
    assert db3_cycle.num_states == 8
    assert db3_cycle.finals == {0, 1, 2, 4}
    assert all(db3_cycle.step(i) == (i + 1) % 8 for i in range(8))
    assert accepted_lengths(db3_cycle, 8) == {0, 1, 2, 4, 8}


def test_cyclic_automaton_single():
    d = cyclic_automaton("1", 0)
    assert d == Dfa(1, 1, [(0,)], 0, {0})


def test_cyclic_offset_guard():
    with pytest.raises(OffsetOutOfRange):
        cyclic_automaton("101", 3)


def test_state_signature(db3_cycle):
    assert state_signature(db3_cycle, 0, 3) == "111"
    assert state_signature(db3_cycle, 3, 3) == "010"
    for q in db3_cycle.finals:
        assert state_signature(db3_cycle, q, 1) == "1"


def test_state_signature_needs_unary():
    with pytest.raises(NotUnary):
        state_signature(random_dfa(3, 2, 0.5, 1), 0, 2)


@pytest.mark.parametrize("k", range(1, 9))
def test_signatures_cover_all_words(k):
    d = cyclic_automaton(de_bruijn_sequence(k))
    sigs = sorted(state_signature(d, p, k) for p in range(d.num_states))
    assert sigs == sorted(format(v, f"0{k}b") for v in range(2**k))


def test_accepts(db3_cycle):
    assert accepts(db3_cycle, [])
    assert not accepts(Dfa(1, 1, [(0,)], 0, set()), [0, 0, 0])
    with pytest.raises(BadLetter):
        accepts(db3_cycle, [1])


def test_accepted_lengths_needs_unary():
    with pytest.raises(NotUnary):
        accepted_lengths(random_dfa(3, 2, 0.5, 0), 4)


def test_random_dfa_forced_case():
    assert random_dfa(1, 1, 1.0, 123) == Dfa(1, 1, [(0,)], 0, {0})


def test_random_dfa_is_deterministic_and_valid():
    assert random_dfa(30, 2, 0.5, 99) == random_dfa(30, 2, 0.5, 99)
    validate_dfa(random_dfa(100, 2, 0.5, 7))


@settings(max_examples=60)
@given(st.integers(1, 40), st.floats(0, 1), st.integers(0, 10**6))
def test_random_unary_dfa_reachable(n, density, seed):
    from hoplab import state_levels

    d = random_unary_dfa(n, density, seed)
    validate_dfa(d)
    assert sorted(state_levels(d)) == list(range(n))


@settings(max_examples=80)
@given(st.text(alphabet="01", min_size=1, max_size=20), st.data())
def test_accepted_lengths_agree_with_accepts(w, data):
    offset = data.draw(st.integers(0, len(w) - 1))
    d = cyclic_automaton(w, offset)
    validate_dfa(d)
    m = data.draw(st.integers(0, 30))
    assert accepted_lengths(d, m) == {j for j in range(m + 1) if accepts(d, [0] * j)}
