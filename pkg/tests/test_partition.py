from hypothesis import given
from hypothesis import strategies as st

from hoplab import RefinablePartition


def test_split_moves_marked_states():
    p = RefinablePartition(6, [[0, 1, 2, 3], [4, 5]])
    p.mark(1)
    p.mark(3)
    p.mark(1)
    assert p.touched() == [0]
    new = p.split(0)
    p.finish_round()
    assert sorted(p.members(new)) == [1, 3]
    assert sorted(p.members(0)) == [0, 2]
    assert p.blocks() == [(0, 2), (1, 3), (4, 5)]


def test_split_all_or_nothing_marked_is_noop():
    p = RefinablePartition(3, [[0, 1, 2]])
    for s in range(3):
        p.mark(s)
    assert p.split(0) is None
    assert p.split(0) is None
    assert len(p) == 1


def test_empty_blocks_are_skipped():
    p = RefinablePartition(2, [[], [0, 1]])
    assert len(p) == 1


def test_labels_and_from_labels_roundtrip():
    p = RefinablePartition.from_labels([2, 0, 2, 1])
    assert p.blocks() == [(0, 2), (1,), (3,)]
    assert p.labels() == [0, 1, 0, 2]


@given(st.lists(st.integers(0, 3), min_size=1, max_size=30), st.data())
def test_blocks_stay_disjoint_and_covering(labels, data):
    p = RefinablePartition.from_labels(labels)
    n = len(labels)
    for _ in range(data.draw(st.integers(0, 6))):
        marks = data.draw(st.sets(st.integers(0, n - 1)))
        for s in marks:
            p.mark(s)
        for b in p.touched():
            p.split(b)
        p.finish_round()
        seen = sorted(s for b in range(len(p)) for s in p.members(b))
        assert seen == list(range(n))
        assert all(p.size(b) > 0 for b in range(len(p)))
        assert all(p.members(p.block_of[s]).count(s) == 1 for s in range(n))
