import pytest

from rsl.shapes import (
    RankSet,
    Shape,
    as_shape,
    bipartitions,
    content_size,
    content_word,
    dualize,
    full_shape,
    hook_shape,
    multiset_partitions,
    unit_contents,
)


def test_shape_validation():
    assert Shape((3, 2, 1)).n == 6
    with pytest.raises(ValueError):
        Shape((2, 3))
    with pytest.raises(ValueError):
        Shape(())
    with pytest.raises(ValueError):
        Shape((2, 0))


def test_as_shape_forms():
    assert as_shape(5) == Shape((5,))
    assert as_shape([4, 1]) == Shape((4, 1))
    assert full_shape(4).is_full()
    assert hook_shape(5) == Shape((4, 1))


def test_letters():
    shape = Shape((3, 2, 1))
    assert [shape.letter_of(e) for e in range(1, 7)] == [0, 0, 0, 1, 1, 2]
    with pytest.raises(ValueError):
        shape.letter_of(7)


def test_content_helpers():
    assert content_size((2, 1)) == 3
    assert content_word((2, 1)) == (0, 0, 1)
    assert unit_contents((2, 1)) == [(1, 0), (1, 0), (0, 1)]


def test_bipartitions_unordered_complete():
    pairs = list(bipartitions((4,)))
    assert pairs == [((1,), (3,)), ((2,), (2,))]
    pairs = set(bipartitions((2, 1)))
    assert pairs == {((1, 0), (1, 1)), ((0, 1), (2, 0))}


def test_multiset_partitions_counts():
    # partitions of a 5-set size-multiset into parts
    assert len(list(multiset_partitions((5,), 2))) == 2  # 4+1, 3+2
    assert len(list(multiset_partitions((5,), 3))) == 2  # 3+1+1, 2+2+1
    parts = list(multiset_partitions((2, 2), 2))
    # distinct splits of the multiset {a,a,b,b} into two parts
    assert len(set(parts)) == len(parts) == 4


def test_rank_set_validation_and_views():
    rs = RankSet.primal(6, {1, 4})
    assert rs.sorted() == (1, 4)
    assert sorted(rs.as_dual().ranks) == [1, 4]
    assert dualize(rs).dual
    with pytest.raises(ValueError):
        RankSet.primal(6, {5})
    with pytest.raises(ValueError):
        RankSet.primal(6, {0})


def test_rank_set_iteration_and_str():
    rs = RankSet.of_dual(8, {2, 5})
    assert list(rs) == [2, 5]
    assert str(rs).endswith("*")
