import itertools

import pytest

from rsl import (
    WordUnsupportedError,
    b_prime,
    build_bprime,
    build_descending_run,
    build_theorem22,
    build_word,
    descent_set,
    descent_word,
    flag_h,
    full_shape,
    min_extension,
)
from rsl.core import empty_chain
from rsl.vanishing import classify_rank_set


def test_descending_run_ten_exact():
    facet = build_descending_run(10)
    assert facet.positions == (2, 4, 6, 8, 7, 5, 3, 1, 9)
    assert str(descent_word(facet)) == "D" * 7 + "A"


def test_descending_run_eleven_exact():
    facet = build_descending_run(11)
    assert facet.positions == (2, 4, 6, 8, 9, 7, 5, 3, 1, 10)
    assert str(descent_word(facet)) == "D" * 8 + "A"


def test_concatenated_run_word_verifies():
    facet = build_word("DDDADDDDA", 11)
    assert str(descent_word(facet)) == "DDDADDDDA"


def test_descending_run_small():
    assert str(descent_word(build_descending_run(4))) == "DA"
    with pytest.raises(ValueError):
        build_descending_run(3)


def test_all_ascents_is_min_extension_of_empty():
    for n in (4, 6):
        facet = build_word("A" * (n - 2))
        assert facet == min_extension(empty_chain(full_shape(n)))


def test_build_word_exhaustive():
    for length in range(1, 8):
        for bits in itertools.product("AD", repeat=length - 1):
            word = "".join(bits) + "A"
            assert str(descent_word(build_word(word))) == word


def test_build_word_rejects_trailing_descent():
    with pytest.raises(WordUnsupportedError):
        build_word("AD")
    with pytest.raises(WordUnsupportedError):
        build_word("DDD")


def test_theorem22_worked_examples():
    facet = build_theorem22({1, 3}, 6)
    assert sorted(descent_set(facet).ranks) == [2, 4]  # word ADAD
    facet = build_theorem22({1, 2, 4, 6}, 8)
    assert str(descent_word(facet)) == "DADADD"
    # i = 0 delegates to the word builder
    facet = build_theorem22({3, 4}, 6)
    assert sorted(descent_set(facet).ranks) == [1, 2]


def test_theorem22_exhaustive_feasible():
    for n in range(4, 10):
        for size in range(1, n - 1):
            for s in itertools.combinations(range(1, n - 1), size):
                shape = classify_rank_set(set(s), n)
                if shape.kind != "initial-plus-tail":
                    continue
                if shape.js[0] <= shape.i + 1 or shape.i > shape.l:
                    continue
                facet = build_theorem22(set(s), n)
                dual = frozenset(n - 1 - r for r in s)
                assert facet.descent_dual_set() == dual
                assert flag_h(n, full_shape(n), set(s)) >= 1


def test_theorem22_preconditions():
    with pytest.raises(ValueError):
        build_theorem22({1, 2}, 6)  # initial segment: i=2, l=0
    with pytest.raises(ValueError):
        build_theorem22({1, 2, 5}, 7)  # i=2 > l=1


def test_bprime_worked_example():
    facets = build_bprime({2, 3, 6}, 8)  # corank set {1,4,5}
    assert len(facets) == 2
    assert facets[0].positions == (7, 4, 5, 6, 3, 1, 2)
    for f in facets:
        assert sorted(descent_set(f).ranks) == [1, 4, 5]
    assert facets[0].chain_type() != facets[1].chain_type()


def test_bprime_initial_segments_single():
    for n in range(3, 8):
        for i in range(0, n - 1):
            s = set(range(1, i + 1))
            facets = build_bprime(s, n)
            assert len(facets) == 1
            assert b_prime(n, s) == 1


def test_bprime_exhaustive_small():
    for n in range(3, 8):
        for size in range(0, n - 1):
            for s in itertools.combinations(range(1, n - 1), size):
                facets = build_bprime(set(s), n)
                dual = frozenset(n - 1 - r for r in s)
                for f in facets:
                    assert f.descent_dual_set() == dual
                initial = list(s) == list(range(1, len(s) + 1))
                assert len(facets) == (1 if initial else 2)


def test_builders_consistent_with_counting():
    # a verified facet witnesses positivity whenever 1 is not selected
    for n in range(3, 9):
        for size in range(0, n - 2):
            for s in itertools.combinations(range(2, n - 1), size):
                assert flag_h(n, full_shape(n), set(s)) >= 1
