import itertools

import pytest

from rsl import (
    BlockOrderDomainError,
    Shape,
    custom,
    distinguished,
    length_lex,
    reverse_length,
    verify_lengthening,
)


def test_length_lex_examples():
    order = length_lex()
    # {1,1} < {1,2}: equal size, word 11 < 12
    assert order.compare((2, 0), (1, 1)) < 0
    # size dominates: three letters beat two
    assert order.compare((0, 3), (2, 0)) > 0
    assert order.compare((1, 1), (1, 1)) == 0


def test_distinguished_examples():
    shape = Shape((2, 1))
    order = distinguished(shape)
    # {s} < {t,t}
    assert order.compare((0, 1), (2, 0)) < 0
    assert order.compare((2, 0), (1, 1)) > 0
    with pytest.raises(BlockOrderDomainError):
        order.compare((0, 1), (1, 1))


def test_distinguished_requires_multiplicity_one():
    with pytest.raises(ValueError):
        distinguished(Shape((2, 2)))


def test_total_order_axioms():
    shape = Shape((3, 2))
    order = length_lex()
    contents = [
        c
        for c in itertools.product(range(4), range(3))
        if any(c) and all(x <= p for x, p in zip(c, shape.parts))
    ]
    for a in contents:
        assert order.compare(a, a) == 0
        for b in contents:
            assert order.compare(a, b) == -order.compare(b, a)
            for c in contents:
                if order.compare(a, b) <= 0 and order.compare(b, c) <= 0:
                    assert order.compare(a, c) <= 0


def test_lengthening_passes_for_named_orders():
    for n in range(2, 9):
        assert verify_lengthening(length_lex(), n, (n,))
    for n in range(2, 9):
        assert verify_lengthening(distinguished((n - 1, 1) if n > 2 else (1, 1)), n,
                                  (n - 1, 1) if n > 2 else (1, 1))
    assert verify_lengthening(length_lex(), 6, (2, 2, 2))
    assert verify_lengthening(length_lex(), 8, (4, 3, 1))


def test_reverse_length_counterexample():
    # B = B' = single letter: B <= B' but BB' is larger yet sorts earlier
    assert not verify_lengthening(reverse_length(), 4, (4,))


def test_custom_order_hook():
    order = custom("by-word", lambda c: (tuple(c),))
    assert order.compare((1, 0), (0, 1)) > 0
    assert order.kind == "by-word"


def test_full_shape_length_lex_is_size_order():
    order = length_lex()
    assert order.compare((2,), (3,)) < 0
    assert order.compare((3,), (3,)) == 0
