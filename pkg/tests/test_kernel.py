"""Equivalence of the compiled kernel and the pure-Python fallback, plus
agreement with the direct nested-tuple restriction."""

import random

import pytest

from rsl import RankSet, enumerate_facet_orbits, full_shape, restrict
from rsl import _kernel_py
from rsl.kernel import IMPL

try:
    from rsl import _kernel_cy
except ImportError:  # pragma: no cover - extension not built
    _kernel_cy = None

IMPLS = [("python", _kernel_py.ForestStore)]
if _kernel_cy is not None:
    IMPLS.append(("cython", _kernel_cy.ForestStore))


@pytest.mark.parametrize("name,store_cls", IMPLS)
def test_intern_extract_round_trip(name, store_cls):
    store = store_cls()
    for n in (4, 5, 6):
        for facet in enumerate_facet_orbits(n, full_shape(n)):
            rid = store.intern_roots(facet.roots)
            assert store.nested_roots(rid) == facet.roots


@pytest.mark.parametrize("name,store_cls", IMPLS)
def test_drop_matches_direct_restriction(name, store_cls):
    store = store_cls()
    rng = random.Random(31)
    for n in (5, 6, 7):
        facets = enumerate_facet_orbits(n, full_shape(n))
        for facet in rng.sample(facets, min(10, len(facets))):
            rid = store.intern_roots(facet.roots)
            levels = list(facet.dual_levels)
            for depth, d in enumerate(levels):
                keep = [x for x in levels if x != d]
                direct = restrict(facet, RankSet.of_dual(n, keep))
                assert store.nested_roots(store.drop_roots(rid, depth)) == direct.roots


def test_impls_agree_on_shared_workload():
    if _kernel_cy is None:
        pytest.skip("compiled kernel not built")
    a, b = _kernel_py.ForestStore(), _kernel_cy.ForestStore()
    for n in (5, 6):
        for facet in enumerate_facet_orbits(n, full_shape(n)):
            ra = a.intern_roots(facet.roots)
            rb = b.intern_roots(facet.roots)
            for depth in range(len(facet.dual_levels)):
                assert a.nested_roots(a.drop_roots(ra, depth)) == b.nested_roots(
                    b.drop_roots(rb, depth)
                )


def test_interning_shares_ids():
    store = _kernel_py.ForestStore()
    x = store.intern_nested(((3,), (((1,), ()), ((2,), ()))))
    y = store.intern_nested(((3,), (((2,), ()), ((1,), ()))))  # child order ignored
    assert x == y


def test_selected_impl_reports():
    assert IMPL in ("python", "cython")
