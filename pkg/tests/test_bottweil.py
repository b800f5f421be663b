import pytest
from hypothesis import given, settings, strategies as st

from grsod.bottweil import BBWResult, bbw_reduce, cohomology_gr, push_inner, rho
from grsod.littlewood import GLWeight, dim_gl

from oracles import bbw_oracle


def test_rho():
    assert rho(4) == (4, 3, 2, 1)


def test_reduce_examples():
    assert bbw_reduce((4, 3, 2, 1)) == BBWResult(False, 0, (0, 0, 0, 0))
    assert bbw_reduce((4, 3, 3, 1)).vanishing
    assert bbw_reduce((4, 3, 6, 5)) == BBWResult(False, 4, (2, 2, 2, 2))


def test_cohomology_examples():
    res = cohomology_gr(2, 4, (0, 0), (-1, -1))
    assert res == BBWResult(False, 0, (0, 0, -1, -1))
    assert dim_gl(GLWeight(res.dominant, 4)) == 6
    assert cohomology_gr(2, 4, (0, 0), (1, 0)).vanishing
    for k, n in [(1, 3), (2, 5), (3, 6)]:
        assert cohomology_gr(k, n, (), ()) == BBWResult(False, 0, (0,) * n)


def test_canonical_bundle_top_degree():
    # omega = O(-n); H^dim(omega) is one-dimensional
    for k, n in [(1, 3), (2, 4), (2, 5), (3, 6)]:
        res = cohomology_gr(k, n, (), (n,) * k)
        assert res.degree == k * (n - k) and dim_gl(GLWeight(res.dominant, n)) == 1


def test_push_inner_examples():
    assert push_inner([((0,), 1), ((0,), 1)]) == BBWResult(False, 0, (0, 0))
    assert push_inner([((1,), 1), ((), 2)]) == BBWResult(False, 0, (1, 0, 0))
    assert push_inner([((-1,), 1), ((), 1)]).vanishing


@settings(max_examples=300)
@given(st.lists(st.integers(-4, 4), min_size=1, max_size=6))
def test_reduce_matches_reflection_oracle(weight):
    shifted = tuple(w + r for w, r in zip(weight, rho(len(weight))))
    got = bbw_reduce(shifted)
    want = bbw_oracle(weight)
    if want is None:
        assert got.vanishing
    else:
        assert (got.degree, got.dominant) == want


@pytest.mark.parametrize("k,n", [(1, 3), (2, 4), (2, 5)])
def test_borel_weil_for_dominant_weights(k, n):
    # a weight dominant for the whole of GL(n) has only H^0, equal to itself
    for top in range(3):
        w = (top,) + (0,) * (n - 2) + (-top,)
        res = cohomology_gr(k, n, w[: n - k], w[n - k:])
        assert res == BBWResult(False, 0, w)
