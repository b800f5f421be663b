import json

import pytest

from grsod.homcalc import GrContext
from grsod.pathblocks import HalfPoint, enumerate_paths
from grsod.verify import (
    ResourceLimit, check_path, guard, verify_block, verify_diagonal, verify_pattern, verify_sod, verify_staircase,
)

G24 = GrContext(2, 4)


def test_sod_diagonal_gr24():
    r = verify_sod(G24)
    assert r.passed
    assert r.details["generators"] == 6 and r.details["counterexample_count"] == 0
    assert r.details["paths"][0]["sizes"] == [1, 4, 1]


def test_sod_all_paths_gr24():
    r = verify_sod(G24, all_paths=True)
    assert r.passed and len(r.details["paths"]) == 3
    assert r.details["lattice_path_independent"]


def test_generators_are_not_all_plainly_exceptional():
    # equivariant exceptionality holds; the tangent bundle in the middle block has Ext^1
    res = check_path(2, 4, "0,0;1,1;2,2")
    assert res["plain_exceptional"] == 5 and not res["counterexamples"]


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_sod_twist_swap_fails(seed):
    r = verify_sod(GrContext(2, 5), mutation="swap-twists", seed=seed)
    assert r.status == "fail"
    ce = r.details["counterexamples"][0]
    assert ce["kind"] == "semi-orthogonality" and ce["ext"]


def test_sod_duplicate_class_fails():
    r = verify_sod(G24, mutation="duplicate-class")
    assert r.status == "fail"
    ce = next(c for c in r.details["counterexamples"] if c["kind"] == "fullness")
    assert ce["determinant"] == 0 and ce["equal_rows"] == [0, 5]


def test_sod_parallel_is_deterministic():
    ctx = GrContext(3, 5)
    a = verify_sod(ctx, all_paths=True, jobs=1).as_json(timing=False)
    b = verify_sod(ctx, all_paths=True, jobs=2).as_json(timing=False)
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


@pytest.mark.parametrize("k,n,x,y", [(2, 4, 1, 1), (3, 6, 1, 1), (3, 6, 2, 2), (2, 4, 0, 0), (3, 6, 1, 2)])
def test_block_passes(k, n, x, y):
    r = verify_block(GrContext(k, n), HalfPoint(2 * x, 2 * y))
    assert r.passed, r.details


def test_block_half_points():
    for p in (HalfPoint(2, 1), HalfPoint(3, 2)):
        assert verify_block(G24, p).passed


def test_degenerate_block_is_trivial():
    r = verify_block(G24, HalfPoint(0, 0))
    assert r.passed and r.details["size"] == 1


@pytest.mark.parametrize("k,n", [(2, 4), (2, 5)])
def test_staircase_report(k, n):
    r = verify_staircase(GrContext(k, n))
    assert r.passed and sum(r.details["instances"].values()) > 0


def test_staircase_mutation_fails():
    r = verify_staircase(G24, mutation="multiplicity")
    assert r.status == "fail"
    ce = r.details["counterexamples"][0]
    assert not ce["exact"] and ce["residue"]


def test_diagonal_report():
    assert verify_diagonal(GrContext(2, 5)).passed


def test_pattern_only_fails_in_sufficiency_direction():
    r = verify_pattern(G24)
    tally = r.details["tally"]
    assert tally["necessity"] == 0 and tally["diagonal"] == 0
    assert tally["sufficiency"] == 4
    ce = r.details["counterexamples"][0]
    assert ce["source"] == {"lam": [], "mu": []} and ce["ext_G"] == {}


def test_guard():
    guard(GrContext(2, 10))
    with pytest.raises(ResourceLimit):
        guard(GrContext(2, 11))
    guard(GrContext(2, 11), force=True)


def test_report_schema():
    out = verify_sod(G24).as_json()
    assert set(out) == {"toolVersion", "ctx", "check", "status", "details", "elapsedMillis"}
    assert out["ctx"] == {"k": 2, "n": 4}


def test_every_gr25_path_checked():
    r = verify_sod(GrContext(2, 5), all_paths=True)
    assert len(r.details["paths"]) == len(enumerate_paths(GrContext(2, 5)))
    assert r.passed
