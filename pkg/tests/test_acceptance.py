"""Acceptance gate: fourteen pinned criteria, each delegated to a named
verification suite with fixed trial counts and wall-clock budgets.

Each test prints a single CRITERION line (visible with pytest -s or on
failure) and asserts both correctness and the runtime budget.
"""

import pytest

from fkit import verify

SEED = 0


def _gate(number, name, budget_s, **kwargs):
    rep = verify.run_suite(name, seed=SEED, **kwargs)
    ok = rep["passed"] and rep["wall_seconds"] < budget_s
    status = "PASS" if ok else "FAIL"
    print(
        f"CRITERION {number:2d} [{name}]: {status} "
        f"(wall {rep['wall_seconds']}s, budget {budget_s}s)"
    )
    assert rep["passed"], f"criterion {number} failed: {rep}"
    assert rep["wall_seconds"] < budget_s, (
        f"criterion {number} over budget: {rep['wall_seconds']}s >= {budget_s}s"
    )
    return rep


def test_01_composition_law():
    """Exhaustive for the dim-2 tags over F_5; >= 10^4 random pairs for the
    quaternion/octonion tags over Q and F_5; zero failures; < 10 s."""
    rep = _gate(1, "composition-law", 10, trials=10**4)
    for chk in rep["checks"]:
        assert chk["failures"] == 0


def test_02_adjoint_identity():
    """sharp(sharp(X)) = N(X) X on >= 10^4 random X per algebra tag; < 10 s."""
    rep = _gate(2, "adjoint", 10, trials=10**4)
    assert all(c["failures"] == 0 for c in rep["checks"])


def test_03_cross_trilinear_duality():
    """<X x Y, Z> = (X,Y,Z) and (X,X,X) = 6 N(X) on >= 10^4 samples; < 10 s."""
    rep = _gate(3, "cross-duality", 10, trials=10**4)
    total = sum(c["trials"] for c in rep["checks"])
    assert total >= 10**4


def test_04_sextic_identity():
    """Exhaustive 5^9 scan over (C^0)^3 for quaternion(1,1)/F_5 plus 10^4
    rational samples; < 60 s."""
    rep = _gate(4, "sextic", 60, trials=10**4, exhaustive=True)
    modes = [c["mode"] for c in rep["checks"]]
    assert any(m.startswith("exhaustive(1953125") for m in modes)


def test_05_rank1_characterization():
    """(1, b, b#, N(b)) always has rank 1 (10^4 samples) and on the
    exhaustive F_5 diagonal slice rank 1 holds exactly for (c, d) =
    (b#, N(b)); < 120 s."""
    rep = _gate(5, "rank1-special", 120, trials=10**4)
    slice_chk = [c for c in rep["checks"] if "rank1_expected" in c][0]
    assert slice_chk["rank1_found"] == slice_chk["rank1_expected"] == 125


def test_06_rank1_criterion():
    """The similitude-group criterion agrees with the intrinsic rank-1 test
    on the exhaustive slice and on 10^4 random vectors, condition (3)
    sampled over 64 Levi elements; < 120 s."""
    rep = _gate(6, "rank1-criterion", 120, trials=10**4, levi_samples=64)


def test_07_similitude_contracts():
    """nu = 1 for n, nbar, involution; nu = lambda for s and s*, with the
    quartic scaling by nu^2; 10^4 probes per generator; < 10 s."""
    rep = _gate(7, "similitude", 10, trials=10**4)


def test_08_conjugation_identity():
    """iota n(x) iota^{-1} = nbar(-x) on 10^3 random (x, v); < 5 s."""
    rep = _gate(8, "conjugation", 5, trials=10**3)


def test_09_flat_duality():
    """One constant kappa = -1 satisfies <flat(v), w> = kappa (v,v,v,w) on
    10^4 random (v, w) across all tags; < 30 s."""
    rep = _gate(9, "flat-duality", 30, trials=10**4)
    assert rep["kappa"] == -1


def test_10_fiber_cardinality():
    """Rank-3 fiber = |SO_3| = 120 over F_5 and 336 over F_7; < 120 s."""
    rep = _gate(10, "fiber-cardinality", 120)
    got = {c["p"]: c["fiber"] for c in rep["checks"]}
    assert got == {5: 120, 7: 336}


def test_11_rank0_fiber():
    """Every rank-1 element of the fiber over 0 in M(2, F_5) is a pure
    tensor with nilpotent direction; count = (q^2-1)(q^6-1)/(q-1); the 2x2
    nilpotent lemma is exhaustively confirmed; < 600 s."""
    rep = _gate(11, "rank0-fiber", 600)
    main = rep["checks"][0]
    assert main["rank1_count"] == main["expected"] == 93744


def test_12_dimension_table():
    """dim W_C = 20 / 32 / 56 for dim C = 2 / 4 / 8; instant."""
    rep = _gate(12, "dimensions", 2)
    dims = {c["dim_C"]: c["dim_W"] for c in rep["checks"]}
    assert dims[2] == 20 and dims[4] == 32 and dims[8] == 56


def test_13_rank_invariance():
    """10^3 random generator words never change the rank stratum, over F_5
    and Q; < 30 s."""
    rep = _gate(13, "rank-invariance", 30, trials=10**3)
    assert all(c["failures"] == 0 for c in rep["checks"])


def test_14_quadratic_forms():
    """Hilbert product formula on 10^3 random pairs; ternary similarity
    separates diag(1,1,1) from diag(1,1,-1) and matches split forms; < 30 s."""
    rep = _gate(14, "quadform", 30, trials=10**3)
