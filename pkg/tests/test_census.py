import json

import pytest

from fkit import census, composition as comp, fibers, linalg
from fkit.census import OverflowSpaceError
from fkit.composition import AlgebraError
from fkit.fields import QQ, PrimeField
from fkit.fibers import jordan_to_symmetric
from fkit.jordan import JordanElem
from fkit.quadform import TernaryForm


def test_unarion_jordan_census_matches_matrix_rank_oracle(f5):
    """Rank strata of the unarion Jordan space = symmetric 3x3 matrices by
    matrix rank: [1, 124, 3100, 12400] over F_5."""
    A = comp.construct("unarion", (), f5)
    rep = census.jordan_census(A)
    assert [rep.counts[r] for r in range(4)] == [1, 124, 3100, 12400]
    assert rep.total == 5**6
    # independent oracle on a sampled slice
    import random

    rng = random.Random(1)
    for _ in range(50):
        X = JordanElem.random(A, rng)
        from fkit import jordan as jmod

        S = [list(r) for r in jordan_to_symmetric(X)]
        assert jmod.rank_jordan(X) == linalg.rank(S)


def test_census_checksum_worker_invariant(f5):
    A = comp.construct("unarion", (), f5)
    r1 = census.jordan_census(A, workers=1)
    r2 = census.jordan_census(A, workers=3)
    assert r1.counts == r2.counts
    assert r1.checksum == r2.checksum


def test_sampled_census_deterministic(f5):
    A = comp.construct("binarion-split", (), f5)
    r1 = census.jordan_census(A, mode="sampled", n_samples=2000, seed=7)
    r2 = census.jordan_census(A, mode="sampled", n_samples=2000, seed=7)
    assert r1.counts == r2.counts
    r3 = census.jordan_census(A, mode="sampled", n_samples=2000, seed=8)
    assert r1.counts != r3.counts or r1.seed != r3.seed


def test_freudenthal_census_overflow(f5):
    A = comp.construct("octonion-split", (), f5)
    with pytest.raises(OverflowSpaceError):
        census.freudenthal_census(A, mode="exhaustive")
    # dim W = 14 over the unarion tag: 5^14 also exceeds the limit
    U = comp.construct("unarion", (), f5)
    with pytest.raises(OverflowSpaceError):
        census.freudenthal_census(U, mode="exhaustive")


def test_freudenthal_census_sampled_strata(f5):
    """Sampled census: rank 4 dominates; all strata counts sum to n."""
    A = comp.construct("binarion-split", (), f5)
    rep = census.freudenthal_census(A, mode="sampled", n_samples=3000, seed=0)
    assert rep.total == 3000
    # the quartic hypersurface (rank <= 3) has density ~ 1/q = 20%
    assert rep.counts[4] > 2200
    assert rep.counts[3] > 300


def test_census_requires_finite_field():
    A = comp.construct("unarion", (), QQ)
    with pytest.raises(AlgebraError):
        census.jordan_census(A)


def test_report_serialization(f5):
    A = comp.construct("unarion", (), f5)
    rep = census.jordan_census(A)
    d = json.loads(rep.to_json())
    assert d["counts"]["3"] == 12400
    csv_text = rep.to_csv()
    assert "rank" in csv_text.splitlines()[0]
    assert len(csv_text.splitlines()) == 5


def test_so3_orders():
    for p, expect in ((5, 120), (7, 336)):
        F = PrimeField(p)
        form = TernaryForm.diag(F, 1, 1, 1)
        assert census.so3_order(form) == expect == p * (p * p - 1)


def test_so3_rejects_degenerate(f5):
    with pytest.raises(AlgebraError):
        census.so3_order(TernaryForm.diag(f5, 1, 1, 0))


def test_nilpotent_strips_count(f5):
    A = comp.construct("matrix2x2", (), f5)
    strips, idxs = census.nilpotent_strips(A)
    assert strips.shape[0] == 745
    assert len(idxs) == 745


def test_fiber_census_matches_so3(f5):
    A = comp.construct("quaternion", (1, 1), f5)
    i, j, k = A.trace0_basis()
    xi = fibers.FiberTarget(fibers.F_map(fibers.rank1_lift((i, j, k))))
    assert census.fiber_census(xi, A) == 120
