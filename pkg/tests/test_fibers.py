import random

import pytest

from fkit import census, composition as comp, fibers, freudenthal as fr, jordan as jmod
from fkit.fields import QQ, PrimeField
from fkit.jordan import JordanElem


def _quat(field):
    return comp.construct("quaternion", (1, 1), field)


def test_projection_of_basis_lift():
    """The projection of (1, J(i,j,k), ..., ...) lands on (1, 0, diag(1,1,-1), -2)."""
    A = _quat(QQ)
    i, j, k = A.trace0_basis()
    v = fibers.rank1_lift((i, j, k))
    xi = fibers.F_map(v)
    assert xi.a == QQ.one
    assert xi.b.is_zero()
    assert xi.c == JordanElem.diag(xi.c.algebra, 1, 1, -1)
    assert xi.d == QQ.scalar(-2)
    # the lift really is in the fiber
    assert fibers.fiber_membership(fibers.FiberTarget(xi), (i, j, k))


def test_projection_intertwines(rng):
    """F respects the component projection: F of a lift only depends on the
    unarion shadow, and both sides of the sextic identity agree."""
    A = _quat(QQ)
    basis = A.trace0_basis()
    for _ in range(20):
        x = tuple(
            sum((QQ.scalar(rng.randint(-3, 3)) * e for e in basis), A.zero)
            for _ in range(3)
        )
        lhs, rhs, ok = fibers.sextic_check(x)
        assert ok, (lhs, rhs)


def test_sextic_finite(f5, rng):
    A = _quat(f5)
    basis = A.trace0_basis()
    for _ in range(50):
        x = tuple(
            sum((f5.random(rng) * e for e in basis), A.zero) for _ in range(3)
        )
        _, _, ok = fibers.sextic_check(x)
        assert ok


def test_check_triple_rejects_nonzero_trace(f5):
    A = _quat(f5)
    with pytest.raises(Exception):
        fibers.check_triple((A.unit, A.unit, A.unit))


def test_symmetric_roundtrip(rng):
    una = fibers.unarion_of(QQ)
    X = JordanElem.random(una, rng)
    S = fibers.jordan_to_symmetric(X)
    assert fibers.symmetric_to_jordan(una, [list(r) for r in S]) == X


def test_rank3_fiber_determinant_condition(f5):
    A = _quat(f5)
    # d^2 != -4 det(c): here -4 det(c) = 1 mod 5 but d^2 = 4 — empty
    xi = fibers.FiberTarget.from_symmetric(
        f5, ((1, 0, 0), (0, 1, 0), (0, 0, 1)), f5.scalar(2)
    )
    res = fibers.rank3_fiber_test(xi, A)
    assert res["status"] == "empty"


def test_rank3_fiber_nonempty_counts():
    for p, expect in ((5, 120), (7, 336)):
        field = PrimeField(p)
        A = _quat(field)
        i, j, k = A.trace0_basis()
        xi = fibers.FiberTarget(fibers.F_map(fibers.rank1_lift((i, j, k))))
        res = fibers.rank3_fiber_test(xi, A)
        assert res["status"] == "nonempty"
        assert res["cardinality"] == expect
        # the witness is a genuine fiber point
        w = res["witness"]
        assert fibers.fiber_membership(xi, w)


def test_fiber_census_equals_so3_order(f5):
    from fkit import quadform

    A = _quat(f5)
    i, j, k = A.trace0_basis()
    xi = fibers.FiberTarget(fibers.F_map(fibers.rank1_lift((i, j, k))))
    count = census.fiber_census(xi, A)
    form = quadform.TernaryForm(f5, xi.c_matrix)
    assert count == census.so3_order(form) == 120


def test_rank0_fiber_predicate(f5):
    M = comp.construct("matrix2x2", (), f5)
    # pure tensor with nilpotent x = E12: strip (t1 x, t2 x, t3 x)
    E12 = M.element([f5.scalar(v) for v in (0, 1, 0, 0)])
    assert (E12 * E12).is_zero()
    b = JordanElem.strip(M, f5.scalar(2) * E12, E12, f5.scalar(3) * E12)
    c = JordanElem.strip(M, E12, f5.scalar(4) * E12, M.zero)
    v = fr.FreudenthalElem(f5.zero, b, c, f5.zero)
    status = fibers.rank0_fiber_predicate(v)
    assert status[0] == "pure-tensor"
    assert M.norm(status[1]).is_zero()
    # a rank-1 lift with a = 1 never sits in the fiber over 0
    i, j, k = M.trace0_basis()
    w = fibers.rank1_lift((i, j, k))
    assert fibers.rank0_fiber_predicate(w)[0] == "not-in-fiber"


def test_nilpotent_pair_oracle(f5):
    rep = fibers.nilpotent_pair_oracle(f5)
    assert rep["nilpotents"] == 25
    assert rep["anticommuting_pairs"] == 145
    assert rep["counterexamples"] == []


def test_quadratic_fiber_counts(f5):
    B = comp.construct("binarion-split", (), f5)
    # d != 0: empty
    xi_bad = fibers.FiberTarget.from_symmetric(
        f5, ((0, 0, 0), (0, 0, 0), (0, 0, 0)), f5.one
    )
    assert fibers.quadratic_fiber_test(xi_bad, B)["status"] == "empty"


def test_quadratic_fiber_witnesses_q():
    B = comp.construct("binarion-quadratic", (2,), QQ)
    u = B.trace0_basis()[0]
    nu = B.norm(u)
    t = (QQ.scalar(1), QQ.scalar(2), QQ.scalar(-1))
    S = [[(-(nu) * t[i] * t[j]) for i in range(3)] for j in range(3)]
    xi = fibers.FiberTarget.from_symmetric(
        QQ, [[str(x) for x in row] for row in S], QQ.zero
    )
    res = fibers.quadratic_fiber_test(xi, B)
    assert res["status"] == "nonempty"
    for wit in res["witnesses"][:2]:
        assert fibers.fiber_membership(xi, wit)


def test_unarion_shadow(rng):
    A = _quat(QQ)
    for _ in range(5):
        x = fibers.unarion_of(QQ)
        v = fr.FreudenthalElem.random(A, rng)
        xi = fibers.F_map(v)
        assert xi.algebra.dim == 1
        assert xi.a == v.a and xi.d == v.d
