import random

import pytest

from fkit import composition as comp, jordan as jmod, linalg
from fkit.fields import QQ, PrimeField
from fkit.fibers import jordan_to_symmetric
from fkit.jordan import JordanElem

from conftest import algebras


def test_dim(algebra_q):
    assert jmod.dim_jordan(algebra_q) == 3 + 3 * algebra_q.dim


def test_adjoint_identity(algebra_q, rng):
    for _ in range(15):
        X = JordanElem.random(algebra_q, rng)
        assert jmod.sharp(jmod.sharp(X)) == jmod.norm_N(X) * X


def test_norm_of_diag(algebra_q):
    X = JordanElem.diag(algebra_q, 2, 3, 5)
    assert jmod.norm_N(X) == algebra_q.field.scalar(30)
    assert jmod.trace(X) == algebra_q.field.scalar(10)


def test_identity_element(algebra_q):
    I = JordanElem.identity(algebra_q)
    assert jmod.norm_N(I) == algebra_q.field.one
    assert jmod.sharp(I) == I
    X = JordanElem.random(algebra_q, random.Random(3))
    assert jmod.jordan_mul(I, X) == X


def test_unarion_matrix_oracle(rng):
    """Over the unarion algebra, N = det and sharp = adjugate of the
    symmetric 3x3 matrix model."""
    A = comp.construct("unarion", (), QQ)
    for _ in range(30):
        X = JordanElem.random(A, rng)
        S = jordan_to_symmetric(X)
        assert jmod.norm_N(X) == linalg.det(QQ, [list(r) for r in S])
        adj = jordan_to_symmetric(jmod.sharp(X))
        # adjugate: S * adj(S) = det(S) I
        prod = linalg.matmul([list(r) for r in S], [list(r) for r in adj])
        d = jmod.norm_N(X)
        for i in range(3):
            for j in range(3):
                assert prod[i][j] == (d if i == j else QQ.zero)


def test_cross_duality(algebra_q, rng):
    for _ in range(8):
        X, Y, Z = (JordanElem.random(algebra_q, rng) for _ in range(3))
        assert jmod.trace_pairing(jmod.cross(X, Y), Z) == jmod.trilinear(X, Y, Z)
        assert jmod.trilinear(X, X, X) == 6 * jmod.norm_N(X)


def test_jordan_mul_commutative(algebra_q, rng):
    for _ in range(8):
        X, Y = JordanElem.random(algebra_q, rng), JordanElem.random(algebra_q, rng)
        assert jmod.jordan_mul(X, Y) == jmod.jordan_mul(Y, X)


def test_rank_strata(algebra_q):
    A = algebra_q
    assert jmod.rank_jordan(JordanElem.zero_elem(A)) == 0
    assert jmod.rank_jordan(JordanElem.diag(A, 1, 0, 0)) == 1
    assert jmod.rank_jordan(JordanElem.diag(A, 1, 1, 0)) == 2
    assert jmod.rank_jordan(JordanElem.diag(A, 1, 1, 1)) == 3


def test_rank_vs_matrix_rank_unarion(f5, rng):
    A = comp.construct("unarion", (), f5)
    for _ in range(100):
        X = JordanElem.random(A, rng)
        S = [list(r) for r in jordan_to_symmetric(X)]
        assert jmod.rank_jordan(X) == linalg.rank(S)


def test_f_map_splits_embedding(algebra_q, rng):
    una = comp.construct("unarion", (), algebra_q.field)
    for _ in range(5):
        Xu = JordanElem.random(una, rng)
        X = jmod.embed_unarion(Xu, algebra_q)
        assert jmod.f_map(X) == Xu
        # X decomposes as embed(f(X)) + strip_part(X)
        Y = JordanElem.random(algebra_q, rng)
        back = jmod.embed_unarion(jmod.f_map(Y), algebra_q) + jmod.strip_part(Y)
        assert back == Y


def test_act_scales_norm_by_det(f5, rng):
    """N(act(g,h,X)) = det(h) N(X): the congruence contributes det(h)^-2
    and the det(h) twist contributes det(h)^3."""
    for A in algebras(f5, dims={2, 4}):
        g = A.matrix_of(lambda x: x)  # identity automorphism
        h = [[f5.scalar(v) for v in row] for row in ((1, 2, 0), (0, 1, 3), (1, 0, 1))]
        dh = linalg.det(f5, h)
        assert not dh.is_zero()
        for _ in range(5):
            X = JordanElem.random(A, rng)
            Y = jmod.act(g, h, X)
            assert jmod.norm_N(Y) == dh * jmod.norm_N(X)
            assert jmod.rank_jordan(Y) == jmod.rank_jordan(X)


def test_coords_roundtrip(algebra_q, rng):
    X = JordanElem.random(algebra_q, rng)
    assert jmod.from_coords(algebra_q, jmod.coords_of(X)) == X
    basis = jmod.jordan_basis(algebra_q)
    assert len(basis) == jmod.dim_jordan(algebra_q)


def test_trace_form_gram_symmetric(algebra_q):
    G = jmod.trace_form_gram(algebra_q)
    L = len(G)
    for i in range(L):
        for j in range(L):
            assert G[i][j] == G[j][i]
