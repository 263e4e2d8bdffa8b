"""Exact integer/rational linear algebra: Smith form, congruences, lattices."""

from fractions import Fraction as Q
from random import Random

import pytest

from lparams.intlinalg import (
    descend_map,
    determinant,
    ident,
    in_span_z,
    mat_inv_q,
    mat_inv_z,
    mat_mul,
    mat_vec,
    nullspace,
    saturation_projection,
    smith,
    solve_congruence,
    solve_rational,
    transpose,
    vdot,
    vsub,
)


def _rand_mat(rng, n, lo=-5, hi=6):
    return tuple(tuple(rng.randrange(lo, hi) for _ in range(n)) for _ in range(n))


def test_determinant_and_inverse_seeded():
    rng = Random(31)
    for _ in range(60):
        n = rng.randrange(1, 5)
        m = _rand_mat(rng, n)
        d = determinant(m)
        if d == 0:
            continue
        inv = mat_inv_q(m)
        assert mat_mul(m, inv) == tuple(tuple(Q(x) for x in row) for row in ident(n))


def test_mat_inv_z_unimodular_only():
    assert mat_inv_z(((1, 1), (0, 1))) == ((1, -1), (0, 1))
    with pytest.raises(ValueError):
        mat_inv_z(((2, 0), (0, 1)))


def test_smith_invariants_seeded():
    rng = Random(7)
    for _ in range(80):
        rows = rng.randrange(1, 5)
        cols = rng.randrange(1, 5)
        a = tuple(tuple(rng.randrange(-6, 7) for _ in range(cols)) for _ in range(rows))
        s, u, v = smith(a)
        assert mat_mul(mat_mul(u, a), v) == s
        assert abs(determinant(u)) == 1 and abs(determinant(v)) == 1
        diag = [s[i][i] for i in range(min(rows, cols))]
        assert all(d >= 0 for d in diag)
        for x, y in zip(diag, diag[1:]):
            assert y == 0 or (x != 0 and y % x == 0) or (x == 0 and y == 0)


def test_smith_rejects_nonintegral():
    with pytest.raises(ValueError):
        smith(((Q(1, 2),),))


def test_solve_rational_and_nullspace():
    rng = Random(13)
    for _ in range(60):
        n = rng.randrange(1, 5)
        m = _rand_mat(rng, n, -4, 5)
        basis = nullspace(m)
        for v in basis:
            assert all(x == 0 for x in mat_vec(m, v))
        # rank-nullity against the rational solver's pivot count
        rank = n - len(basis)
        assert 0 <= rank <= n
        if determinant(m) != 0:
            assert basis == ()
            b = tuple(rng.randrange(-5, 6) for _ in range(n))
            x = solve_rational(m, b)
            assert tuple(mat_vec(m, x)) == tuple(Q(c) for c in b)


def test_solve_congruence_integer_matrix():
    # (1-theta) for theta = -1 on Z: solve 2x = 1 mod Z
    x = solve_congruence(((2,),), (Q(1),))
    assert x is not None and (2 * x[0] - 1).denominator == 1
    # no solution: 0*x = 1/2 mod Z
    assert solve_congruence(((0,),), (Q(1, 2),)) is None


def test_solve_congruence_rational_matrix():
    # a row pattern that truncation used to mangle: x1 = 1/2 mod Z forces
    # x1 odd over 2, while -x1/2 = 0 mod Z forces x1 in 2Z; no solution
    a = ((Q(1), Q(0)), (Q(-1, 2), Q(0)))
    assert solve_congruence(a, (Q(1, 2), Q(0))) is None
    # solvable rational system, verified by residual
    a2 = ((Q(1, 2), Q(0)), (Q(0), Q(1, 3)))
    d = (Q(1, 4), Q(1, 6))
    x = solve_congruence(a2, d)
    assert x is not None
    res = vsub(mat_vec(a2, x), d)
    assert all(r.denominator == 1 for r in res)


def test_solve_congruence_seeded_rational():
    rng = Random(97)
    hits = 0
    for _ in range(300):
        n = rng.randrange(1, 4)
        a = tuple(tuple(Q(rng.randrange(-4, 5), rng.choice([1, 2, 2, 3])) for _ in range(n))
                  for _ in range(n))
        d = tuple(Q(rng.randrange(-6, 7), rng.choice([1, 2, 4])) for _ in range(n))
        x = solve_congruence(a, d)
        if x is None:
            continue
        hits += 1
        res = vsub(mat_vec(a, x), d)
        assert all(r.denominator == 1 for r in res)
    assert hits > 100


def test_in_span_z():
    gens = [(2, 0), (0, 3)]
    assert in_span_z((4, -3), gens)
    assert not in_span_z((1, 0), gens)
    assert not in_span_z((Q(1, 2), 0), gens)
    assert in_span_z((0, 0), [])
    assert not in_span_z((1,), [])


def test_saturation_projection_and_descend():
    # span of (2,0) saturates to Z x 0; quotient is the second coordinate
    proj, uinv, rank = saturation_projection([(2, 0)], 2)
    assert rank == 1 and len(proj) == 1
    # a map preserving the span descends; proj o t = t_bar o proj
    t = ((1, 3), (0, -1))
    tbar = descend_map(proj, uinv, rank, t)
    lhs = mat_mul(proj, t)
    rhs = mat_mul(tbar, proj)
    assert lhs == rhs
    with pytest.raises(ValueError):
        descend_map(proj, uinv, rank, ((0, 1), (1, 0)))


def test_saturation_projection_full_rank_gives_empty_quotient():
    proj, _, rank = saturation_projection([(1, 0), (0, 1)], 2)
    assert rank == 2 and proj == ()


def test_transpose_and_dot():
    assert transpose(((1, 2), (3, 4))) == ((1, 3), (2, 4))
    assert vdot((1, 2, 3), (4, 5, 6)) == 32
