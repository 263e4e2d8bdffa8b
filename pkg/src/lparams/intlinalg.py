"""Exact linear algebra over Z and Q: matrices as tuples of row tuples.

Everything here is deterministic; Smith normal form is the workhorse for
lattice membership and torus congruences.
"""

from __future__ import annotations

from fractions import Fraction as Q
from math import gcd
from typing import Optional, Sequence, Tuple

IntMat = Tuple[Tuple[int, ...], ...]
Vec = Tuple[Q, ...]


def ident(n: int) -> IntMat:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_from_rows(rows) -> IntMat:
    return tuple(tuple(row) for row in rows)


def transpose(m):
    return tuple(zip(*m)) if m else ()


def mat_mul(a, b):
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def mat_neg(m):
    return tuple(tuple(-x for x in row) for row in m)


def mat_vec(m, v):
    """m (rows) applied to column vector v; entries may be Fraction or GaussQ."""
    zero = 0 * v[0] if v else 0
    out = []
    for row in m:
        acc = zero
        for c, x in zip(row, v):
            if c:
                acc = acc + c * x
        out.append(acc)
    return tuple(out)


def vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vneg(a):
    return tuple(-x for x in a)


def vscale(c, a):
    return tuple(c * x for x in a)


def vdot(a, b):
    return sum(x * y for x, y in zip(a, b))


def is_integral(v) -> bool:
    return all(Q(x).denominator == 1 for x in v)


def determinant(m) -> Q:
    """Exact determinant by fraction-free-ish Gaussian elimination."""
    n = len(m)
    a = [[Q(x) for x in row] for row in m]
    det = Q(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return Q(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, n):
            if a[r][col]:
                f = a[r][col] * inv
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return det


def solve_rational(m, b) -> Optional[Vec]:
    """One exact solution of m x = b over Q, or None if inconsistent.

    Free variables are set to zero, so the answer is deterministic.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    a = [[Q(x) for x in row] + [Q(v)] for row, v in zip(m, b)]
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    for i in range(r, rows):
        if a[i][cols] != 0:
            return None
    x = [Q(0)] * cols
    for i, c in enumerate(pivots):
        x[c] = a[i][cols]
    return tuple(x)


def nullspace(m) -> Tuple[Vec, ...]:
    """Basis of the rational kernel of m, one vector per free column."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    a = [[Q(x) for x in row] for row in m]
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    basis = []
    for c in range(cols):
        if c in pivots:
            continue
        v = [Q(0)] * cols
        v[c] = Q(1)
        for i, pc in enumerate(pivots):
            v[pc] = -a[i][c]
        basis.append(tuple(v))
    return tuple(basis)


def mat_inv_q(m) -> Tuple[Vec, ...]:
    """Exact inverse of a square matrix over Q."""
    n = len(m)
    a = [[Q(x) for x in row] + [Q(1) if i == j else Q(0) for j in range(n)]
         for i, row in enumerate(m)]
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        a[c], a[piv] = a[piv], a[c]
        inv = 1 / a[c][c]
        a[c] = [x * inv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c]:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return tuple(tuple(row[n:]) for row in a)


def mat_inv_z(m) -> IntMat:
    """Inverse of a GL(n, Z) matrix; raises if the inverse is not integral."""
    inv = mat_inv_q(m)
    if not all(x.denominator == 1 for row in inv for x in row):
        raise ValueError("matrix is not invertible over Z")
    return tuple(tuple(int(x) for x in row) for row in inv)


def smith(a) -> Tuple[IntMat, IntMat, IntMat]:
    """Smith normal form: returns (s, u, v) with u a v = s.

    u, v are unimodular; s is diagonal with nonnegative entries and
    d_i | d_{i+1}.
    """
    rows = len(a)
    cols = len(a[0]) if rows else 0
    for row in a:
        for x in row:
            if Q(x).denominator != 1:
                raise ValueError("smith form needs an integer matrix")
    s = [[int(x) for x in row] for row in a]
    u = [list(row) for row in ident(rows)]
    v = [list(row) for row in ident(cols)]

    def row_add(i, j, k):
        s[i] = [x + k * y for x, y in zip(s[i], s[j])]
        u[i] = [x + k * y for x, y in zip(u[i], u[j])]

    def col_add(i, j, k):
        for r in range(rows):
            s[r][i] += k * s[r][j]
        for r in range(cols):
            v[r][i] += k * v[r][j]

    def row_swap(i, j):
        s[i], s[j] = s[j], s[i]
        u[i], u[j] = u[j], u[i]

    def col_swap(i, j):
        for r in range(rows):
            s[r][i], s[r][j] = s[r][j], s[r][i]
        for r in range(cols):
            v[r][i], v[r][j] = v[r][j], v[r][i]

    def row_neg(i):
        s[i] = [-x for x in s[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    while t < min(rows, cols):
        # pick the nonzero entry of smallest magnitude as pivot
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if s[i][j] and (best is None or abs(s[i][j]) < abs(s[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        row_swap(t, best[0])
        col_swap(t, best[1])
        dirty = True
        while dirty:
            dirty = False
            for i in range(rows):
                if i != t and s[i][t]:
                    q = s[i][t] // s[t][t]
                    row_add(i, t, -q)
                    if s[i][t]:
                        row_swap(t, i)
                        dirty = True
            for j in range(cols):
                if j != t and s[t][j]:
                    q = s[t][j] // s[t][t]
                    col_add(j, t, -q)
                    if s[t][j]:
                        col_swap(t, j)
                        dirty = True
            if not dirty:
                # force divisibility d_t | everything below
                for i in range(t + 1, rows):
                    bad = next((j for j in range(t + 1, cols) if s[i][j] % s[t][t]), None)
                    if bad is not None:
                        row_add(t, i, 1)
                        dirty = True
                        break
        if s[t][t] < 0:
            row_neg(t)
        t += 1
    return mat_from_rows(s), mat_from_rows(u), mat_from_rows(v)


def solve_congruence(a, d) -> Optional[Vec]:
    """One rational x with a x = d (mod Z^rows), or None.

    a and d may be rational; x ranges over all of Q^cols, so scaling a by the
    lcm of its denominators (and the solution back down) changes nothing and
    lets the Smith form run over Z. Solvable iff the rows killed by a have
    integral right-hand side after the Smith change of basis.
    """
    rows = len(a)
    cols = len(a[0]) if rows else 0
    den = 1
    for row in a:
        for x in row:
            q = Q(x)
            den = den * q.denominator // gcd(den, q.denominator)
    if den != 1:
        scaled = tuple(tuple(Q(x) * den for x in row) for row in a)
        sol = solve_congruence(scaled, d)
        return None if sol is None else vscale(Q(den), sol)
    s, u, v = smith(a)
    ud = mat_vec(u, tuple(Q(x) for x in d))
    eta = [Q(0)] * cols
    for i in range(rows):
        si = s[i][i] if i < cols else 0
        if si:
            eta[i] = Q(ud[i], si)
        elif Q(ud[i]).denominator != 1:
            return None
    return mat_vec(v, tuple(eta))


def in_span_z(x, gens: Sequence[Sequence[int]]) -> bool:
    """Is the rational vector x in the Z-span of the generator vectors?"""
    if not gens:
        return all(Q(c) == 0 for c in x)
    n = len(x)
    a = tuple(tuple(int(g[i]) for g in gens) for i in range(n))  # columns = gens
    s, u, _ = smith(a)
    z = mat_vec(u, tuple(Q(c) for c in x))
    m = len(gens)
    for i in range(n):
        si = s[i][i] if i < min(n, m) else 0
        if si:
            if Q(z[i], si).denominator != 1:
                return False
        elif z[i] != 0:
            return False
    return True


def saturation_projection(gens: Sequence[Sequence[int]], n: int):
    """Projection Z^n -> Z^n/sat(span gens), plus data to descend maps.

    Returns (proj, uinv, rank): proj is the (n-rank) x n projection matrix,
    uinv's columns are a Z-basis of Z^n whose first `rank` members span the
    saturation.
    """
    if not gens:
        return ident(n), ident(n), 0
    a = tuple(tuple(int(g[i]) for g in gens) for i in range(n))
    s, u, _ = smith(a)
    rank = sum(1 for i in range(min(n, len(gens))) if s[i][i])
    proj = u[rank:]
    uinv = mat_inv_z(u)
    return proj, uinv, rank


def descend_map(proj, uinv, rank: int, t):
    """Matrix of t on Z^n/sat given that t preserves the saturation."""
    n = len(uinv)
    u = mat_inv_z(uinv)
    conj = mat_mul(mat_mul(u, t), uinv)
    for i in range(rank, n):
        for j in range(rank):
            if conj[i][j] != 0:
                raise ValueError("map does not preserve the saturation")
    return tuple(tuple(conj[i][j] for j in range(rank, n)) for i in range(rank, n))
