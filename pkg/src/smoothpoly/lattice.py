"""Exact integer and rational linear algebra on small lattices.

Vectors are tuples of Python ints, matrices are tuples of row tuples. Every
function here is pure and never touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Sequence

Vector = tuple[int, ...]
Matrix = tuple[Vector, ...]


def as_vector(v: Sequence[int]) -> Vector:
    return tuple(int(x) for x in v)


def as_matrix(m: Sequence[Sequence[int]]) -> Matrix:
    return tuple(as_vector(r) for r in m)


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def scale(k, a):
    return tuple(k * x for x in a)


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def cross(a, b):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def transpose(m):
    return tuple(zip(*m)) if m else ()


def matmul(a, b):
    bt = transpose(b)
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def vecmat(v, m):
    """Row vector times matrix."""
    return tuple(dot(v, col) for col in transpose(m))


def content(v: Sequence[int]) -> int:
    return reduce(gcd, (abs(x) for x in v), 0)


def primitive_vector(v: Sequence[int]) -> Vector:
    """Divide ``v`` by the gcd of its entries, keeping its direction."""
    g = content(v)
    if g == 0:
        raise ValueError("zero has no direction")
    return tuple(x // g for x in v)


def segment_lattice_length(a: Sequence[int], b: Sequence[int]) -> int:
    """Lattice length of the segment [a, b], i.e. its lattice points minus one."""
    if len(a) != len(b):
        raise ValueError("endpoints live in different dimensions")
    return content(sub(b, a))


def det(m: Sequence[Sequence[int]]) -> int:
    """Exact determinant by cofactor expansion (square matrices up to 4x4)."""
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("determinant of a non-square matrix")
    if n > 4:
        raise ValueError("determinant only supported up to dimension 4")
    return _det(tuple(tuple(r) for r in m))


def _det(m):
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = 0
    for j, x in enumerate(m[0]):
        if x:
            minor = tuple(r[:j] + r[j + 1:] for r in m[1:])
            total += (-1) ** j * x * _det(minor)
    return total


def adjugate(m: Sequence[Sequence[int]]) -> Matrix:
    """Classical adjoint, so that ``m @ adjugate(m) == det(m) * I``."""
    n = len(m)
    if n == 1:
        return ((1,),)
    cof = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = tuple(
                tuple(m[r][c] for c in range(n) if c != j) for r in range(n) if r != i
            )
            cof[i][j] = (-1) ** (i + j) * _det(minor)
    return transpose(cof)


def unimodular_inverse(m: Sequence[Sequence[int]]) -> Matrix:
    d = det(m)
    if abs(d) != 1:
        raise ValueError(f"not unimodular (det = {d})")
    return tuple(tuple(d * x for x in row) for row in adjugate(m))


def rational_inverse(m: Sequence[Sequence[int]]) -> tuple[tuple[Fraction, ...], ...]:
    """Exact inverse over the rationals by Gauss-Jordan elimination."""
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("inverse of a non-square matrix")
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        piv = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        aug[c], aug[piv] = aug[piv], aug[c]
        p = aug[c][c]
        aug[c] = [x / p for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return tuple(tuple(row[n:]) for row in aug)


def rank(rows: Sequence[Sequence]) -> int:
    """Rank over the rationals."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return 0
    rk = 0
    ncols = len(m[0])
    for c in range(ncols):
        piv = next((i for i in range(rk, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        for i in range(len(m)):
            if i != rk and m[i][c] != 0:
                f = m[i][c] / m[rk][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[rk])]
        rk += 1
        if rk == len(m):
            break
    return rk


def solve_rational(rows: Sequence[Sequence], rhs: Sequence) -> tuple[Fraction, ...] | None:
    """One solution of ``rows @ x == rhs`` (free variables set to zero), or None."""
    n = len(rows[0]) if rows else 0
    aug = [[Fraction(x) for x in r] + [Fraction(c)] for r, c in zip(rows, rhs)]
    pivots = []
    rk = 0
    for c in range(n):
        piv = next((i for i in range(rk, len(aug)) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[rk], aug[piv] = aug[piv], aug[rk]
        p = aug[rk][c]
        aug[rk] = [x / p for x in aug[rk]]
        for i in range(len(aug)):
            if i != rk and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[rk])]
        pivots.append(c)
        rk += 1
    if any(all(x == 0 for x in r[:n]) and r[n] != 0 for r in aug):
        return None
    x = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x[c] = aug[i][n]
    return tuple(x)


def hermite_normal_form(m: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix]:
    """Row-style Hermite normal form.

    Returns ``(H, U)`` with ``U`` unimodular and ``U @ m == H``. ``H`` is in row
    echelon form with positive pivots, entries above each pivot reduced into
    ``[0, pivot)``, and zero rows at the bottom. Pivots are chosen by minimal
    absolute value, ties broken by row index, so the output is deterministic.
    """
    rows = [list(r) for r in m]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    u = [list(r) for r in identity(nrows)]
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        while True:
            nz = [i for i in range(r, nrows) if rows[i][c] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: (abs(rows[i][c]), i))
            rows[r], rows[p] = rows[p], rows[r]
            u[r], u[p] = u[p], u[r]
            done = True
            for i in range(r + 1, nrows):
                if rows[i][c]:
                    q = rows[i][c] // rows[r][c]
                    rows[i] = [x - q * y for x, y in zip(rows[i], rows[r])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[r])]
                    if rows[i][c]:
                        done = False
            if done:
                break
        if rows[r][c] == 0:
            continue
        if rows[r][c] < 0:
            rows[r] = [-x for x in rows[r]]
            u[r] = [-x for x in u[r]]
        piv = rows[r][c]
        for i in range(r):
            q = rows[i][c] // piv
            if q:
                rows[i] = [x - q * y for x, y in zip(rows[i], rows[r])]
                u[i] = [x - q * y for x, y in zip(u[i], u[r])]
        r += 1
    return as_matrix(rows), as_matrix(u)


def is_hermite_normal_form(h: Sequence[Sequence[int]]) -> bool:
    last = -1
    seen_zero = False
    for i, row in enumerate(h):
        nz = [j for j, x in enumerate(row) if x]
        if not nz:
            seen_zero = True
            continue
        if seen_zero:
            return False
        c = nz[0]
        if c <= last or row[c] <= 0:
            return False
        if any(not 0 <= h[k][c] < row[c] for k in range(i)):
            return False
        last = c
    return True


def integer_kernel(rows: Sequence[Sequence[int]], n: int) -> Matrix:
    """Saturated basis of ``{x in Z^n : r . x = 0 for every r in rows}``."""
    if not rows:
        return identity(n)
    h, u = hermite_normal_form(transpose(rows))
    return tuple(u[i] for i in range(n) if not any(h[i]))


class Chart:
    """Lattice coordinates on the affine span of a point set.

    ``to_local`` is a lattice isomorphism from ``aff(points) & Z^n`` onto
    ``Z^k``, so lattice lengths, normalized volumes and unimodularity are the
    same measured on either side.
    """

    def __init__(self, points: Sequence[Sequence[int]], origin: Sequence[int] | None = None):
        pts = [as_vector(p) for p in points]
        self.ambient_dim = len(pts[0]) if pts else len(origin)
        self.origin = as_vector(origin) if origin is not None else pts[0]
        diffs = [sub(p, self.origin) for p in pts if p != self.origin]
        normals = integer_kernel(diffs, self.ambient_dim) if diffs else identity(self.ambient_dim)
        self.codim = len(normals)
        self.dim = self.ambient_dim - self.codim
        self.equations = tuple((nv, dot(nv, self.origin)) for nv in normals)
        if self.codim == 0:
            self._u = identity(self.ambient_dim)
            self._uinv = self._u
        else:
            h, u = hermite_normal_form(transpose(normals))
            self._u = u
            self._uinv = unimodular_inverse(u)
        self.basis = self._u[self.codim:]

    def to_local(self, x: Sequence[int]) -> Vector:
        z = vecmat(sub(x, self.origin), self._uinv)
        if any(z[: self.codim]):
            raise ValueError(f"{tuple(x)} is not in the affine span")
        return z[self.codim:]

    def to_ambient(self, y: Sequence[int]) -> Vector:
        x = self.origin
        for c, b in zip(y, self.basis):
            x = add(x, scale(c, b))
        return x

    def lift_functional(self, normal: Sequence, offset=0):
        """Ambient form of the local inequality/equation ``<normal, y> ? offset``."""
        full = (0,) * self.codim + tuple(normal)
        m = tuple(dot(row, full) for row in self._uinv)
        return m, offset + dot(m, self.origin)

    def contains(self, x: Sequence[int]) -> bool:
        return all(dot(nv, x) == c for nv, c in self.equations)
