"""Independent brute-force oracles used to cross-check the library.

Nothing here imports the library's linear algebra: determinants are computed
by the Leibniz formula and cone membership by Cramer's rule.
"""

from fractions import Fraction
from math import gcd
from itertools import permutations, product


def leibniz_det(m):
    n = len(m)
    total = 0
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = 1
        for i, j in enumerate(perm):
            term *= m[i][j]
        total += -term if inversions % 2 else term
    return total


def coefficients(x, gens):
    """Coordinates of x in the basis ``gens`` (full rank), by Cramer's rule."""
    cols = list(zip(*gens))
    d = leibniz_det(cols)
    out = []
    for j in range(len(gens)):
        m = [list(r) for r in cols]
        for i in range(len(x)):
            m[i][j] = x[i]
        out.append(Fraction(leibniz_det(m), d))
    return out


def brute_lattice_points(vertices, inequalities):
    """Integer points of the bounding box satisfying every ``<n, x> <= c``."""
    d = len(vertices[0])
    lo = [min(v[i] for v in vertices) for i in range(d)]
    hi = [max(v[i] for v in vertices) for i in range(d)]
    return sorted(
        x for x in product(*(range(a, b + 1) for a, b in zip(lo, hi)))
        if all(sum(n_i * x_i for n_i, x_i in zip(n, x)) <= c for n, c in inequalities)
    )


def brute_hilbert_basis_simplicial(gens):
    """Hilbert basis of a full-dimensional simplicial cone.

    Every irreducible element, and every summand of an element of the closed
    fundamental parallelepiped, lies in that parallelepiped, so reducibility
    can be decided inside it.
    """
    d = len(gens)
    corners = [tuple(sum(c * g[i] for c, g in zip(sel, gens)) for i in range(d)) for sel in product((0, 1), repeat=d)]
    lo = [min(c[i] for c in corners) for i in range(d)]
    hi = [max(c[i] for c in corners) for i in range(d)]
    par = {}
    for x in product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        if not any(x):
            continue
        lam = coefficients(x, gens)
        if all(0 <= t <= 1 for t in lam):
            par[x] = lam
    basis = []
    for x, lam in par.items():
        reducible = any(
            y != x and all(a - b >= 0 for a, b in zip(lam, mu))
            for y, mu in par.items()
        )
        if not reducible:
            basis.append(x)
    return sorted(basis)


def cube(d=3):
    return list(product((0, 1), repeat=d))


def two_dim_cones(max_mult):
    """One representative cone((1,0),(a,m)) per lattice-equivalence class, 0 <= a < m, gcd(a, m) = 1."""
    return [((1, 0), (a, m)) for m in range(1, max_mult + 1) for a in range(m) if gcd(a, m) == 1]
