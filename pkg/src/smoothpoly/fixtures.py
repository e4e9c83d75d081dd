"""Named example families: Reeve and Bruns polytopes, Fibonacci polygons, Hirzebruch trapezoids."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .lattice import det
from .polytope import LatticePolytope


def reeve_simplex(k: int) -> LatticePolytope:
    """conv(0, e1, e2, (1, 1, k)): four lattice points, normalized volume k."""
    if k < 1:
        raise ValueError("k must be positive")
    return LatticePolytope([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, k)])


def bruns_polytope(k: int) -> LatticePolytope:
    """Very ample, not smooth, eight lattice points, normal-cone multiplicity k + 1."""
    if k < 1:
        raise ValueError("k must be positive")
    return LatticePolytope(
        [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, k), (1, 1, k + 1)]
    )


@lru_cache(maxsize=None)
def fibonacci(n: int) -> int:
    """F_n with F_0 = 0, F_1 = 1, extended to negative n by F_{-n} = (-1)^(n+1) F_n."""
    if n < 0:
        return (-1) ** (-n + 1) * fibonacci(-n)
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def fibonacci_identities(k: int) -> tuple[int, int, int, int]:
    """The four determinant identities; their values should be -1, +1, -1, +1."""
    f = fibonacci
    return (
        f(2 * k + 3) * f(2 * k) - f(2 * k + 2) * f(2 * k + 1),
        f(2 * k + 2) * f(2 * k - 1) - f(2 * k + 1) * f(2 * k),
        f(2 * k + 4) * f(2 * k) - f(2 * k + 2) ** 2,
        f(2 * k + 3) * f(2 * k - 1) - f(2 * k + 1) ** 2,
    )


@dataclass(frozen=True)
class FibonacciChain:
    k: int
    edge_vectors: tuple[tuple[int, int], ...]

    def turns(self) -> list[int]:
        """Determinants of consecutive edge vectors."""
        e = self.edge_vectors
        return [det((a, b)) for a, b in zip(e, e[1:])]

    def path(self) -> list[tuple[int, int]]:
        pts = [(0, 0)]
        for dx, dy in self.edge_vectors:
            x, y = pts[-1]
            pts.append((x + dx, y + dy))
        return pts


def fibonacci_chain(k: int) -> FibonacciChain:
    """Edges (F_2j, F_2j-2) for j = 1..k, then (F_2j-1, F_2j-3) for j = k..2, then (1, 1), (0, 1)."""
    if k < 1:
        raise ValueError("k must be positive")
    f = fibonacci
    up = [(f(2 * j), f(2 * j - 2)) for j in range(1, k + 1)]
    down = [(f(2 * j - 1), f(2 * j - 3)) for j in range(k, 1, -1)]
    return FibonacciChain(k, tuple(up + down + [(1, 1), (0, 1)]))


def fibonacci_polygon(k: int) -> LatticePolytope:
    """The chain and its mirror images in the vertical line through its start and the
    horizontal line through its end, translated into the nonnegative quadrant.

    The mirrored copies meet the original in straight angles at the four extreme
    points, so the polygon has 8k vertices and four edges of length 2.
    """
    path = fibonacci_chain(k).path()
    top = path[-1][1]
    pts = set()
    for x, y in path:
        pts.update({(x, y), (-x, y), (x, 2 * top - y), (-x, 2 * top - y)})
    shift = min(x for x, _ in pts)
    return LatticePolytope([(x - shift, y) for x, y in pts])


def hirzebruch_trapezoid(a: int):
    """conv((0,0), (a+1,0), (0,1), (1,1)) with the marked points (0,0), (1,0), (a,0), (a+1,0), (0,1), (1,1).

    Repeated marked points (a <= 1) are listed once, so fewer than six
    points signal the degenerate marking.
    """
    if a < 0:
        raise ValueError("a must be nonnegative")
    p = LatticePolytope([(0, 0), (a + 1, 0), (0, 1), (1, 1)])
    marked = tuple(dict.fromkeys([(0, 0), (1, 0), (a, 0), (a + 1, 0), (0, 1), (1, 1)]))
    return p, marked
