"""Exact convex hulls of integer point sets in dimension at most three.

Everything works on local lattice coordinates of the affine span (see
``lattice.Chart``), so the routines only ever see full-dimensional inputs.
"""

from __future__ import annotations

from functools import cmp_to_key
from itertools import combinations

from .lattice import Chart, as_vector, cross, dot, primitive_vector, rank, sub


def _turn(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_polygon(points):
    """Counter-clockwise hull vertices (Andrew's monotone chain), collinear points dropped."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and _turn(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and _turn(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def full_dim_facets(points, k):
    """Facets ``(outward primitive normal, offset)`` of a full-dimensional point set in Z^k."""
    if k == 1:
        xs = [p[0] for p in points]
        return [((-1,), -min(xs)), ((1,), max(xs))]
    if k == 2:
        ring = convex_polygon(points)
        out = []
        for a, b in zip(ring, ring[1:] + ring[:1]):
            n = primitive_vector((b[1] - a[1], a[0] - b[0]))
            out.append((n, dot(n, a)))
        return out
    if k == 3:
        return _facets3(points)
    raise ValueError(f"hulls are only implemented up to dimension 3, got {k}")


def _facets3(points):
    pts = sorted(set(points))
    found = {}
    for a, b, c in combinations(pts, 3):
        n = cross(sub(b, a), sub(c, a))
        if not any(n):
            continue
        n = primitive_vector(n)
        off = dot(n, a)
        if (n, off) in found or (tuple(-x for x in n), -off) in found:
            continue
        hi = lo = False
        for p in pts:
            s = dot(n, p) - off
            if s > 0:
                hi = True
            elif s < 0:
                lo = True
            if hi and lo:
                break
        if hi and lo:
            continue
        if hi:
            n, off = tuple(-x for x in n), -off
        found[(n, off)] = True
    return sorted(found)


class PointSetHull:
    """Face structure of ``conv(points)`` for an arbitrary integer point set.

    Attributes are in ambient coordinates: ``facets`` are ``(normal, offset)``
    with ``<normal, x> <= offset`` on the hull, ``equations`` cut out the
    affine span, ``vertices`` are sorted, ``edges`` index into ``vertices``.
    """

    def __init__(self, points):
        pts = sorted({as_vector(p) for p in points})
        if not pts:
            raise ValueError("not full-dimensional: empty point set")
        self.points = tuple(pts)
        self.chart = Chart(pts)
        self.dim = self.chart.dim
        self.ambient_dim = self.chart.ambient_dim
        self.equations = self.chart.equations
        if self.dim == 0:
            self.local_facets = ()
            self.facets = ()
            self.vertices = (pts[0],)
            self.edges = ()
            self.facet_vertices = ()
            return
        local = [self.chart.to_local(p) for p in pts]
        self.local_points = tuple(local)
        self.local_facets = tuple(full_dim_facets(local, self.dim))
        self.facets = tuple(self.chart.lift_functional(n, c) for n, c in self.local_facets)

        tight = [
            frozenset(i for i, (n, c) in enumerate(self.local_facets) if dot(n, y) == c)
            for y in local
        ]
        vert_idx = [
            i for i, t in enumerate(tight)
            if rank([self.local_facets[j][0] for j in t]) == self.dim
        ]
        self.vertices = tuple(pts[i] for i in vert_idx)
        self._local_vertices = tuple(local[i] for i in vert_idx)
        vtight = [tight[i] for i in vert_idx]
        self.facet_vertices = tuple(
            frozenset(v for v, t in enumerate(vtight) if f in t)
            for f in range(len(self.local_facets))
        )
        if self.dim == 1:
            self.edges = ((0, 1),)
        else:
            edges = []
            for i, j in combinations(range(len(vert_idx)), 2):
                common = vtight[i] & vtight[j]
                if rank([self.local_facets[f][0] for f in common]) == self.dim - 1:
                    edges.append((i, j))
            self.edges = tuple(edges)

    def contains(self, x) -> bool:
        x = as_vector(x)
        return all(dot(n, x) == c for n, c in self.equations) and all(
            dot(n, x) <= c for n, c in self.facets
        )

    def lattice_points(self):
        """All integer points of the hull, sorted lexicographically."""
        if self.dim == 0:
            return self.points[:1]
        k = self.dim
        facets = self.local_facets
        lo = [min(v[i] for v in self._local_vertices) for i in range(k)]
        hi = [max(v[i] for v in self._local_vertices) for i in range(k)]
        out = []

        def rec(prefix):
            i = len(prefix)
            if i == k - 1:
                a, b = lo[i], hi[i]
                ok = True
                for n, c in facets:
                    rest = c - dot(n[:i], prefix)
                    if n[i] > 0:
                        b = min(b, rest // n[i])
                    elif n[i] < 0:
                        a = max(a, -(rest // -n[i]))
                    elif rest < 0:
                        ok = False
                        break
                if ok:
                    for t in range(a, b + 1):
                        out.append(prefix + (t,))
                return
            for t in range(lo[i], hi[i] + 1):
                rec(prefix + (t,))

        rec(())
        return tuple(sorted(self.chart.to_ambient(y) for y in out))

    def ordered_facet_vertices(self, f):
        """Vertices of a 2-dimensional facet of a 3-dimensional hull in cyclic order."""
        vs = [self.vertices[i] for i in self.facet_vertices[f]]
        ch = Chart(vs)
        ring = convex_polygon([ch.to_local(v) for v in vs])
        back = {ch.to_local(v): v for v in vs}
        return [back[y] for y in ring]


def angular_key(v):
    """Sort key for the counter-clockwise angle of a nonzero plane vector from (1, 0)."""

    def half(u):
        return 0 if (u[1] > 0 or (u[1] == 0 and u[0] > 0)) else 1

    def cmp(a, b):
        ha, hb = half(a), half(b)
        if ha != hb:
            return ha - hb
        c = a[0] * b[1] - a[1] * b[0]
        return -1 if c > 0 else (1 if c < 0 else 0)

    return cmp_to_key(cmp)(v)
