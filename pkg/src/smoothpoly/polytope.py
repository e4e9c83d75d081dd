"""Lattice polytopes of dimension at most three."""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from typing import NamedTuple, Sequence

from .hull import PointSetHull, convex_polygon
from .lattice import Vector, as_vector, det, dot, primitive_vector, scale, segment_lattice_length, sub


class Facet(NamedTuple):
    normal: Vector
    offset: int


class LatticePolytope:
    """Convex hull of finitely many integer points.

    Vertices are stored in lexicographic order. ``facets`` are outward
    inequalities ``<normal, x> <= offset``; for a lower-dimensional polytope
    they are complemented by ``equations`` describing the affine span.
    """

    def __init__(self, points: Sequence[Sequence[int]]):
        pts = [as_vector(p) for p in points]
        if len(set(pts)) < 2:
            raise ValueError("not full-dimensional: need at least two distinct points")
        self._hull = PointSetHull(pts)
        h = self._hull
        if h.dim > 3:
            raise ValueError("only polytopes of dimension at most 3 are supported")
        self.ambient_dim = h.ambient_dim
        self.dim = h.dim
        self.vertices: tuple[Vector, ...] = h.vertices
        self.facets = tuple(Facet(n, c) for n, c in h.facets)
        self.equations = tuple(Facet(n, c) for n, c in h.equations)
        self.edges: tuple[tuple[int, int], ...] = h.edges
        self.facet_vertices = h.facet_vertices

    def __repr__(self):
        return f"LatticePolytope({[list(v) for v in self.vertices]})"

    def __eq__(self, other):
        return isinstance(other, LatticePolytope) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    @property
    def is_full_dimensional(self) -> bool:
        return self.dim == self.ambient_dim

    @property
    def chart(self):
        return self._hull.chart

    @cached_property
    def lattice_points(self) -> tuple[Vector, ...]:
        return self._hull.lattice_points()

    def contains(self, x) -> bool:
        return self._hull.contains(x)

    def neighbors(self, i: int) -> list[int]:
        return sorted({b if a == i else a for a, b in self.edges if i in (a, b)})

    def edge_lengths(self) -> list[int]:
        return [segment_lattice_length(self.vertices[a], self.vertices[b]) for a, b in self.edges]

    def vertex_index(self, u) -> int:
        try:
            return self.vertices.index(as_vector(u))
        except ValueError:
            raise ValueError(f"{tuple(u)} is not a vertex") from None

    def to_dict(self) -> dict:
        return {"dim": self.ambient_dim, "vertices": [list(v) for v in self.vertices]}


def hull_from_points(points) -> LatticePolytope:
    return LatticePolytope(points)


def lattice_points(p: LatticePolytope) -> tuple[Vector, ...]:
    return p.lattice_points


def normalized_volume(p: LatticePolytope, apex: int = 0) -> int:
    """``dim!`` times the Euclidean volume, measured in the lattice of the affine span.

    The polytope is cut into simplices by coning from vertex ``apex`` over the
    facets that miss it, so different apexes give independent computations.
    """
    ch = p.chart
    local = [ch.to_local(v) for v in p.vertices]
    if p.dim == 1:
        return abs(local[0][0] - local[1][0])
    if p.dim == 2:
        ring = convex_polygon(local)
        a = local[apex]
        k = ring.index(a)
        ring = ring[k:] + ring[:k]
        return sum(abs(det((sub(b, a), sub(c, a)))) for b, c in zip(ring[1:], ring[2:]))
    a = p.vertices[apex]
    total = 0
    for f, verts in enumerate(p.facet_vertices):
        if apex in verts:
            continue
        ring = p._hull.ordered_facet_vertices(f)
        b = ring[0]
        for c, d in zip(ring[1:], ring[2:]):
            total += abs(det((sub(b, a), sub(c, a), sub(d, a))))
    return total


def euclidean_area2(p: LatticePolytope) -> int:
    """Twice the Euclidean area of a full-dimensional polygon."""
    if p.dim != 2 or p.ambient_dim != 2:
        raise ValueError("expected a full-dimensional polygon")
    return normalized_volume(p)


def edge_directions(p: LatticePolytope, u) -> list[Vector]:
    i = p.vertex_index(u)
    return [primitive_vector(sub(p.vertices[j], p.vertices[i])) for j in p.neighbors(i)]


def tangent_cone(p: LatticePolytope, u):
    """Cone at vertex ``u`` spanned by the directions of the edges leaving ``u``."""
    from .cones import RationalCone

    return RationalCone(edge_directions(p, u))


def normal_fan(p: LatticePolytope):
    """Fan of outward facet normals; the maximal cone of a vertex collects its facets."""
    from .cones import Fan

    if not p.is_full_dimensional:
        raise ValueError("normal fan needs a full-dimensional polytope")
    order = sorted(range(len(p.facets)), key=lambda f: p.facets[f].normal)
    pos = {f: i for i, f in enumerate(order)}
    rays = [p.facets[f].normal for f in order]
    cones = []
    for v in range(len(p.vertices)):
        cones.append(tuple(sorted(pos[f] for f, verts in enumerate(p.facet_vertices) if v in verts)))
    return Fan(rays, cones)


def edge_lattice_point_count(p: LatticePolytope) -> int:
    """Number of lattice points on the union of the edges."""
    return sum(n - 1 for n in p.edge_lengths()) + len(p.vertices)


def dilate(p: LatticePolytope, k: int) -> LatticePolytope:
    if k < 1:
        raise ValueError("dilation factor must be positive")
    return LatticePolytope([scale(k, v) for v in p.vertices])


def translate(p: LatticePolytope, t) -> LatticePolytope:
    return LatticePolytope([tuple(x + y for x, y in zip(v, t)) for v in p.vertices])


def affine_image(p: LatticePolytope, m, t=None) -> LatticePolytope:
    """Image under ``x -> x @ m + t`` (row-vector convention)."""
    t = t or (0,) * len(m[0])
    return LatticePolytope(
        [tuple(dot(v, col) + s for col, s in zip(zip(*m), t)) for v in p.vertices]
    )




def polygon_area_bound(a: int, b: int):
    """Upper bound on the Euclidean area of a smooth polygon with ``a`` vertices and longest edge ``b``."""
    if a == 3:
        return Fraction(b * b, 2)
    if a == 4:
        return Fraction(b * b)
    if a >= 5:
        return Fraction(4 ** (a - 4) * b * b - a + 4)
    raise ValueError("a polygon has at least three vertices")
