"""Integral equivalence of lattice polytopes and canonical forms for deduplication."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .cones import is_smooth
from .lattice import adjugate, det, hermite_normal_form, primitive_vector, rank, sub, unimodular_inverse, vecmat
from .polytope import LatticePolytope, normalized_volume


@dataclass(frozen=True, order=True)
class CanonicalForm:
    dim: int
    vertices: tuple[tuple[int, ...], ...]
    frame_note: str = "smooth-frame"

    @property
    def key(self):
        return (self.dim, self.vertices)

    def polytope(self) -> LatticePolytope:
        return LatticePolytope(self.vertices)


def _local(p: LatticePolytope):
    """Vertices in lattice coordinates of the affine span, with the edge graph."""
    ch = p.chart
    return [ch.to_local(v) for v in p.vertices], p.dim


def _frames(p: LatticePolytope, verts, d):
    """Every (vertex, ordered d-tuple of independent primitive edge directions)."""
    for i, u in enumerate(verts):
        dirs = [primitive_vector(sub(verts[j], u)) for j in p.neighbors(i)]
        for perm in permutations(dirs, d):
            if d == 1 or rank(perm) == d:
                yield u, perm


def canonical_form_smooth(p: LatticePolytope) -> CanonicalForm:
    """Least sorted vertex list over all images sending a vertex to 0 and its edge frame to the standard basis."""
    verts, d = _local(p)
    best = None
    for i, u in enumerate(verts):
        dirs = [primitive_vector(sub(verts[j], u)) for j in p.neighbors(i)]
        if len(dirs) != d or abs(det(dirs)) != 1:
            raise ValueError("polytope is not smooth; use the general matcher")
        for perm in permutations(dirs):
            inv = unimodular_inverse(perm)
            image = tuple(sorted(vecmat(sub(v, u), inv) for v in verts))
            if best is None or image < best:
                best = image
    return CanonicalForm(d, best, "smooth-frame")


def canonical_form_general(p: LatticePolytope) -> CanonicalForm:
    """Canonical form for arbitrary lattice polytopes.

    A frame ``E`` of primitive edge directions at a vertex need not be a
    lattice basis. The lattice ``Z^d E^-1`` is pinned down by the Hermite
    normal form ``H`` of ``|det E| E^-1``; the map ``x -> x |det E| E^-1 H^-1``
    is then unimodular and depends only on the frame, so the least image over
    all frames is a complete invariant. On smooth polytopes it coincides with
    the smooth-frame form.
    """
    verts, d = _local(p)
    best = None
    for u, frame in _frames(p, verts, d):
        dd = det(frame)
        adj = adjugate(frame)
        scaled = tuple(tuple(x if dd > 0 else -x for x in row) for row in adj)
        _, uu = hermite_normal_form(scaled)
        w = unimodular_inverse(uu)
        image = tuple(sorted(vecmat(sub(v, u), w) for v in verts))
        if best is None or image < best:
            best = image
    return CanonicalForm(d, best, "general-matching")


def canonical_form(p: LatticePolytope) -> CanonicalForm:
    try:
        full = p if p.is_full_dimensional else LatticePolytope(_local(p)[0])
        if is_smooth(full):
            return canonical_form_smooth(p)
    except ValueError:
        pass
    return canonical_form_general(p)


def invariants(p: LatticePolytope):
    return (
        p.dim,
        len(p.vertices),
        len(p.lattice_points),
        normalized_volume(p),
        tuple(sorted(p.edge_lengths())),
    )


def are_equivalent(p: LatticePolytope, q: LatticePolytope) -> bool:
    """Decide integral equivalence by searching for an explicit affine lattice map."""
    if p.dim != q.dim or invariants(p) != invariants(q):
        return False
    pv, d = _local(p)
    qv, _ = _local(q)
    target = set(qv)
    # fixed frame of full edge vectors at the first vertex of p admitting one
    src = None
    for i, u in enumerate(pv):
        edges = [sub(pv[j], u) for j in p.neighbors(i)]
        for perm in permutations(edges, d):
            if rank(perm) == d:
                src = (u, perm)
                break
        if src:
            break
    u, e = src
    e_adj, e_det = adjugate(e), det(e)
    for j, u2 in enumerate(qv):
        edges2 = [sub(qv[k], u2) for k in q.neighbors(j)]
        for perm in permutations(edges2, d):
            # linear part m with e @ m == perm
            m = [[Fraction(sum(e_adj[r][s] * perm[s][c] for s in range(d)), e_det) for c in range(d)] for r in range(d)]
            if any(x.denominator != 1 for row in m for x in row):
                continue
            m = tuple(tuple(int(x) for x in row) for row in m)
            if abs(det(m)) != 1:
                continue
            image = {tuple(a + b for a, b in zip(vecmat(sub(v, u), m), u2)) for v in pv}
            if image == target:
                return True
    return False


def dedup_classes(polytopes):
    """One canonical representative per equivalence class.

    Sorted by (lattice points, vertices, canonical form).
    """
    classes = {}
    for p in polytopes:
        form = canonical_form(p)
        classes.setdefault(form.key, form)
    out = []
    for form in classes.values():
        rep = form.polytope()
        out.append((form, rep))
    out.sort(key=lambda fr: (len(fr[1].lattice_points), len(fr[1].vertices), fr[0].vertices))
    return out
