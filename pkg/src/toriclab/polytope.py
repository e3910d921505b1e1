"""Lattice polytopes: duality, reflexivity, normal forms, enumeration.

Vertices are stored exactly (integers, or rationals for duals).  Facet
enumeration is a brute-force supporting-hyperplane scan, which is entirely
adequate at the handful-of-vertices scale this package works at; it keeps
every predicate exact.

The polygon normal form is a true GL(2,Z)-orbit invariant: it minimizes
(max |coordinate|, sorted vertex list) over the whole orbit, by a complete
search over images of a fixed independent vertex pair inside the bounding
box that the minimum provably inhabits.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key, lru_cache
from typing import Iterable, Optional, Sequence

from toriclab.fan import Fan, linear_feasible
from toriclab.lattice import IntMatrix, primitive, rank as matrix_rank, vdot


@dataclass(frozen=True)
class Polytope:
    """Convex polytope given by its vertices (exact coordinates).

    The constructor keeps only the actual vertices of the convex hull of
    the supplied points and orders them canonically: counterclockwise from
    the lexicographically smallest vertex in rank 2, lexicographically
    sorted otherwise.
    """

    vertices: tuple[tuple, ...]
    rank: int

    def __post_init__(self):
        pts = [tuple(Fraction(x) for x in v) for v in self.vertices]
        if not pts:
            raise ValueError("polytope needs at least one point")
        if any(len(p) != self.rank for p in pts):
            raise ValueError("point length differs from ambient rank")
        pts = sorted(set(pts))
        verts = _hull_vertices(pts, self.rank)
        simple = tuple(
            tuple(int(x) if x.denominator == 1 else x for x in v) for v in verts
        )
        object.__setattr__(self, "vertices", simple)

    @classmethod
    def hull(cls, points: Iterable[Sequence], rank: Optional[int] = None) -> "Polytope":
        pts = [tuple(Fraction(x) for x in p) for p in points]
        if rank is None:
            if not pts:
                raise ValueError("cannot infer rank")
            rank = len(pts[0])
        return cls(tuple(pts), rank)

    @property
    def is_lattice(self) -> bool:
        return all(Fraction(x).denominator == 1 for v in self.vertices for x in v)

    @property
    def dim(self) -> int:
        if len(self.vertices) == 1:
            return 0
        v0 = self.vertices[0]
        rows = [
            [Fraction(a) - Fraction(b) for a, b in zip(v, v0)] for v in self.vertices[1:]
        ]
        scaled = []
        for row in rows:
            denom = 1
            for x in row:
                denom = denom * x.denominator // math.gcd(denom, x.denominator)
            scaled.append([int(x * denom) for x in row])
        return matrix_rank(IntMatrix.from_rows(scaled, cols=self.rank))

    def contains_origin_interior(self) -> bool:
        """Is the origin strictly inside (the polytope being full-dim)?"""
        if self.dim != self.rank:
            return False
        k = len(self.vertices)
        eqs = [
            (tuple(v[d] for v in self.vertices), 0) for d in range(self.rank)
        ]
        eqs.append((tuple(1 for _ in range(k)), 1))
        pos = [(tuple(1 if i == j else 0 for j in range(k)), 0) for i in range(k)]
        return linear_feasible(k, equalities=eqs, gt=pos)


def _hull_vertices(pts: list[tuple], rank: int) -> tuple[tuple, ...]:
    if rank == 2 and len(pts) >= 3:
        return _hull_2d(pts)
    # general rank: a point is a vertex iff it is not in the hull of the rest
    verts = []
    for i, p in enumerate(pts):
        others = pts[:i] + pts[i + 1 :]
        if not others or not _in_hull(p, others, rank):
            verts.append(p)
    return tuple(sorted(verts))


def _in_hull(p, pts, rank) -> bool:
    k = len(pts)
    eqs = [(tuple(q[d] for q in pts), p[d]) for d in range(rank)]
    eqs.append((tuple(1 for _ in range(k)), 1))
    nonneg = [(tuple(1 if i == j else 0 for j in range(k)), 0) for i in range(k)]
    return linear_feasible(k, equalities=eqs, gte=nonneg)


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _hull_2d(pts: list[tuple]) -> tuple[tuple, ...]:
    """Monotone chain; returns vertices counterclockwise from the
    lexicographically smallest, dropping collinear points."""
    pts = sorted(pts)
    if len(pts) <= 2:
        return tuple(pts)
    lower: list = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    cycle = lower[:-1] + upper[:-1]
    if len(cycle) < 3:  # degenerate: all points collinear
        return tuple(sorted(set(pts)))
    return tuple(cycle)


def facet_functionals(P: Polytope) -> tuple[tuple[frozenset[int], tuple[Fraction, ...]], ...]:
    """Facets of a full-dimensional polytope with the origin interior, as
    (vertex-index set, functional a) with <a, x> = -1 on the facet and
    <a, x> > -1 on the rest of the polytope."""
    n = P.rank
    if P.dim != n:
        raise ValueError("facet scan needs a full-dimensional polytope")
    verts = P.vertices
    found = {}
    for sub in itertools.combinations(range(len(verts)), n):
        rows = [[Fraction(x) for x in verts[i]] for i in sub]
        a = _solve_affine(rows, n)
        if a is None:
            continue
        vals = [vdot(a, v) for v in verts]
        if all(v >= -1 for v in vals):
            members = frozenset(i for i, v in enumerate(vals) if v == -1)
            if len(members) >= n:
                found.setdefault(members, tuple(a))
    return tuple(sorted(found.items(), key=lambda kv: sorted(kv[0])))


def _solve_affine(rows, n) -> Optional[list[Fraction]]:
    """Solve <a, row> = -1 for all rows (n rows, n unknowns), None if the
    rows are affinely degenerate for this normalization."""
    from toriclab.lattice import solve_rational

    denom = 1
    for row in rows:
        for x in row:
            denom = denom * x.denominator // math.gcd(denom, x.denominator)
    A = IntMatrix.from_rows([[int(x * denom) for x in row] for row in rows], cols=n)
    sol = solve_rational(A, [Fraction(-denom)] * len(rows))
    if sol is None:
        return None
    # unique only if the rows are independent; check exactness
    if matrix_rank(A) != n:
        return None
    return list(sol)


def dual_polytope(P: Polytope) -> Polytope:
    """Polar dual { y : <y, x> >= -1 on P }, exact rational vertices.

    Requires the origin strictly inside; the dual's vertices are the facet
    functionals of P.
    """
    if not P.contains_origin_interior():
        raise ValueError("dual undefined: origin is not interior to the polytope")
    facets = facet_functionals(P)
    return Polytope.hull([a for _, a in facets], rank=P.rank)


def is_reflexive(P: Polytope) -> bool:
    """Lattice polytope with the origin interior whose dual is again a
    lattice polytope."""
    if not P.is_lattice:
        return False
    return dual_polytope(P).is_lattice


def is_smooth_fano_polytope(P: Polytope) -> bool:
    """The vertex set of every facet is a basis of the lattice."""
    if not P.is_lattice:
        raise ValueError("smooth Fano test needs a lattice polytope")
    if not P.contains_origin_interior():
        raise ValueError("smooth Fano test needs the origin interior")
    from toriclab.lattice import smith_normal_form

    for members, _ in facet_functionals(P):
        if len(members) != P.rank:
            return False
        M = IntMatrix.from_rows([[int(x) for x in P.vertices[i]] for i in sorted(members)], cols=P.rank)
        _, D, _ = smith_normal_form(M)
        if any(d != 1 for d in D.diagonal()):
            return False
    return True


def face_fan(P: Polytope) -> Fan:
    """Fan whose maximal cones are the cones over the facets."""
    if not P.is_lattice:
        raise ValueError("face fan needs a lattice polytope")
    if not P.contains_origin_interior():
        raise ValueError("face fan needs the origin interior")
    rays = [primitive(tuple(int(x) for x in v)) for v in P.vertices]
    if len(set(rays)) != len(rays):
        raise ValueError("two vertices span the same ray")
    cones = [tuple(sorted(members)) for members, _ in facet_functionals(P)]
    return Fan.from_data(rays, cones, rank=P.rank)


# ---------------------------------------------------------------------------
# GL(2,Z) normal form for polygons
# ---------------------------------------------------------------------------

_GL2_STEPS = (
    ((0, -1), (1, 0)),   # rotate
    ((0, 1), (-1, 0)),   # rotate back
    ((1, 1), (0, 1)),    # shear
    ((1, -1), (0, 1)),   # unshear
    ((1, 0), (1, 1)),    # transposed shear
    ((1, 0), (-1, 1)),   # transposed unshear
    ((1, 0), (0, -1)),   # reflect
)


def _apply(U, P: Polytope) -> Polytope:
    pts = [
        (
            U[0][0] * v[0] + U[0][1] * v[1],
            U[1][0] * v[0] + U[1][1] * v[1],
        )
        for v in P.vertices
    ]
    return Polytope.hull(pts, rank=2)


def _size(P: Polytope) -> tuple[int, int]:
    return (
        max(abs(int(x)) for v in P.vertices for x in v),
        sum(int(x) * int(x) for v in P.vertices for x in v),
    )


def unimodular_normal_form(P: Polytope) -> Polytope:
    """Canonical representative of the GL(2,Z)-orbit of a lattice polygon.

    First greedily shrinks coordinates with elementary transforms, then
    does a complete search: the optimum has max-coordinate at most that of
    the current representative, so every unimodular image of a fixed
    independent vertex pair inside that box is tried.  The key minimized
    is (max |coordinate|, sorted vertex tuple), so the result does not
    depend on the starting representative.
    """
    if P.rank != 2:
        raise ValueError("normal form implemented for polygons only")
    if not P.is_lattice:
        raise ValueError("normal form needs a lattice polygon")
    if P.dim != 2:
        raise ValueError("normal form needs a two-dimensional polygon")
    current = P
    while True:
        best, best_size = None, _size(current)
        for U in _GL2_STEPS:
            cand = _apply(U, current)
            s = _size(cand)
            if s < best_size:
                best, best_size = cand, s
        if best is None:
            break
        current = best

    v1 = current.vertices[0]
    v2 = next(v for v in current.vertices[1:] if v1[0] * v[1] - v1[1] * v[0] != 0)
    d0 = v1[0] * v2[1] - v1[1] * v2[0]
    box = _size(current)[0]
    rng = range(-box, box + 1)
    best_key = None
    best_poly = None
    for w1 in itertools.product(rng, rng):
        for w2 in itertools.product(rng, rng):
            dw = w1[0] * w2[1] - w1[1] * w2[0]
            if dw != d0 and dw != -d0:
                continue
            # U [v1 v2] = [w1 w2]  =>  U = [w1 w2] adj([v1 v2]) / det
            u00 = w1[0] * v2[1] - w2[0] * v1[1]
            u01 = -w1[0] * v2[0] + w2[0] * v1[0]
            u10 = w1[1] * v2[1] - w2[1] * v1[1]
            u11 = -w1[1] * v2[0] + w2[1] * v1[0]
            if any(x % d0 for x in (u00, u01, u10, u11)):
                continue
            U = ((u00 // d0, u01 // d0), (u10 // d0, u11 // d0))
            if U[0][0] * U[1][1] - U[0][1] * U[1][0] not in (1, -1):
                continue
            pts = [
                (U[0][0] * v[0] + U[0][1] * v[1], U[1][0] * v[0] + U[1][1] * v[1])
                for v in current.vertices
            ]
            m = max(abs(x) for p in pts for x in p)
            if m > box:
                continue
            key = (m, tuple(sorted(pts)))
            if best_key is None or key < best_key:
                best_key = key
                best_poly = pts
    assert best_poly is not None
    return Polytope.hull(best_poly, rank=2)


# ---------------------------------------------------------------------------
# enumeration of reflexive polygons
# ---------------------------------------------------------------------------


def _angle_cmp(a, b) -> int:
    """Exact counterclockwise angular comparison of nonzero lattice
    vectors, starting from the positive x-axis."""

    def half(v):
        return 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1

    ha, hb = half(a), half(b)
    if ha != hb:
        return -1 if ha < hb else 1
    cross = a[0] * b[1] - a[1] * b[0]
    if cross > 0:
        return -1
    if cross < 0:
        return 1
    return 0


def _interior_points(vertices: Sequence[tuple[int, int]]) -> list[tuple[int, int]]:
    """Lattice points strictly inside a convex polygon given in
    counterclockwise vertex order."""
    xs = [v[0] for v in vertices]
    ys = [v[1] for v in vertices]
    out = []
    k = len(vertices)
    for x in range(min(xs) + 1, max(xs)):
        for y in range(min(ys) + 1, max(ys)):
            p = (x, y)
            if all(
                _cross(vertices[i], vertices[(i + 1) % k], p) > 0 for i in range(k)
            ):
                out.append(p)
    return out


def _reflexive_polygon_scan(box: int) -> list[Polytope]:
    """All reflexive polygons whose vertices fit in [-box, box]^2, up to
    unimodular equivalence.

    Depth-first search over vertex cycles in strictly increasing angular
    order around the origin.  Reflexive polygons have primitive vertices
    and a lattice-point-free triangle between the origin and every pair of
    cyclically consecutive vertices, so both facts prune the search
    without losing any candidate.
    """
    pts = [
        (x, y)
        for x in range(-box, box + 1)
        for y in range(-box, box + 1)
        if (x, y) != (0, 0) and math.gcd(x, y) == 1
    ]
    pts.sort(key=cmp_to_key(_angle_cmp))
    npts = len(pts)

    def det(a, b):
        return a[0] * b[1] - a[1] * b[0]

    def fan_triangle_clean(a, b) -> bool:
        # no lattice point strictly inside the triangle (0, a, b)
        if det(a, b) <= 0:
            return False
        return not _interior_points([(0, 0), a, b])

    def turn_ok(a, b, c) -> bool:
        return _cross(a, b, c) > 0

    found: dict[tuple, Polytope] = {}

    def accept(seq):
        poly = Polytope.hull(seq, rank=2)
        if len(poly.vertices) != len(seq):
            return
        if _interior_points(seq) != [(0, 0)]:
            return
        if not is_reflexive(poly):
            return
        nf = unimodular_normal_form(poly)
        found.setdefault(nf.vertices, nf)

    def dfs(start: int, seq: list, last: int):
        for nxt in range(last + 1, npts):
            p = pts[nxt]
            if not fan_triangle_clean(pts[seq[-1]], p):
                continue
            if len(seq) >= 2 and not turn_ok(pts[seq[-2]], pts[seq[-1]], p):
                continue
            new_seq = seq + [nxt]
            verts = [pts[i] for i in new_seq]
            if len(new_seq) >= 3:
                inside = _interior_points(verts)
                if any(q != (0, 0) for q in inside):
                    continue
                # try to close the cycle
                if (
                    fan_triangle_clean(p, pts[start])
                    and turn_ok(pts[seq[-1]], p, pts[start])
                    and turn_ok(p, pts[start], pts[new_seq[1]])
                ):
                    accept(verts)
            dfs(start, new_seq, nxt)

    for s in range(npts):
        dfs(s, [s], s)
    return sorted(found.values(), key=lambda P: (len(P.vertices), P.vertices))


def enumerate_reflexive_polygons() -> list[Polytope]:
    """The reflexive polygons up to unimodular equivalence (there are 16).

    Enumerates inside a coordinate box and then self-checks the box: if
    some normal form touched the boundary the box is enlarged and the scan
    repeated, so the bound is verified rather than assumed.
    """
    return list(_enumerate_reflexive_cached())


@lru_cache(maxsize=1)
def _enumerate_reflexive_cached() -> tuple[Polytope, ...]:
    box = 4
    while True:
        polys = _reflexive_polygon_scan(box)
        touched = any(
            max(abs(int(x)) for v in P.vertices for x in v) >= box for P in polys
        )
        if not touched:
            return tuple(polys)
        box += 1
