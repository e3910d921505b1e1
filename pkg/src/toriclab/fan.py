"""Cones, fans, and fan surgeries (star subdivisions, 2D resolutions).

A cone is stored by its primitive extremal generators, a fan by a canonical
(lexicographically sorted) ray list plus maximal cones as ray-index sets.
All geometry is decided exactly: membership, faces and separation questions
reduce to rational linear feasibility, solved by Fourier-Motzkin
elimination.  Nothing here ever touches a float.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Optional, Sequence

from toriclab.lattice import (
    IntMatrix,
    Vec,
    is_zero,
    primitive,
    smith_normal_form,
    vdot,
)

# ---------------------------------------------------------------------------
# exact linear feasibility (Fourier-Motzkin)
# ---------------------------------------------------------------------------

# A constraint is (coeffs, rhs, kind) and reads  coeffs . x  <kind>  rhs
# with kind one of "eq", "ge" (>=) or "gt" (>).


def _normalize(con):
    # scale so the first nonzero coefficient is +-1; cheap dedupe aid
    coeffs, rhs, kind = con
    lead = next((c for c in coeffs if c != 0), None)
    if lead is None:
        return con
    s = abs(lead)
    return (tuple(c / s for c in coeffs), rhs / s, kind)


def linear_feasible(
    nvars: int,
    equalities: Sequence[tuple[Sequence, object]] = (),
    gte: Sequence[tuple[Sequence, object]] = (),
    gt: Sequence[tuple[Sequence, object]] = (),
) -> bool:
    """Decide whether the mixed system { a.x = b, c.x >= d, e.x > f } has
    a rational solution.  Exact; intended for the small systems cone
    geometry produces."""
    cons = [(tuple(Fraction(c) for c in a), Fraction(b), "eq") for a, b in equalities]
    cons += [(tuple(Fraction(c) for c in a), Fraction(b), "ge") for a, b in gte]
    cons += [(tuple(Fraction(c) for c in a), Fraction(b), "gt") for a, b in gt]

    # eliminate equalities by substitution
    live = list(range(nvars))
    while True:
        eq = next((c for c in cons if c[2] == "eq" and any(x != 0 for x in c[0])), None)
        if eq is None:
            break
        cons.remove(eq)
        coeffs, rhs, _ = eq
        j = next(i for i, x in enumerate(coeffs) if x != 0)
        pivot = coeffs[j]
        new_cons = []
        for c2, r2, k2 in cons:
            f = c2[j] / pivot
            if f != 0:
                c2 = tuple(x - f * y for x, y in zip(c2, coeffs))
                r2 = r2 - f * rhs
            new_cons.append((c2, r2, k2))
        cons = new_cons
        if j in live:
            live.remove(j)

    # Fourier-Motzkin on the remaining inequalities
    for j in live:
        lowers, uppers, rest = [], [], []
        for coeffs, rhs, kind in cons:
            if kind == "eq":
                rest.append((coeffs, rhs, kind))
            elif coeffs[j] > 0:
                lowers.append((coeffs, rhs, kind))
            elif coeffs[j] < 0:
                uppers.append((coeffs, rhs, kind))
            else:
                rest.append((coeffs, rhs, kind))
        new = rest
        for (cl, rl, kl), (cu, ru, ku) in itertools.product(lowers, uppers):
            a, b = cl[j], -cu[j]
            comb = tuple(b * x + a * y for x, y in zip(cl, cu))
            rhs = b * rl + a * ru
            kind = "gt" if "gt" in (kl, ku) else "ge"
            new.append((comb, rhs, kind))
        cons = list({_normalize(c) for c in new})

    for coeffs, rhs, kind in cons:
        assert all(x == 0 for x in coeffs), "variable survived elimination"
        if kind == "eq" and rhs != 0:
            return False
        if kind == "ge" and rhs > 0:
            return False
        if kind == "gt" and rhs >= 0:
            return False
    return True


# ---------------------------------------------------------------------------
# cones
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Cone:
    """Rational polyhedral cone given by primitive generators.

    The constructor normalizes: generators are primitivized, deduplicated
    and sorted.  Strong convexity and extremality are geometric properties
    checked by the predicates below, not at construction.
    """

    generators: tuple[Vec, ...]
    rank: int

    def __post_init__(self):
        gens = []
        for g in self.generators:
            if len(g) != self.rank:
                raise ValueError("generator length differs from ambient rank")
            if is_zero(g):
                raise ValueError("zero generator")
            gens.append(primitive(g))
        object.__setattr__(self, "generators", tuple(sorted(set(gens))))

    @classmethod
    def from_generators(cls, gens: Iterable[Sequence[int]], rank: Optional[int] = None) -> "Cone":
        gens = [tuple(int(x) for x in g) for g in gens]
        if rank is None:
            if not gens:
                raise ValueError("cannot infer ambient rank of empty cone")
            rank = len(gens[0])
        return cls(tuple(gens), rank)

    @cached_property
    def dim(self) -> int:
        from toriclab.lattice import rank as _rank

        if not self.generators:
            return 0
        return _rank(IntMatrix.from_rows(self.generators))

    @cached_property
    def generator_matrix(self) -> IntMatrix:
        return IntMatrix.from_rows(self.generators, cols=self.rank)

    def contains(self, x: Sequence) -> bool:
        """Exact membership test (x may have Fraction entries)."""
        k = len(self.generators)
        if k == 0:
            return all(c == 0 for c in x)
        eqs = [
            (tuple(g[d] for g in self.generators), x[d])
            for d in range(self.rank)
        ]
        nonneg = [(tuple(1 if i == j else 0 for j in range(k)), 0) for i in range(k)]
        return linear_feasible(k, equalities=eqs, gte=nonneg)

    def relint_contains(self, x: Sequence) -> bool:
        k = len(self.generators)
        if k == 0:
            return all(c == 0 for c in x)
        eqs = [
            (tuple(g[d] for g in self.generators), x[d])
            for d in range(self.rank)
        ]
        pos = [(tuple(1 if i == j else 0 for j in range(k)), 0) for i in range(k)]
        return linear_feasible(k, equalities=eqs, gt=pos)

    def is_strongly_convex(self) -> bool:
        """True iff the cone contains no line, i.e. some functional is
        strictly positive on every generator."""
        if not self.generators:
            return True
        cons = [(g, 1) for g in self.generators]
        return linear_feasible(self.rank, gte=cons)

    def generators_extremal(self) -> bool:
        """Every listed generator spans an extremal ray."""
        for i, g in enumerate(self.generators):
            others = self.generators[:i] + self.generators[i + 1 :]
            if others and Cone(others, self.rank).contains(g):
                return False
        return True

    def is_unimodular(self) -> bool:
        """Generators extend to a basis of the ambient lattice (and the
        cone is simplicial)."""
        if len(self.generators) != self.dim:
            return False
        _, D, _ = smith_normal_form(self.generator_matrix)
        return all(d == 1 for d in D.diagonal())

    def lattice_index(self) -> int:
        """Product of the nonzero elementary divisors of the generator
        matrix; 1 exactly for unimodular simplicial cones."""
        _, D, _ = smith_normal_form(self.generator_matrix)
        out = 1
        for d in D.diagonal():
            if d != 0:
                out *= d
        return out

    @cached_property
    def span_equations(self) -> tuple[tuple[Fraction, ...], ...]:
        """Basis of the functionals vanishing on the cone's linear span."""
        return _nullspace(self.generators, self.rank)

    @cached_property
    def facet_data(self) -> tuple[tuple[frozenset[int], tuple[Fraction, ...]], ...]:
        """Facets as (generator-index set, inward ambient normal).

        The normal h satisfies h.g = 0 on the facet's generators and
        h.g > 0 on every other generator; together with span_equations it
        yields an H-description of the cone.
        """
        d = self.dim
        if d == 0:
            return ()
        if d == 1:
            # facet is the origin; exposing functional positive on the gens
            h = _positive_functional(self.generators, self.rank)
            return ((frozenset(), h),)
        found = {}
        idx = range(len(self.generators))
        for sub in itertools.combinations(idx, d - 1):
            rows = [self.generators[i] for i in sub]
            kernel = _nullspace_within(rows, self.generators, self.rank)
            if kernel is None:
                continue
            vals = [vdot(kernel, g) for g in self.generators]
            if all(v >= 0 for v in vals):
                h = kernel
            elif all(v <= 0 for v in vals):
                h = tuple(-x for x in kernel)
                vals = [-v for v in vals]
            else:
                continue
            members = frozenset(i for i in idx if vals[i] == 0)
            rows = [self.generators[i] for i in members]
            from toriclab.lattice import rank as _rank

            if rows and _rank(IntMatrix.from_rows(rows)) == d - 1:
                found.setdefault(members, h)
        return tuple(sorted(found.items(), key=lambda kv: sorted(kv[0])))

    def membership_oracle(self):
        """Returns a fast closure deciding membership via the cone's
        H-description (span equations plus facet normals)."""
        eqs = self.span_equations
        normals = [h for _, h in self.facet_data]

        def member(x):
            return all(vdot(e, x) == 0 for e in eqs) and all(vdot(h, x) >= 0 for h in normals)

        return member


def _nullspace(rows: Sequence[Sequence], width: int) -> tuple[tuple[Fraction, ...], ...]:
    """Basis of { h : h.row = 0 for all rows }, over Q."""
    a = [[Fraction(x) for x in row] for row in rows]
    n = width
    pivots = {}
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, len(a)) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        a[r] = [x / a[r][col] for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots[col] = r
        r += 1
    basis = []
    free = [c for c in range(n) if c not in pivots]
    for fc in free:
        h = [Fraction(0)] * n
        h[fc] = Fraction(1)
        for col, row in pivots.items():
            h[col] = -a[row][fc]
        basis.append(tuple(h))
    return tuple(basis)


def _nullspace_within(rows, gens, rank) -> Optional[tuple[Fraction, ...]]:
    """A functional vanishing on `rows` but not on all of `gens`, unique up
    to scale modulo the span-annihilator; None if no such functional."""
    kernel = _nullspace(rows, rank)
    span_ann = _nullspace(gens, rank)
    # project away the part of the kernel that kills the whole span
    for h in kernel:
        if any(vdot(h, g) != 0 for g in gens):
            candidate = h
            break
    else:
        return None
    # make the candidate canonical mod span_ann: reduce by Gaussian elim
    if not span_ann:
        return candidate
    rows_ann = [list(v) for v in span_ann]
    cand = list(candidate)
    r = 0
    for col in range(rank):
        piv = next((i for i in range(r, len(rows_ann)) if rows_ann[i][col] != 0), None)
        if piv is None:
            continue
        rows_ann[r], rows_ann[piv] = rows_ann[piv], rows_ann[r]
        rows_ann[r] = [x / rows_ann[r][col] for x in rows_ann[r]]
        for i in range(len(rows_ann)):
            if i != r and rows_ann[i][col] != 0:
                f = rows_ann[i][col]
                rows_ann[i] = [x - f * y for x, y in zip(rows_ann[i], rows_ann[r])]
        if cand[col] != 0:
            f = cand[col]
            cand = [x - f * y for x, y in zip(cand, rows_ann[r])]
        r += 1
    if all(x == 0 for x in cand):
        return None
    return tuple(cand)


def _positive_functional(gens, rank):
    """Some rational h with h.g > 0 for every generator (exists iff the
    cone is strongly convex); tries the generator sum, then a small grid."""
    # the sum of the generators' duals usually works; fall back to solving
    total = tuple(sum(g[i] for g in gens) for i in range(rank))
    if all(vdot(total, g) > 0 for g in gens):
        return tuple(Fraction(x) for x in total)
    # general fallback: maximize nothing, just find a feasible point by FM
    # via a bounded search box of rational grid candidates
    for bound in (1, 2, 3, 5, 8):
        for cand in itertools.product(range(-bound, bound + 1), repeat=rank):
            if all(vdot(cand, g) > 0 for g in gens):
                return tuple(Fraction(x) for x in cand)
    raise ValueError("no positive functional: cone is not strongly convex")


# ---------------------------------------------------------------------------
# fans
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Fan:
    """Fan as canonical ray list plus maximal cones (ray-index tuples).

    Rays are sorted lexicographically on construction and cone index sets
    are remapped accordingly, so equal fans compare equal structurally.
    """

    rays: tuple[Vec, ...]
    max_cones: tuple[tuple[int, ...], ...]
    rank: int

    def __post_init__(self):
        rays = []
        for r in self.rays:
            if len(r) != self.rank:
                raise ValueError("ray length differs from ambient rank")
            if is_zero(r):
                raise ValueError("zero ray")
            rays.append(primitive(tuple(int(x) for x in r)))
        if len(set(rays)) != len(rays):
            raise ValueError("duplicate ray")
        order = sorted(range(len(rays)), key=lambda i: rays[i])
        relabel = {old: new for new, old in enumerate(order)}
        sorted_rays = tuple(rays[i] for i in order)
        cones = []
        for cone in self.max_cones:
            raw = tuple(int(i) for i in cone)
            if any(i < 0 or i >= len(rays) for i in raw):
                raise ValueError("ray index out of range")
            mapped = tuple(sorted(relabel[i] for i in raw))
            if len(set(mapped)) != len(mapped):
                raise ValueError("repeated ray index in cone")
            if not mapped:
                raise ValueError("empty maximal cone")
            cones.append(mapped)
        object.__setattr__(self, "rays", sorted_rays)
        object.__setattr__(self, "max_cones", tuple(sorted(set(cones))))

    @classmethod
    def from_data(
        cls, rays: Iterable[Sequence[int]], max_cones: Iterable[Iterable[int]], rank: Optional[int] = None
    ) -> "Fan":
        rays = [tuple(int(x) for x in r) for r in rays]
        if rank is None:
            if not rays:
                raise ValueError("cannot infer rank of empty fan; pass rank=")
            rank = len(rays[0])
        return cls(tuple(rays), tuple(tuple(c) for c in max_cones), rank)

    def cone(self, indices: Iterable[int]) -> Cone:
        return Cone(tuple(self.rays[i] for i in indices), self.rank)

    def max_cone(self, k: int) -> Cone:
        return self.cone(self.max_cones[k])


@dataclass(frozen=True)
class FanDiagnostics:
    valid: bool
    problem: Optional[str] = None
    witness: Optional[tuple] = None

    def __bool__(self):
        return self.valid


def validate_fan(fan: Fan) -> FanDiagnostics:
    """Check the fan axioms; reports the first violation with a witness.

    Checks, in order: every ray used, strong convexity and extremality of
    each maximal cone, no cone contained in another, and the pairwise
    intersection-is-a-common-face condition (via an exact separating
    functional).
    """
    used = set(itertools.chain.from_iterable(fan.max_cones))
    for i in range(len(fan.rays)):
        if i not in used:
            return FanDiagnostics(False, "ray not contained in any maximal cone", (fan.rays[i],))
    cones = [fan.cone(c) for c in fan.max_cones]
    for idx, cone in zip(fan.max_cones, cones):
        if not cone.is_strongly_convex():
            return FanDiagnostics(False, "maximal cone is not strongly convex", (idx,))
        if not cone.generators_extremal():
            return FanDiagnostics(False, "non-extremal generator in maximal cone", (idx,))
    for a, b in itertools.combinations(range(len(cones)), 2):
        ia, ib = set(fan.max_cones[a]), set(fan.max_cones[b])
        if ia <= ib or ib <= ia:
            return FanDiagnostics(False, "maximal cone contained in another", (fan.max_cones[a], fan.max_cones[b]))
        if not _meet_in_common_face(fan, fan.max_cones[a], fan.max_cones[b]):
            return FanDiagnostics(
                False,
                "cones do not intersect in a common face",
                (fan.max_cones[a], fan.max_cones[b]),
            )
    return FanDiagnostics(True)


def _meet_in_common_face(fan: Fan, ca: tuple[int, ...], cb: tuple[int, ...]) -> bool:
    """True iff cone(ca) and coneb meet exactly in cone(ca & cb), which is
    then a face of both.  Decided by searching for a functional that is
    zero on the common rays, >= 1 on the rest of ca and <= -1 on the rest
    of cb; such a functional exposes the common face on both sides."""
    common = set(ca) & set(cb)
    eqs = [(fan.rays[i], 0) for i in common]
    gte = [(fan.rays[i], 1) for i in ca if i not in common]
    gte += [(tuple(-x for x in fan.rays[i]), 1) for i in cb if i not in common]
    return linear_feasible(fan.rank, equalities=eqs, gte=gte)


def is_simplicial(fan: Fan) -> bool:
    """Every maximal cone has exactly dim-of-cone generators."""
    return all(len(c) == fan.cone(c).dim for c in fan.max_cones)


def is_smooth(fan: Fan) -> bool:
    """Every maximal cone is unimodular (its generators extend to a basis
    of the ambient lattice)."""
    return all(fan.cone(c).is_unimodular() for c in fan.max_cones)


def is_complete(fan: Fan) -> bool:
    """Support equals the whole space.

    Uses the wall criterion: in a valid fan all of whose maximal cones are
    full-dimensional, the support is everything iff every facet of every
    maximal cone is shared by exactly two of them (plus connectivity).
    Fans with a lower-dimensional maximal cone are rejected.
    """
    if not fan.max_cones:
        return fan.rank == 0
    for c in fan.max_cones:
        if fan.cone(c).dim != fan.rank:
            raise ValueError("completeness undefined: maximal cone is not full-dimensional")
    wall_count: dict[frozenset[int], list[int]] = {}
    for k, c in enumerate(fan.max_cones):
        cone = fan.cone(c)
        ray_index = {fan.rays[i]: i for i in c}
        for members, _ in cone.facet_data:
            key = frozenset(ray_index[cone.generators[m]] for m in members)
            wall_count.setdefault(key, []).append(k)
    if any(len(v) != 2 for v in wall_count.values()):
        return False
    # connectivity of the wall-sharing graph
    parent = list(range(len(fan.max_cones)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in wall_count.values():
        parent[find(a)] = find(b)
    return len({find(i) for i in range(len(fan.max_cones))}) == 1


def star_subdivision(fan: Fan, stratum: Iterable[int], ray: Optional[Sequence[int]] = None) -> Fan:
    """Stellar subdivision of the fan at the cone spanned by the given ray
    indices, inserting `ray` (default: the primitive sum of the stratum's
    generators).

    Every maximal cone containing the stratum is replaced by the cones
    spanned by the new ray together with the facets that miss the stratum;
    all other cones are kept.  This is the combinatorial model of blowing
    up the closed torus orbit attached to the stratum.
    """
    tau = tuple(sorted(set(int(i) for i in stratum)))
    if not tau:
        raise ValueError("stratum must contain at least one ray")
    if any(i < 0 or i >= len(fan.rays) for i in tau):
        raise ValueError("stratum ray index out of range")
    hosts = [c for c in fan.max_cones if set(tau) <= set(c)]
    if not hosts:
        raise ValueError("stratum is not a cone of the fan")
    tau_cone = fan.cone(tau)
    host = fan.cone(hosts[0])
    if not _is_face(tau_cone, host):
        raise ValueError("stratum is not a cone of the fan")
    if ray is None:
        v = primitive(tuple(sum(fan.rays[i][d] for i in tau) for d in range(fan.rank)))
    else:
        v = primitive(tuple(int(x) for x in ray))
        if not tau_cone.relint_contains(v):
            raise ValueError("subdivision ray does not lie in the relative interior of the stratum")

    new_rays = list(fan.rays)
    if v in fan.rays:
        v_idx = fan.rays.index(v)
    else:
        v_idx = len(new_rays)
        new_rays.append(v)

    new_cones = []
    for c in fan.max_cones:
        if not set(tau) <= set(c):
            new_cones.append(c)
            continue
        cone = fan.cone(c)
        gen_to_fan = {fan.rays[i]: i for i in c}
        for members, _ in cone.facet_data:
            facet_fan_idx = {gen_to_fan[cone.generators[m]] for m in members}
            if set(tau) <= facet_fan_idx:
                continue
            new_cones.append(tuple(sorted(facet_fan_idx | {v_idx})))
    return Fan(tuple(new_rays), tuple(new_cones), fan.rank)


def _is_face(sub: Cone, cone: Cone) -> bool:
    """Exposed-face test: some functional vanishes exactly on sub's
    generators and is >= 1 on the remaining generators of `cone`."""
    sub_set = set(sub.generators)
    if not sub_set <= set(cone.generators):
        return False
    eqs = [(g, 0) for g in sub.generators]
    gte = [(g, 1) for g in cone.generators if g not in sub_set]
    return linear_feasible(cone.rank, equalities=eqs, gte=gte)


def is_refinement(fine: Fan, coarse: Fan) -> bool:
    """True iff every maximal cone of `fine` sits inside a cone of
    `coarse` and the two fans have the same support."""
    if fine.rank != coarse.rank:
        return False
    coarse_cones = [coarse.cone(c) for c in coarse.max_cones]
    assignment: dict[int, list[int]] = {k: [] for k in range(len(coarse_cones))}
    for i, c in enumerate(fine.max_cones):
        gens = [fine.rays[j] for j in c]
        hosts = [
            k
            for k, cc in enumerate(coarse_cones)
            if all(cc.contains(g) for g in gens)
        ]
        if not hosts:
            return False
        for k in hosts:
            assignment[k].append(i)
    for k, cc in enumerate(coarse_cones):
        if not _covers(fine, assignment[k], cc):
            return False
    return True


def _covers(fine: Fan, fine_indices: list[int], coarse_cone: Cone) -> bool:
    """Do the listed fine cones cover `coarse_cone`?  Wall criterion
    relative to the coarse cone: interior walls are shared by exactly two
    fine cones, boundary walls lie on coarse facets."""
    if not fine_indices:
        return False
    d = coarse_cone.dim
    cones = [fine.cone(fine.max_cones[i]) for i in fine_indices]
    for c in cones:
        if c.dim == d and set(c.generators) == set(coarse_cone.generators):
            return True  # the coarse cone itself appears
    if any(c.dim != d for c in cones):
        return False
    boundary_membership = [
        Cone(tuple(coarse_cone.generators[m] for m in members), coarse_cone.rank).membership_oracle()
        if members
        else (lambda x: all(v == 0 for v in x))
        for members, _ in coarse_cone.facet_data
    ]
    wall_count: dict[frozenset[Vec], int] = {}
    wall_gens: dict[frozenset[Vec], tuple] = {}
    for c in cones:
        for members, _ in c.facet_data:
            key = frozenset(c.generators[m] for m in members)
            wall_count[key] = wall_count.get(key, 0) + 1
            wall_gens[key] = tuple(c.generators[m] for m in members)
    for key, count in wall_count.items():
        if count == 2:
            continue
        if count != 1:
            return False
        gens = wall_gens[key]
        if not any(all(bm(g) for g in gens) for bm in boundary_membership):
            return False
    # connectivity among the fine pieces
    parent = list(range(len(cones)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    keys = {}
    for i, c in enumerate(cones):
        for members, _ in c.facet_data:
            key = frozenset(c.generators[m] for m in members)
            if key in keys:
                parent[find(keys[key])] = find(i)
            keys[key] = i
    return len({find(i) for i in range(len(cones))}) == 1


# ---------------------------------------------------------------------------
# two-dimensional resolution (continued-fraction corner walk)
# ---------------------------------------------------------------------------


def _det2(a: Vec, b: Vec) -> int:
    return a[0] * b[1] - a[1] * b[0]


def resolve_cone_2d(cone: Cone) -> list[Vec]:
    """Rays to insert so the 2D cone becomes a union of unimodular cones.

    Walks the boundary of the convex hull of the nonzero lattice points of
    the cone from one generator to the other; consecutive boundary points
    span determinant-one cones, so the inserted rays are exactly the
    Hilbert-basis members that are not generators.  Returns [] when the
    cone is already unimodular.
    """
    if cone.rank != 2:
        raise ValueError("2D resolution requires ambient rank 2")
    if len(cone.generators) != 2 or cone.dim != 2:
        raise ValueError("cone must be two-dimensional")
    u, w = cone.generators
    if _det2(u, w) < 0:
        u, w = w, u
    inserted = []
    cur = u
    while _det2(cur, w) > 1:
        # normalize cur to (1, 0) by a unimodular map, take the next hull
        # point (m, 1) with minimal m, and map it back
        x, y = cur
        g, p, q = _xgcd(x, y)
        assert g == 1
        a = p * w[0] + q * w[1]
        b = -y * w[0] + x * w[1]
        m = -((-a) // b)  # ceil(a / b); b = det(cur, w) > 1
        # inverse of [[p, q], [-y, x]] is [[x, -q], [y, p]]; pull (m, 1) back
        nxt = (m * x - q, m * y + p)
        inserted.append(nxt)
        cur = nxt
    return inserted


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t
