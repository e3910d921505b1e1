"""Independent brute-force oracles used by the tests.

Everything in this module recomputes expected values by a route different
from the library's own: gcds of minors instead of elimination, exhaustive
lattice scans instead of region arithmetic, angular walks instead of wall
counting.  numpy is used only here, with integer dtypes, to keep the scans
fast; the library itself stays pure.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import cmp_to_key

import numpy as np

from toriclab.fan import Fan


# ---------------------------------------------------------------- lattice


def minor_gcds(rows, kmax=None):
    """gcd of all k x k minors, for k = 1..kmax; 0 entries mean no nonzero
    minor of that size."""
    m = len(rows)
    n = len(rows[0]) if m else 0
    if kmax is None:
        kmax = min(m, n)
    out = []
    for k in range(1, kmax + 1):
        g = 0
        for ri in itertools.combinations(range(m), k):
            for ci in itertools.combinations(range(n), k):
                sub = [[rows[i][j] for j in ci] for i in ri]
                g = math.gcd(g, _det_int(sub))
        out.append(g)
    return out


def _det_int(a):
    a = [row[:] for row in a]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if pivot is None:
                return 0
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


# -------------------------------------------------------- 2D cone lattice


def det2(a, b):
    return a[0] * b[1] - a[1] * b[0]


def parallelogram_lattice_points(u, w):
    """Lattice points s*u + t*w with s, t in [0, 1]."""
    corners = [(0, 0), u, w, (u[0] + w[0], u[1] + w[1])]
    xs = [c[0] for c in corners]
    ys = [c[1] for c in corners]
    d = det2(u, w)
    pts = []
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            s_num = x * w[1] - y * w[0]
            t_num = -x * u[1] + y * u[0]
            s, t = Fraction(s_num, d), Fraction(t_num, d)
            if 0 <= s <= 1 and 0 <= t <= 1:
                pts.append((x, y))
    return pts


def _primitive2(v):
    g = math.gcd(v[0], v[1])
    return (v[0] // g, v[1] // g)


def hilbert_basis_2d(u, w):
    """Hilbert basis of the 2D cone spanned by u, w, by direct minimality
    testing inside the fundamental parallelogram."""
    u, w = _primitive2(u), _primitive2(w)
    if det2(u, w) < 0:
        u, w = w, u
    pts = [p for p in parallelogram_lattice_points(u, w) if p != (0, 0)]
    pts_set = set(pts)
    basis = []
    for p in pts:
        decomposable = any(
            (p[0] - q[0], p[1] - q[1]) in pts_set
            for q in pts
            if q != p and q != (0, 0) and (p[0] - q[0], p[1] - q[1]) != (0, 0)
        )
        if not decomposable:
            basis.append(p)
    return sorted(basis)


def expected_2d_insertions(u, w):
    """Hilbert basis members that are not generators, in boundary order
    (walking counterclockwise from the lex-smaller generator)."""
    u, w = sorted((_primitive2(u), _primitive2(w)))
    if det2(u, w) < 0:
        u, w = w, u
    inserted = [p for p in hilbert_basis_2d(u, w) if p not in (u, w)]

    def cmp(p, q):
        d = det2(p, q)
        return -1 if d > 0 else (1 if d < 0 else 0)

    return sorted(inserted, key=cmp_to_key(cmp))


# -------------------------------------------- singularity brute force


def classify_cone_brute(gens, box_factor=4):
    """Classify the affine toric variety of a simplicial cone (no
    boundary) by scanning every primitive lattice point with coordinates
    up to box_factor times the largest generator coordinate.

    Returns 'terminal', 'canonical' or 'klt' according to the minimum of
    the discrepancy function over the exceptional points found.
    """
    G = np.array(gens, dtype=np.int64)  # rows are generators
    n = G.shape[1]
    assert G.shape[0] == n, "oracle needs a simplicial full-dimensional cone"
    det = _det_int([list(map(int, row)) for row in G])
    assert det != 0
    adj = _adjugate_int(G.T)  # integer matrix with G.T @ adj/det = identity
    L = box_factor * int(np.max(np.abs(G)))
    axes = [np.arange(-L, L + 1, dtype=np.int64) for _ in range(n)]
    grids = np.meshgrid(*axes, indexing="ij")
    pts = np.stack([g.ravel() for g in grids], axis=1)
    pts = pts[np.any(pts != 0, axis=1)]
    lam = pts @ adj.T  # det * barycentric coordinates
    sign = 1 if det > 0 else -1
    inside = np.all(sign * lam >= 0, axis=1)
    pts = pts[inside]
    lam = lam[inside]
    prim = np.gcd.reduce(np.abs(pts), axis=1) == 1
    pts = pts[prim]
    lam = lam[prim]
    gen_set = {tuple(map(int, g)) for g in G}
    keep = np.array([tuple(map(int, p)) not in gen_set for p in pts])
    pts = pts[keep]
    lam = lam[keep]
    if len(pts) == 0:
        return "terminal"
    # discrepancy of v is sum(lam)/|det|; compare with 1 in integers
    sums = sign * np.sum(lam, axis=1)
    absdet = abs(det)
    if np.any(sums < absdet):
        return "klt"
    if np.any(sums == absdet):
        return "canonical"
    return "terminal"


def _adjugate_int(M):
    M = [[int(x) for x in row] for row in M]
    n = len(M)
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [
                [M[r][c] for c in range(n) if c != j] for r in range(n) if r != i
            ]
            adj[j][i] = (-1) ** (i + j) * _det_int(minor)
    return np.array(adj, dtype=np.int64)


def classify_pair_brute(fan: Fan, boundary, box_factor=4):
    """Pure-python version for small pairs with rational coefficients;
    scans primitive points of the support, computing psi cone by cone."""
    from toriclab.pairs import ToricPair, _psi

    pair = ToricPair.from_fan(fan, boundary)
    if any(b > 1 for b in pair.boundary):
        return "not-lc"
    psi = _psi(pair)
    L = box_factor * max(abs(x) for r in fan.rays for x in r)
    values = []
    rays = set(fan.rays)
    for pt in itertools.product(range(-L, L + 1), repeat=fan.rank):
        if all(x == 0 for x in pt) or math.gcd(*pt) != 1 or pt in rays:
            continue
        k = psi.cone_index_of(pt)
        if k is None:
            continue
        values.append(Fraction(sum(c * x for c, x in zip(psi.piece(k), pt))))
    if any(b == 1 for b in pair.boundary):
        return "lc"
    if not values:
        return "terminal"
    worst = min(values)
    if worst < 1:
        return "klt"
    return "canonical" if worst == 1 else "terminal"


# ------------------------------------------------------- 2D completeness


def _angle_cmp(a, b):
    def half(v):
        return 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1

    ha, hb = half(a), half(b)
    if ha != hb:
        return -1 if ha < hb else 1
    c = det2(a, b)
    return -1 if c > 0 else (1 if c < 0 else 0)


def complete_2d_oracle(fan: Fan) -> bool:
    """Elementary criterion: rays in cyclic order, every consecutive pair
    spans a maximal cone, every gap less than a half turn."""
    if fan.rank != 2 or not fan.max_cones:
        raise ValueError("oracle needs a 2D fan with cones")
    order = sorted(range(len(fan.rays)), key=cmp_to_key(lambda i, j: _angle_cmp(fan.rays[i], fan.rays[j])))
    k = len(order)
    cones = {tuple(sorted(c)) for c in fan.max_cones}
    if len(cones) != k:
        return False
    for t in range(k):
        i, j = order[t], order[(t + 1) % k]
        if det2(fan.rays[i], fan.rays[j]) <= 0:
            return False
        if tuple(sorted((i, j))) not in cones:
            return False
    return True


# ------------------------------------------------------------- polygons


def dual_polygon_halfplane_oracle(vertices):
    """Vertices of { y : <v, y> >= -1 } for a polygon with vertices listed
    counterclockwise and the origin interior: consecutive constraint lines
    intersect in the dual's vertices."""
    k = len(vertices)
    out = set()
    for i in range(k):
        a = vertices[i]
        b = vertices[(i + 1) % k]
        d = det2(a, b)
        assert d != 0
        y = (Fraction(-b[1] + a[1], d), Fraction(b[0] - a[0], d))
        assert a[0] * y[0] + a[1] * y[1] == -1
        assert b[0] * y[0] + b[1] * y[1] == -1
        out.add(y)
    return out


def reflexive_polygons_boundary_walk(box=4):
    """Enumerate one-interior-point polygons as cycles of primitive points
    with consecutive determinant one (the empty-fan-triangle property),
    reduced by the library's normal form only at the very end.

    Returns the set of normal-form vertex tuples.
    """
    from toriclab.polytope import Polytope, unimodular_normal_form

    pts = [
        (x, y)
        for x in range(-box, box + 1)
        for y in range(-box, box + 1)
        if (x, y) != (0, 0) and math.gcd(x, y) == 1
    ]
    pts.sort(key=cmp_to_key(_angle_cmp))
    npts = len(pts)
    succ = [[j for j in range(npts) if det2(pts[i], pts[j]) == 1] for i in range(npts)]
    found = set()

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    def close_and_record(chain):
        b = [pts[i] for i in chain]
        verts = []
        k = len(b)
        for i in range(k):
            if cross(b[(i - 1) % k], b[i], b[(i + 1) % k]) != 0:
                verts.append(b[i])
        if len(verts) < 3:
            return
        poly = Polytope.hull(verts, rank=2)
        found.add(unimodular_normal_form(poly).vertices)

    def dfs(start, chain):
        last = chain[-1]
        for j in succ[last]:
            if j == start and len(chain) >= 3:
                # boundary turns must never bend outward
                b = [pts[i] for i in chain]
                k = len(b)
                if all(cross(b[(i - 1) % k], b[i], b[(i + 1) % k]) >= 0 for i in range(k)):
                    close_and_record(chain)
                continue
            if j <= start or j <= last:
                continue  # keep the walk strictly increasing in angle
            if len(chain) >= 2 and cross(pts[chain[-2]], pts[last], pts[j]) < 0:
                continue
            dfs(start, chain + [j])

    for s in range(npts):
        dfs(s, [s])
    return found


# ------------------------------------------------------------- markov


def markov_scan_small(bound):
    """All Markov triples with c <= bound by a full triple loop."""
    out = set()
    for a in range(1, bound + 1):
        for b in range(a, bound + 1):
            for c in range(b, bound + 1):
                if a * a + b * b + c * c == 3 * a * b * c:
                    out.add((a, b, c))
    return out


def markov_scan_quadratic(bound):
    """All Markov triples with c <= bound: for each (a, b) solve the
    quadratic in c exactly."""
    out = set()
    for a in range(1, bound + 1):
        for b in range(a, bound + 1):
            disc = 9 * a * a * b * b - 4 * (a * a + b * b)
            if disc < 0:
                continue
            root = math.isqrt(disc)
            if root * root != disc:
                continue
            for c2 in ((3 * a * b + root), (3 * a * b - root)):
                if c2 % 2 == 0 and b <= c2 // 2 <= bound:
                    out.add((a, b, c2 // 2))
    return out


# ------------------------------------------------------ random instances


def random_complete_2d_fan(rng, max_rays=8, coord=5) -> Fan:
    """Seeded random complete 2D fan: random primitive rays (axes added so
    every angular gap stays below a half turn), consecutive pairs as
    cones."""
    rays = {(1, 0), (0, 1), (-1, 0), (0, -1)}
    target = rng.randrange(4, max_rays + 1)
    while len(rays) < target:
        x = rng.randrange(-coord, coord + 1)
        y = rng.randrange(-coord, coord + 1)
        if (x, y) != (0, 0):
            g = math.gcd(x, y)
            rays.add((x // g, y // g))
    order = sorted(rays, key=cmp_to_key(_angle_cmp))
    k = len(order)
    return Fan.from_data(order, [(i, (i + 1) % k) for i in range(k)])


def random_decomposition(rng, pair):
    """Random decomposition of a reduced boundary: shuffle the rays into
    groups, then sometimes split one group's unit coefficient into two
    fractional parts."""
    from toriclab.complexity import Decomposition

    nrays = len(pair.fan.rays)
    indices = list(range(nrays))
    rng.shuffle(indices)
    groups = []
    while indices:
        size = rng.randrange(1, len(indices) + 1)
        groups.append(frozenset(indices[:size]))
        indices = indices[size:]
    parts = [(Fraction(1), g) for g in groups]
    if rng.random() < 0.5:
        alpha = rng.choice([Fraction(1, 2), Fraction(1, 3), Fraction(1, 4), Fraction(2, 3)])
        victim = rng.randrange(len(parts))
        _, g = parts[victim]
        parts[victim] = (alpha, g)
        parts.append((1 - alpha, g))
    return Decomposition.of(parts)
