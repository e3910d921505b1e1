"""Toric varieties from fans: class groups, divisors, ampleness.

The divisor class group is presented as the cokernel of the character
lattice mapping into the free group on the rays; everything downstream
(divisor classes, the rank computations used by the complexity invariant)
reads off that one Smith normal form.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from toriclab.fan import Fan, is_complete, is_simplicial
from toriclab.lattice import (
    AbelianGroupStructure,
    IntMatrix,
    Vec,
    cokernel_structure,
    primitive,
    smith_normal_form,
    solve_integer,
    solve_rational,
    vdot,
)

Divisor = tuple  # one (rational) coefficient per ray, in ray order


@dataclass(frozen=True)
class ToricVariety:
    fan: Fan

    @property
    def dim(self) -> int:
        return self.fan.rank

    def divisor(self, coefficients: Sequence) -> Divisor:
        coeffs = tuple(Fraction(c) for c in coefficients)
        if len(coeffs) != len(self.fan.rays):
            raise ValueError("expected one coefficient per ray")
        return coeffs


@dataclass(frozen=True)
class DivisorClass:
    """Class of a torus-invariant divisor in Cl(X), in SNF coordinates.

    `free` are the coordinates on the free part, `torsion` the residues
    modulo the listed invariants.  Classes of divisors on the same variety
    compare meaningfully; the presentation is deterministic.
    """

    free: tuple[int, ...]
    torsion: tuple[int, ...]
    invariants: tuple[int, ...]

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.free) and all(x == 0 for x in self.torsion)

    def is_torsion(self) -> bool:
        return all(x == 0 for x in self.free)


@lru_cache(maxsize=None)
def _presentation(fan: Fan):
    """SNF data of the ray matrix: (U, diag, rank_of_image)."""
    rows = len(fan.rays)
    matrix = IntMatrix.from_rows(fan.rays, cols=fan.rank)
    U, D, _ = smith_normal_form(matrix)
    diag = [D.entries[i][i] if i < min(D.rows, D.cols) else 0 for i in range(rows)]
    image_rank = sum(1 for d in diag if d != 0)
    return U, tuple(diag), image_rank


def class_group(X: ToricVariety) -> AbelianGroupStructure:
    """Cl(X) as the cokernel of the character-to-divisor map."""
    matrix = IntMatrix.from_rows(X.fan.rays, cols=X.fan.rank)
    return cokernel_structure(matrix)


def divisor_class(X: ToricVariety, D: Sequence) -> DivisorClass:
    """Image of an integral torus-invariant divisor in Cl(X)."""
    coeffs = [Fraction(c) for c in D]
    if any(c.denominator != 1 for c in coeffs):
        raise ValueError("divisor_class needs integral coefficients; see divisor_class_q")
    d = tuple(int(c) for c in coeffs)
    if len(d) != len(X.fan.rays):
        raise ValueError("expected one coefficient per ray")
    U, diag, _ = _presentation(X.fan)
    e = U.apply(d)
    free = tuple(e[i] for i in range(len(d)) if diag[i] == 0)
    torsion = tuple(e[i] % diag[i] for i in range(len(d)) if diag[i] >= 2)
    invariants = tuple(diag[i] for i in range(len(d)) if diag[i] >= 2)
    return DivisorClass(free, torsion, invariants)


def divisor_class_q(X: ToricVariety, D: Sequence) -> tuple[Fraction, ...]:
    """Image of a Q-divisor in Cl(X) tensor Q (free coordinates only)."""
    d = tuple(Fraction(c) for c in D)
    if len(d) != len(X.fan.rays):
        raise ValueError("expected one coefficient per ray")
    U, diag, _ = _presentation(X.fan)
    e = U.apply(d)
    return tuple(e[i] for i in range(len(d)) if diag[i] == 0)


def principal_divisor(X: ToricVariety, character: Vec) -> Divisor:
    """div(chi^m): coefficient <m, u_i> on the ray u_i."""
    return tuple(Fraction(vdot(character, u)) for u in X.fan.rays)


def is_qcartier(X: ToricVariety, D: Sequence) -> bool:
    """On each maximal cone some rational linear functional agrees with
    minus the coefficients on the cone's rays."""
    coeffs = [Fraction(c) for c in D]
    for c in X.fan.max_cones:
        A = IntMatrix.from_rows([X.fan.rays[i] for i in c], cols=X.fan.rank)
        b = [-coeffs[i] for i in c]
        if solve_rational(A, b) is None:
            return False
    return True


def is_cartier(X: ToricVariety, D: Sequence) -> bool:
    """Like is_qcartier but the functional must be integral."""
    coeffs = [Fraction(c) for c in D]
    if any(c.denominator != 1 for c in coeffs):
        return False
    for c in X.fan.max_cones:
        A = IntMatrix.from_rows([X.fan.rays[i] for i in c], cols=X.fan.rank)
        b = [-int(coeffs[i]) for i in c]
        if solve_integer(A, b) is None:
            return False
    return True


def canonical_divisor(X: ToricVariety) -> Divisor:
    """K_X = minus the sum of the torus-invariant prime divisors."""
    return tuple(Fraction(-1) for _ in X.fan.rays)


def projective_space_fan(n: int) -> Fan:
    """Fan of P^n: the standard basis rays plus minus their sum."""
    if n < 1:
        raise ValueError("need n >= 1")
    rays = [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]
    rays.append(tuple(-1 for _ in range(n)))
    cones = list(itertools.combinations(range(n + 1), n))
    return Fan.from_data(rays, cones)


def weighted_projective_fan(weights: Sequence[int]) -> Fan:
    """Fan of the weighted projective space with the given weights.

    Convention: when the first weight is 1 the rays are the standard basis
    e_1..e_n together with v_0 = -(w_1 e_1 + ... + w_n e_n); otherwise the
    quotient lattice Z^{n+1} / Z.weights is presented through a Smith
    normal form and the images of the basis vectors are primitivized.
    Maximal cones are all n-element subsets of the n+1 rays.
    """
    w = [int(x) for x in weights]
    if len(w) < 2 or any(x <= 0 for x in w):
        raise ValueError("weights must be at least two positive integers")
    if math.gcd(*w) != 1:
        raise ValueError("weights must be coprime overall")
    n = len(w) - 1
    if w[0] == 1:
        rays = [tuple(-w[j + 1] for j in range(n))]
        rays += [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]
    else:
        # rows 2..n+1 of a unimodular matrix sending the weight vector to e_1
        # give a projection Z^{n+1} -> Z^n with kernel Z.weights
        column = IntMatrix.from_rows([[x] for x in w], cols=1)
        U, D, _ = smith_normal_form(column)
        assert D.entries[0][0] == 1
        proj = [U.entries[i] for i in range(1, n + 1)]
        rays = [primitive(tuple(row[i] for row in proj)) for i in range(n + 1)]
    cones = list(itertools.combinations(range(n + 1), n))
    return Fan.from_data(rays, cones, rank=n)


def is_fano(X: ToricVariety) -> bool:
    """Is -K ample?  Decided by strict convexity of the support function
    taking value one on every ray, across every wall of the fan.  Only
    complete simplicial fans are supported.
    """
    fan = X.fan
    if not fan.max_cones or not is_complete(fan) or not is_simplicial(fan):
        raise ValueError("ampleness test unsupported: fan must be complete and simplicial")
    functionals = {}
    for k, c in enumerate(fan.max_cones):
        A = IntMatrix.from_rows([fan.rays[i] for i in c], cols=fan.rank)
        m = solve_rational(A, [Fraction(1)] * len(c))
        if m is None:
            return False
        functionals[k] = m
    walls: dict[frozenset[int], list[int]] = {}
    for k, c in enumerate(fan.max_cones):
        cone = fan.cone(c)
        ray_index = {fan.rays[i]: i for i in c}
        for members, _ in cone.facet_data:
            key = frozenset(ray_index[cone.generators[m]] for m in members)
            walls.setdefault(key, []).append(k)
    for key, ks in walls.items():
        if len(ks) != 2:
            continue
        a, b = ks
        for v in set(fan.max_cones[b]) - key:
            if vdot(functionals[a], fan.rays[v]) >= 1:
                return False
        for v in set(fan.max_cones[a]) - key:
            if vdot(functionals[b], fan.rays[v]) >= 1:
                return False
    return True
