"""Decompositions of toric boundaries and the complexity invariant.

A decomposition writes the boundary as a weighted sum of reduced
torus-invariant divisors.  Its complexity is

    c  =  dim X  +  rank of the span of the part classes in Cl tensor Q
          -  sum of the weights,

computed in exact rational arithmetic.  For a toric log Calabi-Yau pair
with its prime decomposition this is zero, and it can never be negative
for a log CY pair; a negative value here always means a bug.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from toriclab.fan import Fan
from toriclab.lattice import IntMatrix, rank as matrix_rank
from toriclab.pairs import ToricPair, crepant_pullback
from toriclab.toric import divisor_class


@dataclass(frozen=True)
class Decomposition:
    """Formal sum of weighted reduced divisors: parts (alpha_i, B_i) with
    B_i a set of ray indices."""

    parts: tuple[tuple[Fraction, frozenset[int]], ...]

    def __post_init__(self):
        norm = []
        for alpha, rays in self.parts:
            if alpha < 0:
                raise ValueError("part weights must be non-negative")
            if not rays:
                raise ValueError("empty part in decomposition")
            norm.append((Fraction(alpha), frozenset(int(i) for i in rays)))
        object.__setattr__(self, "parts", tuple(norm))

    @classmethod
    def of(cls, parts: Iterable[tuple[object, Iterable[int]]]) -> "Decomposition":
        return cls(tuple((Fraction(a), frozenset(b)) for a, b in parts))

    def coefficient_vector(self, ray_count: int) -> tuple[Fraction, ...]:
        coeffs = [Fraction(0)] * ray_count
        for alpha, rays in self.parts:
            for i in rays:
                if i >= ray_count:
                    raise ValueError("part mentions a ray index outside the fan")
                coeffs[i] += alpha
        return tuple(coeffs)

    @property
    def norm(self) -> Fraction:
        return sum((alpha for alpha, _ in self.parts), Fraction(0))


@dataclass(frozen=True)
class ComplexityReport:
    rho: int
    norm: Fraction
    dim: int
    c: Fraction

    def __post_init__(self):
        if self.c != self.dim + self.rho - self.norm:
            raise ValueError("inconsistent complexity report")


def decomposition_by_primes(pair: ToricPair) -> Decomposition:
    """One singleton part per ray carrying a positive coefficient."""
    return Decomposition.of(
        (b, (i,)) for i, b in enumerate(pair.boundary) if b > 0
    )


def complexity(pair: ToricPair, decomposition: Decomposition) -> ComplexityReport:
    """Complexity of the decomposition; raises if it does not decompose
    the pair's boundary."""
    coeffs = decomposition.coefficient_vector(len(pair.fan.rays))
    for i, (got, want) in enumerate(zip(coeffs, pair.boundary)):
        if got != want:
            raise ValueError(
                f"decomposition mismatch at ray {pair.fan.rays[i]}: sums to {got}, boundary has {want}"
            )
    class_rows = []
    for _, rays in decomposition.parts:
        indicator = [1 if i in rays else 0 for i in range(len(pair.fan.rays))]
        class_rows.append(divisor_class(pair.variety, indicator).free)
    if class_rows:
        rho = matrix_rank(IntMatrix.from_rows(class_rows, cols=len(class_rows[0])))
    else:
        rho = 0
    norm = decomposition.norm
    c = pair.dim + rho - norm
    return ComplexityReport(rho=rho, norm=norm, dim=pair.dim, c=c)


@dataclass(frozen=True)
class BmszReport:
    c: Fraction
    floor_two_c: Optional[int]


def assert_bmsz(pair: ToricPair, decomposition: Decomposition) -> BmszReport:
    """Check the non-negativity law c >= 0 for a log CY pair and, when
    c < 1, report floor(2c) (the number of components the associated toric
    boundary is allowed to replace)."""
    report = complexity(pair, decomposition)
    if report.c < 0:
        raise RuntimeError(
            f"BMSZ violation: complexity {report.c} < 0; this indicates an implementation bug"
        )
    floor_two_c = None
    if report.c < 1:
        floor_two_c = int(2 * report.c)  # floor of a non-negative rational
        # floor(B) is supported on boundary rays by construction, so the
        # toric consistency of (X, floor(B)) holds in this model
    return BmszReport(c=report.c, floor_two_c=floor_two_c)


def complexity_transport(
    pair: ToricPair, fine: Fan, decomposition: Decomposition
) -> tuple[ComplexityReport, ComplexityReport]:
    """Complexity before and after a crepant pullback.

    The decomposition on the refinement keeps the old parts (re-indexed
    through the ray vectors) and adds one singleton part per new ray with
    its pulled-back coefficient.  When all new coefficients are one the
    two complexities agree exactly; this is asserted.
    """
    pulled = crepant_pullback(pair, fine)
    before = complexity(pair, decomposition)

    fine_index = {ray: i for i, ray in enumerate(fine.rays)}
    new_parts = []
    for alpha, rays in decomposition.parts:
        new_parts.append((alpha, frozenset(fine_index[pair.fan.rays[i]] for i in rays)))
    old_rays = set(pair.fan.rays)
    new_coeff_values = []
    for i, ray in enumerate(fine.rays):
        if ray not in old_rays:
            new_parts.append((pulled.boundary[i], frozenset((i,))))
            new_coeff_values.append(pulled.boundary[i])
    after = complexity(pulled, Decomposition.of(new_parts))
    if all(v == 1 for v in new_coeff_values) and after.c != before.c:
        raise RuntimeError(
            f"complexity changed under a reduced crepant pullback ({before.c} -> {after.c}); bug"
        )
    return before, after
