"""Markov triples and the weighted hypersurface attached to adjacent pairs.

A Markov triple solves a^2 + b^2 + c^2 = 3abc in positive integers.  Each
triple, together with its adjacent triple (replace the largest entry c by
d = 3ab - c), determines the trinomial hypersurface

    V(x1 x2 + x3^c + x4^d)  inside  P(a^2, b^2, d, c),

a degeneration of the projective plane.  This module enumerates triples by
Vieta jumping and computes the numerics of those hypersurfaces: degree,
amplitude, well-formedness and quasismoothness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True, order=True)
class MarkovTriple:
    a: int
    b: int
    c: int

    def __post_init__(self):
        if not (0 < self.a <= self.b <= self.c):
            raise ValueError("triple must be positive and sorted")
        if self.a**2 + self.b**2 + self.c**2 != 3 * self.a * self.b * self.c:
            raise ValueError(f"({self.a},{self.b},{self.c}) does not solve the Markov equation")

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)


def enumerate_markov(bound: int) -> list[MarkovTriple]:
    """All Markov triples with largest entry at most `bound`, found by
    Vieta jumping from (1,1,1)."""
    if bound < 1:
        raise ValueError("bound must be positive")
    seen: set[tuple[int, int, int]] = set()
    stack = [(1, 1, 1)]
    while stack:
        t = stack.pop()
        if t in seen or t[2] > bound:
            continue
        seen.add(t)
        a, b, c = t
        for jumped in (
            (3 * b * c - a, b, c),
            (a, 3 * a * c - b, c),
            (a, b, 3 * a * b - c),
        ):
            stack.append(tuple(sorted(jumped)))
    return [MarkovTriple(*t) for t in sorted(seen, key=lambda t: (t[2], t[1], t[0]))]


def adjacent_triple(t: MarkovTriple) -> MarkovTriple:
    """Vieta jump of the largest entry: (a, b, c) -> sorted (a, b, 3ab-c)."""
    d = 3 * t.a * t.b - t.c
    assert d > 0, "the jump of the maximal entry of a Markov triple is positive"
    return MarkovTriple(*sorted((t.a, t.b, d)))


@dataclass(frozen=True)
class HkwSurfaceData:
    """Numerics of V(x1 x2 + x3^c + x4^d) in P(a^2, b^2, d, c)."""

    triple: MarkovTriple
    weights: tuple[int, int, int, int]
    degree: int
    amplitude: int
    wellformed: bool
    quasismooth: bool
    fano: bool

    def __post_init__(self):
        c, d = self.weights[3], self.weights[2]
        if self.degree != c * d:
            raise ValueError("degree must equal c*d")
        if self.amplitude != sum(self.weights) - self.degree:
            raise ValueError("amplitude must be sum of weights minus degree")


def hkw_surface(t: MarkovTriple) -> HkwSurfaceData:
    """Weighted-hypersurface data for the triple and its adjacent one."""
    a, b, c = t.as_tuple()
    d = 3 * a * b - c
    weights = (a * a, b * b, d, c)
    degree = c * d
    # c*d = a^2 + b^2 is forced by the Markov equation; keep it checked
    assert degree == a * a + b * b
    amplitude = sum(weights) - degree
    wellformed = all(
        math.gcd(*(w for j, w in enumerate(weights) if j != i)) == 1
        for i in range(4)
    )
    # Jacobian criterion for the trinomial x1 x2 + x3^c + x4^d: the partials
    # are (x2, x1, c x3^{c-1}, d x4^{d-1}).  If c == 1 or d == 1 one partial
    # is a nonzero constant, so there is no common zero at all; otherwise
    # the common zero locus is x1 = x2 = x3 = x4 = 0, which the weighted
    # projective space excludes.  Either way the affine cone is smooth away
    # from the origin.
    quasismooth = (c == 1 or d == 1) or (c >= 2 and d >= 2)
    fano = amplitude > 0
    return HkwSurfaceData(
        triple=t,
        weights=weights,
        degree=degree,
        amplitude=amplitude,
        wellformed=wellformed,
        quasismooth=quasismooth,
        fano=fano,
    )
