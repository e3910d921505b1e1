"""Exact integer linear algebra: Smith/Hermite normal forms and cokernels.

All matrices and vectors carry plain Python integers (arbitrary precision),
and every routine here is a pure function on immutable values.  Lattice
vectors are ordinary tuples of ints; their length is the ambient rank.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

Vec = tuple[int, ...]


def vec(coords: Iterable[int]) -> Vec:
    v = tuple(int(c) for c in coords)
    return v


def vadd(a: Vec, b: Vec) -> Vec:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def vsub(a: Vec, b: Vec) -> Vec:
    return tuple(x - y for x, y in zip(a, b, strict=True))


def vscale(k: int, a: Vec) -> Vec:
    return tuple(k * x for x in a)


def vdot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b, strict=True))


def is_zero(a: Sequence) -> bool:
    return all(x == 0 for x in a)


def primitive(v: Vec) -> Vec:
    """Divide a nonzero integer vector by the gcd of its entries.

    The direction is preserved: ``primitive(k*v) == primitive(v)`` for
    ``k > 0`` and ``== -primitive(v)`` for ``k < 0``.
    """
    g = math.gcd(*v) if v else 0
    if g == 0:
        raise ValueError("zero vector has no primitive representative")
    return tuple(x // g for x in v)


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix, row-major."""

    entries: tuple[tuple[int, ...], ...]
    rows: int
    cols: int

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "IntMatrix":
        data = tuple(tuple(int(x) for x in r) for r in rows)
        if data:
            width = len(data[0])
            if any(len(r) != width for r in data):
                raise ValueError("ragged rows")
        else:
            width = 0 if cols is None else cols
        if cols is not None and data and cols != width:
            raise ValueError("cols does not match row width")
        return cls(data, len(data), width)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls.from_rows(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)), cols=n)

    @classmethod
    def zero(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(tuple(tuple(0 for _ in range(cols)) for _ in range(rows)), rows, cols)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        ot = tuple(zip(*other.entries)) if other.entries else ()
        data = tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in ot)
            for row in self.entries
        )
        return IntMatrix(data, self.rows, other.cols)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.entries)) if self.entries else (), self.cols, self.rows)

    def apply(self, v: Sequence) -> tuple:
        """Matrix-vector product; keeps Fractions exact if ``v`` has any."""
        if len(v) != self.cols:
            raise ValueError("shape mismatch")
        return tuple(vdot(row, v) for row in self.entries)

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.entries[i][i] for i in range(min(self.rows, self.cols)))

    def is_diagonal(self) -> bool:
        return all(
            self.entries[i][j] == 0
            for i in range(self.rows)
            for j in range(self.cols)
            if i != j
        )


def det(M: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if M.rows != M.cols:
        raise ValueError("determinant of non-square matrix")
    n = M.rows
    if n == 0:
        return 1
    a = [list(row) for row in M.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot_row = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if pivot_row is None:
                return 0
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rank(M: IntMatrix) -> int:
    """Rank over Q, by exact Gaussian elimination."""
    a = [[Fraction(x) for x in row] for row in M.entries]
    r = 0
    for col in range(M.cols):
        pivot = next((i for i in range(r, M.rows) if a[i][col] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = a[r][col]
        for i in range(M.rows):
            if i != r and a[i][col] != 0:
                f = a[i][col] / inv
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
    return r


@dataclass(frozen=True)
class AbelianGroupStructure:
    """A finitely generated abelian group Z^free_rank + sum Z/d_i.

    The torsion invariants satisfy d_i >= 2 and d_i | d_{i+1}.
    """

    free_rank: int
    torsion_invariants: tuple[int, ...]

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        for d in self.torsion_invariants:
            if d < 2:
                raise ValueError("torsion invariant below 2")
        for a, b in zip(self.torsion_invariants, self.torsion_invariants[1:]):
            if b % a != 0:
                raise ValueError("torsion invariants violate divisibility chain")

    @property
    def is_free(self) -> bool:
        return not self.torsion_invariants

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion_invariants


def _pick_pivot(a, t, rows, cols):
    """Smallest nonzero |entry| in the trailing block; ties by (row, col)."""
    best = None
    for i in range(t, rows):
        for j in range(t, cols):
            x = a[i][j]
            if x != 0 and (best is None or abs(x) < abs(a[best[0]][best[1]])):
                best = (i, j)
    return best


def smith_normal_form(M: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form: returns (U, D, V) with D = U * M * V.

    U and V are unimodular, D is diagonal with non-negative entries
    satisfying d_i | d_{i+1}.  Pivoting always picks the smallest nonzero
    entry in absolute value (ties broken by position), so the transforms
    are reproducible.

    >>> _, D, _ = smith_normal_form(IntMatrix.from_rows([[2, 0], [0, 3]]))
    >>> D.diagonal()
    (1, 6)
    """
    rows, cols = M.rows, M.cols
    a = [list(r) for r in M.entries]
    u = [list(r) for r in IntMatrix.identity(rows).entries]
    v = [list(r) for r in IntMatrix.identity(cols).entries]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, k):
        a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, k):
        for r in a:
            r[dst] += k * r[src]
        for r in v:
            r[dst] += k * r[src]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    while True:
        pos = _pick_pivot(a, t, rows, cols)
        if pos is None:
            break
        swap_rows(t, pos[0])
        swap_cols(t, pos[1])
        while True:
            # clear column t then row t; a new pivot may surface, so loop
            done = True
            for i in range(t + 1, rows):
                if a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    add_row(i, t, -q)
                    if a[i][t] != 0:  # remainder strictly smaller: re-pivot
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, cols):
                if a[t][j] != 0:
                    q = a[t][j] // a[t][t]
                    add_col(j, t, -q)
                    if a[t][j] != 0:
                        swap_cols(t, j)
                        done = False
            if done:
                break
        # force divisibility of the whole trailing block by the pivot
        bad = next(
            (
                (i, j)
                for i in range(t + 1, rows)
                for j in range(t + 1, cols)
                if a[i][j] % a[t][t] != 0
            ),
            None,
        )
        if bad is not None:
            add_row(t, bad[0], 1)
            continue  # redo this slot; pivot magnitude strictly drops
        if a[t][t] < 0:
            negate_row(t)
        t += 1

    U = IntMatrix.from_rows(u, cols=rows)
    D = IntMatrix.from_rows(a, cols=cols)
    V = IntMatrix.from_rows(v, cols=cols)
    return U, D, V


def hermite_normal_form(M: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Row-style Hermite normal form: returns (H, U) with H = U * M.

    H is in row echelon form with positive pivots and entries above each
    pivot reduced into [0, pivot).
    """
    rows, cols = M.rows, M.cols
    a = [list(r) for r in M.entries]
    u = [list(r) for r in IntMatrix.identity(rows).entries]
    r = 0
    for col in range(cols):
        while True:
            live = [i for i in range(r, rows) if a[i][col] != 0]
            if not live:
                break
            i0 = min(live, key=lambda i: (abs(a[i][col]), i))
            if a[i0][col] < 0:
                a[i0] = [-x for x in a[i0]]
                u[i0] = [-x for x in u[i0]]
            a[r], a[i0] = a[i0], a[r]
            u[r], u[i0] = u[i0], u[r]
            finished = True
            for i in range(r + 1, rows):
                if a[i][col] != 0:
                    q = a[i][col] // a[r][col]
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[r])]
                    if a[i][col] != 0:
                        finished = False
            if finished:
                break
        if r < rows and a[r][col] != 0:
            for i in range(r):
                q = a[i][col] // a[r][col]
                if q != 0:
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[r])]
            r += 1
    H = IntMatrix.from_rows(a, cols=cols)
    U = IntMatrix.from_rows(u, cols=rows)
    return H, U


def cokernel_structure(M: IntMatrix) -> AbelianGroupStructure:
    """Structure of Z^rows modulo the column image of M."""
    _, D, _ = smith_normal_form(M)
    diag = [d for d in D.diagonal() if d != 0]
    free = M.rows - len(diag)
    torsion = tuple(d for d in diag if d >= 2)
    return AbelianGroupStructure(free, torsion)


def solve_rational(A: IntMatrix, b: Sequence) -> Optional[tuple[Fraction, ...]]:
    """One exact solution x of A x = b over Q, or None if inconsistent."""
    rows, cols = A.rows, A.cols
    a = [[Fraction(x) for x in row] + [Fraction(b[i])] for i, row in enumerate(A.entries)]
    pivots = []
    r = 0
    for col in range(cols):
        piv = next((i for i in range(r, rows) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = a[r][col]
        a[r] = [x / inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
    for i in range(r, rows):
        if a[i][cols] != 0:
            return None
    x = [Fraction(0)] * cols
    for i, col in enumerate(pivots):
        x[col] = a[i][cols]
    return tuple(x)


def solve_integer(A: IntMatrix, b: Sequence[int]) -> Optional[Vec]:
    """One integer solution x of A x = b, or None if none exists."""
    U, D, V = smith_normal_form(A)
    c = U.apply(tuple(int(x) for x in b))
    y = [0] * A.cols
    for i in range(A.rows):
        d = D.entries[i][i] if i < min(A.rows, A.cols) else 0
        if d == 0:
            if c[i] != 0:
                return None
        else:
            if c[i] % d != 0:
                return None
            y[i] = c[i] // d
    return V.apply(tuple(y))


def matrix_from_columns(cols: Sequence[Vec]) -> IntMatrix:
    height = len(cols[0]) if cols else 0
    return IntMatrix.from_rows(tuple(tuple(col[i] for col in cols) for i in range(height)), cols=len(cols))
