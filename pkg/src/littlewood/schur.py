"""Combinatorial ground truth: tableau counting and exact character values.

Everything here is independent of the modification rules: coefficients come
from explicit tableau enumeration and evaluations from determinant formulas
over exact rationals.  The verification layer plays these two worlds
against each other.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .partitions import InadmissibleInput, Partition, SkewShape, partitions_of


class SingularEvaluation(ValueError):
    """An alternant denominator vanished at the chosen point."""


@lru_cache(maxsize=None)
def lr_coefficient(lam: tuple, mu: tuple, nu: tuple) -> int:
    """Littlewood-Richardson coefficient by direct tableau enumeration.

    Counts fillings of the skew diagram lam/mu with content nu that
    weakly increase along rows, strictly increase down columns, and whose
    reverse reading word is a lattice word.
    """
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if not lam.contains(mu) or lam.size != mu.size + nu.size:
        return 0
    if nu.size == 0:
        return 1
    inner = list(mu) + [0] * (len(lam) - len(mu))
    # cells in reading order: top to bottom, right to left within a row
    cells = [
        (r, c)
        for r in range(len(lam))
        for c in range(lam[r] - 1, inner[r] - 1, -1)
    ]
    remaining = list(nu)
    counts = [0] * (len(nu) + 1)
    grid: dict[tuple[int, int], int] = {}

    def fill(idx: int) -> int:
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        vmax = grid.get((r, c + 1), len(nu))
        above = grid.get((r - 1, c))
        vmin = above + 1 if above is not None else 1
        total = 0
        for v in range(vmin, vmax + 1):
            if remaining[v - 1] == 0:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            remaining[v - 1] -= 1
            counts[v] += 1
            grid[(r, c)] = v
            total += fill(idx + 1)
            del grid[(r, c)]
            counts[v] -= 1
            remaining[v - 1] += 1
        return total

    return fill(0)


def skew_expand(shape: SkewShape) -> dict[Partition, int]:
    """Expansion of a skew functor into straight ones, by tableau counting."""
    out: dict[Partition, int] = {}
    for nu in partitions_of(shape.size):
        c = lr_coefficient(shape.outer, shape.inner, nu)
        if c:
            out[nu] = c
    return out


@lru_cache(maxsize=None)
def _h_values(xs: tuple, kmax: int) -> tuple:
    """Complete homogeneous values h_0..h_kmax at a point.

    Grown one variable at a time through h_k(S + x) = h_k(S) + x h_{k-1}(S + x),
    which keeps every intermediate value small and exact.
    """
    h = [Fraction(1)] + [Fraction(0)] * kmax
    for x in xs:
        for k in range(1, kmax + 1):
            h[k] += x * h[k - 1]
    return tuple(h)


def _det(rows: list[list[Fraction]]) -> Fraction:
    """Exact determinant by elimination with pivoting."""
    n = len(rows)
    m = [list(row) for row in rows]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col]:
                f = m[r][col] * inv
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return det


def eval_skew(shape: SkewShape, xs: Iterable) -> Fraction:
    """Value of a skew Schur polynomial at an exact point.

    Computed through the skew complete-homogeneous determinant; the tests
    pin this against the expansion route through lr_coefficient.
    """
    lam, mu = shape.outer, shape.inner
    ell = len(lam)
    if ell == 0:
        return Fraction(1)
    xs = tuple(Fraction(v) for v in xs)
    inner = list(mu) + [0] * (ell - len(mu))
    kmax = lam[0] + ell
    h = _h_values(xs, kmax)

    def hh(k: int) -> Fraction:
        return h[k] if k >= 0 else Fraction(0)

    rows = [
        [hh(lam[i] - inner[j] - i + j) for j in range(ell)] for i in range(ell)
    ]
    return _det(rows)


def eval_schur(lam, xs: Iterable) -> Fraction:
    """Value of a straight Schur polynomial at an exact point."""
    lam = Partition(lam)
    xs = tuple(Fraction(v) for v in xs)
    if len(lam) > len(xs):
        return Fraction(0)
    return eval_skew(SkewShape(lam, Partition()), xs)


def eval_elementary(k: int, vals: Iterable) -> Fraction:
    """Elementary symmetric value e_k of an arbitrary finite alphabet."""
    if k < 0:
        return Fraction(0)
    e = [Fraction(1)] + [Fraction(0)] * k
    for v in vals:
        v = Fraction(v)
        for j in range(k, 0, -1):
            e[j] += v * e[j - 1]
    return e[k]


def eval_homogeneous(k: int, vals: Iterable) -> Fraction:
    """Complete homogeneous value h_k of an arbitrary finite alphabet."""
    if k < 0:
        return Fraction(0)
    return _h_values(tuple(Fraction(v) for v in vals), k)[k]


def eval_gl_rational(lam, lam2, xs: Sequence) -> Fraction:
    """Rational character value for a two-sided weight, by alternants.

    The weight puts the first partition at the front, the negated reverse
    of the second at the back, zeros between; the value is the ratio of the
    shifted-power alternant to the Vandermonde one, allowing negative
    exponents.
    """
    lam = Partition(lam)
    lam2 = Partition(lam2)
    xs = tuple(Fraction(v) for v in xs)
    n = len(xs)
    if len(lam) + len(lam2) > n:
        raise InadmissibleInput(
            f"pair {tuple(lam)}, {tuple(lam2)} needs more than {n} variables"
        )
    if any(v == 0 for v in xs) or len(set(xs)) != n:
        raise SingularEvaluation(f"need distinct nonzero values, got {xs}")
    weight = list(lam) + [0] * (n - len(lam) - len(lam2)) + [
        -p for p in reversed(lam2)
    ]
    num = [[x ** (weight[i] + n - 1 - i) for x in xs] for i in range(n)]
    den = [[x ** (n - 1 - i) for x in xs] for i in range(n)]
    return _det(num) / _det(den)


def eval_sp_character(lam, xs: Sequence) -> Fraction:
    """Symplectic irreducible character value from the odd-power alternant.

    A secondary oracle: it shares nothing with the skew machinery, so
    matching the alternating sum of skew values against it is a real check.
    """
    lam = Partition(lam)
    xs = tuple(Fraction(v) for v in xs)
    n = len(xs)
    if len(lam) > n:
        raise InadmissibleInput(f"{tuple(lam)} has more than {n} rows")
    if any(v == 0 for v in xs):
        raise SingularEvaluation("zero is not a torus value")
    padded = list(lam) + [0] * (n - len(lam))
    num = [
        [x ** (padded[i] + n - i) - x ** -(padded[i] + n - i) for x in xs]
        for i in range(n)
    ]
    den = [[x ** (n - i) - x ** -(n - i) for x in xs] for i in range(n)]
    d = _det(den)
    if d == 0:
        raise SingularEvaluation(f"denominator alternant vanished at {xs}")
    return _det(num) / d
