"""Modification rules: homological degree and target label for each group.

Every rule exists in two independent forms.  The border-strip form rips
strips of a prescribed length off the partition until it becomes admissible,
accumulating the degree from the column counts of the strips.  The
reflection-group form Bott-sorts a staircase-shifted transpose and reads the
degree off the word length.  The two forms provably agree; the test suite
checks that agreement exhaustively on small inputs and statistically on
large ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Union

from .partitions import (
    Partition,
    PartitionPair,
    is_admissible,
    remove_border_strip,
    sigma_conjugate,
)
from .weyl import greedy_modify, sort_length


class RuleDisagreement(RuntimeError):
    """The two formulations of a rule returned different outcomes."""


@dataclass(frozen=True)
class ModOutcome:
    """Either Vanishing, or concentration in one degree with a target label."""

    vanishes: bool
    degree: Optional[int] = None
    tau: Union[Partition, PartitionPair, None] = None

    @classmethod
    def vanishing(cls) -> "ModOutcome":
        return cls(True)

    @classmethod
    def concentrated(cls, degree: int, tau) -> "ModOutcome":
        return cls(False, degree, tau)


@lru_cache(maxsize=None)
def modrule_sp_strip(lam: tuple, n: int) -> ModOutcome:
    """Symplectic border-strip rule.

    While the partition has more than n rows, remove a border strip of
    length 2(rows - n - 1); an empty or impossible strip means all homology
    vanishes, otherwise the strip's column count adds to the degree.
    """
    cur = Partition(lam)
    degree = 0
    while len(cur) > n:
        strip = 2 * (len(cur) - n - 1)
        if strip <= 0:
            return ModOutcome.vanishing()
        removed = remove_border_strip(cur, strip)
        if removed is None:
            return ModOutcome.vanishing()
        cur, cols = removed
        degree += cols
    return ModOutcome.concentrated(degree, cur)


def modrule_sp_weyl(lam, n: int) -> ModOutcome:
    """Symplectic rule via the signed sorting of the shifted transpose."""
    lam = Partition(lam)
    out = greedy_modify(lam.transpose(), "BC", n)
    if out.singular:
        return ModOutcome.vanishing()
    return ModOutcome.concentrated(out.length, out.result.transpose())


@lru_cache(maxsize=None)
def modrule_o_strip(lam: tuple, m: int) -> ModOutcome:
    """Orthogonal border-strip rule.

    Strips have length (2 rows - m) and contribute one less than their
    column count; removal stops at the first admissible partition, and an
    odd number of removed strips flips the result to its sigma conjugate.
    """
    cur = Partition(lam)
    degree = 0
    strips = 0
    while not is_admissible("o", m, cur):
        strip = 2 * len(cur) - m
        if strip <= 0:
            return ModOutcome.vanishing()
        removed = remove_border_strip(cur, strip)
        if removed is None:
            return ModOutcome.vanishing()
        cur, cols = removed
        degree += cols - 1
        strips += 1
    if strips % 2:
        cur = sigma_conjugate(cur, m)
    return ModOutcome.concentrated(degree, cur)


def modrule_o_weyl(lam, m: int) -> ModOutcome:
    """Orthogonal rule via the even-signed sorting of the shifted transpose."""
    lam = Partition(lam)
    out = greedy_modify(lam.transpose(), "D", m)
    if out.singular:
        return ModOutcome.vanishing()
    return ModOutcome.concentrated(out.length, out.result.transpose())


@lru_cache(maxsize=None)
def modrule_gl_strip(lam: tuple, lam2: tuple, n: int) -> ModOutcome:
    """Two-sided border-strip rule.

    While the row counts sum to more than n, remove strips of length
    (rows + rows' - n - 1) from both partitions in lockstep; each step
    contributes the two column counts minus one.
    """
    cur = Partition(lam)
    cur2 = Partition(lam2)
    degree = 0
    while len(cur) + len(cur2) > n:
        strip = len(cur) + len(cur2) - n - 1
        if strip <= 0:
            return ModOutcome.vanishing()
        removed = remove_border_strip(cur, strip)
        removed2 = remove_border_strip(cur2, strip)
        if removed is None or removed2 is None:
            return ModOutcome.vanishing()
        cur, cols = removed
        cur2, cols2 = removed2
        degree += cols + cols2 - 1
    return ModOutcome.concentrated(degree, PartitionPair(cur, cur2))


def _gl_window(lam: Partition, lam2: Partition, n: int):
    """Shifted two-lane window for the two-sided action, in reading order.

    The left lane encodes the second partition through the complement
    construction (reverse, negate, add n), the right lane is the shifted
    transpose of the first.  Returns (window values, left width, right
    width) with the tail-inertness certificate already established.
    """
    lt = lam.transpose()
    l2t = lam2.transpose()
    width_l = max(lam2[0] if lam2 else 0, len(lam) - n, 1) + 2
    width_r = max(lam[0] if lam else 0, len(lam2) - n, 1) + 2
    while True:
        left = [
            n + d - (l2t[d - 1] if d <= len(l2t) else 0)
            for d in range(width_l, 0, -1)
        ]
        right = [
            (lt[j - 1] if j <= len(lt) else 0) + 1 - j
            for j in range(1, width_r + 1)
        ]
        window = left + right
        if max(window) < n + width_l + 1 and min(window) > -width_r:
            return window, width_l, width_r
        width_l *= 2
        width_r *= 2


@lru_cache(maxsize=None)
def modrule_gl_weyl(lam: tuple, lam2: tuple, n: int) -> ModOutcome:
    """Two-sided rule via sorting the merged two-lane window.

    Repeated values anywhere mean vanishing; otherwise the inversion count
    of the merged window is the degree, and splitting the sorted window at
    the lane boundary recovers the target pair (undo the complement on the
    left, transpose on the right).
    """
    lam = Partition(lam)
    lam2 = Partition(lam2)
    window, width_l, width_r = _gl_window(lam, lam2, n)
    length = sort_length(window)
    if length is None:
        return ModOutcome.vanishing()
    ordered = sorted(window, reverse=True)
    left = ordered[:width_l]
    right = ordered[width_l:]
    tau_t = [right[j - 1] + j - 1 for j in range(1, width_r + 1)]
    tau2_t = [n + d - left[width_l - d] for d in range(1, width_l + 1)]
    tau = Partition(tau_t).transpose()
    tau2 = Partition(tau2_t).transpose()
    return ModOutcome.concentrated(length, PartitionPair(tau, tau2))


def modrule(group: str, dim: int, lam, lam2=None, rule: str = "both") -> ModOutcome:
    """Dispatch a rule by group; rule='both' insists the two forms agree."""
    group = group.lower()
    lam = Partition(lam)
    if group == "gl":
        if lam2 is None:
            raise ValueError("the gl rule needs a pair of partitions")
        lam2 = Partition(lam2)
        strip = lambda: modrule_gl_strip(lam, lam2, dim)
        weyl = lambda: modrule_gl_weyl(lam, lam2, dim)
    elif group == "sp":
        if lam2 is not None:
            raise ValueError("only the gl rule takes a second partition")
        strip = lambda: modrule_sp_strip(lam, dim)
        weyl = lambda: modrule_sp_weyl(lam, dim)
    elif group == "o":
        if lam2 is not None:
            raise ValueError("only the gl rule takes a second partition")
        strip = lambda: modrule_o_strip(lam, dim)
        weyl = lambda: modrule_o_weyl(lam, dim)
    else:
        raise ValueError(f"unknown group {group!r}")
    if rule == "strip":
        return strip()
    if rule == "weyl":
        return weyl()
    if rule != "both":
        raise ValueError(f"unknown rule {rule!r}")
    a, b = strip(), weyl()
    if a != b:
        raise RuleDisagreement(
            f"group={group} dim={dim} lam={tuple(lam)}"
            + (f" lam2={tuple(lam2)}" if lam2 is not None else "")
            + f": strip gave {a}, sorting gave {b}"
        )
    return a
