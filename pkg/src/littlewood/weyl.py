"""Dot actions of the infinite symmetric and signed-permutation groups.

Vectors live in the space of integer sequences that eventually agree with a
fixed staircase rho.  A value is stored as a finite head; everything beyond
the head is the rho tail.  For the plain symmetric-group action the natural
head coordinates are the raw entries (tail zero); the signed actions work on
rho-shifted heads, where a finite window plus a no-tail-collision
certificate makes the infinite computation exact.

The orthogonal staircase has half-integer entries when the dimension is
odd, so shifted coordinates for that action are stored doubled; lengths,
inversions and sign comparisons are unaffected.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

from .partitions import Partition


class WindowTooShort(RuntimeError):
    """The finite head was too short to certify the infinite computation."""


@dataclass(frozen=True)
class BottOutcome:
    """Result of sorting a dot-orbit: singular, or a length and a partition."""

    singular: bool
    length: Optional[int] = None
    result: Optional[Partition] = None

    @classmethod
    def singular_outcome(cls) -> "BottOutcome":
        return cls(True)

    @classmethod
    def regular(cls, length: int, result: Partition) -> "BottOutcome":
        return cls(False, length, result)


def dot_reflect(head: Sequence[int], i: int) -> tuple[int, ...]:
    """Adjacent dot reflection at 1-based position i on a zero-tailed head.

    Entries i, i+1 become (a_{i+1} - 1, a_i + 1); the head is padded with
    tail zeros if needed.
    """
    if i < 1:
        raise ValueError("reflection index is 1-based")
    seq = list(head) + [0] * max(0, i + 1 - len(head))
    a, b = seq[i - 1], seq[i]
    seq[i - 1], seq[i] = b - 1, a + 1
    return tuple(seq)


def bott(
    head: Sequence[int],
    choose: Optional[Callable[[list[int]], int]] = None,
) -> BottOutcome:
    """Sort a zero-tailed integer head by adjacent dot reflections.

    Returns Singular as soon as the selected ascent rises by exactly one,
    otherwise the reflection count and the sorted partition.  The outcome is
    independent of which ascent is selected at each step; `choose` (maps the
    list of 0-based ascent positions to one of them) exists so tests can
    exercise that independence.
    """
    seq = list(head)
    count = 0
    while True:
        if seq and seq[-1] < 0:
            # the implied zero tail takes part in the sort
            seq.append(0)
        ascents = [i for i in range(len(seq) - 1) if seq[i] < seq[i + 1]]
        if not ascents:
            break
        i = ascents[0] if choose is None else choose(ascents)
        if seq[i + 1] - seq[i] == 1:
            return BottOutcome.singular_outcome()
        seq[i], seq[i + 1] = seq[i + 1] - 1, seq[i] + 1
        count += 1
    while seq and seq[-1] == 0:
        seq.pop()
    return BottOutcome.regular(count, Partition(seq))


def bc_s0(head: Sequence[int], n: int) -> tuple[int, ...]:
    """The extra dot generator of the symplectic action on raw entries."""
    seq = list(head) + [0] * max(0, 1 - len(head))
    seq[0] = 2 * n + 2 - seq[0]
    return tuple(seq)


def d_s0(head: Sequence[int], m: int) -> tuple[int, ...]:
    """The extra dot generator of the orthogonal action on raw entries."""
    seq = list(head) + [0] * max(0, 2 - len(head))
    seq[0], seq[1] = m + 1 - seq[1], m + 1 - seq[0]
    return tuple(seq)


def is_singular(
    x: Sequence[int], symmetry: str, tail_floor: Optional[int] = None
) -> bool:
    """Collision test for a rho-shifted window.

    BC: a zero entry or two entries of equal absolute value.  D: two entries
    of equal absolute value (a single zero is regular).  A: two equal
    entries.  When tail_floor is given it is the smallest absolute value the
    tail can take; a head entry reaching it means collisions with the tail
    cannot be excluded and WindowTooShort is raised.
    """
    if tail_floor is not None and x and max(abs(v) for v in x) >= tail_floor:
        raise WindowTooShort(
            f"head magnitude reaches tail floor {tail_floor}: {tuple(x)}"
        )
    if symmetry == "BC":
        if any(v == 0 for v in x):
            return True
        mags = [abs(v) for v in x]
        return len(set(mags)) != len(mags)
    if symmetry == "D":
        mags = [abs(v) for v in x]
        return len(set(mags)) != len(mags)
    if symmetry == "A":
        return len(set(x)) != len(x)
    raise ValueError(f"unknown symmetry {symmetry!r}")


def _greedy_signed(x: list[int], symmetry: str) -> tuple[int, list[int]]:
    """Reduce a regular shifted window to the dominant chamber.

    Applies the extra generator first whenever its trigger holds, else the
    leftmost adjacent swap, and counts generator applications.  The caller
    has already excluded singular input, so the loop terminates.
    """
    count = 0
    while True:
        if symmetry == "BC" and x[0] > 0:
            x[0] = -x[0]
            count += 1
            continue
        if symmetry == "D" and x[0] + x[1] > 0:
            x[0], x[1] = -x[1], -x[0]
            count += 1
            continue
        asc = next((i for i in range(len(x) - 1) if x[i] < x[i + 1]), None)
        if asc is None:
            return count, x
        x[asc], x[asc + 1] = x[asc + 1], x[asc]
        count += 1


def greedy_modify(head: Sequence[int], symmetry: str, dim: int) -> BottOutcome:
    """Reduce a raw zero-tailed head under the BC or D dot action.

    dim is n for BC (staircase -(n+1), -(n+2), ...) and m for D (staircase
    -m/2, -m/2 - 1, ...).  Returns the length of the sorting word and the
    partition mu with w . head = mu, or Singular.  The window grows until
    the certificate that the tail is inert holds; the multiset of absolute
    shifted values is invariant under the action, so the certificate checked
    on the input stays valid throughout.
    """
    head = tuple(int(v) for v in head)
    if any(v < 0 for v in head):
        raise ValueError("raw head entries must be nonnegative")
    window = max(len(head), max(head, default=0), 2) + 2
    while True:
        if symmetry == "BC":
            x = [
                (head[i] if i < len(head) else 0) - (dim + i + 1)
                for i in range(window)
            ]
            floor = dim + window + 1
        elif symmetry == "D":
            x = [
                2 * (head[i] if i < len(head) else 0) - dim - 2 * i
                for i in range(window)
            ]
            floor = dim + 2 * window
        else:
            raise ValueError(f"greedy_modify handles BC and D, not {symmetry!r}")
        try:
            singular = is_singular(x, symmetry, tail_floor=floor)
        except WindowTooShort:
            window *= 2
            continue
        break
    if singular:
        return BottOutcome.singular_outcome()
    count, x = _greedy_signed(x, symmetry)
    if symmetry == "BC":
        mu = [x[i] + dim + i + 1 for i in range(window)]
    else:
        doubled = [x[i] + dim + 2 * i for i in range(window)]
        if any(v % 2 for v in doubled):
            raise AssertionError("doubled coordinates lost parity")
        mu = [v // 2 for v in doubled]
    return BottOutcome.regular(count, Partition(mu))


def sort_length(vals: Sequence[int]) -> Optional[int]:
    """Adjacent swaps needed to sort vals strictly decreasing; None on ties."""
    if len(set(vals)) != len(vals):
        return None
    return sum(
        1
        for i in range(len(vals))
        for j in range(i + 1, len(vals))
        if vals[i] < vals[j]
    )


def length_statistic_bc(x: Iterable[int]) -> int:
    """Closed-form word length for the symplectic action on a shifted window.

    Inversions plus, for every positive entry, one more than the number of
    entries of smaller absolute value.  Validated against the greedy count
    in the tests; not used by the rules themselves.
    """
    x = list(x)
    inv = sum(
        1
        for i in range(len(x))
        for j in range(i + 1, len(x))
        if x[i] < x[j]
    )
    extra = sum(
        1 + sum(1 for y in x if abs(y) < v) for v in x if v > 0
    )
    return inv + extra


def length_statistic_d(x: Iterable[int]) -> int:
    """Closed-form word length for the orthogonal action on a shifted window."""
    x = list(x)
    inv = sum(
        1
        for i in range(len(x))
        for j in range(i + 1, len(x))
        if x[i] < x[j]
    )
    extra = sum(sum(1 for y in x if abs(y) < v) for v in x if v > 0)
    return inv + extra
