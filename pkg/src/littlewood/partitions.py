"""Integer partitions and the box combinatorics the modification rules need.

A partition is a weakly decreasing tuple of positive integers; the empty
partition is the empty tuple and prints as "0" in every text interface.
All values are immutable and all operations are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Optional


class InadmissibleInput(ValueError):
    """An operation required an admissible partition and did not get one."""


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Trailing zeros are stripped on construction; any other violation of
    monotonicity or positivity is rejected.
    """

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = tuple(int(p) for p in parts)
        if any(parts[k] < parts[k + 1] for k in range(len(parts) - 1)):
            raise ValueError(f"parts not weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"negative part in {parts}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        return super().__new__(cls, parts)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def transpose(self) -> "Partition":
        """Column lengths of the Young diagram, as a partition."""
        if not self:
            return Partition()
        return Partition(
            sum(1 for p in self if p >= k) for k in range(1, self[0] + 1)
        )

    def rank(self) -> int:
        """Number of boxes on the main diagonal."""
        return sum(1 for i, p in enumerate(self) if p >= i + 1)

    def frobenius(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Arm and leg lengths, diagonal box included, of the diagonal boxes.

        Returns (a, b) with a_i = lambda_i - i + 1 and b_i read off the
        transpose; both are strictly decreasing and positive.
        """
        t = self.transpose()
        r = self.rank()
        a = tuple(self[i] - i for i in range(r))
        b = tuple(t[i] - i for i in range(r))
        return a, b

    def contains(self, other: Iterable[int]) -> bool:
        """Componentwise containment of Young diagrams."""
        other = Partition(other)
        if len(other) > len(self):
            return False
        return all(self[i] >= other[i] for i in range(len(other)))


def from_frobenius(a: Iterable[int], b: Iterable[int]) -> Partition:
    """Rebuild a partition from its diagonal arm and leg lengths."""
    a = tuple(int(x) for x in a)
    b = tuple(int(x) for x in b)
    if len(a) != len(b):
        raise ValueError("arm and leg lists differ in length")
    for seq in (a, b):
        if any(x < 1 for x in seq):
            raise ValueError("Frobenius coordinates must be positive")
        if any(seq[i] <= seq[i + 1] for i in range(len(seq) - 1)):
            raise ValueError("Frobenius coordinates must be strictly decreasing")
    r = len(a)
    rows = [a[i] + i for i in range(r)]
    for j in range(r, b[0] if r else 0):
        rows.append(sum(1 for i in range(r) if b[i] + i > j))
    return Partition(rows)


def remove_border_strip(
    lam: Iterable[int], strip_len: int
) -> Optional[tuple[Partition, int]]:
    """Remove the border strip of the given length ending at the last row.

    Returns (smaller partition, number of columns the strip occupies), or
    None when no such strip exists.  A strip of length s exists exactly when
    some first-column box has hook length s; removing the strip deletes that
    row and shifts the rows below it one step up and left.  First-column
    hooks are strictly decreasing down the column, so the match is unique.
    """
    lam = Partition(lam)
    if strip_len < 1:
        raise ValueError("strip length must be positive")
    ell = len(lam)
    for i in range(ell):
        hook = lam[i] + ell - i - 1
        if hook == strip_len:
            rest = tuple(p - 1 for p in lam[i + 1 :])
            return Partition(tuple(lam[:i]) + rest), lam[i]
        if hook < strip_len:
            break
    return None


def first_column(lam: Iterable[int]) -> int:
    """Length of the first column, i.e. the number of parts."""
    return len(Partition(lam))


def sigma_conjugate(lam: Iterable[int], m: int) -> Partition:
    """Replace the first-column length c by m - c.

    Defined on partitions whose first two columns hold at most m boxes; an
    involution there.
    """
    lam = Partition(lam)
    t = lam.transpose()
    c1 = t[0] if t else 0
    c2 = t[1] if len(t) > 1 else 0
    if c1 + c2 > m:
        raise InadmissibleInput(
            f"{tuple(lam)} has first two columns {c1}+{c2} > {m}"
        )
    return Partition((m - c1,) + tuple(t[1:])).transpose()


def bar(lam: Iterable[int], m: int) -> Partition:
    """The member of {lam, sigma(lam)} whose first column is at most m // 2."""
    lam = Partition(lam)
    if len(lam) <= m // 2:
        return lam
    return sigma_conjugate(lam, m)


def is_admissible(group: str, dim: int, lam: Iterable[int], lam2=None) -> bool:
    """Admissibility predicate per group.

    sp: at most dim rows.  o: first two columns hold at most dim boxes.
    gl: the pair's row counts sum to at most dim.
    """
    group = group.lower()
    lam = Partition(lam)
    if group == "sp":
        return len(lam) <= dim
    if group == "o":
        c1 = len(lam)
        c2 = sum(1 for p in lam if p >= 2)
        return c1 + c2 <= dim
    if group == "gl":
        if lam2 is None:
            raise ValueError("gl admissibility needs a pair of partitions")
        return len(lam) + len(Partition(lam2)) <= dim
    raise ValueError(f"unknown group {group!r}")


def parse_partition(text: str) -> Partition:
    """Parse comma-separated decreasing parts; the single token 0 is empty."""
    text = text.strip()
    if text in ("", "0"):
        return Partition()
    try:
        parts = tuple(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise ValueError(f"cannot parse partition text {text!r}") from exc
    return Partition(parts)


def format_partition(lam: Iterable[int]) -> str:
    lam = Partition(lam)
    if not lam:
        return "0"
    return ",".join(str(p) for p in lam)


def partitions_of(n: int, max_part: Optional[int] = None) -> Iterator[Partition]:
    """All partitions of n, in reverse lexicographic order."""
    if n < 0:
        return
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        yield Partition()
        return
    for head in range(max_part, 0, -1):
        for tail in partitions_of(n - head, head):
            yield Partition((head,) + tuple(tail))


def all_partitions_up_to(max_size: int) -> Iterator[Partition]:
    """All partitions of every size from 0 through max_size."""
    for n in range(max_size + 1):
        yield from partitions_of(n)


@dataclass(frozen=True)
class SkewShape:
    """A pair of nested partitions outer/inner."""

    outer: Partition
    inner: Partition

    def __post_init__(self) -> None:
        object.__setattr__(self, "outer", Partition(self.outer))
        object.__setattr__(self, "inner", Partition(self.inner))
        if not self.outer.contains(self.inner):
            raise ValueError(f"{tuple(self.inner)} not contained in {tuple(self.outer)}")

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def __str__(self) -> str:
        return f"{format_partition(self.outer)}/{format_partition(self.inner)}"


class PartitionPair(NamedTuple):
    """An ordered pair of partitions, used as a two-sided weight label."""

    plus: Partition
    minus: Partition


def make_pair(plus: Iterable[int], minus: Iterable[int]) -> PartitionPair:
    return PartitionPair(Partition(plus), Partition(minus))


def format_pair(pair: PartitionPair) -> str:
    return f"{format_partition(pair[0])};{format_partition(pair[1])}"
