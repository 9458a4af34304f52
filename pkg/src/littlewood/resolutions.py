"""Closed-form generator and relation labels for the determinantal modules.

Each module resolved by the rules has an equivariant presentation whose
labels follow a uniform pattern: append a column to the generator label.
These are the i = 0 and i = 1 columns of the Betti table in closed form;
`betti_table` recovers the same labels by enumeration, which the tests use
as a cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import InadmissibleInput, Partition, PartitionPair, sigma_conjugate


@dataclass(frozen=True)
class Presentation:
    """Generator and relation labels of an equivariant module presentation."""

    group: str
    dim: int
    generators: tuple
    relations: tuple


def _append_column(lam: Partition, height: int) -> Partition:
    return Partition(tuple(lam) + (1,) * height)


def presentation(group: str, dim: int, lam, lam2=None) -> Presentation:
    """Presentation labels for the module indexed by the given partition(s).

    The alternating-form case appends one column of height 2n+2-2*len to
    its single generator; the bilinear-pairing case appends a column of
    height n+1-len-len' to both halves of the pair.  The symmetric-form
    case (even dimension only) modifies the first two columns instead, and
    carries two generators whenever the label and its complement differ.
    """
    group = group.lower()
    lam = Partition(lam)
    if group == "sp":
        n = dim
        if len(lam) > n:
            raise InadmissibleInput(f"{tuple(lam)} has more than {n} rows")
        relation = _append_column(lam, 2 * n + 2 - 2 * len(lam))
        return Presentation("sp", n, (lam,), (relation,))

    if group == "gl":
        n = dim
        lam2 = Partition(lam2 if lam2 is not None else ())
        if len(lam) + len(lam2) > n:
            raise InadmissibleInput(
                f"pair {tuple(lam)}, {tuple(lam2)} too long for {n}"
            )
        d = n + 1 - len(lam) - len(lam2)
        relation = PartitionPair(
            _append_column(lam, d), _append_column(lam2, d)
        )
        return Presentation(
            "gl", n, (PartitionPair(lam, lam2),), (relation,)
        )

    if group == "o":
        m = dim
        if m % 2:
            raise InadmissibleInput(
                "presentation labels are only available in even dimension"
            )
        n = m // 2
        if len(lam) > n:
            raise InadmissibleInput(f"{tuple(lam)} has more than {n} rows")
        lt = lam.transpose()
        c1 = lt[0] if lt else 0
        c2 = lt[1] if len(lt) > 1 else 0
        rest = tuple(lt[2:])
        relations = [
            Partition((2 * n + 1 - c2, c1 + 1) + rest).transpose()
        ]
        if len(lam) < n:
            relations.append(
                Partition((2 * n + 1 - c2, 2 * n - c1 + 1) + rest).transpose()
            )
        sigma = sigma_conjugate(lam, m)
        generators = (lam,) if sigma == lam else (lam, sigma)
        return Presentation("o", m, generators, tuple(relations))

    raise ValueError(f"unknown group {group!r}")
