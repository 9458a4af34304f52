"""Terms of the Littlewood complexes and the Q families indexing them.

The degree-i term of each complex is a sum of skew functors whose inner
shapes run over a family cut out by a diagonal condition in Frobenius
coordinates:

  epsilon = -1   arms one less than legs; graded pieces of the exterior
                 algebra on the alternating square (symplectic case);
  epsilon = +1   arms one more than legs; graded pieces of the exterior
                 algebra on the symmetric square (orthogonal case, the
                 Koszul dual of the quadric relations for every dimension);
  epsilon =  0   self-transpose partitions (odd orthogonal bookkeeping).

For the two-sided case the i-th term pairs complementary-transpose inner
shapes on the two factors, matching the exterior powers of a tensor
product.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .modrules import ModOutcome, modrule
from .partitions import Partition, SkewShape, from_frobenius, partitions_of


def enumerate_q(epsilon: int, max_size: int) -> list[Partition]:
    """All partitions up to max_size whose diagonal arms exceed legs by epsilon.

    Built directly from Frobenius coordinates: choose strictly decreasing
    arms, set each leg to arm minus epsilon.  Sorted by (size, parts).
    """
    if epsilon not in (-1, 0, 1):
        raise ValueError("epsilon must be -1, 0 or +1")
    lo = max(1, 1 + epsilon)
    arm_lists: list[tuple[int, ...]] = []

    def extend(arms: tuple[int, ...], budget: int, cap: int) -> None:
        arm_lists.append(arms)
        for a in range(min(cap, (budget + epsilon + 1) // 2), lo - 1, -1):
            extend(arms + (a,), budget - (2 * a - epsilon - 1), a - 1)

    extend((), max_size, max_size)
    found = [
        from_frobenius(arms, tuple(a - epsilon for a in arms))
        for arms in arm_lists
    ]
    return sorted(found, key=lambda p: (p.size, tuple(p)))


@dataclass
class ComplexTerms:
    """Per homological degree, the skew shapes (or shape pairs) of the terms."""

    group: str
    terms: dict = field(default_factory=dict)

    def degrees(self) -> list[int]:
        return sorted(self.terms)


def complex_terms(group: str, lam, lam2=None, max_degree=None) -> ComplexTerms:
    """Terms of the complex attached to a partition (or pair).

    Shapes whose inner partition is not contained in the outer one are
    zero functors and are dropped at construction.
    """
    group = group.lower()
    lam = Partition(lam)
    if group in ("sp", "o"):
        if lam2 is not None:
            raise ValueError("only the gl complex takes a second partition")
        if max_degree is None:
            max_degree = lam.size // 2
        family = enumerate_q(-1 if group == "sp" else 1, 2 * max_degree)
        terms: dict[int, list] = {}
        for i in range(max_degree + 1):
            shapes = [
                SkewShape(lam, mu)
                for mu in family
                if mu.size == 2 * i and lam.contains(mu)
            ]
            if shapes:
                terms[i] = shapes
        return ComplexTerms(group, terms)
    if group == "gl":
        if lam2 is None:
            raise ValueError("the gl complex needs a pair of partitions")
        lam2 = Partition(lam2)
        if max_degree is None:
            max_degree = min(lam.size, lam2.size)
        terms = {}
        for i in range(max_degree + 1):
            pairs = [
                (SkewShape(lam, nu), SkewShape(lam2, nu.transpose()))
                for nu in partitions_of(i)
                if lam.contains(nu) and lam2.contains(nu.transpose())
            ]
            if pairs:
                terms[i] = pairs
        return ComplexTerms(group, terms)
    raise ValueError(f"unknown group {group!r}")


def predicted_homology(group: str, dim: int, lam, lam2=None) -> ModOutcome:
    """Homology of the complex: vanishing, or one degree and its label.

    Runs both formulations of the rule; a disagreement raises, since it
    would mean an implementation bug rather than a property of the input.
    """
    return modrule(group, dim, lam, lam2, rule="both")
