"""Weight enumerators, Krawtchouk polynomials and the quaternary
MacWilliams transform.

All arithmetic is exact: coefficients are Python ints, and the transform
asserts exact divisibility by the group order (a failed division is a
strong signal the input was not a valid group enumerator).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .pauli import DEFAULT_ENUMERATION_CAP, SymplecticMatrix, enumerate_group

__all__ = [
    "WeightEnumerator",
    "TransformError",
    "krawtchouk",
    "weight_enumerator",
    "macwilliams_transform",
    "distance_from_enumerators",
    "dual_distance_from_enumerators",
]


class TransformError(ValueError):
    """The MacWilliams transform produced a non-integer or negative
    coefficient, so the input cannot be a group weight enumerator."""


@dataclass(frozen=True)
class WeightEnumerator:
    """Coefficients (A_0, ..., A_n) of a Pauli subgroup, with the group
    order carried explicitly as 2**log2_order."""

    n: int
    coeffs: tuple[int, ...]
    log2_order: int

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.n + 1:
            raise ValueError(f"expected {self.n + 1} coefficients, got {len(self.coeffs)}")
        if self.coeffs[0] != 1:
            raise ValueError("A_0 must be 1 (the identity is always present)")
        if any(a < 0 for a in self.coeffs):
            raise ValueError("coefficients must be nonnegative")
        if sum(self.coeffs) != 2**self.log2_order:
            raise ValueError(
                f"coefficients sum to {sum(self.coeffs)}, expected 2^{self.log2_order}"
            )

    def min_positive_weight(self) -> int | None:
        """Smallest w > 0 with a nonzero coefficient, or None."""
        for w in range(1, self.n + 1):
            if self.coeffs[w] > 0:
                return w
        return None

    def csv_row(self, label: str) -> str:
        return ",".join([str(self.n), label] + [str(a) for a in self.coeffs])


def krawtchouk(w: int, wp: int, n: int) -> int:
    """The quaternary Krawtchouk polynomial P_w(w', n), exact integer."""
    if not (0 <= w <= n and 0 <= wp <= n):
        raise ValueError(f"weights must lie in [0, {n}], got w={w} w'={wp}")
    return sum(
        (-1) ** u * 3 ** (w - u) * comb(wp, u) * comb(n - wp, w - u)
        for u in range(w + 1)
    )


def weight_enumerator(
    generators: SymplecticMatrix, cap: int = DEFAULT_ENUMERATION_CAP
) -> WeightEnumerator:
    """Weight histogram of the full group generated by the rows."""
    coeffs = [0] * (generators.n + 1)
    for elem in enumerate_group(generators, cap=cap):
        coeffs[elem.weight()] += 1
    return WeightEnumerator(generators.n, tuple(coeffs), len(generators.rows))


def macwilliams_transform(a: WeightEnumerator) -> WeightEnumerator:
    """Enumerator of the dual group: B_w = (1/|S'|) sum_w' P_w(w',n) A_w'.

    The result carries order 2^(2n - log2_order).  Raises TransformError if
    any output coefficient is negative or not an integer.
    """
    n = a.n
    order = 2**a.log2_order
    coeffs = []
    for w in range(n + 1):
        total = sum(krawtchouk(w, wp, n) * a.coeffs[wp] for wp in range(n + 1))
        q, r = divmod(total, order)
        if r != 0:
            raise TransformError(f"B_{w} = {total}/{order} is not an integer")
        if q < 0:
            raise TransformError(f"B_{w} = {q} is negative")
        coeffs.append(q)
    return WeightEnumerator(n, tuple(coeffs), 2 * n - a.log2_order)


def _first_positive_difference(big: WeightEnumerator, small: WeightEnumerator) -> int:
    if big.n != small.n:
        raise ValueError(f"length mismatch: {big.n} vs {small.n}")
    for w in range(big.n + 1):
        if big.coeffs[w] < small.coeffs[w]:
            raise ValueError(f"coefficient {w} of the subgroup exceeds the supergroup")
    for w in range(1, big.n + 1):
        if big.coeffs[w] - small.coeffs[w] > 0:
            return w
    raise ValueError("no positive difference: the code has no logical operators")


def distance_from_enumerators(b: WeightEnumerator, c_iso: WeightEnumerator) -> int:
    """Minimum distance: smallest w > 0 with B_w - C_w > 0, where B counts
    the logical-times-ancilla group and C the ancilla group alone."""
    return _first_positive_difference(b, c_iso)


def dual_distance_from_enumerators(a: WeightEnumerator, c_iso: WeightEnumerator) -> int:
    """Distance of the dual code: smallest w > 0 with A_w - C_w > 0."""
    return _first_positive_difference(a, c_iso)
