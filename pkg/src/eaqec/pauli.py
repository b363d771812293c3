"""n-qubit Pauli operators in binary symplectic form, and CNOT conjugation.

Operators are projective: phases are dropped everywhere, since weight,
commutation and all enumerator/distance quantities are phase-insensitive.
Bit i of the x/z masks is qubit i; qubit 0 is the leftmost character of the
text form, e.g. "XXIZ" has X on qubits 0 and 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

__all__ = [
    "PauliOp",
    "SymplecticMatrix",
    "SymplecticDecomposition",
    "CliffordCircuit",
    "gf2_rank",
    "symplectic_pair_count",
    "symplectic_gram_schmidt",
    "enumerate_group",
    "conjugate_through_circuit",
]

# Groups bigger than this are refused by enumerate_group unless the caller
# raises the cap explicitly.
DEFAULT_ENUMERATION_CAP = 2**28

_CHAR_TO_XZ = {"I": (0, 0), "X": (1, 0), "Z": (0, 1), "Y": (1, 1)}
_XZ_TO_CHAR = {(0, 0): "I", (1, 0): "X", (0, 1): "Z", (1, 1): "Y"}


@dataclass(frozen=True)
class PauliOp:
    """A Pauli operator on ``n`` qubits as an (x|z) pair of bit masks."""

    n: int
    x: int
    z: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"qubit count must be >= 1, got {self.n}")
        mask = (1 << self.n) - 1
        if self.x & ~mask or self.z & ~mask:
            raise ValueError("x/z mask has bits outside the qubit range")

    @classmethod
    def from_string(cls, text: str) -> "PauliOp":
        """Parse a string over I/X/Y/Z, qubit 0 leftmost."""
        if not text:
            raise ValueError("empty Pauli string")
        x = z = 0
        for i, ch in enumerate(text):
            try:
                xb, zb = _CHAR_TO_XZ[ch]
            except KeyError:
                raise ValueError(f"invalid Pauli character {ch!r} in {text!r}") from None
            x |= xb << i
            z |= zb << i
        return cls(len(text), x, z)

    @classmethod
    def identity(cls, n: int) -> "PauliOp":
        return cls(n, 0, 0)

    def __str__(self) -> str:
        return "".join(
            _XZ_TO_CHAR[(self.x >> i) & 1, (self.z >> i) & 1] for i in range(self.n)
        )

    def __repr__(self) -> str:
        return f"PauliOp({str(self)!r})"

    def weight(self) -> int:
        """Number of qubits on which the operator is not the identity."""
        return (self.x | self.z).bit_count()

    def symplectic_product(self, other: "PauliOp") -> int:
        """0 if the two operators commute, 1 if they anticommute."""
        if self.n != other.n:
            raise ValueError(f"qubit count mismatch: {self.n} vs {other.n}")
        return ((self.x & other.z).bit_count() + (self.z & other.x).bit_count()) & 1

    def commutes_with(self, other: "PauliOp") -> bool:
        return self.symplectic_product(other) == 0

    def __mul__(self, other: "PauliOp") -> "PauliOp":
        """Projective product: componentwise XOR of the x and z masks."""
        if self.n != other.n:
            raise ValueError(f"qubit count mismatch: {self.n} vs {other.n}")
        return PauliOp(self.n, self.x ^ other.x, self.z ^ other.z)

    def is_identity(self) -> bool:
        return self.x == 0 and self.z == 0

    def as_bits(self) -> int:
        """The operator as a 2n-bit integer, x half low, z half high."""
        return self.x | (self.z << self.n)

    @classmethod
    def from_bits(cls, n: int, bits: int) -> "PauliOp":
        mask = (1 << n) - 1
        return cls(n, bits & mask, (bits >> n) & mask)


@dataclass(frozen=True)
class SymplecticMatrix:
    """An ordered list of Pauli operators on a common qubit count."""

    n: int
    rows: tuple[PauliOp, ...]

    def __post_init__(self) -> None:
        for row in self.rows:
            if row.n != self.n:
                raise ValueError(f"row {row!r} has {row.n} qubits, expected {self.n}")

    @classmethod
    def from_strings(cls, text: str) -> "SymplecticMatrix":
        """Parse whitespace-separated Pauli strings."""
        parts = text.split()
        if not parts:
            raise ValueError("no Pauli strings given")
        rows = tuple(PauliOp.from_string(p) for p in parts)
        return cls(rows[0].n, rows)

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self) -> Iterator[PauliOp]:
        return iter(self.rows)

    def __str__(self) -> str:
        return " ".join(str(r) for r in self.rows)


@dataclass(frozen=True)
class SymplecticDecomposition:
    """Result of symplectic Gram-Schmidt: anticommuting pairs plus an
    isotropic (mutually commuting) remainder spanning the same group."""

    pairs: tuple[tuple[PauliOp, PauliOp], ...]
    isotropic: tuple[PauliOp, ...]

    def all_rows(self) -> tuple[PauliOp, ...]:
        rows: list[PauliOp] = []
        for g, h in self.pairs:
            rows.extend((g, h))
        rows.extend(self.isotropic)
        return tuple(rows)


@dataclass(frozen=True)
class CliffordCircuit:
    """A CNOT-only circuit: ordered (control, target) pairs."""

    n: int
    gates: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        for c, t in self.gates:
            if not (0 <= c < self.n and 0 <= t < self.n):
                raise ValueError(f"gate ({c},{t}) out of range for {self.n} qubits")
            if c == t:
                raise ValueError(f"control equals target in gate ({c},{t})")

    def serialize(self) -> str:
        return "".join(f"CNOT {c} {t}\n" for c, t in self.gates)

    @classmethod
    def parse(cls, n: int, text: str) -> "CliffordCircuit":
        gates = []
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 3 or parts[0] != "CNOT":
                raise ValueError(f"malformed circuit line: {line!r}")
            gates.append((int(parts[1]), int(parts[2])))
        return cls(n, tuple(gates))


def _row_bits(m: SymplecticMatrix) -> list[int]:
    return [r.as_bits() for r in m.rows]


def _gf2_rank_bits(rows: list[int]) -> int:
    rank = 0
    basis: list[int] = []
    for row in rows:
        for b in basis:
            row = min(row, row ^ b)
        if row:
            basis.append(row)
            basis.sort(reverse=True)
            rank += 1
    return rank


def gf2_rank(m: SymplecticMatrix) -> int:
    """Rank of the rows as length-2n vectors over GF(2)."""
    return _gf2_rank_bits(_row_bits(m))


def rows_independent(m: SymplecticMatrix) -> bool:
    return gf2_rank(m) == len(m.rows)


def same_row_space(a: SymplecticMatrix, b: SymplecticMatrix) -> bool:
    """True when the two row sets span the same GF(2) subspace."""
    ra = _gf2_rank_bits(_row_bits(a))
    rb = _gf2_rank_bits(_row_bits(b))
    rab = _gf2_rank_bits(_row_bits(a) + _row_bits(b))
    return ra == rb == rab


def symplectic_pair_count(m: SymplecticMatrix) -> int:
    """Half the GF(2) rank of the pairwise symplectic-product matrix.

    For a simplified check matrix this equals the number of ebits c.
    """
    rows = list(m.rows)
    k = len(rows)
    prod_rows = []
    for i in range(k):
        bits = 0
        for j in range(k):
            bits |= rows[i].symplectic_product(rows[j]) << j
        prod_rows.append(bits)
    rank = _gf2_rank_bits(prod_rows)
    assert rank % 2 == 0, "symplectic-product matrix has odd rank"
    return rank // 2


def symplectic_gram_schmidt(m: SymplecticMatrix) -> SymplecticDecomposition:
    """Split independent rows into symplectic pairs and an isotropic rest.

    Rows are processed in the given order; the first later row that
    anticommutes with the current pivot becomes its partner.
    """
    if not rows_independent(m):
        raise ValueError("rows are GF(2)-dependent")
    remaining = list(m.rows)
    pairs: list[tuple[PauliOp, PauliOp]] = []
    isotropic: list[PauliOp] = []
    while remaining:
        g = remaining.pop(0)
        partner_idx = next(
            (i for i, r in enumerate(remaining) if g.symplectic_product(r) == 1), None
        )
        if partner_idx is None:
            isotropic.append(g)
            continue
        h = remaining.pop(partner_idx)
        pairs.append((g, h))
        # Make the rest commute with both g and h without changing the span.
        fixed = []
        for r in remaining:
            if r.symplectic_product(h) == 1:
                r = r * g
            if r.symplectic_product(g) == 1:
                r = r * h
            fixed.append(r)
        remaining = fixed
    return SymplecticDecomposition(tuple(pairs), tuple(isotropic))


def enumerate_group(
    generators: SymplecticMatrix, cap: int = DEFAULT_ENUMERATION_CAP
) -> Iterator[PauliOp]:
    """Yield all 2^g distinct products of generator subsets, identity first.

    Uses a Gray-code walk so each step multiplies by a single generator.
    """
    gens = list(generators.rows)
    if not rows_independent(generators):
        raise ValueError("generators are GF(2)-dependent")
    if 2 ** len(gens) > cap:
        raise ValueError(f"group size 2^{len(gens)} exceeds enumeration cap {cap}")
    n = generators.n
    cur = 0  # as_bits() accumulator
    yield PauliOp.identity(n)
    gen_bits = [g.as_bits() for g in gens]
    for i in range(1, 2 ** len(gens)):
        cur ^= gen_bits[(i & -i).bit_length() - 1]
        yield PauliOp.from_bits(n, cur)


def conjugate_through_circuit(circ: CliffordCircuit, p: PauliOp) -> PauliOp:
    """Image of p under gate-by-gate CNOT conjugation, up to phase.

    X on the control propagates to the target; Z on the target propagates
    to the control.
    """
    if circ.n != p.n:
        raise ValueError(f"qubit count mismatch: circuit {circ.n}, operator {p.n}")
    x, z = p.x, p.z
    for c, t in circ.gates:
        if (x >> c) & 1:
            x ^= 1 << t
        if (z >> t) & 1:
            z ^= 1 << c
    return PauliOp(p.n, x, z)
