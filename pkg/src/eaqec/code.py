"""Entanglement-assisted code objects: validation, duals, distance, file I/O.

A code on n channel qubits with k information qubits and c ebits is stored
as a simplified stabilizer matrix (n-k+c generator rows: c anticommuting
pairs for the ebits plus n-k-c commuting ancilla rows) together with a
logical matrix of 2k rows forming k anticommuting pairs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .pauli import (
    DEFAULT_ENUMERATION_CAP,
    PauliOp,
    SymplecticDecomposition,
    SymplecticMatrix,
    enumerate_group,
    gf2_rank,
    symplectic_gram_schmidt,
    symplectic_pair_count,
)

__all__ = [
    "EaqecCode",
    "ValidationReport",
    "CodeFormatError",
    "DistanceUndefinedError",
    "validate",
    "dual",
    "distance",
    "parse_code",
    "serialize_code",
]


class CodeFormatError(ValueError):
    """Raised for malformed code files."""


class DistanceUndefinedError(ValueError):
    """Raised when the code has no logical operators (k = 0)."""


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    derived_c: int
    failures: tuple[str, ...]


@dataclass(frozen=True)
class EaqecCode:
    n: int
    k: int
    c: int
    stabilizer: SymplecticMatrix
    logical: SymplecticMatrix

    @property
    def params(self) -> tuple[int, int, int]:
        return (self.n, self.k, self.c)

    def stabilizer_decomposition(self) -> SymplecticDecomposition:
        """Symplectic/isotropic split of the stabilizer generators."""
        return symplectic_gram_schmidt(self.stabilizer)

    def isotropic_matrix(self) -> SymplecticMatrix:
        """Generators of the ancilla (isotropic) subgroup."""
        return SymplecticMatrix(self.n, self.stabilizer_decomposition().isotropic)

    def symplectic_matrix(self) -> SymplecticMatrix:
        """Generators of the ebit (symplectic-pair) subgroup."""
        rows: list[PauliOp] = []
        for g, h in self.stabilizer_decomposition().pairs:
            rows.extend((g, h))
        return SymplecticMatrix(self.n, tuple(rows))

    def logical_isotropic_matrix(self) -> SymplecticMatrix:
        """Generators of the group whose weights define the distance."""
        return SymplecticMatrix(
            self.n, self.logical.rows + self.stabilizer_decomposition().isotropic
        )

    def full_normalizer_matrix(self) -> SymplecticMatrix:
        """Generators of logical x ebit x ancilla group (normalizer of S_I)."""
        return SymplecticMatrix(self.n, self.logical.rows + self.stabilizer.rows)

    def canonicalized(self) -> "EaqecCode":
        """Same code with stabilizer generators reordered: ebit pairs
        (g then h per pair) first, then the ancilla rows."""
        dec = self.stabilizer_decomposition()
        rows: list[PauliOp] = []
        for g, h in dec.pairs:
            rows.extend((g, h))
        rows.extend(dec.isotropic)
        return EaqecCode(
            self.n, self.k, self.c, SymplecticMatrix(self.n, tuple(rows)), self.logical
        )


def validate(code: EaqecCode) -> ValidationReport:
    """Check every structural invariant; violations are reported, not raised."""
    failures: list[str] = []
    n, k, c = code.n, code.k, code.c
    if k < 0 or c < 0 or k + c > n:
        failures.append(f"parameters out of range: n={n} k={k} c={c}")
    if len(code.stabilizer.rows) != n - k + c:
        failures.append(
            f"stabilizer has {len(code.stabilizer.rows)} rows, expected n-k+c={n - k + c}"
        )
    if len(code.logical.rows) != 2 * k:
        failures.append(f"logical has {len(code.logical.rows)} rows, expected 2k={2 * k}")

    joint = SymplecticMatrix(n, code.stabilizer.rows + code.logical.rows)
    expected_rank = len(code.stabilizer.rows) + len(code.logical.rows)
    if gf2_rank(joint) != expected_rank:
        failures.append("stabilizer and logical rows are not jointly GF(2)-independent")

    derived_c = symplectic_pair_count(code.stabilizer)
    if derived_c != c:
        failures.append(f"stabilizer has {derived_c} symplectic pairs, declared c={c}")

    for lrow in code.logical.rows:
        for srow in code.stabilizer.rows:
            if lrow.symplectic_product(srow) == 1:
                failures.append(f"logical row {lrow} anticommutes with stabilizer row {srow}")
                break

    if k > 0 and not failures:
        ldec = symplectic_gram_schmidt(code.logical)
        if len(ldec.pairs) != k or ldec.isotropic:
            failures.append(
                f"logical rows form {len(ldec.pairs)} pairs and "
                f"{len(ldec.isotropic)} isotropic generators, expected {k} pairs"
            )

    return ValidationReport(not failures, derived_c, tuple(failures))


def dual(code: EaqecCode) -> EaqecCode:
    """Exchange the ebit group with the logical group, keeping the ancillas.

    A valid (n, k, c) code maps to the (n, c, k) code whose stabilizer is
    generated by the old logical rows plus the old ancilla rows, and whose
    logical rows are the old ebit pair generators.
    """
    report = validate(code)
    if not report.valid:
        raise ValueError(f"cannot dualize invalid code: {report.failures}")
    dec = code.stabilizer_decomposition()
    new_stab_rows = list(code.logical.rows) + list(dec.isotropic)
    new_log_rows: list[PauliOp] = []
    for g, h in dec.pairs:
        new_log_rows.extend((g, h))
    dual_code = EaqecCode(
        code.n,
        code.c,
        code.k,
        SymplecticMatrix(code.n, tuple(new_stab_rows)),
        SymplecticMatrix(code.n, tuple(new_log_rows)),
    )
    return dual_code.canonicalized()


def distance(code: EaqecCode, cap: int = DEFAULT_ENUMERATION_CAP) -> int:
    """Minimum weight over the nontrivial logical cosets of the ancilla group.

    Brute-force: walks every element of (L x S_I) \\ S_I.  Short-circuits at
    weight 1 since no smaller weight is possible.
    """
    report = validate(code)
    if not report.valid:
        raise ValueError(f"cannot compute distance of invalid code: {report.failures}")
    if code.k == 0:
        raise DistanceUndefinedError("distance is undefined for k = 0 codes")
    group = code.logical_isotropic_matrix()
    if 2 ** len(group.rows) > cap:
        raise ValueError(f"group size 2^{len(group.rows)} exceeds enumeration cap {cap}")
    iso_bits = {p.as_bits() for p in enumerate_group(code.isotropic_matrix())}
    best = None
    for elem in enumerate_group(group, cap=cap):
        if elem.as_bits() in iso_bits:
            continue
        w = elem.weight()
        if best is None or w < best:
            best = w
            if best == 1:
                break
    assert best is not None
    return best


def parse_code(text: str) -> EaqecCode:
    """Parse the text code format (see serialize_code); canonicalizes the
    stabilizer generator order."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if len(lines) < 2:
        raise CodeFormatError("expected a header line and an S: line")

    header: dict[str, int] = {}
    for part in lines[0].split():
        if "=" not in part:
            raise CodeFormatError(f"malformed header token {part!r}")
        key, _, val = part.partition("=")
        try:
            header[key] = int(val)
        except ValueError:
            raise CodeFormatError(f"non-integer header value {part!r}") from None
    if set(header) != {"n", "k", "c"}:
        raise CodeFormatError(f"header must define n, k and c, got {sorted(header)}")
    n, k, c = header["n"], header["k"], header["c"]
    if n < 1 or k < 0 or c < 0 or k + c > n:
        raise CodeFormatError(f"invalid parameters n={n} k={k} c={c}")

    def matrix_line(line: str, prefix: str, expected_rows: int) -> SymplecticMatrix:
        if not line.startswith(prefix):
            raise CodeFormatError(f"expected line starting with {prefix!r}, got {line!r}")
        body = line[len(prefix):].split()
        if len(body) != expected_rows:
            raise CodeFormatError(
                f"{prefix} expected {expected_rows} Pauli strings, got {len(body)}"
            )
        rows = []
        for s in body:
            if len(s) != n:
                raise CodeFormatError(f"row {s!r} has length {len(s)}, expected {n}")
            rows.append(PauliOp.from_string(s))
        return SymplecticMatrix(n, tuple(rows))

    stab = matrix_line(lines[1], "S:", n - k + c)
    if k > 0:
        if len(lines) < 3:
            raise CodeFormatError("missing L: line")
        logical = matrix_line(lines[2], "L:", 2 * k)
    else:
        logical = SymplecticMatrix(n, ())
        if len(lines) >= 3 and lines[2].removeprefix("L:").split():
            raise CodeFormatError("k = 0 code must have an empty logical matrix")
    return EaqecCode(n, k, c, stab, logical).canonicalized()


def serialize_code(code: EaqecCode) -> str:
    """Canonical text form; parse_code(serialize_code(c)) round-trips."""
    canon = code.canonicalized()
    out = f"n={canon.n} k={canon.k} c={canon.c}\n"
    out += "S: " + " ".join(str(r) for r in canon.stabilizer.rows) + "\n"
    out += "L: " + " ".join(str(r) for r in canon.logical.rows) + "\n"
    return out
