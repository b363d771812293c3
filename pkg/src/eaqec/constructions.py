"""Code families and transformations: repetition/accumulator codes for every
length, their CNOT encoder circuits, ebit-adding extensions, and exhaustive
nonexistence searches for the two even-length families that cannot exist.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from .code import EaqecCode, dual, validate
from .pauli import CliffordCircuit, PauliOp, SymplecticMatrix

__all__ = [
    "repetition_code_odd",
    "repetition_code_even",
    "repetition_code",
    "accumulator_code",
    "repetition_encoder_circuit",
    "extend_add_ebit",
    "demote_logical_to_ebit",
    "nonexistence_search",
    "NonexistenceResult",
    "DEFAULT_SEARCH_CAP",
]

DEFAULT_SEARCH_CAP = 6


def _x_op(n: int, mask: int) -> PauliOp:
    return PauliOp(n, mask, 0)


def _z_op(n: int, mask: int) -> PauliOp:
    return PauliOp(n, 0, mask)


def repetition_code_odd(n: int) -> EaqecCode:
    """The [[n,1,n;n-1]] code for odd n >= 3: logicals X...X / Z...Z and the
    2(n-1) sliding weight-2 stabilizer generators ZZ and XX."""
    if n < 3 or n % 2 == 0:
        raise ValueError(f"length must be odd and >= 3, got {n}")
    stab = [_z_op(n, 0b11 << i) for i in range(n - 1)]
    stab += [_x_op(n, 0b11 << i) for i in range(n - 1)]
    full = (1 << n) - 1
    logical = (_x_op(n, full), _z_op(n, full))
    return EaqecCode(
        n, 1, n - 1, SymplecticMatrix(n, tuple(stab)), SymplecticMatrix(n, logical)
    ).canonicalized()


def _even_h1_h2(n: int) -> tuple[list[int], list[int]]:
    """Row masks of the two (n-1) x n binary matrices behind the even-length
    construction: a sliding double-one block padded with a zero column on the
    left (h1) or right (h2), plus a final all-ones row that stops one short
    of the end in h1 and covers everything in h2."""
    slide = [0b11 << i for i in range(n - 2)]
    h1 = [m << 1 for m in slide] + [(1 << (n - 1)) - 1]
    h2 = slide + [(1 << n) - 1]
    return h1, h2


def repetition_code_even(n: int) -> EaqecCode:
    """The [[n,1,n-1;n-1]] code for even n >= 4: stabilizer [[0,h1],[h2,0]]
    with logicals Z...Z and IX...X."""
    if n < 4 or n % 2 == 1:
        raise ValueError(f"length must be even and >= 4, got {n}")
    h1, h2 = _even_h1_h2(n)
    stab = [_z_op(n, m) for m in h1] + [_x_op(n, m) for m in h2]
    full = (1 << n) - 1
    logical = (_x_op(n, full ^ 1), _z_op(n, full))
    return EaqecCode(
        n, 1, n - 1, SymplecticMatrix(n, tuple(stab)), SymplecticMatrix(n, logical)
    ).canonicalized()


def repetition_code(n: int) -> EaqecCode:
    """Length-n repetition code, whichever parity applies."""
    return repetition_code_odd(n) if n % 2 else repetition_code_even(n)


def accumulator_code(n: int) -> EaqecCode:
    """The dual family: [[n,n-1,2;1]] for odd n, [[n,n-1,1;1]] for even n."""
    if n < 3:
        raise ValueError(f"length must be >= 3, got {n}")
    return dual(repetition_code(n))


def _synthesize_cnots(n: int, rows: list[int]) -> list[tuple[int, int]]:
    """CNOT list whose conjugation maps each single-qubit X_i to the X-type
    operator with mask rows[i].  Gauss-Jordan on the column space: forward
    elimination picks pivots below the diagonal, the backward pass clears the
    upper triangle, and the recorded operations reversed give the circuit."""
    cols = [sum(((rows[i] >> j) & 1) << i for i in range(n)) for j in range(n)]
    ops: list[tuple[int, int]] = []
    for i in range(n):
        if not (cols[i] >> i) & 1:
            j = next(j for j in range(i + 1, n) if (cols[j] >> i) & 1)
            cols[i] ^= cols[j]
            ops.append((j, i))
        for j in range(i + 1, n):
            if (cols[j] >> i) & 1:
                cols[j] ^= cols[i]
                ops.append((i, j))
    for i in range(n - 1, -1, -1):
        for j in range(i):
            if (cols[j] >> i) & 1:
                cols[j] ^= cols[i]
                ops.append((i, j))
    return [(c, t) for (c, t) in reversed(ops)]


def repetition_encoder_circuit(n: int) -> CliffordCircuit:
    """CNOT cascade encoding the length-n repetition code.

    Conjugating X/Z on qubit 0 through the circuit yields the logical pair;
    conjugating X/Z on qubits 1..n-1 (the ebit slots) yields generators of
    the stabilizer group.
    """
    if n < 3:
        raise ValueError(f"length must be >= 3, got {n}")
    full = (1 << n) - 1
    if n % 2:
        # Image of X_0 is X...X; ebit images alternate between a weight-2
        # block and the tail-covering operator of the cascade.
        rows = [full]
        for i in range(1, n):
            if i % 2:
                rows.append(0b11 << (i - 1))
            else:
                rows.append(full & ~((1 << (i - 1)) - 1))
    else:
        _, h2 = _even_h1_h2(n)
        rows = [full ^ 1] + h2
    return CliffordCircuit(n, tuple(_synthesize_cnots(n, rows)))


def extend_add_ebit(code: EaqecCode) -> EaqecCode:
    """Append one qubit and one ebit: every row gains an identity column and
    the stabilizer gains the X and Z operators on the new qubit.  Parameters
    go from (n, k, c) to (n+1, k, c+1); the distance cannot decrease."""
    report = validate(code)
    if not report.valid:
        raise ValueError(f"cannot extend invalid code: {report.failures}")
    n = code.n
    widen = lambda p: PauliOp(n + 1, p.x, p.z)
    stab = [_x_op(n + 1, 1 << n), _z_op(n + 1, 1 << n)]
    stab += [widen(r) for r in code.stabilizer.rows]
    logical = tuple(widen(r) for r in code.logical.rows)
    return EaqecCode(
        n + 1,
        code.k,
        code.c + 1,
        SymplecticMatrix(n + 1, tuple(stab)),
        SymplecticMatrix(n + 1, logical),
    ).canonicalized()


def demote_logical_to_ebit(code: EaqecCode, pair_index: int = 0) -> EaqecCode:
    """Move one logical symplectic pair into the stabilizer group, turning
    an information qubit into an ebit: (n, k, c) -> (n, k-1, c+1)."""
    report = validate(code)
    if not report.valid:
        raise ValueError(f"cannot transform invalid code: {report.failures}")
    if code.k < 1:
        raise ValueError("no logical pair to demote (k = 0)")
    if not 0 <= pair_index < code.k:
        raise ValueError(f"pair index {pair_index} out of range for k={code.k}")
    g, h = code.logical.rows[2 * pair_index], code.logical.rows[2 * pair_index + 1]
    logical = (
        code.logical.rows[: 2 * pair_index] + code.logical.rows[2 * pair_index + 2 :]
    )
    stab = (g, h) + code.stabilizer.rows
    return EaqecCode(
        code.n,
        code.k - 1,
        code.c + 1,
        SymplecticMatrix(code.n, stab),
        SymplecticMatrix(code.n, logical),
    ).canonicalized()


@dataclass(frozen=True)
class NonexistenceResult:
    n: int
    family: str  # "Repetition" or "Accumulator"
    exists: bool
    candidates_checked: int


def _column_sp(t: tuple[int, int, int, int]) -> int:
    u1, v1, u2, v2 = t
    return (u1 & v2) ^ (v1 & u2)


def _repetition_column_ok(t: tuple[int, int, int, int]) -> bool:
    # All three nontrivial products of the two rows must be full weight, so
    # each column must be nonzero in row 1, row 2 and their sum.
    u1, v1, u2, v2 = t
    return (u1, v1) != (0, 0) and (u2, v2) != (0, 0) and (u1 ^ u2, v1 ^ v2) != (0, 0)


def _accumulator_column_ok(t: tuple[int, int, int, int]) -> bool:
    # Detect every single-qubit error: no all-zero column in the X half, the
    # Z half, or their entrywise sum.
    u1, v1, u2, v2 = t
    return (u1, u2) != (0, 0) and (v1, v2) != (0, 0) and (u1 ^ v1, u2 ^ v2) != (0, 0)


def nonexistence_search(
    n: int,
    family: str,
    cap: int = DEFAULT_SEARCH_CAP,
    allow_odd: bool = False,
) -> NonexistenceResult:
    """Exhaustively search the two-row binary matrices behind a length-n
    [[n,1,n;n-1]] code ("Repetition": the logical pair) or [[n,n-1,2;1]] code
    ("Accumulator": the stabilizer pair).

    The distance conditions and the symplectic product only depend on the
    multiset of per-qubit columns, so the search runs over column multisets —
    the same qubit-permutation reduction the impossibility arguments use.  A
    candidate survives when its rows have symplectic product 1 and every
    column passes the family's distance condition.
    """
    if family not in ("Repetition", "Accumulator"):
        raise ValueError(f"unknown family {family!r}")
    if n % 2 and not allow_odd:
        raise ValueError(f"length must be even, got {n} (pass allow_odd to override)")
    if n > cap:
        raise ValueError(f"length {n} exceeds search cap {cap}")
    column_ok = (
        _repetition_column_ok if family == "Repetition" else _accumulator_column_ok
    )
    types = [(u1, v1, u2, v2) for u1 in (0, 1) for v1 in (0, 1)
             for u2 in (0, 1) for v2 in (0, 1)]
    checked = 0
    exists = False
    for multiset in combinations_with_replacement(types, n):
        checked += 1
        if any(not column_ok(t) for t in multiset):
            continue
        sp = 0
        for t in multiset:
            sp ^= _column_sp(t)
        if sp == 1:
            exists = True
    return NonexistenceResult(n, family, exists, checked)
