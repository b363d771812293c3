"""Depolarizing-channel analysis: analytic error bounds and a seeded
Monte Carlo simulator of minimum-weight (MAP) decoding.

All channel quantities are 64-bit floats; tolerances are 1e-9 for the
Bhattacharyya parameter and 1e-6 for compound expressions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from .code import EaqecCode, validate
from .enumerators import WeightEnumerator

__all__ = [
    "bhattacharyya",
    "weight_enum_error_bound",
    "random_code_error_bound",
    "rate_threshold",
    "hashing_bound",
    "simulate_map_block_error",
    "SimulationResult",
    "code_curve_subject",
    "random_curve_subject",
    "emit_error_curve",
]

P_MAX = 0.75  # the channel is completely depolarizing at p = 3/4
_WILSON_Z = 1.959963984540054  # 95% two-sided normal quantile
_CHUNK = 1 << 16


def _check_p(p: float, closed: bool = False) -> None:
    hi_ok = p <= P_MAX if closed else p < P_MAX
    if not (0 <= p and hi_ok):
        raise ValueError(f"depolarizing probability {p} outside [0, 3/4)")


def bhattacharyya(p: float) -> float:
    """gamma = 2*sqrt(p(1-p)/3) + 2p/3; accepts the closed boundary p = 3/4
    (where gamma = 1) for limit evaluations."""
    _check_p(p, closed=True)
    return 2.0 * math.sqrt(p * (1.0 - p) / 3.0) + 2.0 * p / 3.0


def weight_enum_error_bound(b: WeightEnumerator, p: float) -> float:
    """Block-error bound B(gamma) - 1 for a maximal-entanglement code with
    logical-group enumerator b."""
    _check_p(p)
    gamma = bhattacharyya(p)
    return sum(b.coeffs[w] * gamma**w for w in range(1, b.n + 1))


def random_code_error_bound(n: int, k: int, p: float) -> float:
    """Expected block-error bound ((2^2k - 1)/(2^2n - 1)) ((1+3 gamma)^n - 1)
    over random maximal-entanglement codes."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n} k={k}")
    _check_p(p)
    gamma = bhattacharyya(p)
    return (2 ** (2 * k) - 1) / (2 ** (2 * n) - 1) * ((1.0 + 3.0 * gamma) ** n - 1.0)


def rate_threshold(p: float) -> float:
    """Rate below which the random-code bound vanishes: 1 - log2(1+3 gamma)/2."""
    _check_p(p, closed=True)
    return 1.0 - 0.5 * math.log2(1.0 + 3.0 * bhattacharyya(p))


def hashing_bound(p: float) -> float:
    """1 - (H2(p) + p log2(3))/2 with H2 the binary entropy."""
    _check_p(p)
    h2 = 0.0
    if 0.0 < p < 1.0:
        h2 = -p * math.log2(p) - (1.0 - p) * math.log2(1.0 - p)
    return 1.0 - 0.5 * (h2 + p * math.log2(3.0))


@dataclass(frozen=True)
class SimulationResult:
    trials: int
    errors: int
    fraction: float
    halfwidth: float  # Wilson 95% half-width

    def __str__(self) -> str:
        return (
            f"{self.errors}/{self.trials} block errors: "
            f"{self.fraction:.6f} +- {self.halfwidth:.6f}"
        )


def _wilson_halfwidth(errors: int, trials: int) -> float:
    z = _WILSON_Z
    phat = errors / trials
    denom = 1.0 + z * z / trials
    return (
        z
        * math.sqrt(phat * (1.0 - phat) / trials + z * z / (4.0 * trials * trials))
        / denom
    )


def _leader_table(code: EaqecCode) -> np.ndarray:
    """Boolean table over all 2^(2n) Pauli bit patterns: True when the
    pattern is the minimum-weight representative of its syndrome, ties
    broken by lexicographic Pauli string order (I < X < Y < Z)."""
    n = code.n
    nbits = 2 * n
    errs = np.arange(1 << nbits, dtype=np.int64)
    x = errs & ((1 << n) - 1)
    z = errs >> n

    pop = np.zeros(1 << n, dtype=np.int64)
    for i in range(1, 1 << n):
        pop[i] = pop[i >> 1] + (i & 1)
    weight = pop[x | z]

    parity = np.zeros(1 << nbits, dtype=np.int64)
    for i in range(1, 1 << nbits):
        parity[i] = parity[i >> 1] ^ (i & 1)
    synd = np.zeros(1 << nbits, dtype=np.int64)
    for i, row in enumerate(code.stabilizer.rows):
        mask = row.z | (row.x << n)
        synd |= parity[errs & mask] << i

    # Lexicographic rank of the Pauli string, qubit 0 most significant.
    char_rank = np.array([0, 1, 3, 2], dtype=np.int64)  # I, X, Z, Y
    lex = np.zeros(1 << nbits, dtype=np.int64)
    for j in range(n):
        lex = lex * 4 + char_rank[((x >> j) & 1) | (((z >> j) & 1) << 1)]

    order = np.lexsort((lex, weight))
    synd_sorted = synd[order]
    _, first = np.unique(synd_sorted, return_index=True)
    is_leader = np.zeros(1 << nbits, dtype=bool)
    is_leader[errs[order][first]] = True
    return is_leader


def simulate_map_block_error(
    code: EaqecCode, p: float, trials: int, seed: int
) -> SimulationResult:
    """Monte Carlo block-error rate of minimum-weight decoding over the
    depolarizing channel.

    Errors are sampled i.i.d. per qubit; the decoder returns the coset
    leader of the observed syndrome, and a block error is counted whenever
    the sampled error is not that leader (maximal entanglement leaves no
    degeneracy).  Trials are drawn in fixed-size chunks keyed by
    (seed, chunk index) with a counter-based generator, so results are
    bit-identical regardless of scheduling.
    """
    report = validate(code)
    if not report.valid:
        raise ValueError(f"cannot simulate invalid code: {report.failures}")
    if code.c != code.n - code.k:
        raise ValueError("simulation requires a maximal-entanglement code")
    if code.n > 8:
        raise ValueError(f"decoder table for n={code.n} exceeds the n <= 8 limit")
    if trials < 1:
        raise ValueError("need at least one trial")
    _check_p(p)

    is_leader = _leader_table(code)
    n = code.n
    errors = 0
    done = 0
    chunk_idx = 0
    while done < trials:
        m = min(_CHUNK, trials - done)
        rng = np.random.Generator(np.random.Philox(key=[seed, chunk_idx]))
        u = rng.random((m, n))
        xbits = u < 2.0 * p / 3.0
        zbits = (u >= p / 3.0) & (u < p)
        e = np.zeros(m, dtype=np.int64)
        for j in range(n):
            e |= xbits[:, j].astype(np.int64) << j
            e |= zbits[:, j].astype(np.int64) << (j + n)
        errors += int(np.count_nonzero(~is_leader[e]))
        done += m
        chunk_idx += 1
    return SimulationResult(
        trials, errors, errors / trials, _wilson_halfwidth(errors, trials)
    )


CurveSubject = tuple[str, Callable[[float], float]]


def code_curve_subject(label: str, b: WeightEnumerator) -> CurveSubject:
    """Curve of the weight-enumerator bound for one code."""
    return (label, lambda p: weight_enum_error_bound(b, p))


def random_curve_subject(n: int, k: int) -> CurveSubject:
    """Curve of the random-code expectation at parameters (n, k)."""
    return (f"random[{n},{k}]", lambda p: random_code_error_bound(n, k, p))


def emit_error_curve(
    subjects: Iterable[CurveSubject], p_grid: Sequence[float]
) -> str:
    """CSV with one row per (subject, p): subject,p,gamma,bound."""
    for p in p_grid:
        _check_p(p)
    lines = ["subject,p,gamma,bound"]
    for label, bound_fn in subjects:
        for p in p_grid:
            lines.append(
                f"{label},{p:.10g},{bhattacharyya(p):.10g},{bound_fn(p):.10g}"
            )
    return "\n".join(lines) + "\n"
