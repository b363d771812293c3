"""Distance bounds: Singleton, Hamming, Plotkin, Gilbert-Varshamov, and the
two linear-programming feasibility systems decided by the exact IP solver.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import NamedTuple

from .enumerators import krawtchouk
from .simplex import (
    DEFAULT_NODE_LIMIT,
    Constraint,
    IpProblem,
    IpStatus,
    IpVerdict,
    lp_feasible,
    solve_ip,
)

__all__ = [
    "singleton_bound",
    "hamming_bound",
    "plotkin_bound",
    "gilbert_varshamov",
    "build_lp_maximal",
    "build_lp_general",
    "lp_bound",
    "bound_report",
    "HammingBound",
    "LpBoundResult",
    "BoundReport",
]


def _check_params(n: int, k: int, c: int) -> None:
    if n < 1 or k < 0 or c < 0 or k + c > n:
        raise ValueError(f"invalid parameters n={n} k={k} c={c}")


def _sphere(n: int, t: int) -> int:
    """Number of Pauli errors of weight at most t on n qubits."""
    return sum(3**j * comb(n, j) for j in range(t + 1))


def singleton_bound(n: int, k: int, c: int) -> int:
    """Largest d consistent with n - k + c >= 2(d - 1)."""
    _check_params(n, k, c)
    return (n - k + c) // 2 + 1


class HammingBound(NamedTuple):
    d: int
    applicable: bool  # sphere packing assumes no degeneracy; certain when c = n-k


def hamming_bound(n: int, k: int, c: int) -> HammingBound:
    """Largest d whose error spheres fit in the syndrome space 2^(n-k+c).

    Odd d = 2t+1 needs sphere(n, t) <= 2^(n-k+c).  Even d = 2t+2 is allowed
    only when the length-(n-1) shortened system also fits, which rules out
    the vacuous d = 2 at zero redundancy.  d is capped at n.  The bound only
    holds for non-degenerate codes, hence the applicability flag; maximal
    entanglement (c = n-k) forces non-degeneracy.
    """
    _check_params(n, k, c)
    budget = n - k + c
    best = 1
    for d in range(1, n + 1):
        t = (d - 1) // 2
        if _sphere(n, t) > 1 << budget:
            break
        if d % 2 == 0:
            if n < 2 or (_sphere(n - 1, t) << k) > (1 << (n - 1 + c)):
                continue
        best = d
    return HammingBound(best, applicable=(c == n - k))


def plotkin_bound(n: int, k: int) -> int:
    """floor(3nM / (4(M-1))) with M = 2^(2k); independent of the ebit count."""
    if k < 1:
        raise ValueError("Plotkin bound needs at least one information qubit")
    m = 2 ** (2 * k)
    return (3 * n * m) // (4 * (m - 1))


def gilbert_varshamov(n: int, d: int, c: int) -> int | None:
    """Guaranteed information qubits at distance d, or None if the value
    falls outside [0, n - c] and existence is not guaranteed."""
    if d < 1:
        raise ValueError("distance must be at least 1")
    sphere = _sphere(n, d - 1)
    target = 1 << (n + c)
    # k = ceil(log2(2^(n+c) / sphere)): smallest integer, possibly negative,
    # with sphere * 2^k >= 2^(n+c)
    k = 0
    if sphere < target:
        while sphere << k < target:
            k += 1
    else:
        while sphere >= target << (1 - k):
            k -= 1
    return k if 0 <= k <= n - c else None


def _macwilliams_equalities(
    n: int, src: str, dst: str, log2_src_order: int
) -> list[Constraint]:
    """dst_w * |src group| = sum_w' P_w(w', n) src_w' for every w."""
    cons = []
    order = 2**log2_src_order
    for w in range(n + 1):
        coeffs = {f"{src}{wp}": krawtchouk(w, wp, n) for wp in range(n + 1)}
        coeffs[f"{dst}{w}"] = coeffs.get(f"{dst}{w}", 0) - order
        cons.append(Constraint.make(coeffs, "=", 0))
    return cons


def build_lp_maximal(n: int, k: int, d: int, dual: bool = False) -> IpProblem:
    """Feasibility system for a maximal-entanglement (c = n-k) code of
    distance >= d: enumerators A (stabilizer) and B (logical) linked by the
    MacWilliams identity, with B_w = 0 below d (A_w = 0 for the dual-code
    variant)."""
    if not (1 <= k <= n) or d < 1:
        raise ValueError(f"invalid parameters n={n} k={k} d={d}")
    avars = [f"A{w}" for w in range(n + 1)]
    bvars = [f"B{w}" for w in range(n + 1)]
    s_order = 2 * (n - k)  # |S_S| = 2^(2(n-k))
    l_order = 2 * k  # |L| = 2^(2k)
    cons: list[Constraint] = [
        Constraint.make({"A0": 1}, "=", 1),
        Constraint.make({"B0": 1}, "=", 1),
        Constraint.make({v: 1 for v in avars}, "=", 2**s_order),
        Constraint.make({v: 1 for v in bvars}, "=", 2**l_order),
    ]
    for w in range(1, n + 1):
        cons.append(Constraint.make({f"A{w}": 1}, "<=", 2**s_order))
        cons.append(Constraint.make({f"B{w}": 1}, "<=", 2**l_order))
    cons.extend(_macwilliams_equalities(n, "A", "B", s_order))
    zeroed = "A" if dual else "B"
    for w in range(1, d):
        cons.append(Constraint.make({f"{zeroed}{w}": 1}, "=", 0))
    return IpProblem(tuple(avars + bvars), tuple(cons))


def build_lp_general(n: int, k: int, c: int, d: int, dual: bool = False) -> IpProblem:
    """Four-enumerator feasibility system for 0 < c < n-k: A (stabilizer),
    B (logical x ancilla), C (ancilla), D (normalizer of the ancilla group),
    with both MacWilliams links, the dominance inequalities, and the
    distance block B_w = C_w below d (A_w = C_w for the dual variant)."""
    _check_params(n, k, c)
    if not (0 < c < n - k) or d < 1:
        raise ValueError(f"general LP needs 0 < c < n-k, got n={n} k={k} c={c}")
    names = [f"{g}{w}" for g in "ABCD" for w in range(n + 1)]
    ord_a = n - k + c  # |S_S x S_I|
    ord_b = n + k - c  # |L x S_I|
    ord_c = n - k - c  # |S_I|
    ord_d = n + k + c  # |L x S_S x S_I|
    cons: list[Constraint] = []
    for g in "ABCD":
        cons.append(Constraint.make({f"{g}0": 1}, "=", 1))
    for g, o in zip("ABCD", (ord_a, ord_b, ord_c, ord_d)):
        cons.append(Constraint.make({f"{g}{w}": 1 for w in range(n + 1)}, "=", 2**o))
        for w in range(1, n + 1):
            cons.append(Constraint.make({f"{g}{w}": 1}, "<=", 2**o))
    for w in range(1, n + 1):
        for g in "ABC":
            cons.append(Constraint.make({f"D{w}": 1, f"{g}{w}": -1}, ">=", 0))
        for g in "AB":
            cons.append(Constraint.make({f"{g}{w}": 1, f"C{w}": -1}, ">=", 0))
    cons.extend(_macwilliams_equalities(n, "A", "B", ord_a))
    cons.extend(_macwilliams_equalities(n, "C", "D", ord_c))
    kept = "A" if dual else "B"
    for w in range(1, d):
        cons.append(Constraint.make({f"{kept}{w}": 1, f"C{w}": -1}, "=", 0))
    return IpProblem(tuple(names), tuple(cons))


# Default branch-and-bound budget for confirming the returned bound at the
# integer level; the LP-level verdicts that produce the bound are exact and
# need no budget.
DEFAULT_CONFIRM_NODES = 500


@dataclass(frozen=True)
class LpBoundResult:
    value: int
    # True when an integer witness certifies a code-consistent enumerator at
    # d = value; False when branch-and-bound ran out of budget, leaving the
    # bound decided at the LP-relaxation level only.
    integer_certified: bool
    # (d, outcome, nodes) per query: lp_feasible / lp_infeasible /
    # integer_feasible / integer_infeasible / undecided
    trace: tuple[tuple[int, str, int], ...] = ()


def lp_bound(
    n: int,
    k: int,
    c: int,
    node_limit: int = DEFAULT_NODE_LIMIT,
    confirm_nodes: int = DEFAULT_CONFIRM_NODES,
) -> LpBoundResult:
    """Smallest infeasible d, minus one.

    Scans d = 2, 3, ... up to singleton_bound + 1 (the Singleton bound is
    proven independently, so the search always terminates) for the first d
    whose LP relaxation is infeasible — an exact proof that no such code
    exists, since infeasibility is monotone in d (the d-block of constraints
    only grows).  Branch-and-bound then tries to confirm the returned value
    at the integer level under a node budget (confirm_nodes, 0 to skip); a
    proof of integer infeasibility tightens the bound further, and the
    result records which level decided.
    """
    if k < 1:
        raise ValueError("LP bound needs at least one information qubit")
    _check_params(n, k, c)
    if c != n - k and not (0 < c < n - k):
        raise ValueError(f"need c = n-k or 0 < c < n-k, got n={n} k={k} c={c}")

    def problem(d: int) -> IpProblem:
        if c == n - k:
            return build_lp_maximal(n, k, d)
        return build_lp_general(n, k, c, d)

    cap = singleton_bound(n, k, c) + 1
    trace: list[tuple[int, str, int]] = []
    value = cap - 1  # the Singleton bound itself, if every relaxation passes
    for d in range(2, cap + 1):
        feasible = lp_feasible(problem(d))
        trace.append((d, "lp_feasible" if feasible else "lp_infeasible", 0))
        if not feasible:
            value = d - 1
            break
    certified = value < 2  # d = 1 imposes no distance block at all
    budget = min(node_limit, confirm_nodes)
    while budget > 0 and value >= 2:
        verdict = solve_ip(problem(value), node_limit=budget)
        if verdict.status is IpStatus.INTEGER_FEASIBLE:
            trace.append((value, "integer_feasible", verdict.nodes_explored))
            certified = True
            break
        if verdict.status is IpStatus.UNDECIDED:
            trace.append((value, "undecided", verdict.nodes_explored))
            break
        # Integer infeasibility is a stronger proof: tighten the bound.
        trace.append((value, "integer_infeasible", verdict.nodes_explored))
        value -= 1
        certified = value < 2
    return LpBoundResult(value, certified, tuple(trace))


@dataclass(frozen=True)
class BoundReport:
    n: int
    k: int
    c: int
    singleton: int
    hamming: int
    hamming_applicable: bool
    plotkin: int | None
    lp_upper: int | None
    gv_distance: int  # largest d whose existence Gilbert-Varshamov guarantees
    lower: int | None
    lower_provenance: str | None
    final_upper: int
    upper_provenance: str = ""


def _gv_distance(n: int, k: int, c: int) -> int:
    best = 0
    for d in range(1, n + 1):
        gk = gilbert_varshamov(n, d, c)
        if gk is not None and gk >= k:
            best = d
    return best


def bound_report(
    n: int,
    k: int,
    c: int,
    lower: tuple[int, str] | None = None,
    node_limit: int = DEFAULT_NODE_LIMIT,
    confirm_nodes: int = DEFAULT_CONFIRM_NODES,
    use_lp: bool = True,
) -> BoundReport:
    """Assemble all bounds for one parameter set.

    final_upper is the minimum of the applicable upper bounds, with the
    even-length exclusions applied: no [[n,1,n;n-1]] and no [[n,n-1,2;1]]
    code exists for n even, capping those cells at n-1 and 1.
    """
    _check_params(n, k, c)
    singleton = singleton_bound(n, k, c)
    ham = hamming_bound(n, k, c)
    plotkin = plotkin_bound(n, k) if k >= 1 else None
    lp_upper = None
    if use_lp and k >= 1 and (c == n - k or 0 < c < n - k):
        lp_upper = lp_bound(
            n, k, c, node_limit=node_limit, confirm_nodes=confirm_nodes
        ).value

    candidates: list[tuple[int, str]] = [(singleton, "Singleton")]
    if ham.applicable:
        candidates.append((ham.d, "Hamming"))
    if plotkin is not None:
        candidates.append((plotkin, "Plotkin"))
    if lp_upper is not None:
        candidates.append((lp_upper, "LP"))
    if n % 2 == 0 and k == 1 and c == n - 1:
        candidates.append((n - 1, "Theorem6"))
    if n % 2 == 0 and k == n - 1 and c == 1:
        candidates.append((1, "Theorem7"))
    final_upper, provenance = min(candidates, key=lambda t: (t[0], t[1]))

    low_val, low_tag = (lower if lower is not None else (None, None))
    if low_val is not None and low_val > final_upper:
        raise ValueError(
            f"lower bound {low_val} exceeds computed upper {final_upper} at "
            f"n={n} k={k} c={c}"
        )
    return BoundReport(
        n=n,
        k=k,
        c=c,
        singleton=singleton,
        hamming=ham.d,
        hamming_applicable=ham.applicable,
        plotkin=plotkin,
        lp_upper=lp_upper,
        gv_distance=_gv_distance(n, k, c),
        lower=low_val,
        lower_provenance=low_tag,
        final_upper=final_upper,
        upper_provenance=provenance,
    )
