"""Exact rational LP feasibility and integer branch-and-bound.

No floating point anywhere: infeasibility verdicts are proofs, so all
pivoting is done over exact rationals (gmpy2.mpq when available, else
fractions.Fraction).  The simplex uses Bland's rule, which cannot cycle.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Mapping, Sequence, Union

try:
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover - gmpy2 is an optional speedup
    from fractions import Fraction as _Q

__all__ = [
    "Rational",
    "Constraint",
    "IpProblem",
    "IpStatus",
    "IpVerdict",
    "solve_ip",
    "lp_feasible",
]

Rational = _Q
RationalLike = Union[int, "Rational"]

DEFAULT_NODE_LIMIT = 10**6


@dataclass(frozen=True)
class Constraint:
    """coeffs . x  <op>  rhs, with op one of '<=', '>=', '='."""

    coeffs: tuple[tuple[str, RationalLike], ...]
    op: str
    rhs: RationalLike

    def __post_init__(self) -> None:
        if self.op not in ("<=", ">=", "="):
            raise ValueError(f"unknown constraint operator {self.op!r}")

    @classmethod
    def make(cls, coeffs: Mapping[str, RationalLike], op: str, rhs: RationalLike) -> "Constraint":
        return cls(tuple(sorted(coeffs.items())), op, rhs)

    def evaluate(self, assignment: Mapping[str, RationalLike]) -> bool:
        lhs = sum((c * assignment[v] for v, c in self.coeffs), _Q(0))
        if self.op == "<=":
            return lhs <= self.rhs
        if self.op == ">=":
            return lhs >= self.rhs
        return lhs == self.rhs


@dataclass(frozen=True)
class IpProblem:
    """Feasibility system over named nonnegative integer variables."""

    variables: tuple[str, ...]
    constraints: tuple[Constraint, ...]

    def __post_init__(self) -> None:
        declared = set(self.variables)
        for con in self.constraints:
            for v, _ in con.coeffs:
                if v not in declared:
                    raise ValueError(f"constraint references undeclared variable {v!r}")

    def check_witness(self, witness: Mapping[str, int]) -> bool:
        if set(witness) != set(self.variables):
            return False
        if any(val < 0 for val in witness.values()):
            return False
        return all(con.evaluate(witness) for con in self.constraints)


class IpStatus(enum.Enum):
    INFEASIBLE = "infeasible"
    INTEGER_FEASIBLE = "integer_feasible"
    UNDECIDED = "undecided"


@dataclass(frozen=True)
class IpVerdict:
    status: IpStatus
    witness: dict[str, int] | None
    nodes_explored: int
    lp_decided: bool = False  # True when the LP relaxation settled the question

    def __post_init__(self) -> None:
        if self.status is IpStatus.INTEGER_FEASIBLE and self.witness is None:
            raise ValueError("integer-feasible verdict requires a witness")


def _solve_lp(
    nvars: int,
    rows: Sequence[tuple[Sequence[RationalLike], str, RationalLike]],
) -> list | None:
    """Phase-1 simplex feasibility for  rows  over x >= 0.

    Each row is (dense coeffs, op, rhs).  Returns a solution vector or None.
    """
    zero, one = _Q(0), _Q(1)
    m = len(rows)
    # Normalize to rhs >= 0 and count auxiliary columns.
    norm = []
    n_slack = sum(1 for _, op, _ in rows if op != "=")
    for coeffs, op, rhs in rows:
        coeffs = [_Q(c) for c in coeffs]
        rhs = _Q(rhs)
        if rhs < 0:
            coeffs = [-c for c in coeffs]
            rhs = -rhs
            op = {"<=": ">=", ">=": "<=", "=": "="}[op]
        norm.append((coeffs, op, rhs))

    total = nvars + n_slack + m  # worst case: one artificial per row
    tableau: list[list] = []
    basis: list[int] = []
    cost = [zero] * total
    slack_at = nvars
    art_at = nvars + n_slack
    n_art = 0
    for coeffs, op, rhs in norm:
        row = coeffs + [zero] * (total - nvars)
        if op == "<=":
            row[slack_at] = one
            basis.append(slack_at)
            slack_at += 1
        elif op == ">=":
            row[slack_at] = -one
            slack_at += 1
            row[art_at] = one
            cost[art_at] = one
            basis.append(art_at)
            art_at += 1
            n_art += 1
        else:
            row[art_at] = one
            cost[art_at] = one
            basis.append(art_at)
            art_at += 1
            n_art += 1
        row.append(rhs)
        tableau.append(row)

    ncols = total  # column index of rhs is `total`
    # Objective row z_j = cost_j - sum_i cost[basis[i]] * T[i][j], kept
    # incrementally up to date through pivots.
    zrow = list(cost) + [zero]
    for i, bi in enumerate(basis):
        if cost[bi] != zero:
            ci = cost[bi]
            trow = tableau[i]
            for j in range(ncols + 1):
                if trow[j] != zero:
                    zrow[j] -= ci * trow[j]

    while True:
        # Bland: entering = smallest index with negative reduced cost.
        enter = -1
        for j in range(ncols):
            if zrow[j] < zero:
                enter = j
                break
        if enter < 0:
            break
        # Ratio test, ties broken by smallest basis variable (Bland).
        leave = -1
        best = None
        for i in range(m):
            a = tableau[i][enter]
            if a > zero:
                ratio = tableau[i][ncols] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave < 0:
            # Phase-1 objective is bounded below by 0, so this cannot happen.
            raise RuntimeError("unbounded phase-1 objective")
        # Pivot on (leave, enter).
        prow = tableau[leave]
        piv = prow[enter]
        if piv != one:
            inv = one / piv
            tableau[leave] = prow = [a * inv for a in prow]
        for i in range(m):
            if i != leave:
                f = tableau[i][enter]
                if f != zero:
                    trow = tableau[i]
                    tableau[i] = [a - f * b for a, b in zip(trow, prow)]
        f = zrow[enter]
        if f != zero:
            zrow = [a - f * b for a, b in zip(zrow, prow)]
        basis[leave] = enter

    if -zrow[ncols] > zero:  # optimum of sum(artificials) is positive
        return None
    solution = [zero] * nvars
    for i, bi in enumerate(basis):
        if bi < nvars:
            solution[bi] = tableau[i][ncols]
    return solution


def _dense_rows(problem: IpProblem) -> list[tuple[list, str, object]]:
    index = {v: i for i, v in enumerate(problem.variables)}
    nvars = len(problem.variables)
    rows = []
    for con in problem.constraints:
        dense = [0] * nvars
        for v, coef in con.coeffs:
            dense[index[v]] += coef
        rows.append((dense, con.op, con.rhs))
    return rows


def lp_feasible(problem: IpProblem) -> bool:
    """Whether the LP relaxation (reals >= 0) has any solution.  A False
    answer proves integer infeasibility as well."""
    return _solve_lp(len(problem.variables), _dense_rows(problem)) is not None


def solve_ip(problem: IpProblem, node_limit: int = DEFAULT_NODE_LIMIT) -> IpVerdict:
    """Exact integer feasibility by LP relaxation plus branch-and-bound.

    Depth-first, branching on the most fractional variable with a
    floor/ceiling split.  Terminates with INFEASIBLE (tree exhausted or LP
    relaxation empty), INTEGER_FEASIBLE (verified witness found), or
    UNDECIDED (node limit hit first).
    """
    names = problem.variables
    nvars = len(names)
    base_rows = _dense_rows(problem)

    # Each stack entry is a list of extra bound rows added by branching.
    stack: list[list[tuple[list, str, int]]] = [[]]
    nodes = 0
    lp_decided = True
    while stack:
        if nodes >= node_limit:
            return IpVerdict(IpStatus.UNDECIDED, None, nodes, lp_decided=False)
        extra = stack.pop()
        nodes += 1
        sol = _solve_lp(nvars, base_rows + extra)
        if sol is None:
            continue
        frac_i = -1
        frac_score = None
        for i, val in enumerate(sol):
            fpart = val - int(val)
            if fpart != 0:
                score = abs(fpart - _Q(1, 2))
                if frac_score is None or score < frac_score:
                    frac_score = score
                    frac_i = i
        if frac_i < 0:
            witness = {v: int(sol[i]) for i, v in enumerate(names)}
            assert problem.check_witness(witness), "witness replay failed"
            return IpVerdict(
                IpStatus.INTEGER_FEASIBLE, witness, nodes, lp_decided=(nodes == 1)
            )
        lp_decided = False
        val = sol[frac_i]
        unit = [0] * nvars
        unit[frac_i] = 1
        floor_v = int(val) if val >= 0 else -int(-val) - 1
        stack.append([*extra, (unit, ">=", floor_v + 1)])
        stack.append([*extra, (unit, "<=", floor_v)])
    return IpVerdict(IpStatus.INFEASIBLE, None, nodes, lp_decided=lp_decided)
