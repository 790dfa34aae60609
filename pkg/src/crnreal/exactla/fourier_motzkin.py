"""Fourier-Motzkin elimination as an independent feasibility oracle.

Only intended for small problems; it shares no code with the simplex path
apart from the problem type.
"""

from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .simplex import AT_LEAST_ONE, FREE, FeasibilityOutcome, FeasibilityProblem

MAX_VARIABLES = 12

# An inequality  sum_j a_j v_j <= c  stored as (coeffs dict, c, history set).
Row = Tuple[Dict[int, Fraction], Fraction, frozenset]


class ProblemTooLarge(ValueError):
    pass


def _substitute_equalities(problem: FeasibilityProblem):
    """Gauss-Jordan on ``A v = b``.

    Returns ``(pivots, free)`` where ``pivots`` maps a pivot variable to an
    affine expression ``(const, {free_var: coeff})``, or None when the
    equalities are inconsistent.
    """
    n = problem.nvars
    rows = [list(r) + [b] for r, b in zip(problem.A, problem.b)]
    pivot_cols = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        rows[r] = [v / p for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivot_cols.append(c)
        r += 1
    for row in rows[r:]:
        if row[-1] != 0:
            return None
    free = [c for c in range(n) if c not in pivot_cols]
    pivots = {}
    for row, c in zip(rows[:r], pivot_cols):
        pivots[c] = (row[-1], {f: -row[f] for f in free if row[f] != 0})
    return pivots, free


def _normalise(coeffs: Dict[int, Fraction], c: Fraction):
    # scale so the largest |coefficient| is 1; makes duplicates comparable
    m = max((abs(v) for v in coeffs.values()), default=Fraction(0))
    if m == 0:
        return coeffs, c
    return {k: v / m for k, v in coeffs.items()}, c / m


def _eliminate(rows: List[Row], var: int, step: int) -> List[Row]:
    pos, neg, rest = [], [], []
    for row in rows:
        a = row[0].get(var, 0)
        (pos if a > 0 else neg if a < 0 else rest).append(row)
    out = list(rest)
    seen = {(frozenset(r[0].items()), r[1]) for r in rest}
    for pc, pb, ph in pos:
        ap = pc[var]
        for nc, nb, nh in neg:
            hist = ph | nh
            if len(hist) > step + 1:
                # Chernikov's rule: such a combination is redundant
                continue
            an = -nc[var]
            coeffs = {}
            for k in set(pc) | set(nc):
                if k == var:
                    continue
                v = pc.get(k, 0) * an + nc.get(k, 0) * ap
                if v != 0:
                    coeffs[k] = v
            c = pb * an + nb * ap
            coeffs, c = _normalise(coeffs, c)
            key = (frozenset(coeffs.items()), c)
            if key in seen:
                continue
            seen.add(key)
            out.append((coeffs, c, hist))
    return out


def _bounds(rows: List[Row], var: int, values: Dict[int, Fraction]):
    lo: Optional[Fraction] = None
    hi: Optional[Fraction] = None
    for coeffs, c, _ in rows:
        a = coeffs.get(var, 0)
        if a == 0:
            continue
        rest = c - sum((v * values[k] for k, v in coeffs.items() if k != var), Fraction(0))
        bound = rest / a
        if a > 0:
            hi = bound if hi is None else min(hi, bound)
        else:
            lo = bound if lo is None else max(lo, bound)
    return lo, hi


def fm_oracle(problem: FeasibilityProblem) -> FeasibilityOutcome:
    """Decide feasibility by Fourier-Motzkin elimination.

    Raises ProblemTooLarge for more than ``MAX_VARIABLES`` unknowns.
    """
    n = problem.nvars
    if n > MAX_VARIABLES:
        raise ProblemTooLarge(f"fm_oracle accepts at most {MAX_VARIABLES} variables, got {n}")
    if n == 0:
        ok = all(b == 0 for b in problem.b)
        return FeasibilityOutcome(ok, () if ok else None)
    sub = _substitute_equalities(problem)
    if sub is None:
        return FeasibilityOutcome(False)
    pivots, free = sub

    # sign constraints rewritten over the free variables:  -v <= -lower
    rows: List[Row] = []
    for j, s in enumerate(problem.signs):
        if s == FREE:
            continue
        lower = Fraction(1) if s == AT_LEAST_ONE else Fraction(0)
        if j in pivots:
            const, expr = pivots[j]
            coeffs = {k: -v for k, v in expr.items()}
            c = const - lower
        else:
            coeffs, c = {j: Fraction(-1)}, -lower
        if not coeffs:
            if c < 0:
                return FeasibilityOutcome(False)
            continue
        coeffs, c = _normalise(coeffs, c)
        rows.append((coeffs, c, frozenset([len(rows)])))

    stages = [rows]
    order = []
    remaining = set(free)
    step = 0
    while remaining:
        # eliminate the variable producing the fewest new rows
        def cost(v):
            p = sum(1 for r in rows if r[0].get(v, 0) > 0)
            q = sum(1 for r in rows if r[0].get(v, 0) < 0)
            return (p * q - p - q, v)

        var = min(remaining, key=cost)
        remaining.discard(var)
        step += 1
        rows = _eliminate(rows, var, step)
        order.append(var)
        stages.append(rows)

    if any(c < 0 for coeffs, c, _ in rows if not coeffs):
        return FeasibilityOutcome(False)

    values: Dict[int, Fraction] = {}
    for k in range(len(order) - 1, -1, -1):
        var = order[k]
        lo, hi = _bounds(stages[k], var, values)
        if lo is not None:
            values[var] = lo
        elif hi is not None:
            values[var] = hi
        else:
            values[var] = Fraction(0)
    witness = [Fraction(0)] * n
    for j in free:
        witness[j] = values[j]
    for j, (const, expr) in pivots.items():
        witness[j] = const + sum((v * values[k] for k, v in expr.items()), Fraction(0))
    witness = tuple(witness)
    if not problem.is_satisfied_by(witness):  # pragma: no cover - would be an FM bug
        raise AssertionError("Fourier-Motzkin back-substitution produced an invalid point")
    return FeasibilityOutcome(True, witness)
