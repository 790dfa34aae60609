"""Linear feasibility in exact rational arithmetic.

Problems are stated as ``A v = b`` with a sign constraint on each unknown
(free, ``v >= 0`` or ``v >= 1``).  They are solved with a two-phase tableau
simplex using Bland's rule, so the method terminates on degenerate input.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

FREE = "free"
NONNEG = "nonneg"
AT_LEAST_ONE = "geq1"
SIGNS = (FREE, NONNEG, AT_LEAST_ONE)

Vector = Tuple[Fraction, ...]


@dataclass(frozen=True)
class FeasibilityProblem:
    """Equality constraints ``A v = b`` plus per-variable sign constraints.

    Attributes:
        A: constraint rows, each of length ``nvars``.
        b: right-hand side, one entry per row.
        signs: one of ``"free"``, ``"nonneg"``, ``"geq1"`` per variable.
        names: optional labels for the variables (reporting only).
    """

    A: Tuple[Vector, ...]
    b: Vector
    signs: Tuple[str, ...]
    names: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        if len(self.A) != len(self.b):
            raise ValueError(f"{len(self.A)} rows but {len(self.b)} right-hand sides")
        for row in self.A:
            if len(row) != len(self.signs):
                raise ValueError(f"row of length {len(row)} for {len(self.signs)} variables")
        for s in self.signs:
            if s not in SIGNS:
                raise ValueError(f"unknown sign constraint {s!r}")
        if self.names is not None and len(self.names) != len(self.signs):
            raise ValueError("names must match the number of variables")

    @classmethod
    def build(cls, A, b, signs=None, names=None) -> "FeasibilityProblem":
        """Convenience constructor converting entries to Fractions.

        ``signs`` defaults to nonnegativity for every variable.
        """
        A = tuple(tuple(Fraction(v) for v in row) for row in A)
        b = tuple(Fraction(v) for v in b)
        if signs is None:
            n = len(A[0]) if A else 0
            signs = (NONNEG,) * n
        return cls(A, b, tuple(signs), None if names is None else tuple(names))

    @property
    def nvars(self) -> int:
        return len(self.signs)

    def residual(self, v: Sequence[Fraction]) -> List[Fraction]:
        return [sum((a * x for a, x in zip(row, v)), Fraction(0)) - rhs
                for row, rhs in zip(self.A, self.b)]

    def is_satisfied_by(self, v: Sequence[Fraction]) -> bool:
        """Exact check of every equality and sign constraint."""
        if len(v) != self.nvars:
            return False
        if any(r != 0 for r in self.residual(v)):
            return False
        for x, s in zip(v, self.signs):
            if s == NONNEG and x < 0:
                return False
            if s == AT_LEAST_ONE and x < 1:
                return False
        return True

    def with_equalities(self, rows, rhs) -> "FeasibilityProblem":
        rows = tuple(tuple(Fraction(v) for v in r) for r in rows)
        rhs = tuple(Fraction(v) for v in rhs)
        return FeasibilityProblem(self.A + rows, self.b + rhs, self.signs, self.names)

    def with_zeros(self, indices) -> "FeasibilityProblem":
        """Pin the given variables to zero."""
        rows = []
        for i in sorted(set(indices)):
            row = [Fraction(0)] * self.nvars
            row[i] = Fraction(1)
            rows.append(row)
        return self.with_equalities(rows, [0] * len(rows))


@dataclass(frozen=True)
class FeasibilityOutcome:
    feasible: bool
    witness: Optional[Vector] = None

    @property
    def status(self) -> str:
        return "Feasible" if self.feasible else "Infeasible"

    def __bool__(self):
        return self.feasible


class Unbounded(Exception):
    pass


def _pivot(T: List[List[Fraction]], obj: List[Fraction], r: int, c: int) -> None:
    row = T[r]
    p = row[c]
    if p != 1:
        row[:] = [v / p for v in row]
    for i, other in enumerate(T):
        if i != r:
            f = other[c]
            if f:
                other[:] = [a - f * b for a, b in zip(other, row)]
    f = obj[c]
    if f:
        obj[:] = [a - f * b for a, b in zip(obj, row)]


def _run(T, obj, basis, allowed) -> None:
    """Maximise with Bland's rule.  ``obj`` holds reduced costs; the last entry
    holds minus the current objective value."""
    while True:
        entering = next((j for j in allowed if obj[j] > 0), None)
        if entering is None:
            return
        best = None
        for i, row in enumerate(T):
            a = row[entering]
            if a > 0:
                ratio = row[-1] / a
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            raise Unbounded
        r = best[1]
        _pivot(T, obj, r, entering)
        basis[r] = entering


class _StandardForm:
    """Map ``A v = b`` with sign constraints onto ``A' u = b'``, ``u >= 0``."""

    def __init__(self, problem: FeasibilityProblem):
        self.problem = problem
        self.columns: List[Tuple[int, int]] = []  # (variable, +1/-1)
        shift = [Fraction(0)] * problem.nvars
        for j, s in enumerate(problem.signs):
            if s == FREE:
                self.columns.append((j, 1))
                self.columns.append((j, -1))
            else:
                self.columns.append((j, 1))
                if s == AT_LEAST_ONE:
                    shift[j] = Fraction(1)
        self.shift = shift
        rows, rhs = [], []
        for arow, b in zip(problem.A, problem.b):
            b = b - sum((a * s for a, s in zip(arow, shift)), Fraction(0))
            row = [arow[j] * sgn for j, sgn in self.columns]
            if b < 0:
                row = [-v for v in row]
                b = -b
            rows.append(row)
            rhs.append(b)
        self.rows, self.rhs = rows, rhs

    def recover(self, u: Sequence[Fraction]) -> Vector:
        v = list(self.shift)
        for (j, sgn), x in zip(self.columns, u):
            v[j] += sgn * x
        return tuple(v)

    def objective(self, c: Sequence[Fraction]) -> List[Fraction]:
        return [c[j] * sgn for j, sgn in self.columns]


def _two_phase(problem: FeasibilityProblem, c: Optional[Sequence[Fraction]]):
    """Returns ``(witness, value)``; witness is None when infeasible.

    Raises Unbounded when the objective is unbounded above.
    """
    sf = _StandardForm(problem)
    m, n = len(sf.rows), len(sf.columns)
    # tableau columns: n structural, m artificial, rhs
    T = []
    for i, (row, b) in enumerate(zip(sf.rows, sf.rhs)):
        art = [Fraction(0)] * m
        art[i] = Fraction(1)
        T.append(list(row) + art + [b])
    basis = [n + i for i in range(m)]
    obj = [Fraction(0)] * (n + m + 1)
    for row in T:
        for j in range(n):
            obj[j] += row[j]
        obj[-1] += row[-1]
    _run(T, obj, basis, range(n + m))
    if obj[-1] != 0:
        return None, None

    # drive artificials out of the basis; drop redundant rows
    keep = []
    for i in range(len(T)):
        if basis[i] >= n:
            col = next((j for j in range(n) if T[i][j] != 0), None)
            if col is None:
                continue
            _pivot(T, obj, i, col)
            basis[i] = col
        keep.append(i)
    T = [T[i][:n] + [T[i][-1]] for i in keep]
    basis = [basis[i] for i in keep]

    value = None
    if c is not None:
        cu = sf.objective([Fraction(v) for v in c])
        obj = cu + [Fraction(0)]
        for i, bj in enumerate(basis):
            f = cu[bj]
            if f:
                obj = [a - f * b for a, b in zip(obj, T[i])]
        _run(T, obj, basis, range(n))
        value = True

    u = [Fraction(0)] * n
    for i, bj in enumerate(basis):
        u[bj] = T[i][-1]
    witness = sf.recover(u)
    if value is not None:
        value = sum((Fraction(cj) * x for cj, x in zip(c, witness)), Fraction(0))
    return witness, value


def solve_feasibility(problem: FeasibilityProblem) -> FeasibilityOutcome:
    """Decide feasibility exactly and return a witness when one exists.

    >>> P = FeasibilityProblem.build([[1, 1]], [1])
    >>> solve_feasibility(P).status
    'Feasible'
    >>> solve_feasibility(FeasibilityProblem.build([[1, 1]], [-1])).status
    'Infeasible'
    """
    if problem.nvars == 0:
        ok = all(b == 0 for b in problem.b)
        return FeasibilityOutcome(ok, () if ok else None)
    witness, _ = _two_phase(problem, None)
    if witness is None:
        return FeasibilityOutcome(False)
    assert problem.is_satisfied_by(witness)
    return FeasibilityOutcome(True, witness)


def maximize(problem: FeasibilityProblem, c: Sequence) -> Tuple[Optional[Fraction], Optional[Vector]]:
    """Maximise ``c . v`` over the feasible set.

    Returns ``(value, argmax)``; ``(None, None)`` when infeasible.  Raises
    ``Unbounded`` if the objective has no finite maximum.
    """
    witness, value = _two_phase(problem, c)
    return value, witness


def argmax_coordinate(problem: FeasibilityProblem, i: int, cap=1) -> Tuple[Fraction, Vector]:
    """Like :func:`maximize_coordinate` but also returns the optimal point."""
    cap = Fraction(cap)
    n = problem.nvars
    # extra unknowns: t (free), s1, s2 >= 0 with t + s1 = cap, v_i - t - s2 = 0
    A = [tuple(row) + (Fraction(0),) * 3 for row in problem.A]
    r1 = [Fraction(0)] * (n + 3)
    r1[n], r1[n + 1] = Fraction(1), Fraction(1)
    r2 = [Fraction(0)] * (n + 3)
    r2[i], r2[n], r2[n + 2] = Fraction(1), Fraction(-1), Fraction(-1)
    aug = FeasibilityProblem(
        tuple(A) + (tuple(r1), tuple(r2)),
        problem.b + (cap, Fraction(0)),
        problem.signs + (FREE, NONNEG, NONNEG),
    )
    c = [Fraction(0)] * (n + 3)
    c[n] = Fraction(1)
    value, witness = maximize(aug, c)
    if witness is None:
        raise ValueError("maximize_coordinate called on an infeasible problem")
    return value, witness[:n]


def maximize_coordinate(problem: FeasibilityProblem, i: int, cap=1) -> Fraction:
    """Maximum of ``min(v_i, cap)`` over the feasible set.

    Used to decide whether ``v_i`` can be strictly positive.

    >>> maximize_coordinate(FeasibilityProblem.build([[1, 1]], [1]), 0)
    Fraction(1, 1)
    """
    return argmax_coordinate(problem, i, cap)[0]
