"""Exact rational linear algebra and linear feasibility."""

from .fourier_motzkin import MAX_VARIABLES, ProblemTooLarge, fm_oracle
from .matrix import integer_vector, matmul, matvec, nullspace, rank, rref, transpose
from .simplex import (
    AT_LEAST_ONE,
    FREE,
    NONNEG,
    FeasibilityOutcome,
    FeasibilityProblem,
    Unbounded,
    argmax_coordinate,
    maximize,
    maximize_coordinate,
    solve_feasibility,
)

__all__ = [
    "AT_LEAST_ONE",
    "FREE",
    "NONNEG",
    "MAX_VARIABLES",
    "FeasibilityOutcome",
    "FeasibilityProblem",
    "ProblemTooLarge",
    "Unbounded",
    "argmax_coordinate",
    "fm_oracle",
    "integer_vector",
    "matmul",
    "matvec",
    "maximize",
    "maximize_coordinate",
    "nullspace",
    "rank",
    "rref",
    "solve_feasibility",
    "transpose",
]
