"""Search over states for a complex-balanced mass-action realization.

Whether a realization exists at a state ``x`` depends on ``x`` only through
the monomial values ``m_y = x^y`` at the source vertices, so candidates are
generated in monomial space.  Write ``R`` for the reduced row echelon form
of the source-vertex matrix (species by sources) and ``p_k`` for its pivot
columns.  Every admissible monomial vector is ``m_i = prod_k s_k^R[k][i]``
with ``s_k = m_{p_k} > 0``, and every positive ``s`` arises this way.
Choosing ``s`` rational with the right powers keeps ``m`` rational, so each
candidate can be tested exactly with the linear problem at fixed monomials.

A complex-balanced state is a steady state, so candidates are filtered by
the exact check ``sum_y m_y * v_y = 0`` (``v_y`` the net outgoing rate
vector) before the linear problem is solved.  Steady states are found
numerically and rounded to nearby rationals; random log-uniform points
and the all-ones point are tried as well.

The search is incomplete: failing to find a state yields ``Unknown``.
"""

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import least_squares

from ..exactla import rref, solve_feasibility
from ..network import MassActionSystem, Vector, net_reaction_vectors, rational_power, source_vertices
from .linear import dynamical_problem, realize_ma_cb_at_monomials
from .result import RealizationResult, Status

THREADS_ENV = "CRN_REALIZE_THREADS"
_DENOMINATOR_BOUNDS = (1, 10, 100, 1000, 10 ** 4, 10 ** 6, 10 ** 8, 10 ** 10, 10 ** 12)


@dataclass(frozen=True)
class SearchConfig:
    """Search budget.  ``log_range`` bounds each monomial parameter in base 10."""

    multistarts: int = 200
    log_range: Tuple[float, float] = (-3.0, 3.0)
    seed: int = 0
    threads: Optional[int] = None


def _threads(config: SearchConfig) -> int:
    if config.threads is not None:
        return max(1, int(config.threads))
    raw = os.environ.get(THREADS_ENV, "")
    try:
        return max(1, int(raw)) if raw else 1
    except ValueError:
        return 1


class _Model:
    """Monomial parametrisation and steady-state residual of a mass-action system."""

    def __init__(self, M: MassActionSystem):
        G = M.network
        self.M = M
        idx = sorted(source_vertices(G))
        self.sources: List[Vector] = [G.vertices[i] for i in idx]
        N, n = len(idx), G.dimension
        cols = [[self.sources[j][d] for j in range(N)] for d in range(n)]
        self.R, self.pivots = rref(cols) if N else ([], [])
        self.D = 1
        for row in self.R:
            for v in row:
                self.D = lcm(self.D, v.denominator)
        net = net_reaction_vectors(M)
        self.V = [[net[i][d] for i in idx] for d in range(n)]
        self.Rf = np.array([[float(v) for v in row] for row in self.R], dtype=float).reshape(len(self.R), N)
        self.Vf = np.array([[float(v) for v in row] for row in self.V], dtype=float).reshape(n, N)

    @property
    def rank(self) -> int:
        return len(self.R)

    def monomials(self, s: Sequence[Fraction]) -> Optional[Dict[Vector, Fraction]]:
        out = {}
        for i, y in enumerate(self.sources):
            val = Fraction(1)
            for k, row in enumerate(self.R):
                if row[i] == 0:
                    continue
                p = rational_power(s[k], row[i])
                if p is None:
                    return None
                val *= p
            out[y] = val
        return out

    def is_steady(self, m: Dict[Vector, Fraction]) -> bool:
        return all(sum((v * m[y] for v, y in zip(row, self.sources)), Fraction(0)) == 0
                   for row in self.V)

    def residual(self, t: np.ndarray) -> np.ndarray:
        m = np.exp(t @ self.Rf)
        terms = self.Vf * m
        scale = np.abs(terms).sum(axis=1) + 1e-300
        return terms.sum(axis=1) / scale

    def approx_state(self, m: Dict[Vector, Fraction]) -> Tuple[float, ...]:
        Y = np.array([[float(c) for c in y] for y in self.sources], dtype=float)
        logm = np.array([math.log(m[y]) for y in self.sources])
        if Y.size == 0:
            return (1.0,) * self.M.network.dimension
        logx, *_ = np.linalg.lstsq(Y, logm, rcond=None)
        return tuple(float(v) for v in np.exp(logx))


def _sample_parameters(model: _Model, log10: np.ndarray) -> List[Fraction]:
    """Rational ``s`` near ``10**log10`` whose powers in ``R`` are rational."""
    out = []
    for v in log10:
        root = Fraction(10 ** (float(v) / model.D)).limit_denominator(1000)
        out.append(root ** model.D)
    return out


def _round_parameters(values: np.ndarray) -> Iterator[List[Fraction]]:
    for bound in _DENOMINATOR_BOUNDS:
        yield [Fraction(float(v)).limit_denominator(bound) for v in values]


def _candidates(model: _Model, start: np.ndarray) -> Iterator[List[Fraction]]:
    """Candidate parameter vectors for one multistart."""
    yield _sample_parameters(model, start)
    if model.rank == 0:
        return
    t0 = start * math.log(10)
    try:
        sol = least_squares(model.residual, t0, method="trf", xtol=1e-15, ftol=1e-15, gtol=1e-15,
                            max_nfev=200)
    except (ValueError, FloatingPointError):  # pragma: no cover - numerical breakdown
        return
    if not np.all(np.isfinite(sol.x)) or np.max(np.abs(sol.fun), initial=0.0) > 1e-8:
        return
    yield from _round_parameters(np.exp(sol.x))


def _try_start(model: _Model, start: np.ndarray, seen: set) -> Optional[RealizationResult]:
    for s in _candidates(model, start):
        if any(v <= 0 for v in s):
            continue
        m = model.monomials(s)
        if m is None:
            continue
        key = tuple(m[y] for y in model.sources)
        if key in seen:
            continue
        seen.add(key)
        if not model.is_steady(m):
            continue
        res = realize_ma_cb_at_monomials(model.M, m, state_approx=model.approx_state(m))
        if res.found:
            return res
    return None


def realize_ma_cb_search(M: MassActionSystem, config: Optional[SearchConfig] = None, **kwargs) -> RealizationResult:
    """Look for a state at which ``M`` has a complex-balanced realization.

    Returns ``Found`` (with exact monomial values, the exact state when it
    is rational and an approximate state always) or ``Unknown``; never
    ``Infeasible``.  Deterministic for a given seed and independent of the
    number of threads.  Keyword arguments override fields of ``config``.
    """
    config = config or SearchConfig()
    if kwargs:
        config = SearchConfig(**{**config.__dict__, **kwargs})
    target = "complex-balanced"
    model = _Model(M)

    if not solve_feasibility(dynamical_problem(M).problem).feasible:
        return RealizationResult(Status.UNKNOWN, target, "mass-action", log=(
            "no dynamically equivalent system exists on the source vertices; "
            "in particular no complex-balanced one",))

    rng = np.random.default_rng(config.seed)
    lo, hi = config.log_range
    starts = [np.zeros(model.rank)]
    starts += [rng.uniform(lo, hi, size=model.rank) for _ in range(config.multistarts)]

    nthreads = _threads(config)
    if nthreads == 1:
        seen: set = set()
        for i, start in enumerate(starts):
            res = _try_start(model, start, seen)
            if res is not None:
                return _tag(res, i)
    else:
        with ThreadPoolExecutor(max_workers=nthreads) as pool:
            for base in range(0, len(starts), nthreads):
                chunk = starts[base:base + nthreads]
                results = list(pool.map(lambda st: _try_start(model, st, set()), chunk))
                for offset, res in enumerate(results):
                    if res is not None:
                        return _tag(res, base + offset)
    return RealizationResult(Status.UNKNOWN, target, "mass-action", log=(
        f"no complex-balanced realization found in {len(starts)} starts (seed {config.seed})",))


def _tag(res: RealizationResult, index: int) -> RealizationResult:
    where = "the all-ones seed" if index == 0 else f"multistart {index}"
    return RealizationResult(**{**res.__dict__, "log": (f"state found from {where}",) + res.log})
