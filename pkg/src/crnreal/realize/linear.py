"""Linear realization problems on the source vertices of a system.

Unknowns are weights ``w_ij`` on the ordered pairs ``(y_i, y_j)`` of
distinct source vertices.  The equivalence block asks that, at every source
vertex, the outgoing weighted reaction vectors of the unknown system add up
to those of the given one.  For fluxes this is flux equivalence; for rate
constants it is dynamical equivalence.  Optional blocks add per-vertex
balance (inflow = outflow) and pairwise symmetry ``w_ij = w_ji``.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from ..exactla import FeasibilityProblem, NONNEG, solve_feasibility
from ..network import (DomainError, FluxSystem, MassActionSystem, Vector, net_reaction_vectors,
                       source_monomials, source_vertices, to_vector)
from .result import RealizationResult, Status, exact_state_from_monomials, finish, toric_consistent


@dataclass(frozen=True)
class SourcePairProblem:
    """A feasibility problem over ordered pairs of distinct source vertices."""

    species: Tuple[str, ...]
    sources: Tuple[Vector, ...]
    pairs: Tuple[Tuple[int, int], ...]
    problem: FeasibilityProblem

    def weight_map(self, witness: Sequence[Fraction]) -> Dict[Tuple[Vector, Vector], Fraction]:
        """The nonzero entries of a witness keyed by ``(source, target)`` coordinates."""
        return {(self.sources[a], self.sources[b]): w
                for (a, b), w in zip(self.pairs, witness) if w != 0}


def source_pair_problem(system, balanced: bool = False, symmetric: bool = False) -> SourcePairProblem:
    """Build the equivalence LP for ``system``, optionally with balance and symmetry."""
    G = system.network
    src_idx = sorted(source_vertices(G))
    sources = tuple(G.vertices[i] for i in src_idx)
    N, n = len(sources), G.dimension
    pairs = tuple((a, b) for a in range(N) for b in range(N) if a != b)
    col = {p: c for c, p in enumerate(pairs)}
    net = net_reaction_vectors(system)

    A: List[List[Fraction]] = []
    rhs: List[Fraction] = []
    for a, gi in enumerate(src_idx):
        for d in range(n):
            row = [Fraction(0)] * len(pairs)
            for b in range(N):
                if b != a:
                    row[col[(a, b)]] = sources[b][d] - sources[a][d]
            A.append(row)
            rhs.append(net[gi][d])
    if balanced:
        for a in range(N):
            row = [Fraction(0)] * len(pairs)
            for b in range(N):
                if b != a:
                    row[col[(b, a)]] += 1
                    row[col[(a, b)]] -= 1
            A.append(row)
            rhs.append(Fraction(0))
    if symmetric:
        for a in range(N):
            for b in range(a + 1, N):
                row = [Fraction(0)] * len(pairs)
                row[col[(a, b)]] = Fraction(1)
                row[col[(b, a)]] = Fraction(-1)
                A.append(row)
                rhs.append(Fraction(0))

    names = tuple(f"{a}->{b}" for a, b in pairs)
    problem = FeasibilityProblem(tuple(tuple(r) for r in A), tuple(rhs), (NONNEG,) * len(pairs), names)
    return SourcePairProblem(G.species, sources, pairs, problem)


def flux_cb_problem(F: FluxSystem) -> SourcePairProblem:
    return source_pair_problem(F, balanced=True)


def flux_db_problem(F: FluxSystem) -> SourcePairProblem:
    return source_pair_problem(F, balanced=True, symmetric=True)


def dynamical_problem(M: MassActionSystem) -> SourcePairProblem:
    return source_pair_problem(M)


def _realize_flux(F: FluxSystem, target: str, spp: SourcePairProblem) -> RealizationResult:
    out = solve_feasibility(spp.problem)
    if not out.feasible:
        return RealizationResult(Status.INFEASIBLE, target, "flux", problem=spp.problem,
                                 log=(f"{spp.problem.nvars} unknowns, linear problem infeasible",))
    system = FluxSystem.from_weight_map(F.species, spp.weight_map(out.witness))
    return finish(F, RealizationResult(Status.FOUND, target, "flux", system=system, problem=spp.problem,
                                       log=(f"{spp.problem.nvars} unknowns, witness found",)))


def realize_flux_cb(F: FluxSystem) -> RealizationResult:
    """Decide whether ``F`` is flux equivalent to a complex-balanced flux system.

    Complete: any such system can be taken on the source vertices of ``F``.
    """
    return _realize_flux(F, "complex-balanced", flux_cb_problem(F))


def realize_flux_db(F: FluxSystem) -> RealizationResult:
    """Decide whether ``F`` is flux equivalent to a detailed-balanced flux system."""
    return _realize_flux(F, "detailed-balanced", flux_db_problem(F))


def _lift(M: MassActionSystem, flux_result: RealizationResult, values: Dict[Vector, Fraction],
          state, state_approx, target: str, log=()) -> RealizationResult:
    """Turn a flux realization at fixed monomial values back into rate constants."""
    if not flux_result.found:
        return RealizationResult(Status.INFEASIBLE, target, "mass-action", state=state,
                                 state_approx=state_approx, monomials=values,
                                 problem=flux_result.problem, log=tuple(log) + flux_result.log)
    J = flux_result.system
    rates = {(s, t): w / values[s] for (s, t), w in J.weight_map().items()}
    system = MassActionSystem.from_weight_map(M.species, rates)
    res = RealizationResult(Status.FOUND, target, "mass-action", system=system, state=state,
                            state_approx=state_approx, monomials=dict(values),
                            problem=flux_result.problem, log=tuple(log) + flux_result.log)
    return finish(M, res)


def _at_monomials(M: MassActionSystem, values: Dict[Vector, Fraction], target: str,
                  state=None, state_approx=None, log=()) -> RealizationResult:
    G = M.network
    J = FluxSystem(G, [k * values[G.vertices[s]] for (s, _), k in zip(G.edges, M.rates)])
    inner = realize_flux_cb(J) if target == "complex-balanced" else realize_flux_db(J)
    if state is None:
        srcs = [G.vertices[i] for i in sorted(source_vertices(G))]
        state = exact_state_from_monomials(srcs, values, G.dimension)
    if state is not None and state_approx is None:
        state_approx = tuple(float(v) for v in state)
    return _lift(M, inner, values, state, state_approx, target, log)


def realize_ma_cb_at_monomials(M: MassActionSystem, values, state_approx=None, log=()) -> RealizationResult:
    """Complex-balanced realization at the state where ``x^y = values[y]`` for each source ``y``.

    ``values`` maps source vertex coordinates to positive rationals that
    must come from a positive state (checked in the certificate).
    """
    values = {to_vector(y): Fraction(v) for y, v in values.items()}
    G = M.network
    srcs = [G.vertices[i] for i in sorted(source_vertices(G))]
    missing = [y for y in srcs if y not in values]
    if missing:
        raise DomainError(f"no monomial value for source vertices {missing}")
    if any(v <= 0 for v in values.values()) or not toric_consistent(srcs, values):
        raise DomainError("monomial values do not come from a positive state")
    return _at_monomials(M, values, "complex-balanced", state_approx=state_approx, log=log)


def _state_values(M: MassActionSystem, x0) -> Tuple[Tuple[Fraction, ...], Dict[Vector, Fraction]]:
    mons = source_monomials(M, x0)
    x0 = to_vector(x0)
    return x0, {M.network.vertices[i]: m for i, m in mons.items()}


def realize_ma_cb_at_state(M: MassActionSystem, x0) -> RealizationResult:
    """Is ``M`` dynamically equivalent to a system with ``x0`` as a complex-balanced steady state?

    Exact and complete for the given ``x0``.  Raises
    :class:`~crnreal.network.DomainError` if ``x0`` is not positive or some
    ``x0^y`` is irrational.
    """
    x0, values = _state_values(M, x0)
    return _at_monomials(M, values, "complex-balanced", state=x0)


def realize_ma_db_at_state(M: MassActionSystem, x0) -> RealizationResult:
    """As :func:`realize_ma_cb_at_state` with a detailed-balanced target."""
    x0, values = _state_values(M, x0)
    return _at_monomials(M, values, "detailed-balanced", state=x0)

