"""Weakly reversible and reversible realizations by dense support and trimming.

The feasible set ``P`` of the dynamical-equivalence LP is a polyhedron.  Its
dense support is the set of unknowns that are positive somewhere on ``P``;
by convexity some single point of ``P`` is positive on all of them at once
(an average of per-coordinate witnesses).

Weakly reversible target: in a weakly reversible realization every edge lies
on a directed cycle, so any realization inside ``P`` has its support inside
the dense support with the off-cycle edges removed.  Pinning those edges to
zero gives a smaller polyhedron that still contains every weakly reversible
realization; repeat until the dense support is a union of cycles.  The
average witness of that last polyhedron then has exactly that support and is
weakly reversible; if the polyhedron becomes empty no realization exists.

Reversible target: the same loop, removing edges whose reverse is outside
the dense support.
"""

from fractions import Fraction
from typing import Callable, Dict, List, Optional, Set, Tuple

from ..exactla import AT_LEAST_ONE, FeasibilityProblem, argmax_coordinate, solve_feasibility
from ..graphs import edges_on_cycles
from ..network import MassActionSystem, Vector
from .linear import SourcePairProblem, dynamical_problem
from .result import RealizationResult, Status, finish


def dense_support(problem: FeasibilityProblem, candidates=None):
    """``(support, witnesses)`` for a feasible problem, or None if infeasible.

    ``support`` holds every variable that is positive at some feasible
    point; each is positive in at least one of ``witnesses``.
    """
    out = solve_feasibility(problem)
    if not out.feasible:
        return None
    witnesses = [out.witness]
    support = {i for i, v in enumerate(out.witness) if v > 0}
    todo = range(problem.nvars) if candidates is None else candidates
    for i in todo:
        if i in support:
            continue
        value, w = argmax_coordinate(problem, i, 1)
        if value > 0:
            witnesses.append(w)
            support |= {j for j, v in enumerate(w) if v > 0}
    return support, witnesses


def _average(witnesses) -> Tuple[Fraction, ...]:
    n = len(witnesses)
    return tuple(sum(col, Fraction(0)) / n for col in zip(*witnesses))


def _off_cycle(spp: SourcePairProblem, support: Set[int]) -> Set[int]:
    edges = [spp.pairs[i] for i in support]
    keep = edges_on_cycles(len(spp.sources), edges)
    return {i for i in support if spp.pairs[i] not in keep}


def _unpaired(spp: SourcePairProblem, support: Set[int]) -> Set[int]:
    present = {spp.pairs[i] for i in support}
    return {i for i in support if tuple(reversed(spp.pairs[i])) not in present}


def trim(spp: SourcePairProblem, rule: Callable[[SourcePairProblem, Set[int]], Set[int]]):
    """Run the dense-support / deletion loop.

    Returns ``(witness or None, final problem, support sizes per round)``.
    """
    pinned: Set[int] = set()
    history: List[int] = []
    everything = set(range(spp.problem.nvars))
    while True:
        problem = spp.problem.with_zeros(pinned) if pinned else spp.problem
        res = dense_support(problem, sorted(everything - pinned))
        if res is None:
            return None, problem, history
        support, witnesses = res
        history.append(len(support))
        doomed = rule(spp, support)
        if not doomed:
            return _average(witnesses), problem, history
        pinned |= (everything - support) | doomed


def scaling_certificate(M: MassActionSystem) -> Optional[Dict[Tuple[Vector, Vector], Fraction]]:
    """``alpha >= 1`` per edge with ``alpha * k`` complex-balanced at the all-ones state.

    Exists iff the network is weakly reversible; None otherwise.
    """
    G = M.network
    nv, ne = len(G.vertices), len(G.edges)
    A = [[Fraction(0)] * ne for _ in range(nv)]
    for e, ((s, t), k) in enumerate(zip(G.edges, M.rates)):
        A[s][e] -= k
        A[t][e] += k
    problem = FeasibilityProblem.build(A, [0] * nv, [AT_LEAST_ONE] * ne)
    out = solve_feasibility(problem)
    if not out.feasible:
        return None
    V = G.vertices
    return {(V[s], V[t]): a for (s, t), a in zip(G.edges, out.witness)}


def _realize(M: MassActionSystem, target: str, rule) -> RealizationResult:
    spp = dynamical_problem(M)
    witness, problem, history = trim(spp, rule)
    log = (f"{spp.problem.nvars} unknowns",)
    if not history:
        return RealizationResult(Status.INFEASIBLE, target, "mass-action", problem=problem, log=log + (
            "no dynamically equivalent system on the source vertices",))
    log += ("dense support sizes per round: " + ", ".join(str(h) for h in history),)
    if witness is None:
        return RealizationResult(Status.INFEASIBLE, target, "mass-action", problem=problem,
                                 log=log + ("trimmed problem infeasible",))
    system = MassActionSystem.from_weight_map(M.species, spp.weight_map(witness))
    scaling = scaling_certificate(system) if target == "weakly-reversible" else None
    return finish(M, RealizationResult(Status.FOUND, target, "mass-action", system=system,
                                       scaling=scaling, problem=problem, log=log))


def realize_ma_wr(M: MassActionSystem) -> RealizationResult:
    """Decide whether ``M`` is dynamically equivalent to a weakly reversible system.

    Complete over the source vertices of ``M``.  A ``Found`` result carries
    a scaling vector ``alpha >= 1`` certifying that its network admits
    complex-balanced rates.
    """
    return _realize(M, "weakly-reversible", _off_cycle)


def realize_ma_rev(M: MassActionSystem) -> RealizationResult:
    """Decide whether ``M`` is dynamically equivalent to a reversible system."""
    return _realize(M, "reversible", _unpaired)
