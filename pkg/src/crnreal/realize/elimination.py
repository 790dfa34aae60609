"""Removing a virtual source by rerouting the weight that passes through it.

Every edge ``z -> y*`` is combined with every edge ``y* -> y`` into ``z -> y``.
The flux variants split the incoming flux in proportion to the outgoing
fluxes (normalising by total inflow); the mass-action variants split the
incoming rate constant in proportion to the outgoing rate constants
(normalising by total outflow rate).  Redirected edges ``z -> z`` are
dropped: they contribute nothing to equivalence and the same amount to in-
and outflow.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from ..network import (FluxSystem, MassActionSystem, Vector, classify_flux, is_reversible,
                       is_weakly_reversible, potentials)
from .equivalence import find_virtual_sources

EdgeKey = Tuple[Vector, Vector]


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class EliminationReport:
    """What one elimination changed.

    ``potentials_before`` / ``potentials_after`` are keyed by vertex
    coordinates and only filled for flux systems.
    """

    variant: str
    removed: Vector
    deltas: Dict[EdgeKey, Fraction]
    self_loops_dropped: Tuple[Tuple[Vector, Fraction], ...]
    potentials_before: Optional[Dict[Vector, Fraction]] = None
    potentials_after: Optional[Dict[Vector, Fraction]] = None


def _resolve(system, vertex: Union[int, Sequence]) -> int:
    if isinstance(vertex, int):
        if not 0 <= vertex < len(system.network.vertices):
            raise PreconditionError(f"no vertex with index {vertex}")
        return vertex
    i = system.network.index_of(vertex)
    if i is None:
        raise PreconditionError(f"vertex {tuple(str(c) for c in vertex)} is not in the network")
    return i


def _reroute(system, star: int, normalise_by: str):
    G = system.network
    V = G.vertices
    ystar = V[star]
    w = system.weight_map()
    incoming = [(V[s], wt) for (s, t), wt in zip(G.edges, system.weights) if t == star]
    outgoing = [(V[t], wt) for (s, t), wt in zip(G.edges, system.weights) if s == star]
    total = sum((wt for _, wt in (incoming if normalise_by == "in" else outgoing)), Fraction(0))

    new: Dict[EdgeKey, Fraction] = {k: v for k, v in w.items() if ystar not in k}
    dropped: List[Tuple[Vector, Fraction]] = []
    for z, a in incoming:
        for y, b in outgoing:
            if normalise_by == "in":
                add = b * a / total
            else:
                add = a * b / total
            if z == y:
                dropped.append((z, add))
                continue
            new[(z, y)] = new.get((z, y), Fraction(0)) + add

    deltas = {}
    for k in set(w) | set(new):
        d = new.get(k, Fraction(0)) - w.get(k, Fraction(0))
        if d != 0:
            deltas[k] = d
    return new, deltas, tuple(dropped)


def _rebuild(cls, system, weights: Dict[EdgeKey, Fraction]):
    return cls.from_weight_map(system.network.species, weights)


def _potentials_by_coords(F: FluxSystem) -> Dict[Vector, Fraction]:
    V = F.network.vertices
    return {V[i]: p for i, p in potentials(F).items()}


def _check_virtual(system, star: int) -> None:
    if star not in find_virtual_sources(system):
        raise PreconditionError(f"vertex {system.network.vertices[star]} is not a virtual source")


def _eliminate_flux(F: FluxSystem, vertex, variant: str):
    star = _resolve(F, vertex)
    _check_virtual(F, star)
    weights, deltas, dropped = _reroute(F, star, "in")
    out = _rebuild(FluxSystem, F, weights)
    report = EliminationReport(variant, F.network.vertices[star], deltas, dropped,
                               _potentials_by_coords(F), _potentials_by_coords(out))
    return out, report


def eliminate_virtual_source_flux_cb(F: FluxSystem, vertex) -> Tuple[FluxSystem, EliminationReport]:
    """Remove a virtual source from a complex-balanced flux system.

    The result is flux equivalent, complex-balanced, and has the same
    potential at every retained vertex.
    """
    if not classify_flux(F).is_complex_balanced:
        raise PreconditionError("flux system is not complex-balanced")
    return _eliminate_flux(F, vertex, "flux-cb")


def eliminate_virtual_source_flux_db(F: FluxSystem, vertex) -> Tuple[FluxSystem, EliminationReport]:
    """As :func:`eliminate_virtual_source_flux_cb`, preserving detailed balance."""
    if not classify_flux(F).is_detailed_balanced:
        raise PreconditionError("flux system is not detailed-balanced")
    return _eliminate_flux(F, vertex, "flux-db")


def _eliminate_ma(M: MassActionSystem, vertex, variant: str):
    star = _resolve(M, vertex)
    _check_virtual(M, star)
    weights, deltas, dropped = _reroute(M, star, "out")
    out = _rebuild(MassActionSystem, M, weights)
    return out, EliminationReport(variant, M.network.vertices[star], deltas, dropped)


def eliminate_virtual_source_ma_wr(M: MassActionSystem, vertex) -> Tuple[MassActionSystem, EliminationReport]:
    """Remove a virtual source from a weakly reversible mass-action system.

    The result is dynamically equivalent, weakly reversible, and has
    deficiency one less.
    """
    if not is_weakly_reversible(M):
        raise PreconditionError("mass-action system is not weakly reversible")
    return _eliminate_ma(M, vertex, "ma-wr")


def eliminate_virtual_source_ma_rev(M: MassActionSystem, vertex) -> Tuple[MassActionSystem, EliminationReport]:
    """Remove a virtual source from a reversible mass-action system; the result stays reversible."""
    if not is_reversible(M):
        raise PreconditionError("mass-action system is not reversible")
    return _eliminate_ma(M, vertex, "ma-rev")


def eliminate(system, vertex):
    """Apply the strongest elimination whose precondition holds.

    Flux systems: detailed-balanced, else complex-balanced.  Mass-action
    systems: reversible, else weakly reversible.
    """
    if isinstance(system, FluxSystem):
        c = classify_flux(system)
        if c.is_detailed_balanced:
            return eliminate_virtual_source_flux_db(system, vertex)
        return eliminate_virtual_source_flux_cb(system, vertex)
    if isinstance(system, MassActionSystem):
        if is_reversible(system):
            return eliminate_virtual_source_ma_rev(system, vertex)
        return eliminate_virtual_source_ma_wr(system, vertex)
    raise TypeError(f"cannot eliminate from {type(system).__name__}")


def eliminate_all_virtual_sources(system, step=eliminate):
    """Eliminate virtual sources, smallest vertex index first, until none remain.

    Each step removes a vertex, so at most ``|V|`` steps are taken.
    """
    reports = []
    while True:
        found = sorted(find_virtual_sources(system))
        if not found:
            return system, reports
        system, report = step(system, found[0])
        reports.append(report)
