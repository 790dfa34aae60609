"""Flux and dynamical equivalence, and virtual sources."""

from fractions import Fraction
from typing import Dict

from ..network import FluxSystem, MassActionSystem, Vector, net_reaction_vectors


class DimensionMismatch(ValueError):
    pass


def outflow_by_vertex(system) -> Dict[Vector, Vector]:
    """Weighted outgoing reaction-vector sum keyed by vertex coordinates."""
    V = system.network.vertices
    return {V[i]: vec for i, vec in net_reaction_vectors(system).items()}


def _same_outflows(a, b) -> bool:
    if a.network.dimension != b.network.dimension:
        raise DimensionMismatch(
            f"systems live in dimensions {a.network.dimension} and {b.network.dimension}")
    oa, ob = outflow_by_vertex(a), outflow_by_vertex(b)
    zero = (Fraction(0),) * a.network.dimension
    return all(oa.get(y, zero) == ob.get(y, zero) for y in set(oa) | set(ob))


def check_flux_equivalence(F: FluxSystem, F2: FluxSystem) -> bool:
    """True iff the two flux systems have the same outflow vector at every vertex."""
    return _same_outflows(F, F2)


def check_dynamical_equivalence(M: MassActionSystem, M2: MassActionSystem) -> bool:
    """True iff the mass-action ODEs coincide, compared monomial by monomial."""
    return _same_outflows(M, M2)


def find_virtual_sources(system) -> frozenset:
    """Source vertices whose weighted outgoing reaction vectors sum to zero.

    Works for flux and mass-action systems alike (``find_virtual_sources_ma``
    is an alias).
    """
    return frozenset(i for i, vec in net_reaction_vectors(system).items() if not any(vec))


find_virtual_sources_ma = find_virtual_sources
