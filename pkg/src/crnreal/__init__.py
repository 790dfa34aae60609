"""Exact realization of reaction networks as complex-balanced, detailed-balanced,
weakly reversible or reversible systems."""

from .network import (DomainError, FluxClassification, FluxSystem, MassActionSystem, NetworkError,
                      ReactionNetwork, classify_flux, classify_state, deficiency, eval_rhs, flux_from_state,
                      is_reversible, is_weakly_reversible, kinetic_subspace_dim, linkage_classes, lint,
                      net_reaction_vectors, potential, potentials, source_vertices, stoichiometric_subspace_dim)
from .realize import *  # noqa: F401,F403
from .realize import __all__ as _realize_all
from .textio import NetworkDocument, ParseError, emit_dot, format_document, load, parse

__version__ = "0.1.0"

__all__ = [
    "DomainError", "FluxClassification", "FluxSystem", "MassActionSystem", "NetworkDocument", "NetworkError",
    "ParseError", "ReactionNetwork", "classify_flux", "classify_state", "deficiency", "emit_dot",
    "eval_rhs", "flux_from_state", "format_document", "is_reversible", "is_weakly_reversible",
    "kinetic_subspace_dim", "linkage_classes", "lint", "load", "net_reaction_vectors", "parse",
    "potential", "potentials", "source_vertices", "stoichiometric_subspace_dim",
] + list(_realize_all)
