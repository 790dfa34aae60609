"""Equivalence checks, virtual-source elimination and realization procedures."""

from .elimination import (EliminationReport, PreconditionError, eliminate, eliminate_all_virtual_sources,
                          eliminate_virtual_source_flux_cb, eliminate_virtual_source_flux_db,
                          eliminate_virtual_source_ma_rev, eliminate_virtual_source_ma_wr)
from .equivalence import (DimensionMismatch, check_dynamical_equivalence, check_flux_equivalence,
                          find_virtual_sources, find_virtual_sources_ma)
from .graphlp import dense_support, realize_ma_rev, realize_ma_wr, scaling_certificate, trim
from .linear import (SourcePairProblem, dynamical_problem, flux_cb_problem, flux_db_problem,
                     realize_flux_cb, realize_flux_db, realize_ma_cb_at_monomials, realize_ma_cb_at_state,
                     realize_ma_db_at_state, source_pair_problem)
from .result import Certificate, RealizationResult, Status, certify, exact_state_from_monomials, toric_consistent
from .search import THREADS_ENV, SearchConfig, realize_ma_cb_search

__all__ = [
    "Certificate", "DimensionMismatch", "EliminationReport", "PreconditionError", "RealizationResult",
    "SearchConfig", "SourcePairProblem", "Status", "THREADS_ENV", "certify", "check_dynamical_equivalence",
    "check_flux_equivalence", "dense_support", "dynamical_problem", "eliminate", "eliminate_all_virtual_sources",
    "eliminate_virtual_source_flux_cb", "eliminate_virtual_source_flux_db", "eliminate_virtual_source_ma_rev",
    "eliminate_virtual_source_ma_wr", "exact_state_from_monomials", "find_virtual_sources",
    "find_virtual_sources_ma", "flux_cb_problem", "flux_db_problem", "realize_flux_cb", "realize_flux_db",
    "realize_ma_cb_at_monomials", "realize_ma_cb_at_state", "realize_ma_cb_search", "realize_ma_db_at_state",
    "realize_ma_rev", "realize_ma_wr", "scaling_certificate", "source_pair_problem", "toric_consistent", "trim",
]
