"""Realization outcomes and their exact re-verification."""

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Mapping, Optional, Tuple

from ..exactla import integer_vector, nullspace, rref
from ..network import (FluxSystem, Vector, classify_flux, is_reversible,
                       is_weakly_reversible, monomial, potentials, rational_power, source_vertices)
from .equivalence import check_dynamical_equivalence, check_flux_equivalence

EdgeKey = Tuple[Vector, Vector]


class Status(str, enum.Enum):
    FOUND = "Found"
    INFEASIBLE = "Infeasible"
    UNKNOWN = "Unknown"


TARGETS = ("complex-balanced", "detailed-balanced", "weakly-reversible", "reversible")


@dataclass(frozen=True)
class Certificate:
    """Named boolean checks recomputed from scratch on the returned witness."""

    checks: Tuple[Tuple[str, bool], ...] = ()

    @property
    def ok(self) -> bool:
        return all(v for _, v in self.checks)

    def lines(self):
        return [f"{'ok  ' if v else 'FAIL'} {name}" for name, v in self.checks]


@dataclass(frozen=True)
class RealizationResult:
    """Outcome of a realization procedure.

    For ``Found`` results ``system`` holds the realization (a flux or
    mass-action system on source vertices of the input).  Mass-action
    complex-balanced realizations carry the state at which they balance:
    ``monomials`` maps each source vertex to the exact value of ``x^y``;
    ``state`` is the exact state when it is rational and ``state_approx``
    a floating-point state otherwise.  ``scaling`` is the weak-reversibility
    scaling vector keyed by edge.  ``problem`` is the linear feasibility
    problem whose witness produced the result (or proved infeasibility).
    """

    status: Status
    target: str
    kind: str
    system: Optional[object] = None
    state: Optional[Tuple[Fraction, ...]] = None
    state_approx: Optional[Tuple[float, ...]] = None
    monomials: Optional[Dict[Vector, Fraction]] = None
    scaling: Optional[Dict[EdgeKey, Fraction]] = None
    certificate: Certificate = field(default_factory=Certificate)
    problem: Optional[object] = None
    log: Tuple[str, ...] = ()

    @property
    def found(self) -> bool:
        return self.status is Status.FOUND


def toric_consistent(vertices, values: Mapping[Vector, Fraction]) -> bool:
    """Whether positive numbers ``values[y]`` equal ``x^y`` for some positive real ``x``.

    This holds iff ``log values`` lies in the row space of the vertex
    matrix, i.e. iff ``prod values[y]^c_y = 1`` for every integer relation
    ``sum c_y y = 0``.
    """
    vertices = list(vertices)
    if not vertices:
        return True
    if any(values[y] <= 0 for y in vertices):
        return False
    cols = [list(y) for y in vertices]
    rows = [[cols[j][i] for j in range(len(cols))] for i in range(len(cols[0]))]
    for c in nullspace(rows, len(vertices)):
        c = integer_vector(c)
        prod = Fraction(1)
        for y, e in zip(vertices, c):
            prod *= values[y] ** int(e)
        if prod != 1:
            return False
    return True


def _only_sources(original, system) -> bool:
    srcs = {original.network.vertices[i] for i in source_vertices(original.network)}
    return set(system.network.vertices) <= srcs


def _mass_action_cb_checks(original, system, monomials, state):
    checks = []
    srcs = {system.network.vertices[i] for i in source_vertices(system.network)}
    checks.append(("monomial value given for every source vertex", srcs <= set(monomials or {})))
    if not checks[-1][1]:
        return checks
    checks.append(("monomial values are x^y for a positive state x",
                   toric_consistent(list(monomials), monomials)))
    if state is not None:
        checks.append(("monomial values match the exact state",
                       all(monomial(state, y) == m for y, m in monomials.items())))
    V = system.network.vertices
    flux = FluxSystem(system.network,
                      [k * monomials[V[s]] for (s, _), k in zip(system.network.edges, system.rates)])
    checks.append(("complex-balanced at the state", classify_flux(flux).is_complex_balanced))
    return checks


def _alpha_checks(system, scaling):
    if scaling is None:
        return [("scaling vector present", False)]
    W = system.weight_map()
    ok_keys = set(scaling) == set(W)
    ok_pos = all(a >= 1 for a in scaling.values())
    scaled = FluxSystem.from_weight_map(system.species, {e: W[e] * scaling[e] for e in W}) \
        if ok_keys else None
    ok_cb = scaled is not None and all(p == 0 for p in potentials(scaled).values())
    return [("scaling vector has entries >= 1 on every edge", ok_keys and ok_pos),
            ("scaled rates are complex-balanced", ok_cb)]


def certify(original, result: RealizationResult) -> Certificate:
    """Recompute every property a ``Found`` result claims, exactly."""
    if result.status is not Status.FOUND:
        return Certificate()
    S = result.system
    checks = []
    if isinstance(original, FluxSystem):
        checks.append(("flux equivalent to the input", check_flux_equivalence(original, S)))
        cls = classify_flux(S)
        if result.target == "complex-balanced":
            checks.append(("complex-balanced", cls.is_complex_balanced))
        else:
            checks.append(("detailed-balanced", cls.is_detailed_balanced))
    else:
        checks.append(("dynamically equivalent to the input", check_dynamical_equivalence(original, S)))
        if result.target in ("complex-balanced", "detailed-balanced"):
            checks.extend(_mass_action_cb_checks(original, S, result.monomials, result.state))
            if result.target == "detailed-balanced":
                V = S.network.vertices
                flux = FluxSystem(S.network, [k * result.monomials[V[s]]
                                              for (s, _), k in zip(S.network.edges, S.rates)])
                checks.append(("detailed-balanced at the state", classify_flux(flux).is_detailed_balanced))
        elif result.target == "weakly-reversible":
            checks.append(("weakly reversible", is_weakly_reversible(S)))
            checks.extend(_alpha_checks(S, result.scaling))
        else:
            checks.append(("reversible", is_reversible(S)))
    checks.append(("uses only source vertices of the input", _only_sources(original, S)))
    return Certificate(tuple(checks))


def finish(original, result: RealizationResult) -> RealizationResult:
    """Attach the certificate; a failing certificate is an internal error."""
    cert = certify(original, result)
    if not cert.ok:
        raise AssertionError("realization failed re-verification:\n" + "\n".join(cert.lines()))
    return RealizationResult(**{**result.__dict__, "certificate": cert})


def exact_state_from_monomials(vertices, values: Mapping[Vector, Fraction], dimension: int):
    """A rational ``x`` with ``x^y = values[y]`` for all given vertices, or None.

    Coordinates not determined by the vertices are set to 1.
    """
    vertices = list(vertices)
    if not vertices:
        return (Fraction(1),) * dimension
    # augmented system  Y^T log x = log m : solve symbolically by RREF of [Y^T | e_i]
    n, N = dimension, len(vertices)
    aug = [list(vertices[i]) + [Fraction(int(i == j)) for j in range(N)] for i in range(N)]
    rows, pivots = rref(aug)
    x = [Fraction(1)] * n
    for row, p in zip(rows, pivots):
        if p >= n:
            continue
        # log x_p = sum_j row[n + j] log m_j  (free coordinates taken as 0);
        # take one root of the whole product, since single factors may be irrational
        exps = {j: row[n + j] for j in range(N) if row[n + j] != 0}
        L = math.lcm(*(e.denominator for e in exps.values())) if exps else 1
        whole = Fraction(1)
        for j, e in exps.items():
            whole *= values[vertices[j]] ** int(e * L)
        val = rational_power(whole, Fraction(1, L))
        if val is None:
            return None
        x[p] = val
    x = tuple(x)
    if all(monomial(x, y) == values[y] for y in vertices):
        return x
    return None
