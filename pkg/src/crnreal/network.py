"""Reaction networks embedded in rational space, with mass-action and flux weights.

A network is a directed graph without self-loops whose vertices (complexes)
are points of Q^n, one coordinate per species.  Everything here is exact:
coordinates, rate constants and fluxes are :class:`fractions.Fraction`.
"""

import numbers
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .exactla import rank
from .graphs import strongly_connected_components, weak_components

Vector = Tuple[Fraction, ...]
Edge = Tuple[int, int]


class NetworkError(ValueError):
    """Invalid network or weighted system."""


class DomainError(ValueError):
    """A state outside the positive orthant, or a monomial that is not rational."""


def to_rational(value) -> Fraction:
    """Convert ints, Fractions and strings like ``"3/4"`` or ``"0.25"`` exactly.

    Floats are refused: they would silently import rounding error.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(value, numbers.Rational):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, numbers.Integral):  # numpy integers
        return Fraction(int(value))
    raise TypeError(f"expected an exact rational, got {type(value).__name__} {value!r}")


def to_vector(values: Iterable) -> Vector:
    return tuple(to_rational(v) for v in values)


class ReactionNetwork:
    """An embedded digraph ``G = (V, E)``.

    Vertices are stored in a fixed order and edges refer to them by index.
    Vertices given twice (equal coordinates) are merged and the edges
    re-indexed.  Instances are immutable.
    """

    __slots__ = ("species", "vertices", "edges", "_index")

    def __init__(self, species: Sequence[str], vertices: Sequence[Sequence], edges: Sequence[Edge],
                 *, allow_isolated: bool = True):
        species = tuple(str(s) for s in species)
        if not species:
            raise NetworkError("at least one species is required")
        if any(not s for s in species):
            raise NetworkError("species names must be nonempty")
        if len(set(species)) != len(species):
            raise NetworkError(f"duplicate species in {species}")
        n = len(species)

        merged: List[Vector] = []
        index: Dict[Vector, int] = {}
        remap = []
        for v in vertices:
            v = to_vector(v)
            if len(v) != n:
                raise NetworkError(f"vertex {v} has dimension {len(v)}, expected {n}")
            if v not in index:
                index[v] = len(merged)
                merged.append(v)
            remap.append(index[v])

        new_edges: List[Edge] = []
        seen = set()
        for e in edges:
            s, t = e
            if not (0 <= s < len(remap) and 0 <= t < len(remap)):
                raise NetworkError(f"edge {e} refers to a missing vertex")
            s, t = remap[s], remap[t]
            if s == t:
                raise NetworkError(f"self-loop at vertex {merged[s]}")
            if (s, t) in seen:
                raise NetworkError(f"duplicate edge {merged[s]} -> {merged[t]}")
            seen.add((s, t))
            new_edges.append((s, t))

        touched = {v for e in new_edges for v in e}
        isolated = [merged[i] for i in range(len(merged)) if i not in touched]
        if isolated:
            if not allow_isolated:
                raise NetworkError(f"isolated vertices {isolated}")
            warnings.warn(f"network has isolated vertices {isolated}", stacklevel=2)

        object.__setattr__(self, "species", species)
        object.__setattr__(self, "vertices", tuple(merged))
        object.__setattr__(self, "edges", tuple(new_edges))
        object.__setattr__(self, "_index", index)

    def __setattr__(self, name, value):
        raise AttributeError("ReactionNetwork is immutable")

    @classmethod
    def from_reactions(cls, species: Sequence[str], reactions: Iterable[Tuple[Sequence, Sequence]]):
        """Build from ``(source, target)`` coordinate pairs; vertices in order of appearance."""
        vertices: List[Vector] = []
        index: Dict[Vector, int] = {}
        edges = []
        for src, tgt in reactions:
            ids = []
            for v in (to_vector(src), to_vector(tgt)):
                if v not in index:
                    index[v] = len(vertices)
                    vertices.append(v)
                ids.append(index[v])
            edges.append(tuple(ids))
        return cls(species, vertices, edges)

    @property
    def dimension(self) -> int:
        return len(self.species)

    def index_of(self, vertex: Sequence) -> Optional[int]:
        return self._index.get(to_vector(vertex))

    def reaction_vector(self, edge: Edge) -> Vector:
        s, t = edge
        return tuple(b - a for a, b in zip(self.vertices[s], self.vertices[t]))

    def reactions(self) -> List[Tuple[Vector, Vector]]:
        return [(self.vertices[s], self.vertices[t]) for s, t in self.edges]

    def __eq__(self, other):
        if not isinstance(other, ReactionNetwork):
            return NotImplemented
        return (self.species, self.vertices, self.edges) == (other.species, other.vertices, other.edges)

    def __hash__(self):
        return hash((self.species, self.vertices, self.edges))

    def __repr__(self):
        return (f"ReactionNetwork(species={list(self.species)}, |V|={len(self.vertices)}, "
                f"|E|={len(self.edges)})")


class _WeightedSystem:
    """A network together with one positive rational weight per edge."""

    __slots__ = ("network", "weights")
    _what = "weight"

    def __init__(self, network: ReactionNetwork, weights: Union[Sequence, Mapping]):
        if isinstance(weights, Mapping):
            lookup = {}
            for key, w in weights.items():
                s, t = key
                if not isinstance(s, int):
                    s, t = network.index_of(s), network.index_of(t)
                lookup[(s, t)] = w
            missing = [e for e in network.edges if e not in lookup]
            if missing:
                raise NetworkError(f"no {self._what} given for edges {missing}")
            extra = set(lookup) - set(network.edges)
            if extra:
                raise NetworkError(f"{self._what}s given for edges not in the network: {sorted(extra, key=str)}")
            weights = [lookup[e] for e in network.edges]
        weights = to_vector(weights)
        if len(weights) != len(network.edges):
            raise NetworkError(f"{len(weights)} {self._what}s for {len(network.edges)} edges")
        for e, w in zip(network.edges, weights):
            if w <= 0:
                raise NetworkError(f"{self._what} on edge {network.vertices[e[0]]} -> "
                                   f"{network.vertices[e[1]]} must be positive, got {w}")
        object.__setattr__(self, "network", network)
        object.__setattr__(self, "weights", weights)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @classmethod
    def from_reactions(cls, species: Sequence[str], reactions: Iterable[Tuple[Sequence, Sequence, object]]):
        reactions = list(reactions)
        net = ReactionNetwork.from_reactions(species, [(s, t) for s, t, _ in reactions])
        return cls(net, [w for _, _, w in reactions])

    @classmethod
    def from_weight_map(cls, species: Sequence[str], weights: Mapping[Tuple[Vector, Vector], Fraction]):
        """Build from ``{(source, target): weight}``, dropping zero weights."""
        items = [(s, t, w) for (s, t), w in weights.items() if w != 0]
        return cls.from_reactions(species, items)

    def weight_map(self) -> Dict[Tuple[Vector, Vector], Fraction]:
        """``{(source coords, target coords): weight}``."""
        V = self.network.vertices
        return {(V[s], V[t]): w for (s, t), w in zip(self.network.edges, self.weights)}

    def weight(self, source: Sequence, target: Sequence) -> Fraction:
        """Weight of ``source -> target``; zero when the edge is absent."""
        return self.weight_map().get((to_vector(source), to_vector(target)), Fraction(0))

    @property
    def species(self):
        return self.network.species

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.network == other.network and self.weights == other.weights

    def __hash__(self):
        return hash((type(self).__name__, self.network, self.weights))

    def __repr__(self):
        return f"{type(self).__name__}({self.network!r}, {self._what}s={[str(w) for w in self.weights]})"


class MassActionSystem(_WeightedSystem):
    """Network plus a positive rate constant per edge."""

    __slots__ = ()
    _what = "rate"

    @property
    def rates(self) -> Vector:
        return self.weights


class FluxSystem(_WeightedSystem):
    """Network plus a positive flux per edge."""

    __slots__ = ()
    _what = "flux"

    @property
    def fluxes(self) -> Vector:
        return self.weights


def _net(obj) -> ReactionNetwork:
    return obj if isinstance(obj, ReactionNetwork) else obj.network


def lint(G) -> List[str]:
    """Warnings about chemically unusual but permitted input."""
    G = _net(G)
    notes = []
    for v in G.vertices:
        if any(c < 0 for c in v):
            notes.append(f"vertex {tuple(str(c) for c in v)} has negative coordinates")
    return notes


# ---------------------------------------------------------------- structure

def source_vertices(G) -> frozenset:
    """Indices of vertices with at least one outgoing edge."""
    return frozenset(s for s, _ in _net(G).edges)


def is_reversible(G) -> bool:
    edges = set(_net(G).edges)
    return all((t, s) in edges for s, t in edges)


def linkage_classes(G) -> List[List[int]]:
    """Weakly connected components, as sorted lists of vertex indices."""
    G = _net(G)
    return weak_components(len(G.vertices), G.edges)


def is_weakly_reversible(G) -> bool:
    """True iff every weakly connected component is strongly connected."""
    G = _net(G)
    n = len(G.vertices)
    return len(strongly_connected_components(n, G.edges)) == len(weak_components(n, G.edges))


def stoichiometric_matrix(G) -> List[List[Fraction]]:
    """``n x |E|`` matrix whose columns are the reaction vectors."""
    G = _net(G)
    cols = [G.reaction_vector(e) for e in G.edges]
    return [[c[i] for c in cols] for i in range(G.dimension)]


def stoichiometric_subspace_dim(G) -> int:
    G = _net(G)
    return rank([G.reaction_vector(e) for e in G.edges])


def net_reaction_vectors(system) -> Dict[int, Vector]:
    """Per source vertex, the weighted sum of outgoing reaction vectors.

    For a mass-action system this is the coefficient of ``x^y`` in the ODE;
    for a flux system it is the quantity compared by flux equivalence.
    """
    G = system.network
    out: Dict[int, List[Fraction]] = {}
    for (s, t), w in zip(G.edges, system.weights):
        acc = out.setdefault(s, [Fraction(0)] * G.dimension)
        for i, (a, b) in enumerate(zip(G.vertices[s], G.vertices[t])):
            acc[i] += w * (b - a)
    return {s: tuple(v) for s, v in out.items()}


def kinetic_subspace_dim(M: MassActionSystem) -> int:
    """Dimension of the span of the ODE right-hand side over the positive orthant.

    Distinct exponent vectors give linearly independent monomials, so this
    is the rank of the per-source aggregate vectors.
    """
    return rank(list(net_reaction_vectors(M).values()))


def deficiency(G) -> int:
    """``|V| - (number of linkage classes) - dim S``."""
    G = _net(G)
    return len(G.vertices) - len(linkage_classes(G)) - stoichiometric_subspace_dim(G)


# ---------------------------------------------------------------- monomials

def _iroot(n: int, k: int) -> int:
    """Floor of the k-th root of a nonnegative integer."""
    if n < 2:
        return n
    x = 1 << -(-n.bit_length() // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def rational_power(base: Fraction, exponent: Fraction) -> Optional[Fraction]:
    """``base ** exponent`` when the result is rational, else None (``base > 0``)."""
    exponent = Fraction(exponent)
    if exponent.denominator == 1:
        return Fraction(base) ** int(exponent)
    b = Fraction(base) ** exponent.numerator
    q = exponent.denominator
    num, den = _iroot(b.numerator, q), _iroot(b.denominator, q)
    if num ** q == b.numerator and den ** q == b.denominator:
        return Fraction(num, den)
    return None


def monomial(x: Sequence, y: Sequence[Fraction]) -> Optional[Fraction]:
    """Exact ``x^y`` or None when it is irrational."""
    out = Fraction(1)
    for xi, yi in zip(x, y):
        if yi == 0:
            continue
        p = rational_power(xi, yi)
        if p is None:
            return None
        out *= p
    return out


def _state(G: ReactionNetwork, x: Sequence, allow_float: bool = False):
    if len(x) != G.dimension:
        raise DomainError(f"state has {len(x)} entries for {G.dimension} species")
    vals = []
    for v in x:
        if isinstance(v, float):
            if not allow_float:
                raise DomainError("states must be exact rationals here")
        else:
            v = to_rational(v)
        if not v > 0:
            raise DomainError(f"state {tuple(str(c) for c in x)} is not strictly positive")
        vals.append(v)
    return tuple(vals)


def _float_monomial(x, y) -> float:
    out = 1.0
    for xi, yi in zip(x, y):
        out *= float(xi) ** float(yi)
    return out


def eval_rhs(M: MassActionSystem, x: Sequence) -> tuple:
    """Right-hand side ``sum k x^y (y' - y)`` of the mass-action ODE at ``x``.

    Exact when every monomial is rational; otherwise evaluated in floating
    point.
    """
    G = M.network
    x = _state(G, x, allow_float=True)
    exact = not any(isinstance(v, float) for v in x)
    mons = {}
    for s in source_vertices(G):
        m = monomial(x, G.vertices[s]) if exact else None
        if m is None:
            exact = False
            break
        mons[s] = m
    if not exact:
        mons = {s: _float_monomial(x, G.vertices[s]) for s in source_vertices(G)}
        zero = 0.0
    else:
        zero = Fraction(0)
    out = [zero] * G.dimension
    for (s, t), k in zip(G.edges, M.rates):
        rate = (k if exact else float(k)) * mons[s]
        for i, (a, b) in enumerate(zip(G.vertices[s], G.vertices[t])):
            if exact:
                out[i] += rate * (b - a)
            else:
                out[i] += rate * float(b - a)
    return tuple(out)


def source_monomials(M: MassActionSystem, x: Sequence) -> Dict[int, Fraction]:
    """Exact ``x^y`` for each source vertex; DomainError if any is irrational."""
    G = M.network
    x = _state(G, x)
    out = {}
    for s in sorted(source_vertices(G)):
        m = monomial(x, G.vertices[s])
        if m is None:
            raise DomainError(f"x^y is irrational for vertex {G.vertices[s]} at x = {x}")
        out[s] = m
    return out


def flux_from_monomials(M: MassActionSystem, monomials: Mapping[int, Fraction]) -> FluxSystem:
    """Fluxes ``k * m_y`` given the monomial value ``m_y`` at each source vertex."""
    G = M.network
    return FluxSystem(G, [k * monomials[s] for (s, _), k in zip(G.edges, M.rates)])


def flux_from_state(M: MassActionSystem, x: Sequence) -> FluxSystem:
    """The flux system ``J = k x^y`` of ``M`` at the positive state ``x``."""
    return flux_from_monomials(M, source_monomials(M, x))


# ---------------------------------------------------------------- balance

def potentials(F: FluxSystem) -> Dict[int, Fraction]:
    """Inflow minus outflow at every vertex index."""
    G = F.network
    P = {i: Fraction(0) for i in range(len(G.vertices))}
    for (s, t), J in zip(G.edges, F.fluxes):
        P[s] -= J
        P[t] += J
    return P


def potential(F: FluxSystem, y: Sequence) -> Fraction:
    """Inflow minus outflow at vertex ``y``; zero if ``y`` is not in the network."""
    i = F.network.index_of(y)
    if i is None:
        return Fraction(0)
    return potentials(F)[i]


@dataclass(frozen=True)
class FluxClassification:
    is_steady_state: bool
    is_detailed_balanced: bool
    is_complex_balanced: bool


def classify_flux(F: FluxSystem) -> FluxClassification:
    G = F.network
    total = [Fraction(0)] * G.dimension
    for vec in net_reaction_vectors(F).values():
        total = [a + b for a, b in zip(total, vec)]
    steady = all(v == 0 for v in total)
    J = dict(zip(G.edges, F.fluxes))
    # a missing reverse edge means the flux cannot be detailed-balanced
    detailed = all((t, s) in J and J[(t, s)] == w for (s, t), w in J.items())
    balanced = all(p == 0 for p in potentials(F).values())
    return FluxClassification(steady, detailed, balanced)


def classify_state(M: MassActionSystem, x: Sequence) -> FluxClassification:
    """Steady-state / detailed-balanced / complex-balanced status of ``x``."""
    return classify_flux(flux_from_state(M, x))
