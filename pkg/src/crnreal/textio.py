"""Plain-text reaction network documents and Graphviz DOT export.

Format::

    species: X Y
    mode: flux                 # optional: network | flux | mass-action
    0 -> Y : 3
    X + Y <-> 2X : 5, 5        # one shared weight or one per direction

Complexes are ``0`` or ``c1 S1 + c2 S2 + ...`` with rational coefficients
(``1`` may be omitted).  Weights are integers, ``p/q`` or plain decimals,
converted exactly.  ``#`` starts a comment.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .network import FluxSystem, MassActionSystem, NetworkError, ReactionNetwork, Vector

MODES = ("network", "flux", "mass-action")

_NAME = r"[A-Za-z_][A-Za-z0-9_]*"
_RATIONAL = r"(?:\d+/\d+|\d*\.\d+|\d+\.?)"
_TERM = re.compile(rf"^(?P<coef>{_RATIONAL})?\s*\*?\s*(?P<name>{_NAME})$")
_WEIGHT = re.compile(rf"^{_RATIONAL}$")


class ParseError(ValueError):
    """Syntax or validity error at a position of a document."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.message = message


@dataclass(frozen=True)
class NetworkDocument:
    """A parsed document: species, mode tag and the network with optional weights."""

    mode: str
    network: ReactionNetwork
    weights: Optional[Tuple[Fraction, ...]] = None

    @property
    def species(self):
        return self.network.species

    @property
    def system(self):
        """The :class:`ReactionNetwork`, :class:`FluxSystem` or :class:`MassActionSystem`."""
        if self.mode == "flux":
            return FluxSystem(self.network, self.weights)
        if self.mode == "mass-action":
            return MassActionSystem(self.network, self.weights)
        return self.network


def _parse_rational(token: str, line: int, col: int) -> Fraction:
    token = token.strip()
    if not _WEIGHT.match(token):
        if re.match(r"^[+-]?[\d.]+[eE][+-]?\d+$", token):
            raise ParseError(f"floating-point notation {token!r} is not accepted; write p/q", line, col)
        raise ParseError(f"expected a positive rational, got {token!r}", line, col)
    return Fraction(token)


def parse_complex(text: str, species: Sequence[str], line: int = 1, col: int = 1) -> Vector:
    """Parse ``2X + Y`` (or ``0``) into a coordinate vector."""
    index = {s: i for i, s in enumerate(species)}
    coords = [Fraction(0)] * len(species)
    col += len(text) - len(text.lstrip())
    text = text.strip()
    if not text:
        raise ParseError("empty complex", line, col)
    if text == "0":
        return tuple(coords)
    offset = 0
    for term in text.split("+"):
        stripped = term.strip()
        tcol = col + offset + (len(term) - len(term.lstrip()))
        offset += len(term) + 1
        m = _TERM.match(stripped)
        if not m:
            raise ParseError(f"cannot read term {stripped!r}", line, tcol)
        name = m.group("name")
        if name not in index:
            raise ParseError(f"unknown species {name!r}", line, tcol)
        coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        coords[index[name]] += coef
    return tuple(coords)


def parse(text: str) -> NetworkDocument:
    """Parse a document; raises :class:`ParseError` with a line/column position."""
    species: Optional[List[str]] = None
    mode: Optional[str] = None
    reactions: List[Tuple[Vector, Vector, Optional[Fraction], int]] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        lead = len(line) - len(line.lstrip())
        body = line.strip()
        if species is None:
            if not body.startswith("species:"):
                raise ParseError("first line must be 'species: <name> ...'", lineno, lead + 1)
            names = body[len("species:"):].split()
            if not names:
                raise ParseError("no species declared", lineno, lead + 1)
            for name in names:
                if not re.match(rf"^{_NAME}$", name):
                    raise ParseError(f"invalid species name {name!r}", lineno, raw.find(name) + 1)
            if len(set(names)) != len(names):
                raise ParseError("duplicate species name", lineno, lead + 1)
            species = names
            continue
        if body.startswith("mode:"):
            if reactions:
                raise ParseError("'mode:' must come before the reactions", lineno, lead + 1)
            if mode is not None:
                raise ParseError("mode declared twice", lineno, lead + 1)
            mode = body[len("mode:"):].strip()
            if mode not in MODES:
                raise ParseError(f"mode must be one of {', '.join(MODES)}", lineno, lead + 1)
            continue

        head, sep, weight_text = line.partition(":")
        for arrow in ("<->", "->"):
            if arrow in head:
                break
        else:
            raise ParseError("expected a reaction 'A -> B'", lineno, lead + 1)
        apos = head.index(arrow)
        lhs, rhs = head[:apos], head[apos + len(arrow):]
        src = parse_complex(lhs, species, lineno, 1)
        tgt = parse_complex(rhs, species, lineno, apos + len(arrow) + 1)
        wcol = len(head) + 2
        weights: List[Optional[Fraction]] = [None, None]
        if sep:
            parts = weight_text.split(",")
            if len(parts) > (2 if arrow == "<->" else 1):
                raise ParseError("too many weights", lineno, wcol)
            vals = [_parse_rational(p, lineno, wcol) for p in parts]
            if any(v <= 0 for v in vals):
                raise ParseError("weights must be positive", lineno, wcol)
            weights = [vals[0], vals[-1]]
        if src == tgt:
            raise ParseError("self-loop: source and target complexes are equal", lineno, lead + 1)
        reactions.append((src, tgt, weights[0], lineno))
        if arrow == "<->":
            reactions.append((tgt, src, weights[1], lineno))

    if species is None:
        raise ParseError("empty document", 1)
    if not reactions:
        raise ParseError("no reactions", len(text.splitlines()) or 1)

    weighted = [w is not None for _, _, w, _ in reactions]
    if mode is None:
        if all(weighted):
            mode = "mass-action"
        elif not any(weighted):
            mode = "network"
        else:
            ln = next(r[3] for r, w in zip(reactions, weighted) if not w)
            raise ParseError("missing weight (some reactions have weights, this one does not)", ln)
    for (_, _, w, ln) in reactions:
        if mode == "network" and w is not None:
            raise ParseError("weights are not allowed in mode 'network'", ln)
        if mode != "network" and w is None:
            raise ParseError(f"missing weight in mode '{mode}'", ln)

    seen = {}
    for src, tgt, _, ln in reactions:
        if (src, tgt) in seen:
            raise ParseError(f"duplicate edge (first on line {seen[(src, tgt)]})", ln)
        seen[(src, tgt)] = ln

    try:
        net = ReactionNetwork.from_reactions(species, [(s, t) for s, t, _, _ in reactions])
    except NetworkError as exc:  # pragma: no cover - caught above
        raise ParseError(str(exc), 1) from exc
    ws = None if mode == "network" else tuple(w for _, _, w, _ in reactions)
    return NetworkDocument(mode, net, ws)


def load(path: Union[str, Path]) -> NetworkDocument:
    return parse(Path(path).read_text(encoding="utf-8"))


def format_complex(vertex: Sequence[Fraction], species: Sequence[str]) -> str:
    terms = []
    for c, name in zip(vertex, species):
        if c == 0:
            continue
        if c == 1:
            terms.append(name)
        elif c.denominator == 1 and c > 0:
            terms.append(f"{c}{name}")
        else:
            terms.append(f"{c} {name}")
    return " + ".join(terms) if terms else "0"


def document_of(obj) -> NetworkDocument:
    if isinstance(obj, NetworkDocument):
        return obj
    if isinstance(obj, FluxSystem):
        return NetworkDocument("flux", obj.network, obj.weights)
    if isinstance(obj, MassActionSystem):
        return NetworkDocument("mass-action", obj.network, obj.weights)
    if isinstance(obj, ReactionNetwork):
        return NetworkDocument("network", obj)
    raise TypeError(f"cannot format {type(obj).__name__}")


def format_document(obj) -> str:
    """Canonical text for a document, network, flux or mass-action system."""
    doc = document_of(obj)
    net = doc.network
    lines = [f"species: {' '.join(net.species)}", f"mode: {doc.mode}"]
    for i, (s, t) in enumerate(net.edges):
        line = (f"{format_complex(net.vertices[s], net.species)} -> "
                f"{format_complex(net.vertices[t], net.species)}")
        if doc.weights is not None:
            line += f" : {doc.weights[i]}"
        lines.append(line)
    return "\n".join(lines) + "\n"


def _dot_escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')


def emit_dot(obj, name: str = "crn") -> str:
    """Deterministic DOT digraph; vertices show the complex and its coordinates."""
    doc = document_of(obj)
    net = doc.network
    out = [f"digraph {name} {{", "  rankdir=LR;", "  node [shape=box];"]
    for i, v in enumerate(net.vertices):
        coords = ", ".join(str(c) for c in v)
        label = f"{_dot_escape(format_complex(v, net.species))}\\n({coords})"
        out.append(f'  v{i} [label="{label}"];')
    for k, (s, t) in enumerate(net.edges):
        attr = f' [label="{doc.weights[k]}"]' if doc.weights is not None else ""
        out.append(f"  v{s} -> v{t}{attr};")
    out.append("}")
    return "\n".join(out) + "\n"


def parse_dot_structure(text: str) -> Dict[str, object]:
    """Read back node labels and labelled arcs from :func:`emit_dot` output."""
    nodes = dict(re.findall(r'^\s*(v\d+) \[label="([^"]*)"\];', text, re.M))
    arcs = []
    for s, t, label in re.findall(r'^\s*(v\d+) -> (v\d+)(?: \[label="([^"]*)"\])?;', text, re.M):
        arcs.append((s, t, label or None))
    return {"nodes": nodes, "arcs": arcs}


def parse_state(text: str, dimension: int) -> Tuple[Fraction, ...]:
    """Parse ``x1,x2,...`` given on the command line."""
    parts = [p for p in text.split(",")]
    if len(parts) != dimension:
        raise ValueError(f"state needs {dimension} comma-separated entries, got {len(parts)}")
    vals = tuple(_parse_rational(p, 1, 1) for p in parts)
    return vals
