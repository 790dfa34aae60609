"""Directed-graph connectivity on integer vertex labels ``0..n-1`` (via scipy.sparse.csgraph)."""

from typing import Iterable, List, Sequence, Set, Tuple

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

Edge = Tuple[int, int]


def _labels(n: int, edges: Sequence[Edge], connection: str) -> np.ndarray:
    if n == 0:
        return np.zeros(0, dtype=int)
    edges = list(edges)
    rows = [u for u, _ in edges]
    cols = [v for _, v in edges]
    adj = csr_matrix((np.ones(len(edges)), (rows, cols)), shape=(n, n))
    _, labels = connected_components(adj, directed=True, connection=connection)
    return labels


def _group(labels: np.ndarray) -> List[List[int]]:
    groups = {}
    for v, c in enumerate(labels):
        groups.setdefault(int(c), []).append(v)
    return sorted(groups.values())


def strongly_connected_components(n: int, edges: Iterable[Edge]) -> List[List[int]]:
    """Strongly connected components as sorted lists, ordered by smallest member."""
    return _group(_labels(n, list(edges), "strong"))


def weak_components(n: int, edges: Iterable[Edge]) -> List[List[int]]:
    """Connected components of the underlying undirected graph."""
    return _group(_labels(n, list(edges), "weak"))


def edges_on_cycles(n: int, edges: Sequence[Edge]) -> Set[Edge]:
    """The edges that lie on some directed cycle, i.e. inside one strong component."""
    labels = _labels(n, edges, "strong")
    return {(u, v) for u, v in edges if labels[u] == labels[v]}
