"""Labeled trees and simple graphs on 1-based vertex sets.

Covers the combinatorics everything else leans on: tree paths and their
endpoint neighbours, leaf peeling, spanning-tree enumeration, chordality,
maximal cliques and the leaf order of a clique complex.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Mapping, Sequence

from .errors import DomainError, PreconditionError, UsageError
from .monomial import Monomial

__all__ = [
    "Edge",
    "LabeledTree",
    "SimpleGraph",
    "CliqueOrder",
    "path",
    "path_endpoints",
    "free_vertex_ordering",
    "spanning_trees",
    "count_spanning_trees",
    "is_chordal",
    "maximal_cliques",
    "clique_intersection_condition",
    "quasi_forest_order",
]

Edge = tuple[int, int]


def _norm_edge(e: Sequence[int]) -> Edge:
    i, j = (int(v) for v in e)
    return (i, j) if i < j else (j, i)


def _adjacency(n: int, edges) -> dict[int, list[int]]:
    adj: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    for v in adj:
        adj[v].sort()
    return adj


def _is_connected(n: int, edges) -> bool:
    adj = _adjacency(n, edges)
    seen = {1}
    stack = [1]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


@dataclass(frozen=True)
class LabeledTree:
    """A tree on ``1..vertex_count`` with an ordered edge list.

    The edge order fixes the row order of any matrix built from the tree.
    ``labels[k]`` is ``(u_ij, u_ji)`` for ``edges[k] == (i, j)``, ``i < j``:
    ``u_ij`` sits in column ``i`` of that row, ``u_ji`` in column ``j``.
    """

    vertex_count: int
    edges: tuple[Edge, ...]
    labels: tuple[tuple[Monomial, Monomial], ...] | None = None
    _toward: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        n = self.vertex_count
        if n < 2:
            raise UsageError("a tree needs at least two vertices")
        edges = tuple(_norm_edge(e) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        if len(edges) != n - 1:
            raise UsageError(f"a tree on {n} vertices has {n - 1} edges, got {len(edges)}")
        for i, j in edges:
            if i == j or not (1 <= i <= n and 1 <= j <= n):
                raise UsageError(f"bad edge {(i, j)} for {n} vertices")
        if len(set(edges)) != len(edges) or not _is_connected(n, edges):
            raise UsageError(f"edges {list(edges)} do not form a tree on {n} vertices")
        if self.labels is not None:
            labels = tuple(tuple(pair) for pair in self.labels)
            if len(labels) != len(edges):
                raise UsageError("one label pair per edge required")
            for pair in labels:
                if len(pair) != 2 or any(u.is_unit() for u in pair):
                    raise UsageError("edge labels must be two non-unit monomials")
            object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_toward", {})

    @classmethod
    def from_edges(cls, edges: Sequence[Sequence[int]], vertex_count: int | None = None) -> LabeledTree:
        edges = [_norm_edge(e) for e in edges]
        if vertex_count is None:
            vertex_count = len(edges) + 1
        return cls(vertex_count, tuple(edges))

    @classmethod
    def with_labels(cls, vertex_count: int, labeled: Mapping[Edge, tuple[Monomial, Monomial]]) -> LabeledTree:
        """Build from ``{(i, j): (u_ij, u_ji)}``; keys may be given in either orientation."""
        edges, labels = [], []
        for (a, b), (uab, uba) in labeled.items():
            if a < b:
                edges.append((a, b))
                labels.append((uab, uba))
            else:
                edges.append((b, a))
                labels.append((uba, uab))
        return cls(vertex_count, tuple(edges), tuple(labels))

    @property
    def m(self) -> int:
        return self.vertex_count - 1

    @property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def key(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    def adjacency(self) -> dict[int, list[int]]:
        return _adjacency(self.vertex_count, self.edges)

    def degree(self, v: int) -> int:
        return sum(v in e for e in self.edges)

    def label(self, i: int, j: int) -> Monomial:
        """``u_ij`` for the edge ``{i, j}``: the entry in column ``i`` of its row."""
        if self.labels is None:
            raise UsageError("tree carries no edge labels")
        try:
            k = self.edges.index(_norm_edge((i, j)))
        except ValueError:
            raise UsageError(f"{{{i},{j}}} is not an edge") from None
        uab, uba = self.labels[k]
        return uab if i < j else uba

    def unlabeled(self) -> LabeledTree:
        return LabeledTree(self.vertex_count, self.edges)

    def next_hop(self, i: int, j: int) -> int:
        """The neighbour of ``i`` on the path towards ``j``."""
        table = self._toward.get(j)
        if table is None:
            adj = self.adjacency()
            table = {}
            frontier = [j]
            while frontier:
                nxt = []
                for v in frontier:
                    for w in adj[v]:
                        if w != j and w not in table:
                            table[w] = v
                            nxt.append(w)
                frontier = nxt
            self._toward[j] = table
        return table[i]

    def _check_pair(self, i: int, j: int) -> None:
        n = self.vertex_count
        if not (1 <= i <= n and 1 <= j <= n):
            raise UsageError(f"vertices {i}, {j} out of range 1..{n}")
        if i == j:
            raise PreconditionError("path endpoints must be distinct")


def path(tree: LabeledTree, i: int, j: int) -> list[int]:
    tree._check_pair(i, j)
    out = [i]
    while out[-1] != j:
        out.append(tree.next_hop(out[-1], j))
    return out


def path_endpoints(tree: LabeledTree, i: int, j: int) -> tuple[int, int]:
    """``(b(i,j), e(i,j))``: second and second-to-last vertex of ``path(i, j)``."""
    tree._check_pair(i, j)
    return tree.next_hop(i, j), tree.next_hop(j, i)


def free_vertex_ordering(tree: LabeledTree) -> list[tuple[int, Edge]]:
    """Peel the smallest leaf with its edge until one vertex is left."""
    adj = {v: set(ns) for v, ns in tree.adjacency().items()}
    out = []
    for _ in range(tree.m):
        v = min(u for u, ns in adj.items() if len(ns) == 1)
        (w,) = adj.pop(v)
        adj[w].discard(v)
        out.append((v, _norm_edge((v, w))))
    return out


@dataclass(frozen=True)
class SimpleGraph:
    vertex_count: int
    edges: frozenset[Edge]

    def __post_init__(self):
        if self.vertex_count < 1:
            raise UsageError("a graph needs at least one vertex")
        edges = frozenset(_norm_edge(e) for e in self.edges)
        for i, j in edges:
            if i == j:
                raise UsageError(f"loop at vertex {i}")
            if not (1 <= i <= self.vertex_count and 1 <= j <= self.vertex_count):
                raise UsageError(f"edge {(i, j)} out of range")
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_edges(cls, edges: Sequence[Sequence[int]], vertex_count: int | None = None) -> SimpleGraph:
        edges = [_norm_edge(e) for e in edges]
        if vertex_count is None:
            vertex_count = max((j for _, j in edges), default=1)
        return cls(vertex_count, frozenset(edges))

    @classmethod
    def complete(cls, n: int) -> SimpleGraph:
        return cls(n, frozenset(combinations(range(1, n + 1), 2)))

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def adjacency(self) -> dict[int, list[int]]:
        return _adjacency(self.vertex_count, self.edges)

    def is_connected(self) -> bool:
        return _is_connected(self.vertex_count, self.edges)

    def has_edge(self, i: int, j: int) -> bool:
        return _norm_edge((i, j)) in self.edges

    def relabel(self, perm: Mapping[int, int]) -> SimpleGraph:
        return SimpleGraph(self.vertex_count, frozenset(_norm_edge((perm[i], perm[j])) for i, j in self.edges))


def spanning_trees(graph: SimpleGraph) -> Iterator[LabeledTree]:
    """Yield every spanning tree once.

    Backtracking over the lexicographically sorted edges: each edge is first
    dropped (when it is not a bridge of what remains), then kept (when it
    closes no cycle). Output order is therefore deterministic.
    """
    if not graph.is_connected():
        raise DomainError("spanning trees need a connected graph", reason="disconnected graph")
    n = graph.vertex_count
    if n == 1:
        return
    edges = graph.sorted_edges()

    def connected_without(dropped: set[int]) -> bool:
        return _is_connected(n, (e for k, e in enumerate(edges) if k not in dropped))

    def find(parent: list[int], v: int) -> int:
        while parent[v] != v:
            v = parent[v]
        return v

    def rec(k: int, dropped: set[int], kept: list[Edge], parent: list[int]):
        if len(kept) == n - 1:
            yield LabeledTree(n, tuple(kept))
            return
        if k == len(edges):
            return
        dropped.add(k)
        if connected_without(dropped):
            yield from rec(k + 1, dropped, kept, parent)
        dropped.discard(k)
        i, j = edges[k]
        ri, rj = find(parent, i), find(parent, j)
        if ri != rj:
            child = parent.copy()
            child[ri] = rj
            kept.append(edges[k])
            yield from rec(k + 1, dropped, kept, child)
            kept.pop()

    yield from rec(0, set(), [], list(range(n + 1)))


def count_spanning_trees(graph: SimpleGraph) -> int:
    """Matrix-tree theorem: any cofactor of the Laplacian, computed exactly."""
    n = graph.vertex_count
    if n == 1:
        return 1
    lap = [[Fraction(0)] * n for _ in range(n)]
    for i, j in graph.edges:
        lap[i - 1][i - 1] += 1
        lap[j - 1][j - 1] += 1
        lap[i - 1][j - 1] -= 1
        lap[j - 1][i - 1] -= 1
    a = [row[1:] for row in lap[1:]]
    size = n - 1
    det = Fraction(1)
    for c in range(size):
        pivot = next((r for r in range(c, size) if a[r][c] != 0), None)
        if pivot is None:
            return 0
        if pivot != c:
            a[c], a[pivot] = a[pivot], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, size):
            f = a[r][c] / a[c][c]
            if f:
                for cc in range(c, size):
                    a[r][cc] -= f * a[c][cc]
    return int(det)


def is_chordal(graph: SimpleGraph) -> list[int] | None:
    """Return a perfect elimination ordering, or ``None`` if the graph is not chordal.

    Maximum cardinality search (ties to the smallest vertex); the reverse
    visit order is checked for being a PEO.
    """
    n = graph.vertex_count
    adj = {v: set(ns) for v, ns in graph.adjacency().items()}
    weight = {v: 0 for v in adj}
    visit = []
    while weight:
        v = min(weight, key=lambda u: (-weight[u], u))
        del weight[v]
        visit.append(v)
        for w in adj[v]:
            if w in weight:
                weight[w] += 1
    peo = visit[::-1]
    pos = {v: k for k, v in enumerate(peo)}
    for v in peo:
        later = [w for w in adj[v] if pos[w] > pos[v]]
        if not later:
            continue
        u = min(later, key=pos.__getitem__)
        if any(w != u and w not in adj[u] for w in later):
            return None
    assert len(peo) == n
    return peo


def _bron_kerbosch(adj: dict[int, set[int]]) -> list[frozenset[int]]:
    out = []

    def rec(r: set[int], p: set[int], x: set[int]):
        if not p and not x:
            out.append(frozenset(r))
            return
        pivot = max(p | x, key=lambda u: (len(adj[u] & p), -u))
        for v in sorted(p - adj[pivot]):
            rec(r | {v}, p & adj[v], x & adj[v])
            p = p - {v}
            x = x | {v}

    rec(set(), set(adj), set())
    return out


def maximal_cliques(graph: SimpleGraph) -> list[tuple[int, ...]]:
    """All inclusion-maximal cliques as sorted tuples, in sorted order."""
    adj = {v: set(ns) for v, ns in graph.adjacency().items()}
    peo = is_chordal(graph)
    if peo is None:
        cliques = _bron_kerbosch(adj)
    else:
        pos = {v: k for k, v in enumerate(peo)}
        cands = {frozenset([v, *(w for w in adj[v] if pos[w] > pos[v])]) for v in peo}
        cliques = [c for c in cands if not any(c < d for d in cands)]
    return sorted(tuple(sorted(c)) for c in cliques)


def clique_intersection_condition(graph: SimpleGraph) -> bool:
    cliques = [set(c) for c in maximal_cliques(graph)]
    return all(len(a & b) <= 1 for a, b in combinations(cliques, 2))


@dataclass(frozen=True)
class CliqueOrder:
    """Leaf order ``C_1..C_r`` of the maximal cliques with attach vertices ``k_2..k_r``.

    Cliques and attach vertices use the graph's own labels. ``relabeling[v - 1]``
    is the new label of ``v`` under which ``C_1 = {1..s_1}`` and each
    ``C_i - {k_i}`` is the next consecutive block.
    """

    cliques: tuple[tuple[int, ...], ...]
    attach_vertices: tuple[int, ...]
    relabeling: tuple[int, ...]

    def relabel_map(self) -> dict[int, int]:
        return {v: w for v, w in enumerate(self.relabeling, start=1)}

    def relabeled(self) -> CliqueOrder:
        f = self.relabel_map()
        return CliqueOrder(
            tuple(tuple(sorted(f[v] for v in c)) for c in self.cliques),
            tuple(f[k] for k in self.attach_vertices),
            tuple(range(1, len(self.relabeling) + 1)),
        )


def quasi_forest_order(graph: SimpleGraph) -> CliqueOrder:
    """Order the maximal cliques so each one meets the earlier ones in one vertex.

    Greedy: start from the smallest clique and repeatedly append the smallest
    clique meeting the union so far in exactly one vertex, which yields the
    lexicographically smallest valid sequence.
    """
    if not graph.is_connected():
        raise DomainError("graph is not connected", reason="not connected")
    if is_chordal(graph) is None:
        raise DomainError("graph is not chordal", reason="not chordal")
    if not clique_intersection_condition(graph):
        raise DomainError(
            "two maximal cliques share more than one vertex", reason="clique intersection condition"
        )
    remaining = maximal_cliques(graph)
    order = [remaining.pop(0)]
    seen = set(order[0])
    attach = []
    while remaining:
        for idx, c in enumerate(remaining):
            common = seen.intersection(c)
            if len(common) == 1:
                break
        else:  # pragma: no cover - excluded by the three checks above
            raise DomainError("no clique extends the current order", reason="no leaf order")
        order.append(remaining.pop(idx))
        attach.append(common.pop())
        seen.update(c)

    new_label: dict[int, int] = {}
    for c, k in zip(order, [None, *attach]):
        for v in c:
            if v != k:
                new_label[v] = len(new_label) + 1
    relabeling = tuple(new_label[v] for v in range(1, graph.vertex_count + 1))
    return CliqueOrder(tuple(order), tuple(attach), relabeling)
