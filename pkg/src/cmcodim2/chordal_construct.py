"""Realize admissible chordal graphs as Taylor graphs of linear ideals.

A connected graph is admissible when it is chordal and any two maximal
cliques share at most one vertex. For such a graph the maximal cliques are
put in leaf order ``C_1..C_r`` with attach vertices ``k_2..k_r``; after
relabeling, each clique contributes a star towards its hub (``k_2`` for
``C_1``, ``k_i`` for ``C_i``) and the row of edge ``{j, hub}`` is
``-x_{i,j} e_j + x_{i,hub} e_hub``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DomainError
from .generic_ideal import build_cm_ideal, verify_label_condition
from .monomial import Monomial, VariableSet
from .syzygy import (
    HilbertBurchMatrix,
    MonomialIdeal,
    has_linear_resolution,
    hilbert_burch_matrix,
    is_cm_codim2,
    taylor_graph,
)
from .trees_graphs import (
    CliqueOrder,
    LabeledTree,
    SimpleGraph,
    clique_intersection_condition,
    is_chordal,
    quasi_forest_order,
)

__all__ = [
    "ChordalRealization",
    "RealizationCheck",
    "is_admissible_taylor_graph",
    "realize",
    "verify_realization",
    "realization_variable",
]

SignedEntry = tuple[int, int, Monomial]  # (column, sign, monomial)


def realization_variable(clique: int, vertex: int) -> str:
    return f"x{clique}_{vertex}"


def is_admissible_taylor_graph(graph: SimpleGraph) -> tuple[bool, str | None]:
    """``(True, None)`` or ``(False, reason)``."""
    if graph.vertex_count < 2:
        return False, "fewer than two vertices"
    if not graph.is_connected():
        return False, "not connected"
    if is_chordal(graph) is None:
        return False, "not chordal"
    if not clique_intersection_condition(graph):
        return False, "clique intersection condition"
    return True, None


@dataclass(frozen=True)
class ChordalRealization:
    """Everything built from one admissible graph.

    ``tree``, ``rows``, ``matrix`` and ``ideal`` use the relabeled vertices;
    ``graph`` keeps the caller's labels and ``clique_order.relabeling`` maps
    between the two.
    """

    graph: SimpleGraph
    clique_order: CliqueOrder
    tree: LabeledTree
    rows: tuple[tuple[SignedEntry, SignedEntry], ...]
    matrix: HilbertBurchMatrix
    ideal: MonomialIdeal
    variables: VariableSet = field(repr=False)

    @property
    def relabeling(self) -> dict[int, int]:
        return self.clique_order.relabel_map()

    def relabeled_graph(self) -> SimpleGraph:
        return self.graph.relabel(self.relabeling)


def realize(graph: SimpleGraph) -> ChordalRealization:
    ok, reason = is_admissible_taylor_graph(graph)
    if not ok:
        raise DomainError(f"graph is not an admissible Taylor graph: {reason}", reason=reason)
    order = quasi_forest_order(graph)
    new = order.relabeled()
    cliques, attach = new.cliques, new.attach_vertices
    # C_1 hangs off k_2; a lone clique uses its largest vertex
    hubs = [attach[0] if attach else max(cliques[0]), *attach]

    specs = []  # (j, clique index, hub)
    for t, (clique, hub) in enumerate(zip(cliques, hubs), start=1):
        specs += [(j, t, hub) for j in clique if j != hub]
    specs.sort()

    names = sorted({(t, v) for j, t, hub in specs for v in (j, hub)})
    xs = VariableSet(tuple(realization_variable(t, v) for t, v in names))
    var = lambda t, v: xs.var(realization_variable(t, v))  # noqa: E731

    rows, edges, labels = [], [], []
    for j, t, hub in specs:
        rows.append(((j, -1, var(t, j)), (hub, 1, var(t, hub))))
        if j < hub:
            edges.append((j, hub))
            labels.append((var(t, j), var(t, hub)))
        else:
            edges.append((hub, j))
            labels.append((var(t, hub), var(t, j)))
    rows = [tuple(sorted(r)) for r in rows]
    tree = LabeledTree(graph.vertex_count, tuple(edges), tuple(labels))

    ok, pair = verify_label_condition(tree)
    assert ok, f"construction produced non-coprime labels at {pair}"
    ideal = MonomialIdeal(xs, tuple(build_cm_ideal(tree)))
    assert len(ideal) == graph.vertex_count
    matrix = hilbert_burch_matrix(ideal, tree)
    for own, rel in zip(rows, matrix.rows):
        flipped = tuple((c, -s, u) for c, s, u in own)
        assert rel.entries() in (own, flipped), "construction rows must be Taylor relations up to sign"
    return ChordalRealization(graph, order, tree, tuple(rows), matrix, ideal, xs)


@dataclass(frozen=True)
class RealizationCheck:
    cohen_macaulay: bool
    linear: bool
    taylor_graph_matches: bool
    taylor_graph: SimpleGraph | None

    def __bool__(self) -> bool:
        return self.cohen_macaulay and self.linear and self.taylor_graph_matches


def verify_realization(r: ChordalRealization) -> RealizationCheck:
    if not is_cm_codim2(r.ideal):
        return RealizationCheck(False, False, False, None)
    linear = has_linear_resolution(r.ideal)
    g = taylor_graph(r.ideal)
    return RealizationCheck(True, linear, g == r.relabeled_graph(), g)
