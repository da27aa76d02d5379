"""JSON forms of ideals, trees, graphs and reports.

Formats::

    ideal  {"variables": [...], "generators": ["x1*x2^2", ...]}
    graph  {"vertices": n, "edges": [[i, j], ...]}
    tree   {"vertices": n, "edges": [[i, j], ...],
            "variables": [...],                       # only with labels
            "labels": [{"edge": [i, j], "u_ij": "...", "u_ji": "..."}, ...]}

Loaders accept the object either bare or nested under the key a producing
command used (``"ideal"``, ``"graph"``, ``"witness"``, ...), so one command's
output can be piped into the next.
"""

from __future__ import annotations

from typing import Any, Mapping

from .errors import UsageError
from .monomial import Monomial, VariableSet
from .syzygy import HilbertBurchMatrix, MonomialIdeal
from .trees_graphs import CliqueOrder, LabeledTree, SimpleGraph


def _unwrap(data: Any, required: str, nested: tuple[str, ...]) -> Mapping:
    if not isinstance(data, Mapping):
        raise UsageError(f"expected a JSON object with {required!r}")
    if required in data:
        return data
    for key in nested:
        if isinstance(data.get(key), Mapping) and required in data[key]:
            return data[key]
    raise UsageError(f"JSON object lacks {required!r}")


def ideal_to_json(ideal: MonomialIdeal) -> dict:
    return {"variables": list(ideal.variables.names), "generators": [str(u) for u in ideal.gens]}


def ideal_from_json(data: Any) -> MonomialIdeal:
    obj = _unwrap(data, "generators", ("ideal",))
    names = obj.get("variables")
    if names is None:
        raise UsageError("ideal JSON needs a 'variables' list")
    vs = VariableSet(tuple(names))
    return MonomialIdeal.parse(vs, obj["generators"])


def graph_to_json(graph: SimpleGraph) -> dict:
    return {"vertices": graph.vertex_count, "edges": [list(e) for e in graph.sorted_edges()]}


def graph_from_json(data: Any) -> SimpleGraph:
    obj = _unwrap(data, "edges", ("graph", "taylor_graph"))
    if "vertices" not in obj:
        raise UsageError("graph JSON needs 'vertices'")
    return SimpleGraph(int(obj["vertices"]), frozenset(tuple(e) for e in obj["edges"]))


def tree_to_json(tree: LabeledTree) -> dict:
    out: dict[str, Any] = {"vertices": tree.vertex_count, "edges": [list(e) for e in tree.edges]}
    if tree.labels is not None:
        out["variables"] = list(tree.labels[0][0].variables.names)
        out["labels"] = [
            {"edge": list(e), "u_ij": str(uij), "u_ji": str(uji)} for e, (uij, uji) in zip(tree.edges, tree.labels)
        ]
    return out


def tree_from_json(data: Any) -> LabeledTree:
    obj = _unwrap(data, "edges", ("tree", "witness"))
    n = int(obj.get("vertices", len(obj["edges"]) + 1))
    edges = [tuple(e) for e in obj["edges"]]
    if "labels" not in obj:
        return LabeledTree(n, tuple(edges))
    if "variables" not in obj:
        raise UsageError("labelled tree JSON needs 'variables'")
    vs = VariableSet(tuple(obj["variables"]))
    labeled: dict[tuple[int, int], tuple[Monomial, Monomial]] = {}
    for item in obj["labels"]:
        i, j = item["edge"]
        labeled[(i, j)] = (vs.parse(item["u_ij"]), vs.parse(item["u_ji"]))
    ordered = {}
    for i, j in edges:
        key = (i, j) if (i, j) in labeled else (j, i)
        if key not in labeled:
            raise UsageError(f"edge {[i, j]} has no labels")
        ordered[key] = labeled[key]
    return LabeledTree.with_labels(n, ordered)


def signed_rows_to_json(rows, width: int) -> list[list[str]]:
    """Dense string rows, ``"0"`` for empty cells and a leading ``-`` for negative entries."""
    out = []
    for row in rows:
        cells = ["0"] * width
        for col, sign, u in row:
            cells[col - 1] = ("-" if sign < 0 else "") + str(u)
        out.append(cells)
    return out


def matrix_to_json(matrix: HilbertBurchMatrix) -> list[list[str]]:
    return signed_rows_to_json([r.entries() for r in matrix.rows], len(matrix.ideal))


def clique_order_to_json(order: CliqueOrder) -> dict:
    return {
        "cliques": [list(c) for c in order.cliques],
        "attach_vertices": list(order.attach_vertices),
        "relabeling": {str(v): w for v, w in order.relabel_map().items()},
    }
