"""Print every worked example: relation trees, matrices, decompositions, the chordal realization."""

from __future__ import annotations

import argparse

from cmcodim2.chordal_construct import realize, verify_realization
from cmcodim2.generic_ideal import generic_ideal, primary_decomposition_generic
from cmcodim2.monomial import VariableSet
from cmcodim2.syzygy import (
    MonomialIdeal,
    hilbert_burch_matrix,
    relation_trees,
    spanning_equals_relation,
    taylor_graph,
    tree_minors,
)
from cmcodim2.trees_graphs import LabeledTree, SimpleGraph

EXAMPLE = ["x4*x5*x6", "x1*x5*x6", "x1*x2*x6", "x1*x2*x3*x5"]
SEVEN = [(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5), (5, 6), (5, 7)]


def show_matrix(rows):
    cells = [["0" if e is None else ("-" if e[0] < 0 else "") + str(e[1]) for e in r] for r in rows]
    width = max(len(c) for r in cells for c in r)
    for r in cells:
        print("   [ " + "  ".join(c.rjust(width) for c in r) + " ]")


def worked_example() -> None:
    ideal = MonomialIdeal.parse(VariableSet.standard(6), EXAMPLE)
    print(f"I = {ideal}")
    for tree in relation_trees(ideal):
        print(f"  relation tree {list(tree.edges)}")
        show_matrix(hilbert_burch_matrix(ideal, tree).dense())
    graph = taylor_graph(ideal)
    print(f"  Taylor graph edges {graph.sorted_edges()}")
    report = spanning_equals_relation(ideal)
    for missing in report.missing:
        minors = tree_minors(ideal, LabeledTree.from_edges(missing))
        print(f"  spanning tree {list(missing)} is not a relation tree; its minors are {[str(m) for m in minors]}")


def generic_examples() -> None:
    for edges in ([(1, 2)], [(1, 2), (2, 3)], [(1, 2), (2, 3), (2, 4)]):
        tree = LabeledTree.from_edges(edges)
        gens = generic_ideal(tree)
        comps = sorted(primary_decomposition_generic(tree), key=str)
        print(f"tree {edges}: I = ({', '.join(map(str, gens))})")
        print("  = " + " ∩ ".join(map(str, comps)))


def chordal_example() -> None:
    r = realize(SimpleGraph.from_edges(SEVEN))
    co = r.clique_order
    print(f"graph {SEVEN}")
    print(f"  cliques {list(co.cliques)}, attach vertices {list(co.attach_vertices)}")
    print(f"  relation tree {list(r.tree.edges)}")
    rows = []
    for entries in r.rows:
        row = [None] * r.graph.vertex_count
        for col, sign, u in entries:
            row[col - 1] = (sign, u)
        rows.append(row)
    show_matrix(rows)
    print(f"  I = {r.ideal}")
    print(f"  verified: {bool(verify_realization(r))}")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--only", choices=("worked", "generic", "chordal"))
    args = parser.parse_args()
    sections = {"worked": worked_example, "generic": generic_examples, "chordal": chordal_example}
    for name, fn in sections.items():
        if args.only in (None, name):
            print(f"== {name}")
            fn()


if __name__ == "__main__":
    main()
