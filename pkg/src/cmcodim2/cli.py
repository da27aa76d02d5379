"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 domain error, 3 negative verdict
from a ``check-*`` command.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Any, Callable

from . import serialize as ser
from .chordal_construct import is_admissible_taylor_graph, realize, verify_realization
from .errors import CMError, DomainError, UsageError
from .generic_ideal import build_cm_ideal, generic_ideal, generic_variables, primary_decomposition_generic
from .oracle import relation_in_span
from .sampling import random_admissible_graph, random_cm_ideal
from .syzygy import (
    MonomialIdeal,
    has_linear_resolution,
    hilbert_burch_matrix,
    is_cm_codim2,
    relation_trees,
    spanning_equals_relation,
    taylor_graph,
    taylor_relations,
    verify_matroid_exchange,
)
from .trees_graphs import LabeledTree, SimpleGraph

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_NEGATIVE = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class Result:
    """Payload for JSON mode, lines for text mode, and an exit code."""

    def __init__(self, data: dict, text: list[str], code: int = EXIT_OK):
        self.data, self.text, self.code = data, text, code


def _read_input(args) -> Any:
    if args.json is not None:
        raw = args.json
    elif args.input is None:
        raise UsageError("no input given (path, '-' for stdin, or --json)")
    elif args.input == "-":
        raw = sys.stdin.read()
    else:
        try:
            with open(args.input) as fh:
                raw = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {args.input}: {exc.strerror}") from None
    try:
        return json.loads(raw)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON: {exc}") from None


def _fmt_tree(tree: LabeledTree) -> str:
    return "{" + ", ".join(f"{{{i},{j}}}" for i, j in tree.edges) + "}"


def _fmt_rows(rows: list[list[str]]) -> list[str]:
    width = max(len(c) for r in rows for c in r)
    return ["  [ " + "  ".join(c.rjust(width) for c in r) + " ]" for r in rows]


# --- subcommands -----------------------------------------------------------


def cmd_gen_from_tree(args, data) -> Result:
    tree = ser.tree_from_json(data)
    if tree.labels is None:
        gens = generic_ideal(tree)
        vs = generic_variables(tree)
    else:
        gens = build_cm_ideal(tree)
        vs = gens[0].variables
    ideal = MonomialIdeal(vs, tuple(gens))
    payload = ser.ideal_to_json(ideal)
    return Result(payload, ["I = " + str(ideal)])


def cmd_decompose(args, data) -> Result:
    tree = ser.tree_from_json(data)
    comps = sorted(primary_decomposition_generic(tree), key=lambda c: [g.sort_key() for g in c.gens])
    vs = generic_variables(tree)
    payload = {"variables": list(vs.names), "components": [[str(g) for g in c.gens] for c in comps]}
    return Result(payload, ["I(tree) = " + " ∩ ".join(str(c) for c in comps)])


def cmd_check_cm(args, data) -> Result:
    ideal = ser.ideal_from_json(data)
    verdict = is_cm_codim2(ideal)
    payload: dict[str, Any] = {"cohen_macaulay": verdict.accepted, "reason": verdict.reason}
    if verdict.witness is not None:
        payload["witness"] = ser.tree_to_json(verdict.witness)
        text = [f"Cohen-Macaulay of codimension 2; relation tree {_fmt_tree(verdict.witness)}"]
    else:
        text = [f"not Cohen-Macaulay of codimension 2: {verdict.reason}"]
    return Result(payload, text, EXIT_OK if verdict else EXIT_NEGATIVE)


def cmd_relation_trees(args, data) -> Result:
    ideal = ser.ideal_from_json(data)
    trees = relation_trees(ideal, jobs=args.jobs)
    graph = SimpleGraph(len(ideal), frozenset(e for t in trees for e in t.edges))
    exchange, _ = verify_matroid_exchange(trees)
    payload: dict[str, Any] = {
        "trees": [[list(e) for e in t.key()] for t in trees],
        "taylor_graph": ser.graph_to_json(graph),
        "matroid_exchange": exchange,
    }
    text = [f"{len(trees)} relation tree(s):"] + ["  " + _fmt_tree(t) for t in trees]
    if args.show_matrices:
        payload["matrices"] = [ser.matrix_to_json(hilbert_burch_matrix(ideal, t)) for t in trees]
        for t, rows in zip(trees, payload["matrices"]):
            text += [f"matrix for {_fmt_tree(t)}:", *_fmt_rows(rows)]
    if args.oracle:
        rels = taylor_relations(ideal)
        by_pair = {r.pair: r for r in rels}
        agree = all(relation_in_span(r, [by_pair[e] for e in t.edges], ideal) is True for t in trees for r in rels)
        payload["oracle_agrees"] = agree
        text.append(f"oracle agrees: {agree}")
    text.append(f"basis exchange holds: {exchange}")
    return Result(payload, text)


def cmd_taylor_graph(args, data) -> Result:
    graph = taylor_graph(ser.ideal_from_json(data), jobs=args.jobs)
    payload = ser.graph_to_json(graph)
    return Result(payload, [f"Taylor graph on {graph.vertex_count} vertices, edges {payload['edges']}"])


def cmd_check_linear(args, data) -> Result:
    linear = has_linear_resolution(ser.ideal_from_json(data))
    text = ["linear resolution" if linear else "no linear resolution"]
    return Result({"linear_resolution": linear}, text, EXIT_OK if linear else EXIT_NEGATIVE)


def cmd_compare_spanning(args, data) -> Result:
    rep = spanning_equals_relation(ser.ideal_from_json(data), jobs=args.jobs)

    def edges(keys):
        return [[list(e) for e in k] for k in keys]

    payload = {
        "relation_tree_count": len(rep.relation_trees),
        "spanning_tree_count": len(rep.spanning_trees),
        "relation_trees": edges(rep.relation_trees),
        "spanning_trees": edges(rep.spanning_trees),
        "missing": edges(rep.missing),
        "verdict": rep.verdict,
    }
    text = [
        f"relation trees: {len(rep.relation_trees)}, spanning trees of the Taylor graph: {len(rep.spanning_trees)}",
        *(f"  not a relation tree: {k}" for k in payload["missing"]),
        f"T(I) = T(G(I)): {rep.verdict}",
    ]
    return Result(payload, text)


def cmd_realize(args, data) -> Result:
    r = realize(ser.graph_from_json(data))
    check = verify_realization(r)
    rows = ser.signed_rows_to_json(r.rows, r.graph.vertex_count)
    payload = {
        "graph": ser.graph_to_json(r.graph),
        "clique_order": ser.clique_order_to_json(r.clique_order),
        "tree": ser.tree_to_json(r.tree),
        "matrix": rows,
        "ideal": ser.ideal_to_json(r.ideal),
        "verified": bool(check),
    }
    co = r.clique_order
    text = [
        "cliques: " + ", ".join("{" + ",".join(map(str, c)) + "}" for c in co.cliques),
        "attach vertices: " + (", ".join(map(str, co.attach_vertices)) or "none"),
        "tree: " + _fmt_tree(r.tree),
        "matrix:",
        *_fmt_rows(rows),
        "I = " + str(r.ideal),
        f"verified: {bool(check)}",
    ]
    return Result(payload, text)


def cmd_classify_graph(args, data) -> Result:
    ok, reason = is_admissible_taylor_graph(ser.graph_from_json(data))
    text = ["admissible Taylor graph" if ok else f"not admissible: {reason}"]
    return Result({"admissible": ok, "reason": reason}, text)


def cmd_verify_matroid(args, data) -> Result:
    if isinstance(data, dict) and "trees" in data:
        data = data["trees"]
    if not isinstance(data, list) or not data:
        raise UsageError("expected a non-empty list of edge lists (or {'trees': [...]})")
    family = [[tuple(e) for e in (t["edges"] if isinstance(t, dict) else t)] for t in data]
    ok, bad = verify_matroid_exchange(family)
    payload: dict[str, Any] = {"matroid_exchange": ok}
    text = [f"basis exchange holds: {ok}"]
    if bad is not None:
        b1, b2, e = bad
        payload["counterexample"] = {"B1": sorted(map(list, b1)), "B2": sorted(map(list, b2)), "edge": list(e)}
        text.append(f"  removing {list(e)} from {sorted(map(list, b1))} cannot be repaired from {sorted(map(list, b2))}")
    return Result(payload, text)


def cmd_dev(args, data) -> Result:
    rng = random.Random(args.seed)
    items = []
    for _ in range(args.count):
        if args.kind == "cm":
            tree, ideal = random_cm_ideal(rng, max_vertices=args.max_vertices)
            items.append({"tree": ser.tree_to_json(tree), "ideal": ser.ideal_to_json(ideal)})
        else:
            items.append(ser.graph_to_json(random_admissible_graph(rng, max_vertices=args.max_vertices)))
    return Result({"samples": items}, [json.dumps(x, sort_keys=True) for x in items])


COMMANDS: dict[str, tuple[Callable, str, str]] = {
    "gen-from-tree": (cmd_gen_from_tree, "tree", "ideal of a tree: generic, or from its edge labels"),
    "decompose": (cmd_decompose, "tree", "primary decomposition of the generic ideal of a tree"),
    "check-cm": (cmd_check_cm, "ideal", "decide Cohen-Macaulay of codimension 2 (exit 3 if not)"),
    "relation-trees": (cmd_relation_trees, "ideal", "all relation trees plus Taylor graph"),
    "taylor-graph": (cmd_taylor_graph, "ideal", "union of all relation trees"),
    "check-linear": (cmd_check_linear, "ideal", "decide linear resolution (exit 3 if not)"),
    "compare-spanning": (cmd_compare_spanning, "ideal", "relation trees vs spanning trees of the Taylor graph"),
    "realize": (cmd_realize, "graph", "realize an admissible chordal graph as a Taylor graph"),
    "classify-graph": (cmd_classify_graph, "graph", "is the graph a possible Taylor graph of a linear ideal"),
    "verify-matroid": (cmd_verify_matroid, "trees", "basis exchange axiom on a family of trees"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cmcodim2", description="Cohen-Macaulay monomial ideals of codimension 2.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser, metavar="COMMAND")

    def common(p):
        p.add_argument("input", nargs="?", help="JSON input file, or '-' for stdin")
        p.add_argument("--json", help="inline JSON input instead of a file")
        p.add_argument("--format", choices=("json", "text"), default="text")
        p.add_argument("--jobs", type=int, default=1, help="worker processes for tree enumeration")
        p.add_argument("--oracle", action="store_true", help=argparse.SUPPRESS)

    for name, (_, kind, helptext) in COMMANDS.items():
        p = sub.add_parser(name, help=f"{helptext} [input: {kind}]", description=helptext)
        common(p)
        if name == "relation-trees":
            p.add_argument("--show-matrices", action="store_true", help="include Hilbert-Burch matrices")

    dev = sub.add_parser("dev")  # fuzz helpers, deliberately undocumented in --help
    dev.add_argument("kind", choices=("cm", "chordal"))
    dev.add_argument("--seed", type=int, required=True)
    dev.add_argument("--count", type=int, default=1)
    dev.add_argument("--max-vertices", type=int, default=6)
    dev.add_argument("--format", choices=("json", "text"), default="json")
    return parser


def run(argv: list[str] | None = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    as_json = args.format == "json"
    try:
        if args.command == "dev":
            result = cmd_dev(args, None)
        else:
            if args.jobs < 1:
                raise UsageError("--jobs must be at least 1")
            result = COMMANDS[args.command][0](args, _read_input(args))
    except CMError as exc:
        code = EXIT_DOMAIN if isinstance(exc, DomainError) else EXIT_USAGE
        kind = "domain" if code == EXIT_DOMAIN else "usage"
        reason = getattr(exc, "reason", None) or kind
        if as_json:
            print(json.dumps({"error": str(exc), "kind": kind, "reason": reason}, sort_keys=True), file=stdout)
        else:
            print(f"error: {exc}", file=sys.stderr)
        return code
    except (KeyError, TypeError, ValueError) as exc:
        if as_json:
            print(json.dumps({"error": f"malformed input: {exc}", "kind": "usage", "reason": "usage"}), file=stdout)
        else:
            print(f"error: malformed input: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if as_json:
        print(json.dumps(result.data, sort_keys=True), file=stdout)
    else:
        print("\n".join(result.text), file=stdout)
    return result.code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
