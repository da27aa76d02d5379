"""Taylor relations, relation trees and Hilbert-Burch matrices.

Generators ``u_1..u_{m+1}`` of a monomial ideal give one Taylor relation per
pair ``i < j``::

    r_ij = u_ji e_j - u_ij e_i,   u_ij = u_j / gcd(u_i, u_j),  u_ji = u_i / gcd(u_i, u_j)

A relation tree is a tree on ``1..m+1`` whose edge relations generate all
the others. A tree generates iff for every pair ``i < j`` each edge
``{a, b}`` on the tree path from ``i`` to ``j`` has ``lcm(u_a, u_b)``
dividing ``lcm(u_i, u_j)``: then ``r_ij`` telescopes along the path, and
conversely a basis of a free module expresses ``r_ij`` only that way.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import DomainError, UsageError
from .monomial import Monomial, VariableSet, divide_exact, gcd, gcd_all, lcm, product
from .trees_graphs import Edge, LabeledTree, SimpleGraph, path, spanning_trees

__all__ = [
    "MonomialIdeal",
    "TaylorRelation",
    "HilbertBurchMatrix",
    "CMVerdict",
    "SpanningReport",
    "taylor_relations",
    "tree_generates",
    "candidate_edges",
    "relation_trees",
    "tree_minors",
    "hilbert_burch_matrix",
    "is_cm_codim2",
    "taylor_graph",
    "has_linear_resolution",
    "spanning_equals_relation",
    "verify_matroid_exchange",
]


@dataclass(frozen=True)
class MonomialIdeal:
    """Minimal monomial generators, in input order with redundant ones dropped."""

    variables: VariableSet
    gens: tuple[Monomial, ...]

    def __post_init__(self):
        kept: list[Monomial] = []
        for u in self.gens:
            if u.variables != self.variables:
                raise UsageError("generator over a different variable set")
            if u.is_unit():
                raise DomainError("the unit ideal has no proper monomial generators", reason="unit ideal")
            if any(v.divides(u) for v in kept):
                continue
            kept = [v for v in kept if not u.divides(v)]
            kept.append(u)
        # keep the caller's order among survivors
        order = {id(u): k for k, u in enumerate(self.gens)}
        kept.sort(key=lambda u: order[id(u)])
        object.__setattr__(self, "gens", tuple(kept))

    @classmethod
    def from_gens(cls, gens: Sequence[Monomial]) -> MonomialIdeal:
        if not gens:
            raise UsageError("an ideal needs at least one generator")
        return cls(gens[0].variables, tuple(gens))

    @classmethod
    def parse(cls, variables: VariableSet, texts: Iterable[str]) -> MonomialIdeal:
        return cls(variables, tuple(variables.parse(t) for t in texts))

    def __len__(self) -> int:
        return len(self.gens)

    def __str__(self) -> str:
        return "(" + ", ".join(map(str, self.gens)) + ")"

    def gen(self, i: int) -> Monomial:
        """1-based access matching vertex labels."""
        return self.gens[i - 1]


@dataclass(frozen=True)
class TaylorRelation:
    """``coeff_j e_j - coeff_i e_i`` with ``coeff_i u_i = coeff_j u_j = degree``.

    ``coeff_i = u_j / gcd`` is the entry in column ``i`` (carrying the minus
    sign), ``coeff_j = u_i / gcd`` the entry in column ``j``.
    """

    pair: Edge
    coeff_i: Monomial
    coeff_j: Monomial
    degree: Monomial

    def entries(self) -> tuple[tuple[int, int, Monomial], tuple[int, int, Monomial]]:
        i, j = self.pair
        return (i, -1, self.coeff_i), (j, 1, self.coeff_j)

    def is_linear(self) -> bool:
        return self.coeff_i.degree == 1 and self.coeff_j.degree == 1


def _relation(ideal: MonomialIdeal, i: int, j: int) -> TaylorRelation:
    ui, uj = ideal.gen(i), ideal.gen(j)
    g = gcd(ui, uj)
    return TaylorRelation((i, j), divide_exact(uj, g), divide_exact(ui, g), lcm(ui, uj))


def _need_two(ideal: MonomialIdeal) -> None:
    if len(ideal) < 2:
        raise DomainError("need at least two minimal generators", reason="too few generators")


def taylor_relations(ideal: MonomialIdeal) -> list[TaylorRelation]:
    """All pairwise relations, ordered by pair."""
    _need_two(ideal)
    n = len(ideal)
    return [_relation(ideal, i, j) for i, j in combinations(range(1, n + 1), 2)]


def _pair_lcms(ideal: MonomialIdeal) -> dict[Edge, Monomial]:
    n = len(ideal)
    return {(i, j): lcm(ideal.gen(i), ideal.gen(j)) for i, j in combinations(range(1, n + 1), 2)}


def _generates(tree: LabeledTree, lcms: dict[Edge, Monomial]) -> bool:
    n = tree.vertex_count
    for i, j in combinations(range(1, n + 1), 2):
        target = lcms[(i, j)]
        p = path(tree, i, j)
        for a, b in zip(p, p[1:]):
            if not lcms[(a, b) if a < b else (b, a)].divides(target):
                return False
    return True


def tree_generates(ideal: MonomialIdeal, tree: LabeledTree) -> bool:
    """Do the tree's edge relations generate every Taylor relation?"""
    if tree.vertex_count != len(ideal):
        raise UsageError(f"tree has {tree.vertex_count} vertices, ideal has {len(ideal)} generators")
    return _generates(tree, _pair_lcms(ideal))


def candidate_edges(ideal: MonomialIdeal) -> list[Edge]:
    """Pairs whose relation is not generated by relations of strictly smaller lcm.

    In multidegree ``L = lcm(u_i, u_j)`` the relations of strictly smaller
    lcm span the part of ``m*U``; ``r_ij`` lies in it exactly when ``i`` and
    ``j`` are joined through generators dividing ``L`` by pairs of strictly
    smaller lcm. Such a relation can never be part of a minimal generating
    set, so no relation tree uses that edge.
    """
    _need_two(ideal)
    n = len(ideal)
    lcms = _pair_lcms(ideal)
    out = []
    for (i, j), target in lcms.items():
        inside = [k for k in range(1, n + 1) if ideal.gen(k).divides(target)]
        parent = {k: k for k in inside}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for a, b in combinations(inside, 2):
            lab = lcms[(a, b)]
            if lab != target and lab.divides(target):
                parent[find(a)] = find(b)
        if find(i) != find(j):
            out.append((i, j))
    return out


def _labelled(ideal: MonomialIdeal, tree: LabeledTree) -> LabeledTree:
    labels = []
    for i, j in tree.edges:
        r = _relation(ideal, i, j)
        labels.append((r.coeff_i, r.coeff_j))
    return LabeledTree(tree.vertex_count, tree.edges, tuple(labels))


def _generating_trees(ideal: MonomialIdeal) -> Iterator[LabeledTree]:
    n = len(ideal)
    graph = SimpleGraph(n, frozenset(candidate_edges(ideal)))
    if not graph.is_connected():
        return
    lcms = _pair_lcms(ideal)
    for tree in spanning_trees(graph):
        if _generates(tree, lcms):
            yield tree


def _filter_chunk(args) -> list[bool]:
    ideal, trees = args
    lcms = _pair_lcms(ideal)
    return [_generates(t, lcms) for t in trees]


def tree_minors(ideal: MonomialIdeal, tree: LabeledTree) -> list[Monomial]:
    """Sign-normalized maximal minors of the matrix of the tree's Taylor relations.

    Uses the product formula, which holds for any tree-shaped matrix whether
    or not its rows generate the syzygies.
    """
    if tree.vertex_count != len(ideal):
        raise UsageError("tree and ideal sizes differ")
    lab = _labelled(ideal, tree)
    n = tree.vertex_count
    return [
        product((lab.label(i, tree.next_hop(i, j)) for i in range(1, n + 1) if i != j), ideal.variables)
        for j in range(1, n + 1)
    ]


@dataclass(frozen=True)
class CMVerdict:
    accepted: bool
    reason: str | None = None
    witness: LabeledTree | None = None

    def __bool__(self) -> bool:
        return self.accepted


def is_cm_codim2(ideal: MonomialIdeal) -> CMVerdict:
    """Decide Cohen-Macaulayness in codimension two, returning a witness tree.

    The witness is the first generating tree in spanning-tree enumeration
    order; its product-formula minors are re-checked against the generators.
    """
    if not gcd_all(ideal.gens).is_unit():
        return CMVerdict(False, "nonunit gcd")
    if len(ideal) < 2:  # pragma: no cover - a single generator always has nonunit gcd
        return CMVerdict(False, "too few generators")
    witness = next(_generating_trees(ideal), None)
    if witness is None:
        return CMVerdict(False, "no generating tree")
    if set(tree_minors(ideal, witness)) != set(ideal.gens):
        return CMVerdict(False, "minors mismatch")
    return CMVerdict(True, None, _labelled(ideal, witness))


def _require_cm(ideal: MonomialIdeal) -> CMVerdict:
    verdict = is_cm_codim2(ideal)
    if not verdict:
        raise DomainError(f"ideal is not Cohen-Macaulay of codimension 2 ({verdict.reason})", reason=verdict.reason)
    return verdict


def relation_trees(ideal: MonomialIdeal, jobs: int = 1) -> list[LabeledTree]:
    """All relation trees, edge-labelled, sorted by their sorted edge lists."""
    _require_cm(ideal)
    if jobs <= 1:
        found = list(_generating_trees(ideal))
    else:
        graph = SimpleGraph(len(ideal), frozenset(candidate_edges(ideal)))
        cands = list(spanning_trees(graph))
        size = max(1, len(cands) // (4 * jobs))
        chunks = [cands[k : k + size] for k in range(0, len(cands), size)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            flags = [f for chunk in pool.map(_filter_chunk, [(ideal, c) for c in chunks]) for f in chunk]
        found = [t for t, ok in zip(cands, flags) if ok]
    return sorted((_labelled(ideal, t) for t in found), key=LabeledTree.key)


@dataclass(frozen=True)
class HilbertBurchMatrix:
    ideal: MonomialIdeal
    tree: LabeledTree
    rows: tuple[TaylorRelation, ...]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.ideal)

    def dense(self) -> list[list[tuple[int, Monomial] | None]]:
        n = len(self.ideal)
        out = []
        for r in self.rows:
            row: list[tuple[int, Monomial] | None] = [None] * n
            for col, sign, u in r.entries():
                row[col - 1] = (sign, u)
            out.append(row)
        return out

    def minors(self) -> list[Monomial]:
        return tree_minors(self.ideal, self.tree)


def hilbert_burch_matrix(ideal: MonomialIdeal, tree: LabeledTree) -> HilbertBurchMatrix:
    if tree.vertex_count != len(ideal):
        raise UsageError("tree and ideal sizes differ")
    if not tree_generates(ideal, tree):
        raise DomainError(f"tree {list(tree.edges)} is not a relation tree", reason="not a relation tree")
    if set(tree_minors(ideal, tree)) != set(ideal.gens):
        raise DomainError("maximal minors do not reproduce the generators", reason="minors mismatch")
    labelled = _labelled(ideal, tree)
    rows = tuple(_relation(ideal, i, j) for i, j in tree.edges)
    return HilbertBurchMatrix(ideal, labelled, rows)


def taylor_graph(ideal: MonomialIdeal, jobs: int = 1) -> SimpleGraph:
    """Union of the edge sets of all relation trees."""
    trees = relation_trees(ideal, jobs=jobs)
    return SimpleGraph(len(ideal), frozenset(e for t in trees for e in t.edges))


def has_linear_resolution(ideal: MonomialIdeal) -> bool:
    witness = _require_cm(ideal).witness
    degrees = {u.degree for u in ideal.gens}
    if len(degrees) != 1:
        return False
    (d,) = degrees
    lcms = _pair_lcms(ideal)
    return all(lcms[e].degree == d + 1 for e in witness.edges)


@dataclass(frozen=True)
class SpanningReport:
    relation_trees: tuple[tuple[Edge, ...], ...]
    spanning_trees: tuple[tuple[Edge, ...], ...]
    missing: tuple[tuple[Edge, ...], ...]  # spanning trees of G(I) that are not relation trees
    verdict: bool


def spanning_equals_relation(ideal: MonomialIdeal, jobs: int = 1) -> SpanningReport:
    trees = relation_trees(ideal, jobs=jobs)
    rel = tuple(t.key() for t in trees)
    graph = SimpleGraph(len(ideal), frozenset(e for t in trees for e in t.edges))
    span = tuple(sorted(t.key() for t in spanning_trees(graph)))
    rel_set = set(rel)
    missing = tuple(k for k in span if k not in rel_set)
    extra = rel_set - set(span)
    assert not extra, "every relation tree is a spanning tree of the Taylor graph"
    return SpanningReport(rel, span, missing, not missing)


def verify_matroid_exchange(
    trees: Iterable[LabeledTree | Iterable[Edge]],
) -> tuple[bool, tuple[frozenset, frozenset, Edge] | None]:
    """Basis exchange axiom over a family of edge sets.

    Returns ``(True, None)`` or ``(False, (B1, B2, e))`` where removing ``e``
    from ``B1`` cannot be repaired by any edge of ``B2 - B1``.
    """
    family: list[frozenset] = []
    sizes = set()
    vcounts = set()
    for t in trees:
        if isinstance(t, LabeledTree):
            vcounts.add(t.vertex_count)
            family.append(t.edge_set)
        else:
            family.append(frozenset(tuple(sorted(e)) for e in t))
        sizes.add(len(family[-1]))
    if len(sizes) > 1 or len(vcounts) > 1:
        raise UsageError("trees must share vertex set and edge count")
    bases = set(family)
    ordered = sorted(bases, key=sorted)
    for b1 in ordered:
        for b2 in ordered:
            for e in sorted(b1 - b2):
                rest = b1 - {e}
                if not any(rest | {f} in bases for f in b2 - b1):
                    return False, (b1, b2, e)
    return True, None
