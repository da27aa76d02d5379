"""Random inputs for fuzzing: trees, coprime edge labels, block graphs."""

from __future__ import annotations

import random
from itertools import combinations

from .generic_ideal import build_cm_ideal, verify_label_condition
from .monomial import Monomial, VariableSet
from .syzygy import MonomialIdeal
from .trees_graphs import LabeledTree, SimpleGraph


def random_tree(n: int, rng: random.Random) -> LabeledTree:
    """Random labeled tree by uniform Prufer sequence."""
    if n == 2:
        return LabeledTree(2, ((1, 2),))
    seq = [rng.randint(1, n) for _ in range(n - 2)]
    degree = [1] * (n + 1)
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = min(u for u in range(1, n + 1) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = (x for x in range(1, n + 1) if degree[x] == 1)
    edges.append((u, w))
    return LabeledTree.from_edges(sorted(tuple(sorted(e)) for e in edges), n)


def random_monomial(vs: VariableSet, rng: random.Random, max_degree: int) -> Monomial:
    exps: dict[int, int] = {}
    for _ in range(rng.randint(1, max_degree)):
        i = rng.randrange(len(vs))
        exps[i] = exps.get(i, 0) + 1
    return Monomial.from_exponents(vs, exps)


def random_coprime_labels(
    tree: LabeledTree, rng: random.Random, n_vars: int = 8, max_degree: int = 3, max_repairs: int = 2000
) -> LabeledTree:
    """Random labels satisfying the coprimality condition on every vertex pair.

    Violations are repaired by resampling one of the two offending labels;
    the whole assignment restarts if repairs run out.
    """
    vs = VariableSet.standard(n_vars)
    while True:
        labels = {e: [random_monomial(vs, rng, max_degree), random_monomial(vs, rng, max_degree)] for e in tree.edges}
        for _ in range(max_repairs):
            cand = LabeledTree(tree.vertex_count, tree.edges, tuple(tuple(labels[e]) for e in tree.edges))
            ok, pair = verify_label_condition(cand)
            if ok:
                return cand
            i, j = pair
            side, nbr = (i, tree.next_hop(i, j)) if rng.random() < 0.5 else (j, tree.next_hop(j, i))
            e = (side, nbr) if side < nbr else (nbr, side)
            labels[e][0 if side < nbr else 1] = random_monomial(vs, rng, max_degree)


def random_cm_ideal(
    rng: random.Random, min_vertices: int = 2, max_vertices: int = 6, n_vars: int = 8, max_degree: int = 3
) -> tuple[LabeledTree, MonomialIdeal]:
    n = rng.randint(min_vertices, max_vertices)
    tree = random_coprime_labels(random_tree(n, rng), rng, n_vars, max_degree)
    gens = build_cm_ideal(tree)
    return tree, MonomialIdeal(gens[0].variables, tuple(gens))


def random_admissible_graph(rng: random.Random, max_vertices: int = 8, max_clique: int = 4) -> SimpleGraph:
    """Random connected block graph (every block a clique), randomly relabeled."""
    total = rng.randint(2, max_vertices)
    first = rng.randint(2, min(max_clique, total))
    edges = set(combinations(range(1, first + 1), 2))
    n = first
    while n < total:
        size = rng.randint(2, min(max_clique, total - n + 1))
        hub = rng.randint(1, n)
        block = [hub, *range(n + 1, n + size)]
        edges.update(tuple(sorted(e)) for e in combinations(block, 2))
        n += size - 1
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    mapping = dict(zip(range(1, n + 1), perm))
    return SimpleGraph(n, frozenset(tuple(sorted((mapping[i], mapping[j]))) for i, j in edges))
