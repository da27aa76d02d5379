"""Slow, independent reference computations used to check the main modules.

Nothing here calls the arithmetic in :mod:`cmcodim2.monomial` or the
algorithms it is meant to check: monomials are converted to dense exponent
tuples and handled with local helpers. Library types are only read from or
constructed.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator, Sequence

from .errors import UsageError
from .monomial import Monomial, VariableSet
from .trees_graphs import LabeledTree, SimpleGraph

__all__ = [
    "SignedMonomialMatrix",
    "det_cofactor",
    "intersect_ideals",
    "ideals_equal",
    "relation_in_span",
    "all_labeled_trees",
    "has_chordless_cycle",
    "brute_maximal_cliques",
    "SPAN_STATE_BOUND",
]

SPAN_STATE_BOUND = 10**5

Raw = tuple[int, ...]


def _raw(m: Monomial) -> Raw:
    out = [0] * len(m.variables)
    for i, e in m.exps:
        out[i] = e
    return tuple(out)


def _cook(vs: VariableSet, raw: Raw) -> Monomial:
    return Monomial(vs, tuple((i, e) for i, e in enumerate(raw) if e))


def _mul(a: Raw, b: Raw) -> Raw:
    return tuple(x + y for x, y in zip(a, b))


def _div(a: Raw, b: Raw) -> Raw | None:
    out = tuple(x - y for x, y in zip(a, b))
    return None if any(v < 0 for v in out) else out


def _lcm(a: Raw, b: Raw) -> Raw:
    return tuple(max(x, y) for x, y in zip(a, b))


def _gcd(a: Raw, b: Raw) -> Raw:
    return tuple(min(x, y) for x, y in zip(a, b))


def _dividesr(a: Raw, b: Raw) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _minimalize(gens: Sequence[Raw]) -> set[Raw]:
    uniq = set(gens)
    return {g for g in uniq if not any(h != g and _dividesr(h, g) for h in uniq)}


@dataclass(frozen=True)
class SignedMonomialMatrix:
    """Entries are ``None`` or ``(sign, Monomial)`` with sign in ``{+1, -1}``."""

    variables: VariableSet
    entries: tuple[tuple[tuple[int, Monomial] | None, ...], ...]

    def __post_init__(self):
        if not self.entries or not self.entries[0]:
            raise UsageError("matrix dimensions must be positive")
        width = len(self.entries[0])
        if any(len(r) != width for r in self.entries):
            raise UsageError("ragged matrix")

    def drop_column(self, col: int) -> SignedMonomialMatrix:
        """Remove 1-based column ``col``."""
        return SignedMonomialMatrix(self.variables, tuple(r[: col - 1] + r[col:] for r in self.entries))


def det_cofactor(mat: SignedMonomialMatrix) -> tuple[int, Monomial] | None:
    """Laplace expansion along the first row; must collapse to one signed term or zero."""
    rows = mat.entries
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise UsageError("determinant of a non-square matrix")
    for r in rows:
        assert sum(e is not None for e in r) <= 2, "oracle expects at most two nonzero entries per row"
    raw_rows = [[None if e is None else (e[0], _raw(e[1])) for e in r] for r in rows]

    def expand(k: int, cols: tuple[int, ...]) -> dict[Raw, int]:
        if k == n:
            return {tuple([0] * len(mat.variables)): 1}
        out: dict[Raw, int] = {}
        for pos, c in enumerate(cols):
            e = raw_rows[k][c]
            if e is None:
                continue
            sub = expand(k + 1, cols[:pos] + cols[pos + 1 :])
            sign = e[0] * (-1) ** pos
            for mono, coef in sub.items():
                key = _mul(mono, e[1])
                out[key] = out.get(key, 0) + sign * coef
        return {m: c for m, c in out.items() if c}

    total = expand(0, tuple(range(n)))
    assert len(total) <= 1, f"determinant is not a single term: {total}"
    if not total:
        return None
    (mono, coef), = total.items()
    assert coef in (1, -1), f"unexpected coefficient {coef}"
    return coef, _cook(mat.variables, mono)


def intersect_ideals(ideals: Sequence[Sequence[Monomial]]) -> list[Monomial]:
    """Fold pairwise intersections ``A cap B = (lcm(a, b))``, then minimalize."""
    if not ideals:
        raise UsageError("intersection of an empty list of ideals")
    vs = next(g.variables for gens in ideals for g in gens)
    acc = _minimalize([_raw(g) for g in ideals[0]])
    for gens in ideals[1:]:
        other = _minimalize([_raw(g) for g in gens])
        acc = _minimalize([_lcm(a, b) for a in acc for b in other])
    return [_cook(vs, r) for r in sorted(acc)]


def ideals_equal(a: Sequence[Monomial], b: Sequence[Monomial]) -> bool:
    return _minimalize([_raw(g) for g in a]) == _minimalize([_raw(g) for g in b])


def _relation_vector(gens: Sequence[Raw], i: int, j: int) -> dict[int, tuple[int, Raw]]:
    g = _gcd(gens[i - 1], gens[j - 1])
    return {i: (-1, _div(gens[j - 1], g)), j: (1, _div(gens[i - 1], g))}


def relation_in_span(target, basis, ideal, bound: int = SPAN_STATE_BOUND) -> bool | None:
    """Is ``target`` a monomial-coefficient combination of the ``basis`` relations?

    Only the index pairs of the relations are used; coefficients are rebuilt
    from ``ideal.gens``. Breadth-first rewriting cancels the leading column of
    the residual against any basis row whose entry there divides it. Returns
    ``None`` when more than ``bound`` states were visited.
    """
    gens = [_raw(u) for u in ideal.gens]
    rows = [_relation_vector(gens, *r.pair) for r in basis]

    def freeze(vec):
        return tuple(sorted(vec.items()))

    start = _relation_vector(gens, *target.pair)
    seen = {freeze(start)}
    queue = deque([start])
    while queue:
        vec = queue.popleft()
        p = min(vec)
        sp, mp = vec[p]
        for row in rows:
            if p not in row:
                continue
            sr, mr = row[p]
            q = _div(mp, mr)
            if q is None:
                continue
            sign = sp * sr
            new = dict(vec)
            for col, (s, mono) in row.items():
                term = (-sign * s, _mul(mono, q))
                if col in new:
                    s0, m0 = new[col]
                    assert m0 == term[1], "residual entries must stay single monomials"
                    if s0 + term[0] == 0:
                        del new[col]
                    else:  # pragma: no cover - syzygy residuals never double up
                        raise AssertionError("coefficient left the set {+1, -1}")
                else:
                    new[col] = term
            if not new:
                return True
            assert len(new) == 2, "a nonzero syzygy has at least two entries"
            key = freeze(new)
            if key not in seen:
                seen.add(key)
                if len(seen) > bound:
                    return None
                queue.append(new)
    return False


def _prufer_decode(seq: Sequence[int], n: int) -> list[tuple[int, int]]:
    degree = [1] * (n + 1)
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = next(u for u in range(1, n + 1) if degree[u] == 1)
        edges.append((min(leaf, v), max(leaf, v)))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = (x for x in range(1, n + 1) if degree[x] == 1)
    edges.append((u, w))
    return edges


def all_labeled_trees(n: int) -> Iterator[LabeledTree]:
    """All ``n**(n-2)`` labeled trees, in Prufer-sequence order."""
    if not 2 <= n <= 9:
        raise UsageError("all_labeled_trees supports 2 <= n <= 9")
    for seq in product(range(1, n + 1), repeat=n - 2):
        yield LabeledTree(n, tuple(sorted(_prufer_decode(seq, n))))


def has_chordless_cycle(graph: SimpleGraph) -> bool:
    """Search every vertex subset of size >= 4 for an induced cycle."""
    n = graph.vertex_count
    adj = {v: set() for v in range(1, n + 1)}
    for i, j in graph.edges:
        adj[i].add(j)
        adj[j].add(i)
    for size in range(4, n + 1):
        for sub in combinations(range(1, n + 1), size):
            s = set(sub)
            if any(len(adj[v] & s) != 2 for v in sub):
                continue
            seen, stack = {sub[0]}, [sub[0]]
            while stack:
                v = stack.pop()
                for w in adj[v] & s:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            if len(seen) == size:
                return True
    return False


def brute_maximal_cliques(graph: SimpleGraph) -> list[tuple[int, ...]]:
    n = graph.vertex_count
    cliques = [
        frozenset(sub)
        for size in range(1, n + 1)
        for sub in combinations(range(1, n + 1), size)
        if all(tuple(sorted(e)) in graph.edges for e in combinations(sub, 2))
    ]
    return sorted(tuple(sorted(c)) for c in cliques if not any(c < d for d in cliques))
