"""The generic matrix of a tree, its maximal minors, and label substitution.

For a tree on ``1..m+1`` the generic matrix has one row per edge ``{i, j}``
(``i < j``) with ``-x_{ij}`` in column ``i`` and ``x_{ji}`` in column ``j``.
Its maximal minors are products of one variable per vertex, read off the
tree paths; substituting monomials for the variables gives every
Cohen-Macaulay monomial ideal of codimension two.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .errors import DomainError, UsageError
from .monomial import Monomial, VariableSet, gcd_all, is_coprime, product
from .trees_graphs import LabeledTree, path_endpoints

__all__ = [
    "generic_name",
    "generic_variables",
    "GenericMatrix",
    "PrimeComponent",
    "generic_matrix",
    "minor_product",
    "generic_ideal",
    "primary_decomposition_generic",
    "generic_labels",
    "verify_label_condition",
    "build_cm_ideal",
]

Entry = tuple[int, int, Monomial]  # (column, sign, monomial)


def generic_name(i: int, j: int) -> str:
    # "x12" would be ambiguous between x_{1,2} and x_{12}
    return f"x{i}_{j}"


@lru_cache(maxsize=4096)
def _generic_variables(edges: tuple[tuple[int, int], ...]) -> VariableSet:
    names = []
    for i, j in edges:
        names += [generic_name(i, j), generic_name(j, i)]
    return VariableSet(tuple(names))


def generic_variables(tree: LabeledTree) -> VariableSet:
    """Two variables per edge, in tree edge order: ``x{i}_{j}, x{j}_{i}``."""
    return _generic_variables(tree.edges)


@dataclass(frozen=True)
class GenericMatrix:
    tree: LabeledTree
    variables: VariableSet
    rows: tuple[tuple[Entry, Entry], ...]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), self.tree.vertex_count

    def entry(self, row: int, col: int) -> tuple[int, Monomial] | None:
        for c, s, u in self.rows[row]:
            if c == col:
                return s, u
        return None

    def dense(self) -> list[list[tuple[int, Monomial] | None]]:
        nrows, ncols = self.shape
        return [[self.entry(r, c) for c in range(1, ncols + 1)] for r in range(nrows)]


@dataclass(frozen=True)
class PrimeComponent:
    """A height-two monomial prime-like component ``(a, b)`` with coprime generators."""

    gens: tuple[Monomial, Monomial]

    def __post_init__(self):
        a, b = sorted(self.gens, key=Monomial.sort_key)
        if not is_coprime(a, b):
            raise DomainError(f"component ({a}, {b}) has non-coprime generators", reason="not height 2")
        object.__setattr__(self, "gens", (a, b))

    def __str__(self) -> str:
        return f"({self.gens[0]}, {self.gens[1]})"


def generic_matrix(tree: LabeledTree) -> GenericMatrix:
    xs = generic_variables(tree)
    rows = tuple(
        ((i, -1, xs.var(generic_name(i, j))), (j, 1, xs.var(generic_name(j, i)))) for i, j in tree.edges
    )
    return GenericMatrix(tree, xs, rows)


def _minor(tree: LabeledTree, j: int, entry: Callable[[int, int], Monomial], variables: VariableSet) -> Monomial:
    # the factor for vertex i is its entry on the edge leading towards j
    return product((entry(i, tree.next_hop(i, j)) for i in range(1, tree.vertex_count + 1) if i != j), variables)


def minor_product(tree: LabeledTree, j: int) -> Monomial:
    """Sign-normalized maximal minor of the generic matrix with column ``j`` omitted."""
    if not 1 <= j <= tree.vertex_count:
        raise UsageError(f"column {j} out of range 1..{tree.vertex_count}")
    xs = generic_variables(tree)
    return _minor(tree, j, lambda a, b: xs.var(generic_name(a, b)), xs)


def generic_ideal(tree: LabeledTree) -> list[Monomial]:
    gens = [minor_product(tree, j) for j in range(1, tree.vertex_count + 1)]
    assert gcd_all(gens).is_unit()
    return gens


def primary_decomposition_generic(tree: LabeledTree) -> set[PrimeComponent]:
    xs = generic_variables(tree)
    out = set()
    n = tree.vertex_count
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            b, e = path_endpoints(tree, i, j)
            out.add(PrimeComponent((xs.var(generic_name(i, b)), xs.var(generic_name(j, e)))))
    return out


def generic_labels(tree: LabeledTree) -> LabeledTree:
    """The tree labeled by its own generic variables (the identity substitution)."""
    xs = generic_variables(tree)
    labels = tuple((xs.var(generic_name(i, j)), xs.var(generic_name(j, i))) for i, j in tree.edges)
    return LabeledTree(tree.vertex_count, tree.edges, labels)


def _label_variables(tree: LabeledTree) -> VariableSet:
    if tree.labels is None:
        raise UsageError("tree has no edge labels")
    return tree.labels[0][0].variables


def verify_label_condition(tree: LabeledTree) -> tuple[bool, tuple[int, int] | None]:
    """Check ``gcd(u_{i b(i,j)}, u_{j e(i,j)}) = 1`` for all ``i < j``.

    Returns ``(True, None)`` or ``(False, first_violating_pair)``.
    """
    _label_variables(tree)
    n = tree.vertex_count
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            b, e = path_endpoints(tree, i, j)
            if not is_coprime(tree.label(i, b), tree.label(j, e)):
                return False, (i, j)
    return True, None


def build_cm_ideal(tree: LabeledTree) -> list[Monomial]:
    """Generators ``v_j = prod_{i != j} u_{i b(i,j)}`` in column order."""
    xs = _label_variables(tree)
    ok, pair = verify_label_condition(tree)
    if not ok:
        i, j = pair
        raise DomainError(
            f"labels violate the coprimality condition at pair ({i}, {j})", reason="label condition"
        )
    gens = [_minor(tree, j, tree.label, xs) for j in range(1, tree.vertex_count + 1)]
    assert gcd_all(gens).is_unit(), "coprime labels must give generators with unit gcd"
    return gens
