import random

import pytest
from hypothesis import given, settings, strategies as st

from cmcodim2.errors import DomainError, UsageError
from cmcodim2.generic_ideal import (
    PrimeComponent,
    build_cm_ideal,
    generic_ideal,
    generic_labels,
    generic_matrix,
    generic_variables,
    minor_product,
    primary_decomposition_generic,
    verify_label_condition,
)
from cmcodim2.monomial import VariableSet, gcd_all
from cmcodim2.oracle import SignedMonomialMatrix, all_labeled_trees, det_cofactor, ideals_equal, intersect_ideals
from cmcodim2.sampling import random_coprime_labels, random_tree
from cmcodim2.syzygy import MonomialIdeal, is_cm_codim2, tree_generates
from cmcodim2.trees_graphs import LabeledTree

from conftest import EXAMPLE_GENS, GAMMA1


def g(tree, text):
    return generic_variables(tree).parse(text)


def dense_text(gm):
    return [["0" if e is None else ("-" if e[0] < 0 else "") + str(e[1]) for e in row] for row in gm.dense()]


def test_generic_matrix_star(star):
    assert dense_text(generic_matrix(star)) == [
        ["-x1_2", "x2_1", "0", "0"],
        ["0", "-x2_3", "x3_2", "0"],
        ["0", "-x2_4", "0", "x4_2"],
    ]


def test_generic_matrix_small():
    assert dense_text(generic_matrix(LabeledTree.from_edges([(1, 2)]))) == [["-x1_2", "x2_1"]]
    assert dense_text(generic_matrix(LabeledTree.from_edges([(1, 2), (2, 3)]))) == [
        ["-x1_2", "x2_1", "0"],
        ["0", "-x2_3", "x3_2"],
    ]


def test_generic_variables_are_unambiguous():
    tree = LabeledTree.from_edges([(1, 12)] + [(1, k) for k in range(2, 12)], 12)
    names = generic_variables(tree).names
    assert "x1_12" in names and "x11_2" not in names
    assert len(set(names)) == 2 * tree.m


def test_minor_product_examples(star, path3):
    single = LabeledTree.from_edges([(1, 2)])
    assert minor_product(single, 1) == g(single, "x2_1")
    assert minor_product(single, 2) == g(single, "x1_2")
    # frozen from the cofactor-expansion oracle
    assert minor_product(star, 1) == g(star, "x2_1*x3_2*x4_2")
    assert minor_product(star, 3) == g(star, "x1_2*x2_3*x4_2")
    assert minor_product(star, 4) == g(star, "x1_2*x2_4*x3_2")
    assert [minor_product(path3, j) for j in (1, 2, 3)] == [
        g(path3, "x2_1*x3_2"),
        g(path3, "x1_2*x3_2"),
        g(path3, "x1_2*x2_3"),
    ]


def test_generic_ideal_examples(star, path3):
    single = LabeledTree.from_edges([(1, 2)])
    assert generic_ideal(single) == [g(single, "x2_1"), g(single, "x1_2")]
    assert generic_ideal(path3) == [g(path3, t) for t in ("x2_1*x3_2", "x1_2*x3_2", "x1_2*x2_3")]
    assert generic_ideal(star) == [
        g(star, t) for t in ("x2_1*x3_2*x4_2", "x1_2*x3_2*x4_2", "x1_2*x2_3*x4_2", "x1_2*x2_4*x3_2")
    ]


def matrix_for_oracle(tree):
    gm = generic_matrix(tree)
    return SignedMonomialMatrix(gm.variables, tuple(tuple(r) for r in gm.dense()))


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_minor_product_matches_cofactor_expansion(n):
    for tree in all_labeled_trees(n):
        mat = matrix_for_oracle(tree)
        for j in range(1, n + 1):
            sign, mono = det_cofactor(mat.drop_column(j))
            assert mono == minor_product(tree, j)


def test_decomposition_examples(star, path3):
    single = LabeledTree.from_edges([(1, 2)])

    def comps(tree, pairs):
        return {PrimeComponent((g(tree, a), g(tree, b))) for a, b in pairs}

    assert primary_decomposition_generic(single) == comps(single, [("x1_2", "x2_1")])
    assert primary_decomposition_generic(path3) == comps(path3, [("x1_2", "x2_1"), ("x1_2", "x3_2"), ("x2_3", "x3_2")])
    assert primary_decomposition_generic(star) == comps(
        star,
        [
            ("x1_2", "x2_1"),
            ("x1_2", "x3_2"),
            ("x1_2", "x4_2"),
            ("x2_3", "x3_2"),
            ("x2_4", "x4_2"),
            ("x3_2", "x4_2"),
        ],
    )


def test_prime_component_rejects_common_factor():
    vs = VariableSet.standard(2)
    with pytest.raises(DomainError):
        PrimeComponent((vs.parse("x1*x2"), vs.parse("x2")))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_decomposition_intersects_to_ideal(n):
    for tree in all_labeled_trees(n):
        comps = primary_decomposition_generic(tree)
        assert ideals_equal(generic_ideal(tree), intersect_ideals([list(c.gens) for c in comps]))


@settings(max_examples=50, deadline=None)
@given(st.integers(2, 9), st.randoms(use_true_random=False))
def test_generic_generators_have_unit_gcd(n, rng):
    assert gcd_all(generic_ideal(random_tree(n, rng))).is_unit()


def example_labels(x6):
    p = x6.parse
    return LabeledTree.with_labels(
        4,
        {
            (1, 2): (p("x1"), p("x4")),
            (2, 3): (p("x2"), p("x5")),
            (3, 4): (p("x3*x5"), p("x6")),
        },
    )


def test_label_condition_examples(x6):
    assert verify_label_condition(example_labels(x6)) == (True, None)
    bad = LabeledTree.with_labels(2, {(1, 2): (x6.parse("x1"), x6.parse("x1"))})
    assert verify_label_condition(bad) == (False, (1, 2))
    assert verify_label_condition(generic_labels(LabeledTree.from_edges([(1, 2), (2, 3), (2, 4)])))[0]


def test_label_condition_needs_labels(path3):
    with pytest.raises(UsageError):
        verify_label_condition(path3)


def test_build_cm_ideal_examples(x6, star):
    assert build_cm_ideal(example_labels(x6)) == [x6.parse(t) for t in EXAMPLE_GENS]
    assert build_cm_ideal(generic_labels(star)) == generic_ideal(star)
    vs = VariableSet.standard(2)
    single = LabeledTree.with_labels(2, {(1, 2): (vs.parse("x2^2"), vs.parse("x1^3"))})
    assert build_cm_ideal(single) == [vs.parse("x1^3"), vs.parse("x2^2")]


def test_build_cm_ideal_rejects_bad_labels(x6):
    bad = LabeledTree.with_labels(2, {(1, 2): (x6.parse("x1"), x6.parse("x1*x2"))})
    with pytest.raises(DomainError) as info:
        build_cm_ideal(bad)
    assert info.value.reason == "label condition"


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_generic_labels_reproduce_generic_ideal(n):
    rng = random.Random(n)
    for _ in range(20):
        tree = random_tree(n, rng)
        assert build_cm_ideal(generic_labels(tree)) == generic_ideal(tree)


@settings(max_examples=80, deadline=None)
@given(st.integers(2, 6), st.integers(0, 2**32))
def test_built_ideals_are_cm_with_their_tree(n, seed):
    rng = random.Random(seed)
    tree = random_coprime_labels(random_tree(n, rng), rng, n_vars=8, max_degree=3)
    gens = build_cm_ideal(tree)
    assert gcd_all(gens).is_unit()
    ideal = MonomialIdeal(gens[0].variables, tuple(gens))
    assert len(ideal) == n
    assert is_cm_codim2(ideal)
    assert tree_generates(ideal, tree)


def test_gamma1_labels_are_the_example_matrix_rows(x6):
    tree = example_labels(x6)
    assert tree.edges == GAMMA1
    assert tree.label(1, 2) == x6.parse("x1") and tree.label(2, 1) == x6.parse("x4")
