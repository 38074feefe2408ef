from fractions import Fraction

import pytest
from hypothesis import given, settings

import laws
from conftest import bounded_forests, trees
from forestalg import (
    DOT,
    Forest,
    ForestPair,
    GradedVector,
    b_plus,
    bullet,
    coefficient_of,
    connes_kreimer,
    counit,
    deshuffle,
    exp_graft,
    gamma,
    graft,
    graft_forest,
    graft_guin_oudom_oracle,
    graft_tree,
    grossman_larson,
    parse_forest,
    parse_tree,
    sigma,
    symmetric_product,
    term,
    vector_from_terms,
)
from forestalg.treealg import grossman_larson_via_root
from oracles import as_counter, ck_forest_by_cuts, deshuffle_by_subsets, gl_by_assignment, graft_by_assignment

one = GradedVector.of
E = Forest()
dot = bullet()
stick = b_plus(DOT, dot)
cherry = b_plus(DOT, Forest([dot, dot]))
path3 = b_plus(DOT, stick)
F = lambda *ts: Forest(ts)

small = bounded_forests(4, max_trees=3, max_leaves=3, decorations=(1, 2))


def test_forest_pair_grades_by_sum():
    p = ForestPair(parse_forest("1[2]"), parse_forest("3,4"))
    assert p.grading() == 4
    assert laws.one(p).grades() == [4]


def test_deshuffle_of_three_distinct_trees():
    v = deshuffle(parse_forest("1,2,3"))
    assert len(v) == 8
    assert {c for _, c in v.items()} == {1}


def test_deshuffle_small_cases():
    assert deshuffle(E) == one(ForestPair(E, E))
    assert deshuffle(F(dot, dot)) == (one(ForestPair(F(dot, dot), E))
                                     + 2 * one(ForestPair(F(dot), F(dot)))
                                     + one(ForestPair(E, F(dot, dot))))


@given(bounded_forests(6, max_trees=5, max_leaves=2, decorations=(1, 2)))
def test_deshuffle_matches_subset_oracle(pi):
    assert as_counter(deshuffle(pi)) == deshuffle_by_subsets(pi)


def test_symmetric_product_of_singletons():
    x, y, z, a, b, c = (F(parse_tree(str(d))) for d in (1, 2, 3, 4, 5, 6))
    v = vector_from_terms([term(1, x), term(2, y), term(3, z)])
    w = vector_from_terms([term(5, a), term(7, b), term(11, c)])
    prod = symmetric_product(v, w)
    assert [int(c) for _, c in prod.items()] == [5, 10, 7, 15, 14, 11, 21, 22, 33]
    assert symmetric_product(v, one(E)) == v


@given(small, small, small)
def test_symmetric_product_commutes(p, q, r):
    v, w = one(p) + 2 * one(q), one(r) - one(q)
    assert symmetric_product(v, w) == symmetric_product(w, v)


def test_graft_tree_examples():
    assert graft_tree(dot, dot) == one(stick)
    assert graft_tree(dot, stick) == one(cherry) + one(path3)


@given(trees(max_leaves=4), trees(max_leaves=4))
def test_graft_tree_sum_and_grade(tau, target):
    v = graft_tree(tau, target)
    assert laws.coefficient_sum(v) == target.order
    assert v.grades() == [tau.order + target.order]


def test_getting_started_graft():
    v = graft(parse_forest("1[2],1[2]"), parse_forest("1,1[2,2]"))
    assert len(v) == 7
    assert [int(c) for _, c in v.items()] == [2, 2, 4, 1, 4, 2, 1]
    assert v.grades() == [8]


def test_second_graft_example():
    v = graft(parse_forest("1[2],3"), parse_forest("4[5,6]"))
    assert len(v) == 9
    assert {c for _, c in v.items()} == {1}
    assert as_counter(v) == graft_by_assignment(parse_forest("1[2],3"), parse_forest("4[5,6]"))


def test_graft_base_cases():
    pi = parse_forest("1[2],3")
    assert graft_forest(E, pi) == one(pi)
    assert graft_forest(pi, E).is_zero()
    assert graft_forest(E, E) == one(E)


@given(bounded_forests(4, max_trees=3, max_leaves=3, decorations=(1, 2)),
       bounded_forests(4, max_trees=2, max_leaves=3, decorations=(1, 3)))
def test_graft_matches_assignment_oracle(pi, eta):
    assert as_counter(graft_forest(pi, eta)) == graft_by_assignment(pi, eta)


@given(bounded_forests(4, max_trees=3, max_leaves=3, decorations=(1, 2)),
       bounded_forests(4, max_trees=2, max_leaves=3, decorations=(1, 3)))
def test_gl_matches_assignment_oracle(pi, eta):
    assert as_counter(grossman_larson(pi, eta)) == gl_by_assignment(pi, eta)


@settings(max_examples=30)
@given(bounded_forests(3, max_trees=2, max_leaves=2, decorations=(1, 2)),
       bounded_forests(3, max_trees=2, max_leaves=2, decorations=(1, 3)))
def test_guin_oudom_oracle_agrees(pi, eta):
    assert graft_guin_oudom_oracle(pi, eta) == graft_forest(pi, eta)


def test_guin_oudom_examples():
    pi = parse_forest("1[2],3")
    assert graft_guin_oudom_oracle(E, pi) == one(pi)
    assert graft_guin_oudom_oracle(F(dot, dot), F(dot)) == graft_forest(F(dot, dot), F(dot))


def test_gl_examples():
    eta = parse_forest("1[2],3")
    assert grossman_larson(E, eta) == one(eta)
    assert grossman_larson(F(dot), F(stick)) == one(F(dot, stick)) + one(F(cherry)) + one(F(path3))


@given(small, small)
def test_gl_via_root(pi, eta):
    assert grossman_larson_via_root(pi, eta) == grossman_larson(pi, eta)


@given(small, small)
def test_products_are_graded(pi, eta):
    for v in (graft_forest(pi, eta), grossman_larson(pi, eta)):
        assert v.is_zero() or v.grades() == [pi.order + eta.order]


@given(small, small)
def test_coefficient_sums(pi, eta):
    assert laws.graft_sum_law(pi, eta)
    assert laws.gl_sum_law(pi, eta)


@given(trees(max_leaves=2, decorations=(1, 2)), trees(max_leaves=2, decorations=(1, 2)),
       trees(max_leaves=2, decorations=(1, 2)))
def test_pre_lie_identity(t1, t2, t3):
    assert laws.pre_lie(t1, t2, t3)


def test_grafting_is_not_associative():
    a = laws.tree_graft(laws.tree_graft(one(dot), one(dot)), one(dot))
    b = laws.tree_graft(one(dot), laws.tree_graft(one(dot), one(dot)))
    assert a != b


@settings(max_examples=30)
@given(bounded_forests(2, decorations=(1, 2)), bounded_forests(2, decorations=(1, 2)),
       bounded_forests(2, decorations=(1, 2)))
def test_gl_associative_and_compatible(pi, eta, mu):
    assert laws.gl_associative(pi, eta, mu)
    assert laws.graft_gl_compatible(pi, eta, mu)
    assert laws.gl_unit(pi)


def test_ck_examples():
    assert connes_kreimer(dot) == one(ForestPair(F(dot), E)) + one(ForestPair(E, F(dot)))
    assert connes_kreimer(E) == one(ForestPair(E, E))
    assert connes_kreimer(cherry) == (one(ForestPair(F(cherry), E))
                                      + one(ForestPair(F(dot, dot), F(dot)))
                                      + 2 * one(ForestPair(F(dot), F(stick)))
                                      + one(ForestPair(E, F(cherry))))


@given(bounded_forests(6, max_trees=3, max_leaves=4, decorations=(1, 2)))
def test_ck_matches_admissible_cuts(pi):
    assert as_counter(connes_kreimer(pi)) == ck_forest_by_cuts(pi)


@pytest.mark.parametrize("cop", [deshuffle, connes_kreimer], ids=["deshuffle", "ck"])
@given(pi=small, eta=small)
def test_coproduct_axioms(cop, pi, eta):
    assert laws.coassociative(cop, pi)
    assert laws.counital(cop, pi)
    assert laws.multiplicative(cop, pi, eta)


@given(small)
def test_deshuffle_cocommutes(pi):
    assert laws.cocommutative(pi)


def test_counit():
    assert counit(E) == 1
    assert counit(dot) == 0
    assert counit(parse_forest("1,2")) == 0


@given(bounded_forests(2, decorations=(1, 2)), bounded_forests(2, decorations=(1, 2)),
       bounded_forests(4, max_trees=3, decorations=(1, 2)))
def test_adjoint_relations(pi, eta, mu):
    assert laws.adjoint_deshuffle(pi, eta, mu)
    assert laws.adjoint_ck(pi, eta, mu)


def test_exp_graft_low_grades():
    assert exp_graft(1) == one(dot)
    assert coefficient_of(exp_graft(3), stick) == Fraction(1, 2)
    assert exp_graft(0).is_zero()


def test_exp_graft_is_exact_flow_to_order_four():
    v = exp_graft(4)
    from forestalg import enumerate_trees
    expected = vector_from_terms(term(Fraction(1, sigma(t) * gamma(t)), t)
                                 for n in range(1, 5) for t in enumerate_trees(n))
    assert v == expected
