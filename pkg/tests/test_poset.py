import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ehrlab.catalog import shape_closed_forms, tree_closed_forms
from ehrlab.errors import InvalidPosetError
from ehrlab.exactcore import factorial, power_sum_polynomial
from ehrlab.poset import (
    Poset,
    RootedTree,
    YoungShape,
    antichain,
    chain,
    ehrhart_order_polytope,
    hook_formula_count,
    hook_multiset_shape,
    hook_multiset_tree,
    hook_slice_counts,
    ideal_lattice,
    linear_extensions,
    load_tree,
    order_polynomial_value,
    order_polynomial_values,
    parse_poset_text,
    parse_tree_text,
    poset_from_example21,
    poset_from_shape,
    slice_count,
    strict_order_polynomial_value,
    tree_hook_count,
)


@st.composite
def poset_strategy(draw, max_n=5):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Poset.from_covers(n, chosen)


@st.composite
def relabeled_poset_strategy(draw, max_n=5):
    """Like poset_strategy, but element labels no longer follow a linear extension."""
    p = draw(poset_strategy(max_n=max_n))
    perm = draw(st.permutations(range(p.size)))
    return Poset.from_covers(p.size, [(perm[a], perm[b]) for a, b in p.covers])


def all_partitions(n, cap=None):
    cap = n if cap is None else cap
    if n == 0:
        yield ()
        return
    for first in range(min(n, cap), 0, -1):
        for rest in all_partitions(n - first, first):
            yield (first,) + rest


def recursive_trees(n):
    """Every rooted tree on n nodes, as parent maps with parent[v] < v."""
    for choice in itertools.product(*(range(v) for v in range(1, n))):
        yield RootedTree(n, (None,) + tuple(choice))


def brute_order_preserving(p, values, strict=False):
    count = 0
    for f in itertools.product(values, repeat=p.size):
        ok = True
        for a, b in p.covers:
            if f[a] > f[b] or (strict and f[a] == f[b]):
                ok = False
                break
        if ok:
            count += 1
    return count


def brute_slice_count(p, k):
    count = 0
    for f in itertools.product(range(k + 1), repeat=p.size):
        if sum(f) == k and all(f[a] <= f[b] for a, b in p.covers):
            count += 1
    return count


@pytest.fixture
def trees(fixtures_dir):
    return [load_tree(fixtures_dir / "trees" / name) for name in ("tree_T.txt", "tree_T_prime.txt")]


# ---- Construction ----

def test_from_covers_takes_transitive_closure():
    p = Poset.from_covers(3, [(0, 1), (1, 2)])
    assert p.leq(0, 2)
    assert not p.leq(2, 0)
    assert p.covers == ((0, 1), (1, 2))
    assert p.minimal_elements() == [0]
    assert p.maximal_elements() == [2]


def test_cycles_are_rejected():
    with pytest.raises(InvalidPosetError):
        Poset.from_covers(3, [(0, 1), (1, 2), (2, 0)])
    with pytest.raises(InvalidPosetError):
        Poset.from_covers(2, [(0, 0)])


def test_relation_matrix_validation():
    with pytest.raises(InvalidPosetError):
        Poset.from_relation_matrix([[True, True], [True, True]])
    p = Poset.from_relation_matrix(chain(3).relation_matrix())
    assert p == chain(3)


def test_parse_poset_text():
    p = parse_poset_text("# a 2-chain\n2\n1 < 2\n")
    assert p == chain(2)
    with pytest.raises(InvalidPosetError):
        parse_poset_text("2\n1 2\n")


def test_parse_tree_text():
    t = parse_tree_text("3\n2 1\n3 1\n")
    assert t.root == 0
    assert t.subtree_sizes() == (3, 1, 1)
    with pytest.raises(InvalidPosetError):
        parse_tree_text("3\n2 1\n2 3\n")
    with pytest.raises(InvalidPosetError):
        RootedTree(2, (1, 0))


def test_young_shape_validation():
    assert YoungShape.parse("8,5,4").size == 17
    assert YoungShape((3, 1)).conjugate == (2, 1, 1)
    with pytest.raises(InvalidPosetError):
        YoungShape.parse("3,5")
    with pytest.raises(InvalidPosetError):
        YoungShape.parse("3,x")


# ---- Order polynomials ----

def test_two_chain_ehrhart():
    assert ehrhart_order_polytope(chain(2)).to_json() == ["1/1", "3/2", "1/2"]


def test_antichain_is_a_cube():
    poly = ehrhart_order_polytope(antichain(3))
    assert all(poly(t) == (t + 1) ** 3 for t in range(6))


@pytest.mark.parametrize("ell", [1, 2, 3, 8, 14])
def test_power_sum_poset(ell):
    p = poset_from_example21(ell)
    poly = power_sum_polynomial(ell)
    for n in range(5):
        assert order_polynomial_value(p, n) == poly(n)
    assert ehrhart_order_polytope(p) == poly


@pytest.mark.long
def test_power_sum_poset_with_twenty_one_elements():
    poly = ehrhart_order_polytope(poset_from_example21(20))
    assert poly == power_sum_polynomial(20)
    assert poly.coefficient(1) == Fraction(-3528231, 6930)


@settings(max_examples=60, deadline=None)
@given(poset_strategy())
def test_ehrhart_polynomial_extrapolates(p):
    poly = ehrhart_order_polytope(p)
    values = order_polynomial_values(p, p.size + 3)
    assert all(poly(t) == values[t] for t in range(p.size + 4))
    assert poly.coefficient(0) == 1


@settings(max_examples=40, deadline=None)
@given(poset_strategy(max_n=4), st.integers(min_value=0, max_value=3))
def test_order_polynomial_matches_brute_force(p, t):
    assert order_polynomial_value(p, t) == brute_order_preserving(p, range(t + 1))


@settings(max_examples=60, deadline=None)
@given(poset_strategy(max_n=6))
def test_volume_is_linear_extensions(p):
    poly = ehrhart_order_polytope(p)
    assert poly.leading_coefficient * factorial(p.size) == linear_extensions(p)


@settings(max_examples=40, deadline=None)
@given(poset_strategy(max_n=5), st.integers(min_value=0, max_value=4))
def test_reciprocity(p, n):
    poly = ehrhart_order_polytope(p)
    strict = brute_order_preserving(p, range(1, n + 2), strict=True)
    assert (-1) ** p.size * poly(-n - 2) == strict
    assert strict_order_polynomial_value(p, n + 1) == strict


@settings(max_examples=30, deadline=None)
@given(poset_strategy(max_n=5))
def test_dual_has_same_linear_extensions(p):
    assert linear_extensions(p.dual()) == linear_extensions(p)


@settings(max_examples=40, deadline=None)
@given(relabeled_poset_strategy(max_n=4), st.integers(min_value=0, max_value=3))
def test_counts_do_not_depend_on_labels(p, t):
    assert order_polynomial_value(p, t) == brute_order_preserving(p, range(t + 1))
    assert strict_order_polynomial_value(p, t) == brute_order_preserving(p, range(1, t + 1), strict=True)
    assert slice_count(p, t) == brute_slice_count(p, t)


@settings(max_examples=40, deadline=None)
@given(relabeled_poset_strategy(), st.data())
def test_ideal_transforms_match_pairwise_sums(p, data):
    lattice = ideal_lattice(p)
    ideals = lattice.ideals
    values = data.draw(st.lists(st.integers(-5, 5), min_size=len(ideals), max_size=len(ideals)))

    def removes_maximal_elements(big, small):
        return all(not p.strict_up(v) & big for v in range(p.size) if (big & ~small) >> v & 1)

    below = [[j for j, small in enumerate(ideals) if small & ~big == 0] for big in ideals]
    assert lattice.sum_over_subideals(values) == [sum(values[j] for j in js) for js in below]
    assert lattice.sum_over_maximal_removals(values) == [
        sum(values[j] for j in js if removes_maximal_elements(ideals[i], ideals[j]))
        for i, js in enumerate(below)
    ]


# ---- Hooks ----

@pytest.mark.parametrize("shape, hooks", [
    ((3,), (3, 2, 1)),
    ((2, 1), (3, 1, 1)),
    ((1, 1, 1), (3, 2, 1)),
])
def test_hook_multiset_shape(shape, hooks):
    assert hook_multiset_shape(YoungShape(shape)).values == hooks


def test_hook_multiset_tree():
    assert hook_multiset_tree(RootedTree(1, (None,))).values == (1,)
    path = RootedTree(3, (None, 0, 1))
    assert hook_multiset_tree(path).values == (3, 2, 1)


@pytest.mark.parametrize("n", range(1, 11))
def test_hook_formula_counts_linear_extensions(n):
    for parts in all_partitions(n):
        shape = YoungShape(parts)
        assert hook_formula_count(shape) == linear_extensions(poset_from_shape(shape))


def test_hook_formula_trivial_shapes():
    assert hook_formula_count(YoungShape((5,))) == 1
    assert hook_formula_count(YoungShape((1, 1, 1, 1))) == 1


@pytest.mark.parametrize("n", range(1, 9))
def test_tree_hook_formula(n):
    for tree in recursive_trees(n):
        assert tree_hook_count(tree) == linear_extensions(tree.to_poset())


# ---- Hook-equivalent pairs ----

def test_shape_pair():
    lam, mu = YoungShape((8, 5, 4)), YoungShape((7, 7, 2, 1))
    assert hook_multiset_shape(lam) == hook_multiset_shape(mu)
    assert hook_multiset_shape(lam).values == (10, 9, 8, 7, 6, 5, 5, 4, 4, 3, 3, 3, 2, 2, 1, 1, 1)
    forms = shape_closed_forms()
    for shape, at_one in ((lam, 115), (mu, 134)):
        poset = poset_from_shape(shape)
        poly = ehrhart_order_polytope(poset)
        assert poly(1) == at_one
        assert poly == forms[shape]
        assert linear_extensions(poset) == hook_formula_count(shape) == 272272
        assert poly.leading_coefficient * factorial(17) == 272272
    assert ehrhart_order_polytope(poset_from_shape(lam)) != ehrhart_order_polytope(poset_from_shape(mu))


def test_tree_pair(trees):
    t, t_prime = trees
    assert hook_multiset_tree(t) == hook_multiset_tree(t_prime)
    assert hook_multiset_tree(t).values == (14, 7, 6, 5, 4, 3, 2, 1, 1, 1, 1, 1, 1, 1)
    for tree, closed, at_one in zip(trees, tree_closed_forms(), (353, 346)):
        poly = ehrhart_order_polytope(tree.to_poset())
        assert poly == closed
        assert poly(1) == at_one
        assert linear_extensions(tree.to_poset()) == tree_hook_count(tree) == 1235520
    assert tree_closed_forms()[0].leading_coefficient == Fraction(51480, 3632428800)


# ---- Slices ----

def test_slice_count_small_cases():
    assert slice_count(chain(3), 0) == 1
    assert slice_count(chain(2), 1) == 1
    assert slice_count(antichain(2), 1) == 2


@settings(max_examples=40, deadline=None)
@given(poset_strategy(max_n=5), st.integers(min_value=0, max_value=4))
def test_slice_count_matches_brute_force(p, k):
    assert slice_count(p, k) == brute_slice_count(p, k)


def test_slice_counts_of_hook_equivalent_shapes():
    lam, mu = YoungShape((8, 5, 4)), YoungShape((7, 7, 2, 1))
    expected = hook_slice_counts(hook_multiset_shape(lam), 5)
    assert [slice_count(poset_from_shape(lam), k) for k in range(6)] == expected
    assert [slice_count(poset_from_shape(mu), k) for k in range(6)] == expected


def test_slice_counts_of_hook_equivalent_trees(trees):
    expected = hook_slice_counts(hook_multiset_tree(trees[0]), 5)
    for tree in trees:
        assert [slice_count(tree.to_poset(), k) for k in range(6)] == expected
