import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from easytraces.diagrams import (
    AlgebraElement,
    Category,
    DeltaPolynomial,
    GroupAlgebraElement,
    algebra_mul,
    category_contains,
    compose,
    crossing,
    diagram,
    enumerate_category,
    from_json,
    from_permutation,
    identity,
    involution,
    involution_element,
    is_invertible,
    perm_mul,
    quotient_project,
    random_diagram,
    random_element,
    tensor,
    to_permutation,
)

CAP_CUP = diagram(2, 2, [[1, 2], [-1, -2]])
Q1 = crossing(2, 1)
ROOK_BRAUER = Category.B


def test_diagram_validation():
    with pytest.raises(ValueError):
        diagram(1, 1, [[1], [1, -1]])
    with pytest.raises(ValueError):
        diagram(2, 1, [[1, -1]])
    with pytest.raises(ValueError):
        diagram(1, 1, [[1, -1], []])
    with pytest.raises(ValueError):
        from_json([[1, 0]])
    assert from_json([[-2, 1], [2, -1]]) == Q1


def test_canonical_form_ignores_block_order():
    a = diagram(3, 2, [[-2, 3], [1], [2, -1]])
    b = diagram(3, 2, [[2, -1], [3, -2], [1]])
    assert a == b and a.blocks == ((1,), (2, -1), (3, -2))


def test_compose_examples():
    rng = random.Random(1)
    for _ in range(20):
        p = random_diagram(3, 3, rng)
        assert compose(p, identity(3)) == (p, 0)
        assert compose(identity(3), p) == (p, 0)
    assert compose(CAP_CUP, CAP_CUP) == (CAP_CUP, 1)
    assert compose(Q1, Q1) == (identity(2), 0)


def test_compose_size_mismatch():
    with pytest.raises(ValueError):
        compose(identity(2), identity(3))


def test_compose_shapes():
    p = diagram(2, 3, [[1, -1, -2], [2, -3]])
    q = diagram(4, 2, [[1, 2], [3, -1], [4, -2]])
    r, loops = compose(p, q)
    assert (r.k, r.l, loops) == (4, 3, 0)


def _stack_oracle(p, q):
    outer, loops = oracles.stack(p.blocks, q.blocks, q.k, p.k, p.l)
    return outer, loops


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4), st.randoms(use_true_random=False))
def test_compose_matches_graph_search(k, l, m, rnd):
    p = random_diagram(l, k, rnd)
    q = random_diagram(m, l, rnd)
    r, loops = compose(p, q)
    outer, loops2 = _stack_oracle(p, q)
    assert {frozenset(b) for b in r.blocks} == outer
    assert loops == loops2


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 4), st.integers(0, 4), st.randoms(use_true_random=False))
def test_involution_properties(k, l, rnd):
    p = random_diagram(k, l, rnd)
    assert involution(involution(p)) == p
    assert involution(identity(k)) == identity(k)


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4), st.randoms(use_true_random=False))
def test_anti_multiplicativity(k, l, m, rnd):
    p = random_diagram(l, k, rnd)
    q = random_diagram(m, l, rnd)
    r, loops = compose(p, q)
    r2, loops2 = compose(involution(q), involution(p))
    assert r2 == involution(r) and loops2 == loops


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3), st.randoms(use_true_random=False))
def test_compose_associative(k, l, m, rnd):
    p = random_diagram(k, rnd.randint(0, 3), rnd)
    q = random_diagram(l, k, rnd)
    r = random_diagram(m, l, rnd)
    pq, a = compose(p, q)
    left, b = compose(pq, r)
    qr, c = compose(q, r)
    right, d = compose(p, qr)
    assert left == right and a + b == c + d


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 4), st.randoms(use_true_random=False))
def test_outputs_independent_of_block_order(k, rnd):
    p, q = random_diagram(k, k, rnd), random_diagram(k, k, rnd)

    def shuffled(d):
        blocks = [list(b) for b in d.blocks]
        rnd.shuffle(blocks)
        for b in blocks:
            rnd.shuffle(b)
        return diagram(d.k, d.l, blocks)

    assert compose(shuffled(p), shuffled(q)) == compose(p, q)
    assert tensor(shuffled(p), shuffled(q)) == tensor(p, q)
    assert involution(shuffled(p)) == involution(p)


def test_tensor_examples():
    assert tensor(identity(1), identity(1)) == identity(2)
    assert tensor(identity(0), Q1) == Q1
    t = tensor(CAP_CUP, identity(1))
    assert t == diagram(3, 3, [[1, 2], [-1, -2], [3, -3]])


def test_category_examples():
    for c in Category:
        assert category_contains(c, identity(3))
    for c in (Category.O, Category.H, Category.B, Category.S):
        assert category_contains(c, CAP_CUP)
    singletons = diagram(1, 1, [[1], [-1]])
    for c in (Category.B, Category.S, Category.S_PRIME, Category.B_PRIME):
        assert category_contains(c, singletons)
    for c in (Category.O, Category.H):
        assert not category_contains(c, singletons)


def test_category_parse():
    assert Category.parse("Sp") is Category.S_PRIME and Category.parse("B'") is Category.B_PRIME
    with pytest.raises(ValueError):
        Category.parse("X")


@pytest.mark.parametrize("k", range(5))
def test_category_counts(k):
    assert len(enumerate_category("S", k)) == oracles.bell(2 * k)
    assert len(enumerate_category("O", k)) == oracles.odd_double_factorial(k)
    assert len(enumerate_category("H", k)) == oracles.even_block_partitions(2 * k)
    assert len(enumerate_category("B", k)) == oracles.involutions(2 * k)


def test_category_count_examples():
    assert len(enumerate_category(Category.O, 2)) == 3
    assert len(enumerate_category(Category.S, 2)) == 15
    assert len(enumerate_category(Category.H, 1)) == 1
    assert len(enumerate_category(Category.H, 2)) == 4


def test_enumerate_is_sorted_and_refuses_large():
    ds = enumerate_category("B", 3)
    assert ds == sorted(ds) and len(set(ds)) == len(ds)
    with pytest.raises(ValueError):
        enumerate_category("S", 7)


@pytest.mark.parametrize("k", range(6))
def test_primed_categories_same_counts(k):
    assert len(enumerate_category("S'", k)) == len(enumerate_category("S", k))
    assert len(enumerate_category("B'", k)) == len(enumerate_category("B", k))


@pytest.mark.parametrize("c", list(Category))
def test_category_closure(c):
    for k in range(4):
        members = enumerate_category(c, k)
        s = set(members)
        for p in members:
            assert involution(p) in s
        if k <= 2 or c is not Category.S and c is not Category.S_PRIME:
            pairs = [(p, q) for p in members for q in members]
        else:
            rng = random.Random(k)
            pairs = [(rng.choice(members), rng.choice(members)) for _ in range(3000)]
        for p, q in pairs:
            assert compose(p, q)[0] in s
    for a in range(3):
        for b in range(3 - a + 1):
            for p in enumerate_category(c, a):
                for q in enumerate_category(c, b):
                    assert category_contains(c, tensor(p, q))


@pytest.mark.parametrize("c", list(Category))
def test_random_diagram_in_category(c):
    rng = random.Random(5)
    for _ in range(30):
        k = rng.randint(0, 4)
        assert category_contains(c, random_diagram(k, k, rng, c))


def test_invertibility_examples():
    assert is_invertible(identity(3)) and to_permutation(identity(3)) == (1, 2, 3)
    assert is_invertible(Q1) and to_permutation(Q1) == (2, 1)
    assert not is_invertible(CAP_CUP)
    with pytest.raises(ValueError):
        to_permutation(CAP_CUP)


@pytest.mark.parametrize("k", range(1, 5))
def test_permutation_round_trip_and_homomorphism(k):
    perms = oracles.all_perms(k)
    for s in perms:
        assert to_permutation(from_permutation(s)) == s
    rng = random.Random(k)
    for _ in range(40):
        s, t = rng.choice(perms), rng.choice(perms)
        r, loops = compose(from_permutation(s), from_permutation(t))
        assert loops == 0 and to_permutation(r) == perm_mul(s, t)


def test_ideal_absorption():
    rng = random.Random(11)
    for _ in range(400):
        k = rng.randint(1, 4)
        p = random_diagram(k, k, rng)
        q = random_diagram(k, k, rng)
        if is_invertible(p):
            continue
        assert not is_invertible(compose(p, q)[0])
        assert not is_invertible(compose(q, p)[0])


def test_delta_polynomial_arithmetic():
    d = DeltaPolynomial([0, 1])
    assert str(d) == "δ" and str(DeltaPolynomial()) == "0"
    p = DeltaPolynomial([1, -2, Fraction(1, 2)])
    assert str(p) == "(1/2)δ^2 - 2δ + 1"
    assert (p * d).coeffs == (0, 1, -2, Fraction(1, 2))
    assert p - p == DeltaPolynomial() and not (p - p)
    assert p(2) == 1 - 4 + 2 and p.shift(1) == p * d
    assert DeltaPolynomial(["1/3", 0, 0]).degree == 0 and DeltaPolynomial([3]) == 3


@given(st.lists(st.fractions(max_denominator=9), max_size=4), st.lists(st.fractions(max_denominator=9), max_size=4),
       st.fractions(max_denominator=9))
def test_delta_polynomial_evaluation_is_ring_map(a, b, x):
    p, q = DeltaPolynomial(a), DeltaPolynomial(b)
    assert (p + q)(x) == p(x) + q(x)
    assert (p * q)(x) == p(x) * q(x)


def test_algebra_examples():
    ep = AlgebraElement.basis(CAP_CUP)
    assert ep * ep == AlgebraElement(2, {CAP_CUP: DeltaPolynomial([0, 1])})
    rng = random.Random(3)
    for k in range(4):
        x = random_element(k, rng)
        u = AlgebraElement.unit(k)
        assert u * x == x == x * u


def test_algebra_associativity_200_triples():
    rng = random.Random(2024)
    for _ in range(200):
        k = rng.randint(0, 3)
        x, y, z = (random_element(k, rng, Category.S, terms=3, max_degree=1) for _ in range(3))
        assert (x * y) * z == x * (y * z)


def test_algebra_distributive_and_scalar():
    rng = random.Random(8)
    for _ in range(40):
        k = rng.randint(1, 3)
        x, y, z = (random_element(k, rng) for _ in range(3))
        assert x * (y + z) == x * y + x * z
        assert (x - x) == AlgebraElement(k)
        assert (x * 3) * y == x * (y * 3) == 3 * (x * y)


def test_algebra_involution_anti_multiplicative():
    rng = random.Random(9)
    for _ in range(60):
        k = rng.randint(0, 3)
        x, y = random_element(k, rng), random_element(k, rng)
        assert involution_element(x * y) == involution_element(y) * involution_element(x)


def test_algebra_size_mismatch():
    with pytest.raises(ValueError):
        algebra_mul(AlgebraElement.unit(2), AlgebraElement.unit(3))
    with pytest.raises(ValueError):
        AlgebraElement(2, {identity(3): 1})


def test_quotient_examples():
    assert quotient_project(AlgebraElement.basis(Q1)) == GroupAlgebraElement(2, {(2, 1): 1})
    assert not quotient_project(AlgebraElement.basis(CAP_CUP))
    sq = AlgebraElement.basis(Q1) * AlgebraElement.basis(Q1)
    assert quotient_project(sq) == GroupAlgebraElement(2, {(1, 2): 1})


def test_quotient_is_multiplicative():
    rng = random.Random(17)
    for _ in range(150):
        k = rng.randint(0, 4)
        cat = rng.choice(list(Category))
        x = random_element(k, rng, cat, terms=4)
        y = random_element(k, rng, cat, terms=4)
        assert quotient_project(x * y) == quotient_project(x) * quotient_project(y)


def test_element_json_round_trip():
    rng = random.Random(4)
    for _ in range(20):
        x = random_element(3, rng)
        assert AlgebraElement.from_json(x.to_json()) == x


@pytest.mark.parametrize("bad", [
    [],
    {"diagram": [[1, -1]]},
    [{"coeffs": ["1"]}],
    [{"diagram": [[1, -1]], "coeffs": ["x"]}],
    [{"diagram": [[1, -1]]}, {"diagram": [[1, -1], [2, -2]]}],
    [{"diagram": [[1, 2]]}],
])
def test_element_json_errors(bad):
    with pytest.raises(ValueError):
        AlgebraElement.from_json(bad)
