import random

import pytest
from hypothesis import given, settings, strategies as st

from idemfree import (
    EmptySequence,
    Seq,
    SequenceTooLong,
    any_order_products,
    cyclic_group,
    cyclic_nil,
    group_nil_chain,
    is_commutative,
    is_strongly_free,
    is_weakly_free,
    monogenic,
    natural_order_products,
    ordered_product,
    product_gain,
    product_sets,
    trivial_ideal_extension,
)
from oracles import (
    left_zero_semigroup,
    naive_any_order_products,
    naive_natural_order_products,
)

POOL = [
    cyclic_group(1),
    cyclic_group(3),
    cyclic_group(4),
    cyclic_nil(3),
    monogenic(2, 2),
    monogenic(3, 2),
    group_nil_chain(2, 2),
    trivial_ideal_extension(2, 2),
    left_zero_semigroup(2),
    left_zero_semigroup(3),
]


def test_ordered_product():
    Z3 = cyclic_group(3)
    assert ordered_product(Z3, [0]) == 0
    assert ordered_product(Z3, [0, 0, 0]) == 2  # g^3 is the identity
    S = group_nil_chain(2, 2)
    assert ordered_product(S, [0, 2]) == 2  # group generator times nil generator
    with pytest.raises(EmptySequence):
        ordered_product(Z3, [])


def test_any_order_products_examples():
    Z3 = cyclic_group(3)
    assert any_order_products(Z3, [0, 0]) == {0, 1}
    assert any_order_products(Z3, [0, 0, 0]) == {0, 1, 2}
    assert any_order_products(monogenic(3, 2), [0, 0, 0]) == {0, 1, 2}
    assert any_order_products(Z3, []) == frozenset()


def test_natural_order_products_examples():
    lz = left_zero_semigroup(2)
    assert natural_order_products(lz, [0, 1]) == {0, 1}  # 0*1 = 0 already present
    assert natural_order_products(lz, []) == frozenset()


def test_freeness_examples():
    Z3 = cyclic_group(3)
    assert is_weakly_free(Z3, [0, 0])
    assert not is_weakly_free(Z3, [0, 0, 0])
    assert is_weakly_free(Z3, [])
    assert is_strongly_free(Z3, [0, 0])
    # a length-1 idempotent subsequence always breaks strong freeness
    assert not is_strongly_free(Z3, [0, 2])


def test_product_gain_examples():
    Z3 = cyclic_group(3)
    assert product_gain(Z3, [], 0) == 1
    assert product_gain(Z3, [0], 0) == 1
    S = group_nil_chain(2, 2)
    # weakly free T = g.x; dropping either term and re-adding it gains products
    for x in (0, 2):
        rest = [t for t in (0, 2) if t != x]
        assert product_gain(S, rest, x) >= 1


def test_dp_cap():
    lz = left_zero_semigroup(2)
    with pytest.raises(SequenceTooLong):
        any_order_products(lz, [0, 1] * 13, cap=24)
    # the commutative fast path has no cap to hit
    assert any_order_products(cyclic_group(2), [0] * 30) == {0, 1}


def test_seq_type():
    t = Seq.of([2, 0, 2])
    assert len(t) == 3
    assert t.multiplicity(2) == 2
    assert t.support() == {0, 2}
    assert Seq.parse("2 0 2\n").terms == (2, 0, 2)
    assert Seq.parse("\n").terms == ()
    assert Seq.parse("# note\n1 1\n").terms == (1, 1)
    assert Seq.of([1, 1]).format() == "1 1\n"
    assert Seq.of([]).format() == "\n"


def _random_cases(seed, count, max_len=6):
    rng = random.Random(seed)
    for _ in range(count):
        S = rng.choice(POOL)
        terms = tuple(rng.randrange(S.order) for _ in range(rng.randint(0, max_len)))
        yield S, terms


def test_oracle_equivalence_small():
    for S, terms in _random_cases(411, 300):
        assert any_order_products(S, terms) == naive_any_order_products(S, terms)
        assert natural_order_products(S, terms) == naive_natural_order_products(S, terms)


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_any_order_is_permutation_invariant(data):
    S = data.draw(st.sampled_from(POOL))
    terms = data.draw(st.lists(st.integers(0, S.order - 1), max_size=6))
    shuffled = data.draw(st.permutations(terms))
    assert any_order_products(S, terms) == any_order_products(S, shuffled)


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_natural_subset_of_any_order(data):
    S = data.draw(st.sampled_from(POOL))
    terms = data.draw(st.lists(st.integers(0, S.order - 1), max_size=6))
    ps = product_sets(S, terms)
    assert ps.natural_order <= ps.any_order
    if terms:
        assert ordered_product(S, terms) in ps.natural_order


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_commutative_orders_agree(data):
    S = data.draw(st.sampled_from([T for T in POOL if is_commutative(T)]))
    terms = data.draw(st.lists(st.integers(0, S.order - 1), max_size=8))
    assert natural_order_products(S, terms) == any_order_products(S, terms)


def test_gain_lower_bound_for_free_sequences():
    # for every weakly free T and every term, re-adding the term grows the set
    for S, terms in _random_cases(77, 400, max_len=5):
        if not terms or not is_weakly_free(S, terms):
            continue
        for x in set(terms):
            rest = list(terms)
            rest.remove(x)
            assert product_gain(S, rest, x) >= 1


def test_strictly_growing_natural_sets_for_strongly_free_words():
    for S, terms in _random_cases(909, 400, max_len=5):
        if not terms or not is_strongly_free(S, terms):
            continue
        sizes = [len(natural_order_products(S, terms[:k])) for k in range(len(terms) + 1)]
        assert all(b > a for a, b in zip(sizes, sizes[1:]))
