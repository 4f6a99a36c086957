import pytest

from idemfree import (
    EmptyGeneratorSet,
    FiniteSemigroup,
    InvalidParameters,
    NotAssociative,
    NotClosed,
    cyclic_data,
    cyclic_group,
    cyclic_nil,
    format_cayley_table,
    generated_subsemigroup,
    group_nil_chain,
    idempotents,
    identity_element,
    is_commutative,
    is_nilsemigroup,
    monogenic,
    parse_cayley_table,
    unique_cycle_idempotent,
    validate,
    zero_element,
)
from oracles import left_zero_semigroup, transformation_monogenic_table


def test_validate_trivial_and_z2():
    assert validate(1, [[0]]).order == 1
    assert validate(2, [[0, 1], [1, 0]]).order == 2


def test_validate_rejects_non_associative_with_first_triple():
    with pytest.raises(NotAssociative) as err:
        validate(2, [[0, 1], [0, 0]])
    # brute force over all 8 triples puts the first violation at (1, 0, 1)
    assert err.value.triple == (1, 0, 1)


def test_validate_rejects_out_of_range_cell():
    with pytest.raises(NotClosed) as err:
        validate(2, [[0, 2], [0, 0]])
    assert err.value.cell == (0, 1)


def test_validate_rejects_order_mismatch_and_ragged_rows():
    with pytest.raises(InvalidParameters):
        validate(3, [[0, 1], [1, 0]])
    with pytest.raises(InvalidParameters):
        FiniteSemigroup([[0, 1], [1]])


def test_idempotents_group_has_only_identity():
    Z4 = cyclic_group(4)
    assert idempotents(Z4) == {identity_element(Z4)}


def test_idempotents_monogenic_3_2():
    S = monogenic(3, 2)
    # the unique idempotent power is x^4, at position 3
    assert idempotents(S) == {3}


def test_idempotents_group_nil_chain():
    S = group_nil_chain(2, 2)
    e = identity_element(S)
    z = zero_element(S)
    assert idempotents(S) == {e, z}
    assert e is not None and z is not None


def test_is_commutative():
    assert is_commutative(cyclic_group(3))
    assert is_commutative(validate(1, [[0]]))
    assert not is_commutative(left_zero_semigroup(2))


def test_zero_element():
    nil = cyclic_nil(3)
    assert zero_element(nil) == 2  # the top power x^3
    assert zero_element(cyclic_group(2)) is None
    assert zero_element(validate(1, [[0]])) == 0


def test_is_nilsemigroup():
    assert is_nilsemigroup(cyclic_nil(4))
    assert not is_nilsemigroup(cyclic_group(3))
    assert is_nilsemigroup(validate(1, [[0]]))


def test_generated_subsemigroup():
    Z4 = cyclic_group(4)
    assert generated_subsemigroup(Z4, {0}) == frozenset(range(4))
    S = group_nil_chain(2, 2)
    assert generated_subsemigroup(S, {2}) == frozenset({2, 3})
    full = frozenset(S.elements)
    assert generated_subsemigroup(S, full) == full
    with pytest.raises(EmptyGeneratorSet):
        generated_subsemigroup(Z4, set())


def test_generated_subsemigroup_is_monotone_idempotent_closure(corpus_le3):
    for S in corpus_le3[:60]:
        singles = [generated_subsemigroup(S, {x}) for x in S.elements]
        for x in S.elements:
            for y in S.elements:
                both = generated_subsemigroup(S, {x, y})
                assert singles[x] <= both
                assert generated_subsemigroup(S, both) == both


def test_cyclic_data_examples():
    Z5 = cyclic_group(5)
    for x in range(4):  # element 4 is the identity
        cd = cyclic_data(Z5, x)
        assert (cd.index, cd.period) == (1, 5)
    cd = cyclic_data(monogenic(3, 2), 0)
    assert (cd.index, cd.period) == (3, 2)
    cd = cyclic_data(cyclic_nil(4), 0)
    assert (cd.index, cd.period) == (4, 1)


def test_cyclic_data_invariants_roundtrip():
    for i in range(1, 12):
        for p in range(1, 13 - i):
            S = monogenic(i, p)
            cd = cyclic_data(S, 0)
            assert (cd.index, cd.period) == (i, p)
            assert len(cd.powers) == i + p - 1
            assert len(set(cd.powers)) == len(cd.powers)
            # x^(I+P) = x^I
            assert cd.power(i + p) == cd.power(i)


def test_unique_cycle_idempotent():
    S = monogenic(3, 4)
    cd = cyclic_data(S, 0)
    e = unique_cycle_idempotent(S, 0)
    assert e == cd.power(4)  # l = 4 is the one multiple of 4 in [3, 6]
    Z6 = cyclic_group(6)
    assert unique_cycle_idempotent(Z6, 0) == identity_element(Z6)
    nil = cyclic_nil(5)
    assert unique_cycle_idempotent(nil, 0) == zero_element(nil)


def test_monogenic_displayed_formula_example():
    S = monogenic(3, 2)
    # x^3 * x^4 = x^3: exponent 7 folds to the unique k in [3, 4] odd
    assert S.mul(2, 3) == 2


def test_monogenic_against_transformation_model():
    for i in range(1, 12):
        for p in range(1, 13 - i):
            assert monogenic(i, p).table == tuple(
                tuple(row) for row in transformation_monogenic_table(i, p)
            )


def test_monogenic_special_cases():
    assert monogenic(1, 4).table == cyclic_group(4).table
    assert zero_element(monogenic(4, 1)) == 3
    with pytest.raises(InvalidParameters):
        monogenic(0, 2)
    with pytest.raises(InvalidParameters):
        monogenic(2, 0)


def test_monogenic_tail_group():
    # the last p powers form a subgroup
    for i, p in [(3, 2), (2, 4), (4, 3), (1, 5)]:
        S = monogenic(i, p)
        tail = set(range(i - 1, i + p - 1))
        e = unique_cycle_idempotent(S, 0)
        assert e in tail
        for a in tail:
            assert S.mul(e, a) == a
            # each row covering the tail gives closure and inverses at once
            assert {S.mul(a, b) for b in tail} == tail


def test_idempotents_nonempty_everywhere(corpus_le3):
    for S in corpus_le3:
        assert idempotents(S)


def test_table_text_roundtrip():
    S = group_nil_chain(3, 2)
    text = format_cayley_table(S)
    again = parse_cayley_table(text)
    assert again.table == S.table
    assert format_cayley_table(again) == text


def test_table_text_comments_and_errors():
    assert parse_cayley_table("# comment\n2\n0 1\n1 0\n").order == 2
    with pytest.raises(InvalidParameters):
        parse_cayley_table("")
    with pytest.raises(InvalidParameters):
        parse_cayley_table("2\n0 1\n")
    with pytest.raises(InvalidParameters):
        parse_cayley_table("2\n0 1 1\n1 0\n")
    with pytest.raises(InvalidParameters):
        parse_cayley_table("x\n0\n")
