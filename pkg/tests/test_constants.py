from concurrent.futures import ThreadPoolExecutor

import pytest

from idemfree import (
    NotCommutative,
    Seq,
    chain_glue,
    cyclic_group,
    davenport,
    erdos_burgess,
    ghw_bound,
    group_nil_chain,
    idempotents,
    is_commutative,
    is_strongly_free,
    is_weakly_free,
    monogenic,
    strong_erdos_burgess,
    validate,
)
from oracles import (
    left_zero_semigroup,
    naive_davenport,
    naive_erdos_burgess,
    naive_is_irreducible,
    naive_strong_erdos_burgess,
)

import itertools


def test_ghw_bound():
    assert ghw_bound(cyclic_group(5)) == 5
    assert ghw_bound(group_nil_chain(2, 2)) == 3
    assert ghw_bound(validate(1, [[0]])) == 1


def test_erdos_burgess_cyclic_groups():
    for n in range(1, 9):
        assert erdos_burgess(cyclic_group(n)).value == n


def test_erdos_burgess_monogenic_2_2():
    report = erdos_burgess(monogenic(2, 2))
    assert report.value == 2
    assert report.witness.terms == (0,)


def test_erdos_burgess_group_nil_chains():
    for n1 in range(2, 6):
        for n2 in range(2, 6):
            got = erdos_burgess(group_nil_chain(n1, n2)).value
            assert got == (n1 - 1) + (n2 - 1) + 1


def test_strong_erdos_burgess():
    for n in range(1, 7):
        assert strong_erdos_burgess(cyclic_group(n)).value == n
    assert strong_erdos_burgess(left_zero_semigroup(2)).value == 1
    for S in (cyclic_group(4), monogenic(2, 2), group_nil_chain(2, 3)):
        assert strong_erdos_burgess(S).value == erdos_burgess(S).value


def test_davenport_values():
    for n in range(1, 9):
        assert davenport(cyclic_group(n)).value == n
    for n1 in range(2, 6):
        for n2 in range(2, 6):
            assert davenport(group_nil_chain(n1, n2)).value == max(n1, n2 + 1)
    assert davenport(group_nil_chain(2, 2)).value == 3


def test_davenport_rejects_noncommutative():
    with pytest.raises(NotCommutative):
        davenport(left_zero_semigroup(2))


def test_against_naive_constants(corpus_le3):
    # raw length-by-length enumeration agrees with the pruned search
    for S in corpus_le3:
        assert erdos_burgess(S).value == naive_erdos_burgess(S)
        assert strong_erdos_burgess(S).value == naive_strong_erdos_burgess(S)
        if is_commutative(S):
            assert davenport(S).value == naive_davenport(S)


def test_chain_glue_of_cyclic_groups():
    for k in range(1, 4):
        for orders in itertools.product(range(2, 5), repeat=k):
            S = chain_glue([cyclic_group(p) for p in orders])
            assert erdos_burgess(S).value == sum(p - 1 for p in orders) + 1


def test_witness_reverification(corpus_le3):
    for S in corpus_le3[::7]:
        weak = erdos_burgess(S)
        assert len(weak.witness) == weak.value - 1
        assert is_weakly_free(S, weak.witness)
        for x in S.elements:
            assert not is_weakly_free(S, weak.witness.terms + (x,))
        strong = strong_erdos_burgess(S)
        assert len(strong.witness) == strong.value - 1
        assert is_strongly_free(S, strong.witness)
        for x in S.elements:
            assert not is_strongly_free(S, strong.witness.terms + (x,))
        if is_commutative(S):
            dav = davenport(S)
            assert len(dav.witness) == dav.value - 1
            assert naive_is_irreducible(S, dav.witness.terms)
            for x in S.elements:
                assert not naive_is_irreducible(S, dav.witness.terms + (x,))


def test_bound_invariants(corpus_le3):
    for S in corpus_le3:
        i = erdos_burgess(S).value
        si = strong_erdos_burgess(S).value
        assert i <= si <= ghw_bound(S)
        if is_commutative(S):
            assert i == si


def test_witness_is_lex_least_among_longest():
    Z3 = cyclic_group(3)
    # both g.g and g2.g2 are free of length 2; the witness is the lex least
    assert erdos_burgess(Z3).witness.terms == (0, 0)
    assert is_weakly_free(Z3, (1, 1))


def test_reports_identical_across_worker_counts():
    cases = [cyclic_group(6), group_nil_chain(3, 3), monogenic(3, 4), left_zero_semigroup(3)]
    with ThreadPoolExecutor(max_workers=3) as pool:
        for S in cases:
            assert erdos_burgess(S) == erdos_burgess(S, map_fn=pool.map)
            assert strong_erdos_burgess(S) == strong_erdos_burgess(S, map_fn=pool.map)
            if is_commutative(S):
                assert davenport(S) == davenport(S, map_fn=pool.map)


def test_report_json_shape():
    d = erdos_burgess(cyclic_group(3)).to_json_dict()
    assert set(d) == {"kind", "value", "witness", "nodesExplored"}
    assert d["kind"] == "ErdosBurgess"
    assert d["witness"] == [0, 0]


def test_empty_alphabet_reports():
    lz = left_zero_semigroup(2)  # every element idempotent
    report = erdos_burgess(lz)
    assert report.value == 1
    assert report.witness == Seq(())
    assert idempotents(lz) == {0, 1}
