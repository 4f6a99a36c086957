"""Sequences over a semigroup and their subsequence-product sets.

Two product sets matter here. The any-order set collects the products of
every nonempty sub-multiset of the sequence under every ordering of its
terms; the natural-order set only folds subsequences left to right. Both
are computed on integer bit masks of width n, since the inner loops are
set unions and table-indexed translations.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass

from .core import (
    ElementId,
    FiniteSemigroup,
    InvalidParameters,
    SemigroupError,
    idempotents,
    is_commutative,
)


class EmptySequence(SemigroupError):
    pass


class SequenceTooLong(SemigroupError):
    pass


DEFAULT_DP_CAP = 24


@dataclass(frozen=True)
class Seq:
    """Ordered finite sequence of element indices, with a multiset view."""

    terms: tuple[ElementId, ...]

    @classmethod
    def of(cls, terms) -> "Seq":
        return cls(tuple(int(t) for t in terms))

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def multiplicity(self, x: ElementId) -> int:
        return self.terms.count(x)

    def support(self) -> frozenset[ElementId]:
        return frozenset(self.terms)

    def counts(self) -> Counter:
        return Counter(self.terms)

    @classmethod
    def parse(cls, text: str) -> "Seq":
        """One line of space-separated indices; an empty line is the empty sequence."""
        for raw in text.splitlines() or [""]:
            line = raw.strip()
            if line.startswith("#"):
                continue
            if not line:
                return cls(())
            return cls.of(line.split())
        return cls(())

    def format(self) -> str:
        return " ".join(str(t) for t in self.terms) + "\n"


def _terms(seq) -> tuple[int, ...]:
    if isinstance(seq, Seq):
        return seq.terms
    return tuple(int(t) for t in seq)


def _check_terms(S: FiniteSemigroup, terms: tuple[int, ...]) -> None:
    for t in terms:
        if not 0 <= t < S.order:
            raise InvalidParameters(f"term {t} outside semigroup of order {S.order}")


def _idem_mask(S: FiniteSemigroup) -> int:
    m = 0
    for e in idempotents(S):
        m |= 1 << e
    return m


def _translate(table, mask: int, x: int) -> int:
    """Right-translate a product set: {a*x : a in mask} as a mask."""
    out = 0
    while mask:
        low = mask & -mask
        out |= 1 << table[low.bit_length() - 1][x]
        mask ^= low
    return out


def _mask_to_set(mask: int) -> frozenset[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return frozenset(out)


def _natural_mask(S: FiniteSemigroup, terms: tuple[int, ...]) -> int:
    """Incremental closure A_k = A_(k-1) | {a_k} | A_(k-1)*a_k."""
    table = S.table
    acc = 0
    for x in terms:
        acc |= (1 << x) | _translate(table, acc, x)
    return acc


def _any_mask_general(S: FiniteSemigroup, terms: tuple[int, ...], cap: int) -> int:
    """Last-factor recursion over sub-multisets, memoized per call."""
    if len(terms) > cap:
        raise SequenceTooLong(f"|T| = {len(terms)} exceeds the {cap}-term product-set cap")
    table = S.table
    support = sorted(set(terms))
    k = len(support)
    counts = tuple(terms.count(x) for x in support)
    memo: dict[tuple[int, ...], int] = {}

    def reach(vec: tuple[int, ...]) -> int:
        got = memo.get(vec)
        if got is not None:
            return got
        if sum(vec) == 1:
            m = 1 << support[vec.index(1)]
        else:
            m = 0
            for i in range(k):
                if vec[i]:
                    sub = vec[:i] + (vec[i] - 1,) + vec[i + 1:]
                    m |= _translate(table, reach(sub), support[i])
        memo[vec] = m
        return m

    out = 0
    for vec in itertools.product(*(range(c + 1) for c in counts)):
        if any(vec):
            out |= reach(vec)
    return out


def _any_mask(S: FiniteSemigroup, terms: tuple[int, ...], cap: int) -> int:
    if not terms:
        return 0
    if is_commutative(S):
        # with commutativity every product can put its last factor last,
        # so the natural-order closure already yields the full set
        return _natural_mask(S, terms)
    return _any_mask_general(S, terms, cap)


def ordered_product(S: FiniteSemigroup, seq) -> ElementId:
    """Left-to-right product of all terms; the sequence must be nonempty."""
    terms = _terms(seq)
    if not terms:
        raise EmptySequence("the product of an empty sequence is undefined")
    _check_terms(S, terms)
    table = S.table
    acc = terms[0]
    for x in terms[1:]:
        acc = table[acc][x]
    return acc


def any_order_products(S: FiniteSemigroup, seq, cap: int = DEFAULT_DP_CAP) -> frozenset[ElementId]:
    """Products of every nonempty subsequence of T, over all term orders."""
    terms = _terms(seq)
    _check_terms(S, terms)
    return _mask_to_set(_any_mask(S, terms, cap))


def natural_order_products(S: FiniteSemigroup, seq) -> frozenset[ElementId]:
    """Products of nonempty subsequences folded in their order within T."""
    terms = _terms(seq)
    _check_terms(S, terms)
    return _mask_to_set(_natural_mask(S, terms))


@dataclass(frozen=True)
class ProductSets:
    any_order: frozenset[ElementId]
    natural_order: frozenset[ElementId]


def product_sets(S: FiniteSemigroup, seq, cap: int = DEFAULT_DP_CAP) -> ProductSets:
    terms = _terms(seq)
    _check_terms(S, terms)
    return ProductSets(
        any_order=_mask_to_set(_any_mask(S, terms, cap)),
        natural_order=_mask_to_set(_natural_mask(S, terms)),
    )


def is_weakly_free(S: FiniteSemigroup, seq, cap: int = DEFAULT_DP_CAP) -> bool:
    """No nonempty subsequence multiplies to an idempotent in any order."""
    terms = _terms(seq)
    _check_terms(S, terms)
    return not (_any_mask(S, terms, cap) & _idem_mask(S))


def is_strongly_free(S: FiniteSemigroup, seq) -> bool:
    """No nonempty subsequence multiplies to an idempotent in natural order."""
    terms = _terms(seq)
    _check_terms(S, terms)
    return not (_natural_mask(S, terms) & _idem_mask(S))


def product_gain(S: FiniteSemigroup, seq, x: ElementId, cap: int = DEFAULT_DP_CAP) -> int:
    """How many new any-order products appending x contributes."""
    terms = _terms(seq)
    _check_terms(S, terms + (x,))
    base = _any_mask(S, terms, cap)
    grown = _any_mask(S, terms + (x,), cap)
    return (grown & ~base).bit_count()
