"""Exhaustive search for the Erdos-Burgess constants I(S), SI(S) and the Davenport constant D(S).

Each constant is 1 plus the maximum length of a sequence with the defining
property, found by depth-first enumeration with antitone pruning: once a
prefix loses the property no extension can regain it, so the subtree is
closed. Weak freeness and Davenport irreducibility depend only on the
multiset of terms, so those searches walk nondecreasing sequences; the
strong search walks words. Search spaces are partitioned by first term so
runs can fan out over a worker pool and still merge deterministically.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import FiniteSemigroup, NotCommutative, identity_element, idempotents, is_commutative
from .seqprod import DEFAULT_DP_CAP, Seq, _any_mask, _idem_mask, _translate

KIND_ERDOS_BURGESS = "ErdosBurgess"
KIND_STRONG_ERDOS_BURGESS = "StrongErdosBurgess"
KIND_DAVENPORT = "Davenport"


@dataclass(frozen=True)
class ConstantReport:
    kind: str
    value: int
    witness: Seq
    nodes_explored: int

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "value": self.value,
            "witness": list(self.witness.terms),
            "nodesExplored": self.nodes_explored,
        }


def ghw_bound(S: FiniteSemigroup) -> int:
    """|S \\ E(S)| + 1, the universal bound on free sequence length plus one."""
    return S.order - len(idempotents(S)) + 1


def _nonidempotents(S: FiniteSemigroup) -> list[int]:
    t = S.table
    return [a for a in S.elements if t[a][a] != a]


def _weak_task(args) -> tuple[int, tuple[int, ...], int]:
    """Longest weakly free nondecreasing sequence whose least term is fixed."""
    S, first, cap = args
    table = S.table
    idem = _idem_mask(S)
    alpha = _nonidempotents(S)
    nodes = 1  # the root candidate (first,)
    best_len = 1
    best = (first,)

    def note(cand: tuple[int, ...]) -> None:
        nonlocal best_len, best
        if len(cand) > best_len:
            best_len, best = len(cand), cand

    if is_commutative(S):

        def rec(seq: tuple[int, ...], mask: int, start: int) -> None:
            nonlocal nodes
            for idx in range(start, len(alpha)):
                x = alpha[idx]
                nodes += 1
                grown = mask | (1 << x) | _translate(table, mask, x)
                if grown & idem:
                    continue
                cand = seq + (x,)
                note(cand)
                rec(cand, grown, idx)

        rec((first,), 1 << first, alpha.index(first))
    else:

        def rec(seq: tuple[int, ...], start: int) -> None:
            nonlocal nodes
            for idx in range(start, len(alpha)):
                x = alpha[idx]
                nodes += 1
                cand = seq + (x,)
                if _any_mask(S, cand, cap) & idem:
                    continue
                note(cand)
                rec(cand, idx)

        rec((first,), alpha.index(first))
    return best_len, best, nodes


def _strong_task(args) -> tuple[int, tuple[int, ...], int]:
    """Longest strongly free word starting with a fixed letter."""
    S, first = args
    table = S.table
    idem = _idem_mask(S)
    alpha = _nonidempotents(S)
    nodes = 1
    best_len = 1
    best = (first,)

    def rec(seq: tuple[int, ...], amask: int) -> None:
        nonlocal nodes, best_len, best
        for x in alpha:
            nodes += 1
            grown = amask | (1 << x) | _translate(table, amask, x)
            if grown & idem:
                continue
            cand = seq + (x,)
            if len(cand) > best_len:
                best_len, best = len(cand), cand
            rec(cand, grown)

    rec((first,), 1 << first)
    return best_len, best, nodes


def _davenport_task(args) -> tuple[int, tuple[int, ...], int]:
    """Longest product-irreducible nondecreasing sequence with fixed least term.

    A sequence is reducible when some proper subsequence multiplies to the
    full product; the empty subsequence counts as a witness exactly when S
    has an identity element (its product being that identity).
    """
    S, first = args
    n = S.order
    table = S.table
    ident = identity_element(S)
    ident_mask = 0 if ident is None else 1 << ident
    if (1 << first) & ident_mask:
        return 0, (), 1
    nodes = 1
    best_len = 1
    best = (first,)

    def rec(seq: tuple[int, ...], pi: int, pi_mask: int, proper: int, start: int) -> None:
        nonlocal nodes, best_len, best
        for x in range(start, n):
            nodes += 1
            new_pi = table[pi][x]
            # proper products of T.x: all sub-multiset products of T,
            # proper products of T translated by x, and x itself
            new_proper = pi_mask | _translate(table, proper, x) | (1 << x)
            if (1 << new_pi) & (new_proper | ident_mask):
                continue
            new_pi_mask = pi_mask | (1 << x) | _translate(table, pi_mask, x)
            cand = seq + (x,)
            if len(cand) > best_len:
                best_len, best = len(cand), cand
            rec(cand, new_pi, new_pi_mask, new_proper, x)

    rec((first,), first, 1 << first, 0, first)
    return best_len, best, nodes


def _merge(results) -> tuple[int, tuple[int, ...], int]:
    """Deterministic merge: max length, first (lex least) witness, summed nodes."""
    best_len, best, nodes = 0, (), 0
    for length, witness, explored in results:
        nodes += explored
        if length > best_len:
            best_len, best = length, witness
    return best_len, best, nodes


def erdos_burgess(S: FiniteSemigroup, map_fn=map, cap: int = DEFAULT_DP_CAP) -> ConstantReport:
    """I(S): least length forcing an idempotent subsequence product in some order."""
    tasks = [(S, x, cap) for x in _nonidempotents(S)]
    best_len, best, nodes = _merge(map_fn(_weak_task, tasks))
    value = best_len + 1
    assert value <= ghw_bound(S)
    return ConstantReport(KIND_ERDOS_BURGESS, value, Seq(best), nodes)


def strong_erdos_burgess(S: FiniteSemigroup, map_fn=map) -> ConstantReport:
    """SI(S): least length forcing an idempotent natural-order subsequence product."""
    tasks = [(S, x) for x in _nonidempotents(S)]
    best_len, best, nodes = _merge(map_fn(_strong_task, tasks))
    value = best_len + 1
    assert value <= ghw_bound(S)
    return ConstantReport(KIND_STRONG_ERDOS_BURGESS, value, Seq(best), nodes)


def davenport(S: FiniteSemigroup, map_fn=map) -> ConstantReport:
    """D(S): least length past which every sequence has a proper subsequence
    with the same total product. Defined for commutative semigroups only."""
    if not is_commutative(S):
        raise NotCommutative("the Davenport constant is defined for commutative semigroups")
    tasks = [(S, x) for x in S.elements]
    best_len, best, nodes = _merge(map_fn(_davenport_task, tasks))
    return ConstantReport(KIND_DAVENPORT, best_len + 1, Seq(best), nodes)
