"""Constructors for chained cyclic families and a small-order table enumerator.

The extremal generator builds semigroups component by component along a
chain where later components absorb cross products, pairing each with the
longest weakly free sequence the structure admits. The enumerator streams
every associative table of a given small order by cell-wise backtracking
with partial associativity pruning, in lexicographic order of the
flattened rows.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import (
    FiniteSemigroup,
    InvalidParameters,
    NotAssociative,
    SemigroupError,
    cyclic_data,
    is_commutative,
    monogenic,
    unique_cycle_idempotent,
)
from .seqprod import Seq
from .structure import archimedean_decomposition


class OrderTooLarge(SemigroupError):
    pass


class NotAssociativeAfterGlue(SemigroupError):
    pass


HARD_ENUM_CAP = 5
DEFAULT_ENUM_ORDER_CAP = 4


def cyclic_group(p: int) -> FiniteSemigroup:
    """The cyclic group of order p (index 1, period p)."""
    if p < 1:
        raise InvalidParameters(f"group order must be >= 1, got {p}")
    return monogenic(1, p)


def cyclic_nil(n: int) -> FiniteSemigroup:
    """The cyclic nilsemigroup of index n; the top power is the zero."""
    if n < 1:
        raise InvalidParameters(f"nil index must be >= 1, got {n}")
    return monogenic(n, 1)


def trivial_ideal_extension(nil_index: int, group_order: int) -> FiniteSemigroup:
    """A cyclic group reached by a nilpotent generator with trivial gluing map.

    Carrier: x^1..x^(n-1) followed by the p group elements; nil products
    overflow onto the group identity and nil elements act as identities on
    the group, which makes the whole thing one archimedean component.
    """
    n, p = int(nil_index), int(group_order)
    if n < 2 or p < 2:
        raise InvalidParameters(f"need nil index >= 2 and group order >= 2, got ({n}, {p})")
    off = n - 1
    g = monogenic(1, p).table
    e_g = off + p - 1  # x2^p, the group identity

    def prod(a: int, b: int) -> int:
        a_nil, b_nil = a < off, b < off
        if a_nil and b_nil:
            s = a + b + 2
            return s - 1 if s <= n - 1 else e_g
        if a_nil:
            return b
        if b_nil:
            return a
        return off + g[a - off][b - off]

    size = off + p
    S = FiniteSemigroup([[prod(a, b) for b in range(size)] for a in range(size)])
    assert len(archimedean_decomposition(S).components) == 1
    cd = cyclic_data(S, 0)
    assert (cd.index, cd.period) == (n, 1)
    assert unique_cycle_idempotent(S, 0) == e_g
    return S


def chain_glue(components: list[FiniteSemigroup]) -> FiniteSemigroup:
    """Disjoint union of commutative semigroups; cross products fall to the
    element from the later component in the list."""
    if not components:
        raise InvalidParameters("need at least one component")
    for comp in components:
        if not is_commutative(comp):
            raise InvalidParameters("chain components must be commutative")
    offsets = []
    total = 0
    for comp in components:
        offsets.append(total)
        total += comp.order
    owner = []
    for k, comp in enumerate(components):
        owner.extend([k] * comp.order)
    table = [[0] * total for _ in range(total)]
    for a in range(total):
        for b in range(total):
            i, j = owner[a], owner[b]
            if i == j:
                table[a][b] = offsets[i] + components[i].table[a - offsets[i]][b - offsets[i]]
            else:
                table[a][b] = a if i > j else b
    try:
        return FiniteSemigroup(table)
    except NotAssociative as exc:
        raise NotAssociativeAfterGlue(f"gluing broke associativity: {exc}") from exc


def group_nil_chain(n1: int, n2: int) -> FiniteSemigroup:
    """A cyclic group of order n1 over a cyclic nilsemigroup with n2 elements."""
    if n1 < 2 or n2 < 2:
        raise InvalidParameters(f"need n1 >= 2 and n2 >= 2, got ({n1}, {n2})")
    return chain_glue([cyclic_group(n1), cyclic_nil(n2)])


def adjoin_identity(S: FiniteSemigroup) -> FiniteSemigroup:
    """S with a fresh identity element appended as the last index."""
    n = S.order
    table = [list(row) + [a] for a, row in enumerate(S.table)]
    table.append(list(range(n + 1)))
    return FiniteSemigroup(table)


@dataclass(frozen=True)
class Monogenic:
    """A single-cycle component; index must be congruent to 1 mod period."""

    index: int
    period: int

    def __post_init__(self):
        if self.index < 1 or self.period < 1:
            raise InvalidParameters(f"need index, period >= 1, got {self}")
        if (self.index - 1) % self.period != 0:
            raise InvalidParameters(f"index must be 1 mod period, got {self}")

    @property
    def term_count(self) -> int:
        return self.index + self.period - 2


@dataclass(frozen=True)
class GroupByNil:
    """A nontrivial cyclic group under a nontrivial cyclic nil generator."""

    nil_index: int
    group_order: int

    def __post_init__(self):
        if self.nil_index < 2 or self.group_order < 2:
            raise InvalidParameters(f"need nil index >= 2 and group order >= 2, got {self}")

    @property
    def term_count(self) -> int:
        return self.nil_index + self.group_order - 2


@dataclass(frozen=True)
class ExtremalSpec:
    chain: tuple[Monogenic | GroupByNil, ...]
    adjoin_identity: bool = False

    def __post_init__(self):
        if not self.chain:
            raise InvalidParameters("extremal spec needs at least one component")


def extremal_pair(spec: ExtremalSpec) -> tuple[FiniteSemigroup, Seq]:
    """Build the described semigroup and its longest weakly free sequence.

    Each generator x appears index(x) + period(x) - 2 times, so the total
    length is exactly |S \\ E(S)|.
    """
    comps: list[FiniteSemigroup] = []
    local_gens: list[list[tuple[int, int]]] = []  # per component: (local id, multiplicity)
    for part in spec.chain:
        if isinstance(part, Monogenic):
            comps.append(monogenic(part.index, part.period))
            local_gens.append([(0, part.term_count)])
        else:
            comps.append(trivial_ideal_extension(part.nil_index, part.group_order))
            # nil generator first, then the group generator
            local_gens.append(
                [(0, part.nil_index - 1), (part.nil_index - 1, part.group_order - 1)]
            )
    S = chain_glue(comps)
    if spec.adjoin_identity:
        S = adjoin_identity(S)
    terms: list[int] = []
    offset = 0
    for comp, gens in zip(comps, local_gens):
        for local, mult in gens:
            terms.extend([offset + local] * mult)
        offset += comp.order
    return S, Seq.of(terms)


def canonical_form(S: FiniteSemigroup) -> tuple[int, ...]:
    """Lexicographically least flattened table over all element relabelings."""
    n = S.order
    best = tuple(v for row in S.table for v in row)
    for perm in itertools.permutations(range(n)):
        rel = [0] * (n * n)
        for a in range(n):
            pa = perm[a] * n
            row = S.table[a]
            for b in range(n):
                rel[pa + perm[b]] = perm[row[b]]
        cand = tuple(rel)
        if cand < best:
            best = cand
    return best


def _is_canonical(S: FiniteSemigroup) -> bool:
    return canonical_form(S) == tuple(v for row in S.table for v in row)


def enumerate_semigroups(
    order: int,
    commutative_only: bool = False,
    dedup_iso: bool = False,
    resume_from=None,
    max_order: int = DEFAULT_ENUM_ORDER_CAP,
):
    """Stream every associative table of the given order, lexicographically.

    Order 5 takes a while and must be requested explicitly via max_order=5;
    nothing beyond 5 is supported. resume_from restarts the stream at a
    flattened row-major prefix (inclusive).
    """
    n = int(order)
    if n < 1:
        raise InvalidParameters("order must be >= 1")
    if n > HARD_ENUM_CAP:
        raise OrderTooLarge(f"enumeration is capped at order {HARD_ENUM_CAP}")
    if n > max_order:
        raise OrderTooLarge(
            f"order {n} exceeds the configured cap {max_order}; raise max_order explicitly"
        )
    prefix = tuple(int(v) for v in resume_from) if resume_from else ()
    if len(prefix) > n * n or any(not 0 <= v < n for v in prefix):
        raise InvalidParameters("resume prefix must be at most n*n cells in [0, n)")

    table = [[-1] * n for _ in range(n)]
    cells = n * n

    def ok_after(a: int, b: int) -> bool:
        # check every fully determined triple that involves the new cell
        t = table
        v = t[a][b]
        for z in range(n):
            bz = t[b][z]
            if bz >= 0:
                left, right = t[v][z], t[a][bz]
                if left >= 0 and right >= 0 and left != right:
                    return False
        for x in range(n):
            xa = t[x][a]
            if xa >= 0:
                left, right = t[xa][b], t[x][v]
                if left >= 0 and right >= 0 and left != right:
                    return False
        for x in range(n):
            tx = t[x]
            for y in range(n):
                if tx[y] == a:
                    yb = t[y][b]
                    if yb >= 0 and tx[yb] >= 0 and tx[yb] != v:
                        return False
        ta = t[a]
        for y in range(n):
            ty = t[y]
            ay = ta[y]
            for z in range(n):
                if ty[z] == b and ay >= 0:
                    left = t[ay][z]
                    if left >= 0 and left != v:
                        return False
        return True

    def emit():
        S = FiniteSemigroup(table)
        if not dedup_iso or _is_canonical(S):
            yield S

    def rec(d: int, on_boundary: bool):
        if d == cells:
            yield from emit()
            return
        a, b = divmod(d, n)
        lo = prefix[d] if on_boundary and d < len(prefix) else 0
        if commutative_only and b < a:
            v = table[b][a]
            if v < lo:
                return
            table[a][b] = v
            if ok_after(a, b):
                yield from rec(d + 1, on_boundary and d < len(prefix) and v == prefix[d])
            table[a][b] = -1
            return
        for v in range(lo, n):
            table[a][b] = v
            if ok_after(a, b):
                yield from rec(d + 1, on_boundary and d < len(prefix) and v == prefix[d])
        table[a][b] = -1

    yield from rec(0, True)
