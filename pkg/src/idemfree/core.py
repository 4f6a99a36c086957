"""Finite semigroups as validated Cayley tables over dense 0-based indices.

The table is the whole structure: ``table[a][b]`` is the product ``a*b``.
Closure and associativity are checked eagerly at construction, so any
instance in hand is a genuine semigroup and everything downstream can
index straight into the table without re-checking.
"""

from __future__ import annotations

from dataclasses import dataclass

ElementId = int


class SemigroupError(ValueError):
    """Base class for construction and argument errors."""


class NotClosed(SemigroupError):
    """A table cell lies outside [0, n)."""

    def __init__(self, row: int, col: int, value: object):
        self.cell = (row, col)
        self.value = value
        super().__init__(f"table[{row}][{col}] = {value!r} is not an element index")


class NotAssociative(SemigroupError):
    """A triple violates (a*b)*c = a*(b*c)."""

    def __init__(self, a: int, b: int, c: int):
        self.triple = (a, b, c)
        super().__init__(f"(a*b)*c != a*(b*c) at (a, b, c) = ({a}, {b}, {c})")


class InvalidParameters(SemigroupError):
    pass


class EmptyGeneratorSet(SemigroupError):
    pass


class NotCommutative(SemigroupError):
    pass


class FiniteSemigroup:
    """Immutable finite semigroup on elements 0..n-1.

    Instances are safely shareable across threads and processes: the table
    is a tuple of tuples and derived data is cached, never mutated.
    """

    def __init__(self, table):
        rows = tuple(tuple(int(v) for v in row) for row in table)
        n = len(rows)
        if n == 0:
            raise InvalidParameters("a semigroup needs at least one element")
        for a, row in enumerate(rows):
            if len(row) != n:
                raise InvalidParameters(f"row {a} has {len(row)} entries, expected {n}")
            for b, v in enumerate(row):
                if not 0 <= v < n:
                    raise NotClosed(a, b, v)
        # first violating triple in lexicographic (a, b, c) order
        for a in range(n):
            ra = rows[a]
            for b in range(n):
                rb = rows[b]
                rab = rows[ra[b]]
                for c in range(n):
                    if rab[c] != ra[rb[c]]:
                        raise NotAssociative(a, b, c)
        self.order = n
        self.table = rows
        self._idempotents: frozenset[int] | None = None
        self._commutative: bool | None = None
        self._cyclic: dict[int, CyclicData] = {}

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    @property
    def elements(self) -> range:
        return range(self.order)

    def __eq__(self, other):
        return isinstance(other, FiniteSemigroup) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return f"FiniteSemigroup(order={self.order})"


def validate(order: int, table) -> FiniteSemigroup:
    """Build a semigroup from an n x n table, rejecting bad cells and triples."""
    if len(table) != order:
        raise InvalidParameters(f"declared order {order} but table has {len(table)} rows")
    return FiniteSemigroup(table)


def idempotents(S: FiniteSemigroup) -> frozenset[ElementId]:
    """All e with e*e = e; nonempty for every finite semigroup."""
    if S._idempotents is None:
        found = frozenset(e for e in S.elements if S.table[e][e] == e)
        assert found, "finite semigroup without idempotent"
        S._idempotents = found
    return S._idempotents


def is_commutative(S: FiniteSemigroup) -> bool:
    if S._commutative is None:
        t = S.table
        S._commutative = all(
            t[a][b] == t[b][a] for a in S.elements for b in range(a + 1, S.order)
        )
    return S._commutative


def zero_element(S: FiniteSemigroup) -> ElementId | None:
    """The unique z with z*x = x*z = z for all x, if present."""
    t = S.table
    for z in S.elements:
        if all(t[z][x] == z and t[x][z] == z for x in S.elements):
            return z
    return None


def identity_element(S: FiniteSemigroup) -> ElementId | None:
    """The unique e with e*x = x*e = x for all x, if present."""
    t = S.table
    for e in S.elements:
        if all(t[e][x] == x and t[x][e] == x for x in S.elements):
            return e
    return None


def is_nilsemigroup(S: FiniteSemigroup) -> bool:
    """True iff S has a zero and every element has some power equal to it."""
    z = zero_element(S)
    return z is not None and idempotents(S) == frozenset({z})


def generated_subsemigroup(S: FiniteSemigroup, generators) -> frozenset[ElementId]:
    """Least subset containing the generators and closed under the table."""
    gens = frozenset(int(g) for g in generators)
    if not gens:
        raise EmptyGeneratorSet("generator set must be nonempty")
    for g in gens:
        if not 0 <= g < S.order:
            raise InvalidParameters(f"generator {g} outside semigroup of order {S.order}")
    t = S.table
    closure = set(gens)
    frontier = list(gens)
    while frontier:
        fresh = []
        for a in frontier:
            for b in list(closure):
                for v in (t[a][b], t[b][a]):
                    if v not in closure:
                        closure.add(v)
                        fresh.append(v)
        frontier = fresh
    return frozenset(closure)


@dataclass(frozen=True)
class CyclicData:
    """Index I(x), period P(x), and the distinct powers x, x^2, ..., x^(I+P-1)."""

    index: int
    period: int
    powers: tuple[ElementId, ...]

    def power(self, k: int) -> ElementId:
        """The element x^k for any exponent k >= 1."""
        if k < 1:
            raise InvalidParameters("powers start at exponent 1")
        if k <= len(self.powers):
            return self.powers[k - 1]
        return self.powers[self.index - 1 + (k - self.index) % self.period]


def cyclic_data(S: FiniteSemigroup, x: ElementId) -> CyclicData:
    """Index, period and power list of x; terminates within n steps."""
    cached = S._cyclic.get(x)
    if cached is not None:
        return cached
    if not 0 <= x < S.order:
        raise InvalidParameters(f"element {x} outside semigroup of order {S.order}")
    powers = [x]
    seen_at = {x: 1}
    cur = x
    while True:
        cur = S.table[cur][x]
        k = len(powers) + 1
        t = seen_at.get(cur)
        if t is not None:
            data = CyclicData(index=t, period=k - t, powers=tuple(powers))
            break
        seen_at[cur] = k
        powers.append(cur)
    S._cyclic[x] = data
    return data


def unique_cycle_idempotent(S: FiniteSemigroup, x: ElementId) -> ElementId:
    """The single idempotent power x^l, with l in [I, I+P-1] and l = 0 mod P."""
    cd = cyclic_data(S, x)
    i, p = cd.index, cd.period
    l = ((i + p - 1) // p) * p
    e = cd.powers[l - 1]
    assert S.table[e][e] == e
    assert sum(1 for y in cd.powers if S.table[y][y] == y) == 1
    return e


def monogenic(index: int, period: int) -> FiniteSemigroup:
    """The cyclic semigroup on powers x^1..x^(i+p-1) with index i and period p.

    Products follow the standard reduction: x^a * x^b = x^(a+b) while the
    exponent stays below i+p, and otherwise folds back into [i, i+p-1]
    congruent to a+b mod p.
    """
    i, p = int(index), int(period)
    if i < 1 or p < 1:
        raise InvalidParameters(f"index and period must be >= 1, got ({index}, {period})")
    n = i + p - 1

    def prod(a: int, b: int) -> int:
        s = a + b + 2  # exponents are positions + 1
        if s <= n:
            return s - 1
        return i + (s - i) % p - 1

    return FiniteSemigroup([[prod(a, b) for b in range(n)] for a in range(n)])


def parse_cayley_table(text: str) -> FiniteSemigroup:
    """Read the table text format: order line, then n rows of n indices.

    Lines starting with '#' are comments and blank lines are skipped.
    """
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln and not ln.startswith("#")]
    if not lines:
        raise InvalidParameters("empty table file")
    try:
        n = int(lines[0])
    except ValueError:
        raise InvalidParameters(f"first line must be the order, got {lines[0]!r}") from None
    if len(lines) != n + 1:
        raise InvalidParameters(f"expected {n} rows after the order line, got {len(lines) - 1}")
    rows = []
    for k, line in enumerate(lines[1:]):
        parts = line.split()
        if len(parts) != n:
            raise InvalidParameters(f"row {k} has {len(parts)} entries, expected {n}")
        try:
            rows.append([int(v) for v in parts])
        except ValueError:
            raise InvalidParameters(f"row {k} contains a non-integer entry") from None
    return validate(n, rows)


def format_cayley_table(S: FiniteSemigroup) -> str:
    """Canonical text form of the table; bit-exact for fixtures."""
    body = "\n".join(" ".join(str(v) for v in row) for row in S.table)
    return f"{S.order}\n{body}\n"
