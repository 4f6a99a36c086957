"""Commutative structure theory and the extremal-sequence certificate.

For a commutative semigroup the mutual power-divisibility relation
partitions the elements into archimedean components ordered by a lower
semilattice. Each finite commutative archimedean component is an ideal
extension of an abelian group (its kernel) by a nilsemigroup, glued by the
partial homomorphism a -> a * e.

The certificate checker decides whether a sequence of length |S \\ E(S)|
has the structure that characterizes weak freeness at that length: a
commutative generated subsemigroup covering everything but idempotents,
a total absorption order on the support, cycles that tile the subsemigroup
with disjoint non-idempotent parts, index congruent to 1 mod period, and
multiplicities pinned to index + period - 2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    ElementId,
    FiniteSemigroup,
    NotCommutative,
    SemigroupError,
    cyclic_data,
    generated_subsemigroup,
    idempotents,
    is_commutative,
    unique_cycle_idempotent,
)
from .seqprod import DEFAULT_DP_CAP, _check_terms, _terms, is_weakly_free


class NotArchimedean(SemigroupError):
    pass


class NotInNilPart(SemigroupError):
    pass


class WrongLength(SemigroupError):
    pass


MONOGENIC_ONLY = "MonogenicOnly"
GROUP_BY_NIL_EXTENSION = "GroupByNilExtension"

# certificate condition ids, in evaluation order
COND_COMMUTATIVE = "commutative-closure"
COND_COMPLEMENT = "complement-idempotent"
COND_ABSORPTION = "absorption-order"
COND_UNION = "union-of-cycles"
COND_DISJOINT = "disjoint-nonidempotent-parts"
COND_INDEX = "index-congruence"
COND_MULTIPLICITY = "multiplicity"
COND_COMPONENTS = "component-structure"


def _require_commutative(S: FiniteSemigroup) -> None:
    if not is_commutative(S):
        raise NotCommutative("operation requires a commutative semigroup")


def divides_power(S: FiniteSemigroup, a: ElementId, b: ElementId) -> bool:
    """True iff a^m = b*c for some m >= 1 and some c in S.

    Scanning one full power cycle of a suffices since higher powers repeat.
    """
    _require_commutative(S)
    powers = set(cyclic_data(S, a).powers)
    row = S.table[b]
    return any(row[c] in powers for c in S.elements)


@dataclass(frozen=True)
class ComponentData:
    idempotent: ElementId
    kernel_group: frozenset[ElementId]
    nil_part: frozenset[ElementId]


@dataclass(frozen=True)
class ArchDecomposition:
    components: tuple[frozenset[ElementId], ...]
    leq: tuple[tuple[bool, ...], ...]  # leq[i][j]: component i below-or-equal j
    per_component: tuple[ComponentData, ...]
    comp_of: tuple[int, ...]

    def component_of(self, a: ElementId) -> int:
        return self.comp_of[a]

    def is_chain(self) -> bool:
        k = len(self.components)
        return all(self.leq[i][j] or self.leq[j][i] for i in range(k) for j in range(i + 1, k))

    def meet(self, i: int, j: int) -> int:
        below = [k for k in range(len(self.components)) if self.leq[k][i] and self.leq[k][j]]
        tops = [k for k in below if all(self.leq[m][k] for m in below)]
        assert len(tops) == 1, "component order is not a meet semilattice"
        return tops[0]


def archimedean_decomposition(S: FiniteSemigroup) -> ArchDecomposition:
    """Partition a commutative semigroup into archimedean components.

    Components are classes of mutual power divisibility, ordered by the
    induced relation; each carries its unique idempotent, kernel group and
    nil part.
    """
    _require_commutative(S)
    n = S.order
    t = S.table
    pow_masks = []
    row_masks = []
    for a in range(n):
        pm = 0
        for y in cyclic_data(S, a).powers:
            pm |= 1 << y
        pow_masks.append(pm)
        rm = 0
        for c in range(n):
            rm |= 1 << t[a][c]
        row_masks.append(rm)
    eleq = [[bool(pow_masks[a] & row_masks[b]) for b in range(n)] for a in range(n)]

    comp_of = [-1] * n
    components: list[frozenset[int]] = []
    for a in range(n):
        if comp_of[a] >= 0:
            continue
        cid = len(components)
        members = [b for b in range(n) if eleq[a][b] and eleq[b][a]]
        for b in members:
            assert comp_of[b] < 0, "mutual divisibility classes overlap"
            comp_of[b] = cid
        components.append(frozenset(members))

    reps = [min(comp) for comp in components]
    k = len(components)
    leq = tuple(tuple(eleq[reps[i]][reps[j]] for j in range(k)) for i in range(k))
    # the relation must be constant on classes (it descends to the quotient)
    for a in range(n):
        for b in range(n):
            assert eleq[a][b] == leq[comp_of[a]][comp_of[b]], "divisibility is not a class invariant"

    per = []
    for comp in components:
        ids = [e for e in comp if t[e][e] == e]
        assert len(ids) == 1, "archimedean component without a unique idempotent"
        e = ids[0]
        kernel = frozenset(t[e][a] for a in comp)
        per.append(ComponentData(idempotent=e, kernel_group=kernel, nil_part=comp - kernel))
    return ArchDecomposition(
        components=tuple(components),
        leq=leq,
        per_component=tuple(per),
        comp_of=tuple(comp_of),
    )


def is_chain_lower_absorbing(S: FiniteSemigroup, dec: ArchDecomposition) -> bool:
    """Components form a chain and every strictly lower element absorbs: g*h = g."""
    if not dec.is_chain():
        return False
    t = S.table
    k = len(dec.components)
    for i in range(k):
        for j in range(k):
            if i == j or not dec.leq[i][j] or dec.leq[j][i]:
                continue
            for g in dec.components[i]:
                for h in dec.components[j]:
                    if t[g][h] != g:
                        return False
    return True


def _component_idempotent(S: FiniteSemigroup, comp: frozenset[int]) -> int:
    ids = [e for e in comp if S.table[e][e] == e]
    if len(ids) != 1:
        raise NotArchimedean(f"component has {len(ids)} idempotents, expected exactly 1")
    return ids[0]


def kernel_group(S: FiniteSemigroup, component) -> frozenset[ElementId]:
    """The group e * component sitting inside an archimedean component."""
    comp = frozenset(int(a) for a in component)
    e = _component_idempotent(S, comp)
    t = S.table
    kernel = frozenset(t[e][a] for a in comp)
    assert all(t[e][g] == g for g in kernel), "idempotent is not an identity on the kernel"
    assert all(t[g][h] in kernel for g in kernel for h in kernel), "kernel not closed"
    assert all(any(t[g][h] == e for h in kernel) for g in kernel), "kernel element without inverse"
    return kernel


def partial_hom(S: FiniteSemigroup, component, a: ElementId) -> ElementId:
    """Map a nil-part element into the kernel group: a -> a * e."""
    comp = frozenset(int(x) for x in component)
    e = _component_idempotent(S, comp)
    kernel = frozenset(S.table[e][x] for x in comp)
    if a not in comp or a in kernel:
        raise NotInNilPart(f"element {a} is not in the nil part of the component")
    image = S.table[a][e]
    assert image in kernel
    return image


@dataclass(frozen=True)
class GeneratorData:
    element: ElementId
    index: int
    period: int
    multiplicity: int


@dataclass(frozen=True)
class ExtremalCertificate:
    passed: bool
    fail_reason: str | None
    generator_order: tuple[ElementId, ...]
    per_generator: tuple[GeneratorData, ...]
    component_kinds: tuple[str, ...]
    conditions: tuple[tuple[str, bool], ...]

    def to_json_dict(self) -> dict:
        return {
            "verdict": "pass" if self.passed else "fail",
            "failReason": self.fail_reason,
            "generatorOrder": list(self.generator_order),
            "perGenerator": [
                {
                    "element": g.element,
                    "index": g.index,
                    "period": g.period,
                    "multiplicity": g.multiplicity,
                }
                for g in self.per_generator
            ],
            "componentKind": list(self.component_kinds),
            "conditions": [{"id": cid, "ok": ok} for cid, ok in self.conditions],
        }


def _subsemigroup(S: FiniteSemigroup, elements) -> tuple[FiniteSemigroup, list[int]]:
    """Restrict the table to a closed subset; returns (sub, original ids)."""
    carrier = sorted(elements)
    pos = {e: i for i, e in enumerate(carrier)}
    t = S.table
    sub = FiniteSemigroup([[pos[t[a][b]] for b in carrier] for a in carrier])
    return sub, carrier


def _absorption_order(S: FiniteSemigroup, supp: list[int]) -> tuple[int, ...] | None:
    """An ordering x_1..x_k with x_i * x_j = x_j for i < j, if one exists."""
    t = S.table
    wins = {x: 0 for x in supp}
    for i, a in enumerate(supp):
        for b in supp[i + 1:]:
            p = t[a][b]
            if p == b:
                wins[a] += 1
            elif p == a:
                wins[b] += 1
            else:
                return None
    order = sorted(supp, key=lambda x: (-wins[x], x))
    for i, a in enumerate(order):
        for b in order[i + 1:]:
            if t[a][b] != b:
                return None
    return tuple(order)


def _classify_components(S: FiniteSemigroup, gen_order: tuple[int, ...]) -> tuple[tuple[str, ...], bool]:
    """Per-component kinds of R = union of the generators' cycles, in chain order."""
    carrier: set[int] = set()
    for x in gen_order:
        carrier.update(cyclic_data(S, x).powers)
    sub, orig = _subsemigroup(S, carrier)
    pos = {e: i for i, e in enumerate(orig)}
    dec = archimedean_decomposition(sub)

    gens_sub = [pos[x] for x in gen_order]
    comp_gens: dict[int, list[int]] = {}
    for g in gens_sub:
        comp_gens.setdefault(dec.comp_of[g], []).append(g)
    if set(comp_gens) != set(range(len(dec.components))):
        return (), False

    rank = {g: i for i, g in enumerate(gens_sub)}
    chain = sorted(comp_gens, key=lambda cid: min(rank[g] for g in comp_gens[cid]))
    kinds: list[str] = []
    for cid in chain:
        gens = comp_gens[cid]
        comp = dec.components[cid]
        data = dec.per_component[cid]
        if len(gens) == 1:
            x = gens[0]
            if frozenset(cyclic_data(sub, x).powers) != comp:
                return (), False
            kinds.append(MONOGENIC_ONLY)
        elif len(gens) == 2:
            in_kernel = [g for g in gens if g in data.kernel_group]
            if len(in_kernel) != 1:
                return (), False
            x2 = in_kernel[0]
            x1 = gens[0] if gens[1] == x2 else gens[1]
            e = data.idempotent
            ok = (
                len(data.kernel_group) >= 2
                and len(data.nil_part) >= 1
                and frozenset(cyclic_data(sub, x2).powers) == data.kernel_group
                and frozenset(cyclic_data(sub, x1).powers) == data.nil_part | {e}
                and sub.table[x1][e] == e  # trivial partial homomorphism
            )
            if not ok:
                return (), False
            kinds.append(GROUP_BY_NIL_EXTENSION)
        else:
            return (), False
    return tuple(kinds), True


def extremal_structure_check(S: FiniteSemigroup, seq) -> ExtremalCertificate:
    """Check the structural characterization of weak freeness at length |S \\ E(S)|.

    Conditions are evaluated in a fixed order and the first failure decides
    the verdict; every condition that was evaluated is recorded.
    """
    terms = _terms(seq)
    _check_terms(S, terms)
    expected = S.order - len(idempotents(S))
    if len(terms) != expected:
        raise WrongLength(f"sequence length {len(terms)} != |S \\ E(S)| = {expected}")

    t = S.table
    supp = sorted(set(terms))
    conds: list[tuple[str, bool]] = []
    gen_order: tuple[int, ...] = tuple(supp)
    per_gen: tuple[GeneratorData, ...] = ()

    def done(passed: bool, reason: str | None, kinds: tuple[str, ...] = ()) -> ExtremalCertificate:
        return ExtremalCertificate(
            passed=passed,
            fail_reason=reason,
            generator_order=gen_order,
            per_generator=per_gen,
            component_kinds=kinds,
            conditions=tuple(conds),
        )

    if not supp:
        # empty sequence: all of S must consist of idempotents, which is
        # exactly what expected == 0 already says
        conds.append((COND_COMMUTATIVE, True))
        conds.append((COND_COMPLEMENT, True))
        return done(True, None)

    cds = {x: cyclic_data(S, x) for x in supp}
    per_gen = tuple(
        GeneratorData(x, cds[x].index, cds[x].period, terms.count(x)) for x in supp
    )

    R = generated_subsemigroup(S, supp)
    ok = all(t[a][b] == t[b][a] for a in R for b in R)
    conds.append((COND_COMMUTATIVE, ok))
    if not ok:
        return done(False, COND_COMMUTATIVE)

    ok = all(t[s][s] == s for s in S.elements if s not in R)
    conds.append((COND_COMPLEMENT, ok))
    if not ok:
        return done(False, COND_COMPLEMENT)

    order = _absorption_order(S, supp)
    conds.append((COND_ABSORPTION, order is not None))
    if order is None:
        return done(False, COND_ABSORPTION)
    gen_order = order
    per_gen = tuple(
        GeneratorData(x, cds[x].index, cds[x].period, terms.count(x)) for x in gen_order
    )

    union = set()
    for x in supp:
        union.update(cds[x].powers)
    ok = union == set(R)
    conds.append((COND_UNION, ok))
    if not ok:
        return done(False, COND_UNION)

    seen: set[int] = set()
    ok = True
    for x in supp:
        part = set(cds[x].powers) - {unique_cycle_idempotent(S, x)}
        if seen & part:
            ok = False
            break
        seen |= part
    conds.append((COND_DISJOINT, ok))
    if not ok:
        return done(False, COND_DISJOINT)

    ok = all((cds[x].index - 1) % cds[x].period == 0 for x in supp)
    conds.append((COND_INDEX, ok))
    if not ok:
        return done(False, COND_INDEX)

    ok = all(terms.count(x) == cds[x].index + cds[x].period - 2 for x in supp)
    conds.append((COND_MULTIPLICITY, ok))
    if not ok:
        return done(False, COND_MULTIPLICITY)

    kinds, ok = _classify_components(S, gen_order)
    conds.append((COND_COMPONENTS, ok))
    if not ok:
        return done(False, COND_COMPONENTS)
    return done(True, None, kinds)


def extremal_main_form(S: FiniteSemigroup, seq) -> bool:
    """The same characterization decided through the archimedean machinery.

    Serves as a cross-check for the flat condition list: a generated
    commutative subsemigroup whose semilattice is a lower-absorbing chain,
    components that are single cycles (index 1 mod period) or nil-over-group
    extensions with trivial partial homomorphism, and pinned multiplicities.
    """
    terms = _terms(seq)
    _check_terms(S, terms)
    expected = S.order - len(idempotents(S))
    if len(terms) != expected:
        raise WrongLength(f"sequence length {len(terms)} != |S \\ E(S)| = {expected}")
    supp = sorted(set(terms))
    if not supp:
        return True
    t = S.table

    R = generated_subsemigroup(S, supp)
    if not all(t[a][b] == t[b][a] for a in R for b in R):
        return False
    if not all(t[s][s] == s for s in S.elements if s not in R):
        return False

    sub, orig = _subsemigroup(S, R)
    pos = {e: i for i, e in enumerate(orig)}
    dec = archimedean_decomposition(sub)
    if not is_chain_lower_absorbing(sub, dec):
        return False

    comp_gens: dict[int, list[int]] = {}
    for x in supp:
        comp_gens.setdefault(dec.comp_of[pos[x]], []).append(pos[x])
    if set(comp_gens) != set(range(len(dec.components))):
        return False
    for cid, gens in comp_gens.items():
        comp = dec.components[cid]
        data = dec.per_component[cid]
        if len(gens) == 1:
            x = gens[0]
            cd = cyclic_data(sub, x)
            if frozenset(cd.powers) != comp or (cd.index - 1) % cd.period != 0:
                return False
        elif len(gens) == 2:
            in_kernel = [g for g in gens if g in data.kernel_group]
            if len(in_kernel) != 1:
                return False
            x2 = in_kernel[0]
            x1 = gens[0] if gens[1] == x2 else gens[1]
            e = data.idempotent
            if not (
                len(data.kernel_group) >= 2
                and len(data.nil_part) >= 1
                and frozenset(cyclic_data(sub, x2).powers) == data.kernel_group
                and frozenset(cyclic_data(sub, x1).powers) == data.nil_part | {e}
                and sub.table[x1][e] == e
            ):
                return False
        else:
            return False

    for x in supp:
        cd = cyclic_data(S, x)
        if terms.count(x) != cd.index + cd.period - 2:
            return False
    return True


def extremal_equivalence(S: FiniteSemigroup, seq, cap: int = DEFAULT_DP_CAP) -> bool:
    """Brute-force weak freeness agrees with the structural certificate."""
    free = is_weakly_free(S, seq, cap)
    cert = extremal_structure_check(S, seq)
    return free == cert.passed
