"""Batch verification over enumerated corpora and generated families.

Every check maps a pure per-instance function over its inputs, so a worker
pool can fan the work out; results are aggregated in input order and the
resulting logs are byte-identical regardless of worker count. Elapsed time
is deliberately kept out of the log payload.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor

from .constants import davenport, erdos_burgess, ghw_bound, strong_erdos_burgess
from .construct import ExtremalSpec, GroupByNil, Monogenic, enumerate_semigroups, extremal_pair, group_nil_chain
from .core import FiniteSemigroup, idempotents, is_commutative, is_nilsemigroup, zero_element
from .seqprod import any_order_products, is_weakly_free, product_gain
from .structure import extremal_equivalence, extremal_main_form, extremal_structure_check

CHECK_IDS = (
    "ghw-bound",
    "extremal-equivalence",
    "extremal-families",
    "example-formulas",
    "strong-vs-weak",
    "nil-product-lemma",
)


def build_corpus(max_order: int, commutative_only: bool = False, enum_cap: int = 5) -> list[FiniteSemigroup]:
    out: list[FiniteSemigroup] = []
    for n in range(1, max_order + 1):
        out.extend(enumerate_semigroups(n, commutative_only=commutative_only, max_order=enum_cap))
    return out


def _flat(S: FiniteSemigroup) -> list[int]:
    return [v for row in S.table for v in row]


def _aggregate(check_id: str, rows, extra_keys=()) -> dict:
    instances = passed = 0
    failures = []
    extras = {k: 0 for k in extra_keys}
    for row in rows:
        instances += 1
        if row["ok"]:
            passed += 1
        else:
            failures.append(row["failure"])
        for k in extra_keys:
            extras[k] += row.get(k, 0)
    result = {
        "id": check_id,
        "instances": instances,
        "passed": passed,
        "failed": instances - passed,
        "failures": failures,
    }
    result.update(extras)
    return result


def _ghw_case(S: FiniteSemigroup) -> dict:
    report = strong_erdos_burgess(S)
    bound = ghw_bound(S)
    ok = report.value <= bound
    return {
        "ok": ok,
        "failure": None if ok else {"table": _flat(S), "si": report.value, "bound": bound},
    }


def check_ghw_bound(semigroups, map_fn=map) -> dict:
    """No strongly free word of length |S \\ E(S)| + 1 exists (search exhausts)."""
    return _aggregate("ghw-bound", map_fn(_ghw_case, semigroups))


def _equivalence_case(S: FiniteSemigroup) -> dict:
    alphabet = [a for a in S.elements if S.table[a][a] != a]
    length = len(alphabet)
    sequences = free = lambda_checked = 0
    eq_failures = []
    lambda_failures = []
    claim_failures = []
    nonidem = frozenset(alphabet)
    for tup in itertools.product(alphabet, repeat=length):
        sequences += 1
        if not extremal_equivalence(S, tup):
            eq_failures.append({"table": _flat(S), "seq": list(tup)})
            continue
        if not is_weakly_free(S, tup):
            continue
        free += 1
        # new-product lower bound: dropping one copy of a term and
        # re-appending it must contribute at least one product
        for x in sorted(set(tup)):
            rest = list(tup)
            rest.remove(x)
            lambda_checked += 1
            if product_gain(S, rest, x) < 1:
                lambda_failures.append({"table": _flat(S), "seq": list(tup), "term": x})
        # extremal support commutes pairwise into itself, and the products
        # of a free sequence of this length cover all non-idempotents
        supp = sorted(set(tup))
        for i, a in enumerate(supp):
            for b in supp[i + 1:]:
                if S.table[a][b] != S.table[b][a] or S.table[a][b] not in (a, b):
                    claim_failures.append({"table": _flat(S), "seq": list(tup), "pair": [a, b]})
        if any_order_products(S, tup) != nonidem:
            claim_failures.append({"table": _flat(S), "seq": list(tup), "pair": None})
    ok = not (eq_failures or lambda_failures or claim_failures)
    return {
        "ok": ok,
        "failure": None
        if ok
        else {"table": _flat(S), "equivalence": eq_failures, "lambda": lambda_failures, "claims": claim_failures},
        "sequences": sequences,
        "freeSequences": free,
        "lambdaChecked": lambda_checked,
        "equivalenceFailures": len(eq_failures),
        "lambdaFailures": len(lambda_failures),
        "claimFailures": len(claim_failures),
    }


def check_extremal_equivalence(commutative_semigroups, map_fn=map) -> dict:
    """Freeness at length |S \\ E(S)| matches the structural certificate, and
    every free sequence found satisfies the new-product lower bound."""
    return _aggregate(
        "extremal-equivalence",
        map_fn(_equivalence_case, commutative_semigroups),
        extra_keys=(
            "sequences",
            "freeSequences",
            "lambdaChecked",
            "equivalenceFailures",
            "lambdaFailures",
            "claimFailures",
        ),
    )


def _spec_to_json(spec: ExtremalSpec) -> dict:
    parts = []
    for part in spec.chain:
        if isinstance(part, Monogenic):
            parts.append({"kind": "Monogenic", "index": part.index, "period": part.period})
        else:
            parts.append({"kind": "GroupByNil", "nilIndex": part.nil_index, "groupOrder": part.group_order})
    return {"chain": parts, "adjoinIdentity": spec.adjoin_identity}


def _family_case(spec: ExtremalSpec) -> dict:
    S, T = extremal_pair(spec)
    expected_len = S.order - len(idempotents(S))
    cert = extremal_structure_check(S, T)
    checks = {
        "length": len(T) == expected_len,
        "weaklyFree": is_weakly_free(S, T),
        "certificate": cert.passed,
        "mainFormAgrees": extremal_main_form(S, T) == cert.passed,
        "erdosBurgess": erdos_burgess(S).value == expected_len + 1,
    }
    ok = all(checks.values())
    return {
        "ok": ok,
        "failure": None if ok else {"spec": _spec_to_json(spec), "checks": checks},
    }


def enumerate_extremal_specs(
    max_components: int = 3,
    max_terms: int = 10,
    group_by_nil_limit: int = 4,
    include_identity: bool = True,
) -> list[ExtremalSpec]:
    """Every chain of at most max_components catalog parts whose sequence
    length budget fits, optionally doubled with an adjoined identity."""
    catalog: list[Monogenic | GroupByNil] = []
    for period in range(1, max_terms + 2):
        for index in range(1, max_terms + 3 - period):
            if (index - 1) % period == 0 and index + period - 2 <= max_terms:
                catalog.append(Monogenic(index, period))
    for nil_index in range(2, group_by_nil_limit + 1):
        for group_order in range(2, group_by_nil_limit + 1):
            if nil_index + group_order - 2 <= max_terms:
                catalog.append(GroupByNil(nil_index, group_order))

    specs: list[ExtremalSpec] = []
    for length in range(1, max_components + 1):
        for chain in itertools.product(catalog, repeat=length):
            if sum(part.term_count for part in chain) > max_terms:
                continue
            specs.append(ExtremalSpec(chain))
            if include_identity:
                specs.append(ExtremalSpec(chain, adjoin_identity=True))
    return specs


def check_extremal_families(map_fn=map, max_components: int = 3, max_terms: int = 10) -> dict:
    """Every generated extremal pair is free, certified, and search-extremal."""
    specs = enumerate_extremal_specs(max_components=max_components, max_terms=max_terms)
    return _aggregate("extremal-families", map_fn(_family_case, specs))


def _formula_case(params: tuple[int, int]) -> dict:
    n1, n2 = params
    S = group_nil_chain(n1, n2)
    got_i = erdos_burgess(S).value
    got_d = davenport(S).value
    want_i = (n1 - 1) + (n2 - 1) + 1
    want_d = max(n1, n2 + 1)
    ok = got_i == want_i and got_d == want_d
    return {
        "ok": ok,
        "failure": None
        if ok
        else {"n1": n1, "n2": n2, "erdosBurgess": [got_i, want_i], "davenport": [got_d, want_d]},
    }


def check_example_formulas(map_fn=map, lo: int = 2, hi: int = 5) -> dict:
    """Group-over-nil chains match the closed-form constants via search."""
    params = [(n1, n2) for n1 in range(lo, hi + 1) for n2 in range(lo, hi + 1)]
    return _aggregate("example-formulas", map_fn(_formula_case, params))


def _strong_weak_case(S: FiniteSemigroup) -> dict:
    weak = erdos_burgess(S).value
    strong = strong_erdos_burgess(S).value
    ok = weak <= strong and (not is_commutative(S) or weak == strong)
    return {
        "ok": ok,
        "failure": None if ok else {"table": _flat(S), "i": weak, "si": strong},
    }


def check_strong_weak(semigroups, map_fn=map) -> dict:
    """I(S) <= SI(S) always, with equality on commutative semigroups."""
    return _aggregate("strong-vs-weak", map_fn(_strong_weak_case, semigroups))


def _nil_case(S: FiniteSemigroup) -> dict:
    z = zero_element(S)
    bad = [
        (a, b)
        for a in S.elements
        for b in S.elements
        if S.table[a][b] in (a, b) and a != z and b != z
    ]
    return {
        "ok": not bad,
        "failure": None if not bad else {"table": _flat(S), "pairs": [list(p) for p in bad]},
    }


def check_nil_lemma(commutative_semigroups, map_fn=map) -> dict:
    """In a commutative nilsemigroup a*b in {a, b} forces a zero factor."""
    nils = [S for S in commutative_semigroups if is_nilsemigroup(S)]
    return _aggregate("nil-product-lemma", map_fn(_nil_case, nils))


class _PoolMap:
    """Order-preserving map over a process pool."""

    def __init__(self, executor: ProcessPoolExecutor, workers: int):
        self.executor = executor
        self.workers = workers

    def __call__(self, fn, items):
        items = list(items)
        if not items:
            return []
        chunk = max(1, len(items) // (self.workers * 4))
        return list(self.executor.map(fn, items, chunksize=chunk))


def run_verification(
    max_order: int = 4,
    commutative_only: bool = False,
    checks=CHECK_IDS,
    workers: int = 1,
    enum_cap: int = 5,
) -> dict:
    """Run the selected checks and return a deterministic JSON-ready log."""
    selected = list(checks)
    unknown = [c for c in selected if c not in CHECK_IDS]
    if unknown:
        raise ValueError(f"unknown checks: {unknown}; available: {list(CHECK_IDS)}")

    needs_corpus = {"ghw-bound", "extremal-equivalence", "strong-vs-weak", "nil-product-lemma"}
    corpus: list[FiniteSemigroup] = []
    commutative: list[FiniteSemigroup] = []
    if needs_corpus & set(selected):
        corpus = build_corpus(max_order, commutative_only=commutative_only, enum_cap=enum_cap)
        commutative = [S for S in corpus if is_commutative(S)]

    def run(map_fn) -> list[dict]:
        results = []
        for check in selected:
            if check == "ghw-bound":
                results.append(check_ghw_bound(corpus, map_fn))
            elif check == "extremal-equivalence":
                results.append(check_extremal_equivalence(commutative, map_fn))
            elif check == "extremal-families":
                results.append(check_extremal_families(map_fn))
            elif check == "example-formulas":
                results.append(check_example_formulas(map_fn))
            elif check == "strong-vs-weak":
                results.append(check_strong_weak(corpus, map_fn))
            elif check == "nil-product-lemma":
                results.append(check_nil_lemma(commutative, map_fn))
        return results

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            check_results = run(_PoolMap(executor, workers))
    else:
        check_results = run(map)

    instances = sum(r["instances"] for r in check_results)
    passed = sum(r["passed"] for r in check_results)
    return {
        "corpus": {
            "maxOrder": max_order,
            "commutativeOnly": commutative_only,
            "semigroups": len(corpus),
        },
        "requestedChecks": selected,
        "checks": check_results,
        "summary": {
            "instances": instances,
            "passed": passed,
            "failed": instances - passed,
            "allPassed": passed == instances,
        },
    }
