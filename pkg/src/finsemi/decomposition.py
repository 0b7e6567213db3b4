"""Semilattice decomposition and the verification suites built on it.

`decompose` drives the full pipeline: canonical relation, induced
congruence, quotient, and per-class component tables.  The verify_*
functions each check one structural claim on a single table and report
verified / violated / not-applicable with re-checkable witnesses; corpus
aggregation and the open counterexample search live here too.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .congruence import (
    Congruence,
    NotACongruence,
    QuotientSemigroup,
    induced_congruence,
    is_semilattice,
    quotient,
)
from .core import CayleyTable, validate
from .enumeration import MAX_ORDER, OrderTooLarge, enumerate_canonical
from .properties import (
    PropertyProfile,
    classify,
    is_cancellative,
    is_quasi_cancellative,
    is_quasi_separative,
    is_separative,
    is_weakly_balanced,
    is_weakly_cancellative,
    has_square_descent,
)
from .relations import (
    BinaryRelation,
    canonical_relation,
    check_admissibility,
    left_equalizer,
)
from . import zoo


@dataclass(frozen=True)
class Component:
    """A congruence class that is closed under the source product,
    re-indexed densely with its back-map into the source."""

    table: CayleyTable
    elements: tuple[int, ...]


@dataclass(frozen=True)
class SemilatticeDecomposition:
    source: CayleyTable
    relation: BinaryRelation
    congruence: Congruence
    quotient: QuotientSemigroup
    components: tuple[Optional[Component], ...]
    quotient_is_semilattice: bool


def decompose(s: CayleyTable) -> SemilatticeDecomposition:
    """Run the decomposition pipeline on any valid table.

    Non-quasi-separative input is not rejected: the result records what
    holds (a class not closed under the product appears as None, and the
    semilattice flag may be False).  NotACongruence propagates when the
    induced equivalence fails compatibility, which cannot happen for
    quasi-separative input.
    """
    rel = canonical_relation(s)
    cong = induced_congruence(s, rel)
    q = quotient(s, cong)
    rows = s.rows
    components: list[Optional[Component]] = []
    for cls in cong.classes:
        members = set(cls)
        if all(rows[x][y] in members for x in cls for y in cls):
            local = {g: i for i, g in enumerate(cls)}
            sub = [[local[rows[x][y]] for y in cls] for x in cls]
            components.append(Component(validate(sub), cls))
        else:
            components.append(None)
    return SemilatticeDecomposition(
        s, rel, cong, q, tuple(components), is_semilattice(q.quotient)
    )


@dataclass(frozen=True)
class VerificationReport:
    check: str
    verdict: str  # "verified" | "violated" | "not-applicable"
    witnesses: tuple = ()
    counts: tuple = ()  # sorted ((name, value), ...)


def _report(check: str, verdict: str, witnesses=(), **counts) -> VerificationReport:
    return VerificationReport(
        check, verdict, tuple(witnesses), tuple(sorted(counts.items()))
    )


def admissible_candidates(s: CayleyTable) -> list[tuple[str, BinaryRelation]]:
    """Relations to feed the congruence construction: the diagonal
    unconditionally, the canonical and full relations when they pass the
    admissibility conditions."""
    out = [("diagonal", BinaryRelation.diagonal(s.n))]
    rel = canonical_relation(s)
    if check_admissibility(s, rel).all_satisfied:
        out.append(("canonical", rel))
    full = BinaryRelation.full(s.n)
    if check_admissibility(s, full).all_satisfied:
        out.append(("full", full))
    return out


def verify_congruence_construction(s: CayleyTable) -> VerificationReport:
    """Every admissible candidate relation must induce a congruence."""
    witnesses = []
    checked = 0
    for name, rel in admissible_candidates(s):
        checked += 1
        try:
            induced_congruence(s, rel)
        except NotACongruence as exc:
            witnesses.append((name, exc.witness, exc.detail))
    verdict = "violated" if witnesses else "verified"
    return _report(
        "t4", verdict, witnesses, applicable=1, relations_checked=checked
    )


def verify_semilattice_decomposition(s: CayleyTable) -> VerificationReport:
    """Quasi-separative tables must decompose into a semilattice of
    quasi-separative, quasi-cancellative components."""
    ok, _ = is_quasi_separative(s)
    if not ok:
        return _report("t6", "not-applicable", skipped=1)
    try:
        d = decompose(s)
    except NotACongruence as exc:
        return _report(
            "t6", "violated", [("not_a_congruence", exc.witness)], applicable=1
        )
    witnesses = []
    if not d.quotient_is_semilattice:
        witnesses.append(("quotient_not_semilattice",))
    for idx, comp in enumerate(d.components):
        if comp is None:
            witnesses.append(("class_not_closed", idx))
            continue
        qs, w = is_quasi_separative(comp.table)
        if not qs:
            witnesses.append(("component_not_quasi_separative", idx, w))
        qc, w = is_quasi_cancellative(comp.table)
        if not qc:
            witnesses.append(("component_not_quasi_cancellative", idx, w))
    return _report(
        "t6",
        "violated" if witnesses else "verified",
        witnesses,
        applicable=1,
        components=len(d.components),
    )


def verify_class_separation(s: CayleyTable) -> VerificationReport:
    """On quasi-separative tables, the canonical relation restricted to
    any congruence class meets each member's left equalizer only on the
    diagonal."""
    ok, _ = is_quasi_separative(s)
    if not ok:
        return _report("p7", "not-applicable", skipped=1)
    d = decompose(s)
    witnesses = []
    for ci, cls in enumerate(d.congruence.classes):
        for a in cls:
            meet = (d.relation & left_equalizer(s, a)).restrict(cls)
            off = next(((x, y) for x, y in meet.pairs() if x != y), None)
            if off is not None:
                witnesses.append((ci, a, *off))
    return _report(
        "p7",
        "violated" if witnesses else "verified",
        witnesses,
        applicable=1,
        classes=len(d.congruence.classes),
    )


def verify_separative_cancellation(s: CayleyTable) -> VerificationReport:
    """Separative and quasi-cancellative together must give cancellative."""
    if not (is_separative(s)[0] and is_quasi_cancellative(s)[0]):
        return _report("p11", "not-applicable", skipped=1)
    ok, w = is_cancellative(s)
    witnesses = [] if ok else [("not_cancellative", w)]
    return _report(
        "p11", "verified" if ok else "violated", witnesses, applicable=1
    )


def verify_balanced_cancellation(s: CayleyTable) -> VerificationReport:
    """Quasi-cancellative and weakly balanced together must give weak
    cancellativity."""
    if not (is_quasi_cancellative(s)[0] and is_weakly_balanced(s)[0]):
        return _report("p14", "not-applicable", skipped=1)
    ok, w = is_weakly_cancellative(s)
    witnesses = [] if ok else [("not_weakly_cancellative", w)]
    return _report(
        "p14", "verified" if ok else "violated", witnesses, applicable=1
    )


def _component_check(s, check_id, predicate, label):
    try:
        d = decompose(s)
    except NotACongruence as exc:
        return _report(
            check_id, "violated", [("not_a_congruence", exc.witness)], applicable=1
        )
    witnesses = []
    for idx, comp in enumerate(d.components):
        if comp is None:
            witnesses.append(("class_not_closed", idx))
            continue
        ok, w = predicate(comp.table)
        if not ok:
            witnesses.append((label, idx, w))
    return _report(
        check_id,
        "violated" if witnesses else "verified",
        witnesses,
        applicable=1,
        components=len(d.components),
    )


def verify_cancellative_components(s: CayleyTable) -> VerificationReport:
    """Separative tables must decompose into cancellative components."""
    if not is_separative(s)[0]:
        return _report("c12", "not-applicable", skipped=1)
    return _component_check(s, "c12", is_cancellative, "component_not_cancellative")


def verify_weakly_cancellative_components(s: CayleyTable) -> VerificationReport:
    """Quasi-separative weakly balanced tables must decompose into
    weakly cancellative components."""
    if not (is_quasi_separative(s)[0] and is_weakly_balanced(s)[0]):
        return _report("c15", "not-applicable", skipped=1)
    return _component_check(
        s, "c15", is_weakly_cancellative, "component_not_weakly_cancellative"
    )


def verify_square_descent_claim(s: CayleyTable) -> VerificationReport:
    """Any table that decomposes into a semilattice of weakly
    cancellative components must satisfy square descent."""
    try:
        d = decompose(s)
    except NotACongruence:
        return _report("square-descent", "not-applicable", skipped=1)
    if not d.quotient_is_semilattice or any(c is None for c in d.components):
        return _report("square-descent", "not-applicable", skipped=1)
    if not all(is_weakly_cancellative(c.table)[0] for c in d.components):
        return _report("square-descent", "not-applicable", skipped=1)
    ok, w = has_square_descent(s)
    witnesses = [] if ok else [("square_descent_fails", w)]
    return _report(
        "square-descent", "verified" if ok else "violated", witnesses, applicable=1
    )


DIAGRAM_IMPLICATIONS = (
    (
        "separative->qs+wb",
        lambda p: p.separative,
        lambda p: p.quasi_separative and p.weakly_balanced,
    ),
    (
        "qs+wb->qs",
        lambda p: p.quasi_separative and p.weakly_balanced,
        lambda p: p.quasi_separative,
    ),
    (
        "cancellative->weakly_cancellative",
        lambda p: p.cancellative,
        lambda p: p.weakly_cancellative,
    ),
    (
        "weakly_cancellative->qs+qc",
        lambda p: p.weakly_cancellative,
        lambda p: p.quasi_separative and p.quasi_cancellative,
    ),
    (
        "cancellative->separative",
        lambda p: p.cancellative,
        lambda p: p.separative,
    ),
    (
        "qs+qc->qs",
        lambda p: p.quasi_separative and p.quasi_cancellative,
        lambda p: p.quasi_separative,
    ),
)


def diagram_report(profile: PropertyProfile) -> VerificationReport:
    """Check all six diagram implications on one classification profile.
    Implications whose hypothesis fails are skipped, not counted as
    verified."""
    witnesses = []
    counts = {"tables": 1}
    applicable = 0
    for name, hyp, concl in DIAGRAM_IMPLICATIONS:
        if hyp(profile):
            applicable += 1
            counts[name] = 1
            if not concl(profile):
                witnesses.append((name,))
    if applicable == 0:
        return _report("diagram", "not-applicable", skipped=1, tables=1)
    verdict = "violated" if witnesses else "verified"
    return _report("diagram", verdict, witnesses, applicable=1, **counts)


def verify_table_diagram(s: CayleyTable) -> VerificationReport:
    return diagram_report(classify(s))


def strictness_witnesses() -> list[tuple[str, str, bool]]:
    """The named instances separating the diagram boxes, re-verified
    live.  Each entry is (instance, separation claim, claim holds)."""
    out = []
    p = classify(zoo.left_zero(2))
    out.append(
        (
            "left_zero(2)",
            "weakly cancellative but not separative",
            p.weakly_cancellative and not p.separative,
        )
    )
    p = classify(zoo.chain_semilattice(2))
    out.append(
        (
            "chain_semilattice(2)",
            "separative but not quasi-cancellative",
            p.separative and not p.quasi_cancellative,
        )
    )
    p = classify(zoo.null_semigroup(2))
    out.append(
        (
            "null_semigroup(2)",
            "weakly balanced but not quasi-separative",
            p.weakly_balanced and not p.quasi_separative,
        )
    )
    w = zoo.bicyclic_weakly_balanced_witness()
    out.append(
        (
            "bicyclic monoid",
            "balance premise holds yet its conclusion fails",
            w.premise_holds and not w.conclusion_holds,
        )
    )
    return out


CHECKS = {
    "t4": verify_congruence_construction,
    "t6": verify_semilattice_decomposition,
    "p7": verify_class_separation,
    "p11": verify_separative_cancellation,
    "p14": verify_balanced_cancellation,
    "c12": verify_cancellative_components,
    "c15": verify_weakly_cancellative_components,
    "square-descent": verify_square_descent_claim,
    "diagram": verify_table_diagram,
}

CHECK_IDS = tuple(CHECKS)

_ALIASES = {"t10": "t6"}

_WITNESS_CAP = 5


def normalize_check_id(name: str) -> str:
    name = _ALIASES.get(name, name)
    if name not in CHECKS and name != "all":
        raise ValueError(f"unknown check {name!r}; choose from {', '.join(CHECK_IDS)} or 'all'")
    return name


def merge_reports(reports: Sequence[VerificationReport]) -> VerificationReport:
    """Fold per-table reports for one check into an aggregate.  Merging
    is associative, so any chunking of the corpus yields the same
    result."""
    check = reports[0].check
    verdict = "not-applicable"
    witnesses: list = []
    counts: dict[str, int] = {}
    for r in reports:
        if r.check != check:
            raise ValueError("cannot merge reports for different checks")
        if r.verdict == "violated":
            verdict = "violated"
        elif r.verdict == "verified" and verdict != "violated":
            verdict = "verified"
        if len(witnesses) < _WITNESS_CAP:
            witnesses.extend(r.witnesses[: _WITNESS_CAP - len(witnesses)])
        for k, v in r.counts:
            counts[k] = counts.get(k, 0) + v
    return VerificationReport(
        check, verdict, tuple(witnesses), tuple(sorted(counts.items()))
    )


def _run_chunk(payload):
    ids, grids = payload
    collected = {check_id: [] for check_id in ids}
    for grid in grids:
        s = CayleyTable(grid)
        for check_id in ids:
            r = CHECKS[check_id](s)
            if r.witnesses:
                # tag witnesses with their table so aggregated reports
                # stay re-checkable
                r = VerificationReport(
                    r.check,
                    r.verdict,
                    tuple((grid, w) for w in r.witnesses),
                    r.counts,
                )
            collected[check_id].append(r)
    return {
        check_id: merge_reports(reports) if reports else None
        for check_id, reports in collected.items()
    }


def _chunked(seq, size):
    for i in range(0, len(seq), size):
        yield seq[i : i + size]


def run_checks(
    tables: Iterable[CayleyTable], ids: Sequence[str], workers: int = 1
) -> list[VerificationReport]:
    """Run the named checks over the tables and aggregate one report per
    check.  With workers > 1 the tables are processed in order-preserving
    chunks, so the output is identical to a single-worker run."""
    grids = [t.rows for t in tables]
    ids = list(ids)
    if not grids:
        return [_report(i, "not-applicable") for i in ids]
    if workers <= 1:
        partials = [_run_chunk((ids, grids))]
    else:
        size = max(1, (len(grids) + workers - 1) // workers)
        payloads = [(ids, chunk) for chunk in _chunked(grids, size)]
        with multiprocessing.Pool(workers) as pool:
            partials = pool.map(_run_chunk, payloads)
    out = []
    for check_id in ids:
        parts = [p[check_id] for p in partials if p[check_id] is not None]
        out.append(merge_reports(parts))
    return out


def format_report(r: VerificationReport) -> str:
    head = f"{r.check}: {r.verdict}"
    if r.counts:
        head += " (" + ", ".join(f"{k}={v}" for k, v in r.counts) + ")"
    lines = [head]
    lines.extend(f"  witness: {w}" for w in r.witnesses[:_WITNESS_CAP])
    return "\n".join(lines)


def _cor15_converse_candidate(s: CayleyTable) -> bool:
    if not is_quasi_separative(s)[0]:
        return False
    if is_weakly_balanced(s)[0]:
        return False
    d = decompose(s)
    if not d.quotient_is_semilattice:
        return False
    return all(
        c is not None and is_weakly_cancellative(c.table)[0] for c in d.components
    )


def _candidate_worker(grids):
    return [_cor15_converse_candidate(CayleyTable(g)) for g in grids]


def search_cor15_converse(
    max_order: int, workers: int = 1
) -> Optional[CayleyTable]:
    """Scan canonical tables of order 1..max_order for a quasi-separative
    table that decomposes into weakly cancellative components yet is not
    weakly balanced.  Returns the first hit in scan order, or None when
    the range is exhausted.  The outcome is reported neutrally: finding
    a table and finding none are both valid results.
    """
    if not 1 <= max_order <= MAX_ORDER:
        raise OrderTooLarge(max_order)
    for n in range(1, max_order + 1):
        stream = enumerate_canonical(n, "iso_anti")
        if workers <= 1:
            for s in stream:
                if _cor15_converse_candidate(s):
                    return s
        else:
            tables = list(stream)
            grids = [t.rows for t in tables]
            size = max(1, (len(grids) + workers - 1) // workers)
            chunks = list(_chunked(grids, size))
            with multiprocessing.Pool(workers) as pool:
                flags = pool.map(_candidate_worker, chunks)
            offset = 0
            for chunk, chunk_flags in zip(chunks, flags):
                for i, hit in enumerate(chunk_flags):
                    if hit:
                        return tables[offset + i]
                offset += len(chunk)
    return None
