"""Command-line surface.

Exit codes are a stable contract: 0 for success or a fully verified run,
1 when a verification run found violations or an analysis could not
complete (non-congruence), 2 for usage and input errors.
"""

from __future__ import annotations

import argparse
import re
import sys

from . import zoo
from .congruence import NotACongruence, induced_congruence
from .core import (
    CayleyTable,
    FormatError,
    NotAssociative,
    OutOfRangeEntry,
    format_table,
    parse_table,
)
from .decomposition import (
    CHECK_IDS,
    decompose,
    format_report,
    normalize_check_id,
    run_checks,
    search_cor15_converse,
    strictness_witnesses,
)
from .enumeration import MAX_ORDER, OrderTooLarge, enumerate_canonical, enumerate_labeled
from .properties import PROFILE_KEYS, classify, format_profile
from .relations import (
    BinaryRelation,
    canonical_relation,
    check_admissibility,
    format_relation,
    parse_relation,
)

_ZOO_FAMILIES = {
    "left_zero": (zoo.left_zero, 1),
    "right_zero": (zoo.right_zero, 1),
    "null": (zoo.null_semigroup, 1),
    "chain": (zoo.chain_semilattice, 1),
    "cyclic": (zoo.cyclic_group, 1),
    "monogenic": (zoo.monogenic, 2),
    "rectangular_band": (zoo.rectangular_band, 2),
}

_ZOO_SPEC = re.compile(r"^zoo:([a-z_]+?):?(\d+(?:,\d+)*)?$")


def _zoo_table(name: str, params: list[int]) -> CayleyTable:
    try:
        ctor, arity = _ZOO_FAMILIES[name]
    except KeyError:
        raise ValueError(
            f"unknown family {name!r}; choose from {', '.join(sorted(_ZOO_FAMILIES))}"
        ) from None
    if len(params) != arity:
        raise ValueError(f"family {name!r} takes {arity} parameter(s), got {len(params)}")
    return ctor(*params)


def load_table(spec: str) -> CayleyTable:
    """Resolve a table argument: '-' for stdin, 'zoo:<name><params>' for
    a built-in family, anything else as a file path."""
    if spec == "-":
        return parse_table(sys.stdin.read())
    if spec.startswith("zoo:"):
        m = _ZOO_SPEC.match(spec)
        if not m:
            raise ValueError(
                f"bad shorthand {spec!r}; expected zoo:<name>:<p>[,<q>] "
                f"with name in {', '.join(sorted(_ZOO_FAMILIES))}"
            )
        name, params = m.group(1), m.group(2)
        return _zoo_table(name, [int(p) for p in params.split(",")] if params else [])
    with open(spec, "r", encoding="ascii") as fh:
        return parse_table(fh.read())


def cmd_analyze(args) -> int:
    s = load_table(args.table)
    sys.stdout.write(f"n: {s.n}\n")
    sys.stdout.write(format_profile(classify(s)))
    return 0


def _quotient_dot(q: CayleyTable, classes) -> str:
    n = q.n
    less = [[q.rows[x][y] == x and x != y for y in range(n)] for x in range(n)]
    lines = ["digraph quotient {", "  rankdir=BT;"]
    for i, cls in enumerate(classes):
        label = "{" + ",".join(str(e) for e in cls) + "}"
        lines.append(f'  c{i} [label="{label}"];')
    for x in range(n):
        for y in range(n):
            if less[x][y] and not any(less[x][z] and less[z][y] for z in range(n)):
                lines.append(f"  c{x} -> c{y};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_decompose(args) -> int:
    s = load_table(args.table)
    try:
        d = decompose(s)
    except NotACongruence as exc:
        print(f"induced equivalence is not a congruence: {exc}", file=sys.stderr)
        return 1
    if args.dot:
        if not d.quotient_is_semilattice:
            print(
                "quotient is not a semilattice; there is no order to draw",
                file=sys.stderr,
            )
            return 1
        sys.stdout.write(_quotient_dot(d.quotient.quotient, d.congruence.classes))
        return 0
    out = sys.stdout
    out.write(f"n: {s.n}\n")
    out.write(f"classes: {len(d.congruence.classes)}\n")
    for i, cls in enumerate(d.congruence.classes):
        out.write(f"class {i}: {' '.join(str(e) for e in cls)}\n")
    out.write("quotient:\n")
    out.write(format_table(d.quotient.quotient))
    out.write(
        f"quotient_is_semilattice: {'true' if d.quotient_is_semilattice else 'false'}\n"
    )
    for i, comp in enumerate(d.components):
        if comp is None:
            out.write(f"component {i}: not closed under the product\n")
            continue
        out.write(f"component {i}: elements {' '.join(str(e) for e in comp.elements)}\n")
        out.write(format_table(comp.table))
        out.write(format_profile(classify(comp.table)))
    return 0


def cmd_verify(args) -> int:
    which = normalize_check_id(args.theorem)
    ids = list(CHECK_IDS) if which == "all" else [which]
    if args.corpus is not None:
        if not 1 <= args.corpus <= MAX_ORDER:
            raise OrderTooLarge(args.corpus)
        tables = list(enumerate_labeled(args.corpus))
    elif args.table is not None:
        tables = [load_table(args.table)]
    else:
        raise ValueError("verify needs a table argument or --corpus")
    reports = run_checks(tables, ids, workers=args.workers)
    for r in reports:
        print(format_report(r))
    if "diagram" in ids:
        print("strictness:")
        for name, claim, holds in strictness_witnesses():
            status = "confirmed" if holds else "FAILED"
            print(f"  {name}: {claim}: {status}")
    return 1 if any(r.verdict == "violated" for r in reports) else 0


def cmd_enumerate(args) -> int:
    if not 1 <= args.order <= MAX_ORDER:
        raise OrderTooLarge(args.order)
    if args.filter is not None and args.filter not in PROFILE_KEYS:
        raise ValueError(
            f"unknown property {args.filter!r}; choose from {', '.join(PROFILE_KEYS)}"
        )
    stream = (
        enumerate_canonical(args.order, args.mode)
        if args.canonical
        else enumerate_labeled(args.order)
    )
    if args.filter is not None:
        stream = (s for s in stream if getattr(classify(s), args.filter))
    count = 0
    for s in stream:
        count += 1
        if not args.count_only:
            sys.stdout.write(format_table(s))
            sys.stdout.write("\n")
    if args.count_only:
        print(count)
    return 0


def cmd_omega(args) -> int:
    s = load_table(args.table)
    spec = args.relation
    if spec is None or spec == "canonical":
        rel, source = canonical_relation(s), "canonical"
    elif spec in ("diagonal", "delta"):
        rel, source = BinaryRelation.diagonal(s.n), "diagonal"
    elif spec == "full":
        rel, source = BinaryRelation.full(s.n), "full"
    elif spec.startswith("file:"):
        path = spec[len("file:") :]
        with open(path, "r", encoding="ascii") as fh:
            rel, source = parse_relation(fh.read(), s.n), path
    else:
        raise ValueError(
            f"bad relation {spec!r}: use canonical, diagonal, full, or file:<path>"
        )
    print(f"# relation: {source} ({len(rel)} pairs over carrier {s.n})")
    sys.stdout.write(format_relation(rel))
    rep = check_admissibility(s, rel)
    for key, ok, witness in (
        ("balanced", rep.balanced, rep.balanced_witness),
        ("left_stable", rep.left_stable, rep.left_witness),
        ("right_stable", rep.right_stable, rep.right_witness),
    ):
        print(f"{key}: {'true' if ok else 'false'}")
        if not ok:
            print(f"{key}_witness: {' '.join(str(v) for v in witness)}")
    if rep.all_satisfied:
        cong = induced_congruence(s, rel)
        print(f"classes: {len(cong.classes)}")
        for i, cls in enumerate(cong.classes):
            print(f"class {i}: {' '.join(str(e) for e in cls)}")
    return 0


def cmd_zoo(args) -> int:
    sys.stdout.write(format_table(_zoo_table(args.name, args.params)))
    return 0


def cmd_search_converse(args) -> int:
    result = search_cor15_converse(args.max_order, workers=args.workers)
    if result is None:
        print(
            f"exhausted canonical tables through order {args.max_order}: "
            "no counterexample found"
        )
    else:
        print(
            f"counterexample found (order {result.n}): quasi-separative, "
            "decomposes into weakly cancellative components, not weakly balanced"
        )
        sys.stdout.write(format_table(result))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="finsemi",
        description="Finite semigroup analysis: classification, congruences, "
        "semilattice decomposition, and exhaustive small-order verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="classify a table across all supported classes")
    p.add_argument("table", help="file path, '-' for stdin, or zoo:<name><params>")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser(
        "decompose", help="congruence classes, quotient, and component tables"
    )
    p.add_argument("table")
    p.add_argument(
        "--dot",
        action="store_true",
        help="emit the quotient's covering relation as a DOT digraph",
    )
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="run structural verification checks")
    p.add_argument("table", nargs="?", help="single table to check")
    p.add_argument(
        "--corpus",
        type=int,
        metavar="N",
        help=f"check every labeled table of order N (N <= {MAX_ORDER})",
    )
    p.add_argument(
        "--theorem",
        default="all",
        help="check id: " + ", ".join(CHECK_IDS) + ", t10, or all",
    )
    p.add_argument("--workers", type=int, default=1, help="parallel worker count")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="stream all tables of a given order")
    p.add_argument("--order", type=int, required=True)
    p.add_argument(
        "--canonical",
        action="store_true",
        help="one representative per canonical class",
    )
    p.add_argument(
        "--mode",
        choices=("iso", "iso_anti"),
        default="iso_anti",
        help="canonicalization mode (with --canonical)",
    )
    p.add_argument("--filter", metavar="PROPERTY", help="keep tables with the property")
    p.add_argument("--count-only", action="store_true", help="print only the count")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser(
        "omega",
        help="inspect a relation's admissibility conditions on a table "
        "(default: the canonical relation)",
    )
    p.add_argument("table")
    p.add_argument(
        "--relation",
        help="canonical, diagonal, full, or file:<path> in the relation format",
    )
    p.set_defaults(func=cmd_omega)

    p = sub.add_parser("zoo", help="emit a built-in table in the text format")
    p.add_argument("name", help=", ".join(sorted(_ZOO_FAMILIES)))
    p.add_argument("params", type=int, nargs="*")
    p.set_defaults(func=cmd_zoo)

    p = sub.add_parser(
        "search-converse-c15",
        help="look for a quasi-separative, non-weakly-balanced table built "
        "from weakly cancellative components",
    )
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_search_converse)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (
        FormatError,
        OutOfRangeEntry,
        NotAssociative,
        OrderTooLarge,
        ValueError,
        OSError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
