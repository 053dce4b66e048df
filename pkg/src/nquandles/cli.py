"""Command line front end.

Three subcommands.  ``enumerate`` builds the finite quandle of one
presentation and reports size, orbit structure, and verification.
``verify-catalog`` sweeps the bundled cardinality table and compares
every enumerated size against its recorded value.  ``convert`` turns a
closed braid word or a diagram file into a generator presentation (or a
diagram file).

Exit codes: 0 success, 1 bad input or I/O failure, 2 usage error,
3 verification or catalog mismatch, 4 enumeration cap exceeded.

Output is deterministic for a fixed command line; the single exception
is the line emitted by ``--timing``, which begins with ``time:`` so it
can be filtered out when comparing runs.
"""

from __future__ import annotations

import argparse
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .catalog import CatalogCheck, CatalogError, catalog, iter_checks
from .enumerator import (
    DEFAULT_MAX_STEPS,
    DEFAULT_MAX_VERTICES,
    EnumerationLimits,
    enumerate_quandle,
)
from .presentations import (
    DiagramError,
    ParseError,
    Presentation,
    PresentationError,
    augment_n,
    builtin_family,
    closed_braid_diagram,
    parse_diagram,
    parse_presentation,
    print_diagram,
    print_presentation,
    wirtinger,
)
from .quandle import export_dot, export_json, orbits, verify_all, verify_axioms


def _n_tuple(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad N list {text!r}, expected e.g. 2,3")
    if not values or any(n < 1 for n in values):
        raise argparse.ArgumentTypeError("N values must be positive integers")
    return values


def _braid_word(text: str) -> tuple[int, ...]:
    try:
        letters = tuple(int(part) for part in text.replace(",", " ").split())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad braid word {text!r}, expected e.g. 1,1,-2")
    if not letters:
        raise argparse.ArgumentTypeError("empty braid word")
    return letters


def _int_range(text: str) -> range:
    """"a:b" as an inclusive range; a bare integer is a single value."""
    lo, sep, hi = text.partition(":")
    try:
        if not sep:
            k = int(text)
            return range(k, k + 1)
        return range(int(lo), int(hi) + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}, expected e.g. -6:6")


def _load_presentation(args: argparse.Namespace) -> Presentation:
    if args.family is not None:
        return builtin_family(args.family, k=args.k)
    if args.k is not None:
        raise PresentationError("--k only applies to --family")
    if args.file is not None:
        return parse_presentation(Path(args.file).read_text())
    return wirtinger(parse_diagram(Path(args.diagram).read_text()))


def _write_or_print(text: str, path: str | None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)
        print(f"wrote {path}")


def cmd_enumerate(args: argparse.Namespace) -> int:
    t0 = time.monotonic()
    p = _load_presentation(args)
    if args.N is not None:
        p = augment_n(p, args.N)
    if p.n_values is None:
        print("error: presentation has no N values; pass --N", file=sys.stderr)
        return 1
    limits = EnumerationLimits(max_vertices=args.max_vertices,
                               max_steps=args.max_steps)
    outcome = enumerate_quandle(p, limits)
    if not outcome.finite:
        cap = (limits.max_vertices if outcome.cap_kind == "vertices"
               else limits.max_steps)
        print(f"exceeded {outcome.cap_kind} cap ({cap}); "
              f"{outcome.vertices} vertices created before the stop")
        return 4

    q = outcome.quandle
    part = orbits(q)
    shown = ", ".join(str(s) for s in sorted(part.sizes(), reverse=True))
    print(f"elements: {q.size}")
    print(f"N: {','.join(str(n) for n in q.n_values)}")
    print(f"orbits: {part.orbit_count} (sizes: {shown})")
    for oid in range(part.orbit_count):
        gens = [name for j, name in enumerate(q.generator_names)
                if part.orbit_of[q.generator_element[j]] == oid]
        names = " ".join(gens) if gens else "-"
        print(f"  orbit {oid}: size {len(part.members(oid))}, generators {names}")

    if args.verify != "none":
        report = verify_axioms(q) if args.verify == "axioms" else verify_all(q)
        if report:
            print(f"verify {args.verify}: ok")
        else:
            print(f"verify {args.verify}: FAILED")
            for failure in report.failures:
                print(f"  {failure}")
            return 3

    if args.dot is not None:
        _write_or_print(export_dot(q), args.dot)
    if args.json is not None:
        _write_or_print(export_json(q), args.json)
    if args.timing:
        print(f"time: {time.monotonic() - t0:.2f}s")
    return 0


def _run_check(check: CatalogCheck) -> tuple[bool, str]:
    """Top level so worker processes can unpickle it."""
    outcome = enumerate_quandle(check.presentation)
    if not outcome.finite:
        return False, f"exceeded {outcome.cap_kind} cap"
    return outcome.vertices == check.expected, str(outcome.vertices)


def cmd_verify_catalog(args: argparse.Namespace) -> int:
    t0 = time.monotonic()
    known = {entry.row_id for entry in catalog()}
    wanted = None
    if args.rows is not None:
        wanted = [r.strip() for r in args.rows.split(",") if r.strip()]
        for row_id in wanted:
            if row_id not in known:
                raise CatalogError(f"no catalog row {row_id!r}")
    checks = [c for c in iter_checks(k_values=args.k_range, n_values=args.n_range)
              if wanted is None or c.row_id in wanted]
    if not checks:
        print("no checks selected")
        return 1

    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_run_check, checks, chunksize=1))
    else:
        results = [_run_check(c) for c in checks]

    failed = 0
    for check, (ok, got) in zip(checks, results):
        if ok:
            print(f"ok   {check.row_id} {check.label}: {got}")
        else:
            failed += 1
            print(f"FAIL {check.row_id} {check.label}: want {check.expected} got {got}")
    print(f"checks: {len(checks)} total, {len(checks) - failed} ok, {failed} failed")
    if args.timing:
        print(f"time: {time.monotonic() - t0:.2f}s")
    return 3 if failed else 0


def cmd_convert(args: argparse.Namespace) -> int:
    if args.braid is not None:
        if args.strands is None:
            print("error: --braid needs --strands", file=sys.stderr)
            return 1
        diagram = closed_braid_diagram(args.braid, args.strands)
    else:
        diagram = parse_diagram(Path(args.diagram).read_text())

    if args.to == "diagram":
        if args.N is not None:
            print("error: --N only applies to presentation output", file=sys.stderr)
            return 1
        _write_or_print(print_diagram(diagram), args.output)
        return 0
    p = wirtinger(diagram)
    if args.N is not None:
        p = augment_n(p, args.N)
    _write_or_print(print_presentation(p), args.output)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nquandles",
        description="Enumerate and verify finite N-quandles of knots and links.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    enum = sub.add_parser(
        "enumerate",
        help="build the finite quandle of one presentation",
    )
    source = enum.add_mutually_exclusive_group(required=True)
    source.add_argument("--family", help="builtin family name, e.g. T24, Lk, Mk")
    source.add_argument("--file", help="presentation text file")
    source.add_argument("--diagram", help="diagram file (JSON lines)")
    enum.add_argument("--k", type=int, default=None,
                      help="parameter for T2k, Lk, Mk")
    enum.add_argument("--N", type=_n_tuple, default=None, metavar="N1,N2,...",
                      help="orders, one per link component")
    enum.add_argument("--max-vertices", type=int, default=DEFAULT_MAX_VERTICES)
    enum.add_argument("--max-steps", type=int, default=DEFAULT_MAX_STEPS)
    enum.add_argument("--verify", choices=("none", "axioms", "full"),
                      default="axioms",
                      help="post-enumeration checks (default: axioms)")
    enum.add_argument("--dot", default=None, metavar="PATH",
                      help="write the Cayley graph in DOT format")
    enum.add_argument("--json", default=None, metavar="PATH",
                      help="write the full structure as JSON")
    enum.add_argument("--timing", action="store_true")
    enum.set_defaults(func=cmd_enumerate)

    vc = sub.add_parser(
        "verify-catalog",
        help="enumerate every catalog row and compare cardinalities",
    )
    vc.add_argument("--rows", default=None,
                    help="comma separated row ids (default: all in-scope rows)")
    vc.add_argument("--k-range", type=_int_range, default=range(-6, 7),
                    metavar="A:B", help="k sweep for parameterized rows")
    vc.add_argument("--n-range", type=_int_range, default=range(2, 6),
                    metavar="A:B", help="n sweep for axis components")
    vc.add_argument("--jobs", type=int, default=1,
                    help="worker processes (default: 1)")
    vc.add_argument("--timing", action="store_true")
    vc.set_defaults(func=cmd_verify_catalog)

    conv = sub.add_parser(
        "convert",
        help="braid word or diagram -> presentation or diagram file",
    )
    csource = conv.add_mutually_exclusive_group(required=True)
    csource.add_argument("--braid", type=_braid_word, metavar="W1,W2,...",
                         help="closed braid word, e.g. 1,1,1")
    csource.add_argument("--diagram", help="diagram file (JSON lines)")
    conv.add_argument("--strands", type=int, default=None)
    conv.add_argument("--to", choices=("presentation", "diagram"),
                      default="presentation")
    conv.add_argument("--N", type=_n_tuple, default=None, metavar="N1,N2,...",
                      help="orders to attach to the presentation")
    conv.add_argument("-o", "--output", default=None, metavar="PATH")
    conv.set_defaults(func=cmd_convert)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, PresentationError, DiagramError, CatalogError) as exc:
        # CatalogError is a KeyError; str() of those keeps the quotes.
        message = exc.args[0] if exc.args else str(exc)
        print(f"error: {message}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
