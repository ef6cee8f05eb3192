"""Command line front end.

Exit codes: 0 success (everything holds), 1 a property is false or a
theorem is violated, 2 usage, parse or validation errors.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .autotopy import Triple, autotopism_group
from .core import Perm, format_rows, format_table, load_table
from .enumeration import enumerate_loops
from .errors import LoopError, UnknownProperty
from .isotopy import isotope, normalize_to_loop, principal_isotope
from .props import PROPERTIES, check_property
from .registry import any_violated, theorem_ids, verify_all, verify_many

EXIT_OK, EXIT_FALSE, EXIT_USAGE = 0, 1, 2


def _names(spec):
    if not spec:
        return []
    names = [s.strip() for s in spec.split(",") if s.strip()]
    for name in names:
        if name not in PROPERTIES:
            raise UnknownProperty(f"unknown property {name!r}; known: {', '.join(PROPERTIES)}")
    return names


def _csv(values):
    return ",".join(str(v) for v in values)


def _table_record(n, rows):
    return ";".join([str(n)] + [_csv(r) for r in rows])


def cmd_check(args, out):
    L = load_table(args.file)
    names = _names(args.props) or list(PROPERTIES)
    ok = True
    for name in names:
        res = check_property(L, name)
        ok &= res.holds
        if args.machine:
            rec = f"property={name} holds={str(res.holds).lower()}"
            if res.witness is not None:
                rec += f" witness={_csv(res.witness)}"
            print(rec, file=out)
        elif res.holds:
            print(f"{name}: true", file=out)
        else:
            print(f"{name}: false (witness {_csv(res.witness)})", file=out)
    return EXIT_OK if ok else EXIT_FALSE


def cmd_enumerate(args, out):
    filters = [PROPERTIES[name] for name in _names(args.filter)]
    preds = [lambda L, f=f: bool(f(L)) for f in filters]
    outdir = None
    if args.out is not None:
        outdir = Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
    count = 0
    for L in enumerate_loops(args.n, preds, force=args.force_order):
        if outdir is not None:
            (outdir / f"{count:06d}.txt").write_text(format_table(L, [L.label]), encoding="ascii")
        count += 1
    if args.machine:
        print(f"n={args.n} count={count}", file=out)
    else:
        print(count, file=out)
    return EXIT_OK


def cmd_verify(args, out):
    if args.theorem == "all":
        reports = verify_all(args.max_order)
    else:
        reports = verify_many([args.theorem], args.max_order)
    for rep in reports:
        if args.machine:
            print("\n".join(rep.to_records()), file=out)
        elif args.theorem == "all" and rep.verdict != "violated":
            print(rep.summary_line(), file=out)
        else:
            print(rep.to_text(), file=out)
    return EXIT_FALSE if any_violated(reports) else EXIT_OK


def cmd_autotopisms(args, out):
    L = load_table(args.file)
    cap = max(L.n, 8) if args.force_order else 8
    for t in autotopism_group(L, cap=cap):
        if args.machine:
            print(f"U={t.U} V={t.V} W={t.W}", file=out)
        else:
            print(f"{t.U} {t.V} {t.W}", file=out)
    return EXIT_OK


def cmd_isotope(args, out):
    L = load_table(args.file)
    if args.principal is not None:
        a, b = args.principal
        Q = principal_isotope(L, a, b)
    else:
        U, V, W = (Perm.from_spec(s, L.n) for s in args.triple)
        Q = isotope(L, Triple(U, V, W))
    H = None if args.no_normalize else normalize_to_loop(Q)
    if H is not None:
        text = format_table(H, [Q.origin])
        n, rows = H.n, H.rows
    else:
        text = format_rows(Q.n, Q.rows, [Q.origin])
        n, rows = Q.n, Q.rows
    if args.out is not None:
        Path(args.out).write_text(text, encoding="ascii")
    if args.machine:
        ident = Q.identity_element()
        print(
            f"identity={'none' if ident is None else ident} normalized={str(H is not None).lower()} "
            f"table={_table_record(n, rows)}",
            file=out,
        )
    elif args.out is None:
        out.write(text)
    return EXIT_OK


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--machine", action="store_true", help="key=value records, one per line")

    parser = argparse.ArgumentParser(prog="cloops", description="Tools for finite loops given as Cayley tables.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="evaluate identities and properties of a table")
    p.add_argument("file")
    p.add_argument("--props", default="", help=f"comma separated, from: {', '.join(PROPERTIES)}")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("enumerate", parents=[common], help="generate all loops of order n")
    p.add_argument("n", type=int)
    p.add_argument("--filter", default="", help="comma separated property names, all must hold")
    p.add_argument("--count", action="store_true", help="only print the count (the default without --out)")
    p.add_argument("--out", help="directory for one table file per loop")
    p.add_argument("--force-order", action="store_true", help="allow orders above the enumeration cap")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", parents=[common], help="check registered results on all small loops")
    p.add_argument("theorem", help=f"'all' or one of: {', '.join(theorem_ids())}")
    p.add_argument("--max-order", type=int, default=5)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("autotopisms", parents=[common], help="list the autotopism group")
    p.add_argument("file")
    p.add_argument("--force-order", action="store_true")
    p.set_defaults(func=cmd_autotopisms)

    p = sub.add_parser("isotope", parents=[common], help="build an isotope of a table")
    p.add_argument("file")
    how = p.add_mutually_exclusive_group(required=True)
    how.add_argument("--principal", nargs=2, type=int, metavar=("A", "B"))
    how.add_argument("--triple", nargs=3, metavar=("U", "V", "W"), help='image lists such as "1,0,2"')
    p.add_argument("--out")
    p.add_argument("--no-normalize", action="store_true")
    p.set_defaults(func=cmd_isotope)
    return parser


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    if args.command == "enumerate" and args.count and args.out:
        build_parser().error("--count and --out are mutually exclusive")
    try:
        return args.func(args, out)
    except (LoopError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
