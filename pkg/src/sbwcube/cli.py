"""Command line entry point: ``sbwcube <command> ...``.

Exit codes: 0 success / verdict yes, 1 verdict no, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import census
from .complexes import boundary_complex, build_cubed_complex, build_squared_complex
from .diagram import PDCodeError, diagram_from_pd_text, extract_sbw, format_pd, reconstruct_diagram
from .homology import DisconnectedComplexError, first_homology, fundamental_group_presentation
from .sbw import InvalidSpecError, criterion_check, format_spec, isomorphic, parse_spec

EXIT_YES, EXIT_NO, EXIT_INVALID = 0, 1, 2


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="ascii") as fh:
        return fh.read()


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def cmd_check(args) -> int:
    report = criterion_check(parse_spec(_read(args.spec)))
    if args.json:
        sys.stdout.write(_dump({"format": "sbw-check", "version": 1, **report.as_dict()}))
    else:
        print(report.line())
    return EXIT_YES if report.verdict else EXIT_NO


def cmd_build(args) -> int:
    spec = parse_spec(_read(args.spec))
    c2 = build_squared_complex(spec)
    c = c2 if args.dim == 2 else build_cubed_complex(spec)
    out = c.as_dict()
    if args.dim == 3:
        out["boundary"] = [b.as_dict() for b in boundary_complex(c)]
    if args.homology:
        try:
            pres = fundamental_group_presentation(c2)
        except DisconnectedComplexError:
            out["homology"] = None
        else:
            rank, torsion = first_homology(pres)
            out["pi1"] = pres.as_dict()
            out["homology"] = {"rank": rank, "torsion": list(torsion)}
    sys.stdout.write(_dump(out))
    return EXIT_YES


def cmd_from_pd(args) -> int:
    spec = extract_sbw(diagram_from_pd_text(_read(args.pd)))
    sys.stdout.write(format_spec(spec))
    return EXIT_YES


def cmd_reconstruct(args) -> int:
    rec = reconstruct_diagram(parse_spec(_read(args.spec)))
    if rec.pd is not None and not args.json:
        sys.stdout.write(format_pd(rec.pd))
        return EXIT_YES
    sys.stdout.write(_dump(rec.as_dict()))
    if rec.pd is None:
        genus = ",".join(map(str, rec.surface.genera))
        print(f"genus > 0: no PD code (genus {genus}, {rec.surface.components} component(s))",
              file=sys.stderr)
        return EXIT_NO
    return EXIT_YES


def cmd_census(args) -> int:
    if args.raw:
        row = census.raw_report(args.n, override=args.force)
    else:
        row = census.census_report(args.n, override=args.force)
    if args.json:
        sys.stdout.write(_dump({"format": "sbw-census", "version": 1, **row.as_dict()}))
    else:
        sys.stdout.write(census.format_table(row))
    return EXIT_YES


def cmd_isomorphic(args) -> int:
    a = parse_spec(_read(args.a))
    b = parse_spec(_read(args.b))
    same = isomorphic(a, b)
    print("isomorphic" if same else "not isomorphic")
    return EXIT_YES if same else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sbwcube", description="Signed BW cubed complexes and alternating links.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", help="test the orbit-count criterion")
    s.add_argument("spec")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("build", help="emit C2 or C3 as JSON")
    s.add_argument("spec")
    s.add_argument("--dim", type=int, choices=(2, 3), default=2)
    s.add_argument("--homology", action="store_true", help="add pi1 presentation and H1 of C2")
    s.set_defaults(func=cmd_build)

    s = sub.add_parser("from-pd", help="extract an SBW spec from a PD code")
    s.add_argument("pd")
    s.set_defaults(func=cmd_from_pd)

    s = sub.add_parser("reconstruct", help="rebuild the diagram of a spec")
    s.add_argument("spec")
    s.add_argument("--json", action="store_true", help="always emit the surface-diagram JSON")
    s.set_defaults(func=cmd_reconstruct)

    s = sub.add_parser("census", help="enumerate all specs on n squares")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--raw", action="store_true", help="one row per bijection")
    s.add_argument("--json", action="store_true")
    s.add_argument("--force", action="store_true", help="lift the size cap")
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("isomorphic", help="exit 0 iff two specs are isomorphic")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(func=cmd_isomorphic)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InvalidSpecError, PDCodeError, census.CensusCapError, OSError, UnicodeDecodeError) as exc:
        print(f"sbwcube: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
