"""Command-line entry point.

Exit codes: 0 ok, 2 parse error, 3 invalid input, 4 failed certificate.
"""

import argparse
import json
import logging
import math
import random
import sys

from . import documents
from .bers import LedgerEvent, bers_bound, random_events, run_ledger
from .collars import certify_disjoint
from .errors import GeometryError, InvalidEventError
from .render import KIND_ARITY, render
from .surface import Signature, validate_surface
from .verify import run_oracle_suite

EXIT_OK, EXIT_PARSE, EXIT_INVALID, EXIT_CERT = 0, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_PARSE)


def _load_valid(path, out):
    """Parsed and validated surface, or an exit code."""
    try:
        s = documents.load_surface(path)
    except documents.DocumentError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return None, EXIT_PARSE
    report = validate_surface(s)
    if not report.passed:
        print("invalid surface:", file=out)
        print(report, file=out)
        return None, EXIT_INVALID
    return s, EXIT_OK


def _write_json(path, obj):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(obj, fh, indent=2)
        fh.write("\n")


def cmd_widths(args, out):
    s, code = _load_valid(args.surface, out)
    if s is None:
        return code
    table = documents.widths_table(s)
    phi_max = table["phi_max"]
    print(f"phi_max = {phi_max!r}" if phi_max is not None else "phi_max = none (no cone points)",
          file=out)
    print(f"{'curve':<12} {'length':>22} {'w':>22}", file=out)
    for row in table["geodesic"]:
        print(f"{row['id']:<12} {row['length']!r:>22} {row['width']!r:>22}", file=out)
    print(f"{'cone':<12} {'angle 2phi':>22} {'v':>22}", file=out)
    for row in table["cone"]:
        print(f"{'cone:' + str(row['index']):<12} {row['cone_angle']!r:>22} {row['width']!r:>22}",
              file=out)
    if args.json:
        _write_json(args.json, table)
    return EXIT_OK


def cmd_certify(args, out):
    s, code = _load_valid(args.surface, out)
    if s is None:
        return code
    cert = certify_disjoint(s)
    print(f"{'pants':>5}  {'kind':<18} {'pair':<24} {'lhs':>20} {'rhs':>20} {'margin':>12}",
          file=out)
    for r in cert.records:
        pair = " ".join(r.pair)
        print(f"{r.pants:>5}  {r.kind:<18} {pair:<24} {r.lhs:>20.15g} {r.rhs:>20.15g} "
              f"{r.margin:>12.4e}{'' if r.passed else '  FAIL'}", file=out)
    for r in cert.warnings():
        print(f"warning: near-degenerate margin {r.margin:.3e} in pants {r.pants} "
              f"({r.kind} {' '.join(r.pair)})", file=out)
    for r in cert.unresolved():
        print(f"warning: margin {r.margin:.3e} in pants {r.pants} ({r.kind} {' '.join(r.pair)}) "
              "is below double-precision resolution", file=out)
    print(f"certificate: {'PASS' if cert.passed else 'FAIL'}", file=out)
    if args.json:
        _write_json(args.json, documents.certificate_to_doc(s, cert))
    return EXIT_OK if cert.passed else EXIT_CERT


def _read_events(path, sig, seed):
    if path == "random":
        return random_events(sig, random.Random(seed))
    with open(path, encoding="utf-8") as fh:
        raw = json.load(fh)
    if isinstance(raw, dict):
        raw = raw["events"]
    return [LedgerEvent.from_dict(e) for e in raw]


def cmd_bers(args, out):
    sig = Signature(args.genus, args.n)
    if not sig.admissible:
        print(f"signature ({args.genus}, {args.n}) is not admissible: need (g, n) >= (0, 4) "
              "and (g, n) != (1, 0)", file=out)
        return EXIT_INVALID
    total = bers_bound(sig)
    print(f"L({sig.genus},{sig.n}) < 4 pi (3g-3+n)(2g-2+n) = {total / math.pi:g} pi = {total!r}",
          file=out)
    if args.ledger is None:
        m = 3 * sig.genus - 3 + sig.n
        print(f"{'k':>3}  {'4 pi k (2g-2+n)':>22}", file=out)
        for k in range(1, m + 1):
            print(f"{k:>3}  {4.0 * math.pi * k * sig.euler!r:>22}", file=out)
        return EXIT_OK
    try:
        events = _read_events(args.ledger, sig, args.seed)
        ledger = run_ledger(sig, events)
    except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, (InvalidEventError, GeometryError)):
            print(f"invalid ledger: {exc}", file=out)
            return EXIT_INVALID
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except AssertionError as exc:
        print(f"ledger bound violated: {exc}", file=out)
        return EXIT_CERT
    print(f"{'step':>4}  {'event':<24} {'boundary bound':>20} {'envelope 4pi j':>20}  new curves",
          file=out)
    for r in ledger.records:
        ev = r.event.kind.value + (f" {list(r.event.cones)}" if r.event.cones else "")
        if r.event.curve is not None:
            ev += f" c{r.event.curve}"
        news = ", ".join(f"c{k} < {ledger.curve_bounds[k]:.6g}" for k in r.new_curves)
        if r.merged:
            news += " (merged)"
        print(f"{r.step:>4}  {ev:<24} {r.boundary_bound:>20.6f} "
              f"{ledger.boundary_envelope(r.step):>20.6f}  {news}", file=out)
    print(f"{'k':>3}  {'bound':>20} {'4 pi k (2g-2+n)':>20}", file=out)
    for k, b in enumerate(sorted(ledger.curve_bounds), 1):
        print(f"{k:>3}  {b:>20.6f} {ledger.envelope(k):>20.6f}", file=out)
    if args.json:
        _write_json(args.json, ledger.to_dict())
    return EXIT_OK


def cmd_render(args, out):
    arity = KIND_ARITY[args.kind]
    if len(args.params) != arity:
        print(f"parse error: {args.kind} takes {arity} parameters", file=sys.stderr)
        return EXIT_PARSE
    try:
        svg = render(args.kind, args.params)
    except GeometryError as exc:
        print(f"invalid {args.kind} data: {exc}", file=out)
        return EXIT_INVALID
    with open(args.svg, "w", encoding="utf-8") as fh:
        fh.write(svg)
    print(f"wrote {args.svg}", file=out)
    return EXIT_OK


def cmd_verify(args, out):
    print(f"oracle equivalence, seed {args.seed}, {args.count} instances per family", file=out)
    reports = run_oracle_suite(args.seed, args.count)
    for r in reports:
        print(r.line(), file=out)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_CERT


def build_parser():
    p = _Parser(prog="conecollar", description="Collars and partition bounds on cone-surfaces.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    w = sub.add_parser("widths", help="collar widths for a surface document")
    w.add_argument("surface")
    w.add_argument("--json", metavar="OUT")
    w.set_defaults(func=cmd_widths)

    c = sub.add_parser("certify", help="check that all collars are pairwise disjoint")
    c.add_argument("surface")
    c.add_argument("--json", metavar="OUT")
    c.set_defaults(func=cmd_certify)

    b = sub.add_parser("bers", help="partition length bounds for signature (g, n)")
    b.add_argument("genus", type=int)
    b.add_argument("n", type=int)
    b.add_argument("--ledger", metavar="EVENTS",
                   help="JSON list of events, or 'random' for a random legal sequence")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--json", metavar="OUT")
    b.set_defaults(func=cmd_bers)

    r = sub.add_parser("render", help="SVG figure in the Poincare disk")
    r.add_argument("kind", choices=sorted(KIND_ARITY))
    r.add_argument("params", type=float, nargs="+")
    r.add_argument("--svg", metavar="OUT", required=True)
    r.set_defaults(func=cmd_render)

    v = sub.add_parser("verify", help="closed forms against half-plane constructions")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--count", type=int, default=1000)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None, out=None):
    logging.basicConfig(level=logging.ERROR, format="%(levelname)s %(name)s: %(message)s")
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_PARSE
    return args.func(args, out)


if __name__ == "__main__":
    sys.exit(main())
