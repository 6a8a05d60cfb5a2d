"""Command-line front end.

Exit codes: 0 ok, 2 usage error, 3 invalid spec, 4 size guard exceeded,
5 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .contraction import DEFAULT_TOL, check_gauge_invariance, check_unitary_invariance
from .counting import count_fixed, count_multi, count_table_fixed, count_table_multi_family, sci
from .errors import SpecError, TooLargeError
from .oracle import (
    ENV_MAX_SIGMA,
    catalog_to_graphs,
    catalog_to_json,
    count_orbits_bruteforce,
    count_orbits_burnside,
)
from .structures import ContractionSpec, to_dot

EXIT_OK, EXIT_USAGE, EXIT_SPEC, EXIT_SIZE, EXIT_FAIL = 0, 2, 3, 4, 5


class UsageError(Exception):
    pass


def parse_range(text: str) -> list[int]:
    """``'3'``, ``'1-8'`` or ``'1..8'`` -> inclusive list; may be empty."""
    for sep in ("..", "-"):
        if sep in text:
            lo, hi = text.split(sep, 1)
            try:
                return list(range(int(lo), int(hi) + 1))
            except ValueError:
                break
    try:
        return [int(text)]
    except ValueError:
        raise UsageError(f"cannot parse range {text!r}") from None


def load_spec(args) -> ContractionSpec:
    if getattr(args, "spec", None):
        try:
            text = Path(args.spec).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read spec file: {exc}") from exc
        return ContractionSpec.from_json(text)
    if getattr(args, "order", None) and getattr(args, "n", None):
        return ContractionSpec.fixed_order(args.order, args.n)
    raise UsageError("give --spec FILE, or --order D --n N for a single-type spec")


def _print_count(value: int) -> None:
    print(value)
    print(sci(value))


def cmd_count(args) -> int:
    if args.kind == "fixed":
        if args.order is None or args.n is None:
            raise UsageError("count fixed needs --order and --n")
        if args.order < 1 or args.n < 1:
            raise UsageError("--order and --n must be positive")
        _print_count(count_fixed(args.order, args.n))
    else:
        _print_count(count_multi(load_spec(args)))
    return EXIT_OK


def cmd_table(args) -> int:
    ds = parse_range(args.d)
    rows = parse_range(args.n if args.mode == "fixed" else args.s)
    if not ds or not rows:
        raise UsageError("empty range")
    if args.mode == "fixed":
        if ds[0] < 1 or rows[0] < 1:
            raise UsageError("orders and sizes must be positive")
        table = count_table_fixed(ds, rows)
    else:
        if rows[0] < 1:
            raise UsageError("s must be positive")
        table = count_table_multi_family(ds, rows)
    text = table.to_csv() if args.format == "csv" else json.dumps(table.to_dict(), indent=2) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    spec = load_spec(args)
    if args.what == "oracle":
        formula = count_multi(spec)
        burnside = count_orbits_burnside(spec, bound=args.max_sigma)
        brute = count_orbits_bruteforce(spec, bound=args.max_sigma).count
        ok = formula == burnside == brute
        report = {
            "spec_digest": spec.digest(),
            "formula": formula,
            "burnside": burnside,
            "bruteforce": brute,
            "pass": ok,
        }
    else:
        check = check_unitary_invariance if args.what == "unitary" else check_gauge_invariance
        rep = check(spec, args.dim, trials=args.trials, seed=args.seed, tol=args.tol)
        report = rep.to_dict()
        ok = rep.passed
    print(json.dumps(report, indent=2))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_enumerate(args) -> int:
    spec = load_spec(args)
    catalog = count_orbits_bruteforce(spec, bound=args.max_sigma)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    data = catalog_to_json(catalog)
    width = len(str(max(catalog.count - 1, 0)))
    files = []
    if args.format == "dot":
        for i, g in enumerate(catalog_to_graphs(catalog)):
            name = f"orbit_{i:0{width}d}.dot"
            (out / name).write_text(to_dot(g, name=f"orbit_{i}"))
            files.append(name)
    else:
        for orbit in data["orbits"]:
            name = f"orbit_{orbit['index']:0{width}d}.json"
            (out / name).write_text(json.dumps(orbit, indent=2) + "\n")
            files.append(name)
    manifest = {k: v for k, v in data.items() if k != "orbits"}
    manifest["files"] = files
    (out / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n")
    print(f"{catalog.count} orbits written to {out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="multitensor",
        description="Count and enumerate unitary-invariant tensor contractions.",
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def spec_args(sp, required=False):
        sp.add_argument("--spec", required=required, help="JSON spec file")
        sp.add_argument("--order", type=int, help="single-type spec: order d")
        sp.add_argument("--n", type=int, help="single-type spec: tensors per side")

    def guard_arg(sp):
        sp.add_argument(
            "--max-sigma",
            type=int,
            default=None,
            help=f"sigma-space size guard (default 10**6, or ${ENV_MAX_SIGMA})",
        )

    c = sub.add_parser("count", help="closed-form orbit counts")
    c.add_argument("kind", choices=["fixed", "multi"])
    spec_args(c)
    c.set_defaults(func=cmd_count)

    t = sub.add_parser("table", help="emit a grid of counts")
    t.add_argument("--mode", choices=["fixed", "multi-family"], default="fixed")
    t.add_argument("--d", default="1-8", help="orders, e.g. 1-8")
    t.add_argument("--n", default="1-10", help="tensor counts (fixed mode)")
    t.add_argument("--s", default="1-10", help="family parameter (multi-family mode)")
    t.add_argument("--format", choices=["csv", "json"], default="csv")
    t.add_argument("--out", help="write to this file instead of stdout")
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", help="oracle agreement or numeric invariance")
    spec_args(v)
    v.add_argument("--what", choices=["oracle", "unitary", "gauge"], default="oracle")
    v.add_argument("--dim", type=int, default=2, help="vector-space dimension N")
    v.add_argument("--trials", type=int, default=20)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--tol", type=float, default=DEFAULT_TOL)
    guard_arg(v)
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("enumerate", help="write one representative per orbit")
    spec_args(e)
    e.add_argument("--out", required=True, help="output directory")
    e.add_argument("--format", choices=["dot", "json"], default="json")
    guard_arg(e)
    e.set_defaults(func=cmd_enumerate)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TooLargeError as exc:
        print(f"error [{exc.code}]: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except SpecError as exc:
        print(f"error [{exc.code}]: {exc}", file=sys.stderr)
        return EXIT_SPEC


if __name__ == "__main__":
    sys.exit(main())
