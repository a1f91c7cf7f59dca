"""Command-line front end: verify, eval, falsify and table.

Exit codes: 0 when everything behaved as expected, 1 on a verification
failure, 2 on bad arguments. Reports go to standard output (or ``--out``);
diagnostics go to standard error.
"""

import argparse
import sys

from . import report
from .catalog import pair_ids
from .errors import UnknownIdentity
from .verification import (
    CORRECTED_IDS,
    DEFAULT_TOL,
    FALSE_IDS,
    FALSIFY_THRESHOLD,
    MATCH,
    MISMATCH,
    all_match,
    default_grid,
    evaluate_point,
    falsified,
    get_identity,
    verify,
)

TABLE_IDS = ("eq530", "eq550", "eq580")
MIN_NODES, MAX_NODES = 16, 128


class ArgumentError(Exception):
    pass


def parse_complex(text):
    """Parse '1', '-0.5', '0.3i', '1+0.5j' and similar."""
    try:
        return complex(text.strip().replace(" ", "").replace("i", "j"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def parse_real_list(text):
    try:
        values = tuple(float(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of reals: {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


def parse_complex_list(text):
    return tuple(parse_complex(x) for x in text.split(",") if x.strip())


def positive_float(text):
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not v > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return v


def build_parser():
    p = argparse.ArgumentParser(
        prog="laplace-identities",
        description="Numerically verify Laplace-transform identities.",
    )
    p.add_argument("command", choices=("verify", "eval", "falsify", "table"))
    p.add_argument("--identity", help="identity id, e.g. eq240 (default: all applicable)")
    p.add_argument("--pair", help="restrict to one catalog pair, e.g. exp_decay")
    p.add_argument("--tol", type=positive_float, default=DEFAULT_TOL,
                   help="relative MATCH tolerance (default 1e-6; falsify always uses 1e-2)")
    p.add_argument("--grid-s", type=parse_real_list, help="comma-separated s values")
    p.add_argument("--grid-t", type=parse_real_list, help="comma-separated t values")
    p.add_argument("--talbot-nodes", type=int, default=48, help="Talbot nodes, 16..128 (default 48)")
    p.add_argument("--format", choices=("json", "csv"), default=None,
                   help="output format (default json; csv for table)")
    p.add_argument("--out", help="output path (default standard output)")
    point = p.add_argument_group("point (eval only)")
    point.add_argument("--s", type=float)
    point.add_argument("--t", type=float)
    for name in ("a", "b", "alpha", "beta", "gamma"):
        point.add_argument(f"--{name}", type=parse_complex)
    point.add_argument("--coeffs", type=parse_complex_list, help="comma-separated c_0,c_1,...")
    return p


def _override_axis(grid, axis, values):
    """Replace the values along ``axis``, keeping every other combination."""
    others = []
    for point in grid:
        rest = {k: v for k, v in point.items() if k != axis}
        if rest not in others:
            others.append(rest)
    return [{**rest, axis: v} for rest in others for v in values]


def _grid_for(identity, args):
    grid = default_grid(identity.id, args.pair)
    if not grid:
        raise ArgumentError(f"no grid points for {identity.id} with pair {args.pair!r}")
    values = args.grid_s if identity.axis == "s" else args.grid_t
    if values is not None:
        grid = _override_axis(grid, identity.axis, values)
    return grid


def _select(args, allowed, kind):
    if args.identity is None:
        return list(allowed)
    try:
        get_identity(args.identity)
    except UnknownIdentity:
        raise ArgumentError(f"unknown identity {args.identity!r}") from None
    if args.identity not in allowed:
        raise ArgumentError(f"{args.identity} is not a {kind} identity")
    return [args.identity]


def _run_many(ids, args, tol, check):
    runs, passed = [], True
    for identity_id in ids:
        identity = get_identity(identity_id)
        grid = _grid_for(identity, args)
        reports = verify(identity_id, grid, tol=tol, nodes=args.talbot_nodes)
        ok = check(reports)
        passed &= ok
        counts = {}
        for r in reports:
            counts[r.verdict] = counts.get(r.verdict, 0) + 1
        summary = ", ".join(f"{k}={v}" for k, v in sorted(counts.items()))
        print(f"{identity_id}: {'ok' if ok else 'FAILED'} ({summary})", file=sys.stderr)
        runs.append((identity, grid, reports, ok))
    return runs, passed


def _eval_point(identity, args):
    point = dict(_grid_for(identity, args)[0])
    for key in ("s", "t", "a", "b", "alpha", "beta", "gamma", "coeffs"):
        value = getattr(args, key)
        if value is None:
            continue
        if key not in point and key != identity.axis:
            raise ArgumentError(f"{identity.id} takes no parameter {key!r}")
        point[key] = value
    return point


def _render(command, args, tol_by_run, runs, passed):
    fmt = args.format or ("csv" if command == "table" else "json")
    if fmt == "csv":
        return report.reports_to_csv([r for _, _, reports, _ in runs for r in reports])
    document = {
        "command": command,
        "talbot_nodes": args.talbot_nodes,
        "passed": passed,
        "runs": [
            report.run_to_json(
                identity.id, args.pair if identity.uses_pairs else None, tol_by_run,
                identity.false_form, grid, reports, ok,
            )
            for identity, grid, reports, ok in runs
        ],
    }
    return report.dumps_json(document)


def _dispatch(args):
    if not MIN_NODES <= args.talbot_nodes <= MAX_NODES:
        raise ArgumentError(f"--talbot-nodes must be in [{MIN_NODES}, {MAX_NODES}]")
    if args.pair is not None and args.pair not in pair_ids():
        raise ArgumentError(f"unknown pair {args.pair!r}")

    command, tol = args.command, args.tol
    if command == "verify":
        runs, passed = _run_many(_select(args, CORRECTED_IDS, "corrected"), args, tol, all_match)
    elif command == "falsify":
        tol = FALSIFY_THRESHOLD
        runs, passed = _run_many(_select(args, FALSE_IDS, "false"), args, tol, falsified)
    elif command == "table":
        runs, passed = _run_many(_select(args, TABLE_IDS, "closed-form"), args, tol, all_match)
    else:
        if args.identity is None:
            raise ArgumentError("eval needs --identity")
        identity = get_identity(_select(args, CORRECTED_IDS + FALSE_IDS, "known")[0])
        if identity.false_form:
            tol = FALSIFY_THRESHOLD
        point = _eval_point(identity, args)
        r = evaluate_point(identity, point, tol, nodes=args.talbot_nodes)
        passed = r.verdict == (MISMATCH if identity.false_form else MATCH)
        print(f"{identity.id}: lhs={r.lhs!r} rhs={r.rhs!r} rel_err={r.rel_err:.3e} {r.verdict}",
              file=sys.stderr)
        runs = [(identity, [point], [r], passed)]
    return _render(command, args, tol, runs, passed), passed


def run(argv=None):
    """Run the CLI and return the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        text, passed = _dispatch(args)
    except ArgumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if passed else 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
