"""Command-line front end.

Exit status: 0 on success, 1 on domain errors, 2 on I/O or parse errors.
Errors are reported on stderr as a JSON object naming the error class.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import deleeuw, extremal
from .errors import LipfreeError
from .free_element import FreeElement
from .kr_solver import free_norm
from .metric_space import FiniteMetricSpace, chain_space, random_space
from .rational import format_rational, parse_rational


class InputError(Exception):
    """Unreadable or malformed input; maps to exit status 2."""


def _load_json(path):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON in {path}: {exc}") from None


def _load_space(path) -> FiniteMetricSpace:
    obj = _load_json(path)
    try:
        return FiniteMetricSpace.from_json(obj)
    except LipfreeError:
        raise
    except (ValueError, TypeError) as exc:
        raise InputError(f"{path}: {exc}") from None


def _load_element(space, path) -> FreeElement:
    obj = _load_json(path)
    try:
        return FreeElement.from_json(space, obj)
    except LipfreeError:
        raise
    except (ValueError, TypeError, AttributeError) as exc:
        raise InputError(f"{path}: {exc}") from None


def _table(rows, header=None):
    rows = [[str(c) for c in r] for r in rows]
    if header:
        rows.insert(0, list(header))
    if not rows:
        return ""
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
    if header:
        lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _cert_rows(cert: dict):
    rows = [["verdict", cert["verdict"]]]
    for key in ("pair", "violating_point", "exposed_constant"):
        val = cert.get(key)
        if val is not None:
            rows.append([key, " ".join(val) if isinstance(val, list) else val])
    if cert.get("localized"):
        for pair, v in cert["localized"]["mass"].items():
            rows.append(["localized " + pair, v])
    return rows


def cmd_validate(args):
    space = _load_space(args.space)
    out = {"valid": True, "space": space.to_json()}
    table = _table(
        [["valid", "yes"], ["points", space.n], ["base", space.points[space.base]]]
    )
    return out, table


def cmd_norm(args):
    space = _load_space(args.space)
    m = _load_element(space, args.element)
    out = free_norm(m).to_json()
    rows = [["value", out["value"]]]
    rows += [["flow " + k, v] for k, v in out["flow"].items()]
    rows.append(["witness", " ".join(out["witness"]["values"])])
    return out, _table(rows)


def cmd_represent(args):
    space = _load_space(args.space)
    m = _load_element(space, args.element)
    mu = deleeuw.minimal_representation(m)
    out = mu.to_json()
    rows = [[k, v] for k, v in out["mass"].items()]
    rows.append(["total_variation", format_rational(mu.total_variation)])
    return out, _table(rows, header=("pair", "mass"))


def cmd_extreme(args):
    space = _load_space(args.space)
    if args.all:
        certs = [
            extremal.is_extreme_molecule(space, p, q).to_json(space)
            for p in range(space.n)
            for q in range(p + 1, space.n)
        ]
        rows = [
            [" ".join(c["pair"]), c["verdict"], c["violating_point"] or "", c["exposed_constant"] or ""]
            for c in certs
        ]
        return {"certificates": certs}, _table(
            rows, header=("pair", "verdict", "violating_point", "exposed_constant")
        )
    p, q = (space.index(lbl) for lbl in args.pair)
    cert = extremal.is_extreme_molecule(space, p, q).to_json(space)
    return cert, _table(_cert_rows(cert))


def cmd_enumerate(args):
    space = _load_space(args.space)
    pairs = [[space.points[p], space.points[q]] for p, q in extremal.enumerate_extreme(space)]
    return {"extreme_pairs": pairs}, _table([[a, b] for a, b in pairs], header=("p", "q"))


def cmd_localize(args):
    space = _load_space(args.space)
    m = _load_element(space, args.element)
    cert = extremal.localize(m).to_json(space)
    return cert, _table(_cert_rows(cert))


def cmd_oracle(args):
    space = _load_space(args.space)
    m = _load_element(space, args.element)
    verdict = extremal.is_extreme_oracle(m)
    return {"extreme": verdict}, _table([["extreme", "yes" if verdict else "no"]])


def cmd_generate(args):
    if args.chain is not None:
        space = chain_space(args.chain)
    else:
        try:
            scale = parse_rational(args.scale)
        except (ValueError, TypeError) as exc:
            raise InputError(str(exc)) from None
        space = random_space(args.random, args.seed, scale)
    out = space.to_json()
    rows = [[lbl] + row for lbl, row in zip(out["points"], out["dist"])]
    return out, _table(rows, header=[""] + out["points"])


def _positive_int(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def build_parser():
    parser = argparse.ArgumentParser(
        prog="lipfree", description="Exact geometry of free spaces over finite metric spaces."
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("-o", "--output", default="-", help="output file (default: stdout)")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("validate", parents=[common], help="check a metric space file")
    p.add_argument("space")
    p.set_defaults(func=cmd_validate)

    for verb, func, text in (
        ("norm", cmd_norm, "free norm with optimal flow and norming function"),
        ("represent", cmd_represent, "minimal positive pair-measure representation"),
        ("localize", cmd_localize, "replay the localization argument on a unit element"),
        ("oracle", cmd_oracle, "LP vertex test of a unit element"),
    ):
        p = sub.add_parser(verb, parents=[common], help=text)
        p.add_argument("space")
        p.add_argument("element")
        p.set_defaults(func=func)

    p = sub.add_parser("extreme", parents=[common], help="metric extremality criterion")
    p.add_argument("space")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--pair", nargs=2, metavar=("P", "Q"))
    grp.add_argument("--all", action="store_true")
    p.set_defaults(func=cmd_extreme)

    p = sub.add_parser("enumerate", parents=[common], help="list extreme molecules")
    p.add_argument("space")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("generate", parents=[common], help="emit a space file")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--chain", type=_positive_int, metavar="N")
    grp.add_argument("--random", type=int, metavar="N")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--scale", default="1")
    p.set_defaults(func=cmd_generate)
    return parser


def _error(stderr, kind, message, details=None):
    payload = {"error": kind, "message": message}
    if details:
        payload["details"] = details
    stderr.write(json.dumps(payload, sort_keys=True) + "\n")


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.verb == "generate" and args.random is not None and args.random < 2:
            raise InputError("--random needs at least 2 points")
        out, table = args.func(args)
    except LipfreeError as exc:
        _error(stderr, type(exc).__name__, str(exc), exc.details())
        return 1
    except InputError as exc:
        _error(stderr, "InputError", str(exc))
        return 2
    text = table + "\n" if args.format == "table" else json.dumps(out, sort_keys=True, indent=2) + "\n"
    if args.output == "-":
        stdout.write(text)
    else:
        try:
            with open(args.output, "w") as fh:
                fh.write(text)
        except OSError as exc:
            _error(stderr, "InputError", f"cannot write {args.output}: {exc.strerror or exc}")
            return 2
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
