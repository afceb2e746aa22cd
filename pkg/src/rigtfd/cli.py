"""Command-line front end.

Exit codes: 0 ok, 1 verification failure, 2 parse error, 3 domain error.
JSON goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import math
import sys

from . import jsonio, liouville, rigged, tfd, verify
from .errors import ComplexExpectation, NotConverged, RigTFDError

EXIT_OK, EXIT_VERIFY, EXIT_PARSE, EXIT_DOMAIN = 0, 1, 2, 3
ROUTE_TOL = 1e-10


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"ParseError: {message}", file=sys.stderr)
        raise SystemExit(EXIT_PARSE)


def _read_input(path: str | None):
    if path is None or path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise jsonio.ParseError(f"cannot read {path}: {exc.strerror}") from None
    return jsonio.loads(text)


def _beta(text: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid float {text!r}") from None


def _dims(text: str) -> list[int]:
    try:
        dims = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid dims {text!r}") from None
    if not dims or any(d < 1 for d in dims):
        raise argparse.ArgumentTypeError("dims must be positive integers")
    return dims


def cmd_gibbs(args):
    h = jsonio.matrix_from_json(_read_input(args.input))
    return jsonio.thermal_state_to_json(tfd.gibbs(h, args.beta)), EXIT_OK


def cmd_average(args):
    data = _read_input(args.input)
    if not isinstance(data, dict) or "hamiltonian" not in data or "observable" not in data:
        raise jsonio.ParseError("input needs 'hamiltonian' and 'observable'")
    h = jsonio.matrix_from_json(data["hamiltonian"])
    a = jsonio.matrix_from_json(data["observable"])
    state = tfd.gibbs(h, args.beta)
    routes = {}
    if args.route in ("operator", "both"):
        routes["operator"] = tfd.thermal_average_operator(a, state)
    if args.route in ("tfd", "both"):
        routes["tfd"] = tfd.thermal_average_tfd(a, tfd.thermal_vacuum(state))
    value = routes["operator"] if "operator" in routes else routes["tfd"]
    delta = abs(routes["operator"] - routes["tfd"]) if args.route == "both" else None
    code = EXIT_VERIFY if delta is not None and delta > ROUTE_TOL else EXIT_OK
    if code:
        print(f"route disagreement {delta:.3e} exceeds {ROUTE_TOL:g}", file=sys.stderr)
    return {"value": value, "route_values": routes, "delta": delta}, code


def cmd_vacuum(args):
    h = jsonio.matrix_from_json(_read_input(args.input))
    vac = tfd.thermal_vacuum(tfd.gibbs(h, args.beta))
    return jsonio.doubled_to_json(vac.state), EXIT_OK


_SUPER = {
    "left": liouville.left_mult_super,
    "right": liouville.right_mult_super,
    "commutator": liouville.commutator_super,
}


def cmd_super(args):
    a = jsonio.matrix_from_json(_read_input(args.input))
    return jsonio.superoperator_to_json(_SUPER[args.kind](a)), EXIT_OK


def _norm_json(x: float):
    return "Divergent" if math.isinf(x) else x


def cmd_classify(args):
    data = _read_input(args.input)
    if isinstance(data, dict) and "coefficients" in data:
        seq = jsonio.sequence_from_json(data)
        profile = seq.profile
        norms = [rigged.seminorm(seq, k) for k in range(args.kmax + 1)]
    else:
        profile = jsonio.profile_from_json(data)
        norms = [rigged.profile_seminorm(profile, k) for k in range(args.kmax + 1)]
    return {
        "class": rigged.classify(profile).value,
        "profile": jsonio.profile_to_json(profile),
        "seminorms": [{"k": k, "value": _norm_json(v)} for k, v in enumerate(norms)],
    }, EXIT_OK


def cmd_verify(args):
    report = verify.run(args.seed, args.dims, args.trials, fault=args.inject_fault)
    return report, EXIT_OK if report["overall"] else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rigtfd", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_input(p):
        p.add_argument("--input", help="JSON input file (default: standard input)")
        return p

    p = with_input(sub.add_parser("gibbs", help="Gibbs state of a Hamiltonian"))
    p.add_argument("--beta", type=_beta, required=True)
    p.set_defaults(func=cmd_gibbs)

    p = with_input(sub.add_parser("average", help="thermal average by operator and/or TFD route"))
    p.add_argument("--beta", type=_beta, required=True)
    p.add_argument("--route", choices=["operator", "tfd", "both"], default="both")
    p.set_defaults(func=cmd_average)

    p = with_input(sub.add_parser("vacuum", help="thermal vacuum in the doubled space"))
    p.add_argument("--beta", type=_beta, required=True)
    p.set_defaults(func=cmd_vacuum)

    p = with_input(sub.add_parser("super", help="left/right/commutator superoperator"))
    p.add_argument("--kind", choices=sorted(_SUPER), required=True)
    p.set_defaults(func=cmd_super)

    p = with_input(sub.add_parser("classify", help="decay class and seminorm table"))
    p.add_argument("--kmax", type=int, default=4, choices=range(rigged.SEMINORM_MAX_ORDER + 1),
                   metavar="K")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="run the seeded property suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--dims", type=_dims, default=[2, 3, 4])
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "trials", 1) < 1:
        print("ParseError: --trials must be >= 1", file=sys.stderr)
        return EXIT_PARSE
    try:
        payload, code = args.func(args)
        text = jsonio.dumps(payload)
    except jsonio.ParseError as exc:
        print(f"ParseError: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (RigTFDError, NotConverged, ComplexExpectation) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as exc:
        # non-finite output (e.g. an overflowing partition function)
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
