"""Command-line interface.

Exit codes: 0 success, 1 internal failure or failed check, 2 usage or guard
error, 3 operands outside the supported domain.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .arith import build_divider
from .circuit import Level, decode, encode
from .domain import EXHAUSTIVE_MAX_N, map_valid_domain, verify_exhaustive, verify_random
from .errors import QDivError, DivisionByZero, DomainViolation, WidthLimitExceeded
from .lowering import lower
from .qasm import export_qasm
from .refmodel import check_domain, max_divisor, restoring_divide
from .resources import comparison_report, count
from .revsim import run_basis_int, run_statevector

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3

LEVELS = ("logical", "toffoli", "cliffordt")


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _width(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid width {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError("n must be at least 1")
    return n


def domain_text(n: int) -> str:
    return f"dividend in [0, {(1 << n) - 1}], divisor in [1, {max_divisor(n)}]"


def cmd_build(args) -> int:
    inst = build_divider(args.n)
    level = Level.parse(args.level)
    if level is Level.LOGICAL:
        print("error: logical circuits contain Peres gates and cannot be exported; "
              "use --level toffoli or cliffordt", file=sys.stderr)
        return EXIT_USAGE
    text = export_qasm(lower(inst.circuit, level))
    if args.output in (None, "-"):
        sys.stdout.write(text)
    else:
        try:
            with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"error: cannot write {args.output}: {exc}", file=sys.stderr)
            return EXIT_FAIL
    print(_dump(inst.layout.as_dict()), file=sys.stderr)
    return EXIT_OK


def cmd_run(args) -> int:
    n = args.n
    try:
        check_domain(args.dividend, args.divisor, n)
    except (DivisionByZero, DomainViolation) as exc:
        print(f"error: {exc}; supported domain: {domain_text(n)}", file=sys.stderr)
        return EXIT_DOMAIN
    inst = build_divider(n)
    lay = inst.layout
    level = Level.parse(args.level)
    circuit = lower(inst.circuit, level)
    state = encode(lay.q_bits, args.dividend) | encode(lay.d_bits, args.divisor)
    if level is Level.CLIFFORD_T:
        try:
            psi = run_statevector(circuit, state)
        except WidthLimitExceeded as exc:
            print(f"error: {exc} (set QDIV_WIDTH_LIMIT to raise it)", file=sys.stderr)
            return EXIT_USAGE
        out = int(abs(psi).argmax())
        if abs(abs(psi[out]) - 1) > 1e-10:
            print("error: Clifford+T simulation did not end in a basis state", file=sys.stderr)
            return EXIT_FAIL
    else:
        out = run_basis_int(circuit, state)
    quotient = decode(lay.quotient_bits, out)
    remainder = decode(lay.remainder_bits, out)
    preserved = decode(lay.d_bits, out) == args.divisor
    agrees = (quotient, remainder) == restoring_divide(args.dividend, args.divisor, n) \
        == divmod(args.dividend, args.divisor)
    print(_dump({
        "quotient": quotient,
        "remainder": remainder,
        "divisor_preserved": preserved,
        "oracle_agrees": agrees,
    }))
    return EXIT_OK if preserved and agrees else EXIT_FAIL


def cmd_resources(args) -> int:
    inst = build_divider(args.n)
    circuit = lower(inst.circuit, Level.parse(args.level))
    report = count(circuit, inst.ancillae, n=args.n)
    out = report.to_dict()
    out["comparison"] = comparison_report(args.n).to_dict()
    print(_dump(out))
    return EXIT_OK if report.matches_prediction else EXIT_FAIL


def cmd_verify(args) -> int:
    if args.exhaustive:
        if args.n > EXHAUSTIVE_MAX_N:
            print(f"error: --exhaustive is limited to n <= {EXHAUSTIVE_MAX_N}; "
                  "use --random", file=sys.stderr)
            return EXIT_USAGE
        result = verify_exhaustive(args.n)
    else:
        if args.n > 63:
            print("error: random sweeps support n <= 63", file=sys.stderr)
            return EXIT_USAGE
        result = verify_random(args.n, args.random, args.seed)
    out = result.to_dict()
    out["domain"] = domain_text(args.n)
    if args.domain_map:
        if args.n > EXHAUSTIVE_MAX_N:
            print(f"error: --domain-map is limited to n <= {EXHAUSTIVE_MAX_N}", file=sys.stderr)
            return EXIT_USAGE
        out["domain_map"] = map_valid_domain(args.n).to_dict()
    print(_dump(out))
    return EXIT_OK if result.ok else EXIT_FAIL


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="qdiv",
        description="Restoring-division quantum circuit: synthesis, lowering, "
                    "simulation and resource counts.",
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="write the divider as OpenQASM 2.0")
    b.add_argument("--n", type=_width, required=True)
    b.add_argument("--level", choices=LEVELS, default="cliffordt")
    b.add_argument("--output", "-o", default=None, help="file path, default stdout")
    b.set_defaults(func=cmd_build)

    r = sub.add_parser("run", help="divide two integers by simulating the circuit")
    r.add_argument("--n", type=_width, required=True)
    r.add_argument("--dividend", type=int, required=True)
    r.add_argument("--divisor", type=int, required=True)
    r.add_argument("--level", choices=LEVELS, default="logical")
    r.set_defaults(func=cmd_run)

    s = sub.add_parser("resources", help="T-count, ancillae and comparison table")
    s.add_argument("--n", type=_width, required=True)
    s.add_argument("--level", choices=LEVELS, default="cliffordt")
    s.set_defaults(func=cmd_resources)

    v = sub.add_parser("verify", help="compare circuit simulation with integer division")
    v.add_argument("--n", type=_width, required=True)
    mode = v.add_mutually_exclusive_group(required=True)
    mode.add_argument("--exhaustive", action="store_true")
    mode.add_argument("--random", type=int, metavar="SAMPLES")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--domain-map", action="store_true",
                   help="also sweep unsupported divisors and report failures")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    if getattr(args, "random", None) is not None and args.random < 1:
        print("error: --random needs at least one sample", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except QDivError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
