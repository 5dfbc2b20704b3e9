"""Command-line front end.

Machine-readable output goes to stdout as one JSON document per line;
diagnostics and human summaries go to stderr.

Exit codes: 0 success, 1 invalid certificate, 2 malformed certificate,
3 certification failure, 64 usage error, 70 arithmetic/resource limit.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .certificate import Certificate, Pair
from .certify import certify_pair
from .checker import verify_certificate
from .config import Config, load_config
from .errors import CertificateFormatError, DomainError, ResourceLimitError
from .families import (fermat_instance, q2plus1_pairs, q6q3plus1_pairs, wilson_instances,
                       wilson_terms)
from .scan import reproduce_table1, scan_primes, write_scan_csv

EXIT_OK, EXIT_INVALID, EXIT_MALFORMED, EXIT_UNCOVERED = 0, 1, 2, 3
EXIT_USAGE, EXIT_LIMIT = 64, 70


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True, separators=(",", ":")), flush=True)


def _rows(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad row list {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="primefree",
                     description="Certify pairs (t, d) for which floor(n^t/d) is eventually prime-free.")
    parser.add_argument("--config", help="key=value file overriding witness_bound, mr_rounds, "
                                         "digit_budget, workers")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("certify", help="build a certificate")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--witness-bound", type=int)
    p.add_argument("--no-exceptions", action="store_true")
    p.add_argument("--out", required=True)

    p = sub.add_parser("verify", help="verify a certificate file")
    p.add_argument("file")
    p.add_argument("--witness-bound", type=int)

    p = sub.add_parser("scan", help="list prime terms up to a bound")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--csv")

    p = sub.add_parser("family", help="generate family instances")
    fam = p.add_subparsers(dest="family", required=True)
    f = fam.add_parser("fermat")
    f.add_argument("--p", type=int, required=True)
    f = fam.add_parser("q2p1")
    f.add_argument("--q-max", type=int, required=True)
    f = fam.add_parser("q6q3p1")
    f.add_argument("--q-max", type=int, required=True)
    f = fam.add_parser("wilson")
    f.add_argument("--p", type=int, required=True)
    f.add_argument("--c", type=int)
    f.add_argument("--max-n", type=int)

    p = sub.add_parser("table1", help="certify every published pair")
    p.add_argument("--rows", type=_rows, help="comma-separated exponents t")
    p.add_argument("--out-dir", help="write each certificate here as t_d.json")
    return parser


def _cmd_certify(args, config: Config) -> int:
    config = config.with_(witness_bound=args.witness_bound,
                          find_exceptions=False if args.no_exceptions else None)
    pair = Pair(args.t, args.d)
    result = certify_pair(pair, config)
    if not isinstance(result, Certificate):
        print(f"pair {pair}: {len(result.uncovered)} uncovered classes: "
              f"{', '.join(map(str, result.uncovered))}", file=sys.stderr)
        _emit({"pair": {"t": str(pair.t), "d": str(pair.d)}, "status": "failure",
               "uncovered": [str(r) for r in result.uncovered]})
        return EXIT_UNCOVERED
    Path(args.out).write_text(result.to_json())
    _emit({"pair": {"t": str(pair.t), "d": str(pair.d)}, "status": "certified",
           "out": args.out, "witness_primes": sorted(result.witness_primes),
           "exceptions": [{"n": str(n), "value": str(v)} for n, v in result.exceptions],
           "exceptions_complete": result.exceptions_complete})
    return EXIT_OK


def _cmd_verify(args, config: Config) -> int:
    bound = args.witness_bound or config.witness_bound
    try:
        verdict = verify_certificate(Path(args.file).read_bytes(), witness_bound=bound,
                                     rounds=config.mr_rounds)
    except (CertificateFormatError, OSError) as exc:
        print(f"malformed certificate: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    for failure in verdict.failures:
        print(failure, file=sys.stderr)
    _emit(verdict.to_dict())
    return EXIT_OK if verdict.valid else EXIT_INVALID


def _cmd_scan(args, config: Config) -> int:
    pair = Pair(args.t, args.d)
    report = scan_primes(pair, args.max_n, config=config)
    if args.csv:
        write_scan_csv(pair, args.max_n, args.csv, config=config)
    print(report.to_json(), flush=True)
    return EXIT_OK


def _cmd_family(args, config: Config) -> int:
    if args.family == "fermat":
        instances = [fermat_instance(args.p)]
    elif args.family == "q2p1":
        instances = q2plus1_pairs(args.q_max)
    elif args.family == "q6q3p1":
        instances = q6q3plus1_pairs(args.q_max)
    else:
        instances = wilson_instances(args.p)
        if args.c is not None:
            instances = [i for i in instances if i.c == args.c]
            if not instances:
                raise DomainError(f"c={args.c} is not a valid offset for p={args.p}")
        if args.max_n is not None:
            for inst in instances:
                for term in wilson_terms(inst.p, inst.c, args.max_n):
                    _emit({"p": str(inst.p), "c": str(inst.c), **term.to_dict()})
            return EXIT_OK
    for inst in instances:
        _emit(inst.to_dict())
    return EXIT_OK


def _cmd_table1(args, config: Config) -> int:
    outcomes = reproduce_table1(args.rows, config=config)
    out_dir = Path(args.out_dir) if args.out_dir else None
    if out_dir:
        out_dir.mkdir(parents=True, exist_ok=True)
    for o in outcomes:
        if out_dir and o.certified:
            (out_dir / f"{o.pair.t}_{o.pair.d}.json").write_text(o.result.to_json())
        _emit(o.to_dict())
    print(f"{'t':>3} {'d':>5}  status     bold  primitive(tool)  witnesses", file=sys.stderr)
    for o in outcomes:
        status = "certified" if o.ok else "FAILED"
        witnesses = ",".join(map(str, sorted(o.result.witness_primes))) if o.certified else "-"
        print(f"{o.pair.t:>3} {o.pair.d:>5}  {status:<9}  {'*' if o.bold else ' ':<4}  "
              f"{'yes' if o.tool_primitive else 'no':<15}  {witnesses or '-'}", file=sys.stderr)
    n_ok = sum(o.ok for o in outcomes)
    print(f"{n_ok}/{len(outcomes)} pairs certified and verified", file=sys.stderr)
    return EXIT_OK if n_ok == len(outcomes) else EXIT_UNCOVERED


COMMANDS = {"certify": _cmd_certify, "verify": _cmd_verify, "scan": _cmd_scan,
            "family": _cmd_family, "table1": _cmd_table1}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        config = load_config(args.config)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, OSError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    try:
        return COMMANDS[args.command](args, config)
    except ResourceLimitError as exc:
        print(f"limit exceeded: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
