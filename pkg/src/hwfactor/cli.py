"""Command-line interface: ``construct``, ``verify`` and ``sweep``.

Exit codes: 0 success, 1 verification failure, 2 parameters not covered by
the implemented constructions, 3 invalid parameters, 4 unreadable or
malformed certificate file.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor

from .dispatcher import (
    InvalidParameters,
    Support,
    UnsupportedParameters,
    construct_hamilton_only,
    construct_hw,
    supported,
)
from .serialization import CertificateFormatError, dumps, loads
from .verifier import verify_certificate

EXIT_OK, EXIT_FAIL, EXIT_UNSUPPORTED, EXIT_INVALID, EXIT_UNREADABLE = 0, 1, 2, 3, 4


def cmd_construct(args) -> int:
    try:
        if args.hamilton_only:
            if args.n is None:
                raise InvalidParameters("--hamilton-only needs --n")
            cert = construct_hamilton_only(args.n)
        else:
            if None in (args.k, args.t, args.r):
                raise InvalidParameters("construct needs --k, --t and --r (or --n with --hamilton-only)")
            cert = construct_hw(args.k, args.t, args.r)
    except UnsupportedParameters as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except InvalidParameters as exc:
        print(f"invalid parameters: {exc}", file=sys.stderr)
        return EXIT_INVALID
    text = dumps(cert, args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        with open(args.path) as fh:
            cert = loads(fh.read())
    except (OSError, UnicodeDecodeError) as exc:
        print(f"cannot read {args.path}: {exc}", file=sys.stderr)
        return EXIT_UNREADABLE
    except CertificateFormatError as exc:
        print(f"malformed certificate: {exc}", file=sys.stderr)
        return EXIT_UNREADABLE
    report = verify_certificate(cert)
    print(report.format())
    return EXIT_OK if report.ok else EXIT_FAIL


def _sweep_row(params: tuple[int, int, int]) -> tuple[int, str, int, int]:
    k, t, r = params
    status = supported(k, t, r)
    if status is not Support.YES:
        return r, status.value, 0, 0
    cert = construct_hw(k, t, r)
    report = verify_certificate(cert)
    return r, "pass" if report.ok else "FAIL " + ",".join(report.failed()), cert.r, cert.s


def cmd_sweep(args) -> int:
    if args.k < 1 or args.t < 1:
        print("invalid parameters: need k, t >= 1", file=sys.stderr)
        return EXIT_INVALID
    n = 4 * args.k * args.t
    jobs = [(args.k, args.t, r) for r in range((n - 2) // 2 + 1)]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            rows = list(pool.map(_sweep_row, jobs))
    else:
        rows = [_sweep_row(j) for j in jobs]
    print(f"n={n} k={args.k} t={args.t}")
    print(f"{'r':>4} {'hamilton':>9} {'c4k':>5}  status")
    failed = 0
    for r, status, n_ham, n_c4k in rows:
        print(f"{r:>4} {n_ham:>9} {n_c4k:>5}  {status}")
        failed += status.startswith("FAIL")
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hwfactor", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a certificate")
    p.add_argument("--k", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--hamilton-only", action="store_true")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out", help="output path (default: stdout)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a certificate file")
    p.add_argument("path")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="construct and verify every r for given k, t")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
