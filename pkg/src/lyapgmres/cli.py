"""Command-line entry point ``lyapgmres``.

Exit codes: 0 success, 2 invalid configuration, 3 numerical failure,
4 reproduction tolerance exceeded.
"""

import argparse
import logging
import sys

import numpy as np

from . import analysis, io, reproduce
from .exceptions import LyapGmresError
from .specs import MatrixSpecError

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3
EXIT_REPRODUCTION = 4

log = logging.getLogger("lyapgmres")


def _common(p, matrix_required=True):
    p.add_argument("--matrix", required=matrix_required,
                   help="matrix spec, e.g. 'integration:n=100,gamma=2' or 'file:A.mtx'")
    p.add_argument("--c", dest="c_choice", default="auto",
                   help="C choice: auto, explicit, identity, hermitian-part, "
                        "diagonalization, none or file:<path> (default: auto)")
    p.add_argument("--shift", type=float, default=0.0)
    p.add_argument("--m", dest="iterations", type=int, default=1,
                   help="number of inverse-iteration steps")
    p.add_argument("--angles", dest="n_angles", type=int, default=1024)
    p.add_argument("--rotate", type=float, default=0.0,
                   help="analyze exp(i*THETA) A instead of A")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--out", dest="output_dir", default=".")
    p.add_argument("--json", action="store_true",
                   help="print the JSON summary to stdout")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="lyapgmres",
        description="Lyapunov inner products, numerical ranges and GMRES bounds.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, helptext in [
            ("analyze", "rates and bound curves for one inner product"),
            ("gmres", "GMRES traces checked against the bounds"),
            ("iterate", "table over inverse-iteration steps m = 1..M"),
            ("fov", "numerical range boundaries")]:
        p = sub.add_parser(name, help=helptext)
        _common(p)
        if name == "iterate":
            p.add_argument("--boundaries", action="store_true",
                           help="also write one boundary CSV per m")
    p = sub.add_parser("reproduce", help="rerun a reference experiment")
    p.add_argument("target", choices=reproduce.TARGETS)
    p.add_argument("--out", dest="output_dir", default=".")
    p.add_argument("--json", action="store_true")
    return parser


COMMANDS = {"analyze": analysis.cmd_analyze, "gmres": analysis.cmd_gmres,
            "iterate": analysis.cmd_iterate, "fov": analysis.cmd_fov}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        if args.command == "reproduce":
            report = reproduce.run(args.target, args.output_dir)
            result = report.as_dict()
            for c in report.checks:
                log.info("%s %s", "PASS" if c.passed else "FAIL", c.name)
            code = EXIT_OK if report.passed else EXIT_REPRODUCTION
        else:
            config = analysis.AnalysisConfig(
                matrix_spec=args.matrix, c_choice=args.c_choice, shift=args.shift,
                iterations=args.iterations, n_angles=args.n_angles,
                rotate=args.rotate, seed=args.seed, trials=args.trials,
                output_dir=args.output_dir,
                format="json" if args.json else "csv",
                boundaries=getattr(args, "boundaries", False))
            result = COMMANDS[args.command](config)
            code = EXIT_OK
    # LinAlgError derives from ValueError, so it must be caught first
    except (LyapGmresError, np.linalg.LinAlgError, ArithmeticError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (MatrixSpecError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    if args.json:
        print(io.to_json(result))
    if code == EXIT_REPRODUCTION:
        print(f"reproduction of {args.target} exceeded tolerance", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
