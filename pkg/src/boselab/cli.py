"""Command line entry point: ``bose-lab suite ...`` and ``bose-lab classify ...``."""

from __future__ import annotations

import argparse
import json
import sys

from .bose import FrameError
from .field import FieldError, parse_field_spec
from .harness import SUITES, UnsupportedQ, classify_one, run_suite
from .projective import ProjectiveError
from .varieties import DegenerateConicError


def _load_tower(path: str | None):
    if path is None:
        return None
    with open(path) as fh:
        text = " ".join(line.split("#", 1)[0] for line in fh)
    return parse_field_spec(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bose-lab", description="Exact checks of Bose and Bruck-Bose constructions.")
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("suite", help="run a verification suite")
    s.add_argument("name", choices=sorted(SUITES))
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--field", help="field spec file (p= e= t0= t1= [base=] [quartic=])")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out", help="write the JSON report here")
    s.add_argument("--max-q-override", action="store_true", help="allow q above the default cap")

    c = sub.add_parser("classify", help="classify one F_q-conic")
    c.add_argument("--q", type=int, required=True)
    c.add_argument("--frame", type=int, nargs=12, required=True, metavar="C",
                   help="four frame points of the subplane, GF(q^2) handles a0 + q*a1")
    c.add_argument("--conic", type=int, nargs=6, required=True, metavar="C",
                   help="GF(q) coefficients of x^2, xy, xz, y^2, yz, z^2 in the subplane frame")
    c.add_argument("--field", help="field spec file")
    c.add_argument("--pi-g", type=int, nargs=6, metavar="C", help="hyperplane form (default x5 = 0)")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        tower = _load_tower(args.field)
        if args.command == "suite":
            if args.seed < 0 or args.seed >= 2**64:
                raise UnsupportedQ("seed must be an unsigned 64-bit integer")
            report = run_suite(args.name, args.q, seed=args.seed, tower=tower, out_path=args.out,
                               max_q_override=args.max_q_override)
            print(report.summary())
            return 0 if report.failed == 0 else 1
        frame = [args.frame[i:i + 3] for i in range(0, 12, 3)]
        record = classify_one(args.q, frame, args.conic, tower=tower, pi_g=args.pi_g)
        print(record.summary())
        print(json.dumps(record.to_json(), indent=2, sort_keys=True))
        return 0 if record.ok else 1
    except FrameError as exc:
        print(f"error: bad frame ({exc})", file=sys.stderr)
    except DegenerateConicError as exc:
        print(f"error: degenerate conic ({exc})", file=sys.stderr)
    except (FieldError, UnsupportedQ, ProjectiveError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return 2


if __name__ == "__main__":
    sys.exit(main())
