"""Command-line front end: point evaluation, CSV grids, self-test, benchmark."""

from __future__ import annotations

import argparse
import math
import statistics
import sys
import time

from .core import wright
from .dequad import DEFAULT_CONFIG, QuadratureConfig
from .selftest import FIRST_J0_ZERO, run_all

# The six benchmark cases: label, closed form argument x, and the Wright
# triple actually evaluated.  The two a = 1 rows realize their closed
# forms at the negated argument (Bessel-type identities hold for
# W(1, b | -x)).
BENCH_ROWS = (
    ("erf(x/2)+1", 2.0, (-0.5, 1.0, 2.0)),
    ("M_1/2(-x)", 0.5, (-0.5, 0.5, 0.5)),
    ("gaussian 2nd derivative", 1.5, (-0.5, -0.5, 1.5)),
    ("M_1/3(-x)", 0.5, (-1.0 / 3.0, 2.0 / 3.0, 0.5)),
    ("sin(2*sqrt(x))/sqrt(pi*x)", math.pi ** 2, (1.0, 1.5, -math.pi ** 2)),
    ("J0(2*sqrt(x))", FIRST_J0_ZERO ** 2 / 4.0,
     (1.0, 1.0, -FIRST_J0_ZERO ** 2 / 4.0)),
)


def _config(args) -> QuadratureConfig:
    if getattr(args, "tol", None) is None:
        return DEFAULT_CONFIG
    return QuadratureConfig(target_rel_tol=args.tol)


def cmd_eval(args) -> int:
    try:
        wv = wright(args.a, args.b, args.z, _config(args))
    except (ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    digits = args.digits
    print(f"W({args.a:g}, {args.b:g} | {args.z:g}) = {wv.value:.{digits}g}")
    print(f"error estimate: {wv.error_estimate:.3e}")
    print(f"branch: {wv.branch}")
    print(f"evaluations: {wv.n_evals}")
    if not wv.converged:
        print("warning: quadrature did not converge to the requested tolerance",
              file=sys.stderr)
        return 1
    return 0


def cmd_grid(args) -> int:
    if args.n < 2:
        print("error: n must be at least 2", file=sys.stderr)
        return 1
    if not args.zmax > args.zmin:
        print("error: zmax must exceed zmin", file=sys.stderr)
        return 1
    config = _config(args)
    step = (args.zmax - args.zmin) / (args.n - 1)
    all_converged = True
    try:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("z,value,err\n")
            for i in range(args.n):
                z = args.zmin + i * step
                wv = wright(args.a, args.b, z, config)
                all_converged = all_converged and wv.converged
                fh.write(f"{z!r},{wv.value!r},{wv.error_estimate!r}\n")
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {args.n} rows to {args.out}")
    if not all_converged:
        print("warning: some points did not converge; see err column",
              file=sys.stderr)
        return 1
    return 0


def cmd_selftest(args) -> int:
    groups = run_all()
    failed = False
    for g in groups:
        status = "ok" if g.ok else "FAIL"
        skipped = f"  (skipped {g.skipped})" if g.skipped else ""
        print(f"{g.name:<24} {g.passed:>5}/{g.total:<5} {status:<5}"
              f" worst residual {g.worst:.3e}{skipped}")
        for line in g.failures:
            print(f"    {line}")
        failed = failed or not g.ok
    print("overall:", "FAIL" if failed else "PASS")
    return 1 if failed else 0


def cmd_bench(args) -> int:
    repetitions = 101
    all_converged = True
    print(f"{'identity':<28} {'x':>10} {'microseconds':>14} {'value':>22}")
    for label, x, (a, b, z) in BENCH_ROWS:
        wright(a, b, z)  # warm up
        times = []
        value = 0.0
        for _ in range(repetitions):
            t0 = time.perf_counter()
            wv = wright(a, b, z)
            times.append((time.perf_counter() - t0) * 1e6)
            value = wv.value
            all_converged = all_converged and wv.converged
        med = statistics.median(times)
        print(f"{label:<28} {x:>10.6g} {med:>14.1f} {value:>22.15g}")
    return 0 if all_converged else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wrightfn",
        description="Evaluate the Wright function W(a, b | z) for real arguments.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate W(a, b | z) at one point")
    p_eval.add_argument("--a", type=float, required=True)
    p_eval.add_argument("--b", type=float, required=True)
    p_eval.add_argument("--z", type=float, default=0.0)
    p_eval.add_argument("--tol", type=float, default=None,
                        help="relative quadrature tolerance (default 1e-12)")
    p_eval.add_argument("--digits", type=int, default=15,
                        help="significant digits to print (default 15)")
    p_eval.set_defaults(func=cmd_eval)

    p_grid = sub.add_parser("grid", help="write a CSV of values on a z grid")
    p_grid.add_argument("--a", type=float, required=True)
    p_grid.add_argument("--b", type=float, required=True)
    p_grid.add_argument("--zmin", type=float, required=True)
    p_grid.add_argument("--zmax", type=float, required=True)
    p_grid.add_argument("--n", type=int, required=True)
    p_grid.add_argument("--out", type=str, required=True)
    p_grid.add_argument("--tol", type=float, default=None)
    p_grid.set_defaults(func=cmd_grid)

    p_self = sub.add_parser("selftest", help="run the identity suites")
    p_self.set_defaults(func=cmd_selftest)

    p_bench = sub.add_parser("bench", help="median evaluation latency per identity")
    p_bench.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


def entry():  # console-script wrapper
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
