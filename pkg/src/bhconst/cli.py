"""Command-line interface: constant tables, verification suites, figure data, experiments.

Exit codes: 0 success, 1 verification failure, 2 usage, 3 I/O, 4 capacity.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import figures, ksz
from .forms import (
    CapacityError,
    bh_ratio,
    coeff_lq_norm,
    from_json_obj,
    littlewood_form,
    sup_norm_real_exact,
)
from .report import ExperimentReport
from .sequences import (
    ConstantTable,
    Family,
    ScalarField,
    SequenceSpec,
    constant_table,
    lower_bound,
    verify_fundamental_lemma,
    verify_monotonicity,
    verify_reduction,
    verify_sandwich,
)
from .special_fn import DomainError
from .tableio import OutputSpec, emit, rows_to_csv, table_to_json

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_IO, EXIT_CAPACITY = 0, 1, 2, 3, 4

FAMILY_HELP = """\
sequence families (--family):
  C                 Khinchine-product recursion C_n (real/complex; --t for the continuum variant)
  S, M              intermediate sequences of the sandwich C_n <= S_n <= M_n <= R_n (t = 1 only)
  R                 block-interpolated upper sequence R_n, n >= 2 (--t for the continuum variant)
  ClosedBound       c(t) (n-1)**r(t) + p(t)
  PartialSumBound   sqrt(2) + sum of the difference bounds, n >= 2
  DiffBound         coefficient * n**exponent bound on R_{n+1} - R_n
  LowerBound        2**(1 - 1/n) style lower bound on the real constant
"""

SUITES = {
    "monotonicity": verify_monotonicity,
    "sandwich": verify_sandwich,
    "reduction": verify_reduction,
    "fundamental-lemma": verify_fundamental_lemma,
    "ksz-exhaustive": lambda n_max=None: ksz.exhaustive_m2n2(),
}


def _precision(text: str) -> int:
    value = int(text)
    if not 6 <= value <= 17:
        raise argparse.ArgumentTypeError("precision must lie in [6, 17]")
    return value


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _add_output(p: argparse.ArgumentParser, default_format: str = "csv") -> None:
    p.add_argument("--format", choices=("csv", "json"), default=default_format)
    p.add_argument("--precision", type=_precision, default=12, help="significant digits, 6..17 (default 12)")
    p.add_argument("--out", default=None, help="output file (default: standard output)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bhconst",
        description="Bohnenblust-Hille constant sequences, bounds, and norm experiments.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=FAMILY_HELP,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("constants", help="tabulate a sequence family",
                       formatter_class=argparse.RawDescriptionHelpFormatter, epilog=FAMILY_HELP)
    p.add_argument("--family", choices=[f.value for f in Family], default="C")
    p.add_argument("--scalars", choices=[f.value for f in ScalarField], default="real")
    p.add_argument("--t", type=float, default=1.0, help="continuum exponent in [1, 2) (default 1)")
    p.add_argument("--n-max", type=int, required=True)
    _add_output(p)

    p = sub.add_parser("verify", help="run a verification suite (exit 1 on any failed check)")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--n-max", type=int, default=None, help="suite size (suite-specific default)")
    _add_output(p, default_format="json")

    p = sub.add_parser("figure", help="emit data for the p/c/r coefficient curves and bound surface")
    p.add_argument("name", choices=sorted(figures.FIGURE_FIELDS), help="pcr (real) or pcrx (complex)")
    p.add_argument("--t-steps", type=int, default=100, help="grid points on [1, 2), endpoint excluded")
    p.add_argument("--n-max", type=int, default=50)
    p.add_argument("--surface-out", default=None,
                   help="file for the n,t,upper_bound table (default: <out stem>_surface.csv)")
    p.add_argument("--plot", default=None, help="also render both panels to this image file")
    _add_output(p)

    p = sub.add_parser("experiment", help="run a norm experiment and emit a JSON report")
    p.add_argument("kind", choices=("ratio", "ksz", "divergence"))
    p.add_argument("--m", type=int, default=2, help="degree / number of arguments")
    p.add_argument("--n", type=int, default=2, help="variables (ksz)")
    p.add_argument("--q", type=float, default=None, help="coefficient exponent (ratio default 2m/(m+1))")
    p.add_argument("--dims", type=_int_list, default=None, help="n values for divergence, e.g. 4,8,16")
    p.add_argument("--input", default=None, help="JSON form file for ratio (default: Littlewood form)")
    p.add_argument("--mode", choices=("multilinear", "polynomial"), default="multilinear")
    p.add_argument("--restarts", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=64)
    _add_output(p, default_format="json")
    return parser


def _report_text(rep: ExperimentReport, out: OutputSpec) -> str:
    if out.format == "json":
        return rep.to_json() + "\n"
    if rep.checks:
        rows = [(c.name, c.passed, c.first_violation, c.detail) for c in rep.checks]
        return rows_to_csv(("check", "passed", "first_violation", "detail"), rows, out.precision)
    rows = [(r["n"], r["stat_max"], r["stat_mean"]) for r in rep.per_n]
    return rows_to_csv(("n", "stat_max", "stat_mean"), rows, out.precision)


def table_text(table: ConstantTable, out: OutputSpec) -> str:
    if out.format == "json":
        return table_to_json(("n", "value"), table.values, out.precision)
    return rows_to_csv(("n", "value"), table.values, out.precision)


def cmd_constants(args, out: OutputSpec) -> int:
    spec = SequenceSpec(ScalarField(args.scalars), Family(args.family), args.t)
    emit(table_text(constant_table(spec, args.n_max), out), out.destination)
    return EXIT_OK


def cmd_verify(args, out: OutputSpec) -> int:
    fn = SUITES[args.suite]
    rep = fn() if args.n_max is None else fn(args.n_max)
    emit(_report_text(rep, out), out.destination)
    return EXIT_OK if rep.passed else EXIT_VERIFY


def _surface_path(args) -> str | None:
    if args.surface_out:
        return args.surface_out
    if args.out in (None, "-"):
        return None
    stem, _ = os.path.splitext(args.out)
    return stem + "_surface.csv"


def cmd_figure(args, out: OutputSpec) -> int:
    coeffs = figures.coefficient_rows(args.name, args.t_steps)
    surface = figures.surface_rows(args.name, args.t_steps, args.n_max)
    if out.format == "json":
        doc = {
            "coefficients": json.loads(table_to_json(("t", "p", "c", "r"), coeffs, out.precision)),
            "surface": json.loads(table_to_json(("n", "t", "upper_bound"), surface, out.precision)),
        }
        emit(json.dumps(doc, ensure_ascii=False) + "\n", out.destination)
    else:
        first = rows_to_csv(("t", "p", "c", "r"), coeffs, out.precision)
        second = rows_to_csv(("n", "t", "upper_bound"), surface, out.precision)
        surface_dest = _surface_path(args)
        if surface_dest is None:
            emit(first + "\n" + second, out.destination)
        else:
            emit(first, out.destination)
            emit(second, surface_dest)
    if args.plot:
        figures.render(args.name, coeffs, surface, args.plot)
    return EXIT_OK


def _ratio_report(args) -> ExperimentReport:
    if args.input:
        with open(args.input, encoding="utf-8") as fh:
            form = from_json_obj(json.load(fh))
        source = args.input
    else:
        form, source = littlewood_form(), "littlewood"
    if not hasattr(form, "dims"):
        raise DomainError("ratio expects a multilinear form")
    if not form.is_real:
        raise DomainError("ratio uses the exact real sup norm; complex coefficients are not supported")
    q = args.q if args.q is not None else 2 * form.m / (form.m + 1)
    sup = sup_norm_real_exact(form)
    rep = ExperimentReport("ratio", {"form": source, "m": form.m, "dims": list(form.dims), "q": q}, seed=None)
    rep.extras = {"sup_norm": sup, "coeff_lq_norm": coeff_lq_norm(form, q), "bh_ratio": bh_ratio(form, q),
                  "norm": "exact"}
    if q == 2 * form.m / (form.m + 1):
        rep.extras["lower_bound"] = lower_bound(form.m, 1.0)
    rep.verdict = "computed"
    return rep


def cmd_experiment(args, out: OutputSpec) -> int:
    if args.kind == "ratio":
        rep = _ratio_report(args)
    elif args.kind == "ksz":
        rep = ksz.ksz_search(args.m, args.n, restarts=args.restarts)
    else:
        q = args.q if args.q is not None else 1.2
        n_list = args.dims if args.dims is not None else [4, 8, 16]
        rep = ksz.divergence_experiment(args.m, q, n_list, seed=args.seed, trials=args.trials,
                                        mode=args.mode, restarts=args.restarts)
    emit(_report_text(rep, out), out.destination)
    return EXIT_OK


COMMANDS = {"constants": cmd_constants, "verify": cmd_verify, "figure": cmd_figure, "experiment": cmd_experiment}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = OutputSpec(args.format, args.precision, args.out)
        return COMMANDS[args.command](args, out)
    except (CapacityError, OverflowError, MemoryError) as exc:
        print(f"bhconst: capacity exceeded: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except OSError as exc:
        print(f"bhconst: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (DomainError, ValueError, KeyError) as exc:
        print(f"bhconst: invalid arguments: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
