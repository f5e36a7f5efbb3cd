"""Command-line surface: plot-ready tables for every analysis in the package.

Subcommands compose through files: ``synth`` writes a seeded synthetic panel
in the standard CSV schema, which ``converge``, ``dist``, ``scaling`` and
``threshold`` consume like any real panel. Outputs are CSV/JSON only (no
chart rendering) and are byte-identical across reruns with the same
configuration and seed. Every CSV starts with a comment line carrying the
package version and a config hash; JSON files carry the same data under a
"_meta" key so they stay parseable.

Exit codes: 0 success, 1 usage error (bad flags, unreadable input path),
2 data error (validation, too little data), 3 numerical failure.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path

from . import __version__
from . import distributions as dist
from . import dynamics, panel, regress, scaling
from .errors import DebtkitError, DegenerateSample, DegenerateX, NoConvergence

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_NUMERIC = 3

_NUMERIC_ERRORS = (NoConvergence, DegenerateSample, DegenerateX)


def _parse_years(text: str) -> list[int]:
    """Parse '1970:1975' / '1990,1995' / mixes of both into a sorted year list."""
    years: set[int] = set()
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if ":" in part:
            lo, hi = part.split(":", 1)
            lo, hi = int(lo), int(hi)
            if hi < lo:
                raise ValueError(f"year range {part!r} is reversed")
            years.update(range(lo, hi + 1))
        else:
            years.add(int(part))
    if not years:
        raise ValueError(f"no years in {text!r}")
    return sorted(years)


def _config_hash(args: argparse.Namespace) -> str:
    """Short stable hash of the analysis parameters.

    File-location flags are excluded so the same analysis on the same data
    stamps identical headers wherever the files happen to live.
    """
    payload = {k: v for k, v in sorted(vars(args).items())
               if k not in ("func", "out", "panel", "deflator")}
    blob = json.dumps(payload, sort_keys=True, default=str)
    return hashlib.sha256(blob.encode()).hexdigest()[:12]


def _header(args: argparse.Namespace) -> str:
    return f"debtkit {__version__} config={_config_hash(args)} log=natural"


def _meta(args: argparse.Namespace) -> dict:
    return {"version": __version__, "config": _config_hash(args),
            "log": "natural"}


def _out_dir(args: argparse.Namespace) -> Path:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    return out


def _load_observations(args: argparse.Namespace) -> list[panel.PerCapitaObservation]:
    pl = panel.ingest_csv(args.panel, args.deflator)
    return panel.normalize(pl)


def _write_json(path: Path, payload: dict) -> None:
    with open(path, "w", encoding="utf-8") as f:
        json.dump(payload, f, indent=2, sort_keys=True)
        f.write("\n")
    print(f"wrote {path}")


def cmd_converge(args: argparse.Namespace) -> int:
    obs = _load_observations(args)
    years = _parse_years(args.years) if args.years else sorted(
        {o.year for o in obs})
    # slope_surface needs both endpoints; cap initial years below the last one
    t_list = [t for t in years if t < max(o.year for o in obs)]
    header = _header(args)
    out = _out_dir(args)
    for variable in panel.Variable:
        surface = regress.slope_surface(obs, variable, t_list, args.dt_max,
                                        args.r2_min)
        path = out / f"surface_{variable.value}.csv"
        regress.write_surface_csv(surface, path, header_comment=header)
        print(f"wrote {path} ({len(surface.entries)} fits, "
              f"{surface.n_dropped} below r2_min, {surface.n_skipped} skipped)")
    return EXIT_OK


def _dist_outputs(obs, suffix: str, args, out: Path, header: str) -> None:
    d_samples = [o.d for o in obs]
    r_samples = [o.ratio_R for o in obs]

    dist.write_histogram_csv(dist.histogram_pdf(d_samples, args.bins),
                             out / f"pdf_d{suffix}.csv", header_comment=header)
    print(f"wrote {out / f'pdf_d{suffix}.csv'}")
    dist.write_histogram_csv(dist.histogram_pdf(r_samples, args.bins),
                             out / f"pdf_R{suffix}.csv", header_comment=header)
    print(f"wrote {out / f'pdf_R{suffix}.csv'}")

    ranked_d = dist.zipf_ranks(d_samples)
    ranked_r = dist.zipf_ranks(r_samples)
    dist.write_ranks_csv(ranked_d, out / f"zipf_d{suffix}.csv",
                         header_comment=header)
    print(f"wrote {out / f'zipf_d{suffix}.csv'}")
    dist.write_ranks_csv(ranked_r, out / f"zipf_R{suffix}.csv",
                         header_comment=header)
    print(f"wrote {out / f'zipf_R{suffix}.csv'}")

    # default fit window covers the strictly positive prefix of each rank plot
    def window(ranked):
        if args.rank_window:
            return tuple(args.rank_window)
        return (1, sum(1 for _, v in ranked if v > 0))

    zipf_payload = {
        "d": dist.zipf_fit_dict(dist.fit_zipf_exponent(ranked_d, window(ranked_d))),
        "R": dist.zipf_fit_dict(dist.fit_zipf_exponent(ranked_r, window(ranked_r))),
        "_meta": _meta(args),
    }
    _write_json(out / f"zipf_fit{suffix}.json", zipf_payload)

    positive_r = [v for v in r_samples if v > 0]
    n_zero = len(r_samples) - len(positive_r)
    if n_zero:
        print(f"note: {n_zero} zero-debt ratios excluded from the gamma fit",
              file=sys.stderr)
    gamma_fit = dist.fit_gamma_mle(positive_r)
    payload = dist.gamma_fit_dict(gamma_fit)
    payload["n_zero_excluded"] = n_zero
    payload["_meta"] = _meta(args)
    _write_json(out / f"gamma_fit{suffix}.json", payload)


def cmd_dist(args: argparse.Namespace) -> int:
    obs = _load_observations(args)
    header = _header(args)
    out = _out_dir(args)
    _dist_outputs(obs, "", args, out, header)
    if args.group:
        wanted = (list(panel.IncomeGroup) if args.group == "all"
                  else [panel.IncomeGroup(args.group.upper())])
        for group in wanted:
            subset = panel.filter_income_group(obs, group)
            suffix = f"_{group.value.lower()}"
            if not subset:
                print(f"note: income group {group.value} is empty; "
                      f"*{suffix} files omitted", file=sys.stderr)
                continue
            try:
                _dist_outputs(subset, suffix, args, out, header)
            except DebtkitError as exc:
                print(f"note: income group {group.value}: {exc}; "
                      f"remaining *{suffix} files omitted", file=sys.stderr)
    return EXIT_OK


def cmd_scaling(args: argparse.Namespace) -> int:
    obs = _load_observations(args)
    years = _parse_years(args.years) if args.years else sorted(
        {o.year for o in obs})
    fits = scaling.gamma_trend(obs, years)
    out = _out_dir(args)
    path = out / "gamma_trend.csv"
    scaling.write_trend_csv(fits, path, header_comment=_header(args))
    skipped = sorted(set(years) - {f.year for f in fits})
    print(f"wrote {path} ({len(fits)} years)")
    if skipped:
        print(f"note: skipped years without enough data: "
              f"{','.join(map(str, skipped))}", file=sys.stderr)
    return EXIT_OK


def cmd_simulate(args: argparse.Namespace) -> int:
    params = dynamics.ModelParams(c=args.c, gamma=args.gamma, r_pop=args.r_pop,
                                  d0=args.d0, dt_step=args.dt_step,
                                  horizon=args.horizon)
    path_result = dynamics.simulate_model(params)
    out = _out_dir(args)
    header = _header(args)
    sim_path = out / "simpath.csv"
    dynamics.write_simpath_csv(path_result, sim_path, header_comment=header)
    print(f"wrote {sim_path} ({len(path_result.times)} points, "
          f"{path_result.terminal_flag.value})")
    if args.budget_d0 is not None:
        budget = dynamics.step_debt(dynamics.BudgetParams(
            d0=args.budget_d0, interest=args.budget_interest,
            primary_deficit=args.budget_deficit,
            horizon=int(round(args.horizon))))
        budget_path = out / "budget_path.csv"
        with open(budget_path, "w", newline="", encoding="utf-8") as f:
            f.write(f"# {header}\n")
            f.write("t,D\n")
            for t, value in enumerate(budget):
                f.write(f"{t},{float(value)!r}\n")
        print(f"wrote {budget_path}")
    return EXIT_OK


def cmd_threshold(args: argparse.Namespace) -> int:
    obs = _load_observations(args)
    out = _out_dir(args)
    header = _header(args)
    positive_r = [o.ratio_R for o in obs if o.ratio_R > 0]
    n_zero = sum(1 for o in obs if o.ratio_R == 0)
    fit = dist.fit_gamma_mle(positive_r)
    tail = fit.tail_probability(args.threshold)

    breaches_path = out / "threshold_breaches.csv"
    years = sorted({o.year for o in obs})
    with open(breaches_path, "w", newline="", encoding="utf-8") as f:
        f.write(f"# {header}\n")
        f.write("year,n_countries,n_above,countries\n")
        for year in years:
            in_year = [o for o in obs if o.year == year]
            above = sorted(o.country_code for o in in_year
                           if o.ratio_R > args.threshold)
            f.write(f"{year},{len(in_year)},{len(above)},"
                    f"{';'.join(above)}\n")
    print(f"wrote {breaches_path}")

    payload = {
        "threshold": args.threshold,
        "tail_probability": tail,
        "gamma_fit": dist.gamma_fit_dict(fit),
        "n_zero_excluded": n_zero,
        "_meta": _meta(args),
    }
    _write_json(out / "threshold_summary.json", payload)
    return EXIT_OK


def cmd_synth(args: argparse.Namespace) -> int:
    years = _parse_years(args.years)
    obs = dynamics.synthetic_convergent_panel(
        n_countries=args.n_countries, years=years, alpha=args.alpha,
        beta=args.beta, sigma=args.sigma, seed=args.seed,
        log_d0_range=tuple(args.log_d0_range),
        a_prefactor=args.a_prefactor, scaling_gamma=args.scaling_gamma)
    records = panel.records_from_observations(obs, population=args.population)
    deflator = panel.DeflatorSeries(
        values={y: 1.0 for y in [*years, panel.BASE_YEAR]})
    out = _out_dir(args)
    header = _header(args)
    panel_path = out / "panel_synth.csv"
    deflator_path = out / "deflator_synth.csv"
    panel.write_panel_csv(panel_path, records, header_comment=header)
    panel.write_deflator_csv(deflator_path, deflator, header_comment=header)
    print(f"wrote {panel_path} ({len(records)} rows)")
    print(f"wrote {deflator_path}")
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 1 on usage errors, not argparse's 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="debtkit",
                     description="Cross-country public-debt analysis toolkit")
    parser.add_argument("--version", action="version",
                        version=f"debtkit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_panel_flags(p):
        p.add_argument("--panel", required=True, help="panel CSV path")
        p.add_argument("--deflator", required=True, help="deflator CSV path")

    p = sub.add_parser("converge",
                       help="slope surfaces S(t, dt) for d, g, and R")
    add_panel_flags(p)
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--years", default=None,
                   help="initial years, e.g. 1970:2000 or 1970,1980 "
                        "(default: every panel year)")
    p.add_argument("--dt-max", type=int, default=15, help="largest horizon")
    p.add_argument("--r2-min", type=float, default=0.0,
                   help="drop fits below this r-squared")
    p.set_defaults(func=cmd_converge)

    p = sub.add_parser("dist",
                       help="histogram pdfs, gamma MLE, and Zipf fits for d and R")
    add_panel_flags(p)
    p.add_argument("--out", required=True)
    p.add_argument("--bins", type=int, default=50)
    p.add_argument("--rank-window", nargs=2, type=int, metavar=("LO", "HI"),
                   default=None,
                   help="Zipf fit ranks (default: all positive values)")
    p.add_argument("--group", choices=["low", "medium", "high", "all"],
                   default=None, help="also emit per-income-group outputs")
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("scaling", help="annual GDP-debt power-law exponents")
    add_panel_flags(p)
    p.add_argument("--out", required=True)
    p.add_argument("--years", default=None)
    p.set_defaults(func=cmd_scaling)

    p = sub.add_parser("simulate",
                       help="per-capita debt model path (and budget recursion)")
    p.add_argument("--out", required=True)
    p.add_argument("--c", type=float, default=0.05,
                   help="composite borrowing constant")
    p.add_argument("--gamma", type=float, default=0.9,
                   help="GDP-debt scaling exponent")
    p.add_argument("--r-pop", type=float, default=0.01,
                   help="population growth rate per year")
    p.add_argument("--d0", type=float, default=1.0,
                   help="initial per-capita debt")
    p.add_argument("--dt-step", type=float, default=1e-3,
                   help="Euler step in years")
    p.add_argument("--horizon", type=float, default=50.0, help="years")
    p.add_argument("--budget-d0", type=float, default=None,
                   help="also run the total-debt recursion from this level")
    p.add_argument("--budget-interest", type=float, default=0.05)
    p.add_argument("--budget-deficit", type=float, default=0.0)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("threshold",
                       help="R-above-threshold counts and gamma tail probability")
    add_panel_flags(p)
    p.add_argument("--out", required=True)
    p.add_argument("--threshold", type=float, default=0.6,
                   help="debt-to-GDP threshold (default 0.6)")
    p.set_defaults(func=cmd_threshold)

    p = sub.add_parser("synth",
                       help="seeded synthetic panel with known convergence speed")
    p.add_argument("--out", required=True)
    p.add_argument("--n-countries", type=int, default=100)
    p.add_argument("--years", required=True,
                   help="e.g. 1970:2005 (consecutive years recommended)")
    p.add_argument("--alpha", type=float, default=0.05,
                   help="per-year drift of log d")
    p.add_argument("--beta", type=float, default=0.03,
                   help="per-year convergence speed (negative = divergence)")
    p.add_argument("--sigma", type=float, default=0.1,
                   help="std of the yearly log-noise")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--log-d0-range", nargs=2, type=float,
                   metavar=("LO", "HI"), default=[-1.0, 3.0])
    p.add_argument("--a-prefactor", type=float, default=2.0)
    p.add_argument("--scaling-gamma", type=float, default=0.9)
    p.add_argument("--population", type=float, default=1e6,
                   help="constant population used to build nominal amounts")
    p.set_defaults(func=cmd_synth)

    return parser


def main(argv: "list[str] | None" = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits for --help/--version/errors
        return int(exc.code or 0)
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"debtkit: error: cannot read {exc.filename}", file=sys.stderr)
        return EXIT_USAGE
    except _NUMERIC_ERRORS as exc:
        print(f"debtkit: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except DebtkitError as exc:
        print(f"debtkit: data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except ValueError as exc:
        print(f"debtkit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
