"""Command-line front end.

Subcommands::

    twomode evolve        --state tmss --r 4 --t 5 --T 1
    twomode sweep         --state tmss --r 4 --out sweep.csv [--figure 1]
    twomode sudden-death  --state tmss --r 4 --T 2 [--horizon 200]
    twomode steady-state  --T 1
    twomode figures 1 2 3 4 [--out-dir DIR]

Every key can also come from a flat ``key = value`` file passed with
``--config``; command-line flags override the file, which overrides the
built-in defaults.

Exit codes: 0 success, 2 validation error, 3 numerical-domain error, 4 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import os
import sys
import time

import numpy as np

from .dynamics import SystemParams, evolve, steady_state
from .errors import InvalidParameterError, InvalidStateError, NumericalDomainError
from .experiments import (
    MEASURES,
    SweepJob,
    SweepTable,
    figure_job,
    initial_state,
    run_sweep,
    sudden_death_time,
)
from .measures import asymptotic_log_negativity, asymptotic_simon, correlation_report

EXIT_OK, EXIT_VALIDATION, EXIT_NUMERICAL, EXIT_IO = 0, 2, 3, 4


def fmt(x) -> str:
    """12 significant digits, '.' decimal separator regardless of locale."""
    if isinstance(x, str):
        return x
    return format(float(x), ".12g")


def _measures(text: str) -> tuple:
    items = tuple(s.strip() for s in text.split(",") if s.strip())
    bad = [m for m in items if m not in MEASURES]
    if bad or not items:
        raise ValueError(f"expected a comma-separated subset of {','.join(MEASURES)}")
    return items


def _state(text: str) -> str:
    if text not in ("sep", "tmss"):
        raise ValueError("expected 'sep' or 'tmss'")
    return text


def _log_base(text: str) -> str:
    if text not in ("natural", "base2"):
        raise ValueError("expected 'natural' or 'base2'")
    return text


# key -> converter; every key is valid both in config files and as --key
KEYS = {
    "state": _state,
    "r": float,
    "m": float,
    "omega1": float,
    "omega2": float,
    "lambda": float,
    "T_min": float,
    "T_max": float,
    "T_points": int,
    "t_min": float,
    "t_max": float,
    "t_points": int,
    "log_base": _log_base,
    "out": str,
    "t": float,
    "T": float,
    "horizon": float,
    "measures": _measures,
    "figure": int,
}

DEFAULTS = {
    "m": 1.0,
    "omega1": 1.0,
    "omega2": 1.0,
    "lambda": 0.1,
    "T_min": 0.0,
    "T_max": 4.0,
    "T_points": 41,
    "t_min": 0.0,
    "t_max": 20.0,
    "t_points": 81,
    "log_base": "natural",
    "horizon": 200.0,
    "measures": MEASURES,
    "T": 0.0,
}


class ConfigError(Exception):
    """Invalid or missing configuration; maps to exit code 2."""


def convert(key: str, raw: str):
    if key not in KEYS:
        raise ConfigError(f"unknown key: {key}")
    try:
        return KEYS[key](raw)
    except ValueError as exc:
        raise ConfigError(f"invalid value for key {key}: {raw!r} ({exc})") from None


def read_config(path: str) -> dict:
    """Parse ``key = value`` lines; ``#`` starts a comment."""
    values = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError(f"{path}:{lineno}: expected 'key = value'")
            key, raw = (part.strip() for part in line.split("=", 1))
            values[key] = convert(key, raw)
    return values


def resolve(flags: dict, config_path: str | None) -> dict:
    """Merge built-in defaults < config file < command-line flags."""
    merged = dict(DEFAULTS)
    if config_path is not None:
        merged.update(read_config(config_path))
    merged.update({k: v for k, v in flags.items() if v is not None})
    return merged


def require(cfg: dict, *keys):
    for key in keys:
        if cfg.get(key) is None:
            raise ConfigError(f"missing required key: {key}")


def params_from(cfg: dict) -> SystemParams:
    return SystemParams(m=cfg["m"], omega1=cfg["omega1"], omega2=cfg["omega2"], lam=cfg["lambda"])


def grid(cfg: dict, name: str) -> tuple:
    lo, hi, n = cfg[f"{name}_min"], cfg[f"{name}_max"], cfg[f"{name}_points"]
    if n < 1:
        raise ConfigError(f"invalid value for key {name}_points: must be >= 1")
    if n == 1:
        return (float(lo),)
    return tuple(np.linspace(lo, hi, n).tolist())


def write_csv(table: SweepTable, fh) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(table.columns)
    for row in table.rows:
        writer.writerow([fmt(v) for v in row])


def save_table(table: SweepTable, path: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        write_csv(table, fh)


def cmd_evolve(cfg, out):
    require(cfg, "state", "r", "t", "T")
    sigma0 = initial_state(cfg["state"], cfg["r"])
    sigma = evolve(sigma0, params_from(cfg), cfg["T"], cfg["t"])
    report = correlation_report(sigma, cfg["log_base"])
    print(f"# state={cfg['state']} r={fmt(cfg['r'])} t={fmt(cfg['t'])} T={fmt(cfg['T'])}", file=out)
    print("sigma =", file=out)
    for row in sigma:
        print("  " + " ".join(f"{fmt(v):>20}" for v in row), file=out)
    print(f"S = {fmt(report.simon_S)}", file=out)
    print(f"E_N = {fmt(report.log_negativity)}", file=out)
    print(f"D = {fmt(report.discord)}", file=out)
    print(f"C = {fmt(report.classical)}", file=out)
    print(f"I = {fmt(report.mutual_information)}", file=out)
    print(f"epsilon_branch = {report.epsilon_branch.value}", file=out)
    print(f"nu_bar_minus = {fmt(report.nu_bar_minus)}", file=out)
    print(f"nu_tilde_minus = {fmt(report.nu_tilde_minus)}", file=out)
    print(f"log_base = {report.base.value}", file=out)


def job_from(cfg) -> SweepJob:
    if cfg.get("figure") is not None:
        base = figure_job(cfg["figure"])
        return SweepJob(state=base.state, r=base.r, params=base.params,
                        t_grid=grid(cfg, "t"), T_grid=grid(cfg, "T"),
                        measures=base.measures, base=cfg["log_base"])
    require(cfg, "state", "r")
    return SweepJob(state=cfg["state"], r=cfg["r"], params=params_from(cfg),
                    t_grid=grid(cfg, "t"), T_grid=grid(cfg, "T"),
                    measures=cfg["measures"], base=cfg["log_base"])


def cmd_sweep(cfg, out):
    require(cfg, "out")
    job = job_from(cfg)
    start = time.perf_counter()
    table = run_sweep(job)
    save_table(table, cfg["out"])
    elapsed = time.perf_counter() - start
    print(f"wrote {len(table)} rows to {cfg['out']} in {elapsed:.3f} s", file=sys.stderr)


def cmd_sudden_death(cfg, out):
    require(cfg, "state", "r", "T")
    sigma0 = initial_state(cfg["state"], cfg["r"])
    res = sudden_death_time(sigma0, params_from(cfg), cfg["T"], cfg["horizon"])
    lo, hi = res.bracket
    if not res.found:
        print(f"no crossing within horizon {fmt(cfg['horizon'])}", file=out)
    elif res.initially_separable:
        print("initial state is not entangled: crossing at t* = 0", file=out)
    else:
        print(f"t* = {fmt(res.crossing_time)}", file=out)
    print(f"bracket = [{fmt(lo)}, {fmt(hi)}]", file=out)
    if res.residual is not None:
        print(f"|E_N(t*)| = {fmt(res.residual)}", file=out)


def cmd_steady_state(cfg, out):
    params = params_from(cfg)
    sigma = steady_state(params, cfg["T"])
    print(f"# T={fmt(cfg['T'])}", file=out)
    print("sigma_inf =", file=out)
    for row in sigma:
        print("  " + " ".join(f"{fmt(v):>20}" for v in row), file=out)
    print(f"S_inf = {fmt(asymptotic_simon(params, cfg['T']))}", file=out)
    print(f"E_N_inf = {fmt(asymptotic_log_negativity(params, cfg['T']))}", file=out)


def cmd_figures(cfg, figs, out_dir, out):
    valid = (1, 2, 3, 4)
    bad = [f for f in figs if f not in valid]
    if bad:
        raise ConfigError(f"unknown figure id(s) {bad}; valid ids are 1, 2, 3, 4")
    for fig in figs or valid:
        cfg_fig = dict(cfg, figure=fig)
        table = run_sweep(job_from(cfg_fig))
        path = os.path.join(out_dir, f"fig{fig}.csv")
        save_table(table, path)
        print(f"wrote {path} ({len(table)} rows)", file=out)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", metavar="PATH", help="flat key = value file")
    for key, conv in KEYS.items():
        common.add_argument(f"--{key}", dest=key, default=None, metavar=key.upper(),
                            help="start from the canned job of figure 1-4" if key == "figure" else None)

    parser = argparse.ArgumentParser(prog="twomode", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("evolve", parents=[common], help="evolve one state and print all measures")
    sub.add_parser("sweep", parents=[common], help="sweep a (t, T) grid and write CSV")
    sub.add_parser("sudden-death", parents=[common], help="find the entanglement sudden-death time")
    sub.add_parser("steady-state", parents=[common], help="print the asymptotic state")
    figs = sub.add_parser("figures", parents=[common], help="write fig1.csv ... fig4.csv")
    figs.add_argument("ids", nargs="*", type=int, help="figure ids (default: all)")
    figs.add_argument("--out-dir", default=".", help="directory for the CSV files")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout
    try:
        flags = {key: convert(key, getattr(args, key)) for key in KEYS
                 if getattr(args, key) is not None}
        cfg = resolve(flags, args.config)
        if args.command == "evolve":
            cmd_evolve(cfg, out)
        elif args.command == "sweep":
            cmd_sweep(cfg, out)
        elif args.command == "sudden-death":
            cmd_sudden_death(cfg, out)
        elif args.command == "steady-state":
            cmd_steady_state(cfg, out)
        elif args.command == "figures":
            cmd_figures(cfg, args.ids, args.out_dir, out)
    except (ConfigError, InvalidParameterError, InvalidStateError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except NumericalDomainError as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
