"""Command line front end.

Exit codes: 0 success, 2 configuration problems, 3 numeric failures
(non-convergence, domain errors, or flagged grid points in a sweep).
"""

import argparse
import sys

from . import __version__, sweep
from .errors import ConfigError, QbattError


def _parser():
    p = argparse.ArgumentParser(
        prog="qbatt",
        description="Steady-state sweeps for a driven two-qubit "
                    "charger/battery pair.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run a sweep from a config file")
    run.add_argument("--config", required=True, metavar="FILE")
    run.add_argument("--out", metavar="FILE",
                     help="override the config's output path")
    run.add_argument("--threads", type=int, metavar="N")
    run.set_defaults(func=_cmd_run)

    pre = sub.add_parser("preset", help="run a built-in figure preset")
    pre.add_argument("name")
    pre.add_argument("--panel", metavar="VALUE",
                     help="panel selector where the figure has several")
    pre.add_argument("--out", metavar="FILE")
    pre.add_argument("--threads", type=int, metavar="N")
    pre.add_argument("--tau", type=float, metavar="TIME")
    pre.add_argument("--gap-tol", type=float, metavar="X",
                     dest="gap_tol")
    pre.set_defaults(func=_cmd_preset)

    lst = sub.add_parser("list-presets", help="list figure presets")
    lst.set_defaults(func=_cmd_list)

    pt = sub.add_parser("point",
                        help="evaluate and dump a single grid point")
    pt.add_argument("--config", required=True, metavar="FILE")
    pt.add_argument("--at", required=True, metavar="K=V,...",
                    help="axis values (all axes) plus optional "
                         "parameter overrides")
    pt.set_defaults(func=_cmd_point)
    return p


def _read_config(path, out=None, threads=None):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc}") from exc
    # sweep output is self-describing: its meta lines are a full config
    if text.startswith("# meta:"):
        return sweep.config_from_csv(path, output=out, threads=threads)
    return sweep.parse_config(text, output=out, threads=threads)


def _finish(cfg, rows):
    bad = [(i, r) for i, r in enumerate(rows) if r.error is not None]
    for i, row in bad:
        at = ", ".join(f"{ax.name}={v:.9g}"
                       for ax, v in zip(cfg.axes, row.axis_values))
        print(f"point {i} ({at}) failed: {row.error}", file=sys.stderr)
    print(f"wrote {len(rows)} rows to {cfg.output}"
          + (f" ({len(bad)} flagged)" if bad else ""))
    return 3 if bad else 0


def _cmd_run(args):
    cfg = _read_config(args.config, out=args.out, threads=args.threads)
    return _finish(cfg, sweep.run_sweep(cfg))


def _panel_value(raw):
    if raw is None:
        return None
    try:
        return float(raw)
    except ValueError:
        return raw


def _cmd_preset(args):
    cfg = sweep.preset(args.name, panel=_panel_value(args.panel),
                       output=args.out, threads=args.threads,
                       tau=args.tau, gap_tol=args.gap_tol)
    return _finish(cfg, sweep.run_sweep(cfg))


def _cmd_list(args):
    for name in sweep.PRESET_NAMES:
        cfg = sweep.preset(name)
        axes = " x ".join(f"{ax.name}[{ax.lo:g}:{ax.hi:g}:{ax.points}]"
                          for ax in cfg.axes)
        line = (f"{name:7s} {cfg.equation:14s} {cfg.statistics:7s} "
                f"initial={cfg.initial_state.source:6s} {axes}")
        panels = sweep.PANEL_DEFAULTS.get(name)
        if panels:
            shown = ", ".join(f"{v:g}" if isinstance(v, float) else str(v)
                              for v in panels)
            line += f"  panels: {shown}"
        print(line)
    return 0


def _parse_at(raw):
    out = {}
    for item in raw.split(","):
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep or not key:
            raise ConfigError(f"--at entries need key=value, got {item!r}")
        try:
            out[key] = float(value)
        except ValueError as exc:
            raise ConfigError(f"--at {key}: expected a number, "
                              f"got {value.strip()!r}") from exc
    return out


def _cmd_point(args):
    cfg = _read_config(args.config)
    at = _parse_at(args.at)
    axis_names = [ax.name for ax in cfg.axes]
    missing = [n for n in axis_names if n not in at]
    if missing:
        raise ConfigError(f"--at must set the axis values {missing}")
    overrides = {n: at.pop(n) for n in axis_names}
    if at:
        for key in at:
            if key not in sweep.PARAM_KEYS:
                raise ConfigError(f"unknown parameter {key!r} in --at")
        cfg.fixed.update(at)
        sweep.validate_config(cfg)

    row, report, rho = sweep.compute_point(cfg, overrides)
    print("point: " + ", ".join(f"{k}={v:.9g}"
                                for k, v in overrides.items()))
    resolved = sweep.resolve_point(cfg, overrides)
    print("resolved: " + " ".join(f"{k}={v:.9g}"
                                  for k, v in sorted(resolved.items())))
    print(f"equation = {cfg.equation}, statistics = {cfg.statistics}, "
          f"initial = {cfg.initial_state.source}, tau = {cfg.tau:g}")
    print("generator spectrum (by descending real part):")
    for k, w in enumerate(report.eigenvalues):
        print(f"  {k:2d}: {w.real:+.12e} {w.imag:+.12e}j")
    print(f"gap = {report.gap:.9g}")
    print(f"kernel dimension = {report.kernel_dim}")
    print(f"bistable = {'yes' if report.bistable else 'no'}")
    print(f"energy = {row.energy:.9g}")
    print(f"ergotropy = {row.ergotropy:.9g}")
    print(f"efficiency = {row.efficiency:.9g}")
    print(f"concurrence = {row.concurrence:.9g}")
    print("state magnitudes (bare basis, rows ee,eg,ge,gg):")
    for i in range(4):
        print("  " + " ".join(f"{abs(rho[i, j]):.9g}" for j in range(4)))
    return 0


def main(argv=None):
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except (QbattError, ArithmeticError) as exc:
        print(f"numeric error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
