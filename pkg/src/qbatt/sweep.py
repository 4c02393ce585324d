"""Parameter-sweep engine: config resolution, figure presets, deterministic
parallel grid evaluation, and self-describing CSV output.

Config files are flat `key = value` text with `#` comments. Axes are given
as `axis1 = name:min:max:points`. A sweep CSV records everything needed to
reproduce itself byte-identically in `# meta:` header lines.
"""

import concurrent.futures
import math
from dataclasses import dataclass

import numpy as np

from . import __version__, liouville, model, observe, spectra
from .errors import ConfigError, UnknownPreset
from .model import StateSpec

AXIS_NAMES = ("delta", "delta_bar", "F", "T_bar", "dT", "mu_bar", "dmu",
              "T", "mu", "theta", "phi")

# every key accepted in `fixed`; axes draw from the subset above
PARAM_KEYS = ("delta", "delta_bar", "F", "omega_c", "omega_d",
              "omega_battery", "alpha", "alpha1", "alpha2",
              "T", "T_bar", "dT", "T1", "T2",
              "mu", "mu_bar", "dmu", "mu1", "mu2", "theta", "phi")

_TEMP_KEYS = ("T", "T_bar", "dT", "T1", "T2")
_MU_KEYS = ("mu", "mu_bar", "dmu", "mu1", "mu2")

EQUATIONS = ("redfield", "lindblad-pheno")

_TOMO_COLS = tuple(f"t_{a}_{b}" for a in ("ee", "eg", "ge", "gg")
                   for b in ("ee", "eg", "ge", "gg"))


@dataclass(frozen=True)
class Axis:
    name: str
    lo: float
    hi: float
    points: int

    def values(self):
        step = (self.hi - self.lo) / (self.points - 1)
        return [self.lo + step * i for i in range(self.points)]

    def spec(self):
        return f"{self.name}:{self.lo!r}:{self.hi!r}:{self.points}"


@dataclass
class SweepConfig:
    equation: str
    statistics: str
    initial_state: StateSpec
    fixed: dict
    axes: tuple
    tau: float = 20000.0
    gap_tol: float = spectra.DEFAULT_GAP_TOL
    output: str | None = None
    threads: int = 1


@dataclass(frozen=True)
class SweepRow:
    axis_values: tuple
    gap: float
    bistable: bool
    energy: float
    ergotropy: float
    efficiency: float
    concurrence: float
    tomogram: tuple
    error: str | None = None


def parse_state(token: str) -> StateSpec:
    """Initial-state tokens: eg | ge | sym | bloch | bloch:theta:phi |
    vec:z1,z2,z3,z4. Bare `bloch` reads theta and phi per grid point."""
    token = token.strip()
    if token in ("eg", "ge"):
        return StateSpec(token, source=token)
    if token == "sym":
        return model.symmetric_state()
    if token == "bloch":
        return StateSpec("bloch", source="bloch")
    if token.startswith("bloch:"):
        parts = token.split(":")
        if len(parts) != 3:
            raise ConfigError(f"bloch state needs bloch:theta:phi, got {token!r}")
        try:
            theta, phi = float(parts[1]), float(parts[2])
        except ValueError as exc:
            raise ConfigError(f"bad bloch angles in {token!r}") from exc
        return StateSpec("bloch", theta=theta, phi=phi, source=token)
    if token.startswith("vec:"):
        try:
            amps = [complex(s) for s in token[4:].split(",")]
        except ValueError as exc:
            raise ConfigError(f"bad amplitudes in {token!r}") from exc
        return StateSpec("vector", vector=np.array(amps), source=token)
    raise ConfigError(f"unknown initial state {token!r}")


def _group_keys(mapping_keys, axes):
    present = set(mapping_keys)
    for ax in axes:
        if ax.name in present:
            raise ConfigError(f"{ax.name} is both an axis and a fixed value")
        present.add(ax.name)
    return present


def _check_exclusive(present, group, label):
    mean_aliases = [k for k in (group[0], group[1]) if k in present]
    if len(mean_aliases) > 1:
        raise ConfigError(
            f"{label}: give only one of {group[0]}/{group[1]}")
    pair = [k for k in group[3:] if k in present]
    if pair and (len(pair) != 2 or mean_aliases or group[2] in present):
        raise ConfigError(
            f"{label}: {group[3]}/{group[4]} must come as a pair and exclude "
            f"the {group[0]}/{group[1]}/{group[2]} forms")


def validate_config(cfg: SweepConfig):
    if cfg.equation not in EQUATIONS:
        raise ConfigError(f"equation must be one of {EQUATIONS}, "
                          f"got {cfg.equation!r}")
    if cfg.statistics not in ("boson", "fermion"):
        raise ConfigError(f"statistics must be boson or fermion, "
                          f"got {cfg.statistics!r}")
    if not 1 <= len(cfg.axes) <= 2:
        raise ConfigError("need one or two axes")
    names = [ax.name for ax in cfg.axes]
    if len(set(names)) != len(names):
        raise ConfigError(f"duplicate axis {names}")
    for ax in cfg.axes:
        if ax.name not in AXIS_NAMES:
            raise ConfigError(f"axis {ax.name!r} not sweepable; "
                              f"choose from {AXIS_NAMES}")
        if ax.points < 2:
            raise ConfigError(f"axis {ax.name} needs at least 2 points")
    for key in cfg.fixed:
        if key not in PARAM_KEYS:
            raise ConfigError(f"unknown parameter {key!r}")
    if cfg.tau < 0:
        raise ConfigError("tau must be nonnegative")
    if cfg.gap_tol <= 0:
        raise ConfigError("gap_tol must be positive")
    if cfg.threads < 1:
        raise ConfigError("threads must be at least 1")

    present = _group_keys(cfg.fixed, cfg.axes)
    _check_exclusive(present, _TEMP_KEYS, "temperature")
    _check_exclusive(present, _MU_KEYS, "chemical potential")
    if cfg.statistics == "boson" and any(k in present for k in _MU_KEYS):
        raise ConfigError("chemical potentials require fermion statistics")
    if "alpha" in present and ("alpha1" in present or "alpha2" in present):
        raise ConfigError("give alpha or the alpha1/alpha2 pair, not both")
    if ("alpha1" in present) != ("alpha2" in present):
        raise ConfigError("alpha1 and alpha2 must come as a pair")

    per_point_bloch = (cfg.initial_state.kind == "bloch"
                       and cfg.initial_state.source == "bloch")
    angles = {k for k in ("theta", "phi") if k in present}
    if angles and not per_point_bloch:
        raise ConfigError(
            "theta/phi parameters need `initial = bloch` (per-point angles)")
    if per_point_bloch and angles != {"theta", "phi"}:
        raise ConfigError(
            "`initial = bloch` needs theta and phi given as fixed values "
            "or axes")
    return cfg


def resolve_point(cfg: SweepConfig, overrides: dict):
    """Canonical physical parameters at one grid point: fixed values plus
    the axis overrides, defaults filled, aliases folded."""
    m = dict(cfg.fixed)
    m.update(overrides)
    delta = m.get("delta", 0.0)
    delta_bar = m.get("delta_bar", 0.0)
    out = {
        "delta1": delta_bar + 0.5 * delta,
        "delta2": delta_bar - 0.5 * delta,
        "drive": m.get("F", 0.5),
        "omega_c": m.get("omega_c", 5.0),
        "omega_d": m.get("omega_d", 5.0),
        "omega_battery": m.get("omega_battery", 1.0),
    }
    if "alpha1" in m:
        out["alpha1"], out["alpha2"] = m["alpha1"], m["alpha2"]
    else:
        out["alpha1"] = out["alpha2"] = m.get("alpha", 0.1)
    if "T1" in m:
        out["T1"], out["T2"] = m["T1"], m["T2"]
    else:
        tbar = m.get("T", m.get("T_bar", 1.0))
        dt = m.get("dT", 0.0)
        out["T1"], out["T2"] = tbar + 0.5 * dt, tbar - 0.5 * dt
    if cfg.statistics == "fermion":
        if "mu1" in m:
            out["mu1"], out["mu2"] = m["mu1"], m["mu2"]
        else:
            mbar = m.get("mu", m.get("mu_bar", 0.0))
            dmu = m.get("dmu", 0.0)
            out["mu1"], out["mu2"] = mbar + 0.5 * dmu, mbar - 0.5 * dmu
    else:
        out["mu1"] = out["mu2"] = 0.0
    if "theta" in m:
        out["theta"] = m["theta"]
    if "phi" in m:
        out["phi"] = m["phi"]
    return out


def _build_problem(cfg: SweepConfig, resolved: dict):
    from .reservoir import BathPair, ReservoirSpec
    p = model.ModelParams(
        delta1=resolved["delta1"], delta2=resolved["delta2"],
        coupling=1.0, drive=resolved["drive"],
        omega_d=resolved["omega_d"],
        omega_battery=resolved["omega_battery"])
    baths = BathPair(
        ReservoirSpec(cfg.statistics, temperature=resolved["T1"],
                      chemical_potential=resolved["mu1"],
                      alpha=resolved["alpha1"], cutoff=resolved["omega_c"]),
        ReservoirSpec(cfg.statistics, temperature=resolved["T2"],
                      chemical_potential=resolved["mu2"],
                      alpha=resolved["alpha2"], cutoff=resolved["omega_c"]))
    return p, baths


def _point_state(cfg: SweepConfig, resolved: dict) -> StateSpec:
    st = cfg.initial_state
    if st.kind == "bloch" and st.source == "bloch":
        return StateSpec("bloch", theta=resolved["theta"],
                         phi=resolved["phi"], source="bloch")
    return st


def compute_point(cfg: SweepConfig, overrides: dict):
    """Evaluate one grid point: build the generator, spectral report,
    tau-state, bare-frame transform, observables."""
    resolved = resolve_point(cfg, overrides)
    p, baths = _build_problem(cfg, resolved)
    if cfg.equation == "redfield":
        sup = liouville.redfield_general(p, baths)
    else:
        sup = liouville.lindblad_pheno(p, baths)
    report = spectra.analyze(sup, gap_tol=cfg.gap_tol)
    state = _point_state(cfg, resolved)
    if sup.basis_tag == "eigen":
        rho0 = model.eigen_density_matrix(state, sup.eigensystem)
        rho_tau = spectra.evolve_to(sup, rho0, cfg.tau)
        rho_bare = model.to_bare_frame(rho_tau, sup.eigensystem, cfg.tau, p)
    else:
        rho0 = state.density_matrix()
        rho_tau = spectra.evolve_to(sup, rho0, cfg.tau)
        u1 = model.rotating_phase(cfg.tau)
        rho_bare = u1 @ rho_tau @ u1.conj().T
    metrics = observe.battery_metrics(rho_bare, p.omega_battery)
    conc = observe.concurrence(rho_bare)
    tomo = observe.tomogram(rho_bare)
    axis_values = tuple(overrides[ax.name] for ax in cfg.axes)
    row = SweepRow(
        axis_values=axis_values,
        gap=report.gap,
        bistable=report.bistable,
        energy=metrics.energy,
        ergotropy=metrics.ergotropy,
        efficiency=metrics.efficiency,
        concurrence=conc,
        tomogram=tuple(float(x) for x in tomo.magnitudes.flatten()),
    )
    return row, report, rho_bare


def run_point(cfg: SweepConfig, overrides: dict) -> SweepRow:
    try:
        return compute_point(cfg, overrides)[0]
    except Exception as exc:
        at = ", ".join(f"{k}={v!r}" for k, v in sorted(overrides.items()))
        exc.args = (f"[at {at}] " + (str(exc.args[0]) if exc.args else ""),
                    *exc.args[1:])
        raise


def grid_points(cfg: SweepConfig):
    """Deterministic row order: first axis outer, second axis inner."""
    if len(cfg.axes) == 1:
        return [{cfg.axes[0].name: v} for v in cfg.axes[0].values()]
    out = []
    for v1 in cfg.axes[0].values():
        for v2 in cfg.axes[1].values():
            out.append({cfg.axes[0].name: v1, cfg.axes[1].name: v2})
    return out


def _task(args):
    cfg, idx, overrides = args
    try:
        return idx, compute_point(cfg, overrides)[0]
    except Exception as exc:
        axis_values = tuple(overrides[ax.name] for ax in cfg.axes)
        nan = float("nan")
        return idx, SweepRow(
            axis_values=axis_values, gap=nan, bistable=False, energy=nan,
            ergotropy=nan, efficiency=nan, concurrence=nan,
            tomogram=(nan,) * 16,
            error=f"{type(exc).__name__}: {exc}")


def run_sweep(cfg: SweepConfig):
    """Evaluate the whole grid (parallel over points) and write the CSV.

    Returns the list of rows; per-point failures become flagged rows and
    are reported by the CLI, not raised.
    """
    validate_config(cfg)
    if cfg.output is None:
        raise ConfigError("no output path set")
    points = grid_points(cfg)
    rows = [None] * len(points)
    if cfg.threads == 1:
        for i, overrides in enumerate(points):
            rows[i] = _task((cfg, i, overrides))[1]
    else:
        tasks = [(cfg, i, ov) for i, ov in enumerate(points)]
        chunk = max(1, len(tasks) // (cfg.threads * 8))
        with concurrent.futures.ProcessPoolExecutor(cfg.threads) as pool:
            for idx, row in pool.map(_task, tasks, chunksize=chunk):
                rows[idx] = row
    with open(cfg.output, "w", encoding="utf-8") as fh:
        fh.write(format_csv(cfg, rows))
    return rows


def _canonical_fixed(cfg: SweepConfig):
    """Fully resolved fixed parameters for the metadata block, aliases
    folded to canonical names, axis-swept names omitted."""
    axis_names = {ax.name for ax in cfg.axes}
    m = cfg.fixed
    out = []
    if "delta" not in axis_names:
        out.append(("delta", m.get("delta", 0.0)))
    if "delta_bar" not in axis_names:
        out.append(("delta_bar", m.get("delta_bar", 0.0)))
    if "F" not in axis_names:
        out.append(("F", m.get("F", 0.5)))
    out.append(("omega_c", m.get("omega_c", 5.0)))
    out.append(("omega_d", m.get("omega_d", 5.0)))
    out.append(("omega_battery", m.get("omega_battery", 1.0)))
    if "alpha1" in m:
        out.append(("alpha1", m["alpha1"]))
        out.append(("alpha2", m["alpha2"]))
    else:
        out.append(("alpha", m.get("alpha", 0.1)))
    if "T1" in m:
        tbar = 0.5 * (m["T1"] + m["T2"])
        dt = m["T1"] - m["T2"]
    else:
        tbar = m.get("T", m.get("T_bar", 1.0))
        dt = m.get("dT", 0.0)
    if not axis_names & {"T", "T_bar"}:
        out.append(("T_bar", tbar))
    if "dT" not in axis_names:
        out.append(("dT", dt))
    if cfg.statistics == "fermion":
        if "mu1" in m:
            mbar = 0.5 * (m["mu1"] + m["mu2"])
            dmu = m["mu1"] - m["mu2"]
        else:
            mbar = m.get("mu", m.get("mu_bar", 0.0))
            dmu = m.get("dmu", 0.0)
        if not axis_names & {"mu", "mu_bar"}:
            out.append(("mu_bar", mbar))
        if "dmu" not in axis_names:
            out.append(("dmu", dmu))
    for key in ("theta", "phi"):
        if key in m and key not in axis_names:
            out.append((key, m[key]))
    return out


def format_csv(cfg: SweepConfig, rows):
    lines = [f"# meta: version = {__version__}",
             f"# meta: equation = {cfg.equation}",
             f"# meta: statistics = {cfg.statistics}",
             f"# meta: initial = {cfg.initial_state.source}",
             f"# meta: tau = {cfg.tau!r}",
             f"# meta: gap_tol = {cfg.gap_tol!r}"]
    for i, ax in enumerate(cfg.axes, start=1):
        lines.append(f"# meta: axis{i} = {ax.spec()}")
    for key, value in _canonical_fixed(cfg):
        lines.append(f"# meta: {key} = {float(value)!r}")
    header = [ax.name for ax in cfg.axes]
    header += ["gap", "bistable", "energy", "ergotropy", "efficiency",
               "concurrence"]
    header += list(_TOMO_COLS)
    lines.append(",".join(header))
    for i, row in enumerate(rows):
        vals = [format(v, ".9g") for v in row.axis_values]
        vals.append(format(row.gap, ".9g"))
        vals.append("1" if row.bistable else "0")
        for v in (row.energy, row.ergotropy, row.efficiency,
                  row.concurrence):
            vals.append(format(v, ".9g"))
        vals.extend(format(v, ".9g") for v in row.tomogram)
        lines.append(",".join(vals))
        if row.error is not None:
            lines.append(f"# error at row {i}: {row.error}")
    return "\n".join(lines) + "\n"


def _parse_scalar(key, raw):
    try:
        return float(raw)
    except ValueError as exc:
        raise ConfigError(f"{key}: expected a number, got {raw!r}") from exc


def _parse_axis(raw):
    parts = raw.strip().split(":")
    if len(parts) != 4:
        raise ConfigError(f"axis spec needs name:min:max:points, got {raw!r}")
    name = parts[0].strip()
    try:
        lo, hi = float(parts[1]), float(parts[2])
        points = int(parts[3])
    except ValueError as exc:
        raise ConfigError(f"bad axis numbers in {raw!r}") from exc
    return Axis(name=name, lo=lo, hi=hi, points=points)


def parse_config(text: str, output=None, threads=None) -> SweepConfig:
    """Parse flat key=value config text into a validated SweepConfig."""
    entries = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected key = value, "
                              f"got {raw.strip()!r}")
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not value:
            raise ConfigError(f"line {lineno}: empty value for {key!r}")
        if key in entries:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        entries[key] = value

    entries.pop("version", None)  # tolerated so CSV meta round-trips
    equation = entries.pop("equation", None)
    if equation is None:
        raise ConfigError("missing required key: equation")
    statistics = entries.pop("statistics", None)
    if statistics is None:
        raise ConfigError("missing required key: statistics")
    initial = parse_state(entries.pop("initial", "eg"))
    tau = _parse_scalar("tau", entries.pop("tau", "20000"))
    gap_tol = _parse_scalar(
        "gap_tol", entries.pop("gap_tol", repr(spectra.DEFAULT_GAP_TOL)))
    if output is None:
        output = entries.pop("output", None)
    else:
        entries.pop("output", None)
    if threads is None:
        threads = int(_parse_scalar("threads", entries.pop("threads", "1")))
    else:
        entries.pop("threads", None)
    axes = []
    for key in ("axis1", "axis2"):
        if key in entries:
            axes.append(_parse_axis(entries.pop(key)))
    if "axis2" in entries and len(axes) < 2:
        raise ConfigError("axis2 given without axis1")
    fixed = {k: _parse_scalar(k, v) for k, v in entries.items()}
    cfg = SweepConfig(equation=equation, statistics=statistics,
                      initial_state=initial, fixed=fixed, axes=tuple(axes),
                      tau=tau, gap_tol=gap_tol, output=output,
                      threads=threads)
    return validate_config(cfg)


def config_from_csv(path, output=None, threads=None) -> SweepConfig:
    """Rebuild the SweepConfig recorded in a sweep CSV's meta lines."""
    meta = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            if line.startswith("# meta: "):
                meta.append(line[len("# meta: "):].rstrip("\n"))
    if not meta:
        raise ConfigError(f"{path} carries no meta lines")
    return parse_config("\n".join(meta), output=output, threads=threads)


def _base_fixed(**extra):
    fixed = {"F": 0.5, "omega_c": 5.0, "alpha": 0.1, "omega_d": 5.0,
             "omega_battery": 1.0, "delta_bar": 0.0}
    fixed.update(extra)
    return fixed


def _drive_map_fixed(**extra):
    fixed = _base_fixed(**extra)
    del fixed["F"]  # swept as an axis in the (F, delta) maps
    return fixed


_DELTA_AXIS = Axis("delta", -3.0, 3.0, 121)


def _presets():
    pi = math.pi
    return {
        # gap vs detuning, equilibrium boson / fermion
        "fig2a": lambda panel: SweepConfig(
            "redfield", "boson", parse_state("eg"),
            _base_fixed(T_bar=1.0, dT=0.0), (_DELTA_AXIS,)),
        "fig2b": lambda panel: SweepConfig(
            "redfield", "fermion", parse_state("eg"),
            _base_fixed(T_bar=1.0, dT=0.0, mu_bar=2.0, dmu=0.0),
            (_DELTA_AXIS,)),
        # tomography/concurrence vs detuning; panel picks the initial state
        "fig3": lambda panel: SweepConfig(
            "redfield", "boson", parse_state(panel or "eg"),
            _base_fixed(T_bar=1.0, dT=1.0), (_DELTA_AXIS,)),
        # fermion twin of fig3; panel is the potential bias
        "fig4": lambda panel: SweepConfig(
            "redfield", "fermion", parse_state("sym"),
            _base_fixed(T_bar=1.0, dT=0.0, mu_bar=2.0,
                        dmu=0.0 if panel is None else float(panel)),
            (_DELTA_AXIS,)),
        # efficiency over the initial-state sphere at resonance
        "fig5": lambda panel: SweepConfig(
            "redfield", "boson", parse_state("bloch"),
            _base_fixed(delta=0.0, T_bar=1.0, dT=0.0),
            (Axis("theta", 0.0, pi, 61), Axis("phi", 0.0, 2 * pi, 61))),
        # efficiency vs temperature bias at fixed phase; panel is phi
        "fig6a": lambda panel: SweepConfig(
            "redfield", "boson", parse_state("bloch"),
            _base_fixed(delta=0.0, T_bar=1.0, theta=pi / 4,
                        phi=0.0 if panel is None else float(panel)),
            (Axis("dT", -1.8, 1.8, 121),)),
        # efficiency vs phase at zero bias
        "fig6b": lambda panel: SweepConfig(
            "redfield", "boson", parse_state("bloch"),
            _base_fixed(delta=0.0, T_bar=1.0, dT=0.0, theta=pi / 4),
            (Axis("phi", 0.0, 2 * pi, 121),)),
        # efficiency vs common temperature / chemical potential
        "fig7a": lambda panel: SweepConfig(
            "redfield", "boson", parse_state("sym"),
            _base_fixed(delta=0.0, dT=0.0), (Axis("T", 0.1, 5.0, 121),)),
        "fig7b": lambda panel: SweepConfig(
            "redfield", "fermion", parse_state("sym"),
            _base_fixed(delta=0.0,
                        T_bar=1.0 if panel is None else float(panel),
                        dT=0.0, dmu=0.0),
            (Axis("mu", -6.0, 6.0, 121),)),
        # efficiency maps vs (F, delta); panels are T or mu choices
        "fig8": lambda panel: SweepConfig(
            "redfield", "boson", parse_state("eg"),
            _drive_map_fixed(T_bar=1.0 if panel is None else float(panel),
                             dT=0.0),
            (Axis("F", 0.05, 3.0, 61), Axis("delta", -3.0, 3.0, 61))),
        # efficiency map vs (dT, delta); panel is the mean temperature
        "fig9": lambda panel: SweepConfig(
            "redfield", "boson", parse_state("eg"),
            _base_fixed(T_bar=1.0 if panel is None else float(panel)),
            (Axis("dT", -1.8, 1.8, 61), Axis("delta", -3.5, 3.5, 61))),
        "fig10": lambda panel: SweepConfig(
            "redfield", "fermion", parse_state("eg"),
            _drive_map_fixed(T_bar=1.0, dT=0.0, dmu=0.0,
                             mu_bar=3.0 if panel is None else float(panel)),
            (Axis("F", 0.05, 3.0, 61), Axis("delta", -3.0, 3.0, 61))),
        # efficiency map vs (dmu, delta); panel is the mean potential
        "fig11": lambda panel: SweepConfig(
            "redfield", "fermion", parse_state("eg"),
            _base_fixed(T_bar=1.0, dT=0.0,
                        mu_bar=0.0 if panel is None else float(panel)),
            (Axis("dmu", -6.0, 6.0, 61), Axis("delta", -3.0, 3.0, 61))),
    }


PRESET_NAMES = tuple(sorted(_presets().keys()))

PANEL_DEFAULTS = {
    "fig3": ("eg", "sym"),
    "fig4": (0.0, 1.0, -1.0),
    "fig6a": (0.0, math.pi / 2),
    "fig7b": (1.0, 2.0, 3.0),
    "fig8": (1.0, 2.0, 3.0),
    "fig9": (1.0, 2.0, 3.0),
    "fig10": (3.0, 6.0, -3.0, -6.0),
    "fig11": (0.0, 3.0, 6.0, -6.0),
}


def preset(name, panel=None, output=None, threads=None, tau=None,
           gap_tol=None) -> SweepConfig:
    """Named parameter set for one of the shipped survey scans."""
    table = _presets()
    if name not in table:
        raise UnknownPreset(f"unknown preset {name!r}; "
                            f"choose from {', '.join(PRESET_NAMES)}")
    try:
        cfg = table[name](panel)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"bad panel value {panel!r} for {name}") from exc
    if output is not None:
        cfg.output = output
    elif cfg.output is None:
        cfg.output = f"{name}.csv"
    if threads is not None:
        cfg.threads = threads
    if tau is not None:
        cfg.tau = tau
    if gap_tol is not None:
        cfg.gap_tol = gap_tol
    return validate_config(cfg)
