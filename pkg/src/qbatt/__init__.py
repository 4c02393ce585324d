"""Open-system dynamics and energetics of a driven two-qubit quantum battery."""

__version__ = "0.1.0"

from .errors import (
    QbattError,
    NonConvergence,
    NotHermitian,
    ResonanceRequired,
    DegenerateSpectrum,
    DomainError,
    StepTooLarge,
    ConfigError,
    UnknownPreset,
)

from .model import ModelParams, StateSpec, symmetric_state
from .reservoir import BathPair, ReservoirSpec
from .liouville import lindblad_pheno, redfield_general, redfield_resonant
from .spectra import SpectralReport, analyze, evolve_to
from .observe import battery_metrics, concurrence, tomogram
from .sweep import SweepConfig, parse_config, preset, run_point, run_sweep

__all__ = [
    "__version__",
    "QbattError",
    "NonConvergence",
    "NotHermitian",
    "ResonanceRequired",
    "DegenerateSpectrum",
    "DomainError",
    "StepTooLarge",
    "ConfigError",
    "UnknownPreset",
    "ModelParams",
    "StateSpec",
    "symmetric_state",
    "BathPair",
    "ReservoirSpec",
    "lindblad_pheno",
    "redfield_general",
    "redfield_resonant",
    "SpectralReport",
    "analyze",
    "evolve_to",
    "battery_metrics",
    "concurrence",
    "tomogram",
    "SweepConfig",
    "parse_config",
    "preset",
    "run_point",
    "run_sweep",
]
