"""Ohmic reservoir spectra and boson/fermion occupation statistics.

Frequencies and temperatures are in units of the system coupling, k_B = 1.
"""

import math
from dataclasses import dataclass

from .errors import ConfigError, DomainError

# exp(x) overflows float64 near 709; beyond this the occupations are
# exactly 0/1 at working precision anyway
_EXP_CLIP = 700.0


@dataclass(frozen=True)
class ReservoirSpec:
    """One bath: statistics kind, temperature, chemical potential (fermion
    only), and Ohmic spectral parameters."""

    statistics: str
    temperature: float
    chemical_potential: float = 0.0
    alpha: float = 0.1
    cutoff: float = 5.0

    def __post_init__(self):
        if self.statistics not in ("boson", "fermion"):
            raise ConfigError(f"unknown statistics {self.statistics!r}")
        if not self.temperature > 0:
            raise ConfigError(
                f"temperature must be positive, got {self.temperature}")
        if self.alpha < 0:
            raise ConfigError(f"alpha must be nonnegative, got {self.alpha}")
        if not self.cutoff > 0:
            raise ConfigError(f"cutoff must be positive, got {self.cutoff}")
        if self.statistics == "boson" and self.chemical_potential != 0.0:
            raise ConfigError("boson baths carry no chemical potential")


@dataclass(frozen=True)
class BathPair:
    """Charger bath and battery bath; both share the statistics kind."""

    charger_bath: ReservoirSpec
    battery_bath: ReservoirSpec

    def __post_init__(self):
        if self.charger_bath.statistics != self.battery_bath.statistics:
            raise ConfigError("baths must share the same statistics kind")

    @property
    def statistics(self):
        return self.charger_bath.statistics

    @property
    def mean_temperature(self):
        return 0.5 * (self.charger_bath.temperature
                      + self.battery_bath.temperature)

    @property
    def temperature_bias(self):
        """T1 - T2 (charger minus battery)."""
        return self.charger_bath.temperature - self.battery_bath.temperature

    @property
    def mean_potential(self):
        return 0.5 * (self.charger_bath.chemical_potential
                      + self.battery_bath.chemical_potential)

    @property
    def potential_bias(self):
        """mu1 - mu2 (charger minus battery)."""
        return (self.charger_bath.chemical_potential
                - self.battery_bath.chemical_potential)


def spectral_density(r: ReservoirSpec, omega: float):
    """Ohmic spectrum alpha * omega * exp(-omega/cutoff); zero for omega <= 0."""
    if omega <= 0.0:
        return 0.0
    return r.alpha * omega * math.exp(-omega / r.cutoff)


def occupation(r: ReservoirSpec, omega: float):
    """Mean particle number at frequency omega.

    Bose-Einstein for bosons (DomainError at omega <= 0), Fermi-Dirac for
    fermions.
    """
    if r.statistics == "boson":
        if omega <= 0.0:
            raise DomainError(
                f"boson occupation undefined at omega={omega} <= 0")
        x = omega / r.temperature
        if x >= _EXP_CLIP:
            return 0.0
        return 1.0 / math.expm1(x)
    x = (omega - r.chemical_potential) / r.temperature
    if x >= _EXP_CLIP:
        return 0.0
    if x <= -_EXP_CLIP:
        return 1.0
    return 1.0 / (math.exp(x) + 1.0)


def co_occupation(r: ReservoirSpec, omega: float):
    """N+1 for bosons, 1-N for fermions; exact complements by construction."""
    if r.statistics == "boson":
        return occupation(r, omega) + 1.0
    return 1.0 - occupation(r, omega)
