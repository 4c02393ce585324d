"""Exception hierarchy for the qbatt package."""


class QbattError(Exception):
    """Base class for all qbatt errors."""


class NonConvergence(QbattError):
    """An iterative numerical procedure exceeded its iteration cap."""


class NotHermitian(QbattError):
    """A matrix required to be Hermitian failed the tolerance check."""


class ResonanceRequired(QbattError):
    """An operation valid only at delta1 = delta2 = 0 was called off resonance."""


class DegenerateSpectrum(QbattError):
    """Two eigenenergies coincide; the eigenvector phase convention is ambiguous."""


class DomainError(QbattError):
    """A spectral function was evaluated outside its domain (e.g. Bose N at omega <= 0)."""


class StepTooLarge(QbattError):
    """Fixed-step integrator step exceeds the stability guard."""


class ConfigError(QbattError):
    """Invalid sweep configuration."""


class UnknownPreset(ConfigError):
    """Preset name not in the catalogue."""
