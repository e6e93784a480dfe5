"""Exception types shared across the solvers and the CLI."""


class WavebedError(Exception):
    """Base class for all wavebed errors."""


class MinimalDepthViolation(WavebedError):
    """Water depth dropped below the configured minimum (near-dry state)."""


class SupportExceedsDomain(WavebedError):
    """The solid's footprint does not fit inside the periodic box."""


class RegimeViolation(WavebedError):
    """Parameters violate the asymptotic regime required by the solver."""


class CflViolation(WavebedError):
    """Requested timestep exceeds the CFL bound for the current state."""


class NonFiniteState(WavebedError):
    """A NaN or Inf appeared in the state during time stepping."""


class SmoothnessLost(WavebedError):
    """Surface gradient exceeded the configured limit (incipient shock)."""


class NoContraction(WavebedError):
    """The fixed-point iteration stopped contracting (horizon too large)."""


class BoundViolated(WavebedError):
    """A runtime a priori bound failed; carries the first violating time."""

    def __init__(self, message, time=None):
        super().__init__(message)
        self.time = time


class ParseError(WavebedError):
    """Config file could not be parsed."""


class ValidationError(WavebedError):
    """Config failed validation; collects every violation, not just the first."""

    def __init__(self, problems):
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))
