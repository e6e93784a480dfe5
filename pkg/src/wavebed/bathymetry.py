"""The solid's shape function: a smooth, compactly supported bump.

The built-in profile is

    shape(x) = a * exp(1 - 1/(1 - ((x - c)/r)**2))   for |x - c| < r, else 0,

which is C-infinity with support exactly [c - r, c + r] and peak value ``a``
at the center.  Derivatives up to fourth order are analytic: writing
u = (x - c)/r and g(u) = exp(1 - 1/(1 - u**2)), each derivative factors as
g^(k)(u) = P_k(u) / (1 - u**2)**(2k) * g(u) with P_k an integer-coefficient
polynomial obtained from the recurrence

    P_1 = -2u,    P_{k+1} = (1 - u**2)**2 P_k' + (4k u (1 - u**2) - 2u) P_k.

The bottom elevation seen by the fluid is the translate b(t, x) =
shape(x - x_s(t)), periodically wrapped onto the box.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.polynomial import Polynomial
from scipy.integrate import quad

from .core import Grid1D
from .errors import SupportExceedsDomain

__all__ = ["Bathymetry", "bump", "eval_b", "integrate_over_support"]

# P_k polynomials of the bump derivative recurrence, k = 1..4.
_ONE_MINUS_U2 = Polynomial([1.0, 0.0, -1.0])


def _derivative_polys(max_order: int = 4) -> list[Polynomial]:
    polys = [Polynomial([1.0])]  # k = 0: P_0 = 1 with denominator exponent 0
    p = Polynomial([0.0, -2.0])
    polys.append(p)
    for k in range(1, max_order):
        bracket = Polynomial([0.0, 4.0 * k]) * _ONE_MINUS_U2 - Polynomial([0.0, 2.0])
        p = _ONE_MINUS_U2 ** 2 * p.deriv() + bracket * p
        polys.append(p)
    return polys


_POLYS = _derivative_polys()

# Keep clear of the support edge: the bump decays like exp(-1/(1 - u^2)),
# so everything closer than this to |u| = 1 is under 1e-300 anyway and
# evaluating the rational prefactor there risks overflow.
_EDGE = 1.0 - 1e-9


@dataclass(frozen=True)
class Bathymetry:
    """Compactly supported solid shape with analytic derivatives.

    amplitude = 0 is the flat-bottom degenerate case: empty support, zero
    volume, every sample zero.
    """

    amplitude: float
    radius: float
    center: float = 0.0

    def __post_init__(self):
        if self.radius <= 0.0:
            raise ValueError(f"radius must be positive, got {self.radius}")
        if self.amplitude == 0.0:
            vol = 0.0
            i2 = 0.0
        else:
            vol = quad(lambda x: self.shape(x), self.x_lo, self.x_hi, limit=200)[0]
            i2 = quad(
                lambda x: self.shape(x, order=1) ** 2,
                self.x_lo,
                self.x_hi,
                limit=200,
            )[0]
        object.__setattr__(self, "_volume", vol)
        object.__setattr__(self, "_grad_sq_integral", i2)

    @property
    def x_lo(self) -> float:
        return self.center - self.radius if self.amplitude != 0.0 else self.center

    @property
    def x_hi(self) -> float:
        return self.center + self.radius if self.amplitude != 0.0 else self.center

    @property
    def support(self) -> tuple[float, float]:
        return (self.x_lo, self.x_hi)

    @property
    def support_measure(self) -> float:
        return self.x_hi - self.x_lo

    @property
    def volume(self) -> float:
        """Integral of the shape over the line (the solid's scaled volume)."""
        return self._volume

    @property
    def grad_sq_integral(self) -> float:
        """Integral of (shape')**2, the ingredient of the added-mass scalar."""
        return self._grad_sq_integral

    def shape(self, x, order: int = 0):
        """Evaluate the order-th derivative of the shape at coordinates x."""
        if not 0 <= order <= 4:
            raise ValueError(f"derivative order must be in 0..4, got {order}")
        scalar = np.isscalar(x) or np.ndim(x) == 0
        x = np.atleast_1d(np.asarray(x, dtype=float))
        out = np.zeros_like(x)
        if self.amplitude != 0.0:
            u = (x - self.center) / self.radius
            inside = np.abs(u) < _EDGE
            ui = u[inside]
            one_m = 1.0 - ui * ui
            g = np.exp(1.0 - 1.0 / one_m)
            if order == 0:
                vals = g
            else:
                vals = _POLYS[order](ui) / one_m ** (2 * order) * g
            out[inside] = self.amplitude / self.radius ** order * vals
        return out[0] if scalar else out


def bump(amplitude: float, radius: float, center: float = 0.0) -> Bathymetry:
    """Convenience constructor for the built-in bump profile."""
    return Bathymetry(amplitude=amplitude, radius=radius, center=center)


def _check_fits(bath: Bathymetry, grid: Grid1D) -> None:
    if bath.support_measure >= grid.length:
        raise SupportExceedsDomain(
            f"support width {bath.support_measure:.6g} does not fit in the "
            f"box of length {grid.length:.6g}"
        )


def eval_b(bath: Bathymetry, x_s: float, grid: Grid1D, order: int = 0) -> np.ndarray:
    """Samples of the order-th derivative of shape(x - x_s) on the grid.

    Coordinates are wrapped periodically, so the translated bump stays a
    single compact profile on the circle for any displacement.
    """
    _check_fits(bath, grid)
    xi = grid.x - x_s - bath.center
    xi -= grid.length * np.round(xi / grid.length)
    return bath.shape(xi + bath.center, order=order)


def integrate_over_support(
    field: np.ndarray, bath: Bathymetry, x_s: float, grid: Grid1D
) -> float:
    """Integral of ``field`` over the translated support window.

    The grid samples are integrated through their trigonometric
    interpolant: the window integral is the interpolant's antiderivative
    evaluated at the exact endpoints plus the mean contribution.  This is
    spectrally accurate for smooth fields and, crucially, a smooth function
    of the displacement ``x_s`` -- a cell-snapped window would make the
    coupled right-hand side discontinuous along solid trajectories and
    destroy the stepper's temporal order.
    """
    _check_fits(bath, grid)
    if bath.support_measure == 0.0:
        return 0.0
    field = np.asarray(field, dtype=float)
    lo = x_s + bath.x_lo
    hi = x_s + bath.x_hi
    coef = np.fft.rfft(field) / grid.n
    k = grid.rfft_wavenumbers()
    mean_part = coef[0].real * (hi - lo)
    # one-sided spectrum: double interior bins, single Nyquist bin (even n)
    weights = np.full(k.size, 2.0)
    weights[0] = 0.0
    if grid.n % 2 == 0:
        weights[-1] = 1.0
    phase = (np.exp(1j * k[1:] * hi) - np.exp(1j * k[1:] * lo)) / (1j * k[1:])
    osc_part = float(np.sum(weights[1:] * np.real(coef[1:] * phase)))
    return mean_part + osc_part
