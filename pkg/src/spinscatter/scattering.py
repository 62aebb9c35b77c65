"""Realistic multiple-scattering model.

The transmitted channel of an electron scattering off two impurities is
a superposition A|up>|dd> + B|down>|ud> + C|down>|du>.  A, B, C are
given by the third-iteration (sixth order in lambda) amplitude series in
lambda = i pi j/2 and t = 1 - lambda, with j the dimensionless coupling
strength J*rho(eps_F).  The triple is renormalized to unit norm so it
reads as a conditional (transmitted) state.

The series is trusted on j in [0, 2], where it converges rapidly.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .entanglement import eof_from_concurrence

SERIES_RANGE = (0.0, 2.0)


@dataclass(frozen=True)
class SeriesParams:
    lam: complex
    t_amp: complex


@dataclass(frozen=True)
class ScatteringAmplitudes:
    a: complex  # electron up,   impurities down-down
    b: complex  # electron down, impurities up-down
    c: complex  # electron down, impurities down-up
    normalized: bool


@dataclass(frozen=True)
class ScatterPoint:
    j_rho: float
    p_down: float
    p_up: float
    concurrence: float
    eof: float
    abs_a: float
    abs_b: float
    abs_c: float


def series_params(j_rho: float) -> SeriesParams:
    if not np.isfinite(j_rho):
        raise ValueError("coupling strength must be finite")
    if j_rho < 0.0:
        raise ValueError("coupling strength must be nonnegative")
    lam = 0.5j * np.pi * j_rho
    return SeriesParams(lam=lam, t_amp=1.0 - lam)


def raw_series_order3(j_rho: float) -> ScatteringAmplitudes:
    """Unnormalized (A, B, C) polynomials of the third scattering iteration."""
    p = series_params(j_rho)
    lam, t = p.lam, p.t_amp
    a = t**2 + t**2 * lam**2 - 8 * t * lam**3 + 16 * lam**6 - 7 * t**2 * lam**4
    b = -2 * lam * t + 2 * t * lam**3 - 2 * t**2 * lam**2 + 6 * t * lam**5 + 8 * t**2 * lam**4
    c = -2 * lam * t + 8 * lam**4 - 2 * t * lam**3 + 2 * t**2 * lam**2 + 6 * t * lam**5
    return ScatteringAmplitudes(a=a, b=b, c=c, normalized=False)


def normalized_amplitudes(j_rho: float) -> ScatteringAmplitudes:
    raw = raw_series_order3(j_rho)
    nrm = np.sqrt(abs(raw.a) ** 2 + abs(raw.b) ** 2 + abs(raw.c) ** 2)
    if nrm < 1e-15:
        raise ValueError(f"degenerate raw amplitude triple at j_rho={j_rho}")
    return ScatteringAmplitudes(a=raw.a / nrm, b=raw.b / nrm, c=raw.c / nrm, normalized=True)


def scatter_point(j_rho: float) -> ScatterPoint:
    """Conditional success probability and entanglement at one coupling.

    Conditioned on transmission: p_down = |b|^2 + |c|^2 is the chance of
    a spin-down transmitted electron (the entangling outcome); spin-up
    leaves the impurities unentangled.
    """
    lo, hi = SERIES_RANGE
    if not lo <= j_rho <= hi:
        warnings.warn(
            f"j_rho={j_rho} outside the series validity range [{lo}, {hi}]",
            stacklevel=2,
        )
    amp = normalized_amplitudes(j_rho)
    b2, c2 = abs(amp.b) ** 2, abs(amp.c) ** 2
    p_down = b2 + c2
    conc = 2.0 * abs(amp.b * amp.c) / (b2 + c2) if p_down > 0.0 else 0.0
    return ScatterPoint(
        j_rho=j_rho,
        p_down=p_down,
        p_up=abs(amp.a) ** 2,
        concurrence=conc,
        eof=eof_from_concurrence(conc),
        abs_a=abs(amp.a),
        abs_b=abs(amp.b),
        abs_c=abs(amp.c),
    )


def sweep_scatter(j_grid) -> list[ScatterPoint]:
    grid = np.asarray(j_grid, dtype=float)
    if grid.size == 0:
        raise ValueError("grid must be nonempty")
    if not np.all(np.isfinite(grid)):
        raise ValueError("grid values must be finite")
    return [scatter_point(float(j)) for j in grid]


def _flip_imbalance(j_rho: float) -> float:
    raw = raw_series_order3(j_rho)
    return abs(raw.b) - abs(raw.c)


def find_max_entanglement(lo: float, hi: float, n_scan: int = 2001) -> list[float]:
    """Couplings in (lo, hi) where |B| = |C|, i.e. concurrence = 1.

    Sign-change scan of |B| - |C| on an n_scan grid, then bisection until
    the imbalance drops below 1e-12.  Returns all roots in increasing
    order; an empty list means no maximal-entanglement point bracketed.
    """
    if not 0.0 <= lo < hi <= SERIES_RANGE[1]:
        raise ValueError(f"need 0 <= lo < hi <= {SERIES_RANGE[1]}, got [{lo}, {hi}]")
    grid = np.linspace(lo, hi, n_scan)
    f = np.array([_flip_imbalance(j) for j in grid])
    roots = []
    for i in range(n_scan - 1):
        if f[i] == 0.0 and abs(raw_series_order3(grid[i]).b) > 1e-12:
            roots.append(float(grid[i]))
            continue
        if f[i] * f[i + 1] < 0.0:
            a, b = float(grid[i]), float(grid[i + 1])
            fa = f[i]
            while True:
                m = 0.5 * (a + b)
                fm = _flip_imbalance(m)
                if abs(fm) <= 1e-12 or (b - a) < 1e-16:
                    roots.append(m)
                    break
                if (fm > 0) == (fa > 0):
                    a, fa = m, fm
                else:
                    b = m
    return roots
