"""Exact 1-D transfer-matrix cross-check model.

Independent of the amplitude series: two delta-function exchange
scatterers g*(S.sigma)*delta(x - x_i) on a continuum (units with
hbar = 2m = k = 1), separated by a dimensionless phase kd.  Total S_z is
conserved, so for an incident spin-up electron on two spin-down
impurities the problem closes in the three channels
{|u,dd>, |d,ud>, |d,du>}; each channel carries a right- and a
left-mover, giving a 6x6 transfer matrix.

Only qualitative agreement with the amplitude series is claimed: flux
conservation, flip-channel symmetry at small coupling, and existence of
structure as the coupling grows.  No parameter mapping g <-> j_rho.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# S.sigma = 2*SWAP - 1 in the Pauli convention.  Channel matrices for
# the electron exchanging with impurity 1 resp. 2 in the basis
# {|u,dd>, |d,ud>, |d,du>}.
M_IMP1 = np.array([[-1, 2, 0], [2, -1, 0], [0, 0, 1]], dtype=complex)
M_IMP2 = np.array([[-1, 0, 2], [0, 1, 0], [2, 0, -1]], dtype=complex)

# Single-impurity sector {|u,d>, |d,u>}.
M_SINGLE = np.array([[-1, 2], [2, -1]], dtype=complex)


@dataclass(frozen=True)
class SMatrix:
    """Transmission/reflection blocks; transmission is quoted relative
    to free propagation (so g = 0 gives the identity).  `free_phase` is
    the factored-out propagation phase, restored when assembling the
    full scattering matrix."""

    transmission: np.ndarray       # left incidence
    reflection: np.ndarray
    transmission_rev: np.ndarray   # right incidence
    reflection_rev: np.ndarray
    free_phase: complex

    def full(self) -> np.ndarray:
        """6x6 (or 4x4) scattering matrix mapping in- to out-amplitudes.

        Uses the raw transmission blocks (free phase included), which is
        the convention under which flux conservation reads S^dag S = I.
        """
        return np.block(
            [
                [self.reflection, self.transmission_rev * self.free_phase],
                [self.transmission * self.free_phase, self.reflection_rev],
            ]
        )


def _delta_transfer(m: np.ndarray, g: float) -> np.ndarray:
    """Transfer matrix of one matrix-valued delta scatterer at k = 1."""
    n = m.shape[0]
    q = -0.5j * g * m
    eye = np.eye(n)
    return np.block([[eye + q, q], [-q, eye - q]])


def _propagation(kd: float, n: int) -> np.ndarray:
    phases = np.concatenate([np.full(n, np.exp(1j * kd)), np.full(n, np.exp(-1j * kd))])
    return np.diag(phases)


def _smatrix_from_transfer(total: np.ndarray, free_phase: complex) -> SMatrix:
    n = total.shape[0] // 2
    t11, t12 = total[:n, :n], total[:n, n:]
    t21, t22 = total[n:, :n], total[n:, n:]
    inv_t22 = np.linalg.inv(t22)
    reflection = -inv_t22 @ t21
    transmission = (t11 + t12 @ reflection) / free_phase
    transmission_rev = inv_t22 / free_phase
    reflection_rev = t12 @ inv_t22
    return SMatrix(transmission, reflection, transmission_rev, reflection_rev, free_phase)


def exact_transfer_matrix(g: float, kd: float) -> SMatrix:
    """Exact two-impurity scattering solution in the three spin channels."""
    if not (np.isfinite(g) and np.isfinite(kd)):
        raise ValueError("g and kd must be finite")
    total = _delta_transfer(M_IMP2, g) @ _propagation(kd, 3) @ _delta_transfer(M_IMP1, g)
    return _smatrix_from_transfer(total, np.exp(1j * kd))


def single_impurity_smatrix(g: float) -> SMatrix:
    """One exchange scatterer; used for the perturbative flip-ratio check."""
    if not np.isfinite(g):
        raise ValueError("g must be finite")
    return _smatrix_from_transfer(_delta_transfer(M_SINGLE, g), 1.0)
