"""Ideal sequential-interaction model.

A flying electron spin interacts successively with N stationary
spin-1/2 impurities through the same exchange unitary
U(jt) = exp(-i jt S.sigma) (Pauli convention on both spins).  For the
two-impurity case the post-selected entanglement and the success
probability of measuring the electron spin-down admit closed forms;
the dense simulation is the general engine and doubles as a
cross-check.

Everything is a function of the dimensionless angle jt (coupling J
times interaction time t); all derived quantities are pi/2-periodic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import core
from .core import PSI_MINUS, PSI_PLUS, apply_on_sites, basis_state
from .entanglement import eof_from_concurrence


@dataclass(frozen=True)
class IdealCoefficients:
    """Unnormalized final-state triple (alpha, beta, gamma) and the
    common prefactor exp(-2i jt)/2 of the two-impurity closed form."""

    alpha: complex
    beta: complex
    gamma: complex
    global_phase: complex


@dataclass(frozen=True)
class IdealPoint:
    jt: float
    p_down: float
    concurrence: float
    eof: float


def exchange_unitary(jt: float) -> np.ndarray:
    """4x4 exchange unitary: phase e^{3i jt} on the singlet, e^{-i jt}
    on the three triplet states."""
    if not np.isfinite(jt):
        raise ValueError("jt must be finite")
    singlet = np.outer(PSI_MINUS, PSI_MINUS.conj())
    triplet = np.eye(4) - singlet
    return np.exp(3j * jt) * singlet + np.exp(-1j * jt) * triplet


def closed_form_coefficients(jt: float) -> IdealCoefficients:
    """Final-state coefficients for electron-up, both impurities down."""
    if not np.isfinite(jt):
        raise ValueError("jt must be finite")
    z = np.exp(4j * jt)
    return IdealCoefficients(
        alpha=(1.0 + z) ** 2 / 2.0,
        beta=1.0 - z,
        gamma=(1.0 - np.exp(8j * jt)) / 2.0,
        global_phase=np.exp(-2j * jt) / 2.0,
    )


def closed_form_state(jt: float) -> np.ndarray:
    """Three-site final state built from the closed-form coefficients."""
    c = closed_form_coefficients(jt)
    psi = np.zeros(8, dtype=complex)
    psi[0b011] = c.global_phase * c.alpha  # |u,d,d>
    psi[0b101] = c.global_phase * c.beta   # |d,u,d>
    psi[0b110] = c.global_phase * c.gamma  # |d,d,u>
    return psi


def simulate_sequential(initial: np.ndarray, jt: float, n_impurities: int) -> np.ndarray:
    """Apply the exchange unitary between the electron (site 0) and each
    impurity 1..n_impurities in order."""
    if n_impurities < 1:
        raise ValueError("need at least one impurity")
    if core.n_sites_of(initial) != n_impurities + 1:
        raise ValueError(
            f"initial state has {core.n_sites_of(initial)} sites, "
            f"expected {n_impurities + 1}"
        )
    u = exchange_unitary(jt)
    psi = initial
    for imp in range(1, n_impurities + 1):
        psi = apply_on_sites(u, [0, imp], psi)
    return psi


def ideal_point(jt: float) -> IdealPoint:
    """Success probability and post-selected entanglement at one angle.

    p_down is the probability of finding the electron spin-down after
    the two interactions; the concurrence is that of the conditional
    impurity state beta|ud> + gamma|du> (zero by convention when the
    outcome never occurs).
    """
    c = closed_form_coefficients(jt)
    b2, g2 = abs(c.beta) ** 2, abs(c.gamma) ** 2
    p_down = (b2 + g2) / 4.0
    if p_down > 0.0:
        conc = 2.0 * abs(c.beta * c.gamma) / (b2 + g2)
    else:
        conc = 0.0
    return IdealPoint(jt=jt, p_down=p_down, concurrence=conc, eof=eof_from_concurrence(conc))


def sweep_ideal(jt_grid) -> list[IdealPoint]:
    grid = np.asarray(jt_grid, dtype=float)
    if grid.size == 0:
        raise ValueError("grid must be nonempty")
    if not np.all(np.isfinite(grid)):
        raise ValueError("grid values must be finite")
    return [ideal_point(float(jt)) for jt in grid]


def initial_state(n_impurities: int) -> np.ndarray:
    """Electron up, all impurities down."""
    return basis_state("u" + "d" * n_impurities)


def best_probability_at_entanglement(
    target_eof: float,
    lo: float = 0.0,
    hi: float = np.pi / 2,
    n_scan: int = 20001,
) -> IdealPoint | None:
    """Point maximizing p_down subject to eof >= target on [lo, hi].

    Grid scan followed by bisection of eof(jt) = target along the
    neighboring grid edge, which is where the constrained maximum sits
    (p_down and eof trade off monotonically along the curve).
    """
    if not 0.0 <= target_eof <= 1.0:
        raise ValueError("target entanglement must lie in [0, 1]")
    grid = np.linspace(lo, hi, n_scan)
    pts = sweep_ideal(grid)
    feasible = [i for i, p in enumerate(pts) if p.eof >= target_eof]
    if not feasible:
        return None
    best = max(feasible, key=lambda i: pts[i].p_down)

    # Refine along the edge toward the infeasible neighbor with larger p.
    for nb in (best - 1, best + 1):
        if 0 <= nb < len(pts) and pts[nb].eof < target_eof and pts[nb].p_down > pts[best].p_down:
            a, b = grid[best], grid[nb]
            for _ in range(200):
                m = 0.5 * (a + b)
                if ideal_point(m).eof >= target_eof:
                    a = m
                else:
                    b = m
            refined = ideal_point(a)
            if refined.p_down > pts[best].p_down:
                return refined
    return pts[best]
