import numpy as np
import pytest

from spinscatter.transfer import (
    M_IMP1,
    M_IMP2,
    M_SINGLE,
    exact_transfer_matrix,
    single_impurity_smatrix,
)

RNG = np.random.default_rng(7)


def test_channel_matrices_are_exchange_couplings():
    # S.sigma = 2*SWAP - 1: eigenvalues -3 (singlet) and +1 (triplet)
    for m in (M_IMP1, M_IMP2, M_SINGLE):
        vals = np.sort(np.linalg.eigvalsh(m))
        assert vals[0] == pytest.approx(-3.0)
        assert np.allclose(vals[1:], 1.0)


def test_free_propagation():
    s = exact_transfer_matrix(0.0, 1.3)
    assert np.abs(s.transmission - np.eye(3)).max() <= 1e-14
    assert np.abs(s.reflection).max() <= 1e-14


def test_smatrix_unitarity_random_parameters():
    for _ in range(100):
        g = RNG.uniform(-3.0, 3.0)
        kd = RNG.uniform(0.0, 10.0)
        full = exact_transfer_matrix(g, kd).full()
        err = np.abs(full.conj().T @ full - np.eye(6)).max()
        assert err <= 1e-10


def test_flux_conservation_per_incident_channel():
    for _ in range(20):
        s = exact_transfer_matrix(RNG.uniform(-2, 2), RNG.uniform(0, 8))
        for ch in range(3):
            flux = (
                np.abs(s.transmission[:, ch]) ** 2 + np.abs(s.reflection[:, ch]) ** 2
            ).sum()
            assert flux == pytest.approx(1.0, abs=1e-10)


def test_single_impurity_flip_ratio_first_order():
    # S.sigma |ud> = -|ud> + 2|du>: flip/no-flip amplitude ratio is 2
    s = single_impurity_smatrix(1e-4)
    ratio = abs(s.reflection[1, 0] / s.reflection[0, 0])
    assert ratio == pytest.approx(2.0, abs=1e-3)


def test_single_impurity_unitarity():
    for g in (0.1, 1.0, 5.0):
        full = single_impurity_smatrix(g).full()
        assert np.abs(full.conj().T @ full - np.eye(4)).max() <= 1e-10


def test_two_impurity_flip_channel_symmetry_small_coupling():
    # at leading order the two flip channels pick up equal amplitude
    s = exact_transfer_matrix(1e-4, 0.7)
    b, c = s.transmission[1, 0], s.transmission[2, 0]
    assert abs(abs(b) - abs(c)) <= 1e-3 * abs(b)


def test_rejects_nonfinite():
    with pytest.raises(ValueError):
        exact_transfer_matrix(np.inf, 1.0)
    with pytest.raises(ValueError):
        single_impurity_smatrix(np.nan)
