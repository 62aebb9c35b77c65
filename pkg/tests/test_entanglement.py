import numpy as np
import pytest

from spinscatter.core import PSI_MINUS, PSI_PLUS, basis_state
from spinscatter.entanglement import (
    binary_entropy,
    concurrence_mixed,
    concurrence_pure,
    eof_from_concurrence,
)

RNG = np.random.default_rng(99)


def random_pure_two_qubit(rng=RNG):
    v = rng.normal(size=4) + 1j * rng.normal(size=4)
    return v / np.linalg.norm(v)


def random_single_qubit_unitary(rng=RNG):
    m = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    q, r = np.linalg.qr(m)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def werner_state(p):
    return p * np.outer(PSI_MINUS, PSI_MINUS.conj()) + (1 - p) * np.eye(4) / 4


class TestBinaryEntropy:
    def test_boundaries(self):
        assert binary_entropy(0.0) == 0.0
        assert binary_entropy(1.0) == 0.0

    def test_maximum(self):
        assert binary_entropy(0.5) == pytest.approx(1.0, abs=1e-15)

    def test_two_thirds(self):
        assert binary_entropy(2 / 3) == pytest.approx(0.918296, abs=5e-7)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            binary_entropy(1.5)
        with pytest.raises(ValueError):
            binary_entropy(-0.1)


class TestConcurrencePure:
    def test_bell(self):
        assert concurrence_pure(PSI_PLUS) == pytest.approx(1.0, abs=1e-15)

    def test_product(self):
        assert concurrence_pure(basis_state("ud")) == 0.0

    def test_conditional_state_form(self):
        beta, gamma = 1.0 - 1.0j, 1.0 + 0.0j
        amps = np.array([0.0, beta, gamma, 0.0])
        amps /= np.linalg.norm(amps)
        expected = 2 * abs(beta * gamma) / (abs(beta) ** 2 + abs(gamma) ** 2)
        assert concurrence_pure(amps) == pytest.approx(expected, abs=1e-14)

    def test_global_phase_invariance(self):
        for _ in range(50):
            v = random_pure_two_qubit()
            phase = np.exp(1j * RNG.uniform(0, 2 * np.pi))
            assert abs(concurrence_pure(v) - concurrence_pure(phase * v)) <= 1e-14

    def test_unnormalized_rejected(self):
        with pytest.raises(ValueError):
            concurrence_pure(np.array([1.0, 1.0, 0.0, 0.0]))


class TestEofFromConcurrence:
    def test_endpoints(self):
        assert eof_from_concurrence(0.0) == 0.0
        assert eof_from_concurrence(1.0) == pytest.approx(1.0, abs=1e-15)

    def test_ideal_operating_point(self):
        assert eof_from_concurrence(2 * np.sqrt(2) / 3) == pytest.approx(
            0.918296, abs=5e-7
        )

    def test_monotone(self):
        c = np.linspace(0, 1, 10_001)
        e = np.array([eof_from_concurrence(x) for x in c])
        assert np.all(np.diff(e) >= -1e-15)


class TestConcurrenceMixed:
    def test_pure_bell(self):
        rho = np.outer(PSI_MINUS, PSI_MINUS.conj())
        assert concurrence_mixed(rho) == pytest.approx(1.0, abs=1e-12)

    def test_maximally_mixed(self):
        assert concurrence_mixed(np.eye(4) / 4) == 0.0

    @pytest.mark.parametrize("p", [0.2, 0.5, 0.9])
    def test_werner(self, p):
        # independent oracle: eigenvalues of the non-Hermitian product
        # rho.(sy x sy).rho*.(sy x sy) on the explicit 4x4 matrix
        rho = werner_state(p)
        sy = np.array([[0, -1j], [1j, 0]])
        yy = np.kron(sy, sy)
        mu = np.linalg.eigvals(rho @ yy @ rho.conj() @ yy)
        lam = np.sort(np.sqrt(np.abs(mu)))[::-1]
        oracle = max(0.0, lam[0] - lam[1] - lam[2] - lam[3])
        assert oracle == pytest.approx(max(0.0, (3 * p - 1) / 2), abs=1e-12)
        assert concurrence_mixed(rho) == pytest.approx(oracle, abs=1e-10)

    def test_agrees_with_pure_formula(self):
        for _ in range(1000):
            v = random_pure_two_qubit()
            rho = np.outer(v, v.conj())
            assert abs(concurrence_mixed(rho) - concurrence_pure(v)) <= 1e-10

    def test_local_unitary_invariance(self):
        for _ in range(50):
            v = random_pure_two_qubit()
            rho = np.outer(v, v.conj())
            uv = np.kron(random_single_qubit_unitary(), random_single_qubit_unitary())
            rotated = uv @ rho @ uv.conj().T
            assert abs(concurrence_mixed(rotated) - concurrence_mixed(rho)) <= 1e-10

    def test_rejects_bad_density_matrix(self):
        with pytest.raises(ValueError):
            concurrence_mixed(np.eye(4))
        bad = np.eye(4) / 4 + 0.01j * np.eye(4)
        with pytest.raises(ValueError):
            concurrence_mixed(bad)
