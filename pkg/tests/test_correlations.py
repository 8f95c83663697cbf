"""
Correlation Measure Testing
===========================
Concurrence, von Neumann entropies, mutual information and quantum discord.
"""

import numpy as np
import pytest
from scipy.stats import unitary_group


def _random_state(seed: int, rank: int = 4) -> np.ndarray:
    rng = np.random.default_rng(seed)
    a = rng.normal(size=(4, rank)) + 1j * rng.normal(size=(4, rank))
    rho = a @ a.conj().T
    return rho / np.trace(rho)


def _random_x_state(seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    p = rng.dirichlet(np.ones(4))
    rho = np.diag(p).astype(complex)
    rho[0, 3] = rng.uniform(0, 1) * np.sqrt(p[0] * p[3]) * np.exp(1j * rng.uniform(0, 2 * np.pi))
    rho[1, 2] = rng.uniform(0, 1) * np.sqrt(p[1] * p[2]) * np.exp(1j * rng.uniform(0, 2 * np.pi))
    rho[3, 0] = np.conj(rho[0, 3])
    rho[2, 1] = np.conj(rho[1, 2])
    return rho


def _bell_mixture(weights) -> np.ndarray:
    s = 1 / np.sqrt(2)
    vectors = [
        np.array([s, 0, 0, s]), np.array([s, 0, 0, -s]),
        np.array([0, s, s, 0]), np.array([0, s, -s, 0]),
    ]
    return sum(w * np.outer(v, v) for w, v in zip(weights, vectors)).astype(complex)


def _qubit_state(seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    a = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    m = a @ a.conj().T
    return m / np.trace(m)


class TestConcurrence:

    # ========== Reference Value Tests ==========

    def test_bell_and_mixed(self):
        """Test 1: Bell states have C = 1, the maximally mixed state C = 0"""
        from core.states import make_werner
        from correlations import concurrence
        assert concurrence(make_werner(1.0, "+")) == pytest.approx(1.0, abs=1e-7)
        assert concurrence(make_werner(1.0, "-")) == pytest.approx(1.0, abs=1e-7)
        assert concurrence(np.eye(4) / 4) == 0.0

    def test_werner_formula(self):
        """Test 2: Werner states have C = max(0, (3c - 1)/2)"""
        from core.states import make_werner
        from correlations import concurrence
        for c in np.linspace(0.0, 0.95, 20):
            assert concurrence(make_werner(c, "+")) == pytest.approx(max(0.0, (3 * c - 1) / 2), abs=1e-10)

    def test_werner_closed_form_helper(self):
        """Test 3: concurrence_werner broadcasts and returns floats for scalars"""
        from correlations import concurrence_werner
        assert isinstance(concurrence_werner(0.8, 0.0), float)
        assert concurrence_werner(0.8, 0.0) == pytest.approx(0.7)
        assert concurrence_werner(0.3, 0.0) == 0.0
        values = concurrence_werner(1.0, np.array([0.0, np.log(2.0)]))
        assert np.allclose(values, [1.0, 0.5])

    def test_product_states(self):
        """Test 4: Product states are unentangled"""
        from correlations import concurrence
        rho = np.kron(_qubit_state(1), _qubit_state(2))
        assert concurrence(rho) == pytest.approx(0.0, abs=1e-7)

    # ========== Consistency Tests ==========

    def test_sum_of_squares(self):
        """Test 5: Squared Wootters values sum to Tr(rho rho~)"""
        from correlations import wootters_diagnostics
        for seed in range(5):
            diag = wootters_diagnostics(_random_state(seed))
            assert diag.sum_of_squares_defect < 1e-12, f"seed {seed}: {diag.sum_of_squares_defect}"
            assert np.all(np.diff(diag.lambdas) <= 0), "lambdas not decreasing"

    def test_x_state_closed_form(self):
        """Test 6: X-state formula agrees with the Wootters eigenvalues"""
        from correlations import concurrence, concurrence_x_state, is_x_state, wootters_lambdas
        for seed in range(20):
            rho = _random_x_state(seed)
            assert is_x_state(rho)
            lam = wootters_lambdas(rho)
            wootters = max(0.0, lam[0] - lam[1] - lam[2] - lam[3])
            assert concurrence_x_state(rho) == pytest.approx(wootters, abs=1e-7), f"seed {seed}"
            assert concurrence(rho) == concurrence_x_state(rho)
        assert not is_x_state(_random_state(3))

    def test_local_unitary_invariance(self):
        """Test 7: Concurrence is invariant under U_a x U_b"""
        from correlations import concurrence
        for seed in range(5):
            rho = _random_state(seed)
            u = np.kron(unitary_group.rvs(2, random_state=seed), unitary_group.rvs(2, random_state=seed + 100))
            rotated = u @ rho @ u.conj().T
            assert concurrence(rotated) == pytest.approx(concurrence(rho), abs=1e-10)

    def test_invalid_matrix(self):
        """Test 8: Invalid matrices raise StateError"""
        from correlations import concurrence
        from core.errors import StateError
        with pytest.raises(StateError):
            concurrence(np.diag([0.6, 0.6, -0.1, -0.1]))


class TestEntropy:

    # ========== Entropy Tests ==========

    def test_partial_trace(self):
        """Test 1: Partial traces of a product state recover the factors"""
        from correlations import partial_trace
        a, b = _qubit_state(4), _qubit_state(5)
        rho = np.kron(a, b)
        assert np.allclose(partial_trace(rho, "a"), a)
        assert np.allclose(partial_trace(rho, "b"), b)
        with pytest.raises(ValueError):
            partial_trace(rho, "c")

    def test_von_neumann(self):
        """Test 2: Entropy in bits of pure and maximally mixed states"""
        from core.states import make_werner
        from correlations import von_neumann_entropy
        assert von_neumann_entropy(make_werner(1.0, "+")) == pytest.approx(0.0, abs=1e-12)
        assert von_neumann_entropy(np.eye(4) / 4) == pytest.approx(2.0)

    def test_mutual_information(self):
        """Test 3: I = 2 for a Bell state, 0 for product states"""
        from core.states import make_werner
        from correlations import mutual_information
        assert mutual_information(make_werner(1.0, "-")) == pytest.approx(2.0, abs=1e-12)
        assert mutual_information(np.eye(4) / 4) == pytest.approx(0.0, abs=1e-12)
        assert mutual_information(np.kron(_qubit_state(6), _qubit_state(7))) == pytest.approx(0.0, abs=1e-10)


class TestDiscord:

    # ========== Reference Value Tests ==========

    def test_reference_values(self):
        """Test 1: D = 0 for I/4, D = 1 for a Bell state"""
        from core.states import make_werner
        from correlations import discord, discord_bruteforce
        assert discord(np.eye(4) / 4) == pytest.approx(0.0, abs=1e-12)
        assert discord(make_werner(1.0, "+")) == pytest.approx(1.0, abs=1e-9)
        assert discord_bruteforce(make_werner(1.0, "+").rho) == pytest.approx(1.0, abs=1e-6)

    def test_werner_positive_when_separable(self):
        """Test 2: Separable Werner states still carry discord"""
        from core.states import make_werner
        from correlations import discord, concurrence
        rho = make_werner(0.3, "+")
        assert concurrence(rho) == 0.0
        assert discord(rho) > 1e-3

    def test_product_states_zero(self):
        """Test 3: Product states have zero discord"""
        from correlations import discord_bruteforce
        rho = np.kron(_qubit_state(8), _qubit_state(9))
        assert discord_bruteforce(rho, n_theta=31, n_phi=60) == pytest.approx(0.0, abs=1e-8)

    def test_classical_quantum_state_zero(self):
        """Test 4: States classical on the measured qubit b have zero discord"""
        from correlations import discord_bruteforce
        zero, one = np.diag([1.0, 0.0]), np.diag([0.0, 1.0])
        rho = 0.5 * (np.kron(_qubit_state(10), zero) + np.kron(_qubit_state(11), one))
        assert discord_bruteforce(rho, n_theta=31, n_phi=60) == pytest.approx(0.0, abs=1e-8)

    # ========== Agreement Tests ==========

    def test_closed_form_matches_bruteforce(self):
        """Test 5: Bell-diagonal closed form agrees with the Bloch-sphere search on 50 states"""
        from correlations import discord_bell_diagonal, discord_bruteforce, is_bell_diagonal
        rng = np.random.default_rng(12)
        for _ in range(50):
            rho = _bell_mixture(rng.dirichlet(np.ones(4)))
            assert is_bell_diagonal(rho)
            closed = discord_bell_diagonal(rho)
            brute = discord_bruteforce(rho, n_theta=31, n_phi=60)
            assert brute == pytest.approx(closed, abs=1e-6), f"{brute} vs {closed}"

    def test_bounded_by_mutual_information(self):
        """Test 6: 0 <= D <= I for general states"""
        from correlations import discord, mutual_information
        for seed in range(3):
            rho = _random_state(seed, rank=2)
            d = discord(rho, n_theta=31, n_phi=60)
            assert 0.0 <= d <= mutual_information(rho) + 1e-9

    def test_not_bell_diagonal(self):
        """Test 7: Closed form refuses states outside the Bell-diagonal family"""
        from correlations import discord, discord_bell_diagonal
        from core.errors import NotBellDiagonalError
        rho = _random_state(0)
        with pytest.raises(NotBellDiagonalError):
            discord_bell_diagonal(rho)
        with pytest.raises(NotBellDiagonalError):
            discord(rho, method="closed")
        with pytest.raises(ValueError):
            discord(rho, method="exact")


class TestTrajectory:

    # ========== Trajectory Tests ==========

    def test_columns_and_csv(self, tmp_path):
        """Test 1: Discord column sits between concurrence and mutual information"""
        from core.states import make_werner
        from correlations import correlation_trajectory
        states = [make_werner(c, "+") for c in (1.0, 0.6, 0.2)]
        trajectory = correlation_trajectory(states, [0.0, 1.0, 2.0], with_discord=True)
        names, table = trajectory.columns()
        assert names == ["t", "concurrence", "discord", "mutual_information"]
        assert table.shape == (3, 4)
        path = trajectory.to_csv(tmp_path / "traj.csv")
        assert path.read_text().splitlines()[0] == "t,concurrence,discord,mutual_information"

    def test_length_mismatch(self):
        """Test 2: States and grid must have the same length"""
        from core.states import make_werner
        from correlations import correlation_trajectory
        with pytest.raises(ValueError):
            correlation_trajectory([make_werner(0.5, "+")], [0.0, 1.0])
