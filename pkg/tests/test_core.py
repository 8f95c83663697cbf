"""
Core Model Testing
==================
Parameters, unit conversion, state constructors and state validation.
"""

import numpy as np
import pytest


def _cs_rb_physical(**overrides):
    from core.params import PhysicalParams, AMU, BOHR_RADIUS
    values = dict(
        m_A=132.905 * AMU,
        m_B=86.909 * AMU,
        a_B=100.4 * BOHR_RADIUS,
        a_AB=650 * BOHR_RADIUS,
        n0=1e20,
        sigma=200e-9,
        L=266e-9,
        D=532e-9,
        T=10e-9,
    )
    values.update(overrides)
    return PhysicalParams(**values)


class TestParameters:

    # ========== Unit Conversion Tests ==========

    def test_cs_rb_conversion(self):
        """Test 1: Cs-Rb parameters map onto the expected dimensionless set"""
        p = _cs_rb_physical().to_dimensionless()
        assert p.u == pytest.approx(0.26706, rel=1e-3), f"u = {p.u}"
        assert p.gAB == pytest.approx(1.7872, rel=1e-3), f"gAB = {p.gAB}"
        assert p.n0d == pytest.approx(0.8, rel=1e-12), f"n0d = {p.n0d}"
        assert p.theta == pytest.approx(0.07167, rel=1e-3), f"theta = {p.theta}"
        assert p.Ld == pytest.approx(1.33, rel=1e-12)
        assert p.Dd == pytest.approx(2.66, rel=1e-12)

    def test_scale_invariance(self):
        """Test 2: Rescaling sigma with compensating changes leaves the reservoir unchanged"""
        base = _cs_rb_physical()
        scaled = _cs_rb_physical(
            sigma=2 * base.sigma, a_B=2 * base.a_B, a_AB=2 * base.a_AB,
            n0=base.n0 / 8, T=base.T / 4, L=2 * base.L, D=2 * base.D,
        )
        a, b = base.to_dimensionless().as_dict(), scaled.to_dimensionless().as_dict()
        for name in a:
            assert b[name] == pytest.approx(a[name], rel=1e-12), f"{name} changed under rescaling"

    def test_a_rb_ratio(self):
        """Test 3: The default scattering length is one a_Rb"""
        assert _cs_rb_physical().a_B_over_aRb == pytest.approx(1.0)

    # ========== Domain Tests ==========

    @pytest.mark.parametrize("field", ["m_A", "n0", "sigma", "T"])
    def test_physical_rejects_nonpositive(self, field):
        """Test 4: Physical parameters must be positive"""
        from core.errors import ParameterDomainError
        with pytest.raises(ParameterDomainError):
            _cs_rb_physical(**{field: 0.0})

    def test_zero_temperature_allowed(self):
        """Test 5: theta = 0 is a valid reservoir, negative theta is not"""
        from core.params import ReservoirParams
        from core.errors import ParameterDomainError
        ReservoirParams(u=1.0, gAB=1.0, n0d=1.0, theta=0.0, Ld=1.0, Dd=2.0)
        with pytest.raises(ParameterDomainError):
            ReservoirParams(u=1.0, gAB=1.0, n0d=1.0, theta=-0.1, Ld=1.0, Dd=2.0)

    def test_non_finite_rejected(self):
        """Test 6: NaN and infinity are rejected"""
        from core.params import ReservoirParams
        from core.errors import ParameterDomainError
        with pytest.raises(ParameterDomainError):
            ReservoirParams(u=float("nan"), gAB=1.0, n0d=1.0, theta=0.0, Ld=1.0, Dd=2.0)
        with pytest.raises(ParameterDomainError):
            ReservoirParams(u=1.0, gAB=float("inf"), n0d=1.0, theta=0.0, Ld=1.0, Dd=2.0)

    def test_scale_scattering(self, bench_moderate):
        """Test 7: u is linear in the scattering length"""
        from core.params import scale_scattering
        from core.errors import ParameterDomainError
        assert scale_scattering(bench_moderate, 2.5).u == pytest.approx(2.5 * bench_moderate.u)
        with pytest.raises(ParameterDomainError):
            scale_scattering(bench_moderate, 0.0)

    def test_prefactor(self, bench_strong):
        """Test 8: Kernel prefactor is 2 gAB^2 n0d / pi^2"""
        assert bench_strong.prefactor == pytest.approx(32.0, rel=1e-12)


class TestStates:

    # ========== Constructor Tests ==========

    def test_werner_entries(self):
        """Test 1: Werner '+' has its Bell coherence on (LL, RR)"""
        from core.states import make_werner
        rho = make_werner(0.6, "+")
        assert rho.element("LL", "RR") == pytest.approx(0.3)
        assert rho.element("LR", "RL") == pytest.approx(0.0)
        assert rho.element("LL", "LL") == pytest.approx(0.1 + 0.3)
        rho = make_werner(0.6, "-")
        assert rho.element("LR", "RL") == pytest.approx(0.3)
        assert rho.element("LL", "RR") == pytest.approx(0.0)

    def test_werner_limits(self):
        """Test 2: c = 0 is the maximally mixed state, c = 1 is pure"""
        from core.states import make_werner
        assert np.allclose(make_werner(0.0, "+").rho, np.eye(4) / 4)
        assert make_werner(1.0, "-").purity == pytest.approx(1.0)

    def test_werner_domain(self):
        """Test 3: c outside [0, 1] and unknown signs are rejected"""
        from core.states import make_werner
        from core.errors import ParameterDomainError
        with pytest.raises(ParameterDomainError):
            make_werner(1.2, "+")
        with pytest.raises(ParameterDomainError):
            make_werner(0.5, "x")

    def test_product_plus(self):
        """Test 4: Product state has every entry 1/4"""
        from core.states import make_product_plus
        rho = make_product_plus()
        assert np.allclose(rho.rho, 0.25)
        assert rho.purity == pytest.approx(1.0)

    def test_basis_state(self):
        """Test 5: Basis states are diagonal projectors"""
        from core.states import basis_state
        from core.errors import ParameterDomainError
        rho = basis_state("rl")
        assert rho.populations.tolist() == [0.0, 0.0, 1.0, 0.0]
        with pytest.raises(ParameterDomainError):
            basis_state("LX")

    def test_state_is_immutable(self):
        """Test 6: Density matrices are read-only after construction"""
        from core.states import make_werner
        rho = make_werner(0.5, "+")
        with pytest.raises(ValueError):
            rho.rho[0, 0] = 1.0

    # ========== Validation Tests ==========

    def test_invalid_states_rejected(self):
        """Test 7: Non-Hermitian, wrong-trace and negative matrices raise StateError"""
        from core.states import TwoQubitState
        from core.errors import StateError
        bad_trace = np.eye(4) / 2
        non_hermitian = np.eye(4) / 4
        non_hermitian = non_hermitian.astype(complex)
        non_hermitian[0, 1] = 0.1j
        negative = np.diag([0.6, 0.6, -0.1, -0.1])
        for matrix in (bad_trace, non_hermitian, negative, np.eye(3) / 3):
            with pytest.raises(StateError):
                TwoQubitState(matrix)

    def test_validate_state_report(self):
        """Test 8: validate_state reports without raising"""
        from core.validation import validate_state
        report = validate_state(np.diag([0.6, 0.6, -0.1, -0.1]))
        assert not report.passed
        assert report.min_eigenvalue == pytest.approx(-0.1)
        assert any("negative eigenvalue" in r for r in report.reasons)
        assert validate_state(np.eye(4) / 4).passed

    # ========== State Specifier Tests ==========

    def test_parse_state_spec(self):
        """Test 9: CLI state grammar"""
        from core.states import parse_state_spec, make_werner, basis_state, make_product_plus
        assert parse_state_spec("werner:+:0.5") == make_werner(0.5, "+")
        assert parse_state_spec("werner:-:1") == make_werner(1.0, "-")
        assert parse_state_spec("basis:LR") == basis_state("LR")
        assert parse_state_spec(" product+ ") == make_product_plus()

    @pytest.mark.parametrize("spec", ["werner:+", "werner:+:abc", "bell", "basis:", "werner:*:0.5"])
    def test_parse_state_spec_errors(self, spec):
        """Test 10: Malformed specifiers raise ParameterDomainError"""
        from core.states import parse_state_spec
        from core.errors import ParameterDomainError
        with pytest.raises(ParameterDomainError):
            parse_state_spec(spec)


class TestPreparationProtocol:

    # ========== Protocol Tests ==========

    @pytest.mark.parametrize("gate", ["standard", "printed"])
    @pytest.mark.parametrize("sign", ["+", "-"])
    def test_protocol_matches_werner(self, gate, sign):
        """Test 1: Protocol output has the Werner concurrence and discord"""
        from core.states import prepare_werner_via_protocol, make_werner
        from correlations import concurrence, discord
        for c in np.linspace(0.0, 1.0, 50):
            prepared = prepare_werner_via_protocol(c, sign, gate=gate)
            target = make_werner(c, sign)
            assert concurrence(prepared) == pytest.approx(concurrence(target), abs=1e-9), f"C mismatch at c={c}"
            assert discord(prepared) == pytest.approx(discord(target), abs=1e-9), f"D mismatch at c={c}"

    def test_standard_gate_squares_to_swap(self):
        """Test 2: The standard gate is a square root of SWAP"""
        from core.states import SQRT_SWAP, SWAP
        assert np.allclose(SQRT_SWAP @ SQRT_SWAP, SWAP)

    def test_printed_gate_gives_bell_state(self):
        """Test 3: The printed rotation maps |10> to Psi+"""
        from core.states import prepare_werner_via_protocol, make_werner
        prepared = prepare_werner_via_protocol(1.0, "+", gate="printed")
        assert np.allclose(prepared.rho, make_werner(1.0, "-").rho)

    def test_unknown_gate(self):
        """Test 4: Unknown gate names are rejected"""
        from core.states import prepare_werner_via_protocol
        from core.errors import ParameterDomainError
        with pytest.raises(ParameterDomainError):
            prepare_werner_via_protocol(0.5, "+", gate="cnot")


class TestErrors:

    def test_exit_codes(self):
        """Test 1: Each error class carries its exit code"""
        from core import errors
        assert errors.ConfigError("x").exit_code == errors.EXIT_CONFIG
        assert errors.ParameterDomainError("x").exit_code == errors.EXIT_CONFIG
        assert errors.QuadratureError("x").exit_code == errors.EXIT_QUADRATURE
        assert errors.InconclusiveError("x").exit_code == errors.EXIT_INCONCLUSIVE
        assert errors.ValidationFailure("x").exit_code == errors.EXIT_VALIDATION
        assert errors.IntegrationError("x").exit_code == errors.EXIT_INTEGRATION

    def test_quadrature_error_message(self):
        """Test 2: QuadratureError reports the time and achieved error"""
        from core.errors import QuadratureError
        text = str(QuadratureError("no convergence", t=2.5, achieved_error=1e-3))
        assert "t=2.5" in text, text
        assert "1.000e-03" in text, text
