"""
Configuration Testing
=====================
Unit parsing, parameter files, presets and the validated run configuration.
"""

import json

import pytest


DIMENSIONLESS = {"u": 1.0, "gAB": 2.0, "n0d": 1.0, "theta": 0.5, "Ld": 1.0, "Dd": 2.0}


class TestQuantities:

    # ========== Unit Parsing Tests ==========

    def test_plain_numbers(self):
        """Test 1: Numbers and unitless strings pass through as SI"""
        from config import parse_quantity
        assert parse_quantity("T", 1e-8) == 1e-8
        assert parse_quantity("T", "2.5e-8") == 2.5e-8

    def test_units(self):
        """Test 2: Unit strings are scaled to SI"""
        from config import parse_quantity
        from core.params import AMU, BOHR_RADIUS
        assert parse_quantity("T", "10 nK") == pytest.approx(1e-8)
        assert parse_quantity("m_A", "2 amu") == pytest.approx(2 * AMU)
        assert parse_quantity("a_B", "100 a0") == pytest.approx(100 * BOHR_RADIUS)
        assert parse_quantity("n0", "1e14 cm^-3") == pytest.approx(1e20)
        assert parse_quantity("sigma", "200 nm") == pytest.approx(2e-7)

    def test_wavelength_units(self):
        """Test 3: Lengths in lambda need a wavelength"""
        from config import parse_quantity
        from core.errors import ConfigError
        assert parse_quantity("D", "0.5 lambda", wavelength=1064e-9) == pytest.approx(532e-9)
        with pytest.raises(ConfigError):
            parse_quantity("D", "0.5 lambda")

    @pytest.mark.parametrize("name, value", [
        ("T", "10 parsec"),
        ("T", "ten nK"),
        ("T", "1 nK extra"),
        ("theta", "1 K"),
        ("T", [1.0]),
    ])
    def test_bad_quantities(self, name, value):
        """Test 4: Unknown units and malformed strings raise ConfigError"""
        from config import parse_quantity
        from core.errors import ConfigError
        with pytest.raises(ConfigError):
            parse_quantity(name, value)


class TestRunConfig:

    # ========== Block Validation Tests ==========

    def test_dimensionless_block(self):
        """Test 1: A dimensionless block yields the same reservoir"""
        from config import build_run_config
        config = build_run_config({"dimensionless": DIMENSIONLESS, "scenario": "rates"})
        p = config.reservoir()
        assert p.u == 1.0 and p.Dd == 2.0
        assert config.a_ref_ratio() == 1.0
        assert config.time_unit_seconds() is None
        assert config.parameter_block() == ("dimensionless", DIMENSIONLESS)

    def test_physical_block(self):
        """Test 2: Physical presets convert to the Cs-Rb reservoir"""
        from scipy.constants import hbar
        from config import build_run_config, load_preset
        _, data = load_preset("cs-rb-default")
        config = build_run_config({"physical": data, "scenario": "evolve"})
        p = config.reservoir()
        assert p.u == pytest.approx(0.26706, rel=1e-3)
        assert p.Dd == pytest.approx(2.66, rel=1e-2)
        assert config.a_ref_ratio() == pytest.approx(1.0, rel=1e-12)
        physical = config.physical.to_params()
        assert config.time_unit_seconds() == pytest.approx(physical.m_B * physical.sigma ** 2 / hbar, rel=1e-12)

    @pytest.mark.parametrize("data", [
        {"scenario": "rates"},
        {"scenario": "rates", "dimensionless": DIMENSIONLESS,
         "physical": {"m_A": 1, "m_B": 1, "a_B": 1, "a_AB": 1, "n0": 1, "sigma": 1, "L": 1, "D": 1, "T": 1}},
        {"scenario": "rates", "dimensionless": {**DIMENSIONLESS, "extra": 1.0}},
        {"scenario": "teleport", "dimensionless": DIMENSIONLESS},
        {"scenario": "rates", "dimensionless": {**DIMENSIONLESS, "u": -1.0}},
        {"scenario": "rates", "dimensionless": DIMENSIONLESS, "options": {"c": 1.5}},
        {"scenario": "rates", "dimensionless": DIMENSIONLESS, "options": {"c_values": []}},
    ])
    def test_invalid_configs(self, data):
        """Test 3: Invalid configurations raise ConfigError"""
        from config import build_run_config
        from core.errors import ConfigError
        with pytest.raises(ConfigError):
            build_run_config(data)

    def test_config_hash(self):
        """Test 4: The hash ignores output paths but not parameters"""
        from config import build_run_config
        base = {"dimensionless": DIMENSIONLESS, "scenario": "rates"}
        h1 = build_run_config({**base, "output": "a.csv"}).config_hash()
        h2 = build_run_config({**base, "output": "b.csv"}).config_hash()
        h3 = build_run_config({**base, "dimensionless": {**DIMENSIONLESS, "u": 1.1}}).config_hash()
        assert h1 == h2
        assert h1 != h3


class TestParameterFiles:

    # ========== File Loading Tests ==========

    def test_classify_block(self):
        """Test 1: Keys decide the block kind"""
        from config.run_config import classify_block
        from core.errors import ConfigError
        assert classify_block(DIMENSIONLESS) == "dimensionless"
        assert classify_block({"m_A": "1 amu", "wavelength": "1064 nm"}) == "physical"
        with pytest.raises(ConfigError):
            classify_block({"u": 1.0, "T": "10 nK"})
        with pytest.raises(ConfigError):
            classify_block({"colour": "blue"})

    def test_load_parameter_file(self, tmp_path):
        """Test 2: Plain files and sidecars are both accepted"""
        from config import load_parameter_file
        plain = tmp_path / "params.json"
        plain.write_text(json.dumps(DIMENSIONLESS))
        assert load_parameter_file(plain) == ("dimensionless", DIMENSIONLESS)

        sidecar = tmp_path / "rates.csv.meta.json"
        sidecar.write_text(json.dumps({"block": "dimensionless", "parameters": DIMENSIONLESS, "command": "rates"}))
        assert load_parameter_file(sidecar) == ("dimensionless", DIMENSIONLESS)

    def test_bad_files(self, tmp_path):
        """Test 3: Missing, malformed and non-object files raise ConfigError"""
        from config import load_parameter_file
        from core.errors import ConfigError
        with pytest.raises(ConfigError):
            load_parameter_file(tmp_path / "missing.json")
        broken = tmp_path / "broken.json"
        broken.write_text("{not json")
        with pytest.raises(ConfigError):
            load_parameter_file(broken)
        listing = tmp_path / "list.json"
        listing.write_text("[1, 2]")
        with pytest.raises(ConfigError):
            load_parameter_file(listing)

    # ========== Preset Tests ==========

    def test_presets_convert(self):
        """Test 4: Every shipped preset validates and converts"""
        from config import load_presets, load_preset, build_run_config
        names = load_presets()
        assert {"cs-rb-default", "bench-strong", "bench-weak"} <= set(names)
        for name in names:
            kind, data = load_preset(name)
            p = build_run_config({kind: data, "scenario": "rates"}).reservoir()
            assert p.u > 0 and p.Dd > 0, name

    def test_preset_geometry(self):
        """Test 5: Distant-qubit preset is ten times further apart"""
        from config import load_preset, build_run_config
        near = build_run_config({"physical": load_preset("d-half-lambda")[1], "scenario": "rates"}).reservoir()
        far = build_run_config({"physical": load_preset("d-five-lambda")[1], "scenario": "rates"}).reservoir()
        assert far.Dd == pytest.approx(10 * near.Dd)
        assert far.u == pytest.approx(near.u)

    def test_unknown_preset(self):
        """Test 6: Unknown names list the available presets"""
        from config import load_preset
        from core.errors import ConfigError
        with pytest.raises(ConfigError, match="cs-rb-default"):
            load_preset("nope")
