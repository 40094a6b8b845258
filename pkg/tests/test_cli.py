"""Command line interface: formats, exit codes, config files, round trips."""

import json
import math

import pytest

from bhthermo.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    assert code == 0, err
    return json.loads(out)


class TestBh:
    def test_anchors(self, capsys):
        doc = run_json(capsys, "bh", "--mass", "1e15")
        assert doc["results"]["entropy"] == pytest.approx(2.65e40, rel=5e-3)
        assert doc["results"]["temperature_kelvin"] == pytest.approx(
            1.23e11, rel=5e-3)
        assert doc["units"]["results.temperature_kelvin"] == "K"

    def test_naked_singularity_exits_1(self, capsys):
        code, out, err = run(capsys, "bh", "--mass", "1e15",
                             "--charge-over-m", "1.5")
        assert code == 1
        assert "horizon" in err

    def test_sub_planck_exits_1(self, capsys):
        code, _, err = run(capsys, "bh", "--mass", "1e-10")
        assert code == 1
        assert "Planck" in err

    def test_missing_mass_exits_2(self, capsys):
        code, _, err = run(capsys, "bh")
        assert code == 2

    def test_charge_over_m(self, capsys):
        doc = run_json(capsys, "bh", "--mass", "1e15", "--charge-over-m", "0.5")
        assert doc["results"]["Q"] == pytest.approx(
            0.5 * doc["results"]["M"], rel=1e-6)

    def test_json_round_trip_is_bit_identical(self, capsys, tmp_path):
        # the derived charge has a full 17-digit mantissa; inputs are
        # echoed at full precision so the record must reproduce exactly
        doc = run_json(capsys, "bh", "--mass", "1e15",
                       "--charge-over-m", "0.333333333333")
        path = tmp_path / "hole.json"
        path.write_text(json.dumps(doc))
        redone = run_json(capsys, "bh", "--input", str(path))
        assert redone["results"] == doc["results"]
        assert redone["inputs"] == doc["inputs"]


class TestFormats:
    def test_three_formats_carry_identical_values(self, capsys):
        doc = run_json(capsys, "bh", "--mass", "1e15")
        code, table, _ = run(capsys, "bh", "--mass", "1e15", "--format", "table")
        code, csv_out, _ = run(capsys, "bh", "--mass", "1e15", "--format", "csv")
        for name, value in doc["results"].items():
            if isinstance(value, float):
                formatted = f"{value:.8e}"
                assert formatted in table
                assert formatted in csv_out

    def test_csv_scalar_layout(self, capsys):
        code, out, _ = run(capsys, "constants", "--format", "csv")
        lines = out.strip().splitlines()
        assert lines[0] == "quantity,value,unit"
        assert any(line.startswith("values.G,") for line in lines)

    def test_format_env_default(self, capsys, monkeypatch):
        monkeypatch.setenv("BHTHERMO_FORMAT", "json")
        code, out, _ = run(capsys, "constants")
        assert code == 0
        json.loads(out)

    def test_nine_significant_digits(self, capsys):
        _, out, _ = run(capsys, "bh", "--mass", "1e15", "--format", "csv")
        assert "1.48523205e-13" in out  # r_plus at 9 significant digits


class TestConstantsCommand:
    def test_json_dump(self, capsys):
        doc = run_json(capsys, "constants")
        assert doc["values"]["c"] == 2.99792458e10
        assert doc["units"]["values.G"] == "cm^3 g^-1 s^-2"


class TestEvaporate:
    def test_series(self, capsys):
        doc = run_json(capsys, "evaporate", "--mass", "1e12", "--points", "10")
        assert doc["columns"] == ["t", "mass"]
        assert len(doc["rows"]) == 10
        assert doc["rows"][0][0] == 0.0
        assert doc["results"]["lifetime_s"] == pytest.approx(8.41e10, rel=2e-2)

    def test_csv_is_plain_series(self, capsys):
        code, out, _ = run(capsys, "evaporate", "--mass", "1e12",
                           "--points", "4", "--format", "csv")
        lines = out.strip().splitlines()
        assert lines[0] == "t,mass"
        assert len(lines) == 5


class TestBounds:
    def test_disk_report(self, capsys):
        doc = run_json(capsys, "bounds", "--mass", "16", "--radius", "6")
        assert doc["results"]["tightest_applicable"] == "gour"
        holo_bits = doc["bounds"]["holographic.limit_bits"]
        uni_bits = doc["bounds"]["universal.limit_bits"]
        assert 1e67 < holo_bits < 1e69
        assert 10**39.5 < uni_bits < 10**40.5

    def test_violation_column(self, capsys):
        doc = run_json(capsys, "bounds", "--mass", "16", "--radius", "6",
                       "--entropy", "1e50")
        assert "gour" in doc["results"]["violations"]

    def test_energy_and_mass_are_exclusive(self, capsys):
        code, _, err = run(capsys, "bounds", "--mass", "16",
                           "--energy", "1e22", "--radius", "6")
        assert code == 2


class TestGedanken:
    def test_merger(self, capsys):
        doc = run_json(capsys, "gedanken", "--scenario", "merger",
                       "--m1", "1e15", "--m2", "1e15")
        assert doc["results"]["verdict"] == "satisfied"
        assert doc["results"]["delta_total"] > 0

    def test_capsule_from_scenario_file(self, capsys, tmp_path):
        path = tmp_path / "capsule.cfg"
        path.write_text("scenario=capsule\nbh_mass=1e30\nmu=1\nb=1\ns_cap=1e30\n")
        doc = run_json(capsys, "gedanken", "--input", str(path))
        assert doc["results"]["scenario"] == "capsule_lowering"
        assert doc["results"]["verdict"] == "satisfied"

    def test_flags_override_file(self, capsys, tmp_path):
        path = tmp_path / "capsule.cfg"
        path.write_text("scenario=capsule\nbh_mass=1e30\nmu=1\nb=1\ns_cap=1e30\n")
        doc = run_json(capsys, "gedanken", "--input", str(path),
                       "--s-cap", "1e39")
        assert doc["results"]["verdict"] == "violated"

    def test_unknown_config_key_exits_2(self, capsys, tmp_path):
        path = tmp_path / "bad.cfg"
        path.write_text("scenario=merger\nm1=1e15\nm2=1e15\nmm3=1\n")
        code, _, err = run(capsys, "gedanken", "--input", str(path))
        assert code == 2
        assert "mm3" in err

    def test_infall_inapplicable(self, capsys):
        doc = run_json(capsys, "gedanken", "--scenario", "infall",
                       "--energy", "8.2e-7", "--radius", "1e-17",
                       "--entropy", "1")
        assert doc["results"]["verdict"] == "inapplicable"


class TestChannel:
    def test_optical_report(self, capsys):
        doc = run_json(capsys, "channel", "--lambda-c", "5e-5",
                       "--power", "1e-3")
        assert doc["results"]["p_c_approx"] == pytest.approx(0.038, rel=2e-2)
        assert doc["results"]["regime"] == "intermediate"

    def test_frequency_alternative(self, capsys):
        doc = run_json(capsys, "channel", "--frequency", "5.99584916e14",
                       "--power", "1e-3")
        assert doc["inputs"]["lambda_c"] == pytest.approx(5e-5, rel=1e-6)

    def test_cutoff_required(self, capsys):
        code, _, err = run(capsys, "channel", "--power", "1e-3")
        assert code == 2


class TestSweep:
    def test_mass_sweep_scales_as_m_squared(self, capsys):
        doc = run_json(capsys, "sweep", "bh", "--param", "mass",
                       "--start", "1e15", "--stop", "1e18", "--points", "4",
                       "--quantity", "entropy")
        assert doc["columns"] == ["mass", "entropy"]
        rows = doc["rows"]
        for (m1, s1), (m2, s2) in zip(rows, rows[1:]):
            assert s2 / s1 == pytest.approx((m2 / m1) ** 2, rel=1e-6)

    def test_power_sweep_crosses_regimes(self, capsys):
        code, out, _ = run(capsys, "sweep", "channel", "--param", "power",
                           "--start", "1e-6", "--stop", "1e-1",
                           "--points", "12", "--lambda-c", "5e-5",
                           "--format", "csv")
        assert code == 0
        regimes = [line.rsplit(",", 1)[1] for line in out.strip().splitlines()[1:]]
        assert regimes[0] == "low"
        assert regimes[-1] == "high"
        assert "intermediate" in regimes
        # deterministic ordering: low block, then intermediate, then high
        assert regimes == sorted(regimes, key=("low", "intermediate", "high").index)

    def test_single_point_sweep(self, capsys):
        doc = run_json(capsys, "sweep", "bh", "--param", "mass",
                       "--start", "1e15", "--stop", "1e18", "--points", "1")
        assert len(doc["rows"]) == 1
        assert doc["rows"][0][0] == 1e15

    def test_empty_sweep_exits_2(self, capsys):
        code, _, err = run(capsys, "sweep", "bh", "--param", "mass",
                           "--start", "1e15", "--stop", "1e18", "--points", "0")
        assert code == 2
