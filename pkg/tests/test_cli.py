import json
import subprocess
import sys

import pytest

from refilt.cli import main, run
from refilt.parsing import parse_presentation
from refilt.presets import PRESET_NAMES, all_presets


@pytest.fixture(scope="module")
def alg_files(tmp_path_factory):
    root = tmp_path_factory.mktemp("alg")
    from refilt.parsing import emit_presentation

    paths = {}
    for name, pres in all_presets().items():
        p = root / f"{name}.alg"
        p.write_text(emit_presentation(pres))
        paths[name] = str(p)
    broken = root / "broken3.alg"
    broken.write_text(
        "field rational_q\nbase 0\ngens 3\norder deglex\nq x2 x1 = q\ntail x3 x1 = x2\n"
    )
    paths["broken3"] = str(broken)
    return paths


def test_nf_quantum_plane(alg_files, capsys):
    code = main(["nf", alg_files["quantum_plane"], "x2*x1"])
    assert code == 0
    assert capsys.readouterr().out.strip() == "q*x1*x2"


def test_mul_and_mdeg(alg_files, capsys):
    assert main(["mul", alg_files["quantum_plane"], "x2", "x1"]) == 0
    assert capsys.readouterr().out.strip() == "q*x1*x2"
    assert main(["mdeg", alg_files["quantum_plane"], "3*x1*x2^2 + x1"]) == 0
    assert capsys.readouterr().out.strip() == "(1,2)"


def test_refilter_json_envelope(alg_files, capsys):
    code = main(["refilter", alg_files["uq_sl2"], "--json"])
    assert code == 0
    envelope = json.loads(capsys.readouterr().out)
    assert envelope["command"] == "refilter"
    assert envelope["status"] == 0
    payload = envelope["payload"]
    assert payload["weight_vector"] == [1, 1]
    assert payload["valid"] is True
    assert payload["verified"] is True
    assert payload["gr_data"]["q_units"] == {"2,1": "1"}
    assert payload["gr_data"]["sigma_scales"] == [["q^2"], ["1/q^2"]]


def test_pbw_failure_exit_code_and_witness(alg_files, capsys):
    code = main(["pbw", alg_files["broken3"], "--json"])
    assert code == 1
    envelope = json.loads(capsys.readouterr().out)
    (witness,) = envelope["payload"]["witnesses"]
    assert witness["overlap"] == [3, 2, 1]
    assert witness["difference"] == "(-q + 1)*x2^2"


def test_refilter_on_broken_is_check_failure(alg_files):
    report = run(["refilter", alg_files["broken3"]])
    assert report.status == 1
    assert "error" in report.payload


def test_input_error_exit_2(alg_files, capsys):
    assert main(["nf", alg_files["quantum_plane"], "x1^-1"]) == 2
    err = capsys.readouterr().err
    assert "not invertible" in err
    assert main(["nf", "/nonexistent/file.alg", "x1"]) == 2


def test_semantic_error_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.alg"
    bad.write_text("gens 2\nq x2 x1 = q\ntail x2 x1 = x1*x2\n")
    assert main(["nf", str(bad), "x1"]) == 2
    assert "not strictly below" in capsys.readouterr().err


def test_gr_command(alg_files, capsys):
    assert main(["gr", alg_files["quantum_weyl"]]) == 0
    out = capsys.readouterr().out
    assert "tail" not in out
    assert parse_presentation(out) == all_presets()["quantum_plane"]


def test_cert_uq(alg_files, capsys):
    assert main(["cert", alg_files["uq_sl2"], "--json"]) == 0
    envelope = json.loads(capsys.readouterr().out)
    checks = envelope["payload"]["checks"]
    assert all(checks.values())
    assert envelope["payload"]["conclusion"]


def test_cert_broken_withholds_conclusion(alg_files, capsys):
    assert main(["cert", alg_files["broken3"], "--json"]) == 1
    envelope = json.loads(capsys.readouterr().out)
    assert envelope["payload"]["conclusion"] is None


def test_gk_csv(alg_files, capsys):
    assert main(["gk", alg_files["quantum_plane"], "--w", "1,1", "--nmax", "8"]) == 0
    out = capsys.readouterr().out
    assert "degree 2 (exact)" in out
    assert "n,h" in out
    assert "4,15" in out


def test_preset_emit_parse_roundtrip(capsys):
    for name in PRESET_NAMES:
        args = ["preset", name, "--emit"]
        if name == "quantum_affine":
            args.insert(2, "s=3")
        assert main(args) == 0
        text = capsys.readouterr().out
        expected = {
            "quantum_plane": all_presets()["quantum_plane"],
            "quantum_affine": all_presets()["quantum_affine"],
            "quantum_torus_mixed": all_presets()["quantum_torus_mixed"],
            "quantum_weyl": all_presets()["quantum_weyl"],
            "uq_sl2": all_presets()["uq_sl2"],
        }[name]
        assert parse_presentation(text) == expected


def test_preset_summary_without_emit(capsys):
    assert main(["preset", "uq_sl2"]) == 0
    out = capsys.readouterr().out
    assert "base rank 1" in out and "generators 2" in out


def test_preset_unknown_name_exit_2():
    with pytest.raises(SystemExit) as info:
        main(["preset", "bogus"])
    assert info.value.code == 2


def test_check_passes_on_uq(alg_files, capsys):
    assert main(["check", alg_files["uq_sl2"], "--seed", "7"]) == 0
    out = capsys.readouterr().out
    assert "PASS pbw" in out
    assert "FAIL" not in out


def test_check_fails_on_broken(alg_files, capsys):
    assert main(["check", alg_files["broken3"]]) == 1
    out = capsys.readouterr().out
    assert "FAIL pbw" in out


def test_seed_reproducible_json(alg_files, capsys):
    main(["check", alg_files["quantum_plane"], "--seed", "5", "--json"])
    first = capsys.readouterr().out
    main(["--seed", "5", "--json", "check", alg_files["quantum_plane"]])
    second = capsys.readouterr().out
    assert first == second


def test_env_seed_fallback(alg_files, capsys, monkeypatch):
    monkeypatch.setenv("REFILT_SEED", "11")
    main(["check", alg_files["quantum_plane"], "--json"])
    first = capsys.readouterr().out
    main(["check", alg_files["quantum_plane"], "--seed", "11", "--json"])
    second = capsys.readouterr().out
    assert first == second


def test_module_entry_point(alg_files):
    proc = subprocess.run(
        [sys.executable, "-m", "refilt", "nf", alg_files["quantum_plane"], "x2*x1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "q*x1*x2"
