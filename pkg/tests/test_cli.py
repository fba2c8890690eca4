import json

import pytest

from kappa_forge.cli import main


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# sigma
# ---------------------------------------------------------------------------

def test_sigma_text(capsys):
    code, out, _ = run(capsys, ["sigma", "--class", "p1", "--weights", "2,1"])
    assert code == 0
    assert out.strip() == "5"


def test_sigma_json(capsys):
    code, out, _ = run(
        capsys, ["sigma", "--class", "e*p1", "--weights", "1,2", "--format", "json"]
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["sigma"] == 10  # (1*2) * (1+4)
    assert payload["class"] == "e*p1"


def test_sigma_bad_class_is_parse_error(capsys):
    code, _, err = run(capsys, ["sigma", "--class", "p3", "--weights", "2,1"])
    assert code == 2
    assert "p3" in err


def test_sigma_bad_weights_is_parse_error(capsys):
    code, _, err = run(capsys, ["sigma", "--class", "p1", "--weights", "2,x"])
    assert code == 2
    assert "x" in err


# ---------------------------------------------------------------------------
# theorem-a
# ---------------------------------------------------------------------------

def test_theorem_a_ruled_out_is_success(capsys):
    code, out, err = run(capsys, ["theorem-a", "--b", "9,18"])
    assert code == 0
    assert "ruled_out" in out
    assert "odd prime 3" in out
    assert "warning" in err  # defaulted flags


def test_theorem_a_explicit_flags_no_warning(capsys):
    code, out, err = run(
        capsys,
        ["theorem-a", "--b", "1,5", "--flags", "rationally-odd,neg-euler,nontrivial-action"],
    )
    assert code == 0
    assert "consistent" in out
    assert "warning" not in err


def test_theorem_a_partial_flags_notes_inapplicability(capsys):
    code, out, _ = run(capsys, ["theorem-a", "--b", "3,6", "--flags", "rationally-odd"])
    assert code == 0
    assert "arithmetic only" in out


def test_theorem_a_json(capsys):
    code, out, _ = run(capsys, ["theorem-a", "--b", "1/2", "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["status"] == "ruled_out"
    assert payload["reasons"] == [{"index": 1, "kind": "non_integer"}]


def test_theorem_a_bad_flag_token(capsys):
    code, _, err = run(capsys, ["theorem-a", "--b", "1", "--flags", "odd-euler"])
    assert code == 2
    assert "odd-euler" in err


# ---------------------------------------------------------------------------
# adams
# ---------------------------------------------------------------------------

def test_adams_transform_text(capsys):
    code, out, _ = run(capsys, ["adams", "--k", "3", "--b", "1,2"])
    assert code == 0
    assert out.strip() == "9,162"


def test_adams_even_k_is_domain_error(capsys):
    code, _, err = run(capsys, ["adams", "--k", "2", "--b", "1,2"])
    assert code == 1
    assert "odd" in err


def test_adams_certify(capsys):
    code, out, _ = run(
        capsys,
        [
            "adams",
            "--k",
            "5",
            "--b",
            "5,4",
            "--certify",
            "--flags",
            "rationally-odd,neg-euler,nontrivial-action",
            "--format",
            "json",
        ],
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["conclusion"] == "non-kinetic"
    assert payload["witness_prime"] == 5
    assert payload["gcd"] == 125
    assert payload["b_transformed"] == ["125", "2500"]


def test_adams_certify_not_applicable(capsys):
    code, out, _ = run(
        capsys,
        ["adams", "--k", "3", "--b", "0,0", "--certify", "--flags", "rationally-odd,neg-euler,nontrivial-action"],
    )
    assert code == 0
    assert "not applicable" in out


# ---------------------------------------------------------------------------
# representations
# ---------------------------------------------------------------------------

def test_su2_restrict(capsys):
    code, out, _ = run(capsys, ["su2-restrict", "--rep", "V3+V1"])
    assert code == 0
    assert out.strip() == "2,0"


def test_su2_restrict_odd_total_is_domain_error(capsys):
    code, _, err = run(capsys, ["su2-restrict", "--rep", "V1"])
    assert code == 1
    assert "odd" in err


def test_su2_realize(capsys):
    code, out, _ = run(capsys, ["su2-realize", "--weights", "1,1"])
    assert code == 0
    assert out.strip() == "V4"


def test_su2_realize_infeasible_is_success(capsys):
    code, out, _ = run(capsys, ["su2-realize", "--weights", "4"])
    assert code == 0
    assert out.strip() == "infeasible"


def test_su2_realize_json(capsys):
    code, out, _ = run(capsys, ["su2-realize", "--weights", "2,0", "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    assert payload == {"feasible": True, "rep": "V3+V1", "weights": [2, 0]}


# ---------------------------------------------------------------------------
# betti
# ---------------------------------------------------------------------------

def test_betti_feasible(capsys):
    code, out, _ = run(
        capsys,
        ["betti", "--w-even", "2", "--w-odd", "6", "--m-even", "1", "--m-odd", "5"],
    )
    assert code == 0
    assert "k = 1" in out


def test_betti_infeasible_is_success(capsys):
    code, out, _ = run(
        capsys,
        ["betti", "--w-even", "2", "--w-odd", "6", "--m-even", "2", "--m-odd", "0"],
    )
    assert code == 0
    assert "infeasible" in out


# ---------------------------------------------------------------------------
# catalog + file pipeline
# ---------------------------------------------------------------------------

def test_catalog_pullback_round_trip(capsys, tmp_path):
    path = tmp_path / "data.json"
    code, _, _ = run(capsys, ["catalog", "s2xs2", "--k", "4", "--out", str(path)])
    assert code == 0

    code, out, _ = run(capsys, ["pullback-su2", "--input", str(path), "--i", "1"])
    assert code == 0
    assert "68" in out
    assert "b_1 = 17" in out


def test_catalog_localize_verifies_expected(capsys, tmp_path):
    path = tmp_path / "data.json"
    run(capsys, ["catalog", "s2xs2", "--k", "6", "--out", str(path)])
    code, out, _ = run(capsys, ["localize", "--input", str(path)])
    assert code == 0
    assert out.count("ok") == 2
    assert "MISMATCH" not in out


def test_localize_detects_tampered_expected(capsys, tmp_path):
    path = tmp_path / "data.json"
    run(capsys, ["catalog", "s2xs2", "--k", "2", "--out", str(path)])
    payload = json.loads(path.read_text())
    payload["expected"][0]["coefficient"] = "21"
    path.write_text(json.dumps(payload))
    code, out, _ = run(capsys, ["localize", "--input", str(path)])
    assert code == 1
    assert "MISMATCH" in out


def test_localize_with_class(capsys, tmp_path):
    path = tmp_path / "data.json"
    run(capsys, ["catalog", "s2xs2", "--k", "2", "--out", str(path)])
    code, out, _ = run(capsys, ["localize", "--input", str(path), "--class", "p1"])
    assert code == 0
    assert "kappa[e*p1] = 20 * gamma^2" in out


def test_localize_without_class_or_expected_is_parse_error(capsys, tmp_path):
    path = tmp_path / "plain.json"
    path.write_text(
        json.dumps(
            {
                "fiber_half_dim": 2,
                "components": [{"name": "m", "euler_char": 1, "weights": [1, 1]}],
            }
        )
    )
    code, _, err = run(capsys, ["localize", "--input", str(path)])
    assert code == 2
    assert "expected" in err


def test_localize_unknown_key_is_parse_error(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"fiber_half_dim": 2, "components": [], "spin": 1}))
    code, _, err = run(capsys, ["localize", "--input", str(path), "--class", "p1"])
    assert code == 2
    assert "spin" in err


def test_localize_zero_weight_note_goes_to_stderr(capsys, tmp_path):
    path = tmp_path / "zero.json"
    path.write_text(
        json.dumps(
            {
                "fiber_half_dim": 2,
                "components": [{"name": "m", "euler_char": 2, "weights": [0, 3]}],
            }
        )
    )
    code, out, err = run(capsys, ["localize", "--input", str(path), "--class", "p1"])
    assert code == 0
    assert "zero weight" in err
    assert "18 * gamma^2" in out  # 2 * sigma_1(0, 9)


def test_pullback_multiple_inputs_with_jobs(capsys, tmp_path):
    paths = []
    for k in (0, 2, 4):
        path = tmp_path / f"k{k}.json"
        run(capsys, ["catalog", "s2xs2", "--k", str(k), "--out", str(path)])
        paths.append(str(path))
    code, out, _ = run(
        capsys,
        ["pullback-su2", "--input", *paths, "--i", "1", "--jobs", "3", "--format", "json"],
    )
    assert code == 0
    payload = json.loads(out)
    assert [item["b_i"] for item in payload] == ["1", "5", "17"]
    assert [item["input"] for item in payload] == paths  # order preserved


def test_catalog_stdout_payload(capsys):
    code, out, _ = run(capsys, ["catalog", "s2xs2", "--k", "0"])
    assert code == 0
    payload = json.loads(out)
    assert payload["fiber_euler_char"] == 4
    assert len(payload["components"]) == 4


def test_catalog_wg(capsys):
    code, out, _ = run(capsys, ["catalog", "wg", "--n", "3", "--g", "2", "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["euler_char"] == -2
    assert payload["theorems_apply"] is True

    code, out, _ = run(capsys, ["catalog", "wg", "--n", "3", "--g", "1"])
    assert code == 0
    assert "not satisfied" in out


def test_catalog_wg_even_n_is_domain_error(capsys):
    code, _, err = run(capsys, ["catalog", "wg", "--n", "4", "--g", "2"])
    assert code == 1
    assert "odd" in err


def test_catalog_odd_k_is_domain_error(capsys):
    code, _, err = run(capsys, ["catalog", "s2xs2", "--k", "3"])
    assert code == 1
    assert "even" in err


# ---------------------------------------------------------------------------
# output stability and environment
# ---------------------------------------------------------------------------

def test_json_output_is_byte_stable(capsys, tmp_path):
    path = tmp_path / "data.json"
    run(capsys, ["catalog", "s2xs2", "--k", "8", "--out", str(path)])
    argv = ["pullback-su2", "--input", str(path), "--i", "1", "--format", "json"]
    _, first, _ = run(capsys, argv)
    _, second, _ = run(capsys, argv)
    assert first == second


def test_format_env_default(capsys, monkeypatch):
    monkeypatch.setenv("KAPPA_FORGE_FORMAT", "json")
    code, out, _ = run(capsys, ["sigma", "--class", "p1", "--weights", "2,1"])
    assert code == 0
    assert json.loads(out)["sigma"] == 5


def test_format_flag_overrides_env(capsys, monkeypatch):
    monkeypatch.setenv("KAPPA_FORGE_FORMAT", "json")
    code, out, _ = run(
        capsys, ["sigma", "--class", "p1", "--weights", "2,1", "--format", "text"]
    )
    assert code == 0
    assert out.strip() == "5"


def test_bad_env_format_is_parse_error(capsys, monkeypatch):
    monkeypatch.setenv("KAPPA_FORGE_FORMAT", "yaml")
    code, _, err = run(capsys, ["sigma", "--class", "p1", "--weights", "2,1"])
    assert code == 2
    assert "yaml" in err


def test_unknown_subcommand_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2
