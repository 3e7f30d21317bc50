import json

from reflectinv.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_order(capsys):
    code, out, _ = run_cli(capsys, "order", "--catalog", "st8")
    assert code == 0 and out.strip() == "96"


def test_order_image_group(capsys):
    code, out, _ = run_cli(capsys, "order", "--catalog", "st8", "--rep", "rho5")
    assert code == 0 and out.strip() == "6"


def test_order_unknown_catalog(capsys):
    code, _, err = run_cli(capsys, "order", "--catalog", "nosuch")
    assert code == 2 and "UnknownCatalogName" in err


def test_molien_series(capsys):
    code, out, _ = run_cli(
        capsys, "molien", "--catalog", "st8", "--rep", "rho1", "--max-degree", "16"
    )
    assert code == 0
    assert out.splitlines()[0] == "1 + t^8 + t^12 + t^16"


def test_molien_closed_form(capsys):
    code, out, _ = run_cli(
        capsys,
        "molien", "--catalog", "st8", "--rep", "rho5",
        "--max-degree", "40", "--denom", "8,12",
    )
    assert code == 0
    assert "(t^4 + t^8)/((1 - t^8)*(1 - t^12))" in out


def test_molien_rho3_numerator(capsys):
    code, out, _ = run_cli(
        capsys,
        "molien", "--catalog", "st8", "--rep", "rho3",
        "--max-degree", "40", "--denom", "8,12", "--json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["numerator"] == [0, 0, 0, 0, 0, 0, 1]


def test_molien_bad_denominator(capsys):
    code, _, err = run_cli(
        capsys,
        "molien", "--catalog", "st8", "--rep", "rho1",
        "--max-degree", "40", "--denom", "7",
    )
    assert code == 3 and "NonTerminatingNumerator" in err


def test_molien_unknown_rep(capsys):
    code, _, err = run_cli(
        capsys, "molien", "--catalog", "st8", "--rep", "zeta", "--max-degree", "8"
    )
    assert code == 2 and "UnknownRepresentation" in err


def test_generators_rho10(capsys):
    code, out, _ = run_cli(
        capsys, "generators", "--catalog", "st8", "--rep", "rho10", "--max-degree", "15"
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "degree 1: (x, y)"
    assert lines[1].startswith("degree 5:")


def test_generators_rho13_json(capsys):
    code, out, _ = run_cli(
        capsys,
        "generators", "--catalog", "st8", "--rep", "rho13",
        "--max-degree", "15", "--json",
    )
    assert code == 0
    payload = json.loads(out)
    assert [g["degree"] for g in payload["generators"]] == [2, 6, 10]
    assert payload["generators"][0]["components"] == ["x^2", "x*y", "y^2"]


def test_generators_rho1(capsys):
    code, out, _ = run_cli(
        capsys, "generators", "--catalog", "st8", "--rep", "rho1", "--max-degree", "15"
    )
    assert code == 0 and out.splitlines()[0] == "degree 0: (1)"


def test_equivariants(capsys):
    code, out, _ = run_cli(
        capsys,
        "equivariants", "--catalog", "st8", "--rep", "rho13", "--degree", "2",
    )
    assert code == 0
    assert "dimension 1" in out
    assert "(x^2, x*y, y^2)" in out


def test_equivariants_tensor_expression(capsys):
    code, out, _ = run_cli(
        capsys,
        "equivariants", "--catalog", "st8", "--rep", "rho3*rho3", "--degree", "4",
        "--json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["rep"] == "rho3*rho3"
    assert payload["dim"] >= 0


def test_character(capsys):
    code, out, _ = run_cli(
        capsys, "character", "--catalog", "st8", "--rep", "rho13", "--json"
    )
    assert code == 0
    payload = json.loads(out)
    assert len(payload["values"]) == 96
    assert payload["values"][0] == {"element": 0, "word": "e", "chi": "3"}


def test_relations(capsys):
    code, out, _ = run_cli(capsys, "relations", "--catalog", "st8")
    assert code == 0
    assert "sum of squared degrees: 96" in out
    assert "REDUCIBLE" not in out


def test_export_round_trip(tmp_path, capsys):
    code, out, _ = run_cli(capsys, "export", "--catalog", "st8")
    assert code == 0
    path = tmp_path / "st8.json"
    path.write_text(out)

    code, text, _ = run_cli(capsys, "order", "--file", str(path))
    assert code == 0 and text.strip() == "96"

    code, text, _ = run_cli(
        capsys,
        "molien", "--file", str(path), "--rep", "rho10",
        "--max-degree", "40", "--denom", "8,12",
    )
    assert code == 0
    assert "(t + t^5)/((1 - t^8)*(1 - t^12))" in text


def test_output_determinism(capsys):
    _, first, _ = run_cli(
        capsys, "generators", "--catalog", "st8", "--rep", "rho5", "--max-degree", "15"
    )
    _, second, _ = run_cli(
        capsys, "generators", "--catalog", "st8", "--rep", "rho5", "--max-degree", "15"
    )
    assert first == second


def test_max_degree_env_override(capsys, monkeypatch):
    monkeypatch.setenv("REFLECTINV_MAX_DEGREE", "12")
    code, out, _ = run_cli(
        capsys, "molien", "--catalog", "st8", "--rep", "rho1", "--json"
    )
    assert code == 0
    payload = json.loads(out)
    assert len(payload["series"]) == 13


def test_singular_generator_file(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"n": 2, "generators": [[["1", "0"], ["0", "0"]]]}))
    code, _, err = run_cli(capsys, "order", "--file", str(path))
    assert code == 2 and "SingularGenerator" in err


def test_malformed_file(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    code, _, err = run_cli(capsys, "order", "--file", str(path))
    assert code == 2


def test_prim_degrees_flag(tmp_path, capsys):
    # the cyclic group generated by D needs explicit primary degrees 1,4
    export = json.dumps(
        {
            "name": "cyclic4",
            "n": 2,
            "generators": [[["1", "0"], ["0", "i"]]],
            "representations": {"triv": [[["1"]]]},
        }
    )
    path = tmp_path / "c4.json"
    path.write_text(export)
    code, out, _ = run_cli(
        capsys,
        "generators", "--file", str(path), "--rep", "triv",
        "--max-degree", "4", "--prim-degrees", "1,4",
    )
    assert code == 0 and out.splitlines()[0] == "degree 0: (1)"
