"""CLI round-trips, exit codes, determinism, bundled data."""

import io
import json

import pytest

from locert.cli import data_file, run


def _run(argv):
    buf = io.StringIO()
    code = run(argv, out=buf)
    text = buf.getvalue()
    return code, json.loads(text) if text.strip() else None


def _data_path(name: str) -> str:
    from importlib import resources

    return str(resources.files("locert.data").joinpath(name))


def test_braid_commands():
    code, result = _run(["braid", "sign", "B"])
    assert code == 0
    assert result["payload"]["sign"] == "positive"
    code, result = _run(["braid", "compare", "b", ""])
    assert result["payload"]["comparison"] == "less"
    code, result = _run(["braid", "reduce", "abA"])
    assert result["payload"]["reduced"] == "Bab"
    code, result = _run(["braid", "floor", "B"])
    assert result["payload"]["floor"] == 0


def test_klein_commands():
    code, result = _run(["klein", "fill", "1", "0"])
    assert code == 0
    assert result["payload"]["classification"] == "infinite_cyclic_quotient_lo"
    code, result = _run(["klein", "sign", "y", "--ordering", "O2"])
    assert result["payload"]["sign"] == "negative"


def test_slope_commands():
    code, result = _run(["slope", "delta", "2/1", "1/1"])
    assert result["payload"]["delta"] == 1
    code, result = _run(["slope", "glue", "--matrix", "0,1,1,0", "2/1"])
    assert result["payload"]["slope"] == "1/2"


def test_group_commands(tmp_path):
    code, result = _run(
        ["group", "abelianize", _data_path("plus4_figure_eight_pi1.json")]
    )
    assert code == 0
    assert result["payload"] == {"free_rank": 0, "torsion": [4]}

    b3 = _data_path("b3_presentation.json")
    code, result = _run(
        [
            "group",
            "fill",
            b3,
            "--mu",
            "s2",
            "--longitude",
            "s1 s2 s1 s1 s2 s1 S2 S2 S2 S2 S2 S2",
            "--slope",
            "1/0",
        ]
    )
    assert code == 0
    filled = result["payload"]["presentation"]
    assert filled["relators"][-1] == "s2"
    filled_path = tmp_path / "filled.json"
    filled_path.write_text(json.dumps(filled))
    code, result = _run(["group", "enumerate", str(filled_path)])
    assert code == 0
    assert result["payload"]["index"] == 1

    code, result = _run(
        [
            "group",
            "amalgam",
            b3,
            _data_path("klein_bottle_presentation.json"),
            "--pair",
            "s2 = Y",
            "--pair",
            "s1 s2 s1 s1 s2 s1 = Y x x",
        ]
    )
    assert code == 0
    merged = result["payload"]["presentation"]
    assert merged["generators"] == ["s1", "s2", "x", "y"]
    merged_path = tmp_path / "merged.json"
    merged_path.write_text(json.dumps(merged))
    code, result = _run(["group", "abelianize", str(merged_path)])
    assert result["payload"] == {"free_rank": 0, "torsion": [4]}


def test_group_enumerate_inconclusive_exit_code(tmp_path):
    pres = {"generators": ["x", "y"], "relators": ["x y X y", "x x"]}
    path = tmp_path / "dihedral.json"
    path.write_text(json.dumps(pres))
    code, result = _run(["group", "enumerate", str(path), "--max-cosets", "200"])
    assert code == 2
    assert result["status"] == "inconclusive"
    assert result["payload"]["index"] is None


def test_splice_commands(tmp_path):
    tree = _data_path("double_trefoil_splice.json")
    code, result = _run(["splice", "cert", tree, "--bound", "3"])
    assert code == 0
    cert = result["payload"]["certificate"]
    edge = cert["components"][0]["edge_certificate"]
    assert edge["alpha"] == "-1/1"
    cert_path = tmp_path / "cert.json"
    cert_path.write_text(json.dumps(cert))
    code, result = _run(["splice", "verify", tree, str(cert_path)])
    assert code == 0
    assert result["payload"]["valid"] is True

    # tampered certificate is rejected but is not an input error
    cert["components"][0]["edge_certificate"]["alpha"] = "1/1"
    cert["components"][0]["edge_certificate"]["image"] = "1/1"
    cert_path.write_text(json.dumps(cert))
    code, result = _run(["splice", "verify", tree, str(cert_path)])
    assert code == 0
    assert result["payload"]["valid"] is False


def test_splice_unknown_exit_code(tmp_path):
    tree = {
        "nodes": [
            {"kind": "user", "name": "mystery"},
            {"kind": "torus_knot", "r": 2, "s": 3},
        ],
        "edges": [{"a": 0, "b": 1, "matrix": [0, 1, 1, 0]}],
    }
    path = tmp_path / "tree.json"
    path.write_text(json.dumps(tree))
    code, result = _run(["splice", "cert", str(path)])
    assert code == 2
    assert result["status"] == "unknown"


def test_hf_and_cover_commands():
    code, result = _run(
        ["hf", "rank", "--p", "-3", "--q", "1", "--nu", "1", "--ranks", "1"]
    )
    assert result["payload"]["rank"] == 5
    code, result = _run(["cover", "order", "--poly", "1", "--n", "7"])
    assert result["payload"]["order"] == 1
    code, result = _run(["cover", "order", "--poly", "t^2 - t + 1", "--n", "6"])
    assert result["payload"]["order"] == "infinite"
    assert "note" in result["payload"]  # even n: descent to the double cover
    code, result = _run(["cover", "order", "--poly", "t^2 - 3t + 1", "--n", "2"])
    assert result["payload"]["order"] == 5
    assert "note" in result["payload"]


def test_verify_commands():
    code, result = _run(
        ["verify", "proposition-4-3", "--samples", "12", "--seed", "5"]
    )
    assert code == 0
    assert result["payload"]["total_failures"] == 0
    assert result["payload"]["wrong_ordering_control_failures"] >= 1
    code, result = _run(["verify", "nonapplicability"])
    assert code == 0
    assert result["payload"]["lo_slopes"] == [[1, 0]]
    assert result["payload"]["b3_quotient_index"] == 1


def test_verify_compat_alias():
    code, result = _run(["verify", "compatibility", "--samples", "3"])
    assert code == 0


def test_seeded_determinism():
    args = ["verify", "proposition-4-3", "--samples", "8", "--seed", "42"]
    _, first = _run(args)
    _, second = _run(args)
    assert first["payload"] == second["payload"]
    assert json.dumps(first["payload"], sort_keys=True) == json.dumps(
        second["payload"], sort_keys=True
    )


def test_payload_round_trip():
    _, result = _run(["braid", "sign", "aB"])
    assert json.loads(json.dumps(result)) == result


def test_input_error_exit_codes(tmp_path, capsys):
    assert run(["braid", "sign", "xyz"]) == 1
    assert run(["slope", "delta", "2/4", "1/1"]) == 1
    assert run(["group", "abelianize", str(tmp_path / "missing.json")]) == 1
    assert run(["nonsense"]) == 1
    assert run(["hf", "rank", "--p", "1", "--q", "0", "--nu", "0", "--ranks", "1"]) == 1
    capsys.readouterr()


def test_text_format():
    buf = io.StringIO()
    code = run(["--format", "text", "braid", "sign", "B"], out=buf)
    assert code == 0
    text = buf.getvalue()
    assert "status: ok" in text and "sign: positive" in text


def test_bundled_data():
    poly = data_file("alexander_polynomials.json")["polynomials"]
    assert poly["conway"] == "1"
    tree = data_file("double_trefoil_splice.json")
    assert len(tree["nodes"]) == 2
