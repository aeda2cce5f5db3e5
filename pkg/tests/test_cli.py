import json
from pathlib import Path

import pytest

import recttile.count
from recttile.cli import main
from recttile.count import enumerate_kernel, enumerate_tilings
from recttile.render import (
    tiling_from_json,
    tiling_to_ascii,
    tiling_to_json,
    tiling_to_svg,
    vector_from_dict,
    vector_to_dict,
)

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_count_human(capsys):
    code, out, _ = run(capsys, "count", "--width", "10", "--height", "4")
    assert code == 0
    assert out.strip() == "tilings(10×4) = 10  [c=5, beta=3, omega=2]"


def test_count_zero(capsys):
    code, out, _ = run(capsys, "count", "--width", "1", "--height", "2")
    assert code == 0 and "= 0" in out


def test_count_json(capsys):
    code, out, _ = run(capsys, "count", "--width", "7", "--height", "4", "--json")
    assert json.loads(out) == {"width": 7, "height": 4, "c": 2, "beta": 1, "omega": 1, "count": 2}


def test_count_invalid(capsys):
    code, _, err = run(capsys, "count", "--width", "0", "--height", "4")
    assert code == 2 and "positive" in err


def test_usage_error_exit_2():
    with pytest.raises(SystemExit) as e:
        main(["count", "--width", "x", "--height", "4"])
    assert e.value.code == 2


def test_enumerate_svg(tmp_path, capsys):
    code, _, _ = run(capsys, "enumerate", "--width", "10", "--height", "4", "--out-dir", str(tmp_path))
    assert code == 0
    svgs = sorted(tmp_path.glob("*.svg"))
    assert len(svgs) == 10
    manifest = json.loads((tmp_path / "manifest.json").read_text())
    assert manifest["count"] == 10
    assert sum(e["color"] == "white" for e in manifest["tilings"]) == 3
    assert [e["file"] for e in manifest["tilings"][:3]] == [f"tiling_white_{i}.svg" for i in range(3)]


def test_enumerate_small_and_empty(tmp_path, capsys):
    code, _, _ = run(capsys, "enumerate", "--width", "1", "--height", "1", "--out-dir", str(tmp_path / "a"),
                     "--format", "json")
    assert code == 0
    assert len(list((tmp_path / "a").glob("tiling_*.json"))) == 2
    code, _, _ = run(capsys, "enumerate", "--width", "1", "--height", "2", "--out-dir", str(tmp_path / "b"))
    assert code == 0
    assert list((tmp_path / "b").glob("tiling_*")) == []
    assert json.loads((tmp_path / "b" / "manifest.json").read_text())["tilings"] == []


def test_enumerate_cap_exit_3(tmp_path, capsys):
    code, _, err = run(capsys, "enumerate", "--width", "10", "--height", "4", "--cap", "2", "--out-dir", str(tmp_path))
    assert code == 3 and "beta=3" in err


def test_verify_ok(capsys):
    code, out, _ = run(capsys, "verify", "--max-side", "5", "--square-max", "8")
    assert code == 0 and "-> ok" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--max-side", "4", "--dims-only", "--square-max", "4", "--json")
    assert code == 0 and json.loads(out)["ok"] is True


def test_verify_detects_injected_bug(capsys, monkeypatch):
    real = recttile.count.count_tilings

    def buggy(p, q):
        return real(p, q) + (1 if (p, q) == (3, 3) else 0)

    monkeypatch.setattr(recttile.count, "count_tilings", buggy)
    code, out, _ = run(capsys, "verify", "--max-side", "4", "--dims-only", "--square-max", "2")
    assert code == 1
    assert "FAIL 3x3 count" in out


def test_kernel_cmd(capsys):
    code, out, _ = run(capsys, "kernel", "--width", "7", "--height", "4", "--polarity", "black",
                       "--method", "elim", "--compare")
    doc = json.loads(out)
    assert code == 0 and doc["dimension"] == 1 and doc["spans_equal"] is True
    v = vector_from_dict(doc["basis"][0])
    assert not v.is_zero()
    code, out, _ = run(capsys, "kernel", "--width", "1", "--height", "2", "--polarity", "white",
                       "--method", "transfer")
    assert json.loads(out)["basis"] == []
    code, _, _ = run(capsys, "kernel", "--width", "-1", "--height", "2", "--polarity", "white")
    assert code == 2


def test_vector_json_layout_and_round_trip():
    u = enumerate_kernel(1, 1)[1]  # black diagonal (0,0)-(1,1)
    d = vector_to_dict(u)
    assert d["rows"] == ["01", "10"]
    assert vector_from_dict(json.loads(json.dumps(d))) == u


@pytest.mark.parametrize("p,q", [(1, 1), (7, 4), (10, 4), (5, 5)])
def test_tiling_json_round_trip(p, q):
    for T in enumerate_tilings(p, q):
        assert tiling_from_json(tiling_to_json(T)) == T


def test_svg_deterministic():
    T = enumerate_tilings(10, 4)[0]
    assert tiling_to_svg(T) == tiling_to_svg(enumerate_tilings(10, 4)[0])


@pytest.mark.parametrize("name,p,q,i", [("unit_black", 1, 1, 1), ("rect7x4_white", 7, 4, 0), ("rect10x4_black", 10, 4, 3)])
def test_golden_files(name, p, q, i):
    T = enumerate_tilings(p, q)[i]
    assert tiling_to_svg(T) == (GOLDEN / f"{name}.svg").read_text()
    assert tiling_to_json(T) == (GOLDEN / f"{name}.json").read_text()


def test_ascii_unit_square():
    T = enumerate_tilings(1, 1)[1]
    assert tiling_to_ascii(T) == "+.+\n:/:\n+.+\n"
