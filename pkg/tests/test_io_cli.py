import json
import math
import subprocess
import sys

import jsonschema
import numpy as np
import pytest
from hypothesis import given, strategies as st

from projrange.cli import main
from projrange.figures import ellipse_path, full_region_path, full_region_svg, ellipses_svg
from projrange.io import (PAIR_SPEC_SCHEMA, RANGE_SCHEMA, dumps, format_float, load_pair,
                          pair_document, validate)
from projrange.pairs import two_lines
from projrange.spectral import construct_pair, product_spectrum


@given(st.floats(allow_nan=False, allow_infinity=False))
def test_format_float_round_trips(x):
    assert float(format_float(x)) == x
    assert json.loads(format_float(x)) == x


def test_format_float_rejects_nan():
    with pytest.raises(ValueError):
        format_float(math.nan)


def test_dumps_complex_and_nesting():
    text = dumps({"z": 1 + 2j, "a": [0.1, True, None], "n": np.int64(3)})
    assert json.loads(text) == {"z": [1.0, 2.0], "a": [0.1, True, None], "n": 3}
    assert "0.10000000000000001" in text


def test_pair_document_round_trip():
    pair = construct_pair([0.0, 0.3, 0.8], dim_budget=5)
    doc = json.loads(dumps(pair_document(pair)))
    validate(doc, PAIR_SPEC_SCHEMA)
    again = load_pair(doc)
    assert np.max(np.abs(again.p1 - pair.p1)) < 1e-15 and np.max(np.abs(again.p2 - pair.p2)) < 1e-15


def test_pair_spec_needs_exactly_one_source():
    both = {"dim": 2, "basis1": [[[1, 0], [0, 0]]], "basis2": [[[0, 0], [1, 0]]],
            "generator": {"kind": "two_lines", "theta": 0.3}}
    with pytest.raises(jsonschema.ValidationError):
        load_pair(both)
    with pytest.raises(jsonschema.ValidationError):
        load_pair({"dim": 2})


def test_generators():
    p = load_pair({"generator": {"kind": "two_lines", "theta": 0.5}})
    assert np.allclose(p.product, two_lines(0.5).product)
    p = load_pair({"dim": 4, "generator": {"kind": "prescribed_spectrum", "k": [0, 0.5]}})
    assert p.dim == 4 and product_spectrum(p).values == pytest.approx((0.0, 0.5))
    p = load_pair({"dim": 6, "generator": {"kind": "random", "seed": 7, "dim1": 2, "dim2": 3}})
    assert p.basis1.dim == 2 and p.basis2.dim == 3


def write(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def test_cmd_range_two_lines(tmp_path):
    src = write(tmp_path, "in.json", {"generator": {"kind": "two_lines", "theta": math.pi / 4}})
    out = tmp_path / "out.json"
    assert main(["range", src, "--out", str(out), "--grid", "256"]) == 0
    doc = json.loads(out.read_text())
    validate(doc, RANGE_SCHEMA)
    assert doc["hull_lambdas"] == pytest.approx([0.0, 0.5])
    assert doc["rectangle_check"] is True
    assert doc["friedrichs_cosine"] == pytest.approx(math.sqrt(0.5))


def test_cmd_range_segment(tmp_path):
    src = write(tmp_path, "in.json", {"generator": {"kind": "prescribed_spectrum", "k": [0, 1]}})
    out = tmp_path / "out.json"
    assert main(["range", src, "--out", str(out), "--grid", "64"]) == 0
    pts = np.array(json.loads(out.read_text())["boundary"])
    assert np.max(np.abs(pts[:, 2])) < 1e-15
    assert pts[:, 1].min() == pytest.approx(0.0, abs=1e-15) and pts[:, 1].max() == pytest.approx(1.0)


def test_cmd_range_is_byte_deterministic(tmp_path):
    src = write(tmp_path, "in.json", {"dim": 6, "generator": {"kind": "random", "seed": 7, "dim1": 2, "dim2": 3}})
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["range", src, "--out", str(a)]) == 0
    assert main(["range", src, "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert json.loads(a.read_text())["seed"] == 7


def test_cmd_construct_then_range(tmp_path):
    spec = tmp_path / "k.json"
    assert main(["construct", "0,0.25,1", "--out", str(spec)]) == 0
    out = tmp_path / "r.json"
    assert main(["range", str(spec), "--out", str(out), "--grid", "128"]) == 0
    assert json.loads(out.read_text())["spectrum"]["values"] == pytest.approx([0.0, 0.25, 1.0])


def test_cmd_construct_exit_codes(tmp_path):
    assert main(["construct", "0.5", "--out", str(tmp_path / "x.json")]) == 4
    assert main(["construct", "0", "--out", str(tmp_path / "z.json")]) == 0
    assert not load_pair(json.loads((tmp_path / "z.json").read_text())).product.any()
    assert main(["construct", "0,abc"]) == 2


def test_cmd_recover(tmp_path, capsys):
    spec = tmp_path / "k.json"
    main(["construct", "0,0.1,0.5,0.95", "--out", str(spec)])
    assert main(["recover", str(spec)]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["recovered"] == pytest.approx([0.0, 0.1, 0.5, 0.95], abs=1e-9)
    assert doc["symmetric_difference"] == []


def test_cmd_recover_flags_unresolved_spectrum(tmp_path):
    # just below 1/4 the gap to the critical line is ~5e-9, under the match
    # tolerance, so a spurious 1/4 is reported
    spec = tmp_path / "k.json"
    main(["construct", "0,0.2499", "--out", str(spec)])
    assert main(["recover", str(spec), "--out", str(tmp_path / "r.json")]) == 3


def test_cmd_iterate_csv(tmp_path, capsys):
    src = write(tmp_path, "in.json", {"generator": {"kind": "two_lines", "theta": math.pi / 3}})
    assert main(["iterate", src, "-n", "10"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "n,error,bound" and len(lines) == 12
    n, err, bound = lines[5].split(",")
    assert float(err) == pytest.approx(0.5 ** 7, rel=1e-12)
    assert main(["iterate", src, "-n", "3", "--format", "json"]) == 0
    assert len(json.loads(capsys.readouterr().out)["rows"]) == 4


def test_cmd_annihilate(capsys):
    assert main(["annihilate", "4", "0", "0"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["norm_psp"] == pytest.approx(0.5, abs=1e-12) and doc["strong"]
    assert main(["annihilate", "4", "", "0,1"]) == 0
    assert main(["annihilate", "4", "0,7", "0"]) == 4


def test_input_and_io_exit_codes(tmp_path):
    assert main(["range", str(tmp_path / "missing.json")]) == 5
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["range", str(bad)]) == 2
    assert main(["range", write(tmp_path, "s.json", {"dim": 2})]) == 2
    assert main(["bogus"]) == 2
    assert main(["range", str(bad), "--grid", "4"]) == 2


def test_cmd_figures(tmp_path):
    out = tmp_path / "figs"
    assert main(["figures", "--out", str(out)]) == 0
    first = {p.name: p.read_bytes() for p in out.iterdir()}
    assert set(first) == {"ellipses.svg", "full_region.svg"}
    main(["figures", "--out", str(out)])
    assert first == {p.name: p.read_bytes() for p in out.iterdir()}
    assert ellipses_svg().count("<path") == 9 and full_region_svg().count("<path") == 1


def test_figure_geometry():
    pts = ellipse_path(0.5)
    assert len(pts) == 720
    assert pts[0] == pytest.approx(0.5 * (math.sqrt(0.5) + 0.5), abs=1e-15)
    region = full_region_path()
    assert len(region) == 720 and region.real.min() == pytest.approx(-0.125, abs=1e-15)


def test_figures_unwritable_target(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    assert main(["figures", "--out", str(blocker / "sub")]) == 5


def test_console_entry_point_runs():
    res = subprocess.run([sys.executable, "-m", "projrange.cli", "annihilate", "4", "0", "0"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and json.loads(res.stdout)["N"] == 4
