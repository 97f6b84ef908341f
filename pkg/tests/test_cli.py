import io
import json

import pytest

from thetalift import cli, theta
from thetalift.core import ThetaContext

LAST_HC = "6,5,4,-8;3,1,0,-3,-7"
HOLO_HC = "7/2,5/2;-5/2,-7/2"


def run(*argv):
    out = io.StringIO()
    code = cli.main(list(argv), out=out)
    return code, out.getvalue()


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, hc in (("last", LAST_HC), ("holo", HOLO_HC)):
        code, text = run("convert", "--hc", hc)
        assert code == 0
        path = tmp_path / f"{name}.json"
        path.write_text(text)
        paths[name] = str(path)
    pair_only = {"n": 2, "relevant": [], "pairs": [{"winding": 0, "t_num": 1, "t_den": 2}]}
    (tmp_path / "pair.json").write_text(json.dumps(pair_only))
    paths["pair"] = str(tmp_path / "pair.json")
    return paths


def test_convert_hc_gives_sign_vector():
    code, text = run("convert", "--hc", LAST_HC)
    assert code == 0
    doc = json.loads(text)
    assert [e["eta"] for e in doc["relevant"]] == [1, -1, 1, 1, -1, 1, -1, 1, 1]
    assert [e["two_alpha"] for e in doc["relevant"]] == [12, 10, 8, 6, 2, 0, -6, -14, -16]


def test_convert_round_trip(files):
    code, text = run("convert", "--param", files["holo"])
    assert (code, text) == (0, "(7/2, 5/2; -5/2, -7/2)\n")


def test_analyze_last_example(files):
    code, text = run("analyze", "--param", files["last"], "--nu", "0")
    assert code == 0
    assert "k = 1\n" in text
    assert "(r, s) = (5, 3)" in text
    assert "X = {(6, +1), (5, +1), (4, +1), (3, -1), (1, -1), (0, -1), (-3, -1), (-7, -1), (-8, +1)}" in text
    assert "X_inf = {(6, +1), (0, -1), (-3, -1), (-7, -1), (-8, +1)}" in text
    assert "HC = (6, 5, 4, -8; 3, 1, 0, -3, -7)" in text
    rows = text.split("T   C+  C-\n")[1].split("\n")
    assert rows[6].split() == ["7", "1", "2"]


def test_analyze_holomorphic_and_pair_only(files):
    text = run("analyze", "--param", files["holo"])[1]
    assert "k = 0\n" in text and "(r, s) = (4, 0)" in text
    text = run("analyze", "--param", files["pair"])[1]
    assert "k = 0\n" in text and "(r, s) = (1, 1)" in text and "X = {}" in text
    assert "HC =" not in text


def test_first_occurrence(files):
    assert run("first-occurrence", "--param", files["last"], "--d", "4") == (0, "12\n")


def test_verify_passes(files):
    code, text = run("verify", "--param", files["last"])
    assert code == 0
    assert [line.split(":")[0] for line in text.splitlines()] == list(cli.CHECKS)
    assert all(": PASS" in line for line in text.splitlines())


def test_verify_skips_appendix_for_tempered(files):
    code, text = run("verify", "--param", files["pair"], "--checks", "appendix-j,tower")
    assert code == 0
    assert text.startswith("appendix-j: SKIP")


def test_verify_failure_exit_code(files, monkeypatch):
    real = theta.conservation_report

    def broken(ctx):
        rep = real(ctx)
        return theta.ConservationReport(rep.n, rep.m_plus + 2, rep.m_minus)

    monkeypatch.setattr(theta, "conservation_report", broken)
    code, text = run("verify", "--param", files["last"], "--checks", "conservation")
    assert code == 2
    assert "FAIL" in text


def test_unknown_check(files, capsys):
    code, _ = run("verify", "--param", files["last"], "--checks", "bogus")
    assert code == 1
    assert "unknown check" in capsys.readouterr().err


def test_diagram_json_matches_predicate(files):
    ctx = cli.load_param(files["last"]).context(0)
    code, text = run("diagram", "--param", files["last"], "--rmax", "12", "--smax", "10", "--format", "json")
    assert code == 0
    cells = json.loads(text)
    assert len(cells) == sum(1 for r in range(13) for s in range(11) if (r + s) % 2 == 0)
    for cell in cells:
        assert cell["nonzero"] == theta.nonvanishing(ctx, cell["r"], cell["s"])


def test_ascii_and_svg_come_from_the_model(files):
    ctx = cli.load_param(files["holo"]).context(0)
    cells = cli.diagram_model(ctx, 14, 14)
    art = cli.render_ascii(cells, 14, 14).splitlines()
    assert len(art) == 15 and all(len(row) == 15 for row in art)
    for cell in cells:
        char = art[14 - cell["s"]][cell["r"]]
        assert char == ("#" if cell["nonzero"] else ".")
    svg = cli.render_svg(cells, 14, 14)
    assert svg.count("<circle") == len(cells)
    assert svg.count('fill="black"') == sum(c["nonzero"] for c in cells)
    assert ">r</text>" in svg and ">s</text>" in svg
    assert "href" not in svg
    code, text = run("diagram", "--param", files["holo"], "--format", "svg")
    assert code == 0 and text.startswith("<svg")


def test_ascii_blank_when_no_cell_has_parity(files):
    # nu = 1 and a single cell (0, 0) of even size
    code, text = run("diagram", "--param", files["last"], "--nu", "1", "--rmax", "0", "--smax", "0")
    assert (code, text) == (0, " \n")


def test_diagram_bounds(files, capsys):
    code, _ = run("diagram", "--param", files["holo"], "--rmax", "513")
    assert code == 1
    assert "--rmax" in capsys.readouterr().err


def test_ggp_command(tmp_path):
    small = tmp_path / "one.json"
    big = tmp_path / "two.json"
    small.write_text(json.dumps({"n": 1, "relevant": [{"two_alpha": 0}]}))
    big.write_text(json.dumps({"n": 2, "relevant": [{"two_alpha": 3}, {"two_alpha": -1, "eta": -1}]}))
    code, text = run("ggp", "--param", str(small), "--param1", str(big))
    assert code == 0
    assert "U(1, 0) inside U(2, 0)" in text
    assert "eta' = (3/2:+, -1/2:-)" in text


@pytest.mark.parametrize(
    "doc, fragment",
    [
        ("{not json", "1:2"),
        ('{"n": 2, "relevant": [{"two_alpha": "x"}]}', "relevant[0].two_alpha"),
        ('{"n": 1, "relevant": [{"two_alpha": 0, "eta": 2}]}', "relevant[0].eta"),
        ('{"n": 2, "pairs": [{"winding": 1, "t_den": 0}]}', "pairs[0].t_den"),
        ('{"n": 2, "relevant": [{"two_alpha": 1}]}', "total dimension"),
        ('{"n": 1, "extra": 3}', "unknown field"),
        ('{"relevant": []}', ".n: missing"),
    ],
)
def test_parse_errors(tmp_path, capsys, doc, fragment):
    path = tmp_path / "bad.json"
    path.write_text(doc)
    code, _ = run("analyze", "--param", str(path))
    assert code == 1
    assert fragment in capsys.readouterr().err


def test_missing_eta_is_reported_only_when_needed(tmp_path, capsys):
    path = tmp_path / "noeta.json"
    path.write_text(json.dumps({"n": 1, "relevant": [{"two_alpha": 0}]}))
    pf = cli.load_param(str(path))
    assert pf.eta is None
    code, _ = run("analyze", "--param", str(path))
    assert code == 1
    assert "two_alpha=0" in capsys.readouterr().err


def test_bad_hc_and_bad_arguments(capsys):
    assert run("convert", "--hc", "1,2")[0] == 1
    assert "strictly decreasing" in capsys.readouterr().err
    assert run("convert", "--hc", "1;2;3")[0] == 1
    with pytest.raises(SystemExit) as exc:
        cli.main(["analyze"])
    assert exc.value.code == 1


def test_parity_error_exit_code(files, capsys):
    code, _ = run("first-occurrence", "--param", files["last"], "--d", "3")
    assert code == 1
    assert "does not match" in capsys.readouterr().err


def test_module_entry_point(files):
    import subprocess
    import sys

    done = subprocess.run(
        [sys.executable, "-m", "thetalift", "first-occurrence", "--param", files["last"], "--d", "0"],
        capture_output=True, text=True, check=False,
    )
    assert (done.returncode, done.stdout) == (0, "14\n")


def test_param_round_trip_through_json(files):
    pf = cli.load_param(files["last"])
    again = cli.parse_param(json.dumps(cli.param_to_json(pf.phi, pf.eta)))
    assert ThetaContext(again.phi, again.eta) == ThetaContext(pf.phi, pf.eta)
