import csv
import io
import json
import subprocess
import sys

import pytest

from qhol import catalog, cli
from qhol.cli import GroupReport, Options, analyze, parse_json, render


@pytest.fixture(scope="module")
def reports():
    return cli.run_all(["D:4", "AB:4x2", "SD:5:8:2", "C:16"], Options(closed_form_check=True))


def test_analyze_rows(reports):
    d4, c4c2, sd, c16 = reports
    assert (d4.sr, d4.q, d4.h, d4.zs_verdict) == (6, 6, 2, "ZS")
    assert set(d4.classes) == {"S3", "C6"} and d4.closed_form == "ok"
    assert (c4c2.sr, c4c2.q, c4c2.h, c4c2.classes) == (8, 2, 2, ["C2"])
    assert sd.zs_verdict == "not-ZS" and sd.exhaustive and sd.nhol_split == "not-split"
    assert any("obstruction" in n for n in sd.notes)
    assert c16.closed_form == "ok"
    assert all(r.matches_expected() for r in reports)


def test_json_round_trip(reports):
    text = render(reports, "json")
    back = parse_json(text)
    assert back == reports
    assert "timings" not in json.loads(text)[0]
    assert "timings" in json.loads(render(reports, "json", timings=True))[0]


def test_markdown_and_csv(reports):
    md = render(reports, "md")
    lines = md.splitlines()
    assert lines[0].startswith("| spec | group | \\|S∩R\\| |") and len(lines) == 2 + len(reports)
    rows = list(csv.reader(io.StringIO(render(reports, "csv"))))
    assert rows[0] == cli.COLUMNS
    assert rows[1][5] in ("S3, C6", "C6, S3")
    with pytest.raises(ValueError):
        render(reports, "xml")


def test_deterministic():
    a = render([analyze("DIC:3")], "json")
    b = render([analyze("DIC:3")], "json")
    assert a == b


def test_empty_selection_renders_header():
    md = render([], "md")
    assert md.count("\n") == 2
    assert render([], "csv").strip() == ",".join(cli.COLUMNS)


def test_select_specs_orders_by_catalog():
    assert cli.select_specs(["D:4", "C:4", "AB:4x2"]) == ["C:4", "AB:4x2", "D:4"]
    # specs outside the catalog go last, by order
    assert cli.select_specs(["C:7", "D:4", "C:2"]) == ["D:4", "C:2", "C:7"]
    assert len(cli.select_specs()) == len(catalog.table_catalog())
    assert all(s for s in cli.select_specs(max_order=6))
    assert cli.select_specs(["C:8", "C:12"], max_order=8) == ["C:8"]


def test_budget_gives_inconclusive():
    r = analyze("D:4", Options(budget_nodes=5))
    assert r.sr is None and any("inconclusive" in n for n in r.notes)
    assert "inconclusive" in render([r], "md")


def test_error_row():
    r = GroupReport("X", "X", error="SpecError: bad")
    assert "error" in render([r], "csv")


def test_main_exit_codes(capsys):
    assert cli.main(["--spec", "C:4", "--format", "csv"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[1].startswith("C:4,C4,1,1,1,")
    assert cli.main(["--spec", "Q:9"]) == 2


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "qhol.cli", "--spec", "C:2", "--format", "json",
                          "--threads", "2", "--verbose"], capture_output=True, text=True, check=True)
    assert json.loads(out.stdout)[0]["spec"] == "C:2"


def test_threads_match_serial():
    specs = ["C:4", "D:3", "DIC:2"]
    assert cli.run_all(specs, Options(), threads=2) == cli.run_all(specs, Options())
