import importlib
import inspect
import io
import json
import re
import subprocess
import sys

import pytest

from shizeta import cli


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_zeta_verb():
    assert run("zeta", "--n", "6", "--path", "NEEEENNNNNEE") == (0, "NNENENNENENE\n", "")
    code, out, _ = run("zeta", "--type", "A", "--path", "NENENE")
    assert (code, out) == (0, "NNNEEE\n")


def test_stats_verb_reports_dinv():
    code, out, _ = run("stats", "--kind", "vertical-c", "--n", "6", "--path", "NEEEENNNNNEE",
                       "--labels", "1,-5,-4,2,3,6")
    rep = json.loads(out)
    assert code == 0 and rep["dinv"] == 9 and rep["dinv'"] == 6
    assert rep["zeta"] == {"path": "NNENENNENENE", "labels": "5,6,4,3,1,-2,2,-1,-3,-4,-6,-5"}
    assert rep["valley_characterization"] is True


def test_zeta_labelled_verb():
    code, out, _ = run("zeta-labelled", "--pf", "4,0,-1,-4")
    rep = json.loads(out)
    assert code == 0 and rep["source"] == {"path": "NENEEENN", "labels": "2,-3,-4,1"}
    code, out, _ = run("zeta-labelled", "--path", "NEEENN", "--labels", "2,1,3", "--format", "text")
    assert out == "NNENNE -1,2,-3,3,-2,1\n"
    code, out, _ = run("zeta-labelled", "--type", "A", "--pf", "0,0,2,0,3", "--format", "text")
    assert out == "NENNNENEEE 1,2,3,5,4\n"


def test_sweep_and_invert_verbs():
    assert run("sweep", "--path", "NEEEENNNNNEE")[1] == "NNENENNENENE\n"
    rep = json.loads(run("sweep", "--path", "NEEEENNNNNEE", "--format", "json")[1])
    assert rep["step_labels"] == [0, 13, 1, -11, -23, -35, -22, -9, 4, 17, 30, 18]
    assert run("invert", "--path", "NNENENNENENE")[1] == "NEEEENNNNNEE\n"
    assert run("invert", "--path", "NNENNE", "--labels", "-1,2,-3,3,-2,1")[1] == "NEEENN 2,1,3\n"
    assert run("invert", "--area-vector", "1,-2,-1,0,1,2")[1] == "NEEEENNNNNEE\n"


def test_enumerate_verb():
    code, out, _ = run("enumerate", "--kind", "B", "--n", "2", "--format", "text")
    assert out.split() == ["NNNN", "NNNE", "NNEN", "NNEE", "NENN", "NENE"]
    assert len(json.loads(run("enumerate", "--kind", "vertical-c", "--n", "2")[1])) == 25
    assert len(json.loads(run("enumerate", "--kind", "antichains-c", "--n", "3")[1])) == 20
    assert len(json.loads(run("enumerate", "--kind", "shi-pairs-a", "--n", "3")[1])) == 16


def test_stats_other_kinds():
    rep = json.loads(run("stats", "--kind", "ballot", "--path", "NNENNE")[1])
    assert rep["area"] == 4 and rep["antichain"] == "[2e2,e3-e1]"
    rep = json.loads(run("stats", "--kind", "diagonal-c", "--path", "NNENNE",
                         "--labels", "-1,2,-3,3,-2,1")[1])
    assert rep["area'"] == 1 and rep["final_east_label"] == 2 and rep["signed_permutation"] == "-3,2,-1"
    rep = json.loads(run("stats", "--kind", "shi-pair", "--n", "3", "--antichain", "[2e2]",
                         "--w", "-3,2,-1")[1])
    assert rep["is_shi_pair"] and rep["images"] == {"2e2": "2e2"}
    rep = json.loads(run("stats", "--kind", "antichain", "--type", "A", "--n", "3",
                         "--antichain", "[e1-e2,e1-e3]")[1])
    assert rep["is_antichain"] is False
    rep = json.loads(run("stats", "--kind", "dyck", "--path", "NNNEENENEE")[1])
    assert rep["dinv"] == 5 and rep["zeta_C"] == rep["reverse_swap_zeta_A"]
    rep = json.loads(run("stats", "--kind", "path-c", "--path", "NEEEENNNNNEE")[1])
    assert rep["dinv"] == 9 and len(rep["typed_inversions"]) == 9


def test_distribution_verb():
    code, out, _ = run("distribution", "--kind", "vertical-c", "--n", "2", "--format", "csv")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "q,t,count"
    assert sum(int(l.split(",")[2]) for l in lines[1:]) == 25
    rows = json.loads(run("distribution", "--kind", "diagonal-a", "--n", "3")[1])
    assert sum(r["count"] for r in rows) == 16


def test_regions_verb():
    code, out, _ = run("regions", "--type", "C", "--n", "2")
    regions = json.loads(out)
    assert code == 0 and len(regions) == 25
    assert {r["signs"] for r in regions} == {r["signs"] for r in
                                             json.loads(run("regions", "--n", "2", "--box-scale", "2")[1])}


def test_verify_verb():
    code, out, _ = run("verify", "--check", "all", "--n", "3")
    assert code == 0
    assert all(json.loads(line)["ok"] for line in out.splitlines())
    code, out, _ = run("verify", "--check", "geometry", "--type", "C", "--n", "2")
    rep = json.loads(out)
    assert code == 0 and rep["details"]["regions"] == 25 and rep["details"]["matches"] == 25


def test_verify_failure_exit_code(monkeypatch):
    from shizeta import verify
    monkeypatch.setitem(verify.CHECKS, "counts",
                        lambda n, jobs=1: verify.CheckResult("counts", n, False, 0, {}, "forced"))
    assert run("verify", "--check", "counts", "--n", "2")[0] == 1


@pytest.mark.parametrize("argv, token", [
    (("zeta", "--path", "NEXE"), "'X'"),
    (("zeta", "--n", "2", "--path", "NEN"), "'NEN'"),
    (("stats", "--kind", "vertical-c", "--path", "NNEE", "--labels", "1,x"), "1,x"),
    (("stats", "--kind", "vertical-c", "--path", "NNEE", "--labels", "2,1"), "'2,1'"),
    (("zeta-labelled", "--pf", "9,0"), "9"),
    (("stats", "--kind", "antichain", "--n", "2", "--antichain", "[e5-e1]"), "e5-e1"),
    (("invert", "--path", "EN"), "EN"),
    (("verify", "--check", "labelled-zeta", "--n", "9"), "n=9"),
    (("zeta", "--path", "NE", "--bogus", "1"), "--bogus"),
    (("frobnicate",), "frobnicate"),
    (("zeta", "--path", "NE", "--type", "B"), "'B'"),
])
def test_input_errors_exit_2(argv, token):
    code, out, err = run(*argv)
    assert code == 2 and out == ""
    assert token in err


def test_negative_label_values_parse():
    code, out, _ = run("zeta-labelled", "--path", "EN", "--labels", "-1")
    assert code == 0 and json.loads(out)["image"]["labels"] == "1,-1"


def test_verb_operation_listing():
    assert set(cli.VERB_OPERATIONS) == set(cli.VERBS)
    listed = set()
    for verb, ops in cli.VERB_OPERATIONS.items():
        for name in ops:
            mod, fn = name.split(".")
            obj = getattr(importlib.import_module(f"shizeta.{mod}"), fn)
            assert callable(obj), name
            listed.add(name)
    # every public operation of the primary modules is reachable from some verb
    helpers = {
        "paths.east_before_north", "paths.staircase_row_length", "paths.is_square",
        "roots.root_from_vector", "roots.simple_coefficients", "roots.format_antichain",
        "roots.parse_antichain", "roots.act_vector", "roots.compose", "roots.inverse",
        "roots.is_group_element", "labelled.parse_ints", "labelled.format_ints",
        "labelled.is_permutation", "labelled.is_signed_permutation", "labelled.signed_permutations",
        "labelled.is_diagonal_word", "labelled.columns_increase", "labelled.is_parking_function_A",
        "statistics.inversions_of_area_vector", "zeta.is_zeta_image_valid", "zeta.is_zeta_source_valid",
        "geometry.is_dominant_point", "geometry.region_report", "geometry.expected_region_count",
        "lp.maximise", "tables.inverse_table", "tables.dump_table", "tables.load_table",
    }
    for mod in ("paths", "roots", "labelled", "statistics", "zeta", "geometry", "lp", "tables"):
        m = importlib.import_module(f"shizeta.{mod}")
        for name, obj in inspect.getmembers(m, inspect.isfunction):
            if obj.__module__ != m.__name__ or name.startswith("_"):
                continue
            key = f"{mod}.{name}"
            assert key in listed or key in helpers, f"{key} is not reachable from any verb"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "shizeta", "zeta", "--path", "EN"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == "NN\n"
    proc = subprocess.run([sys.executable, "-m", "shizeta", "zeta", "--path", "ENX"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 2 and re.search(r"'X'", proc.stderr)
