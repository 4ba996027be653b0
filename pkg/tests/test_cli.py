"""Command-line contract: artifacts, pipelines, formats, and exit codes."""

import io
import json
import subprocess
import sys
from itertools import combinations

import pytest

from glcycles.cli import main
from glcycles.graphs import Graph
from glcycles.groups import AvoidSets, GroupSpec
from glcycles.labelling import LabelledGraph
from glcycles.serialize import (CYCLES_CSV_COLUMNS, DUALITY_CSV_COLUMNS,
                                GRAPH_CSV_COLUMNS, SUITE_CSV_COLUMNS,
                                canonical_json)
from glcycles.suites import SUITES, SuiteResult


def odd_k4_file(tmp_path):
    spec = GroupSpec((2,))
    g = Graph(range(4), combinations(range(4), 2))
    lg = LabelledGraph.build(g, spec, {e: spec.element((1,)) for e in g.edges},
                             AvoidSets.make(spec, [{0}]))
    path = tmp_path / "k4.json"
    path.write_text(canonical_json(lg.to_json()))
    return path


def read(path):
    return json.loads(path.read_text())


def test_gen_is_byte_identical(tmp_path):
    out = tmp_path / "a.json"
    assert main(["gen", "grid3", "--n", "4", "-o", str(out)]) == 0
    first = out.read_bytes()
    assert main(["gen", "grid3", "--n", "4", "-o", str(out)]) == 0
    assert out.read_bytes() == first


def test_gen_echoes_resolved_defaults(tmp_path):
    out = tmp_path / "g.json"
    assert main(["gen", "escher", "-o", str(out)]) == 0
    art = read(out)
    assert art["config"]["command"] == "gen"
    assert art["config"]["bounds"] == {"height": 3, "path_len": 1}
    assert art["parameters"] == {"n": 3, "pathLength": 1}


def test_pipeline_through_files(tmp_path):
    gen = tmp_path / "gen.json"
    cyc = tmp_path / "cyc.json"
    pack = tmp_path / "pack.json"
    hit = tmp_path / "hit.json"
    assert main(["gen", "escher", "--height", "3", "--path-len", "2",
                 "-o", str(gen)]) == 0
    assert main(["cycles", "-i", str(gen), "-o", str(cyc)]) == 0
    assert read(cyc)["cycles"]["count"] == 41
    assert read(cyc)["cycles"]["complete"] is True
    assert main(["pack", "-i", str(cyc), "--load", "1", "-o", str(pack)]) == 0
    packing = read(pack)["packing"]
    assert packing["count"] == 1
    assert all(0 <= i < 41 for i in packing["chosen"])
    assert main(["hit", "-i", str(cyc), "-o", str(hit)]) == 0
    assert read(hit)["hitting"]["size"] >= 1


def test_shell_pipeline_composes():
    cmd = ("glcycles gen grid3 --n 3 | glcycles cycles | glcycles hit")
    got = subprocess.run(cmd, shell=True, capture_output=True, text=True)
    assert got.returncode == 0
    assert json.loads(got.stdout)["hitting"]["size"] == 1


def test_duality_on_hand_written_input(tmp_path):
    src = odd_k4_file(tmp_path)
    out = tmp_path / "dual.json"
    assert main(["duality", "-i", str(src), "-o", str(out)]) == 0
    rep = read(out)["report"]
    assert rep["nu"] == {"1": 1, "2": 2}
    assert rep["tau"] == 2
    assert rep["family_size"] == 4
    assert rep["truncated"] is False


def test_cycles_reads_stdin_writes_stdout(tmp_path, monkeypatch, capsys):
    src = odd_k4_file(tmp_path)
    monkeypatch.setattr(sys, "stdin", io.StringIO(src.read_text()))
    assert main(["cycles"]) == 0
    art = json.loads(capsys.readouterr().out)
    assert art["cycles"]["count"] == 4


def test_csv_format(tmp_path):
    gen = tmp_path / "gen.json"
    main(["gen", "grid3", "--n", "3", "-o", str(gen)])
    for args, columns in (
            (["gen", "grid3", "--n", "3"], GRAPH_CSV_COLUMNS),
            (["cycles", "-i", str(gen)], CYCLES_CSV_COLUMNS),
            (["duality", "-i", str(gen)], DUALITY_CSV_COLUMNS),
            (["verify", "--suite", "ap-theorem"], SUITE_CSV_COLUMNS)):
        out = tmp_path / "out.csv"
        assert main(args + ["--format", "csv", "-o", str(out)]) == 0
        lines = out.read_text().splitlines()
        assert lines[0].startswith("# config: ")
        json.loads(lines[0][len("# config: "):])
        assert lines[1] == ",".join(columns)
        assert len(lines) > 2


def test_outdir_reroots_relative_output(tmp_path, monkeypatch):
    monkeypatch.setenv("GLCYCLES_OUTDIR", str(tmp_path))
    monkeypatch.chdir(tmp_path / "..")
    assert main(["gen", "grid3", "--n", "3", "-o", "inside.json"]) == 0
    assert (tmp_path / "inside.json").exists()


def test_pack_without_family_exits_2(tmp_path, capsys):
    src = odd_k4_file(tmp_path)
    assert main(["pack", "-i", str(src)]) == 2
    assert "cycles" in capsys.readouterr().err


def test_truncation_exits_3(tmp_path, capsys):
    src = odd_k4_file(tmp_path)
    assert main(["cycles", "-i", str(src), "--max-cycles", "3"]) == 3
    assert "--max-cycles" in capsys.readouterr().err


def test_unknown_suite_is_a_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "bogus"])
    assert exc.value.code == 2


def test_bad_gen_parameters_exit_2(tmp_path, capsys):
    # escape multiple 4 does not clear (c-1)*t = 5
    assert main(["gen", "complete", "--c", "2", "--t", "5",
                 "--max-order", "4"]) == 2
    assert "escape gap" in capsys.readouterr().err


def test_verify_passes_and_echoes_bounds(tmp_path):
    out = tmp_path / "v.json"
    assert main(["verify", "--suite", "smallgoodset", "--max-order", "4",
                 "--max-len", "3", "-o", str(out)]) == 0
    art = read(out)
    assert art["config"]["bounds"] == {"max_len": 3, "max_order": 4}
    assert art["result"]["passed"] is True


def test_verify_failure_writes_reproducer(tmp_path, monkeypatch, capsys):
    def red(bounds):
        return SuiteResult("always-red", 1, [{"reason": "forced"}], {})

    monkeypatch.setitem(SUITES, "always-red", red)
    out = tmp_path / "v.json"
    assert main(["verify", "--suite", "always-red", "-o", str(out)]) == 4
    assert read(out)["result"]["passed"] is False
    repro = read(tmp_path / "reproducer-always-red.json")
    assert repro["suite"] == "always-red"
    assert repro["violation"] == {"reason": "forced"}
    assert "reproducer" in capsys.readouterr().err


def test_rerun_of_every_artifact_is_byte_identical(tmp_path):
    gen = tmp_path / "gen.json"
    main(["gen", "modgrid", "--n", "4", "-o", str(gen)])
    jobs = [["cycles", "-i", str(gen)],
            ["duality", "-i", str(gen)],
            ["verify", "--suite", "ap-theorem"]]
    for job in jobs:
        out = tmp_path / "job.out"
        assert main(job + ["-o", str(out)]) == 0
        first = out.read_bytes()
        assert main(job + ["-o", str(out)]) == 0
        assert out.read_bytes() == first
