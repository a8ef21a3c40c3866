import json
import subprocess
import sys

import pytest

from edgedepth import cli
from edgedepth.campaign import ConfigError, ExperimentConfig
from edgedepth.graphs import Graph
from edgedepth.verify import DepthOracle


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, G in {"p3": Graph.path(3), "p5": Graph.path(5), "c5": Graph.cycle(5),
                    "c4": Graph.cycle(4), "k3": Graph.complete(3)}.items():
        p = tmp_path / f"{name}.json"
        p.write_text(G.to_json())
        paths[name] = str(p)
    paths["dir"] = tmp_path
    return paths


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_spec_examples(capsys, files):
    assert run(capsys, "symbolic-power", files["p3"], "-s", "2") == (
        0, "(x1^2*x2^2, x1*x2^2*x3, x2^2*x3^2)\n", "")
    assert run(capsys, "alpha2", files["p5"])[1] == "2  witness: {0,3}\n"
    code, out, _ = run(capsys, "verify", "--theorem", "thm42", "--graph", files["c5"])
    assert code == 0
    assert "alpha2=1" in out and "bound=0" in out and "verdict=holds" in out


def test_other_subcommands(capsys, files, tmp_path):
    assert run(capsys, "edge-ideal", files["p3"])[1] == "(x1*x2, x2*x3)\n"
    assert run(capsys, "covers", files["p3"])[1] == "{1}\n{0,2}\n"
    assert run(capsys, "chordal", files["c4"])[1].startswith("not chordal  induced cycle:")
    assert run(capsys, "chordal", files["k3"])[1].startswith("chordal  peo:")
    assert run(capsys, "depth", "--graph", files["c5"])[1] == "2\n"
    assert run(capsys, "depth", "--graph", files["p5"], "--symbolic", "2")[1] == "2\n"
    code, out, _ = run(capsys, "betti", "--graph", files["p3"], "--char", "2")
    assert code == 0 and json.loads(out)["n"] == 3
    ideal = tmp_path / "i.txt"
    ideal.write_text("n=2\n(x1^2, x1*x2, x2^2)\n")
    assert run(capsys, "depth", "--ideal", str(ideal))[1] == "0\n"
    ideal.write_text('{"n": 3, "generators": ["x1*x2", "x2*x3"]}')
    assert run(capsys, "depth", "--ideal", str(ideal))[1] == "1\n"


def test_verify_variants(capsys, files):
    assert run(capsys, "verify", "--theorem", "cor22", "--graph", files["p5"])[0] == 0
    assert run(capsys, "verify", "--theorem", "thm34", "--graph", files["p5"], "-s", "3")[0] == 0
    assert run(capsys, "verify", "--theorem", "lem41", "--graph", files["k3"],
               "--edge", "0", "1")[0] == 0
    assert run(capsys, "verify", "--theorem", "forest", "--graph", files["p5"])[0] == 0
    assert run(capsys, "verify", "--theorem", "lem31", "--graph", files["p5"],
               "--W", "2", "--A", "1", "2", "3")[0] == 0
    assert run(capsys, "verify", "--theorem", "prop33", "--graph", files["p3"],
               "--graph2", files["p3"])[0] == 1


@pytest.mark.parametrize("argv", [
    ["bogus"],
    ["alpha2", "/nonexistent.json"],
    ["verify", "--theorem", "thm34", "--graph", "C4"],
    ["depth", "--graph", "P3", "--char", "4"],
    ["depth", "--graph", "P3", "--power", "2", "--symbolic", "2"],
    ["verify", "--theorem", "lem41", "--graph", "P3"],
    ["verify", "--theorem", "thm34", "--graph", "C4", "-s", "2"],
])
def test_input_errors_exit_1(capsys, files, argv):
    argv = [files[a.lower()] if a in ("C4", "P3") else a for a in argv]
    code, _, err = run(capsys, *argv)
    assert code == 1 and "error" in err


def test_malformed_graph_names_the_line(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("3 2\n0 1\n1 1\n")
    code, _, err = run(capsys, "alpha2", str(bad))
    assert code == 1 and "line 3" in err


def test_violation_exit_2(capsys, files, monkeypatch):
    monkeypatch.setattr(DepthOracle, "edge_ideal", lambda self, G: -1)
    code, out, _ = run(capsys, "verify", "--theorem", "cor22", "--graph", files["p5"])
    assert code == 2 and "verdict=violated" in out


def test_experiment_violation_writes_reproducer(capsys, tmp_path, monkeypatch):
    monkeypatch.setattr(DepthOracle, "symbolic", lambda self, G, s: -1)
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"suite": "thm34", "generator": "random_chordal",
                               "n_min": 3, "n_max": 5, "random_instances": 5,
                               "reproducer_dir": str(tmp_path / "repro")}))
    code, out, _ = run(capsys, "experiment", "--config", str(cfg))
    assert code == 2 and "reproducer:" in out
    written = list((tmp_path / "repro").glob("*.json"))
    assert len(written) == 1
    assert "graph" in json.loads(written[0].read_text())


def test_experiment_is_deterministic(capsys, tmp_path):
    outputs = []
    for k in range(2):
        cfg = tmp_path / "cfg.json"
        out = tmp_path / f"out{k}.csv"
        cfg.write_text(json.dumps({"suite": "thm34", "generator": "random_chordal",
                                   "n_min": 2, "n_max": 6, "s_values": [1, 2],
                                   "random_instances": 15, "seed": 7,
                                   "characteristics": [0, 2], "output_csv": str(out)}))
        code, summary, _ = run(capsys, "experiment", "--config", str(cfg))
        assert code == 0
        outputs.append(out.read_bytes())
    assert outputs[0] == outputs[1]
    header = outputs[0].decode().splitlines()[0]
    assert header == "id,n,edges,chordal,s,alpha2,depth,bound,slack,verdict,char,ms"
    assert json.loads(summary)["violations"] == 0


def test_config_errors(capsys, tmp_path):
    with pytest.raises(ConfigError, match="unknown config keys"):
        ExperimentConfig.from_dict({"suite": "thm34", "colour": 1})
    with pytest.raises(ConfigError):
        ExperimentConfig(suite="thm34", s_values=[5])
    with pytest.raises(ConfigError):
        ExperimentConfig(suite="nope")
    cfg = tmp_path / "bad.json"
    cfg.write_text('{"suite": "thm34",\n "n_max": }')
    code, _, err = run(capsys, "experiment", "--config", str(cfg))
    assert code == 1 and "line 2" in err


def test_module_entry_point(files):
    proc = subprocess.run([sys.executable, "-m", "edgedepth", "alpha2", files["c5"]],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("1  witness:")
