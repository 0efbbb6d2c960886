import json

import pytest

from realroots.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_count(tmp_path, capsys):
    f = tmp_path / "p.poly"
    f.write_text("3; 6 -11 6 -1\n")  # -(x-1)(x-2)(x-3)
    code, out, _ = run(capsys, "count", "--in", str(f), "--interval", "0:inf")
    assert code == 0 and out.strip() == "3"
    code, out, _ = run(capsys, "count", "--in", str(f), "--interval", "3/2:5/2")
    assert code == 0 and out.strip() == "1"


def test_isolate_json(tmp_path, capsys):
    f = tmp_path / "p.poly"
    f.write_text("2; -2 0 1\n")
    code, out, _ = run(capsys, "isolate", "--in", str(f), "--method", "descartes", "--json")
    assert code == 0
    data = json.loads(out)
    assert len(data["roots"]) == 2
    assert data["stats"]["tree_nodes"] >= 1
    for r in data["roots"]:
        assert "*2^" in r["lo"] and "*2^" in r["hi"]


def test_isolate_interval_flag(tmp_path, capsys):
    f = tmp_path / "p.poly"
    f.write_text("2; -2 0 1\n")
    code, out, _ = run(capsys, "isolate", "--in", str(f), "--interval", "0:2")
    assert code == 0
    assert out.count("(") == 1 or "exact" in out


def test_bound(tmp_path, capsys):
    f = tmp_path / "p.poly"
    f.write_text("1; -1 1\n")
    code, out, _ = run(capsys, "bound", "--in", str(f))
    assert code == 0 and out.strip() == "1*2^1"


def test_gen_roundtrip(tmp_path, capsys):
    out_file = tmp_path / "g.poly"
    code, _, _ = run(capsys, "gen", "--model", "kac", "--degree", "5", "--seed", "9",
                     "--out", str(out_file))
    assert code == 0
    # leading-dash endpoint needs the = form; bare default covers the full line
    code, out, _ = run(capsys, "count", "--in", str(out_file), "--interval=-inf:inf")
    assert code == 0 and int(out.strip()) >= 0
    code, out2, _ = run(capsys, "count", "--in", str(out_file))
    assert code == 0 and out2 == out


def test_gen_bernstein_file(tmp_path, capsys):
    out_file = tmp_path / "b.poly"
    code, _, _ = run(capsys, "gen", "--model", "bern-std", "--degree", "4", "--seed", "2",
                     "--out", str(out_file))
    assert code == 0
    assert out_file.read_text().startswith("B; 4; ")
    code, out, _ = run(capsys, "isolate", "--in", str(out_file), "--json")
    assert code == 0 and "roots" in out


def test_malformed_file_exit_65(tmp_path, capsys):
    f = tmp_path / "bad.poly"
    f.write_text("2; 1 2\n")
    code, _, err = run(capsys, "count", "--in", str(f), "--interval", "0:1")
    assert code == 65
    assert "malformed" in err


def test_unknown_flag_exit_64(tmp_path):
    with pytest.raises(SystemExit) as exc:
        main(["count", "--nope"])
    assert exc.value.code == 64


def test_density_output(capsys):
    code, out, _ = run(capsys, "density", "--model", "so2", "--degree", "9",
                       "--points", "5", "--t-min", "-1", "--t-max", "1")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "t,density"
    assert len(lines) == 6


def test_identities_output(capsys):
    code, out, _ = run(capsys, "identities", "--n-max", "4", "--wallis-max", "20")
    assert code == 0
    assert "False" not in out


def test_table1_check_small(capsys):
    # deliberately tiny run: statistics are far off the reference, so --check
    # must exit 2 while plain mode exits 0
    code, out, _ = run(capsys, "table1", "--degrees", "100", "--trials", "2",
                       "--seed", "5", "--check")
    assert code == 2
    code, out, _ = run(capsys, "table1", "--degrees", "24", "--trials", "2", "--seed", "5")
    assert code == 0
    assert out.splitlines()[0].startswith("d,pred_sqrt2d")


def test_table1_large_guard(capsys):
    code, _, err = run(capsys, "table1", "--degrees", "400", "--trials", "1")
    assert code == 64 and "--large" in err


def test_sep_cli(capsys):
    code, out, _ = run(capsys, "sep", "--model", "so2", "--degrees", "24",
                       "--trials", "10", "--seed", "3", "--targets", "0.3", "--json")
    assert code == 0
    data = json.loads(out)
    assert data[0]["model"] == "so2"


def test_ek_mc_cli(capsys):
    code, out, _ = run(capsys, "ek-mc", "--models", "so2", "--degrees", "16",
                       "--trials", "8", "--seed", "4")
    assert code == 0
    assert out.splitlines()[0].startswith("model,")


def test_solver_bench_cli(capsys):
    code, out, _ = run(capsys, "solver-bench", "--degrees", "16", "--trials", "3",
                       "--seed", "6", "--methods", "sturm")
    assert code == 0
    assert "sturm" in out


def test_uniformity_cli(capsys):
    code, out, _ = run(capsys, "uniformity", "--degree", "30", "--trials", "15",
                       "--seed", "8", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["n_roots"] > 0
