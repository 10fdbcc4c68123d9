import json

from tietze.cli import main
from tietze.presentation import parse_presentation


def write(tmp_path, name, text):
    f = tmp_path / name
    f.write_text(text)
    return str(f)


def test_simplify_roundtrip(tmp_path, capsys):
    inp = write(tmp_path, "in.pres", "gens 2\nrelw b\nrelw abab\n")
    out = str(tmp_path / "out.pres")
    stats = str(tmp_path / "stats.json")
    code = main(["simplify", inp, "-o", out, "--match", "kr-bloom",
                 "--skip", "ts-sorted", "--seed", "7", "--stats", stats])
    assert code == 0
    assert (tmp_path / "out.pres").read_text() == "gens 1\nrel 1 1\n"
    rep = json.loads((tmp_path / "stats.json").read_text())
    s, c = rep["stats"], rep["counters"]
    assert s["searches_performed"] + s["searches_skipped"] == s["pairs_considered"]
    assert c["filter_hits"] == c["fingerprint_matches"] + c["bloom_false_hits"]
    assert rep["config"]["match_strategy"] == "kr-bloom3"
    assert rep["config"]["seed"] == 7


def test_simplify_writes_stdout_by_default(tmp_path, capsys):
    inp = write(tmp_path, "in.pres", "gens 2\nrel 1 2\n")
    assert main(["simplify", inp]) == 0
    assert capsys.readouterr().out == "gens 1\n"


def test_simplify_deterministic_output(tmp_path):
    inp = write(tmp_path, "in.pres", "gens 3\nrel 1 2 3 1 2\nrel 2 3 1\nrel 3 3 2\n")
    outs = []
    for i in (1, 2):
        out = str(tmp_path / f"out{i}.pres")
        assert main(["simplify", inp, "-o", out, "--seed", "11"]) == 0
        outs.append((tmp_path / f"out{i}.pres").read_text())
    assert outs[0] == outs[1]


def test_missing_input_is_io_error(tmp_path, capsys):
    assert main(["simplify", str(tmp_path / "absent.pres")]) == 1
    assert "error" in capsys.readouterr().err


def test_parse_error_reports_line(tmp_path, capsys):
    inp = write(tmp_path, "bad.pres", "gens 1\nrel 2\n")
    assert main(["simplify", inp]) == 1
    assert "line 2" in capsys.readouterr().err


def test_invalid_flag_combination(tmp_path, capsys):
    inp = write(tmp_path, "in.pres", "gens 2\nrel 1 2\n")
    assert main(["simplify", inp, "--match", "brute", "--bloom-bits", "3"]) == 2
    assert main(["simplify", inp, "--match", "brute", "--automata", "one"]) == 2


def test_usage_error_exit_code():
    assert main(["simplify"]) == 2
    assert main(["frobnicate"]) == 2


def test_automaton_flag_reflected_in_stats(tmp_path):
    inp = write(tmp_path, "in.pres", "gens 2\nrel 1 2 1 2 2\nrel 2 1 2\n")
    stats = str(tmp_path / "s.json")
    code = main(["simplify", inp, "--match", "automaton", "--automata", "one",
                 "--stats", stats])
    assert code == 0
    rep = json.loads((tmp_path / "s.json").read_text())
    assert rep["config"]["match_strategy"] == "automaton-one"


def test_gen_deterministic_and_valid(tmp_path):
    a = str(tmp_path / "a.pres")
    b = str(tmp_path / "b.pres")
    args = ["gen", "--gens", "4", "--rels", "6", "--maxlen", "20", "--seed", "3"]
    assert main(args + ["-o", a]) == 0
    assert main(args + ["-o", b]) == 0
    assert (tmp_path / "a.pres").read_text() == (tmp_path / "b.pres").read_text()
    p = parse_presentation((tmp_path / "a.pres").read_text())
    assert p.d == 4 and len(p.rel) == 6


def test_gen_stress_profile(tmp_path):
    out = str(tmp_path / "stress.pres")
    assert main(["gen", "--gens", "4", "--rels", "5", "--maxlen", "600",
                 "--seed", "1", "--profile", "small-alphabet-long", "-o", out]) == 0
    p = parse_presentation((tmp_path / "stress.pres").read_text())
    assert p.d == 4
    assert all(r.len >= 540 for r in p.rel)


def test_gen_zero_relators(tmp_path, capsys):
    assert main(["gen", "--gens", "3", "--rels", "0", "--maxlen", "5"]) == 0
    assert capsys.readouterr().out == "gens 3\n"


def test_verify_accepts_simplified_output(tmp_path, capsys):
    inp = write(tmp_path, "in.pres", "gens 2\nrel 1 1 2\nrel 2 2 2 1\n")
    out = str(tmp_path / "out.pres")
    assert main(["simplify", inp, "-o", out]) == 0
    assert main(["verify", inp, out]) == 0
    assert main(["verify", inp, inp]) == 0


def test_verify_detects_mismatch(tmp_path, capsys):
    a = write(tmp_path, "a.pres", "gens 1\nrel 1 1\n")
    b = write(tmp_path, "b.pres", "gens 1\nrel 1 1 1\n")
    assert main(["verify", a, b]) == 3
    out = capsys.readouterr()
    assert "torsion=[2]" in out.out and "torsion=[3]" in out.out


def test_bench_all_skip_dominance_and_report(tmp_path, capsys):
    inp = write(tmp_path, "in.pres",
                "gens 3\nrel 1 2 3 1 2\nrel 2 3 1\nrel 3 3 2\nrel 1 2 3\n")
    stats = str(tmp_path / "bench.json")
    code = main(["bench", inp, "--all-skip", "--stats", stats, "--seed", "5"])
    assert code == 0
    table = capsys.readouterr().out
    assert "ts-sorted" in table and "all-pairs" in table
    rep = json.loads((tmp_path / "bench.json").read_text())
    assert rep["dominance_violations"] == []
    assert len(rep["reports"]) == 4
    for r in rep["reports"]:
        s = r["stats"]
        assert s["searches_performed"] + s["searches_skipped"] == s["pairs_considered"]


def test_bench_all_strategies(tmp_path):
    inp = write(tmp_path, "in.pres", "gens 3\nrel 1 2 3 1 2\nrel 2 3 1\nrel 3 3 2\n")
    stats = str(tmp_path / "bench.json")
    assert main(["bench", inp, "--all-strategies", "--stats", stats]) == 0
    rep = json.loads((tmp_path / "bench.json").read_text())
    names = {r["config"]["match_strategy"] for r in rep["reports"]}
    assert names == {"brute", "signature", "kr-hash", "kr-bloom3", "kr-bloom4",
                     "automaton-two", "automaton-one"}


def test_bench_single_configuration_degenerates(tmp_path):
    inp = write(tmp_path, "in.pres", "gens 2\nrel 1 2 1\nrel 2 1 1 2\n")
    stats = str(tmp_path / "bench.json")
    assert main(["bench", inp, "--stats", stats]) == 0
    rep = json.loads((tmp_path / "bench.json").read_text())
    assert len(rep["reports"]) == 1
    assert rep["dominance_violations"] == []
