import json
import subprocess
import sys
from fractions import Fraction as Q

import pytest

from disco.aiet import Aiet, detect_periodic, distinct_values, family_member
from disco.cli import SweepConfig, main, run_sweep


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "--t", "0/1")
    assert code == 0 and json.loads(out)["tag"] == "CompletelyPeriodic"
    assert json.loads(run(capsys, "classify", "--slope", "inf")[1])["tag"] == "CompletelyPeriodic"
    d = json.loads(run(capsys, "classify", "--slope", "3/2")[1])
    assert d["tag"] == "TrivialAttractor" and d["multiplier"] == "1/2"


def test_classify_caps(capsys):
    d = json.loads(run(capsys, "classify", "--t", "2211/19900", "--reduce-depth", "5000")[1])
    assert d["tag"] == "CompletelyPeriodic"
    assert d["caps"]["reduce_depth"] == 5000


def test_usage_errors(capsys):
    assert run(capsys, "classify")[0] == 1
    assert run(capsys, "classify", "--slope", "1", "--t", "0")[0] == 1
    code, _, err = run(capsys, "classify", "--slope", "x/y")
    assert code == 1 and "not a slope" in err
    assert run(capsys, "frobnicate")[0] == 1
    assert run(capsys, "limitset", "--depth", "0")[0] == 1
    assert run(capsys, "sweep", "--t-min", "1/2", "--t-max", "1/4")[0] == 1


def test_io_errors(capsys, tmp_path):
    assert run(capsys, "coverage", "--k", "0", "--output", str(tmp_path / "no" / "x.csv"))[0] == 2
    assert run(capsys, "--config", str(tmp_path / "missing.cfg"), "veech")[0] == 2


def test_coverage(capsys):
    code, out, _ = run(capsys, "coverage", "--k", "0")
    assert code == 0 and out.splitlines()[1] == "0,1,3,0"


def test_limitset(capsys):
    def total(depth):
        import math
        rows = run(capsys, "limitset", "--depth", str(depth))[1].splitlines()[1:]
        s = 0.0
        for row in rows:
            _, ln, ld, hn, hd = map(int, row.split(","))
            lo = math.pi / 2 if ld == 0 else math.atan(ln / ld)
            hi = math.pi / 2 if hd == 0 else math.atan(hn / hd)
            if ld == 0:
                lo = -math.pi / 2
            s += (hi - lo) % math.pi
        return s, len(rows)
    t2, n2 = total(2)
    t3, n3 = total(3)
    assert (n2, n3) == (12, 36)
    assert t3 < t2


def test_veech(capsys):
    code, out, _ = run(capsys, "veech")
    assert code == 0
    assert out.count("PASS") == len(out.splitlines())


def test_dump_map(capsys, tmp_path):
    path = tmp_path / "map.txt"
    assert run(capsys, "dump-map", "--t", "1/6", "--output", str(path))[0] == 0
    assert Aiet.from_table(path.read_text()) == family_member(Q(1, 6))
    code, out, _ = run(capsys, "dump-map", "--slope", "0")
    assert Aiet.from_table(out) == family_member(0)


def test_config_file(capsys, tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# sweep settings\nsteps = 3\nsamples=5\nburn-in=10\nt_min=1/10\nt_max=1/5\n")
    code, out, _ = run(capsys, "--config", str(cfg), "sweep")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "t,x" and len(lines) == 1 + 3 * 5
    # flags win over the file
    code, out, _ = run(capsys, "--config", str(cfg), "sweep", "--steps", "2")
    assert len(out.splitlines()) == 1 + 2 * 5
    cfg.write_text("colour=blue\n")
    assert run(capsys, "--config", str(cfg), "veech")[0] == 1


def test_sweep_is_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    args = ["sweep", "--steps", "6", "--burn-in", "200", "--samples", "50", "--seed", "3"]
    assert main(args + ["--output", str(a)]) == 0
    assert main(args + ["--output", str(b), "--workers", "2"]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert main(args[:-1] + ["4", "--output", str(b)]) == 0
    assert a.read_bytes() != b.read_bytes()


def test_sweep_svg(tmp_path):
    out = tmp_path / "fig.svg"
    assert main(["sweep", "--steps", "4", "--samples", "20", "--burn-in", "10",
                 "--format", "svg", "--output", str(out)]) == 0
    text = out.read_text()
    assert text.startswith("<svg") and "<rect" in text


def test_sweep_over_a_trivial_parameter():
    cfg = SweepConfig(Q(5, 12), Q(1, 2), 1, burn_in=2000, samples=300)
    (t, xs), = run_sweep(cfg)
    assert t == Q(5, 12)
    orb = detect_periodic(family_member(t), Q(1, 7))
    assert distinct_values(xs) == orb.period


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "disco", "classify", "--slope", "3"],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert json.loads(res.stdout)["multiplier"] == "1/4"


def test_sweep_config_validation():
    with pytest.raises(ValueError):
        SweepConfig(Q(1, 2), Q(1, 2), 5)
    with pytest.raises(ValueError):
        SweepConfig(Q(0), Q(1, 2), 0)
    assert SweepConfig(Q(0), Q(1), 3).grid() == [0, Q(1, 2), 1]
