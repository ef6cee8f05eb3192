import io
import subprocess
import sys

import pytest

from cloops.autotopy import autotopism_group_bruteforce
from cloops.cli import main
from cloops.core import format_table, load_table, parse_table

from helpers import FIXTURES


def run(*argv):
    out = io.StringIO()
    code = main([str(a) for a in argv], out=out)
    return code, out.getvalue()


def test_check_z4():
    code, text = run("check", FIXTURES / "z4.txt", "--props", "c,ip")
    assert code == 0
    assert text.splitlines() == ["c: true", "ip: true"]


def test_check_nonassociative_witness():
    code, text = run("check", FIXTURES / "nonassoc5.txt", "--props", "c", "--machine")
    assert code == 1
    assert text.startswith("property=c holds=false witness=")
    x, y, z = map(int, text.split("witness=")[1].split(","))
    L = load_table(FIXTURES / "nonassoc5.txt")
    m = L.mul
    assert m(x, m(y, m(y, z))) != m(m(m(x, y), y), z)


def test_check_all_properties():
    code, text = run("check", FIXTURES / "s3.txt")
    assert code == 1
    assert "group: true" in text and "centrum-square: false (witness" in text


def test_check_modes_agree():
    _, human = run("check", FIXTURES / "lc6.txt")
    _, machine = run("check", FIXTURES / "lc6.txt", "--machine")
    hv = [(l.split(":")[0], "true" in l.split(":")[1].split()[0]) for l in human.splitlines()]
    mv = [(l.split()[0][9:], l.split()[1] == "holds=true") for l in machine.splitlines()]
    assert hv == mv


def test_check_errors(capsys):
    assert run("check", FIXTURES / "bad_row_length.txt")[0] == 2
    assert "line 4" in capsys.readouterr().err
    assert run("check", FIXTURES / "z4.txt", "--props", "moufang")[0] == 2
    assert run("check", FIXTURES / "missing.txt")[0] == 2


@pytest.mark.parametrize("argv, want", [
    (["enumerate", "5", "--count"], "56"),
    (["enumerate", "4", "--filter", "c"], "4"),
    (["enumerate", "1"], "1"),
])
def test_enumerate_counts(argv, want):
    code, text = run(*argv)
    assert code == 0 and text.strip() == want


def test_enumerate_out(tmp_path):
    code, text = run("enumerate", "4", "--out", tmp_path)
    assert code == 0 and text.strip() == "4"
    files = sorted(p.name for p in tmp_path.iterdir())
    assert files == ["000000.txt", "000001.txt", "000002.txt", "000003.txt"]
    first = (tmp_path / "000000.txt").read_text()
    run("enumerate", "4", "--out", tmp_path)
    assert (tmp_path / "000000.txt").read_text() == first
    assert parse_table(first).n == 4


def test_enumerate_cap():
    assert run("enumerate", "7", "--count")[0] == 2
    with pytest.raises(SystemExit) as exc:
        run("enumerate", "3", "--count", "--out", "x")
    assert exc.value.code == 2


def test_verify():
    code, text = run("verify", "L0.1", "--max-order", "5")
    assert code == 0 and "holds" in text.splitlines()[0]
    code, text = run("verify", "all", "--max-order", "4")
    assert code == 0 and len(text.splitlines()) == 21
    assert run("verify", "X9.9")[0] == 2


def test_verify_machine():
    code, text = run("verify", "T0.4", "--max-order", "4", "--machine")
    assert code == 0
    lines = text.splitlines()
    assert lines[0].startswith("id=T0.4 verdict=holds swept=7")
    assert all("=" in tok for line in lines for tok in line.split())


def test_autotopisms_z2():
    code, text = run("autotopisms", FIXTURES / "z2.txt")
    assert code == 0
    lines = text.splitlines()
    assert len(lines) == 4 == len(autotopism_group_bruteforce(load_table(FIXTURES / "z2.txt")))
    assert lines == sorted(lines)


def test_isotope_identity_is_byte_stable(tmp_path):
    for name in ("z4.txt", "s3.txt", "nonassoc5.txt"):
        src = load_table(FIXTURES / name)
        out = tmp_path / name
        assert run("isotope", FIXTURES / name, "--principal", 0, 0, "--out", out)[0] == 0
        body = [l for l in out.read_text().splitlines() if not l.startswith("#")]
        assert body == format_table(src).splitlines()


def test_isotope_round_trip(tmp_path):
    out = tmp_path / "iso.txt"
    code, text = run("isotope", FIXTURES / "z4.txt", "--triple", "1,2,3,0", "0,1,2,3", "1,2,3,0", "--out", out)
    assert code == 0
    H = load_table(out)
    code, text = run("isotope", FIXTURES / "z4.txt", "--triple", "1,2,3,0", "0,1,2,3", "1,2,3,0", "--machine")
    body = text.split("table=")[1].strip()
    assert body == ";".join([str(H.n)] + [",".join(map(str, r)) for r in H.rows])


def test_isotope_without_identity():
    # (I, I, W) with W not fixing 0 moves the identity row away
    code, text = run("isotope", FIXTURES / "z3.txt", "--triple", "0,1,2", "0,1,2", "1,2,0", "--no-normalize")
    assert code == 0
    assert text.splitlines()[1:] == ["3", "1 2 0", "2 0 1", "0 1 2"]


def test_isotope_errors():
    assert run("isotope", FIXTURES / "z3.txt", "--triple", "0,0,1", "0,1,2", "0,1,2")[0] == 2
    assert run("isotope", FIXTURES / "z3.txt", "--triple", "0,1", "0,1,2", "0,1,2")[0] == 2
    assert run("isotope", FIXTURES / "z3.txt", "--principal", 5, 0)[0] == 2
    with pytest.raises(SystemExit):
        run("isotope", FIXTURES / "z3.txt", "--principal", 0, 0, "--triple", "0,1,2", "0,1,2", "0,1,2")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cloops", "check", str(FIXTURES / "z2.txt"), "--props", "c"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "c: true\n"
    proc = subprocess.run([sys.executable, "-m", "cloops"], capture_output=True, text=True)
    assert proc.returncode == 2
