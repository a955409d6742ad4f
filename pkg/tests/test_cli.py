import json

import pytest

from palinlab.cli import main, parse_range

from conftest import W1, W2


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_range():
    assert parse_range("8") == (8, 8)
    assert parse_range("2..24") == (2, 24)


def test_usage_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["debruijn", "-q", "2", "-k", "0"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["average", "-n", "9..3"])
    assert exc.value.code == 2
    capsys.readouterr()
    assert main(["profile", "012", "-q", "2"]) == 2


def test_de_bruijn(capsys):
    code, out, _ = run(capsys, "debruijn", "-q", "2", "-k", "2")
    assert code == 0
    assert out.splitlines()[0] == "00110"
    assert "valid: true" in out


def test_de_bruijn_budget(capsys):
    code, _, err = run(capsys, "debruijn", "-q", "2", "-k", "30")
    assert code == 3 and err


@pytest.mark.parametrize("method", ["debruijn", "diffs", "enum"])
def test_palindromes_methods_agree(capsys, method):
    code, out, _ = run(capsys, "palindromes", "-q", "3", "-n", "3", "--method", method)
    assert code == 0
    assert out.splitlines()[0].split() == ["000", "010", "020", "101", "111", "121", "202", "212", "222"]
    assert "count: 9" in out


def test_palindromes_diffs_line(capsys):
    _, out, _ = run(capsys, "palindromes", "-n", "5", "--method", "diffs")
    assert "diffs: 4 6 4 3 4 6 4" in out


def test_palindromes_json(capsys):
    _, out, _ = run(capsys, "palindromes", "-n", "2", "--format", "json")
    data = json.loads(out)
    assert data["palindromes"] == ["00", "11"] and data["values"] == [0, 3]


def test_profile_subword(capsys):
    code, out, _ = run(capsys, "profile", "0110", "--subword")
    assert code == 0
    assert "trapezoid: ok J=2 M=2" in out
    assert "subword-iteration: ok" in out and "palindrome-iteration: ok" in out


def test_profile_first_witness(capsys):
    code, out, _ = run(capsys, "profile", W1, "--palindrome")
    assert code == 0
    assert "odd:  1:2 3:3 5:1 7:2 9:1" in out


def test_profile_second_witness(capsys):
    code, out, _ = run(capsys, "profile", W2, "--palindrome")
    assert code == 0
    assert "even: 2:2 4:3 6:1 8:2 10:1" in out


def test_profile_from_file_and_csv(capsys, tmp_path):
    f = tmp_path / "w.txt"
    f.write_text("0110\n")
    code, out, _ = run(capsys, "profile", "--file", str(f), "--palindrome", "--csv")
    assert code == 0
    assert out.splitlines()[:3] == ["kind,k,count,v0,v1,v2",
                                    "palindrome,1,2,2,0,0",
                                    "palindrome,2,1,0,1,0"]


def test_classify(capsys):
    assert run(capsys, "classify", "010101", "-k", "5")[1].startswith("alternating")
    assert "position 1" in run(capsys, "classify", "0110", "-k", "2")[1]


def test_average_thirty(capsys):
    code, out, _ = run(capsys, "average", "-n", "30", "--no-timing", "--format", "json")
    assert code == 0
    (d,) = json.loads(out)
    assert d["m_decimal"] == "0.81064" and d["method"] == "automaton"
    assert d["m_exact"]["den"] == 2**30 and d["elapsed_ms"] is None


def test_average_both_methods(capsys):
    code, out, _ = run(capsys, "average", "-n", "6..8", "--method", "both", "--no-timing", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("q,n,method")
    assert sum(1 for l in lines if ",enumeration," in l) == 3
    assert sum(1 for l in lines if ",automaton," in l) == 3
    assert any(l.startswith("2,8,") and "0.99805" in l for l in lines)


def test_average_output_is_deterministic_without_timing(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        assert main(["average", "-q", "3", "-n", "2..6", "--no-timing", "--format", "json", "-o", str(path)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_average_budget_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("PALINLAB_BUDGET", "100")
    code, _, err = run(capsys, "average", "-n", "10", "--method", "enum")
    assert code == 3 and "PALINLAB_BUDGET" in err


def test_average_automaton_cap(capsys):
    code, _, _ = run(capsys, "average", "-n", "30", "--automaton-cap", "1000")
    assert code == 3


def test_monte_carlo(capsys):
    code, out, _ = run(capsys, "mc", "-n", "100", "--seed", "1", "--no-timing", "--format", "json")
    assert code == 0
    (d,) = json.loads(out)
    assert d["method"] == "monte-carlo" and d["samples"] == 200 and d["seed"] == 1
    assert abs(float(d["m_decimal"]) - 0.53) < 0.03


def test_monte_carlo_deterministic_across_threads(capsys):
    outs = []
    for t in ("1", "4"):
        _, out, _ = run(capsys, "mc", "-n", "60", "--seed", "5", "-l", "30",
                        "--threads", t, "--no-timing", "--format", "csv")
        outs.append(out)
    assert outs[0] == outs[1]


def test_monte_carlo_requires_seed(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["mc", "-n", "10"])
    assert exc.value.code == 2


def test_conjecture(capsys):
    code, out, _ = run(capsys, "conjecture", "-n", "7..12")
    assert code == 0
    assert "n=8: 0.99805" in out and "strictly decreasing: yes" in out


def test_closed(capsys):
    code, out, _ = run(capsys, "closed", "-q", "2", "-n", "3")
    assert code == 0
    lines = dict(l.split(": ") for l in out.splitlines())
    assert lines["s_n1"] == "14" and lines["s_n2"] == "6" and lines["psi"] == "5"
    assert lines["bound"] == "3.50000" and lines["c3"] == "1.50000"


def test_snp(capsys):
    assert run(capsys, "snp", "-n", "3", "-p", "2")[1].strip() == "6"
    assert run(capsys, "snp", "-n", "3", "-p", "4")[0] == 2
