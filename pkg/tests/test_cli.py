"""CLI surface: record formats, exit codes, flag handling."""

import json

import pytest

from aperylab.cli import main

EXPECTED_JSON_LINE = (
    '{"check":"thm2.1i","p":7,"m":null,"r":null,"modulus":343,'
    '"lhs":"147","rhs":"147","verdict":"pass","skip_reason":null,"sign":null}'
)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_verify_json_exact_schema(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--checks", "thm2.1i", "--primes", "7..7", "--format", "json"
    )
    assert code == 0
    assert out == EXPECTED_JSON_LINE + "\n"


def test_verify_formats_carry_identical_data(capsys):
    args = ("verify", "--checks", "eq1.3", "--primes", "3..20")
    _, json_out, _ = run_cli(capsys, *args, "--format", "json")
    _, csv_out, _ = run_cli(capsys, *args, "--format", "csv")
    _, table_out, _ = run_cli(capsys, *args, "--format", "table")
    json_rows = [json.loads(line) for line in json_out.splitlines()]
    csv_lines = csv_out.splitlines()
    header = csv_lines[0].split(",")
    csv_rows = [dict(zip(header, line.split(","))) for line in csv_lines[1:]]
    assert len(json_rows) == len(csv_rows) == len(table_out.splitlines()) - 1
    for jrow, crow in zip(json_rows, csv_rows):
        for field in header:
            jval = "" if jrow[field] is None else str(jrow[field])
            assert jval == crow[field]


def test_verify_balanced_representatives(capsys):
    _, plain, _ = run_cli(
        capsys, "verify", "--checks", "thm3.3_tp", "--primes", "7..7",
        "--format", "json",
    )
    _, balanced, _ = run_cli(
        capsys, "verify", "--checks", "thm3.3_tp", "--primes", "7..7",
        "--format", "json", "--balanced",
    )
    # t_7 = -3 * 49 = 196 (mod 343), balanced form -147
    assert json.loads(plain)["lhs"] == "196"
    assert json.loads(balanced)["lhs"] == "-147"


def test_verify_unknown_check_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "verify", "--checks", "thm9.9")
    assert code == 2 and "unknown checks" in err


def test_verify_conjecture_summary(capsys):
    code, _, err = run_cli(
        capsys, "verify", "--checks", "conj2.1", "--primes", "5..13", "--format", "json"
    )
    assert code == 0
    assert "conj2.1 [conjecture]: supported" in err


def test_verify_conj25_recovery_table(capsys):
    code, _, err = run_cli(
        capsys, "verify", "--checks", "conj2.5", "--primes", "5..23",
        "--m", "1..3", "--format", "json",
    )
    assert code == 0
    assert "c_3 = -17" in err


def test_seq_values(capsys):
    assert run_cli(capsys, "seq", "--name", "t", "--n", "4")[1] == "230481\n"
    assert run_cli(capsys, "seq", "--name", "A", "--n", "5")[1] == "819005\n"
    out = run_cli(capsys, "seq", "--name", "Aprime", "--n", "3", "--mod", "343")[1]
    assert out == "147\n"
    assert run_cli(capsys, "seq", "--name", "D", "--n", "2")[1] == "2/3\n"


def test_seq_unknown_name_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["seq", "--name", "nope", "--n", "1"])
    assert exc.value.code == 2


def test_seq_bad_modulus_exits_2(capsys):
    code, _, err = run_cli(capsys, "seq", "--name", "A", "--n", "3", "--mod", "15")
    assert code == 2 and "prime power" in err


def test_seq_non_integral_residue_exits_1(capsys):
    code, _, err = run_cli(capsys, "seq", "--name", "H", "--n", "5", "--mod", "5")
    assert code == 1 and "divisible" in err


def test_identity_pass_with_spot(capsys):
    code, out, _ = run_cli(capsys, "identity", "--name", "lemma2.1", "--max-n", "20")
    assert code == 0
    assert "PASS" in out and "1/4" in out


def test_identity_thm31(capsys):
    code, out, _ = run_cli(capsys, "identity", "--name", "thm3.1", "--max-n", "40")
    assert code == 0 and "PASS" in out


def test_identity_eq22_prime_bound(capsys):
    code, out, _ = run_cli(capsys, "identity", "--name", "eq2.2", "--max-n", "60")
    assert code == 0 and "PASS" in out


def test_identity_rejects_bad_max_n(capsys):
    code, _, _ = run_cli(capsys, "identity", "--name", "thm3.1", "--max-n", "0")
    assert code == 2


def test_gamma_command(capsys):
    code, out, _ = run_cli(
        capsys, "gamma", "--x", "1/4", "--p", "7", "--e", "3", "--pow", "4"
    )
    assert code == 0 and out == "127\n"


def test_gamma_non_integral_exits_1(capsys):
    code, _, _ = run_cli(capsys, "gamma", "--x", "1/5", "--p", "5", "--e", "2")
    assert code == 1


def test_invalid_prime_range_exits_2(capsys):
    code, _, _ = run_cli(capsys, "verify", "--checks", "eq1.3", "--primes", "50..3")
    assert code == 2
