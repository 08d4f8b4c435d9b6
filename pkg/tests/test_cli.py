import json

import pytest

from weightenum import wpoly_parse, WPoly
from weightenum.cli import main
from weightenum.data import code_path

HEXA = str(code_path("hexacode"))
EVEN = str(code_path("mds32"))
P4 = str(code_path("p4"))
HAMMING = str(code_path("hamming74"))


def run(capsys, *argv):
    exit_code = main(list(argv))
    out = capsys.readouterr()
    return exit_code, out.out, out.err


def test_enumerate_text(capsys):
    code, out, _ = run(capsys, "enumerate", "--format", "text", HEXA)
    assert code == 0
    lines = dict(line.split(": ", 1) for line in out.strip().splitlines())
    assert lines["field"] == "gf 4 modulus=[1,1,1]"
    assert lines["min_distance"] == "4"
    assert wpoly_parse(lines["omega"]) == wpoly_parse(
        "x^6 + 15*(q-1)*x^2*y^4 + 6*(q-1)*(q-4)*x*y^5 + (q-1)*(q^2-5*q+10)*y^6")
    assert wpoly_parse(lines["rho"]).subs_z_one() == wpoly_parse(lines["omega"])


def test_enumerate_json_matches_text(capsys):
    code, out, _ = run(capsys, "enumerate", "--format", "json", HEXA)
    assert code == 0
    obj = json.loads(out)
    code2, out2, _ = run(capsys, "enumerate", HEXA)
    text_omega = dict(line.split(": ", 1)
                      for line in out2.strip().splitlines())["omega"]
    assert WPoly.from_json_obj(obj["omega"]) == wpoly_parse(text_omega)
    assert obj["n"] == 6 and obj["k"] == 3 and obj["flat_count"] == 23


def test_enumerate_factor_display_roundtrips(capsys):
    code, out, _ = run(capsys, "enumerate", "--factor-display", HEXA)
    assert code == 0
    omega = dict(line.split(": ", 1)
                 for line in out.strip().splitlines())["omega"]
    assert "(q-1)" in omega
    assert wpoly_parse(omega) == wpoly_parse(
        "x^6 + 15*(q-1)*x^2*y^4 + 6*(q-1)*(q-4)*x*y^5 + (q-1)*(q^2-5*q+10)*y^6")


def test_enumerate_malformed_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.code"
    bad.write_text("field gf 2\n2 3\n1 0 zebra\n0 1 1\n")
    code, _, err = run(capsys, "enumerate", str(bad))
    assert code == 2
    assert "line 3" in err


def test_enumerate_missing_file_exits_2(capsys):
    code, _, err = run(capsys, "enumerate", "/nonexistent/nowhere.code")
    assert code == 2
    assert err


def test_enumerate_stdin(capsys, monkeypatch):
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO("field gf 2\n1 2\n1 1\n"))
    code, out, _ = run(capsys, "enumerate", "-")
    assert code == 0
    assert "omega: x^2 + (q - 1)*y^2" in out


def test_enumerate_dump_lattice(tmp_path, capsys):
    out_file = tmp_path / "lattice.json"
    code, _, _ = run(capsys, "enumerate", "--dump-lattice", str(out_file), EVEN)
    assert code == 0
    obj = json.loads(out_file.read_text())
    assert obj["flat_count"] == 5
    assert obj["flats"][0] == {"indices": [], "dim": 2, "zeta_q": [2, -3, 1]}
    assert obj["flats"][-1]["indices"] == [1, 2, 3]


def test_flat_budget_flag_exits_3(capsys):
    code, _, err = run(capsys, "enumerate", "--flat-budget", "3", HEXA)
    assert code == 3
    assert "budget" in err


def test_flat_budget_env(capsys, monkeypatch):
    monkeypatch.setenv("WEIGHTENUM_FLAT_BUDGET", "3")
    code, _, _ = run(capsys, "enumerate", HEXA)
    assert code == 3


def test_macwilliams_selfdual_hexacode(capsys):
    code, out, _ = run(capsys, "macwilliams", HEXA)
    assert code == 0
    assert wpoly_parse(out.strip()) == wpoly_parse(
        "x^6 + 15*(q-1)*x^2*y^4 + 6*(q-1)*(q-4)*x*y^5 + (q-1)*(q^2-5*q+10)*y^6")


def test_macwilliams_even_weight(capsys):
    code, out, _ = run(capsys, "macwilliams", EVEN)
    assert code == 0
    assert wpoly_parse(out.strip()) == wpoly_parse("x^3 + (q-1)*y^3")


def test_macwilliams_wrong_k_exits_4(capsys):
    code, _, err = run(capsys, "macwilliams", "--k", "7", EVEN)
    assert code == 4
    assert "divisible" in err


def test_macwilliams_poly_json_input(tmp_path, capsys):
    poly = wpoly_parse("x^3 + 3*(q-1)*x*y^2 + (q-1)*(q-2)*y^3")
    blob = tmp_path / "omega.json"
    blob.write_text(json.dumps(poly.to_json_obj()))
    code, out, _ = run(capsys, "macwilliams", "--k", "2", str(blob))
    assert code == 0
    assert wpoly_parse(out.strip()) == wpoly_parse("x^3 + (q-1)*y^3")
    # without --k the JSON input is an input error
    code, _, _ = run(capsys, "macwilliams", str(blob))
    assert code == 2


def test_mindist(capsys):
    code, out, _ = run(capsys, "mindist", str(code_path("c6")))
    assert code == 0 and out.strip() == "3"
    code, out, _ = run(capsys, "mindist", "--format", "json", HEXA)
    assert code == 0 and json.loads(out) == {"min_distance": 4}


def test_specialize_p4(capsys):
    code, out, _ = run(capsys, "specialize", "--primes", "2,3,5,7,11,13", P4)
    assert code == 0
    assert "exceptional_primes: 2,3" in out


def test_specialize_json(capsys):
    code, out, _ = run(capsys, "specialize", "--format", "json",
                       "--primes", "2,5", P4)
    assert code == 0
    obj = json.loads(out)
    assert obj["exceptional_primes"] == [2]


def test_verify_ok(capsys):
    code, out, _ = run(capsys, "verify", "--ext", "1,2", HAMMING)
    assert code == 0
    assert "verdict: pass" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--format", "json", HEXA)
    assert code == 0
    assert json.loads(out)["passed"] is True


def test_formula_hamming(capsys):
    code, out, _ = run(capsys, "formula", "hamming", "--p", "2", "--m", "3")
    assert code == 0
    assert wpoly_parse(out.strip()) == wpoly_parse(
        "(q-1)*(q-2)*(q-4)*y^7*z^3 + 7*(q-1)*(q-2)*x*y^6*z^2"
        " + 7*(q-1)*x^3*y^4*z + x^7")


def test_formula_mds(capsys):
    code, out, _ = run(capsys, "formula", "mds", "--n", "3", "--k", "2")
    assert code == 0
    assert wpoly_parse(out.strip()) == wpoly_parse(
        "x^3 + 3*(q-1)*x*y^2*z + (q-1)*(q-2)*y^3*z^2")


def test_formula_out_of_range_exits_2(capsys):
    code, _, _ = run(capsys, "formula", "mds", "--n", "3", "--k", "9")
    assert code == 2


def test_golay_rho(capsys):
    code, out, _ = run(capsys, "golay", "rho")
    assert code == 0
    w = wpoly_parse(out.strip())
    from weightenum import golay24_table_rho
    assert w == golay24_table_rho()


def test_golay_generator_roundtrips(capsys, tmp_path):
    code, out, _ = run(capsys, "golay", "generator")
    assert code == 0
    from weightenum import parse_code_text
    parsed = parse_code_text(out)
    assert (parsed.n, parsed.k) == (24, 12)
    code, out, _ = run(capsys, "golay", "--format", "json", "generator")
    obj = json.loads(out)
    assert obj["k"] == 12 and obj["n"] == 24 and obj["field"] == "gf 2"
