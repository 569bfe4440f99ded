import json

import jsonschema
import pytest

from whpp.analysis import cauchy_binet_weights
from whpp.builders import RationalMatrix, graphic
from whpp.catalog import K4_EDGES, NON_FANO_MATRIX, catalog
from whpp.cli import ANALYZE_SCHEMA, EXIT_CHECKSUM, EXIT_INVALID, EXIT_OK, TABLE1_SCHEMA, main
from whpp.errors import ChecksumMismatch, ExchangeAxiomViolation, ParseError
from whpp.formats import (
    format_bases,
    format_rational_matrix,
    format_weights,
    load_matroid,
    parse_bases,
    parse_gf_matrix,
    parse_graph,
    parse_weights,
)
from whpp.linalg import IntegerMatrix, nullity_rational


def test_bases_roundtrip():
    M = catalog("W^3")
    text = format_bases(M)
    assert text.splitlines()[0] == "6 3"
    assert parse_bases("# comment\n" + text) == M


def test_bases_errors_carry_location(tmp_path):
    with pytest.raises(ParseError, match="f.txt:3:"):
        parse_bases("4 2\n0 1\n0 9\n", "f.txt")
    with pytest.raises(ParseError, match="f.txt:2:"):
        parse_bases("4 2\n0 1 2\n", "f.txt")
    with pytest.raises(ExchangeAxiomViolation, match="f.txt:2:"):
        parse_bases("4 2\n0 1\n2 3\n", "f.txt")


def test_matrix_and_graph_files():
    G = parse_gf_matrix("2 3 7\n0 0 0 1 1 1 1\n0 1 1 0 0 1 1\n1 0 1 0 1 0 1\n")
    assert (G.p, G.rows, G.cols) == (2, 3, 7)
    with pytest.raises(ParseError, match="m:1:"):
        parse_gf_matrix("4 1 1\n1\n", "m")
    nv, edges = parse_graph("G 4 6\n" + "".join(f"{u} {v}\n" for u, v in K4_EDGES))
    assert graphic(edges, nv) == graphic(K4_EDGES)
    with pytest.raises(ParseError, match="g:2:"):
        parse_graph("G 2 1\n0 5\n", "g")


def test_load_descriptors(tmp_path):
    q = tmp_path / "a.q"
    q.write_text(format_rational_matrix(RationalMatrix(NON_FANO_MATRIX)))
    assert load_matroid(f"qmatrix:{q}").basis_count == 29
    g = tmp_path / "k4.g"
    g.write_text("G 4 6\n" + "".join(f"{u} {v}\n" for u, v in K4_EDGES))
    assert load_matroid(f"graph:{g}").basis_count == 16
    assert load_matroid("uniform:3,7").basis_count == 35
    assert load_matroid("pg:2,3").basis_count == 234
    assert load_matroid("ag:3,2").basis_count == 56
    with pytest.raises(ParseError):
        load_matroid("nonsense")
    with pytest.raises(ParseError):
        load_matroid(f"bases:{tmp_path / 'missing'}")


def test_analyze_fano(tmp_path, capsys):
    out = tmp_path / "f7.json"
    assert main(["analyze", "catalog:F7", "--json", str(out)]) == EXIT_OK
    record = json.loads(out.read_text())
    jsonschema.validate(record, ANALYZE_SCHEMA)
    v = record["verdict"]
    assert (v["dim_V"], v["dim_W"], v["reduction_applies"], v["whpp_status"]) == (7, 7, True, "NOT_WHPP")
    assert "NOT_WHPP" in capsys.readouterr().out


def test_analyze_uniform(tmp_path):
    out = tmp_path / "u.json"
    assert main(["analyze", "uniform:3,7", "--json", str(out)]) == EXIT_OK
    record = json.loads(out.read_text())
    assert record["verdict"]["dim_V"] == 35 and record["quadrangle_count"] == 0


def test_analyze_json_is_byte_identical(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    main(["analyze", "catalog:non-Pappus", "--json", str(a), "--timings"])
    main(["analyze", "catalog:non-Pappus", "--json", str(b)])
    assert a.read_bytes() == b.read_bytes()


def test_analyze_bad_bases(tmp_path, capsys):
    f = tmp_path / "bad.txt"
    f.write_text("4 2\n0 1\n2 3\n")
    assert main(["analyze", f"bases:{f}"]) == EXIT_INVALID
    assert "ExchangeAxiomViolation" in capsys.readouterr().err


def test_dumps(tmp_path):
    mat, quads = tmp_path / "m.txt", tmp_path / "q.txt"
    assert main(["analyze", "catalog:M(K4)", "--dump-matrix", str(mat),
                 "--dump-quadrangles", str(quads)]) == EXIT_OK
    A = IntegerMatrix.parse(mat.read_text())
    assert A.cols == 16 and nullity_rational(A) == 6
    assert len(quads.read_text().splitlines()) == A.rows


def test_table1_json(tmp_path):
    out = tmp_path / "t.json"
    assert main(["table1", "--json", str(out)]) == EXIT_OK
    rows = json.loads(out.read_text())
    jsonschema.validate(rows, TABLE1_SCHEMA)
    by_name = {r["name"]: r for r in rows}
    assert (by_name["PG(2,3)"]["n"], by_name["PG(2,3)"]["dim_V"], by_name["PG(2,3)"]["basis_count"]) == (13, 13, 234)
    nd = by_name["non-Desargues"]
    assert (nd["n"], nd["dim_V"], nd["basis_count"]) == (10, 27, 111)


def test_table1_reports_checksum_failure(monkeypatch, capsys):
    import whpp.cli as cli

    real = cli.catalog

    def broken(name):
        if name == "R8":
            raise ChecksumMismatch("R8: built n=8, |B|=57")
        return real(name)

    monkeypatch.setattr(cli, "catalog", broken)
    assert main(["table1"]) == EXIT_CHECKSUM
    out = capsys.readouterr().out
    assert "27/28 rows match" in out and "R8: built" in out


def test_other_subcommands(tmp_path, capsys):
    assert main(["catalog", "list"]) == EXIT_OK
    assert "non-Desargues" in capsys.readouterr().out
    assert main(["quadrangles", "uniform:2,4"]) == EXIT_OK
    assert "# 0 degenerate quadrangles" in capsys.readouterr().out
    assert main(["tutte", "catalog:M(K4)"]) == EXIT_OK
    assert "torsion [2]" in capsys.readouterr().out
    assert main(["analyze", "catalog:nope"]) == EXIT_INVALID


def test_verify_weights(tmp_path, capsys):
    M, w = cauchy_binet_weights(RationalMatrix(NON_FANO_MATRIX))
    q = tmp_path / "a.q"
    q.write_text(format_rational_matrix(RationalMatrix(NON_FANO_MATRIX)))
    good = tmp_path / "w.txt"
    good.write_text(format_weights(w, M))
    assert parse_weights(good.read_text(), M).weights == w.weights
    assert main(["verify-weights", f"qmatrix:{q}", str(good)]) == EXIT_OK
    # the coefficient on {1,3,5} is the one free direction, so any positive value verifies
    free = tmp_path / "free.txt"
    free.write_text(good.read_text().replace(": 4", ": 5"))
    assert main(["verify-weights", f"qmatrix:{q}", str(free)]) == EXIT_OK
    lines = good.read_text().splitlines(keepends=True)
    bad = tmp_path / "bad.txt"
    bad.write_text(lines[0].replace(": 1", ": 2") + "".join(lines[1:]))
    assert main(["verify-weights", f"qmatrix:{q}", str(bad)]) == EXIT_INVALID
    assert "FAILED" in capsys.readouterr().out
    short = tmp_path / "short.txt"
    short.write_text("".join(good.read_text().splitlines(keepends=True)[1:]))
    assert main(["verify-weights", f"qmatrix:{q}", str(short)]) == EXIT_INVALID
    junk = tmp_path / "junk.txt"
    junk.write_text("0 1 2 : x\n")
    assert main(["verify-weights", f"qmatrix:{q}", str(junk)]) == EXIT_INVALID
    assert f"{junk}:1:" in capsys.readouterr().err
