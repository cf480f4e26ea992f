"""File format and command-line behavior."""

from __future__ import annotations

import io
import json
from fractions import Fraction

import pytest

from lienil.catalog import builtin, standard_entries
from lienil.cli import (
    ParseError,
    parse_algebra,
    parse_element,
    render_algebra,
    run,
)

F = Fraction

SL2_TEXT = "dim 3\nbasis e h f\n[e,h] = -2 e\n[e,f] = h\n[h,f] = -2 f\n"


def write(tmp_path, name: str, text: str) -> str:
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


def capture(argv) -> tuple[int, str]:
    out = io.StringIO()
    code = run(argv, out=out)
    return code, out.getvalue()


# --- parsing ----------------------------------------------------------------------

def test_parse_renders_back_to_itself():
    assert render_algebra(parse_algebra(SL2_TEXT)) == SL2_TEXT


def test_round_trip_on_every_catalog_entry():
    for entry in standard_entries():
        text = render_algebra(entry.algebra)
        assert parse_algebra(text) == entry.algebra


def test_parse_accepts_comments_and_blank_lines():
    text = "# a three-dimensional example\n\ndim 3\nbasis x y z\n\n[x,y] = z  # center\n"
    g = parse_algebra(text)
    assert g.dim == 3
    assert g.bracket((1, 0, 0), (0, 1, 0)) == (0, 0, 1)


def test_parse_accepts_rational_and_signed_coefficients():
    text = "dim 2\nbasis a b\n[a,b] = 1/2 a - 3 b\n"
    g = parse_algebra(text)
    assert g.bracket((1, 0), (0, 1)) == (F(1, 2), -3)


def test_parse_reversed_pair_is_normalized():
    text = "dim 3\nbasis e h f\n[h,e] = 2 e\n[e,f] = h\n[f,h] = 2 f\n"
    assert parse_algebra(text) == parse_algebra(SL2_TEXT)


def test_parse_zero_dim_file():
    g = parse_algebra("dim 0\n")
    assert g.dim == 0


def test_parse_error_on_diagonal_bracket():
    with pytest.raises(ParseError) as excinfo:
        parse_algebra("dim 2\nbasis a b\n[a,a] = b\n")
    assert excinfo.value.line == 3


def test_parse_error_on_duplicate_pair():
    with pytest.raises(ParseError) as excinfo:
        parse_algebra("dim 2\nbasis a b\n[a,b] = b\n[b,a] = -1 b\n")
    assert excinfo.value.line == 4


def test_parse_error_on_unknown_name():
    with pytest.raises(ParseError) as excinfo:
        parse_algebra("dim 2\nbasis a b\n[a,b] = c\n")
    assert excinfo.value.line == 3


def test_parse_error_on_bad_basis_count():
    with pytest.raises(ParseError):
        parse_algebra("dim 3\nbasis a b\n")


def test_parse_error_on_missing_dim():
    with pytest.raises(ParseError):
        parse_algebra("basis a b\n[a,b] = b\n")


def test_parse_element_values():
    assert parse_element("1, 0, -2", 3) == (1, 0, -2)
    assert parse_element("1/2,0", 2) == (F(1, 2), 0)


def test_parse_element_errors():
    with pytest.raises(ParseError):
        parse_element("1, 2", 3)
    with pytest.raises(ParseError):
        parse_element("1, x", 2)


# --- commands ----------------------------------------------------------------------

def test_validate_ok(tmp_path):
    path = write(tmp_path, "sl2.txt", SL2_TEXT)
    code, text = capture(["validate", path])
    assert code == 0
    assert "valid: true" in text


def test_validate_reports_jacobi_failure(tmp_path):
    path = write(tmp_path, "bad.txt",
                 "dim 3\nbasis x y z\n[x,y] = z\n[x,z] = x\n")
    code, text = capture(["validate", path])
    assert code == 1
    assert "valid: false" in text


def test_info_payload(tmp_path):
    path = write(tmp_path, "sl2.txt", SL2_TEXT)
    code, text = capture(["info", "--format", "json", path])
    assert code == 0
    payload = json.loads(text)
    assert payload["dim"] == 3
    assert payload["semisimple"] is True
    assert payload["derived_series_dims"] == [3, 3]


def test_radical_command(tmp_path):
    path = write(tmp_path, "heis.txt", render_algebra(builtin("heisenberg").algebra))
    code, text = capture(["radical", "--format", "json", path])
    assert code == 0
    payload = json.loads(text)
    assert payload["dim"] == 3
    assert payload["semisimple"] is False


def test_killing_command(tmp_path):
    path = write(tmp_path, "sl2.txt", SL2_TEXT)
    code, text = capture(["killing", "--format", "json", path])
    assert code == 0
    payload = json.loads(text)
    assert payload["gram"][1][1] == "8"


def test_nilpotent_command_and_assert(tmp_path):
    path = write(tmp_path, "sl2.txt", SL2_TEXT)
    code, _ = capture(["nilpotent", path, "--element", "1,0,0"])
    assert code == 0
    code, _ = capture(["nilpotent", path, "--element", "0,1,0", "--assert"])
    assert code == 2


def test_oracle_command(tmp_path):
    path = write(tmp_path, "sl2.txt", SL2_TEXT)
    code, text = capture(["oracle", "--format", "json", path, "--element", "1,0,0"])
    assert code == 0
    payload = json.loads(text)
    assert payload["answer"] is True and payload["in_derived"] is True


def test_oracle_witness_payload(tmp_path):
    path = write(tmp_path, "sl2.txt", SL2_TEXT)
    code, text = capture(
        ["oracle", "--format", "json", path, "--element", "0,1,0", "--witness"])
    assert code == 0
    payload = json.loads(text)
    assert payload["answer"] is False
    assert payload["witness_case"] == "adjoint_pullback"
    assert payload["witness_acts_nilpotently"] is False


def test_crosscheck_command(tmp_path):
    path = write(tmp_path, "heis.txt", render_algebra(builtin("heisenberg").algebra))
    code, text = capture(
        ["crosscheck", "--format", "json", path,
         "--element", "0,0,1", "--depth", "1", "--max-dim", "8", "--assert"])
    assert code == 0
    payload = json.loads(text)
    assert payload["consistent"] is True
    assert payload["corpus_size"] == len(payload["outcomes"])


def test_catalog_listing():
    code, text = capture(["catalog", "--format", "json"])
    assert code == 0
    names = json.loads(text)["names"]
    assert "sl2" in names and "heisenberg" in names


def test_catalog_renders_file_verbatim():
    code, text = capture(["catalog", "sl2"])
    assert code == 0
    assert text == SL2_TEXT


def test_catalog_output_feeds_back_into_parser(tmp_path):
    code, text = capture(["catalog", "gl2"])
    assert code == 0
    path = write(tmp_path, "gl2.txt", text)
    code, _ = capture(["validate", path])
    assert code == 0


# --- exit codes and stability ---------------------------------------------------------

def test_unreadable_file_is_reported(tmp_path):
    code, text = capture(["info", str(tmp_path / "missing.txt")])
    assert code == 1
    assert "error" in text


def test_parse_error_exit_code(tmp_path):
    path = write(tmp_path, "bad.txt", "dim 2\nbasis a b\n[a,a] = b\n")
    code, text = capture(["info", path])
    assert code == 1
    assert "error" in text


def test_unknown_catalog_name_exit_code():
    code, text = capture(["catalog", "sp4"])
    assert code == 1
    assert "error" in text


def test_help_exits_cleanly():
    assert run(["--help"], out=io.StringIO()) == 0


def test_json_output_is_byte_stable(tmp_path):
    path = write(tmp_path, "sl2.txt", SL2_TEXT)
    argv = ["crosscheck", "--format", "json", path,
            "--element", "0,1,0", "--depth", "1", "--max-dim", "16"]
    first = capture(argv)
    second = capture(argv)
    assert first == second
    assert first[1].encode("utf-8") == second[1].encode("utf-8")


def test_text_and_json_agree_on_values(tmp_path):
    path = write(tmp_path, "sl2.txt", SL2_TEXT)
    _, json_text = capture(["oracle", "--format", "json", path, "--element", "0,1,0"])
    _, plain = capture(["oracle", path, "--element", "0,1,0"])
    payload = json.loads(json_text)
    assert f"answer: {'true' if payload['answer'] else 'false'}" in plain
    assert f"radical_dim: {payload['radical_dim']}" in plain
