import pytest

from src.errors import GensSyntaxError, PointRangeError, RepeatedPointError
from src.permgrp import Permutation, format_gens, load_gens, parse_gens


def test_parse_with_degree():
    degree, gens = parse_gens("# A5\nDEGREE 5\nGEN (1,2,3,4,5)\nGEN (1,2,3)\n")
    assert degree == 5
    assert gens == [Permutation.parse("(1,2,3,4,5)", 5), Permutation.parse("(1,2,3)", 5)]


def test_degree_inferred_from_points():
    degree, gens = parse_gens("GEN (1,2)(5,7)\n")
    assert degree == 7
    assert gens[0].degree == 7


def test_identity_generator():
    degree, gens = parse_gens("DEGREE 3\nGEN ()\n")
    assert gens[0].is_identity()


def test_errors_carry_line_numbers():
    with pytest.raises(RepeatedPointError, match="line 3"):
        parse_gens("DEGREE 4\nGEN (1,2)\nGEN (1,2,1)\n")
    with pytest.raises(PointRangeError, match="line 2"):
        parse_gens("DEGREE 4\nGEN (1,5)\n")
    with pytest.raises(GensSyntaxError, match="line 2"):
        parse_gens("DEGREE 4\nGENERATOR (1,2)\n")
    with pytest.raises(GensSyntaxError, match="DEGREE given twice"):
        parse_gens("DEGREE 4\nDEGREE 5\n")


def test_load_names_file(tmp_path):
    path = tmp_path / "bad.gens"
    path.write_text("DEGREE 3\nGEN (1,2\n", encoding="utf-8")
    with pytest.raises(GensSyntaxError, match="bad.gens"):
        load_gens(path)


def test_formatted_generators_parse_back(data_dir):
    degree, gens = load_gens(data_dir / "psl28.gens")
    text = format_gens(degree, gens, comment="PSL2(8)")
    assert text.startswith("# PSL2(8)\nDEGREE 9\n")
    assert parse_gens(text) == (degree, gens)


def test_bundled_files(data_dir):
    assert load_gens(data_dir / "c9xc3.gens")[0] == 12
    assert load_gens(data_dir / "psu38_c9.gens")[0] == 513
    assert len(load_gens(data_dir / "psl28.gens")[1]) == 3
