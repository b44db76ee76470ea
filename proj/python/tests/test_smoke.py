from fractions import Fraction

import pytest

import gwitt


def test_bracket_example():
    w = gwitt.Algebra(1, [1])
    x, y = w.parse("(1|0)_1"), w.parse("(2|0)_1")
    assert str(gwitt.bracket(w, x, y)) == "(3|0)_1"
    assert gwitt.bracket(w, y, x) == -gwitt.bracket(w, x, y)


def test_slopes_are_exact():
    w = gwitt.Algebra(2, [Fraction(2, 3), -5])
    assert w.slopes == [Fraction(2, 3), Fraction(-5)]
    with pytest.raises(ValueError):
        gwitt.Algebra(1, [0])


def test_parse_errors():
    w = gwitt.Algebra()
    with pytest.raises(ValueError):
        w.parse("(1|0")


def test_structure():
    w = gwitt.Algebra()
    x = w.parse("(1|0)_1 + (0|0)_1 + (-1|3)_1")
    assert [d for d, _ in gwitt.grade(x)] == [(1,), (0,), (-1,)]
    assert gwitt.string_number(x) == 3
    assert gwitt.lp(x) == 3
    assert gwitt.lex_cmp(w, "(1|0)_1", "(0|0)_1") == 1


def test_engines():
    w = gwitt.Algebra()
    multiplier, result = gwitt.lemma1(w, w.parse("(1|0)_1"))
    assert multiplier == "(0|2)_1"
    assert str(result) == "(1|2)_1 - 2*(1|1)_1"
    report = gwitt.ideal_witness(w, w.parse("(1|0)_1"), (2, 2), (3, 3))
    assert report["saturated"] and report["reached"] == [1]
    assert gwitt.ad_diag(w, w.parse("(0|1)_1"), (1, 1)) == "(1|0)_1"
    assert gwitt.integrate(w, "(1|1)") == "(1|1) - (1|0)"


def test_derivations():
    w = gwitt.Algebra()
    table = "(1|0)_1 -> -(2|0)_1\n(0|1)_1 -> -(1|2)_1\n(0|0)_1 -> -(1|1)_1 - (1|0)_1\n"
    assert gwitt.verify_derivation(w, table) == []
    inner, c, s = gwitt.decompose_derivation(w, table)
    assert str(inner) == "(1|1)_1" and c == 0 and s == 0
