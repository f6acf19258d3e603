from fractions import Fraction

import pytest

from conftest import elem
from weylmonoid.errors import ParseError
from weylmonoid.grammar import parse_atoms, parse_element, parse_point, parse_word
from weylmonoid.monoid import format_expression, format_nf3, monoid_ball


def test_atoms():
    assert parse_atoms("s1 s2 e(1,2) s1", 3) == [("s", 0), ("s", 1), ("e", frozenset({0, 1}), 6), ("s", 0)]
    assert parse_atoms("e()", 2) == [("e", frozenset(), 0)]
    assert parse_atoms("s1s2", 2) == [("s", 0), ("s", 1)]


@pytest.mark.parametrize(
    "text, pos",
    [("s0", 0), ("s4", 0), ("s", 1), ("x1", 0), ("s1 e(1,", 7), ("s1 e(1 2)", 7), ("e(4)", 2), ("e({1,2)", 6)],
)
def test_parse_errors(text, pos):
    with pytest.raises(ParseError) as info:
        parse_atoms(text, 3)
    assert info.value.position == pos


def test_not_special_is_parse_error(hyp3):
    with pytest.raises(ParseError) as info:
        parse_element(hyp3, "s1 e(1)")
    assert info.value.position == 3


def test_word(hyp3):
    assert parse_word(hyp3, "e") is hyp3.identity
    assert parse_word(hyp3, "s1 s2").word == (0, 1)
    with pytest.raises(ParseError):
        parse_word(hyp3, "s1 e(1,2)")


@pytest.mark.parametrize("name", ["affA1", "H2", "blockH2A1", "hyp3"])
def test_roundtrip(name):
    from conftest import group_of

    g = group_of(name)
    for m in monoid_ball(g, 3):
        assert elem(g, format_nf3(m)) == m
        assert elem(g, format_expression(m)) == m


def test_point():
    assert parse_point("1,0,-1/2", 3).values == (1, 0, Fraction(-1, 2))
    assert parse_point("(1, 2)", 2).values == (1, 2)
    with pytest.raises(ParseError):
        parse_point("1,2", 3)
    with pytest.raises(ParseError):
        parse_point("1,x", 2)
