import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qpoin.algebra import Element, gen
from qpoin.parser import Add, Mul, Num, ParseError, Pow, Sym, parse, parse_element
from qpoin.pl import casimir_w, pauli_lubanski, spin_casimir
from qpoin.scalars import LAM, Q, qbracket, qpow

from conftest import random_element

E, F, K, Kinv = gen("E"), gen("F"), gen("K"), gen("Kinv")


def test_ast_shapes():
    assert parse("E F") == Mul(Sym("E", 0), Sym("F", 2))
    assert parse("2*q") == Mul(Num(2), Sym("q", 2))
    node = parse("a - b")
    assert isinstance(node, Add) and node.sign == -1
    assert isinstance(parse("q^(1/2)"), Pow)


def test_evaluation():
    assert parse_element("E*F - F*E") == (K - Kinv).scale(LAM.inverse())
    assert parse_element("(E F - F E) lam") == K - Kinv
    assert parse_element("q^(1/2)") == Element.scalar(qpow(1))
    assert parse_element("[3]") == Element.scalar(qbracket(3))
    assert parse_element("K^-2") == Kinv * Kinv
    assert parse_element("E/q") == E.scale(Q.inverse())
    assert parse_element("-P0 + -P3") == -(gen("P0") + gen("P3"))
    assert parse_element("W") == casimir_w()


@pytest.mark.parametrize("text, pos", [
    ("", 0),
    ("E +", 3),
    ("E / F", 2),
    ("foo", 0),
    ("E^(1/2)", 1),
    ("E^-1", 1),
    ("(E", 2),
    ("E $ F", 2),
    ("1/(q - q)", 1),
])
def test_errors_carry_position(text, pos):
    with pytest.raises(ParseError) as info:
        parse_element(text)
    assert info.value.pos == pos


def test_round_trip_derived_elements():
    w = pauli_lubanski()
    for x in (*w, spin_casimir(), casimir_w()):
        assert parse_element(str(x)) == x


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10**6))
def test_round_trip_random(seed):
    x = random_element(random.Random(seed), terms=3, max_len=4)
    assert parse_element(str(x)) == x
