"""Expression grammar and the canonical renderer.

The renderer contract: render(e) parses back to e in the same context,
for every element kind in the package.
"""

from fractions import Fraction

import pytest

from diskew.endos import RingEndo, identity_endo
from diskew.errors import (
    ExprSyntaxError,
    NegativeExponentOutsideLaurent,
    UnknownVariable,
)
from diskew.fields import QQ, PrimeField
from diskew.gwa import GwaData
from diskew.parser import parse_expression, render
from diskew.rings import PolyRing, SkewPolyRing
from diskew.specfile import load_preset


@pytest.fixture
def Qh():
    return PolyRing(QQ, ("h",))


def test_grammar_basics(Qh):
    h = Qh.gen("h")
    assert parse_expression("2 + 3*h", Qh) == 3 * h + 2
    assert parse_expression("h^2 - h", Qh) == h ** 2 - h
    assert parse_expression("-h^2", Qh) == -(h ** 2)
    assert parse_expression("(h - 1)*(h + 1)", Qh) == h ** 2 - 1
    assert parse_expression("3/4", Qh) == Qh.from_scalar(Fraction(3, 4))
    assert parse_expression("--h", Qh) == h
    assert parse_expression("1/2*h", Qh) == Qh.from_scalar(Fraction(1, 2)) * h


def test_no_implicit_multiplication(Qh):
    with pytest.raises(ExprSyntaxError):
        parse_expression("2h", Qh)
    with pytest.raises(ExprSyntaxError):
        parse_expression("(h + 1)(h - 1)", Qh)


def test_error_positions(Qh):
    with pytest.raises(ExprSyntaxError) as exc:
        parse_expression("h +\n* 2", Qh)
    assert exc.value.line == 2
    assert exc.value.col == 1
    with pytest.raises(ExprSyntaxError) as exc:
        parse_expression("h @ 2", Qh)
    assert exc.value.col == 3


def test_unknown_variable(Qh):
    with pytest.raises(UnknownVariable):
        parse_expression("h + t", Qh)


def test_negative_exponents(Qh):
    with pytest.raises(NegativeExponentOutsideLaurent):
        parse_expression("h^-1", Qh)
    laurent = PolyRing(QQ, ("t",), laurent=True)
    t = laurent.gen("t")
    assert parse_expression("t^-2", laurent) == t ** -2


def test_render_frozen_forms(Qh):
    h = Qh.gen("h")
    assert render(h ** 2 - 3 * h + 2) == "h^2 - 3*h + 2"
    assert render(Qh.zero()) == "0"
    assert render(-h) == "-h"
    assert render(Qh.from_scalar(Fraction(-1, 2)) * h) == "-1/2*h"
    weyl = load_preset("weyl-q").gwa
    elem = weyl.from_base(h + 1) * weyl.x() ** 2 + weyl.from_base(h)
    assert render(elem) == "(h + 1)*x^2 + h"
    assert render(weyl.y() * weyl.x()) == "h"


def contexts():
    out = []
    out.append(PolyRing(QQ, ("h",)))
    out.append(PolyRing(QQ, ("u", "v")))
    out.append(PolyRing(QQ, ("t",), laurent=True))
    out.append(PolyRing(PrimeField(5), ("h",)))
    base = PolyRing(QQ, ("q",))
    twist = RingEndo(base, {"q": base.from_scalar(Fraction(2)) * base.gen("q")})
    out.append(SkewPolyRing(base, "p", twist))
    out.append(load_preset("weyl-q").gwa)
    out.append(load_preset("quantum-plane-gwa").gwa)
    out.append(load_preset("usl2-dpr").dpr)
    return out


def test_roundtrip_property(rng):
    for context in contexts():
        for _ in range(50):
            e = context.random_element(rng)
            text = render(e)
            assert parse_expression(text, context) == e, text


def test_render_is_canonical(rng):
    # rendering the reparsed element reproduces the text exactly
    for context in contexts():
        for _ in range(20):
            text = render(context.random_element(rng))
            assert render(parse_expression(text, context)) == text
