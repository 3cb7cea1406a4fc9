from fractions import Fraction

import pytest
from hypothesis import given

from qspaces.disk import DiskElement, DiskMonomial
from qspaces.parsing import ParseError, parse_expression, parse_scalar
from qspaces.scalars import GaussianRational, QScalar
from qspaces.suq2 import ALPHA, ALPHA_STAR, GAMMA, GAMMA_STAR, SUq2Element, SUq2Monomial
from strategies import disk_elements, su_elements

q = QScalar.q


def test_examples():
    assert parse_expression("g a") == SUq2Element.monomial(SUq2Monomial(1, 1, 0), q(-1))
    assert parse_expression("z z*", "disk") == DiskElement.one() - DiskElement.monomial(DiskMonomial(2, 0))
    got = parse_expression("(1/2 + i) * y^2", "disk")
    assert got == DiskElement.monomial(DiskMonomial(2, 0), GaussianRational(Fraction(1, 2), 1))


def test_star_suffix_versus_product():
    assert parse_expression("a*g") == ALPHA_STAR * GAMMA
    assert parse_expression("a * g") == ALPHA * GAMMA
    assert parse_expression("g*^2 a*") == GAMMA_STAR**2 * ALPHA_STAR


def test_scalars():
    assert parse_scalar("q^-2 + 2*q") == q(-2) + q(1, 2)
    assert parse_scalar("3/2") == QScalar.const(GaussianRational(Fraction(3, 2)))
    assert parse_scalar("(1 - i)^2") == QScalar.const(GaussianRational(0, -2))
    with pytest.raises(ParseError):
        parse_scalar("a")


def test_signs_and_powers():
    assert parse_expression("-a + a") == SUq2Element.zero()
    assert parse_expression("(a + g)^2") == (ALPHA + GAMMA) * (ALPHA + GAMMA)
    assert parse_expression("2^-1 a") == ALPHA * GaussianRational(Fraction(1, 2))


@pytest.mark.parametrize(
    "text,context,offset",
    [
        ("a +", "su", 3),
        ("a y", "su", 2),
        ("y a", "disk", 2),
        ("a^-1", "su", 0),
        ("(a", "su", 2),
        ("a ^ x", "su", 4),
        ("1/0", "su", 0),
        ("é a", "su", 0),
        ("a\u00a0+ #", "su", 5),
        ("a $", "su", 2),
        ("", "su", 0),
    ],
)
def test_errors_carry_byte_offsets(text, context, offset):
    with pytest.raises(ParseError) as exc:
        parse_expression(text, context)
    assert exc.value.offset == offset


def test_unknown_context():
    with pytest.raises(ValueError):
        parse_expression("a", "plane")


@given(su_elements)
def test_round_trip_su(a):
    assert parse_expression(str(a)) == a


@given(disk_elements)
def test_round_trip_disk(a):
    assert parse_expression(str(a), "disk") == a
