"""Exact coefficient arithmetic.

``GaussianRational`` is an element of Q(i).  ``QScalar`` is a Laurent
polynomial in the formal parameter ``q`` with Gaussian-rational coefficients;
``q`` is treated as real, so conjugation acts on coefficients only.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping

__all__ = [
    "GaussianRational",
    "QScalar",
    "qscalar_add",
    "qscalar_mul",
    "qscalar_conj",
    "qscalar_eval",
    "as_q_power",
]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"expected a rational number, got {type(x).__name__}")


def _fmt_frac(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class GaussianRational:
    """A number ``re + im*i`` with rational parts."""

    __slots__ = ("re", "im", "_hash")

    def __init__(self, re=0, im=0):
        # Fraction keeps lowest terms with a positive denominator.
        self.re = _frac(re)
        self.im = _frac(im)
        self._hash = None

    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, complex):
            raise TypeError("floating complex values are not exact")
        return cls(x)

    def __add__(self, other):
        other = _coerce_gr(other)
        if other is NotImplemented:
            return other
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce_gr(other)
        if other is NotImplemented:
            return other
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce_gr(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = _coerce_gr(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return GaussianRational(a * c)
        return GaussianRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __truediv__(self, other):
        other = _coerce_gr(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def inverse(self) -> "GaussianRational":
        norm = self.re * self.re + self.im * self.im
        if not norm:
            raise ZeroDivisionError("inverse of zero")
        return GaussianRational(self.re / norm, -self.im / norm)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        other = _coerce_gr(other)
        if other is NotImplemented:
            return False
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.re, self.im))
        return self._hash

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def is_real(self) -> bool:
        return not self.im

    def __repr__(self):
        return f"GaussianRational({self})"

    def __str__(self):
        re, im = self.re, self.im
        if not im:
            return _fmt_frac(re)
        if im == 1:
            ims = "i"
        elif im == -1:
            ims = "-i"
        else:
            ims = f"{_fmt_frac(im)}*i"
        if not re:
            return ims
        sign = " - " if ims.startswith("-") else " + "
        return f"({_fmt_frac(re)}{sign}{ims.lstrip('-')})"


def _coerce_gr(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction, Rational)):
        return GaussianRational(x)
    return NotImplemented


_ONE = GaussianRational(1)


class QScalar:
    """Laurent polynomial ``sum(c_e * q**e)`` over Q(i), stored sparsely.

    Instances are immutable.  The zero scalar has no terms.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, object] | Iterable | None = None):
        clean: dict[int, GaussianRational] = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for e, c in items:
                c = GaussianRational.coerce(c)
                if not c:
                    continue
                e = int(e)
                if e in clean:
                    s = clean[e] + c
                    if s:
                        clean[e] = s
                    else:
                        del clean[e]
                else:
                    clean[e] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, GaussianRational]) -> "QScalar":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c) -> "QScalar":
        return cls({0: c})

    @classmethod
    def q(cls, e: int = 1, coeff=1) -> "QScalar":
        """The scalar ``coeff * q**e``."""
        return cls({e: coeff})

    @classmethod
    def from_int_poly(cls, poly: Mapping[int, int]) -> "QScalar":
        return cls._raw({e: GaussianRational(c) for e, c in poly.items() if c})

    @classmethod
    def coerce(cls, x) -> "QScalar":
        if isinstance(x, QScalar):
            return x
        return cls.const(x)

    @property
    def terms(self) -> dict[int, GaussianRational]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __add__(self, other):
        other = _coerce_qs(other)
        if other is NotImplemented:
            return other
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return QScalar._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return QScalar._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce_qs(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_qs(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce_qs(other)
        if other is NotImplemented:
            return other
        a, b = self._terms, other._terms
        if not a or not b:
            return QScalar._raw({})
        if len(b) == 1:
            ((f, d),) = b.items()
            if d == _ONE:
                return QScalar._raw({e + f: c for e, c in a.items()})
            return QScalar._raw({e + f: c * d for e, c in a.items()})
        if len(a) == 1:
            return other * self
        out: dict[int, GaussianRational] = {}
        for e, c in a.items():
            for f, d in b.items():
                k = e + f
                p = c * d
                s = out.get(k)
                out[k] = p if s is None else s + p
        return QScalar._raw({k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            inv = self.inverse()
            if inv is None:
                raise ZeroDivisionError("only monomial scalars c*q^e are invertible")
            return inv ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, e: int) -> "QScalar":
        """Multiply by ``q**e``."""
        if not e:
            return self
        return QScalar._raw({k + e: c for k, c in self._terms.items()})

    def inverse(self) -> "QScalar | None":
        """Inverse in Q(i)[q, q^-1], which exists only for nonzero monomials."""
        if len(self._terms) != 1:
            return None
        ((e, c),) = self._terms.items()
        return QScalar._raw({-e: c.inverse()})

    def conj(self) -> "QScalar":
        return QScalar._raw({e: c.conjugate() for e, c in self._terms.items()})

    def eval(self, q0: float) -> complex:
        if not 0.0 < q0 < 1.0:
            raise ValueError(f"q0 must lie in (0, 1), got {q0!r}")
        return sum((complex(c) * q0**e for e, c in self._terms.items()), 0j)

    def as_q_power(self) -> int | None:
        if len(self._terms) != 1:
            return None
        ((e, c),) = self._terms.items()
        return e if c == _ONE else None

    def min_exp(self) -> int:
        return min(self._terms)

    def max_exp(self) -> int:
        return max(self._terms)

    def divide_exact(self, other: "QScalar") -> "QScalar | None":
        """Return ``self / other`` if it is a Laurent polynomial, else None."""
        other = QScalar.coerce(other)
        if not other._terms:
            raise ZeroDivisionError("division by the zero scalar")
        if not self._terms:
            return ZERO
        # Shift both to polynomials; the divisor then has a nonzero constant
        # term, so q-power factors cannot rescue a nonzero remainder.
        offset = self.min_exp() - other.min_exp()
        num = self.shift(-self.min_exp())
        den = other.shift(-other.min_exp())
        lead_e = den.max_exp()
        lead_inv = den._terms[lead_e].inverse()
        quot: dict[int, GaussianRational] = {}
        while num._terms and num.max_exp() >= lead_e:
            k = num.max_exp() - lead_e
            c = num._terms[num.max_exp()] * lead_inv
            quot[k] = c
            num = num - den * QScalar._raw({k: c})
        if num._terms:
            return None
        return QScalar._raw(quot).shift(offset)

    def __eq__(self, other):
        other = _coerce_qs(other)
        if other is NotImplemented:
            return False
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"QScalar({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items()):
            parts.append(_fmt_term(c, e))
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def is_single_term(self) -> bool:
        return len(self._terms) == 1


def _fmt_term(c: GaussianRational, e: int) -> str:
    if e == 0:
        return str(c)
    qs = "q" if e == 1 else f"q^{e}"
    if c == _ONE:
        return qs
    if c == -_ONE:
        return f"-{qs}"
    return f"{c}*{qs}"


def _coerce_qs(x):
    if isinstance(x, QScalar):
        return x
    if isinstance(x, (int, Fraction, Rational, GaussianRational)):
        return QScalar.const(x)
    return NotImplemented


ZERO = QScalar()
ONE = QScalar.const(1)
Q = QScalar.q(1)


def qscalar_add(a: QScalar, b: QScalar) -> QScalar:
    return a + b


def qscalar_mul(a: QScalar, b: QScalar) -> QScalar:
    return a * b


def qscalar_conj(a: QScalar) -> QScalar:
    return a.conj()


def qscalar_eval(a: QScalar, q0: float) -> complex:
    return a.eval(q0)


def as_q_power(a: QScalar) -> int | None:
    return a.as_q_power()
