"""Shared machinery for finite QScalar-linear combinations of normal monomials."""

from __future__ import annotations

from fractions import Fraction
from typing import ClassVar, Mapping

from .scalars import GaussianRational, QScalar

_SCALAR_TYPES = (int, Fraction, GaussianRational, QScalar)


class LinearCombination:
    """Immutable map ``monomial -> nonzero QScalar``.

    Subclasses supply the monomial type, the unit monomial, a product of two
    monomials returning ``[(monomial, QScalar)]`` and the adjoint of a
    monomial in the same form.
    """

    __slots__ = ("_terms", "_hash")

    monomial_type: ClassVar[type]
    unit_monomial: ClassVar[tuple]

    def __init__(self, terms: Mapping | None = None):
        clean: dict = {}
        if terms:
            mt = self.monomial_type
            for mono, c in terms.items():
                c = QScalar.coerce(c)
                if not c:
                    continue
                mono = mt(*mono)
                prev = clean.get(mono)
                if prev is not None:
                    c = prev + c
                    if not c:
                        del clean[mono]
                        continue
                clean[mono] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict):
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, mono, coeff=1):
        return cls({mono: coeff})

    @classmethod
    def scalar(cls, c):
        return cls({cls.unit_monomial: c})

    @classmethod
    def one(cls):
        return cls.scalar(1)

    @classmethod
    def zero(cls):
        return cls._raw({})

    # -- subclass hooks ---------------------------------------------------
    @classmethod
    def monomial_product(cls, m1, m2) -> list[tuple[object, QScalar]]:
        raise NotImplementedError

    @classmethod
    def monomial_star(cls, m) -> list[tuple[object, QScalar]]:
        raise NotImplementedError

    @staticmethod
    def monomial_str(m) -> str:
        raise NotImplementedError

    @staticmethod
    def sort_key(m):
        return tuple(m)

    # -- container protocol ----------------------------------------------
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: self.sort_key(kv[0]))

    def monomials(self):
        return sorted(self._terms, key=self.sort_key)

    def coefficient(self, mono) -> QScalar:
        return self._terms.get(self.monomial_type(*mono), QScalar())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, _SCALAR_TYPES):
            return type(self).scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            prev = out.get(m)
            if prev is None:
                out[m] = c
            else:
                s = prev + c
                if s:
                    out[m] = s
                else:
                    del out[m]
        return type(self)._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def scale(self, c) -> "LinearCombination":
        c = QScalar.coerce(c)
        if not c:
            return type(self)._raw({})
        out = {}
        for m, v in self._terms.items():
            p = v * c
            if p:
                out[m] = p
        return type(self)._raw(out)

    def __mul__(self, other):
        if isinstance(other, _SCALAR_TYPES):
            return self.scale(other)
        if not isinstance(other, type(self)):
            return NotImplemented
        acc: dict = {}
        prod = self.monomial_product
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                c12 = c1 * c2
                for m, p in prod(m1, m2):
                    v = c12 * p
                    prev = acc.get(m)
                    acc[m] = v if prev is None else prev + v
        return type(self)._raw({m: c for m, c in acc.items() if c})

    def __rmul__(self, other):
        if isinstance(other, _SCALAR_TYPES):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = type(self).one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def star(self):
        """Antilinear anti-automorphism; coefficients are conjugated."""
        acc: dict = {}
        for m, c in self._terms.items():
            cc = c.conj()
            for m2, p in self.monomial_star(m):
                v = cc * p
                prev = acc.get(m2)
                acc[m2] = v if prev is None else prev + v
        return type(self)._raw({m: c for m, c in acc.items() if c})

    def commutator(self, other):
        return self * other - other * self

    # -- comparison and printing -----------------------------------------
    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __str__(self):
        if not self._terms:
            return "0"
        parts = [_fmt_term(c, self.monomial_str(m)) for m, c in self.items()]
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self):
        return f"{type(self).__name__}({self})"


def _fmt_term(c: QScalar, ms: str) -> str:
    if ms == "1":
        return str(c)
    if c == 1:
        return ms
    if c == -1:
        return f"-{ms}"
    if c.is_single_term():
        return f"{c} {ms}"
    return f"({c}) {ms}"
