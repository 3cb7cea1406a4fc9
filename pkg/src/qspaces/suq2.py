"""The *-algebra C[SU_q(2)] over the basis ``alpha^(i) gamma^j gamma*^k``.

Relations (with ``q`` real)::

    alpha gamma = q gamma alpha        alpha gamma* = q gamma* alpha
    gamma gamma* = gamma* gamma
    alpha* alpha + gamma* gamma = 1 = alpha alpha* + q^2 gamma* gamma

Products of normal monomials go through the closed-form kernel in
``qspaces.kernels``; ``normalize`` reduces arbitrary words with the rewrite
system, which is an independent route to the same normal form.
"""

from __future__ import annotations

import enum
import math
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

from . import kernels
from ._element import LinearCombination
from .rewriting import RewriteSystem
from .scalars import ONE, QScalar

__all__ = [
    "SUq2Letter",
    "SUq2Monomial",
    "SUq2Element",
    "SUQ2_REWRITE_SYSTEM",
    "normalize",
    "mul",
    "star",
    "alpha_degree_decompose",
    "torus_weight",
    "tn_member",
    "in_nZ",
    "validate_n",
    "quotient_by_gamma",
    "UnitaryLaurent",
    "ALPHA",
    "ALPHA_STAR",
    "GAMMA",
    "GAMMA_STAR",
]

INF = math.inf


class SUq2Letter(enum.Enum):
    ALPHA = "a"
    ALPHA_STAR = "A"
    GAMMA = "g"
    GAMMA_STAR = "G"

    @property
    def display(self) -> str:
        return _LETTER_NAMES[self.value]


_LETTER_NAMES = {"a": "a", "A": "a*", "g": "g", "G": "g*"}


class SUq2Monomial(NamedTuple):
    """``alpha^(i) gamma^j gamma*^k``; negative ``i`` means ``alpha*^-i``."""

    i: int
    j: int
    k: int

    @property
    def weight(self) -> int:
        return self.i + self.j - self.k

    @property
    def word(self) -> str:
        head = "a" * self.i if self.i >= 0 else "A" * (-self.i)
        return head + "g" * self.j + "G" * self.k

    def __str__(self):
        parts = []
        if self.i:
            parts.append(_power("a" if self.i > 0 else "a*", abs(self.i)))
        if self.j:
            parts.append(_power("g", self.j))
        if self.k:
            parts.append(_power("g*", self.k))
        return " ".join(parts) if parts else "1"


def _power(name: str, e: int) -> str:
    return name if e == 1 else f"{name}^{e}"


@lru_cache(maxsize=1 << 16)
def _su_product(m1: SUq2Monomial, m2: SUq2Monomial):
    return tuple(
        (SUq2Monomial(*mono), QScalar.from_int_poly(p))
        for mono, p in kernels.su_monomial_product(*m1, *m2)
    )


class SUq2Element(LinearCombination):
    """Element of C[SU_q(2)] in normal form."""

    __slots__ = ()
    monomial_type = SUq2Monomial
    unit_monomial = SUq2Monomial(0, 0, 0)

    @classmethod
    def monomial_product(cls, m1, m2):
        return _su_product(m1, m2)

    @classmethod
    def monomial_star(cls, m):
        # (alpha^(i) g^j g*^k)* = g^k g*^j alpha^(-i)
        return _su_product(SUq2Monomial(0, m.k, m.j), SUq2Monomial(-m.i, 0, 0))

    @staticmethod
    def monomial_str(m) -> str:
        return str(m)

    @classmethod
    def gen(cls, letter: SUq2Letter | str) -> "SUq2Element":
        letter = SUq2Letter(letter) if isinstance(letter, str) else letter
        return cls.monomial(_LETTER_MONO[letter.value])

    def homogeneous_degree(self) -> int | None:
        degrees = {m.i for m in self._terms}
        return degrees.pop() if len(degrees) == 1 else None


_LETTER_MONO = {
    "a": SUq2Monomial(1, 0, 0),
    "A": SUq2Monomial(-1, 0, 0),
    "g": SUq2Monomial(0, 1, 0),
    "G": SUq2Monomial(0, 0, 1),
}

ALPHA = SUq2Element.gen("a")
ALPHA_STAR = SUq2Element.gen("A")
GAMMA = SUq2Element.gen("g")
GAMMA_STAR = SUq2Element.gen("G")

_q = QScalar.q
SUQ2_REWRITE_SYSTEM = RewriteSystem(
    name="SU_q(2)",
    rules=(
        ("ga", ((_q(-1), "ag"),)),
        ("Ga", ((_q(-1), "aG"),)),
        ("gA", ((_q(1), "Ag"),)),
        ("GA", ((_q(1), "AG"),)),
        ("Gg", ((ONE, "gG"),)),
        ("aA", ((ONE, ""), (-_q(2), "gG"))),
        ("Aa", ((ONE, ""), (-ONE, "gG"))),
    ),
    letter_names=_LETTER_NAMES,
)


def word_to_monomial(word: str) -> SUq2Monomial:
    """Read an irreducible word ``a^i g^j g*^k`` (or ``a*^i ...``)."""
    if not SUQ2_REWRITE_SYSTEM.is_normal(word):
        raise ValueError(f"word {word!r} is not in normal form")
    i = word.count("a") - word.count("A")
    return SUq2Monomial(i, word.count("g"), word.count("G"))


def _as_word(w: str | Sequence[SUq2Letter]) -> str:
    if isinstance(w, str):
        bad = set(w) - set("aAgG")
        if bad:
            raise ValueError(f"letters {sorted(bad)} are not in the SU_q(2) alphabet")
        return w
    return "".join(SUq2Letter(x).value if isinstance(x, str) else x.value for x in w)


def normalize(
    word: str | Sequence[SUq2Letter] | Iterable[tuple[object, object]],
    coeff=1,
    strategy: str = "leftmost",
    rng=None,
) -> SUq2Element:
    """Normal form of a word (or a combination of words) by rewriting.

    ``word`` is either a single word -- a string over ``a A g G`` (``A`` and
    ``G`` are the starred generators) or a sequence of ``SUq2Letter`` -- or
    an iterable of ``(word, coefficient)`` pairs.
    """
    if isinstance(word, str) or all(isinstance(x, SUq2Letter) for x in word):
        terms = [(_as_word(word), QScalar.coerce(coeff))]
    else:
        terms = [(_as_word(w), QScalar.coerce(c) * QScalar.coerce(coeff)) for w, c in word]
    reduced = SUQ2_REWRITE_SYSTEM.reduce(terms, strategy=strategy, rng=rng)
    return SUq2Element({word_to_monomial(w): c for w, c in reduced.items()})


def mul(a: SUq2Element, b: SUq2Element) -> SUq2Element:
    return a * b


def star(a: SUq2Element) -> SUq2Element:
    return a.star()


def alpha_degree_decompose(a: SUq2Element) -> dict[int, SUq2Element]:
    """Split ``a`` along the grading by alpha-degree."""
    parts: dict[int, dict] = {}
    for m, c in a.terms.items():
        parts.setdefault(m.i, {})[m] = c
    return {i: SUq2Element._raw(t) for i, t in sorted(parts.items())}


def torus_weight(m: SUq2Monomial) -> int:
    return SUq2Monomial(*m).weight


def validate_n(n) -> int | float:
    """Accept a positive integer or infinity (``math.inf`` or the string ``inf``)."""
    if isinstance(n, str):
        s = n.strip().lower()
        if s in ("inf", "infinity", "∞", "oo"):
            return INF
        try:
            n = int(s)
        except ValueError:
            raise ValueError(f"n must be a positive integer or inf, got {n!r}") from None
    if n == INF:
        return INF
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer or inf, got {n!r}")
    return n


def in_nZ(w: int, n) -> bool:
    """``w in nZ`` with the convention ``inf Z = {0}``."""
    return w == 0 if n == INF else w % n == 0


def tn_member(a: SUq2Element, n) -> bool:
    """Membership in the T_n-invariant subalgebra C[SU_q(2)/T_n]."""
    n = validate_n(n)
    return all(in_nZ(m.weight, n) for m in a.terms)


class UnitaryLaurent:
    """Laurent polynomial in one commuting unitary variable ``u`` over QScalar."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        self._terms = {int(e): QScalar.coerce(c) for e, c in (terms or {}).items() if c}

    @property
    def terms(self) -> dict[int, QScalar]:
        return dict(self._terms)

    def __add__(self, other):
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, QScalar()) + c
        return UnitaryLaurent(out)

    def __sub__(self, other):
        return self + UnitaryLaurent({e: -c for e, c in other._terms.items()})

    def __mul__(self, other):
        out: dict[int, QScalar] = {}
        for e, c in self._terms.items():
            for f, d in other._terms.items():
                out[e + f] = out.get(e + f, QScalar()) + c * d
        return UnitaryLaurent(out)

    def __eq__(self, other):
        if isinstance(other, int):
            other = UnitaryLaurent({0: other})
        return isinstance(other, UnitaryLaurent) and self._terms == other._terms

    __hash__ = None

    def __bool__(self):
        return bool(self._terms)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items()):
            us = "" if e == 0 else ("u" if e == 1 else f"u^{e}")
            if not us:
                parts.append(str(c))
            elif c == 1:
                parts.append(us)
            elif c == -1:
                parts.append(f"-{us}")
            elif c.is_single_term():
                parts.append(f"{c} {us}")
            else:
                parts.append(f"({c}) {us}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self):
        return f"UnitaryLaurent({self})"


def quotient_by_gamma(a: SUq2Element) -> UnitaryLaurent:
    """Image under gamma, gamma* -> 0, alpha -> u, alpha* -> u^-1."""
    return UnitaryLaurent({m.i: c for m, c in a.terms.items() if m.j == 0 and m.k == 0})
