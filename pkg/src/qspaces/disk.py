"""The quantum disk C[D_q] = C[SU_q(2)] / <gamma - gamma*>.

Generators ``y = F(gamma)`` and ``z = F(alpha)*`` satisfy::

    yz = q zy,   y = y*,   zz* + y^2 = 1 = z*z + q^2 y^2

Monomials are ``y^J z^(K)`` with ``z^(K) = z^K`` for ``K >= 0`` and
``z*^-K`` for ``K < 0``.  Since ``F(alpha) = z*``, the alpha-exponent ``i``
of a preimage corresponds to ``K = -i``, and::

    F(alpha^(i) gamma^j gamma*^k) = q^(i(j+k)) y^(j+k) z^(-i)
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, NamedTuple

from . import kernels
from ._element import LinearCombination
from .rewriting import RewriteSystem
from .scalars import ONE, QScalar
from .suq2 import INF, SUq2Element, in_nZ, validate_n

__all__ = [
    "DiskMonomial",
    "DiskElement",
    "DISK_REWRITE_SYSTEM",
    "disk_normalize",
    "disk_mul",
    "f_q",
    "disk_tn_member",
    "q_commutation_exponent",
    "monomial_exponent",
    "brute_force_commutation_oracle",
    "proportionality_constant",
    "Y",
    "Z",
    "Z_STAR",
]


class DiskMonomial(NamedTuple):
    J: int
    K: int

    @property
    def degree(self) -> int:
        return self.J + abs(self.K)

    @property
    def word(self) -> str:
        return "y" * self.J + ("z" * self.K if self.K >= 0 else "Z" * (-self.K))

    def __str__(self):
        parts = []
        if self.J:
            parts.append("y" if self.J == 1 else f"y^{self.J}")
        if self.K:
            name = "z" if self.K > 0 else "z*"
            parts.append(name if abs(self.K) == 1 else f"{name}^{abs(self.K)}")
        return " ".join(parts) if parts else "1"


@lru_cache(maxsize=1 << 16)
def _disk_product(m1: DiskMonomial, m2: DiskMonomial):
    return tuple(
        (DiskMonomial(*mono), QScalar.from_int_poly(p))
        for mono, p in kernels.disk_monomial_product(*m1, *m2)
    )


class DiskElement(LinearCombination):
    """Element of C[D_q] in normal form."""

    __slots__ = ()
    monomial_type = DiskMonomial
    unit_monomial = DiskMonomial(0, 0)

    @classmethod
    def monomial_product(cls, m1, m2):
        return _disk_product(m1, m2)

    @classmethod
    def monomial_star(cls, m):
        # (y^J z^(K))* = z^(-K) y^J
        return _disk_product(DiskMonomial(0, -m.K), DiskMonomial(m.J, 0))

    @staticmethod
    def monomial_str(m) -> str:
        return str(m)

    @classmethod
    def gen(cls, letter: str) -> "DiskElement":
        return cls.monomial(_LETTER_MONO[letter])


_LETTER_MONO = {"y": DiskMonomial(1, 0), "z": DiskMonomial(0, 1), "Z": DiskMonomial(0, -1)}
_LETTER_NAMES = {"y": "y", "z": "z", "Z": "z*"}

Y = DiskElement.gen("y")
Z = DiskElement.gen("z")
Z_STAR = DiskElement.gen("Z")

_q = QScalar.q
DISK_REWRITE_SYSTEM = RewriteSystem(
    name="quantum disk",
    rules=(
        ("zy", ((_q(-1), "yz"),)),
        ("Zy", ((_q(1), "yZ"),)),
        ("zZ", ((ONE, ""), (-ONE, "yy"))),
        ("Zz", ((ONE, ""), (-_q(2), "yy"))),
    ),
    letter_names=_LETTER_NAMES,
)


def _word_to_monomial(word: str) -> DiskMonomial:
    if not DISK_REWRITE_SYSTEM.is_normal(word):
        raise ValueError(f"word {word!r} is not in normal form")
    return DiskMonomial(word.count("y"), word.count("z") - word.count("Z"))


def disk_normalize(
    word: str | Iterable[tuple[str, object]], coeff=1, strategy: str = "leftmost", rng=None
) -> DiskElement:
    """Normal form of a word over ``y z Z`` (``Z`` is z*) by rewriting."""
    if isinstance(word, str):
        terms = [(word, QScalar.coerce(coeff))]
    else:
        terms = [(w, QScalar.coerce(c) * QScalar.coerce(coeff)) for w, c in word]
    for w, _ in terms:
        bad = set(w) - set("yzZ")
        if bad:
            raise ValueError(f"letters {sorted(bad)} are not in the disk alphabet")
    reduced = DISK_REWRITE_SYSTEM.reduce(terms, strategy=strategy, rng=rng)
    return DiskElement({_word_to_monomial(w): c for w, c in reduced.items()})


def disk_mul(a: DiskElement, b: DiskElement) -> DiskElement:
    return a * b


def f_q(a: SUq2Element) -> DiskElement:
    """The quotient map alpha -> z*, alpha* -> z, gamma, gamma* -> y."""
    acc: dict[DiskMonomial, QScalar] = {}
    for m, c in a.terms.items():
        J = m.j + m.k
        mono = DiskMonomial(J, -m.i)
        acc[mono] = acc.get(mono, QScalar()) + c.shift(m.i * J)
    return DiskElement(acc)


def disk_tn_member(m: DiskMonomial, n) -> bool:
    """Whether ``y^J z^(K)`` lies in F(C[SU_q(2)/T_n]).

    Preimages are ``alpha^(-K) gamma^j gamma*^k`` with ``j + k = J``; their
    torus weight is ``-K + t`` with ``t = j - k`` ranging over
    ``J, J-2, ..., -J``.  So the condition is ``t = K (mod n)`` for some such
    ``t`` (equality when n is infinite).
    """
    n = validate_n(n)
    J, K = DiskMonomial(*m)
    if J < 0:
        raise ValueError("y-exponent must be nonnegative")
    if n == INF:
        return abs(K) <= J and (J - K) % 2 == 0
    return any(in_nZ(t - K, n) for t in range(-J, J + 1, 2))


def proportionality_constant(a: DiskElement, b: DiskElement) -> QScalar | None:
    """The Laurent polynomial ``w`` with ``ab = w ba``, if one exists."""
    if not a or not b:
        raise ValueError("commutation constants are defined for nonzero elements only")
    ab, ba = a * b, b * a
    return _ratio(ab, ba)


def _ratio(ab: LinearCombination, ba: LinearCombination) -> QScalar | None:
    if not ab and not ba:
        return ONE
    if set(ab.terms) != set(ba.terms):
        return None
    omega = None
    for m, c in ab.items():
        r = c.divide_exact(ba.coefficient(m))
        if r is None or (omega is not None and r != omega):
            return None
        omega = r
    return omega


def q_commutation_exponent(a: DiskElement, b: DiskElement) -> int | None:
    """``m`` with ``ab = q^m ba`` exactly, or None when there is no such power."""
    if not a or not b:
        raise ValueError("q_commutation_exponent needs nonzero elements")
    if len(a) == 1 and len(b) == 1:
        (ma, ca), (mb, cb) = a.items()[0], b.items()[0]
        status, m = kernels.disk_pair_exponent(*ma, *mb)
        if status == kernels.STATUS_POWER:
            return m
        if status == kernels.STATUS_NOT_PROPORTIONAL:
            return None
        # scalar coefficients commute, so they cannot change the ratio
    omega = proportionality_constant(a, b)
    return None if omega is None else omega.as_q_power()


def monomial_exponent(j: int, k: int, j2: int, k2: int, side: str = "z") -> int:
    """Exponent of q in ``(y^j w^k)(y^j2 w^k2) = q^e (y^j2 w^k2)(y^j w^k)``.

    ``side`` is ``"z"`` (w = z) or ``"z*"`` (w = z*).  The z* case is the
    adjoint of the z case and flips the sign.
    """
    if min(j, k, j2, k2) < 0:
        raise ValueError("exponents must be nonnegative")
    if side == "z":
        return j * k2 - j2 * k
    if side in ("z*", "Z"):
        return -(j * k2 - j2 * k)
    if side == "mixed":
        raise ValueError("mixed z / z* pairs have no closed form; use q_commutation_exponent")
    raise ValueError(f"unknown side {side!r}")


def _word_of(e: DiskElement) -> list[tuple[str, QScalar]]:
    return [(m.word, c) for m, c in e.items()]


def brute_force_commutation_oracle(a: DiskElement, b: DiskElement) -> QScalar | None:
    """Solve ``ab = w ba`` for ``w`` by rewriting the concatenated words.

    Products are formed by reducing free words with the disk rewrite system
    (not the closed-form kernel) and ``w`` is found by exact coefficient-wise
    division.  Returns None when the products are not proportional.
    """
    if not a or not b:
        raise ValueError("the oracle needs nonzero elements")
    ab_words = [(w1 + w2, c1 * c2) for w1, c1 in _word_of(a) for w2, c2 in _word_of(b)]
    ba_words = [(w2 + w1, c1 * c2) for w1, c1 in _word_of(a) for w2, c2 in _word_of(b)]
    return _ratio(disk_normalize(ab_words), disk_normalize(ba_words))
