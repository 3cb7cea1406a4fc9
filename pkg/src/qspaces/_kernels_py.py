"""Pure-Python monomial product kernels.

Integer Laurent polynomials in ``q`` are dicts ``{exponent: int}``.  Every
product of two normal monomials in either algebra has coefficients in
Z[q, q^-1], so the kernels never touch Gaussian rationals.

Notation: ``alpha^(i)`` is ``alpha^i`` for ``i >= 0`` and ``alpha*^-i``
otherwise; ``c = gamma gamma*``.  Disk monomials are ``y^J z^(K)`` with
``z^(K) = z^K`` for ``K >= 0`` and ``z*^-K`` otherwise.
"""

from __future__ import annotations

IMPLEMENTATION = "python"

STATUS_NOT_PROPORTIONAL = 0
STATUS_POWER = 1
STATUS_OTHER = 2


def contraction(i: int, i2: int) -> tuple[int, list[int]]:
    """``alpha^(i) alpha^(i2) = alpha^(i+i2) * prod_e (1 - q^e c)``."""
    if i >= 0 and i2 >= 0 or i <= 0 and i2 <= 0:
        return i + i2, []
    if i > 0:
        a, b = i, -i2
        if a >= b:
            return a - b, [2 * s for s in range(1, b + 1)]
        return a - b, [2 * s + 2 * (b - a) for s in range(1, a + 1)]
    a, b = -i, i2
    if a >= b:
        return b - a, [-2 * s for s in range(b)]
    return b - a, [-2 * s - 2 * (b - a) for s in range(a)]


def factor_product(exps) -> list[dict[int, int]]:
    """Coefficients of ``c^s`` in ``prod_e (1 - q^e c)`` for s = 0..len(exps)."""
    polys: list[dict[int, int]] = [{0: 1}]
    for e in exps:
        nxt = [dict(p) for p in polys] + [{}]
        for s, p in enumerate(polys):
            tgt = nxt[s + 1]
            for f, c in p.items():
                v = tgt.get(f + e, 0) - c
                if v:
                    tgt[f + e] = v
                else:
                    tgt.pop(f + e, None)
        polys = nxt
    return polys


def _shifted(p: dict[int, int], d: int) -> dict[int, int]:
    return {e + d: c for e, c in p.items()}


def su_monomial_product(i, j, k, i2, j2, k2):
    """Normal form of ``alpha^(i) g^j g*^k * alpha^(i2) g^j2 g*^k2``.

    Returns a list of ``((i, j, k), intpoly)``.
    """
    pre = -(j + k) * i2
    i3, exps = contraction(i, i2)
    out = []
    for s, p in enumerate(factor_product(exps)):
        out.append(((i3, j + j2 + s, k + k2 + s), _shifted(p, pre)))
    return out


def disk_monomial_product(J, K, J2, K2):
    """Normal form of ``y^J z^(K) * y^J2 z^(K2)`` as ``[((J, K), intpoly)]``."""
    pre = -K * J2
    i3, exps = contraction(-K, -K2)
    K3 = -i3
    out = []
    for s, p in enumerate(factor_product(exps)):
        out.append(((J + J2 + 2 * s, K3), _shifted(p, pre - 2 * K3 * s)))
    return out


def _compare(ab, ba) -> tuple[int, int]:
    if len(ab) != len(ba):
        return STATUS_NOT_PROPORTIONAL, 0
    m = None
    for (mono, p), (mono2, p2) in zip(ab, ba):
        if mono != mono2 or not p or not p2:
            return STATUS_NOT_PROPORTIONAL, 0
        if m is None:
            m = max(p) - max(p2)
            if p != _shifted(p2, m):
                # first ratio is not a power of q; needs an exact division check
                return STATUS_OTHER, 0
        elif p != _shifted(p2, m):
            return STATUS_NOT_PROPORTIONAL, 0
    return STATUS_POWER, 0 if m is None else m


def disk_pair_exponent(J, K, J2, K2) -> tuple[int, int]:
    """Status and exponent ``m`` with ``ab = q^m ba`` for two disk monomials.

    Status ``STATUS_OTHER`` means the supports agree but the ratio is not a
    pure power of q; the caller decides how to treat it.
    """
    ab = disk_monomial_product(J, K, J2, K2)
    ba = disk_monomial_product(J2, K2, J, K)
    return _compare(ab, ba)


def pair_exponents(monos, row_start=0, row_stop=None) -> tuple[list[int], list[int]]:
    """Row-major ``disk_pair_exponent`` for rows ``row_start:row_stop`` of all ordered pairs."""
    if row_stop is None:
        row_stop = len(monos)
    status: list[int] = []
    exps: list[int] = []
    for J, K in monos[row_start:row_stop]:
        for J2, K2 in monos:
            st, m = disk_pair_exponent(J, K, J2, K2)
            status.append(st)
            exps.append(m)
    return status, exps
