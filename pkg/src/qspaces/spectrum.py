"""Bounded search for the commutator spectrum of F(C[SU_q(2)/T_n])."""

from __future__ import annotations

import math
import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import kernels
from .disk import (
    DiskElement,
    DiskMonomial,
    brute_force_commutation_oracle,
    disk_tn_member,
)
from .suq2 import INF, validate_n

__all__ = [
    "SpectrumReport",
    "commutator_spectrum_search",
    "tn_disk_monomials",
    "monomial_sort_key",
    "format_n",
]


def format_n(n) -> str:
    return "inf" if n == INF else str(n)


def monomial_sort_key(m: DiskMonomial):
    return (m.degree, m.J, m.K)


def tn_disk_monomials(n, D: int) -> list[DiskMonomial]:
    """Disk monomials of total degree ``J + |K| <= D`` in the T_n subalgebra."""
    n = validate_n(n)
    out = [
        DiskMonomial(J, K)
        for J in range(D + 1)
        for K in range(-(D - J), D - J + 1)
        if disk_tn_member((J, K), n)
    ]
    return sorted(out, key=monomial_sort_key)


@dataclass
class SpectrumReport:
    n: int | float
    degree_bound: int
    exponents_found: list[int] = field(default_factory=list)
    witnesses: dict[int, tuple[DiskMonomial, DiskMonomial]] = field(default_factory=dict)
    # pairs proportional by a non-power constant; expected to stay empty
    flagged: list[tuple[DiskMonomial, DiskMonomial, str]] = field(default_factory=list)
    monomial_count: int = 0
    pairs_checked: int = 0

    @property
    def min_positive(self) -> int | None:
        pos = [m for m in self.exponents_found if m > 0]
        return min(pos) if pos else None

    def closed_under_negation(self) -> list[int]:
        return sorted(set(self.exponents_found) | {-m for m in self.exponents_found})

    def to_text(self) -> str:
        lines = [f"n={format_n(self.n)} D={self.degree_bound}"]
        for m in self.exponents_found:
            a, b = self.witnesses[m]
            lines.append(f"exponent {m}: {a} , {b}")
        mp = self.min_positive
        lines.append(f"min_positive={'none' if mp is None else mp}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "SpectrumReport":
        from .parsing import parse_expression

        lines = [l for l in text.splitlines() if l.strip()]
        head = re.fullmatch(r"n=(\S+) D=(\d+)", lines[0].strip())
        if head is None:
            raise ValueError(f"bad report header: {lines[0]!r}")
        rep = cls(n=validate_n(head.group(1)), degree_bound=int(head.group(2)))
        for line in lines[1:]:
            mm = re.fullmatch(r"exponent (-?\d+): (.+) , (.+)", line.strip())
            if mm:
                m = int(mm.group(1))
                wa = parse_expression(mm.group(2), "disk")
                wb = parse_expression(mm.group(3), "disk")
                rep.exponents_found.append(m)
                rep.witnesses[m] = (wa.monomials()[0], wb.monomials()[0])
            elif not line.startswith("min_positive="):
                raise ValueError(f"unrecognised report line: {line!r}")
        return rep


def _scan(monos, row_start, row_stop):
    return kernels.pair_exponents(monos, row_start, row_stop)


def commutator_spectrum_search(n, D: int, threads: int = 1, verify: bool = True) -> SpectrumReport:
    """All exponents ``m`` with ``ab = q^m ba`` over monomial pairs of degree <= D.

    Pairs are scanned in row-major order over monomials sorted by
    ``(degree, J, K)``; the first pair reaching an exponent is its witness.
    With ``verify`` each witness is re-checked through the rewriting oracle.
    """
    n = validate_n(n)
    if not isinstance(D, int) or D < 1:
        raise ValueError(f"degree bound must be a positive integer, got {D!r}")
    monos = tn_disk_monomials(n, D)
    count = len(monos)
    if threads > 1 and count > 1:
        step = math.ceil(count / threads)
        bounds = [(s, min(s + step, count)) for s in range(0, count, step)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(lambda b: _scan(monos, *b), bounds))
        status = [s for st, _ in chunks for s in st]
        exps = [m for _, ex in chunks for m in ex]
    else:
        status, exps = _scan(monos, 0, count)

    report = SpectrumReport(n=n, degree_bound=D, monomial_count=count, pairs_checked=count * count)
    for idx, (st, m) in enumerate(zip(status, exps)):
        a, b = monos[idx // count], monos[idx % count]
        if st == kernels.STATUS_POWER:
            if m not in report.witnesses:
                report.witnesses[m] = (a, b)
        elif st == kernels.STATUS_OTHER:
            omega = brute_force_commutation_oracle(DiskElement.monomial(a), DiskElement.monomial(b))
            if omega is not None:
                report.flagged.append((a, b, str(omega)))
    report.exponents_found = sorted(report.witnesses)
    report.witnesses = {m: report.witnesses[m] for m in report.exponents_found}
    if verify:
        for m, (a, b) in report.witnesses.items():
            omega = brute_force_commutation_oracle(DiskElement.monomial(a), DiskElement.monomial(b))
            if omega is None or omega.as_q_power() != m:
                raise AssertionError(f"witness {a} , {b} does not verify exponent {m}")
    return report
