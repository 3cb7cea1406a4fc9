"""Root data, Poisson-Lie subgroup data and the commutator-spectrum invariant.

Cartan matrices follow ``a_ij = <alpha_i^vee, alpha_j> = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)``
with Bourbaki numbering, so ``diag(d) @ A`` is the symmetric Gram matrix of
the simple roots when ``d_i = (alpha_i, alpha_i) / 2`` and short roots have
``(alpha, alpha) = 2``.  Fundamental weights then pair as
``(omega_j, alpha_i) = d_i delta_ij``.

Indices of simple roots are 1-based throughout, as in the usual notation.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

import numpy as np

from .suq2 import INF

__all__ = [
    "RootDatum",
    "SubgroupData",
    "HomSpaceInvariant",
    "Verdict",
    "cartan_matrix",
    "symmetrizers",
    "pairing_with_simple_root",
    "n_i",
    "invariant_exponent",
    "is_two_cell",
    "distinguish",
    "parse_root_datum",
    "parse_subgroup",
    "BUILTIN_TYPES",
]


class LieDataError(ValueError):
    pass


def _simple_cartan(series: str, rank: int) -> list[list[int]]:
    s = series.upper()
    valid = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 4,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }
    if not valid.get(s, False):
        raise LieDataError(f"no simple Lie algebra of type {series}{rank}")
    A = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        A[i][i] = 2

    def link(i, j, aij=-1, aji=-1):
        A[i - 1][j - 1] = aij
        A[j - 1][i - 1] = aji

    if s in "ABC":
        for i in range(1, rank):
            link(i, i + 1)
        if s == "B":
            link(rank - 1, rank, -1, -2)
        elif s == "C":
            link(rank - 1, rank, -2, -1)
    elif s == "D":
        for i in range(1, rank - 1):
            link(i, i + 1)
        link(rank - 2, rank)
    elif s == "E":
        link(1, 3)
        link(3, 4)
        link(2, 4)
        for i in range(4, rank):
            link(i, i + 1)
    elif s == "F":
        link(1, 2)
        link(2, 3, -1, -2)
        link(3, 4)
    elif s == "G":
        link(1, 2, -3, -1)
    return A


def cartan_matrix(label: str) -> list[list[int]]:
    """Cartan matrix for labels like ``A3``, ``G2`` or products ``A1xB2``."""
    factors = [f for f in re.split(r"\s*[x×*+]\s*", label.strip()) if f]
    if not factors:
        raise LieDataError("empty type label")
    blocks = []
    for f in factors:
        m = re.fullmatch(r"([A-Ga-g])_?(\d+)", f)
        if m is None:
            raise LieDataError(f"cannot parse type {f!r}")
        blocks.append(_simple_cartan(m.group(1), int(m.group(2))))
    r = sum(len(b) for b in blocks)
    A = [[0] * r for _ in range(r)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            A[off + i][off : off + len(b)] = row
        off += len(b)
    return A


def _components(A) -> list[list[int]]:
    r = len(A)
    seen, comps = set(), []
    for start in range(r):
        if start in seen:
            continue
        comp, stack = [], [start]
        seen.add(start)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(r):
                if j not in seen and (A[i][j] or A[j][i]):
                    seen.add(j)
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


def symmetrizers(cartan: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Minimal positive integers ``d`` with ``diag(d) @ cartan`` symmetric.

    Each connected component is scaled so that its smallest entry is 1.
    Raises ``LieDataError`` if the matrix is not a finite-type Cartan matrix.
    """
    A = [list(map(int, row)) for row in cartan]
    r = len(A)
    if r == 0 or any(len(row) != r for row in A):
        raise LieDataError("Cartan matrix must be square and nonempty")
    for i in range(r):
        if A[i][i] != 2:
            raise LieDataError("diagonal entries of a Cartan matrix must be 2")
        for j in range(r):
            if i != j and (A[i][j] > 0 or (A[i][j] == 0) != (A[j][i] == 0)):
                raise LieDataError("off-diagonal entries must be <= 0 with a_ij = 0 iff a_ji = 0")
    d: list[Fraction | None] = [None] * r
    for comp in _components(A):
        d[comp[0]] = Fraction(1)
        stack = [comp[0]]
        while stack:
            i = stack.pop()
            for j in comp:
                if A[i][j] == 0 or i == j:
                    continue
                # d_i a_ij = d_j a_ji
                val = d[i] * A[i][j] / A[j][i]
                if d[j] is None:
                    d[j] = val
                    stack.append(j)
                elif d[j] != val:
                    raise LieDataError("Cartan matrix is not symmetrizable")
        lcm = math.lcm(*(d[i].denominator for i in comp))
        ints = [int(d[i] * lcm) for i in comp]
        g = math.gcd(*ints)
        for i, v in zip(comp, ints):
            d[i] = Fraction(v // g)
    out = tuple(int(x) for x in d)
    sym = np.diag(out) @ np.array(A)
    if np.linalg.eigvalsh(sym.astype(float)).min() <= 0:
        raise LieDataError("Cartan matrix is not of finite type")
    if any(x not in (1, 2, 3) for x in out):
        raise LieDataError(f"symmetrizers {out} outside {{1, 2, 3}}")
    return out


@dataclass(frozen=True)
class RootDatum:
    label: str
    cartan: tuple[tuple[int, ...], ...]
    d: tuple[int, ...]

    @classmethod
    def from_type(cls, label: str) -> "RootDatum":
        A = cartan_matrix(label)
        return cls(label, tuple(map(tuple, A)), symmetrizers(A))

    @classmethod
    def from_cartan(cls, cartan, label: str = "custom") -> "RootDatum":
        A = tuple(tuple(int(x) for x in row) for row in cartan)
        return cls(label, A, symmetrizers(A))

    @property
    def rank(self) -> int:
        return len(self.cartan)

    def q_exponent(self, i: int) -> int:
        """``q_i = q ** d_i``."""
        return self.d[i - 1]


@dataclass(frozen=True)
class SubgroupData:
    """A pair ``(S, L)``: simple roots in the Levi part and a lattice in P(S^c).

    ``L_generators`` are integer vectors over ``{omega_i : i in S^c}`` with
    coordinates in increasing index order.
    """

    S: frozenset[int]
    L_generators: tuple[tuple[int, ...], ...]

    def complement(self, rank: int) -> list[int]:
        return [i for i in range(1, rank + 1) if i not in self.S]

    def validate(self, datum: RootDatum) -> None:
        r = datum.rank
        if any(not 1 <= i <= r for i in self.S):
            raise LieDataError(f"S must be a subset of 1..{r}")
        sc = self.complement(r)
        if not sc:
            raise LieDataError("K must be a proper subgroup: S^c is empty")
        for v in self.L_generators:
            if len(v) != len(sc):
                raise LieDataError(
                    f"L generator {v} has {len(v)} coordinates; S^c = {sc} needs {len(sc)}"
                )
            if any(not isinstance(x, int) for x in v):
                raise LieDataError("L generators must be integer vectors")

    def weight(self, g: Sequence[int], rank: int) -> dict[int, int]:
        """Generator as a map ``i -> coefficient of omega_i`` over S^c."""
        return dict(zip(self.complement(rank), g))


@dataclass(frozen=True)
class HomSpaceInvariant:
    n: Mapping[int, int | float]
    m: int
    contributions: Mapping[int, int]

    def table(self) -> str:
        rows = ["i  n_i  d_i*c_i"]
        for i, ni in self.n.items():
            rows.append(f"{i}  {'inf' if ni == INF else ni}  {self.contributions[i]}")
        rows.append(f"m={self.m}")
        return "\n".join(rows)


def pairing_with_simple_root(mu: Mapping[int, int], i: int, d: Sequence[int]) -> int:
    """``(mu, alpha_i)`` for a weight ``mu = sum mu_j omega_j`` over S^c."""
    if i not in mu:
        raise LieDataError(f"index {i} is not in S^c")
    return d[i - 1] * mu[i]


def n_i(subgroup: SubgroupData, datum: RootDatum, i: int) -> int | float:
    """Positive generator of ``{(mu, alpha_i) : mu in L}``; infinity when it is {0}."""
    subgroup.validate(datum)
    sc = subgroup.complement(datum.rank)
    if i not in sc:
        raise LieDataError(f"index {i} is not in S^c = {sc}")
    g = 0
    for gen in subgroup.L_generators:
        g = math.gcd(g, pairing_with_simple_root(subgroup.weight(gen, datum.rank), i, datum.d))
    return INF if g == 0 else g


def invariant_exponent(subgroup: SubgroupData, datum: RootDatum) -> HomSpaceInvariant:
    """``m = min_i d_i c_i`` with ``c_i = 1`` for odd ``n_i`` and 2 otherwise.

    ``q^m`` is the largest value below 1 in the commutator spectrum of the
    images of the 2-cell representations.
    """
    subgroup.validate(datum)
    ns, contrib = {}, {}
    for i in subgroup.complement(datum.rank):
        ni = n_i(subgroup, datum, i)
        c = 1 if ni != INF and ni % 2 == 1 else 2
        ns[i] = ni
        contrib[i] = datum.d[i - 1] * c
    return HomSpaceInvariant(n=ns, m=min(contrib.values()), contributions=contrib)


def is_two_cell(w_length: int, i: int | None = None, subgroup: SubgroupData | None = None, rank: int | None = None) -> bool:
    """Whether ``pi_{w,t}`` is a 2-cell representation, from the Bruhat length of w.

    Length 0 is the counit and length >= 2 has a nonabelian quotient.  For a
    simple reflection ``s_i`` the index must be supplied; with ``subgroup``
    (and ``rank``) it is also checked to lie in S^c.
    """
    if w_length < 0:
        raise ValueError("Bruhat length must be nonnegative")
    if w_length != 1:
        return False
    if i is None:
        raise ValueError("a simple reflection needs its index i")
    if subgroup is None:
        return True
    if rank is None:
        return i not in subgroup.S
    return i in subgroup.complement(rank)


@dataclass(frozen=True)
class Verdict:
    isomorphic: bool
    p: float
    q: float
    m: int | None
    p_power: float | None
    q_power: float | None
    reason: str

    def __str__(self):
        word = "isomorphic" if self.isomorphic else "non-isomorphic"
        lines = [word, f"reason: {self.reason}"]
        if self.m is not None:
            lines.append(f"m={self.m} p^m={self.p_power:.12g} q^m={self.q_power:.12g}")
        return "\n".join(lines)


def distinguish(p, q, subgroup: SubgroupData, datum: RootDatum) -> Verdict:
    """Whether C[X_p] and C[X_q] are *-isomorphic, for p, q in (0, 1]."""
    for name, v in (("p", p), ("q", q)):
        if not 0 < v <= 1:
            raise ValueError(f"{name} = {v} lies outside (0, 1]; replace it by its inverse first")
    inv = invariant_exponent(subgroup, datum)
    m = inv.m
    pm, qm = p**m, q**m
    if p == q:
        return Verdict(True, p, q, m, pm, qm, "equal deformation parameters")
    if p == 1 or q == 1:
        return Verdict(False, p, q, m, pm, qm, "exactly one of the algebras is commutative")
    return Verdict(False, p, q, m, pm, qm, "largest commutator-spectrum value below 1 differs")


BUILTIN_TYPES = ("A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2", "F4", "E6", "E7", "E8")


def parse_root_datum(text: str) -> RootDatum:
    """``type=A3`` or ``cartan=[[2,-1],[-1,2]]`` (a bare label is also accepted)."""
    text = text.strip()
    if text.startswith("cartan="):
        body = text[len("cartan=") :]
        rows = re.findall(r"\[([^\[\]]*)\]", body)
        if not rows:
            raise LieDataError(f"cannot parse Cartan matrix {body!r}")
        try:
            A = [[int(x) for x in row.split(",") if x.strip()] for row in rows]
        except ValueError:
            raise LieDataError(f"non-integer entry in Cartan matrix {body!r}") from None
        return RootDatum.from_cartan(A)
    if text.startswith("type="):
        text = text[len("type=") :]
    return RootDatum.from_type(text)


def parse_subgroup(S_text: str, L_text: str) -> SubgroupData:
    """``S = "1,3"`` and ``L = "(1,0);(0,2)"``; empty strings mean the empty set."""
    S_text = S_text.strip()
    try:
        S = frozenset(int(x) for x in S_text.split(",") if x.strip())
    except ValueError:
        raise LieDataError(f"cannot parse S = {S_text!r}") from None
    gens = []
    for part in L_text.split(";"):
        part = part.strip()
        if not part:
            continue
        if not (part.startswith("(") and part.endswith(")")):
            raise LieDataError(f"L generator {part!r} must be parenthesised")
        try:
            gens.append(tuple(int(x) for x in part[1:-1].split(",") if x.strip()))
        except ValueError:
            raise LieDataError(f"cannot parse L generator {part!r}") from None
    return SubgroupData(S, tuple(gens))
