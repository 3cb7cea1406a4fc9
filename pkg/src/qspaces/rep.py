"""Truncated matrices of the standard representation of C[SU_q(2)].

On the basis ``e_0 .. e_{N-1}``::

    alpha e_n = sqrt(1 - q0^(2n)) e_{n-1},     gamma e_n = -q0^n e_n

Truncation only distorts entries that touch the discarded vectors
``e_N, e_{N+1}, ...``; the checks below compare on the leading block
``[0, N - d)`` where ``d`` bounds how far a word can raise the index.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .disk import f_q
from .suq2 import (
    ALPHA,
    ALPHA_STAR,
    GAMMA,
    GAMMA_STAR,
    SUq2Element,
    SUq2Monomial,
    quotient_by_gamma,
    tn_member,
    validate_n,
)

__all__ = [
    "TruncatedRep",
    "rep_matrix",
    "relation_residuals",
    "edge_residual",
    "shift_degree",
    "kernel_membership",
    "faithfulness_rank",
    "compact_ideal_check",
    "alpha_span",
]

RESIDUAL_TOL = 1e-12
HOMOMORPHISM_TOL = 1e-10
RANK_TOL = 1e-8


@dataclass(frozen=True)
class TruncatedRep:
    N: int
    q0: float
    _cache: dict = field(default_factory=dict, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if int(self.N) != self.N or self.N < 1:
            raise ValueError(f"N must be a positive integer, got {self.N!r}")
        if not 0.0 < self.q0 < 1.0:
            raise ValueError(f"q0 must lie in (0, 1), got {self.q0!r}")

    @cached_property
    def alpha(self) -> np.ndarray:
        n = np.arange(1, self.N)
        a = np.zeros((self.N, self.N), dtype=complex)
        a[n - 1, n] = np.sqrt(1.0 - self.q0 ** (2 * n))
        return a

    @cached_property
    def gamma(self) -> np.ndarray:
        return np.diag(-(self.q0 ** np.arange(self.N))).astype(complex)

    @property
    def alpha_star(self) -> np.ndarray:
        return self.alpha.conj().T

    @property
    def gamma_star(self) -> np.ndarray:
        return self.gamma.conj().T

    def monomial_matrix(self, m: SUq2Monomial) -> np.ndarray:
        m = SUq2Monomial(*m)
        hit = self._cache.get(m)
        if hit is not None:
            return hit
        base = self.alpha if m.i >= 0 else self.alpha_star
        mat = np.linalg.matrix_power(base, abs(m.i))
        # gamma is diagonal, so gamma^j gamma*^k scales columns
        diag = np.diag(self.gamma) ** m.j * np.diag(self.gamma_star) ** m.k
        mat = mat * diag[np.newaxis, :]
        mat.setflags(write=False)
        self._cache[m] = mat
        return mat


def rep_matrix(a: SUq2Element, rep: TruncatedRep) -> np.ndarray:
    out = np.zeros((rep.N, rep.N), dtype=complex)
    for m, c in a.terms.items():
        out += c.eval(rep.q0) * rep.monomial_matrix(m)
    return out


def alpha_span(*elements: SUq2Element) -> int:
    """Sum over the inputs of the largest |alpha-degree| of a term."""
    return sum(max((abs(m.i) for m in e.terms), default=0) for e in elements)


def _block(mat: np.ndarray, d: int) -> np.ndarray:
    keep = mat.shape[0] - d
    return mat[:keep, :keep]


def _relations(rep: TruncatedRep) -> dict[str, np.ndarray]:
    a, a_s, g, g_s = rep.alpha, rep.alpha_star, rep.gamma, rep.gamma_star
    one = np.eye(rep.N)
    q = rep.q0
    return {
        "a g - q g a": a @ g - q * g @ a,
        "a g* - q g* a": a @ g_s - q * g_s @ a,
        "g g* - g* g": g @ g_s - g_s @ g,
        "a* a + g* g - 1": a_s @ a + g_s @ g - one,
        "a a* + q^2 g* g - 1": a @ a_s + q * q * g_s @ g - one,
    }


def relation_residuals(rep: TruncatedRep, per_relation: bool = False):
    """Max entrywise deviation of the defining relations on ``e_0..e_{N-2}``."""
    if rep.N < 3:
        raise ValueError("relation residuals need N >= 3")
    res = {name: float(np.max(np.abs(_block(m, 1)))) for name, m in _relations(rep).items()}
    return res if per_relation else max(res.values())


def edge_residual(rep: TruncatedRep) -> float:
    """Deviation of ``a a* + q^2 g* g - 1`` at the last basis vector (a truncation artefact)."""
    m = _relations(rep)["a a* + q^2 g* g - 1"]
    return float(abs(m[rep.N - 1, rep.N - 1]))


def shift_degree(a: SUq2Element, rep: TruncatedRep, tol: float = 0.0) -> int | None:
    """Which diagonal ``col - row`` carries the matrix of a homogeneous element.

    ``alpha`` lowers the index (``e_n -> e_{n-1}``), so alpha-degree ``i``
    appears as entries ``(n - i, n)``.  Returns None for the zero matrix.
    """
    if a.homogeneous_degree() is None and a:
        raise ValueError("shift_degree needs an element of a single alpha-degree")
    mat = rep_matrix(a, rep)
    rows, cols = np.nonzero(np.abs(mat) > tol)
    offsets = set((cols - rows).tolist())
    if not offsets:
        return None
    if len(offsets) != 1:
        raise ValueError(f"matrix is not a weighted shift: offsets {sorted(offsets)}")
    return offsets.pop()


def kernel_membership(a: SUq2Element, rep: TruncatedRep | None = None) -> bool:
    """Exact test ``F(a) = 0``; with ``rep`` the matrix is cross-checked too."""
    exact = f_q(a).is_zero()
    if rep is not None:
        d = alpha_span(a)
        block = _block(rep_matrix(a, rep), min(d, rep.N))
        vanishes = block.size == 0 or float(np.max(np.abs(block))) < RESIDUAL_TOL
        if exact and not vanishes:
            raise AssertionError("symbolic kernel element has a nonzero matrix")
    return exact


def disk_basis_matrices(D: int, rep: TruncatedRep) -> list[np.ndarray]:
    """Matrices of ``y^J z^K`` and ``y^J z*^K`` for ``J + K <= D``.

    The disk representation sends ``y`` to gamma and ``z`` to alpha*.
    """
    mats = []
    for J in range(D + 1):
        for K in range(-(D - J), D - J + 1):
            mats.append(rep.monomial_matrix(SUq2Monomial(-K, J, 0)))
    return mats


def faithfulness_rank(D: int, rep: TruncatedRep, tol: float = RANK_TOL) -> bool:
    """Linear independence of the disk basis monomials of degree <= D."""
    if D < 0:
        raise ValueError("degree bound must be nonnegative")
    if rep.N < 2 * D + 4:
        raise ValueError(f"N = {rep.N} is too small for D = {D}; need N >= 2D + 4")
    mats = disk_basis_matrices(D, rep)
    flat = np.array([m.ravel() for m in mats])
    # row scaling does not change the rank but evens out q0^J decay
    flat = flat / np.linalg.norm(flat, axis=1, keepdims=True)
    sv = np.linalg.svd(flat, compute_uv=False)
    return int(np.sum(sv > tol)) == len(mats)


def weighted_shift_weights(mat: np.ndarray, offset: int) -> np.ndarray:
    """Entries on the diagonal ``col - row = offset``."""
    return np.diagonal(mat, offset=offset).copy()


def compact_ideal_check(n, rep: TruncatedRep, samples: int = 20, seed: int = 0) -> bool:
    """Finite-dimensional shadows of the 2-cell structure of C[SU_q(2)/T_n].

    * ``rho(alpha* gamma)`` is a weighted shift (one step up) whose weights
      are nonzero and pairwise distinct;
    * the images under ``gamma -> 0`` of random products ``ab`` and ``ba`` of
      T_n-invariant monomials agree exactly, i.e. the quotient is abelian.
    """
    n = validate_n(n)
    x = ALPHA_STAR * GAMMA
    if not tn_member(x, n):
        return False
    mat = rep_matrix(x, rep)
    weights = weighted_shift_weights(mat, -1)
    off_support = mat.copy()
    idx = np.arange(rep.N - 1)
    off_support[idx + 1, idx] = 0
    if np.any(off_support != 0):
        return False
    mags = np.abs(weights)
    if np.any(mags == 0):
        return False
    if len(np.unique(weights)) != len(weights):
        return False

    rng = random.Random(seed)
    pool = _tn_monomials(n, 4)
    for _ in range(samples):
        a = SUq2Element.monomial(rng.choice(pool))
        b = SUq2Element.monomial(rng.choice(pool))
        if quotient_by_gamma(a * b) != quotient_by_gamma(b * a):
            return False
    return True


def _tn_monomials(n, bound: int) -> list[SUq2Monomial]:
    out = []
    for i in range(-bound, bound + 1):
        for j in range(bound + 1):
            for k in range(bound + 1):
                m = SUq2Monomial(i, j, k)
                if tn_member(SUq2Element.monomial(m), n):
                    out.append(m)
    return out


RELATION_NAMES = (
    "a g - q g a",
    "a g* - q g* a",
    "g g* - g* g",
    "a* a + g* g - 1",
    "a a* + q^2 g* g - 1",
)

# generators exported for convenience in tests and the CLI
GENERATORS = {"a": ALPHA, "a*": ALPHA_STAR, "g": GAMMA, "g*": GAMMA_STAR}
