import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qspaces.rep import (
    RELATION_NAMES,
    TruncatedRep,
    _block,
    alpha_span,
    compact_ideal_check,
    edge_residual,
    faithfulness_rank,
    kernel_membership,
    relation_residuals,
    rep_matrix,
    shift_degree,
    weighted_shift_weights,
)
from qspaces.suq2 import ALPHA, ALPHA_STAR, GAMMA, GAMMA_STAR, INF, SUq2Element, SUq2Monomial
from strategies import su_elements, su_monomials

REP = TruncatedRep(48, 0.5)


def _close(x, y, tol):
    scale = max(1.0, float(np.max(np.abs(x), initial=0.0)), float(np.max(np.abs(y), initial=0.0)))
    return float(np.max(np.abs(x - y), initial=0.0)) <= tol * scale


@pytest.mark.parametrize("q0,N", [(0.3, 64), (0.5, 64), (0.9, 128), (0.7, 10)])
def test_relation_residuals(q0, N):
    rep = TruncatedRep(N, q0)
    per = relation_residuals(rep, per_relation=True)
    assert tuple(per) == RELATION_NAMES
    assert max(per.values()) < 1e-12
    assert relation_residuals(rep) == max(per.values())


@pytest.mark.parametrize("q0,N", [(0.3, 8), (0.5, 64), (0.9, 128)])
def test_edge_residual(q0, N):
    assert edge_residual(TruncatedRep(N, q0)) == pytest.approx(1 - q0 ** (2 * N), abs=1e-12)


def test_gamma_spectrum_exact():
    rep = TruncatedRep(40, 0.3)
    assert np.array_equal(np.diag(rep.gamma), -(0.3 ** np.arange(40)))
    assert np.count_nonzero(rep.gamma - np.diag(np.diag(rep.gamma))) == 0


def test_shift_degree_examples():
    assert shift_degree(ALPHA, REP) == 1
    assert shift_degree(ALPHA_STAR * ALPHA_STAR * GAMMA, REP) == -2
    assert shift_degree(GAMMA * GAMMA_STAR, REP) == 0
    assert shift_degree(SUq2Element.zero(), REP) is None
    with pytest.raises(ValueError):
        shift_degree(ALPHA + GAMMA, REP)


@given(su_monomials)
def test_shift_degree_matches_alpha_degree(m):
    assert shift_degree(SUq2Element.monomial(m), REP) == m.i


@settings(max_examples=50)
@given(su_elements, su_elements)
def test_homomorphism_on_block(a, b):
    d = alpha_span(a, b)
    lhs = _block(rep_matrix(a * b, REP), d)
    rhs = _block(rep_matrix(a, REP) @ rep_matrix(b, REP), d)
    assert _close(lhs, rhs, 1e-10)


@settings(max_examples=50)
@given(su_elements)
def test_star_is_conjugate_transpose(a):
    d = alpha_span(a)
    assert _close(_block(rep_matrix(a.star(), REP), d), _block(rep_matrix(a, REP).conj().T, d), 1e-10)


def test_kernel_membership():
    assert kernel_membership(GAMMA - GAMMA_STAR, REP)
    assert kernel_membership(ALPHA * (GAMMA - GAMMA_STAR) * ALPHA_STAR, REP)
    assert not kernel_membership(GAMMA, REP)
    assert not kernel_membership(ALPHA)


@pytest.mark.parametrize("D,N,q0", [(4, 32, 0.5), (3, 16, 0.5), (5, 32, 0.9), (0, 4, 0.5)])
def test_faithfulness(D, N, q0):
    assert faithfulness_rank(D, TruncatedRep(N, q0))


def test_faithfulness_needs_room():
    with pytest.raises(ValueError):
        faithfulness_rank(4, TruncatedRep(8, 0.5))
    with pytest.raises(ValueError):
        faithfulness_rank(-1, REP)


def test_dependent_set_is_detected():
    # the SU_q(2) monomials g and g* have the same matrix, so they are dependent
    mats = [REP.monomial_matrix(SUq2Monomial(0, 1, 0)), REP.monomial_matrix(SUq2Monomial(0, 0, 1))]
    flat = np.array([m.ravel() for m in mats])
    assert np.linalg.matrix_rank(flat, tol=1e-8) == 1


def test_weighted_shift_weights_distinct():
    mat = rep_matrix(ALPHA_STAR * GAMMA, REP)
    w = np.abs(weighted_shift_weights(mat, -1))
    assert np.all(w > 0)
    # |w_n| = q0^n sqrt(1 - q0^(2n+2)) decreases strictly from n = 1 on
    assert np.all(np.diff(w[1:]) < 0)
    assert len(set(w.tolist())) == len(w)


@pytest.mark.parametrize("n", [1, 2, 3, INF])
def test_compact_ideal_check(n):
    assert compact_ideal_check(n, TruncatedRep(32, 0.5))


@pytest.mark.parametrize("N,q0", [(0, 0.5), (8, 0.0), (8, 1.0), (8, 1.5)])
def test_bad_rep(N, q0):
    with pytest.raises(ValueError):
        TruncatedRep(N, q0)


def test_monomial_matrix_cached_readonly():
    m = REP.monomial_matrix(SUq2Monomial(1, 1, 0))
    assert m is REP.monomial_matrix(SUq2Monomial(1, 1, 0))
    with pytest.raises(ValueError):
        m[0, 0] = 1
