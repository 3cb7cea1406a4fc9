import itertools
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from qspaces.lie import (
    BUILTIN_TYPES,
    LieDataError,
    RootDatum,
    SubgroupData,
    cartan_matrix,
    distinguish,
    invariant_exponent,
    is_two_cell,
    n_i,
    pairing_with_simple_root,
    parse_root_datum,
    parse_subgroup,
    symmetrizers,
)
from qspaces.spectrum import commutator_spectrum_search
from qspaces.suq2 import INF


def brute_symmetrizers(A):
    """Smallest d in {1,2,3}^r (lexicographic after sorting by max) with diag(d) A symmetric."""
    A = np.array(A)
    r = len(A)
    hits = [
        d
        for d in itertools.product((1, 2, 3), repeat=r)
        if np.array_equal(np.diag(d) @ A, (np.diag(d) @ A).T) and math.gcd(*d) == 1
    ]
    return min(hits, key=lambda d: (sum(d), d)) if hits else None


def su2(L):
    return SubgroupData(frozenset(), L), RootDatum.from_type("A1")


@pytest.mark.parametrize("label", BUILTIN_TYPES)
def test_builtin_symmetric(label):
    A = np.array(cartan_matrix(label))
    d = symmetrizers(A.tolist())
    assert np.array_equal(np.diag(d) @ A, (np.diag(d) @ A).T)
    assert min(d) == 1 and set(d) <= {1, 2, 3}


@pytest.mark.parametrize("label", ["A2", "B2", "B3", "C3", "G2", "A1xB2"])
def test_symmetrizers_match_brute_force(label):
    A = cartan_matrix(label)
    assert symmetrizers(A) == brute_symmetrizers(A)


def test_symmetrizer_examples():
    assert symmetrizers(cartan_matrix("A2")) == (1, 1)
    assert symmetrizers(cartan_matrix("B2")) == (2, 1)
    assert 3 in symmetrizers(cartan_matrix("G2"))
    # a matrix written in the transposed convention has its long root second
    assert symmetrizers([[2, -2], [-1, 2]]) == brute_symmetrizers([[2, -2], [-1, 2]]) == (1, 2)


@pytest.mark.parametrize(
    "A",
    [
        [[2, 1], [1, 2]],
        [[2, -1], [0, 2]],
        [[3, -1], [-1, 2]],
        [[2, -2], [-2, 2]],  # affine A1
        [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]],  # affine A2
        [[2, -1], [-1, 2], [0, 0]],
    ],
)
def test_invalid_cartan(A):
    with pytest.raises(LieDataError):
        symmetrizers(A)


def test_pairing_examples():
    assert pairing_with_simple_root({1: 1}, 1, (2, 1)) == 2
    assert pairing_with_simple_root({1: 0}, 1, (1,)) == 0
    assert pairing_with_simple_root({1: 3, 2: 5}, 1, (2, 1)) == 6
    with pytest.raises(LieDataError):
        pairing_with_simple_root({2: 1}, 1, (1, 1))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_n_i_su2(n):
    assert n_i(*su2(((n,),)), 1) == n


def test_n_i_examples():
    assert n_i(*su2(((0,),)), 1) == INF
    assert n_i(*su2(()), 1) == INF
    assert n_i(*su2(((2,), (3,))), 1) == 1


def test_invariant_examples():
    assert invariant_exponent(*su2(((1,),))).m == 1
    inv = invariant_exponent(*su2(((0,),)))
    assert inv.n == {1: INF} and inv.m == 2
    assert invariant_exponent(*su2(((2,),))).m == 2


def test_su2_matches_spectrum_search():
    for n in (1, 2, 3, 4, 5, 6, INF):
        L = ((0,),) if n == INF else ((n,),)
        D = 6 if n == INF else 2 * n + 2
        assert invariant_exponent(*su2(L)).m == commutator_spectrum_search(n, D).min_positive


def test_b2_full_lattice():
    datum = RootDatum.from_type("B2")
    inv = invariant_exponent(SubgroupData(frozenset(), ((1, 0), (0, 1))), datum)
    # d = (2, 1) from the brute-force oracle; L = P gives n_i = d_i
    d = brute_symmetrizers(cartan_matrix("B2"))
    assert d == datum.d == (2, 1)
    assert inv.n == {1: 2, 2: 1}
    c = {i: 1 if ni % 2 else 2 for i, ni in inv.n.items()}
    assert inv.m == min(d[i - 1] * c[i] for i in c) == 1


def test_levi_part():
    datum = RootDatum.from_type("B2")
    inv = invariant_exponent(SubgroupData(frozenset({2}), ((1,),)), datum)
    assert inv.n == {1: 2} and inv.m == 4
    inv = invariant_exponent(SubgroupData(frozenset({1}), ((0,),)), datum)
    assert inv.n == {2: INF} and inv.m == 2


def _unimodular(rng, k):
    M = np.eye(k, dtype=int)
    for _ in range(6):
        i, j = rng.sample(range(k), 2) if k > 1 else (0, 0)
        if i != j:
            M[i] += rng.choice([-2, -1, 1, 2]) * M[j]
        if rng.random() < 0.3:
            M[i] *= -1
    return M


@given(
    st.lists(st.tuples(st.integers(-6, 6), st.integers(-6, 6)), min_size=1, max_size=3),
    st.randoms(use_true_random=False),
)
def test_n_i_invariant_under_recombination(gens, rng):
    datum = RootDatum.from_type("B2")
    G = np.array(gens)
    M = _unimodular(rng, len(gens))
    assert round(abs(np.linalg.det(M))) == 1
    new = tuple(tuple(int(x) for x in row) for row in M @ G)
    a, b = SubgroupData(frozenset(), tuple(gens)), SubgroupData(frozenset(), new)
    for i in (1, 2):
        assert n_i(a, datum, i) == n_i(b, datum, i)


def test_is_two_cell():
    sub = SubgroupData(frozenset({2}), ((1,),))
    assert is_two_cell(1, 1, sub, rank=2)
    assert not is_two_cell(1, 2, sub, rank=2)
    assert is_two_cell(1, 1)
    assert not is_two_cell(0)
    assert not is_two_cell(2)
    assert not is_two_cell(5, 1)
    with pytest.raises(ValueError):
        is_two_cell(1)
    with pytest.raises(ValueError):
        is_two_cell(-1)


def test_distinguish_examples():
    sub, datum = su2(((1,),))
    v = distinguish(0.3, 0.5, sub, datum)
    assert not v.isomorphic and str(v).startswith("non-isomorphic")
    assert v.p_power != v.q_power
    assert distinguish(0.7, 0.7, sub, datum).isomorphic
    assert not distinguish(1, 0.5, sub, datum).isomorphic
    for bad in [(0, 0.5), (1.5, 0.5), (0.5, -1)]:
        with pytest.raises(ValueError):
            distinguish(*bad, sub, datum)


@given(st.floats(0.01, 1.0), st.floats(0.01, 1.0), st.sampled_from(["A1", "B2", "G2"]))
def test_distinguish_symmetric(p, q, label):
    datum = RootDatum.from_type(label)
    sub = SubgroupData(frozenset(), tuple(tuple(int(i == j) for j in range(datum.rank)) for i in range(datum.rank)))
    a, b = distinguish(p, q, sub, datum), distinguish(q, p, sub, datum)
    assert a.isomorphic == b.isomorphic == (p == q)
    assert a.m == b.m


def test_subgroup_validation():
    datum = RootDatum.from_type("A2")
    with pytest.raises(LieDataError):
        SubgroupData(frozenset({1, 2}), ()).validate(datum)
    with pytest.raises(LieDataError):
        SubgroupData(frozenset({3}), ()).validate(datum)
    with pytest.raises(LieDataError):
        SubgroupData(frozenset(), ((1,),)).validate(datum)
    with pytest.raises(LieDataError):
        n_i(SubgroupData(frozenset({1}), ((1,),)), datum, 1)


def test_parsers():
    assert parse_root_datum("type=A3") == RootDatum.from_type("A3")
    assert parse_root_datum("B2").d == (2, 1)
    assert parse_root_datum("cartan=[[2,-1],[-2,2]]").d == (2, 1)
    assert parse_subgroup("1,3", "(1,0);(0,2)") == SubgroupData(frozenset({1, 3}), ((1, 0), (0, 2)))
    assert parse_subgroup("", "") == SubgroupData(frozenset(), ())
    for bad in ["type=H3", "type=B1", "cartan=[[x]]", "cartan=", "A0"]:
        with pytest.raises(LieDataError):
            parse_root_datum(bad)
    with pytest.raises(LieDataError):
        parse_subgroup("a", "")
    with pytest.raises(LieDataError):
        parse_subgroup("", "1,2")
