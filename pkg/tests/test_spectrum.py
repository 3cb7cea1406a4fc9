import pytest

from qspaces.disk import DiskElement, DiskMonomial, brute_force_commutation_oracle, disk_tn_member
from qspaces.scalars import QScalar
from qspaces.spectrum import SpectrumReport, commutator_spectrum_search, tn_disk_monomials
from qspaces.suq2 import INF


@pytest.fixture(scope="module")
def reports():
    out = {}
    for n in (1, 2, 3, 4, INF):
        D = 6 if n == INF else 2 * n + 2
        out[n] = commutator_spectrum_search(n, D)
    return out


def test_min_positive(reports):
    assert {n: r.min_positive for n, r in reports.items()} == {1: 1, 2: 2, 3: 1, 4: 2, INF: 2}


@pytest.mark.parametrize("n", [2, 4, INF])
def test_even_parity(reports, n):
    assert all(m % 2 == 0 for m in reports[n].closed_under_negation())


def test_witnesses_verified(reports):
    for r in reports.values():
        assert not r.flagged
        for m, (a, b) in r.witnesses.items():
            assert disk_tn_member(a, r.n) and disk_tn_member(b, r.n)
            omega = brute_force_commutation_oracle(DiskElement.monomial(a), DiskElement.monomial(b))
            assert omega == QScalar.q(m)


def test_exponents_symmetric(reports):
    for r in reports.values():
        assert set(r.exponents_found) == {-m for m in r.exponents_found}


def test_power_closure(reports):
    # a b = q^m b a gives a^t b = q^(tm) b a^t; check against the search when a^t is in range
    r = reports[3]
    for m, (a, b) in r.witnesses.items():
        for t in (2, 3):
            at = DiskElement.monomial(a) ** t
            if len(at) != 1:
                continue
            (mono,) = at.terms
            if mono.degree <= r.degree_bound and b.degree <= r.degree_bound:
                assert t * m in r.exponents_found


def test_monomial_listing():
    monos = tn_disk_monomials(INF, 2)
    assert monos == [DiskMonomial(0, 0), DiskMonomial(1, -1), DiskMonomial(1, 1), DiskMonomial(2, 0)]
    assert len(tn_disk_monomials(1, 3)) == sum(2 * (3 - J) + 1 for J in range(4))


def test_text_round_trip(reports):
    for r in reports.values():
        back = SpectrumReport.from_text(r.to_text())
        assert back.n == r.n and back.degree_bound == r.degree_bound
        assert back.exponents_found == r.exponents_found
        assert back.witnesses == r.witnesses
        assert back.to_text() == r.to_text()


def test_threads_deterministic():
    single = commutator_spectrum_search(5, 8)
    for threads in (2, 3, 7):
        assert commutator_spectrum_search(5, 8, threads=threads).to_text() == single.to_text()


@pytest.mark.parametrize("D", [0, -1, 2.5])
def test_bad_degree(D):
    with pytest.raises(ValueError):
        commutator_spectrum_search(2, D)


def test_bad_header():
    with pytest.raises(ValueError):
        SpectrumReport.from_text("nope\n")
