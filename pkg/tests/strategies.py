"""Hypothesis strategies shared by the test modules."""

from fractions import Fraction

from hypothesis import strategies as st

from qspaces.disk import DiskElement, DiskMonomial
from qspaces.scalars import GaussianRational, QScalar
from qspaces.suq2 import SUq2Element, SUq2Monomial

small_int = st.integers(-4, 4)
fractions = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))
gaussian = st.builds(GaussianRational, fractions, fractions)
nonzero_gaussian = gaussian.filter(bool)

qscalars = st.dictionaries(st.integers(-4, 4), gaussian, max_size=3).map(QScalar)
nonzero_qscalars = qscalars.filter(bool)

su_monomials = st.builds(SUq2Monomial, st.integers(-3, 3), st.integers(0, 2), st.integers(0, 2))
su_elements = st.dictionaries(su_monomials, nonzero_qscalars, max_size=3).map(SUq2Element)

disk_monomials = st.builds(DiskMonomial, st.integers(0, 3), st.integers(-3, 3))
disk_elements = st.dictionaries(disk_monomials, nonzero_qscalars, max_size=3).map(DiskElement)

su_words = st.text(alphabet="aAgG", max_size=10)
disk_words = st.text(alphabet="yzZ", max_size=10)
