"""Closed-form product kernels against the rewriting system, and compiled vs Python."""

import os
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qspaces import _kernels_py, kernels
from qspaces.disk import DiskElement, DiskMonomial, disk_normalize
from qspaces.scalars import QScalar
from qspaces.suq2 import SUq2Element, SUq2Monomial, normalize

try:
    from qspaces import _kernels as compiled
except ImportError:  # pragma: no cover - extension not built
    compiled = None

needs_ext = pytest.mark.skipif(compiled is None, reason="compiled kernel not built")

su_mono = st.tuples(st.integers(-4, 4), st.integers(0, 3), st.integers(0, 3))
disk_mono = st.tuples(st.integers(0, 4), st.integers(-4, 4))


def _as_su(out):
    return SUq2Element({SUq2Monomial(*m): QScalar.from_int_poly(p) for m, p in out})


def _as_disk(out):
    return DiskElement({DiskMonomial(*m): QScalar.from_int_poly(p) for m, p in out})


@given(su_mono, su_mono)
def test_su_product_matches_rewriting(m1, m2):
    word = SUq2Monomial(*m1).word + SUq2Monomial(*m2).word
    assert _as_su(_kernels_py.su_monomial_product(*m1, *m2)) == normalize(word)


@given(disk_mono, disk_mono)
def test_disk_product_matches_rewriting(m1, m2):
    word = DiskMonomial(*m1).word + DiskMonomial(*m2).word
    assert _as_disk(_kernels_py.disk_monomial_product(*m1, *m2)) == disk_normalize(word)


@given(st.integers(-6, 6), st.integers(-6, 6))
def test_contraction_length(i, i2):
    i3, exps = _kernels_py.contraction(i, i2)
    assert i3 == i + i2
    opposite = (i > 0 > i2) or (i < 0 < i2)
    assert len(exps) == (min(abs(i), abs(i2)) if opposite else 0)


def test_factor_product_small():
    # (1 - q^2 c)(1 - q^4 c) = 1 - (q^2 + q^4) c + q^6 c^2
    assert _kernels_py.factor_product([2, 4]) == [{0: 1}, {2: -1, 4: -1}, {6: 1}]


@needs_ext
@given(su_mono, su_mono)
def test_compiled_su_agrees(m1, m2):
    assert compiled.su_monomial_product(*m1, *m2) == _kernels_py.su_monomial_product(*m1, *m2)


@needs_ext
@given(disk_mono, disk_mono)
def test_compiled_disk_agrees(m1, m2):
    assert compiled.disk_monomial_product(*m1, *m2) == _kernels_py.disk_monomial_product(*m1, *m2)
    assert compiled.disk_pair_exponent(*m1, *m2) == _kernels_py.disk_pair_exponent(*m1, *m2)


@needs_ext
@settings(max_examples=20)
@given(st.lists(disk_mono, min_size=1, max_size=12, unique=True), st.data())
def test_compiled_pair_exponents_agree(monos, data):
    start = data.draw(st.integers(0, len(monos)))
    stop = data.draw(st.integers(start, len(monos)))
    assert compiled.pair_exponents(monos, start, stop) == _kernels_py.pair_exponents(monos, start, stop)


@needs_ext
def test_compiled_falls_back_on_huge_input():
    big = 1 << 40
    assert compiled.disk_monomial_product(big, 1, 1, 0) == _kernels_py.disk_monomial_product(big, 1, 1, 0)
    assert compiled.su_monomial_product(70, 0, 0, -70, 1, 0) == _kernels_py.su_monomial_product(
        70, 0, 0, -70, 1, 0
    )


def test_status_constants_shared():
    assert (kernels.STATUS_NOT_PROPORTIONAL, kernels.STATUS_POWER, kernels.STATUS_OTHER) == (0, 1, 2)


def test_env_forces_python_fallback():
    env = dict(os.environ, QSPACES_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from qspaces import kernels; print(kernels.IMPLEMENTATION)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"
