"""Selects the compiled kernel when it is importable, else the Python one.

Set ``QSPACES_PURE_PYTHON=1`` to force the fallback.
"""

import os

if os.environ.get("QSPACES_PURE_PYTHON", "") not in ("", "0"):
    from qspaces import _kernels_py as impl
else:
    try:
        from qspaces import _kernels as impl
    except ImportError:
        from qspaces import _kernels_py as impl

IMPLEMENTATION = impl.IMPLEMENTATION
STATUS_NOT_PROPORTIONAL = impl.STATUS_NOT_PROPORTIONAL
STATUS_POWER = impl.STATUS_POWER
STATUS_OTHER = impl.STATUS_OTHER

contraction = impl.contraction
factor_product = impl.factor_product
su_monomial_product = impl.su_monomial_product
disk_monomial_product = impl.disk_monomial_product
disk_pair_exponent = impl.disk_pair_exponent
pair_exponents = impl.pair_exponents
