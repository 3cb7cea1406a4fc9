"""Compiled vs pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--degree 16] [--repeat 3]

Times the all-pairs exponent scan used by the spectrum search and a batch of
SU_q(2) monomial products.  Both kernels must return identical results.
"""

import argparse
import random
import time

from qspaces import _kernels_py
from qspaces.spectrum import tn_disk_monomials

try:
    from qspaces import _kernels
except ImportError:
    _kernels = None


def best_of(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--degree", type=int, default=16)
    ap.add_argument("--n", default="3")
    ap.add_argument("--products", type=int, default=20000)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    impls = [("python", _kernels_py)]
    if _kernels is None:
        print("compiled kernel not available; timing the Python kernel only")
    else:
        impls.append(("cython", _kernels))

    monos = [tuple(m) for m in tn_disk_monomials(args.n, args.degree)]
    rng = random.Random(0)
    pairs = [
        tuple(rng.randint(lo, hi) for lo, hi in ((-6, 6), (0, 4), (0, 4), (-6, 6), (0, 4), (0, 4)))
        for _ in range(args.products)
    ]

    print(f"pair scan: n={args.n} D={args.degree}, {len(monos)} monomials, {len(monos) ** 2} pairs")
    print(f"products: {len(pairs)} random SU_q(2) monomial pairs")
    print(f"{'kernel':<8} {'pair scan (s)':>14} {'products (s)':>14}")
    results = {}
    for name, mod in impls:
        t_scan, scan = best_of(lambda: mod.pair_exponents(monos), args.repeat)
        t_prod, prod = best_of(lambda: [mod.su_monomial_product(*p) for p in pairs], args.repeat)
        results[name] = (t_scan, t_prod)
        if name != "python" and (scan, prod) != (ref_scan, ref_prod):
            raise SystemExit(f"{name} kernel disagrees with the Python kernel")
        if name == "python":
            ref_scan, ref_prod = scan, prod
        print(f"{name:<8} {t_scan:>14.4f} {t_prod:>14.4f}")
    if "cython" in results:
        py, cy = results["python"], results["cython"]
        print(f"speedup  {py[0] / cy[0]:>13.1f}x {py[1] / cy[1]:>13.1f}x")


if __name__ == "__main__":
    main()
