"""Compare the compiled and pure-Python enumeration kernels.

Run with ``python3 benchmarks/bench_kernels.py``.  Both backends must agree
on every histogram; the script exits non-zero if they do not.
"""

from __future__ import annotations

import argparse
import sys
import timeit

from eqmotive import _pykernels

try:
    from eqmotive import _ckernels
except ImportError:  # extension not built
    _ckernels = None

CASES = [(2, 3, 2), (3, 3, 2), (2, 4, 3), (3, 2, 3), (2, 3, 5)]


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    if _ckernels is None:
        print("compiled kernels are not built; only the pure-Python timings are shown")
    print(f"{'case (n,m,p)':>14} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    status = 0
    for n, m, p in CASES:
        t_py = min(timeit.repeat(lambda: _pykernels.profile_histogram(n, m, p), number=1, repeat=args.repeat))
        if _ckernels is None:
            print(f"{str((n, m, p)):>14} {t_py:10.4f} {'-':>10} {'-':>8}")
            continue
        t_c = min(timeit.repeat(lambda: _ckernels.profile_histogram(n, m, p), number=1, repeat=args.repeat))
        if _ckernels.profile_histogram(n, m, p) != _pykernels.profile_histogram(n, m, p):
            print(f"backends disagree on {(n, m, p)}")
            status = 1
        print(f"{str((n, m, p)):>14} {t_py:10.4f} {t_c:10.4f} {t_py / t_c:8.1f}x")
    return status


if __name__ == "__main__":
    sys.exit(main())
