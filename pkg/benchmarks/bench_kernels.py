"""Benchmark the compiled kernels against the pure-Python fallback.

Times the two hot paths: the truncated q-product scalar loop and the
transfer-matrix contraction.  Run after building the extension:

    python benchmarks/bench_kernels.py
"""
import time

from ellgt import _kernels
from ellgt._kernels import _ref
from ellgt.special import EllipticParams
from ellgt.tensor import Lattice


def time_fn(fn, repeat):
    t0 = time.perf_counter()
    for _ in range(repeat):
        fn()
    return (time.perf_counter() - t0) / repeat


def bench_qp(impl, repeat=20000):
    return time_fn(lambda: impl.qp1(0.5 + 0.1j, 0.1, 30, 1e-13), repeat)


def bench_qp2(impl, repeat=2000):
    return time_fn(lambda: impl.qp2(0.5, 0.1, 0.3, 30, 1e-13), repeat)


def bench_t_matrix(impl, repeat=30):
    params = EllipticParams()
    lat = Lattice(params, 3, 4, (0.83, 1.71, 0.42, 2.23), (0.37, 0.11, 0.0))
    table = lat._site_table(0.77, (0, 0, 0))
    args = (3, 4, 0, 1, lat._digits, table, lat._idx_map, lat._radix_pows)
    return time_fn(lambda: impl.build_t_matrix(*args), repeat)


def main():
    rows = []
    impls = [("python", _ref)]
    if _kernels.BACKEND == "cython":
        impls.append(("cython", _kernels))
    else:
        print("compiled backend not available; timing the fallback only")
    for label, bench in (("qp1 (30 terms)", bench_qp),
                         ("qp2 (30x30 grid)", bench_qp2),
                         ("t_matrix N=3 n=4", bench_t_matrix)):
        times = {name: bench(impl) for name, impl in impls}
        rows.append((label, times))
    print(f"{'kernel':<22}" + "".join(f"{name:>14}" for name, _ in impls)
          + ("       speedup" if len(impls) == 2 else ""))
    for label, times in rows:
        line = f"{label:<22}"
        for name, _ in impls:
            line += f"{times[name] * 1e6:>12.1f}us"
        if len(impls) == 2:
            line += f"{times['python'] / times['cython']:>12.1f}x"
        print(line)


if __name__ == "__main__":
    main()
