"""Timing comparison of the compiled kernels against the pure-Python
fallbacks, plus a couple of end-to-end sweeps.

Run:  python3 benchmarks/bench_kernels.py
"""
import time

from paradim import _kernels_py
from paradim import kernels


def timed(label, fn, repeat=3):
    best = min(_run(fn) for _ in range(repeat))
    print(f"{label:<44} {best * 1e3:10.2f} ms")
    return best


def _run(fn):
    t = time.perf_counter()
    fn()
    return time.perf_counter() - t


def bench_pair(label, fast, pure, work):
    tf = timed(f"{label} (compiled)", lambda: work(fast))
    tp = timed(f"{label} (pure)", lambda: work(pure))
    print(f"{'':<44} {tp / tf:9.1f}x speedup")


def kronecker_sweep(kron):
    acc = 0
    for n in range(1, 4000, 2):
        for a in range(-50, 50):
            acc += kron(a, n)
    return acc


def class_number_sweep(h):
    acc = 0
    for d in range(3, 20000):
        if -d % 4 in (0, 3):
            acc += h(-d)
    return acc


def b2_sweep(b2):
    acc = 0
    for p in range(3, 3000, 4):
        acc += b2(-p if p % 4 == 3 else -4 * p, 1)
    return acc


def main():
    if not kernels.COMPILED:
        print("warning: compiled extension unavailable, comparing pure vs pure")
    bench_pair("kronecker symbol", kernels.kronecker,
               _kernels_py.kronecker, kronecker_sweep)
    bench_pair("class number h(D)", kernels.class_number_from_disc,
               _kernels_py.class_number_from_disc, class_number_sweep)
    bench_pair("B_{2,chi} character sum", kernels.b2_character_sum,
               _kernels_py.b2_character_sum, b2_sweep)

    from paradim.arith import primes_up_to
    from paradim.compact import dim_M_signed
    from paradim.paramodular import check_bias_region

    def table_sweep():
        for p in primes_up_to(607):
            dim_M_signed(p, 1, 1)

    timed("end-to-end: weight-4 table p <= 607", table_sweep)
    timed("end-to-end: bias region p <= 300, k <= 100",
          lambda: check_bias_region(300, 100))


if __name__ == "__main__":
    main()
