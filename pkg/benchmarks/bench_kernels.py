"""Time the verifier kernels under both backends.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Inputs are real certificates: every factor of construct_hw(k, t, r) for a
few sizes, plus full verification.  The numba timings exclude the first
(compiling) call.
"""

import argparse
import time

import numpy as np

from hwfactor import _kernels
from hwfactor.dispatcher import construct_hw

CASES = [(2, 5, 17), (3, 10, 59), (4, 16, 100), (5, 20, 150)]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)

    backends = {"numpy": (_kernels.cycle_lengths_numpy, _kernels.edge_multiplicity_numpy)}
    if _kernels.HAVE_NUMBA:
        backends["numba"] = (_kernels.cycle_lengths_numba, _kernels.edge_multiplicity_numba)
        # warm up the jit
        e = np.array([[0, 1], [1, 2], [2, 0]], np.int64)
        _kernels.cycle_lengths_numba(e, 3)
        _kernels.edge_multiplicity_numba(e, 3)
    else:
        print("numba unavailable or disabled; timing numpy only")

    print(f"{'n':>5} {'factors':>8} {'backend':>8} {'cycles ms':>10} {'multiplicity ms':>16}")
    for k, t, r in CASES:
        cert = construct_hw(k, t, r)
        n = cert.n
        factor_edges = [np.array(f.edges(), np.int64) for f in cert.factors]
        all_edges = np.array(cert.all_edges(), np.int64)
        results = {}
        for name, (cyc, mult) in backends.items():
            tc = best_of(lambda: [cyc(e, n) for e in factor_edges], args.repeat)
            tm = best_of(lambda: mult(all_edges, n), args.repeat)
            results[name] = ([list(cyc(e, n)[0]) for e in factor_edges], mult(all_edges, n))
            print(f"{n:>5} {len(factor_edges):>8} {name:>8} {tc * 1e3:>10.2f} {tm * 1e3:>16.2f}")
        if len(results) == 2:
            a, b = results.values()
            assert a[0] == b[0] and np.array_equal(a[1], b[1]), "backends disagree"


if __name__ == "__main__":
    main()
