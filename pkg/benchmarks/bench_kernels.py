"""Time the verifier with the compiled and the pure-Python kernels.

    python benchmarks/bench_kernels.py [--radii 6 12 20] [--repeat 3]
"""

import argparse
import time

from hexid import kernels
from hexid.code import make_params
from hexid.verifier import verify


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - start)
    return min(times), result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--radii", type=int, nargs="+", default=[6, 12, 16, 20])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = ["python"]
    try:
        kernels.get_backend("cython")
        backends.insert(0, "cython")
    except ImportError:
        print("compiled kernels not built; timing the Python fallback only")

    print(f"{'r':>3} {'pairs':>10} " + " ".join(f"{b:>10}" for b in backends) + "   speedup")
    for r in args.radii:
        p = make_params(r)
        row = {}
        pairs = None
        for b in backends:
            row[b], rep = best_of(lambda: verify(p, backend=b), args.repeat)
            assert rep.valid, f"r={r} failed verification with backend {b}"
            pairs = rep.pairs_checked
        speedup = row["python"] / row["cython"] if "cython" in row else float("nan")
        cells = " ".join(f"{row[b]:>9.3f}s" for b in backends)
        print(f"{r:>3} {pairs:>10} {cells}   {speedup:6.1f}x")


if __name__ == "__main__":
    main()
