"""Time every hot kernel under numba and under plain numpy.

Usage: python benchmarks/bench_kernels.py [--repeats R] [--json out.json]

Both implementations are imported directly, so the LAST_NUMBA switch does
not matter here. Sizes mirror the MNIST runs: 784-dim samples, 100 atoms,
minibatches of 200 for the DCA inner step and of 10 for the SGD baseline.
"""

import argparse
import json
import statistics
import time

import numpy as np

from lastsc._kernels import numba_kernels, numpy_kernels


def _time(fn, repeats):
    fn()  # warm-up, triggers compilation
    runs = []
    for _ in range(repeats):
        tic = time.perf_counter()
        fn()
        runs.append(time.perf_counter() - tic)
    return statistics.median(runs)


def cases(rng):
    n, N, B = 784, 100, 200
    X = rng.standard_normal((B, n)) / np.sqrt(n)
    U = rng.standard_normal((n, N)) / np.sqrt(n)
    Z = X @ U - 0.05
    s = np.where(np.arange(N) < 10, 1.0, -1.0)
    y = np.where(rng.random(B) < 0.1, 1.0, -1.0)
    w = rng.standard_normal(N)
    C = rng.standard_normal((50, n))
    Xs = rng.standard_normal((2000, n))
    ys = np.where(rng.random(2000) < 0.5, 1.0, -1.0)
    batches = rng.integers(2000, size=(500, 10))

    def sgd(mod):
        D = np.ascontiguousarray(U.copy())
        ww = w.copy() * 0.01
        return mod.sgd_run(Xs, ys, D, ww, batches, 0.01, 1.0, 100.0, 1e-4)

    return {
        "softplus_pair (200x100)": lambda mod: mod.softplus_pair(Z, 100.0),
        "hinge_branch (200x100)": lambda mod: mod.hinge_branch(Z, s, y, 100.0),
        "threshold_dot (200x100)": lambda mod: mod.threshold_dot(Z, w, 0.05),
        "nearest_rows (2000 vs 50, n=784)": lambda mod: mod.nearest_rows(Xs, C),
        "sgd_run (500 steps, batch 10)": sgd,
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=20)
    parser.add_argument("--json", help="write results here as JSON")
    args = parser.parse_args()

    rows = []
    print(f"{'kernel':36s} {'numpy [ms]':>11s} {'numba [ms]':>11s} {'speedup':>8s}")
    for name, call in cases(np.random.default_rng(0)).items():
        t_np = _time(lambda: call(numpy_kernels), args.repeats)
        t_nb = _time(lambda: call(numba_kernels), args.repeats)
        rows.append({"kernel": name, "numpy_s": t_np, "numba_s": t_nb, "speedup": t_np / t_nb})
        print(f"{name:36s} {1e3 * t_np:11.3f} {1e3 * t_nb:11.3f} {t_np / t_nb:8.2f}")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump({"repeats": args.repeats, "rows": rows}, fh, indent=2)


if __name__ == "__main__":
    main()
