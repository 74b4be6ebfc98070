"""Benchmark the compiled integrator kernel against its pure-Python twin.

Usage: python benchmarks/bench_backends.py [n_compiled_steps]

Both kernels run the same locked-laser workload; the twin kernels are
bit-identical in output, so this measures speed only.
"""
import sys
import time

import numpy as np

from vcseledge.backend import available_backends, get_kernel
from vcseledge.params import SfmParams


def run(kern, n_steps, seed=1, noise=False):
    pvec = SfmParams().as_vector()
    env = np.linspace(1.8, 1.6, 2000)
    state = np.array([0.4, -0.1, 0.01, 0.02, 3.0, 0.001])
    nrec = (n_steps + 99) // 100
    px, py, nt = (np.empty(nrec) for _ in range(3))
    t0 = time.perf_counter()
    kern(state, 0.0, 5e-5, n_steps, env, 0.0, 1e-3, pvec, noise, seed,
         1e-6, 100, px, py, nt)
    return time.perf_counter() - t0


def main():
    n_compiled = int(sys.argv[1]) if len(sys.argv) > 1 else 4_000_000
    backends = available_backends()
    print(f"available backends: {backends}")
    results = {}
    for name in backends:
        kern = get_kernel(name)
        n = n_compiled if name == "compiled" else max(n_compiled // 200, 20_000)
        run(kern, 1000)  # warmup
        for noise in (False, True):
            dt = run(kern, n, noise=noise)
            label = f"{name}{'+noise' if noise else ''}"
            results[label] = dt / n * 1e9
            print(f"{label:16s}: {n:>9d} steps in {dt:7.3f} s "
                  f"-> {results[label]:8.1f} ns/step")
    if "compiled" in backends:
        ratio = results["python"] / results["compiled"]
        print(f"\ncompiled speedup: {ratio:.0f}x "
              f"(one 3 ns pixel window at dt=0.05 ps is 60k steps: "
              f"{results['compiled'] * 60e3 / 1e6:.1f} ms compiled, "
              f"{results['python'] * 60e3 / 1e6:.0f} ms pure Python)")


if __name__ == "__main__":
    main()
