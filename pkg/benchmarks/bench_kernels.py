"""Compare the compiled and pure-Python log-gamma / digamma kernels.

    python benchmarks/bench_kernels.py [--n 200000] [--repeat 5]

Both backends are imported directly, so the script works whatever backend the
package picked at import. It also reports the largest disagreement between
the two.
"""

import argparse
import timeit

import numpy as np

from laplace_identities import _kernels_py

try:
    from laplace_identities import _kernels
except ImportError:
    _kernels = None


def sample(n, seed=0):
    rng = np.random.default_rng(seed)
    re = rng.uniform(-20.0, 40.0, n)
    im = rng.uniform(-30.0, 30.0, n)
    # keep clear of the poles on the non-positive real axis
    im = np.where(np.abs(im) < 1e-3, 1e-3, im)
    return re + 1j * im


def best_of(fn, z, repeat):
    return min(timeit.repeat(lambda: fn(z), number=1, repeat=repeat))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=200_000)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    z = sample(args.n)
    print(f"{args.n} complex points, best of {args.repeat}")
    if _kernels is None:
        print("compiled backend not built; timing the Python backend only")
    for name in ("lgamma", "digamma"):
        py = getattr(_kernels_py, name)
        t_py = best_of(py, z, args.repeat)
        line = f"{name:8s} python {t_py * 1e3:9.2f} ms"
        if _kernels is not None:
            cy = getattr(_kernels, name)
            t_cy = best_of(cy, z, args.repeat)
            diff = np.max(np.abs(cy(z) - py(z)) / np.maximum(1.0, np.abs(py(z))))
            line += f"   cython {t_cy * 1e3:9.2f} ms   speedup {t_py / t_cy:5.1f}x   max diff {diff:.1e}"
        print(line)


if __name__ == "__main__":
    main()
