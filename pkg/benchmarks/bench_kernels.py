"""Time the compiled and pure-Python kernels on the same inputs.

    python3 benchmarks/bench_kernels.py [--d 3 5 7] [--repeat 5]

Prints one line per (kernel, d, backend) with the best wall time and the
max deviation between backends.
"""
import argparse
import timeit

import numpy as np

from hwpkit import _backend


def cases(d, rng):
    t1 = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    t2 = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    c1 = rng.normal(size=(2, d, d)) + 1j * rng.normal(size=(2, d, d))
    c2 = rng.normal(size=(2, d, d)) + 1j * rng.normal(size=(2, d, d))
    enc = _backend.available()[0].encode
    gens = [enc(1, 0, 0, 0, d), enc(0, 1, 0, 0, d), enc(0, 0, 0, 1, d)]
    return {
        "ww_fourier": lambda k: k.ww_fourier(t1, 1, d),
        "weyl_convolution": lambda k: k.weyl_convolution(t1, t2, d),
        "moyal_star": lambda k: k.moyal_star(t1, t2, d),
        "unified_convolution": lambda k: k.unified_convolution(c1, c2, d),
        "closure": lambda k: k.closure(gens, d),
        "commutator_set": lambda k: k.commutator_set(
            np.arange(2 * d ** 3, dtype=np.int64), np.arange(2 * d ** 3, dtype=np.int64), d),
    }


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--d", type=int, nargs="+", default=[3, 5, 7])
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args()
    backends = _backend.available()
    if len(backends) < 2:
        print("compiled backend not built; only the pure-Python kernels are available")
    rng = np.random.default_rng(0)
    for d in args.d:
        for name, fn in cases(d, rng).items():
            outs = {}
            for k in backends:
                number = 1 if name == "commutator_set" and d > 5 else 3
                best = min(timeit.repeat(lambda: fn(k), number=number, repeat=args.repeat)) / number
                outs[k.BACKEND] = (best, np.asarray(fn(k)))
            ref = outs[backends[0].BACKEND][1]
            dev = max(float(np.max(np.abs(o[1] - ref))) for o in outs.values())
            times = "  ".join(f"{b}={t * 1e3:9.3f} ms" for b, (t, _) in outs.items())
            speed = ""
            if "cython" in outs and "python" in outs:
                speed = f"  speedup x{outs['python'][0] / outs['cython'][0]:.1f}"
            print(f"{name:20s} d={d:2d}  {times}{speed}  max|diff|={dev:.1e}")


if __name__ == "__main__":
    main()
