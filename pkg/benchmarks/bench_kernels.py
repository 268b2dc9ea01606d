"""Time the compiled kernels against the numpy fallback.

    python benchmarks/bench_kernels.py [--images N] [--repeat R]
"""

import argparse
import time

import numpy as np

from memnet import _fallback
from memnet.noise import stream_seeds

try:
    from memnet import _kernels
except ImportError:
    _kernels = None


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def accumulate(k, maps, labels):
    areas = np.zeros((10, maps.shape[1]))
    k.accumulate_areas(maps, labels, areas)
    return areas


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--images", type=int, default=10_000)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    rng = np.random.default_rng(0)
    images = rng.integers(0, 256, (args.images, 28, 28), dtype=np.uint8)
    seeds = stream_seeds(0, np.arange(args.images))
    maps = rng.random((args.images, 676))
    labels = rng.integers(0, 10, args.images).astype(np.int64)

    cases = {
        "noise_images": lambda k: k.noise_images(images, seeds, 100.0),
        "window_totals": lambda k: k.window_totals(images, 30),
        "accumulate_areas": lambda k: accumulate(k, maps, labels),
    }
    backends = [("python", _fallback)] + ([("cython", _kernels)] if _kernels else [])
    print(f"{args.images} images, best of {args.repeat}")
    print(f"{'kernel':18} " + " ".join(f"{name:>10}" for name, _ in backends) + "   speedup  identical")
    for label, case in cases.items():
        results = [best_of(lambda: case(k), args.repeat) for _, k in backends]
        row = f"{label:18} " + " ".join(f"{t * 1e3:8.1f}ms" for t, _ in results)
        if len(results) == 2:
            (tp, outp), (tc, outc) = results
            same = np.array_equal(outp, outc)
            row += f"   {tp / tc:6.1f}x  {same}"
        print(row)


if __name__ == "__main__":
    main()
