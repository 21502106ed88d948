"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]

Both backends run on identical integer inputs and their results are
compared before any timing is reported.
"""
import argparse
import random
import timeit

from liecheck import _kernels_py
from liecheck.roots import build_root_system

try:
    from liecheck import _kernels as compiled
except ImportError:
    compiled = None


def workloads(rng):
    e8 = build_root_system("E8")
    e7 = build_root_system("E7")
    f4 = build_root_system("F4")
    d6 = build_root_system("D6")
    den = 6
    ints = [tuple(int(x * den) for x in r) for r in e8.roots]
    seed = [i for i, r in enumerate(e8.roots) if e8.inner(r, e8.highest_root) == 1]
    labels = [[rng.randint(-9, 9) for _ in range(8)] for _ in range(200)]
    yield "to_dominant E8 x200", lambda k: [k.to_dominant(v, e8.cartan) for v in labels]
    yield "orbit F4 regular", lambda k: k.orbit([1, 2, 3, 4], f4.cartan, 10 ** 6)
    yield "orbit D6 regular", lambda k: k.orbit([1, 1, 1, 1, 1, 1], d6.cartan, 10 ** 6)
    yield "orbit E7 fundamental", lambda k: k.orbit([0, 0, 0, 0, 0, 1, 0], e7.cartan, 10 ** 6)
    yield "additive_closure E8", lambda k: k.additive_closure(ints, seed)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if compiled is None:
        print("compiled kernels not built; run `pip install -e . --no-build-isolation`")
        return
    print(f"{'workload':<24} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, job in workloads(random.Random(0)):
        a, b = job(_kernels_py), job(compiled)
        assert (a == b) if name.startswith("to_dominant") else sorted(a) == sorted(b), name
        tp = min(timeit.repeat(lambda: job(_kernels_py), number=1, repeat=args.repeat))
        tc = min(timeit.repeat(lambda: job(compiled), number=1, repeat=args.repeat))
        print(f"{name:<24} {tp:>10.4f} {tc:>10.4f} {tp / tc:>7.1f}x")


if __name__ == "__main__":
    main()
