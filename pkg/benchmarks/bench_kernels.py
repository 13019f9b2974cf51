"""Compare the compiled closure kernel with the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Each case closes the generators of one spacetime diagram; both backends must
return the same member set.
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from duclab.clifford import spacetime
from duclab.kernels import backend_modules
from duclab.schedules import preset

CASES = [("a", 5), ("a", 6), ("a", 7), ("e", 7), ("c", 7), ("a", 9)]


def _time(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    mods = backend_modules()
    names = sorted(mods)
    print("case\tmembers\t" + "\t".join(f"{n}_s" for n in names) + "\tspeedup")
    for name, k in CASES:
        keys = spacetime(k, preset(name, k)).keys()
        times, sets = {}, []
        for n in names:
            t, (members, complete) = _time(lambda m=mods[n]: m.closure(keys, k, 4**k), args.repeat)
            assert complete
            times[n] = t
            sets.append(np.sort(np.asarray(members, dtype=np.uint64)))
        assert all(np.array_equal(s, sets[0]) for s in sets), "backends disagree"
        speed = times["python"] / times["cython"] if "cython" in times else float("nan")
        cells = "\t".join(f"{times[n]:.4f}" for n in names)
        print(f"({name}) k={k}\t{len(sets[0])}\t{cells}\t{speed:.1f}x")


if __name__ == "__main__":
    main()
