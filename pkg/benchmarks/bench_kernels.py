"""Timing comparison of the smoothing-enumerator backends.

Samples one rational tangle diagram per crossing count and times the
pure-Python and compiled kernels on identical inputs, verifying that
they return the same tally.  Usage:

    python benchmarks/bench_kernels.py [--min 6] [--max 14] [--seed 2026]
"""

import argparse
import random
import time

from tanglekit import _kernel_py
from tanglekit.tangles import build_rational, random_twist_vector, rational_to_diagram

try:
    from tanglekit import _kernel_c
except ImportError:
    _kernel_c = None


def sample_diagram(rng, crossings, tries=20000):
    for _ in range(tries):
        d = rational_to_diagram(build_rational(random_twist_vector(rng, max_len=9)))
        if d.crossing_count == crossings:
            return d
    raise RuntimeError(f"no diagram with {crossings} crossings sampled")


def time_once(fn, args):
    t0 = time.perf_counter()
    result = fn(*args)
    return time.perf_counter() - t0, result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--min", type=int, default=6)
    parser.add_argument("--max", type=int, default=14)
    parser.add_argument("--seed", type=int, default=2026)
    opts = parser.parse_args()

    if _kernel_c is None:
        print("compiled backend unavailable; timing the pure-Python kernel only")
    rng = random.Random(opts.seed)
    header = f"{'crossings':>9}  {'python':>10}  {'compiled':>10}  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for c in range(opts.min, opts.max + 1):
        d = sample_diagram(rng, c)
        args = (d.num_ends, d.crossings, d.arcs, [e for _, e in d.boundary])
        t_py, out_py = time_once(_kernel_py.resolve_states, args)
        if _kernel_c is None:
            print(f"{c:>9}  {t_py:>9.4f}s  {'-':>10}  {'-':>8}")
            continue
        t_c, out_c = time_once(_kernel_c.resolve_states, args)
        assert out_py == out_c, "backends disagree"
        print(f"{c:>9}  {t_py:>9.4f}s  {t_c:>9.4f}s  {t_py / t_c:>7.1f}x")


if __name__ == "__main__":
    main()
