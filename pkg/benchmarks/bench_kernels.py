"""Compare the compiled and pure-Python kernels on fixed workloads.

Usage::

    python3 benchmarks/bench_kernels.py [--repeat 3] [--seed 0]

Each workload is run on both backends, results are checked for equality,
and the best wall time of ``--repeat`` runs is reported.
"""

from __future__ import annotations

import argparse
import random
import sys
import time
from collections.abc import Callable
from itertools import combinations

from stabkit._kernels import _pykernels

try:
    from stabkit._kernels import _ckernels
except ImportError:  # extension not built
    _ckernels = None


def random_adj(n: int, p: float, rng: random.Random) -> list[int]:
    adj = [0] * n
    for i, j in combinations(range(n), 2):
        if rng.random() < p:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return adj


def edges_of(adj: list[int]) -> list[tuple[int, int]]:
    return [(i, j) for i in range(len(adj)) for j in range(i + 1, len(adj)) if adj[i] >> j & 1]


def workloads(seed: int) -> dict[str, Callable[[object], object]]:
    rng = random.Random(seed)
    graphs40 = [random_adj(40, 0.1, rng) for _ in range(200)]
    graphs13 = [random_adj(13, 0.3, rng) for _ in range(300)]
    adj18 = random_adj(18, 0.25, rng)
    adj14 = random_adj(14, 0.3, rng)
    table14 = _pykernels.odd_cover_table(14, adj14)
    # five 4-cycles glued in a chain at cut vertices: one contraction per cycle is needed
    block = []
    for c in range(5):
        a = 3 * c
        block += [(a, a + 1), (a + 1, a + 2), (a + 2, a + 3), (a, a + 3)]
    block_n = 16

    return {
        "max_matching n=40 x200": lambda k: [k.matching_size(40, a) for a in graphs40],
        "factor_critical n=13 x300": lambda k: [k.factor_critical(13, a) for a in graphs13],
        "odd_cover_table n=18": lambda k: bytes(k.odd_cover_table(18, adj18)),
        "dominant_sets n=14 all Z=single": lambda k: [k.dominant_sets(14, adj14, 1 << v, table14) for v in range(14)],
        "min_contraction found at size 5": lambda k: k.min_contraction(
            block_n, block, [], list(range(len(block))), 5
        ),
        "min_contraction exhausted at size 4": lambda k: k.min_contraction(
            block_n, block, [], list(range(len(block))), 4
        ),
    }


def best_time(fn: Callable[[], object], repeat: int) -> tuple[float, object]:
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)
    if _ckernels is None:
        print("compiled kernels are not built; only the Python backend is available")
    print(f"{'workload':36} {'python [s]':>11} {'cython [s]':>11} {'speedup':>8}")
    ok = True
    for name, work in workloads(args.seed).items():
        t_py, r_py = best_time(lambda: work(_pykernels), args.repeat)
        if _ckernels is None:
            print(f"{name:36} {t_py:11.4f} {'-':>11} {'-':>8}")
            continue
        t_c, r_c = best_time(lambda: work(_ckernels), args.repeat)
        same = r_py == r_c
        ok &= same
        flag = "" if same else "  RESULTS DIFFER"
        print(f"{name:36} {t_py:11.4f} {t_c:11.4f} {t_py / t_c:8.1f}x{flag}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
