"""Compare the numba kernels with the pure-numpy fallback.

Run with ``python3 benchmarks/bench_kernels.py``.  The script re-runs itself
once per backend, toggling ``SVRKIT_DISABLE_NUMBA``, and prints both timings.
"""
import argparse
import json
import os
import subprocess
import sys
import time

import numpy as np


def _best(fn, repeat):
    fn()  # warm-up, includes compilation or cache load
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def measure(repeat):
    from svrkit import kernels
    from svrkit.dimacs import NaeInstance
    from svrkit.geometry import Family, PathPair
    from svrkit.oracle import SearchBudget, brute_force_svr
    from svrkit.paths import algorithm_a
    from svrkit.reductions import build_ussvr_instance
    from svrkit.visibility import encode

    out = {"backend": "numba" if kernels.USE_NUMBA else "numpy"}
    for n in (50, 200, 800):
        rng = np.random.default_rng(n)
        e = encode(algorithm_a(PathPair.from_permutation(rng.permutation(n) + 1), Family.RECT))
        out[f"visibility n={n}"] = _best(lambda: kernels.visibility_pair(e.l, e.r, e.b, e.t), repeat)
        out[f"overlaps n={n}"] = _best(lambda: kernels.overlaps(e.kind, e.l, e.r, e.b, e.t), repeat)
    pair, _ = build_ussvr_instance(NaeInstance(1, ((1, 1, 1),)))
    budget = SearchBudget(max_nodes=20_000)
    out["search 20000 nodes"] = _best(lambda: brute_force_svr(pair, Family.USQ, budget), max(1, repeat // 2))
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--child", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args()
    if args.child:
        print(json.dumps(measure(args.repeat)))
        return
    rows = {}
    for flag in ("0", "1"):
        env = dict(os.environ, SVRKIT_DISABLE_NUMBA=flag)
        res = subprocess.run([sys.executable, __file__, "--child", "--repeat", str(args.repeat)],
                             env=env, capture_output=True, text=True, check=True)
        rows[flag] = json.loads(res.stdout.strip().splitlines()[-1])
    fast, slow = rows["0"], rows["1"]
    print(f"{'kernel':<24}{fast['backend']:>12}{slow['backend']:>12}{'speedup':>10}")
    for key in fast:
        if key == "backend":
            continue
        a, b = fast[key], slow[key]
        print(f"{key:<24}{a * 1e3:>10.2f}ms{b * 1e3:>10.2f}ms{b / a:>9.1f}x")


if __name__ == "__main__":
    main()
