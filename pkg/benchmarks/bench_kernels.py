"""Time the enumeration kernels compiled (numba) and as plain Python.

    python3 benchmarks/bench_kernels.py [--repeat N]

The plain-Python timings run in a child process with K4SUB_DISABLE_JIT=1 so that
every helper, not just the top-level kernel, is interpreted.
"""
import argparse
import json
import os
import subprocess
import sys
import time


def workloads():
    from k4sub.cycles import count_cycles, count_st_paths
    from k4sub.generators import complete, prism, random_3connected, wheel
    from k4sub.k4census import count_k4

    return {
        "cycles K7": lambda: count_cycles(complete(7)),
        "st-paths K8": lambda: count_st_paths(complete(8), 0, 7),
        "k4 W9": lambda: count_k4(wheel(9)),
        "k4 K6": lambda: count_k4(complete(6)),
        "k4 prism": lambda: count_k4(prism()),
        "k4 rand3(9)": lambda: count_k4(random_3connected(9, 1)),
    }


def measure(repeat):
    out = {}
    for name, fn in workloads().items():
        fn()  # warm-up (includes compilation when jitted)
        best = float("inf")
        for _ in range(repeat):
            t0 = time.perf_counter()
            fn()
            best = min(best, time.perf_counter() - t0)
        out[name] = best
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--child", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args()
    if args.child:
        print(json.dumps(measure(args.repeat)))
        return
    from k4sub._jit import HAVE_JIT

    jit = measure(args.repeat)
    env = {**os.environ, "K4SUB_DISABLE_JIT": "1"}
    res = subprocess.run([sys.executable, __file__, "--child", "--repeat", str(args.repeat)],
                         env=env, capture_output=True, text=True, check=True)
    py = json.loads(res.stdout)
    print(f"numba active: {HAVE_JIT}")
    print(f"{'workload':<14}{'jit s':>10}{'python s':>12}{'speedup':>10}")
    for name in jit:
        print(f"{name:<14}{jit[name]:>10.4f}{py[name]:>12.4f}{py[name] / jit[name]:>9.1f}x")


if __name__ == "__main__":
    main()
