"""Compare the numba kernels with the pure Python/numpy fallback.

Each backend runs in its own interpreter, since the choice is made at
import time from GRPCENSUS_DISABLE_NUMBA.  Every workload runs once to warm
up (numba compiles or loads its cache) and is then timed over ``--repeat``
runs; the best time is reported.  Per-group caches are sidestepped with
``relabel``, which returns a fresh object sharing the same table.

    python benchmarks/bench_kernels.py [--repeat 2] [--json]
"""
import argparse
import json
import os
import subprocess
import sys
import time

WORKLOADS = {
    "validate S(5)": "make_group(np.asarray(S5.table))",
    "validate C(2)xS(4)xC(4)": "make_group(np.asarray(BIG.table))",
    "element orders C(4096)": "kernels.element_orders(C4096.table)",
    "census corpus slice": "[census(G.relabel(None)) for G in SLICE]",
    "isomorphism D(8)xC(3), relabeled": "are_isomorphic(D8C3.relabel(None), SHUF.relabel(None))",
    "enumerate orders 1..8": "[enumerate_groups(n) for n in range(1, 9)]",
    "enumerate order 8, no symmetry": "enumerate_groups(8, symmetry=False)",
}

CHILD = r"""
import json, sys, time
import numpy as np
from grpcensus import backend, build, census, enumerate_groups, kernels, make_group
from grpcensus.structure import are_isomorphic

S5 = build("S(5)")
BIG = build("C(2)xS(4)xC(4)")
C4096 = build("C(4096)")
SLICE = [build(f"D({n})") for n in range(100, 201, 10)] + [build("A(5)")]
D8C3 = build("D(8)xC(3)")
sigma = np.concatenate([[0], 1 + np.random.default_rng(0).permutation(23)])
shuffled = np.empty((24, 24), dtype=np.int64)
shuffled[sigma[:, None], sigma[None, :]] = sigma[D8C3.table.astype(np.int64)]
SHUF = make_group(shuffled)
repeat = int(sys.argv[1])
out = {"backend": backend(), "times": {}}
for name, stmt in json.loads(sys.argv[2]).items():
    code = compile(stmt, name, "eval")
    eval(code)
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        eval(code)
        best = min(best, time.perf_counter() - t0)
    out["times"][name] = best
print(json.dumps(out))
"""


def run_backend(disable: bool, repeat: int) -> dict:
    env = dict(os.environ)
    env.pop("GRPCENSUS_DISABLE_NUMBA", None)
    if disable:
        env["GRPCENSUS_DISABLE_NUMBA"] = "1"
    proc = subprocess.run([sys.executable, "-c", CHILD, str(repeat), json.dumps(WORKLOADS)],
                          capture_output=True, text=True, env=env, check=True)
    return json.loads(proc.stdout)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=2)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)
    t0 = time.perf_counter()
    fast = run_backend(False, args.repeat)
    slow = run_backend(True, args.repeat)
    if args.json:
        print(json.dumps({"numba": fast, "fallback": slow}, indent=2))
        return
    print(f"{'workload':<38} {fast['backend']:>10} {slow['backend']:>10} {'speedup':>8}")
    for name in WORKLOADS:
        a, b = fast["times"][name], slow["times"][name]
        print(f"{name:<38} {a * 1e3:>8.1f}ms {b * 1e3:>8.1f}ms {b / a:>7.1f}x")
    print(f"# wall time {time.perf_counter() - t0:.1f}s, best of {args.repeat}")


if __name__ == "__main__":
    main()
