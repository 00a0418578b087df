"""Compare the compiled and pure-Python kernel backends.

Kernel-level timings call each backend module directly on the same inputs.
End-to-end timings run a small script in a fresh interpreter once per
backend, since the backend is fixed at import.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import os
import subprocess
import sys
import timeit

import numpy as np

from twistsemi import kernels
from twistsemi.rings import gf, matrix_ring, zmod

END_TO_END = """
import time
from twistsemi.automorphisms import enumerate_automorphisms
from twistsemi.rings import gf
from twistsemi.instance import build, parse
from twistsemi.checks import run_checks
t = time.perf_counter()
enumerate_automorphisms(gf(2, [1, 1, 0, 1, 1, 0, 0, 0, 1]))
a = time.perf_counter() - t
t = time.perf_counter()
rep = run_checks(build(parse(open("instances/flagship.inst").read())))
b = time.perf_counter() - t
assert rep.passed
print(f"{a:.4f} {b:.4f}")
"""


def _i32(a):
    return np.ascontiguousarray(a, dtype=np.int32)


def kernel_cases():
    M = matrix_ring(zmod(2), 2)
    F = gf(2, [1, 1, 0, 1, 1, 0, 0, 0, 1])  # GF(256)
    Z = zmod(251)
    return [
        ("assoc_violation M2(F2) mul", "assoc_violation", (_i32(M.mul_table),)),
        ("assoc_violation GF(256) mul", "assoc_violation", (_i32(F.mul_table),)),
        ("distrib_violation Z/251", "distrib_violation", (_i32(Z.add_table), _i32(Z.mul_table))),
        ("hom_violation GF(256) identity", "hom_violation",
         (_i32(F.mul_table), _i32(F.mul_table), np.arange(F.order, dtype=np.int32))),
    ]


def close_map_case(mod):
    F = gf(2, [1, 1, 0, 1, 1, 0, 0, 0, 1])
    ops = mod.prepare(_i32(F.ops))
    frob = [F.mul(a, a) for a in range(F.order)]

    def run():
        fmap = np.full(F.order, -1, dtype=np.int32)
        order = np.zeros(F.order, dtype=np.int32)
        fmap[[0, 1, 2]] = [0, 1, frob[2]]
        order[:3] = [0, 1, 2]
        mod.close_map(ops, ops, fmap, order, 0, 3, None)

    return run


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backends = kernels.backends()
    names = sorted(backends)
    if "cython" not in backends:
        print("compiled extension not built; only the python backend is available")

    print(f"{'kernel':<36}" + "".join(f"{n:>12}" for n in names) + "     speedup")
    for label, fn, inputs in kernel_cases() + [("close_map GF(256) Frobenius", None, None)]:
        times = {}
        for n in names:
            mod = backends[n]
            run = close_map_case(mod) if fn is None else (lambda m=mod: getattr(m, fn)(*inputs))
            times[n] = min(timeit.repeat(run, number=1, repeat=args.repeat))
        speed = times["python"] / times["cython"] if "cython" in times else float("nan")
        print(f"{label:<36}" + "".join(f"{times[n] * 1e3:>10.2f}ms" for n in names) + f"{speed:>11.1f}x")

    print()
    print(f"{'end to end':<36}{'Aut(GF(256))':>16}{'flagship checks':>18}")
    root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
    for n in names:
        env = {**os.environ}
        env.pop("TWISTSEMI_PURE_PYTHON", None)
        if n == "python":
            env["TWISTSEMI_PURE_PYTHON"] = "1"
        out = subprocess.run([sys.executable, "-c", END_TO_END], capture_output=True, text=True, env=env, cwd=root)
        if out.returncode:
            print(out.stderr)
            continue
        a, b = (float(x) for x in out.stdout.split())
        print(f"{n:<36}{a:>15.3f}s{b:>17.3f}s")


if __name__ == "__main__":
    main()
