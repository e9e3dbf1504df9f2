"""Compare the compiled kernels against the pure Python twins.

Micro-benchmarks call both implementations in process; the end-to-end
row runs a degree-100 decide in a subprocess per implementation so the
import-time selection in posring.kernels is exercised for real.

Usage: python3 benchmarks/bench_kernels.py [--repeat N] [--skip-e2e]
"""

import argparse
import random
import subprocess
import sys
import os
from time import perf_counter

from posring import _kernels_py as pure

try:
    from posring import _kernels as compiled
except ImportError:
    compiled = None


def _poly(rng, deg, bits=64):
    cs = [rng.getrandbits(bits) - (1 << (bits - 1)) for _ in range(deg + 1)]
    cs[-1] = cs[-1] or 1
    return cs


def _time(fn, args, repeat):
    best = None
    for _ in range(repeat):
        t0 = perf_counter()
        fn(*[list(a) if isinstance(a, list) else a for a in args])
        dt = perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def micro_rows(repeat):
    rng = random.Random(13)
    a100, b100 = _poly(rng, 100), _poly(rng, 100)
    a40, b40 = _poly(rng, 40), _poly(rng, 40)
    shared = pure.mul(a40, b40)
    cases = [
        ("mul deg 100", "mul", (a100, b100)),
        ("add deg 100", "add", (a100, b100)),
        ("pseudo_rem deg 100/99", "pseudo_rem", (a100, b100[:-1] or [1])),
        ("gcd shared deg 80", "gcd", (pure.mul(shared, a40), pure.mul(shared, b40))),
        ("gcd_mod deg 100", "gcd_mod", (a100, b100, (1 << 61) - 1)),
        ("signed_prs deg 40", "signed_prs", (a40,)),
        ("shift1 deg 100", "shift1", (a100,)),
        ("eval_scaled deg 100", "eval_scaled", (a100, 7, 2)),
    ]
    rows = []
    for label, name, args in cases:
        tp = _time(getattr(pure, name), args, repeat)
        tc = _time(getattr(compiled, name), args, repeat) if compiled else None
        rows.append((label, tp, tc))
    return rows


E2E_SNIPPET = r"""
import random
from time import perf_counter
from posring import kernels
from posring.polyring import IntPoly
from posring.nxsolve import decide

rng = random.Random(99)
hs = []
for i in range(5):
    cs = [rng.getrandbits(64) - (1 << 63) for _ in range(101)]
    cs[-1] = cs[-1] or 1
    hs.append(IntPoly(cs))
t0 = perf_counter()
decide(hs)
print("%s %.6f" % (kernels.IMPLEMENTATION, perf_counter() - t0))
"""


def e2e_row():
    out = []
    for force in ("1", ""):
        env = dict(os.environ)
        if force:
            env["POSRING_PURE_PYTHON"] = force
        else:
            env.pop("POSRING_PURE_PYTHON", None)
        proc = subprocess.run([sys.executable, "-c", E2E_SNIPPET],
                              capture_output=True, text=True, env=env)
        if proc.returncode:
            raise RuntimeError(proc.stderr)
        impl, seconds = proc.stdout.split()
        out.append((impl, float(seconds)))
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--skip-e2e", action="store_true")
    args = ap.parse_args()

    print("%-26s %12s %12s %9s" % ("kernel", "python", "c", "speedup"))
    for label, tp, tc in micro_rows(args.repeat):
        if tc is None:
            print("%-26s %10.3fms %12s" % (label, tp * 1e3, "n/a"))
        else:
            print("%-26s %10.3fms %10.3fms %8.1fx"
                  % (label, tp * 1e3, tc * 1e3, tp / tc if tc else float("inf")))

    if not args.skip_e2e:
        print()
        print("decide, n=5 deg-100 64-bit coefficients (subprocess, min of 1):")
        for impl, seconds in e2e_row():
            print("  %-8s %8.3fs" % (impl, seconds))


if __name__ == "__main__":
    main()
