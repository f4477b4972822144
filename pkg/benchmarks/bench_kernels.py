"""Compare the compiled conv kernels against the numpy fallback.

Run directly; it re-executes itself with REPOCARE_NO_EXT=1 to time the
fallback in a clean process, then prints a side-by-side table.

    python3 benchmarks/bench_kernels.py
"""

import json
import os
import subprocess
import sys
import time

import numpy as np

CASES = [
    ("im2col 48x3x64x64 k3", "im2col", (48, 3, 64, 64), 3),
    ("im2col 48x16x60x60 k3", "im2col", (48, 16, 60, 60), 3),
    ("col2im 48x16x60x60 k3", "col2im", (48, 16, 60, 60), 3),
    ("conv2d fwd 48x16x60x60", "conv2d", (48, 16, 60, 60), 3),
]
REPEATS = 5


def run_cases():
    from repocare.autodiff import kernels
    from repocare.autodiff import ops
    from repocare.autodiff.tensor import Tensor

    rng = np.random.default_rng(0)
    results = {"backend": kernels.BACKEND, "times": {}}
    for name, kind, shape, k in CASES:
        x = np.ascontiguousarray(rng.random(shape).astype(np.float32))
        if kind == "im2col":
            fn = lambda: kernels.im2col2d(x, k)
        elif kind == "col2im":
            col = kernels.im2col2d(x, k)
            fn = lambda: kernels.col2im2d(col, *shape, k)
        else:
            w = Tensor(rng.random((16, shape[1], k, k)).astype(np.float32))
            xt = Tensor(x)
            fn = lambda: ops.conv2d(xt, w)
        fn()
        t0 = time.time()
        for _ in range(REPEATS):
            fn()
        results["times"][name] = (time.time() - t0) / REPEATS
    return results


def main():
    if os.environ.get("BENCH_CHILD") == "1":
        print(json.dumps(run_cases()))
        return

    here = run_cases()
    env = dict(os.environ, REPOCARE_NO_EXT="1", BENCH_CHILD="1")
    out = subprocess.run([sys.executable, __file__], env=env,
                         capture_output=True, text=True, check=True)
    other = json.loads(out.stdout.strip().splitlines()[-1])

    print(f"{'case':<28} {here['backend']:>10} {other['backend']:>10} {'speedup':>8}")
    for name, _, _, _ in CASES:
        a = here["times"][name]
        b = other["times"][name]
        print(f"{name:<28} {a * 1e3:>8.1f}ms {b * 1e3:>8.1f}ms {b / a:>7.2f}x")


if __name__ == "__main__":
    main()
