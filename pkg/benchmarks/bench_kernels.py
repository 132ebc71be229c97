"""Compare the compiled and pure-Python elimination kernels.

Times a full non-trivial minor scan of the window-1 sliding matrix for a few
codes, plus batches of random determinants, under each importable backend.
Results are checked for agreement before timings are printed.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--json out.json]
"""

from __future__ import annotations

import argparse
import json
import time

import numpy as np

from pumdp import kernels
from pumdp.codes import cauchy_construct, sliding_matrix
from pumdp.gf import Level
from pumdp.mdp import nontrivial_array

CASES = [(3, 2), (5, 3), (7, 4), (8, 5)]


def _best(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def bench_scan(impls: dict, repeat: int) -> list[dict]:
    rows = []
    for n, k in CASES:
        code = cauchy_construct(n, k)
        body = sliding_matrix(code, 1).body
        arr = body.kernel_array(Level.EXT)
        tables = code.tower.kernel_tables(Level.EXT)
        rset = np.arange(body.rows, dtype=np.intc).reshape(1, -1)
        cols = nontrivial_array(n, k, 1)
        results = {name: kernels.scan_minors(arr, rset, cols, tables, True, impl=m) for name, m in impls.items()}
        if len(set(results.values())) != 1:
            raise SystemExit(f"backends disagree on ({n},{k}): {results}")
        row = {"case": f"scan ({n},{k}) d={code.tower.d}", "minors": len(cols)}
        for name, m in impls.items():
            row[name] = _best(lambda: kernels.scan_minors(arr, rset, cols, tables, True, impl=m), repeat)
        rows.append(row)
    return rows


def bench_det(impls: dict, repeat: int, size: int = 8, count: int = 200) -> dict:
    code = cauchy_construct(7, 4)
    t = code.tower
    tables = t.kernel_tables(Level.EXT)
    rng = np.random.default_rng(0)
    mats = [
        np.array([[t.kernel_vector(int(v), Level.EXT) for v in r] for r in rng.integers(0, t.order, (size, size))],
                 dtype=np.intc)
        for _ in range(count)
    ]
    ref = None
    row = {"case": f"det {size}x{size} over F_{t.order}", "minors": count}
    for name, m in impls.items():
        out = [kernels.det(a, tables, impl=m).tolist() for a in mats]
        if ref is None:
            ref = out
        elif out != ref:
            raise SystemExit(f"backend {name} disagrees on determinants")
        row[name] = _best(lambda: [kernels.det(a, tables, impl=m) for a in mats], repeat)
    return row


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", help="also write results here")
    args = ap.parse_args()

    impls = kernels.implementations()
    rows = bench_scan(impls, args.repeat) + [bench_det(impls, args.repeat)]
    names = list(impls)
    head = f"{'case':<28}{'minors':>8}" + "".join(f"{n + ' (s)':>14}" for n in names)
    if "cython" in impls:
        head += f"{'speedup':>10}"
    print(head)
    for r in rows:
        line = f"{r['case']:<28}{r['minors']:>8}" + "".join(f"{r[n]:>14.4f}" for n in names)
        if "cython" in impls:
            line += f"{r['python'] / r['cython']:>9.1f}x"
        print(line)
    if args.json:
        with open(args.json, "w") as fh:
            json.dump({"backends": names, "rows": rows}, fh, indent=2)


if __name__ == "__main__":
    main()
