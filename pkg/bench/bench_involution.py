"""Time the depth-4 duality scan with the compiled kernels and with the numpy fallback.

    python3 bench/bench_involution.py [repeats]
"""
import sys
import time

from lpc import involution
from lpc.syntax import Mode


def scan_all(table, use_native):
    unary, binary = involution._scans(use_native)
    L, P, C = (table.pool[m] for m in (Mode.L, Mode.P, Mode.C))
    lid = involution.MODE_ID[Mode.L]
    bad = 0
    for left in (L,):
        for _ in range(4):  # &, +, tensor, par over linear children
            bad += binary(left, left, table.dual, table.mode, lid, lid)[0]
    bad += binary(P, P, table.dual, table.mode, 2, 2)[0]
    bad += binary(C, C, table.dual, table.mode, 1, 1)[0]
    for pool, want in ((P, 2), (C, 1), (L, lid), (L, lid)):
        bad += unary(pool, table.dual, table.mode, want)[0]
    return bad


def main(repeats=3):
    started = time.perf_counter()
    table = involution.Table(3)
    print(f"table of {len(table.props)} propositions built in {time.perf_counter() - started:.2f}s")
    backends = [("numpy", False)] + ([("compiled", True)] if involution._native is not None else [])
    best = {}
    for name, native in backends:
        times = []
        for _ in range(repeats):
            t = time.perf_counter()
            bad = scan_all(table, native)
            times.append(time.perf_counter() - t)
        best[name] = min(times)
        print(f"{name:9s} best {best[name]:.3f}s over {repeats} runs, violations {bad}")
    if len(best) == 2:
        print(f"speedup {best['numpy'] / best['compiled']:.1f}x")


if __name__ == "__main__":
    main(*(int(a) for a in sys.argv[1:]))
