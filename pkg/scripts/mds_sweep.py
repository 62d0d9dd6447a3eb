"""Sweep Reed-Solomon parameters and compare the exact minimum weight with n-k+1."""

import argparse
import time
from dataclasses import dataclass, field as dc_field

from codingtheory import field_of_order, rs_code


@dataclass
class SweepConfig:
    orders: list[int] = dc_field(default_factory=lambda: [2, 3, 4, 5, 7, 8])
    max_words: int = 10**6


def run(cfg: SweepConfig) -> int:
    failures = 0
    for q in cfg.orders:
        F = field_of_order(q)
        start = time.perf_counter()
        checked = 0
        for n in range(1, q):
            for k in range(1, n + 1):
                if q**k > cfg.max_words:
                    continue
                d = rs_code(F, list(range(1, n + 1)), k).code.minimum_weight()
                checked += 1
                if d != n - k + 1:
                    failures += 1
                    print(f"q={q} n={n} k={k}: d={d}, expected {n - k + 1}")
        print(f"q={q}: {checked} codes checked in {time.perf_counter() - start:.2f}s")
    return failures


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--orders", type=int, nargs="+", default=SweepConfig().orders)
    ap.add_argument("--max-words", type=int, default=SweepConfig.max_words)
    args = ap.parse_args()
    failures = run(SweepConfig(args.orders, args.max_words))
    print("all MDS" if not failures else f"{failures} failures")
    raise SystemExit(1 if failures else 0)


if __name__ == "__main__":
    main()
