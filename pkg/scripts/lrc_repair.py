"""Encode random messages with a Tamo-Barg code, erase symbols and repair them locally."""

import argparse
import random
from dataclasses import dataclass

from codingtheory import EnumerationLimitError, build_lrc, local_recover


@dataclass
class RepairConfig:
    q: int = 13
    n: int = 12
    k: int = 3
    locality: int = 3
    trials: int = 50
    seed: int = 0


BLOCKS_13 = [[1, 5, 8, 12], [2, 10, 3, 11], [4, 7, 6, 9]]


def make_code(cfg: RepairConfig):
    # x^(l+1) is constant on the cosets of the (l+1)-th roots of unity
    return build_lrc(cfg.q, cfg.n, cfg.k, cfg.locality, BLOCKS_13, [0] * (cfg.locality + 1) + [1])


def run(cfg: RepairConfig) -> tuple[int, int]:
    L = make_code(cfg)
    rng = random.Random(cfg.seed)
    ok = total = 0
    for _ in range(cfg.trials):
        w = L.encode([rng.randrange(cfg.q) for _ in range(cfg.k)])
        for pos in range(cfg.n):
            erased = list(w)
            erased[pos] = None
            ok += local_recover(L, erased, pos) == w[pos]
            total += 1
    return ok, total


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k", type=int, default=3, help="3 or 6 for the default blocks")
    ap.add_argument("--trials", type=int, default=50)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    cfg = RepairConfig(k=args.k, trials=args.trials, seed=args.seed)
    ok, total = run(cfg)
    L = make_code(cfg)
    try:
        d = L.code.minimum_weight()
    except EnumerationLimitError:
        d = "too many codewords to enumerate"
    print(f"[{cfg.n},{cfg.k}] locality {cfg.locality}: d={d}")
    print(f"repaired {ok}/{total} erasures")


if __name__ == "__main__":
    main()
