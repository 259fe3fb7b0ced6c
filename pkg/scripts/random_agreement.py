"""Random rank-2 sweep comparing the groupoid search with the table classifier.

For each random braiding the breadth-first search decides finiteness; a
finite result should match a table row and vice versa.  The lemma filter
must accept every finite case.

    python scripts/random_agreement.py --count 3000 --seed 1 --max-n 30
"""

import argparse
import random
from collections import Counter
from dataclasses import dataclass

from arithroot.bicharacter import BraidingMatrix
from arithroot.groupoid import DEFAULT_CAP, generate
from arithroot.rank2 import figure1_classify, lemma_no1_filter
from arithroot.values import GroupValue


@dataclass
class SweepConfig:
    count: int = 1000
    seed: int = 0
    max_n: int = 24
    free_prob: float = 0.3  # chance that the entries carry one generic parameter
    bound: int = 6
    cap: int = DEFAULT_CAP


def random_braiding(rng, cfg):
    N = rng.randint(1, cfg.max_n)
    F = 1 if rng.random() < cfg.free_prob else 0

    def v():
        return GroupValue(tuple(rng.randint(-cfg.bound, cfg.bound) for _ in range(F)), rng.randint(0, N - 1), N)

    return BraidingMatrix.rank2(v(), v(), v(), v())


def sweep(cfg):
    rng = random.Random(cfg.seed)
    kinds, rows = Counter(), Counter()
    disagreements, filter_misses = [], []
    for _ in range(cfg.count):
        Q = random_braiding(rng, cfg)
        out = generate(Q, cap=cfg.cap)
        kinds[out.kind] += 1
        match = figure1_classify(Q)
        if match is not None:
            rows[match.row] += 1
        if (out.kind == "finite") != (match is not None):
            disagreements.append((Q, out.kind, match))
        if out.kind == "finite" and not lemma_no1_filter(Q):
            filter_misses.append(Q)
    return kinds, rows, disagreements, filter_misses


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-n", type=int, default=24)
    ap.add_argument("--cap", type=int, default=DEFAULT_CAP)
    args = ap.parse_args()
    cfg = SweepConfig(count=args.count, seed=args.seed, max_n=args.max_n, cap=args.cap)
    kinds, rows, disagreements, filter_misses = sweep(cfg)
    print("outcomes:", dict(sorted(kinds.items())))
    print("table rows hit:", dict(sorted(rows.items())))
    print(f"disagreements: {len(disagreements)}, lemma filter misses: {len(filter_misses)}")
    for Q, kind, match in disagreements[:10]:
        print("  ", Q.entries, kind, match)
    return 1 if disagreements or filter_misses else 0


if __name__ == "__main__":
    raise SystemExit(main())
