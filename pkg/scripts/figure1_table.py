"""Recompute the rank-2 table: groupoid size, roots, chains and dimension per instance.

    python scripts/figure1_table.py [--cap N] [--row ID ...]
"""

import argparse
import time
from dataclasses import dataclass, field

from arithroot.dimension import nichols_dimension
from arithroot.figure1 import FIGURE1, instantiate
from arithroot.groupoid import DEFAULT_CAP, generate
from arithroot.notation import format_value
from arithroot.rank2 import figure1_classify, rank2_chain


@dataclass
class TableConfig:
    cap: int = DEFAULT_CAP
    rows: list = field(default_factory=list)  # empty means every row


def describe(Q):
    return "(" + ", ".join(format_value(Q[i, j], names=["q", "r"][:Q.shape[0]])
                           for i, j in ((0, 0), (0, 1), (1, 0), (1, 1))) + ")"


def run(cfg):
    ids = cfg.rows or [row.id for row in FIGURE1]
    header = f"{'row':>3} {'var':>3} {'alt':>3} {'k':>3}  {'bases':>5} {'pos':>4} {'periods':>8}  {'dim':>12}  match  braiding"
    print(header)
    print("-" * len(header))
    t0 = time.perf_counter()
    for row in FIGURE1:
        if row.id not in ids:
            continue
        for inst in instantiate(row):
            Q = inst.braiding
            out = generate(Q, cap=cfg.cap)
            if out.kind != "finite":
                print(f"{inst.row:>3} {inst.variant:>3} {inst.alternative:>3} {inst.root_order:>3}  {out.kind}")
                continue
            periods = "/".join(str(rank2_chain(Q, s).period) for s in ("E0", "tau"))
            d = nichols_dimension(Q, out.roots)
            dim = str(d.value) if d.kind == "finite_dim" else "inf"
            m = figure1_classify(Q)
            match = f"{m.row}.{m.variant}" if m else "-"
            print(f"{inst.row:>3} {inst.variant:>3} {inst.alternative:>3} {inst.root_order:>3}  "
                  f"{len(out.groupoid.nodes):>5} {len(out.roots.positive):>4} {periods:>8}  {dim:>12}  "
                  f"{match:>5}  {describe(Q)}")
    print(f"\n{time.perf_counter() - t0:.2f}s")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--cap", type=int, default=DEFAULT_CAP)
    ap.add_argument("--row", type=int, action="append", default=[])
    args = ap.parse_args()
    run(TableConfig(cap=args.cap, rows=args.row))


if __name__ == "__main__":
    main()
