"""Print the Betti tables of K_3,2 and its principal components for s = 0, 1, 2."""

import argparse
import time
from dataclasses import dataclass

from jetgraph.betti import betti_table
from jetgraph.graph import complete_bipartite, edge_ideal
from jetgraph.jets import principal_component_ideal


@dataclass
class Config:
    left: int = 3
    right: int = 2
    max_s: int = 2
    method: str = "auto"


def run(cfg: Config) -> None:
    g = complete_bipartite(cfg.left, cfg.right)
    for s in range(cfg.max_s + 1):
        ideal = edge_ideal(g) if s == 0 else principal_component_ideal(g, s)
        start = time.perf_counter()
        table = betti_table(ideal, method=cfg.method)
        elapsed = time.perf_counter() - start
        print(f"# K_{cfg.left},{cfg.right}, s = {s}, {ideal.ring.nvars} variables, {elapsed:.2f}s")
        print(table.format())


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--left", type=int, default=3)
    p.add_argument("--right", type=int, default=2)
    p.add_argument("--max-s", type=int, default=2)
    p.add_argument("--method", choices=("auto", "direct"), default="auto")
    a = p.parse_args()
    run(Config(a.left, a.right, a.max_s, a.method))
