"""Run every verification suite over a corpus and print a summary table."""

import argparse
import json
import time
from dataclasses import dataclass, field

from jetgraph.corpus import Corpus
from jetgraph.groebner import Limits
from jetgraph.verify import SUITES, run_suite, summarize


@dataclass
class Config:
    corpus: str = "connected:4"
    s_values: list[int] = field(default_factory=lambda: [0, 1, 2])
    suites: list[str] = field(default_factory=lambda: sorted(SUITES))
    workers: int = 1
    seed: int = 0
    report: str | None = None


def run(cfg: Config) -> int:
    corpus = Corpus.parse(cfg.corpus, seed=cfg.seed)
    worst = 0
    everything = []
    for name in cfg.suites:
        start = time.perf_counter()
        reports = run_suite(name, corpus, cfg.s_values, Limits(), cfg.workers)
        counts = summarize(reports)
        print(f"{name:14s} {counts['pass']:6d} pass {counts['fail']:4d} fail "
              f"{counts['skipped']:4d} skipped  {time.perf_counter() - start:7.1f}s")
        for r in reports:
            if r.status == "fail":
                print("   fail:", json.dumps(r.witness))
        if counts["fail"]:
            worst = 1
        elif counts["skipped"] and not worst:
            worst = 3
        everything += [r.to_structured() for r in reports]
    if cfg.report:
        with open(cfg.report, "w") as fh:
            json.dump(everything, fh, indent=1)
    return worst


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--corpus", default="connected:4")
    p.add_argument("--s-values", default="0,1,2")
    p.add_argument("--suites", default=",".join(sorted(SUITES)))
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--report")
    a = p.parse_args()
    cfg = Config(a.corpus, [int(x) for x in a.s_values.split(",")], a.suites.split(","),
                 a.workers, a.seed, a.report)
    raise SystemExit(run(cfg))
