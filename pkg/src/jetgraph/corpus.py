"""Graph corpora for the verification suites."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import Iterator

from .graph import (
    Graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    parse_graph,
    path_graph,
    star_graph,
)


def all_connected_graphs(n: int) -> Iterator[Graph]:
    """Every connected labeled graph on vertices x1..xk for 1 <= k <= n."""
    for k in range(1, n + 1):
        names = tuple(f"x{i + 1}" for i in range(k))
        pairs = list(combinations(range(k), 2))
        for mask in range(1 << len(pairs)):
            g = Graph(names, frozenset(p for b, p in enumerate(pairs) if mask >> b & 1))
            if g.is_connected():
                yield g


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on x1..xn (connected or not)."""
    names = tuple(f"x{i + 1}" for i in range(n))
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(names, frozenset(p for b, p in enumerate(pairs) if mask >> b & 1))


def random_graphs(n: int, count: int, seed: int = 0, p: float = 0.5) -> Iterator[Graph]:
    """``count`` Erdos-Renyi graphs on x1..xn from a seeded generator."""
    rng = random.Random(seed)
    names = tuple(f"x{i + 1}" for i in range(n))
    pairs = list(combinations(range(n), 2))
    for _ in range(count):
        yield Graph(names, frozenset(e for e in pairs if rng.random() < p))


def family_graph(text: str) -> Graph:
    """``path:4``, ``cycle:5``, ``star:3`` (3 leaves), ``kbip:3,2``, ``complete:4``."""
    kind, _, arg = text.partition(":")
    nums = [int(a) for a in arg.split(",") if a]
    if kind == "path":
        return path_graph(nums[0])
    if kind == "cycle":
        return cycle_graph(nums[0])
    if kind == "star":
        return star_graph(nums[0])
    if kind == "kbip":
        return complete_bipartite(*nums)
    if kind == "complete":
        return complete_graph(nums[0])
    raise ValueError(f"unknown graph family {text!r}")


def graph_label(g: Graph) -> str:
    edges = ",".join(f"{a}-{b}" for a, b in g.edge_names())
    return f"{g.n}:{edges}"


@dataclass(frozen=True)
class Corpus:
    """``connected`` enumerates labeled graphs up to ``max_vertices``;
    ``families`` lists named families; ``files`` reads graph files;
    ``random`` draws ``count`` seeded random graphs."""

    kind: str
    max_vertices: int = 0
    families: tuple[str, ...] = ()
    files: tuple[str, ...] = ()
    count: int = 0
    seed: int = 0

    @classmethod
    def parse(cls, text: str, seed: int = 0) -> Corpus:
        """``connected:6``, ``family:path:3;cycle:5``, ``files:a.graph,b.graph``
        or ``random:6:50``."""
        kind, _, rest = text.partition(":")
        if kind == "connected":
            return cls("connected", max_vertices=int(rest))
        if kind == "random":
            n, _, count = rest.partition(":")
            return cls("random", max_vertices=int(n), count=int(count or 20), seed=seed)
        if kind == "family":
            return cls("family", families=tuple(f for f in rest.split(";") if f))
        if kind == "files":
            return cls("files", files=tuple(f for f in rest.split(",") if f))
        raise ValueError(f"unknown corpus {text!r}")

    def graphs(self) -> Iterator[tuple[str, Graph]]:
        if self.kind == "connected":
            for g in all_connected_graphs(self.max_vertices):
                yield graph_label(g), g
        elif self.kind == "family":
            for name in self.families:
                yield name, family_graph(name)
        elif self.kind == "random":
            for k, g in enumerate(random_graphs(self.max_vertices, self.count, self.seed)):
                yield f"random{self.seed}-{k}:{graph_label(g)}", g
        elif self.kind == "files":
            for f in self.files:
                yield f, parse_graph(Path(f).read_text())
        else:
            raise ValueError(f"unknown corpus kind {self.kind!r}")
