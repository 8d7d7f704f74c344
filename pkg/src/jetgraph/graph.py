"""Simple graphs, minimal vertex covers, chordality and edge ideals."""

from __future__ import annotations

import json
import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

DEFAULT_COVER_CAP = 25

_VERTEX_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_.']*\Z")


class CapExceeded(RuntimeError):
    pass


class GraphFormatError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    """A simple graph; edges are index pairs ``(i, j)`` with ``i < j``."""

    vertices: tuple[str, ...]
    edges: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        n = len(self.vertices)
        if len(set(self.vertices)) != n:
            raise ValueError("duplicate vertex names")
        for name in self.vertices:
            if not _VERTEX_RE.match(name):
                raise ValueError(f"invalid vertex name {name!r}")
        normalized = set()
        for e in self.edges:
            i, j = e
            if i == j:
                raise ValueError("loops are not allowed")
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge {e} references a missing vertex")
            normalized.add((min(i, j), max(i, j)))
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def from_edges(cls, pairs: Iterable[Sequence[str]], vertices: Iterable[str] = ()) -> Graph:
        """Build from name pairs; vertices are ordered by first appearance."""
        names: list[str] = list(vertices)
        index = {v: i for i, v in enumerate(names)}
        edges = set()
        for pair in pairs:
            a, b = pair
            for v in (a, b):
                if v not in index:
                    index[v] = len(names)
                    names.append(v)
            if a == b:
                raise ValueError(f"loop at {a!r}")
            edges.add((index[a], index[b]))
        return cls(tuple(names), frozenset(edges))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """Neighbourhood bitmask of every vertex."""
        adj = [0] * self.n
        for i, j in self.edges:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return tuple(adj)

    def neighbors(self, i: int) -> list[int]:
        return _bits(self.adjacency[i])

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adjacency[i] >> j & 1)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def edge_names(self) -> list[tuple[str, str]]:
        return [(self.vertices[i], self.vertices[j]) for i, j in self.sorted_edges()]

    def induced(self, keep: Iterable[int]) -> Graph:
        keep = sorted(keep)
        pos = {v: k for k, v in enumerate(keep)}
        return Graph(
            tuple(self.vertices[v] for v in keep),
            frozenset((pos[i], pos[j]) for i, j in self.edges if i in pos and j in pos),
        )

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        return _component_mask(self.adjacency, 1, (1 << self.n) - 1) == (1 << self.n) - 1

    def to_structured(self) -> dict:
        return {"vertices": list(self.vertices), "edges": [list(p) for p in self.edge_names()]}

    def __str__(self):
        return json.dumps(self.to_structured())


@dataclass(frozen=True)
class VertexCover:
    cover: frozenset[int]
    graph: Graph = field(repr=False, compare=False)
    minimal: bool = False

    def names(self) -> list[str]:
        return [self.graph.vertices[i] for i in sorted(self.cover)]

    def is_cover(self) -> bool:
        return is_vertex_cover(self.graph, self.cover)


@dataclass(frozen=True)
class Cycle:
    path: tuple[int, ...]
    chordless: bool

    def names(self, g: Graph) -> list[str]:
        return [g.vertices[i] for i in self.path]


# ------------------------------------------------------------------ helpers


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _component_mask(adj: Sequence[int], start: int, allowed: int) -> int:
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= adj[v]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def is_vertex_cover(g: Graph, cover: Iterable[int]) -> bool:
    c = set(cover)
    return all(i in c or j in c for i, j in g.edges)


# --------------------------------------------------------------- operations


def complement(g: Graph) -> Graph:
    edges = frozenset(
        (i, j) for i, j in combinations(range(g.n), 2) if (i, j) not in g.edges
    )
    return Graph(g.vertices, edges)


def maximal_independent_sets(g: Graph) -> list[int]:
    """All maximal independent sets as bitmasks (pivoting Bron-Kerbosch on the complement)."""
    n = g.n
    full = (1 << n) - 1
    # complement adjacency: independent sets of g are cliques here
    cadj = [full & ~g.adjacency[v] & ~(1 << v) for v in range(n)]
    out: list[int] = []

    def expand(r: int, p: int, x: int):
        if not p and not x:
            out.append(r)
            return
        pivot_pool = p | x
        pivot = max(_bits(pivot_pool), key=lambda u: bin(cadj[u] & p).count("1"))
        for v in _bits(p & ~cadj[pivot]):
            bit = 1 << v
            expand(r | bit, p & cadj[v], x & cadj[v])
            p &= ~bit
            x |= bit

    if n:
        expand(0, full, 0)
    else:
        out.append(0)
    return out


def _cover_sort_key(mask: int):
    members = _bits(mask)
    return (len(members), members)


def minimal_vertex_covers(g: Graph, cap: int = DEFAULT_COVER_CAP) -> list[VertexCover]:
    """Minimal vertex covers, sorted by size then lexicographically by index."""
    if g.n > cap:
        raise CapExceeded(f"{g.n} vertices exceeds the cover-enumeration cap {cap}")
    full = (1 << g.n) - 1
    masks = sorted((full & ~s for s in maximal_independent_sets(g)), key=_cover_sort_key)
    return [VertexCover(frozenset(_bits(m)), g, True) for m in masks]


def minimal_transversals(n: int, hyperedges: Iterable[int], cap: int = DEFAULT_COVER_CAP) -> list[int]:
    """Minimal vertex covers of a hypergraph on n vertices (edges as bitmasks).

    Graphs go through Bron-Kerbosch; hyperedges of other sizes use branching
    on the smallest uncovered edge followed by a minimality filter.
    """
    if n > cap:
        raise CapExceeded(f"{n} vertices exceeds the cover-enumeration cap {cap}")
    edges = sorted(set(hyperedges))
    if any(e == 0 for e in edges):
        return []  # the empty edge cannot be covered
    if all(bin(e).count("1") == 2 for e in edges):
        names = tuple(f"v{i}" for i in range(n))
        pairs = frozenset(tuple(_bits(e)) for e in edges)
        return [sum(1 << i for i in c.cover) for c in minimal_vertex_covers(Graph(names, pairs), cap)]

    # drop edges that contain another edge; they are covered automatically
    edges = [e for e in edges if not any(f != e and f & e == f for f in edges)]
    found: set[int] = set()

    def branch(chosen: int):
        uncovered = [e for e in edges if not e & chosen]
        if not uncovered:
            found.add(chosen)
            return
        target = min(uncovered, key=lambda e: (bin(e).count("1"), e))
        for v in _bits(target):
            branch(chosen | 1 << v)

    branch(0)

    def is_minimal(c: int) -> bool:
        # every chosen vertex needs a private edge
        return all(any(e & c == 1 << v for e in edges) for v in _bits(c))

    return sorted((c for c in found if is_minimal(c)), key=_cover_sort_key)


def edge_ideal_monomials(g: Graph) -> list[tuple[int, ...]]:
    out = []
    for i, j in g.sorted_edges():
        m = [0] * g.n
        m[i] = m[j] = 1
        out.append(tuple(m))
    return out


def edge_ideal(g: Graph):
    """The edge ideal of g in the ring whose variables are the vertices."""
    from .monomial import MonomialIdeal
    from .poly import Ring

    return MonomialIdeal.from_monomials(Ring(g.vertices), edge_ideal_monomials(g))


# ---------------------------------------------------------------- chordality


def lex_bfs(g: Graph) -> list[int]:
    """Lexicographic breadth-first search order (partition refinement)."""
    if not g.n:
        return []
    parts: list[list[int]] = [list(range(g.n))]
    order: list[int] = []
    while parts:
        v = parts[0].pop(0)
        if not parts[0]:
            parts.pop(0)
        order.append(v)
        adj = g.adjacency[v]
        refined = []
        for part in parts:
            inside = [u for u in part if adj >> u & 1]
            outside = [u for u in part if not adj >> u & 1]
            if inside:
                refined.append(inside)
            if outside:
                refined.append(outside)
        parts = refined
    return order


def _peo_violation(g: Graph, peo: list[int]):
    """First (v, a, b) where a, b are non-adjacent later neighbours of v."""
    pos = {v: k for k, v in enumerate(peo)}
    for v in peo:
        later = [u for u in g.neighbors(v) if pos[u] > pos[v]]
        if len(later) < 2:
            continue
        first = min(later, key=pos.__getitem__)
        for u in later:
            if u != first and not g.has_edge(first, u):
                return v, first, u
    return None


def _chordless_cycle_through(g: Graph, v: int, a: int, b: int) -> tuple[int, ...] | None:
    # shortest a-b path whose interior avoids the closed neighbourhood of v
    blocked = g.adjacency[v] | (1 << v)
    allowed = (((1 << g.n) - 1) & ~blocked) | (1 << a) | (1 << b)
    prev = {a: None}
    queue = deque([a])
    while queue:
        u = queue.popleft()
        if u == b:
            break
        for w in _bits(g.adjacency[u] & allowed):
            if w not in prev and not (u == a and w == b):
                prev[w] = u
                queue.append(w)
    if b not in prev:
        return None
    path = [b]
    while prev[path[-1]] is not None:
        path.append(prev[path[-1]])
    path.reverse()
    return (v, *path)


def is_chordless_cycle(g: Graph, path: Sequence[int]) -> bool:
    k = len(path)
    if k < 3 or len(set(path)) != k:
        return False
    for idx in range(k):
        for jdx in range(idx + 1, k):
            consecutive = jdx == idx + 1 or (idx == 0 and jdx == k - 1)
            if g.has_edge(path[idx], path[jdx]) != consecutive:
                return False
    return True


def is_chordal(g: Graph) -> tuple[bool, Cycle | None]:
    """Chordality test; on failure a chordless cycle of length >= 4 is returned."""
    peo = lex_bfs(g)[::-1]
    violation = _peo_violation(g, peo)
    if violation is None:
        return True, None
    cycle = _chordless_cycle_through(g, *violation)
    if cycle is None:
        # every chordless cycle passes some vertex whose two cycle
        # neighbours are joined outside its closed neighbourhood
        for v in range(g.n):
            for a, b in combinations(g.neighbors(v), 2):
                if not g.has_edge(a, b):
                    cycle = _chordless_cycle_through(g, v, a, b)
                    if cycle:
                        break
            if cycle:
                break
    assert cycle is not None and is_chordless_cycle(g, cycle)
    return False, Cycle(cycle, True)


def is_cochordal(g: Graph) -> bool:
    return is_chordal(complement(g))[0]


# ---------------------------------------------------------------------- I/O


def _parse_dot(text: str) -> Graph:
    body = re.search(r"\{(.*)\}", text, re.S)
    if not re.match(r"\s*(strict\s+)?graph\b", text) or body is None:
        raise GraphFormatError("expected 'graph { ... }'")
    pairs, isolated = [], []
    for stmt in re.split(r"[;\n]", body.group(1)):
        stmt = stmt.strip()
        if not stmt or stmt.startswith("//"):
            continue
        chain = [s.strip().strip('"') for s in stmt.split("--")]
        if any(not s for s in chain):
            raise GraphFormatError(f"bad statement {stmt!r}")
        if len(chain) == 1:
            isolated.append(chain[0])
        pairs.extend(zip(chain, chain[1:]))
    order = []
    for name in [x for p in pairs for x in p] + isolated:
        if name not in order:
            order.append(name)
    return Graph.from_edges(pairs, order)


def parse_graph(text: str) -> Graph:
    """Read an edge list, a JSON ``{"vertices", "edges"}`` document, or a DOT subset."""
    try:
        return _parse_graph(text)
    except GraphFormatError:
        raise
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from exc


def _parse_graph(text: str) -> Graph:
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise GraphFormatError(str(exc)) from exc
        vertices = [str(v) for v in doc.get("vertices", [])]
        edges = doc.get("edges", [])
        if any(len(e) != 2 for e in edges):
            raise GraphFormatError("edges must be pairs")
        g = Graph.from_edges([(str(a), str(b)) for a, b in edges], vertices)
        if vertices and len(g.vertices) != len(vertices):
            raise GraphFormatError("edge references an undeclared vertex")
        return g
    if re.match(r"(strict\s+)?graph\b", stripped):
        return _parse_dot(stripped)
    pairs, order = [], []
    for line in stripped.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) > 2:
            raise GraphFormatError(f"bad edge line {line!r}")
        for name in parts:
            if name not in order:
                order.append(name)
        if len(parts) == 2:
            pairs.append(tuple(parts))
    return Graph.from_edges(pairs, order)


def format_graph(g: Graph) -> str:
    return json.dumps(g.to_structured(), indent=None) + "\n"


# ---------------------------------------------------------- named families


def path_graph(n: int, names: Sequence[str] | None = None) -> Graph:
    names = list(names or [f"x{i + 1}" for i in range(n)])
    return Graph(tuple(names), frozenset((i, i + 1) for i in range(len(names) - 1)))


def cycle_graph(n: int, names: Sequence[str] | None = None) -> Graph:
    names = list(names or [f"x{i + 1}" for i in range(n)])
    return Graph(tuple(names), frozenset((i, (i + 1) % n) for i in range(n)))


def star_graph(leaves: int) -> Graph:
    names = [f"v{i + 1}" for i in range(leaves + 1)]
    return Graph(tuple(names), frozenset((0, i) for i in range(1, leaves + 1)))


def complete_graph(n: int) -> Graph:
    names = [f"x{i + 1}" for i in range(n)]
    return Graph(tuple(names), frozenset(combinations(range(n), 2)))


def complete_bipartite(a: int, b: int) -> Graph:
    names = [f"x{i + 1}" for i in range(a + b)]
    return Graph(tuple(names), frozenset((i, j) for i in range(a) for j in range(a, a + b)))
