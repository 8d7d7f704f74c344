"""Graded Betti numbers of squarefree monomial quotients via Hochster's formula.

For a Stanley-Reisner ideal I with complex D on n vertices,

    beta_{i,j}(S/I) = sum over |sigma| = j of dim H~_{j-i-1}(D|sigma; Q).

Homology ranks come from exact integer ranks of boundary matrices. When I is
generated in degree two, D is the independence complex of a graph and induced
subcomplexes are first shrunk by homotopy-preserving graph moves (isolated
vertex => cone, dominated vertex fold, disjoint union => join).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .graph import CapExceeded, Graph, _bits, maximal_independent_sets
from .monomial import MonomialIdeal, NotSquarefree, minimal_primes

DEFAULT_VARIABLE_CAP = 16
DEFAULT_HOMOLOGY_CAP = 24


class NotEquigenerated(ValueError):
    pass


# ---------------------------------------------------------------- complexes


def _maximal(masks: Iterable[int]) -> tuple[int, ...]:
    ordered = sorted(set(masks), key=lambda m: -bin(m).count("1"))
    kept: list[int] = []
    for m in ordered:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class SimplicialComplex:
    """Faces are subsets of some facet; facets are vertex bitmasks.

    ``facets == (0,)`` is the complex holding only the empty face; an empty
    facet tuple is the void complex.
    """

    nvertices: int
    facets: tuple[int, ...] = field(default=(0,))

    def __post_init__(self):
        object.__setattr__(self, "facets", _maximal(self.facets))

    @classmethod
    def from_faces(cls, n: int, faces: Iterable[Iterable[int]]) -> SimplicialComplex:
        return cls(n, tuple(sum(1 << v for v in f) for f in faces))

    @property
    def dimension(self) -> int:
        return max((bin(f).count("1") for f in self.facets), default=0) - 1

    def faces(self) -> set[int]:
        out: set[int] = set()
        for f in self.facets:
            verts = _bits(f)
            for k in range(len(verts) + 1):
                for sub in combinations(verts, k):
                    out.add(sum(1 << v for v in sub))
        return out

    def restrict(self, sigma: int) -> SimplicialComplex:
        return SimplicialComplex(self.nvertices, tuple(f & sigma for f in self.facets))

    def facet_lists(self) -> list[list[int]]:
        return [_bits(f) for f in self.facets]


def independence_complex(g: Graph) -> SimplicialComplex:
    return SimplicialComplex(g.n, tuple(maximal_independent_sets(g)))


def stanley_reisner_complex(i: MonomialIdeal) -> SimplicialComplex:
    """Faces are the squarefree monomials outside I; facets complement the minimal primes."""
    if not i.is_squarefree():
        raise NotSquarefree(f"{i} is not squarefree")
    n = i.ring.nvars
    full = (1 << n) - 1
    if i.is_unit():
        return SimplicialComplex(n, ())
    facets = []
    for prime in minimal_primes(i):
        mask = sum(1 << k for g in prime.generators for k, e in enumerate(g) if e)
        facets.append(full & ~mask)
    return SimplicialComplex(n, tuple(facets))


# ------------------------------------------------------------ exact ranks


def integer_rank(rows: list[dict[int, int]]) -> int:
    """Rank over Q of a sparse integer matrix by fraction-free elimination."""
    rows = [dict(r) for r in rows if r]
    rank = 0
    while rows:
        # pivot on the sparsest row's smallest entry to limit fill-in
        pr = min(range(len(rows)), key=lambda k: len(rows[k]))
        pivot_row = rows.pop(pr)
        col = min(pivot_row, key=lambda c: (abs(pivot_row[c]), c))
        p = pivot_row[col]
        rank += 1
        nxt = []
        for row in rows:
            a = row.get(col)
            if a is None:
                nxt.append(row)
                continue
            new = {}
            for c in row.keys() | pivot_row.keys():
                v = p * row.get(c, 0) - a * pivot_row.get(c, 0)
                if v:
                    new[c] = v
            if new:
                g = 0
                for v in new.values():
                    g = math.gcd(g, v)
                    if g == 1:
                        break
                if g > 1:
                    new = {c: v // g for c, v in new.items()}
                nxt.append(new)
        rows = nxt
    return rank


def reduced_homology_ranks(c: SimplicialComplex, cap: int = DEFAULT_HOMOLOGY_CAP) -> list[int]:
    """Ranks of reduced homology over Q in dimensions -1 .. dim(c)."""
    if c.nvertices > cap:
        raise CapExceeded(f"{c.nvertices} vertices exceeds the homology cap {cap}")
    if not c.facets:
        return []  # void complex: no chains at all
    by_dim: dict[int, list[int]] = {}
    for f in c.faces():
        by_dim.setdefault(bin(f).count("1") - 1, []).append(f)
    top = max(by_dim)
    index = {d: {f: k for k, f in enumerate(sorted(fs))} for d, fs in by_dim.items()}
    ranks = {}
    for d in range(0, top + 1):
        # boundary from d-faces to (d-1)-faces, one row per d-face
        rows = []
        lower = index[d - 1]
        for f in by_dim[d]:
            row = {}
            for pos, v in enumerate(_bits(f)):
                row[lower[f & ~(1 << v)]] = -1 if pos % 2 else 1
            rows.append(row)
        ranks[d] = integer_rank(rows)
    out = []
    for d in range(-1, top + 1):
        out.append(len(by_dim[d]) - ranks.get(d, 0) - ranks.get(d + 1, 0))
    return out


# ---------------------------------------------------- flag-complex shortcut


def _poly_mul(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out.get(i + j, 0) + x * y
    return {k: v for k, v in out.items() if v}


class _FlagHomology:
    """Reduced homology of Ind(G[sigma]) as {k + 1: rank H~_k}.

    Shifting by one makes the join of complexes multiply these polynomials.
    """

    def __init__(self, adj: list[int]):
        self.adj = adj
        self.cache: dict[int, dict[int, int]] = {0: {0: 1}}

    def _dedupe_twins(self, sigma: int) -> int:
        # vertices with equal neighbourhoods in G[sigma] fold onto one
        seen: dict[int, int] = {}
        out = 0
        for v in _bits(sigma):
            key = self.adj[v] & sigma
            if key not in seen:
                seen[key] = v
                out |= 1 << v
        return out

    def __call__(self, sigma: int) -> dict[int, int]:
        hit = self.cache.get(sigma)
        if hit is not None:
            return hit
        result = self._compute(sigma)
        self.cache[sigma] = result
        return result

    def _compute(self, sigma: int) -> dict[int, int]:
        adj = self.adj
        verts = _bits(sigma)
        if any(not adj[v] & sigma for v in verts):
            return {}  # cone over an isolated vertex
        reduced = self._dedupe_twins(sigma)
        if reduced != sigma:
            return self(reduced)
        nbhd = {v: adj[v] & sigma for v in verts}
        for u in verts:
            for v in verts:
                if u != v and nbhd[u] & ~nbhd[v] == 0:
                    return self(sigma & ~(1 << v))
        # split into connected components (join of their complexes)
        start = verts[0]
        comp = 1 << start
        frontier = comp
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= adj[v]
            frontier = nxt & sigma & ~comp
            comp |= frontier
        if comp != sigma:
            return _poly_mul(self(comp), self(sigma & ~comp))
        return _direct_flag(adj, sigma)


def _direct_flag(adj: list[int], sigma: int) -> dict[int, int]:
    verts = _bits(sigma)
    pos = {v: k for k, v in enumerate(verts)}
    edges = frozenset(
        (pos[u], pos[w]) for u in verts for w in _bits(adj[u] & sigma) if u < w
    )
    g = Graph(tuple(f"v{k}" for k in range(len(verts))), edges)
    ranks = reduced_homology_ranks(independence_complex(g))
    return {k: r for k, r in enumerate(ranks) if r}


# -------------------------------------------------------------- Betti tables


@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers ``entries[(i, j)]`` of a graded module (zeros omitted)."""

    entries: dict

    @property
    def projective_dimension(self) -> int:
        return max((i for i, _ in self.entries), default=0)

    @property
    def regularity(self) -> int:
        return max((j - i for i, j in self.entries), default=0)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.entries.get(ij, 0)

    def totals(self) -> list[int]:
        out = [0] * (self.projective_dimension + 1)
        for (i, _), v in self.entries.items():
            out[i] += v
        return out

    def row(self, r: int) -> list[int]:
        return [self[i, i + r] for i in range(self.projective_dimension + 1)]

    def format(self) -> str:
        """Columns are homological degrees, rows are j - i, dots mark zeros."""
        cols = self.projective_dimension + 1
        lowest = min((j - i for i, j in self.entries), default=0)
        rows = list(range(lowest, self.regularity + 1))
        cells = [[str(v) if v else "." for v in self.row(r)] for r in rows]
        totals = [str(v) for v in self.totals()]
        widths = [
            max(len(str(c)), len(totals[c]), *(len(line[c]) for line in cells))
            for c in range(cols)
        ]
        label_w = len("total:")

        def line(label: str, values: list[str]) -> str:
            body = " ".join(v.rjust(w) for v, w in zip(values, widths))
            return f"{label.rjust(label_w)} {body}"

        out = [line("", [str(c) for c in range(cols)]), line("total:", totals)]
        out += [line(f"{r}:", cells[k]) for k, r in enumerate(rows)]
        return "\n".join(out) + "\n"

    def to_structured(self) -> dict:
        return {
            "entries": [[i, j, v] for (i, j), v in sorted(self.entries.items())],
            "totals": self.totals(),
            "projective_dimension": self.projective_dimension,
            "regularity": self.regularity,
        }

    def __str__(self):
        return self.format()


def _check_ideal(i: MonomialIdeal, cap: int):
    if not i.is_squarefree():
        raise NotSquarefree(f"{i} is not squarefree")
    if i.is_unit():
        raise ValueError("the unit ideal has a zero quotient")
    if i.ring.nvars > cap:
        raise CapExceeded(f"{i.ring.nvars} variables exceeds the Betti cap {cap}")


def _edge_masks(i: MonomialIdeal) -> list[int] | None:
    if not all(sum(g) == 2 for g in i.generators):
        return None
    n = i.ring.nvars
    adj = [0] * n
    for g in i.generators:
        a, b = (k for k, e in enumerate(g) if e)
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    return adj


def betti_table(i: MonomialIdeal, quotient: bool = True, cap: int = DEFAULT_VARIABLE_CAP,
                method: str = "auto") -> BettiTable:
    """Graded Betti numbers of S/I (or of I when ``quotient`` is False).

    ``method="direct"`` forces boundary ranks of every induced subcomplex;
    ``"auto"`` uses the graph reductions when I is quadratic.
    """
    _check_ideal(i, cap)
    n = i.ring.nvars
    entries: dict[tuple[int, int], int] = {}

    def record(sigma_size: int, shifted: dict[int, int]):
        # shifted[k + 1] = rank H~_k contributes to beta_{j-k-1, j}
        for k1, r in shifted.items():
            hi = sigma_size - k1
            entries[hi, sigma_size] = entries.get((hi, sigma_size), 0) + r

    adj = _edge_masks(i) if method == "auto" else None
    if adj is not None:
        flag = _FlagHomology(adj)
        for sigma in range(1 << n):
            record(bin(sigma).count("1"), flag(sigma))
    else:
        delta = stanley_reisner_complex(i)
        for sigma in range(1 << n):
            sub = delta.restrict(sigma)
            ranks = reduced_homology_ranks(sub, cap=max(n, DEFAULT_HOMOLOGY_CAP))
            record(bin(sigma).count("1"), {k: r for k, r in enumerate(ranks) if r})
    entries = {k: v for k, v in entries.items() if v}
    if not quotient:
        entries = {(a - 1, b): v for (a, b), v in entries.items() if a >= 1}
    return BettiTable(entries)


def has_linear_resolution(i: MonomialIdeal, cap: int = DEFAULT_VARIABLE_CAP) -> bool:
    """True iff beta_{i,j}(S/I) vanishes off the line j = i + d - 1 for i >= 1."""
    degrees = {sum(g) for g in i.generators}
    if len(degrees) > 1:
        raise NotEquigenerated(f"generators of {i} have degrees {sorted(degrees)}")
    if not degrees:
        return True  # the zero ideal
    d = degrees.pop()
    table = betti_table(i, cap=cap)
    return all(j == hi + d - 1 for (hi, j) in table.entries if hi >= 1)


def k_polynomial(i: MonomialIdeal) -> dict[int, int]:
    """Numerator of the Hilbert series by inclusion-exclusion over generator lcms."""
    gens = i.generators
    out: dict[int, int] = {}
    for size in range(len(gens) + 1):
        sign = -1 if size % 2 else 1
        for subset in combinations(gens, size):
            deg = sum(max(col) for col in zip(*subset)) if subset else 0
            out[deg] = out.get(deg, 0) + sign
    return {k: v for k, v in out.items() if v}


def parse_betti_table(text: str) -> BettiTable:
    """Inverse of :meth:`BettiTable.format`."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    entries = {}
    for ln in lines[2:]:
        label, *vals = ln.split()
        r = int(label.rstrip(":"))
        for col, v in enumerate(vals):
            if v != ".":
                entries[col, col + r] = int(v)
    return BettiTable(entries)
