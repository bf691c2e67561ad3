"""Oriented Dutch windmill digraphs: construction, adjacency, serialization.

A windmill consists of m directed cycles of length n glued at a common hub,
vertex 1.  Vertex labels are 1-based at every external interface; the k-th
cycle uses labels 1 and (k-1)(n-1)+2 .. (k-1)(n-1)+n.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .matrices import RationalMatrix


@dataclass(frozen=True)
class WindmillParams:
    """m = number of cycle copies, n = cycle length (n >= 3)."""

    m: int
    n: int

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 1:
            raise ValueError(f"number of cycles m must be a positive integer, got {self.m!r}")
        if not isinstance(self.n, int) or self.n < 3:
            raise ValueError(f"cycle length n must be an integer >= 3, got {self.n!r}")

    @property
    def vertex_count(self):
        return self.m * (self.n - 1) + 1


@dataclass(frozen=True)
class Digraph:
    """Immutable digraph on vertices 1..vertex_count with an explicit edge set."""

    vertex_count: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.vertex_count < 1:
            raise ValueError(f"vertex count must be positive, got {self.vertex_count}")
        edges = frozenset((int(a), int(b)) for a, b in self.edges)
        for a, b in edges:
            if not (1 <= a <= self.vertex_count and 1 <= b <= self.vertex_count):
                raise ValueError(
                    f"edge ({a}, {b}) outside vertex range 1..{self.vertex_count}")
        object.__setattr__(self, "edges", edges)

    @cached_property
    def _succ(self):
        succ = {v: [] for v in range(1, self.vertex_count + 1)}
        for a, b in sorted(self.edges):
            succ[a].append(b)
        return {v: tuple(ws) for v, ws in succ.items()}

    def successors(self, v):
        self._check_vertex(v)
        return self._succ[v]

    def out_degree(self, v):
        return len(self.successors(v))

    def in_degree(self, v):
        self._check_vertex(v)
        return sum(1 for a, b in self.edges if b == v)

    def sorted_edges(self):
        return sorted(self.edges)

    def _check_vertex(self, v):
        if not (1 <= v <= self.vertex_count):
            raise ValueError(f"vertex {v} outside range 1..{self.vertex_count}")


def build_windmill(params):
    """Digraph with m cycles of length n sharing hub vertex 1."""
    m, n = params.m, params.n
    edges = set()
    for k in range(1, m + 1):
        base = (k - 1) * (n - 1)
        edges.add((1, base + 2))
        for i in range(2, n):
            edges.add((base + i, base + i + 1))
        edges.add((base + n, 1))
    return Digraph(params.vertex_count, frozenset(edges))


def adjacency_matrix(g):
    """0/1 matrix ordered by vertex label: entry (i, j) = 1 iff i -> j."""
    n = g.vertex_count
    rows = [[0] * n for _ in range(n)]
    for a, b in g.edges:
        rows[a - 1][b - 1] = 1
    return RationalMatrix(rows)


def cycle_vertices(params, k):
    """Vertex sequence of the k-th cycle: <1, ..., 1>."""
    if not (1 <= k <= params.m):
        raise ValueError(f"cycle index {k} outside range 1..{params.m}")
    base = (k - 1) * (params.n - 1)
    return [1] + [base + i for i in range(2, params.n + 1)] + [1]


def cycle_vertex_set(params, k):
    """Vertex set of the k-th cycle (the hub plus its n-1 own vertices)."""
    return set(cycle_vertices(params, k))


def export_dot(g):
    """Deterministic DOT text: one node line per vertex, edges sorted."""
    lines = ["digraph {"]
    for v in range(1, g.vertex_count + 1):
        lines.append(f"  {v};")
    for a, b in g.sorted_edges():
        lines.append(f"  {a} -> {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def windmill_json(params):
    """Graph JSON: {"m", "n", "vertices", "edges"} with edges sorted."""
    g = build_windmill(params)
    return {
        "m": params.m,
        "n": params.n,
        "vertices": g.vertex_count,
        "edges": [list(e) for e in g.sorted_edges()],
    }
