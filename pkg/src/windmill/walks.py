"""Brute-force walk oracle: enumerate and count walks without matrix arithmetic.

Counting uses dynamic programming over (vertex, remaining length), so checking
every length up to n^2 - 1 on a grid of windmills stays polynomial.  Listing
walks is inherently exponential and is bounded by an explicit cap.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .matrices import RationalMatrix

DEFAULT_CAP = 10_000


@dataclass(frozen=True)
class Walk:
    """Vertex sequence; length is the number of edges (one less than vertices)."""

    vertices: tuple

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if not self.vertices:
            raise ValueError("a walk must contain at least one vertex")

    @property
    def length(self):
        return len(self.vertices) - 1

    def then(self, other):
        """Concatenate: self followed by `other`, which must start where self ends."""
        if other.vertices[0] != self.vertices[-1]:
            raise ValueError(
                f"cannot concatenate: walk ends at {self.vertices[-1]} "
                f"but next walk starts at {other.vertices[0]}")
        return Walk(self.vertices + other.vertices[1:])


@dataclass(frozen=True)
class WalkEnumeration:
    """All walks of one exact length between two vertices, possibly capped."""

    start: int
    end: int
    length: int
    walks: tuple
    truncated: bool

    def to_json(self):
        return {
            "from": self.start,
            "to": self.end,
            "length": self.length,
            "walks": [list(w.vertices) for w in self.walks],
            "truncated": self.truncated,
        }


def is_valid_walk(g, walk):
    """True if every consecutive pair of the walk is an edge of g."""
    vs = walk.vertices
    return all(1 <= v <= g.vertex_count for v in vs) and all(
        (a, b) in g.edges for a, b in zip(vs, vs[1:]))


def _counts_from(g, i, length):
    """counts[v] = number of walks of exactly `length` edges from i to v."""
    counts = [0] * (g.vertex_count + 1)
    counts[i] = 1
    for _ in range(length):
        nxt = [0] * (g.vertex_count + 1)
        for v in range(1, g.vertex_count + 1):
            c = counts[v]
            if c:
                for w in g.successors(v):
                    nxt[w] += c
        counts = nxt
    return counts


def count_walks(g, i, j, length):
    """Number of distinct walks of exactly `length` edges from i to j."""
    g._check_vertex(i)
    g._check_vertex(j)
    if length < 0:
        raise ValueError(f"walk length must be non-negative, got {length}")
    return _counts_from(g, i, length)[j]


def count_walks_matrix(g, length):
    """Matrix W with W[i][j] = count_walks(g, i, j, length)."""
    if length < 0:
        raise ValueError(f"walk length must be non-negative, got {length}")
    rows = [_counts_from(g, i, length)[1:] for i in range(1, g.vertex_count + 1)]
    return RationalMatrix(rows)


def enumerate_walks(g, i, j, length, cap=DEFAULT_CAP):
    """All walks of exact `length` from i to j in lexicographic order.

    At most `cap` walks are listed; if more exist the result carries
    truncated=True rather than failing silently.
    """
    g._check_vertex(i)
    g._check_vertex(j)
    if length < 0:
        raise ValueError(f"walk length must be non-negative, got {length}")
    if cap < 1:
        raise ValueError(f"cap must be at least 1, got {cap}")

    # ways[r][v] = number of walks of length r from v to j, used to prune
    # dead branches so listing only ever visits productive prefixes.
    ways = [[0] * (g.vertex_count + 1) for _ in range(length + 1)]
    ways[0][j] = 1
    for r in range(1, length + 1):
        for v in range(1, g.vertex_count + 1):
            ways[r][v] = sum(ways[r - 1][w] for w in g.successors(v))

    total = ways[length][i]
    walks = []
    prefix = [i]

    def extend(v, remaining):
        if len(walks) == cap:
            return
        if remaining == 0:
            walks.append(Walk(tuple(prefix)))
            return
        for w in g.successors(v):
            if ways[remaining - 1][w]:
                prefix.append(w)
                extend(w, remaining - 1)
                prefix.pop()
                if len(walks) == cap:
                    return

    if total:
        extend(i, length)
    return WalkEnumeration(i, j, length, tuple(walks), truncated=total > cap)


def shortest_walk_length(g, i, j):
    """Length of the shortest walk from i to j; None if unreachable."""
    g._check_vertex(i)
    g._check_vertex(j)
    if i == j:
        return 0
    dist = {i: 0}
    queue = deque([i])
    while queue:
        v = queue.popleft()
        for w in g.successors(v):
            if w not in dist:
                dist[w] = dist[v] + 1
                if w == j:
                    return dist[w]
                queue.append(w)
    return None


def windmill_length_n_minus_1_support(params):
    """Predicted (i, j) pairs joined by a walk of length n-1, sorted.

    Four families: hub to each cycle's last vertex; each cycle's second
    vertex to the hub; one step backwards within a cycle; and the analogous
    cross-cycle backwards step.
    """
    m, n = params.m, params.n
    pairs = set()
    for k in range(1, m + 1):
        base = (k - 1) * (n - 1)
        pairs.add((1, base + n))
        pairs.add((base + 2, 1))
        for ell in range(3, n + 1):
            pairs.add((base + ell, base + ell - 1))
            for r in range(1, m + 1):
                if r != k:
                    pairs.add((base + ell, (r - 1) * (n - 1) + ell - 1))
    return sorted(pairs)
