"""Maximum matchings in general graphs.

``max_matching`` runs Edmonds' algorithm: repeated augmenting-path search
with odd cycles (blossoms) contracted on the fly through a ``base``
relabeling, so the search stays complete on non-bipartite graphs.  By
Berge's theorem the absence of an augmenting path certifies maximality,
which is exactly what ``find_augmenting_path`` returning ``None`` means.

``max_matching_bruteforce`` is the independent oracle: exhaustive search
over edge subsets with non-adjacency pruning, used by the test suite to
validate the augmenting-path code and never called by it.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .graph import Edge, Graph, edge

__all__ = [
    "AugmentingPath",
    "matching_violation",
    "is_matching",
    "find_augmenting_path",
    "augment",
    "max_matching",
    "max_matching_bruteforce",
    "maximum_matchings",
    "BRUTEFORCE_MAX_EDGES",
]

#: Edge-count ceiling for the exhaustive oracle; keeps suite runtimes sane.
BRUTEFORCE_MAX_EDGES = 24


@dataclass(frozen=True)
class AugmentingPath:
    """Odd-length alternating path between two unmatched vertices.

    ``vertices`` is the walk (smaller endpoint first); ``matched_indices``
    are the positions k for which (vertices[k], vertices[k+1]) is matched,
    always (1, 3, 5, ...).
    """

    vertices: tuple[int, ...]
    matched_indices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    def edges(self) -> list[Edge]:
        return [
            edge(self.vertices[k], self.vertices[k + 1])
            for k in range(len(self.vertices) - 1)
        ]


def matching_violation(g: Graph, edges: Iterable[Edge]) -> str | None:
    """Reason the edge set fails to be a matching of ``g``, or ``None``."""
    covered: dict[int, Edge] = {}
    for e in edges:
        try:
            u, v = e
        except (TypeError, ValueError):
            return f"{e!r} is not an edge pair"
        if e not in g.edges:
            return f"edge {e} is not an edge of the graph"
        for w in (u, v):
            if w in covered:
                return f"vertex {w} covered twice (by {covered[w]} and {e})"
            covered[w] = e
    return None


def is_matching(g: Graph, edges: Iterable[Edge]) -> bool:
    """True iff ``edges`` is a set of pairwise non-adjacent edges of ``g``."""
    return matching_violation(g, set(edges)) is None


def _lca(match: list[int], base: list[int], parent: list[int], a: int, b: int) -> int:
    """Meeting point of the two alternating tree walks, in base labels."""
    seen = set()
    while True:
        a = base[a]
        seen.add(a)
        if match[a] == -1:
            break
        a = parent[match[a]]
    while True:
        b = base[b]
        if b in seen:
            return b
        b = parent[match[b]]


def _mark_blossom(
    match: list[int],
    base: list[int],
    parent: list[int],
    in_blossom: list[bool],
    v: int,
    stem: int,
    child: int,
) -> None:
    """Walk v up to the blossom stem, recording members and rewiring parents
    so the contracted cycle can be traversed in either direction."""
    while base[v] != stem:
        in_blossom[base[v]] = True
        in_blossom[base[match[v]]] = True
        parent[v] = child
        child = match[v]
        v = parent[match[v]]


def _find_path_from(adj: list[list[int]], match: list[int], root: int) -> list[int] | None:
    """BFS for an augmenting path from ``root``; returns the vertex walk
    (exposed endpoint first, root last) or ``None``."""
    n = len(adj)
    parent = [-1] * n
    base = list(range(n))
    used = [False] * n
    used[root] = True
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for u in adj[v]:
            if base[v] == base[u] or match[v] == u:
                continue
            if u == root or (match[u] != -1 and parent[match[u]] != -1):
                # u is an even (outer) vertex: contract the blossom
                stem = _lca(match, base, parent, v, u)
                in_blossom = [False] * n
                _mark_blossom(match, base, parent, in_blossom, v, stem, u)
                _mark_blossom(match, base, parent, in_blossom, u, stem, v)
                for i in range(n):
                    if in_blossom[base[i]]:
                        base[i] = stem
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[u] == -1:
                parent[u] = v
                if match[u] == -1:
                    # exposed vertex reached: reconstruct the walk
                    path = [u]
                    w = u
                    while True:
                        pw = parent[w]
                        path.append(pw)
                        w = match[pw]
                        if w == -1:
                            return path
                        path.append(w)
                else:
                    used[match[u]] = True
                    queue.append(match[u])
    return None


def _as_augmenting_path(walk: list[int]) -> AugmentingPath:
    if walk[-1] < walk[0]:
        walk = walk[::-1]
    return AugmentingPath(tuple(walk), tuple(range(1, len(walk) - 1, 2)))


def find_augmenting_path(g: Graph, matching: Iterable[Edge]) -> AugmentingPath | None:
    """Find an augmenting path for ``matching``, or certify there is none.

    A ``None`` result means the matching is maximum.  Raises ``ValueError``
    if the input is not a valid matching of ``g``.
    """
    matching = frozenset(matching)
    reason = matching_violation(g, matching)
    if reason is not None:
        raise ValueError(f"invalid matching: {reason}")
    adj = g.adjacency()
    match = [-1] * g.n
    for u, v in matching:
        match[u] = v
        match[v] = u
    for root in range(g.n):
        if match[root] == -1 and adj[root]:
            walk = _find_path_from(adj, match, root)
            if walk is not None:
                return _as_augmenting_path(walk)
    return None


def augment(matching: Iterable[Edge], path: AugmentingPath) -> frozenset[Edge]:
    """Flip the path's edges; the result is a matching one edge larger."""
    result = set(matching)
    for k, e in enumerate(path.edges()):
        if k % 2 == 1:
            result.remove(e)
        else:
            result.add(e)
    return frozenset(result)


def max_matching(g: Graph) -> frozenset[Edge]:
    """A maximum matching of ``g``, deterministic for a fixed graph.

    Tie-breaking is fixed: greedy seeding over lexicographically sorted
    edges, then one augmenting-path search per exposed vertex in
    ascending order with ascending adjacency scans.
    """
    adj = g.adjacency()
    match = [-1] * g.n
    for u, v in sorted(g.edges):
        if match[u] == -1 and match[v] == -1:
            match[u] = v
            match[v] = u
    for root in range(g.n):
        if match[root] == -1 and adj[root]:
            walk = _find_path_from(adj, match, root)
            if walk is not None:
                for k in range(0, len(walk) - 1, 2):
                    a, b = walk[k], walk[k + 1]
                    match[a] = b
                    match[b] = a
    return frozenset(edge(v, match[v]) for v in range(g.n) if match[v] > v)


def max_matching_bruteforce(g: Graph) -> frozenset[Edge]:
    """Exhaustive maximum matching; the oracle for ``max_matching``."""
    if g.m > BRUTEFORCE_MAX_EDGES:
        raise ValueError(f"brute-force ceiling is {BRUTEFORCE_MAX_EDGES} edges")
    edges = sorted(g.edges)
    masks = [(1 << u) | (1 << v) for u, v in edges]
    count = len(edges)
    best: list[Edge] = []
    chosen: list[Edge] = []

    def search(i: int, used: int) -> None:
        nonlocal best
        if len(chosen) + (count - i) <= len(best):
            return
        if i == count:
            best = chosen.copy()
            return
        if not used & masks[i]:
            chosen.append(edges[i])
            search(i + 1, used | masks[i])
            chosen.pop()
        search(i + 1, used)

    search(0, 0)
    return frozenset(best)


def maximum_matchings(g: Graph) -> list[frozenset[Edge]]:
    """All maximum matchings of ``g``, for exhaustive triple searches.

    Exponential in general; callers enforce their own edge ceilings.
    """
    target = len(max_matching(g))
    edges = sorted(g.edges)
    masks = [(1 << u) | (1 << v) for u, v in edges]
    count = len(edges)
    out: list[frozenset[Edge]] = []
    chosen: list[Edge] = []

    def search(i: int, used: int) -> None:
        if len(chosen) == target:
            out.append(frozenset(chosen))
            return
        if len(chosen) + (count - i) < target:
            return
        if not used & masks[i]:
            chosen.append(edges[i])
            search(i + 1, used | masks[i])
            chosen.pop()
        search(i + 1, used)

    search(0, 0)
    return out
