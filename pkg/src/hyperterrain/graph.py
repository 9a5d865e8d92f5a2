"""Immutable graph container, BFS primitives and metric helpers.

Vertices are dense integer ids ``0..n-1``.  The original ids read from an edge
list are kept in :attr:`Graph.labels` and are what every report emits.
"""
from __future__ import annotations

import io
import os
from typing import Iterable, Iterator, Sequence

import numpy as np

from .exceptions import (
    DisconnectedGraph,
    DuplicateEdge,
    EmptyInput,
    KOutOfRange,
    MalformedInput,
    SelfLoop,
    UnknownVertex,
)

__all__ = [
    "Graph",
    "build_graph",
    "read_edgelist",
    "parse_edgelist",
    "format_edgelist",
    "bfs",
    "multi_source_bfs",
    "interval",
    "interval_slice",
    "disk",
    "gromov_product",
    "canonical_shortest_path",
    "all_shortest_paths",
    "random_shortest_path",
    "is_shortest_path",
]


class Graph:
    """Simple, connected, undirected graph in compressed adjacency form.

    Do not call the constructor directly; use :func:`build_graph`, which
    validates the input.  Instances are treated as immutable.
    """

    __slots__ = ("n", "m", "indptr", "indices", "adj", "labels", "_label_index")

    def __init__(self, indptr: np.ndarray, indices: np.ndarray, labels: np.ndarray):
        self.n = len(indptr) - 1
        self.m = len(indices) // 2
        self.indptr = indptr
        self.indices = indices
        self.indptr.setflags(write=False)
        self.indices.setflags(write=False)
        flat = indices.tolist()
        bounds = indptr.tolist()
        # plain lists are considerably faster than ndarray slices inside BFS loops
        self.adj = tuple(flat[bounds[v]:bounds[v + 1]] for v in range(self.n))
        self.labels = labels
        self.labels.setflags(write=False)
        self._label_index = None

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def neighbors(self, v: int) -> list[int]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield every edge once as ``(u, v)`` with ``u < v``."""
        for u, nbrs in enumerate(self.adj):
            for v in nbrs:
                if u < v:
                    yield u, v

    def label(self, v: int) -> int:
        return int(self.labels[v])

    def index_of(self, label) -> int:
        """Dense id of an original vertex label."""
        if self._label_index is None:
            self._label_index = {int(l): i for i, l in enumerate(self.labels.tolist())}
        try:
            return self._label_index[int(label)]
        except (KeyError, TypeError, ValueError):
            raise UnknownVertex(f"unknown vertex {label!r}") from None

    def check_vertex(self, v) -> int:
        if isinstance(v, (bool, np.bool_)) or not isinstance(v, (int, np.integer)):
            raise UnknownVertex(f"vertex id must be an integer, got {v!r}")
        if not 0 <= v < self.n:
            raise UnknownVertex(f"vertex {v} out of range [0, {self.n})")
        return int(v)


def build_graph(edges: Iterable[Sequence[int]] | np.ndarray) -> Graph:
    """Validate an edge list and build a :class:`Graph`.

    Vertex ids may be any non-negative integers; they are densely relabeled in
    ascending order.  Self-loops, repeated edges (in either orientation) and
    disconnected inputs are rejected.
    """
    arr = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges)
    if arr.size == 0:
        raise EmptyInput("edge list is empty")
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise MalformedInput(f"expected pairs of vertex ids, got array of shape {arr.shape}")
    if not np.issubdtype(arr.dtype, np.integer):
        raise MalformedInput("vertex ids must be integers")
    arr = arr.astype(np.int64, copy=False)
    if (arr < 0).any():
        bad = arr[(arr < 0).any(axis=1)][0]
        raise MalformedInput(f"negative vertex id in edge ({bad[0]}, {bad[1]})")

    loops = np.flatnonzero(arr[:, 0] == arr[:, 1])
    if loops.size:
        v = int(arr[loops[0], 0])
        raise SelfLoop(f"self-loop at vertex {v} (edge #{int(loops[0])})")

    labels, inverse = np.unique(arr, return_inverse=True)
    inverse = inverse.reshape(arr.shape)
    n = len(labels)
    lo = np.minimum(inverse[:, 0], inverse[:, 1])
    hi = np.maximum(inverse[:, 0], inverse[:, 1])
    keys = lo * n + hi
    order = np.argsort(keys, kind="stable")
    sorted_keys = keys[order]
    dup = np.flatnonzero(sorted_keys[1:] == sorted_keys[:-1])
    if dup.size:
        idx = order[dup[0] + 1]
        raise DuplicateEdge(
            f"duplicate edge ({int(arr[idx, 0])}, {int(arr[idx, 1])}) (edge #{int(idx)})"
        )

    src = np.concatenate([lo, hi])
    dst = np.concatenate([hi, lo])
    # sort by (src, dst) so every neighbor list comes out ascending
    perm = np.lexsort((dst, src))
    indices = dst[perm].astype(np.int64)
    counts = np.bincount(src, minlength=n)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(counts, out=indptr[1:])
    g = Graph(indptr, indices, labels.astype(np.int64))

    dist = bfs(g, 0)
    if (dist < 0).any():
        missing = int(np.flatnonzero(dist < 0)[0])
        raise DisconnectedGraph(
            f"graph is disconnected: vertex {g.label(missing)} unreachable from "
            f"vertex {g.label(0)}"
        )
    return g


def parse_edgelist(text: str) -> list[tuple[int, int]]:
    """Parse edge-list text: two integers per line, ``#``/``%`` lines are comments."""
    edges = []
    for lineno, line in enumerate(io.StringIO(text), start=1):
        s = line.strip()
        if not s or s[0] in "#%":
            continue
        parts = s.split()
        if len(parts) != 2:
            raise MalformedInput(f"line {lineno}: expected two vertex ids, got {s!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise MalformedInput(f"line {lineno}: non-integer vertex id in {s!r}") from None
        if u < 0 or v < 0:
            raise MalformedInput(f"line {lineno}: negative vertex id in {s!r}")
        edges.append((u, v))
    if not edges:
        raise EmptyInput("edge list contains no edges")
    return edges


def read_edgelist(path: str | os.PathLike) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return build_graph(parse_edgelist(fh.read()))


def format_edgelist(g: Graph) -> str:
    labels = g.labels.tolist()
    return "".join(f"{labels[u]} {labels[v]}\n" for u, v in g.edges())


def bfs(g: Graph, source: int) -> np.ndarray:
    """Hop distances from ``source``; unreachable vertices get -1."""
    source = g.check_vertex(source)
    return multi_source_bfs(g, (source,))


def multi_source_bfs(g: Graph, sources: Iterable[int], limit: int | None = None) -> np.ndarray:
    """Distances to the nearest source, optionally truncated at ``limit`` hops."""
    adj = g.adj
    dist = [-1] * g.n
    queue = []
    for s in sources:
        if dist[s] < 0:
            dist[s] = 0
            queue.append(s)
    for u in queue:
        du = dist[u] + 1
        if limit is not None and du > limit:
            break
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = du
                queue.append(w)
    return np.array(dist, dtype=np.int64)


def interval(g: Graph, x: int, y: int, dx: np.ndarray, dy: np.ndarray) -> frozenset[int]:
    """All vertices lying on some shortest (x, y)-path."""
    mask = dx + dy == dx[y]
    return frozenset(np.flatnonzero(mask).tolist())


def interval_slice(g: Graph, x: int, y: int, k: int, dx: np.ndarray | None = None,
           dy: np.ndarray | None = None) -> frozenset[int]:
    """Interval vertices at distance exactly ``k`` from ``x``."""
    dx = bfs(g, x) if dx is None else dx
    dy = bfs(g, y) if dy is None else dy
    if not 0 <= k <= dx[y]:
        raise KOutOfRange(f"k={k} outside [0, d(x,y)={int(dx[y])}]")
    mask = (dx + dy == dx[y]) & (dx == k)
    return frozenset(np.flatnonzero(mask).tolist())


def disk(g: Graph, centers: Iterable[int], r: int) -> frozenset[int]:
    centers = [g.check_vertex(c) for c in centers]
    if not centers:
        raise EmptyInput("disk needs at least one center")
    if r < 0:
        raise KOutOfRange(f"disk radius must be non-negative, got {r}")
    dist = multi_source_bfs(g, centers, limit=r)
    return frozenset(np.flatnonzero(dist >= 0).tolist())


def gromov_product(g: Graph, x: int, y: int, z: int, dz: np.ndarray | None = None,
                   dx: np.ndarray | None = None) -> int:
    """Doubled Gromov product ``2 (x|y)_z = d(x,z) + d(y,z) - d(x,y)``."""
    dz = bfs(g, z) if dz is None else dz
    dx = bfs(g, x) if dx is None else dx
    return int(dz[x] + dz[y] - dx[y])


def canonical_shortest_path(g: Graph, source: int, target: int,
                            dist: np.ndarray | None = None) -> list[int]:
    """Deterministic shortest path from ``source`` to ``target``.

    Walks back from ``target`` always stepping to the smallest-id neighbor that
    is one hop closer to ``source``.  ``dist`` must be BFS distances from
    ``source`` when given.
    """
    source = g.check_vertex(source)
    target = g.check_vertex(target)
    dist = bfs(g, source) if dist is None else dist
    path = [target]
    v = target
    while v != source:
        want = dist[v] - 1
        for w in g.adj[v]:
            if dist[w] == want:
                v = w
                break
        path.append(v)
    path.reverse()
    return path


def all_shortest_paths(g: Graph, source: int, target: int, dist: np.ndarray,
                       limit: int | None = None) -> Iterator[list[int]]:
    """Enumerate every shortest (source, target)-path in lexicographic order.

    ``dist`` holds BFS distances from ``target``; the DFS only ever steps to a
    neighbor one hop closer to the target, so no dead ends are explored.
    """
    count = 0
    path = [source]
    stack = [iter(g.adj[source])]
    if source == target:
        yield [source]
        return
    while stack:
        v = path[-1]
        want = dist[v] - 1
        for w in stack[-1]:
            if dist[w] == want:
                path.append(w)
                if w == target:
                    yield list(path)
                    count += 1
                    if limit is not None and count >= limit:
                        return
                    path.pop()
                    continue
                stack.append(iter(g.adj[w]))
                break
        else:
            stack.pop()
            path.pop()


def random_shortest_path(g: Graph, source: int, target: int, dist: np.ndarray,
                         rng) -> list[int]:
    """A shortest path built by uniform random steps toward ``target``.

    ``dist`` holds BFS distances from ``target``; ``rng`` needs a ``below(k)``
    method returning an integer in ``[0, k)``.
    """
    path = [source]
    v = source
    while v != target:
        want = dist[v] - 1
        options = [w for w in g.adj[v] if dist[w] == want]
        v = options[rng.below(len(options))]
        path.append(v)
    return path


def is_shortest_path(g: Graph, path: Sequence[int], dist: np.ndarray | None = None) -> bool:
    """True when ``path`` is a walk along edges whose length equals d(first, last)."""
    if not path:
        return False
    for v in path:
        if not (isinstance(v, (int, np.integer)) and 0 <= v < g.n):
            return False
    for a, b in zip(path, path[1:]):
        # neighbor lists are sorted, so a binary search would do; lists are short
        if b not in g.adj[a]:
            return False
    dist = bfs(g, path[0]) if dist is None else dist
    return int(dist[path[-1]]) == len(path) - 1
