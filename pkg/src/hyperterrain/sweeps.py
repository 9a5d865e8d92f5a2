"""Furthest-vertex sweeps: beams, mutually distant pairs, middle vertices."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .exceptions import IterationCapExceeded
from .graph import Graph, bfs

__all__ = [
    "SweepTrace",
    "furthest_vertex",
    "mutually_distant_pair",
    "beam",
    "beam_trace",
    "middle_vertex",
]


@dataclass
class SweepTrace:
    """Vertices ``v_0..v_t`` with each ``v_{i+1}`` furthest from ``v_i``.

    ``dists[i] = d(v_i, v_{i+1})``.  When produced by
    :func:`mutually_distant_pair` the last two vertices are mutually distant.
    ``distances`` caches the BFS vector of every vertex in ``sequence`` so
    downstream estimators need not repeat sweeps; it is not serialised.
    """

    sequence: list[int]
    dists: list[int]
    mutual: bool = False
    distances: dict[int, np.ndarray] = field(default_factory=dict, repr=False, compare=False)

    @property
    def terminal_pair(self) -> tuple[int, int]:
        if len(self.sequence) == 1:
            return self.sequence[0], self.sequence[0]
        return self.sequence[-2], self.sequence[-1]

    @property
    def bfs_count(self) -> int:
        return len(self.distances)

    def to_json(self, g: Graph) -> dict:
        labels = g.labels.tolist()
        x, y = self.terminal_pair
        return {
            "sequence": [labels[v] for v in self.sequence],
            "dists": list(self.dists),
            "terminal_pair": [labels[x], labels[y]],
            "mutually_distant": self.mutual,
        }


def furthest_vertex(g: Graph, v: int, dist: np.ndarray | None = None) -> int:
    """Smallest-id vertex among those furthest from ``v``."""
    dist = bfs(g, v) if dist is None else dist
    return int(np.argmax(dist))


def mutually_distant_pair(g: Graph, start: int = 0) -> SweepTrace:
    """Sweep furthest vertices from ``start`` until the last pair is mutually distant.

    Each BFS from ``v_i`` yields both ``e(v_i)`` and ``v_{i+1}``.  Once
    ``e(v_i) == d(v_{i-1}, v_i)`` the pair ``(v_{i-1}, v_i)`` is mutually
    distant and the sweep stops without appending ``v_{i+1}``.
    """
    v = g.check_vertex(start)
    seq = [v]
    dists: list[int] = []
    cache: dict[int, np.ndarray] = {}
    for _ in range(g.n + 1):
        dv = cache.get(v)
        if dv is None:
            dv = cache[v] = bfs(g, v)
        ecc = int(dv.max())
        if dists and ecc == dists[-1]:
            return SweepTrace(seq, dists, mutual=True, distances=cache)
        if len(seq) == 1 and ecc == 0:
            return SweepTrace(seq, dists, mutual=True, distances=cache)
        v = int(np.argmax(dv))
        seq.append(v)
        dists.append(ecc)
    raise IterationCapExceeded(f"no mutually distant pair after {g.n} sweeps from {start}")


def beam_trace(g: Graph, z: int) -> SweepTrace:
    """Two sweeps from ``z``; the trace is ``[z, x, y]`` with BFS vectors of z and x."""
    z = g.check_vertex(z)
    dz = bfs(g, z)
    x = int(np.argmax(dz))
    dx = bfs(g, x)
    y = int(np.argmax(dx))
    return SweepTrace([z, x, y], [int(dz[x]), int(dx[y])], distances={z: dz, x: dx})


def beam(g: Graph, z: int) -> tuple[int, int]:
    """``x`` furthest from ``z`` and ``y`` furthest from ``x``."""
    trace = beam_trace(g, z)
    return trace.terminal_pair


def middle_vertex(path: Sequence[int]) -> int:
    """Vertex at index floor(len/2) of a path, counted from its first vertex."""
    if not path:
        raise ValueError("empty path has no middle vertex")
    return path[(len(path) - 1) // 2]
