"""Eccentricity terrain of shortest paths.

Walking a shortest path, each edge goes up, stays level or goes down in
eccentricity.  Maximal runs of one kind are hills (up or down) and plains;
interior plains are further told apart by the edges on either side.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .exact import EccentricityProfile
from .exceptions import NotAShortestPath
from .graph import Graph, is_shortest_path, multi_source_bfs

__all__ = [
    "EdgeClass",
    "PathKind",
    "Segment",
    "TerrainSegmentation",
    "classify_edges",
    "segments_of",
    "segment_path",
    "classify_path_kind",
    "path_kind_of",
    "edge_count_identities",
    "path_locality_stats",
    "render_strip",
]


class EdgeClass(str, enum.Enum):
    UP = "U"
    HORIZONTAL = "H"
    DOWN = "D"


class PathKind(str, enum.Enum):
    GENERAL = "General"
    END_MINIMAL = "EndMinimal"
    STRICT_END_MINIMAL = "StrictEndMinimal"


_STRIP = {"U": "/", "H": "-", "D": "\\"}
_HILL = {"U": "UpHill", "D": "DownHill", "H": "Plain"}


@dataclass(frozen=True)
class Segment:
    """Maximal monotone run of edges ``path[start] .. path[start + length]``.

    ``plain_kind`` is Plateau / Valley / Terrace for plains with an edge on
    both sides, Boundary for plains touching a path end, None for hills.
    """

    label: str
    start: int
    length: int
    plain_kind: str | None = None

    @property
    def end(self) -> int:
        return self.start + self.length


def classify_edges(ecc_seq: Sequence[int]) -> str:
    """One letter per edge: U (up), H (level) or D (down)."""
    out = []
    for a, b in zip(ecc_seq, ecc_seq[1:]):
        out.append("U" if a < b else "D" if a > b else "H")
    return "".join(out)


def segments_of(classes: str) -> list[Segment]:
    """Split an edge-class string into maximal segments and name the plains."""
    segs = []
    k = len(classes)
    i = 0
    while i < k:
        c = classes[i]
        j = i
        while j < k and classes[j] == c:
            j += 1
        kind = None
        if c == "H":
            if i == 0 or j == k:
                kind = "Boundary"
            else:
                before, after = classes[i - 1], classes[j]
                # before: edge into the plain, after: edge leaving it
                if before == "U" and after == "D":
                    kind = "Plateau"
                elif before == "D" and after == "U":
                    kind = "Valley"
                else:
                    kind = "Terrace"
        segs.append(Segment(_HILL[c], i, j - i, kind))
        i = j
    return segs


@dataclass(frozen=True)
class TerrainSegmentation:
    path: tuple[int, ...]
    classes: str
    segments: tuple[Segment, ...]

    @property
    def up(self) -> int:
        return self.classes.count("U")

    @property
    def horizontal(self) -> int:
        return self.classes.count("H")

    @property
    def down(self) -> int:
        return self.classes.count("D")

    @property
    def counts(self) -> dict[str, int]:
        return {"U": self.up, "H": self.horizontal, "D": self.down}

    def strip(self) -> str:
        return render_strip(self.classes)

    def to_json(self, g: Graph) -> dict:
        labels = g.labels.tolist()
        return {
            "path": [labels[v] for v in self.path],
            "classes": list(self.classes),
            "segments": [
                {"label": s.label, "start": s.start, "length": s.length,
                 "plain_kind": s.plain_kind}
                for s in self.segments
            ],
            "counts": self.counts,
            "strip": self.strip(),
        }


def render_strip(classes: str) -> str:
    """ASCII profile of a path: ``/`` up, ``-`` level, ``\\`` down."""
    return "".join(_STRIP[c] for c in classes)


def segment_path(g: Graph, prof: EccentricityProfile,
                 path: Sequence[int]) -> TerrainSegmentation:
    if not is_shortest_path(g, path):
        raise NotAShortestPath(f"not a shortest path: {list(path)!r}")
    ecc = prof.ecc
    classes = classify_edges([int(ecc[v]) for v in path])
    return TerrainSegmentation(tuple(int(v) for v in path), classes,
                               tuple(segments_of(classes)))


def path_kind_of(ecc_seq: Sequence[int]) -> PathKind:
    last = ecc_seq[-1]
    rest = ecc_seq[:-1]
    if all(e > last for e in rest):
        return PathKind.STRICT_END_MINIMAL
    if all(e >= last for e in rest):
        return PathKind.END_MINIMAL
    return PathKind.GENERAL


def classify_path_kind(prof: EccentricityProfile, path: Sequence[int]) -> PathKind:
    """Strongest of General / EndMinimal / StrictEndMinimal that the path satisfies."""
    return path_kind_of([int(prof.ecc[v]) for v in path])


def edge_count_identities(seg: TerrainSegmentation, prof: EccentricityProfile) -> dict[str, int]:
    """Both sides of ``D - U = e(y) - e(x)`` and ``2U + H = d(y,x) - (e(y) - e(x))``.

    ``y`` is the first and ``x`` the last vertex of the path.
    """
    ey = int(prof.ecc[seg.path[0]])
    ex = int(prof.ecc[seg.path[-1]])
    d = len(seg.path) - 1
    return {
        "lhs1": seg.down - seg.up,
        "rhs1": ey - ex,
        "lhs2": 2 * seg.up + seg.horizontal,
        "rhs2": d - (ey - ex),
    }


def path_locality_stats(g: Graph, prof: EccentricityProfile, loc: np.ndarray,
                        path: Sequence[int], delta2: int | None = None,
                        center_dist: np.ndarray | None = None) -> dict[str, int | None]:
    """Count path vertices with locality above 1.

    With ``delta2`` the count is also split into those outside C_{<=delta}
    and those farther than 2 delta from the center.
    """
    flagged = [v for v in path if loc[v] > 1]
    out: dict[str, int | None] = {
        "count_loc_gt1": len(flagged),
        "count_outside_Cdelta": None,
        "count_far_from_center": None,
    }
    if delta2 is not None:
        if center_dist is None:
            center_dist = multi_source_bfs(g, prof.center)
        out["count_outside_Cdelta"] = sum(
            1 for v in flagged if 2 * (int(prof.ecc[v]) - prof.rad) > delta2)
        out["count_far_from_center"] = sum(1 for v in flagged if center_dist[v] > delta2)
    return out
