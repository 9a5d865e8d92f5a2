"""Pseudoconvexity and quasiconvexity of vertex sets.

A set S is beta-pseudoconvex when every vertex z outside S on a shortest path
between two members x, y of S lies within beta of x or of y.  It is
epsilon-quasiconvex when every such interval stays within epsilon of S.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .exact import EccentricityProfile
from .exceptions import EmptySet
from .generators import SplitMix64
from .graph import Graph, bfs

__all__ = [
    "PseudoconvexityReport",
    "LayerCheck",
    "DiskCheck",
    "allowed_beta",
    "pseudoconvexity_beta",
    "quasiconvexity_eps",
    "check_layer_pseudoconvexity",
    "check_disk_pseudoconvexity",
    "MEMBER_CAP",
]

MEMBER_CAP = 2000


@dataclass(frozen=True)
class PseudoconvexityReport:
    """Smallest beta for which the set is beta-pseudoconvex.

    ``witness`` is the lexicographically first ``(x, y, z)`` attaining
    ``beta_min`` (None when the set is convex).  ``exact`` is False when the
    member pairs were sampled because the set exceeded :data:`MEMBER_CAP`.
    """

    members: tuple[int, ...]
    beta_min: int
    witness: tuple[int, int, int] | None
    exact: bool = True


def allowed_beta(delta2: int) -> int:
    """Pseudoconvexity level of disks and layer sets: 2 delta - 1, or 0 when delta <= 1/2."""
    return 0 if delta2 <= 1 else delta2 - 1


def _members(g: Graph, s: Iterable[int]) -> np.ndarray:
    members = sorted({g.check_vertex(int(v)) for v in s})
    if not members:
        raise EmptySet("the vertex set is empty")
    return np.array(members, dtype=np.int64)


def _rows(g: Graph, members: np.ndarray, dist: np.ndarray | None) -> np.ndarray:
    if dist is not None:
        return np.asarray(dist[members], dtype=np.int64)
    return np.stack([bfs(g, int(v)) for v in members])


def _pairs(count: int, seed: int) -> tuple[list[int], bool]:
    """Row indices to use as ``x``; all of them unless the set is over the cap."""
    if count <= MEMBER_CAP:
        return list(range(count)), True
    rng = SplitMix64(seed)
    chosen = sorted({rng.below(count) for _ in range(MEMBER_CAP)})
    return chosen, False


def pseudoconvexity_beta(g: Graph, s: Iterable[int], dist: np.ndarray | None = None,
                         seed: int = 0) -> PseudoconvexityReport:
    members = _members(g, s)
    rows = _rows(g, members, dist)
    inside = np.zeros(g.n, dtype=bool)
    inside[members] = True
    outside = ~inside
    best = 0
    witness = None
    xs, exact = _pairs(len(members), seed)
    for i in xs:
        di = rows[i]
        dj = rows[i + 1:]
        if not len(dj):
            continue
        dxy = di[members[i + 1:]]
        on = (di[None, :] + dj == dxy[:, None]) & outside[None, :]
        if not on.any():
            continue
        val = np.where(on, np.minimum(di[None, :], dj), -1)
        flat = int(np.argmax(val))
        top = int(val.flat[flat])
        if top > best:
            j, z = divmod(flat, g.n)
            best = top
            witness = (int(members[i]), int(members[i + 1 + j]), int(z))
    return PseudoconvexityReport(tuple(members.tolist()), best, witness, exact)


def quasiconvexity_eps(g: Graph, s: Iterable[int], dist: np.ndarray | None = None,
                       seed: int = 0) -> int:
    """Smallest epsilon with every interval between members inside D(S, epsilon)."""
    members = _members(g, s)
    rows = _rows(g, members, dist)
    to_set = rows.min(axis=0)
    covered = np.zeros(g.n, dtype=bool)
    xs, _ = _pairs(len(members), seed)
    for i in xs:
        di = rows[i]
        dj = rows[i + 1:]
        if not len(dj):
            continue
        dxy = di[members[i + 1:]]
        covered |= (di[None, :] + dj == dxy[:, None]).any(axis=0)
    return int(to_set[covered].max()) if covered.any() else 0


@dataclass(frozen=True)
class LayerCheck:
    k: int
    beta_min: int
    allowed: int
    witness: tuple[int, int, int] | None
    diam: int
    diam_bound: int

    @property
    def pseudoconvex_ok(self) -> bool:
        return self.beta_min <= self.allowed

    @property
    def diam_ok(self) -> bool:
        return self.diam <= self.diam_bound

    @property
    def ok(self) -> bool:
        return self.pseudoconvex_ok and self.diam_ok


def check_layer_pseudoconvexity(g: Graph, prof: EccentricityProfile, delta2: int,
                                dist: np.ndarray | None = None) -> list[LayerCheck]:
    """Every C_{<=k} must be (2 delta - 1)-pseudoconvex and of diameter <= 2k + 4 delta + 1."""
    out = []
    allowed = allowed_beta(delta2)
    for k in range(prof.diam - prof.rad + 1):
        members = np.flatnonzero(prof.layer_set(k))
        report = pseudoconvexity_beta(g, members, dist=dist)
        rows = _rows(g, members, dist)
        diam = int(rows[:, members].max())
        out.append(LayerCheck(k, report.beta_min, allowed, report.witness,
                              diam, 2 * k + 2 * delta2 + 1))
    return out


@dataclass(frozen=True)
class DiskCheck:
    center: int
    radius: int
    beta_min: int
    allowed: int
    witness: tuple[int, int, int] | None

    @property
    def ok(self) -> bool:
        return self.beta_min <= self.allowed


def check_disk_pseudoconvexity(g: Graph, delta2: int, samples: int = 200, seed: int = 0,
                               dist: np.ndarray | None = None) -> list[DiskCheck]:
    """Sampled disks D(c, r), 0 <= r <= e(c), must be (2 delta - 1)-pseudoconvex."""
    rng = SplitMix64(seed)
    allowed = allowed_beta(delta2)
    out = []
    for _ in range(samples):
        c = rng.below(g.n)
        row = bfs(g, c) if dist is None else np.asarray(dist[c], dtype=np.int64)
        r = rng.below(int(row.max()) + 1)
        members = np.flatnonzero(row <= r)
        report = pseudoconvexity_beta(g, members, dist=dist)
        out.append(DiskCheck(c, r, report.beta_min, allowed, report.witness))
    return out
