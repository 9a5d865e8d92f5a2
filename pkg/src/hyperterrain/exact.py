"""Brute-force ground truth: distance matrix, eccentricities, locality, hyperbolicity.

Everything here is exact and quadratic (or worse); it is the oracle the
estimators and the verification harness are judged against.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass, field

import numpy as np

from .exceptions import SizeLimitExceeded
from .graph import Graph, bfs, multi_source_bfs

__all__ = [
    "DEFAULT_APSP_CAP",
    "DEFAULT_DELTA_CAP",
    "EccentricityProfile",
    "HyperbolicityCertificate",
    "all_pairs_distances",
    "eccentricity_profile",
    "furthest_set",
    "locality_map",
    "hyperbolicity_exact",
    "oracle_json",
]

DEFAULT_APSP_CAP = 20000
DEFAULT_DELTA_CAP = 400


@dataclass(frozen=True)
class EccentricityProfile:
    ecc: np.ndarray
    rad: int
    diam: int
    center: tuple[int, ...]
    layer: np.ndarray = field(repr=False)

    @classmethod
    def from_ecc(cls, ecc: np.ndarray) -> "EccentricityProfile":
        ecc = np.asarray(ecc, dtype=np.int64)
        rad = int(ecc.min())
        return cls(
            ecc=ecc,
            rad=rad,
            diam=int(ecc.max()),
            center=tuple(np.flatnonzero(ecc == rad).tolist()),
            layer=ecc - rad,
        )

    def layer_set(self, k: int) -> np.ndarray:
        """Boolean mask of C_{<=k}: vertices with eccentricity at most rad + k."""
        return self.ecc <= self.rad + k

    def histogram(self) -> list[int]:
        return np.bincount(self.layer, minlength=self.diam - self.rad + 1).tolist()


@dataclass(frozen=True)
class HyperbolicityCertificate:
    """Doubled hyperbolicity ``delta2 = 2 delta`` and a quadruple attaining it."""

    delta2: int
    witness: tuple[int, int, int, int] | None

    @property
    def delta(self) -> float:
        return self.delta2 / 2


def _check_cap(g: Graph, cap: int | None, what: str) -> None:
    if cap is not None and g.n > cap:
        raise SizeLimitExceeded(f"{what}: n={g.n} exceeds the cap of {cap}")


def all_pairs_distances(g: Graph, cap: int | None = DEFAULT_APSP_CAP) -> np.ndarray:
    """n x n hop-distance matrix from one BFS per vertex."""
    _check_cap(g, cap, "all-pairs distances")
    dtype = np.int16 if g.n < 2**15 else np.int32
    out = np.empty((g.n, g.n), dtype=dtype)
    for s in range(g.n):
        out[s] = multi_source_bfs(g, (s,))
    return out


def eccentricity_profile(g: Graph, dist: np.ndarray | None = None,
                         cap: int | None = DEFAULT_APSP_CAP) -> EccentricityProfile:
    """Exact eccentricities; streams one BFS per vertex when no matrix is given."""
    if dist is not None:
        return EccentricityProfile.from_ecc(dist.max(axis=1))
    _check_cap(g, cap, "eccentricity profile")
    ecc = np.fromiter((bfs(g, v).max() for v in range(g.n)), dtype=np.int64, count=g.n)
    return EccentricityProfile.from_ecc(ecc)


def furthest_set(g: Graph, v: int, dist: np.ndarray | None = None) -> frozenset[int]:
    """F(v): vertices at distance e(v) from ``v``."""
    row = bfs(g, v) if dist is None else dist[v]
    return frozenset(np.flatnonzero(row == row.max()).tolist())


def locality_map(g: Graph, prof: EccentricityProfile) -> np.ndarray:
    """Distance from each vertex to the nearest vertex of strictly smaller eccentricity.

    Central vertices get 0.  Each BFS stops at the first level containing a
    lower vertex.
    """
    ecc = prof.ecc.tolist()
    adj = g.adj
    loc = np.zeros(g.n, dtype=np.int64)
    for v in range(g.n):
        ev = ecc[v]
        if ev == prof.rad:
            continue
        seen = {v}
        frontier = [v]
        depth = 0
        found = False
        while frontier and not found:
            depth += 1
            nxt = []
            for u in frontier:
                for w in adj[u]:
                    if w not in seen:
                        if ecc[w] < ev:
                            found = True
                            break
                        seen.add(w)
                        nxt.append(w)
                if found:
                    break
            frontier = nxt
        loc[v] = depth
    return loc


def hyperbolicity_exact(g: Graph, dist: np.ndarray | None = None,
                        cap: int | None = DEFAULT_DELTA_CAP) -> HyperbolicityCertificate:
    """Four-point hyperbolicity over all quadruples, in doubled form.

    For every ``a < b < c < d`` the three sums ``d(a,b)+d(c,d)``,
    ``d(a,c)+d(b,d)`` and ``d(a,d)+d(b,c)`` are formed and ``largest - second``
    maximised.  The witness is the lexicographically first maximiser.
    """
    _check_cap(g, cap, "exact hyperbolicity")
    n = g.n
    if n < 4:
        return HyperbolicityCertificate(0, None)
    D = (all_pairs_distances(g, cap=None) if dist is None else dist).astype(np.int32)
    best = -1
    witness = None
    for a in range(n - 3):
        Da = D[a]
        for b in range(a + 1, n - 2):
            lo = b + 1
            # pairs lo <= c < d in row-major (lexicographic) order
            ci, di = _triu(n - lo)
            ci = ci + lo
            di = di + lo
            s1 = Da[b] + D[ci, di]
            s2 = Da[ci] + D[b, di]
            s3 = Da[di] + D[b, ci]
            top = np.maximum(np.maximum(s1, s2), s3)
            bottom = np.minimum(np.minimum(s1, s2), s3)
            gap = 2 * top + bottom - s1 - s2 - s3
            j = int(np.argmax(gap))
            if gap[j] > best:
                best = int(gap[j])
                witness = (a, b, int(ci[j]), int(di[j]))
    return HyperbolicityCertificate(best, witness)


@functools.lru_cache(maxsize=None)
def _triu(m: int) -> tuple[np.ndarray, np.ndarray]:
    return np.triu_indices(m, k=1)


def oracle_json(g: Graph, prof: EccentricityProfile,
                cert: HyperbolicityCertificate | None) -> dict:
    labels = g.labels.tolist()
    return {
        "rad": prof.rad,
        "diam": prof.diam,
        "delta2": None if cert is None else cert.delta2,
        "ecc": prof.ecc.tolist(),
        "center": [labels[c] for c in prof.center],
    }
