"""Bound-verification harness.

Every bound implemented by the package is registered here as a named check
and evaluated against the exact oracle (all-pairs distances plus the exact
hyperbolicity).  A failing check carries a witness in original vertex labels;
:func:`reverify_witness` recomputes every distance from scratch to confirm it.

Each claim is written once as a vectorised predicate over a :class:`Metric`
that returns True where the claim is *violated*.  The scans feed it numpy
arrays; re-verification feeds it scalars on a freshly built metric.
"""
from __future__ import annotations

import os
import zlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from .approx import (approx_pair_left, approx_tree_fast, approx_tree_middle,
                     radius_diameter_estimates)
from .convexity import allowed_beta, check_layer_pseudoconvexity
from .exact import (DEFAULT_DELTA_CAP, EccentricityProfile, all_pairs_distances,
                    hyperbolicity_exact)
from .exceptions import InvalidParams, SizeLimitExceeded
from .generators import SplitMix64, gen_family, parse_family
from .graph import (Graph, all_shortest_paths, canonical_shortest_path,
                    random_shortest_path)
from .sweeps import mutually_distant_pair
from .terrain import classify_edges, segments_of

__all__ = [
    "SCHEMA_VERSION",
    "SuiteConfig",
    "CheckResult",
    "VerificationReport",
    "Metric",
    "CHECK_IDS",
    "run_suite",
    "run_corpus",
    "default_corpus",
    "reverify_witness",
    "path_violations",
]

SCHEMA_VERSION = "hyperterrain.verify/1"
EXHAUSTIVE_LIMIT = 10**7
DEFAULT_SAMPLES = 10**5
_BLOCK = 1 << 21

CHECK_IDS = (
    "APX-1", "APX-2", "APX-3", "APX-4",
    "CVX-1", "CVX-2", "CVX-3", "CVX-4", "CVX-5",
    "DUAL-1", "DUAL-2", "DUAL-3", "DUAL-4", "DUAL-5",
    "ECC-1", "ECC-2", "ECC-3", "ECC-4", "ECC-5", "ECC-6", "ECC-7", "ECC-8", "ECC-9",
    "ID-1", "ID-2",
    "TER-1", "TER-2", "TER-3", "TER-4", "TER-5", "TER-6", "TER-7", "TER-8", "TER-9",
)


@dataclass
class SuiteConfig:
    seed: int = 0
    exhaustive_limit: int = EXHAUSTIVE_LIMIT
    samples: int = DEFAULT_SAMPLES
    enumerate_paths_n: int = 40
    path_cap: int = 10**6
    random_paths: int = 500
    disk_pairs: int = 100
    fast_k_starts: int = 8
    size_cap: int | None = DEFAULT_DELTA_CAP
    checks: tuple[str, ...] | None = None

    def validate(self) -> "SuiteConfig":
        for name in ("exhaustive_limit", "samples", "path_cap"):
            if getattr(self, name) < 1:
                raise InvalidParams(f"{name} must be positive")
        for name in ("random_paths", "disk_pairs", "fast_k_starts", "enumerate_paths_n"):
            if getattr(self, name) < 0:
                raise InvalidParams(f"{name} must be non-negative")
        if self.checks is not None:
            unknown = sorted(set(self.checks) - set(CHECK_IDS))
            if unknown:
                raise InvalidParams(f"unknown check ids: {', '.join(unknown)}")
        return self


@dataclass
class CheckResult:
    check_id: str
    status: str
    tested_instances: int = 0
    mode: str = "exhaustive"
    violations: int = 0
    witness: dict | None = None
    reason: str | None = None
    details: dict | None = None

    def to_json(self) -> dict:
        out = asdict(self)
        return {k: v for k, v in out.items() if v is not None}


@dataclass
class VerificationReport:
    graph_id: str
    n: int
    m: int
    delta2: int
    seed: int
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "graph_id": self.graph_id,
            "n": self.n,
            "m": self.m,
            "delta2": self.delta2,
            "seed": self.seed,
            "status": "pass" if self.passed else "fail",
            "checks": [c.to_json() for c in self.checks],
        }


# --------------------------------------------------------------------------
# metric
# --------------------------------------------------------------------------

class Metric:
    """Distance matrix plus every derived quantity the claims talk about."""

    def __init__(self, D: np.ndarray, delta2: int):
        D = np.asarray(D, dtype=np.int64)
        self.D = D
        self.n = len(D)
        self.t = int(delta2)
        self.ecc = D.max(axis=1)
        self.rad = int(self.ecc.min())
        self.diam = int(self.ecc.max())
        self.layer = self.ecc - self.rad
        self.central = self.ecc == self.rad
        self.dC = D[:, self.central].min(axis=1)
        # C_{<=2 delta}: layer at most delta2
        self.dCt = D[:, self.layer <= self.t].min(axis=1)
        self.allowed = allowed_beta(self.t)
        self._loc = None

    @property
    def loc(self) -> np.ndarray:
        if self._loc is None:
            lower = self.ecc[None, :] < self.ecc[:, None]
            big = self.diam + 1
            loc = np.where(lower, self.D, big).min(axis=1)
            loc[self.central] = 0
            self._loc = loc
        return self._loc

    def in_interval(self, x, y, c):
        D = self.D
        return D[x, c] + D[c, y] == D[x, y]

    def furthest(self, x, y):
        return self.D[x, y] == self.ecc[x]

    def mutual(self, x, y):
        d = self.D[x, y]
        return (d == self.ecc[x]) & (d == self.ecc[y]) & (x != y)


def _raw_distances(g: Graph) -> np.ndarray:
    """All-pairs BFS straight off the adjacency lists; shares nothing with the scans."""
    n = g.n
    adj = [list(g.adj[v]) for v in range(n)]
    out = np.empty((n, n), dtype=np.int64)
    for s in range(n):
        dist = [-1] * n
        dist[s] = 0
        queue = [s]
        for u in queue:
            du = dist[u] + 1
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = du
                    queue.append(w)
        out[s] = dist
    return out


# --------------------------------------------------------------------------
# vertex claims: predicates return True where the claim is violated
# --------------------------------------------------------------------------

def _p_duality(m, x, y, c, v):
    D, e, t = m.D, m.ecc, m.t
    dxc, dxv, dcv = D[x, c], D[x, v], D[c, v]
    branch = 2 * dxc <= dxv + D[x, y] - D[y, v]
    bad = (dcv > dxv - dxc + t) | (2 * dcv > 2 * dxv + t)
    far = dcv == e[c]
    bad = bad | (far & ((e[c] > e[x] - dxc + t) | (2 * e[c] > 2 * e[x] + t)))
    return m.in_interval(x, y, c) & branch & bad


def _p_max_min(m, x, y, c, v):
    D = m.D
    rhs = np.maximum(D[x, v], D[y, v]) - np.minimum(D[x, c], D[y, c]) + m.t
    return m.in_interval(x, y, c) & (D[c, v] > rhs)


def _middle_bad(m, x, y, c, val_c, val_max):
    D, t = m.D, m.t
    dxy, dxc, dyc = D[x, y], D[x, c], D[y, c]
    a = 2 * val_c > 2 * val_max + t
    b = (dxy >= 2 * t) & (dxc >= t) & (dyc >= t) & (val_c > val_max)
    s = (dxy > 2 * t + 1) & (dxc > t) & (dyc > t) & (val_c >= val_max)
    return m.in_interval(x, y, c) & (a | b | s)


def _p_middle_distance(m, x, y, c, v):
    D = m.D
    return _middle_bad(m, x, y, c, D[c, v], np.maximum(D[x, v], D[y, v]))


def _p_middle_ecc(m, x, y, c):
    e = m.ecc
    return _middle_bad(m, x, y, c, e[c], np.maximum(e[x], e[y]))


def _p_close_ends(m, x, y, c):
    D, e, t = m.D, m.ecc, m.t
    return (m.in_interval(x, y, c) & (D[x, c] == t + 1)
            & (e[c] >= np.maximum(e[x], e[y])) & (D[x, y] > 2 * t + 1))


def _p_disk(m, center, x, y, z, r):
    D = m.D
    return ((D[center, x] <= r) & (D[center, y] <= r) & (D[center, z] > r)
            & m.in_interval(x, y, z) & (np.minimum(D[z, x], D[z, y]) > m.allowed))


def _p_layer(m, x, y, z, k):
    e, D = m.ecc, m.D
    top = m.rad + k
    return ((e[x] <= top) & (e[y] <= top) & (e[z] > top) & m.in_interval(x, y, z)
            & (np.minimum(D[z, x], D[z, y]) > m.allowed))


def _p_layer_diam(m, x, y, k):
    top = m.rad + k
    return ((m.ecc[x] <= top) & (m.ecc[y] <= top)
            & (m.D[x, y] > 2 * k + 2 * m.t + 1))


def _p_diam_rad(m):
    return (m.diam < 2 * m.rad - 2 * m.t - 1) | (m.t > m.diam)


def _p_ecc_sandwich(m, x):
    e, rad, t = m.ecc[x], m.rad, m.t
    return ((e < m.dCt[x] + rad) | (e > m.dCt[x] + rad + t)
            | (e < m.dC[x] + rad - 2 * t) | (e > m.dC[x] + rad))


def _p_ecc_layer(m, x):
    k = m.layer[x]
    return (m.dCt[x] > k) | (k > m.dC[x]) | (m.dC[x] > m.dCt[x] + 3 * m.t)


def _p_beam_slice(m, x, y, c):
    dyc = m.D[y, c]
    return (m.furthest(x, y) & m.in_interval(x, y, c) & (dyc >= m.rad)
            & (m.ecc[c] > dyc + m.t))


def _p_pair_sandwich(m, x, y, c):
    D = m.D
    top = np.maximum(D[x, c], D[y, c])
    return m.mutual(x, y) & ((m.ecc[c] < top) | (m.ecc[c] > top + m.t))


def _p_pair_middle(m, x, y, c):
    D = m.D
    d = D[x, y]
    middle = (D[x, c] == d // 2) | (D[y, c] == d // 2)
    up = (d + 1) // 2
    bad = (m.ecc[c] > up + m.t) | (up > m.rad)
    return m.mutual(x, y) & m.in_interval(x, y, c) & middle & bad


def _p_pair_length(m, x, y):
    d = m.D[x, y]
    return m.mutual(x, y) & ((d < 2 * m.rad - 2 * m.t - 1) | (d > m.diam))


def _p_furthest_diam(m, c, v):
    return m.furthest(c, v) & (m.diam > m.ecc[v] + m.t)


def _p_beam_diam(m, x, y):
    t = m.t
    return m.furthest(x, y) & ((m.ecc[y] < m.diam - t)
                               | (m.diam - t < 2 * m.rad - 3 * t - 1))


def _beam(m, z, x, y):
    return m.furthest(z, x) & m.furthest(x, y)


def _p_beam_middle(m, z, x, y, c):
    d = m.D[x, y]
    t = m.t
    bad = (2 * m.ecc[c] > 2 * m.rad + 3 * t) | (m.ecc[c] > (d + 1) // 2 + 2 * t)
    return _beam(m, z, x, y) & m.in_interval(x, y, c) & (m.D[x, c] == d // 2) & bad


def _enclosure_bad(m, x, y, c, u, radius0):
    D = m.D
    d = D[x, y]
    middle = (D[x, c] == d // 2) | (D[x, c] == (d + 1) // 2)
    return m.in_interval(x, y, c) & middle & (D[c, u] > radius0 + m.layer[u])


def _p_beam_enclosure(m, z, x, y, c, u):
    return _beam(m, z, x, y) & _enclosure_bad(m, x, y, c, u, (5 * m.t) // 2 + 1)


def _p_pair_enclosure(m, x, y, c, u):
    return m.mutual(x, y) & _enclosure_bad(m, x, y, c, u, 2 * m.t + 1)


# kind -> (check_id, roles, params, predicate)
VERTEX_CLAIMS: dict[str, tuple[str, tuple[str, ...], tuple[str, ...], Callable]] = {
    "duality": ("DUAL-1", ("x", "y", "c", "v"), (), _p_duality),
    "max_min_duality": ("DUAL-2", ("x", "y", "c", "v"), (), _p_max_min),
    "middle_distance": ("DUAL-3", ("x", "y", "c", "v"), (), _p_middle_distance),
    "middle_eccentricity": ("DUAL-4", ("x", "y", "c"), (), _p_middle_ecc),
    "close_endpoints": ("DUAL-5", ("x", "y", "c"), (), _p_close_ends),
    "disk_pseudoconvex": ("CVX-1", ("center", "x", "y", "z"), ("r",), _p_disk),
    "layer_pseudoconvex": ("CVX-2", ("x", "y", "z"), ("k",), _p_layer),
    "layer_diameter": ("CVX-4", ("x", "y"), ("k",), _p_layer_diam),
    "diameter_radius": ("CVX-4", (), (), _p_diam_rad),
    "ecc_sandwich": ("ECC-1", ("x",), (), _p_ecc_sandwich),
    "ecc_layer_distance": ("ECC-2", ("x",), (), _p_ecc_layer),
    "beam_slice": ("ECC-3", ("x", "y", "c"), (), _p_beam_slice),
    "pair_sandwich": ("ECC-4", ("x", "y", "c"), (), _p_pair_sandwich),
    "pair_middle": ("ECC-4", ("x", "y", "c"), (), _p_pair_middle),
    "pair_length": ("ECC-4", ("x", "y"), (), _p_pair_length),
    "furthest_diameter": ("ECC-5", ("c", "v"), (), _p_furthest_diam),
    "beam_diameter": ("ECC-6", ("x", "y"), (), _p_beam_diam),
    "beam_middle": ("ECC-7", ("z", "x", "y", "c"), (), _p_beam_middle),
    "beam_enclosure": ("ECC-8", ("z", "x", "y", "c", "u"), (), _p_beam_enclosure),
    "pair_enclosure": ("ECC-9", ("x", "y", "c", "u"), (), _p_pair_enclosure),
}


# --------------------------------------------------------------------------
# path claims
# --------------------------------------------------------------------------

def path_violations(E: Sequence[int], flagged: Sequence[bool], far: Sequence[bool],
                    start_to_center: int, delta2: int, rad: int
                    ) -> tuple[list[tuple[str, str]], set[str], dict]:
    """Evaluate every terrain claim on one shortest path ``y = v_0 .. v_p = x``.

    ``E`` holds eccentricities along the path, ``flagged`` marks locality above
    1, ``far`` marks distance above 2 delta from the center and
    ``start_to_center`` is d(y, C).  Returns the violated ``(check_id, kind)``
    pairs, the check ids that applied, and a few facts for reporting.
    """
    t = delta2
    p = len(E) - 1
    ey, ex = E[0], E[-1]
    out: list[tuple[str, str]] = []
    applied = {"ID-1", "ID-2", "TER-1", "TER-2", "TER-3", "TER-7", "TER-8"}
    facts: dict = {}
    classes = classify_edges(E)
    up, hor, down = classes.count("U"), classes.count("H"), classes.count("D")

    if down - up != ey - ex:
        out.append(("ID-1", "down_minus_up"))
    if 2 * up + hor != p - (ey - ex):
        out.append(("ID-2", "up_horizontal_identity"))

    rest = E[:-1]
    strict = all(e > ex for e in rest)
    em = all(e >= ex for e in rest)
    low = min(ey, ex)
    segs = segments_of(classes)
    for s in segs:
        if s.label != "Plain":
            continue
        w, kind = s.length, s.plain_kind
        if w > 2 * t + 1:
            out.append(("TER-1", "plain_width"))
        if kind == "Terrace" and (t == 0 or w > 2 * t - 1):
            out.append(("TER-1", "terrace_width"))
        if kind == "Plateau" and (t <= 1 or w > 2 * t - 3):
            out.append(("TER-1", "plateau_width"))
        if 2 * E[s.start] > 2 * low + t:
            if w > t:
                out.append(("TER-2", "elevated_plain_width"))
            if kind == "Plateau" and w > t - 2:
                out.append(("TER-2", "elevated_plateau_width"))
        if t == 2 and kind == "Plateau" and strict:
            out.append(("TER-2", "delta_one_plateau"))
    if t == 2 and strict:
        facts["delta_one_strict"] = True

    by_value: dict[int, list[int]] = {}
    for i, e in enumerate(E):
        if e >= low and i > t and p - i > t:
            by_value.setdefault(e, []).append(i)
    for idx in by_value.values():
        if idx[-1] - idx[0] > t:
            out.append(("TER-3", "equal_eccentricity_pair"))
            break

    if em:
        applied.update(("TER-4", "TER-5", "TER-6"))
        heights = [s.length for s in segs if s.label == "UpHill"]
        if heights:
            facts["uphill"] = max(heights)
        if any(2 * h > t for h in heights):
            out.append(("TER-4", "uphill_height"))
        for i in range(p + 1):
            if p - i > t and (2 * E[i] > 2 * ey + t or E[i] > ey - i + t):
                out.append(("TER-5", "far_vertex_eccentricity"))
                break
        if p > 2 * t + 1:
            prefix_min = E[0]
            for i in range(t + 1, p - t):
                prefix_min = min(prefix_min, E[i - t - 1])
                if E[i] >= prefix_min:
                    out.append(("TER-6", "pseudodescending"))
                    break

    total = 2 * up + hor
    if strict:
        if total > max(0, 2 * t - 1):
            out.append(("TER-7", "up_horizontal_strict"))
        if p > ey - ex + max(0, 2 * t - 1):
            out.append(("TER-7", "distance_to_smaller_strict"))
    elif em:
        if total > 2 * t + 1:
            out.append(("TER-7", "up_horizontal_end_minimal"))
        if p > ey - ex + 2 * t + 1:
            out.append(("TER-7", "distance_to_smaller_end_minimal"))

    count = sum(flagged)
    if strict and count > 2 * t:
        out.append(("TER-8", "locality_strict"))
    if strict and ex == rad and count > max(0, 2 * t - 1):
        out.append(("TER-8", "locality_strict_center"))
    if em and count > 2 * t + 2:
        out.append(("TER-8", "locality_end_minimal"))
    if count > 4 * t + 1:
        out.append(("TER-8", "locality_general"))

    pre_total = 0
    pre_count = 0
    prefix_bad = set()
    for j in range(p + 1):
        if j:
            c = classes[j - 1]
            pre_total += 2 if c == "U" else 1 if c == "H" else 0
        pre_count += flagged[j]
        high = 2 * E[j] > 2 * ex + t
        if high or (em and p - j > t):
            if pre_total > t:
                prefix_bad.add(("TER-7", "prefix_up_horizontal"))
            if j > ey - E[j] + t:
                prefix_bad.add(("TER-7", "prefix_distance"))
            if pre_count > (t if high else t + 1):
                prefix_bad.add(("TER-8", "locality_prefix"))
    out.extend(sorted(prefix_bad))

    if ex == rad and start_to_center == p:
        if count > max(0, 2 * t - 1):
            out.append(("TER-8", "locality_closest_center"))
        if sum(1 for e, f in zip(E, flagged) if f and 2 * (e - rad) > t) > t:
            out.append(("TER-8", "locality_outside_Cdelta"))
        if sum(1 for f, z in zip(flagged, far) if f and z) > t + 1:
            out.append(("TER-8", "locality_far_from_center"))
    if ex == rad:
        applied.add("TER-9")
        if p > 2 * t + 1 and not E[t + 1] < E[0]:
            out.append(("TER-9", "locality_bound"))
    return out, applied, facts


def _path_inputs(m: Metric, path: Sequence[int]):
    ecc = m.ecc
    loc = m.loc
    dC = m.dC
    E = tuple(int(ecc[v]) for v in path)
    flagged = tuple(bool(loc[v] > 1) for v in path)
    far = tuple(bool(dC[v] > m.t) for v in path)
    return E, flagged, far, int(dC[path[0]])


# --------------------------------------------------------------------------
# suite context
# --------------------------------------------------------------------------

class _Context:
    def __init__(self, g: Graph, D: np.ndarray, delta2: int, config: SuiteConfig):
        self.g = g
        self.m = Metric(D, delta2)
        self.config = config
        self.labels = g.labels.tolist()
        self._triples = None
        self._inner = None

    @property
    def t(self) -> int:
        return self.m.t

    def triples(self):
        """Ordered ``(x, y, c)`` with ``x != y`` and ``c`` in I(x, y), lexicographic."""
        if self._triples is None:
            D = self.m.D
            xs, ys, cs = [], [], []
            for x in range(self.m.n):
                mask = D[x][None, :] + D == D[x][:, None]
                mask[x, :] = False
                yy, cc = np.nonzero(mask)
                xs.append(np.full(len(yy), x, dtype=np.int64))
                ys.append(yy)
                cs.append(cc)
            self._triples = (np.concatenate(xs), np.concatenate(ys), np.concatenate(cs))
        return self._triples

    def inner(self):
        """``(x, y, z, min(d(z,x), d(z,y)))`` for x < y and z strictly inside I(x, y)."""
        if self._inner is None:
            X, Y, C = self.triples()
            keep = (X < Y) & (C != X) & (C != Y)
            X, Y, C = X[keep], Y[keep], C[keep]
            D = self.m.D
            self._inner = (X, Y, C, np.minimum(D[C, X], D[C, Y]))
        return self._inner

    def rng(self, tag: str) -> np.random.Generator:
        return np.random.default_rng([self.config.seed, zlib.crc32(tag.encode())])

    def witness(self, kind: str, roles: dict[str, int], params: dict | None = None,
                path: Sequence[int] | None = None, values: dict | None = None) -> dict:
        w = {"kind": kind, "vertices": {r: self.labels[int(v)] for r, v in roles.items()}}
        if params:
            w["params"] = {k: int(v) for k, v in params.items()}
        if path is not None:
            w["path"] = [self.labels[int(v)] for v in path]
        if values:
            w["values"] = {k: int(v) for k, v in values.items()}
        return w


def _first(mask: np.ndarray):
    flat = np.flatnonzero(mask)
    if not len(flat):
        return None
    return np.unravel_index(int(flat[0]), mask.shape)


class _Tally:
    """Accumulates instances and the first violation of one check."""

    def __init__(self, check_id: str):
        self.check_id = check_id
        self.instances = 0
        self.violations = 0
        self.witness = None
        self.sampled = False
        self.details: dict = {}

    def add(self, count: int, bad: int = 0, witness: Callable[[], dict] | None = None):
        self.instances += int(count)
        self.violations += int(bad)
        if bad and self.witness is None and witness is not None:
            self.witness = witness()

    def result(self) -> CheckResult:
        return CheckResult(
            check_id=self.check_id,
            status="fail" if self.violations else "pass",
            tested_instances=self.instances,
            mode="sampled" if self.sampled else "exhaustive",
            violations=self.violations,
            witness=self.witness,
            details=self.details or None,
        )


def _scan_rows(ctx: _Context, tally: _Tally, kind: str, rows: dict[str, np.ndarray],
               over_all: str | None = None, params: dict | None = None):
    """Evaluate a vertex claim on aligned role arrays, optionally crossed with every vertex.

    ``rows`` maps roles to equally long index arrays in lexicographic order.
    With ``over_all`` the named role additionally ranges over all vertices
    (a second axis).  Above the exhaustive limit, uniform samples are drawn.
    """
    check_id, roles, _, pred = VERTEX_CLAIMS[kind]
    m = ctx.m
    params = params or {}
    count = len(next(iter(rows.values()))) if rows else 1
    width = m.n if over_all else 1
    total = count * width
    if total == 0:
        return
    if total > ctx.config.exhaustive_limit:
        tally.sampled = True
        rng = ctx.rng(f"{check_id}:{kind}")
        size = ctx.config.samples
        pick = np.sort(rng.integers(0, count, size))
        args = {r: a[pick] for r, a in rows.items()}
        if over_all:
            args[over_all] = rng.integers(0, m.n, size)
        bad = np.asarray(pred(m, **args, **params), dtype=bool)
        hits = np.flatnonzero(bad)
        if len(hits):
            keys = [args[r][hits] for r in reversed(roles)]
            first = hits[np.lexsort(keys)[0]]
            tally.add(size, len(hits), lambda: ctx.witness(
                kind, {r: args[r][first] for r in roles}, params))
        else:
            tally.add(size)
        return
    step = max(1, _BLOCK // width)
    for lo in range(0, count, step):
        hi = min(count, lo + step)
        args = {r: a[lo:hi] for r, a in rows.items()}
        if over_all:
            args = {r: a[:, None] for r, a in args.items()}
            args[over_all] = np.arange(m.n)[None, :]
        bad = np.asarray(pred(m, **args, **params), dtype=bool)
        nbad = int(bad.sum())
        if nbad and tally.witness is None:
            pos = _first(bad)

            def make(pos=pos, args=args):
                roles_v = {r: np.broadcast_to(args[r], bad.shape)[pos] for r in roles}
                return ctx.witness(kind, roles_v, params)
            tally.add((hi - lo) * width, nbad, make)
        else:
            tally.add((hi - lo) * width, nbad)


# --------------------------------------------------------------------------
# checks
# --------------------------------------------------------------------------

def _quad_check(check_id: str, kind: str):
    def run(ctx: _Context) -> CheckResult:
        tally = _Tally(check_id)
        X, Y, C = ctx.triples()
        _scan_rows(ctx, tally, kind, {"x": X, "y": Y, "c": C}, over_all="v")
        return tally.result()
    return run


def _triple_check(check_id: str, kind: str, select=None):
    def run(ctx: _Context) -> CheckResult:
        tally = _Tally(check_id)
        X, Y, C = ctx.triples()
        if select is not None:
            keep = select(ctx.m, X, Y, C)
            X, Y, C = X[keep], Y[keep], C[keep]
        _scan_rows(ctx, tally, kind, {"x": X, "y": Y, "c": C})
        return tally.result()
    return run


def _check_disks(ctx: _Context) -> CheckResult:
    """All disks D(c, r), 0 <= r <= e(c), at once.

    An inner triple (x, y, z) whose ``min(d(z,x), d(z,y))`` exceeds the
    allowed level breaks disk D(c, r) exactly when
    ``max(d(c,x), d(c,y)) <= r < d(c,z)``, so each centre needs one test per
    such triple.
    """
    m = ctx.m
    tally = _Tally("CVX-1")
    X, Y, Z, M = ctx.inner()
    big = M > m.allowed
    X, Y, Z = X[big], Y[big], Z[big]
    disks = int((m.ecc + 1).sum())
    tally.details = {"disks": disks, "inner_triples": int(len(ctx.inner()[0]))}
    if len(X):
        D = m.D
        reach = np.maximum(D[:, X], D[:, Y])
        bad = reach < D[:, Z]
        nbad = int(bad.any(axis=1).sum())
        if nbad:
            c, j = _first(bad)
            tally.add(disks, nbad, lambda: ctx.witness(
                "disk_pseudoconvex", {"center": c, "x": X[j], "y": Y[j], "z": Z[j]},
                {"r": reach[c, j]}))
            return tally.result()
    tally.add(disks)
    return tally.result()


def _check_layers(ctx: _Context) -> CheckResult:
    m = ctx.m
    tally = _Tally("CVX-2")
    prof = EccentricityProfile.from_ecc(m.ecc)
    for chk in check_layer_pseudoconvexity(ctx.g, prof, m.t, dist=m.D):
        bad = not chk.pseudoconvex_ok
        tally.add(1, bad, lambda chk=chk: ctx.witness(
            "layer_pseudoconvex", dict(zip("xyz", chk.witness)), {"k": chk.k}))
    # second route: an inner triple breaks some layer iff max(e(x), e(y)) < e(z)
    X, Y, Z, M = ctx.inner()
    e = m.ecc
    bad = (M > m.allowed) & (np.maximum(e[X], e[Y]) < e[Z])
    j = _first(bad)
    if j is None:
        tally.add(len(X))
    else:
        j = j[0]
        k = int(max(e[X[j]], e[Y[j]]) - m.rad)
        tally.add(len(X), int(bad.sum()), lambda: ctx.witness(
            "layer_pseudoconvex", {"x": X[j], "y": Y[j], "z": Z[j]}, {"k": k}))
    tally.details = {"layers": m.diam - m.rad + 1, "allowed_beta": m.allowed}
    return tally.result()


def _beta_of(ctx: _Context, mask: np.ndarray) -> int:
    X, Y, Z, M = ctx.inner()
    sel = mask[X] & mask[Y] & ~mask[Z]
    return int(M[sel].max()) if sel.any() else 0


def _eps_of(ctx: _Context, mask: np.ndarray) -> int:
    X, Y, Z, _ = ctx.inner()
    covered = mask.copy()
    covered[Z[mask[X] & mask[Y]]] = True
    to_set = ctx.m.D[:, mask].min(axis=1)
    return int(to_set[covered].max())


def _disk_pair_sets(m: Metric, c1: int, r1: int, c2: int, r2: int):
    s1 = m.D[c1] <= r1
    s2 = m.D[c2] <= r2
    return s1, s2, s1 & s2


def _check_intersections(ctx: _Context) -> CheckResult:
    m = ctx.m
    tally = _Tally("CVX-3")
    tally.sampled = True
    rng = SplitMix64(ctx.config.seed ^ 0x5EED)
    want = ctx.config.disk_pairs
    tried = 0
    done = 0
    while done < want and tried < 10 * want:
        tried += 1
        c1 = rng.below(m.n)
        r1 = rng.below(int(m.ecc[c1]) + 1)
        c2 = rng.below(m.n)
        r2 = rng.below(int(m.ecc[c2]) + 1)
        s1, s2, both = _disk_pair_sets(m, c1, r1, c2, r2)
        if not both.any():
            continue
        done += 1
        b1, b2, b = _beta_of(ctx, s1), _beta_of(ctx, s2), _beta_of(ctx, both)
        e1, e2, e = _eps_of(ctx, s1), _eps_of(ctx, s2), _eps_of(ctx, both)
        roles = {"c1": c1, "c2": c2}
        params = {"r1": r1, "r2": r2}
        if b > max(b1, b2):
            tally.add(1, 1, lambda: ctx.witness("intersection_closure", roles, params,
                                                values={"beta1": b1, "beta2": b2, "beta": b}))
        elif e1 > b1 or e2 > b2 or e > b:
            tally.add(1, 1, lambda: ctx.witness("pseudo_quasi", roles, params))
        else:
            tally.add(1)
    tally.details = {"pairs": done, "draws": tried}
    return tally.result()


def _check_diameters(ctx: _Context) -> CheckResult:
    m = ctx.m
    tally = _Tally("CVX-4")
    for k in range(m.diam - m.rad + 1):
        members = np.flatnonzero(m.layer <= k)
        sub = m.D[np.ix_(members, members)]
        bad = sub > 2 * k + 2 * m.t + 1
        pos = _first(bad)
        tally.add(1, pos is not None, lambda pos=pos, members=members, k=k: ctx.witness(
            "layer_diameter", {"x": members[pos[0]], "y": members[pos[1]]}, {"k": k}))
    tally.add(1, bool(_p_diam_rad(m)), lambda: ctx.witness("diameter_radius", {}))
    return tally.result()


def _check_bottleneck_layers(ctx: _Context) -> CheckResult:
    """Shortest paths meeting C_{<=k} only at their ends are shorter than 4 delta.

    For a pair (x, y) some k makes a path qualify iff the smallest interior
    eccentricity exceeds max(e(x), e(y)); a widest-path pass over the BFS
    layers of every x finds the best interior bottleneck for all y at once.
    """
    m = ctx.m
    tally = _Tally("CVX-5")
    if m.t == 0:
        return CheckResult("CVX-5", "skipped", reason="needs delta > 0", mode="exhaustive")
    n = m.n
    A = np.zeros((n, n), dtype=bool)
    for u, v in ctx.g.edges():
        A[u, v] = A[v, u] = True
    big = m.diam + 10
    e = m.ecc
    for x in range(n):
        dx = m.D[x]
        W = np.full(n, -1, dtype=np.int64)
        W[x] = big
        inner_best = np.full(n, -1, dtype=np.int64)
        layers = [np.flatnonzero(dx == d) for d in range(int(dx.max()) + 1)]
        for d in range(1, len(layers)):
            prev, cur = layers[d - 1], layers[d]
            P = A[np.ix_(prev, cur)]
            best = np.where(P, W[prev][:, None], -1).max(axis=0)
            W[cur] = np.minimum(e[cur], best)
            if d >= 2:
                inner_best[cur] = best
        ends = np.maximum(e[x], e)
        bad = (dx >= 2) & (inner_best > ends) & (dx > 2 * m.t - 1)
        nbad = int(bad.sum())
        if nbad and tally.witness is None:
            y = int(np.flatnonzero(bad)[0])
            top = int(ends[y])
            path = [y]
            cur = y
            while cur != x:
                want = dx[cur] - 1
                cur = next(w for w in ctx.g.adj[cur]
                           if dx[w] == want and (w == x or W[w] > top))
                path.append(cur)
            path.reverse()
            tally.add(n - 1, nbad, lambda: ctx.witness(
                "layer_boundary_path", {"x": x, "y": y}, {"k": top - m.rad}, path=path))
        else:
            tally.add(n - 1, nbad)
    return tally.result()


def _check_ecc_vertex(check_id: str, kind: str):
    def run(ctx: _Context) -> CheckResult:
        tally = _Tally(check_id)
        _scan_rows(ctx, tally, kind, {"x": np.arange(ctx.m.n)})
        return tally.result()
    return run


def _mutual_pairs(m: Metric):
    xs, ys = np.nonzero(m.D == m.ecc[:, None])
    keep = (xs != ys) & (m.D[xs, ys] == m.ecc[ys])
    return xs[keep], ys[keep]


def _check_pairs(ctx: _Context) -> CheckResult:
    m = ctx.m
    tally = _Tally("ECC-4")
    xs, ys = _mutual_pairs(m)
    _scan_rows(ctx, tally, "pair_sandwich", {"x": xs, "y": ys}, over_all="c")
    _scan_rows(ctx, tally, "pair_middle", {"x": xs, "y": ys}, over_all="c")
    _scan_rows(ctx, tally, "pair_length", {"x": xs, "y": ys})
    tally.details = {"mutually_distant_pairs": int(len(xs))}
    return tally.result()


def _check_furthest(ctx: _Context) -> CheckResult:
    m = ctx.m
    tally = _Tally("ECC-5")
    cs, vs = np.nonzero(m.D == m.ecc[:, None])
    _scan_rows(ctx, tally, "furthest_diameter", {"c": cs, "v": vs})
    return tally.result()


def _check_beam_diam(ctx: _Context) -> CheckResult:
    m = ctx.m
    tally = _Tally("ECC-6")
    xs, ys = np.nonzero(m.D == m.ecc[:, None])
    _scan_rows(ctx, tally, "beam_diameter", {"x": xs, "y": ys})
    return tally.result()


def _beam_rows(ctx: _Context, middle):
    """Beam triples (z, x, y, c): z any vertex, x in F(z), y in F(x), c a middle of I(x, y)."""
    m = ctx.m
    X, Y, C = ctx.triples()
    reach = m.D == m.ecc[:, None]
    is_end = reach.any(axis=0)  # x furthest from some z
    d = m.D[X, Y]
    keep = is_end[X] & (d == m.ecc[X]) & middle(m.D[X, C], d)
    X, Y, C = X[keep], Y[keep], C[keep]
    Z = np.argmax(reach[:, X], axis=0)  # smallest z with x in F(z)
    return {"z": Z, "x": X, "y": Y, "c": C}


def _check_beam_middle(ctx: _Context) -> CheckResult:
    tally = _Tally("ECC-7")
    rows = _beam_rows(ctx, lambda dxc, d: dxc == d // 2)
    _scan_rows(ctx, tally, "beam_middle", rows)
    return tally.result()


def _middles(dxc, d):
    return (dxc == d // 2) | (dxc == (d + 1) // 2)


def _check_beam_enclosure(ctx: _Context) -> CheckResult:
    tally = _Tally("ECC-8")
    rows = _beam_rows(ctx, _middles)
    _scan_rows(ctx, tally, "beam_enclosure", rows, over_all="u")
    return tally.result()


def _check_pair_enclosure(ctx: _Context) -> CheckResult:
    m = ctx.m
    tally = _Tally("ECC-9")
    X, Y, C = ctx.triples()
    d = m.D[X, Y]
    keep = m.mutual(X, Y) & _middles(m.D[X, C], d)
    _scan_rows(ctx, tally, "pair_enclosure", {"x": X[keep], "y": Y[keep], "c": C[keep]},
               over_all="u")
    return tally.result()


# ---- estimators, one run per start vertex

def _estimator_checks(ctx: _Context) -> list[CheckResult]:
    g, m = ctx.g, ctx.m
    t, e = m.t, m.ecc
    tallies = {cid: _Tally(cid) for cid in ("APX-1", "APX-2", "APX-3", "APX-4")}

    def record(cid, kind, start, err, lo, hi, params=None):
        bad = (err < lo) | (err > hi)
        v = _first(bad)
        tallies[cid].add(len(err), int(bad.sum()), lambda: ctx.witness(
            kind, {"start": start, "v": v[0]},
            dict(params or {}), values={"error": err[v[0]]}))

    for s in range(g.n):
        trace = mutually_distant_pair(g, s)
        left = approx_pair_left(g, trace, delta2=t)
        record("APX-1", "pair_left", s, e - left.est, 0, t)
        _, mid = approx_tree_middle(g, trace, delta2=t)
        record("APX-2", "tree_middle", s, mid.est - e, 0, 2 * t + 1)
        _, fast = approx_tree_fast(g, s, k=1, delta2=t)
        record("APX-3", "tree_fast", s, fast.est - e, 0, 3 * t, {"k": 1})
        if s < ctx.config.fast_k_starts:
            for k in range(0, t + 1):
                if k == 1:
                    continue
                _, fk = approx_tree_fast(g, s, k=k, delta2=t)
                record("APX-3", "tree_fast", s, fk.est - e, 0, 3 * t + 1 - k, {"k": k})

        est = radius_diameter_estimates(g, s)
        rad, diam = m.rad, m.diam
        bad = (est.rad_ub_fast < rad or 2 * est.rad_ub_fast > 2 * rad + 3 * t
               or est.rad_ub_tight < rad or est.rad_ub_tight > rad + t
               or est.diam_lb < diam - t or est.diam_lb > diam
               or est.diam_lb < 2 * rad - 2 * t - 1)
        rises = sum(1 for a, b in zip(trace.dists[1:], trace.dists[2:]) if b > a)
        bad = bad or len(trace.sequence) > t + 3 or rises > t
        tallies["APX-4"].add(1, bad, lambda: ctx.witness(
            "radius_diameter", {"start": s}, values={
                "rad_ub_fast": est.rad_ub_fast, "rad_ub_tight": est.rad_ub_tight,
                "diam_lb": est.diam_lb, "sweep_length": len(trace.sequence)}))
    return [tallies[c].result() for c in sorted(tallies)]


# ---- terrain over a path corpus

def _path_corpus(ctx: _Context):
    """Yield shortest paths (as lists, first vertex y, last vertex x) and whether all were enumerated."""
    g, m, cfg = ctx.g, ctx.m, ctx.config
    rows = [m.D[v].tolist() for v in range(g.n)]
    if g.n <= cfg.enumerate_paths_n:
        paths = []
        ok = True
        for x in range(g.n):
            for y in range(g.n):
                if x == y:
                    continue
                for path in all_shortest_paths(g, y, x, rows[x]):
                    paths.append(path)
                    if len(paths) > cfg.path_cap:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            return paths, True
    paths = []
    for y in range(g.n):
        for x in range(g.n):
            if x != y:
                paths.append(canonical_shortest_path(g, y, x, dist=rows[y]))
    rng = SplitMix64(cfg.seed ^ 0xBEEF)
    for _ in range(cfg.random_paths if g.n > 1 else 0):
        y = rng.below(g.n)
        x = rng.below(g.n - 1)
        x += x >= y
        paths.append(random_shortest_path(g, y, x, rows[x], rng))
    return paths, False


_PATH_IDS = ("ID-1", "ID-2", "TER-1", "TER-2", "TER-3", "TER-4", "TER-5", "TER-6",
             "TER-7", "TER-8", "TER-9")


def _terrain_checks(ctx: _Context) -> list[CheckResult]:
    m = ctx.m
    paths, exhaustive = _path_corpus(ctx)
    tallies = {cid: _Tally(cid) for cid in _PATH_IDS}
    for tl in tallies.values():
        tl.sampled = not exhaustive
    memo: dict = {}
    uphill = None  # (distance of hill foot from C, -path index, path, start, height)
    delta_one = 0
    for idx, path in enumerate(paths):
        key = _path_inputs(m, path)
        hit = memo.get(key)
        if hit is None:
            hit = memo[key] = path_violations(*key, m.t, m.rad)
        violations, applied, facts = hit
        for cid in applied:
            tallies[cid].instances += 1
        seen = set()
        for cid, kind in violations:
            if cid in seen:
                continue
            seen.add(cid)
            tallies[cid].add(0, 1, lambda kind=kind, path=path: ctx.witness(
                kind, {"y": path[0], "x": path[-1]}, path=path))
        if facts.get("delta_one_strict"):
            delta_one += 1
        if "uphill" in facts:
            E = key[0]
            classes = classify_edges(E)
            for s in segments_of(classes):
                if s.label == "UpHill":
                    foot = path[s.start]
                    cand = (int(m.dC[foot]), s.length, -idx)
                    if uphill is None or cand > uphill[0]:
                        uphill = (cand, path, s)
    for tl in tallies.values():
        tl.details["paths"] = len(paths)
    tallies["ID-1"].details["distinct_profiles"] = len(memo)
    if m.t == 2:
        tallies["TER-2"].details["delta_one_strict_paths"] = delta_one
    if uphill is not None:
        _, path, s = uphill
        tallies["TER-4"].details["farthest_uphill"] = {
            "from": ctx.labels[path[s.start]],
            "to": ctx.labels[path[s.end]],
            "height": s.length,
            "distance_to_center": int(m.dC[path[s.start]]),
            "path": [ctx.labels[v] for v in path],
        }
    return [tallies[c].result() for c in _PATH_IDS]


_SINGLE_CHECKS: dict[str, Callable[[_Context], CheckResult]] = {
    "CVX-1": _check_disks,
    "CVX-2": _check_layers,
    "CVX-3": _check_intersections,
    "CVX-4": _check_diameters,
    "CVX-5": _check_bottleneck_layers,
    "DUAL-1": _quad_check("DUAL-1", "duality"),
    "DUAL-2": _quad_check("DUAL-2", "max_min_duality"),
    "DUAL-3": _quad_check("DUAL-3", "middle_distance"),
    "DUAL-4": _triple_check("DUAL-4", "middle_eccentricity"),
    "DUAL-5": _triple_check("DUAL-5", "close_endpoints",
                            lambda m, X, Y, C: m.D[X, C] == m.t + 1),
    "ECC-1": _check_ecc_vertex("ECC-1", "ecc_sandwich"),
    "ECC-2": _check_ecc_vertex("ECC-2", "ecc_layer_distance"),
    "ECC-3": _triple_check("ECC-3", "beam_slice",
                           lambda m, X, Y, C: m.furthest(X, Y)),
    "ECC-4": _check_pairs,
    "ECC-5": _check_furthest,
    "ECC-6": _check_beam_diam,
    "ECC-7": _check_beam_middle,
    "ECC-8": _check_beam_enclosure,
    "ECC-9": _check_pair_enclosure,
}


def run_suite(g: Graph, config: SuiteConfig | None = None, graph_id: str = "graph",
              D: np.ndarray | None = None, delta2: int | None = None) -> VerificationReport:
    """Run the check registry on one graph against the exact oracle.

    ``D`` and ``delta2`` may be passed in when already computed; ``delta2``
    must then be the exact doubled hyperbolicity.
    """
    config = (config or SuiteConfig()).validate()
    if config.size_cap is not None and g.n > config.size_cap:
        raise SizeLimitExceeded(f"verify: n={g.n} exceeds the cap of {config.size_cap}")
    if D is None:
        D = all_pairs_distances(g, cap=None)
    if delta2 is None:
        delta2 = hyperbolicity_exact(g, dist=D, cap=None).delta2
    ctx = _Context(g, D, delta2, config)
    wanted = set(config.checks or CHECK_IDS)
    results: dict[str, CheckResult] = {}
    for cid, fn in _SINGLE_CHECKS.items():
        if cid in wanted:
            results[cid] = fn(ctx)
    if wanted & {"APX-1", "APX-2", "APX-3", "APX-4"}:
        for r in _estimator_checks(ctx):
            results[r.check_id] = r
    if wanted & set(_PATH_IDS):
        for r in _terrain_checks(ctx):
            results[r.check_id] = r
    checks = [results[c] for c in sorted(results) if c in wanted]
    return VerificationReport(graph_id, g.n, g.m, int(delta2), config.seed, checks)


# --------------------------------------------------------------------------
# corpus
# --------------------------------------------------------------------------

DEFAULT_SIZES = (20, 40, 60, 80)
DEFAULT_SEEDS = (1, 2, 3, 4, 5)
DEFAULT_FAMILIES = ("path", "cycle", "grid", "random_tree", "gnm_2n", "gnm_4n")
_GRIDS = {20: (4, 5), 40: (5, 8), 60: (6, 10), 80: (8, 10)}


def _grid_shape(n: int) -> tuple[int, int]:
    if n in _GRIDS:
        return _GRIDS[n]
    a = int(np.sqrt(n))
    while n % a:
        a -= 1
    return a, n // a


def default_corpus(families: Iterable[str] = DEFAULT_FAMILIES,
                   sizes: Iterable[int] = DEFAULT_SIZES,
                   seeds: Iterable[int] = DEFAULT_SEEDS,
                   fig3: bool = True) -> list[str]:
    """Family descriptors of the corpus; deterministic families appear once per size."""
    out: list[str] = []
    seeds = list(seeds)
    for fam in families:
        for n in sizes:
            if fam == "path":
                out.append(f"path({n})")
            elif fam == "cycle":
                out.append(f"cycle({n})")
            elif fam == "grid":
                a, b = _grid_shape(n)
                out.append(f"grid({a},{b})")
            elif fam == "random_tree":
                out.extend(f"random_tree({n},seed={s})" for s in seeds)
            elif fam in ("gnm_2n", "gnm_4n"):
                mult = 2 if fam == "gnm_2n" else 4
                out.extend(f"gnm_connected({n},{mult * n},seed={s})" for s in seeds)
            else:
                raise InvalidParams(f"unknown corpus family {fam!r}")
    if fig3:
        out.extend(f"fig3({k},{p})" for k in (1, 2, 3) for p in (1, 2))
    return out


def _suite_for(args) -> dict:
    descriptor, config = args
    return run_suite(gen_family(descriptor), config, graph_id=descriptor).to_json()


def resolve_threads(threads: int | None = None) -> int:
    if threads is None:
        env = os.environ.get("HYPERTERRAIN_THREADS")
        if env:
            try:
                threads = int(env)
            except ValueError:
                raise InvalidParams(f"HYPERTERRAIN_THREADS must be an integer, got {env!r}") from None
    if threads is None:
        threads = os.cpu_count() or 1
    if threads < 1:
        raise InvalidParams("threads must be at least 1")
    return threads


def run_corpus(descriptors: Sequence[str] | None = None, config: SuiteConfig | None = None,
               threads: int | None = None) -> dict:
    """Run the suite over a list of family descriptors and aggregate.

    Reports come back in input order whatever the worker count, so the JSON
    is byte-identical across runs.
    """
    config = (config or SuiteConfig()).validate()
    descriptors = list(default_corpus() if descriptors is None else descriptors)
    for d in descriptors:  # fail fast on bad descriptors, before any work
        parse_family(d)
    threads = min(resolve_threads(threads), max(1, len(descriptors)))
    jobs = [(d, config) for d in descriptors]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            reports = list(pool.map(_suite_for, jobs))
    else:
        reports = [_suite_for(j) for j in jobs]
    return aggregate(reports, config.seed)


def aggregate(reports: list[dict], seed: int) -> dict:
    counts = {"pass": 0, "fail": 0, "skipped": 0}
    for r in reports:
        for c in r["checks"]:
            counts[c["status"]] += 1
    run = counts["pass"] + counts["fail"]
    return {
        "schema": SCHEMA_VERSION,
        "seed": seed,
        "status": "fail" if counts["fail"] else "pass",
        "summary": {
            "graphs": len(reports),
            "checks_passed": counts["pass"],
            "checks_failed": counts["fail"],
            "checks_skipped": counts["skipped"],
            "pass_rate": 1.0 if not run else round(counts["pass"] / run, 6),
        },
        "graphs": reports,
    }


# --------------------------------------------------------------------------
# witness re-verification
# --------------------------------------------------------------------------

def _brute_beta(m: Metric, mask: np.ndarray) -> int:
    members = np.flatnonzero(mask).tolist()
    best = 0
    D = m.D
    for i, x in enumerate(members):
        for y in members[i + 1:]:
            for z in range(m.n):
                if not mask[z] and D[x, z] + D[z, y] == D[x, y]:
                    best = max(best, int(min(D[z, x], D[z, y])))
    return best


def _brute_eps(m: Metric, mask: np.ndarray) -> int:
    members = np.flatnonzero(mask).tolist()
    D = m.D
    worst = 0
    for x in members:
        for y in members:
            for z in range(m.n):
                if D[x, z] + D[z, y] == D[x, y]:
                    worst = max(worst, int(D[z, members].min()))
    return worst


def _is_path(m: Metric, g: Graph, path: Sequence[int]) -> bool:
    if any(b not in g.adj[a] for a, b in zip(path, path[1:])):
        return False
    return int(m.D[path[0], path[-1]]) == len(path) - 1


def reverify_witness(g: Graph, delta2: int, witness: dict) -> bool:
    """True iff ``witness`` really violates its claim, using freshly computed distances."""
    m = Metric(_raw_distances(g), delta2)
    kind = witness["kind"]
    v = {r: g.index_of(lbl) for r, lbl in witness.get("vertices", {}).items()}
    params = dict(witness.get("params", {}))
    path = [g.index_of(lbl) for lbl in witness.get("path", [])]
    if kind in VERTEX_CLAIMS:
        _, roles, names, pred = VERTEX_CLAIMS[kind]
        return bool(pred(m, **{r: v[r] for r in roles}, **{p: params[p] for p in names}))
    if kind in ("intersection_closure", "pseudo_quasi"):
        s1, s2, both = _disk_pair_sets(m, v["c1"], params["r1"], v["c2"], params["r2"])
        if not both.any():
            return False
        b1, b2, b = (_brute_beta(m, s) for s in (s1, s2, both))
        if kind == "intersection_closure":
            return b > max(b1, b2)
        return any(_brute_eps(m, s) > bb for s, bb in ((s1, b1), (s2, b2), (both, b)))
    if kind == "layer_boundary_path":
        if m.t == 0 or len(path) < 2 or not _is_path(m, g, path):
            return False
        top = m.rad + params["k"]
        e = m.ecc
        ends_in = e[path[0]] <= top and e[path[-1]] <= top
        inner_out = all(e[u] > top for u in path[1:-1])
        return bool(ends_in and inner_out and len(path) - 1 > 2 * m.t - 1)
    if kind in ("pair_left", "tree_middle", "tree_fast"):
        s = v["start"]
        if kind == "pair_left":
            err = m.ecc - approx_pair_left(g, start=s).est
            lo, hi = 0, m.t
        elif kind == "tree_middle":
            err = approx_tree_middle(g, start=s)[1].est - m.ecc
            lo, hi = 0, 2 * m.t + 1
        else:
            k = params.get("k", 1)
            err = approx_tree_fast(g, s, k=k)[1].est - m.ecc
            lo, hi = 0, (3 * m.t if k == 1 else 3 * m.t + 1 - k)
        val = int(err[v["v"]])
        return val < lo or val > hi
    if kind == "radius_diameter":
        s = v["start"]
        est = radius_diameter_estimates(g, s)
        trace = mutually_distant_pair(g, s)
        t, rad, diam = m.t, m.rad, m.diam
        rises = sum(1 for a, b in zip(trace.dists[1:], trace.dists[2:]) if b > a)
        return bool(est.rad_ub_fast < rad or 2 * est.rad_ub_fast > 2 * rad + 3 * t
                    or est.rad_ub_tight < rad or est.rad_ub_tight > rad + t
                    or est.diam_lb < diam - t or est.diam_lb > diam
                    or est.diam_lb < 2 * rad - 2 * t - 1
                    or len(trace.sequence) > t + 3 or rises > t)
    if path:
        if not _is_path(m, g, path):
            return False
        found, _, _ = path_violations(*_path_inputs(m, path), m.t, m.rad)
        return any(k == kind for _, k in found)
    raise InvalidParams(f"unknown witness kind {kind!r}")
