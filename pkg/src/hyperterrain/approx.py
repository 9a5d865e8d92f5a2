"""Fast additive approximations of all eccentricities, radius and diameter.

None of the estimators needs the hyperbolicity.  Each result carries the side
of its error and the additive bound as an expression in ``d`` (delta); the
bound is evaluated only when the caller supplies ``delta2 = 2 delta``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .exceptions import InvalidParams, InvalidTree, MissingDelta, NotMutuallyDistant
from .graph import Graph, bfs, canonical_shortest_path, multi_source_bfs
from .sweeps import SweepTrace, beam_trace, middle_vertex, mutually_distant_pair

__all__ = [
    "SpanningTree",
    "ApproxEccentricities",
    "RadiusDiameterEstimates",
    "bfs_tree",
    "tree_eccentricities",
    "approx_pair_left",
    "approx_tree_middle",
    "approx_tree_fast",
    "center_enclosure",
    "enclosure_radius",
    "radius_diameter_estimates",
]


@dataclass(frozen=True)
class SpanningTree:
    parent: np.ndarray
    root: int

    def edges(self):
        for v, p in enumerate(self.parent.tolist()):
            if v != self.root:
                yield (p, v)

    def adjacency(self, g: Graph) -> list[list[int]]:
        """Tree adjacency lists after checking that this is a spanning tree of ``g``."""
        n = g.n
        parent = self.parent
        if len(parent) != n or not 0 <= self.root < n or parent[self.root] != self.root:
            raise InvalidTree("parent array must have length n and the root must be its own parent")
        adj: list[list[int]] = [[] for _ in range(n)]
        for v, p in enumerate(parent.tolist()):
            if v == self.root:
                continue
            if not 0 <= p < n or p not in g.adj[v]:
                raise InvalidTree(f"tree edge ({p}, {v}) is not an edge of the graph")
            adj[v].append(p)
            adj[p].append(v)
        seen = _tree_bfs(adj, [self.root])
        if (seen < 0).any():
            raise InvalidTree("parent pointers contain a cycle or do not reach every vertex")
        return adj


def _tree_bfs(adj: list[list[int]], sources: list[int]) -> np.ndarray:
    dist = [-1] * len(adj)
    queue = list(sources)
    for s in sources:
        dist[s] = 0
    for u in queue:
        du = dist[u] + 1
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = du
                queue.append(w)
    return np.array(dist, dtype=np.int64)


def bfs_tree(g: Graph, root: int, dist: np.ndarray | None = None) -> SpanningTree:
    """BFS tree in which every vertex hangs off its smallest-id closer neighbor."""
    root = g.check_vertex(root)
    dist = bfs(g, root) if dist is None else dist
    d = dist.tolist()
    parent = list(range(g.n))
    for v in range(g.n):
        want = d[v] - 1
        for w in g.adj[v]:
            if d[w] == want:
                parent[v] = w
                break
    return SpanningTree(np.array(parent, dtype=np.int64), root)


def tree_eccentricities(g: Graph, t: SpanningTree) -> np.ndarray:
    """Eccentricities inside the tree: ``e_T(v) = d_T(v, C(T)) + rad(T)``.

    Two tree sweeps find a diametral path, whose middle one or two vertices
    form the tree center; one more multi-source BFS finishes the job.
    """
    adj = t.adjacency(g)
    d0 = _tree_bfs(adj, [t.root])
    a = int(np.argmax(d0))
    da = _tree_bfs(adj, [a])
    b = int(np.argmax(da))
    length = int(da[b])
    # walk from b back to a along decreasing da
    path = [b]
    v = b
    while v != a:
        want = da[v] - 1
        v = next(w for w in adj[v] if da[w] == want)
        path.append(v)
    centers = [path[length // 2]]
    if length % 2:
        centers.append(path[length // 2 + 1])
    radius = (length + 1) // 2
    return _tree_bfs(adj, centers) + radius


@dataclass
class ApproxEccentricities:
    est: np.ndarray
    method: str
    params: dict = field(default_factory=dict)
    anchors: dict = field(default_factory=dict)
    guarantee: dict = field(default_factory=dict)

    def to_json(self, g: Graph) -> dict:
        labels = g.labels.tolist()
        return {
            "method": self.method,
            "params": dict(self.params),
            "anchors": {k: labels[v] for k, v in self.anchors.items()},
            "est": self.est.tolist(),
            "guarantee": dict(self.guarantee),
        }


def _guarantee(side: str, additive: str, bound: int | None) -> dict:
    return {"side": side, "additive": additive, "bound": bound}


def _require_mutual(trace: SweepTrace) -> tuple[int, int]:
    if not trace.mutual:
        raise NotMutuallyDistant("the sweep trace does not end in a mutually distant pair")
    return trace.terminal_pair


def _distances(g: Graph, trace: SweepTrace, v: int) -> np.ndarray:
    d = trace.distances.get(v)
    return bfs(g, v) if d is None else d


def approx_pair_left(g: Graph, trace: SweepTrace | None = None, *, start: int = 0,
                     delta2: int | None = None, right_sided: bool = False) -> ApproxEccentricities:
    """``max(d(x, v), d(y, v))`` for a mutually distant pair ``{x, y}``.

    Never above the true eccentricity and at most 2 delta below it.  With a
    known ``delta2`` and ``right_sided=True`` the estimate is shifted up by
    2 delta, giving a right-sided bound instead.
    """
    trace = mutually_distant_pair(g, start) if trace is None else trace
    x, y = _require_mutual(trace)
    est = np.maximum(_distances(g, trace, x), _distances(g, trace, y))
    anchors = {"x": x, "y": y}
    if right_sided:
        if delta2 is None:
            raise MissingDelta("a right-sided pair estimate needs delta2")
        return ApproxEccentricities(est + delta2, "pair_right", {}, anchors,
                                    _guarantee("right", "2d", delta2))
    return ApproxEccentricities(est, "pair_left", {}, anchors,
                                _guarantee("left", "2d", delta2))


def approx_tree_middle(g: Graph, trace: SweepTrace | None = None, *, start: int = 0,
                       delta2: int | None = None) -> tuple[SpanningTree, ApproxEccentricities]:
    """Tree eccentricities of a BFS tree rooted at the middle of a mutually distant pair."""
    trace = mutually_distant_pair(g, start) if trace is None else trace
    x, y = _require_mutual(trace)
    path = canonical_shortest_path(g, x, y, dist=_distances(g, trace, x))
    c = middle_vertex(path)
    tree = bfs_tree(g, c)
    est = tree_eccentricities(g, tree)
    bound = None if delta2 is None else 2 * delta2 + 1
    return tree, ApproxEccentricities(est, "tree_middle", {}, {"x": x, "y": y, "c": c},
                                      _guarantee("right", "4d+1", bound))


def approx_tree_fast(g: Graph, start: int = 0, k: int = 1, *,
                     delta2: int | None = None) -> tuple[SpanningTree, ApproxEccentricities]:
    """BFS tree rooted at the middle of the last pair of a ``k + 2`` step sweep.

    The additive bound ``6 delta + 1 - k`` is proven for ``0 <= k <= 2 delta``.
    Outside that range it can fail (``k = 1`` on K4 errs by one) and is
    reported as not guaranteed.  If the sweep visibly returns to its previous
    vertex the final pair is mutually distant and ``4 delta + 1``
    applies instead.
    """
    if isinstance(k, bool) or not isinstance(k, (int, np.integer)) or k < 0:
        raise InvalidParams(f"k must be a non-negative integer, got {k!r}")
    k = int(k)
    u = g.check_vertex(start)
    seq = [u]
    du = None
    for _ in range(k + 2):
        du = bfs(g, u)
        u = int(np.argmax(du))
        seq.append(u)
    a, b = seq[-2], seq[-1]
    path = canonical_shortest_path(g, a, b, dist=du)
    c = middle_vertex(path)
    tree = bfs_tree(g, c)
    est = tree_eccentricities(g, tree)

    mutual = seq[-1] == seq[-3]
    if mutual:
        additive = "4d+1"
        bound = None if delta2 is None else 2 * delta2 + 1
    elif delta2 is not None and k > delta2:
        additive, bound = "not guaranteed", None
    else:
        additive = "6d+1-k"
        bound = None if delta2 is None else 3 * delta2 + 1 - k
    anchors = {"start": seq[0], "x": a, "y": b, "c": c}
    return tree, ApproxEccentricities(est, "tree_fast_k", {"k": k, "sweep": seq}, anchors,
                                      _guarantee("right", additive, bound))


def enclosure_radius(mode: str, k: int, delta2: int) -> int:
    """Radius of the disk around a middle vertex that must contain C_{<=k}."""
    if mode == "beam":
        return (5 * delta2) // 2 + 1 + k
    if mode == "mutual":
        return 2 * delta2 + 1 + k
    raise InvalidParams(f"mode must be 'beam' or 'mutual', got {mode!r}")


def center_enclosure(g: Graph, c: int, mode: str, k: int,
                     delta2: int | None = None) -> frozenset[int]:
    """Disk around middle vertex ``c`` guaranteed to contain every vertex of C_{<=k}."""
    if delta2 is None:
        raise MissingDelta("center enclosure radius depends on delta; pass delta2")
    if k < 0:
        raise InvalidParams(f"k must be non-negative, got {k}")
    r = enclosure_radius(mode, k, delta2)
    dist = multi_source_bfs(g, (g.check_vertex(c),), limit=r)
    return frozenset(np.flatnonzero(dist >= 0).tolist())


@dataclass(frozen=True)
class RadiusDiameterEstimates:
    rad_ub_fast: int
    rad_ub_tight: int
    diam_lb: int
    anchors: dict

    def to_json(self, g: Graph) -> dict:
        labels = g.labels.tolist()
        return {
            "rad_ub_fast": self.rad_ub_fast,
            "rad_ub_tight": self.rad_ub_tight,
            "diam_lb": self.diam_lb,
            "anchors": {k: labels[v] for k, v in self.anchors.items()},
        }


def radius_diameter_estimates(g: Graph, start: int = 0) -> RadiusDiameterEstimates:
    """Radius upper bounds from beam / mutual-pair middles and a diameter lower bound."""
    bt = beam_trace(g, start)
    bx, by = bt.terminal_pair
    c_fast = middle_vertex(canonical_shortest_path(g, bx, by, dist=bt.distances[bx]))
    mt = mutually_distant_pair(g, start)
    x, y = mt.terminal_pair
    c_tight = middle_vertex(canonical_shortest_path(g, x, y, dist=mt.distances[x]))
    return RadiusDiameterEstimates(
        rad_ub_fast=int(bfs(g, c_fast).max()),
        rad_ub_tight=int(bfs(g, c_tight).max()),
        diam_lb=int(mt.distances[x][y]),
        anchors={"beam_x": bx, "beam_y": by, "beam_c": c_fast,
                 "pair_x": x, "pair_y": y, "pair_c": c_tight},
    )
