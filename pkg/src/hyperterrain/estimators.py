"""scikit-learn style wrappers around the eccentricity estimators.

``fit`` takes a :class:`~hyperterrain.graph.Graph` or an ``(m, 2)`` integer
edge array; ``predict`` maps vertex labels to eccentricity estimates.
Start vertices are given as original labels.
"""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_array, check_is_fitted

from .approx import approx_pair_left, approx_tree_fast, approx_tree_middle
from .exact import (DEFAULT_APSP_CAP, DEFAULT_DELTA_CAP, eccentricity_profile,
                    hyperbolicity_exact)
from .exceptions import InvalidParams, MalformedInput
from .graph import Graph, bfs, build_graph
from .sweeps import mutually_distant_pair

__all__ = [
    "check_graph",
    "check_vertices",
    "ExactEccentricity",
    "PairEccentricity",
    "TreeEccentricity",
    "Hyperbolicity",
]


def check_graph(G) -> Graph:
    """Return ``G`` as a validated :class:`Graph`.

    Accepts a Graph unchanged, or anything array-like of shape ``(m, 2)``
    holding non-negative integer labels.
    """
    if isinstance(G, Graph):
        return G
    try:
        edges = check_array(G, dtype=None, ensure_2d=True, ensure_min_samples=1)
    except (TypeError, ValueError) as exc:
        raise MalformedInput(f"expected a Graph or an (m, 2) edge array: {exc}") from None
    return build_graph(edges)


def check_vertices(g: Graph, vertices) -> np.ndarray:
    """Dense indices for an iterable of vertex labels (all vertices when None)."""
    if vertices is None:
        return np.arange(g.n)
    labels = np.atleast_1d(np.asarray(vertices))
    return np.array([g.index_of(v) for v in labels.tolist()], dtype=np.int64)


def _check_int(name: str, value, minimum: int = 0) -> int:
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)) or value < minimum:
        raise InvalidParams(f"{name} must be an integer >= {minimum}, got {value!r}")
    return int(value)


class _EccentricityBase(BaseEstimator):
    def predict(self, vertices=None) -> np.ndarray:
        """Estimated eccentricity of each vertex label (every vertex when omitted)."""
        check_is_fitted(self, "eccentricities_")
        return self.eccentricities_[check_vertices(self.graph_, vertices)]

    def fit_predict(self, G, y=None) -> np.ndarray:
        return self.fit(G, y).eccentricities_

    def _start(self, g: Graph) -> int:
        return 0 if self.start is None else g.index_of(self.start)


class ExactEccentricity(_EccentricityBase):
    """Exact eccentricities by one BFS per vertex."""

    def __init__(self, cap: int | None = DEFAULT_APSP_CAP):
        self.cap = cap

    def fit(self, G, y=None):
        g = check_graph(G)
        prof = eccentricity_profile(g, cap=self.cap)
        self.graph_ = g
        self.profile_ = prof
        self.eccentricities_ = prof.ecc
        self.radius_ = prof.rad
        self.diameter_ = prof.diam
        self.center_ = g.labels[list(prof.center)]
        self.n_vertices_ = g.n
        return self


class PairEccentricity(_EccentricityBase):
    """``max(d(x, v), d(y, v))`` for a mutually distant pair found by sweeping.

    Left-sided: never above the truth, at most 2 delta below.  With
    ``right_sided=True`` and a known ``delta2`` the estimate is shifted up.
    """

    def __init__(self, start=None, delta2: int | None = None, right_sided: bool = False):
        self.start = start
        self.delta2 = delta2
        self.right_sided = right_sided

    def fit(self, G, y=None):
        g = check_graph(G)
        trace = mutually_distant_pair(g, self._start(g))
        res = approx_pair_left(g, trace, delta2=self.delta2, right_sided=self.right_sided)
        self.graph_ = g
        self.trace_ = trace
        self.result_ = res
        self.eccentricities_ = res.est
        self.pair_ = g.labels[list(trace.terminal_pair)]
        self.guarantee_ = res.guarantee
        self.n_vertices_ = g.n
        return self


class TreeEccentricity(_EccentricityBase):
    """Eccentricities of a BFS tree rooted near the center.

    ``method="middle"`` roots it at the middle of a mutually distant pair
    (right-sided, within 4 delta + 1).  ``method="fast"`` runs ``k + 2``
    sweeps and roots it at the middle of the last pair (within 6 delta when
    ``k = 1``).
    """

    def __init__(self, method: str = "middle", k: int = 1, start=None,
                 delta2: int | None = None):
        self.method = method
        self.k = k
        self.start = start
        self.delta2 = delta2

    def fit(self, G, y=None):
        g = check_graph(G)
        s = self._start(g)
        if self.method == "middle":
            tree, res = approx_tree_middle(g, start=s, delta2=self.delta2)
        elif self.method == "fast":
            k = _check_int("k", self.k)
            tree, res = approx_tree_fast(g, s, k=k, delta2=self.delta2)
        else:
            raise InvalidParams(f"method must be 'middle' or 'fast', got {self.method!r}")
        self.graph_ = g
        self.tree_ = tree
        self.result_ = res
        self.root_ = g.label(tree.root)
        self.eccentricities_ = res.est
        self.guarantee_ = res.guarantee
        self.n_vertices_ = g.n
        return self


class Hyperbolicity(BaseEstimator):
    """Exact four-point hyperbolicity, kept doubled as an integer."""

    def __init__(self, cap: int | None = DEFAULT_DELTA_CAP):
        self.cap = cap

    def fit(self, G, y=None):
        g = check_graph(G)
        cert = hyperbolicity_exact(g, cap=self.cap)
        self.graph_ = g
        self.certificate_ = cert
        self.delta2_ = cert.delta2
        self.delta_ = cert.delta
        self.witness_ = None if cert.witness is None else g.labels[list(cert.witness)]
        return self

    def transform(self, G=None) -> np.ndarray:
        """The witness quadruple's three distance sums, largest first."""
        check_is_fitted(self, "delta2_")
        if self.certificate_.witness is None:
            return np.zeros(3, dtype=np.int64)
        a, b, c, d = self.certificate_.witness
        g = self.graph_
        da, db = bfs(g, a), bfs(g, b)
        sums = [da[b] + bfs(g, c)[d], da[c] + db[d], da[d] + db[c]]
        return np.sort(np.array(sums, dtype=np.int64))[::-1]
