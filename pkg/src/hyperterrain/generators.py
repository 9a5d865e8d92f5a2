"""Deterministic test-graph families.

Random families draw from :class:`SplitMix64` so the same ``(parameters, seed)``
always yields the same edge list, independent of numpy or Python versions.
"""
from __future__ import annotations

import ast
import heapq
import re
from dataclasses import dataclass

from .exceptions import InvalidParams
from .graph import Graph, build_graph

__all__ = [
    "SplitMix64",
    "Fig3Params",
    "gen_fig3",
    "gen_family",
    "parse_family",
    "FAMILIES",
]

_MASK = (1 << 64) - 1


class SplitMix64:
    """Steele, Lea and Flood's SplitMix64 generator.

    ``below(k)`` maps a 64-bit output ``z`` to ``(z * k) >> 64`` (multiply-shift,
    no rejection step).  Both choices are fixed so corpora are reproducible.
    """

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, k: int) -> int:
        return (self.next() * k) >> 64


@dataclass(frozen=True)
class Fig3Params:
    """Parameters of the up-hill counterexample family; the branch length is k + p."""

    k: int
    p: int

    @property
    def ell(self) -> int:
        return self.k + self.p

    def validate(self) -> None:
        for name in ("k", "p"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise InvalidParams(f"fig3 parameter {name} must be an integer >= 1, got {value!r}")


def gen_fig3(params: Fig3Params) -> tuple[Graph, dict[str, int]]:
    """Build the up-hill counterexample graph and a name -> dense id map.

    Names: ``x``, ``u1..u{2k+1}``, ``y``, ``v1..v{2k+1}``, ``w2..w{2k}``, the
    branch paths ``pu1..`` ending in ``u`` and ``pv1..`` ending in ``v``, and the
    pendant paths ``px1..`` ending in ``x*`` and ``py1..`` ending in ``y*``.
    Ids follow that order.
    """
    params.validate()
    k, p, ell = params.k, params.p, params.ell
    names: list[str] = ["x"]
    names += [f"u{i}" for i in range(1, 2 * k + 2)]
    names.append("y")
    names += [f"v{i}" for i in range(1, 2 * k + 2)]
    names += [f"w{i}" for i in range(2, 2 * k + 1)]
    names += [f"pu{i}" for i in range(1, ell)] + ["u"]
    names += [f"pv{i}" for i in range(1, ell)] + ["v"]
    names += [f"px{i}" for i in range(1, p)] + ["x*"]
    names += [f"py{i}" for i in range(1, p)] + ["y*"]
    ids = {name: i for i, name in enumerate(names)}

    edges: list[tuple[int, int]] = []

    def chain(seq):
        edges.extend((ids[a], ids[b]) for a, b in zip(seq, seq[1:]))

    chain(["x"] + [f"u{i}" for i in range(1, 2 * k + 2)] + ["y"])
    chain(["x"] + [f"v{i}" for i in range(1, 2 * k + 2)] + ["y"])
    chain([f"w{i}" for i in range(2, 2 * k + 1)])
    for i in range(2, 2 * k + 1):
        edges.append((ids[f"u{i}"], ids[f"w{i}"]))
        edges.append((ids[f"w{i}"], ids[f"v{i}"]))
    chain([f"u{k + 2}"] + [f"pu{i}" for i in range(1, ell)] + ["u"])
    chain([f"v{k + 2}"] + [f"pv{i}" for i in range(1, ell)] + ["v"])
    chain(["x"] + [f"px{i}" for i in range(1, p)] + ["x*"])
    chain(["y"] + [f"py{i}" for i in range(1, p)] + ["y*"])
    return build_graph(edges), ids


def _positive(name: str, value, minimum: int = 1) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
        raise InvalidParams(f"{name} must be an integer >= {minimum}, got {value!r}")
    return value


def _path(n):
    n = _positive("n", n, 2)
    return [(i, i + 1) for i in range(n - 1)]


def _cycle(n):
    n = _positive("n", n, 3)
    return [(i, (i + 1) % n) for i in range(n)]


def _complete(n):
    n = _positive("n", n, 2)
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def _grid(rows, cols):
    rows = _positive("rows", rows)
    cols = _positive("cols", cols)
    if rows * cols < 2:
        raise InvalidParams("grid needs at least two vertices")
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return edges


def _prufer_tree(n: int, rng: SplitMix64) -> list[tuple[int, int]]:
    """Uniform random labeled tree via a random Pruefer sequence."""
    if n == 2:
        return [(0, 1)]
    seq = [rng.below(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    a, b = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((a, b))
    return edges


def _random_tree(n, seed=0):
    n = _positive("n", n, 2)
    return _prufer_tree(n, SplitMix64(_seed(seed)))


def _gnm_connected(n, m, seed=0):
    """Uniform random spanning tree plus ``m - n + 1`` uniformly drawn extra edges."""
    n = _positive("n", n, 2)
    m = _positive("m", m)
    if not n - 1 <= m <= n * (n - 1) // 2:
        raise InvalidParams(f"gnm_connected needs n-1 <= m <= n(n-1)/2, got n={n}, m={m}")
    rng = SplitMix64(_seed(seed))
    edges = _prufer_tree(n, rng)
    present = {(min(a, b), max(a, b)) for a, b in edges}
    while len(edges) < m:
        a, b = rng.below(n), rng.below(n)
        if a == b:
            continue
        key = (a, b) if a < b else (b, a)
        if key in present:
            continue
        present.add(key)
        edges.append(key)
    return edges


def _seed(seed) -> int:
    if isinstance(seed, bool) or not isinstance(seed, int):
        raise InvalidParams(f"seed must be an integer, got {seed!r}")
    return seed


FAMILIES = {
    "path": _path,
    "cycle": _cycle,
    "complete": _complete,
    "grid": _grid,
    "random_tree": _random_tree,
    "gnm_connected": _gnm_connected,
}

_DESCRIPTOR = re.compile(r"^\s*([a-z_0-9]+)\s*(?:\((.*)\))?\s*$")


def parse_family(text: str) -> tuple[str, tuple, dict]:
    """Split ``"gnm_connected(100, 300, seed=1)"`` into name, args and kwargs."""
    match = _DESCRIPTOR.match(text)
    if not match:
        raise InvalidParams(f"cannot parse graph family descriptor {text!r}")
    name, body = match.group(1), match.group(2)
    if name not in FAMILIES and name != "fig3":
        raise InvalidParams(f"unknown graph family {name!r}")
    args: list = []
    kwargs: dict = {}
    if body and body.strip():
        try:
            call = ast.parse(f"f({body})", mode="eval").body
            args = [ast.literal_eval(a) for a in call.args]
            kwargs = {kw.arg: ast.literal_eval(kw.value) for kw in call.keywords}
        except (SyntaxError, ValueError) as exc:
            raise InvalidParams(f"bad arguments in descriptor {text!r}: {exc}") from None
    return name, tuple(args), kwargs


def gen_family(spec: str, *args, **kwargs) -> Graph:
    """Generate a graph from a family descriptor.

    Either ``gen_family("grid(3, 4)")`` or ``gen_family("grid", 3, 4)``.
    ``fig3`` descriptors are accepted too (the name map is dropped; use
    :func:`gen_fig3` to keep it).
    """
    if not args and not kwargs and "(" in spec:
        name, args, kwargs = parse_family(spec)
    else:
        name = spec.strip()
    if name == "fig3":
        try:
            params = Fig3Params(*args, **kwargs)
        except TypeError as exc:
            raise InvalidParams(str(exc)) from None
        return gen_fig3(params)[0]
    try:
        factory = FAMILIES[name]
    except KeyError:
        raise InvalidParams(f"unknown graph family {name!r}") from None
    try:
        edges = factory(*args, **kwargs)
    except TypeError as exc:
        raise InvalidParams(f"{name}: {exc}") from None
    return build_graph(edges)
