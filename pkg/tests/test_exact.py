import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hyperterrain.exact import (all_pairs_distances, eccentricity_profile, furthest_set,
                                hyperbolicity_exact, locality_map)
from hyperterrain.exceptions import SizeLimitExceeded
from hyperterrain.generators import gen_family
from hyperterrain.graph import build_graph

from conftest import ORACLE


@pytest.mark.parametrize("spec", sorted(ORACLE))
def test_eccentricities_match_oracle(spec):
    _, ecc, delta2 = ORACLE[spec]
    g = gen_family(spec)
    prof = eccentricity_profile(g)
    assert prof.ecc.tolist() == ecc
    assert prof.rad == min(ecc) and prof.diam == max(ecc)
    assert list(prof.center) == [v for v, e in enumerate(ecc) if e == min(ecc)]
    assert sum(prof.histogram()) == g.n
    assert hyperbolicity_exact(g).delta2 == delta2


def test_witness_attains_delta():
    g = gen_family("grid(3,4)")
    cert = hyperbolicity_exact(g)
    D = all_pairs_distances(g)
    a, b, c, d = cert.witness
    sums = sorted([D[a, b] + D[c, d], D[a, c] + D[b, d], D[a, d] + D[b, c]])
    assert sums[2] - sums[1] == cert.delta2
    assert cert.delta == cert.delta2 / 2


def test_caps():
    g = gen_family("path(30)")
    with pytest.raises(SizeLimitExceeded):
        hyperbolicity_exact(g, cap=10)
    with pytest.raises(SizeLimitExceeded):
        eccentricity_profile(g, cap=10)
    assert hyperbolicity_exact(g, cap=None).delta2 == 0


def test_locality_and_furthest():
    g = gen_family("path(7)")
    prof = eccentricity_profile(g)
    assert locality_map(g, prof).tolist() == [1, 1, 1, 0, 1, 1, 1]
    assert furthest_set(g, 0) == frozenset({6})
    g = gen_family("cycle(6)")
    assert locality_map(g, eccentricity_profile(g)).tolist() == [0] * 6


@st.composite
def connected_graphs(draw):
    n = draw(st.integers(2, 12))
    parents = [draw(st.integers(0, v - 1)) for v in range(1, n)]
    edges = {(p, v) for v, p in zip(range(1, n), parents)}
    extra = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=15))
    for a, b in extra:
        if a != b and (a, b) not in edges and (b, a) not in edges:
            edges.add((a, b))
    return build_graph(sorted(edges))


@settings(max_examples=60, deadline=None)
@given(connected_graphs())
def test_oracle_properties(g):
    D = all_pairs_distances(g)
    prof = eccentricity_profile(g)
    for u, v in g.edges():
        assert abs(int(prof.ecc[u]) - int(prof.ecc[v])) <= 1
    delta2 = hyperbolicity_exact(g).delta2
    assert delta2 <= prof.diam
    best = 0
    for a, b, c, d in itertools.combinations(range(g.n), 4):
        s = sorted([D[a, b] + D[c, d], D[a, c] + D[b, d], D[a, d] + D[b, c]])
        best = max(best, int(s[2] - s[1]))
    assert best == delta2
    loc = locality_map(g, prof)
    for v in range(g.n):
        lower = np.flatnonzero(prof.ecc < prof.ecc[v])
        assert loc[v] == (0 if not len(lower) else int(D[v, lower].min()))
