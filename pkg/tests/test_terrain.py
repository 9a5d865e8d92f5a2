import pytest
from hypothesis import given, strategies as st

from hyperterrain.exact import eccentricity_profile, locality_map
from hyperterrain.exceptions import NotAShortestPath
from hyperterrain.generators import Fig3Params, gen_family, gen_fig3
from hyperterrain.graph import bfs, canonical_shortest_path
from hyperterrain.terrain import (PathKind, classify_edges, classify_path_kind,
                                  edge_count_identities, path_kind_of, path_locality_stats,
                                  render_strip, segment_path, segments_of)


def _segment(spec, a, b):
    g = gen_family(spec)
    prof = eccentricity_profile(g)
    return segment_path(g, prof, canonical_shortest_path(g, a, b, dist=bfs(g, a))), prof


def test_path_valley():
    seg, prof = _segment("path(5)", 0, 4)
    assert seg.classes == "DDUU"
    assert seg.strip() == "\\\\//"
    assert [s.label for s in seg.segments] == ["DownHill", "UpHill"]
    assert classify_path_kind(prof, seg.path) is PathKind.GENERAL


def test_cycle_is_flat():
    seg, _ = _segment("cycle(6)", 0, 3)
    assert seg.strip() == "---"
    assert seg.segments[0].plain_kind == "Boundary"


def test_fig3_up_hill_next_to_x():
    g, names = gen_fig3(Fig3Params(2, 1))
    prof = eccentricity_profile(g)
    src, dst = names["x*"], names["u4"]
    seg = segment_path(g, prof, canonical_shortest_path(g, src, dst, dist=bfs(g, src)))
    ups = [i for i, c in enumerate(seg.classes) if c == "U"]
    assert len(ups) == 1
    i = ups[0]
    assert (seg.path[i], seg.path[i + 1]) == (names["x"], names["u1"])
    assert classify_path_kind(prof, seg.path) is PathKind.STRICT_END_MINIMAL


@pytest.mark.parametrize("classes, kinds", [
    ("UHD", [None, "Plateau", None]),
    ("DHU", [None, "Valley", None]),
    ("UHU", [None, "Terrace", None]),
    ("HU", ["Boundary", None]),
])
def test_plain_kinds(classes, kinds):
    assert [s.plain_kind for s in segments_of(classes)] == kinds


def test_path_kinds():
    assert path_kind_of([3, 2, 1]) is PathKind.STRICT_END_MINIMAL
    assert path_kind_of([3, 1, 1]) is PathKind.END_MINIMAL
    assert path_kind_of([1, 2]) is PathKind.GENERAL
    assert classify_edges([1, 2, 2, 1]) == "UHD"
    assert render_strip("UHD") == "/-\\"


def test_rejects_non_shortest_path():
    g = gen_family("cycle(6)")
    with pytest.raises(NotAShortestPath):
        segment_path(g, eccentricity_profile(g), [0, 1, 2, 3, 4])


def test_locality_stats():
    g = gen_family("path(9)")
    prof = eccentricity_profile(g)
    loc = locality_map(g, prof)
    stats = path_locality_stats(g, prof, loc, list(range(9)), delta2=0)
    assert stats["count_loc_gt1"] == 0
    assert stats["count_outside_Cdelta"] == 0


@given(st.integers(4, 30), st.integers(0, 10**6), st.data())
def test_identities_hold(n, seed, data):
    g = gen_family(f"gnm_connected({n},{min(n * (n - 1) // 2, 2 * n)},seed={seed})")
    prof = eccentricity_profile(g)
    a = data.draw(st.integers(0, n - 1))
    b = data.draw(st.integers(0, n - 1))
    seg = segment_path(g, prof, canonical_shortest_path(g, a, b, dist=bfs(g, a)))
    ids = edge_count_identities(seg, prof)
    assert ids["lhs1"] == ids["rhs1"] and ids["lhs2"] == ids["rhs2"]
    assert sum(s.length for s in seg.segments) == len(seg.path) - 1
