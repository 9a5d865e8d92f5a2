import pytest

from hyperterrain.exceptions import (DisconnectedGraph, DuplicateEdge, EmptyInput,
                                     InputError, MalformedInput, NotAShortestPath, SelfLoop,
                                     UnknownVertex)
from hyperterrain.generators import SplitMix64, gen_family
from hyperterrain.graph import (all_shortest_paths, bfs, build_graph, canonical_shortest_path,
                                disk, format_edgelist, gromov_product, interval, interval_slice,
                                is_shortest_path, multi_source_bfs, parse_edgelist,
                                random_shortest_path, read_edgelist)


def test_parse_comments_and_blank_lines():
    text = "# header\n% also a comment\n\n1 2\n  2 3  \n"
    assert parse_edgelist(text) == [(1, 2), (2, 3)]


@pytest.mark.parametrize("text, exc", [
    ("", EmptyInput),
    ("# only a comment\n", EmptyInput),
    ("1\n", MalformedInput),
    ("a b\n", MalformedInput),
    ("1 -2\n", MalformedInput),
    ("1 1\n", SelfLoop),
    ("1 2\n2 1\n", DuplicateEdge),
    ("1 2\n3 4\n", DisconnectedGraph),
])
def test_malformed_inputs(text, exc):
    with pytest.raises(exc):
        build_graph(parse_edgelist(text))
    assert issubclass(exc, InputError)


def test_labels_are_preserved(tmp_path):
    p = tmp_path / "g.txt"
    p.write_text("10 30\n30 20\n", encoding="utf-8")
    g = read_edgelist(p)
    assert g.n == 3 and g.m == 2
    assert sorted(g.labels.tolist()) == [10, 20, 30]
    assert g.label(g.index_of(30)) == 30
    with pytest.raises(UnknownVertex):
        g.index_of(99)
    again = build_graph(parse_edgelist(format_edgelist(g)))
    assert again.labels.tolist() == g.labels.tolist()


def test_bfs_and_multi_source():
    g = gen_family("path(6)")
    assert bfs(g, 0).tolist() == [0, 1, 2, 3, 4, 5]
    assert multi_source_bfs(g, [0, 5]).tolist() == [0, 1, 2, 2, 1, 0]
    assert multi_source_bfs(g, [0], limit=2).tolist() == [0, 1, 2, -1, -1, -1]
    assert disk(g, [2], 1) == frozenset({1, 2, 3})


def test_interval_and_slices_on_cycle():
    g = gen_family("cycle(6)")
    d0, d3 = bfs(g, 0), bfs(g, 3)
    assert interval(g, 0, 3, d0, d3) == frozenset(range(6))
    assert interval_slice(g, 0, 3, 1) == frozenset({1, 5})
    # doubled: 2 (x|y)_z
    assert gromov_product(g, 1, 5, 0) == 0
    assert gromov_product(g, 1, 5, 3) == 2


def test_shortest_paths():
    g = gen_family("grid(3,3)")
    paths = list(all_shortest_paths(g, 0, 8, dist=bfs(g, 8)))
    assert len(paths) == 6
    assert paths == sorted(paths)
    assert all(is_shortest_path(g, p) for p in paths)
    assert len(list(all_shortest_paths(g, 0, 8, dist=bfs(g, 8), limit=2))) == 2
    canon = canonical_shortest_path(g, 0, 8, dist=bfs(g, 0))
    assert canon in paths
    rng = SplitMix64(0)
    for _ in range(10):
        assert random_shortest_path(g, 0, 8, bfs(g, 8), rng) in paths
    assert not is_shortest_path(g, [0, 1, 4, 3])
