import pytest

from hyperterrain.convexity import (allowed_beta, check_disk_pseudoconvexity,
                                    check_layer_pseudoconvexity, pseudoconvexity_beta,
                                    quasiconvexity_eps)
from hyperterrain.exact import eccentricity_profile, hyperbolicity_exact
from hyperterrain.exceptions import EmptySet
from hyperterrain.generators import gen_family


def test_allowed_beta():
    assert [allowed_beta(t) for t in range(5)] == [0, 0, 1, 2, 3]


def test_path_endpoints():
    g = gen_family("path(5)")
    rep = pseudoconvexity_beta(g, [0, 4])
    assert rep.beta_min == 2 and rep.witness == (0, 4, 2)
    assert quasiconvexity_eps(g, [0, 4]) == 2
    assert pseudoconvexity_beta(g, range(5)).beta_min == 0


def test_cycle_and_path_values():
    assert pseudoconvexity_beta(gen_family("cycle(4)"), [0, 1, 3]).beta_min == 1
    assert quasiconvexity_eps(gen_family("path(7)"), [0, 1, 3, 5, 6]) == 1
    with pytest.raises(EmptySet):
        pseudoconvexity_beta(gen_family("path(3)"), [])


@pytest.mark.parametrize("spec", ["grid(5,6)", "fig3(1,2)", "gnm_connected(30,60,seed=2)",
                                  "cycle(9)"])
def test_layers_and_disks(spec):
    g = gen_family(spec)
    t = hyperbolicity_exact(g).delta2
    prof = eccentricity_profile(g)
    layers = check_layer_pseudoconvexity(g, prof, t)
    assert len(layers) == prof.diam - prof.rad + 1
    assert all(c.ok for c in layers)
    disks = check_disk_pseudoconvexity(g, t, samples=50, seed=1)
    assert len(disks) == 50 and all(d.ok for d in disks)


def test_wrong_delta_is_caught():
    # a long cycle's center is everything; its disks are far from convex
    g = gen_family("cycle(12)")
    disks = check_disk_pseudoconvexity(g, 0, samples=40, seed=0)
    assert any(not d.ok for d in disks)
