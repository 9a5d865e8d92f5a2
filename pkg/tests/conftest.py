import json
import subprocess
import sys

import pytest

# Frozen from an independent networkx computation (all-pairs BFS plus a
# brute-force four-point scan): crc32 of the emitted edge list, eccentricity
# per dense id, and doubled hyperbolicity.
ORACLE = {
    "path(5)": (687854995, [4, 3, 2, 3, 4], 0),
    "cycle(4)": (4004960038, [2, 2, 2, 2], 2),
    "cycle(5)": (1024945036, [2, 2, 2, 2, 2], 1),
    "cycle(7)": (3346599115, [3, 3, 3, 3, 3, 3, 3], 2),
    "grid(3,4)": (467300559, [5, 4, 4, 5, 4, 3, 3, 4, 5, 4, 4, 5], 4),
    "fig3(1,1)": (1411016104, [5, 6, 5, 4, 5, 6, 5, 4, 4, 5, 6, 5, 6, 6, 6], 4),
    "fig3(2,1)": (1644117891,
                  [7, 8, 7, 6, 5, 6, 7, 8, 7, 6, 5, 6, 6, 5, 6, 6, 7, 8, 6, 7, 8, 8, 8], 4),
    "random_tree(15,seed=2)": (1980656487, [7, 7, 7, 5, 5, 4, 5, 7, 6, 6, 4, 6, 5, 7, 7], 0),
    "gnm_connected(20,40,seed=1)": (1051589597,
                                    [4, 3, 3, 3, 4, 3, 3, 4, 3, 3, 3, 4, 3, 3, 3, 3, 3, 3, 3, 4], 3),
    "gnm_connected(24,96,seed=3)": (3007527431,
                                    [2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 3, 2, 3, 2, 2, 2, 2, 3, 2,
                                     2, 2, 3, 3], 2),
}

SMALL = ["path(5)", "cycle(6)", "grid(3,4)", "fig3(1,1)", "random_tree(15,seed=2)",
         "gnm_connected(20,40,seed=1)", "gnm_connected(24,96,seed=3)"]


def run_cli(*args, stdin=None):
    """Run the installed CLI in a subprocess; returns (code, stdout, stderr)."""
    proc = subprocess.run([sys.executable, "-m", "hyperterrain", *map(str, args)],
                          input=stdin, capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


def run_json(*args):
    code, out, err = run_cli(*args, "--format", "json")
    assert code in (0, 1), err
    return code, json.loads(out)


@pytest.fixture
def cli():
    return run_cli
