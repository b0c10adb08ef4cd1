#!/usr/bin/env python3
"""Builds the pfaffian_py extension and exercises it end to end."""

import json
import shutil
import subprocess
import sys
import tempfile
from pathlib import Path

REPO = Path(__file__).resolve().parents[1]


def build_and_import():
    subprocess.run(["cargo", "build", "-p", "pfaffian-py"], cwd=REPO, check=True)
    meta = subprocess.run(
        ["cargo", "metadata", "--format-version", "1", "--no-deps"],
        cwd=REPO,
        check=True,
        capture_output=True,
        text=True,
    )
    target = Path(json.loads(meta.stdout)["target_directory"])
    candidates = [
        target / "debug" / "libpfaffian_py.so",
        target / "debug" / "libpfaffian_py.dylib",
        target / "debug" / "pfaffian_py.dll",
    ]
    built = next(p for p in candidates if p.exists())
    stage = Path(tempfile.mkdtemp(prefix="pfaffian_py_"))
    shutil.copy2(built, stage / "pfaffian_py.so")
    sys.path.insert(0, str(stage))
    import pfaffian_py

    return pfaffian_py


def main():
    pf = build_and_import()

    # planar hexagon: orientable, and the answer survives the exact oracle
    c6 = pf.BipartiteGraph(3, 3, [(0, 0), (1, 0), (1, 1), (2, 1), (2, 2), (0, 2)])
    orientation = c6.pfaffian_orientation()
    assert orientation is not None and len(orientation) == 6
    assert c6.is_pfaffian_orientation(orientation)
    assert c6.pfaffian_failure() is None
    assert c6.has_perfect_matching()
    tree = json.loads(c6.decomposition_json())
    assert tree["kind"] == "two_sum", tree

    # K3,3: refused, with a stated reason
    k33 = pf.BipartiteGraph(3, 3, [(a, b) for a in range(3) for b in range(3)])
    assert k33.pfaffian_orientation() is None
    assert "edge bound" in k33.pfaffian_failure()

    # the Heawood graph is the nonplanar base case
    h = pf.heawood_graph()
    assert h.is_brace()
    oh = h.pfaffian_orientation()
    assert oh is not None and all(s == 1 for (_, _, s) in oh)
    assert h.is_pfaffian_orientation(oh)

    # exact arithmetic round trips through Python integers
    assert pf.permanent([[1, 1], [1, 1]]) == 2
    assert pf.determinant([[1, 1], [-1, 1]]) == 2

    # a signing of the 2x2 all-ones matrix hits determinant = permanent
    b = pf.polya_matrix([[1, 1], [1, 1]])
    assert b is not None and pf.determinant(b) == 2
    assert pf.polya_matrix([[1] * 3] * 3) is None

    assert pf.sign_nonsingular([[1, 0], [0, 1]])
    assert not pf.sign_nonsingular([[1] * 3] * 3)

    # evenness with a checkable witness
    even, witness = pf.is_even_digraph(3, [(u, v) for u in range(3) for v in range(3) if u != v])
    assert even and witness is None
    even, witness = pf.is_even_digraph(2, [(0, 1), (1, 0)])
    assert not even and sum(w for (_, _, w) in witness) % 2 == 1

    # errors surface as Python exceptions
    try:
        pf.BipartiteGraph(1, 1, [(0, 1)])
    except ValueError:
        pass
    else:
        raise AssertionError("out-of-range edge must raise")

    print("smoke test passed")


if __name__ == "__main__":
    main()
