"""Smoke test for the vmtk Python extension.

Builds the extension with cargo, copies it next to this script and
exercises the main entry points.
"""

import os
import shutil
import subprocess
import sys

HERE = os.path.dirname(os.path.abspath(__file__))
ROOT = os.path.dirname(HERE)


def build():
    subprocess.run(
        ["cargo", "build", "--release", "-p", "vmtk-py", "--features", "extension-module"],
        cwd=ROOT,
        check=True,
    )
    lib = os.path.join(ROOT, "target", "release", "libvmtk.so")
    shutil.copy(lib, os.path.join(HERE, "vmtk.so"))


def main():
    if "--no-build" not in sys.argv:
        build()
    sys.path.insert(0, HERE)
    import vmtk

    net = vmtk.Graph.net()
    assert net.n == 6 and len(net.edges()) == 6
    width, order = net.lrw()
    assert width == 2 and sorted(order) == list(range(6))
    assert net.lrw_at_most(1) is None
    assert net.delta_level() == 1

    k2 = vmtk.Graph(2, [(0, 1)])
    assert k2.lrw()[0] == 1

    p = vmtk.Graph.path(4)
    assert p.local_complement(1).has_edge(0, 2)
    assert p.pivot(1, 2).isomorphic(p.local_complement(1).local_complement(2).local_complement(1))

    assert vmtk.Graph.from_graph6(net.to_graph6()).isomorphic(net)
    assert vmtk.Graph.from_edge_list(net.to_edge_list()).to_edge_list() == net.to_edge_list()

    assert len(vmtk.delta_members(2)) == 4
    counts = vmtk.delta_count(3)
    assert counts["total"] == 2600 and counts["p_prev"] == 24

    text, bags = net.split_decomposition()
    kinds = sorted(kind.split(":")[0] for kind, _ in bags)
    assert kinds == ["complete", "star", "star", "star"], kinds
    assert text.splitlines()[0] == "12 6"

    assert not vmtk.Graph.cycle(5).is_distance_hereditary()
    try:
        net.local_complement(9)
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError")

    print("python smoke: ok")


if __name__ == "__main__":
    main()
