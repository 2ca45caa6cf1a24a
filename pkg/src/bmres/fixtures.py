"""Named example graphs used by the built-in verification suite and tests."""

from __future__ import annotations

from .graphs import Graph, graph


def bridge_friendly_chordal_example() -> Graph:
    """Six-vertex chordal graph whose closed neighborhood ideal is
    bridge-friendly although the triple sufficient condition fails for
    every generator order."""
    return graph(
        6,
        [(0, 1), (0, 2), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4), (2, 3), (2, 5)],
    )


def non_bridge_friendly_chordal_example() -> Graph:
    """Nine-vertex chordal graph (labels x0..x8) with no bridge-friendly
    generator order at all."""
    return graph(
        9,
        [(7, 5), (5, 4), (4, 6), (6, 8), (5, 2), (2, 1), (1, 0), (6, 3), (3, 1), (2, 3), (3, 4), (4, 2)],
        labels=[f"x{i}" for i in range(9)],
    )


def max_critical_example_tree() -> Graph:
    """Twelve-vertex rooted-tree example for the maximal critical-set
    construction; the construction selects the seven vertices
    x2, x3, x7, x9, x10, x11, x12."""
    return graph(
        12,
        [(6, 3), (3, 7), (7, 11), (3, 1), (1, 4), (4, 8), (1, 0), (0, 2), (2, 5), (9, 5), (5, 10)],
    )


def h_tree_example() -> Graph:
    """Seven-vertex tree with two adjacent generator vertices: the root and
    a depth-one vertex both have minimal closed neighborhoods."""
    return graph(7, [(0, 1), (0, 2), (1, 3), (2, 4), (3, 5), (4, 6)])


def leaf_cluster_trees() -> list:
    """Trees satisfying the leaf-cluster pruning hypothesis with one, two,
    and three pruned leaves, at two sizes each."""
    out = [
        # path on four vertices: prune x3 with leaf x4
        graph(4, [(0, 1), (1, 2), (2, 3)]),
        # chair: v has two leaves, u has one
        graph(5, [(0, 1), (1, 2), (2, 3), (2, 4)]),
        # v with three leaves
        graph(6, [(0, 1), (1, 2), (2, 3), (2, 4), (2, 5)]),
        # cluster sits beyond a branching support
        graph(7, [(0, 1), (1, 2), (2, 3), (2, 4), (4, 5), (4, 6)]),
        # double cluster around a shared support with its own leaf
        graph(8, [(0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (5, 6), (5, 7)]),
        # two single-leaf clusters hanging off one support
        graph(7, [(0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (5, 6)]),
    ]
    return out
