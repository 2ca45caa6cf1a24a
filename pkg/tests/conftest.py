import pytest

from bmres import graphs as G
from bmres import ideals as I
from bmres.fixtures import (
    bridge_friendly_chordal_example,
    h_tree_example,
    max_critical_example_tree,
    non_bridge_friendly_chordal_example,
)


def support_monomial(numvars, *vars_1based):
    return I.Monomial.from_support(numvars, [v - 1 for v in vars_1based])


def gen_index(ideal, *vars_1based):
    target = support_monomial(ideal.numvars, *vars_1based)
    return ideal.generators.index(target)


@pytest.fixture(scope="session")
def chordal6():
    return bridge_friendly_chordal_example()


@pytest.fixture(scope="session")
def chordal9():
    return non_bridge_friendly_chordal_example()


@pytest.fixture(scope="session")
def tree12():
    return max_critical_example_tree()


@pytest.fixture(scope="session")
def h_tree():
    return h_tree_example()


@pytest.fixture(scope="session")
def trees_by_n():
    return {n: G.enumerate_trees(n) for n in range(1, 11)}


@pytest.fixture(scope="session")
def corpus_ideals(chordal6, chordal9, tree12):
    """Small mixed bag of ideals for lattice-level invariants."""
    out = [
        I.closed_neighborhood_ideal(G.path_graph(n)) for n in (2, 4, 5, 7)
    ]
    out.append(I.closed_neighborhood_ideal(chordal6))
    out.append(I.closed_neighborhood_ideal(chordal9))
    out.append(I.closed_neighborhood_ideal(tree12))
    out.append(I.closed_neighborhood_ideal(G.star_graph(4)))
    out.append(I.closed_neighborhood_ideal(G.cycle_graph(6)))
    out.append(I.three_path_ideal("path", 7))
    out.append(I.ideal_I_n(7))
    out.append(I.minimalize([support_monomial(3, 1, 2), support_monomial(3, 2, 3),
                             support_monomial(3, 1, 3)], 3))
    return out
