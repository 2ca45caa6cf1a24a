"""Tree-specific machinery: the maximal critical-set construction, the
distance-class characterization of bridges and gaps, and the projective
dimension pipeline for closed neighborhood ideals of trees."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Dict, List, Optional, Tuple

from .betti import BettiTable
from .bm import betti_from_critical
from .errors import NotAGenerator, NotATree
from .graphs import Graph, RootedTree, bfs_levels, graph, independence_number, is_tree, root_and_label
from .ideals import MonomialIdeal, closed_neighborhood_ideal, tree_lex_order


@dataclass(frozen=True)
class CriticalWitness:
    """Output of the maximal-critical-set construction: generator indices
    sigma and the matching vertex set V_sigma, with |sigma| = |V_sigma|."""

    sigma: frozenset
    v_sigma: frozenset

    def to_json_obj(self) -> dict:
        return {"sigma": sorted(self.sigma), "v_sigma": sorted(self.v_sigma)}


def generator_vertex_maps(t: RootedTree, ideal: MonomialIdeal) -> Tuple[Dict[int, int], List[int]]:
    """(vertex -> generator index for every witness vertex,
    generator index -> smallest witness vertex)."""
    assert ideal.witnesses is not None, "ideal must come from closed_neighborhood_ideal"
    gen_of_vertex: Dict[int, int] = {}
    anchor: List[int] = []
    for i, wit in enumerate(ideal.witnesses):
        for v in wit:
            gen_of_vertex[v] = i
        anchor.append(min(wit))
    return gen_of_vertex, anchor


def max_critical_set(t: RootedTree, reverse_ties: bool = False) -> CriticalWitness:
    """Greedy maximal critical set: take every leaf generator, then sweep
    the remaining generator vertices from the deepest level up, taking a
    vertex exactly when none of its children was taken.

    One witness vertex (the smallest) represents each generator, so
    |sigma| = |V_sigma| also on the two-vertex tree where both endpoints
    share the single generator.  ``reverse_ties`` flips the processing
    order inside levels; the output provably does not depend on it.
    """
    g = t.base
    if not is_tree(g):
        raise NotATree("max_critical_set requires a tree")
    ideal = closed_neighborhood_ideal(g)
    gen_of_vertex, anchor = generator_vertex_maps(t, ideal)
    vprime = sorted(set(anchor))

    sigma = set()
    v_sigma = set()
    rest = []
    for v in vprime:
        if g.degree(v) == 1:
            sigma.add(gen_of_vertex[v])
            v_sigma.add(v)
        else:
            rest.append(v)
    pos = t.position
    rest.sort(key=lambda v: (-t.level[v], -pos[v] if reverse_ties else pos[v]))
    for v in rest:
        if any(gen_of_vertex.get(u) in sigma for u in t.children(v) if u in gen_of_vertex):
            continue
        sigma.add(gen_of_vertex[v])
        v_sigma.add(v)
    return CriticalWitness(frozenset(sigma), frozenset(v_sigma))


def m_at_distance(t: RootedTree, ideal: MonomialIdeal, v: int, n: int,
                  sigma: Optional[frozenset] = None,
                  cumulative: bool = False) -> frozenset:
    """Generator indices whose witness vertex lies at distance n from v
    (at most n when cumulative), optionally intersected with sigma."""
    gen_of_vertex, _ = generator_vertex_maps(t, ideal)
    dist = bfs_levels(t.base, v)
    out = set()
    for u, gen in gen_of_vertex.items():
        if (dist[u] <= n if cumulative else dist[u] == n):
            if sigma is None or gen in sigma:
                out.add(gen)
    return frozenset(out)


def p2_class_count(t: RootedTree, ideal: MonomialIdeal, sigma: frozenset, v: int) -> int:
    """Number of path-overlap classes at v: paths from v to generator
    vertices of sigma at distance 1 or 2 fall in one class per first-step
    neighbor of v.  The trivial path from v to itself is excluded."""
    gen_of_vertex, _ = generator_vertex_maps(t, ideal)
    g = t.base
    dist = bfs_levels(g, v)
    adj = set(g.neighbors(v))
    first_steps = set()
    for u, gen in gen_of_vertex.items():
        if gen not in sigma or not 1 <= dist[u] <= 2:
            continue
        if dist[u] == 1:
            first_steps.add(u)
        else:
            first_steps.add(next(w for w in g.neighbors(u) if w in adj))
    return len(first_steps)


def characterize(t: RootedTree, ideal: MonomialIdeal, sigma: frozenset, v: int) -> str:
    """'bridge', 'gap', or 'neither' for the generator at v, decided purely
    from distance classes: full first-step class count plus a sigma member
    at distance one.  Must agree with the lcm-based definitions."""
    gen_of_vertex, _ = generator_vertex_maps(t, ideal)
    if v not in gen_of_vertex:
        raise NotAGenerator(f"vertex {v} contributes no minimal generator")
    gen = gen_of_vertex[v]
    full_classes = p2_class_count(t, ideal, sigma, v) == t.base.degree(v)
    touching = bool(m_at_distance(t, ideal, v, 1) & sigma)
    if full_classes and touching:
        return "bridge" if gen in sigma else "gap"
    return "neither"


def pdim_tree(t: RootedTree) -> int:
    """Projective dimension of the quotient by the closed neighborhood
    ideal, read off the maximal critical set; equals the independence
    number."""
    witness = max_critical_set(t)
    assert len(witness.v_sigma) == independence_number(t.base)
    return len(witness.v_sigma)


# ----------------------------------------------------------------------------
# recursive Betti numbers for trees with a pruned leaf-cluster
# ----------------------------------------------------------------------------

def find_leaf_configurations(t: RootedTree) -> list:
    """Candidate (v, leaf children of v, u) triples: v supports at least
    one leaf, has exactly one non-leaf neighbor u, and u has a leaf
    neighbor of its own.  Ordered by the rooted vertex order of v."""
    g = t.base
    out = []
    for v in t.vertex_order:
        leaves = [w for w in g.neighbors(v) if g.degree(w) == 1]
        others = [w for w in g.neighbors(v) if g.degree(w) > 1]
        if not leaves or len(others) != 1:
            continue
        u = others[0]
        if any(g.degree(w) == 1 for w in g.neighbors(u)):
            out.append((v, tuple(sorted(leaves)), u))
    return out


def _remove_vertices(g: Graph, gone: set) -> Graph:
    keep = [v for v in range(g.n) if v not in gone]
    relabel = {v: i for i, v in enumerate(keep)}
    edges = [
        (relabel[a], relabel[b]) for a, b in g.edges if a not in gone and b not in gone
    ]
    labels = tuple(g.label(v) for v in keep) if g.labels is not None else None
    return graph(len(keep), edges, labels)


def _critical_table(g: Graph) -> BettiTable:
    t = root_and_label(g)
    ideal = closed_neighborhood_ideal(g)
    return betti_from_critical(ideal, tree_lex_order(t, ideal))


def _recursive_table(t: RootedTree, config_index: int) -> BettiTable:
    configs = find_leaf_configurations(t)
    if not configs:
        return _critical_table(t.base)
    v, leaves, _u = configs[min(config_index, len(configs) - 1)]
    sub = _remove_vertices(t.base, {v, *leaves})
    inner = _recursive_table(root_and_label(sub), 0)
    n = len(leaves)
    entries: dict = {}
    for (r, d), value in inner.entries.items():
        entries[(r, d)] = entries.get((r, d), 0) + value
        for i in range(1, n + 1):
            key = (r + i, d + i + 1)
            entries[key] = entries.get(key, 0) + comb(n, i) * value
    return BettiTable("quotient", entries)


def tree_betti_recursive(t: RootedTree, config_index: int = 0) -> Optional[BettiTable]:
    """Quotient Betti table by pruning a leaf cluster v, v_1..v_n and
    recursing on the subtree:

        beta_{r,d} = beta_{r,d}' + sum_i C(n,i) * beta_{r-i,d-i-1}'

    Returns None when the tree has no qualifying leaf configuration at the
    top level; deeper recursion levels fall back to critical-cell counts.
    """
    if not is_tree(t.base):
        raise NotATree("tree_betti_recursive requires a tree")
    if not find_leaf_configurations(t):
        return None
    return _recursive_table(t, config_index)
