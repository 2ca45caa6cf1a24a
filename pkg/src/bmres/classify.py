"""Classification checks against known families: genericity, linear
quotients, and the rooted-hypertree obstruction for trees."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional

from .errors import NotATree, TooLarge
from .graphs import Graph, bfs_levels, is_tree
from .ideals import GeneratorOrder, MonomialIdeal, minimalize, quotient_monomial

LINEAR_QUOTIENTS_CAP = 9


@dataclass(frozen=True)
class ClassificationReport:
    generic: bool
    linear_quotients: Optional[GeneratorOrder]
    linear_quotients_exhausted: bool
    hypertree_obstruction_witness: Optional[int]

    def to_json_obj(self) -> dict:
        return {
            "generic": self.generic,
            "linear_quotients": list(self.linear_quotients.perm)
            if self.linear_quotients
            else None,
            "linear_quotients_exhausted": self.linear_quotients_exhausted,
            "hypertree_obstruction_witness": self.hypertree_obstruction_witness,
        }


def is_generic(ideal: MonomialIdeal) -> bool:
    """No two generators share a strictly positive excess exponent in some
    variable unless a third generator divides their lcm."""
    gens = ideal.generators
    for x in range(ideal.numvars):
        orders = [m.exponents[x] for m in gens]
        if not orders:
            continue
        floor = min(orders)
        for i in range(len(gens)):
            if orders[i] <= floor:
                continue
            for j in range(i + 1, len(gens)):
                if orders[j] != orders[i]:
                    continue
                if ideal.is_squarefree:
                    assert floor == 0
                lcm = tuple(
                    max(a, b) for a, b in zip(gens[i].exponents, gens[j].exponents)
                )
                witness = any(
                    k not in (i, j)
                    and all(e <= f for e, f in zip(gens[k].exponents, lcm))
                    for k in range(len(gens))
                )
                if not witness:
                    return False
    return True


def has_linear_quotients(ideal: MonomialIdeal,
                         cap: int = LINEAR_QUOTIENTS_CAP) -> Optional[GeneratorOrder]:
    """Exhaustive (prefix-pruned) search for an ordering with all colon
    ideals generated by variables; None when the search exhausts."""
    g = ideal.ngens
    if g > cap:
        raise TooLarge(f"{g} generators exceeds the linear-quotients cap {cap}")
    if g <= 1:
        return GeneratorOrder(tuple(range(g)))
    gens = ideal.generators

    def colon_is_linear(prefix: List[int], cand: int) -> bool:
        quotients = [quotient_monomial(gens[j], gens[cand]) for j in prefix]
        colon = minimalize(quotients, ideal.numvars)
        return all(m.degree == 1 for m in colon.generators)

    def search(prefix: List[int], remaining: set) -> Optional[tuple]:
        if not remaining:
            return tuple(prefix)
        for cand in sorted(remaining):
            if colon_is_linear(prefix, cand):
                prefix.append(cand)
                remaining.remove(cand)
                found = search(prefix, remaining)
                if found is not None:
                    return found
                remaining.add(cand)
                prefix.pop()
        return None

    found = search([], set(range(g)))
    return GeneratorOrder(found) if found is not None else None


def hypertree_obstruction(g: Graph) -> Optional[int]:
    """A vertex of degree >= 5 whose neighbors all have degree exactly 2,
    with every leaf at distance >= 3; its presence certifies that the
    closed neighborhood ideal is not a rooted-hypertree edge ideal."""
    if not is_tree(g):
        raise NotATree("hypertree_obstruction requires a tree")
    leaves = g.leaves()
    for x in range(g.n):
        if g.degree(x) < 5:
            continue
        if any(g.degree(w) != 2 for w in g.neighbors(x)):
            continue
        dist = bfs_levels(g, x)
        if all(dist[a] >= 3 for a in leaves):
            return x
    return None


def classify_graph(g: Graph, ideal: MonomialIdeal,
                   lq_cap: int = LINEAR_QUOTIENTS_CAP) -> ClassificationReport:
    try:
        lq = has_linear_quotients(ideal, lq_cap)
        exhausted = True
    except TooLarge:
        lq = None
        exhausted = False
    witness = hypertree_obstruction(g) if is_tree(g) else None
    return ClassificationReport(is_generic(ideal), lq, exhausted, witness)
