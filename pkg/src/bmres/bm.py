"""Bridge/gap combinatorics on the generator subset lattice of a monomial
ideal, and the Barile-Macchia quantities derived from it.

For a fixed total order > on the minimal generators:

* a *bridge* of a subset sigma is a member whose removal keeps lcm(sigma);
* a *gap* is a non-member whose addition keeps lcm(sigma);
* a *true gap* is a gap whose addition creates no new bridge strictly
  below it;
* sigma is *potentially type-2* when some bridge of sigma dominates no
  true gap, and *type-2* when additionally its smallest bridge is strictly
  minimal among all potentially type-2 sets sharing the same difference
  set sigma minus its smallest bridge;
* the order is *bridge-friendly* when every potentially type-2 subset is
  type-2, which happens exactly when sigma -> sigma minus sb(sigma) is
  injective on potentially type-2 sets;
* under a bridge-friendly order the *critical* subsets (no bridge, no
  true gap) count the graded Betti numbers of the quotient.
"""

from __future__ import annotations

import itertools
from typing import Iterable, List, Optional, Tuple

from .betti import BettiTable, shift_kind
from .errors import TooLarge
from .ideals import GeneratorOrder, MonomialIdeal, Monomial

BRIDGE_FRIENDLY_CAP = 20
ORDER_SEARCH_CAP = 10


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def subset_lcms(ideal: MonomialIdeal) -> list:
    """lcm of every generator subset, indexed by bit-mask.

    Squarefree ideals use support masks (lcm = bitwise or); the general
    case falls back to exponent tuples with componentwise max.
    """
    g = ideal.ngens
    if ideal.is_squarefree:
        reps = [m.mask for m in ideal.generators]
        lcms = [0] * (1 << g)
        for s in range(1, 1 << g):
            low = s & -s
            lcms[s] = lcms[s ^ low] | reps[low.bit_length() - 1]
    else:
        reps = [m.exponents for m in ideal.generators]
        lcms = [(0,) * ideal.numvars] * (1 << g)
        for s in range(1, 1 << g):
            low = s & -s
            prev = lcms[s ^ low]
            gen = reps[low.bit_length() - 1]
            lcms[s] = tuple(max(a, b) for a, b in zip(prev, gen))
    return lcms


def _lcm_degree(ideal: MonomialIdeal, rep) -> int:
    if ideal.is_squarefree:
        return rep.bit_count()
    return sum(rep)


class SubsetLattice:
    """Order-independent tables over all generator subsets: lcms plus the
    bridge and gap member masks of every subset."""

    def __init__(self, ideal: MonomialIdeal, cap: int = BRIDGE_FRIENDLY_CAP):
        g = ideal.ngens
        if g > cap:
            raise TooLarge(f"{g} generators exceeds the subset-scan cap {cap}")
        self.ideal = ideal
        self.ngens = g
        self.lcms = subset_lcms(ideal)
        full = (1 << g) - 1
        bridge = [0] * (1 << g)
        gap = [0] * (1 << g)
        lcms = self.lcms
        for s in range(1, 1 << g):
            bm = 0
            for i in _bits(s):
                if lcms[s ^ (1 << i)] == lcms[s]:
                    bm |= 1 << i
            bridge[s] = bm
        for s in range(1 << g):
            gm = 0
            for i in _bits(full ^ s):
                if lcms[s | (1 << i)] == lcms[s]:
                    gm |= 1 << i
            gap[s] = gm
        self.bridge_mask = bridge
        self.gap_mask = gap

    def lower_masks(self, order: GeneratorOrder) -> list:
        """lower[i] = mask of generators strictly dominated by generator i."""
        g = self.ngens
        rank = order.rank
        lower = [0] * g
        for i in range(g):
            for j in range(g):
                if rank[i] < rank[j]:
                    lower[i] |= 1 << j
        return lower

    def true_gap_mask(self, s: int, lower: list) -> int:
        out = 0
        bridges_s = self.bridge_mask[s]
        for i in _bits(self.gap_mask[s]):
            bit = 1 << i
            new_bridges = self.bridge_mask[s | bit] & ~bit & ~bridges_s
            if new_bridges & lower[i] == 0:
                out |= bit
        return out

    def smallest_bridge(self, s: int, order: GeneratorOrder) -> Optional[int]:
        bm = self.bridge_mask[s]
        if not bm:
            return None
        return max(_bits(bm), key=lambda i: order.rank[i])

    def potentially_type2(self, s: int, lower: list) -> bool:
        bm = self.bridge_mask[s]
        if not bm:
            return False
        tg = self.true_gap_mask(s, lower)
        if not tg:
            return True
        return any(lower[i] & tg == 0 for i in _bits(bm))


def _mask_of(sigma: Iterable[int], ngens: int) -> int:
    mask = 0
    for i in sigma:
        if not 0 <= i < ngens:
            raise IndexError(f"generator index {i} out of range")
        mask |= 1 << i
    return mask


def _as_set(mask: int) -> frozenset:
    return frozenset(_bits(mask))


def bridges(ideal: MonomialIdeal, sigma: Iterable[int]) -> frozenset:
    """Members of sigma whose removal leaves lcm(sigma) unchanged."""
    s = _mask_of(sigma, ideal.ngens)
    lcm = ideal.lcm_of(_bits(s))
    out = set()
    for i in _bits(s):
        if ideal.lcm_of(_bits(s ^ (1 << i))) == lcm:
            out.add(i)
    return frozenset(out)


def gaps(ideal: MonomialIdeal, sigma: Iterable[int]) -> frozenset:
    """Non-members whose addition leaves lcm(sigma) unchanged."""
    s = _mask_of(sigma, ideal.ngens)
    lcm = ideal.lcm_of(_bits(s))
    out = set()
    for i in range(ideal.ngens):
        if not s >> i & 1 and ideal.lcm_of(_bits(s | (1 << i))) == lcm:
            out.add(i)
    return frozenset(out)


def true_gaps(ideal: MonomialIdeal, order: GeneratorOrder, sigma: Iterable[int]) -> frozenset:
    """Gaps g such that every new bridge of sigma + {g} dominated by g was
    already a bridge of sigma."""
    s = _mask_of(sigma, ideal.ngens)
    old = bridges(ideal, _bits(s))
    out = set()
    for i in gaps(ideal, _bits(s)):
        new = bridges(ideal, _bits(s | (1 << i))) - {i} - old
        if not any(order.greater(i, j) for j in new):
            out.add(i)
    return frozenset(out)


def smallest_bridge(ideal: MonomialIdeal, order: GeneratorOrder, sigma: Iterable[int]) -> Optional[int]:
    """The minimum bridge under >, or None for a bridgeless subset."""
    found = bridges(ideal, sigma)
    if not found:
        return None
    return max(found, key=lambda i: order.rank[i])


def is_potentially_type2(ideal: MonomialIdeal, order: GeneratorOrder, sigma: Iterable[int]) -> bool:
    """True when sigma has a bridge dominating no true gap of sigma."""
    sigma = frozenset(sigma)
    found = bridges(ideal, sigma)
    if not found:
        return False
    tg = true_gaps(ideal, order, sigma)
    return any(not any(order.greater(b, g) for g in tg) for b in found)


def type2_reading_disagreements(ideal: MonomialIdeal, order: GeneratorOrder,
                                cap: int = BRIDGE_FRIENDLY_CAP) -> list:
    """Diagnostic for the two readings of potentially type-2: "some bridge
    dominates no true gap" versus "the smallest bridge dominates no true
    gap".  Returns the subsets on which they differ (expected none: the
    smallest bridge dominates the least)."""
    lat = SubsetLattice(ideal, cap)
    lower = lat.lower_masks(order)
    out = []
    for s in range(1 << lat.ngens):
        bm = lat.bridge_mask[s]
        if not bm:
            continue
        tg = lat.true_gap_mask(s, lower)
        any_reading = any(lower[i] & tg == 0 for i in _bits(bm))
        sb = lat.smallest_bridge(s, order)
        sb_reading = lower[sb] & tg == 0
        if any_reading != sb_reading:
            out.append(_as_set(s))
    return out


def _potential_type2_pairs(lat: SubsetLattice, order: GeneratorOrder) -> list:
    """(mask, smallest bridge index) for every potentially type-2 subset."""
    lower = lat.lower_masks(order)
    out = []
    for s in range(1 << lat.ngens):
        if lat.potentially_type2(s, lower):
            out.append((s, lat.smallest_bridge(s, order)))
    return out


def is_bridge_friendly(ideal: MonomialIdeal, order: GeneratorOrder,
                       cap: int = BRIDGE_FRIENDLY_CAP,
                       lattice: Optional[SubsetLattice] = None) -> bool:
    """Whether every potentially type-2 subset is type-2 under the order.

    Both the definition-level check and the injectivity shortcut for
    sigma -> sigma minus sb(sigma) are evaluated and must agree.
    """
    lat = lattice if lattice is not None else SubsetLattice(ideal, cap)
    pot = _potential_type2_pairs(lat, order)

    groups: dict = {}
    for s, sb in pot:
        groups.setdefault(s ^ (1 << sb), []).append((s, sb))
    injective = all(len(members) == 1 for members in groups.values())

    direct = True
    for members in groups.values():
        for s, sb in members:
            for t, sbt in members:
                if t == s:
                    continue
                assert sbt != sb, "equal smallest bridges would force equal subsets"
                if not order.greater(sbt, sb):
                    direct = False
    assert direct == injective, "type-2 readings disagree"
    return injective


def _order_is_bridge_friendly(lat: SubsetLattice, order: GeneratorOrder) -> bool:
    """Early-abort variant used by exhaustive order searches."""
    lower = lat.lower_masks(order)
    rank = order.rank
    seen: dict = {}
    for s in range(1 << lat.ngens):
        bm = lat.bridge_mask[s]
        if not bm:
            continue
        sb = max(_bits(bm), key=lambda i: rank[i])
        # the smallest bridge dominates the least, so it decides the check
        if lower[sb] & lat.true_gap_mask(s, lower) != 0:
            continue
        diff = s ^ (1 << sb)
        if diff in seen:
            return False
        seen[diff] = s
    return True


def satisfies_sufficient_condition(ideal: MonomialIdeal, order: GeneratorOrder) -> bool:
    """Triple condition forcing bridge-friendliness: whenever m1 and m3
    share a variable missing from m2, and m2 and m3 share a variable
    missing from m1, then m3 > m1 or m3 > m2."""
    gens = ideal.generators
    masks = [m.mask for m in gens]
    n = len(gens)
    for a, b, c in itertools.permutations(range(n), 3):
        y_exists = masks[a] & masks[c] & ~masks[b]
        z_exists = masks[b] & masks[c] & ~masks[a]
        if y_exists and z_exists:
            if not (order.greater(c, a) or order.greater(c, b)):
                return False
    return True


def critical_sets(ideal: MonomialIdeal, order: GeneratorOrder,
                  cap: int = BRIDGE_FRIENDLY_CAP,
                  lattice: Optional[SubsetLattice] = None) -> list:
    """All subsets with no bridge and no true gap, the empty set included.

    These are the Barile-Macchia critical cells when the order is
    bridge-friendly; for other orders the family is still returned but
    carries no Betti meaning.
    """
    lat = lattice if lattice is not None else SubsetLattice(ideal, cap)
    lower = lat.lower_masks(order)
    out = []
    for s in range(1 << lat.ngens):
        if lat.bridge_mask[s] == 0 and lat.true_gap_mask(s, lower) == 0:
            out.append(_as_set(s))
    return out


def betti_from_critical(ideal: MonomialIdeal, order: GeneratorOrder,
                        cap: int = BRIDGE_FRIENDLY_CAP,
                        lattice: Optional[SubsetLattice] = None) -> BettiTable:
    """Quotient Betti table counting critical subsets by (size, lcm degree)."""
    lat = lattice if lattice is not None else SubsetLattice(ideal, cap)
    lower = lat.lower_masks(order)
    entries: dict = {}
    for s in range(1 << lat.ngens):
        if lat.bridge_mask[s] == 0 and lat.true_gap_mask(s, lower) == 0:
            key = (s.bit_count(), _lcm_degree(ideal, lat.lcms[s]))
            entries[key] = entries.get(key, 0) + 1
    return BettiTable("quotient", entries)


def find_bridge_friendly_order(ideal: MonomialIdeal,
                               symmetries: Optional[list] = None,
                               cap: int = ORDER_SEARCH_CAP) -> Optional[GeneratorOrder]:
    """First order, in permutation-lexicographic sequence, that is
    bridge-friendly; None when none exists.  ``symmetries`` (generator
    permutations, e.g. induced by graph automorphisms) restricts the scan
    to lexicographically minimal orbit representatives."""
    g = ideal.ngens
    if g > cap:
        raise TooLarge(f"{g} generators exceeds the order-search cap {cap}")
    lat = SubsetLattice(ideal)
    for perm in itertools.permutations(range(g)):
        if symmetries:
            if any(tuple(a[x] for x in perm) < perm for a in symmetries):
                continue
        order = GeneratorOrder(perm)
        if _order_is_bridge_friendly(lat, order):
            return order
    return None


def find_support_split(ideal: MonomialIdeal) -> Optional[Tuple[frozenset, MonomialIdeal]]:
    """A maximal generator subset A whose support is disjoint from the rest
    and whose members each own a private variable, together with the
    complementary ideal; None when only the empty A qualifies.

    A is a union of support-connected components.  When every component
    qualifies, the component containing the highest canonical generator
    index is left out so the complement stays nonzero.
    """
    g = ideal.ngens
    if g == 0:
        return None
    parent = list(range(g))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(g):
        for j in range(i + 1, g):
            if ideal.generators[i].mask & ideal.generators[j].mask:
                parent[find(i)] = find(j)
    components: dict = {}
    for i in range(g):
        components.setdefault(find(i), []).append(i)

    occurrences = [0] * ideal.numvars
    for m in ideal.generators:
        for v in m.support:
            occurrences[v] += 1

    def has_private(i):
        return any(occurrences[v] == 1 for v in ideal.generators[i].support)

    eligible = [sorted(c) for c in components.values() if all(map(has_private, c))]
    eligible.sort(key=lambda c: c[0])
    if not eligible:
        return None
    if sum(len(c) for c in eligible) == g:
        eligible.pop()
        if not eligible:
            return None
    chosen = frozenset(i for c in eligible for i in c)
    rest = tuple(m for i, m in enumerate(ideal.generators) if i not in chosen)
    return chosen, MonomialIdeal(ideal.numvars, rest)


__all__ = [
    "BettiTable",
    "shift_kind",
    "SubsetLattice",
    "subset_lcms",
    "bridges",
    "gaps",
    "true_gaps",
    "smallest_bridge",
    "is_potentially_type2",
    "type2_reading_disagreements",
    "is_bridge_friendly",
    "satisfies_sufficient_condition",
    "critical_sets",
    "betti_from_critical",
    "find_bridge_friendly_order",
    "find_support_split",
]
