"""Monomials, monomial ideals with minimal generators, and generator orders.

Exponent vectors are general naturals; everything built from graphs is
squarefree and additionally carries a support bit-mask used as a fast path
by the subset-lattice code.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .errors import BadParams, IdealMismatch, MixedArity, NotANeighborhood, ParseError
from .graphs import Graph, RootedTree, cycle_graph, path_graph


@dataclass(frozen=True, order=True)
class Monomial:
    exponents: tuple

    @property
    def numvars(self) -> int:
        return len(self.exponents)

    @cached_property
    def degree(self) -> int:
        return sum(self.exponents)

    @cached_property
    def support(self) -> tuple:
        return tuple(i for i, e in enumerate(self.exponents) if e > 0)

    @cached_property
    def mask(self) -> int:
        """Support bit-mask; equals the monomial itself when squarefree."""
        m = 0
        for i, e in enumerate(self.exponents):
            if e > 0:
                m |= 1 << i
        return m

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    @property
    def is_one(self) -> bool:
        return self.degree == 0

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def format(self, names: Optional[Sequence[str]] = None) -> str:
        if self.is_one:
            return "1"
        parts = []
        for i, e in enumerate(self.exponents):
            if e == 0:
                continue
            name = names[i] if names is not None else f"x{i + 1}"
            parts.append(name if e == 1 else f"{name}^{e}")
        return "".join(parts)

    @staticmethod
    def one(numvars: int) -> "Monomial":
        return Monomial((0,) * numvars)

    @staticmethod
    def from_support(numvars: int, variables: Iterable[int]) -> "Monomial":
        exps = [0] * numvars
        for i in variables:
            exps[i] = 1
        return Monomial(tuple(exps))


def lcm_monomials(a: Monomial, b: Monomial) -> Monomial:
    if a.numvars != b.numvars:
        raise MixedArity("lcm of monomials over different variable counts")
    return Monomial(tuple(max(x, y) for x, y in zip(a.exponents, b.exponents)))


def quotient_monomial(a: Monomial, b: Monomial) -> Monomial:
    """lcm(a, b) / b, the colon generator of <a> : b."""
    return Monomial(tuple(max(x - y, 0) for x, y in zip(a.exponents, b.exponents)))


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal stored by its minimal generators in canonical order
    (ascending degree, then exponent vector).  The zero ideal has no
    generators.  ``witnesses`` optionally records, per generator, the graph
    vertices whose closed neighborhood produced it."""

    numvars: int
    generators: tuple
    witnesses: Optional[tuple] = field(default=None, compare=False)

    @property
    def ngens(self) -> int:
        return len(self.generators)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @cached_property
    def is_squarefree(self) -> bool:
        return all(m.is_squarefree for m in self.generators)

    def lcm_of(self, indices: Iterable[int]) -> Monomial:
        out = Monomial.one(self.numvars)
        for i in indices:
            out = lcm_monomials(out, self.generators[i])
        return out

    def format(self, names: Optional[Sequence[str]] = None) -> str:
        if self.is_zero:
            return "<0>"
        return "<" + ", ".join(m.format(names) for m in self.generators) + ">"


def minimalize(monomials: Iterable[Monomial], numvars: Optional[int] = None) -> MonomialIdeal:
    """Deduplicate, drop non-minimal monomials, and sort canonically."""
    monos = [m for m in monomials if not m.is_one]
    if monos:
        arity = monos[0].numvars
        if any(m.numvars != arity for m in monos):
            raise MixedArity("mixed variable counts")
        if numvars is None:
            numvars = arity
        elif numvars != arity:
            raise MixedArity(f"monomials over {arity} vars, ideal over {numvars}")
    elif numvars is None:
        raise MixedArity("cannot infer variable count of the zero ideal")
    distinct = sorted(set(monos), key=lambda m: (m.degree, m.exponents))
    kept = []
    for m in distinct:
        if not any(k.divides(m) for k in kept):
            kept.append(m)
    return MonomialIdeal(numvars, tuple(kept))


def closed_neighborhood_ideal(g: Graph) -> MonomialIdeal:
    """The squarefree ideal generated by the closed-neighborhood products,
    reduced to its minimal generators, with witness vertices recorded."""
    monos = {v: Monomial.from_support(g.n, g.closed_neighborhood(v)) for v in range(g.n)}
    ideal = minimalize(monos.values(), g.n)
    witnesses = tuple(
        frozenset(v for v in range(g.n) if monos[v] == gen) for gen in ideal.generators
    )
    return MonomialIdeal(ideal.numvars, ideal.generators, witnesses)


def three_path_ideal(kind: str, n: int) -> MonomialIdeal:
    """Ideal of consecutive vertex triples of a path or cycle."""
    if n < 3:
        raise BadParams("three_path_ideal needs n >= 3")
    if kind == "path":
        triples = [(i, i + 1, i + 2) for i in range(n - 2)]
    elif kind == "cycle":
        triples = [(i, (i + 1) % n, (i + 2) % n) for i in range(n)]
    else:
        raise BadParams(f"unknown kind {kind!r}")
    return minimalize((Monomial.from_support(n, t) for t in triples), n)


def ideal_I_n(n: int) -> MonomialIdeal:
    """The path-splitting remainder ideal: zero for n=1, <x1x2> for n=2,3,
    and <x1x2, x2x3x4, ..., x_{n-2}x_{n-1}x_n> for n >= 4."""
    if n < 1:
        raise BadParams("ideal_I_n needs n >= 1")
    if n == 1:
        return MonomialIdeal(1, ())
    gens = [Monomial.from_support(n, (0, 1))]
    for i in range(1, n - 2):
        gens.append(Monomial.from_support(n, (i, i + 1, i + 2)))
    return minimalize(gens, n)


def intersect(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    if a.numvars != b.numvars:
        raise MixedArity("intersecting ideals over different variable counts")
    if a.is_zero or b.is_zero:
        return MonomialIdeal(a.numvars, ())
    return minimalize(
        (lcm_monomials(x, y) for x in a.generators for y in b.generators), a.numvars
    )


def embed(ideal: MonomialIdeal, numvars: int) -> MonomialIdeal:
    """The same generators viewed in a larger polynomial ring."""
    if numvars < ideal.numvars:
        raise BadParams("cannot embed into fewer variables")
    pad = (0,) * (numvars - ideal.numvars)
    gens = tuple(Monomial(m.exponents + pad) for m in ideal.generators)
    return MonomialIdeal(numvars, gens)


# ----------------------------------------------------------------------------
# generator orders
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class GeneratorOrder:
    """Total order on generator indices; perm[0] is the largest under >."""

    perm: tuple

    def __post_init__(self):
        if sorted(self.perm) != list(range(len(self.perm))):
            raise BadParams("order is not a permutation of the generator indices")

    @cached_property
    def rank(self) -> tuple:
        r = [0] * len(self.perm)
        for pos, idx in enumerate(self.perm):
            r[idx] = pos
        return tuple(r)

    def greater(self, i: int, j: int) -> bool:
        """True when generator i > generator j."""
        return self.rank[i] < self.rank[j]

    @staticmethod
    def identity(ngens: int) -> "GeneratorOrder":
        return GeneratorOrder(tuple(range(ngens)))


def tree_lex_order(t: RootedTree, ideal: MonomialIdeal) -> GeneratorOrder:
    """The level-major lexicographic order on closed-neighborhood generators.

    Each support is read from its deepest vertex up; at the first
    difference the generator whose vertex is higher in the rooted vertex
    order is the larger one.
    """
    g = t.base
    if ideal.numvars != g.n:
        raise IdealMismatch("ideal variable count differs from the tree")
    pos = t.position
    keys = []
    for m in ideal.generators:
        supp = set(m.support)
        if not any(g.closed_neighborhood(v) == supp for v in supp):
            raise IdealMismatch(f"{m.format()} is not a closed neighborhood")
        keys.append(tuple(sorted((pos[v] for v in supp), reverse=True)))
    order = sorted(range(ideal.ngens), key=lambda i: keys[i])
    for a, b in zip(order, order[1:]):
        # a shared prefix of length min(r, s) would force divisibility
        assert keys[a] != keys[b][: len(keys[a])], "non-total tree-lex keys"
    return GeneratorOrder(tuple(order))


def generator_anchor(t: RootedTree, m: Monomial) -> tuple:
    """The witness vertex v with N[v] = Supp(m) (smallest if several) and
    the unique support vertex w of minimum level; w = v iff v is the root."""
    g = t.base
    supp = set(m.support)
    candidates = [v for v in supp if g.closed_neighborhood(v) == supp]
    if not candidates:
        raise NotANeighborhood(f"{m.format()} is not a closed neighborhood")
    v = min(candidates)
    best = min(t.level[u] for u in supp)
    tops = [u for u in supp if t.level[u] == best]
    assert len(tops) == 1, "minimum level attained more than once"
    return v, tops[0]


def generator_symmetries(g: Graph, ideal: MonomialIdeal, autos: Iterable[tuple]) -> list:
    """Generator permutations induced by graph automorphisms."""
    index_of = {m.exponents: i for i, m in enumerate(ideal.generators)}
    perms = set()
    for a in autos:
        images = []
        for m in ideal.generators:
            target = Monomial.from_support(ideal.numvars, (a[v] for v in m.support))
            images.append(index_of[target.exponents])
        perms.add(tuple(images))
    return sorted(perms)


# ----------------------------------------------------------------------------
# serialization
# ----------------------------------------------------------------------------

def ideal_to_json_obj(ideal: MonomialIdeal) -> dict:
    return {
        "numvars": ideal.numvars,
        "generators": [list(m.exponents) for m in ideal.generators],
    }


def ideal_from_json_obj(obj: dict) -> MonomialIdeal:
    try:
        numvars = int(obj["numvars"])
        gens = [Monomial(tuple(int(e) for e in row)) for row in obj["generators"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed ideal object: {exc}") from None
    if any(m.numvars != numvars for m in gens):
        raise ParseError("generator arity differs from numvars")
    if any(e < 0 for m in gens for e in m.exponents):
        raise ParseError("negative exponent")
    return minimalize(gens, numvars)


def order_to_json_obj(order: GeneratorOrder) -> dict:
    return {"order": list(order.perm)}


def order_from_json_obj(obj: dict, ngens: int) -> GeneratorOrder:
    try:
        perm = tuple(int(i) for i in obj["order"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed order object: {exc}") from None
    if sorted(perm) != list(range(ngens)):
        raise ParseError("order is not a permutation of the generator indices")
    return GeneratorOrder(perm)


def load_ideal_file(path: str) -> MonomialIdeal:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON in {path}: {exc}") from None
    return ideal_from_json_obj(obj)
