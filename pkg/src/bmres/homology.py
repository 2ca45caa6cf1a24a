"""Independent Betti-number oracle: homology of the multigraded strands of
the reduced Taylor complex over a prime field.

Generator subsets sharing one lcm span a strand; within a strand the
boundary sends a subset to the alternating sum of the one-element
deletions that keep the lcm.  The dimension of the degree-i homology of
the strand at multidegree a is beta_{i, a}(R/I), and summing strands by
total degree gives the usual graded table.
"""

from __future__ import annotations

from typing import Dict, Iterator, List, Tuple

from .betti import BettiTable, shift_kind
from .errors import MixedDegrees, NotPrime, TooLarge
from .ideals import MonomialIdeal
from .bm import subset_lcms, _bits, _lcm_degree

ORACLE_CAP = 22
DEFAULT_PRIME = 32003


def _check_prime(p: int) -> None:
    if p < 2:
        raise NotPrime(f"{p} is not prime")
    d = 2
    while d * d <= p:
        if p % d == 0:
            raise NotPrime(f"{p} is not prime")
        d += 1


def rank_mod_p(rows: List[List[int]], p: int) -> int:
    """Rank of an integer matrix over F_p by Gaussian elimination."""
    rows = [[x % p for x in row] for row in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    col = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        prow = rows[rank]
        for i in range(rank + 1, len(rows)):
            factor = rows[i][col]
            if factor:
                scale = factor * inv % p
                row = rows[i]
                for j in range(col, ncols):
                    row[j] = (row[j] - scale * prow[j]) % p
        rank += 1
        if rank == len(rows):
            break
    return rank


def strand_boundaries(ideal: MonomialIdeal, cap: int = ORACLE_CAP) -> Iterator[tuple]:
    """Per multidegree: (total degree, {size: [subset masks]}, {size: matrix}).

    The matrix for size i has one row per size-(i-1) basis subset and one
    column per size-i basis subset, with entries in {-1, 0, 1}; the sign of
    dropping generator m from sigma is (-1)^(position of m in sigma).
    """
    g = ideal.ngens
    if g > cap:
        raise TooLarge(f"{g} generators exceeds the oracle cap {cap}")
    lcms = subset_lcms(ideal)
    strands: Dict[object, List[int]] = {}
    for s in range(1 << g):
        strands.setdefault(lcms[s], []).append(s)
    for rep in sorted(strands, key=lambda r: (_lcm_degree(ideal, r), str(r))):
        masks = strands[rep]
        by_size: Dict[int, List[int]] = {}
        for s in masks:
            by_size.setdefault(s.bit_count(), []).append(s)
        for size in by_size:
            by_size[size].sort()
        index = {
            size: {s: c for c, s in enumerate(group)} for size, group in by_size.items()
        }
        matrices: Dict[int, List[List[int]]] = {}
        for size, group in by_size.items():
            if size - 1 not in by_size:
                continue
            prev = index[size - 1]
            mat = [[0] * len(group) for _ in prev]
            for c, s in enumerate(group):
                for i in _bits(s):
                    t = s ^ (1 << i)
                    row = prev.get(t)
                    if row is None:
                        continue
                    sign = -1 if (s & ((1 << i) - 1)).bit_count() % 2 else 1
                    mat[row][c] = sign
            matrices[size] = mat
        yield _lcm_degree(ideal, rep), by_size, matrices


def betti_table_homology(ideal: MonomialIdeal, p: int = DEFAULT_PRIME,
                         cap: int = ORACLE_CAP) -> BettiTable:
    """Quotient Betti table from strand homology over F_p."""
    _check_prime(p)
    entries: Dict[Tuple[int, int], int] = {}
    for degree, by_size, matrices in strand_boundaries(ideal, cap):
        ranks = {size: rank_mod_p(mat, p) for size, mat in matrices.items()}
        for size, group in by_size.items():
            h = len(group) - ranks.get(size, 0) - ranks.get(size + 1, 0)
            if h:
                key = (size, degree)
                entries[key] = entries.get(key, 0) + h
    return BettiTable("quotient", entries)


def has_linear_resolution(ideal: MonomialIdeal, p: int = DEFAULT_PRIME,
                          strict: bool = False) -> bool:
    """True when all ideal-kind Betti entries sit in degrees j = i + t for
    the common generator degree t.

    An ideal generated in mixed degrees never has a linear resolution;
    that case returns False, or raises MixedDegrees under ``strict``.
    """
    if ideal.is_zero:
        return True
    degrees = {m.degree for m in ideal.generators}
    if len(degrees) > 1:
        if strict:
            raise MixedDegrees(f"generator degrees {sorted(degrees)} are mixed")
        return False
    t = degrees.pop()
    table = shift_kind(betti_table_homology(ideal, p), "ideal")
    return all(d == r + t for r, d in table.entries)
