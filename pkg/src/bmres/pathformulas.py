"""Closed-form and recursive graded Betti numbers for path-related ideals.

All formulas use the convention C(a, b) = 0 unless 0 <= b <= a, with
C(a, 0) = 1 for a >= 0.  Every function states its table kind explicitly:
values are for the IDEAL unless noted otherwise.
"""

from __future__ import annotations

from math import comb
from typing import Dict, List, Optional, Tuple

from .betti import BettiTable, shift_kind
from .errors import BadParams, NotAPartition
from .homology import betti_table_homology
from .ideals import MonomialIdeal


def binom(a: int, b: int) -> int:
    """Binomial with combinatorial boundary convention."""
    if a < 0 or b < 0 or b > a:
        return 0
    return comb(a, b)


def betti_J3_path(n: int, r: int, d: int) -> int:
    """Ideal Betti number of the consecutive-triple ideal of a path:
    C(n-3l-3, r-l) * C(n-2l-r-2, 2l-r+1) when d = r + 2l + 3, l >= 0."""
    if n < 3:
        raise BadParams("betti_J3_path needs n >= 3")
    if r < 0 or d < 0:
        return 0
    t = d - r - 3
    if t < 0 or t % 2:
        return 0
    l = t // 2
    return binom(n - 3 * l - 3, r - l) * binom(n - 2 * l - r - 2, 2 * l - r + 1)


def betti_I_n(n: int, r: int, d: int) -> int:
    """Ideal Betti number of the path-splitting remainder ideal I_n.

    Two parity branches, one per congruence class of d - r:
      d = r + 2l + 3:  C(n-2l-r-3, 2l-r+1) * C(n-3l-3, r-l)
      d = r + 2l + 4:  C(n-2l-r-4, 2l-r+2) * C(n-3l-5, r-l-1)
    with integer l >= -1; at most one branch fires for a given (r, d).
    """
    if n < 1:
        raise BadParams("betti_I_n needs n >= 1")
    if r < 0 or d < 0:
        return 0
    t3, t4 = d - r - 3, d - r - 4
    assert t3 % 2 or t4 % 2, "branches cannot both apply"
    if t3 % 2 == 0:
        l = t3 // 2
        if l < -1:
            return 0
        return binom(n - 2 * l - r - 3, 2 * l - r + 1) * binom(n - 3 * l - 3, r - l)
    l = t4 // 2
    if l < -1:
        return 0
    return binom(n - 2 * l - r - 4, 2 * l - r + 2) * binom(n - 3 * l - 5, r - l - 1)


def _betti_principal(r: int, d: int, degree: int) -> int:
    return 1 if r == 0 and d == degree else 0


def betti_NI_path_recursive(n: int, r: int, d: int) -> int:
    """Ideal Betti number of the closed neighborhood ideal of a path,
    as the splitting sum over quadratic edge ideals and the I_m family:

      sum_{i=0}^{k-1} [ beta_{r-i,d-2i}(<x_{n-2i-1}x_{n-2i}>)
                        + beta_{r-i,d-2i}(I_{n-2i-1}) ]
      + (n odd) * beta_{r-k,d-2k}(<x_1>),         k = floor(n/2).
    """
    if n < 3:
        raise BadParams("betti_NI_path_recursive needs n >= 3")
    if r < 0 or d < 0:
        return 0
    k = n // 2
    total = 0
    for i in range(k):
        total += _betti_principal(r - i, d - 2 * i, 2)
        total += betti_I_n(n - 2 * i - 1, r - i, d - 2 * i)
    if n % 2:
        total += _betti_principal(r - k, d - 2 * k, 1)
    return total


def betti_NI_path_closed(n: int, r: int, d: int) -> int:
    """Closed form for the recursive splitting sum.

    The Kronecker prefix counts the quadratic-ideal and odd-parity
    contributions once per cell.  The remaining I_m contributions share a
    single binomial prefactor per parity branch; pairing consecutive
    summands telescopes them into the bracket below, truncated at
    I = min(k-1, r) because deeper summands have negative homological
    index and contribute nothing.
    """
    if n < 3:
        raise BadParams("betti_NI_path_closed needs n >= 3")
    if r < 0 or d < 0:
        return 0
    k = n // 2
    total = 0
    if d == 2 * r + 2 and r <= k - 1:
        total += 1
    if n % 2 and r == k and d == 2 * r + 1:
        total += 1
    cut = min(k - 1, r)
    t3, t4 = d - r - 3, d - r - 4
    if t3 % 2 == 0:
        l = t3 // 2
        pref = binom(n - 2 * l - r - 4, 2 * l - r + 1)
        if pref:
            if cut % 2 == 0:
                pairs, tail = cut // 2, 0
            else:
                pairs = (cut - 1) // 2
                tail = binom(n - 3 * l - 5 - pairs, r - l - 1 - pairs)
            paired = binom(n - 3 * l - 4, r - l - 1) - binom(
                n - 3 * l - 4 - pairs, r - l - 1 - pairs
            )
            total += pref * (binom(n - 3 * l - 4, r - l) + 2 * paired + tail)
    elif t4 % 2 == 0:
        l = t4 // 2
        pref = binom(n - 2 * l - r - 5, 2 * l - r + 2)
        if pref:
            if cut % 2 == 0:
                pairs = cut // 2
                tail = binom(n - 3 * l - 6 - pairs, r - l - 1 - pairs)
            else:
                pairs, tail = (cut + 1) // 2, 0
            paired = binom(n - 3 * l - 5, r - l - 1) - binom(
                n - 3 * l - 5 - pairs, r - l - 1 - pairs
            )
            total += pref * (2 * paired + tail)
    return total


def betti_NI_path_closed_verbatim(n: int, r: int, d: int) -> int:
    """The closed form exactly as displayed in its source, kept as a
    transcription diagnostic.  Known to disagree with the recursion on
    cells with r < k - 1; see closed_form_discrepancies."""
    if n < 3:
        raise BadParams("needs n >= 3")
    if r < 0 or d < 0:
        return 0
    k = n // 2
    kk = k // 2
    total = 0
    if d == 2 * r + 2 and r <= k - 1:
        total += 1
    if n % 2 and r == k and d == 2 * r + 1:
        total += 1
    t3, t4 = d - r - 3, d - r - 4
    if t3 % 2 == 0 and t3 // 2 >= -1:
        l = t3 // 2
        bracket = (
            binom(n - 3 * l - 4, r - l)
            + 2 * (binom(n - 3 * l - 5, r - l - 1) - binom(n - 3 * l - 4 - kk, r - l - 1 - kk))
            - (1 if k % 2 == 0 else 0) * binom(n - 3 * l - 4 - kk, r - l - kk)
        )
        total += binom(n - 2 * l - r - 4, 2 * l - r + 1) * bracket
    elif t4 % 2 == 0 and t4 // 2 >= -1:
        l = t4 // 2
        bracket = 2 * (
            binom(n - 3 * l - 5, r - l - 1) - binom(n - 3 * l - 5 - kk, r - l - 1 - kk)
        ) + (1 if k % 2 == 1 else 0) * binom(n - 3 * l - 6 - kk, r - l - 1 - kk)
        total += binom(n - 2 * l - r - 5, 2 * l - r + 2) * bracket
    return total


def closed_form_discrepancies(n: int) -> List[Tuple[int, int, int, int]]:
    """Cells (r, d, verbatim value, recursive value) where the displayed
    closed form disagrees with the recursion it was derived from."""
    out = []
    for r in range(n + 1):
        for d in range(2 * n + 2):
            a = betti_NI_path_closed_verbatim(n, r, d)
            b = betti_NI_path_recursive(n, r, d)
            if a != b:
                out.append((r, d, a, b))
    return out


def pdim_path(n: int, kind: str) -> int:
    """floor((n+1)/2) for the quotient, one less for the ideal."""
    if n < 1:
        raise BadParams("pdim_path needs n >= 1")
    if kind == "quotient":
        return (n + 1) // 2
    if kind == "ideal":
        return (n - 1) // 2
    raise BadParams(f"unknown kind {kind!r}")


def reg_path(n: int, kind: str) -> int:
    """floor(n/2) + 1 for the ideal, floor(n/2) for the quotient."""
    if n < 2:
        raise BadParams("reg_path needs n >= 2")
    if kind == "ideal":
        return n // 2 + 1
    if kind == "quotient":
        return n // 2
    raise BadParams(f"unknown kind {kind!r}")


def path_table(n: int, kind: str = "quotient") -> BettiTable:
    """Full Betti table of the closed neighborhood ideal of the n-path,
    evaluated from the closed formula."""
    entries: Dict[Tuple[int, int], int] = {}
    for r in range(pdim_path(n, "ideal") + 1):
        for d in range(2 * n + 2):
            v = betti_NI_path_closed(n, r, d)
            if v:
                entries[(r, d)] = v
    return shift_kind(BettiTable("ideal", entries), kind)


def verify_betti_splitting(ideal: MonomialIdeal, j: MonomialIdeal, k: MonomialIdeal,
                           oracle_prime: int = 32003) -> bool:
    """Check beta_{r,d}(I) = beta_{r,d}(J) + beta_{r,d}(K) + beta_{r-1,d}(J cap K)
    entrywise, all four tables computed by the homology oracle."""
    from .ideals import intersect

    if not (ideal.numvars == j.numvars == k.numvars):
        raise NotAPartition("variable counts differ")
    if set(j.generators) & set(k.generators):
        raise NotAPartition("generator sets overlap")
    if set(j.generators) | set(k.generators) != set(ideal.generators):
        raise NotAPartition("generators of J and K do not partition G(I)")
    t_i = shift_kind(betti_table_homology(ideal, oracle_prime), "ideal")
    t_j = shift_kind(betti_table_homology(j, oracle_prime), "ideal")
    t_k = shift_kind(betti_table_homology(k, oracle_prime), "ideal")
    t_jk = shift_kind(betti_table_homology(intersect(j, k), oracle_prime), "ideal")
    cells = set(t_i.entries) | set(t_j.entries) | set(t_k.entries)
    cells |= {(r + 1, d) for r, d in t_jk.entries}
    return all(
        t_i.entry(r, d) == t_j.entry(r, d) + t_k.entry(r, d) + t_jk.entry(r - 1, d)
        for r, d in cells
    )
