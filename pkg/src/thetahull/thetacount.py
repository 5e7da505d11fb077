"""Counting real and totally real theta characteristics over F2.

A real curve of genus g with s real components is encoded by its discrete
topology (g, s, dividing-or-not).  The action of conjugation on 2-torsion
is captured by a g x g matrix H over F2 of rank g+1-s; real theta
characteristics are the pairs (u, v) in F2^g x F2^g with Hv = diag(H),
odd or even according to the parity of u.v.  All closed-form counts here
are paired with brute-force enumerations over F2^(2g) used as oracles.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

MAX_GENUS_CLOSED_FORM = 64
MAX_GENUS_BRUTE_FORCE = 12
MAX_GENUS_HYPERELLIPTIC = 16

_ENUMERATION_BUDGET = 5_000_000


class TopologyError(ValueError):
    """Inconsistent (g, s, dividing) combination."""


@dataclass(frozen=True)
class CurveTopology:
    """Genus, number of real components, and dividing flag.

    Valid combinations: 1 <= s <= g+1; a dividing curve needs g+1-s even
    (the conjugation matrix is built from 2x2 blocks); a curve with the
    maximal s = g+1 components is always dividing.
    """

    g: int
    s: int
    dividing: bool

    def __post_init__(self):
        if self.g < 1:
            raise TopologyError(f"genus must be >= 1, got {self.g}")
        if self.s < 1:
            raise TopologyError("the real locus is assumed nonempty (s >= 1)")
        if self.s > self.g + 1:
            raise TopologyError(f"s exceeds g+1 ({self.s} > {self.g + 1})")
        if self.dividing and (self.g + 1 - self.s) % 2 != 0:
            raise TopologyError(
                f"dividing type forces g+1-s even, got r={self.g + 1 - self.s}")
        if self.s == self.g + 1 and not self.dividing:
            raise TopologyError("a curve with s = g+1 components is dividing")

    @property
    def a(self) -> int:
        """1 if the complement of the real locus is connected, else 0."""
        return 0 if self.dividing else 1

    @property
    def r(self) -> int:
        """Rank of the conjugation matrix H."""
        return self.g + 1 - self.s


def valid_topologies(g: int) -> list[CurveTopology]:
    """All valid (s, dividing) combinations for genus g, sorted by (s, a)."""
    out = []
    for s in range(1, g + 2):
        for dividing in (True, False):
            try:
                out.append(CurveTopology(g, s, dividing))
            except TopologyError:
                continue
    out.sort(key=lambda t: (t.s, t.a))
    return out


@dataclass(frozen=True)
class HMatrix:
    """g x g matrix over F2; each row stored as a bitmask."""

    g: int
    rows: tuple[int, ...]

    @property
    def diag(self) -> int:
        d = 0
        for i, row in enumerate(self.rows):
            if (row >> i) & 1:
                d |= 1 << i
        return d

    def mul_vec(self, v: int) -> int:
        out = 0
        for i, row in enumerate(self.rows):
            if (row & v).bit_count() & 1:
                out |= 1 << i
        return out

    @property
    def rank(self) -> int:
        rows = list(self.rows)
        rk = 0
        for bit in range(self.g):
            pivot = next((i for i in range(rk, len(rows)) if (rows[i] >> bit) & 1), None)
            if pivot is None:
                continue
            rows[rk], rows[pivot] = rows[pivot], rows[rk]
            for i in range(len(rows)):
                if i != rk and (rows[i] >> bit) & 1:
                    rows[i] ^= rows[rk]
            rk += 1
        return rk


def build_H(t: CurveTopology) -> HMatrix:
    """Conjugation matrix for a topology: H0-blocks when dividing, an
    identity block otherwise, padded by zeros to rank g+1-s."""
    rows = [0] * t.g
    if t.dividing:
        for k in range(t.r // 2):
            rows[2 * k] = 1 << (2 * k + 1)
            rows[2 * k + 1] = 1 << (2 * k)
    else:
        for i in range(t.r):
            rows[i] = 1 << i
    return HMatrix(t.g, tuple(rows))


@dataclass(frozen=True)
class ThetaChar:
    """A theta characteristic as a pair of F2^g bitmasks."""

    g: int
    u: int
    v: int

    @property
    def parity(self) -> int:
        return (self.u & self.v).bit_count() & 1

    def is_real(self, H: HMatrix) -> bool:
        return H.mul_vec(self.v) == H.diag


# ---------------------------------------------------------------------------
# closed-form counts and their brute-force twins
# ---------------------------------------------------------------------------

def count_real_theta(t: CurveTopology) -> tuple[int, int]:
    """(odd, even) counts of real theta characteristics.

    odd = 2^(g-1) (2^(s-1) - 1 + a), even = 2^(g-1) (2^(s-1) + 1 - a).
    """
    if t.g > MAX_GENUS_CLOSED_FORM:
        raise TopologyError(f"genus capped at {MAX_GENUS_CLOSED_FORM}")
    half = 1 << (t.g - 1)
    block = 1 << (t.s - 1)
    return half * (block - 1 + t.a), half * (block + 1 - t.a)


def brute_force_real_theta(t: CurveTopology) -> tuple[int, int]:
    """Enumerate all of F2^(2g) and count fixed characteristics by parity."""
    if t.g > MAX_GENUS_BRUTE_FORCE:
        raise TopologyError(f"brute force capped at genus {MAX_GENUS_BRUTE_FORCE}")
    H = build_H(t)
    diag = H.diag
    odd = even = 0
    for v in range(1 << t.g):
        if H.mul_vec(v) != diag:
            continue
        for u in range(1 << t.g):
            if (u & v).bit_count() & 1:
                odd += 1
            else:
                even += 1
    return odd, even


def count_odd_with_signs(t: CurveTopology, w: tuple[int, ...]) -> int:
    """Number of real odd theta characteristics whose definite differential
    carries the sign pattern encoded by w (the fixed last s-1 entries of u).

    Equals 2^(g-1), except that a dividing curve admits none for the
    all-zero pattern.
    """
    if len(w) != t.s - 1:
        raise TopologyError(f"sign vector must have length s-1 = {t.s - 1}")
    if any(x not in (0, 1) for x in w):
        raise TopologyError("sign vector entries must be 0 or 1")
    if t.dividing and not any(w):
        return 0
    return 1 << (t.g - 1)


def brute_force_odd_with_signs(t: CurveTopology, w: tuple[int, ...]) -> int:
    """Enumeration twin of count_odd_with_signs."""
    if len(w) != t.s - 1:
        raise TopologyError(f"sign vector must have length s-1 = {t.s - 1}")
    if t.g > MAX_GENUS_BRUTE_FORCE:
        raise TopologyError(f"brute force capped at genus {MAX_GENUS_BRUTE_FORCE}")
    H = build_H(t)
    diag = H.diag
    wmask = 0
    for i, x in enumerate(w):
        if x:
            wmask |= 1 << (t.r + i)
    count = 0
    for v in range(1 << t.g):
        if H.mul_vec(v) != diag:
            continue
        for ufree in range(1 << t.r):
            u = ufree | wmask
            if (u & v).bit_count() & 1:
                count += 1
    return count


def count_all_theta(g: int) -> tuple[int, int]:
    """(odd, even) over all of F2^(2g), ignoring reality: the classical
    2^(g-1)(2^g -+ 1) split."""
    return (1 << (g - 1)) * ((1 << g) - 1), (1 << (g - 1)) * ((1 << g) + 1)


def brute_force_all_theta(g: int) -> tuple[int, int]:
    if g > MAX_GENUS_BRUTE_FORCE:
        raise TopologyError(f"brute force capped at genus {MAX_GENUS_BRUTE_FORCE}")
    odd = even = 0
    for v in range(1 << g):
        for u in range(1 << g):
            if (u & v).bit_count() & 1:
                odd += 1
            else:
                even += 1
    return odd, even


# ---------------------------------------------------------------------------
# face-count bounds for the convex hull of a canonical curve
# ---------------------------------------------------------------------------

def face_upper_bound(g: int) -> int:
    """Maximal number of (g-2)-faces of the hull: 2^(g-1)."""
    if g < 3:
        raise TopologyError("canonical embedding needs g >= 3")
    return 1 << (g - 1)


def face_lower_bound(t: CurveTopology, k: int | None = None) -> int:
    """Guaranteed number of (g-2)-faces for a topology, 0 when no bound applies.

    s = g-1 non-dividing gives 2; s = g gives g; an M-curve (s = g+1) gives
    k(g+1-k) when the orientation count k is supplied, else the generic g.
    """
    if k is not None:
        if t.s != t.g + 1:
            raise TopologyError("orientation count k only applies to M-curves")
        if not 1 <= k <= t.g:
            raise TopologyError(f"k must be in [1, g], got {k}")
    if t.s == t.g + 1:
        return k * (t.g + 1 - k) if k is not None else t.g
    if t.s == t.g:
        return t.g
    if t.s == t.g - 1 and not t.dividing:
        return 2
    return 0


def totally_real_lower_bound(t: CurveTopology) -> int:
    """binom(s, g-1) 2^(g-1) totally real odd theta characteristics, for
    curves that are non-dividing or M-curves; no claim (0) otherwise."""
    if not t.dividing or t.s == t.g + 1:
        return math.comb(t.s, t.g - 1) * (1 << (t.g - 1))
    return 0


@dataclass(frozen=True)
class BoundsRow:
    s: int
    a: int
    lower: int
    upper: int


def bounds_table(g: int) -> list[BoundsRow]:
    """Lower/upper bounds on totally real odd theta characteristics for
    every valid (s, a) at genus g."""
    if g < 3:
        raise TopologyError("bounds table needs g >= 3")
    rows = []
    for t in valid_topologies(g):
        odd, _ = count_real_theta(t)
        rows.append(BoundsRow(t.s, t.a, totally_real_lower_bound(t), odd))
    return rows


# ---------------------------------------------------------------------------
# hyperelliptic curves
# ---------------------------------------------------------------------------

def hyperelliptic_totally_real_odd(g: int, r: int) -> int:
    """Closed form: sum over l of binom(2r, g-1-4l)."""
    if g < 2:
        raise TopologyError("hyperelliptic count needs g >= 2")
    if not 0 <= r <= g + 1:
        raise TopologyError(f"r must be in [0, g+1], got {r}")
    return sum(math.comb(2 * r, g - 1 - 4 * l) for l in range((g - 1) // 4 + 1))


def _count_subsets(n: int, size: int) -> int:
    """Number of size-`size` subsets of an n-set, by actual enumeration when
    affordable and by additive Pascal recursion beyond the budget."""
    if size < 0 or size > n:
        return 0
    if math.comb(n, size) <= _ENUMERATION_BUDGET:
        return sum(1 for _ in itertools.combinations(range(n), size))
    row = [1]
    for _ in range(n):
        row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
    return row[size]


def hyperelliptic_oracle(g: int, r: int) -> int:
    """Divisor-level enumeration: odd multiples k of the degree-2 pencil with
    a branch-point remainder of size g+1-2k, summed over all odd k."""
    if g > MAX_GENUS_HYPERELLIPTIC:
        raise TopologyError(f"oracle capped at genus {MAX_GENUS_HYPERELLIPTIC}")
    if not 0 <= r <= g + 1:
        raise TopologyError(f"r must be in [0, g+1], got {r}")
    total = 0
    for k in range(1, (g + 1) // 2 + 1, 2):
        e = g + 1 - 2 * k
        total += _count_subsets(2 * r, e)
    return total
