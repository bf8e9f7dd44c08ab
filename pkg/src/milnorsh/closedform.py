"""Closed-form symplectic cohomology ranks and bigraded profiles.

Ranks are computed per level k <= 0; cohomological degrees 2k and 2k+1 carry
identical bidegree multisets.  Above degree 1 the only nonzero group sits in
degree 3, where the rank equals the Milnor number concentrated at bidegree -1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .polyspec import CHAIN, FERMAT, LOOP, PolySpec, milnor_number


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _solutions(lo: int, hi: int, coef: int) -> list[int]:
    """Integers m with lo <= coef*m <= hi, for coef > 0."""
    return list(range(_ceil_div(lo, coef), hi // coef + 1))


@dataclass(frozen=True)
class ChainSets:
    """Index sets contributing to the chain rank at one level k."""

    w: tuple[int, ...]
    x: tuple[int, ...]
    y: tuple[int, ...]
    z: tuple[tuple[int, int], ...]  # pairs (i, m3)
    eta: int

    def total(self) -> int:
        return len(self.w) + len(self.x) + self.eta * len(self.y) + len(self.z)


@dataclass(frozen=True)
class LoopSets:
    w: tuple[int, ...]
    x: tuple[int, ...]
    y: tuple[int, ...]
    z: tuple[tuple[int, int], ...]  # pairs (j, m3)
    eta: int

    def total(self) -> int:
        return len(self.w) + len(self.x) + self.eta * len(self.y) + len(self.z)


@dataclass(frozen=True)
class FermatSets:
    grid: tuple[tuple[int, int, int, int], ...]  # (i, j, m3, m4)
    special: tuple[tuple[int, int], ...]  # (m3, m4) with i = j = -1
    special_mult: int

    def total(self) -> int:
        return len(self.grid) + self.special_mult * len(self.special)


def contribution_sets(spec: PolySpec, k: int):
    """Enumerate the generating index sets at level k <= 0."""
    if k > 0:
        raise ValueError("contribution sets are defined for k <= 0 only")
    p, q = spec.p, spec.q
    if spec.kind == CHAIN:
        a_, b_ = p + q - 1, p - 1
        w = tuple(m for m in _solutions(-(q - 2 + b_ * k), -(1 + b_ * k), a_) if m <= -k)
        x = tuple(m for m in _solutions(-b_ * k, 2 * (p - 1) - b_ * k, a_) if m >= 0)
        y_target = b_ * (1 - k)
        y = (y_target // a_,) if y_target % a_ == 0 and y_target >= 0 else ()
        z = tuple(
            (i, m)
            for i in range(1, q - 1)
            for m in _solutions(1 - i - b_ * k, p - 2 - i - b_ * k, a_)
        )
        return ChainSets(w, x, y, z, math.gcd(p - 1, q) - 1)
    if spec.kind == LOOP:
        a_, b_ = p + q - 2, p - 1
        w = tuple(
            m for m in _solutions(-(2 * (q - 1) + b_ * k), -(1 + b_ * k), a_) if m <= -k
        )
        x = tuple(m for m in _solutions(-b_ * k, (p - 1) - b_ * k, a_) if m >= 0)
        y_target = b_ * (1 - k)
        y = (y_target // a_,) if y_target % a_ == 0 and y_target >= 0 else ()
        z = tuple(
            (j, m)
            for j in range(1, q)
            for m in _solutions(1 - j - b_ * k, p - 2 - j - b_ * k, a_)
        )
        return LoopSets(w, x, y, z, math.gcd(p - 1, q - 1) - 1)
    # Fermat: each candidate set is empty or a singleton.
    e, f = p, q
    grid = []
    for i in range(e - 1):
        for j in range(f - 1):
            num = j - i - k * f
            if num % (e + f) == 0:
                m3 = num // (e + f)
                if i + e * m3 >= 0:
                    grid.append((i, j, m3, -k - m3))
    special = []
    num = -(k - 1) * f
    if num % (e + f) == 0:
        m3 = num // (e + f)
        if -1 + e * m3 >= 0:
            special.append((m3, -(k - 1) - m3))
    return FermatSets(tuple(grid), tuple(special), math.gcd(e, f) - 1)


def residue_q(spec: PolySpec, k: int) -> int:
    """Residue steering the piecewise rank formula at level k."""
    p, q = spec.p, spec.q
    if spec.kind == CHAIN:
        return (p - 1) * (1 - k) % (p + q - 1)
    if spec.kind == LOOP:
        return min(p - 1, q - 1) * (1 - k) % (p + q - 2)
    return min(p, q) * (1 - k) % (p + q)


def _fourcase(qr: int, lo: int, hi: int, g: int, modulus: int) -> int:
    if qr == 0:
        return g
    if qr <= lo:
        return qr
    if qr <= hi:
        return lo
    return modulus - qr


def sh_rank_piecewise(spec: PolySpec, k: int) -> int:
    """Rank in degrees 2k and 2k+1 (k <= 0) via the residue case analysis."""
    if k > 0:
        raise ValueError("piecewise formula applies to k <= 0 only")
    p, q = spec.p, spec.q
    qr = residue_q(spec, k)
    if spec.kind == CHAIN:
        return _fourcase(qr, min(p - 1, q), max(p - 1, q), math.gcd(p - 1, q), p + q - 1)
    if spec.kind == LOOP:
        base = _fourcase(
            qr, min(p, q) - 1, max(p, q) - 1, math.gcd(p - 1, q - 1), p + q - 2
        )
        return base + 1
    return _fourcase(qr, min(p, q), max(p, q), math.gcd(p, q), p + q) - 1


def sh_rank(spec: PolySpec, r: int) -> int:
    """Rank in a single cohomological degree r."""
    if r > 3 or r == 2:
        return 0
    if r == 3:
        return milnor_number(spec)
    return sh_rank_piecewise(spec, r // 2)


@dataclass(frozen=True)
class LoopCardinalities:
    """Floor/ceiling closed forms for the loop index-set sizes at level k."""

    x: int
    w: int
    z: dict[int, int] = field(hash=False)

    def total_with(self, eta: int, y: int) -> int:
        return self.x + self.w + eta * y + sum(self.z.values())


def loop_set_cardinalities(spec: PolySpec, k: int) -> LoopCardinalities:
    if spec.kind != LOOP:
        raise ValueError("cardinality closed forms are specific to loop polynomials")
    c, d = spec.p, spec.q
    a_ = c + d - 2
    qr = (c - 1) * (1 - k) % a_
    x = 1 + ((c - 1) - qr) // a_
    w = (qr - c) // a_ - _ceil_div(qr - (d - 1), a_) + 2
    z = {
        j: (qr - 1 - j) // a_ - _ceil_div(qr - (c - 2) - j, a_) + 1
        for j in range(1, d)
    }
    return LoopCardinalities(x, w, z)


@dataclass(frozen=True)
class BigradedProfile:
    """Map (degree, bidegree) -> rank over a degree window."""

    ranks: dict[tuple[int, int], int] = field(hash=False)
    r_min: int
    r_max: int

    def rank(self, r: int) -> int:
        return sum(v for (deg, _), v in self.ranks.items() if deg == r)

    def bidegrees(self, r: int) -> dict[int, int]:
        return {b: v for (deg, b), v in self.ranks.items() if deg == r}

    def min_bidegree(self, r: int) -> int:
        degs = self.bidegrees(r)
        if not degs:
            raise ValueError(f"no classes in degree {r}")
        return min(degs)

    def triples(self) -> list[tuple[int, int, int]]:
        return sorted((deg, b, v) for (deg, b), v in self.ranks.items())


def _bidegree_multiset(spec: PolySpec, k: int) -> dict[int, int]:
    """Bidegree -> multiplicity shared by degrees 2k and 2k+1."""
    p, q = spec.p, spec.q
    sets = contribution_sets(spec, k)
    out: dict[int, int] = {}

    def add(b0: int, mult: int = 1) -> None:
        if mult:
            out[b0] = out.get(b0, 0) + mult

    if spec.kind == CHAIN:
        for m in sets.w:
            add(-p * (m + k))
        for m in sets.x:
            add((q - 1) * m - k)
        for i, m in sets.z:
            add((q - 1) * m - k + i)
        for m in sets.y:
            add((q - 1) * m - k, sets.eta)
    elif spec.kind == LOOP:
        for m in sets.w:
            add(-(p - 1) * m - p * k)
        for m in sets.x:
            add((q - 1) * m - k)
        for j, m in sets.z:
            add((q - 1) * m - k + j)
        for m in sets.y:
            add((q - 1) * m - k, sets.eta)
    else:
        for i, _, m3, _ in sets.grid:
            add(i + p * m3)
        for m3, _ in sets.special:
            add(-1 + p * m3, sets.special_mult)
    return out


def bigraded_profile(spec: PolySpec, r_min: int, r_max: int) -> BigradedProfile:
    """Exact (degree, bidegree) rank table over the window [r_min, r_max]."""
    if r_min > r_max:
        raise ValueError("empty degree window")
    ranks: dict[tuple[int, int], int] = {}
    for k in sorted({r // 2 for r in range(r_min, min(r_max, 1) + 1)}):
        multiset = _bidegree_multiset(spec, k)
        for r in (2 * k, 2 * k + 1):
            if r_min <= r <= r_max:
                for b0, mult in multiset.items():
                    ranks[(r, b0)] = mult
    if r_min <= 3 <= r_max:
        ranks[(3, -1)] = milnor_number(spec)
    return BigradedProfile(ranks, r_min, r_max)
