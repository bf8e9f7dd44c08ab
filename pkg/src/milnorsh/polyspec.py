"""Invertible polynomial specifications and their weight systems.

A spec (kind, p, q) describes a four-variable polynomial

    chain:  x1^2 + x2^2 + x3^p x4 + x4^q
    loop:   x1^2 + x2^2 + x3^p x4 + x3 x4^q
    fermat: x1^2 + x2^2 + x3^p + x4^q

All arithmetic is exact (Python integers and fractions).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

CHAIN = "chain"
LOOP = "loop"
FERMAT = "fermat"
KINDS = (CHAIN, LOOP, FERMAT)


@dataclass(frozen=True, order=True)
class PolySpec:
    """One member of the three two-parameter families."""

    kind: str
    p: int
    q: int
    # Fermat exponents equal to 1 are admitted only as degenerate images of
    # the small Q-factorialization map; they are never valid user input.
    extended: bool = False

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")
        floor = 1 if (self.extended and self.kind == FERMAT) else 2
        if self.p < floor or self.q < floor:
            raise ValueError(f"exponents must exceed 1: {self.kind}:{self.p},{self.q}")


@dataclass(frozen=True)
class WeightSystem:
    """Integer weights (d1..d4), total degree h and suspension weight d0."""

    d: tuple[int, int, int, int]
    h: int
    d0: int


def parse_poly(text: str) -> PolySpec:
    """Parse the ``kind:p,q`` grammar, e.g. ``loop:3,4``."""
    head, sep, tail = text.strip().partition(":")
    kind = head.strip().lower()
    if not sep or kind not in KINDS:
        raise ValueError(f"expected kind:p,q with kind in {KINDS}, got {text!r}")
    parts = [s.strip() for s in tail.split(",")]
    if len(parts) != 2 or not all(s.lstrip("+-").isdigit() for s in parts):
        raise ValueError(f"expected two integer exponents, got {text!r}")
    return PolySpec(kind, int(parts[0]), int(parts[1]))


def format_poly(spec: PolySpec) -> str:
    """Inverse of parse_poly."""
    return f"{spec.kind}:{spec.p},{spec.q}"


def spec_to_dict(spec: PolySpec) -> dict:
    return {"type": spec.kind, "p": spec.p, "q": spec.q}


def spec_from_dict(data: dict) -> PolySpec:
    try:
        return PolySpec(str(data["type"]), int(data["p"]), int(data["q"]))
    except KeyError as exc:
        raise ValueError(f"missing field {exc} in polynomial object") from exc


def normalize(spec: PolySpec) -> PolySpec:
    """Canonical exponent order: loop and fermat sorted p <= q, chain as is."""
    if spec.kind in (LOOP, FERMAT) and spec.p > spec.q:
        return PolySpec(spec.kind, spec.q, spec.p, spec.extended)
    return spec


def exponent_matrix(spec: PolySpec) -> tuple[tuple[int, int, int, int], ...]:
    """Exponent matrix A of the four-variable polynomial (one row per monomial)."""
    p, q = spec.p, spec.q
    if spec.kind == CHAIN:
        block = ((p, 1), (0, q))
    elif spec.kind == LOOP:
        block = ((p, 1), (1, q))
    else:
        block = ((p, 0), (0, q))
    return (
        (2, 0, 0, 0),
        (0, 2, 0, 0),
        (0, 0, block[0][0], block[0][1]),
        (0, 0, block[1][0], block[1][1]),
    )


def weight_system(spec: PolySpec) -> WeightSystem:
    """Solve A.(d1..d4) = h.(1,1,1,1) exactly and clear to coprime integers."""
    p, q = spec.p, spec.q
    # Solve at h = 1 over the rationals; the 2x2 tail block decouples.
    if spec.kind == CHAIN:
        d4 = Fraction(1, q)
        d3 = (1 - d4) / p
    elif spec.kind == LOOP:
        det = p * q - 1
        d3 = Fraction(q - 1, det)
        d4 = Fraction(p - 1, det)
    else:
        d3 = Fraction(1, p)
        d4 = Fraction(1, q)
    fractions = (Fraction(1, 2), Fraction(1, 2), d3, d4)
    h = math.lcm(*(f.denominator for f in fractions))
    d = tuple(int(f * h) for f in fractions)
    g = math.gcd(h, *d)
    d = tuple(v // g for v in d)
    h //= g
    return WeightSystem(d, h, h - sum(d))


def milnor_number(spec: PolySpec) -> int:
    """Rank of the middle cohomology of the Milnor fiber."""
    p, q = spec.p, spec.q
    if spec.kind == CHAIN:
        return p * (q - 1) + 1
    if spec.kind == LOOP:
        return p * q
    return (p - 1) * (q - 1)


def small_resolution(spec: PolySpec) -> int | None:
    """Number of exceptional curves of a small resolution, or None if there is none."""
    p, q = spec.p, spec.q
    if spec.kind == CHAIN:
        lo, g = min(p - 1, q), math.gcd(p - 1, q)
        return lo if lo == g else None
    if spec.kind == LOOP:
        lo, g = min(p - 1, q - 1), math.gcd(p - 1, q - 1)
        return lo + 1 if lo == g else None
    lo, g = min(p, q), math.gcd(p, q)
    return lo - 1 if lo == g else None


def group_order_dw(spec: PolySpec) -> int:
    """Order d_w = det(A)/4 of the cyclic factor of ker(chi_w) (chain and loop only)."""
    if spec.kind == CHAIN:
        return spec.p * spec.q
    if spec.kind == LOOP:
        return spec.p * spec.q - 1
    raise ValueError("the cyclic-factor order is only defined for chain and loop")
