"""Brute-force rank oracle via equivariant good-pair enumeration.

Independently recomputes the bigraded profile by listing, for every element of
the finite symmetry group of the suspended polynomial, the monomial classes
whose character matches a power of the total weight character.  Used to
cross-check the closed formulas; exact integers throughout.
"""

from __future__ import annotations

from dataclasses import dataclass

from .closedform import BigradedProfile
from .polyspec import CHAIN, FERMAT, LOOP, PolySpec, group_order_dw, weight_system

CLASS_A = "A"  # x0 fixed, no dual generator: b0 >= 0, degree 2N + 4 - alpha
CLASS_B = "B"  # x0 fixed with dual generator: b0 >= -1, degree 2N + 5 - alpha
CLASS_C = "C"  # x0 unfixed, forced dual generator: b0 = -1, degree 2N + 5 - alpha


@dataclass(frozen=True)
class GroupElement:
    """Kernel element (s1, s2, j) or (s1, s2, j3, j4); s-entries are sign bits."""

    s1: int
    s2: int
    j: int
    j4: int | None = None

    def label(self) -> str:
        tail = f",{self.j4}" if self.j4 is not None else ""
        return f"({self.s1},{self.s2},{self.j}{tail})"


@dataclass(frozen=True)
class FixedData:
    """Which coordinates a group element fixes."""

    x0: bool
    x1: bool
    x2: bool
    x3: bool
    x4: bool

    @property
    def alpha(self) -> int:
        return sum((self.x1, self.x2, self.x3, self.x4))


@dataclass(frozen=True)
class JacobianBasis:
    """Monomial basis of the restricted Jacobian ring in (x3, x4) exponents.

    Unfixed coordinates carry exponent -1.  free_var marks the degenerate case
    of an unconstrained fixed coordinate (possible only off the actual kernel).
    """

    monomials: tuple[tuple[int, int], ...] | None
    free_var: str | None = None


@dataclass(frozen=True)
class GoodPair:
    gamma: GroupElement
    b: tuple[int, int, int, int, int]
    cls: str
    big_n: int
    degree: int
    bidegree: int

    def dump(self) -> str:
        return (
            f"γ={self.gamma.label()} b={self.b} class={self.cls} "
            f"N={self.big_n} deg={self.degree} bideg={self.bidegree}"
        )


def _root_power_is(j: int, order: int, value: int) -> bool:
    """Whether zeta^j equals +1 (value=1) or -1 (value=-1) for zeta of given order."""
    if value == 1:
        return j % order == 0
    return order % 2 == 0 and j % order == order // 2


def kernel_elements(spec: PolySpec) -> list[GroupElement]:
    """All elements of the kernel of the total weight character."""
    if spec.kind == FERMAT:
        return [
            GroupElement(s1, s2, j3, j4)
            for s1 in (0, 1)
            for s2 in (0, 1)
            for j3 in range(spec.p)
            for j4 in range(spec.q)
        ]
    dw = group_order_dw(spec)
    return [
        GroupElement(s1, s2, j)
        for s1 in (0, 1)
        for s2 in (0, 1)
        for j in range(dw)
    ]


def fixed_data(spec: PolySpec, g: GroupElement) -> FixedData:
    x1 = g.s1 == 0
    x2 = g.s2 == 0
    if spec.kind == FERMAT:
        assert g.j4 is not None
        e, f = spec.p, spec.q
        x3 = g.j == 0
        x4 = g.j4 == 0
        # x0 scales by the inverse of u1*u2*zeta_e^j3*zeta_f^j4.
        phase = (g.j * f + g.j4 * e) % (e * f)  # ef-th root exponent of the product
        if (g.s1 + g.s2) % 2 == 0:
            x0 = phase == 0
        else:
            x0 = 2 * phase == e * f
        return FixedData(x0, x1, x2, x3, x4)
    dw = group_order_dw(spec)
    a33 = spec.p
    x3 = g.j % dw == 0
    x4 = (a33 * g.j) % dw == 0
    # x0 scales by u1^-1 u2^-1 u3^(a33-1).
    want = 1 if (g.s1 + g.s2) % 2 == 0 else -1
    x0 = _root_power_is((a33 - 1) * g.j, dw, want)
    return FixedData(x0, x1, x2, x3, x4)


def jacobian_basis(spec: PolySpec, fd: FixedData) -> JacobianBasis:
    """Monomial basis of the Jacobian ring of the polynomial restricted to Fix."""
    p, q = spec.p, spec.q
    if spec.kind == CHAIN:
        if fd.x3 and fd.x4:
            mono = (
                [(i, 0) for i in range(2 * (p - 1) + 1)]
                + [(0, j) for j in range(1, q - 1)]
                + [(i, j) for i in range(1, p - 1) for j in range(1, q - 1)]
            )
            return JacobianBasis(tuple(mono))
        if fd.x4:
            return JacobianBasis(tuple((-1, j) for j in range(q - 1)))
        if fd.x3:
            raise ValueError("chain cannot fix x3 without x4")
        return JacobianBasis(((-1, -1),))
    if spec.kind == LOOP:
        if fd.x3 and fd.x4:
            mono = (
                [(i, 0) for i in range(p)]
                + [(0, j) for j in range(1, 2 * (q - 1) + 1)]
                + [(i, j) for i in range(1, p - 1) for j in range(1, q)]
            )
            return JacobianBasis(tuple(mono))
        if fd.x4:
            # Both loop monomials vanish on {x3 = 0}: the ring is free on x4.
            return JacobianBasis(None, free_var="x4")
        if fd.x3:
            raise ValueError("loop cannot fix x3 without x4")
        return JacobianBasis(((-1, -1),))
    if fd.x3 and fd.x4:
        return JacobianBasis(
            tuple((i, j) for i in range(p - 1) for j in range(q - 1))
        )
    if fd.x3:
        return JacobianBasis(tuple((i, -1) for i in range(p - 1)))
    if fd.x4:
        return JacobianBasis(tuple((-1, j) for j in range(q - 1)))
    return JacobianBasis(((-1, -1),))


def _character_ok(spec: PolySpec, b: tuple[int, int, int, int, int]) -> bool:
    """Whether the class character is a power of the total weight character."""
    b0, b1, b2, b3, b4 = b
    if (b0 - b1) % 2 or (b0 - b2) % 2:
        return False
    if spec.kind == FERMAT:
        return (b0 - b3) % spec.p == 0 and (b0 - b4) % spec.q == 0
    dw = group_order_dw(spec)
    a33 = spec.p
    return (-a33 * b4 + b3 + (a33 - 1) * b0) % dw == 0


def validate_pair(spec: PolySpec, pair: GoodPair) -> bool:
    """Re-check every defining condition of an emitted pair."""
    ws = weight_system(spec)
    fd = fixed_data(spec, pair.gamma)
    b0, b1, b2, b3, b4 = pair.b
    # Exponent shape must match the fixed locus.
    for fixed, exp in ((fd.x1, b1), (fd.x2, b2), (fd.x3, b3), (fd.x4, b4)):
        if (exp == -1) == fixed:
            return False
    if pair.cls == CLASS_A and not (fd.x0 and b0 >= 0):
        return False
    if pair.cls == CLASS_B and not (fd.x0 and b0 >= -1):
        return False
    if pair.cls == CLASS_C and not (not fd.x0 and b0 == -1):
        return False
    if not _character_ok(spec, pair.b):
        return False
    total = sum(d * e for d, e in zip((ws.d0,) + ws.d, pair.b))
    if total != pair.big_n * ws.h:
        return False
    base = 4 if pair.cls == CLASS_A else 5
    return (
        pair.degree == 2 * pair.big_n + base - fd.alpha
        and pair.bidegree == b0
    )


def enumerate_good_pairs(
    spec: PolySpec, r_min: int, r_max: int, parity_filter: bool = True
) -> list[GoodPair]:
    """All good pairs with cohomological degree inside [r_min, r_max].

    parity_filter skips group elements with u1 != u2, which provably admit no
    good pairs; disabling it exercises the same conclusion by brute force.
    """
    ws = weight_system(spec)
    d0, (d1, d2, d3, d4), h = ws.d0, ws.d, ws.h
    pairs: list[GoodPair] = []
    for gamma in kernel_elements(spec):
        if parity_filter and gamma.s1 != gamma.s2:
            continue
        fd = fixed_data(spec, gamma)
        basis = jacobian_basis(spec, fd)
        alpha = fd.alpha
        b1 = 0 if fd.x1 else -1
        b2 = 0 if fd.x2 else -1
        classes = (CLASS_A, CLASS_B) if fd.x0 else (CLASS_C,)
        if basis.free_var is not None:
            if fd.x0:
                raise RuntimeError("free Jacobian variable with fixed x0: "
                                   "enumeration range would be infinite")
            pairs.extend(
                _free_variable_pairs(spec, ws, gamma, fd, b1, b2, r_min, r_max)
            )
            continue
        for b3, b4 in basis.monomials:
            tail = d1 * b1 + d2 * b2 + d3 * b3 + d4 * b4
            for cls in classes:
                base = 4 if cls == CLASS_A else 5
                n_lo = -((-(r_min - base + alpha)) // 2)
                n_hi = (r_max - base + alpha) // 2
                for big_n in range(n_lo, n_hi + 1):
                    num = big_n * h - tail
                    if num % d0:
                        continue
                    b0 = num // d0
                    if cls == CLASS_A and b0 < 0:
                        continue
                    if cls == CLASS_B and b0 < -1:
                        continue
                    if cls == CLASS_C and b0 != -1:
                        continue
                    b = (b0, b1, b2, b3, b4)
                    if not _character_ok(spec, b):
                        continue
                    pair = GoodPair(
                        gamma, b, cls, big_n, 2 * big_n + base - alpha, b0
                    )
                    assert validate_pair(spec, pair), pair.dump()
                    pairs.append(pair)
    pairs.sort(key=lambda pr: (
        (pr.gamma.s1, pr.gamma.s2, pr.gamma.j, pr.gamma.j4 or 0), pr.b, pr.cls
    ))
    return pairs


def _free_variable_pairs(spec, ws, gamma, fd, b1, b2, r_min, r_max):
    """Loop branch with only x4 fixed: x0 is unfixed, so b0 = b3 = -1 and b4
    is pinned by the weight relation for each admissible N."""
    d0, (d1, d2, d3, d4), h = ws.d0, ws.d, ws.h
    alpha = fd.alpha
    b0, b3 = -1, -1
    head = d0 * b0 + d1 * b1 + d2 * b2 + d3 * b3
    out = []
    n_lo = -((-(r_min - 5 + alpha)) // 2)
    n_hi = (r_max - 5 + alpha) // 2
    for big_n in range(n_lo, n_hi + 1):
        num = big_n * h - head
        if num % d4 or num < 0:
            continue
        b = (b0, b1, b2, b3, num // d4)
        if not _character_ok(spec, b):
            continue
        pair = GoodPair(gamma, b, CLASS_C, big_n, 2 * big_n + 5 - alpha, b0)
        assert validate_pair(spec, pair), pair.dump()
        out.append(pair)
    return out


def oracle_profile(spec: PolySpec, r_min: int, r_max: int) -> BigradedProfile:
    """Bigraded profile obtained by counting good pairs degree by degree."""
    ranks: dict[tuple[int, int], int] = {}
    for pair in enumerate_good_pairs(spec, r_min, r_max):
        key = (pair.degree, pair.bidegree)
        ranks[key] = ranks.get(key, 0) + 1
    return BigradedProfile(ranks, r_min, r_max)
