"""Contact invariants, conjecture checkers and profile-derived quantities."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .closedform import BigradedProfile, bigraded_profile, sh_rank, sh_rank_piecewise
from .polyspec import (
    CHAIN,
    FERMAT,
    LOOP,
    PolySpec,
    milnor_number,
    normalize,
    small_resolution,
)


class WindowError(ValueError):
    """The supplied profile window is too small to certify the answer."""


def rho_lambda(spec: PolySpec) -> tuple[int, int]:
    """(rho, lambda): the eventual repeating rank and the plateau rank."""
    p, q = spec.p, spec.q
    if spec.kind == CHAIN:
        return math.gcd(p - 1, q), min(p - 1, q)
    if spec.kind == LOOP:
        return math.gcd(p - 1, q - 1) + 1, min(p, q)
    return math.gcd(p, q) - 1, min(p, q) - 1


def kappa_sigma(spec: PolySpec) -> tuple[int, int]:
    """(kappa, sigma): first concentrated level and its bidegree (rho >= 2)."""
    p, q = spec.p, spec.q
    rho, _ = rho_lambda(spec)
    if rho < 2:
        raise ValueError("kappa and sigma require rho >= 2")
    if spec.kind == CHAIN:
        return 1 - (p - 1 + q) // rho, p * q // rho - 1
    if spec.kind == LOOP:
        return 1 - (p + q - 2) // (rho - 1), (p * q - 1) // (rho - 1) - 1
    return 1 - (p + q) // (rho + 1), p * q // (rho + 1) - 1


def formal_period(spec: PolySpec) -> tuple[int, int]:
    """(theta, rho_b): period and first bidegree of the rho = 1 tail pattern."""
    p, q = spec.p, spec.q
    rho, _ = rho_lambda(spec)
    if rho != 1:
        raise ValueError("the formal period is defined only when rho = 1")
    if spec.kind == FERMAT:
        e, f = min(p, q), max(p, q)
        if e == 2:
            return f - 2, f - 2
        return e + f - 2, e * f // 2 - 1
    if spec.kind == CHAIN:
        # Values consistent with the enumeration theorems and hence with
        # search_formal_period on a profile.  For 3 <= p <= q the pattern
        # first appears at level 2-p-q, where the index sets collapse to the
        # single class of bidegree pq-1.  Otherwise it appears earlier, at
        # the first level whose residue is n-1 (n = p+q-1); there the lone
        # class lies in the X set and its bidegree follows from its formula.
        n = p + q - 1
        if 3 <= p <= q:
            return 2 * (n - 1), p * q - 1
        u = n - 1 - pow(p - 1, -1, n)
        s = ((p - 1) * u + p) // n
        return 2 * u, (q - 1) * s + u
    raise ValueError("loop polynomials always have rho >= 2")


def lct(spec: PolySpec) -> Fraction:
    """Log canonical threshold (1 - kappa) / (sigma + 1) in lowest terms."""
    kappa, sigma = kappa_sigma(spec)
    return Fraction(1 - kappa, sigma + 1)


def modulus(spec: PolySpec) -> int:
    """Period of the level residue: k and k - modulus share a rank."""
    if spec.kind == CHAIN:
        return spec.p + spec.q - 1
    if spec.kind == LOOP:
        return spec.p + spec.q - 2
    return spec.p + spec.q


def fcd_from_profile(profile: BigradedProfile, rho: int) -> tuple[int, int]:
    """Largest k <= 0 whose odd degree 2k+1 sits in a single bidegree.

    Returns (k, bidegree); requires rho >= 2 and a window wide enough to
    certify the answer.
    """
    if rho < 2:
        raise ValueError("the concentration level requires rho >= 2")
    k = 0
    while 2 * k + 1 >= profile.r_min and 2 * k + 1 <= profile.r_max:
        degs = profile.bidegrees(2 * k + 1)
        if len(degs) == 1:
            (b0,) = degs
            return k, b0
        k -= 1
    raise WindowError("window exhausted before finding a concentrated degree")


def search_formal_period(
    profile: BigradedProfile, rho: int, lam: int
) -> tuple[int, int]:
    """Smallest even T >= 0 realizing the rho = 1 period pattern.

    Conditions: rank one in degree -T, rank lambda in degree -(T+2), and the
    minimal bidegree steps by one from degree -T to degree -(T+1).
    Returns (T, minimal bidegree in degree -T).
    """
    if rho != 1:
        raise ValueError("the period search requires rho = 1")
    t = 0
    while -(t + 2) >= profile.r_min and -t <= profile.r_max:
        if (
            profile.rank(-t) == 1
            and profile.rank(-(t + 2)) == lam
            and profile.min_bidegree(-t) + 1 == profile.min_bidegree(-(t + 1))
        ):
            return t, profile.min_bidegree(-t)
        t += 2
    raise WindowError("window exhausted before finding the period pattern")


def q_factorialization(spec: PolySpec) -> tuple[int, PolySpec]:
    """(g_w, tilde): contraction multiplicity and the small-model Fermat spec."""
    p, q = spec.p, spec.q
    if spec.kind == CHAIN:
        g = math.gcd(p - 1, q)
        e, f = (p - 1) // g, q // g
    elif spec.kind == LOOP:
        g = math.gcd(p - 1, q - 1)
        e, f = (p - 1) // g, (q - 1) // g
    else:
        g = math.gcd(p, q)
        e, f = p // g, q // g
    return g, PolySpec(FERMAT, e, f, extended=True)


def check_rank_relation(spec: PolySpec, k: int) -> tuple[bool, dict]:
    """Rank identity relating the singularity to its Q-factorialization."""
    g, tilde = q_factorialization(spec)
    dim = sh_rank_piecewise(spec, k)
    dim_tilde = sh_rank_piecewise(tilde, k)
    if spec.kind == CHAIN:
        ok = dim == g * (dim_tilde + 1)
    elif spec.kind == LOOP:
        ok = dim - 1 == g * (dim_tilde + 1)
    else:
        ok = dim + 1 == g * (dim_tilde + 1)
    return ok, {"k": k, "dim": dim, "dim_tilde": dim_tilde, "g_w": g}


def check_refined_conjecture(spec: PolySpec, k: int) -> tuple[bool, dict]:
    """dim SH^2k = g_w * dim SH^2k(tilde) + b2, with b2 = rho."""
    g, tilde = q_factorialization(spec)
    rho, _ = rho_lambda(spec)
    dim = sh_rank_piecewise(spec, k)
    dim_tilde = sh_rank_piecewise(tilde, k)
    ok = dim == g * dim_tilde + rho
    return ok, {"k": k, "dim": dim, "dim_tilde": dim_tilde, "g_w": g, "b2": rho}


def check_EL_conjecture(spec: PolySpec) -> tuple[bool, dict]:
    """Constant rank over one full period iff a small resolution exists,
    with the constant equal to the number of exceptional curves."""
    r_lo = 2 * (1 - (spec.p + spec.q))
    ranks = [sh_rank(spec, r) for r in range(r_lo, 2)]
    constant = len(set(ranks)) == 1
    curves = small_resolution(spec)
    if constant:
        ok = curves == ranks[0]
    else:
        ok = curves is None
    return ok, {
        "constant": constant,
        "value": ranks[0] if constant else None,
        "curves": curves,
    }


@dataclass(frozen=True)
class InvariantSignature:
    """All closed-form invariants of one (normalized) polynomial."""

    spec: PolySpec
    rho: int
    lam: int
    mu: int
    b2: int
    kappa: int | None
    sigma: int | None
    lct: Fraction | None
    theta: int | None
    rho_b: int | None
    small_res: int | None
    g_w: int
    tilde: PolySpec


def signature(spec: PolySpec) -> InvariantSignature:
    spec = normalize(spec)
    rho, lam = rho_lambda(spec)
    kappa = sigma = theta = rho_b = lct_val = None
    if rho >= 2:
        kappa, sigma = kappa_sigma(spec)
        lct_val = lct(spec)
    if rho == 1:
        theta, rho_b = formal_period(spec)
    g, tilde = q_factorialization(spec)
    return InvariantSignature(
        spec=spec,
        rho=rho,
        lam=lam,
        mu=milnor_number(spec),
        b2=rho,
        kappa=kappa,
        sigma=sigma,
        lct=lct_val,
        theta=theta,
        rho_b=rho_b,
        small_res=small_resolution(spec),
        g_w=g,
        tilde=tilde,
    )


def profile_for_invariants(spec: PolySpec) -> BigradedProfile:
    """A window guaranteed wide enough for both profile-derived extractions."""
    r_lo = min(2 * (1 - (spec.p + spec.q)), -2 * (spec.p + spec.q) - 4)
    return bigraded_profile(spec, r_lo, 1)
