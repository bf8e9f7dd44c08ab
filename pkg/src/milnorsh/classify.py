"""Contactomorphism classification of the links.

Two links are contactomorphic exactly when the polynomials are related by one
of four explicit deformation relations; otherwise some computable invariant
separates them.  Verdicts always carry a witness relation or a separator.
"""

from __future__ import annotations

from dataclasses import dataclass

from .closedform import bigraded_profile
from .invariants import InvariantSignature, modulus, signature
from .polyspec import CHAIN, FERMAT, LOOP, PolySpec, normalize


@dataclass(frozen=True)
class Verdict:
    contactomorphic: bool
    # Witness relation name when contactomorphic, separator name otherwise.
    reason: str
    detail: tuple


def _chain_loop(chain: PolySpec, loop: PolySpec) -> bool:
    a, b = chain.p, chain.q
    if (a - 1) % b:
        return False
    partner = ((a - 1) // b) * (b - 1) + 1
    return sorted((loop.p, loop.q)) == sorted((b, partner))


def _chain_fermat(chain: PolySpec, fermat: PolySpec) -> bool:
    a, b = chain.p, chain.q
    if b % (a - 1):
        return False
    return sorted((fermat.p, fermat.q)) == sorted((a, a * b // (a - 1)))


def _loop_fermat(loop: PolySpec, fermat: PolySpec) -> bool:
    c, d = loop.p, loop.q
    return c == d and fermat.p == fermat.q == c + 1


def deformation_relation(s1: PolySpec, s2: PolySpec) -> str | None:
    """Name of the relation linking the two specs, or None."""
    s1, s2 = normalize(s1), normalize(s2)
    if s1 == s2:
        return "same-type-equal"
    by_kind = {s1.kind: s1, s2.kind: s2}
    if len(by_kind) == 1:
        return None
    if CHAIN in by_kind and LOOP in by_kind:
        if _chain_loop(by_kind[CHAIN], by_kind[LOOP]):
            return "chain-loop"
    if CHAIN in by_kind and FERMAT in by_kind:
        if _chain_fermat(by_kind[CHAIN], by_kind[FERMAT]):
            return "chain-fermat"
    if LOOP in by_kind and FERMAT in by_kind:
        if _loop_fermat(by_kind[LOOP], by_kind[FERMAT]):
            return "loop-fermat"
    return None


def _find_separator(s1: PolySpec, s2: PolySpec,
                    g1: InvariantSignature, g2: InvariantSignature):
    """First distinguishing invariant in the fixed separator order."""
    for name in ("rho", "lam", "mu"):
        v1, v2 = getattr(g1, name), getattr(g2, name)
        if v1 != v2:
            return name, (v1, v2)
    if g1.rho >= 2 and g2.rho >= 2:
        v1, v2 = (g1.kappa, g1.sigma), (g2.kappa, g2.sigma)
        if v1 != v2:
            return "kappa-sigma", (v1, v2)
    if g1.rho == 1 and g2.rho == 1:
        v1, v2 = (g1.theta, g1.rho_b), (g2.theta, g2.rho_b)
        if v1 != v2:
            return "theta-rho_b", (v1, v2)
    r_lo = 2 * (1 - max(modulus(s1), modulus(s2)))
    p1 = bigraded_profile(s1, r_lo, 1).ranks
    p2 = bigraded_profile(s2, r_lo, 1).ranks
    if p1 != p2:
        key = min(k for k in set(p1) | set(p2) if p1.get(k) != p2.get(k))
        return "profile", (key, p1.get(key, 0), p2.get(key, 0))
    return None


def contactomorphic(s1: PolySpec, s2: PolySpec) -> Verdict:
    """Decide contactomorphism; always justified by a witness or separator."""
    s1, s2 = normalize(s1), normalize(s2)
    relation = deformation_relation(s1, s2)
    if relation is not None:
        return Verdict(True, relation, (s1, s2))
    sep = _find_separator(s1, s2, signature(s1), signature(s2))
    if sep is None:
        raise AssertionError(
            f"no deformation relation and no separator for {s1} vs {s2}"
        )
    return Verdict(False, sep[0], sep[1])


def signature_table(specs: list[PolySpec]) -> list[InvariantSignature]:
    """Signatures for a batch of specs in canonical order."""
    return [signature(s) for s in sorted(normalize(s) for s in specs)]
