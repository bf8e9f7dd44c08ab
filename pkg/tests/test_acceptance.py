"""Acceptance suite: nine exact end-to-end criteria, one pass/fail line each.

Everything here is integer arithmetic; no tolerances anywhere.
"""

import pytest

from milnorsh.classify import contactomorphic
from milnorsh.closedform import bigraded_profile, sh_rank, sh_rank_piecewise
from milnorsh.invariants import (
    check_EL_conjecture,
    check_rank_relation,
    check_refined_conjecture,
    fcd_from_profile,
    modulus,
    profile_for_invariants,
    q_factorialization,
    search_formal_period,
    signature,
)
from milnorsh.oracle import oracle_profile
from milnorsh.polyspec import KINDS, PolySpec, milnor_number, normalize

CONTACT_FIELDS = (
    "rho", "lam", "mu", "b2", "kappa", "sigma", "lct",
    "theta", "rho_b", "small_res",
)


def grid(max_exp):
    return [
        PolySpec(kind, p, q)
        for kind in KINDS
        for p in range(2, max_exp + 1)
        for q in range(2, max_exp + 1)
    ]


def report(n, label):
    print(f"criterion {n} ({label}): PASS")


def test_criterion_1_loop_3_4_rank_table():
    table = {0: 3, 1: 3, 2: 2, 3: 2, 4: 3, 5: 3, 6: 2, 7: 2, 8: 2, 9: 2}
    spec = PolySpec("loop", 3, 4)
    for r in range(-60, 2):
        assert sh_rank(spec, r) == table[r % 10], r
    report(1, "loop(3,4) rank table")


def test_criterion_2_constant_rank_loops():
    for spec, value in [(PolySpec("loop", 5, 3), 3), (PolySpec("loop", 7, 4), 4)]:
        for r in range(-30, 2):
            assert sh_rank(spec, r) == value, (spec, r)
    report(2, "loop(5,3) and loop(7,4) constants")


def test_criterion_3_loop_family_law():
    for ell in range(2, 7):
        for delta in range(1, 5):
            spec = PolySpec("loop", ell, delta * (ell - 1) + 1)
            for r in range(2 * (1 - (spec.p + spec.q)), 2):
                assert sh_rank(spec, r) == ell, (spec, r)
    report(3, "loop family law")


def test_criterion_4_oracle_equals_formula():
    for spec in grid(6):
        assert (
            oracle_profile(spec, -24, 3).ranks
            == bigraded_profile(spec, -24, 3).ranks
        ), spec
    report(4, "oracle == closed form over [-24, 3]")


def test_criterion_5_degree_boundary():
    for spec in grid(6):
        mu = milnor_number(spec)
        formula = bigraded_profile(spec, 2, 10)
        oracle = oracle_profile(spec, 2, 10)
        for profile in (formula, oracle):
            assert profile.rank(2) == 0, spec
            assert profile.rank(3) == mu, spec
            assert all(profile.rank(r) == 0 for r in range(4, 11)), spec
    report(5, "degree boundary (rank 0 / mu / 0)")


def test_criterion_6_el_equivalence():
    for spec in grid(12):
        ok, detail = check_EL_conjecture(spec)
        assert ok, (spec, detail)
    report(6, "EL equivalence up to exponent 12")


def test_criterion_7_rank_relations():
    for spec in grid(10):
        _, tilde = q_factorialization(spec)
        for k in range(-20, 1):
            assert check_rank_relation(spec, k)[0], (spec, k)
            assert check_refined_conjecture(spec, k)[0], (spec, k)
            if 1 in (tilde.p, tilde.q):
                assert sh_rank_piecewise(tilde, k) == 0, (spec, k)
    report(7, "rank relations and refined conjecture")


def test_criterion_8_invariant_cross_checks():
    for spec in grid(8):
        sig = signature(spec)
        profile = profile_for_invariants(normalize(spec))
        if sig.rho >= 2:
            assert fcd_from_profile(profile, sig.rho) == (sig.kappa, sig.sigma), spec
        elif sig.rho == 1:
            assert (
                search_formal_period(profile, sig.rho, sig.lam)
                == (sig.theta, sig.rho_b)
            ), spec
    report(8, "profile extractions match closed forms")


def test_criterion_9_classification_suite():
    contact_sets = [
        [PolySpec("fermat", 3, 4), PolySpec("fermat", 4, 3)],
        [PolySpec("chain", 7, 3), PolySpec("loop", 3, 5)],
        [PolySpec("chain", 2, 3), PolySpec("fermat", 2, 6)],
        [PolySpec("chain", 4, 3), PolySpec("loop", 3, 3), PolySpec("fermat", 4, 4)],
    ]
    for group in contact_sets:
        for i, s1 in enumerate(group):
            for s2 in group[i + 1:]:
                assert contactomorphic(s1, s2).contactomorphic, (s1, s2)
    for s1, s2 in [
        (PolySpec("chain", 4, 6), PolySpec("loop", 3, 3)),
        (PolySpec("fermat", 2, 4), PolySpec("fermat", 2, 6)),
    ]:
        verdict = contactomorphic(s1, s2)
        assert not verdict.contactomorphic and verdict.reason == "mu", (s1, s2)

    # Soundness sweep: contactomorphic implies equal contact signatures and
    # equal bigraded profiles over one shared residue period.
    specs = grid(8)
    violations = []
    for i, s1 in enumerate(specs):
        for s2 in specs[i + 1:]:
            verdict = contactomorphic(s1, s2)
            if not verdict.contactomorphic:
                continue
            g1, g2 = signature(s1), signature(s2)
            if any(getattr(g1, f) != getattr(g2, f) for f in CONTACT_FIELDS):
                violations.append((s1, s2, "signature"))
                continue
            r_lo = 2 * (1 - max(modulus(s1), modulus(s2)))
            if (
                bigraded_profile(normalize(s1), r_lo, 1).ranks
                != bigraded_profile(normalize(s2), r_lo, 1).ranks
            ):
                violations.append((s1, s2, "profile"))
    assert violations == []
    report(9, "classification suite and soundness sweep")
