import math

import pytest
from hypothesis import given, settings, strategies as st

from milnorsh.closedform import (
    bigraded_profile,
    contribution_sets,
    loop_set_cardinalities,
    residue_q,
    sh_rank,
    sh_rank_piecewise,
)
from milnorsh.polyspec import KINDS, PolySpec, milnor_number

specs_st = st.builds(
    PolySpec,
    kind=st.sampled_from(KINDS),
    p=st.integers(2, 20),
    q=st.integers(2, 20),
)


def test_chain_sets_at_level_zero():
    sets = contribution_sets(PolySpec("chain", 3, 4), 0)
    assert sets.w == ()
    assert sets.x == (0,)
    assert sets.y == ()
    assert sets.z == ((1, 0),)
    assert sets.eta == 1
    assert sets.total() == 2


def test_fermat_sets_are_singletons():
    sets = contribution_sets(PolySpec("fermat", 2, 2), -1)
    assert sets.grid == ()
    assert sets.special == ((1, 1),)
    assert sets.special_mult == 1


def test_sets_require_nonpositive_level():
    with pytest.raises(ValueError):
        contribution_sets(PolySpec("chain", 3, 4), 1)


@pytest.mark.parametrize("kind", KINDS)
@pytest.mark.parametrize("p", range(2, 9))
@pytest.mark.parametrize("q", range(2, 9))
def test_set_totals_match_piecewise_formula(kind, p, q):
    spec = PolySpec(kind, p, q)
    for k in range(-30, 1):
        assert contribution_sets(spec, k).total() == sh_rank_piecewise(spec, k), k


@given(specs_st, st.integers(-200, 0))
def test_set_totals_match_piecewise_formula_random(spec, k):
    assert contribution_sets(spec, k).total() == sh_rank_piecewise(spec, k)


def test_residue_values():
    assert residue_q(PolySpec("chain", 3, 4), 0) == 2
    assert residue_q(PolySpec("loop", 3, 4), -1) == 4
    assert residue_q(PolySpec("fermat", 2, 2), -1) == 0


@pytest.mark.parametrize("p", range(2, 9))
@pytest.mark.parametrize("q", range(2, 9))
def test_loop_cardinalities_match_sets(p, q):
    spec = PolySpec("loop", p, q)
    for k in range(-30, 1):
        sets = contribution_sets(spec, k)
        card = loop_set_cardinalities(spec, k)
        assert card.x == len(sets.x)
        assert card.w == len(sets.w)
        for j in range(1, q):
            assert card.z[j] == sum(1 for jj, _ in sets.z if jj == j), (k, j)
        assert card.x + card.w >= 1
        assert card.total_with(sets.eta, len(sets.y)) == sets.total()


@pytest.mark.parametrize("p", range(2, 9))
@pytest.mark.parametrize("q", range(2, 9))
def test_loop_rank_symmetric_in_exponents(p, q):
    s1, s2 = PolySpec("loop", p, q), PolySpec("loop", q, p)
    for k in range(-20, 1):
        assert sh_rank_piecewise(s1, k) == sh_rank_piecewise(s2, k)


def test_loop_profile_symmetric_in_exponents():
    lo = 2 * (1 - 8)
    assert (
        bigraded_profile(PolySpec("loop", 5, 3), lo, 1).ranks
        == bigraded_profile(PolySpec("loop", 3, 5), lo, 1).ranks
    )


def test_degree_dispatch():
    spec = PolySpec("loop", 3, 4)
    assert sh_rank(spec, 2) == 0
    assert sh_rank(spec, 3) == milnor_number(spec)
    assert all(sh_rank(spec, r) == 0 for r in range(4, 30))


@given(specs_st)
def test_paired_degrees_share_bidegrees(spec):
    profile = bigraded_profile(spec, -12, 1)
    for k in range(-6, 1):
        assert profile.bidegrees(2 * k) == profile.bidegrees(2 * k + 1)


def test_bigraded_examples():
    assert bigraded_profile(PolySpec("chain", 3, 4), -2, -2).ranks == {
        (-2, 3): 1,
        (-2, 4): 1,
    }
    assert bigraded_profile(PolySpec("fermat", 2, 2), -2, -2).ranks == {(-2, 1): 1}
    assert bigraded_profile(PolySpec("chain", 3, 4), 3, 3).ranks == {(3, -1): 10}


@pytest.mark.parametrize("p", range(2, 9))
@pytest.mark.parametrize("q", range(2, 9))
def test_chain_y_set_divisibility(p, q):
    spec = PolySpec("chain", p, q)
    for k in range(-30, 1):
        nonempty = (p - 1) * (1 - k) % (p + q - 1) == 0
        assert bool(contribution_sets(spec, k).y) == nonempty


@pytest.mark.parametrize("ell", range(2, 7))
@pytest.mark.parametrize("delta", range(1, 5))
def test_loop_family_constant_rank(ell, delta):
    spec = PolySpec("loop", ell, delta * (ell - 1) + 1)
    for r in range(2 * (1 - (spec.p + spec.q)), 2):
        assert sh_rank(spec, r) == ell


def test_degenerate_fermat_exponent_one_has_rank_zero():
    spec = PolySpec("fermat", 1, 2, extended=True)
    assert all(sh_rank_piecewise(spec, k) == 0 for k in range(-30, 1))
