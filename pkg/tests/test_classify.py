import pytest

from milnorsh.classify import contactomorphic, deformation_relation, signature_table
from milnorsh.polyspec import KINDS, PolySpec

CONTACT_PAIRS = [
    (PolySpec("fermat", 3, 4), PolySpec("fermat", 4, 3), "same-type-equal"),
    (PolySpec("chain", 7, 3), PolySpec("loop", 3, 5), "chain-loop"),
    (PolySpec("chain", 2, 3), PolySpec("fermat", 2, 6), "chain-fermat"),
    (PolySpec("chain", 4, 3), PolySpec("loop", 3, 3), "chain-loop"),
    (PolySpec("chain", 4, 3), PolySpec("fermat", 4, 4), "chain-fermat"),
    (PolySpec("loop", 3, 3), PolySpec("fermat", 4, 4), "loop-fermat"),
]

DISTINCT_PAIRS = [
    (PolySpec("chain", 4, 6), PolySpec("loop", 3, 3), "mu"),
    (PolySpec("fermat", 2, 4), PolySpec("fermat", 2, 6), "mu"),
]


@pytest.mark.parametrize("s1,s2,relation", CONTACT_PAIRS)
def test_contactomorphic_pairs(s1, s2, relation):
    verdict = contactomorphic(s1, s2)
    assert verdict.contactomorphic
    assert verdict.reason == relation
    # The relation is insensitive to argument order.
    assert contactomorphic(s2, s1).contactomorphic


@pytest.mark.parametrize("s1,s2,separator", DISTINCT_PAIRS)
def test_distinct_pairs(s1, s2, separator):
    verdict = contactomorphic(s1, s2)
    assert not verdict.contactomorphic
    assert verdict.reason == separator


def test_deformation_relation_symmetry():
    for s1, s2, relation in CONTACT_PAIRS:
        assert deformation_relation(s1, s2) == deformation_relation(s2, s1) == relation
    for s1, s2, _ in DISTINCT_PAIRS:
        assert deformation_relation(s1, s2) is None


def test_chain_loop_fermat_triple_is_transitive():
    triple = [PolySpec("chain", 4, 3), PolySpec("loop", 3, 3), PolySpec("fermat", 4, 4)]
    for i, s1 in enumerate(triple):
        for s2 in triple[i + 1:]:
            assert contactomorphic(s1, s2).contactomorphic


def test_chain_exponents_are_not_interchangeable():
    verdict = contactomorphic(PolySpec("chain", 3, 4), PolySpec("chain", 4, 3))
    assert not verdict.contactomorphic


def test_signature_table_is_sorted_and_normalized():
    table = signature_table([PolySpec("fermat", 4, 2), PolySpec("chain", 3, 4)])
    assert [sig.spec for sig in table] == [
        PolySpec("chain", 3, 4),
        PolySpec("fermat", 2, 4),
    ]


def test_distinct_verdicts_carry_detail():
    verdict = contactomorphic(PolySpec("chain", 4, 6), PolySpec("loop", 3, 3))
    assert verdict.detail == (21, 9)


def test_every_small_pair_gets_a_verdict():
    specs = [
        PolySpec(kind, p, q)
        for kind in KINDS
        for p in range(2, 6)
        for q in range(2, 6)
    ]
    for i, s1 in enumerate(specs):
        for s2 in specs[i + 1:]:
            verdict = contactomorphic(s1, s2)
            assert verdict.reason
