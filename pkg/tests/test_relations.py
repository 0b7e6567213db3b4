import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from finsemi import (
    BinaryRelation,
    FormatError,
    canonical_relation,
    chain_semilattice,
    check_admissibility,
    cyclic_group,
    format_relation,
    left_equalizer,
    left_zero,
    null_semigroup,
    parse_relation,
    right_equalizer,
    translate_left,
    translate_right,
    validate,
)

import oracles

L2 = left_zero(2)
N2 = null_semigroup(2)
Z2 = cyclic_group(2)
CHAIN2 = chain_semilattice(2)


def pairs_set(rel):
    return set(rel.pairs())


def test_left_equalizer_examples():
    assert pairs_set(left_equalizer(L2, 0)) == {(0, 0), (0, 1), (1, 0), (1, 1)}
    assert left_equalizer(CHAIN2, 1) == BinaryRelation.diagonal(2)
    assert left_equalizer(N2, 0) == BinaryRelation.full(2)


def test_right_equalizer_examples():
    assert right_equalizer(L2, 0) == BinaryRelation.diagonal(2)
    assert right_equalizer(N2, 1) == BinaryRelation.full(2)
    assert right_equalizer(Z2, 0) == BinaryRelation.diagonal(2)


def test_equalizers_match_naive_kernels():
    for s in oracles.corpus_up_to(3):
        for a in range(s.n):
            assert pairs_set(left_equalizer(s, a)) == oracles.left_kernel_pairs(s, a)
            assert pairs_set(right_equalizer(s, a)) == oracles.right_kernel_pairs(s, a)


def test_equalizers_are_equivalences():
    for s in oracles.corpus_up_to(3):
        for a in range(s.n):
            assert left_equalizer(s, a).is_equivalence()
            assert right_equalizer(s, a).is_equivalence()


def test_translate_left_examples():
    assert pairs_set(translate_left(L2, 1, BinaryRelation.diagonal(2))) == {(1, 1)}
    assert translate_left(L2, 0, BinaryRelation.empty(2)) == BinaryRelation.empty(2)
    assert pairs_set(
        translate_left(Z2, 1, BinaryRelation.from_pairs(2, [(0, 1)]))
    ) == {(1, 0)}


def test_translate_right_examples():
    assert pairs_set(
        translate_right(L2, BinaryRelation.from_pairs(2, [(0, 1)]), 0)
    ) == {(0, 1)}
    assert pairs_set(translate_right(N2, BinaryRelation.full(2), 0)) == {(0, 0)}
    assert translate_right(Z2, BinaryRelation.empty(2), 1) == BinaryRelation.empty(2)


def test_translation_monotonicity_laws():
    # the four inclusion laws between equalizers of b, a, and a*b
    for s in oracles.corpus_up_to(3):
        for a in range(s.n):
            for b in range(s.n):
                ab = s.mul(a, b)
                assert left_equalizer(s, b) <= left_equalizer(s, ab)
                assert right_equalizer(s, a) <= right_equalizer(s, ab)
                assert translate_left(s, b, left_equalizer(s, ab)) <= left_equalizer(s, a)
                assert translate_right(s, right_equalizer(s, ab), a) <= right_equalizer(s, b)


def test_admissibility_full_relation_on_commutative():
    for s in (CHAIN2, N2, Z2, chain_semilattice(3)):
        rep = check_admissibility(s, BinaryRelation.full(s.n))
        assert rep.all_satisfied


def test_admissibility_diagonal_always():
    for s in oracles.corpus_up_to(3):
        assert check_admissibility(s, BinaryRelation.diagonal(s.n)).all_satisfied


def test_admissibility_full_on_left_zero_unbalanced():
    rep = check_admissibility(L2, BinaryRelation.full(2))
    assert not rep.balanced
    a, x, y = rep.balanced_witness
    assert a == 0
    # witness re-check: (x, y) sits in exactly one of the two meets
    in_left = (x, y) in (BinaryRelation.full(2) & left_equalizer(L2, a))
    in_right = (x, y) in (BinaryRelation.full(2) & right_equalizer(L2, a))
    assert in_left != in_right


def test_admissibility_witnesses_recheck():
    # scan small tables with assorted relations and re-check every witness
    rels = lambda n: (
        BinaryRelation.diagonal(n),
        BinaryRelation.full(n),
        BinaryRelation.from_pairs(n, [(0, 0)]),
    )
    for s in oracles.corpus_up_to(2):
        for rel in rels(s.n):
            rep = check_admissibility(s, rel)
            naive = oracles.naive_admissibility(s, pairs_set(rel))
            assert (rep.balanced, rep.left_stable, rep.right_stable) == naive
            if not rep.left_stable:
                a, b, x, y = rep.left_witness
                ab = s.mul(a, b)
                assert (x, y) in (rel & left_equalizer(s, ab))
                assert not rel.has(s.mul(b, x), s.mul(b, y))
            if not rep.right_stable:
                a, b, x, y = rep.right_witness
                ab = s.mul(a, b)
                assert (x, y) in (rel & right_equalizer(s, ab))
                assert not rel.has(s.mul(x, a), s.mul(y, a))


def test_canonical_relation_examples():
    # commutativity makes every pair context independent
    for s in (CHAIN2, N2, Z2, chain_semilattice(3)):
        assert canonical_relation(s) == BinaryRelation.full(s.n)
    assert canonical_relation(L2) == BinaryRelation.diagonal(2)
    assert pairs_set(canonical_relation(validate([[0]]))) == {(0, 0)}


def test_canonical_relation_matches_naive_oracle():
    for s in oracles.corpus_up_to(3):
        assert pairs_set(canonical_relation(s)) == oracles.naive_canonical_relation(s)


def test_canonical_relation_reflexive_symmetric():
    for s in oracles.corpus_up_to(3):
        rel = canonical_relation(s)
        assert rel.is_reflexive()
        assert rel.is_symmetric()


def test_canonical_relation_always_balanced():
    for s in oracles.corpus_up_to(3):
        assert check_admissibility(s, canonical_relation(s)).balanced


def test_canonical_relation_stable_on_quasi_separative():
    from finsemi import enumerate_labeled, is_quasi_separative

    unstable_elsewhere = 0
    tables = oracles.corpus_up_to(3) + list(enumerate_labeled(4))
    for s in tables:
        rep = check_admissibility(s, canonical_relation(s))
        if is_quasi_separative(s)[0]:
            assert rep.all_satisfied
        elif not (rep.left_stable and rep.right_stable):
            unstable_elsewhere += 1
    # stability can fail off the quasi-separative class; that is data,
    # not an error (observed count at these orders: zero)
    print(f"non-quasi-separative stability failures at order <= 4: {unstable_elsewhere}")


def test_meet_monotone_under_admissible_relations():
    # rel meet the left equalizer of a is inside the meet for a*b and b*a
    from finsemi import admissible_candidates

    for s in oracles.corpus_up_to(3):
        for _, rel in admissible_candidates(s):
            for a in range(s.n):
                base = rel & left_equalizer(s, a)
                for b in range(s.n):
                    assert base <= (rel & left_equalizer(s, s.mul(a, b)))
                    assert base <= (rel & left_equalizer(s, s.mul(b, a)))


def test_relation_format_roundtrip():
    rel = BinaryRelation.from_pairs(3, [(0, 1), (2, 2), (1, 0)])
    assert parse_relation(format_relation(rel), 3) == rel
    assert parse_relation("# nothing\n", 2) == BinaryRelation.empty(2)


def test_relation_parse_errors():
    with pytest.raises(FormatError):
        parse_relation("0 1 2\n", 3)
    with pytest.raises(FormatError):
        parse_relation("0 x\n", 3)
    with pytest.raises(FormatError):
        parse_relation("0 7\n", 3)


def test_relation_constructors_reject_bad_input():
    with pytest.raises(ValueError):
        BinaryRelation.from_pairs(2, [(0, 2)])
    with pytest.raises(ValueError):
        BinaryRelation(2, (0b100, 0))
    with pytest.raises(ValueError):
        BinaryRelation.full(2) & BinaryRelation.full(3)


@settings(max_examples=100, deadline=None)
@given(
    n=st.integers(1, 6),
    data=st.data(),
)
def test_relation_algebra_laws(n, data):
    mask = st.integers(0, (1 << n) - 1)
    r1 = BinaryRelation(n, data.draw(st.tuples(*[mask] * n)))
    r2 = BinaryRelation(n, data.draw(st.tuples(*[mask] * n)))
    meet = r1 & r2
    assert meet <= r1 and meet <= r2
    assert r1 <= (r1 | r2)
    assert len(meet) + len(r1 | r2) == len(r1) + len(r2)
    assert list(meet.pairs()) == sorted(pairs_set(r1) & pairs_set(r2))


def test_restrict():
    rel = BinaryRelation.full(3).restrict([0, 2])
    assert pairs_set(rel) == {(0, 0), (0, 2), (2, 0), (2, 2)}
