import itertools

import pytest

from cfckit import classify, perms, words
from cfckit.errors import NotReduced, RankTooLarge


def all_elements(rank):
    for p in itertools.permutations(range(1, rank + 2)):
        yield perms.word_from_permutation(p)


@pytest.mark.parametrize("method", classify.FC_METHODS)
def test_is_fc_examples(method):
    assert classify.is_fc((2, 1, 3, 2), 3, method).is_fc
    verdict = classify.is_fc((1, 4, 3, 5, 2, 1, 3, 4), 5, method)
    assert not verdict.is_fc
    assert verdict.witness is not None
    assert not classify.is_fc((3, 2, 1, 3), 3, method).is_fc


def test_fc_witness_payloads():
    v = classify.is_fc((3, 2, 1, 3), 3, "stembridge_scan")
    word, pos = tuple(v.witness["word"]), v.witness["position"]
    a, b, c = word[pos : pos + 3]
    assert a == c and abs(a - b) == 1
    assert word in words.reduced_expressions((3, 2, 1, 3), 3)

    v = classify.is_fc((3, 2, 1, 3), 3, "single_commutation_class")
    other = tuple(v.witness["word"])
    assert other in words.reduced_expressions((3, 2, 1, 3), 3)
    assert other not in words.commutation_class((3, 2, 1, 3), 3)

    v = classify.is_fc((3, 2, 1, 3), 3, "pattern_321")
    i, j, k = v.witness["positions"]
    p = perms.to_permutation((3, 2, 1, 3), 3)
    assert p[i - 1] > p[j - 1] > p[k - 1]


def test_is_fc_requires_reduced():
    with pytest.raises(NotReduced):
        classify.is_fc((1, 1), 2)


def test_is_cyclically_reduced_examples():
    assert classify.is_cyclically_reduced((3, 1, 2, 4, 5), 5)
    assert not classify.is_cyclically_reduced((3, 4, 2, 1, 3, 2), 4)
    assert classify.is_cyclically_reduced((), 2)


@pytest.mark.parametrize("method", classify.CFC_METHODS)
def test_is_cfc_examples(method):
    assert classify.is_cfc((1, 2, 4, 3), 4, method).is_cfc
    assert not classify.is_cfc((2, 1, 3, 2, 4), 4, method).is_cfc
    verdict = classify.is_cfc((2, 1, 3, 2), 3, method)
    assert not verdict.is_cfc
    assert verdict.witness is not None


def test_cfc_witness_payloads():
    v = classify.is_cfc((2, 1, 3, 2), 3, "support_once")
    assert v.witness["generator"] == 2
    p1, p2 = v.witness["positions"]
    assert ((2, 1, 3, 2)[p1], (2, 1, 3, 2)[p2]) == (2, 2)

    v = classify.is_cfc((2, 1, 3, 2), 3, "definition")
    shifted = tuple(v.witness["word"])
    expression = tuple(v.witness["expression"])
    k = v.witness["shifts"]
    rebuilt = expression
    for _ in range(k):
        rebuilt = words.cyclic_shift(rebuilt)
    assert rebuilt == shifted
    assert not words.is_reduced(shifted, 3) or not classify.is_fc(shifted, 3).is_fc

    v = classify.is_cfc((2, 1, 3, 2), 3, "pattern_321_3412")
    assert v.witness["kind"] in ("321", "3412")


@pytest.mark.parametrize("rank", [1, 2, 3, 4])
def test_three_way_agreement(rank):
    for w in all_elements(rank):
        fc = {m: classify.is_fc(w, rank, m).is_fc for m in classify.FC_METHODS}
        assert len(set(fc.values())) == 1, (w, fc)
        cfc = {m: classify.is_cfc(w, rank, m).is_cfc for m in classify.CFC_METHODS}
        assert len(set(cfc.values())) == 1, (w, cfc)


def test_negative_verdicts_always_carry_witnesses():
    for rank in (2, 3):
        for w in all_elements(rank):
            for m in classify.FC_METHODS:
                v = classify.is_fc(w, rank, m)
                assert v.is_fc or v.witness is not None
            for m in classify.CFC_METHODS:
                v = classify.is_cfc(w, rank, m)
                assert v.is_cfc or v.witness is not None


def test_enumerate_fc_counts_and_small_sets():
    assert classify.enumerate_fc(1) == frozenset({(), (1,)})
    assert [len(classify.enumerate_fc(n)) for n in (1, 2, 3, 4)] == [2, 5, 14, 42]


def test_enumerate_fc_matches_pattern_filter():
    for rank in (2, 3, 4):
        expected = {
            perms.word_from_permutation(p)
            for p in itertools.permutations(range(1, rank + 2))
            if not perms.contains_321(p)
        }
        assert classify.enumerate_fc(rank) == expected


def test_enumerate_cfc_thirteen_elements_of_rank_three():
    expected = {
        (), (1,), (2,), (3,),
        (1, 3), (1, 2), (2, 1), (2, 3), (3, 2),
        (1, 2, 3), (3, 2, 1), (1, 3, 2), (2, 1, 3),
    }
    assert classify.enumerate_cfc(3) == expected


def test_enumerate_cfc_matches_pattern_filter():
    for rank in (1, 2, 3, 4, 5):
        expected = {
            perms.word_from_permutation(p)
            for p in itertools.permutations(range(1, rank + 2))
            if not perms.contains_321(p) and not perms.contains_3412(p)
        }
        assert classify.enumerate_cfc(rank) == expected


def test_enumerate_coxeter():
    assert classify.enumerate_coxeter(1) == frozenset({(1,)})
    assert classify.enumerate_coxeter(2) == frozenset({(1, 2), (2, 1)})
    cox4 = classify.enumerate_coxeter(4)
    assert len(cox4) == 8
    expressions = set()
    for w in cox4:
        expressions |= words.reduced_expressions(w, 4)
    assert len(expressions) == 24


def test_cfc_subset_of_fc_and_coxeter_subset_of_cfc():
    for rank in range(1, 6):
        cfc = classify.enumerate_cfc(rank)
        assert cfc <= classify.enumerate_fc(rank)
        for w in classify.enumerate_coxeter(rank):
            assert w in cfc


def test_subexpressions_of_coxeter_elements_are_cfc():
    for rank in range(1, 6):
        for w in classify.enumerate_coxeter(rank):
            for size in range(len(w) + 1):
                for sub in itertools.combinations(w, size):
                    assert classify.is_cfc(sub, rank).is_cfc, (w, sub)


def test_rank_cap_guard():
    with pytest.raises(RankTooLarge):
        classify.enumerate_fc(10)
    with pytest.raises(RankTooLarge):
        classify.enumerate_cfc(4, max_rank=3)
