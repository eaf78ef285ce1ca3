import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ratlink.errors import DomainError, NoCanonicalWord
from ratlink.frac import (
    ProjectiveRational,
    canonical_word,
    cf_eval,
    cf_expand,
    class_of_pair,
    classify,
    denominator_class,
    equivalent,
    format_word,
    is_canonical,
    parse_word,
    reverse_word,
)

words = st.lists(st.integers(-6, 6), min_size=1, max_size=7).map(tuple)
positive_words = st.lists(st.integers(1, 6), min_size=1, max_size=7).map(tuple)


INF = object()


def fraction_oracle(word):
    """Top-down evaluation with Fraction, carrying infinity explicitly."""
    acc = Fraction(word[-1])
    for a in reversed(word[:-1]):
        if acc is INF:
            acc = Fraction(a)
        elif acc == 0:
            acc = INF
        else:
            acc = a + 1 / acc
    return acc


@pytest.mark.parametrize("word, p, q", [
    ((3, 2), 7, 2),
    ((2, 0, 3), 5, 1),
    ((2, 1, 2), 8, 3),
    ((0,), 0, 1),
    ((1, 0), 1, 0),
    ((-3, 2), -5, 2),
])
def test_cf_eval_examples(word, p, q):
    assert cf_eval(word) == ProjectiveRational(p, q)


@given(words)
def test_cf_eval_matches_fraction_oracle(word):
    r = cf_eval(word)
    want = fraction_oracle(word)
    if want is INF:
        assert r.is_infinite
    else:
        assert Fraction(r.p, r.q) == want


@given(st.integers(0, 500), st.integers(1, 500))
def test_expand_then_eval_roundtrip(p, q):
    g = math.gcd(p, q)
    assert cf_eval(cf_expand(p, q)) == ProjectiveRational(p // g, q // g)


def test_projective_rational_rejects_unnormalized():
    with pytest.raises(ValueError):
        ProjectiveRational(4, 2)
    with pytest.raises(ValueError):
        ProjectiveRational(-1, 0)
    with pytest.raises(ValueError):
        ProjectiveRational.of(0, 0)
    assert ProjectiveRational.of(-2, 0) == ProjectiveRational(1, 0)
    assert ProjectiveRational.of(3, -6) == ProjectiveRational(-1, 2)


def test_classify_examples():
    hopf_chain = classify((2, 1, 2))
    assert (hopf_chain.p, hopf_chain.components, hopf_chain.crossing_number) == (8, 2, 5)
    unknot = classify((1,))
    assert (unknot.p, unknot.components, unknot.crossing_number) == (1, 1, 0)
    unlink = classify((0,))
    assert (unlink.p, unlink.components, unlink.crossing_number) == (0, 2, 0)
    assert classify((3, 2)).chiral_key == (7, 2)


def test_mirror_pair_24_42():
    a, b = classify((2, 4)), classify((4, 2))
    assert a.amphi_key == b.amphi_key == (9, 2)
    assert a.chiral_key != b.chiral_key
    assert a.mirror() == b
    assert not equivalent((2, 4), (4, 2))
    assert equivalent((2, 4), (4, 2), mirror_identified=True)


def test_empty_word_rejected():
    with pytest.raises(DomainError):
        classify(())
    with pytest.raises(DomainError):
        cf_eval(())


@given(words)
def test_class_invariants(word):
    cls = classify(word)
    if cls.p >= 2:
        assert 0 < cls.q_amphi <= cls.q_chiral < cls.p
        assert math.gcd(cls.q_chiral, cls.p) == 1
        assert cls.components == (1 if cls.p % 2 else 2)
    assert cls.amphi_rep().amphi_key == cls.amphi_key
    assert cls.mirror().mirror() == cls


@given(words)
def test_crossing_number_is_min_expansion_sum(word):
    cls = classify(word)
    if cls.p < 2:
        return
    reps = [x for x in range(1, cls.p) if math.gcd(x, cls.p) == 1
            and class_of_pair(cls.p, x).amphi_key == cls.amphi_key]
    assert cls.crossing_number == min(sum(cf_expand(cls.p, x)) for x in reps)
    assert cls.crossing_number <= sum(abs(a) for a in word)


@given(words)
def test_reversal_law(word):
    # reversing a word of odd length keeps the link; even length gives the mirror image
    a, b = classify(word), classify(reverse_word(word))
    assert a.amphi_key == b.amphi_key
    if len(word) % 2:
        assert a == b
    else:
        assert b == a.mirror()


def test_reversal_examples():
    assert equivalent((3, 2), (2, 3), mirror_identified=True)
    # 5_2 is chiral, and [2 3] is its mirror image
    assert not equivalent((3, 2), (2, 3))
    assert equivalent((3, 1, 2), (2, 1, 3))
    assert equivalent((5,), (5,))
    assert reverse_word((3, 1, 2)) == (2, 1, 3)


@settings(max_examples=300)
@given(st.lists(words, min_size=3, max_size=3))
def test_equivalence_relation(triple):
    for flag in (False, True):
        x, y, z = triple
        assert equivalent(x, x, flag)
        assert equivalent(x, y, flag) == equivalent(y, x, flag)
        if equivalent(x, y, flag) and equivalent(y, z, flag):
            assert equivalent(x, z, flag)


@pytest.mark.parametrize("p, q, word", [(7, 2, (3, 2)), (5, 1, (5,)), (8, 3, (2, 1, 2)), (9, 2, (4, 2))])
def test_canonical_word_examples(p, q, word):
    assert canonical_word(class_of_pair(p, q)) == word


@given(words)
def test_canonical_word_properties(word):
    cls = classify(word)
    if cls.p < 2:
        with pytest.raises(NoCanonicalWord):
            canonical_word(cls)
        return
    w = canonical_word(cls)
    assert is_canonical(w)
    assert sum(w) == cls.crossing_number
    assert classify(w).amphi_key == cls.amphi_key


@given(positive_words)
def test_canonical_length_bound(word):
    if is_canonical(word) and sum(word) >= 4:
        assert len(word) <= sum(word) - 2


@pytest.mark.parametrize("word, expected", [((3, 2), (3, 1)), ((2, 1, 2), (3, 1)), ((5,), (1, 0))])
def test_denominator_class(word, expected):
    assert denominator_class(word).chiral_key == expected


def test_parse_and_format():
    assert parse_word("3 2") == (3, 2)
    assert parse_word("[3, -1, 2]") == (3, -1, 2)
    assert parse_word("7/2") == (3, 2)
    assert parse_word("-7/2") == (-3, -2)
    assert parse_word("1/0") == (1, 0)
    assert format_word((3, -1, 2)) == "[3 -1 2]"
    for bad in ("", "a b", "[ ]", "0/0"):
        with pytest.raises(DomainError):
            parse_word(bad)


def test_is_canonical():
    assert is_canonical((2, 1, 2))
    assert not is_canonical((1, 2))
    assert not is_canonical((2, 0, 2))
    assert not is_canonical(())
