from collections import Counter

import pytest

from ratlink.errors import CatalogInconsistent, NotCanonical, Undefined
from ratlink.fertility import (
    Family,
    _canonical_words,
    branch_decompose,
    default_catalog,
    fertility_number,
    g,
    generate_rational_classes,
    is_fertile,
    load_catalog,
    load_families,
    rational_fertility_number,
    trunk,
    verify_local_fertility_threshold,
)
from ratlink.frac import canonical_word, class_of_pair, classify

# Rows whose listed fertility cannot be reproduced, with the computed value.
# Each is contradicted elsewhere in the same tables (see the families data).
DISPUTED = {"8_3": 4, "9_4": 5, "5^2_1": 5, "10/1": 4}
# Families whose printed pattern overlaps a lower-fertility family.
UNSTABLE = {"3* 2* 2*", "3* 2* 3* 2*"}


def test_catalog_loads_and_validates():
    cat = default_catalog()
    assert len(cat) == 151
    assert Counter(e.components for e in cat) == {1: 95, 2: 56}
    assert cat["5_2"].link_class.chiral_key == (7, 2)
    assert cat["5^2_1"].link_class.p == 8
    assert cat["2^2_1"].fertility == 2
    assert cat["8_9"].word == (3, 1, 1, 3)
    assert cat["10_8"].word == (5, 1, 4)
    for e in cat:
        assert sum(e.word) == e.crossing
        assert cat.find(e.link_class) is e


def test_catalog_rejects_bad_rows(tmp_path):
    header = "name,word,crossing,components,fertility\n"
    bad = tmp_path / "bad.csv"
    bad.write_text(header + "x,3 2 2 1 2,9,2,6\n")
    with pytest.raises(CatalogInconsistent):
        load_catalog(bad)
    bad.write_text(header + "a,3,3,1,3\na,2 2,4,1,4\n")
    with pytest.raises(CatalogInconsistent):
        load_catalog(bad)
    bad.write_text(header + "a,3 2,5,1,4\nb,2 3,5,1,4\n")
    with pytest.raises(CatalogInconsistent):
        load_catalog(bad)
    good = tmp_path / "good.csv"
    good.write_text("# comment\n" + header + "trefoil,3,3,1,\n")
    cat = load_catalog(good)
    assert cat["trefoil"].fertility is None


def test_catalog_fertility_numbers():
    for e in default_catalog():
        want = DISPUTED.get(e.name, e.fertility)
        assert fertility_number(e.word) == want, e.name


def test_disputed_rows_contradict_families():
    fams = {f.pattern: f for f in load_families()}
    assert (4, 4) in fams["2* 2*"].samples() and fams["2* 2*"].fertility == DISPUTED["8_3"]
    assert (4, 5) in fams["4* 3*"].samples() and fams["4* 3*"].fertility == DISPUTED["9_4"]
    assert fams["4*"].word([3]) == (10,) and fams["4*"].fertility == DISPUTED["10/1"]


@pytest.mark.parametrize("word, f", [((2, 2, 1, 2), 6), ((3,), 3), ((3, 2, 2, 1, 2), 7), ((2,), 2), ((4,), 4)])
def test_fertility_examples(word, f):
    assert fertility_number(word) == f


def test_fertility_trivial():
    with pytest.raises(Undefined):
        fertility_number((1,))
    with pytest.raises(Undefined):
        fertility_number((0,))


def test_fertility_uses_class_not_spelling():
    assert fertility_number((2, 3)) == fertility_number((3, 2))
    assert fertility_number((-3, -2)) == fertility_number((3, 2))
    # 4 - 1/2 = 7/2, the same link as [3 2]
    assert fertility_number((4, -2)) == fertility_number((3, 2))


def test_families():
    fams = load_families()
    assert len(fams) == 102
    for fam in fams:
        values = {fertility_number(w) for w in fam.samples((0, 1))}
        if fam.pattern in UNSTABLE:
            assert len(values) > 1
        else:
            assert len(values) == 1, fam.pattern


def test_family_samples():
    fam = Family((3, 1, 3), 4, ((3, True), (1, False), (3, True)))
    assert set(fam.samples((0, 1))) == {(3, 1, 3), (5, 1, 5), (5, 1, 3), (3, 1, 5)}
    assert {fertility_number(w) for w in fam.samples()} == {4}


@pytest.mark.parametrize("word, fertile", [
    ((2, 1, 1, 1, 2), False), ((2,), True), ((4,), True), ((2, 2, 1, 2), True),
    ((3,), True), ((7,), False), ((3, 3, 1, 1, 2), False),
])
def test_is_fertile(word, fertile):
    assert is_fertile(word) is fertile


def test_fertile_knots_list():
    fertile = sorted(default_catalog().name_of(c) for c in generate_rational_classes(8, 1)
                     if is_fertile(canonical_word(c)))
    assert fertile == sorted(["3_1", "4_1", "5_2", "6_2", "6_3", "7_6"])


@pytest.mark.parametrize("word", [(2, 2, 1, 1, 1, 1, 1, 2), (2, 2, 2, 2, 1, 2), (2, 1, 1, 2, 1, 1, 1, 2)])
def test_rational_fertility_eight(word):
    assert rational_fertility_number(word) == 8


def test_rational_fertility_small():
    assert rational_fertility_number((3,)) == 3
    for w in [(2, 2), (3, 2), (2, 2, 1, 2)]:
        assert rational_fertility_number(w, 7) == fertility_number(w)


def test_generate_rational_classes():
    knots = Counter(c.crossing_number for c in generate_rational_classes(7, 1))
    assert [knots[c] for c in range(3, 8)] == [1, 1, 2, 3, 7]
    links = Counter(c.crossing_number for c in generate_rational_classes(6, 2))
    assert [links[c] for c in (2, 4, 5, 6)] == [1, 1, 1, 3]
    assert generate_rational_classes(4, 1) == {class_of_pair(3, 1), class_of_pair(5, 2)}
    # two-bridge counts continue to match standard tables one step further
    more = Counter(c.crossing_number for c in generate_rational_classes(8, None))
    assert more[8] == 12 + 8


def test_trunks():
    assert trunk(1).members == ((2,), (3,))
    assert set(trunk(3).members) == {(2, 1, 2), (2, 2, 2), (3, 1, 2), (3, 2, 2), (3, 1, 3), (3, 2, 3)}
    assert len(trunk(4).with_components(1)) == 7
    assert len(trunk(5).with_components(1)) == 12
    assert len(trunk(5).with_components(2)) == 8
    assert len(trunk(6).with_components(1)) == 24
    assert len(trunk(6).with_components(2)) == 12
    for length in range(1, 9):
        t = trunk(length)
        assert len(t.members) <= 3 * 2 ** (length - 1)
        keys = {classify(w).amphi_key for w in t.members}
        assert len(keys) == len(t.members)
        for w in t.members:
            assert (w[0], w[-1]) in {(2, 2), (3, 2), (3, 3)}
            assert all(a in (1, 2) for a in w[1:-1])
            assert sum(w) <= 2 * length + 2
            # the lower bound length + 2 needs two end tangles; [2] has one
            assert length + 2 <= sum(w) or w == (2,)


def test_g():
    assert g(5, 2) == 6
    assert g(5, 1) == 5
    assert g(1, 1) == 3
    assert g(1, 2) == 2
    assert g(2, 2) == 5


@pytest.mark.parametrize("word, parent, offsets", [
    ((5, 2), (3, 2), (1, 0)),
    ((2, 4), (2, 2), (0, 1)),
    ((3, 3, 1, 3), (3, 1, 1, 3), (0, 1, 0, 0)),
    ((7,), (3,), (2,)),
])
def test_branch_decompose(word, parent, offsets):
    assert branch_decompose(word) == (parent, offsets)


def test_branch_decompose_rejects():
    with pytest.raises(NotCanonical):
        branch_decompose((1, 2))


def test_local_threshold_reports():
    links = verify_local_fertility_threshold(2, 6)
    assert links.passed and links.k == 6
    assert (2, 1, 1, 1, 1, 2) in [w for w, _, _ in links.results]
    small = verify_local_fertility_threshold(1, 4)
    assert not small.passed
    assert small.failures


def test_local_threshold_knots():
    report = verify_local_fertility_threshold(1, 10)
    assert report.passed
    assert (2,) + (1,) * 8 + (2,) in [w for w, _, _ in report.results]


def test_local_fertility_boundary():
    for c in range(4, 13):
        for w in _canonical_words(c):
            cls = classify(w)
            if cls.components == 2 and len(w) >= 4:
                assert fertility_number(w) == 6, w
            if cls.components == 1 and len(w) >= 8:
                assert fertility_number(w) == 7, w


@pytest.mark.slow
def test_long_knots_boundary():
    for c in range(13, 15):
        for w in _canonical_words(c):
            if len(w) >= 8 and classify(w).components == 1:
                assert fertility_number(w) == 7, w


def test_heredity_of_fertility():
    for c in range(2, 10):
        for w in _canonical_words(c):
            f = fertility_number(w)
            for i in range(len(w)):
                assert fertility_number(w[:i] + (w[i] + 2,) + w[i + 1:]) >= f


def test_infertile_from_eight_crossings():
    for c in range(8, 12):
        assert not any(is_fertile(w) for w in _canonical_words(c))
