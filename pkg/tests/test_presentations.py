import math

import pytest
from hypothesis import given, strategies as st

from artinaut.presentations import (
    A, AffA, AffC, B, F4, I2, ArtinType, CoxeterMatrix, InvalidTypeError, Presentation,
    WordParseError, abelianization, artin_relations, coxeter_matrix, format_word, parse_word,
    presentation,
)

from conftest import words

ALL_TYPES = [make(n) for make in (A, B, AffA, AffC) for n in range(3, 9)] + \
    [I2(m) for m in range(3, 9)] + [F4]


def labels(M):
    return {(i, j): M.m(i, j) for i in range(1, M.n + 1) for j in range(i + 1, M.n + 1)}


def test_A3_matrix():
    assert labels(coxeter_matrix(A(3))) == {(1, 2): 3, (1, 3): 2, (2, 3): 3}


def test_B3_matrix():
    assert labels(coxeter_matrix(B(3))) == {(1, 2): 3, (1, 3): 2, (2, 3): 4}


def test_AffA2_is_triangle():
    assert labels(coxeter_matrix(AffA(3))) == {(1, 2): 3, (1, 3): 3, (2, 3): 3}


def test_AffA_cycle_wraps():
    M = coxeter_matrix(AffA(5))
    assert M.m(5, 1) == 3 and M.m(1, 3) == 2


def test_AffC_and_F4_labels():
    M = coxeter_matrix(AffC(5))
    assert M.m(1, 2) == 4 and M.m(4, 5) == 4 and M.m(2, 3) == 3 and M.m(1, 3) == 2
    assert labels(coxeter_matrix(F4)) == {(1, 2): 3, (1, 3): 2, (1, 4): 2, (2, 3): 4,
                                          (2, 4): 2, (3, 4): 3}


@pytest.mark.parametrize("family", ["A", "B", "AffA", "AffC", "I2"])
def test_small_parameters_rejected(family):
    with pytest.raises(InvalidTypeError):
        ArtinType(family, 2)


def test_type_tags_roundtrip():
    for t in ALL_TYPES:
        assert ArtinType.parse(t.tag) == t
    with pytest.raises(InvalidTypeError):
        ArtinType.parse("X:3")
    with pytest.raises(InvalidTypeError):
        ArtinType.parse("B3")


def test_matrix_invariants_enforced():
    with pytest.raises(ValueError):
        CoxeterMatrix(((1, 3), (2, 1)))
    with pytest.raises(ValueError):
        CoxeterMatrix(((2, 3), (3, 1)))
    with pytest.raises(ValueError):
        CoxeterMatrix(((1, 1), (1, 1)))


def test_infinite_label_gives_no_relation():
    M = CoxeterMatrix(((1, math.inf, 2), (math.inf, 1, 3), (2, 3, 1)))
    pres = artin_relations(M)
    assert pres.relations == (((1, 3), (3, 1)), ((2, 3, 2), (3, 2, 3)))


@pytest.mark.parametrize("m, rel", [
    (3, ((1, 2, 1), (2, 1, 2))),
    (2, ((1, 2), (2, 1))),
    (4, ((1, 2, 1, 2), (2, 1, 2, 1))),
])
def test_relation_shapes(m, rel):
    M = CoxeterMatrix(((1, m), (m, 1)))
    assert artin_relations(M).relations == (rel,)


@pytest.mark.parametrize("t", ALL_TYPES, ids=str)
def test_relation_count_and_lengths(t):
    M = coxeter_matrix(t)
    pres = presentation(t)
    finite = [(i, j) for (i, j), m in labels(M).items() if m != math.inf]
    assert len(pres.relations) == len(finite)
    for (u, v), (i, j) in zip(pres.relations, finite):
        assert len(u) == len(v) == M.m(i, j)
        assert set(u) == set(v) == {i, j}
        assert all(u[k] != u[k + 1] for k in range(len(u) - 1))


def test_coxeter_matrix_deterministic():
    assert coxeter_matrix(B(5)) == coxeter_matrix(B(5))


def test_parse_word_examples():
    assert parse_word("1 2 -1") == (1, 2, -1)
    assert parse_word("") == ()
    with pytest.raises(WordParseError, match="'0'"):
        parse_word("0")
    with pytest.raises(WordParseError, match="'x'"):
        parse_word("1 x")
    with pytest.raises(WordParseError, match="'-4'"):
        parse_word("1 -4", rank=3)


@given(words(6))
def test_codec_roundtrip(w):
    assert parse_word(format_word(w)) == w


def test_canonical_spacing():
    assert format_word(parse_word("3 -1 2")) == "3 -1 2"


def test_presentation_golden():
    text = presentation(B(3)).to_text()
    golden = (__import__("pathlib").Path(__file__).parent / "golden" / "presentation_B3.json")
    assert text == golden.read_text()
    assert Presentation.from_text(text) == presentation(B(3))


def test_abelianization_classes():
    assert abelianization(B(3), (1, 2, 3) * 3) == (6, 3)
    assert abelianization(I2(6), (1, 2) * 3) == (3, 3)
    assert abelianization(A(4), ()) == 0
    assert abelianization(B(4), ()) == (0, 0)
    assert abelianization(A(3), (1, -2, 3, 3)) == 2
    assert abelianization(AffC(4), (1, 2, 3, 4, -4)) == (2, 1)
