"""Document parsing and canonical emission."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from combings.document import (
    CombingDoc,
    Document,
    FramedDoc,
    emit_document,
    format_rational,
    parse_document,
    parse_rational,
)
from combings.errors import ParseError


class TestRationals:
    def test_parse(self):
        assert parse_rational("-4/3") == Fraction(-4, 3)
        assert parse_rational("2") == Fraction(2)

    def test_canonical_format(self):
        assert format_rational(Fraction(-4, 3)) == "-4/3"
        assert format_rational(Fraction(4, 2)) == "2"

    def test_rejects_garbage(self):
        for bad in ("1/0", "1.5", "a", "", "1/-2", None, 2):
            with pytest.raises(ParseError):
                parse_rational(bad)


class TestParse:
    def test_minimal(self):
        doc = parse_document('{"linking_matrix": []}')
        assert doc.linking_matrix == ()

    def test_full(self):
        text = """
        {"linking_matrix": [[2]],
         "combing": {"c": [0], "gamma": 1},
         "combing2": {"c": [4], "gamma": -1},
         "meridian": [1],
         "framed": {"lambda_matrix": [["-1/2"]], "classes": [[1]]},
         "lambda": "1/12"}
        """
        doc = parse_document(text)
        assert doc.combing == CombingDoc(c=(0,), gamma=1)
        assert doc.combing2 == CombingDoc(c=(4,), gamma=-1)
        assert doc.meridian == (1,)
        assert doc.framed == FramedDoc(
            lambda_matrix=((Fraction(-1, 2),),), classes=((1,),)
        )
        assert doc.casson_walker == Fraction(1, 12)

    def test_bad_json(self):
        with pytest.raises(ParseError):
            parse_document("not json")

    def test_unknown_key(self):
        with pytest.raises(ParseError):
            parse_document('{"linking_matrix": [], "surprise": 1}')

    def test_missing_matrix(self):
        with pytest.raises(ParseError):
            parse_document('{"combing": {"c": [], "gamma": 0}}')

    def test_nonsquare(self):
        with pytest.raises(ParseError):
            parse_document('{"linking_matrix": [[1, 2]]}')

    def test_nonsymmetric(self):
        with pytest.raises(ParseError):
            parse_document('{"linking_matrix": [[1, 2], [3, 4]]}')

    def test_non_integer_entries(self):
        with pytest.raises(ParseError):
            parse_document('{"linking_matrix": [[1.5]]}')
        with pytest.raises(ParseError):
            parse_document('{"linking_matrix": [[true]]}')

    def test_bad_combing(self):
        with pytest.raises(ParseError):
            parse_document('{"linking_matrix": [], "combing": {"c": []}}')
        with pytest.raises(ParseError):
            parse_document(
                '{"linking_matrix": [], "combing": {"c": [], "gamma": 0, "x": 1}}'
            )

    def test_bad_framed_rational(self):
        with pytest.raises(ParseError):
            parse_document(
                '{"linking_matrix": [], "framed": {"lambda_matrix": [[0.5]]}}'
            )


rationals = st.fractions(
    min_value=-9, max_value=9, max_denominator=6
)


@st.composite
def documents(draw):
    n = draw(st.integers(0, 3))
    matrix = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            matrix[i][j] = matrix[j][i] = draw(st.integers(-5, 5))
    combing = None
    if draw(st.booleans()):
        combing = CombingDoc(
            c=tuple(draw(st.integers(-5, 5)) for _ in range(n)),
            gamma=draw(st.integers(-3, 3)),
        )
    framed = None
    if draw(st.booleans()):
        k = draw(st.integers(0, 2))
        lam = [[Fraction(0)] * k for _ in range(k)]
        for i in range(k):
            for j in range(i, k):
                lam[i][j] = lam[j][i] = draw(rationals)
        framed = FramedDoc(
            lambda_matrix=tuple(tuple(row) for row in lam), classes=None
        )
    return Document(
        linking_matrix=tuple(tuple(row) for row in matrix),
        combing=combing,
        framed=framed,
        casson_walker=draw(rationals) if draw(st.booleans()) else None,
    )


class TestRoundTrip:
    @given(documents())
    @settings(deadline=None)
    def test_emit_parse_emit(self, doc):
        text = emit_document(doc)
        assert emit_document(parse_document(text)) == text

    def test_canonical_bytes(self):
        text = (
            '{"linking_matrix": [[2]], "combing": {"c": [0], "gamma": 1},'
            ' "lambda": "2/4"}'
        )
        once = emit_document(parse_document(text))
        twice = emit_document(parse_document(once))
        assert once == twice
        assert '"1/2"' in once  # rationals are canonicalized
