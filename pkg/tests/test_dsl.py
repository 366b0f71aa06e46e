import pytest

from mvspectra.algebras import Chain, Chang, Lex, LexElem, Product, build, format_element, format_expr
from mvspectra.dsl import ParseError, SemanticError, parse, parse_algebra
from mvspectra.filters import all_filters, format_filter, zero_set
from mvspectra.verify import CATALOG


def test_parse_algebra():
    assert parse("algebra", "product[chain:2,lex:2]") == Product([Chain(2), Lex(2)])
    assert parse("algebra", " product [ chang , chain : 3 ] ") == Product([Chang(), Chain(3)])


def test_parse_element():
    L = build(Lex(2))
    assert parse("element", "coinf[1,0]", L) == LexElem(1, (1, 0))
    P = parse_algebra("product[chain:2,chang]")
    assert parse("element", "( 2 , inf[ 4 ] )", P) == (2, LexElem(0, (4,)))


def test_parse_filter():
    L = build(Lex(3))
    assert parse("filter", "m{1,3}", L) == zero_set(L, {1, 3})
    with pytest.raises(SemanticError):
        parse("filter", "m{4}", L)


@pytest.mark.parametrize("kind,text,ctx", [
    ("filter", "rad", "product[chain:1,chain:1]"),
    ("filter", "gen{inf[1]}", "chang"),
    ("filter", "pull{1;one}", "lex:2"),
    ("filter", "pull{3;one}", "product[chain:1,chain:1]"),
    ("element", "3", "chain:2"),
    ("element", "inf[1]", "lex:2"),
    ("element", "(1,1,1)", "product[chain:1,chain:1]"),
    ("element", "(1)", "product[chain:1,chain:1]"),
    ("element", "1", "lex:2"),
    ("algebra", "chain:0", None),
])
def test_semantic_errors(kind, text, ctx):
    with pytest.raises(SemanticError):
        parse(kind, text, parse_algebra(ctx) if ctx else None)


def test_parse_error_offset_and_expected():
    with pytest.raises(ParseError) as e:
        parse("algebra", "product[chain:2 lex:2]")
    assert e.value.offset == 16
    assert e.value.expected == {"','", "']'"}
    with pytest.raises(ParseError) as e:
        parse("filter", "m{1,}", build(Lex(2)))
    assert e.value.offset == 4 and e.value.expected == {"INT"}
    with pytest.raises(ParseError) as e:
        parse("algebra", "lex:2 junk")
    assert e.value.expected == {"end of input"}
    with pytest.raises(ParseError) as e:
        parse("algebra", "lex:2 $")
    assert e.value.offset == 6


def test_context_required():
    with pytest.raises(ValueError):
        parse("filter", "one")
    with pytest.raises(ValueError):
        parse("widget", "one", build(Chain(1)))


@pytest.mark.parametrize("text", CATALOG)
def test_round_trips(text):
    A = parse_algebra(text)
    assert format_expr(parse("algebra", format_expr(A.expr))) == format_expr(A.expr)
    for F in all_filters(A):
        lit = format_filter(F)
        assert parse("filter", lit, A) == F
        assert format_filter(parse("filter", lit, A)) == lit
    for x in A.elements(2):
        lit = format_element(x)
        assert parse("element", lit, A) == x
