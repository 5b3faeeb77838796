import pytest

from kgnet.errors import TermError, TripleSyntaxError
from kgnet.rdf import (
    IRI,
    BlankNode,
    Literal,
    Triple,
    format_triples,
    parse_term,
    parse_triples,
)

EX = "http://ex/"


def test_iri_triple():
    [t] = parse_triples("<http://ex/a> <http://ex/author_of> <http://ex/w1> .")
    assert t == Triple(IRI(EX + "a"), IRI(EX + "author_of"), IRI(EX + "w1"))


def test_blank_subject_literal_object():
    [t] = parse_triples('_:b1 <http://ex/sex> "female" .')
    assert t == Triple(BlankNode("b1"), IRI(EX + "sex"), Literal("female"))
    assert t.subject.kind == "Blank" and t.object.kind == "Literal"


def test_triple_term_object():
    [t] = parse_triples(
        "<http://ex/x> <http://ex/says> << <http://ex/a> <http://ex/cites> <http://ex/b> >> ."
    )
    assert t.object == Triple(IRI(EX + "a"), IRI(EX + "cites"), IRI(EX + "b"))
    assert t.object.kind == "TripleTerm"
    assert t.depth() == 2


def test_nested_triple_terms():
    text = "<http://ex/y> <http://ex/d> << <http://ex/x> <http://ex/s> << _:q <http://ex/c> \"v\" >> >> ."
    [t] = parse_triples(text)
    assert t.depth() == 3
    assert t.object.object.subject == BlankNode("q")


def test_duplicates_removed_in_order():
    text = "\n".join([
        "<http://ex/a> <http://ex/p> <http://ex/b> .",
        "# comment",
        "",
        "<http://ex/c> <http://ex/p> <http://ex/d> .",
        "<http://ex/a>   <http://ex/p>\t<http://ex/b>  .",
    ])
    ts = parse_triples(text)
    assert [t.subject.value for t in ts] == [EX + "a", EX + "c"]


def test_literal_escapes_round_trip():
    [t] = parse_triples(r'<http://ex/a> <http://ex/t> "say \"hi\" \\ ok" .')
    assert t.object.lexical == 'say "hi" \\ ok'
    assert parse_triples(format_triples([t])) == [t]


def test_dot_without_space():
    assert len(parse_triples("<http://ex/a> <http://ex/p> <http://ex/b>.")) == 1


@pytest.mark.parametrize(
    "line, column, fragment",
    [
        ('"x" <http://ex/p> <http://ex/b> .', 1, "subject"),
        ('<http://ex/a> "p" <http://ex/b> .', 15, "predicate"),
        ("<http://ex/a> _:p <http://ex/b> .", 15, "predicate"),
        ("<http://ex/a> <http://ex/p> <http://ex/b>", 42, "'.'"),
        ("<http://ex/a> <http://ex/p> <http://ex/b> . junk", 45, "after"),
        ("<a> <http://ex/p> <http://ex/b> .", 1, "absolute"),
        ('<http://ex/a> <http://ex/p> "open .', 29, "unterminated"),
        ("<http://ex/a> <http://ex/p> << <http://ex/a> <http://ex/p> <http://ex/b> .", 74, "'>>'"),
        ("<http://ex/a> <http://ex/p> ?x .", 29, "unexpected"),
    ],
)
def test_syntax_errors_report_position(line, column, fragment):
    with pytest.raises(TripleSyntaxError) as exc:
        parse_triples("# header\n" + line)
    assert exc.value.line == 2
    assert exc.value.column == column
    assert fragment in str(exc.value)


def test_literal_subject_inside_triple_term():
    with pytest.raises(TripleSyntaxError, match="subject"):
        parse_triples('<http://ex/a> <http://ex/p> << "x" <http://ex/p> <http://ex/b> >> .')


def test_triple_constructor_validates_kinds():
    with pytest.raises(TermError):
        Triple(Literal("x"), IRI(EX + "p"), IRI(EX + "b"))
    with pytest.raises(TermError):
        Triple(IRI(EX + "a"), BlankNode("p"), IRI(EX + "b"))
    with pytest.raises(TermError):
        IRI("relative")


def test_blank_scopes_separate_documents():
    a = parse_triples('_:b <http://ex/p> "1" .', scope="doc1")
    b = parse_triples('_:b <http://ex/p> "1" .', scope="doc2")
    assert a != b
    assert a == parse_triples('_:b <http://ex/p> "1" .', scope="doc1")


def test_parse_term():
    assert parse_term("<http://ex/a>") == IRI(EX + "a")
    assert parse_term('"x y"') == Literal("x y")
    assert parse_term("_:n1") == BlankNode("n1")


def test_accepts_line_iterables(fixtures_dir):
    with open(fixtures_dir / "biblio.nt", encoding="utf-8") as fh:
        assert len(parse_triples(fh)) == 25
