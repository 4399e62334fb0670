"""The presentation-file format: parsing, printing, building, diagnostics."""

import importlib.resources

import pytest

from hopfcyc import dsl
from hopfcyc.core import Generator
from hopfcyc.errors import ParseError, SemanticError, TerminationOrderError
from hopfcyc.instances import build_h1cop


def shipped_text() -> str:
    return (
        importlib.resources.files("hopfcyc") / "data" / "h1cop.hopf"
    ).read_text(encoding="utf-8")


def test_shipped_file_round_trips():
    text = shipped_text()
    ast = dsl.parse(text)
    assert dsl.parse(dsl.print_file(ast)) == ast
    # the shipped file is already in canonical form
    assert dsl.print_file(ast) == text


def test_shipped_file_builds_h1cop():
    ast = dsl.parse(shipped_text())
    built = dsl.build_hopf(ast.hopfs[0])
    assert dsl.hopf_equivalent(built, build_h1cop())
    # the commutator extension reproduces derived entries
    ref = build_h1cop()
    for k in (2, 3):
        g = Generator("d", k)
        assert built.gen_antipode(g) == ref.gen_antipode(g)
        assert built.gen_coproduct(g).terms == ref.gen_coproduct(g).terms


def test_built_presentation_passes_axioms():
    ast = dsl.parse(shipped_text())
    h = dsl.build_hopf(ast.hopfs[0])
    assert h.verify_hopf_axioms(degree=2, index_bound=2)["ok"]


def test_empty_file_is_empty_graph():
    assert dsl.parse("") == dsl.FileAST(())
    assert dsl.parse("# only a comment\n") == dsl.FileAST(())


def test_degree_increasing_rule_rejected():
    text = "hopf t { generators X; rule X -> X X; }"
    with pytest.raises(TerminationOrderError):
        dsl.build_file(dsl.parse(text))


def test_parse_error_carries_location():
    with pytest.raises(ParseError) as exc:
        dsl.parse("hopf t {\n  generators X\n}")
    assert exc.value.line == 3
    assert exc.value.column is not None


def test_unknown_generator_rejected():
    with pytest.raises(ParseError):
        dsl.parse("hopf t { generators X; rule X Z -> X; }")


def test_nonconcrete_structure_map_rejected():
    with pytest.raises(SemanticError):
        dsl.parse("hopf t { generators d[] < X; antipode X -> d[k]; }")


def test_unknown_statement_rejected():
    with pytest.raises(ParseError):
        dsl.parse("hopf t { generators X; frobnicate X; }")


def test_guarded_rule_round_trip():
    text = (
        "hopf t {\n"
        "  generators d[] < Y;\n"
        "  rule d[k] d[i] -> d[i] d[k] when k > i;\n"
        "  rule Y d[k] -> d[k] Y + k d[k];\n"
        "  coproduct Y -> Y(x)1 + 1(x)Y;\n"
        "  counit Y -> 0;\n"
        "  antipode Y -> -Y;\n"
        "}\n"
    )
    ast = dsl.parse(text)
    assert dsl.print_file(ast) == text
    rule = ast.hopfs[0].rules[0]
    assert rule.guard == ("k", ">", "i")


def test_fractional_coefficients():
    text = (
        "hopf t {\n"
        "  generators X;\n"
        "  coproduct X -> X(x)1 + 1(x)X;\n"
        "  counit X -> 1/2;\n"
        "  antipode X -> -1/3 X;\n"
        "}\n"
    )
    ast = dsl.parse(text)
    assert dsl.print_file(ast) == text
    from fractions import Fraction

    assert ast.hopfs[0].counits[0][1] == Fraction(1, 2)


def test_tokenizer_rejects_garbage():
    with pytest.raises(ParseError):
        dsl.parse("hopf t { generators X; @ }")
