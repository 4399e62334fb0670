"""Rewriting: normal forms, termination order, confluence diagnostics."""

import random

import pytest

from hopfcyc.core import Generator
from hopfcyc.errors import RewriteLimitError, TerminationOrderError
from hopfcyc.rewrite import (
    ConcreteRule,
    IndexExpr,
    LetterPat,
    Presentation,
    RuleSet,
    SchemaRule,
    validate_ruleset,
)

X, Y = Generator("X"), Generator("Y")


def d(k):
    return Generator("d", k)


def test_single_step_normal_forms(h1cop):
    # hand-computed one-step reductions of each defining relation
    assert h1cop.from_word((X, d(1))) == h1cop.elt({(d(1), X): 1, (d(2),): 1})
    assert h1cop.from_word((Y, d(3))) == h1cop.elt({(d(3), Y): 1, (d(3),): 3})
    assert h1cop.from_word((X, Y)) == h1cop.elt({(Y, X): 1, (X,): -1})
    assert h1cop.from_word((d(2), d(1))) == h1cop.elt({(d(1), d(2)): 1})
    # guarded rule does not fire on an already sorted pair
    assert h1cop.from_word((d(1), d(2))) == h1cop.elt({(d(1), d(2)): 1})


def test_two_step_normal_form(h1cop):
    # X X d[1]: reduce innermost first by hand:
    # X (d[1] X + d[2]) = (d[1] X + d[2]) X + d[2] X + d[3]
    expected = h1cop.elt({(d(1), X, X): 1, (d(2), X): 2, (d(3),): 1})
    assert h1cop.from_word((X, X, d(1))) == expected


def test_normal_words_are_irreducible(h1cop):
    for w in h1cop.normal_words(3, 2):
        assert h1cop.from_word(w) == h1cop.elt({w: 1})


def test_normalization_idempotent_random(h1cop):
    rng = random.Random(424242)
    letters = h1cop.letters(3)
    for _ in range(30):
        w = tuple(rng.choice(letters) for _ in range(rng.randint(0, 5)))
        nf = h1cop.from_word(w)
        renf = h1cop.zero()
        for word, c in nf.terms.items():
            renf = renf + h1cop.from_word(word).scale(c)
        assert renf == nf


def test_validate_ruleset_confluence(h1cop):
    diag = validate_ruleset(h1cop.ruleset, index_bound=3, max_degree=3)
    assert diag.ok, diag


def test_termination_order_violation_rejected():
    rs = RuleSet([ConcreteRule((X, Y), {(Y, X, X): 1})], ("Y", "X"))
    with pytest.raises(TerminationOrderError):
        rs.check_all(index_bound=2)


def test_schema_rule_str_round():
    rule = SchemaRule(
        [LetterPat("X"), LetterPat("d", IndexExpr.parse("k"))],
        [(1, (LetterPat("d", IndexExpr.parse("k")), LetterPat("X"))),
         (1, (LetterPat("d", IndexExpr.parse("k+1")),))],
    )
    assert str(rule) == "X d[k] -> d[k] X + d[k+1]"


def test_step_limit_guard(monkeypatch):
    monkeypatch.setenv("HOPFCYC_STEP_LIMIT", "3")
    from hopfcyc.instances import build_h1cop

    h = build_h1cop()
    with pytest.raises(RewriteLimitError):
        h.from_word((X, X, X, d(1), d(1)))


def test_index_expr_parse_and_value():
    e = IndexExpr.parse("k+2")
    assert e.value({"k": 3}) == 5
    assert IndexExpr.parse("7").value({}) == 7
    assert str(IndexExpr.parse("k+1")) == "k+1"


def test_finite_basis_presentation(swap_cmod):
    h = swap_cmod.hopf  # group algebra of Z/2
    assert sorted(map(str, h.basis_elts())) == ["1", "g"]
    g = h.gen("g")
    assert g * g == h.unit()
