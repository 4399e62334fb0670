"""Text format for Hopf presentations.

A presentation file declares generator families with their precedence,
rewrite rules (concrete or index-parametric), the structure-map tables on
generators, and optional commutator extensions for indexed families:

    hopf h1cop {
      generators d[] < Y < X;
      rule X d[k] -> d[k] X + d[k+1];
      coproduct X -> X(x)1 + 1(x)X + Y(x)d[1];
      counit X -> 0;
      antipode X -> -X + Y d[1];
      inverse X -> -X + d[1] Y;
      extend d by commutator X;
    }

Parsing produces a small AST that prints back to canonical text
(parse of print is the identity on the AST) and builds into a
HopfPresentation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from .core import Generator, ONE, Word, tensor
from .errors import ParseError, SemanticError, TerminationOrderError
from .hopf import HopfPresentation
from .rewrite import ConcreteRule, IndexExpr, LetterPat, RuleSet, SchemaRule

KEYWORDS = {
    "hopf",
    "generators",
    "rule",
    "coproduct",
    "counit",
    "antipode",
    "inverse",
    "extend",
    "by",
    "commutator",
    "when",
}

SYMBOLS = ("->", "(x)", "{", "}", ";", "[", "]", "<", ">", "+", "-", "/", ",")


@dataclass(frozen=True)
class Token:
    kind: str  # ident, int, symbol, eof
    text: str
    line: int
    col: int


def tokenize(text: str) -> List[Token]:
    toks = []
    line, col, i = 1, 1, 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        matched = None
        for sym in SYMBOLS:
            if text.startswith(sym, i):
                matched = sym
                break
        if matched:
            toks.append(Token("symbol", matched, line, col))
            i += len(matched)
            col += len(matched)
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(Token("int", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(Token("ident", text[i:j], line, col))
            col += j - i
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r}", line=line, column=col)
    toks.append(Token("eof", "", line, col))
    return toks


# -- abstract syntax ----------------------------------------------------------


@dataclass(frozen=True)
class RuleAST:
    lhs: Tuple[LetterPat, ...]
    rhs: Tuple[tuple, ...]  # (coeff: Fraction | var name, Tuple[LetterPat, ...])
    guard: Optional[tuple] = None


@dataclass(frozen=True)
class HopfAST:
    name: str
    families: Tuple[tuple, ...]  # (name, indexed) in precedence order
    rules: Tuple[RuleAST, ...]
    coproducts: Tuple[tuple, ...]  # (Generator, Tuple[(coeff, Word, Word)])
    counits: Tuple[tuple, ...]  # (Generator, Fraction)
    antipodes: Tuple[tuple, ...]  # (Generator, Tuple[(coeff, Word)])
    inverses: Tuple[tuple, ...]
    extends: Tuple[tuple, ...]  # (family name, anchor Generator)


@dataclass(frozen=True)
class FileAST:
    hopfs: Tuple[HopfAST, ...]


class Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.pos = 0

    def peek(self) -> Token:
        return self.toks[self.pos]

    def next(self) -> Token:
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def fail(self, msg: str):
        t = self.peek()
        raise ParseError(msg, line=t.line, column=t.col)

    def expect(self, kind: str, text: Optional[str] = None) -> Token:
        t = self.peek()
        if t.kind != kind or (text is not None and t.text != text):
            want = text or kind
            self.fail(f"expected {want!r}, found {t.text or 'end of input'!r}")
        return self.next()

    def at_symbol(self, text: str) -> bool:
        t = self.peek()
        return t.kind == "symbol" and t.text == text

    # -- grammar --------------------------------------------------------------

    def parse_file(self) -> FileAST:
        hopfs = []
        while self.peek().kind != "eof":
            t = self.peek()
            if t.kind == "ident" and t.text == "hopf":
                hopfs.append(self.parse_hopf())
            else:
                self.fail("expected a 'hopf' section")
        return FileAST(tuple(hopfs))

    def parse_hopf(self) -> HopfAST:
        self.expect("ident", "hopf")
        name = self.expect("ident").text
        self.expect("symbol", "{")
        families: List[tuple] = []
        rules: List[RuleAST] = []
        cops, cous, ants, invs, exts = [], [], [], [], []
        family_names = set()
        while not self.at_symbol("}"):
            t = self.peek()
            if t.kind != "ident":
                self.fail("expected a statement keyword")
            if t.text == "generators":
                if families:
                    self.fail("duplicate generators statement")
                families = self.parse_generators()
                family_names = {nm for nm, _ in families}
            elif t.text == "rule":
                rules.append(self.parse_rule(family_names))
            elif t.text == "coproduct":
                cops.append(self.parse_coproduct(family_names))
            elif t.text == "counit":
                cous.append(self.parse_counit(family_names))
            elif t.text in ("antipode", "inverse"):
                (ants if t.text == "antipode" else invs).append(
                    self.parse_antipode(family_names)
                )
            elif t.text == "extend":
                exts.append(self.parse_extend(family_names))
            else:
                self.fail(f"unknown statement {t.text!r}")
        self.expect("symbol", "}")
        if not families:
            self.fail(f"hopf {name!r} declares no generators")
        return HopfAST(
            name,
            tuple(families),
            tuple(rules),
            tuple(cops),
            tuple(cous),
            tuple(ants),
            tuple(invs),
            tuple(exts),
        )

    def parse_generators(self) -> List[tuple]:
        self.expect("ident", "generators")
        families = [self.parse_family()]
        while self.at_symbol("<"):
            self.next()
            families.append(self.parse_family())
        self.expect("symbol", ";")
        return families

    def parse_family(self) -> tuple:
        name = self.expect("ident").text
        if name in KEYWORDS:
            self.fail(f"{name!r} is a keyword")
        indexed = False
        if self.at_symbol("["):
            self.next()
            self.expect("symbol", "]")
            indexed = True
        return (name, indexed)

    def parse_letter(self, family_names) -> LetterPat:
        t = self.expect("ident")
        if t.text not in family_names:
            raise ParseError(f"unknown generator {t.text!r}", line=t.line, column=t.col)
        index = None
        if self.at_symbol("["):
            self.next()
            index = self.parse_index()
            self.expect("symbol", "]")
        return LetterPat(t.text, index)

    def parse_index(self) -> IndexExpr:
        t = self.peek()
        if t.kind == "int":
            self.next()
            return IndexExpr(literal=int(t.text))
        var = self.expect("ident").text
        if self.at_symbol("+"):
            self.next()
            off = int(self.expect("int").text)
            return IndexExpr(var=var, offset=off)
        return IndexExpr(var=var)

    def parse_coeff_and_word(self, family_names) -> tuple:
        """One summand: an optional coefficient followed by letters, or a
        bare coefficient (scalar term), or a bare '1' (empty word)."""
        coeff: object = ONE
        consumed = False
        t = self.peek()
        if t.kind == "int":
            follower = self.toks[self.pos + 1]
            if (
                t.text == "1"
                and not self._starts_letter(family_names, ahead=1)
                and not (follower.kind == "symbol" and follower.text == "/")
            ):
                # bare 1 is the empty word
                self.next()
                return (ONE, ())
            self.next()
            num = int(t.text)
            if self.at_symbol("/"):
                self.next()
                den = int(self.expect("int").text)
                coeff = Fraction(num, den)
            else:
                coeff = Fraction(num)
            consumed = True
        elif t.kind == "ident" and t.text not in family_names and t.text not in KEYWORDS:
            # an index variable used as coefficient (schema rules)
            self.next()
            coeff = t.text
            consumed = True
        pats = []
        while self.peek().kind == "ident" and self.peek().text in family_names:
            pats.append(self.parse_letter(family_names))
        if not pats and not consumed:
            self.fail("expected a term")
        return (coeff, tuple(pats))

    def _starts_letter(self, family_names, ahead: int = 0) -> bool:
        t = self.toks[self.pos + ahead]
        return t.kind == "ident" and t.text in family_names

    def parse_poly(self, family_names) -> Tuple[tuple, ...]:
        terms = []
        negate = False
        if self.at_symbol("-"):
            self.next()
            negate = True
        while True:
            coeff, pats = self.parse_coeff_and_word(family_names)
            if negate:
                coeff = -coeff if isinstance(coeff, Fraction) else ("-" + coeff)
            terms.append((coeff, pats))
            if self.at_symbol("+"):
                self.next()
                negate = False
            elif self.at_symbol("-"):
                self.next()
                negate = True
            else:
                break
        return tuple(terms)

    def parse_rule(self, family_names) -> RuleAST:
        self.expect("ident", "rule")
        lhs = []
        while not self.at_symbol("->"):
            lhs.append(self.parse_letter(family_names))
        self.expect("symbol", "->")
        rhs = self.parse_poly(family_names)
        guard = None
        if self.peek().kind == "ident" and self.peek().text == "when":
            self.next()
            a = self.expect("ident").text
            op_tok = self.peek()
            if self.at_symbol(">") or self.at_symbol("<"):
                self.next()
            else:
                self.fail("expected '>' or '<' in guard")
            b = self.expect("ident").text
            guard = (a, op_tok.text, b)
        self.expect("symbol", ";")
        return RuleAST(tuple(lhs), rhs, guard)

    def parse_gen_key(self, family_names) -> Generator:
        pat = self.parse_letter(family_names)
        if pat.index is not None and pat.index.literal is None:
            self.fail("structure maps are given on concrete generators")
        return Generator(pat.name, pat.index.literal if pat.index else None)

    def parse_coproduct(self, family_names) -> tuple:
        self.expect("ident", "coproduct")
        g = self.parse_gen_key(family_names)
        self.expect("symbol", "->")
        terms = []
        negate = False
        if self.at_symbol("-"):
            self.next()
            negate = True
        while True:
            coeff, left = self.parse_coeff_and_word(family_names)
            if not isinstance(coeff, Fraction):
                self.fail("coproduct coefficients must be rational")
            self.expect("symbol", "(x)")
            _, right = self.parse_coeff_and_word(family_names)
            if negate:
                coeff = -coeff
            terms.append((coeff, _pats_to_word(left), _pats_to_word(right)))
            if self.at_symbol("+"):
                self.next()
                negate = False
            elif self.at_symbol("-"):
                self.next()
                negate = True
            else:
                break
        self.expect("symbol", ";")
        return (g, tuple(terms))

    def parse_counit(self, family_names) -> tuple:
        self.expect("ident", "counit")
        g = self.parse_gen_key(family_names)
        self.expect("symbol", "->")
        neg = False
        if self.at_symbol("-"):
            self.next()
            neg = True
        num = int(self.expect("int").text)
        den = 1
        if self.at_symbol("/"):
            self.next()
            den = int(self.expect("int").text)
        self.expect("symbol", ";")
        val = Fraction(num, den)
        return (g, -val if neg else val)

    def parse_antipode(self, family_names) -> tuple:
        self.next()  # antipode or inverse
        g = self.parse_gen_key(family_names)
        self.expect("symbol", "->")
        terms = self.parse_poly(family_names)
        self.expect("symbol", ";")
        out = []
        for coeff, pats in terms:
            if not isinstance(coeff, Fraction):
                self.fail("antipode coefficients must be rational")
            out.append((coeff, _pats_to_word(pats)))
        return (g, tuple(out))

    def parse_extend(self, family_names) -> tuple:
        self.expect("ident", "extend")
        fam = self.expect("ident").text
        if fam not in family_names:
            self.fail(f"unknown family {fam!r}")
        self.expect("ident", "by")
        self.expect("ident", "commutator")
        anchor = self.parse_gen_key(family_names)
        self.expect("symbol", ";")
        return (fam, anchor)


def _pats_to_word(pats) -> Word:
    out = []
    for p in pats:
        if p.index is not None and p.index.literal is None:
            raise SemanticError("structure-map words must have concrete indices")
        out.append(Generator(p.name, p.index.literal if p.index else None))
    return tuple(out)


def parse(text: str) -> FileAST:
    return Parser(text).parse_file()


# -- printing -----------------------------------------------------------------


def _coeff_prefix(c, first: bool) -> str:
    if isinstance(c, str):
        body = c.lstrip("-")
        sign = "-" if c.startswith("-") else "+"
        lead = ("-" if sign == "-" else "") if first else f" {sign} "
        return f"{lead}{body} "
    sign = "-" if c < 0 else "+"
    mag = abs(c)
    lead = ("-" if sign == "-" else "") if first else f" {sign} "
    return lead if mag == 1 else f"{lead}{mag} "


def _word_text(word) -> str:
    if not word:
        return "1"
    parts = []
    for g in word:
        parts.append(g.name if g.index is None else f"{g.name}[{g.index}]")
    return " ".join(parts)


def _pat_text(pats) -> str:
    if not pats:
        return "1"
    return " ".join(str(p) for p in pats)


def _poly_text(terms, word_fmt) -> str:
    out = []
    for i, term in enumerate(terms):
        c = term[0]
        body = word_fmt(term)
        prefix = _coeff_prefix(c, first=(i == 0))
        if not prefix.endswith(" ") and prefix not in ("", "-"):
            prefix += " "
        out.append(f"{prefix}{body}")
    return "".join(out)


def print_hopf(ast: HopfAST) -> str:
    lines = [f"hopf {ast.name} {{"]
    fams = " < ".join(f"{nm}[]" if ix else nm for nm, ix in ast.families)
    lines.append(f"  generators {fams};")
    for r in ast.rules:
        rhs = _poly_text(r.rhs, lambda t: _pat_text(t[1]))
        guard = f" when {r.guard[0]} {r.guard[1]} {r.guard[2]}" if r.guard else ""
        lines.append(f"  rule {_pat_text(r.lhs)} -> {rhs}{guard};")
    for g, terms in ast.coproducts:
        body = _poly_text(
            terms, lambda t: f"{_word_text(t[1])}(x){_word_text(t[2])}"
        )
        lines.append(f"  coproduct {_word_text((g,))} -> {body};")
    for g, val in ast.counits:
        lines.append(f"  counit {_word_text((g,))} -> {val};")
    for g, terms in ast.antipodes:
        lines.append(
            f"  antipode {_word_text((g,))} -> "
            f"{_poly_text(terms, lambda t: _word_text(t[1]))};"
        )
    for g, terms in ast.inverses:
        lines.append(
            f"  inverse {_word_text((g,))} -> "
            f"{_poly_text(terms, lambda t: _word_text(t[1]))};"
        )
    for fam, anchor in ast.extends:
        lines.append(f"  extend {fam} by commutator {_word_text((anchor,))};")
    lines.append("}")
    return "\n".join(lines)


def print_file(ast: FileAST) -> str:
    return "\n\n".join(print_hopf(h) for h in ast.hopfs) + "\n"


# -- building -----------------------------------------------------------------


def _is_concrete(rule: RuleAST) -> bool:
    for p in rule.lhs:
        if p.index is not None and p.index.literal is None:
            return False
    for c, pats in rule.rhs:
        if isinstance(c, str):
            return False
        for p in pats:
            if p.index is not None and p.index.literal is None:
                return False
    return rule.guard is None


def build_hopf(ast: HopfAST) -> HopfPresentation:
    generators = {nm: ix for nm, ix in ast.families}
    precedence = tuple(nm for nm, _ in ast.families)
    order = RuleSet([], precedence)
    rules = []
    for r in ast.rules:
        if _is_concrete(r):
            lhs_word = _pats_to_word(r.lhs)
            for _, pats in r.rhs:
                w = _pats_to_word(pats)
                if order.order_key(w) >= order.order_key(lhs_word):
                    raise TerminationOrderError(
                        f"rule {_pat_text(r.lhs)} -> ... does not decrease the "
                        f"termination order at {_word_text(w)!r}"
                    )
            rhs = {}
            for c, pats in r.rhs:
                w = _pats_to_word(pats)
                rhs[w] = rhs.get(w, Fraction(0)) + c
            rules.append(ConcreteRule(_pats_to_word(r.lhs), rhs))
        else:
            rhs = []
            for c, pats in r.rhs:
                if isinstance(c, str) and c.startswith("-"):
                    raise SemanticError(
                        "negated variable coefficients are not supported in rules"
                    )
                rhs.append((c, tuple(pats)))
            rules.append(SchemaRule(list(r.lhs), rhs, guard=r.guard))

    extends = dict(ast.extends)

    def make_hooks():
        if not extends:
            return None, None, None, None

        def anchor_for(g):
            if g.name not in extends:
                raise SemanticError(f"no table entry or extension for {g}")
            return extends[g.name]

        def cop_hook(hp, g):
            a = anchor_for(g)
            da = hp.gen_coproduct(a)
            dp = hp.gen_coproduct(Generator(g.name, g.index - 1))
            return da.leg_mul(dp) - dp.leg_mul(da)

        def ant_hook(hp, g):
            a = anchor_for(g)
            sa = hp.gen_antipode(a)
            sp = hp.gen_antipode(Generator(g.name, g.index - 1))
            return sp * sa - sa * sp

        def inv_hook(hp, g):
            a = anchor_for(g)
            sa = hp.gen_inv_antipode(a)
            sp = hp.gen_inv_antipode(Generator(g.name, g.index - 1))
            return sp * sa - sa * sp

        def cou_hook(hp, g):
            anchor_for(g)
            return Fraction(0)

        return cop_hook, cou_hook, ant_hook, inv_hook

    cop_hook, cou_hook, ant_hook, inv_hook = make_hooks()

    h = HopfPresentation(
        ast.name,
        generators,
        precedence,
        rules,
        coproducts={},
        counits={g: v for g, v in ast.counits},
        antipodes={},
        coproduct_hook=cop_hook,
        counit_hook=cou_hook,
        antipode_hook=ant_hook,
        inv_antipode_hook=inv_hook,
    )
    for g, terms in ast.coproducts:
        val = h.one_tensor().scale(0)
        for c, left, right in terms:
            val = val + tensor([h.from_word(left), h.from_word(right)]).scale(c)
        h._cop[g] = val
    for g, terms in ast.antipodes:
        h._ant[g] = h.elt({w: c for c, w in terms})
    for g, terms in ast.inverses:
        h._inv[g] = h.elt({w: c for c, w in terms})
    return h


def build_file(ast: FileAST) -> dict:
    return {h.name: build_hopf(h) for h in ast.hopfs}


def hopf_equivalent(a: HopfPresentation, b: HopfPresentation, degree: int = 2, index_bound: int = 3) -> bool:
    """Structural agreement of two Hopf presentations: same alphabet and
    precedence, identical normal forms on all products of letters up to the
    given degree, and identical structure maps on the letters."""
    if a.generators != b.generators:
        return False
    if a.ruleset.precedence != b.ruleset.precedence:
        return False
    letters = a.letters(index_bound)
    words = [()]
    frontier = [()]
    for _ in range(degree):
        frontier = [w + (g,) for w in frontier for g in letters]
        words.extend(frontier)
    for w in words:
        if a.normalize_terms({w: ONE}) != b.normalize_terms({w: ONE}):
            return False
    for g in letters:
        if a.gen_coproduct(g).terms != b.gen_coproduct(g).terms:
            return False
        if a.gen_counit(g) != b.gen_counit(g):
            return False
        if a.gen_antipode(g).terms != b.gen_antipode(g).terms:
            return False
        if a.gen_inv_antipode(g).terms != b.gen_inv_antipode(g).terms:
            return False
    return True
