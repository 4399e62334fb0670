"""Presentations and the rewrite engine.

A :class:`Presentation` owns an alphabet (with optional indexed families
like ``d[k]``), a generator precedence, and a :class:`RuleSet`.  Rules
rewrite a word into a linear combination of strictly smaller words under the
degree-then-lexicographic termination order, and ``normalize`` applies them
leftmost-innermost to a unique fixed point.  Index-parametric rule schemas
(``X d[k] -> d[k] X + d[k+1]``) instantiate lazily, so the infinite
δ-alphabet needs no a-priori bound.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence

from .core import AlgElt, Coeff, EMPTY_WORD, Generator, ONE, Word, _merge_term
from .errors import RewriteLimitError, StructureError, TerminationOrderError

DEFAULT_STEP_LIMIT = 10**6


def step_limit() -> int:
    """Rewrite guard; overridable via HOPFCYC_STEP_LIMIT."""
    raw = os.environ.get("HOPFCYC_STEP_LIMIT")
    return int(raw) if raw else DEFAULT_STEP_LIMIT


# -- rule patterns ------------------------------------------------------------


@dataclass(frozen=True)
class IndexExpr:
    """Index of a letter in a rule: a literal, or a variable plus offset."""

    var: Optional[str] = None
    offset: int = 0
    literal: Optional[int] = None

    @staticmethod
    def parse(text: str) -> "IndexExpr":
        text = text.strip()
        if text.lstrip("-").isdigit():
            return IndexExpr(literal=int(text))
        if "+" in text:
            v, off = text.split("+", 1)
            return IndexExpr(var=v.strip(), offset=int(off))
        return IndexExpr(var=text)

    def value(self, binding: dict) -> int:
        if self.literal is not None:
            return self.literal
        return binding[self.var] + self.offset

    def __str__(self):
        if self.literal is not None:
            return str(self.literal)
        return self.var if self.offset == 0 else f"{self.var}+{self.offset}"


@dataclass(frozen=True)
class LetterPat:
    name: str
    index: Optional[IndexExpr] = None

    def __str__(self):
        return self.name if self.index is None else f"{self.name}[{self.index}]"


class Rule:
    """Interface: ``lhs_len`` and ``match(segment) -> replacement or None``."""

    lhs_len: int

    def match(self, segment: Word) -> Optional[dict]:
        raise NotImplementedError

    def sample_instances(self, index_bound: int) -> Iterable[tuple[Word, dict]]:
        """(lhs word, rhs terms) pairs for order/overlap diagnostics."""
        raise NotImplementedError


class ConcreteRule(Rule):
    def __init__(self, lhs: Word, rhs: dict):
        if len(lhs) < 2:
            raise StructureError("rule left-hand sides must have length >= 2")
        self.lhs = lhs
        self.lhs_len = len(lhs)
        self.rhs = {w: Fraction(c) for w, c in rhs.items() if c != 0}

    def match(self, segment: Word):
        return self.rhs if segment == self.lhs else None

    def sample_instances(self, index_bound: int):
        yield self.lhs, self.rhs

    def __str__(self):
        from .core import word_str, _signed_terms, word_key

        rhs = _signed_terms(
            sorted(self.rhs.items(), key=lambda kv: word_key(kv[0])), word_str
        )
        return f"{word_str(self.lhs)} -> {rhs}"


class SchemaRule(Rule):
    """Index-parametric rule; lhs variables are plain (no offsets), rhs may
    shift indices and use an index variable as a coefficient."""

    def __init__(
        self,
        lhs: Sequence[LetterPat],
        rhs: Sequence[tuple],  # (coeff: Fraction | var name, tuple[LetterPat])
        guard: Optional[tuple] = None,  # (var, '>' or '<', var)
    ):
        if len(lhs) < 2:
            raise StructureError("rule left-hand sides must have length >= 2")
        for pat in lhs:
            if pat.index is not None and pat.index.literal is None and pat.index.offset:
                raise StructureError("lhs index variables must be plain (no offsets)")
        self.lhs = tuple(lhs)
        self.lhs_len = len(lhs)
        self.rhs = tuple((c, tuple(ws)) for c, ws in rhs)
        self.guard = guard

    def _bind(self, segment: Word) -> Optional[dict]:
        binding: dict = {}
        for pat, g in zip(self.lhs, segment):
            if pat.name != g.name:
                return None
            if pat.index is None:
                if g.index is not None:
                    return None
            else:
                if g.index is None:
                    return None
                if pat.index.literal is not None:
                    if g.index != pat.index.literal:
                        return None
                else:
                    v = pat.index.var
                    if v in binding:
                        if binding[v] != g.index:
                            return None
                    else:
                        binding[v] = g.index
        if self.guard is not None:
            a, op, b = self.guard
            va, vb = binding[a], binding[b]
            if op == ">" and not va > vb:
                return None
            if op == "<" and not va < vb:
                return None
        return binding

    def _instantiate(self, binding: dict) -> dict:
        out: dict = {}
        for c, pats in self.rhs:
            coeff = Fraction(binding[c]) if isinstance(c, str) else Fraction(c)
            word = tuple(
                Generator(p.name, p.index.value(binding) if p.index is not None else None)
                for p in pats
            )
            _merge_term(out, word, coeff)
        return out

    def match(self, segment: Word):
        binding = self._bind(segment)
        if binding is None:
            return None
        return self._instantiate(binding)

    def _vars(self):
        vs = []
        for pat in self.lhs:
            if pat.index is not None and pat.index.var and pat.index.var not in vs:
                vs.append(pat.index.var)
        return vs

    def sample_instances(self, index_bound: int):
        vs = self._vars()

        def rec(i, binding):
            if i == len(vs):
                word = tuple(
                    Generator(p.name, p.index.value(binding) if p.index is not None else None)
                    for p in self.lhs
                )
                if self._bind(word) is not None:
                    yield word, self._instantiate(binding)
                return
            for val in range(1, index_bound + 1):
                yield from rec(i + 1, {**binding, vs[i]: val})

        yield from rec(0, {})

    def __str__(self):
        def side(pats):
            return " ".join(str(p) for p in pats)

        parts = []
        for c, pats in self.rhs:
            cs = c if isinstance(c, str) else ("" if c == 1 else str(c))
            body = side(pats) if pats else "1"
            parts.append(f"{cs} {body}".strip() if cs else body)
        g = f" when {self.guard[0]} {self.guard[1]} {self.guard[2]}" if self.guard else ""
        return f"{side(self.lhs)} -> " + " + ".join(parts) + g


class FunctionRule(Rule):
    """Rule computed on demand (used for bicrossed-product straightening)."""

    def __init__(self, lhs_len: int, fn: Callable[[Word], Optional[dict]], samples=()):
        self.lhs_len = lhs_len
        self.fn = fn
        self.samples = tuple(samples)

    def match(self, segment: Word):
        return self.fn(segment)

    def sample_instances(self, index_bound: int):
        for seg in self.samples:
            rhs = self.fn(seg)
            if rhs is not None:
                yield seg, rhs


# -- rule sets ----------------------------------------------------------------


class RuleSet:
    def __init__(self, rules: Sequence[Rule], precedence: Sequence[str]):
        self.rules = list(rules)
        self.precedence = tuple(precedence)
        self._rank = {name: i for i, name in enumerate(self.precedence)}
        self._nf_cache: dict = {}
        self._steps = 0
        self._limit = step_limit()

    # termination order: degree, then lexicographic on (precedence, index)
    def order_key(self, w: Word):
        return (len(w), tuple((self._rank.get(g.name, len(self._rank)), g.index or 0) for g in w))

    def rule_respects_order(self, lhs: Word, rhs: dict) -> bool:
        lk = self.order_key(lhs)
        return all(self.order_key(w) < lk for w in rhs)

    def check_rule(self, rule: Rule, index_bound: int = 4):
        """Raise TerminationOrderError on the first violating instance."""
        for lhs, rhs in rule.sample_instances(index_bound):
            if not self.rule_respects_order(lhs, rhs):
                bad = next(w for w in rhs if self.order_key(w) >= self.order_key(lhs))
                from .core import word_str

                raise TerminationOrderError(
                    f"rule {word_str(lhs)} -> ... produces {word_str(bad)},"
                    " not smaller in the termination order"
                )

    def check_all(self, index_bound: int = 4):
        for rule in self.rules:
            self.check_rule(rule, index_bound)

    # -- normalization --------------------------------------------------------

    def _find(self, word: Word):
        for pos in range(len(word)):
            for rule in self.rules:
                L = rule.lhs_len
                if pos + L > len(word):
                    continue
                repl = rule.match(word[pos : pos + L])
                if repl is not None:
                    return pos, L, repl
        return None

    def _nf_word(self, word: Word) -> dict:
        cached = self._nf_cache.get(word)
        if cached is not None:
            return cached
        hit = self._find(word)
        if hit is None:
            result = {word: ONE}
        else:
            pos, L, repl = hit
            self._steps += 1
            if self._steps > self._limit:
                raise RewriteLimitError(
                    f"rewrite step guard ({self._limit}) exceeded; the rule set is"
                    " suspected non-terminating (or raise HOPFCYC_STEP_LIMIT)"
                )
            result: dict = {}
            for w, c in repl.items():
                for nw, nc in self._nf_word(word[:pos] + w + word[pos + L :]).items():
                    _merge_term(result, nw, c * nc)
        self._nf_cache[word] = result
        return result

    def normalize_terms(self, terms: dict) -> dict:
        self._steps = 0
        self._limit = step_limit()
        out: dict = {}
        for w, c in terms.items():
            if c == 0:
                continue
            for nw, nc in self._nf_word(w).items():
                _merge_term(out, nw, c * nc)
        return out


@dataclass
class Diagnostics:
    order_violations: list = field(default_factory=list)
    nonconfluent_overlaps: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.order_violations and not self.nonconfluent_overlaps


def validate_ruleset(rs: RuleSet, index_bound: int = 3, max_degree: int = 4) -> Diagnostics:
    """Diagnostics only: termination-order violations and non-confluent
    overlaps among rule instances (critical pairs), up to the given degree."""
    diag = Diagnostics()
    instances = []
    for rule in rs.rules:
        for lhs, rhs in rule.sample_instances(index_bound):
            if not rs.rule_respects_order(lhs, rhs):
                diag.order_violations.append((lhs, rhs))
            instances.append((lhs, rhs))
    seen = set()
    for lhs1, rhs1 in instances:
        for lhs2, rhs2 in instances:
            # proper overlap: a suffix of lhs1 equals a prefix of lhs2
            for k in range(1, min(len(lhs1), len(lhs2))):
                if lhs1[-k:] != lhs2[:k]:
                    continue
                word = lhs1 + lhs2[k:]
                if len(word) > max_degree or word in seen:
                    continue
                seen.add(word)
                # resolve via rule 1 at position 0 vs rule 2 at len(lhs1)-k
                a: dict = {}
                for w, c in rhs1.items():
                    _merge_term(a, w + lhs2[k:], c)
                b: dict = {}
                p = len(lhs1) - k
                for w, c in rhs2.items():
                    _merge_term(b, word[:p] + w, c)
                na = rs.normalize_terms(a)
                nb = rs.normalize_terms(b)
                if na != nb:
                    diag.nonconfluent_overlaps.append((word, na, nb))
    return diag


# -- presentations ------------------------------------------------------------


class Presentation:
    """An alphabet with a rule set; the carrier every AlgElt is tagged with.

    ``generators`` maps a name to True if it is an indexed family (``d[k]``)
    and False for a plain letter.  ``finite_basis``, when given, lists the
    words spanning the space (used by finite instances; it may exclude the
    empty word for non-unital carriers such as set coalgebras).
    ``unit_terms`` overrides the algebra unit when it is not the empty word
    (e.g. the function algebra on a finite set).
    """

    def __init__(
        self,
        name: str,
        generators: dict,
        precedence: Sequence[str],
        rules: Sequence[Rule] = (),
        finite_basis: Optional[Sequence[Word]] = None,
        unit_terms: Optional[dict] = None,
        check_rules: bool = True,
    ):
        self.name = name
        self.generators = dict(generators)
        for nm in precedence:
            if nm not in self.generators:
                raise StructureError(f"precedence mentions unknown generator {nm!r}")
        self.ruleset = RuleSet(rules, precedence)
        if check_rules:
            self.ruleset.check_all()
        self.finite_basis = list(finite_basis) if finite_basis is not None else None
        self.unit_terms = unit_terms
        self._word_cache: dict = {}

    # -- element constructors -------------------------------------------------

    def normalize_terms(self, terms: dict) -> dict:
        return self.ruleset.normalize_terms(terms)

    def zero(self) -> AlgElt:
        return AlgElt(self, {}, _normalized=True)

    def unit(self) -> AlgElt:
        if self.unit_terms is not None:
            return AlgElt(self, self.unit_terms)
        return AlgElt(self, {EMPTY_WORD: ONE}, _normalized=True)

    def gen(self, name: str, index: Optional[int] = None) -> AlgElt:
        self.check_generator(name, index)
        return AlgElt(self, {(Generator(name, index),): ONE})

    def check_generator(self, name: str, index: Optional[int]):
        if name not in self.generators:
            raise StructureError(f"unknown generator {name!r} in presentation {self.name!r}")
        indexed = self.generators[name]
        if indexed and (index is None or index < 1):
            raise StructureError(f"generator {name!r} requires a positive index")
        if not indexed and index is not None:
            raise StructureError(f"generator {name!r} takes no index")

    def elt(self, terms: dict) -> AlgElt:
        return AlgElt(self, terms)

    def from_word(self, word: Word) -> AlgElt:
        return AlgElt(self, {word: ONE})

    # -- bases ----------------------------------------------------------------

    def letters(self, index_bound: int = 3):
        out = []
        for name in sorted(self.generators):
            if self.generators[name]:
                out.extend(Generator(name, k) for k in range(1, index_bound + 1))
            else:
                out.append(Generator(name))
        return out

    def normal_words(self, max_degree: int, index_bound: int = 3):
        """All normal words of degree <= max_degree (indices capped for
        indexed families).  Finite presentations return their basis."""
        if self.finite_basis is not None:
            return list(self.finite_basis)
        key = (max_degree, index_bound)
        cached = self._word_cache.get(key)
        if cached is not None:
            return list(cached)
        letters = self.letters(index_bound)
        words = [EMPTY_WORD]
        frontier = [EMPTY_WORD]
        for _ in range(max_degree):
            frontier = [w + (g,) for w in frontier for g in letters]
            words.extend(frontier)
        normal = [w for w in words if self.normalize_terms({w: ONE}) == {w: ONE}]
        normal.sort(key=self.ruleset.order_key)
        self._word_cache[key] = normal
        return list(normal)

    def basis_words(self):
        if self.finite_basis is None:
            raise StructureError(f"presentation {self.name!r} has no finite basis")
        return list(self.finite_basis)

    def basis_elts(self):
        return [self.from_word(w) for w in self.basis_words()]

    def __repr__(self):
        return f"<presentation {self.name}>"


def alg_eq(a: AlgElt, b: AlgElt) -> bool:
    """Equality of normal forms (elements are stored normalized)."""
    if a.pres.name != b.pres.name:
        raise StructureError("alg_eq across different presentations")
    return (a - b).is_zero
