"""Coefficient data for equivariant cyclic theory and its condition checkers.

A :class:`ModuleComodule` is a right module, left comodule over a Hopf
presentation.  The checkers verify the stable anti-Yetter-Drinfeld
condition and its relaxations relative to a module coalgebra C or a module
algebra A, modular-pair-in-involution identities, action shapes
(cocommutative or commutative), coideal quotients, and the tensor product
of an anti-Yetter-Drinfeld with a Yetter-Drinfeld module.

Every failing check reports the exact (normalized) difference tensor, so
results can be compared term-by-term against expected values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .core import AlgElt, EMPTY_WORD, Generator, ONE, TensorElt, tensor
from .errors import PreconditionError, StructureError
from .hopf import Character, GroupLike, HopfPresentation
from .linalg import F0, Quotient, in_rowspace
from .rewrite import Presentation


def scalar_space(name: str = "scalar") -> Presentation:
    """A one-dimensional carrier spanned by the empty word."""
    return Presentation(name, {}, (), [], finite_basis=[EMPTY_WORD])


@dataclass
class ModuleComodule:
    """A right H-module, left H-comodule carrier.

    ``act(m, h)`` returns m·h in the carrier; ``coact(m)`` returns
    m⟨-1⟩ ⊗ m⟨0⟩ with leg 1 in H and leg 2 in the carrier.
    """

    name: str
    hopf: HopfPresentation
    space: Presentation
    act: Callable[[AlgElt, AlgElt], AlgElt]
    coact: Callable[[AlgElt], TensorElt]

    def basis(self, degree: int = 1, index_bound: int = 2):
        return [self.space.from_word(w) for w in self.space.normal_words(degree, index_bound)]

    def validate(self, degree: int = 2, index_bound: int = 2) -> dict:
        """Module associativity/unit and comodule coassociativity/counit on
        basis elements against normal words of bounded degree."""
        h = self.hopf
        ms = self.basis()
        hs = [h.from_word(w) for w in h.normal_words(degree, index_bound)]
        checks = []

        fails = []
        for m in ms:
            if self.act(m, h.unit()) != m:
                fails.append(f"m={m}")
            for a in hs:
                for b in hs:
                    if self.act(self.act(m, a), b) != self.act(m, a * b):
                        fails.append(f"m={m}, h={a}, h'={b}")
        checks.append({"name": "module axioms", "ok": not fails, "witnesses": fails[:3]})

        fails = []
        for m in ms:
            cm = self.coact(m)
            if cm.leg_apply(1, h.coproduct) != cm.leg_apply(2, self.coact):
                fails.append(f"m={m} (coassociativity)")
            if cm.leg_scalar(1, h.counit) != tensor([m]):
                fails.append(f"m={m} (counit)")
        checks.append({"name": "comodule axioms", "ok": not fails, "witnesses": fails[:3]})

        return {"ok": all(c["ok"] for c in checks), "checks": checks}


def mc_sigma_delta(
    hopf: HopfPresentation, delta: Character, sigma: GroupLike, name: str = "sigma_delta"
) -> ModuleComodule:
    """The one-dimensional carrier with action through the character and
    coaction by the group-like element."""
    if delta(sigma.elt) != 1:
        raise PreconditionError("not a modular pair: the character is not 1 on the group-like")
    space = scalar_space(name)

    def act(m, h):
        return m.scale(delta(h))

    def coact(m):
        return tensor([sigma.elt.scale(ONE)]).outer(tensor([m]))

    return ModuleComodule(name, hopf, space, act, coact)


def mc_trivial(hopf: HopfPresentation, name: str = "trivial") -> ModuleComodule:
    """The carrier with the counit action and the unit coaction."""
    space = scalar_space(name)
    return ModuleComodule(
        name,
        hopf,
        space,
        lambda m, h: m.scale(hopf.counit(h)),
        lambda m: tensor([hopf.unit(), m]),
    )


def mc_regular(hopf: HopfPresentation, name: str = "regular") -> ModuleComodule:
    """M = H with the multiplication action and the trivial coaction."""
    return ModuleComodule(
        name, hopf, hopf, lambda m, h: m * h, lambda m: tensor([hopf.unit(), m])
    )


def mc_conjugation_group(
    hopf: HopfPresentation, space: Presentation, group, name: str = "conjugation"
) -> ModuleComodule:
    """A group-algebra carrier with the conjugation action m·g = g⁻¹mg and
    the grading coaction; stable anti-Yetter-Drinfeld for any finite group,
    commutative or not.  ``group`` supplies labels and the inverse map."""

    def label(w):
        return group.identity if w == EMPTY_WORD else w[0].name

    def from_label(pres, lab):
        return pres.unit() if lab == group.identity else pres.gen(lab)

    def act(m, h):
        out = space.zero()
        for mw, mc in m.terms.items():
            for hw, hc in h.terms.items():
                g = label(hw)
                conj = group.mult[(group.mult[(group.inverse(g), label(mw))], g)]
                out = out + from_label(space, conj).scale(mc * hc)
        return out

    def coact(m):
        out = tensor([hopf.zero(), space.zero()])
        for w, c in m.terms.items():
            out = out + tensor([hopf.from_word(w), space.from_word(w)]).scale(c)
        return out

    return ModuleComodule(name, hopf, space, act, coact)


def mc_graded_group(hopf: HopfPresentation, space: Presentation, name: str = "graded") -> ModuleComodule:
    """A group-algebra-graded carrier: trivial action, coaction sending a
    basis word to (the same word read in H) ⊗ itself.  ``space`` must carry
    the same letters as the group algebra ``hopf``."""

    def coact(m):
        out = tensor([hopf.zero()]).outer(tensor([space.zero()]))
        for w, c in m.terms.items():
            out = out + tensor([hopf.from_word(w), space.from_word(w)]).scale(c)
        return out

    return ModuleComodule(
        name, hopf, space, lambda m, h: m.scale(hopf.counit(h)), coact
    )


# -- module coalgebras and module algebras ------------------------------------


@dataclass
class HModuleCoalgebra:
    """A coalgebra C with a left H-action under which Δ_C and ε_C are
    H-equivariant."""

    hopf: HopfPresentation
    coalg: HopfPresentation
    act: Callable[[AlgElt, AlgElt], AlgElt]  # (h, c) -> h ▹ c

    def validate(self, degree: int = 2, index_bound: int = 2) -> dict:
        h, c = self.hopf, self.coalg
        hs = [h.from_word(w) for w in h.normal_words(degree, index_bound)]
        cs = [c.from_word(w) for w in c.normal_words(degree, index_bound)]
        checks = []

        fails = []
        for cc in cs:
            if self.act(h.unit(), cc) != cc:
                fails.append(f"c={cc}")
            for a in hs:
                for b in hs:
                    if self.act(a, self.act(b, cc)) != self.act(a * b, cc):
                        fails.append(f"h={a}, g={b}, c={cc}")
        checks.append({"name": "module axioms", "ok": not fails, "witnesses": fails[:3]})

        fails = []
        for a in hs:
            da = h.coproduct(a)
            for cc in cs:
                lhs = c.coproduct(self.act(a, cc))
                dc = c.coproduct(cc)
                rhs = tensor([c.zero(), c.zero()])
                for (h1, h2), ch in da.terms.items():
                    for (c1, c2), ccf in dc.terms.items():
                        rhs = rhs + tensor(
                            [
                                self.act(h.from_word(h1), c.from_word(c1)),
                                self.act(h.from_word(h2), c.from_word(c2)),
                            ]
                        ).scale(ch * ccf)
                if lhs != rhs:
                    fails.append(f"h={a}, c={cc} (coproduct)")
                if c.counit(self.act(a, cc)) != h.counit(a) * c.counit(cc):
                    fails.append(f"h={a}, c={cc} (counit)")
        checks.append({"name": "module-coalgebra axioms", "ok": not fails, "witnesses": fails[:3]})
        return {"ok": all(ch["ok"] for ch in checks), "checks": checks}


@dataclass
class HModuleAlgebra:
    """An algebra A with a left H-action under which multiplication and the
    unit are H-equivariant."""

    hopf: HopfPresentation
    alg: Presentation
    act: Callable[[AlgElt, AlgElt], AlgElt]  # (h, a) -> h ▹ a

    def validate(self, degree: int = 2, index_bound: int = 2) -> dict:
        h, alg = self.hopf, self.alg
        hs = [h.from_word(w) for w in h.normal_words(degree, index_bound)]
        xs = [alg.from_word(w) for w in alg.normal_words(degree, index_bound)]
        checks = []

        fails = []
        for x in xs:
            if self.act(h.unit(), x) != x:
                fails.append(f"a={x}")
            for a in hs:
                for b in hs:
                    if self.act(a, self.act(b, x)) != self.act(a * b, x):
                        fails.append(f"h={a}, g={b}, a={x}")
        checks.append({"name": "module axioms", "ok": not fails, "witnesses": fails[:3]})

        fails = []
        for a in hs:
            da = h.coproduct(a)
            if self.act(a, alg.unit()) != alg.unit().scale(h.counit(a)):
                fails.append(f"h={a} (unit)")
            for x in xs:
                for y in xs:
                    lhs = self.act(a, x * y)
                    rhs = alg.zero()
                    for (h1, h2), ch in da.terms.items():
                        rhs = rhs + (
                            self.act(h.from_word(h1), x) * self.act(h.from_word(h2), y)
                        ).scale(ch)
                    if lhs != rhs:
                        fails.append(f"h={a}, a={x}, b={y}")
        checks.append({"name": "module-algebra axioms", "ok": not fails, "witnesses": fails[:3]})
        return {"ok": all(ch["ok"] for ch in checks), "checks": checks}


# -- twisted antipodes and modular pairs --------------------------------------


def s_delta(hopf: HopfPresentation, delta: Character, h: AlgElt) -> AlgElt:
    """S_δ(h) = δ(h⁽¹⁾) S(h⁽²⁾)."""
    d = hopf.coproduct(h)
    out = hopf.zero()
    for (h1, h2), c in d.terms.items():
        out = out + hopf.antipode(hopf.from_word(h2)).scale(c * delta(hopf.from_word(h1)))
    return out


def s_delta_inv(hopf: HopfPresentation, delta: Character, h: AlgElt) -> AlgElt:
    """S_δ⁻¹(h) = S⁻¹(h⁽¹⁾) δ(h⁽²⁾); the convolution inverse of S_δ."""
    d = hopf.coproduct(h)
    out = hopf.zero()
    for (h1, h2), c in d.terms.items():
        out = out + hopf.inv_antipode(hopf.from_word(h1)).scale(c * delta(hopf.from_word(h2)))
    return out


def inv_antipode_via_twist(hopf: HopfPresentation, delta: Character, h: AlgElt) -> AlgElt:
    """S⁻¹(h) = δ(S(h⁽³⁾)) δ(h⁽¹⁾) S(h⁽²⁾), valid when (δ, 1) is a modular
    pair in involution on the relevant carrier; used as a cross-check."""
    d = hopf.sweedler(h, 3)
    out = hopf.zero()
    for (h1, h2, h3), c in d.terms.items():
        s = delta(hopf.antipode(hopf.from_word(h3))) * delta(hopf.from_word(h1))
        if s:
            out = out + hopf.antipode(hopf.from_word(h2)).scale(c * s)
    return out


def check_mpi(
    hopf: HopfPresentation,
    delta: Character,
    sigma: GroupLike,
    carrier,
    variant: str = "CH",
    degree: int = 2,
    index_bound: int = 2,
) -> dict:
    """Modular pair in involution relative to a carrier.

    CH variant (module coalgebra C): S_δ²(h) ▹ c = (σ h σ⁻¹) ▹ c.
    AH variant (module algebra A): S_δ⁻²(h) ▹ a = (σ⁻¹ h σ) ▹ a.
    """
    if delta(sigma.elt) != 1:
        return {"ok": False, "witnesses": ["character is not 1 on the group-like"]}
    h = hopf
    hs = [h.from_word(w) for w in h.normal_words(degree, index_bound)]
    space = carrier.coalg if variant == "CH" else carrier.alg
    cs = [space.from_word(w) for w in space.normal_words(degree, index_bound)]
    fails = []
    for a in hs:
        if variant == "CH":
            twisted = s_delta(h, delta, s_delta(h, delta, a))
            conj = sigma.conjugate(a)
        else:
            twisted = s_delta_inv(h, delta, s_delta_inv(h, delta, a))
            conj = sigma.conjugate_inv(a)
        for c in cs:
            lhs = carrier.act(twisted, c)
            rhs = carrier.act(conj, c)
            if lhs != rhs:
                fails.append({"h": str(a), "c": str(c), "difference": str(lhs - rhs)})
    return {"ok": not fails, "witnesses": fails[:3]}


# -- SAYD checks ---------------------------------------------------------------


def check_sayd(mc: ModuleComodule, degree: int = 2, index_bound: int = 2) -> dict:
    """Plain stable anti-Yetter-Drinfeld check: the compatibility
    ∇(mh) = S(h⁽³⁾) m⟨-1⟩ h⁽¹⁾ ⊗ m⟨0⟩ h⁽²⁾ and stability m⟨0⟩ m⟨-1⟩ = m."""
    h = mc.hopf
    ms = mc.basis()
    hs = [h.from_word(w) for w in h.normal_words(degree, index_bound)]
    ayd_fails, st_fails = [], []
    for m in ms:
        cm = mc.coact(m)
        for a in hs:
            lhs = mc.coact(mc.act(m, a))
            d3 = h.sweedler(a, 3)
            rhs = tensor([h.zero()]).outer(tensor([mc.space.zero()]))
            for (h1, h2, h3), ch in d3.terms.items():
                for (w, m0), cmc in cm.terms.items():
                    leg1 = h.antipode(h.from_word(h3)) * h.from_word(w) * h.from_word(h1)
                    leg2 = mc.act(mc.space.from_word(m0), h.from_word(h2))
                    rhs = rhs + tensor([leg1, leg2]).scale(ch * cmc)
            if lhs != rhs:
                ayd_fails.append(
                    {"m": str(m), "h": str(a), "difference": str(lhs - rhs)}
                )
        stab = mc.space.zero()
        for (w, m0), c in cm.terms.items():
            stab = stab + mc.act(mc.space.from_word(m0), h.from_word(w)).scale(c)
        if stab != m:
            st_fails.append({"m": str(m), "difference": str(stab - m)})
    return {
        "ok": not ayd_fails and not st_fails,
        "ayd": {"ok": not ayd_fails, "witnesses": ayd_fails[:3]},
        "stability": {"ok": not st_fails, "witnesses": st_fails[:3]},
    }


def _relation_rows(mc: ModuleComodule, coalg, act, n: int, degree: int = 2, index_bound: int = 2):
    """Rows spanning the relation subspace of M ⊗_H C^⊗(n+1): for each
    basis m, basis chain c̃ and generator h, the vector of
    mh ⊗ c̃ − m ⊗ h⁽¹⁾c₀ ⊗ … ⊗ h⁽ⁿ⁺¹⁾cₙ in ambient coordinates."""
    from itertools import product as iproduct

    h = mc.hopf
    mbasis = mc.space.basis_words()
    cbasis = coalg.basis_words()
    chains = list(iproduct(cbasis, repeat=n + 1))
    index = {
        (mw,) + chain: i
        for i, (mw, chain) in enumerate(iproduct(mbasis, chains))
    }
    dim = len(index)

    def vectorize(te: TensorElt):
        v = [F0] * dim
        for wt, c in te.terms.items():
            v[index[wt]] += c
        return v

    rows = []
    hs = [h.from_word(w) for w in h.normal_words(degree, index_bound) if w != EMPTY_WORD]
    for mw in mbasis:
        m = mc.space.from_word(mw)
        for chain in chains:
            for a in hs:
                left = tensor([mc.act(m, a)]).outer(
                    tensor([coalg.from_word(cw) for cw in chain])
                )
                dn = h.sweedler(a, n + 1)
                right = left.scale(0)
                for legs, ch in dn.terms.items():
                    factors = [m] + [
                        act(h.from_word(legs[i]), coalg.from_word(chain[i]))
                        for i in range(n + 1)
                    ]
                    right = right + tensor(factors).scale(ch)
                rows.append([x - y for x, y in zip(vectorize(left), vectorize(right))])
    return rows, index, vectorize, chains


def check_ch_sayd(
    mc: ModuleComodule,
    c_mod: HModuleCoalgebra,
    degree: int = 2,
    index_bound: int = 2,
    max_chain: int = 2,
) -> dict:
    """SAYD relative to a module coalgebra C.

    The compatibility half tests (mh)⟨-1⟩ c ⊗ (mh)⟨0⟩ against
    S(h⁽³⁾) m⟨-1⟩ h⁽¹⁾ c ⊗ m⟨0⟩ h⁽²⁾ on samples.  Stability tests
    m⟨0⟩ ⊗ m⟨-1⟩ c̃ − m ⊗ c̃; a zero difference passes outright, and
    otherwise membership in the ⊗_H relation subspace is decided exactly
    (finite carriers only).
    """
    h, c = mc.hopf, c_mod.coalg
    ms = mc.basis()
    hs = [h.from_word(w) for w in h.normal_words(degree, index_bound)]
    cs = [c.from_word(w) for w in c.normal_words(degree, index_bound)]

    ayd_fails = []
    for m in ms:
        cm = mc.coact(m)
        for a in hs:
            cma = mc.coact(mc.act(m, a))
            d3 = h.sweedler(a, 3)
            for cc in cs:
                lhs = cma.leg_apply(1, lambda x: c_mod.act(x, cc))
                rhs = tensor([c.zero()]).outer(tensor([mc.space.zero()]))
                for (h1, h2, h3), ch in d3.terms.items():
                    for (w, m0), cmc in cm.terms.items():
                        g = h.antipode(h.from_word(h3)) * h.from_word(w) * h.from_word(h1)
                        rhs = rhs + tensor(
                            [c_mod.act(g, cc), mc.act(mc.space.from_word(m0), h.from_word(h2))]
                        ).scale(ch * cmc)
                if lhs != rhs:
                    ayd_fails.append(
                        {
                            "m": str(m),
                            "h": str(a),
                            "c": str(cc),
                            "lhs": str(lhs),
                            "difference": str(lhs - rhs),
                        }
                    )

    st_fails = []
    finite = mc.space.finite_basis is not None and c.finite_basis is not None
    for n in range(max_chain + 1):
        from itertools import product as iproduct

        chain_sets = iproduct(cs, repeat=n + 1) if len(cs) ** (n + 1) <= 64 else []
        rel = None
        for chain in chain_sets:
            for m in ms:
                cm = mc.coact(m)
                left = tensor([m]).outer(tensor(chain)).scale(0)
                for (w, m0), cc in cm.terms.items():
                    # m⟨-1⟩ acts diagonally on the whole chain
                    dn = h.sweedler(h.from_word(w), n + 1)
                    for legs, ch in dn.terms.items():
                        fs = [mc.space.from_word(m0)] + [
                            c_mod.act(h.from_word(legs[i]), chain[i]) for i in range(n + 1)
                        ]
                        left = left + tensor(fs).scale(cc * ch)
                diff = left - tensor([m]).outer(tensor(chain))
                if diff.is_zero:
                    continue
                if not finite:
                    st_fails.append({"n": n, "m": str(m), "difference": str(diff)})
                    continue
                if rel is None:
                    rows, index, vectorize, _ = _relation_rows(
                        mc, c, c_mod.act, n, degree, index_bound
                    )
                    rel = (rows, vectorize)
                rows, vectorize = rel
                if not in_rowspace(rows, vectorize(diff)):
                    st_fails.append({"n": n, "m": str(m), "difference": str(diff)})

    return {
        "ok": not ayd_fails and not st_fails,
        "ayd": {"ok": not ayd_fails, "witnesses": ayd_fails[:3]},
        "stability": {"ok": not st_fails, "witnesses": st_fails[:3]},
    }


def check_ch_yd(
    mc: ModuleComodule, c_mod: HModuleCoalgebra, degree: int = 2, index_bound: int = 2
) -> dict:
    """Yetter-Drinfeld condition relative to C:
    (mh)⟨-1⟩ c ⊗ (mh)⟨0⟩ = S⁻¹(h⁽³⁾) m⟨-1⟩ h⁽¹⁾ c ⊗ m⟨0⟩ h⁽²⁾."""
    h, c = mc.hopf, c_mod.coalg
    ms = mc.basis()
    hs = [h.from_word(w) for w in h.normal_words(degree, index_bound)]
    cs = [c.from_word(w) for w in c.normal_words(degree, index_bound)]
    fails = []
    for m in ms:
        cm = mc.coact(m)
        for a in hs:
            cma = mc.coact(mc.act(m, a))
            d3 = h.sweedler(a, 3)
            for cc in cs:
                lhs = cma.leg_apply(1, lambda x: c_mod.act(x, cc))
                rhs = tensor([c.zero()]).outer(tensor([mc.space.zero()]))
                for (h1, h2, h3), ch in d3.terms.items():
                    for (w, m0), cmc in cm.terms.items():
                        g = h.inv_antipode(h.from_word(h3)) * h.from_word(w) * h.from_word(h1)
                        rhs = rhs + tensor(
                            [c_mod.act(g, cc), mc.act(mc.space.from_word(m0), h.from_word(h2))]
                        ).scale(ch * cmc)
                if lhs != rhs:
                    fails.append({"m": str(m), "h": str(a), "c": str(cc)})
    return {"ok": not fails, "witnesses": fails[:3]}


def check_ah_sayd(
    mc: ModuleComodule, a_mod: HModuleAlgebra, degree: int = 2, index_bound: int = 2
) -> dict:
    """SAYD relative to a module algebra A.

    Condition i): S⁻¹((mh)⟨-1⟩) a ⊗ (mh)⟨0⟩ =
    S⁻¹(m⟨-1⟩ h⁽¹⁾) h⁽³⁾ a ⊗ m⟨0⟩ h⁽²⁾.  Condition ii) (stability against
    H-linear functionals): m⟨0⟩ ⊗ S⁻¹(m⟨-1⟩) ã − m ⊗ ã must lie in
    span{vh − ε(h)v}; a zero difference passes outright.
    """
    h, alg = mc.hopf, a_mod.alg
    ms = mc.basis()
    hs = [h.from_word(w) for w in h.normal_words(degree, index_bound)]
    xs = [alg.from_word(w) for w in alg.normal_words(degree, index_bound)]

    ayd_fails = []
    for m in ms:
        cm = mc.coact(m)
        for a in hs:
            cma = mc.coact(mc.act(m, a))
            d3 = h.sweedler(a, 3)
            for x in xs:
                lhs = cma.leg_apply(1, lambda e: a_mod.act(h.inv_antipode(e), x))
                rhs = tensor([alg.zero()]).outer(tensor([mc.space.zero()]))
                for (h1, h2, h3), ch in d3.terms.items():
                    for (w, m0), cmc in cm.terms.items():
                        g = h.inv_antipode(h.from_word(w) * h.from_word(h1)) * h.from_word(h3)
                        rhs = rhs + tensor(
                            [a_mod.act(g, x), mc.act(mc.space.from_word(m0), h.from_word(h2))]
                        ).scale(ch * cmc)
                if lhs != rhs:
                    ayd_fails.append(
                        {
                            "m": str(m),
                            "h": str(a),
                            "a": str(x),
                            "lhs": str(lhs),
                            "difference": str(lhs - rhs),
                        }
                    )

    st_fails = []
    finite = mc.space.finite_basis is not None and alg.finite_basis is not None
    for m in ms:
        cm = mc.coact(m)
        for x in xs:
            left = tensor([m, x]).scale(0)
            for (w, m0), c in cm.terms.items():
                left = left + tensor(
                    [mc.space.from_word(m0), a_mod.act(h.inv_antipode(h.from_word(w)), x)]
                ).scale(c)
            diff = left - tensor([m, x])
            if diff.is_zero:
                continue
            if not finite:
                st_fails.append({"m": str(m), "a": str(x), "difference": str(diff)})
                continue
            from itertools import product as iproduct

            ambient = [
                (mw, aw)
                for mw, aw in iproduct(mc.space.basis_words(), alg.basis_words())
            ]
            index = {wt: i for i, wt in enumerate(ambient)}

            def vectorize(te):
                v = [F0] * len(ambient)
                for wt, c in te.terms.items():
                    v[index[wt]] += c
                return v

            rows = []
            for mw, aw in ambient:
                mm, aa = mc.space.from_word(mw), alg.from_word(aw)
                for g in hs:
                    acted = tensor([mc.act(mm, g)]).outer(tensor([aa])) - tensor(
                        [mm, aa]
                    ).scale(h.counit(g))
                    rows.append(vectorize(acted))
            if not in_rowspace(rows, vectorize(diff)):
                st_fails.append({"m": str(m), "a": str(x), "difference": str(diff)})

    return {
        "ok": not ayd_fails and not st_fails,
        "ayd": {"ok": not ayd_fails, "witnesses": ayd_fails[:3]},
        "stability": {"ok": not st_fails, "witnesses": st_fails[:3]},
    }


def check_action_shape(carrier, kind: str, degree: int = 2, index_bound: int = 2) -> dict:
    """Raw shape of an H-action on a carrier V.

    cocommutative: h⁽¹⁾v₁ ⊗ h⁽²⁾v₂ = h⁽²⁾v₁ ⊗ h⁽¹⁾v₂;
    commutative: h(g v) = g(h v).
    """
    h = carrier.hopf
    space = carrier.coalg if isinstance(carrier, HModuleCoalgebra) else carrier.alg
    hs = [h.from_word(w) for w in h.normal_words(degree, index_bound)]
    vs = [space.from_word(w) for w in space.normal_words(degree, index_bound)]
    fails = []
    if kind == "cocommutative":
        for a in hs:
            d = h.coproduct(a)
            for v1 in vs:
                for v2 in vs:
                    lhs = tensor([space.zero(), space.zero()])
                    rhs = tensor([space.zero(), space.zero()])
                    for (h1, h2), c in d.terms.items():
                        e1, e2 = h.from_word(h1), h.from_word(h2)
                        lhs = lhs + tensor([carrier.act(e1, v1), carrier.act(e2, v2)]).scale(c)
                        rhs = rhs + tensor([carrier.act(e2, v1), carrier.act(e1, v2)]).scale(c)
                    if lhs != rhs:
                        fails.append({"h": str(a), "v1": str(v1), "v2": str(v2)})
    elif kind == "commutative":
        for a in hs:
            for b in hs:
                for v in vs:
                    if carrier.act(a, carrier.act(b, v)) != carrier.act(b, carrier.act(a, v)):
                        fails.append({"h": str(a), "g": str(b), "v": str(v)})
    else:
        raise StructureError(f"unknown action shape {kind!r}")
    return {"ok": not fails, "witnesses": fails[:3]}


# -- coideal quotients ---------------------------------------------------------


def build_coideal_quotient_bicrossed(bc, delta: Character, degree: int = 3, index_bound: int = 3) -> dict:
    """The coideal quotient of H = F ▷◁ U by I = ker(ε ▷◁ id).

    The quotient map φ(f ▷◁ u) = ε(f)u identifies H/I with U; the report
    verifies that φ is a coalgebra map, that the induced action is
    (f ▷◁ u)·v = ε(f)uv on generators, and that S²(Xⁿ) − Xⁿ lies in the
    kernel for n ≤ 4.
    """
    h, u = bc.hopf, bc.mp.u
    checks = []

    fails = []
    for w in h.normal_words(degree, index_bound):
        e = h.from_word(w)
        lhs = u.coproduct(bc.project_u(e))
        rhs = h.coproduct(e).leg_apply(1, bc.project_u).leg_apply(2, bc.project_u)
        if lhs != rhs or u.counit(bc.project_u(e)) != h.counit(e):
            fails.append(str(e))
    checks.append({"name": "quotient map is a coalgebra map", "ok": not fails, "witnesses": fails[:3]})

    fails = []
    hgens = [h.gen(nm) if not fam else h.gen(nm, 1) for nm, fam in h.generators.items()]
    ugens = [u.gen(nm) for nm in u.generators]
    for a in hgens:
        for v in ugens:
            lhs = bc.project_u(a * bc.embed_u(v))
            rhs = bc.project_u(a) * v
            if lhs != rhs:
                fails.append(f"h={a}, v={v}")
    checks.append({"name": "induced action on generators", "ok": not fails, "witnesses": fails[:3]})

    fails = []
    x = h.gen("X")
    xn = h.unit()
    for n in range(1, 5):
        xn = xn * x
        img = bc.project_u(h.antipode(h.antipode(xn)) - xn)
        if not img.is_zero:
            fails.append(f"n={n}: {img}")
    checks.append({"name": "S²(Xⁿ) − Xⁿ in the kernel", "ok": not fails, "witnesses": fails})

    quotient_coalgebra = bicrossed_module_coalgebra_u(bc)
    if delta is None:
        delta = Character(
            h, {nm: ((lambda k: F0) if fam else F0) for nm, fam in h.generators.items()}
        )
    mpi = check_mpi(
        h,
        delta,
        GroupLike(h, h.unit(), h.unit()),
        quotient_coalgebra,
        variant="CH",
        degree=2,
        index_bound=2,
    )
    checks.append({"name": "modular pair in involution on the quotient", **mpi})

    return {"ok": all(c["ok"] for c in checks), "checks": checks, "quotient": quotient_coalgebra}


def _bicrossed_act_on_u(bc, a: AlgElt, v: AlgElt) -> AlgElt:
    """(f ▷◁ u) ▹ v = ε(f) u v, the induced action on the quotient U."""
    out = bc.mp.u.zero()
    for w, c in a.terms.items():
        fw, uw = bc.split_word(w)
        if fw == EMPTY_WORD:
            out = out + (bc.mp.u.from_word(uw) * v).scale(c)
    return out


def bicrossed_module_coalgebra_u(bc) -> HModuleCoalgebra:
    """C = U as a module coalgebra over the bicrossed product."""
    return HModuleCoalgebra(bc.hopf, bc.mp.u, lambda a, v: _bicrossed_act_on_u(bc, a, v))


def bicrossed_module_algebra_f(bc) -> HModuleAlgebra:
    """A = F as a module algebra over the bicrossed product:
    (f ▷◁ u) ▹ g = ε(f)(u ▹ g)."""

    def act(a: AlgElt, g: AlgElt) -> AlgElt:
        out = bc.mp.f.zero()
        for w, c in a.terms.items():
            fw, uw = bc.split_word(w)
            if fw == EMPTY_WORD:
                out = out + bc.mp.act(bc.mp.u.from_word(uw), g).scale(c)
        return out

    return HModuleAlgebra(bc.hopf, bc.mp.f, act)


def group_set_module_coalgebra(gs) -> HModuleCoalgebra:
    """The set coalgebra on the points of a finite group action, as a module
    coalgebra over the group algebra."""
    from .instances import build_group_algebra, build_set_coalgebra

    h = build_group_algebra(gs.group)
    c = build_set_coalgebra(gs.points)

    def act(a: AlgElt, x: AlgElt) -> AlgElt:
        out = c.zero()
        for hw, hc in a.terms.items():
            for cw, cc in x.terms.items():
                point = cw[0].name
                for g in reversed(hw):
                    point = gs.action[(g.name, point)]
                out = out + c.gen(point).scale(hc * cc)
        return out

    return HModuleCoalgebra(h, c, act)


def build_coideal_quotient_finite(
    c_mod: HModuleCoalgebra, delta: Character, sigma: GroupLike
) -> dict:
    """Finite-dimensional coideal quotient: I = span{S_δ²(h)c − σhσ⁻¹c},
    verified to satisfy Δ(I) ⊆ I⊗C + C⊗I, ε(I) = 0 and H·I ⊆ I; returns the
    quotient data."""
    from itertools import product as iproduct

    h, c = c_mod.hopf, c_mod.coalg
    cbasis = c.basis_words()
    index = {w: i for i, w in enumerate(cbasis)}
    dim = len(cbasis)

    def vec(e: AlgElt):
        v = [F0] * dim
        for w, co in e.terms.items():
            v[index[w]] += co
        return v

    gens = []
    for hw in h.basis_words():
        a = h.from_word(hw)
        twisted = s_delta(h, delta, s_delta(h, delta, a))
        conj = sigma.conjugate(a)
        for cw in cbasis:
            cc = c.from_word(cw)
            gens.append(vec(c_mod.act(twisted, cc) - c_mod.act(conj, cc)))
    quot = Quotient(gens, dim)
    ideal = quot.rel_rref

    def from_vec(v):
        return c.elt({cbasis[i]: x for i, x in enumerate(v) if x})

    checks = []
    # Δ(I) ⊆ I⊗C + C⊗I
    pair_index = {(w1, w2): i for i, (w1, w2) in enumerate(iproduct(cbasis, cbasis))}
    span_rows = []
    for iv in ideal:
        for cw in cbasis:
            row1 = [F0] * len(pair_index)
            row2 = [F0] * len(pair_index)
            for i, x in enumerate(iv):
                if x:
                    row1[pair_index[(cbasis[i], cw)]] += x
                    row2[pair_index[(cw, cbasis[i])]] += x
            span_rows.append(row1)
            span_rows.append(row2)
    fails = []
    for iv in ideal:
        d = c.coproduct(from_vec(iv))
        row = [F0] * len(pair_index)
        for (w1, w2), co in d.terms.items():
            row[pair_index[(w1, w2)]] += co
        if not in_rowspace(span_rows, row):
            fails.append(str(from_vec(iv)))
    checks.append({"name": "coideal coproduct condition", "ok": not fails, "witnesses": fails[:3]})

    fails = [str(from_vec(iv)) for iv in ideal if c.counit(from_vec(iv)) != 0]
    checks.append({"name": "counit vanishes on the coideal", "ok": not fails, "witnesses": fails[:3]})

    fails = []
    for iv in ideal:
        for hw in h.basis_words():
            img = c_mod.act(h.from_word(hw), from_vec(iv))
            if not quot.contains_in_relations(vec(img)):
                fails.append(f"h={h.from_word(hw)}, i={from_vec(iv)}")
    checks.append({"name": "coideal is an H-submodule", "ok": not fails, "witnesses": fails[:3]})

    return {
        "ok": all(ch["ok"] for ch in checks),
        "checks": checks,
        "quotient_dim": quot.dim,
        "quotient": quot,
    }


# -- the two counterexample evaluations ---------------------------------------


def counterexample_coalgebra(bc) -> dict:
    """M = H (multiplication action, trivial coaction) is not SAYD relative
    to C = U: at h = d[1] X, c = X, m = 1 the compatibility left side picks
    up an extra Y X ⊗ d[1]² term."""
    h = bc.hopf
    cu = bicrossed_module_coalgebra_u(bc)
    h_elt = h.gen("d", 1) * h.gen("X")
    c_elt = bc.mp.u.gen("X")
    m_elt = h.unit()
    d3 = h.sweedler(h_elt, 3)
    lhs = tensor([bc.mp.u.zero()]).outer(tensor([h.zero()]))
    for (h1, h2, h3), c in d3.terms.items():
        g = h.antipode(h.from_word(h3)) * h.from_word(h1)
        lhs = lhs + tensor([cu.act(g, c_elt), m_elt * h.from_word(h2)]).scale(c)
    rhs = tensor([c_elt, m_elt * h_elt])
    return {
        "h": str(h_elt),
        "c": str(c_elt),
        "m": str(m_elt),
        "lhs": str(lhs),
        "rhs": str(rhs),
        "difference": str(lhs - rhs),
        "nonzero": not (lhs - rhs).is_zero,
    }


def counterexample_algebra(bc) -> dict:
    """M = H (multiplication action, trivial coaction) is not SAYD relative
    to A = F: at h = d[1] X, m = 1, a = d[1] the left side of condition i)
    picks up an extra −d[1] ⊗ d[1]² term."""
    h = bc.hopf
    fa = bicrossed_module_algebra_f(bc)
    h_elt = h.gen("d", 1) * h.gen("X")
    a_elt = bc.mp.f.gen("d", 1)
    m_elt = h.unit()
    d3 = h.sweedler(h_elt, 3)
    lhs = tensor([bc.mp.f.zero()]).outer(tensor([h.zero()]))
    for (h1, h2, h3), c in d3.terms.items():
        g = h.inv_antipode(h.from_word(h1)) * h.from_word(h3)
        lhs = lhs + tensor([fa.act(g, a_elt), m_elt * h.from_word(h2)]).scale(c)
    rhs = tensor([a_elt, m_elt * h_elt])
    return {
        "h": str(h_elt),
        "a": str(a_elt),
        "m": str(m_elt),
        "lhs": str(lhs),
        "rhs": str(rhs),
        "difference": str(lhs - rhs),
        "nonzero": not (lhs - rhs).is_zero,
    }


# -- tensor of anti-Yetter-Drinfeld and Yetter-Drinfeld carriers ---------------


def tensor_ayd_yd(m: ModuleComodule, n: ModuleComodule, name: str = "m_tensor_n") -> ModuleComodule:
    """M ⊗ N with (m⊗n)h = mh⁽²⁾ ⊗ nh⁽¹⁾ and coaction
    m⊗n ↦ m⟨-1⟩ n⟨-1⟩ ⊗ m⟨0⟩ ⊗ n⟨0⟩; finite carriers only."""
    from itertools import product as iproduct

    if m.hopf.name != n.hopf.name:
        raise StructureError("carriers over different Hopf presentations")
    if m.space.finite_basis is None or n.space.finite_basis is None:
        raise PreconditionError("tensor product carrier requires finite factors")
    h = m.hopf
    pairs = list(iproduct(m.space.basis_words(), n.space.basis_words()))
    gens = {f"p{i}": False for i in range(len(pairs))}
    space = Presentation(
        name,
        gens,
        tuple(gens),
        [],
        finite_basis=[(Generator(f"p{i}"),) for i in range(len(pairs))],
    )
    pos = {pair: i for i, pair in enumerate(pairs)}

    def pack(em: AlgElt, en: AlgElt) -> AlgElt:
        terms = {}
        for wm, cm in em.terms.items():
            for wn, cn in en.terms.items():
                w = (Generator(f"p{pos[(wm, wn)]}"),)
                terms[w] = terms.get(w, F0) + cm * cn
        return space.elt(terms)

    def act(e: AlgElt, a: AlgElt) -> AlgElt:
        d = h.coproduct(a)
        out = space.zero()
        for w, c in e.terms.items():
            wm, wn = pairs[int(w[0].name[1:])]
            em, en = m.space.from_word(wm), n.space.from_word(wn)
            for (h1, h2), ch in d.terms.items():
                out = out + pack(
                    m.act(em, h.from_word(h2)), n.act(en, h.from_word(h1))
                ).scale(c * ch)
        return out

    def coact(e: AlgElt) -> TensorElt:
        out = tensor([h.zero()]).outer(tensor([space.zero()]))
        for w, c in e.terms.items():
            wm, wn = pairs[int(w[0].name[1:])]
            cm = m.coact(m.space.from_word(wm))
            cn = n.coact(n.space.from_word(wn))
            for (hm, m0), ccm in cm.terms.items():
                for (hn, n0), ccn in cn.terms.items():
                    out = out + tensor(
                        [
                            h.from_word(hm) * h.from_word(hn),
                            pack(m.space.from_word(m0), n.space.from_word(n0)),
                        ]
                    ).scale(c * ccm * ccn)
        return out

    return ModuleComodule(name, h, space, act, coact)
