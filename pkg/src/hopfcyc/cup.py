"""Cup products through the convolution algebra Hom_H(C, A).

A module coalgebra C acts on a module algebra A compatibly; H-linear maps
C -> A form the convolution algebra B, cochains pull back along the unital
algebra map χ: A -> B, and the pairing Ψ evaluates an equivariant A-side
cochain against convolution values on a C-side chain.  The cup product
lifts a bidegree (p, q) pair to the diagonal with the Alexander-Whitney
map: the A-side cochain climbs with last cofaces, the C-side chain with
zeroth cofaces, then Ψ and χ land the result in ordinary cochains on A.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct
from typing import Callable, List, Optional

from .core import AlgElt, TensorElt, tensor
from .coefficients import (
    HModuleAlgebra,
    HModuleCoalgebra,
    ModuleComodule,
    mc_trivial,
)
from .errors import PreconditionError, StructureError
from .instances import (
    GroupData,
    GroupSetData,
    build_function_algebra,
    build_group_algebra,
    build_set_coalgebra,
    cyclic_group,
)
from .linalg import F0, F1, nullspace, rank
from .cocyclic import (
    AlgebraCochainInstance,
    CoalgebraOps,
    RelativeTensorSpace,
    TensorBasis,
    op_matrix,
)


@dataclass
class CupInstance:
    """A finite group instance of the compatible (C, A) pair: C is the set
    coalgebra on the group with left translation, A the function algebra
    with right-translation action, and c·a evaluated pointwise."""

    group: GroupData
    mc: ModuleComodule
    c_mod: HModuleCoalgebra
    a_mod: HModuleAlgebra
    c_on_a: Callable[[AlgElt, AlgElt], AlgElt]


def build_group_cup_instance(
    group: Optional[GroupData] = None, graded: bool = False
) -> CupInstance:
    """``graded`` switches the coefficients from the trivial module to the
    group-graded one (coaction w -> w⊗w, trivial action)."""
    if group is None:
        group = cyclic_group(2)
    gs = GroupSetData(
        group, list(group.elements), {(a, x): group.mult[(a, x)] for a in group.elements for x in group.elements}
    )
    from .coefficients import group_set_module_coalgebra

    c_mod = group_set_module_coalgebra(gs)
    h = c_mod.hopf
    alg = build_function_algebra(group.elements, name="FunG")

    def point(word):
        return word[0].name[2:]

    def h_act(a: AlgElt, f: AlgElt) -> AlgElt:
        # g . e_x = e_{x g^{-1}}
        out = alg.zero()
        for hw, hc in a.terms.items():
            g = group.identity if hw == () else hw[0].name
            gi = group.inverse(g)
            for fw, fc in f.terms.items():
                out = out + alg.gen(f"e_{group.mult[(point(fw), gi)]}").scale(hc * fc)
        return out

    a_mod = HModuleAlgebra(h, alg, h_act)

    def c_on_a(c: AlgElt, f: AlgElt) -> AlgElt:
        # x . e_z = e_{z x^{-1}}
        out = alg.zero()
        for cw, cc in c.terms.items():
            x = cw[0].name
            xi = group.inverse(x)
            for fw, fc in f.terms.items():
                out = out + alg.gen(f"e_{group.mult[(point(fw), xi)]}").scale(cc * fc)
        return out

    if graded:
        from .coefficients import mc_graded_group

        mc = mc_graded_group(h, build_group_algebra(group, name="kG_coeff"))
    else:
        mc = mc_trivial(h)
    return CupInstance(group, mc, c_mod, a_mod, c_on_a)


def check_compatible_action(ci: CupInstance) -> dict:
    """The three compatibility conditions: (hc)a = h(ca), the coproduct
    rule c(ab) = (c⁽¹⁾a)(c⁽²⁾b), and c1 = ε(c)1, on the full bases."""
    h = ci.c_mod.hopf
    c = ci.c_mod.coalg
    alg = ci.a_mod.alg
    hs = [h.from_word(w) for w in h.basis_words()]
    cs = c.basis_elts()
    xs = alg.basis_elts()
    fails = []
    for cc in cs:
        if ci.c_on_a(cc, alg.unit()) != alg.unit().scale(c.counit(cc)):
            fails.append(f"unit: c={cc}")
        for a in xs:
            for hh in hs:
                if ci.c_on_a(ci.c_mod.act(hh, cc), a) != ci.a_mod.act(hh, ci.c_on_a(cc, a)):
                    fails.append(f"equivariance: h={hh}, c={cc}, a={a}")
            for b in xs:
                lhs = ci.c_on_a(cc, a * b)
                rhs = alg.zero()
                for (c1, c2), k in c.coproduct(cc).terms.items():
                    rhs = rhs + (
                        ci.c_on_a(c.from_word(c1), a) * ci.c_on_a(c.from_word(c2), b)
                    ).scale(k)
                if lhs != rhs:
                    fails.append(f"product rule: c={cc}, a={a}, b={b}")
    return {"ok": not fails, "witnesses": fails[:3]}


class ConvolutionElt:
    """An H-linear map C -> A on a finite instance, stored columnwise as
    images of the C basis."""

    def __init__(self, ci: CupInstance, images: List[AlgElt], check: bool = True):
        self.ci = ci
        c = ci.c_mod.coalg
        if len(images) != len(c.basis_words()):
            raise StructureError("one image per C basis element required")
        self.images = list(images)
        if check and not self.is_h_linear():
            raise StructureError("map is not H-linear")

    def __call__(self, x: AlgElt) -> AlgElt:
        c = self.ci.c_mod.coalg
        pos = {w: i for i, w in enumerate(c.basis_words())}
        out = self.ci.a_mod.alg.zero()
        for w, k in x.terms.items():
            out = out + self.images[pos[w]].scale(k)
        return out

    def is_h_linear(self) -> bool:
        h = self.ci.c_mod.hopf
        c = self.ci.c_mod.coalg
        for w in h.basis_words():
            hh = h.from_word(w)
            for cw in c.basis_words():
                cc = c.from_word(cw)
                if self(self.ci.c_mod.act(hh, cc)) != self.ci.a_mod.act(hh, self(cc)):
                    return False
        return True

    def __eq__(self, other):
        return isinstance(other, ConvolutionElt) and self.images == other.images

    def __hash__(self):
        raise TypeError("unhashable")


def unit_convolution(ci: CupInstance) -> ConvolutionElt:
    """η∘ε, the convolution unit."""
    c = ci.c_mod.coalg
    alg = ci.a_mod.alg
    return ConvolutionElt(
        ci, [alg.unit().scale(c.counit(c.from_word(w))) for w in c.basis_words()]
    )


def convolve(f: ConvolutionElt, g: ConvolutionElt) -> ConvolutionElt:
    """(f∗g)(c) = f(c⁽¹⁾) g(c⁽²⁾)."""
    ci = f.ci
    c = ci.c_mod.coalg
    images = []
    for w in c.basis_words():
        d = c.coproduct(c.from_word(w))
        val = ci.a_mod.alg.zero()
        for (c1, c2), k in d.terms.items():
            val = val + (f(c.from_word(c1)) * g(c.from_word(c2))).scale(k)
        images.append(val)
    return ConvolutionElt(ci, images, check=False)


def chi(ci: CupInstance, a: AlgElt) -> ConvolutionElt:
    """χ(a)(c) = c·a; a unital algebra map A -> Hom_H(C, A)."""
    c = ci.c_mod.coalg
    return ConvolutionElt(ci, [ci.c_on_a(c.from_word(w), a) for w in c.basis_words()])


def convolution_basis(ci: CupInstance) -> List[ConvolutionElt]:
    """A basis of the H-linear maps C -> A, from the nullspace of the
    linearity conditions."""
    c = ci.c_mod.coalg
    alg = ci.a_mod.alg
    cb = c.basis_words()
    ab = alg.basis_words()
    ncols = len(cb) * len(ab)
    h = ci.c_mod.hopf
    rows = []
    # unknowns x[j][k]: coefficient of a-basis k in the image of c-basis j
    for w in h.basis_words():
        hh = h.from_word(w)
        for j, cw in enumerate(cb):
            moved = ci.c_mod.act(hh, c.from_word(cw))  # combination of C basis
            for k, aw in enumerate(ab):
                # condition: f(h c_j) - h . f(c_j) = 0, coefficient of a-basis k
                row = [F0] * ncols
                for jj, cw2 in enumerate(cb):
                    mcoef = moved.coeff(cw2)
                    if mcoef:
                        row[jj * len(ab) + k] += mcoef
                acted = {}
                for kk, aw2 in enumerate(ab):
                    img = ci.a_mod.act(hh, alg.from_word(aw2))
                    if img.coeff(aw):
                        row[j * len(ab) + kk] -= img.coeff(aw)
                if any(row):
                    rows.append(row)
    basis = []
    for v in nullspace(rows, ncols):
        images = []
        for j in range(len(cb)):
            images.append(
                alg.elt({ab[k]: v[j * len(ab) + k] for k in range(len(ab)) if v[j * len(ab) + k]})
            )
        basis.append(ConvolutionElt(ci, images))
    return basis


def psi(ci: CupInstance, phi: Callable[[TensorElt], Fraction], chain: TensorElt, fs) -> Fraction:
    """Ψ(φ ⊗ m⊗c̃)(f₀⊗…⊗fₙ) = φ(m ⊗ f₀(c₀) ⊗ … ⊗ fₙ(cₙ))."""
    n = chain.legs - 2
    if len(fs) != n + 1:
        raise PreconditionError("one convolution element per C leg required")
    c = ci.c_mod.coalg
    out = Fraction(0)
    for wt, k in chain.terms.items():
        factors = [ci.mc.space.from_word(wt[0])]
        for i in range(n + 1):
            factors.append(fs[i](c.from_word(wt[i + 1])))
        out += k * phi(tensor(factors))
    return out


# -- the cup product at small bidegrees ---------------------------------------


@dataclass
class CupData:
    """Everything needed to cup at bidegrees with p + q <= top: the A-side
    cochain instance, the C-side ambient operators, and ordinary chain
    bases on A."""

    ci: CupInstance
    top: int

    def __post_init__(self):
        self.a_inst = AlgebraCochainInstance(self.ci.mc, self.ci.a_mod, self.top + 1)
        self.c_ops = CoalgebraOps(self.ci.mc, self.ci.c_mod)
        self.c_spaces = [
            RelativeTensorSpace(self.ci.mc, self.ci.c_mod, n) for n in range(self.top + 1)
        ]
        alg = self.ci.a_mod.alg
        self.a_chain_bases = [
            TensorBasis((alg,) * (n + 1)) for n in range(self.top + 2)
        ]

    # A-side equivariant cocycles, as functionals on the ambient chain
    # basis that vanish on the H-relations; cyclic adds the λ-invariance
    # constraint on top of b-closedness.
    def a_side_cocycles(self, p: int, cyclic: bool = True):
        inst = self.a_inst
        rows = list(inst.quots[p].rel_rref)
        basis = inst.bases[p]
        bchain = op_matrix(
            lambda x: self._a_chain_b(p + 1, x), inst.bases[p + 1], basis
        )
        for j in range(inst.bases[p + 1].dim):
            rows.append([bchain[r][j] for r in range(basis.dim)])
        if cyclic:
            tmat = op_matrix(lambda x: self.a_inst.ops.t(p, x), basis, basis)
            sign = F1 if p % 2 == 0 else -F1
            for j in range(basis.dim):
                row = [sign * tmat[r][j] for r in range(basis.dim)]
                row[j] -= F1
                rows.append(row)
        return nullspace(rows, basis.dim)

    def _a_chain_b(self, n: int, x: TensorElt) -> TensorElt:
        out = None
        sign = F1
        for i in range(n + 1):
            term = self.a_inst.ops.face(n, i, x).scale(sign)
            out = term if out is None else out + term
            sign = -sign
        return out

    # C-side cocycles in the relative quotient.
    def c_side_cocycles(self, q: int, cyclic: bool = True):
        sp = self.c_spaces[q]
        quot = sp.quot
        rows = []
        amb_b = op_matrix(
            lambda x: self._c_amb_b(q, x),
            sp.basis,
            RelativeTensorSpace(self.ci.mc, self.ci.c_mod, q + 1).basis
            if q + 1 > self.top
            else self.c_spaces[q + 1].basis,
        )
        tgt = (
            RelativeTensorSpace(self.ci.mc, self.ci.c_mod, q + 1)
            if q + 1 > self.top
            else self.c_spaces[q + 1]
        )
        bq = quot.induced_matrix(amb_b, tgt.quot)
        rows.extend(bq)
        if cyclic:
            amb_tau = op_matrix(lambda x: self.c_ops.tau(q, x), sp.basis, sp.basis)
            tq = quot.induced_matrix(amb_tau, quot)
            sign = F1 if q % 2 == 0 else -F1
            lam = [[sign * x for x in row] for row in tq]
            for i in range(quot.dim):
                row = list(lam[i])
                row[i] -= F1
                rows.append(row)
        kers = nullspace(rows, quot.dim)
        return [quot.include(v) for v in kers]

    def _c_amb_b(self, q: int, x: TensorElt) -> TensorElt:
        out = None
        sign = F1
        for i in range(q + 2):
            term = self.c_ops.coface(q + 1, i, x).scale(sign)
            out = term if out is None else out + term
            sign = -sign
        return out

    def cup(self, phi_row, p: int, z_amb, q: int):
        """AW lift and pairing: returns the cup cochain as a functional
        (row vector) on the ordinary chain basis of A^(p+q+1)."""
        n = p + q
        inst = self.a_inst
        # climb phi with last cofaces (precompose with last chain faces)
        row = list(phi_row)
        for k in range(p + 1, n + 1):
            face = op_matrix(
                lambda x, k=k: inst.ops.face(k, k, x), inst.bases[k], inst.bases[k - 1]
            )
            row = [
                sum(row[r] * face[r][j] for r in range(len(row)) if row[r])
                for j in range(inst.bases[k].dim)
            ]
        # climb z with zeroth cofaces
        sp_n = self.c_spaces[n]
        z = self.c_spaces[q].basis
        z_elt = None
        for j, k in enumerate(z_amb):
            if k:
                term = z.elt(j).scale(k)
                z_elt = term if z_elt is None else z_elt + term
        if z_elt is None:
            return [F0] * self.a_chain_bases[n].dim
        for k in range(q + 1, n + 1):
            z_elt = self.c_ops.coface(k, 0, z_elt)
        # pair: result(a_0..a_n) = phi'(m (x) c_0 a_0 (x) ... (x) c_n a_n)
        alg = self.ci.a_mod.alg
        c = self.ci.c_mod.coalg
        out = [F0] * self.a_chain_bases[n].dim
        phi_basis = inst.bases[n]
        for j, awt in enumerate(self.a_chain_bases[n].tuples):
            total = Fraction(0)
            for wt, kz in z_elt.terms.items():
                factors = [self.ci.mc.space.from_word(wt[0])]
                for i in range(n + 1):
                    factors.append(
                        self.ci.c_on_a(c.from_word(wt[i + 1]), alg.from_word(awt[i]))
                    )
                vec = phi_basis.vec(tensor(factors))
                total += kz * sum(row[r] * vec[r] for r in range(len(vec)) if vec[r])
            out[j] = total
        return out

    def ordinary_b_dual(self, n: int, row):
        """The Hochschild coboundary on ordinary cochains of A."""
        alg = self.ci.a_mod.alg
        src = self.a_chain_bases[n]
        tgt = self.a_chain_bases[n + 1]
        out = [F0] * tgt.dim
        for j, awt in enumerate(tgt.tuples):
            total = Fraction(0)
            sign = F1
            for i in range(n + 1):
                merged = alg.from_word(awt[i]) * alg.from_word(awt[i + 1])
                rest = list(awt[:i]) + [None] + list(awt[i + 2 :])
                for mw, mk in merged.terms.items():
                    wt = tuple(mw if r is None else r for r in rest)
                    total += sign * mk * row[src.index[wt]]
                sign = -sign
            wrap = alg.from_word(awt[n + 1]) * alg.from_word(awt[0])
            for mw, mk in wrap.terms.items():
                wt = (mw,) + awt[1 : n + 1]
                total += sign * mk * row[src.index[wt]]
            out[j] = total
        return out

    def ordinary_t_dual(self, n: int, row):
        """(t f)(a₀…aₙ) = f(aₙ, a₀, …, a_{n-1}) on ordinary cochains."""
        src = self.a_chain_bases[n]
        out = [F0] * src.dim
        for j, awt in enumerate(src.tuples):
            rotated = (awt[n],) + awt[:n]
            out[src.index[rotated]] = row[j]
        return out


def check_cup_suite(group: Optional[GroupData] = None, top: int = 2, graded: bool = True) -> dict:
    """The full cup battery on a group instance: convolution algebra
    axioms, χ as a unital algebra map, and b(cup) = 0 at all bidegrees
    with p + q <= top for cocycle inputs.  Graded coefficients keep the
    degree-one cocycle spaces nonzero."""
    ci = build_group_cup_instance(group, graded=graded)
    checks = []

    rep = check_compatible_action(ci)
    checks.append({"name": "compatible action", **rep})

    basis = convolution_basis(ci)
    unit = unit_convolution(ci)
    fails = []
    for f in basis:
        if convolve(f, unit) != f or convolve(unit, f) != f:
            fails.append("unit")
        for g in basis:
            for k in basis:
                if convolve(convolve(f, g), k) != convolve(f, convolve(g, k)):
                    fails.append("associativity")
    checks.append({"name": "convolution algebra", "ok": not fails, "witnesses": fails[:3]})

    alg = ci.a_mod.alg
    fails = []
    if chi(ci, alg.unit()) != unit:
        fails.append("chi(1)")
    for x in alg.basis_elts():
        for y in alg.basis_elts():
            if chi(ci, x * y) != convolve(chi(ci, x), chi(ci, y)):
                fails.append(f"chi multiplicative: {x}, {y}")
    checks.append({"name": "chi algebra map", "ok": not fails, "witnesses": fails[:3]})

    data = CupData(ci, top)
    fails = []
    used = {}
    for p in range(top + 1):
        for q in range(top + 1 - p):
            # prefer cyclic cocycles; when the λ-constraint empties the
            # space, Hochschild cocycles still must cup to closed cochains
            phis = data.a_side_cocycles(p)
            phi_kind = "cyclic"
            if not phis:
                phis = data.a_side_cocycles(p, cyclic=False)
                phi_kind = "hochschild"
            zs = data.c_side_cocycles(q)
            z_kind = "cyclic"
            if not zs:
                zs = data.c_side_cocycles(q, cyclic=False)
                z_kind = "hochschild"
            used[f"{p},{q}"] = f"{phi_kind}/{z_kind}"
            if not phis or not zs:
                fails.append(f"no cocycles at bidegree ({p},{q})")
                continue
            for phi in phis:
                for z in zs:
                    res = data.cup(phi, p, z, q)
                    if any(data.ordinary_b_dual(p + q, res)):
                        fails.append(f"cup not closed at ({p},{q})")
    checks.append(
        {"name": "cup closed", "ok": not fails, "witnesses": fails[:5], "inputs": used}
    )

    return {"ok": all(c["ok"] for c in checks), "checks": checks}
