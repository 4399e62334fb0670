"""Cocyclic structures for module coalgebras and module algebras.

The coalgebra side works on chains m ⊗ c₀ ⊗ … ⊗ cₙ with the coefficient
leg first; the equivariant space Cⁿ_H(C, M) is the quotient of the ambient
tensor space by the ⊗_H relations, realized for finite instances by exact
linear algebra.  The algebra side builds the chain-level operators on
M ⊗ A^⊗(n+1); cochains are dual vectors on the H-coinvariant quotient and
cochain operators are transposes of the induced chain matrices.

Cyclic cohomology is computed two independent ways: on the subcomplex of
signed τ-invariant cochains, and through a truncated cyclic bicomplex;
agreement of the two is part of the test surface.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iproduct
from typing import Callable, Optional

from .core import AlgElt, EMPTY_WORD, TensorElt, tensor
from .coefficients import HModuleAlgebra, HModuleCoalgebra, ModuleComodule
from .errors import PreconditionError, StructureError
from .linalg import (
    F0,
    F1,
    Matrix,
    Quotient,
    cohomology_dims,
    identity,
    is_zero_matrix,
    mat_mul,
    mat_sub,
    nullspace,
    rank,
    transpose,
    zeros,
)


class TensorBasis:
    """Deterministic basis of a tensor product of finite carriers."""

    def __init__(self, prs):
        self.prs = tuple(prs)
        bases = [p.basis_words() for p in self.prs]
        self.tuples = list(iproduct(*bases))
        self.index = {wt: i for i, wt in enumerate(self.tuples)}
        self.dim = len(self.tuples)

    def vec(self, te: TensorElt):
        v = [F0] * self.dim
        for wt, c in te.terms.items():
            i = self.index.get(wt)
            if i is None:
                raise StructureError(f"tensor term {wt} outside the finite basis")
            v[i] += c
        return v

    def elt(self, i: int) -> TensorElt:
        wt = self.tuples[i]
        return tensor([p.from_word(w) for p, w in zip(self.prs, wt)])


def op_matrix(op: Callable[[TensorElt], TensorElt], src: TensorBasis, tgt: TensorBasis) -> Matrix:
    """Matrix (tgt.dim x src.dim) of a linear chain operator."""
    cols = [tgt.vec(op(src.elt(j))) for j in range(src.dim)]
    return [[cols[j][i] for j in range(src.dim)] for i in range(tgt.dim)]


# -- coalgebra-side symbolic operators ----------------------------------------


@dataclass
class CoalgebraOps:
    """The (para)cocyclic operators on chains m ⊗ c₀ ⊗ … ⊗ cₙ.

    Legs are 1-based on the TensorElt: leg 1 is M, leg i+2 is c_i.
    """

    mc: ModuleComodule
    c_mod: HModuleCoalgebra

    def _nlegs(self, x: TensorElt, n: int):
        if x.legs != n + 2:
            raise StructureError(f"chain of degree {n} needs {n + 2} legs, got {x.legs}")

    def coface(self, n: int, i: int, x: TensorElt) -> TensorElt:
        """∂_i: degree n-1 chains to degree n chains, 0 <= i <= n."""
        self._nlegs(x, n - 1)
        c = self.c_mod.coalg
        if i < n:
            return x.leg_apply(i + 2, c.coproduct)
        # last coface: m⟨0⟩ ⊗ c₀⁽²⁾ ⊗ c₁ ⊗ … ⊗ m⟨-1⟩ c₀⁽¹⁾
        h = self.mc.hopf
        out = None
        for wt, cf in x.terms.items():
            m = self.mc.space.from_word(wt[0])
            cm = self.mc.coact(m)
            dc = c.coproduct(c.from_word(wt[1]))
            mids = [c.from_word(w) for w in wt[2:]]
            for (w, m0), cc in cm.terms.items():
                for (c1, c2), cd in dc.terms.items():
                    factors = (
                        [self.mc.space.from_word(m0), c.from_word(c2)]
                        + mids
                        + [self.c_mod.act(h.from_word(w), c.from_word(c1))]
                    )
                    term = tensor(factors).scale(cf * cc * cd)
                    out = term if out is None else out + term
        if out is None:
            prs = (self.mc.space,) + (c,) * (n + 1)
            return TensorElt(prs, {}, _normalized=True)
        return out

    def codegeneracy(self, n: int, i: int, x: TensorElt) -> TensorElt:
        """σ_i: degree n+1 chains to degree n chains, 0 <= i <= n; applies
        the counit at position i+1, matching the coface insertion index."""
        self._nlegs(x, n + 1)
        return x.leg_scalar(i + 3, self.c_mod.coalg.counit)

    def tau(self, n: int, x: TensorElt) -> TensorElt:
        """τ_n: m ⊗ c̃ to m⟨0⟩ ⊗ c₁ ⊗ … ⊗ cₙ ⊗ m⟨-1⟩ c₀."""
        self._nlegs(x, n)
        h = self.mc.hopf
        c = self.c_mod.coalg
        out = None
        for wt, cf in x.terms.items():
            m = self.mc.space.from_word(wt[0])
            cm = self.mc.coact(m)
            mids = [c.from_word(w) for w in wt[2:]]
            for (w, m0), cc in cm.terms.items():
                factors = (
                    [self.mc.space.from_word(m0)]
                    + mids
                    + [self.c_mod.act(h.from_word(w), c.from_word(wt[1]))]
                )
                term = tensor(factors).scale(cf * cc)
                out = term if out is None else out + term
        if out is None:
            return x
        return out


class RelativeTensorSpace:
    """M ⊗_H C^⊗(n+1) for a finite instance: the quotient of the ambient
    basis by the relations mh ⊗ c̃ − m ⊗ h⁽¹⁾c₀ ⊗ … ⊗ h⁽ⁿ⁺¹⁾cₙ."""

    def __init__(self, mc: ModuleComodule, c_mod: HModuleCoalgebra, n: int):
        if mc.space.finite_basis is None or c_mod.coalg.finite_basis is None:
            raise PreconditionError("relative tensor quotient needs finite carriers")
        self.mc = mc
        self.c_mod = c_mod
        self.n = n
        h = mc.hopf
        c = c_mod.coalg
        self.basis = TensorBasis((mc.space,) + (c,) * (n + 1))
        rows = []
        hws = [w for w in h.normal_words(2, 2) if w != EMPTY_WORD]
        for j in range(self.basis.dim):
            x = self.basis.elt(j)
            for hw in hws:
                a = h.from_word(hw)
                left = x.leg_apply(1, lambda m: mc.act(m, a))
                dn = h.sweedler(a, n + 1)
                right = left.scale(0)
                for wt, cf in x.terms.items():
                    m = mc.space.from_word(wt[0])
                    for legs, ch in dn.terms.items():
                        fs = [m] + [
                            c_mod.act(h.from_word(legs[i]), c.from_word(wt[i + 1]))
                            for i in range(n + 1)
                        ]
                        right = right + tensor(fs).scale(cf * ch)
                rows.append(
                    [u - v for u, v in zip(self.basis.vec(left), self.basis.vec(right))]
                )
        self.relations = rows
        self.quot = Quotient(rows, self.basis.dim)

    @property
    def dim(self):
        return self.quot.dim

    def contains(self, te: TensorElt) -> bool:
        return self.quot.contains_in_relations(self.basis.vec(te))


@dataclass
class CocyclicInstance:
    """Exact matrices of a cocyclic object on quotient spaces in degrees
    0..N: cofaces ∂_i: n-1 -> n, codegeneracies σ_i: n+1 -> n, and τ_n."""

    dims: list
    coface: dict  # (n, i) -> Matrix, maps degree n-1 to n, 1 <= n <= N, 0 <= i <= n
    codeg: dict  # (n, i) -> Matrix, maps degree n+1 to n, 0 <= n <= N-1, 0 <= i <= n
    tau: dict  # n -> Matrix
    welldef_failures: list = field(default_factory=list)
    verified: bool = False

    @property
    def top(self):
        return len(self.dims) - 1

    def b(self, n: int) -> Matrix:
        """Hochschild coboundary C^n -> C^(n+1) (alternating coface sum)."""
        out = zeros(self.dims[n + 1], self.dims[n])
        sign = F1
        for i in range(n + 2):
            m = self.coface[(n + 1, i)]
            for r in range(len(out)):
                row, mrow = out[r], m[r]
                for cidx in range(len(row)):
                    if mrow[cidx]:
                        row[cidx] += sign * mrow[cidx]
            sign = -sign
        return out

    def b_prime(self, n: int) -> Matrix:
        """Coboundary without the last coface."""
        out = zeros(self.dims[n + 1], self.dims[n])
        sign = F1
        for i in range(n + 1):
            m = self.coface[(n + 1, i)]
            for r in range(len(out)):
                row, mrow = out[r], m[r]
                for cidx in range(len(row)):
                    if mrow[cidx]:
                        row[cidx] += sign * mrow[cidx]
            sign = -sign
        return out

    def lam(self, n: int) -> Matrix:
        """The signed cyclic operator λ_n = (-1)^n τ_n."""
        s = F1 if n % 2 == 0 else -F1
        return [[s * x for x in row] for row in self.tau[n]]

    def norm(self, n: int) -> Matrix:
        """N = 1 + λ + … + λⁿ."""
        lam = self.lam(n)
        acc = identity(self.dims[n])
        out = identity(self.dims[n])
        for _ in range(n):
            acc = mat_mul(lam, acc)
            out = [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(out, acc)]
        return out

    def to_json(self) -> dict:
        def sparse(m):
            trips = []
            for i, row in enumerate(m):
                for j, x in enumerate(row):
                    if x:
                        trips.append([i, j, f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)])
            return trips

        return {
            "dims": list(self.dims),
            "coface": {f"{n},{i}": sparse(m) for (n, i), m in sorted(self.coface.items())},
            "codegeneracy": {f"{n},{i}": sparse(m) for (n, i), m in sorted(self.codeg.items())},
            "tau": {str(n): sparse(m) for n, m in sorted(self.tau.items())},
            "verified": self.verified,
        }


def build_coalgebra_instance(mc: ModuleComodule, c_mod: HModuleCoalgebra, top: int) -> CocyclicInstance:
    """Assemble the quotient-space matrices of the coalgebra-side cocyclic
    object through degree ``top``, recording any operator that fails to
    descend to the quotients."""
    ops = CoalgebraOps(mc, c_mod)
    spaces = [RelativeTensorSpace(mc, c_mod, n) for n in range(top + 1)]
    dims = [sp.dim for sp in spaces]
    coface, codeg, tau = {}, {}, {}
    failures = []

    def induce(op, ns, nt, label):
        amb = op_matrix(op, spaces[ns].basis, spaces[nt].basis)
        if not spaces[ns].quot.preserves_relations(amb, spaces[nt].quot):
            failures.append(label)
        return spaces[ns].quot.induced_matrix(amb, spaces[nt].quot)

    for n in range(1, top + 1):
        for i in range(n + 1):
            coface[(n, i)] = induce(
                lambda x, n=n, i=i: ops.coface(n, i, x), n - 1, n, f"coface({n},{i})"
            )
    for n in range(top):
        for i in range(n + 1):
            codeg[(n, i)] = induce(
                lambda x, n=n, i=i: ops.codegeneracy(n, i, x), n + 1, n, f"codegeneracy({n},{i})"
            )
    for n in range(top + 1):
        tau[n] = induce(lambda x, n=n: ops.tau(n, x), n, n, f"tau({n})")

    return CocyclicInstance(dims, coface, codeg, tau, welldef_failures=failures)


def check_cocyclic(inst: CocyclicInstance, upto: Optional[int] = None) -> dict:
    """Verify the cosimplicial, mixed and cyclic identities as exact matrix
    equations, including τⁿ⁺¹ = id and the last-coface factorization
    ∂_n = τ_n ∘ ∂₀.  Marks the instance verified on success."""
    top = inst.top
    upto = top if upto is None else min(upto, top)
    fails = []

    def eq(a, b, label):
        if a != b:
            fails.append(label)

    if inst.welldef_failures:
        fails.extend(f"not well-defined: {w}" for w in inst.welldef_failures)

    for n in range(1, upto):
        # cofaces from degree n-1 to n+1
        for i in range(n + 1):
            for j in range(i + 1, n + 2):
                eq(
                    mat_mul(inst.coface[(n + 1, j)], inst.coface[(n, i)]),
                    mat_mul(inst.coface[(n + 1, i)], inst.coface[(n, j - 1)]),
                    f"coface identity ({n},{i},{j})",
                )
    for n in range(upto - 1):
        for i in range(n + 1):
            for j in range(i, n + 1):
                eq(
                    mat_mul(inst.codeg[(n, j)], inst.codeg[(n + 1, i)]),
                    mat_mul(inst.codeg[(n, i)], inst.codeg[(n + 1, j + 1)]),
                    f"codegeneracy identity ({n},{i},{j})",
                )
    for n in range(1, upto):
        ident = identity(inst.dims[n])
        for j in range(n):
            for i in range(n + 2):
                lhs = mat_mul(inst.codeg[(n, j)], inst.coface[(n + 1, i)])
                if i < j:
                    eq(lhs, mat_mul(inst.coface[(n, i)], inst.codeg[(n - 1, j - 1)]), f"mixed ({n},{i},{j})")
                elif i in (j, j + 1):
                    eq(lhs, ident, f"mixed identity ({n},{i},{j})")
                else:
                    eq(lhs, mat_mul(inst.coface[(n, i - 1)], inst.codeg[(n - 1, j)]), f"mixed ({n},{i},{j})")

    for n in range(upto + 1):
        power = identity(inst.dims[n])
        for _ in range(n + 1):
            power = mat_mul(inst.tau[n], power)
        eq(power, identity(inst.dims[n]), f"tau^(n+1) at n={n}")
    for n in range(1, upto + 1):
        eq(
            inst.coface[(n, n)],
            mat_mul(inst.tau[n], inst.coface[(n, 0)]),
            f"last coface = tau.coface0 at n={n}",
        )
        for i in range(1, n + 1):
            eq(
                mat_mul(inst.tau[n], inst.coface[(n, i)]),
                mat_mul(inst.coface[(n, i - 1)], inst.tau[n - 1]),
                f"tau-coface ({n},{i})",
            )
    for n in range(upto - 1):
        for i in range(1, n + 1):
            eq(
                mat_mul(inst.tau[n], inst.codeg[(n, i)]),
                mat_mul(inst.codeg[(n, i - 1)], inst.tau[n + 1]),
                f"tau-codegeneracy ({n},{i})",
            )
        eq(
            mat_mul(inst.tau[n], inst.codeg[(n, 0)]),
            mat_mul(inst.codeg[(n, n)], mat_mul(inst.tau[n + 1], inst.tau[n + 1])),
            f"tau-codegeneracy-0 ({n})",
        )

    ok = not fails
    inst.verified = inst.verified or ok
    return {"ok": ok, "witnesses": fails[:5]}


def cyclic_cohomology(inst: CocyclicInstance, upto: int) -> dict:
    """Cyclic cohomology dimensions by two independent routes.

    Route one restricts the coboundary b to the signed τ-invariant
    subcomplex.  Route two totalizes the first-quadrant cyclic bicomplex
    (columns alternate b and b', rows alternate 1−λ and N with the Koszul
    sign on the horizontals), truncated two columns past the requested
    degree.  Refuses unverified instances.
    """
    if not inst.verified:
        raise PreconditionError("cyclic cohomology requires a verified cocyclic instance")
    if inst.top < upto + 1:
        raise PreconditionError("instance too shallow for the requested degree")

    # route one: the lambda-subcomplex
    kernels = []
    for n in range(upto + 2):
        diff = mat_sub(identity(inst.dims[n]), inst.lam(n))
        kernels.append(nullspace(diff, inst.dims[n]))
    lam_dims = []
    ranks = []
    for n in range(upto + 1):
        bmat = inst.b(n)
        imgs = [  # b applied to each kernel basis vector
            [sum(bmat[r][c] * v[c] for c in range(len(v)) if v[c]) for r in range(len(bmat))]
            for v in kernels[n]
        ]
        ranks.append(rank(imgs))
    for n in range(upto + 1):
        ker = len(kernels[n]) - ranks[n]
        im = ranks[n - 1] if n > 0 else 0
        lam_dims.append(ker - im)

    # route two: truncated cyclic bicomplex
    cols = upto + 3  # columns p = 0..upto+2
    def cell_dim(p, q):
        return inst.dims[q] if 0 <= q <= inst.top and 0 <= p < cols else 0

    def tot_cells(n):
        return [(p, n - p) for p in range(cols) if cell_dim(p, n - p) > 0]

    def tot_dim(n):
        return sum(cell_dim(p, q) for p, q in tot_cells(n))

    def tot_diff(n):
        src = tot_cells(n)
        tgt = tot_cells(n + 1)
        tgt_off = {}
        off = 0
        for cell in tgt:
            tgt_off[cell] = off
            off += cell_dim(*cell)
        mat = zeros(tot_dim(n + 1), tot_dim(n))
        off = 0
        for p, q in src:
            d = cell_dim(p, q)
            # vertical: b on even columns, b' on odd columns; the squares
            # commute, so the Koszul sign sits on the horizontal arrows
            if (p, q + 1) in tgt_off and q + 1 <= inst.top:
                block = inst.b(q) if p % 2 == 0 else inst.b_prime(q)
                r0 = tgt_off[(p, q + 1)]
                for i in range(len(block)):
                    for j in range(d):
                        if block[i][j]:
                            mat[r0 + i][off + j] += block[i][j]
            # horizontal: 1-lambda from even columns, N from odd columns
            if (p + 1, q) in tgt_off:
                block = (
                    mat_sub(identity(inst.dims[q]), inst.lam(q))
                    if p % 2 == 0
                    else inst.norm(q)
                )
                sign = -F1 if q % 2 == 1 else F1
                r0 = tgt_off[(p + 1, q)]
                for i in range(inst.dims[q]):
                    for j in range(d):
                        if block[i][j]:
                            mat[r0 + i][off + j] += sign * block[i][j]
            off += d
        return mat

    diffs = [tot_diff(n) for n in range(upto + 1)]
    dims = [tot_dim(n) for n in range(upto + 2)]
    for n in range(upto):
        if not is_zero_matrix(mat_mul(diffs[n + 1], diffs[n])):
            raise StructureError(f"bicomplex total differential fails d*d = 0 at degree {n}")
    bic_dims = cohomology_dims(diffs, dims, upto)

    return {
        "lambda_complex": lam_dims,
        "bicomplex": bic_dims,
        "agree": lam_dims == bic_dims,
    }


# -- algebra-side operators ----------------------------------------------------


@dataclass
class AlgebraChainOps:
    """Chain-level operators on M ⊗ A^⊗(n+1); cochain operators arise as
    transposes of the induced quotient matrices."""

    mc: ModuleComodule
    a_mod: HModuleAlgebra

    def face(self, n: int, i: int, x: TensorElt) -> TensorElt:
        """D_i: degree n chains to degree n-1 chains, 0 <= i <= n."""
        if x.legs != n + 2:
            raise StructureError("chain leg mismatch")
        alg = self.a_mod.alg
        h = self.mc.hopf
        if i < n:
            # merge A legs i and i+1
            out = None
            for wt, cf in x.terms.items():
                factors = [self.mc.space.from_word(wt[0])]
                factors += [alg.from_word(w) for w in wt[1 : i + 1]]
                factors.append(alg.from_word(wt[i + 1]) * alg.from_word(wt[i + 2]))
                factors += [alg.from_word(w) for w in wt[i + 3 :]]
                term = tensor(factors).scale(cf)
                out = term if out is None else out + term
            return out if out is not None else x.leg_scalar(2, lambda e: F0)
        # last face: m⟨0⟩ ⊗ (S⁻¹(m⟨-1⟩)aₙ)a₀ ⊗ a₁ ⊗ … ⊗ a_{n-1}
        out = None
        for wt, cf in x.terms.items():
            m = self.mc.space.from_word(wt[0])
            cm = self.mc.coact(m)
            an = alg.from_word(wt[-1])
            a0 = alg.from_word(wt[1])
            mids = [alg.from_word(w) for w in wt[2:-1]]
            for (w, m0), cc in cm.terms.items():
                twisted = self.a_mod.act(h.inv_antipode(h.from_word(w)), an)
                factors = [self.mc.space.from_word(m0), twisted * a0] + mids
                term = tensor(factors).scale(cf * cc)
                out = term if out is None else out + term
        return out

    def degeneracy(self, n: int, i: int, x: TensorElt) -> TensorElt:
        """S_i: insert the unit after A position i, degree n to n+1."""
        if x.legs != n + 2:
            raise StructureError("chain leg mismatch")
        alg = self.a_mod.alg
        out = None
        for wt, cf in x.terms.items():
            factors = [self.mc.space.from_word(wt[0])]
            factors += [alg.from_word(w) for w in wt[1 : i + 2]]
            factors.append(alg.unit())
            factors += [alg.from_word(w) for w in wt[i + 2 :]]
            term = tensor(factors).scale(cf)
            out = term if out is None else out + term
        return out

    def t(self, n: int, x: TensorElt) -> TensorElt:
        """T_n: m ⊗ ã to m⟨0⟩ ⊗ S⁻¹(m⟨-1⟩)aₙ ⊗ a₀ ⊗ … ⊗ a_{n-1}."""
        if x.legs != n + 2:
            raise StructureError("chain leg mismatch")
        alg = self.a_mod.alg
        h = self.mc.hopf
        out = None
        for wt, cf in x.terms.items():
            m = self.mc.space.from_word(wt[0])
            cm = self.mc.coact(m)
            an = alg.from_word(wt[-1])
            rest = [alg.from_word(w) for w in wt[1:-1]]
            for (w, m0), cc in cm.terms.items():
                twisted = self.a_mod.act(h.inv_antipode(h.from_word(w)), an)
                term = tensor([self.mc.space.from_word(m0), twisted] + rest).scale(cf * cc)
                out = term if out is None else out + term
        return out

    def diagonal_action(self, n: int, x: TensorElt, a: AlgElt) -> TensorElt:
        """(m ⊗ ã)h = mh⁽¹⁾ ⊗ S(h⁽ⁿ⁺²⁾)a₀ ⊗ … ⊗ S(h⁽²⁾)aₙ."""
        alg = self.a_mod.alg
        h = self.mc.hopf
        d = h.sweedler(a, n + 2)
        out = None
        for wt, cf in x.terms.items():
            m = self.mc.space.from_word(wt[0])
            for legs, ch in d.terms.items():
                factors = [self.mc.act(m, h.from_word(legs[0]))]
                for i in range(n + 1):
                    factors.append(
                        self.a_mod.act(
                            h.antipode(h.from_word(legs[n + 1 - i])), alg.from_word(wt[i + 1])
                        )
                    )
                term = tensor(factors).scale(cf * ch)
                out = term if out is None else out + term
        return out


class AlgebraCochainInstance:
    """The cocyclic object on cochains C^n_H(A, M) of a finite instance.

    Chain quotients divide by span{xh − ε(h)x}; cochain operators are
    transposes of the induced chain matrices, so cofaces raise degree.
    """

    def __init__(self, mc: ModuleComodule, a_mod: HModuleAlgebra, top: int):
        self.mc = mc
        self.a_mod = a_mod
        self.top = top
        self.ops = AlgebraChainOps(mc, a_mod)
        h = mc.hopf
        self.bases = [
            TensorBasis((mc.space,) + (a_mod.alg,) * (n + 1)) for n in range(top + 1)
        ]
        self.quots = []
        hws = [w for w in h.normal_words(2, 2) if w != EMPTY_WORD]
        for n in range(top + 1):
            rows = []
            for j in range(self.bases[n].dim):
                x = self.bases[n].elt(j)
                for hw in hws:
                    a = h.from_word(hw)
                    acted = self.ops.diagonal_action(n, x, a)
                    base = x.scale(h.counit(a))
                    rows.append(
                        [
                            u - v
                            for u, v in zip(
                                self.bases[n].vec(acted), self.bases[n].vec(base)
                            )
                        ]
                    )
            self.quots.append(Quotient(rows, self.bases[n].dim))
        self.dims = [q.dim for q in self.quots]
        self.welldef_failures = []
        # chain matrices on quotients
        self.chain_face = {}
        self.chain_degeneracy = {}
        self.chain_t = {}
        for n in range(1, top + 1):
            for i in range(n + 1):
                self.chain_face[(n, i)] = self._induce(
                    lambda x, n=n, i=i: self.ops.face(n, i, x), n, n - 1, f"face({n},{i})"
                )
        for n in range(top):
            for i in range(n + 1):
                self.chain_degeneracy[(n, i)] = self._induce(
                    lambda x, n=n, i=i: self.ops.degeneracy(n, i, x),
                    n,
                    n + 1,
                    f"degeneracy({n},{i})",
                )
        for n in range(top + 1):
            self.chain_t[n] = self._induce(
                lambda x, n=n: self.ops.t(n, x), n, n, f"t({n})"
            )

    def _induce(self, op, ns, nt, label):
        amb = op_matrix(op, self.bases[ns], self.bases[nt])
        if not self.quots[ns].preserves_relations(amb, self.quots[nt]):
            self.welldef_failures.append(label)
        return self.quots[ns].induced_matrix(amb, self.quots[nt])

    def cocyclic_instance(self) -> CocyclicInstance:
        """Transpose everything into a coface-style cocyclic instance."""
        coface = {(n, i): transpose(m) for (n, i), m in self.chain_face.items()}
        codeg = {(n, i): transpose(m) for (n, i), m in self.chain_degeneracy.items()}
        tau = {n: transpose(m) for n, m in self.chain_t.items()}
        return CocyclicInstance(
            list(self.dims), coface, codeg, tau, welldef_failures=list(self.welldef_failures)
        )
