"""Generalized Verma modules over divergence-free vector fields, bounded depth.

The degree -1 part of the algebra is the abelian span of the d/dx_i, so PBW
monomials are plain exponent tuples.  Elements are finite sums of
(PBW monomial) tensor (basis vector of the coefficient module F).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .linalg import in_span, nullspace, rank
from .polynomials import Poly
from .slnrep import WeightModule
from .vfields import VectorField, sn_homogeneous_basis

PBW = Tuple[int, ...]
TermKey = Tuple[PBW, int]  # (pbw exponents, F basis index)


class VermaContext:
    """Action bookkeeping for M(F) at a fixed depth bound."""

    def __init__(self, module: WeightModule, depth_bound: int = 3):
        self.module = module
        self.n = module.n
        self.depth_bound = depth_bound
        self._mono_cache: Dict = {}
        # traceless lift of the diagonal weight values, per basis vector
        lam = module.highest
        n = module.n
        shift = Fraction(sum((i + 1) * lam[i] for i in range(n - 1)), n)
        self._eps_top = [Fraction(sum(lam[a - 1:])) - shift for a in range(1, n + 1)]

    def eps_value(self, a: int, idx: int) -> Fraction:
        """Value of the (traceless-lifted) E_aa on basis vector idx."""
        c = self.module.basis_weights[idx]
        val = self._eps_top[a - 1]
        for t, ct in enumerate(c, start=1):
            if ct:
                val -= ct * ((t == a) - (t + 1 == a))
        return val

    def zero(self) -> "VermaElement":
        return VermaElement(self, {})

    def top(self, idx: int = 0) -> "VermaElement":
        """1 (x) v for the idx-th basis vector of F (default: highest weight)."""
        return VermaElement(self, {((0,) * self.n, idx): Fraction(1)})

    def act_monomial_field(self, exps: PBW, k: int, pbw: PBW, label: int) -> Dict[TermKey, Fraction]:
        """Action of x^exps * d/dx_k on the single term pbw (x) label."""
        key = (exps, k, pbw, label)
        cached = self._mono_cache.get(key)
        if cached is not None:
            return cached
        out = self._act_mono_uncached(exps, k, pbw, label)
        self._mono_cache[key] = out
        return out

    def _act_mono_uncached(self, exps, k, pbw, label) -> Dict[TermKey, Fraction]:
        i = next((t for t, e in enumerate(pbw) if e), None)
        if i is None:
            deg = sum(exps)
            if deg == 0:
                new = list(pbw)
                new[k - 1] += 1
                if sum(new) > self.depth_bound:
                    raise ValueError("depth bound exceeded")
                return {(tuple(new), label): Fraction(1)}
            if deg == 1:
                a = exps.index(1) + 1
                if a == k:
                    val = self.eps_value(a, label)
                    return {(pbw, label): val} if val else {}
                col = self.module.tables[(a, k)].get(label, {})
                return {(pbw, idx): c for idx, c in col.items()}
            return {}  # strictly positive degree annihilates 1 (x) F
        # X * d_i * rest = d_i * (X * rest) + [X, d_i] * rest
        sub = list(pbw)
        sub[i] -= 1
        sub = tuple(sub)
        out: Dict[TermKey, Fraction] = {}
        for (p2, l2), c2 in self.act_monomial_field(exps, k, sub, label).items():
            lifted = list(p2)
            lifted[i] += 1
            if sum(lifted) > self.depth_bound:
                raise ValueError("depth bound exceeded")
            _acc(out, (tuple(lifted), l2), c2)
        if exps[i]:
            dexps = list(exps)
            dexps[i] -= 1
            for key2, c2 in self.act_monomial_field(tuple(dexps), k, sub, label).items():
                _acc(out, key2, -exps[i] * c2)
        return {key2: c for key2, c in out.items() if c}


class VermaElement:
    """Finite sum of PBW-monomial (x) F-basis terms."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: VermaContext, terms: Dict[TermKey, Fraction]):
        self.ctx = ctx
        self.terms = {k: Fraction(c) for k, c in terms.items() if c}

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "VermaElement") -> "VermaElement":
        out = dict(self.terms)
        for k, c in other.terms.items():
            _acc(out, k, c)
        return VermaElement(self.ctx, out)

    def __sub__(self, other: "VermaElement") -> "VermaElement":
        out = dict(self.terms)
        for k, c in other.terms.items():
            _acc(out, k, -c)
        return VermaElement(self.ctx, out)

    def scale(self, c) -> "VermaElement":
        c = Fraction(c)
        return VermaElement(self.ctx, {k: c * v for k, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, VermaElement) and self.terms == other.terms

    def depth_parts(self) -> Dict[int, "VermaElement"]:
        parts: Dict[int, Dict[TermKey, Fraction]] = {}
        for (pbw, label), c in self.terms.items():
            parts.setdefault(sum(pbw), {})[(pbw, label)] = c
        return {d: VermaElement(self.ctx, t) for d, t in sorted(parts.items())}

    def max_depth(self) -> int:
        return max((sum(p) for p, _ in self.terms), default=0)

    def __repr__(self) -> str:
        bits = []
        for (pbw, label), c in sorted(self.terms.items()):
            bits.append("%s*d^%s(x)v%d" % (c, list(pbw), label))
        return "Verma[%s]" % (" + ".join(bits) or "0")


def verma_act(x: VectorField, v: VermaElement, check_divergence: bool = True) -> VermaElement:
    """Action of a divergence-free polynomial field on a Verma element."""
    ctx = v.ctx
    if x.nvars != ctx.n:
        raise ValueError("nvars mismatch")
    if check_divergence and not x.is_divergence_free():
        raise ValueError("field is not divergence-free")
    out: Dict[TermKey, Fraction] = {}
    for k, poly in enumerate(x.coeffs, start=1):
        for exps, pc in poly.terms.items():
            for (pbw, label), c in v.terms.items():
                for key, c2 in ctx.act_monomial_field(exps, k, pbw, label).items():
                    _acc(out, key, pc * c * c2)
    return VermaElement(ctx, out)


def verma_act_word(word, v: VermaElement) -> VermaElement:
    """Action of a degree-<=2 enveloping-algebra word (see qideal.UWord)."""
    out = verma_act(word.first_order, v)
    for coeff, left, right in word.second_order:
        out = out + verma_act(left, verma_act(right, v)).scale(coeff)
    return out


def _acc(d: Dict, key, val):
    if not val:
        return
    cur = d.get(key, Fraction(0)) + val
    if cur:
        d[key] = cur
    else:
        d.pop(key, None)


def _pbw_monomials(n: int, depth: int) -> List[PBW]:
    from itertools import combinations_with_replacement
    return sorted({tuple(sum(1 for v in combo if v == k) for k in range(n))
                   for combo in combinations_with_replacement(range(n), depth)})


def depth_basis(ctx: VermaContext, depth: int) -> List[TermKey]:
    return [(pbw, idx) for pbw in _pbw_monomials(ctx.n, depth)
            for idx in range(ctx.module.dim)]


class SingularVectorResult:
    """Per-depth bases of the singular-vector space of M(F).

    `degree_one_suffices` records whether annihilation by the degree-1 part
    alone gave the same solution set as degree 1 and 2 together.
    """

    def __init__(self, by_depth: Dict[int, List[VermaElement]], degree_one_suffices: bool):
        self.by_depth = by_depth
        self.degree_one_suffices = degree_one_suffices

    def nontrivial(self) -> List[VermaElement]:
        return [v for d, vs in self.by_depth.items() if d >= 1 for v in vs]


def singular_vectors(module: WeightModule, depth: int = 3,
                     ctx: Optional[VermaContext] = None) -> SingularVectorResult:
    """Exact solve for vectors killed by the positive part, depth by depth."""
    if ctx is None:
        ctx = VermaContext(module, depth_bound=depth)
    n = module.n
    ops1 = sn_homogeneous_basis(n, 1)
    ops2 = sn_homogeneous_basis(n, 2)
    by_depth: Dict[int, List[VermaElement]] = {}
    agree = True
    for d in range(depth + 1):
        basis = depth_basis(ctx, d)
        if d == 0:
            by_depth[0] = [VermaElement(ctx, {key: Fraction(1)}) for key in basis]
            continue
        col_index = {key: i for i, key in enumerate(basis)}

        def annihilator_rows(ops):
            rows = []
            for op in ops:
                images = [verma_act(op, VermaElement(ctx, {key: Fraction(1)}),
                                    check_divergence=False) for key in basis]
                out_keys = sorted({k for img in images for k in img.terms})
                for okey in out_keys:
                    rows.append([img.terms.get(okey, Fraction(0)) for img in images])
            return rows

        def solve_rows(rows):
            if not rows:  # no constraints: the whole depth-d space is singular
                return [[Fraction(1 if i == j else 0) for i in range(len(basis))]
                        for j in range(len(basis))]
            return nullspace(rows)

        rows1 = annihilator_rows(ops1)
        sols1 = solve_rows(rows1)
        rows12 = rows1 + annihilator_rows(ops2)
        sols = solve_rows(rows12)
        if len(sols) != len(sols1):
            agree = False
        by_depth[d] = [
            VermaElement(ctx, {basis[i]: vec[i] for i in range(len(basis)) if vec[i]})
            for vec in sols
        ]
    return SingularVectorResult(by_depth, agree)


class SingPlusSubmodule:
    """Depth-graded basis of the submodule generated by nontrivial singular vectors."""

    def __init__(self, ctx: VermaContext, depth: int, by_depth: Dict[int, List[List[Fraction]]],
                 coords: Dict[int, List[TermKey]]):
        self.ctx = ctx
        self.depth = depth
        self.by_depth = by_depth
        self.coords = coords

    def dimension(self, depth: int) -> int:
        return len(self.by_depth.get(depth, []))

    def contains(self, v: VermaElement) -> bool:
        for d, part in v.depth_parts().items():
            if part.is_zero():
                continue
            if d > self.depth:
                raise ValueError("element exceeds the computed depth")
            coords = self.coords[d]
            index = {key: i for i, key in enumerate(coords)}
            vec = [Fraction(0)] * len(coords)
            for key, c in part.terms.items():
                vec[index[key]] = c
            if not in_span(self.by_depth.get(d, []), vec):
                return False
        return True


def sing_plus_submodule(module: WeightModule, depth: int = 3,
                        ctx: Optional[VermaContext] = None,
                        sing: Optional[SingularVectorResult] = None) -> SingPlusSubmodule:
    """Span of d^beta applied to the nontrivial singular vectors, per depth.

    Closure under the non-negative part is a submodule property, checked in
    the tests rather than assumed here.
    """
    if ctx is None:
        ctx = VermaContext(module, depth_bound=depth)
    if sing is None:
        sing = singular_vectors(module, depth, ctx)
    coords = {d: depth_basis(ctx, d) for d in range(depth + 1)}
    raw: Dict[int, List[List[Fraction]]] = {d: [] for d in range(depth + 1)}
    for v in sing.nontrivial():
        d0 = v.max_depth()
        for extra in range(depth - d0 + 1):
            for beta in _pbw_monomials(ctx.n, extra):
                shifted: Dict[TermKey, Fraction] = {}
                for (pbw, label), c in v.terms.items():
                    new = tuple(p + b for p, b in zip(pbw, beta))
                    shifted[(new, label)] = c
                d = d0 + extra
                index = {key: i for i, key in enumerate(coords[d])}
                vec = [Fraction(0)] * len(coords[d])
                for key, c in shifted.items():
                    vec[index[key]] = c
                raw[d].append(vec)
    reduced: Dict[int, List[List[Fraction]]] = {}
    for d, vecs in raw.items():
        basis: List[List[Fraction]] = []
        for vec in vecs:
            if not in_span(basis, vec):
                basis.append(vec)
        reduced[d] = basis
    return SingPlusSubmodule(ctx, depth, reduced, coords)
