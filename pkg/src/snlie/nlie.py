"""n-ary brackets, the wedge-space Lie algebra and the ad map.

The central objects: the n-ary Jacobian-determinant bracket on polynomials,
the (n-1)-fold wedge space with its induced Lie bracket, and the ad map onto
divergence-free vector fields.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .polynomials import Monomial, Poly, grlex_key, poly_det, poly_parse
from .vfields import VectorField


def nbracket(fs: Sequence[Poly]) -> Poly:
    """[f_1,...,f_n] = det(d f_j / d x_i) for n polynomials in n variables."""
    n = len(fs)
    if n == 0 or fs[0].nvars != n:
        raise ValueError("need exactly n polynomials in n variables")
    matrix = [[f.derivative(i) for f in fs] for i in range(1, n + 1)]
    return poly_det(matrix)


def fj_residual_for(bracket, avs: Sequence[Poly], bvs: Sequence[Poly]) -> Poly:
    """LHS - RHS of the Filippov-Jacobi identity for any n-ary bracket."""
    n = len(bvs)
    if len(avs) != n - 1:
        raise ValueError("need n-1 and n arguments")
    lhs = bracket(list(avs) + [bracket(bvs)])
    rhs = Poly.zero(bvs[0].nvars)
    for i in range(n):
        inner = bracket(list(avs) + [bvs[i]])
        rhs = rhs + bracket(list(bvs[:i]) + [inner] + list(bvs[i + 1:]))
    return lhs - rhs


def fj_residual(avs: Sequence[Poly], bvs: Sequence[Poly]) -> Poly:
    """LHS - RHS of the Filippov-Jacobi identity for the n-ary bracket."""
    return fj_residual_for(nbracket, avs, bvs)


def vector_product_bracket(indices: Sequence[int], n: int) -> Tuple[int, int]:
    """n-ary bracket of basis vectors of the (n+1)-dimensional algebra.

    Returns (sign, index) with sign 0 for a repeated argument; on sorted
    distinct arguments omitting e_i the value is (-1)^(n+i-1) e_i, and the
    permutation sign of the input ordering is folded in.
    """
    if len(indices) != n:
        raise ValueError("need exactly n indices")
    if any(not 1 <= i <= n + 1 for i in indices):
        raise ValueError("index out of range")
    if len(set(indices)) != n:
        return (0, 0)
    perm_sign = 1
    seq = list(indices)
    for a in range(len(seq)):
        for b in range(a + 1, len(seq)):
            if seq[a] > seq[b]:
                perm_sign = -perm_sign
    omitted = next(i for i in range(1, n + 2) if i not in set(indices))
    sign = perm_sign * (-1) ** (n + omitted - 1)
    return (sign, omitted)


def wn_bracket(fs: Sequence[Poly]) -> Poly:
    """Bracket of the sibling n-Lie algebra on series in n-1 variables.

    The determinant has first row f_1..f_n and derivative rows below.
    """
    n = len(fs)
    if n < 2 or fs[0].nvars != n - 1:
        raise ValueError("need n polynomials in n-1 variables")
    matrix = [list(fs)]
    for i in range(1, n):
        matrix.append([f.derivative(i) for f in fs])
    return poly_det(matrix)


class Wedge:
    """Canonical-form element of the (n-1)-fold wedge of polynomials.

    Terms map strictly grlex-increasing tuples of monomials to nonzero
    rational coefficients.
    """

    __slots__ = ("nvars", "nfactors", "terms")

    def __init__(self, nvars: int, nfactors: int, terms=None):
        self.nvars = nvars
        self.nfactors = nfactors
        self.terms: dict = {}
        if terms:
            for key, c in terms.items():
                self._add(key, c)

    def _add(self, factors: Tuple[Monomial, ...], coeff: Fraction):
        sign, key = _canonical_factors(factors)
        if sign == 0 or coeff == 0:
            return
        c = self.terms.get(key, Fraction(0)) + sign * coeff
        if c == 0:
            self.terms.pop(key, None)
        else:
            self.terms[key] = c

    @classmethod
    def from_polys(cls, factors: Sequence[Poly]) -> "Wedge":
        """Expand f_1 ^ ... ^ f_k multilinearly into monomial wedges."""
        if not factors:
            raise ValueError("empty wedge")
        nvars = factors[0].nvars
        for f in factors:
            if f.nvars != nvars:
                raise ValueError("nvars mismatch")
        w = cls(nvars, len(factors))
        expansion = [((), Fraction(1))]
        for f in factors:
            new = []
            for key, c in expansion:
                for m, fc in f.terms.items():
                    new.append((key + (m,), c * fc))
            expansion = new
        for key, c in expansion:
            w._add(key, c)
        return w

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "Wedge") -> "Wedge":
        self._check(other)
        out = Wedge(self.nvars, self.nfactors, self.terms)
        for key, c in other.terms.items():
            out._add(key, c)
        return out

    def __sub__(self, other: "Wedge") -> "Wedge":
        return self + other.scale(-1)

    def scale(self, c) -> "Wedge":
        c = Fraction(c)
        if c == 0:
            return Wedge(self.nvars, self.nfactors)
        return Wedge(self.nvars, self.nfactors,
                     {k: c * v for k, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        return (isinstance(other, Wedge) and self.nvars == other.nvars
                and self.nfactors == other.nfactors and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, self.nfactors, frozenset(self.terms.items())))

    def _check(self, other: "Wedge"):
        if self.nvars != other.nvars or self.nfactors != other.nfactors:
            raise ValueError("wedge shape mismatch")

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for key in sorted(self.terms, key=lambda k: tuple(grlex_key(m) for m in k)):
            c = self.terms[key]
            body = " ^ ".join(str(Poly(self.nvars, {m: Fraction(1)})) for m in key)
            parts.append("%s*(%s)" % (c, body) if c != 1 else "(%s)" % body)
        return " + ".join(parts)

    def __repr__(self) -> str:
        return "Wedge(%r)" % str(self)


def _canonical_factors(factors: Tuple[Monomial, ...]):
    keyed = sorted(range(len(factors)), key=lambda i: grlex_key(factors[i]))
    sorted_factors = tuple(factors[i] for i in keyed)
    for a, b in zip(sorted_factors, sorted_factors[1:]):
        if a == b:
            return 0, ()
    sign = 1
    seq = list(keyed)
    for a in range(len(seq)):
        for b in range(a + 1, len(seq)):
            if seq[a] > seq[b]:
                sign = -sign
    return sign, sorted_factors


def wedge_parse(text: str, nvars: int) -> Wedge:
    factors = [poly_parse(part, nvars) for part in text.split("^")]
    return Wedge.from_polys(factors)


def ad(w: Wedge) -> VectorField:
    """Inner derivation of a wedge with n-1 factors, as a vector field.

    Coefficient of D_i is (-1)^(n+i) times the Jacobian minor omitting row i.
    """
    n = w.nvars
    if w.nfactors != n - 1:
        raise ValueError("wedge must have n-1 factors")
    coeffs = [Poly.zero(n) for _ in range(n)]
    for key, c in w.terms.items():
        polys = [Poly(n, {m: Fraction(1)}) for m in key]
        rows = [[p.derivative(r) for p in polys] for r in range(1, n + 1)]
        for i in range(1, n + 1):
            minor = [rows[r] for r in range(n) if r != i - 1]
            det = poly_det(minor) if n > 1 else Poly.const(n, 1)
            coeffs[i - 1] = coeffs[i - 1] + det.scale(c * (-1) ** (n + i))
    return VectorField(coeffs)


def ad_tilde(a: Wedge, b: Wedge) -> Wedge:
    """Slotwise action: sum over slots of b of the n-ary bracket with a's factors."""
    n = a.nvars
    if a.nfactors != n - 1:
        raise ValueError("first wedge must have n-1 factors")
    if b.nvars != n:
        raise ValueError("nvars mismatch")
    out = Wedge(n, b.nfactors)
    for akey, ac in a.terms.items():
        apolys = [Poly(n, {m: Fraction(1)}) for m in akey]
        for bkey, bc in b.terms.items():
            for slot in range(b.nfactors):
                target = Poly(n, {bkey[slot]: Fraction(1)})
                image = nbracket(apolys + [target])
                for m, mc in image.terms.items():
                    key = bkey[:slot] + (m,) + bkey[slot + 1:]
                    out._add(key, ac * bc * mc)
    return out


def wedge_bracket(a: Wedge, b: Wedge) -> Wedge:
    """Lie bracket on the wedge space: [a, b] = ad~(a)(b)."""
    a._check(b)
    return ad_tilde(a, b)


def ker_ad_test(w: Wedge) -> bool:
    """True iff ad(w) vanishes identically."""
    return ad(w).is_zero()


def ker_ad_monomial_criterion(w: Wedge) -> Optional[bool]:
    """Gradient criterion for a single-term monomial wedge; None if not one.

    The gradient of a monomial x^a is x^a times the formal vector (a_i / x_i),
    so the wedge of the n-1 gradients vanishes identically exactly when the
    exponent vectors are linearly dependent (a constant factor is the rank-0
    special case).
    """
    if len(w.terms) != 1:
        return None
    from .linalg import rank
    (key,) = w.terms
    rows = [[Fraction(e) for e in m] for m in key]
    return rank(rows) < len(key)
