"""Generators of the trivially-acting ideal, in two independent forms.

Each generator is indexed by 2n-2 non-constant monomials. `generator_direct`
assembles it from wedges and the ad map (the defining expression);
`generator_closed_form` evaluates the explicit integer-determinant formula.
Their exact equality is the oracle test for the formula's sign and indexing
conventions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .polynomials import Monomial, Poly, mono_degree, mono_div, mono_mul
from .nlie import Wedge, ad, nbracket
from .vfields import VectorField

CASES = ("1a", "1b", "2", "3")


@dataclass(frozen=True)
class GeneratorSpec:
    """2n-2 monomial exponent tuples (f_1,...,f_{2n-2}), each of degree >= 1."""

    monomials: Tuple[Monomial, ...]
    nvars: int

    def __post_init__(self):
        n = self.nvars
        if len(self.monomials) != 2 * n - 2:
            raise ValueError("need exactly 2n-2 monomials")
        for m in self.monomials:
            if len(m) != n:
                raise ValueError("monomial length mismatch")
            if mono_degree(m) < 1:
                raise ValueError("constant monomials are not allowed")

    def total_degree(self) -> int:
        return sum(mono_degree(m) for m in self.monomials)

    def polys(self) -> List[Poly]:
        return [Poly.monomial(m) for m in self.monomials]

    def cases(self) -> List[str]:
        """Which enumeration cases (1a/1b/2/3) this spec falls under."""
        n = self.nvars
        total = self.total_degree()
        tail = mono_degree(self._tail_product())
        head_degs = [mono_degree(m) for m in self.monomials[:n]]
        out = []
        if total == 2 * n - 1:
            if any(d + tail == n - 1 for d in head_degs):
                out.append("1a")
            if any(d + tail == n for d in head_degs):
                out.append("1b")
        elif total == 2 * n and any(d + tail == n for d in head_degs):
            out.append("2")
        elif total == 2 * n + 1 and any(d + tail == n for d in head_degs):
            out.append("3")
        return out

    def _tail_product(self) -> Monomial:
        acc = (0,) * self.nvars
        for m in self.monomials[self.nvars:]:
            acc = mono_mul(acc, m)
        return acc


class UWord:
    """Degree-<=2 element of the enveloping algebra of vector fields.

    first_order + sum of coeff * (left o right) compositions.
    """

    __slots__ = ("nvars", "first_order", "second_order")

    def __init__(self, first_order: VectorField,
                 second_order: Sequence[Tuple[Fraction, VectorField, VectorField]] = ()):
        self.nvars = first_order.nvars
        self.first_order = first_order
        self.second_order = [
            (Fraction(c), left, right) for c, left, right in second_order
            if c != 0 and not left.is_zero() and not right.is_zero()
        ]

    def is_zero(self) -> bool:
        return self.first_order.is_zero() and not self.second_order

    def canonical(self):
        """Expand to (first-order term dict, ordered-pair term dict).

        Keys are (monomial, direction) and pairs thereof; this is equality of
        tensors, which is what the two generator constructions share.
        """
        first: Dict = {}
        for k, poly in enumerate(self.first_order.coeffs):
            for m, c in poly.terms.items():
                key = (m, k)
                first[key] = first.get(key, Fraction(0)) + c
                if first[key] == 0:
                    del first[key]
        second: Dict = {}
        for c, left, right in self.second_order:
            for q, lp in enumerate(left.coeffs):
                for ml, cl in lp.terms.items():
                    for s, rp in enumerate(right.coeffs):
                        for mr, cr in rp.terms.items():
                            key = ((ml, q), (mr, s))
                            val = second.get(key, Fraction(0)) + c * cl * cr
                            if val == 0:
                                second.pop(key, None)
                            else:
                                second[key] = val
        return first, second

    def __eq__(self, other) -> bool:
        return isinstance(other, UWord) and self.canonical() == other.canonical()

    def __repr__(self) -> str:
        return "UWord(first=%s, pairs=%d)" % (self.first_order, len(self.second_order))


def _monomials_of_degree(nvars: int, degree: int) -> List[Monomial]:
    return sorted(
        {tuple(sum(1 for v in combo if v == k) for k in range(nvars))
         for combo in combinations_with_replacement(range(nvars), degree)}
    )


def _compositions(total: int, parts: int) -> Iterable[Tuple[int, ...]]:
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def iter_generators(n: int, case_filter: Optional[str] = None,
                    degree_window: Optional[Sequence[int]] = None):
    """Stream generator specs in a deterministic order (see enumerate_generators).

    The full degree window at n=4 holds about 2.5 million specs, so sweeps
    should consume this lazily instead of materializing the list.
    """
    from itertools import product as _product
    if n < 3:
        raise ValueError("n must be at least 3")
    if case_filter is not None and case_filter not in CASES:
        raise ValueError("unknown case %r" % case_filter)
    window = list(degree_window) if degree_window is not None else [2 * n - 1, 2 * n, 2 * n + 1]
    nslots = 2 * n - 2
    by_degree: Dict[int, List[Monomial]] = {}
    for total in sorted(window):
        for comp in _compositions(total, nslots):
            pools = []
            for d in comp:
                if d not in by_degree:
                    by_degree[d] = _monomials_of_degree(n, d)
                pools.append(by_degree[d])
            for monos in _product(*pools):
                spec = GeneratorSpec(monos, n)
                cases = spec.cases()
                if not cases:
                    continue
                if case_filter is not None and case_filter not in cases:
                    continue
                yield spec


def enumerate_generators(n: int, case_filter: Optional[str] = None,
                         degree_window: Optional[Sequence[int]] = None) -> List[GeneratorSpec]:
    """All generator specs in the degree window satisfying a case constraint.

    The default window {2n-1, 2n, 2n+1} covers every generator that can act
    nontrivially on the top of a generalized Verma module; widen it only for
    auditing.
    """
    out = list(iter_generators(n, case_filter, degree_window))
    out.sort(key=lambda s: s.monomials)
    return out


def generator_direct(spec: GeneratorSpec) -> UWord:
    """The defining expression: ad of the bracket wedge minus the ad-pair sum."""
    n = spec.nvars
    fs = spec.polys()
    head, tail = fs[:n], fs[n:]
    bracket = nbracket(head)
    if bracket.is_zero():
        first = VectorField.zero(n)
    else:
        first = ad(Wedge.from_polys([bracket] + tail))
    pairs = []
    for i in range(1, n + 1):
        left_w = Wedge.from_polys(head[:i - 1] + head[i:])
        right_w = Wedge.from_polys([head[i - 1]] + tail)
        left = ad(left_w)
        right = ad(right_w)
        coeff = Fraction(-((-1) ** (i + n)))
        pairs.append((coeff, left, right))
    return UWord(first, pairs)


def _int_det(m: List[List[int]]) -> int:
    size = len(m)
    if size == 0:
        return 1
    if size == 1:
        return m[0][0]
    if size == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    acc = 0
    for i in range(size):
        if m[i][0] == 0:
            continue
        minor = [row[1:] for k, row in enumerate(m) if k != i]
        acc += (-1) ** i * m[i][0] * _int_det(minor)
    return acc


def generator_closed_form(spec: GeneratorSpec) -> UWord:
    """Integer-determinant closed form of the same generator.

    Monomial divisions with a negative exponent annihilate the term; the
    accompanying determinant vanishes in exactly those cases, which the
    direct/closed-form equivalence test confirms.
    """
    n = spec.nvars
    exps = spec.monomials  # exps[l][r] = exponent of x_{r+1} in f_{l+1}
    a_mat = [[exps[l][r] for l in range(n)] for r in range(n)]
    det_a = _int_det(a_mat)

    prod_all = (0,) * n
    for m in exps:
        prod_all = mono_mul(prod_all, m)
    prod_head = (0,) * n
    for m in exps[:n]:
        prod_head = mono_mul(prod_head, m)
    prod_tail = (0,) * n
    for m in exps[n:]:
        prod_tail = mono_mul(prod_tail, m)

    # first-order part: coefficient of D_k
    first_terms = [None] * n
    first_vals = [0] * n
    if det_a != 0:
        # first column: exponent of x_{r+1} in [f_1,...,f_n] = f_1...f_n/(x_1...x_n)
        col0 = [sum(exps[l][r] for l in range(n)) - 1 for r in range(n)]
        shifted = [e - 2 for e in prod_all]
        for k in range(1, n + 1):
            if shifted[k - 1] < -1 or any(
                    shifted[r] < 0 for r in range(n) if r != k - 1):
                continue
            quotient = tuple(e + 1 if r == k - 1 else e
                             for r, e in enumerate(shifted))
            b_rows = [[col0[r]] + [exps[l][r] for l in range(n, 2 * n - 2)]
                      for r in range(n) if r != k - 1]
            det_b = _int_det(b_rows)
            coeff = (-1) ** (n + k) * det_a * det_b
            if coeff:
                first_terms[k - 1] = quotient
                first_vals[k - 1] = coeff
    first = VectorField([Poly(n, {first_terms[r]: Fraction(first_vals[r])})
                         if first_terms[r] is not None else Poly.zero(n)
                         for r in range(n)])

    pairs = []
    zero_poly = Poly.zero(n)
    for i in range(1, n + 1):
        def one_sided(numerator, column):
            """Components of the field sum_q +/- det * numerator/(prod x_r, r!=q)."""
            shifted = [e - 1 for e in numerator]
            comps = [zero_poly] * n
            nonzero = False
            for q in range(1, n + 1):
                if shifted[q - 1] < -1 or any(
                        shifted[r] < 0 for r in range(n) if r != q - 1):
                    continue
                det = _int_det(column(q))
                coeff = (-1) ** (n + q) * det
                if coeff:
                    quotient = tuple(e + 1 if r == q - 1 else e
                                     for r, e in enumerate(shifted))
                    comps[q - 1] = Poly(n, {quotient: Fraction(coeff)})
                    nonzero = True
            return VectorField(comps) if nonzero else None

        beta_num = mono_div(prod_head, exps[i - 1])
        beta = one_sided(beta_num, lambda q: [
            [exps[l][r] for l in range(n) if l != i - 1]
            for r in range(n) if r != q - 1])
        if beta is None:
            continue
        gamma_num = mono_mul(exps[i - 1], prod_tail)
        gamma = one_sided(gamma_num, lambda q: [
            [exps[i - 1][r]] + [exps[l][r] for l in range(n, 2 * n - 2)]
            for r in range(n) if r != q - 1])
        if gamma is None:
            continue
        pairs.append((Fraction(-((-1) ** (i + n))), beta, gamma))
    return UWord(first, pairs)
