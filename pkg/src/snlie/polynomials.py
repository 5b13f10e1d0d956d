"""Exact multivariate polynomial arithmetic over the rationals.

Monomials are exponent tuples, polynomials are monomial -> Fraction maps.
An optional total-degree truncation turns a Poly into a truncated power
series: products silently drop monomials above the bound.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Optional


Monomial = tuple  # exponent tuple, one entry per variable


def mono_degree(m: Monomial) -> int:
    return sum(m)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Optional[Monomial]:
    """Exact monomial quotient, or None if any exponent would go negative."""
    q = tuple(x - y for x, y in zip(a, b))
    if any(e < 0 for e in q):
        return None
    return q


def grlex_key(m: Monomial):
    """Graded lexicographic sort key (degree first, then lex on exponents)."""
    return (sum(m), m)


class Poly:
    """Polynomial with exact rational coefficients in variables x1..xn."""

    __slots__ = ("nvars", "terms", "truncation")

    def __init__(self, nvars: int, terms: Optional[Mapping[Monomial, Fraction]] = None,
                 truncation: Optional[int] = None):
        if nvars < 1:
            raise ValueError("nvars must be positive")
        self.nvars = nvars
        self.truncation = truncation
        clean = {}
        if terms:
            for m, c in terms.items():
                if len(m) != nvars:
                    raise ValueError("monomial length does not match nvars")
                if truncation is not None and sum(m) > truncation:
                    continue
                c = Fraction(c)
                if c != 0:
                    clean[tuple(m)] = c
        self.terms = clean

    @classmethod
    def zero(cls, nvars: int, truncation: Optional[int] = None) -> "Poly":
        return cls(nvars, {}, truncation)

    @classmethod
    def const(cls, nvars: int, c, truncation: Optional[int] = None) -> "Poly":
        return cls(nvars, {(0,) * nvars: Fraction(c)}, truncation)

    @classmethod
    def variable(cls, nvars: int, i: int, truncation: Optional[int] = None) -> "Poly":
        """The variable x_i (1-based)."""
        if not 1 <= i <= nvars:
            raise ValueError("variable index out of range")
        m = tuple(1 if j == i - 1 else 0 for j in range(nvars))
        return cls(nvars, {m: Fraction(1)}, truncation)

    @classmethod
    def monomial(cls, exponents: Iterable[int], coeff=1,
                 truncation: Optional[int] = None) -> "Poly":
        exps = tuple(exponents)
        return cls(len(exps), {exps: Fraction(coeff)}, truncation)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(m) == 0 for m in self.terms)

    def constant_value(self) -> Fraction:
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def _result_truncation(self, other: "Poly") -> Optional[int]:
        if self.truncation is None:
            return other.truncation
        if other.truncation is None:
            return self.truncation
        return min(self.truncation, other.truncation)

    def _check(self, other: "Poly"):
        if self.nvars != other.nvars:
            raise ValueError("nvars mismatch")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, Fraction(0)) + c
        return Poly(self.nvars, terms, self._result_truncation(other))

    def __sub__(self, other: "Poly") -> "Poly":
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, Fraction(0)) - c
        return Poly(self.nvars, terms, self._result_truncation(other))

    def __neg__(self) -> "Poly":
        return Poly(self.nvars, {m: -c for m, c in self.terms.items()}, self.truncation)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        bound = self._result_truncation(other)
        terms: dict = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = mono_mul(ma, mb)
                if bound is not None and sum(m) > bound:
                    continue
                terms[m] = terms.get(m, Fraction(0)) + ca * cb
        return Poly(self.nvars, terms, bound)

    __rmul__ = __mul__

    def scale(self, c) -> "Poly":
        c = Fraction(c)
        return Poly(self.nvars, {m: c * v for m, v in self.terms.items()}, self.truncation)

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def derivative(self, i: int) -> "Poly":
        """Formal partial derivative with respect to x_i (1-based)."""
        if not 1 <= i <= self.nvars:
            raise ValueError("derivative index out of range")
        k = i - 1
        terms: dict = {}
        for m, c in self.terms.items():
            if m[k] == 0:
                continue
            dm = m[:k] + (m[k] - 1,) + m[k + 1:]
            terms[dm] = terms.get(dm, Fraction(0)) + c * m[k]
        return Poly(self.nvars, terms, self.truncation)

    def homogeneous_part(self, d: int) -> "Poly":
        return Poly(self.nvars, {m: c for m, c in self.terms.items() if sum(m) == d},
                    self.truncation)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mc: grlex_key(mc[0]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = ""
        for m, c in reversed(self.sorted_terms()):
            factors = []
            if abs(c) != 1 or sum(m) == 0:
                factors.append(str(abs(c)))
            for j, e in enumerate(m):
                if e == 1:
                    factors.append("x%d" % (j + 1))
                elif e > 1:
                    factors.append("x%d^%d" % (j + 1, e))
            body = "*".join(factors)
            if not out:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out

    def __repr__(self) -> str:
        return "Poly(%r)" % str(self)


_TERM_RE = re.compile(r"\s*([+-])?\s*([^+-]+)")
_FACTOR_RE = re.compile(r"^(?:(\d+(?:/\d+)?)|x(\d+)(?:\^(\d+))?)$")


def poly_parse(text: str, nvars: int, truncation: Optional[int] = None) -> Poly:
    """Parse `c*x<i>^<e>*...` terms joined by +/- into a Poly."""
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial text")
    terms: dict = {}
    pos = 0
    first = True
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or not m.group(2).strip():
            raise ValueError("malformed polynomial near %r" % text[pos:])
        sign, body = m.group(1), m.group(2).strip()
        if sign is None and not first:
            raise ValueError("missing +/- between terms in %r" % text)
        coeff = Fraction(-1 if sign == "-" else 1)
        exps = [0] * nvars
        for factor in body.split("*"):
            factor = factor.strip()
            fm = _FACTOR_RE.match(factor)
            if not fm:
                raise ValueError("malformed factor %r" % factor)
            if fm.group(1) is not None:
                coeff *= Fraction(fm.group(1))
            else:
                idx = int(fm.group(2))
                if not 1 <= idx <= nvars:
                    raise ValueError("variable x%d out of range for nvars=%d" % (idx, nvars))
                exps[idx - 1] += int(fm.group(3)) if fm.group(3) else 1
        key = tuple(exps)
        terms[key] = terms.get(key, Fraction(0)) + coeff
        pos = m.end()
        first = False
    return Poly(nvars, terms, truncation)


def poly_det(matrix) -> Poly:
    """Determinant of a square matrix of Polys (cofactor expansion).

    Matrices here stay tiny (n <= 5), so cofactor expansion along the first
    column is simpler and fast enough; Bareiss would need exact division of
    polynomials.
    """
    size = len(matrix)
    for row in matrix:
        if len(row) != size:
            raise ValueError("matrix is not square")
    if size == 0:
        raise ValueError("empty matrix")
    nvars = matrix[0][0].nvars
    for row in matrix:
        for p in row:
            if p.nvars != nvars:
                raise ValueError("nvars mismatch in matrix entries")
    return _det(matrix)


def _det(m) -> Poly:
    size = len(m)
    if size == 1:
        return m[0][0]
    if size == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    acc = Poly.zero(m[0][0].nvars, m[0][0].truncation)
    for i in range(size):
        if m[i][0].is_zero():
            continue
        minor = [row[1:] for k, row in enumerate(m) if k != i]
        term = m[i][0] * _det(minor)
        acc = acc + term if i % 2 == 0 else acc - term
    return acc


def random_poly(rng, nvars: int, max_degree: int = 4, max_terms: int = 3,
                coeff_bound: int = 3) -> Poly:
    """Small random polynomial with integer coefficients, for property suites."""
    terms: dict = {}
    for _ in range(rng.randint(1, max_terms)):
        deg = rng.randint(0, max_degree)
        exps = [0] * nvars
        for _ in range(deg):
            exps[rng.randrange(nvars)] += 1
        c = 0
        while c == 0:
            c = rng.randint(-coeff_bound, coeff_bound)
        key = tuple(exps)
        terms[key] = terms.get(key, Fraction(0)) + c
    return Poly(nvars, terms)
