"""Polynomial vector fields sum_i f_i d/dx_i, their Lie bracket and grading.

The divergence-free fields form the Cartan-type subalgebra used everywhere
downstream; membership is just a divergence test.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from .polynomials import Poly, poly_parse


class VectorField:
    """First-order differential operator sum_i coeffs[i] * d/dx_{i+1}."""

    __slots__ = ("nvars", "coeffs")

    def __init__(self, coeffs: Sequence[Poly]):
        if not coeffs:
            raise ValueError("vector field needs at least one coefficient")
        nvars = coeffs[0].nvars
        if len(coeffs) != nvars:
            raise ValueError("need exactly nvars coefficient polynomials")
        for p in coeffs:
            if p.nvars != nvars:
                raise ValueError("nvars mismatch among coefficients")
        self.nvars = nvars
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, nvars: int) -> "VectorField":
        return cls([Poly.zero(nvars) for _ in range(nvars)])

    @classmethod
    def d(cls, nvars: int, i: int) -> "VectorField":
        """The constant field d/dx_i (1-based)."""
        if not 1 <= i <= nvars:
            raise ValueError("index out of range")
        coeffs = [Poly.zero(nvars) for _ in range(nvars)]
        coeffs[i - 1] = Poly.const(nvars, 1)
        return cls(coeffs)

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.coeffs)

    def __add__(self, other: "VectorField") -> "VectorField":
        self._check(other)
        return VectorField([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "VectorField") -> "VectorField":
        self._check(other)
        return VectorField([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "VectorField":
        return VectorField([-a for a in self.coeffs])

    def scale(self, c) -> "VectorField":
        return VectorField([p.scale(c) for p in self.coeffs])

    def __eq__(self, other) -> bool:
        return isinstance(other, VectorField) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def _check(self, other: "VectorField"):
        if self.nvars != other.nvars:
            raise ValueError("nvars mismatch")

    def apply(self, p: Poly) -> Poly:
        """Apply as a derivation: sum_i f_i * dp/dx_i."""
        if p.nvars != self.nvars:
            raise ValueError("nvars mismatch")
        acc = Poly.zero(self.nvars, p.truncation)
        for i, f in enumerate(self.coeffs, start=1):
            if not f.is_zero():
                acc = acc + f * p.derivative(i)
        return acc

    def bracket(self, other: "VectorField") -> "VectorField":
        """Commutator [X, Y] = X o Y - Y o X of derivations."""
        self._check(other)
        coeffs = [self.apply(g) - other.apply(f)
                  for f, g in zip(self.coeffs, other.coeffs)]
        return VectorField(coeffs)

    def divergence(self) -> Poly:
        acc = Poly.zero(self.nvars)
        for i, f in enumerate(self.coeffs, start=1):
            acc = acc + f.derivative(i)
        return acc

    def is_divergence_free(self) -> bool:
        return self.divergence().is_zero()

    def graded_parts(self) -> Dict[int, "VectorField"]:
        """Split into homogeneous parts; degree j holds coefficients of degree j+1."""
        degrees = set()
        for f in self.coeffs:
            degrees.update(sum(m) for m in f.terms)
        parts: Dict[int, VectorField] = {}
        for d in sorted(degrees):
            part = VectorField([f.homogeneous_part(d) for f in self.coeffs])
            if not part.is_zero():
                parts[d - 1] = part
        return parts

    def min_degree(self) -> Optional[int]:
        parts = self.graded_parts()
        return min(parts) if parts else None

    def __str__(self) -> str:
        return ";".join("" if p.is_zero() else str(p) for p in self.coeffs)

    def __repr__(self) -> str:
        return "VectorField(%r)" % str(self)


def vf_parse(text: str, nvars: int) -> VectorField:
    """Parse the `f1;f2;...;fn` format (an empty slot means 0)."""
    slots = text.split(";")
    if len(slots) != nvars:
        raise ValueError("expected %d ;-separated coefficients" % nvars)
    coeffs = []
    for s in slots:
        s = s.strip()
        coeffs.append(Poly.zero(nvars) if not s else poly_parse(s, nvars))
    return VectorField(coeffs)


def sn_homogeneous_basis(nvars: int, degree: int) -> List[VectorField]:
    """Basis of the degree-`degree` graded piece of the divergence-free fields.

    Fields of degree j carry homogeneous coefficients of degree j+1; the
    basis is computed as the exact nullspace of the divergence map.
    """
    from itertools import combinations_with_replacement

    from .linalg import nullspace

    coeff_deg = degree + 1
    if coeff_deg < 0:
        return []
    monos = sorted(
        {tuple(sum(1 for v in combo if v == k) for k in range(nvars))
         for combo in combinations_with_replacement(range(nvars), coeff_deg)}
    )
    columns = [(i, m) for i in range(nvars) for m in monos]  # f_i gets monomial m
    if coeff_deg == 0:
        # constant coefficients: divergence is identically zero
        return [VectorField.d(nvars, i + 1) for i in range(nvars)]
    out_monos = sorted(
        {tuple(sum(1 for v in combo if v == k) for k in range(nvars))
         for combo in combinations_with_replacement(range(nvars), coeff_deg - 1)}
    )
    row_index = {m: r for r, m in enumerate(out_monos)}
    rows = [[Fraction(0)] * len(columns) for _ in out_monos]
    for c, (i, m) in enumerate(columns):
        if m[i] == 0:
            continue
        dm = m[:i] + (m[i] - 1,) + m[i + 1:]
        rows[row_index[dm]][c] = Fraction(m[i])
    basis = []
    for vec in nullspace(rows):
        coeffs = [Poly.zero(nvars) for _ in range(nvars)]
        for c, (i, m) in enumerate(columns):
            if vec[c] != 0:
                coeffs[i] = coeffs[i] + Poly(nvars, {m: vec[c]})
        basis.append(VectorField(coeffs))
    return basis
