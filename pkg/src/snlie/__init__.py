"""Exact symbolic computation for n-ary brackets of polynomial vector fields.

Subpackages cover: exact polynomials and Jacobian-determinant brackets
(`polynomials`, `nlie`), divergence-free vector fields and the wedge-to-field
ad map (`vfields`, `nlie`), the trivially-acting ideal generators in direct
and closed form (`qideal`), type-A representation theory (`slnrep`), bounded
generalized Verma modules (`verma`), and the admissibility classification
pipeline with its frozen fixture table (`classify`).  Everything is computed
over the rationals with `fractions.Fraction`; there are no tolerances.
"""

__version__ = "0.1.0"
