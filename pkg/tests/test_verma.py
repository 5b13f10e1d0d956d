import random
from fractions import Fraction

import pytest

from snlie.polynomials import Poly
from snlie.slnrep import build_irrep
from snlie.verma import (VermaContext, VermaElement, depth_basis,
                         sing_plus_submodule, singular_vectors, verma_act)
from snlie.vfields import VectorField, sn_homogeneous_basis


def _random_field(rng, n, max_field_degree):
    """Random divergence-free field with graded parts of degree <= max."""
    total = VectorField.zero(n)
    for deg in range(-1, max_field_degree + 1):
        basis = sn_homogeneous_basis(n, deg)
        for v in basis:
            c = rng.randint(-1, 1)
            if c:
                total = total + v.scale(c)
    return total


def _random_element(rng, ctx, max_depth):
    keys = [k for d in range(max_depth + 1) for k in depth_basis(ctx, d)]
    picked = rng.sample(keys, min(3, len(keys)))
    return VermaElement(ctx, {k: Fraction(rng.randint(1, 3)) for k in picked})


def test_representation_property_seeded():
    module = build_irrep((1, 0), 3)
    ctx = VermaContext(module, depth_bound=4)
    rng = random.Random(31)
    for _ in range(30):
        x = _random_field(rng, 3, 2)
        y = _random_field(rng, 3, 2)
        v = _random_element(rng, ctx, 2)
        lhs = verma_act(x, verma_act(y, v)) - verma_act(y, verma_act(x, v))
        rhs = verma_act(x.bracket(y), v)
        assert lhs == rhs


def test_depth_bound_enforced():
    module = build_irrep((0, 0), 3)
    ctx = VermaContext(module, depth_bound=1)
    v = VermaElement(ctx, {((1, 0, 0), 0): Fraction(1)})
    with pytest.raises(ValueError):
        verma_act(VectorField.d(3, 1), v)


def test_no_singular_vectors_at_generic_weight():
    module = build_irrep((1, 1), 3)
    sing = singular_vectors(module, depth=2)
    assert all(not vs for d, vs in sing.by_depth.items() if d >= 1)


def test_singular_vectors_exceptional_weights():
    # trivial module: every depth-1 vector is singular
    m0 = build_irrep((0, 0), 3)
    s0 = singular_vectors(m0, depth=3)
    assert len(s0.by_depth[1]) == 3
    assert s0.degree_one_suffices
    # fundamental modules each carry a nontrivial singular vector
    m1 = build_irrep((1, 0), 3)
    s1 = singular_vectors(m1, depth=3)
    assert any(vs for d, vs in s1.by_depth.items() if d >= 1)
    m2 = build_irrep((0, 1), 3)
    s2 = singular_vectors(m2, depth=3)
    assert any(vs for d, vs in s2.by_depth.items() if d >= 1)


def test_sing_plus_submodule_closure():
    """The shift-span is stable under the non-negative graded parts."""
    module = build_irrep((0, 1), 3)
    ctx = VermaContext(module, depth_bound=3)
    sub = sing_plus_submodule(module, depth=3, ctx=ctx)
    ops = (sn_homogeneous_basis(3, 0) + sn_homogeneous_basis(3, 1)
           + sn_homogeneous_basis(3, 2))
    for d in range(1, 3):  # images at depth d stay at depth <= 3
        coords = sub.coords[d]
        for vec in sub.by_depth[d]:
            elem = VermaElement(ctx, {coords[i]: vec[i]
                                      for i in range(len(coords)) if vec[i]})
            for op in ops:
                img = verma_act(op, elem, check_divergence=False)
                assert sub.contains(img)


def test_sing_plus_contains_rejects_outside_vectors():
    module = build_irrep((1, 0), 3)
    ctx = VermaContext(module, depth_bound=3)
    sub = sing_plus_submodule(module, depth=3, ctx=ctx)
    assert sub.dimension(1) == 1
    outside = VermaElement(ctx, {((1, 0, 0), 0): Fraction(1)})
    top = VermaElement(ctx, {((0, 0, 0), 0): Fraction(1)})
    assert not sub.contains(outside) or sub.dimension(1) == 3
    assert not sub.contains(top)  # depth-0 line is never in the shift span
