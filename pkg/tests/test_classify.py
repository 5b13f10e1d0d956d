from fractions import Fraction

import pytest

from snlie.classify import (FIXTURES, classify, constraint_fixtures,
                            delta_indicator, q_triviality, recipe_a, recipe_c,
                            recipe_g, scalar_constraint_generators,
                            scalar_constraint_polynomials,
                            scalar_constraint_table,
                            square_lowering_generators)
from snlie.qideal import generator_closed_form
from snlie.slnrep import build_irrep
from snlie.verma import VermaContext, verma_act_word


def test_delta_indicator_is_step_not_kronecker():
    assert delta_indicator(2, 2) == 1
    assert delta_indicator(3, 1) == 1
    assert delta_indicator(1, 3) == 0


def test_recipes_produce_valid_specs():
    spec = recipe_a(3, 1, 2, 3)
    assert spec is not None
    assert spec.total_degree() == 5
    spec2 = recipe_c(4, 1, 2, 3, 4)
    assert spec2 is not None
    assert spec2.total_degree() == 8
    # colliding index choices are rejected, not silently mangled
    assert recipe_a(3, 1, 1, 1) is None


def test_fixture_table_passes_on_small_grid():
    for n, weights in ((3, [(0, 0), (1, 1), (2, 1)]), (4, [(1, 0, 0)])):
        results = constraint_fixtures(n, weights=weights)
        assert results
        failed = [r for r in results if not r.passed]
        assert failed == []


def test_scalar_constraint_polynomials_reproduced():
    rows = scalar_constraint_table(grid_bound=2)
    assert all(r["match"] for r in rows)
    # zero set of all three polynomials inside the grid: (0,0) and (0,1)
    zero_weights = [r["weight"] for r in rows
                    if all(v == 0 for v in r["measured"])]
    assert zero_weights == [(0, 0), (0, 1)]


def test_scalar_generators_act_as_scalars():
    polys = scalar_constraint_polynomials()
    module = build_irrep((2, 2), 3)
    ctx = VermaContext(module, depth_bound=3)
    for gen, poly in zip(scalar_constraint_generators(3), polys):
        out = verma_act_word(generator_closed_form(gen), ctx.top())
        assert set(out.terms) <= {((0, 0, 0), 0)}
        assert out.terms.get(((0, 0, 0), 0), Fraction(0)) == poly(2, 2)


def test_q_triviality_rejects_generic_weight_quickly():
    report = q_triviality((1, 1), 3, max_violations=1)
    assert not report.admissible
    assert report.violations
    assert report.truncated
    assert report.exceptional is None


def test_q_triviality_zero_weight_admissible():
    report = q_triviality((0, 0), 3)
    assert report.admissible
    assert report.exceptional == 0
    assert report.generators_evaluated == 10044
    assert not report.violations


def test_square_lowering_generator_value_matches_module():
    """Internal consistency at the last unit weight: the sweep value of each
    square-lowering generator equals +/-2 times the double lowering computed
    directly in the module (both vanish here)."""
    for n, lam in ((3, (0, 1)),):
        module = build_irrep(lam, n)
        ctx = VermaContext(module, depth_bound=3)
        sq = module.act_e(n, n - 2, module.act_e(n, n - 2,
                                                 module.highest_vector()))
        for spec in square_lowering_generators(n):
            out = verma_act_word(generator_closed_form(spec), ctx.top())
            direct = {((0,) * n, i): 2 * c for i, c in sq.items()}
            assert out.terms in ({k: v for k, v in direct.items()},
                                 {k: -v for k, v in direct.items()})


def test_classify_small_grid():
    result = classify(3, grid_bound=1, depth=3)
    assert (0, 0) in result.admissible
    assert result.conforms()
    extras = [w for w in result.admissible if w != (0, 0)]
    if extras:
        assert extras == [(0, 1)]
        kinds = {n["kind"] for n in result.discrepancy_notes}
        assert "square-lowering-conflict" in kinds
        note = next(n for n in result.discrepancy_notes
                    if n["kind"] == "square-lowering-conflict")
        assert note["weight"] == [0, 1]
        assert note["generators"]


def test_fixture_names_are_unique():
    names = [(f.name, f.n) for f in FIXTURES]
    assert len(names) == len(set(names))
