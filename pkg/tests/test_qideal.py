import random

import pytest

from snlie.qideal import (GeneratorSpec, enumerate_generators,
                          generator_closed_form, generator_direct,
                          iter_generators)


def test_spec_validation():
    with pytest.raises(ValueError):
        GeneratorSpec(((1, 0, 0),) * 3, 3)  # wrong count
    with pytest.raises(ValueError):
        GeneratorSpec(((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)), 3)  # constant


def test_case_labels():
    # x1, x2, x3 | x3: total degree 4 < 2n-1 -> no case
    spec = GeneratorSpec(((1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 0, 1)), 3)
    assert spec.cases() == []
    spec2 = GeneratorSpec(((2, 0, 0), (0, 1, 0), (0, 0, 1), (0, 0, 1)), 3)
    assert spec2.total_degree() == 5
    assert "1a" in spec2.cases() or "1b" in spec2.cases()


def test_enumeration_count_n3():
    specs = enumerate_generators(3)
    assert len(specs) == 10044


def test_iter_matches_enumerate():
    streamed = sorted(iter_generators(3, case_filter="1a"),
                      key=lambda s: s.monomials)
    assert streamed == enumerate_generators(3, case_filter="1a")
    assert all("1a" in s.cases() for s in streamed)


def test_direct_equals_closed_form_sample_n3():
    rng = random.Random(23)
    specs = enumerate_generators(3)
    for spec in rng.sample(specs, 150):
        assert generator_direct(spec) == generator_closed_form(spec)


def test_direct_equals_closed_form_sample_n4():
    rng = random.Random(24)
    picked = []
    for i, spec in enumerate(iter_generators(4)):
        # deterministic reservoir sample of 30 specs
        if len(picked) < 30:
            picked.append(spec)
        else:
            j = rng.randrange(i + 1)
            if j < 30:
                picked[j] = spec
        if i >= 200000:
            break
    for spec in picked:
        assert generator_direct(spec) == generator_closed_form(spec)


def test_uword_canonical_equality_ignores_assembly_order():
    spec = GeneratorSpec(((1, 1, 0), (0, 1, 0), (0, 0, 1), (1, 0, 0)), 3)
    w1 = generator_direct(spec)
    w2 = generator_direct(spec)
    assert w1 == w2
    assert w1.canonical() == w2.canonical()
