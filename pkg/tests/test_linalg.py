from fractions import Fraction

from snlie.linalg import in_span, nullspace, rank, solve


def F(x):
    return Fraction(x)


def test_rank_and_nullspace():
    m = [[F(1), F(2), F(3)], [F(2), F(4), F(6)], [F(1), F(0), F(1)]]
    assert rank(m) == 2
    ns = nullspace(m)
    assert len(ns) == 1
    vec = ns[0]
    for row in m:
        assert sum(r * v for r, v in zip(row, vec)) == 0


def test_solve_exact():
    a = [[F(2), F(1)], [F(1), F(3)]]
    sol = solve(a, [F(5), F(10)])
    assert sol == [F(1), F(3)]
    singular = [[F(1), F(2)], [F(2), F(4)]]
    assert solve(singular, [F(1), F(1)]) is None


def test_in_span():
    basis = [[F(1), F(0), F(1)], [F(0), F(1), F(1)]]
    assert in_span(basis, [F(2), F(3), F(5)])
    assert not in_span(basis, [F(0), F(0), F(1)])
    assert in_span([], [F(0), F(0)])
    assert not in_span([], [F(1), F(0)])


def test_fraction_inputs_stay_exact():
    m = [[F("1/3"), F("1/6")], [F("2/3"), F("1/3")]]
    assert rank(m) == 1
    ns = nullspace(m)
    assert len(ns) == 1
