from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from semispace.formula import parse, render
from semispace.tssi import (
    NotConjunctiveError,
    NotTrueAtActualError,
    OutOfRangeError,
    check_criteria,
    contradiction_family,
    discontinuity_demo,
    inaccuracy,
    tssi_informativeness,
    tssi_quantity,
    vacuity,
)
from semispace.worlds import (
    UniverseTooLargeError,
    build_universe,
    default_atom_names,
    enumerate_messages,
    interpret,
    state_formula,
)


@pytest.fixture
def six():
    U = build_universe(default_atom_names(6))
    return U, U.world(U.m - 1)


def test_inaccuracy_one_false_of_six(six):
    U, w = six
    a = inaccuracy(parse("abcdef'"), w, U)
    assert (a.l, a.e) == (6, 1)
    assert a.discrepancy == Fraction(-1, 6)
    assert a.informativeness == Fraction(35, 36)


def test_inaccuracy_all_false(six):
    U, w = six
    assert inaccuracy(parse("a'b'c'd'e'f'"), w, U).discrepancy == -1


def test_inaccuracy_true_state(six):
    U, w = six
    a = inaccuracy(state_formula(U, w), w, U)
    assert a.discrepancy == 0 and a.informativeness == 1


def test_inaccuracy_rejects_disjunction(xy, xy_actual):
    with pytest.raises(NotConjunctiveError):
        inaccuracy(parse("x + y"), xy_actual, xy)
    with pytest.raises(NotConjunctiveError):
        inaccuracy(parse("(xy)'"), xy_actual, xy)


def test_vacuity(six, xy, xy_actual):
    U, w = six
    v = vacuity(interpret(parse("abcd(e + f')"), U), w, U)
    assert v.discrepancy == Fraction(3, 64)
    assert v.ways == 3
    assert vacuity(interpret(parse("x + x'"), xy), xy_actual, xy).discrepancy == 1
    assert vacuity(interpret(parse("xy"), xy), xy_actual, xy).discrepancy == Fraction(1, 4)
    with pytest.raises(NotTrueAtActualError):
        vacuity(interpret(parse("x'"), xy), xy_actual, xy)


def test_informativeness_values():
    assert tssi_informativeness(0) == 1
    assert tssi_informativeness(1) == 0
    assert tssi_informativeness(-1) == 0
    assert tssi_informativeness(Fraction(-1, 6)) == Fraction(35, 36)
    with pytest.raises(OutOfRangeError):
        tssi_informativeness(Fraction(7, 6))


def test_quantity():
    # closed form of the integral of 1 - d^2
    assert tssi_quantity(-1, 1) == Fraction(4, 3)
    assert tssi_quantity(0, 0) == 0
    assert tssi_quantity(0, 1) == Fraction(2, 3)
    with pytest.raises(OutOfRangeError):
        tssi_quantity(1, 0)


def test_quantity_against_riemann_sum():
    a, b = Fraction(-1, 2), Fraction(3, 4)
    steps = 2000
    h = (b - a) / steps
    midpoint = sum(float(tssi_informativeness(a + (i + Fraction(1, 2)) * h)) for i in range(steps)) * float(h)
    assert abs(midpoint - float(tssi_quantity(a, b))) < 1e-6


rationals = st.fractions(min_value=-1, max_value=1, max_denominator=500)


@given(rationals)
def test_informativeness_symmetric(d):
    assert tssi_informativeness(d) == tssi_informativeness(-d)


@given(rationals, st.fractions(min_value=Fraction(-1, 2), max_value=Fraction(1, 2), max_denominator=100))
def test_marginal_is_linear(d, h):
    if h == 0 or not -1 <= d + h <= 1:
        return
    diff = tssi_informativeness(d + h) - tssi_informativeness(d)
    assert diff == -2 * d * h - h * h
    assert diff / h == -2 * d - h


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_contradiction_bound(n):
    U = build_universe(default_atom_names(n))
    seen = set()
    for w in (U.world(U.m - 1), U.world(0), U.world(1)):
        for f in contradiction_family(U):
            assert interpret(f, U).mask == 0
            d = inaccuracy(f, w, U).discrepancy
            assert Fraction(-(n - 1), n) <= d <= Fraction(-1, n)
            seen.add(d)
    assert seen == {Fraction(-e, n) for e in range(1, n)}


@pytest.mark.parametrize("n", [2, 3])
def test_vacuity_monotone(n):
    U = build_universe(default_atom_names(n))
    w = U.world(U.m - 1)
    by_size = {}
    for msg in enumerate_messages(U):
        if w in msg:
            by_size.setdefault(msg.size, set()).add(vacuity(msg, w, U).discrepancy)
    sizes = sorted(by_size)
    values = [by_size[s] for s in sizes]
    assert all(len(v) == 1 for v in values)
    flat = [v.pop() for v in values]
    assert flat == sorted(set(flat))


def test_check_criteria_six(six):
    U, w = six
    reports = {r.criterion: r for r in check_criteria(U, w)}
    assert set(reports) == {"M1", "M2", "M3", "M4", "M5", "E1", "E2", "E3", "E4", "E6"}
    violated = {c for c, r in reports.items() if r.status == "violated"}
    assert violated == {"M3", "M4"}
    assert reports["M4"].witnesses == [("a'b'c'd'e'f'", Fraction(-1))]
    m3 = reports["M3"]
    assert len(m3.witnesses) == m3.checked > 0
    assert all(Fraction(-5, 6) <= v <= Fraction(-1, 6) for _, v in m3.witnesses)
    assert reports["E2"].to_dict()["status"] == "satisfied"


def test_check_criteria_other_actual_world():
    U = build_universe(default_atom_names(3))
    w = U.world(5)  # x y' z
    violated = {r.criterion for r in check_criteria(U, w) if r.status == "violated"}
    assert violated == {"M3", "M4"}


def test_check_criteria_caps():
    with pytest.raises(UniverseTooLargeError):
        U = build_universe(default_atom_names(7))
        check_criteria(U, U.world(0))
    U = build_universe(["x"])
    with pytest.raises(ValueError):
        check_criteria(U, U.world(1))


def test_discontinuity(six):
    U, w = six
    d = discontinuity_demo(U, w)
    assert render(d.state) == "abcdef'"
    assert d.before.discrepancy == Fraction(-1, 6)
    assert d.after.discrepancy == Fraction(3, 64)
    assert d.jumped
