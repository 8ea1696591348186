import math
from fractions import Fraction

import pytest

from oracles import assignments, oracle_placement, world_key
from semispace.formula import parse
from semispace.mtsi import (
    DegenerateProfileError,
    MtsiPlacement,
    OutOfSphereError,
    angle,
    guards_demo,
    metric_informativeness,
    mirror_check,
    paper_ray_angle,
    place,
    radius,
    verify_mtsi,
)
from semispace.worlds import (
    LiteralProfile,
    UniverseTooLargeError,
    build_universe,
    default_atom_names,
    enumerate_messages,
    interpret,
    literal_profile,
)


def msg(text, U):
    return interpret(parse(text), U)


def test_radius(xy, xy_actual):
    assert radius(msg("x + x'", xy), xy_actual, xy) == (3, 1)
    assert radius(msg("xx'", xy), xy_actual, xy) == (3, 1)
    assert radius(msg("xy", xy), xy_actual, xy) == (0, 0)
    assert radius(msg("x' + y'", xy), xy_actual, xy) == (0, 0)
    assert radius(msg("x", xy), xy_actual, xy) == (1, Fraction(1, 4))
    assert radius(msg("x + x'", xy), xy_actual, xy, extreme_rule=False) == (3, Fraction(3, 4))


def test_angle():
    assert angle(LiteralProfile(1, 0)) == 0
    assert angle(LiteralProfile(0, 1)) == 1
    assert angle(LiteralProfile(1, 1)) == Fraction(1, 2)
    assert angle(LiteralProfile(2, 1)) == Fraction(1, 3)
    with pytest.raises(DegenerateProfileError):
        angle(LiteralProfile(0, 0))


def test_paper_rays():
    # two atoms: rays at multiples of pi/6, three gaps across the quadrant
    assert paper_ray_angle(LiteralProfile(1, 0), 2) == 0
    assert paper_ray_angle(LiteralProfile(0, 2), 2) == 1
    assert paper_ray_angle(LiteralProfile(1, 1), 2) == Fraction(2, 3)
    assert paper_ray_angle(LiteralProfile(2, 1), 2) == Fraction(1, 3)


def test_place_examples(xy, xy_actual):
    p = place(msg("xx'", xy), xy_actual, xy)
    assert (p.r, p.q, p.phi_i) == (1, Fraction(1, 2), 0)
    assert p.extreme
    p = place(msg("xy", xy), xy_actual, xy)
    assert (p.phi_i, p.phi_u, p.phi_m) == (1, 0, 0)
    p = place(msg("x", xy), xy_actual, xy)
    assert (p.r, p.q, p.phi_u, p.phi_m, p.phi_i) == (Fraction(1, 4), 0, Fraction(1, 16), 0, Fraction(15, 16))


def test_metric_informativeness(xy, xy_actual):
    assert metric_informativeness(place(msg("xy", xy), xy_actual, xy)) == 1
    assert metric_informativeness(place(msg("x + x'", xy), xy_actual, xy)) == 0
    p = place(msg("x", xy), xy_actual, xy)
    assert math.isclose(metric_informativeness(p), math.sqrt(15) / 4, rel_tol=0, abs_tol=1e-15)
    assert math.isclose(metric_informativeness(p) ** 2, float(p.phi_i), abs_tol=1e-15)
    bad = MtsiPlacement(0, 4, Fraction(2), 0, 2.0, 0.0, Fraction(4), Fraction(0), Fraction(-3), LiteralProfile(1, 0))
    with pytest.raises(OutOfSphereError):
        metric_informativeness(bad)


@pytest.mark.parametrize(
    "a, b, phi",
    [("x", "x'", Fraction(15, 16)), ("xy", "x' + y'", 1), ("x + x'", "xx'", 0)],
)
def test_mirror(xy, xy_actual, a, b, phi):
    rep = mirror_check(msg(a, xy), xy_actual, xy)
    assert rep.mirror.phi_i == place(msg(b, xy), xy_actual, xy).phi_i == phi
    assert rep.holds


@pytest.mark.parametrize("n", [1, 2, 3])
def test_mirror_all_messages(n):
    U = build_universe(default_atom_names(n))
    for w in U.worlds():
        for m in enumerate_messages(U):
            assert mirror_check(m, w, U).holds


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_verify_mtsi_passes(n):
    U = build_universe(default_atom_names(n))
    worlds = [U.world(U.m - 1), U.world(0)] if n == 4 else list(U.worlds())
    for w in worlds:
        reports = verify_mtsi(U, w)
        assert all(r.status == "satisfied" for r in reports), [r.to_dict() for r in reports if r.witnesses]


def test_verify_without_extreme_rule(xy, xy_actual):
    reports = {r.criterion: r for r in verify_mtsi(xy, xy_actual, extreme_rule=False)}
    assert reports["M2"].status == "violated"
    assert reports["M2"].witnesses == [("x + x'", Fraction(7, 16))]


def test_verify_cap():
    U = build_universe(default_atom_names(5))
    with pytest.raises(UniverseTooLargeError):
        verify_mtsi(U, U.world(0))


@pytest.mark.parametrize("n", [2, 3])
def test_placements_match_oracle(n):
    U = build_universe(default_atom_names(n))
    names = list(U.atoms)
    keys = [world_key(a, names) for a in assignments(names)]
    for w in U.worlds():
        for m in enumerate_messages(U):
            true_keys = {keys[U.m - 1 - i] for i in m.true_worlds}
            o = oracle_placement(true_keys, names, w.assignment)
            p = place(m, w, U)
            assert (p.k, p.r, p.q, p.phi_i) == (o["k"], o["r"], o["q"], o["phi_i"])
            assert (p.profile.t, p.profile.f) == (o["t"], o["f"])
            assert math.isclose(float(p.phi_u), o["phi_u_float"], abs_tol=1e-12)
            assert math.isclose(float(p.phi_m), o["phi_m_float"], abs_tol=1e-12)
            assert math.isclose(p.theta_t, o["theta_t"], abs_tol=1e-12)
            assert math.isclose(p.theta_f, o["theta_f"], abs_tol=1e-12)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_invariants(n):
    U = build_universe(default_atom_names(n))
    w = U.world(U.m - 1)
    for m in enumerate_messages(U):
        p = place(m, w, U)
        assert p.phi_i + p.phi_u + p.phi_m == 1
        assert p.phi_u + p.phi_m == p.r ** 2
        assert all(0 <= v <= 1 for v in (p.phi_i, p.phi_u, p.phi_m))
        iota = metric_informativeness(p)
        assert abs(p.theta_t ** 2 + p.theta_f ** 2 + iota ** 2 - 1) < 1e-12
        if p.profile.f == 0:
            assert p.phi_m == 0
        if p.profile.t == 0:
            assert p.phi_u == 0


@pytest.mark.parametrize("n", [2, 3])
def test_true_axis_ordering(n):
    U = build_universe(default_atom_names(n))
    w = U.world(U.m - 1)
    points = []
    for m in enumerate_messages(U):
        if w in m and 0 < m.size < U.m and literal_profile(m, w, U).f == 0:
            points.append((m.size, place(m, w, U).phi_i))
    points.sort()
    for (s1, p1), (s2, p2) in zip(points, points[1:]):
        assert (s1 < s2) == (p1 > p2)
    xy = build_universe(["x", "y"])
    top = xy.world(3)
    assert place(msg("xy", xy), top, xy).phi_i > place(msg("x", xy), top, xy).phi_i > place(msg("x + y", xy), top, xy).phi_i


def test_asymptotic_approach():
    U = build_universe(default_atom_names(6))
    w = U.world(U.m - 1)
    atoms = list(U.atoms)
    qs = []
    for t in range(1, 6):
        text = "a a'" + "".join(atoms[1:t])
        p = place(interpret(parse(text), U), w, U)
        assert (p.profile.t, p.profile.f) == (t, 1)
        assert p.phi_i == 0
        qs.append(p.q)
    assert qs == [Fraction(1, t + 1) for t in range(1, 6)]
    assert all(a > b for a, b in zip(qs, qs[1:]))


@pytest.mark.parametrize("n", [2, 3])
def test_ray_scheme_changes_only_split(n):
    U = build_universe(default_atom_names(n))
    w = U.world(U.m - 1)
    for m in enumerate_messages(U):
        a = place(m, w, U)
        b = place(m, w, U, ray_scheme="paper")
        assert (a.k, a.r, a.phi_i) == (b.k, b.r, b.phi_i)
        assert b.phi_u + b.phi_m == a.phi_u + a.phi_m


def test_guards():
    g = guards_demo()
    assert g.identified == (8, 8)
    assert g.unidentified == (8, 8)
    assert (g.example_answer, g.example_choice) == (2, 1)
    money_one = [line for line in g.lines if line.startswith("unidentified money=Door 1")]
    assert len(money_one) == 4
    assert all("would say Door 2, choose Door 1" in line for line in money_one)
