"""Discrepancy-based informativeness of the strong theory, with its defects.

Inaccuracy is the negative share of false conjuncts in a conjunctive
state, vacuity is the share of worlds a true infon leaves open, and
informativeness is ``1 - discrepancy**2``. The criterion checkers below
report where that construction breaks its own requirements; the
violations of M3 and M4 are expected results.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .formula import (
    Atom,
    Formula,
    Not,
    Or,
    conjoin,
    conjuncts,
    evaluate,
    is_literal,
    render,
)
from .worlds import (
    Message,
    Universe,
    UniverseTooLargeError,
    World,
    interpret,
    state_formula,
)

__all__ = [
    "TssiAssessment",
    "CriterionReport",
    "DiscontinuityReport",
    "NotConjunctiveError",
    "NotTrueAtActualError",
    "OutOfRangeError",
    "CRITERIA_CAP",
    "EXPECTED_VIOLATIONS",
    "inaccuracy",
    "vacuity",
    "tssi_informativeness",
    "tssi_quantity",
    "contradiction_family",
    "abstraction_family",
    "check_criteria",
    "discontinuity_demo",
]

CRITERIA_CAP = 6
EXPECTED_VIOLATIONS = frozenset({"M3", "M4"})


class NotConjunctiveError(ValueError):
    pass


class NotTrueAtActualError(ValueError):
    pass


class OutOfRangeError(ValueError):
    pass


@dataclass(frozen=True)
class TssiAssessment:
    kind: str  # "inaccuracy" or "vacuity"
    l: int
    e: int
    discrepancy: Fraction
    informativeness: Fraction
    ways: Optional[int] = None  # worlds left open, vacuity only


@dataclass
class CriterionReport:
    criterion: str
    witnesses: list = field(default_factory=list)  # (formula text, value)
    checked: int = 0
    note: str = ""

    @property
    def status(self) -> str:
        return "violated" if self.witnesses else "satisfied"

    def to_dict(self) -> dict:
        return {
            "criterionId": self.criterion,
            "status": self.status,
            "checked": self.checked,
            "note": self.note,
            "witnesses": [[text, str(value)] for text, value in self.witnesses],
        }


def tssi_informativeness(discrepancy) -> Fraction:
    d = Fraction(discrepancy)
    if not -1 <= d <= 1:
        raise OutOfRangeError(f"discrepancy {d} outside [-1, 1]")
    return 1 - d * d


def _antiderivative(x: Fraction) -> Fraction:
    return x - x ** 3 / 3


def tssi_quantity(a, b) -> Fraction:
    """Area under ``1 - d**2`` between ``a`` and ``b``."""
    a, b = Fraction(a), Fraction(b)
    if not -1 <= a <= b <= 1:
        raise OutOfRangeError(f"interval [{a}, {b}] not inside [-1, 1] in order")
    return _antiderivative(b) - _antiderivative(a)


def inaccuracy(state: Formula, w: World, U: Universe) -> TssiAssessment:
    parts = conjuncts(state)
    if not all(is_literal(p) for p in parts):
        raise NotConjunctiveError(f"{render(state)} is not a conjunction of literals")
    unknown = {p.name if isinstance(p, Atom) else p.operand.name for p in parts} - set(U.atoms)
    if unknown:
        raise ValueError(f"atoms not in universe: {', '.join(sorted(unknown))}")
    e = sum(1 for p in parts if not evaluate(p, w.assignment))
    d = Fraction(-e, len(parts))
    return TssiAssessment("inaccuracy", len(parts), e, d, tssi_informativeness(d))


def vacuity(msg: Message, w: World, U: Universe) -> TssiAssessment:
    if w not in msg:
        raise NotTrueAtActualError("vacuity is defined only for infons true in the actual world")
    d = Fraction(msg.size, U.s ** U.n)
    return TssiAssessment("vacuity", U.n, 0, d, tssi_informativeness(d), ways=msg.size)


# -- sample families -------------------------------------------------------------

def _lit(name: str, positive: bool) -> Formula:
    return Atom(name) if positive else Not(Atom(name))


def contradiction_family(U: Universe):
    """Contradictions of ``n`` conjuncts.

    Each is a state over ``n - 1`` of the atoms followed by the complement
    of one of its own literals, so between 1 and ``n - 1`` conjuncts hold
    in any world.
    """
    n = U.n
    for dropped in range(n):
        rest = [a for j, a in enumerate(U.atoms) if j != dropped]
        for bits in range(1 << (n - 1)):
            lits = [(a, bool((bits >> (n - 2 - j)) & 1)) for j, a in enumerate(rest)]
            for name, positive in lits:
                yield conjoin([_lit(a, p) for a, p in lits] + [_lit(name, not positive)])


def abstraction_family(U: Universe, w: World):
    """States abstracted by one disjunction between neighbouring conjuncts,
    kept when they are true in ``w``."""
    n = U.n
    for world in U.worlds():
        lits = [_lit(a, world[a]) for a in U.atoms]
        for i in range(n - 1):
            parts = lits[:i] + [Or(lits[i], lits[i + 1])] + lits[i + 2:]
            f = conjoin(parts)
            if evaluate(f, w.assignment):
                yield f


# -- criteria ----------------------------------------------------------------------

def _curve_samples(denominator: int = 60):
    return [Fraction(j, denominator) for j in range(-denominator, denominator + 1)]


def check_criteria(U: Universe, w: World) -> list[CriterionReport]:
    """Test M1-M5 on sampled infons and E1-E4, E6 on the curve itself."""
    if U.n > CRITERIA_CAP:
        raise UniverseTooLargeError(U.n, CRITERIA_CAP)
    if U.n < 2:
        raise ValueError("criteria need at least two atoms to build contradictions")
    reports = {c: CriterionReport(c) for c in ("M1", "M2", "M3", "M4", "M5", "E1", "E2", "E3", "E4", "E6")}

    actual = state_formula(U, w)
    a = inaccuracy(actual, w, U)
    reports["M1"].checked = 1
    reports["M1"].note = "true state has zero discrepancy"
    if a.discrepancy != 0:
        reports["M1"].witnesses.append((render(actual), a.discrepancy))

    first = U.atoms[0]
    taut = Or(Atom(first), Not(Atom(first)))
    v = vacuity(interpret(taut, U), w, U)
    reports["M2"].checked = 1
    reports["M2"].note = "tautology has discrepancy +1"
    if v.discrepancy != 1:
        reports["M2"].witnesses.append((render(taut), v.discrepancy))

    r = reports["M3"]
    r.note = "contradiction has discrepancy -1"
    for f in contradiction_family(U):
        r.checked += 1
        d = inaccuracy(f, w, U).discrepancy
        if d != -1:
            r.witnesses.append((render(f), d))

    r = reports["M4"]
    r.note = "contingently false state has discrepancy in (-1, 0)"
    for world in U.worlds():
        if world.index == w.index:
            continue
        f = state_formula(U, world)
        r.checked += 1
        d = inaccuracy(f, w, U).discrepancy
        if not -1 < d < 0:
            r.witnesses.append((render(f), d))

    r = reports["M5"]
    r.note = "contingently true infon has discrepancy in (0, 1)"
    for f in abstraction_family(U, w):
        r.checked += 1
        d = vacuity(interpret(f, U), w, U).discrepancy
        if not 0 < d < 1:
            r.witnesses.append((render(f), d))

    samples = _curve_samples()
    iota = tssi_informativeness

    reports["E1"].checked = 1
    if iota(0) != 1:
        reports["E1"].witnesses.append(("0", iota(0)))

    area = tssi_quantity(-1, 1)
    reports["E2"].checked = 1
    reports["E2"].note = f"area over [-1, 1] = {area}"
    if area != Fraction(4, 3):
        reports["E2"].witnesses.append(("[-1, 1]", area))

    for d in (Fraction(-1), Fraction(1)):
        reports["E3"].checked += 1
        if iota(d) != 0:
            reports["E3"].witnesses.append((str(d), iota(d)))

    for d in samples:
        if d in (-1, 0, 1):
            continue
        reports["E4"].checked += 1
        if not 0 < iota(d) < 1:
            reports["E4"].witnesses.append((str(d), iota(d)))

    # marginal -2d is linear iff every difference quotient equals -2d - h exactly
    r = reports["E6"]
    r.note = "difference quotient equals -2d - h"
    for d in samples:
        for h in (Fraction(1, 60), Fraction(1, 7), Fraction(-1, 3)):
            if not -1 <= d + h <= 1:
                continue
            r.checked += 1
            slope = (iota(d + h) - iota(d)) / h
            if slope != -2 * d - h:
                r.witnesses.append((f"{d}+{h}", slope))

    return list(reports.values())


@dataclass
class DiscontinuityReport:
    state: Formula
    before: TssiAssessment
    abstracted: Formula
    after: TssiAssessment

    @property
    def jumped(self) -> bool:
        """Sign flips from inaccuracy to vacuity without either side being zero."""
        return self.before.discrepancy < 0 < self.after.discrepancy


def discontinuity_demo(U: Universe, w: World) -> DiscontinuityReport:
    """One false conjunct, then one disjunction that makes the infon true."""
    if U.n < 2:
        raise ValueError("the demonstration needs at least two atoms")
    lits = [_lit(a, w[a]) for a in U.atoms]
    last = U.atoms[-1]
    lits[-1] = _lit(last, not w[last])
    state = conjoin(lits)
    abstracted = conjoin(lits[:-2] + [Or(lits[-2], lits[-1])])
    before = inaccuracy(state, w, U)
    after = vacuity(interpret(abstracted, U), w, U)
    return DiscontinuityReport(state, before, abstracted, after)
