"""Unit-circle measure space for semantic information.

Every message gets a radius ``r = k/m`` from the actual world and an angle
between the true axis (all literals hold in the actual world) and the
false axis (none do). Squaring the two coordinates gives the measures of
being uninformed (``phi_u``) and misinformed (``phi_m``); what is left,
``phi_i = 1 - r**2``, is informativeness.

The radius, the angle fraction and ``phi_i`` are exact rationals. The split
of ``r**2`` between ``phi_u`` and ``phi_m`` is exact when ``cos**2`` of the
angle is rational; otherwise ``phi_u`` is the exact rational value of the
floating-point product and ``phi_m`` takes the remainder, so the three
measures still sum to exactly one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .formula import render
from .tssi import CriterionReport
from .worlds import (
    ENUMERATION_CAP,
    LiteralProfile,
    Message,
    Universe,
    UniverseTooLargeError,
    World,
    canonical_formula,
    enumerate_messages,
    literal_profile,
)

__all__ = [
    "MtsiPlacement",
    "MirrorReport",
    "GuardsTranscript",
    "DegenerateProfileError",
    "OutOfSphereError",
    "RAY_SCHEMES",
    "radius",
    "angle",
    "paper_ray_angle",
    "place",
    "metric_informativeness",
    "mirror_check",
    "verify_mtsi",
    "guards_demo",
]

RAY_SCHEMES = ("ratio", "paper")

# cos^2(q * pi/2) for the angle fractions where it is rational
_EXACT_COS2 = {
    Fraction(0): Fraction(1),
    Fraction(1, 3): Fraction(3, 4),
    Fraction(1, 2): Fraction(1, 2),
    Fraction(2, 3): Fraction(1, 4),
    Fraction(1): Fraction(0),
}


class DegenerateProfileError(ValueError):
    pass


class OutOfSphereError(ValueError):
    pass


@dataclass(frozen=True)
class MtsiPlacement:
    k: int
    m: int
    r: Fraction
    q: Fraction
    theta_t: float
    theta_f: float
    phi_u: Fraction
    phi_m: Fraction
    phi_i: Fraction
    profile: LiteralProfile
    extreme: bool = False  # radius forced to 1 for a tautology or contradiction
    exact_split: bool = True

    @property
    def phi_r(self) -> Fraction:
        return self.phi_u + self.phi_m


def radius(msg: Message, w: World, U: Universe, extreme_rule: bool = True) -> tuple[int, Fraction]:
    """World-count distance ``k`` from the actual state and ``r = k/m``.

    True messages count the extra worlds they admit besides ``w``; false
    ones count the extra worlds their complement admits, so a message and
    its contradictory sit at the same radius. With ``extreme_rule`` the
    tautology and the contradiction are pinned to ``r = 1`` while ``k``
    keeps its raw value.
    """
    m = U.m
    if w in msg:
        k = msg.size - 1
    else:
        k = m - msg.size - 1
    if extreme_rule and msg.size in (0, m):
        return k, Fraction(1)
    return k, Fraction(k, m)


def angle(profile: LiteralProfile) -> Fraction:
    """Fraction of a right angle from the true axis: ``f / (t + f)``."""
    t, f = profile.t, profile.f
    if t < 0 or f < 0 or t + f == 0:
        raise DegenerateProfileError(f"profile (t={t}, f={f}) has no literals")
    return Fraction(f, t + f)


def paper_ray_angle(profile: LiteralProfile, n: int) -> Fraction:
    """Snap the ratio angle to rays spaced ``pi/(4n - 2)`` apart.

    There are ``2n - 1`` gaps across the quadrant; halves round up, away
    from the true axis.
    """
    steps = 2 * n - 1
    j = math.floor(angle(profile) * steps + Fraction(1, 2))
    return Fraction(j, steps)


def _split(r2: Fraction, q: Fraction) -> tuple[Fraction, Fraction, bool]:
    cos2 = _EXACT_COS2.get(q)
    if cos2 is not None:
        phi_u = r2 * cos2
        exact = True
    else:
        c = math.cos(float(q) * math.pi / 2)
        phi_u = Fraction(float(r2) * c * c)
        phi_u = min(max(phi_u, Fraction(0)), r2)
        exact = False
    return phi_u, r2 - phi_u, exact


def place(
    msg: Message,
    w: World,
    U: Universe,
    *,
    extreme_rule: bool = True,
    ray_scheme: str = "ratio",
    profile: Optional[LiteralProfile] = None,
) -> MtsiPlacement:
    if ray_scheme not in RAY_SCHEMES:
        raise ValueError(f"unknown ray scheme {ray_scheme!r}")
    k, r = radius(msg, w, U, extreme_rule)
    if profile is None:
        profile = literal_profile(msg, w, U)
    q = angle(profile) if ray_scheme == "ratio" else paper_ray_angle(profile, U.n)
    r2 = r * r
    phi_u, phi_m, exact = _split(r2, q)
    theta = float(q) * math.pi / 2
    return MtsiPlacement(
        k=k,
        m=U.m,
        r=r,
        q=q,
        theta_t=float(r) * math.cos(theta),
        theta_f=float(r) * math.sin(theta),
        phi_u=phi_u,
        phi_m=phi_m,
        phi_i=1 - r2,
        profile=profile,
        extreme=extreme_rule and msg.size in (0, U.m),
        exact_split=exact,
    )


def metric_informativeness(p: MtsiPlacement) -> float:
    """Height above the plane on the unit sphere: ``sqrt(1 - r**2)``."""
    if p.phi_u + p.phi_m > 1 or p.phi_u < 0 or p.phi_m < 0:
        raise OutOfSphereError("placement lies outside the unit sphere")
    return math.sqrt(1 - p.phi_u - p.phi_m)


@dataclass
class MirrorReport:
    placement: MtsiPlacement
    mirror: MtsiPlacement

    @property
    def equal_informativeness(self) -> bool:
        return self.placement.phi_i == self.mirror.phi_i

    @property
    def angles_mirrored(self) -> bool:
        return self.placement.q + self.mirror.q == 1

    @property
    def holds(self) -> bool:
        return self.equal_informativeness and self.angles_mirrored


def mirror_check(msg: Message, w: World, U: Universe, **kwargs) -> MirrorReport:
    """Place a message and its contradictory side by side."""
    return MirrorReport(place(msg, w, U, **kwargs), place(msg.complement(), w, U, **kwargs))


def verify_mtsi(U: Universe, w: World, *, extreme_rule: bool = True, ray_scheme: str = "ratio") -> list[CriterionReport]:
    """Exhaustively check the measure space over every message of ``U``."""
    if U.n > ENUMERATION_CAP:
        raise UniverseTooLargeError(U.n, ENUMERATION_CAP)
    reports = {
        "M1": CriterionReport("M1", note="only the actual state and its contradictory have phi_i = 1"),
        "M2": CriterionReport("M2", note="tautology has phi_i = 0"),
        "M3": CriterionReport("M3", note="contradiction has phi_i = 0"),
        "M4": CriterionReport("M4", note="contingently false messages have 0 < phi_R < 1"),
        "M5": CriterionReport("M5", note="contingently true messages have 0 < phi_R < 1"),
        "PARTITION": CriterionReport("PARTITION", note="phi_i + phi_u + phi_m = 1 with each in [0, 1]"),
        "MIRROR": CriterionReport("MIRROR", note="contradictories have equal phi_i"),
    }
    m = U.m
    single = 1 << w.index
    full = U.full_mask
    placements = {}
    for msg in enumerate_messages(U):
        placements[msg.mask] = place(msg, w, U, extreme_rule=extreme_rule, ray_scheme=ray_scheme)

    def label(mask):
        return render(canonical_formula(Message(mask, m), U))

    for mask, p in placements.items():
        is_minterm_pair = mask in (single, full ^ single)
        r = reports["M1"]
        r.checked += 1
        if (p.phi_i == 1) != is_minterm_pair:
            r.witnesses.append((label(mask), p.phi_i))

        if mask == full:
            reports["M2"].checked += 1
            if p.phi_i != 0:
                reports["M2"].witnesses.append((label(mask), p.phi_i))
        elif mask == 0:
            reports["M3"].checked += 1
            if p.phi_i != 0:
                reports["M3"].witnesses.append((label(mask), p.phi_i))
        elif not is_minterm_pair:
            r = reports["M5"] if (mask >> w.index) & 1 else reports["M4"]
            r.checked += 1
            if not 0 < p.phi_r < 1:
                r.witnesses.append((label(mask), p.phi_r))

        r = reports["PARTITION"]
        r.checked += 1
        parts = (p.phi_i, p.phi_u, p.phi_m)
        if sum(parts) != 1 or not all(0 <= x <= 1 for x in parts):
            r.witnesses.append((label(mask), sum(parts)))

        comp = full ^ mask
        if mask < comp:
            r = reports["MIRROR"]
            r.checked += 1
            if p.phi_i != placements[comp].phi_i:
                r.witnesses.append((label(mask), p.phi_i - placements[comp].phi_i))

    return list(reports.values())


# -- the two doors -----------------------------------------------------------------

@dataclass
class GuardsTranscript:
    lines: list
    identified: tuple  # (successes, cases)
    unidentified: tuple
    example_answer: int
    example_choice: int

    @property
    def success(self) -> bool:
        return all(s == c for s, c in (self.identified, self.unidentified))


def _other(door: int) -> int:
    return 3 - door


def guards_demo() -> GuardsTranscript:
    """Two doors, a truthful guard and a lying guard, one question.

    A guard is a map on the proposition "door 1 hides the money": the
    truth-teller is the identity and the liar is negation. Both the
    identified and the unidentified version of the puzzle are run over
    every money door, liar placement and guard asked.
    """
    def speak(liar: bool, prop: bool) -> bool:
        return (not prop) if liar else prop

    def door(prop: bool) -> int:
        return 1 if prop else 2

    lines = []
    identified = unidentified = cases = 0
    example = None
    for money in (1, 2):
        truth = money == 1
        for liar_guard in (1, 2):
            for asked in (1, 2):
                cases += 1
                asked_lies = asked == liar_guard

                answer = door(speak(asked_lies, truth))
                choice = _other(answer) if asked_lies else answer
                identified += choice == money
                lines.append(
                    f"identified   money=Door {money} liar=Guard {liar_guard} asked=Guard {asked}: "
                    f"says Door {answer}, choose Door {choice}"
                )

                # "which door would the other guard tell me to take?"
                nested = door(speak(asked_lies, speak(not asked_lies, truth)))
                choice = _other(nested)
                unidentified += choice == money
                lines.append(
                    f"unidentified money=Door {money} liar=Guard {liar_guard} asked=Guard {asked}: "
                    f"says the other guard would say Door {nested}, choose Door {choice}"
                )
                if money == 1 and liar_guard == 1 and asked == 1:
                    example = (nested, choice)
    lines.append(f"identified: {identified}/{cases} correct")
    lines.append(f"unidentified: {unidentified}/{cases} correct")
    return GuardsTranscript(lines, (identified, cases), (unidentified, cases), *example)
