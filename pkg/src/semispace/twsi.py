"""Content measure of the weak theory: CONT(p) = 1 - P(p).

Worlds are weighted uniformly, so every value is an exact rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .formula import render
from .worlds import (
    ENUMERATION_CAP,
    Message,
    Universe,
    UniverseTooLargeError,
    canonical_formula,
    enumerate_messages,
    message_ids,
)

__all__ = ["ContentAssessment", "BcpReport", "prior_probability", "cont", "assess", "bcp_witness"]


@dataclass(frozen=True)
class ContentAssessment:
    prior: Fraction
    content: Fraction


def prior_probability(msg: Message, U: Universe) -> Fraction:
    return Fraction(msg.size, U.m)


def cont(msg: Message, U: Universe) -> Fraction:
    return 1 - prior_probability(msg, U)


def assess(msg: Message, U: Universe) -> ContentAssessment:
    prior = prior_probability(msg, U)
    return ContentAssessment(prior, 1 - prior)


@dataclass
class BcpReport:
    rows: list  # (message id, formula text, hex mask, prior, cont), highest content first
    maximal: list  # ids of the content-maximal messages
    contradiction_id: str

    @property
    def holds(self) -> bool:
        """True when the contradiction tops the content ranking."""
        return self.contradiction_id in self.maximal


def bcp_witness(U: Universe) -> BcpReport:
    """Rank every message by content and locate the maximum."""
    if U.n > ENUMERATION_CAP:
        raise UniverseTooLargeError(U.n, ENUMERATION_CAP)
    ids = message_ids(U)
    rows = []
    for msg in enumerate_messages(U):
        a = assess(msg, U)
        rows.append((ids[msg.mask], render(canonical_formula(msg, U)), msg.to_hex(), a.prior, a.content))
    rows.sort(key=lambda r: (-r[4], int(r[0][1:])))
    top = rows[0][4]
    maximal = [r[0] for r in rows if r[4] == top]
    return BcpReport(rows, maximal, ids[0])
