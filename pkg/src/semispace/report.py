"""Rows, serializations and the SVG scatter behind the command line."""

from __future__ import annotations

import csv
import io
import json
import math
from decimal import ROUND_HALF_UP, Decimal
from fractions import Fraction
from typing import Optional

from . import mtsi, tssi, twsi
from .formula import Formula, render
from .worlds import (
    ENUMERATION_CAP,
    Message,
    Universe,
    UniverseTooLargeError,
    World,
    canonical_formula,
    interpret,
    literal_profile,
    message_ids,
    state_formula,
    table_order,
)

PLACEMENT_FIELDS = (
    "messageId", "canonicalFormula", "bitmask", "k", "m", "r", "q",
    "thetaT", "thetaF", "phiU", "phiM", "phiI",
)
_RATIONAL_FIELDS = ("r", "q", "phiU", "phiM", "phiI")


def fmt_rational(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


def fmt_float(x: float) -> str:
    return format(x, ".12g")


def fmt_decimal(x, places: int = 3) -> str:
    """Round an exact rational half-up to a fixed number of places."""
    x = Fraction(x)
    d = Decimal(x.numerator) / Decimal(x.denominator)
    return str(d.quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_UP))


def _csv(header, rows, comments=()) -> str:
    buf = io.StringIO()
    for line in comments:
        buf.write(f"# {line}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


# -- message table -------------------------------------------------------------------

TABLE_FIELDS = ("id", "message", "worlds_true", "true_atoms")


def table_rows(U: Universe, w: World) -> list[tuple]:
    ids = message_ids(U)
    rows = []
    for msg in table_order(U):
        profile = literal_profile(msg, w, U)
        rows.append((ids[msg.mask], render(canonical_formula(msg, U)), msg.size, profile.t))
    return rows


def table_comments(U: Universe, w: World, actual: Formula) -> list[str]:
    lines = [f"universe: {','.join(U.atoms)}; actual: {render(actual)}"]
    if U.n == 2:
        a, b = U.atoms
        lines.append(f"M8 is the exclusive-or {a}{b}' + {a}'{b}")
    return lines


def table_csv(U: Universe, w: World, actual: Formula) -> str:
    return _csv(TABLE_FIELDS, table_rows(U, w), table_comments(U, w, actual))


def table_json(U: Universe, w: World, actual: Formula) -> str:
    rows = [dict(zip(TABLE_FIELDS, r)) for r in table_rows(U, w)]
    return json.dumps({"universe": list(U.atoms), "actual": render(actual), "messages": rows}, indent=2) + "\n"


# -- placements ----------------------------------------------------------------------

def placement_record(msg: Message, p: mtsi.MtsiPlacement, U: Universe, message_id: str) -> dict:
    return {
        "messageId": message_id,
        "canonicalFormula": render(canonical_formula(msg, U)),
        "bitmask": msg.to_hex(),
        "k": p.k,
        "m": p.m,
        "r": fmt_rational(p.r),
        "q": fmt_rational(p.q),
        "thetaT": fmt_float(p.theta_t),
        "thetaF": fmt_float(p.theta_f),
        "phiU": fmt_rational(p.phi_u),
        "phiM": fmt_rational(p.phi_m),
        "phiI": fmt_rational(p.phi_i),
    }


def placements(U: Universe, w: World, ray_scheme: str = "ratio"):
    """Every message in table order with its placement.

    Raises if any placement breaks the exact partition of the measures.
    """
    if U.n > ENUMERATION_CAP:
        raise UniverseTooLargeError(U.n, ENUMERATION_CAP)
    ids = message_ids(U)
    out = []
    for msg in table_order(U):
        p = mtsi.place(msg, w, U, ray_scheme=ray_scheme)
        if p.phi_i + p.phi_u + p.phi_m != 1:
            raise AssertionError(f"measures of {ids[msg.mask]} do not sum to one")
        out.append((ids[msg.mask], msg, p))
    return out


def space_records(U: Universe, w: World, ray_scheme: str = "ratio") -> list[dict]:
    return [placement_record(msg, p, U, mid) for mid, msg, p in placements(U, w, ray_scheme)]


def space_csv(records: list[dict]) -> str:
    return _csv(PLACEMENT_FIELDS, [[r[f] for f in PLACEMENT_FIELDS] for r in records])


def space_json(records: list[dict]) -> str:
    return json.dumps(records, indent=2) + "\n"


def read_space_csv(text: str) -> list[dict]:
    """Parse placement CSV back; rational columns become Fractions."""
    lines = [line for line in text.splitlines() if not line.startswith("#")]
    out = []
    for row in csv.DictReader(lines):
        rec = dict(row)
        for key in _RATIONAL_FIELDS:
            rec[key] = parse_rational(rec[key])
        rec["k"] = int(rec["k"])
        rec["m"] = int(rec["m"])
        rec["thetaT"] = float(rec["thetaT"])
        rec["thetaF"] = float(rec["thetaF"])
        out.append(rec)
    return out


def _xml_escape(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def space_svg(U: Universe, w: World, records: list[dict]) -> str:
    """Quarter-disc scatter of the placements on a fixed 800x800 canvas."""
    size, margin = 800, 90
    scale = size - 2 * margin
    ox, oy = margin, size - margin

    def xy(tt, tf):
        return ox + tt * scale, oy - tf * scale

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        '<rect x="0" y="0" width="800" height="800" fill="white"/>',
        f'<path d="M {ox} {oy - scale} A {scale} {scale} 0 0 1 {ox + scale} {oy}" fill="none" stroke="#999" stroke-width="1"/>',
        f'<line x1="{ox}" y1="{oy}" x2="{ox + scale + 20}" y2="{oy}" stroke="black" stroke-width="1.5"/>',
        f'<line x1="{ox}" y1="{oy}" x2="{ox}" y2="{oy - scale - 20}" stroke="black" stroke-width="1.5"/>',
    ]
    d = scale / math.sqrt(2)
    out.append(
        f'<line x1="{ox}" y1="{oy}" x2="{ox + d:.2f}" y2="{oy - d:.2f}" stroke="#666" stroke-width="1" stroke-dasharray="6,4"/>'
    )
    out.append(f'<text x="{ox + scale + 24}" y="{oy + 5}" font-family="sans-serif" font-size="16">&#977;T</text>')
    out.append(f'<text x="{ox - 10}" y="{oy - scale - 28}" font-family="sans-serif" font-size="16">&#977;F</text>')
    out.append(f'<text x="{ox - 12}" y="{oy + 20}" font-family="sans-serif" font-size="12">0</text>')
    out.append(f'<text x="{ox + scale - 4}" y="{oy + 20}" font-family="sans-serif" font-size="12">1</text>')
    out.append(f'<text x="{ox - 20}" y="{oy - scale + 4}" font-family="sans-serif" font-size="12">1</text>')

    stacked: dict = {}
    for rec in records:
        px, py = xy(float(rec["thetaT"]), float(rec["thetaF"]))
        key = (round(px, 2), round(py, 2))
        depth = stacked.get(key, 0)
        stacked[key] = depth + 1
        if depth == 0:
            out.append(f'<circle cx="{px:.2f}" cy="{py:.2f}" r="4" fill="#1f4e9c"/>')
        if U.n <= 2:
            label = _xml_escape(f'{rec["messageId"]} {rec["canonicalFormula"]}')
            out.append(
                f'<text x="{px + 7:.2f}" y="{py - 6 - 15 * depth:.2f}" font-family="sans-serif" font-size="13">{label}</text>'
            )
    out.append(
        f'<text x="{size // 2}" y="30" text-anchor="middle" font-family="sans-serif" font-size="16">'
        f'{_xml_escape(",".join(U.atoms))}: {len(records)} messages, actual state {_xml_escape(render(state_formula(U, w)))}</text>'
    )
    out.append("</svg>")
    return "\n".join(out) + "\n"


# -- single infon assessment -----------------------------------------------------------

def assess_record(U: Universe, w: World, formula: Formula, ray_scheme: str = "ratio") -> dict:
    """Content, discrepancy-based and measure-space readings of one infon."""
    msg = interpret(formula, U)
    content = twsi.assess(msg, U)
    record = {
        "formula": render(formula),
        "bitmask": msg.to_hex(),
        "worldsTrue": msg.size,
        "m": U.m,
        "twsi": {"prior": fmt_rational(content.prior), "cont": fmt_rational(content.content)},
    }
    tssi_part = {}
    try:
        a = tssi.inaccuracy(formula, w, U)
        tssi_part["inaccuracy"] = _tssi_dict(a)
    except tssi.NotConjunctiveError:
        tssi_part["inaccuracy"] = {"undefined": "NotConjunctive"}
    try:
        v = tssi.vacuity(msg, w, U)
        tssi_part["vacuity"] = _tssi_dict(v)
    except tssi.NotTrueAtActualError:
        tssi_part["vacuity"] = {"undefined": "NotTrueAtActual"}
    record["tssi"] = tssi_part

    p = mtsi.place(msg, w, U, ray_scheme=ray_scheme)
    record["mtsi"] = {
        "k": p.k,
        "m": p.m,
        "r": fmt_rational(p.r),
        "q": fmt_rational(p.q),
        "profile": {"t": p.profile.t, "f": p.profile.f},
        "thetaT": fmt_float(p.theta_t),
        "thetaF": fmt_float(p.theta_f),
        "phiU": fmt_rational(p.phi_u),
        "phiM": fmt_rational(p.phi_m),
        "phiI": fmt_rational(p.phi_i),
        "iota": fmt_float(mtsi.metric_informativeness(p)),
        "extreme": p.extreme,
    }
    return record


def _tssi_dict(a: tssi.TssiAssessment) -> dict:
    out = {
        "l": a.l,
        "e": a.e,
        "discrepancy": fmt_rational(a.discrepancy),
        "discrepancy3": fmt_decimal(a.discrepancy),
        "informativeness": fmt_rational(a.informativeness),
    }
    if a.ways is not None:
        out["ways"] = a.ways
    return out


# -- criteria and demos ----------------------------------------------------------------

def criteria_lines(prefix: str, reports, expected: Optional[frozenset] = None) -> list[str]:
    lines = []
    for r in reports:
        tag = ""
        if expected is not None:
            tag = " (expected)" if (r.status == "violated") == (r.criterion in expected) else " (UNEXPECTED)"
        extra = f", {len(r.witnesses)} witnesses" if r.witnesses else ""
        lines.append(f"{prefix} {r.criterion}: {r.status}{tag} [{r.checked} checked{extra}] {r.note}".rstrip())
    return lines


def discontinuity_lines(report: tssi.DiscontinuityReport) -> list[str]:
    b, a = report.before, report.after
    return [
        f"state {render(report.state)}: inaccuracy {fmt_rational(b.discrepancy)} ({fmt_decimal(b.discrepancy)})",
        f"abstracted {render(report.abstracted)}: vacuity {fmt_rational(a.discrepancy)} ({fmt_decimal(a.discrepancy)})",
        "sign jump without passing through zero: " + ("yes" if report.jumped else "no"),
    ]


def bcp_lines(report: twsi.BcpReport) -> list[str]:
    lines = ["id,message,bitmask,prior,cont"]
    for mid, text, mask, prior, content in report.rows:
        lines.append(f"{mid},{text},{mask},{fmt_rational(prior)},{fmt_rational(content)}")
    top = report.rows[0][4]
    lines.append(f"maximal content {fmt_rational(top)} held by: {', '.join(report.maximal)}")
    verdict = "tops" if report.holds else "does not top"
    lines.append(f"the contradiction ({report.contradiction_id}) {verdict} the content ranking")
    return lines
