"""JSON serialization of (Fg) reports."""

from __future__ import annotations

import hashlib
import json

from .algebra import MonomialPresentation
from .centre import fg_over_centre_probe
from .classification import Kind
from .dual import build_dual, regime_for
from .errors import ScopeError
from .fg import FgReport
from .presentation import serialize
from .resolution import OverlapLevels, degree_profile

SCHEMA_VERSION = "1.0"
PROBE_DEGREES = 6


def presentation_digest(p: MonomialPresentation) -> str:
    return hashlib.sha256(serialize(p, canonical=True).encode("utf-8")).hexdigest()


def probe_section(p: MonomialPresentation, report: FgReport, k_max: int = PROBE_DEGREES) -> dict:
    if report.cls.kind not in (Kind.DKOSZUL, Kind.DA_STACKED):
        return {"heuristic": True, "available": False, "reason": "no B-model for this class"}
    try:
        regime = regime_for(report.cls)
    except ScopeError as exc:
        return {"heuristic": True, "available": False, "reason": str(exc)}
    dp = build_dual(p, report.cls.A, report.cls.d)
    counts = fg_over_centre_probe(dp, regime, k_max)
    return {
        "heuristic": True,
        "available": True,
        "regime": regime.kind.value,
        "max_degree": k_max,
        "new_generator_counts": counts,
    }


def report_dict(p: MonomialPresentation, report: FgReport, levels: OverlapLevels, probe: dict) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "presentation_digest": presentation_digest(p),
        "class": report.cls.to_dict(),
        "verdict": report.verdict.value,
        "reason": report.reason,
        "notes": list(report.notes),
        "witnesses": {
            "loops": [w.to_dict() for w in report.loops],
            "trails": [w.to_dict() for w in report.trails],
        },
        "generators": [g.to_dict() for g in report.generators],
        "bound_N": report.bound_N,
        "profiles": [sorted(s) for s in degree_profile(levels)],
        "probe": probe,
    }


def to_json(data: dict) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"
