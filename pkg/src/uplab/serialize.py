"""JSON encoding and decoding for every public object.

Formats are stable and diff-friendly: field descriptors carry their
modulus, finite elements serialize as coefficient vectors over GF(p),
rationals as "num/den" strings, and ternary forms as sparse maps keyed by
"a,b,c" exponent strings.  Encoders produce plain dict/list/str/int data;
``dumps`` renders them with sorted keys so byte-identical reports are a
matter of equal inputs.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .curves import LinearSystem, TernaryForm
from .fields import FieldElement, FieldSpec
from .geometry import (
    ParamCurve,
    Plane,
    PointConfiguration,
    ProjPoint,
    SectionResult,
)
from .harness import TrialRecord, TrialReport
from .hilbert import HilbertProfile, MinimalSystemVerdict, is_decreasing_type
from .unipoly import UniPoly
from .upp import ContainmentReport, UppReport


def dumps(payload) -> str:
    """Canonical JSON text: sorted keys, two-space indent, newline end."""
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


# -- fields


def field_to_json(spec: FieldSpec) -> dict:
    if spec.kind == "rational":
        return {"type": "rational"}
    return {
        "type": "finite",
        "p": spec.p,
        "m": spec.m,
        "modulus": list(spec.modulus),
    }


def field_from_json(data: dict) -> FieldSpec:
    kind = data.get("type")
    if kind == "rational":
        return FieldSpec.rationals()
    if kind == "finite":
        return FieldSpec.extension(
            int(data["p"]), int(data["m"]), data.get("modulus")
        )
    raise ValueError(f"unknown field type {kind!r}")


def element_to_json(x: FieldElement):
    if x.spec.kind == "rational":
        frac = x.raw
        return f"{frac.numerator}/{frac.denominator}"
    return [int(c) for c in x.coeffs]


def element_from_json(spec: FieldSpec, data) -> FieldElement:
    if spec.kind == "rational":
        if isinstance(data, str):
            num, _, den = data.partition("/")
            return spec.element(Fraction(int(num), int(den or "1")))
        return spec.element(Fraction(data))
    if isinstance(data, int):
        return spec.element(data)
    return spec.element(list(data))


# -- geometry


def points_to_json(config: PointConfiguration) -> dict:
    return {
        "field": field_to_json(config.spec),
        "points": [
            [element_to_json(c) for c in pt.coords] for pt in config.points
        ],
        "label": config.label,
    }


def points_from_json(data: dict) -> PointConfiguration:
    spec = field_from_json(data["field"])
    pts = [
        ProjPoint(spec, [element_from_json(spec, c) for c in coords])
        for coords in data["points"]
    ]
    return PointConfiguration(spec, pts, label=data.get("label", ""))


def plane_to_json(plane: Plane) -> dict:
    return {
        "field": field_to_json(plane.spec),
        "duals": [element_to_json(c) for c in plane.duals],
    }


def plane_from_json(data: dict) -> Plane:
    spec = field_from_json(data["field"])
    return Plane(spec, [element_from_json(spec, c) for c in data["duals"]])


def curve_to_json(curve: ParamCurve) -> dict:
    return {
        "field": field_to_json(curve.spec),
        "param": [
            [element_to_json(c) for c in comp.coefficients]
            for comp in curve.components
        ],
    }


def curve_from_json(data: dict) -> ParamCurve:
    spec = field_from_json(data["field"])
    comps = [
        UniPoly(spec, [element_from_json(spec, c) for c in coeffs])
        for coeffs in data["param"]
    ]
    return ParamCurve(spec, comps)


def section_to_json(section: SectionResult) -> dict:
    return {
        "field": field_to_json(section.spec),
        "plane": plane_to_json(section.plane),
        "points": [
            [element_to_json(c) for c in pt.coords] for pt in section.points
        ],
        "multiplicities": list(section.multiplicities),
        "reduced": section.reduced,
        "complete": section.complete,
        "missing_degree": section.missing_degree,
    }


# -- forms and systems


def form_to_json(form: TernaryForm) -> dict:
    coeffs = {}
    for (a, b, c), v in form.to_dict().items():
        coeffs[f"{a},{b},{c}"] = element_to_json(v)
    return {
        "field": field_to_json(form.spec),
        "degree": form.degree,
        "coeffs": coeffs,
    }


def form_from_json(data: dict) -> TernaryForm:
    spec = field_from_json(data["field"])
    table = {}
    for key, val in data["coeffs"].items():
        a, b, c = (int(part) for part in key.split(","))
        table[(a, b, c)] = element_from_json(spec, val)
    return TernaryForm.from_dict(spec, int(data["degree"]), table)


def system_to_json(system: LinearSystem) -> dict:
    return {
        "degree": system.degree,
        "dimension": system.dimension,
        "basis": [form_to_json(f) for f in system.basis],
    }


# -- reports


def profile_to_json(prof: HilbertProfile) -> dict:
    return {
        "H": list(prof.values),
        "delta": list(prof.deltas),
        "a1": prof.a1,
        "a2": prof.a2,
        "t": prof.t,
        "decreasing_type": is_decreasing_type(prof),
        "warnings": list(prof.warnings),
    }


def verdict_to_json(verdict: MinimalSystemVerdict) -> dict:
    return {
        "n": verdict.n,
        "d": verdict.d,
        "h": verdict.h,
        "g": verdict.g,
        "case": verdict.case,
        "requires_upp": verdict.requires_upp,
    }


def upp_report_to_json(report: UppReport) -> dict:
    witness = None
    if report.witness is not None:
        witness = {
            "subset_a": list(report.witness.subset_a),
            "subset_b": list(report.witness.subset_b),
            "degree": report.witness.degree,
            "value_a": report.witness.value_a,
            "value_b": report.witness.value_b,
        }
    return {
        "mode": report.mode,
        "verdict": report.verdict,
        "witness": witness,
        "stats": {str(k): v for k, v in sorted(report.stats.items())},
        "sizes": list(report.sizes),
    }


def containment_report_to_json(report: ContainmentReport) -> dict:
    return {
        "degree": report.degree,
        "subset": list(report.subset),
        "h1_subset": report.h1_subset,
        "h0_subset": report.h0_subset,
        "h0_full": report.h0_full,
        "triggered": report.triggered,
        "kernels_equal": report.kernels_equal,
        "upp_assumed": report.upp_assumed,
        "passed": report.passed,
    }


def trial_record_to_json(record: TrialRecord) -> dict:
    return {
        "index": record.index,
        "accepted": record.accepted,
        "rejection_tags": list(record.rejection_tags),
        "plane": [list(map(int, d)) for d in record.plane] if record.plane else None,
        "section_size": record.section_size,
        "section_field_degree": record.section_field_degree,
        "minimal_degree": record.minimal_degree,
        "system_dimension": record.system_dimension,
        "members_tested": record.members_tested,
        "irreducible_count": record.irreducible_count,
        "inconclusive_count": record.inconclusive_count,
        "singleton_violation": record.singleton_violation,
        "upp_verdict": record.upp_verdict,
        "deltas": list(record.deltas),
        "decreasing_type": record.decreasing_type,
        "shape_warnings": record.shape_warnings,
        "passed": record.passed,
    }


def trial_report_to_json(report: TrialReport) -> dict:
    return {
        "curve_id": report.curve_id,
        "kind": report.kind,
        "requested": report.requested,
        "completed": report.completed,
        "rejected": report.rejected,
        "rejection_tags": dict(sorted(report.rejection_tags.items())),
        "seed": report.seed,
        "max_ext": report.max_ext,
        "members_per_trial": report.members_per_trial,
        "threshold": report.threshold,
        "trials": [trial_record_to_json(r) for r in report.trials],
        "all_passed": report.all_passed,
        "extras": report.extras,
    }
