"""End-to-end verification pipelines over explicit space curves.

Each pipeline intersects a parametrized curve with random planes, studies
the resulting point configuration, and checks that minimal-degree curves
through it behave as predicted: the generic member of the minimal linear
system is absolutely irreducible, a singleton system is irreducible
outright, and the difference sequence of the Hilbert function is of
decreasing type.  The characteristic-p family (t, t^q, t^(q^2), 1), whose
generic plane section is an affine plane over GF(q) and fails uniform
position for q >= 3, gets a dedicated pipeline that builds the section
directly from three independent curve points and cross-checks it against
the plane-section machinery.

Genericity is operationalized by rejection: a trial whose section is not
reduced or not complete within the extension bound is rejected with a tag,
never silently repaired.  All randomness is derived from one seed plus the
trial index, so identical inputs reproduce identical reports.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import comb, lcm

from .errors import (
    CurveInPlane,
    DependentSample,
    GenericityExhausted,
    InvalidParameters,
    RationalField,
)
from .fields import FieldElement, FieldSpec, embed, make_extension
from .geometry import (
    ParamCurve,
    Plane,
    PointConfiguration,
    ProjPoint,
    coordinatize_on_plane,
    plane_section,
)
from .hilbert import is_decreasing_type, profile
from .linalg import ExactMatrix, kernel_basis, rank_of_raw_rows
from .unipoly import UniPoly
from .upp import collinear_triples, upp_check
from .curves import (
    gcd_of_system,
    is_absolutely_irreducible,
    linear_system,
    minimal_degree,
)

_M64 = (1 << 64) - 1


def derive_seed(seed: int, index: int) -> int:
    """Per-trial seed via a splitmix64 step; deterministic and avalanched."""
    z = (seed + 0x9E3779B97F4A7C15 * (index + 1)) & _M64
    z ^= z >> 30
    z = (z * 0xBF58476D1CE4E5B9) & _M64
    z ^= z >> 27
    z = (z * 0x94D049BB133111EB) & _M64
    z ^= z >> 31
    return z


def twisted_cubic(spec: FieldSpec) -> ParamCurve:
    """The degree-3 curve (1, t, t^2, t^3)."""
    return ParamCurve(
        spec,
        [
            UniPoly.from_ints(spec, [1]),
            UniPoly.from_ints(spec, [0, 1]),
            UniPoly.from_ints(spec, [0, 0, 1]),
            UniPoly.from_ints(spec, [0, 0, 0, 1]),
        ],
    )


def frobenius_curve(p: int, f: int) -> ParamCurve:
    """The curve (t, t^q, t^(q^2), 1) over GF(q) with q = p^f.

    Rational and integral, cut out by two degree-q surfaces; its plane
    sections have q^2 points structured like an affine plane over GF(q).
    """
    if f < 1:
        raise InvalidParameters("exponent f must be at least 1")
    try:
        spec = make_extension(p, f)
    except Exception as exc:
        raise InvalidParameters(str(exc)) from exc
    q = p**f
    return ParamCurve(
        spec,
        [
            UniPoly.from_ints(spec, [0, 1]),
            UniPoly.from_ints(spec, [0] * q + [1]),
            UniPoly.from_ints(spec, [0] * (q * q) + [1]),
            UniPoly.from_ints(spec, [1]),
        ],
    )


def _subfield_elements(sub: FieldSpec, big: FieldSpec):
    return [embed(x, big) for x in sub.elements()]


def _plane_through(points3):
    """The unique plane through three independent P^3 points."""
    spec = points3[0].spec
    matrix = ExactMatrix(spec, [list(pt.coords) for pt in points3])
    kernel = kernel_basis(matrix)
    if len(kernel) != 1:
        raise DependentSample("three points do not span a plane")
    return Plane(spec, kernel[0])


def frobenius_section_direct(
    p: int, f: int, ext_m: int = 2, seed: int = 0, retries: int = 100
):
    """Plane section of the (t, t^q, t^(q^2), 1) curve from first principles.

    Samples three curve points with parameters in GF(q^ext_m) until they
    are affinely independent, spans their plane, and generates all q^2
    section points as the affine GF(q)-combinations of the three.  The
    result is cross-checked for exact set equality against the generic
    plane-section computation before being coordinatized on the plane.

    Returns (configuration, plane, curve over the big field).
    """
    if ext_m < 2:
        raise InvalidParameters("need ext_m >= 2 for independent curve points")
    curve = frobenius_curve(p, f)
    q = p**f
    big = make_extension(p, f * ext_m)
    curve_big = curve.embed(big)
    rng = random.Random(seed)

    lam = _subfield_elements(curve.spec, big)

    for _ in range(retries):
        params = []
        while len(params) < 3:
            t = big.random_element(rng)
            if t not in params:
                params.append(t)
        pts = [curve_big.point_at(t) for t in params]
        if any(pt.coords[3].is_zero for pt in pts):
            continue
        affine = [
            tuple(pt.coords[i] / pt.coords[3] for i in range(3)) for pt in pts
        ]
        v1 = tuple(affine[1][i] - affine[0][i] for i in range(3))
        v2 = tuple(affine[2][i] - affine[0][i] for i in range(3))
        if rank_of_raw_rows(big, [[c.raw for c in v1], [c.raw for c in v2]]) != 2:
            continue

        plane = _plane_through(pts)
        section_pts = []
        for l1 in lam:
            for l2 in lam:
                coords = [
                    affine[0][i] + l1 * v1[i] + l2 * v2[i] for i in range(3)
                ]
                section_pts.append(ProjPoint(big, coords + [big.one]))
        if len(set(section_pts)) != q * q:
            raise AssertionError("affine grid points collide; bug")
        for pt in section_pts:
            if not plane.contains(pt):
                raise AssertionError("grid point off the spanned plane; bug")

        computed = plane_section(curve_big, plane, max_ext=1)
        if not (computed.reduced and computed.complete):
            raise AssertionError("direct section disagrees with root finding")
        if set(computed.points) != set(section_pts):
            raise AssertionError("direct section disagrees with root finding")

        config = coordinatize_on_plane(
            sorted(section_pts, key=lambda s: s.key()),
            plane,
            label=f"frobenius-curve section p={p} f={f} seed={seed}",
        )
        return config, plane, curve_big
    raise DependentSample(f"no independent parameter triple in {retries} samples")


# ---------------------------------------------------------------------------
# Trial reports.


@dataclass(frozen=True)
class TrialRecord:
    index: int
    accepted: bool
    rejection_tags: tuple
    plane: tuple | None = None
    section_size: int = 0
    section_field_degree: int = 0
    minimal_degree: int = 0
    system_dimension: int = 0
    members_tested: int = 0
    irreducible_count: int = 0
    inconclusive_count: int = 0
    singleton_violation: bool = False
    upp_verdict: str | None = None
    deltas: tuple = ()
    decreasing_type: bool | None = None
    shape_warnings: int = 0
    passed: bool | None = None


@dataclass(frozen=True)
class TrialReport:
    curve_id: str
    kind: str
    requested: int
    completed: int
    rejected: int
    rejection_tags: dict
    seed: int
    max_ext: int
    members_per_trial: int
    threshold: float
    trials: tuple
    all_passed: bool
    extras: dict = field(default_factory=dict)


def _sample_plane_and_section(curve: ParamCurve, rng: random.Random, max_ext: int):
    """One plane sample with its section, or rejection tags."""
    spec = curve.spec
    while True:
        duals = [spec.random_element(rng) for _ in range(4)]
        if any(not d.is_zero for d in duals):
            break
    plane = Plane(spec, duals)
    try:
        section = plane_section(curve, plane, max_ext)
    except CurveInPlane:
        return plane, None, ("curve_in_plane",)
    tags = []
    if not section.complete:
        tags.append("incomplete_section")
    if not section.reduced:
        tags.append("non_reduced_section")
    return plane, section, tuple(tags)


def _serialize_plane(plane: Plane):
    return tuple(tuple(c.coeffs) for c in plane.duals)


def _upp_verdict_for(config: PointConfiguration) -> str:
    n = len(config)
    if sum(comb(n, k) for k in range(1, n + 1)) <= 4096:
        return upp_check(config).verdict
    return upp_check(config, sizes=(3,)).verdict


def _member_over_scalars(system, rng, scalar_spec, work_spec):
    """System member with coefficients drawn from a subfield of work_spec."""
    basis = [f.embed(work_spec) for f in system.basis]
    while True:
        weights = [
            embed(scalar_spec.random_element(rng), work_spec) for _ in basis
        ]
        if all(w.is_zero for w in weights):
            continue
        acc = basis[0].scale(weights[0])
        for w, f in zip(weights[1:], basis[1:]):
            acc = acc.add(f.scale(w))
        if not acc.is_zero:
            return acc.normalize()


def _member_fields(curve_spec: FieldSpec, section_spec: FieldSpec):
    """(scalar field, working field) for sampling system members.

    Scalars come from the cubic extension of the curve's base field; the
    working field is the compositum with the section's field of definition.
    """
    p, m = curve_spec.p, curve_spec.m
    section_rel = section_spec.m // m
    scalar_spec = make_extension(p, m * 3)
    work_spec = make_extension(p, m * lcm(section_rel, 3))
    return scalar_spec, work_spec


def verify_minimal_irreducibility(
    curve: ParamCurve,
    trials: int,
    members_per_trial: int,
    seed: int,
    max_ext: int | None = None,
    threshold: float = 0.95,
    max_conj: int | None = None,
    curve_id: str = "curve",
) -> TrialReport:
    """Test irreducibility of minimal curves through random plane sections.

    Per accepted trial: compute the section, its minimal degree s and the
    degree-s system; a one-dimensional system must have an absolutely
    irreducible generator (hard assertion), otherwise members with scalars
    from the cubic extension of the base field are sampled and tested,
    passing when the irreducible fraction meets the threshold.
    """
    if not curve.spec.is_finite:
        raise RationalField("trials need a finite base field")
    if trials < 1 or members_per_trial < 1:
        raise InvalidParameters("budgets must be positive")
    if max_ext is None:
        max_ext = curve.degree

    records = []
    tag_totals: dict = {}
    all_passed = True
    for index in range(trials):
        rng = random.Random(derive_seed(seed, index))
        plane, section, tags = _sample_plane_and_section(curve, rng, max_ext)
        if tags:
            for t in tags:
                tag_totals[t] = tag_totals.get(t, 0) + 1
            records.append(
                TrialRecord(index=index, accepted=False, rejection_tags=tags,
                            plane=_serialize_plane(plane))
            )
            continue
        config = section.configuration(label=f"{curve_id} trial {index}")
        prof = profile(config)
        s = minimal_degree(config)
        system = linear_system(config, s)
        upp_verdict = _upp_verdict_for(config)

        singleton_violation = False
        if system.dimension == 1:
            verdict = is_absolutely_irreducible(system.basis[0], max_conj)
            tested, irreducible = 1, int(verdict is True)
            inconclusive = int(verdict is None)
            singleton_violation = verdict is False
        else:
            scalar_spec, work_spec = _member_fields(curve.spec, section.spec)
            tested = irreducible = inconclusive = 0
            for _ in range(members_per_trial):
                member = _member_over_scalars(system, rng, scalar_spec, work_spec)
                verdict = is_absolutely_irreducible(member, max_conj)
                tested += 1
                if verdict is True:
                    irreducible += 1
                elif verdict is None:
                    inconclusive += 1
        fraction = irreducible / tested if tested else 0.0
        passed = (not singleton_violation) and fraction >= threshold
        all_passed = all_passed and passed
        records.append(
            TrialRecord(
                index=index,
                accepted=True,
                rejection_tags=(),
                plane=_serialize_plane(plane),
                section_size=len(config),
                section_field_degree=section.spec.m,
                minimal_degree=s,
                system_dimension=system.dimension,
                members_tested=tested,
                irreducible_count=irreducible,
                inconclusive_count=inconclusive,
                singleton_violation=singleton_violation,
                upp_verdict=upp_verdict,
                deltas=prof.deltas,
                decreasing_type=is_decreasing_type(prof),
                shape_warnings=len(prof.warnings),
                passed=passed,
            )
        )

    completed = sum(1 for r in records if r.accepted)
    return TrialReport(
        curve_id=curve_id,
        kind="minimal-irreducibility",
        requested=trials,
        completed=completed,
        rejected=trials - completed,
        rejection_tags=tag_totals,
        seed=seed,
        max_ext=max_ext,
        members_per_trial=members_per_trial,
        threshold=threshold,
        trials=tuple(records),
        all_passed=all_passed and completed > 0,
    )


def collinear_control_config(spec: FieldSpec):
    """Five points on a line plus one off it, over an extension if needed.

    The difference sequence is (1, 2, 1, 1, 1), so consecutive equal values
    appear and every curve system at those degrees shares the line factor.
    """
    work = spec
    k = 1
    while work.order < 6:
        k += 1
        work = make_extension(spec.p, spec.m * k)
    five = []
    for x in work.elements():
        five.append(x)
        if len(five) == 5:
            break
    pts = [ProjPoint(work, [work.one, work.zero, a]) for a in five]
    pts.append(ProjPoint(work, [work.zero, work.one, work.zero]))
    return PointConfiguration(work, pts, label="five collinear plus one")


def _control_gcd_checks(config: PointConfiguration):
    """Where consecutive difference values agree, the system's gcd degree
    must equal that value."""
    prof = profile(config)
    checks = []
    for s in range(max(prof.a1, 1), prof.t + 1):
        if prof.delta_at(s - 1) == prof.delta_at(s):
            system = linear_system(config, s)
            if system.dimension == 0:
                continue
            common = gcd_of_system(system)
            checks.append(
                {
                    "degree": s,
                    "delta": prof.delta_at(s),
                    "gcd_degree": common.degree,
                    "matches": common.degree == prof.delta_at(s),
                }
            )
    return checks


def verify_decreasing_type(
    curve: ParamCurve,
    trials: int,
    seed: int,
    max_ext: int | None = None,
    curve_id: str = "curve",
) -> TrialReport:
    """Check that random plane sections have decreasing-type differences.

    Also runs a synthetic control (five collinear points plus one) where
    consecutive difference values repeat, confirming that the curve systems
    at those degrees share a common factor of exactly that degree.
    """
    if not curve.spec.is_finite:
        raise RationalField("trials need a finite base field")
    if trials < 1:
        raise InvalidParameters("budgets must be positive")
    if max_ext is None:
        max_ext = curve.degree

    records = []
    tag_totals: dict = {}
    all_passed = True
    for index in range(trials):
        rng = random.Random(derive_seed(seed, index))
        plane, section, tags = _sample_plane_and_section(curve, rng, max_ext)
        if tags:
            for t in tags:
                tag_totals[t] = tag_totals.get(t, 0) + 1
            records.append(
                TrialRecord(index=index, accepted=False, rejection_tags=tags,
                            plane=_serialize_plane(plane))
            )
            continue
        config = section.configuration(label=f"{curve_id} trial {index}")
        prof = profile(config)
        decreasing = is_decreasing_type(prof)
        all_passed = all_passed and decreasing
        records.append(
            TrialRecord(
                index=index,
                accepted=True,
                rejection_tags=(),
                plane=_serialize_plane(plane),
                section_size=len(config),
                section_field_degree=section.spec.m,
                deltas=prof.deltas,
                decreasing_type=decreasing,
                shape_warnings=len(prof.warnings),
                passed=decreasing,
            )
        )

    control = collinear_control_config(curve.spec)
    control_checks = _control_gcd_checks(control)
    control_ok = bool(control_checks) and all(c["matches"] for c in control_checks)

    completed = sum(1 for r in records if r.accepted)
    return TrialReport(
        curve_id=curve_id,
        kind="decreasing-type",
        requested=trials,
        completed=completed,
        rejected=trials - completed,
        rejection_tags=tag_totals,
        seed=seed,
        max_ext=max_ext,
        members_per_trial=0,
        threshold=1.0,
        trials=tuple(records),
        all_passed=all_passed and control_ok and completed > 0,
        extras={"control_checks": control_checks, "control_ok": control_ok},
    )


def _pencil_scan(system, scalar_spec, work_spec, max_conj):
    """Exhaustively test every scalar-rational member of a two-dim system."""
    basis = [form.embed(work_spec) for form in system.basis]
    reducible = 0
    one = work_spec.one
    ratios = [embed(x, work_spec) for x in scalar_spec.elements()]
    members = [(one, r) for r in ratios] + [(work_spec.zero, one)]
    for w0, w1 in members:
        member = basis[0].scale(w0).add(basis[1].scale(w1))
        if is_absolutely_irreducible(member, max_conj) is not True:
            reducible += 1
    return reducible


def frobenius_pipeline(
    p: int,
    f: int,
    seed: int,
    members: int = 50,
    ext_m: int = 4,
    max_conj: int | None = None,
    plane_retries: int = 25,
) -> dict:
    """Full pipeline on the (t, t^q, t^(q^2), 1) curve; returns a report dict.

    Expected behavior encoded as assertions in the report: section of size
    q^2; collinear triple count q(q+1)*C(q,3); uniform position holding
    exactly for q = 2; minimal degree q with a two-dimensional system;
    difference sequence (1, 2, ..., q, ..., 2, 1) of decreasing type; and
    every sampled member of the minimal system absolutely irreducible.

    Genericity of the three-point plane is enforced by rejection: the
    pencil through a section always contains q + 1 degenerate members
    (unions of a parallel class of affine lines), rational over the field
    of the section points.  A plane is accepted only when none of those is
    rational over the member scalar field, which is checked by an
    exhaustive scan of the scalar-rational pencil; every rejection is
    reported.  The default ext_m is coprime to 3 so that the scalar field
    GF(q^3) meets the section field only in GF(q), keeping the bad locus
    small; ext_m = 2 is excluded in practice because all parameter triples
    there span one fixed plane whose bad ratios always include one.
    """
    q = p**f
    base_spec = make_extension(p, f)
    rejections = {}
    config = plane = system = None
    attempts = 0
    for attempt in range(plane_retries):
        attempts += 1
        config, plane, curve_big = frobenius_section_direct(
            p, f, ext_m=ext_m, seed=derive_seed(seed, attempt)
        )
        s = minimal_degree(config)
        system = linear_system(config, s)
        scalar_spec, work_spec = _member_fields(base_spec, config.spec)
        if system.dimension == 2:
            bad = _pencil_scan(system, scalar_spec, work_spec, max_conj)
            if bad:
                rejections["reducible_member_in_pencil"] = (
                    rejections.get("reducible_member_in_pencil", 0) + 1
                )
                continue
        break
    else:
        raise GenericityExhausted(
            f"no generic three-point plane in {plane_retries} attempts",
            fired=rejections,
        )

    triples = collinear_triples(config)
    upp_verdict = _upp_verdict_for(config)
    prof = profile(config)
    s = minimal_degree(config)
    scalar_spec, work_spec = _member_fields(base_spec, config.spec)
    rng = random.Random(derive_seed(seed, 1_000_003))
    tested = irreducible = inconclusive = 0
    for _ in range(members):
        member = _member_over_scalars(system, rng, scalar_spec, work_spec)
        verdict = is_absolutely_irreducible(member, max_conj)
        tested += 1
        if verdict is True:
            irreducible += 1
        elif verdict is None:
            inconclusive += 1

    expected_deltas = tuple(list(range(1, q + 1)) + list(range(q - 1, 0, -1)))
    expected_triples = q * (q + 1) * comb(q, 3)
    assertions = {
        "section_size": (len(config), q * q),
        "collinear_triples": (len(triples), expected_triples),
        "upp_verdict": (upp_verdict, "holds" if q == 2 else "fails"),
        "minimal_degree": (s, q),
        "system_dimension": (system.dimension, 2),
        "deltas": (prof.deltas, expected_deltas),
        "decreasing_type": (is_decreasing_type(prof), True),
        "irreducible_members": (irreducible, tested),
    }
    all_pass = all(got == want for got, want in assertions.values())
    return {
        "p": p,
        "f": f,
        "q": q,
        "seed": seed,
        "ext_m": ext_m,
        "plane_attempts": attempts,
        "plane_rejections": rejections,
        "section_field_degree": config.spec.m,
        "plane": _serialize_plane(plane),
        "section_size": len(config),
        "collinear_triples": len(triples),
        "upp_verdict": upp_verdict,
        "H": list(prof.values),
        "deltas": list(prof.deltas),
        "a1": prof.a1,
        "a2": prof.a2,
        "t": prof.t,
        "decreasing_type": is_decreasing_type(prof),
        "minimal_degree": s,
        "system_dimension": system.dimension,
        "members_tested": tested,
        "members_irreducible": irreducible,
        "members_inconclusive": inconclusive,
        "assertions": {
            k: {"got": _jsonable(g), "want": _jsonable(w), "pass": g == w}
            for k, (g, w) in assertions.items()
        },
        "all_pass": all_pass,
    }


def _jsonable(v):
    if isinstance(v, tuple):
        return list(v)
    return v
