"""Projective points and planes, rational space curves, and plane sections.

A curve is given by four univariate parametrization polynomials with no
common factor.  Intersecting with a plane reduces to root finding for one
univariate polynomial; roots beyond the allowed extension bound are
reported as missing rather than fatal.  A coordinate-subset chart
identifies any plane with the projective plane so that downstream Hilbert
machinery sees ordinary length-3 points.
"""

from __future__ import annotations

import random
from math import lcm

from .errors import (
    CurveInPlane,
    GenericityExhausted,
    PointOffPlane,
    ZeroPolynomial,
)
from .fields import FieldElement, FieldSpec, embed, make_extension
from .unipoly import UniPoly, factor_univariate, poly_gcd, roots_in_field


def _normalize(spec, coords):
    elems = [spec.element(c) for c in coords]
    first = next((e for e in elems if not e.is_zero), None)
    if first is None:
        raise ValueError("projective coordinates cannot all vanish")
    if first == spec.one:
        return tuple(elems)
    inv = first.inverse()
    return tuple(e * inv for e in elems)


class ProjPoint:
    """Point of P^2 or P^3; first nonzero coordinate normalized to one."""

    __slots__ = ("spec", "coords")

    def __init__(self, spec: FieldSpec, coords):
        coords = tuple(coords)
        if len(coords) not in (3, 4):
            raise ValueError("points live in P^2 or P^3")
        self.spec = spec
        self.coords = _normalize(spec, coords)

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return self.spec == other.spec and self.coords == other.coords

    def __hash__(self):
        return hash((self.spec, self.coords))

    def __len__(self):
        return len(self.coords)

    def key(self):
        return tuple(c.key() for c in self.coords)

    def embed(self, target: FieldSpec) -> "ProjPoint":
        return ProjPoint(target, [embed(c, target) for c in self.coords])

    def __repr__(self):
        inside = " : ".join(str(c.coeffs) for c in self.coords)
        return f"ProjPoint({inside})"


class Plane:
    """Plane in P^3 as dual coordinates, normalized like a point."""

    __slots__ = ("spec", "duals")

    def __init__(self, spec: FieldSpec, duals):
        duals = tuple(duals)
        if len(duals) != 4:
            raise ValueError("a plane has four dual coordinates")
        self.spec = spec
        self.duals = _normalize(spec, duals)

    def __eq__(self, other):
        if not isinstance(other, Plane):
            return NotImplemented
        return self.spec == other.spec and self.duals == other.duals

    def __hash__(self):
        return hash((self.spec, self.duals))

    def contains(self, point: ProjPoint) -> bool:
        if len(point) != 4:
            raise ValueError("plane membership is for P^3 points")
        acc = self.spec.zero
        for t, x in zip(self.duals, point.coords):
            acc = acc + t * x
        return acc.is_zero

    def embed(self, target: FieldSpec) -> "Plane":
        return Plane(target, [embed(t, target) for t in self.duals])

    def __repr__(self):
        inside = " : ".join(str(c.coeffs) for c in self.duals)
        return f"Plane({inside})"


class ParamCurve:
    """Rational space curve given by four coprime parametrization polynomials."""

    __slots__ = ("spec", "components", "degree")

    def __init__(self, spec: FieldSpec, components):
        comps = []
        for c in components:
            comps.append(c if isinstance(c, UniPoly) else UniPoly(spec, c))
        if len(comps) != 4:
            raise ValueError("a space curve needs four components")
        if all(c.is_zero for c in comps):
            raise ValueError("parametrization cannot be identically zero")
        common = UniPoly.zero(spec)
        for c in comps:
            if not c.is_zero:
                common = c if common.is_zero else poly_gcd(common, c)
        if common.degree > 0:
            comps = [c // common for c in comps]
        degree = max(c.degree for c in comps)
        if degree < 1:
            raise ValueError("parametrization defines a constant map")
        self.spec = spec
        self.components = tuple(comps)
        self.degree = degree

    def point_at(self, t: FieldElement) -> ProjPoint:
        """Curve point at an affine parameter value, in t's field."""
        comps = self.components
        if t.spec != self.spec:
            comps = [c.map_spec(t.spec) for c in comps]
        return ProjPoint(t.spec, [c.evaluate(t) for c in comps])

    def point_at_infinity(self) -> ProjPoint:
        """Limit point at the parameter t = infinity."""
        coords = [c.coefficient(self.degree) for c in self.components]
        return ProjPoint(self.spec, coords)

    def embed(self, target: FieldSpec) -> "ParamCurve":
        return ParamCurve(target, [c.map_spec(target) for c in self.components])

    def __repr__(self):
        return f"ParamCurve(degree {self.degree} over {self.spec!r})"


class PointConfiguration:
    """Finite set of distinct points of P^2 over one field."""

    __slots__ = ("spec", "points", "label")

    def __init__(self, spec: FieldSpec, points, label: str = ""):
        pts = []
        for p in points:
            if not isinstance(p, ProjPoint):
                p = ProjPoint(spec, p)
            if p.spec != spec:
                raise ValueError("all points must share the configuration's field")
            if len(p) != 3:
                raise ValueError("configurations hold P^2 points")
            pts.append(p)
        if len(set(pts)) != len(pts):
            raise ValueError("points must be pairwise distinct")
        self.spec = spec
        self.points = tuple(pts)
        self.label = label

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i):
        return self.points[i]

    def __eq__(self, other):
        if not isinstance(other, PointConfiguration):
            return NotImplemented
        return self.spec == other.spec and self.points == other.points

    def __hash__(self):
        return hash((self.spec, self.points))

    def subset(self, indices) -> "PointConfiguration":
        pts = [self.points[i] for i in indices]
        return PointConfiguration(self.spec, pts, label=f"{self.label}[subset]")

    def __repr__(self):
        return f"PointConfiguration({len(self.points)} points over {self.spec!r})"


def collinear(p: ProjPoint, q: ProjPoint, r: ProjPoint) -> bool:
    """True exactly when the 3x3 coordinate determinant vanishes."""
    if not (p.spec == q.spec == r.spec):
        raise ValueError("points over different fields")
    (a, b, c), (d, e, f), (g, h, i) = p.coords, q.coords, r.coords
    det = a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    return det.is_zero


def section_polynomial(curve: ParamCurve, plane: Plane) -> UniPoly:
    """The univariate incidence polynomial of curve and plane.

    Its affine roots are the parameters of intersection points; the degree
    drops below the curve degree exactly when the parameter-infinity point
    lies on the plane.
    """
    if plane.spec != curve.spec:
        curve = curve.embed(plane.spec)
    acc = UniPoly.zero(plane.spec)
    for t, comp in zip(plane.duals, curve.components):
        acc = acc + comp.scale(t)
    if acc.is_zero:
        raise CurveInPlane("the plane contains the curve")
    return acc


class SectionResult:
    """Plane section as P^3 points with multiplicities and quality flags."""

    __slots__ = (
        "spec",
        "plane",
        "points",
        "multiplicities",
        "reduced",
        "complete",
        "missing_degree",
    )

    def __init__(self, spec, plane, points, multiplicities, reduced, complete, missing_degree):
        self.spec = spec
        self.plane = plane
        self.points = tuple(points)
        self.multiplicities = tuple(multiplicities)
        self.reduced = reduced
        self.complete = complete
        self.missing_degree = missing_degree

    def __len__(self):
        return len(self.points)

    def total_multiplicity(self):
        return sum(self.multiplicities)

    def configuration(self, label: str = "") -> PointConfiguration:
        """Coordinatize the section on its plane as a P^2 configuration."""
        return coordinatize_on_plane(self.points, self.plane, label=label)

    def __repr__(self):
        return (
            f"SectionResult({len(self.points)} points, reduced={self.reduced}, "
            f"complete={self.complete})"
        )


def plane_section(curve: ParamCurve, plane: Plane, max_ext: int) -> SectionResult:
    """Intersect a parametrized curve with a plane.

    Roots of the incidence polynomial are collected in extensions of degree
    up to ``max_ext``, together with the parameter-infinity point when the
    plane passes through it.  All points are embedded into the smallest
    common extension.  ``reduced`` means every multiplicity is one and the
    full curve degree was accounted for; factors beyond ``max_ext`` only
    clear the ``complete`` flag.
    """
    if plane.spec != curve.spec:
        curve = curve.embed(plane.spec)
    spec = plane.spec
    section = section_polynomial(curve, plane)
    degree_at_infinity = curve.degree - section.degree

    factors = factor_univariate(section) if section.degree > 0 else []
    kept = [(g, m) for g, m in factors if g.degree <= max_ext]
    missing = sum(g.degree * m for g, m in factors if g.degree > max_ext)

    ext = 1
    for g, _ in kept:
        ext = lcm(ext, g.degree)
    common = spec if ext == 1 else make_extension(spec.p, spec.m * ext)
    curve_c = curve if common == spec else curve.embed(common)
    plane_c = plane if common == spec else plane.embed(common)

    tally: dict = {}
    order = []
    for g, mult in kept:
        for root, root_mult in roots_in_field(g, common):
            pt = curve_c.point_at(root)
            if pt not in tally:
                tally[pt] = 0
                order.append(pt)
            tally[pt] += mult * root_mult
    if degree_at_infinity > 0:
        pt = curve_c.point_at_infinity()
        if pt not in tally:
            tally[pt] = 0
            order.append(pt)
        tally[pt] += degree_at_infinity

    order.sort(key=lambda p: p.key())
    for pt in order:
        if not plane_c.contains(pt):
            raise AssertionError("section point off its plane; arithmetic bug")

    mults = [tally[pt] for pt in order]
    complete = missing == 0
    reduced = complete and all(m == 1 for m in mults)
    return SectionResult(
        spec=common,
        plane=plane_c,
        points=order,
        multiplicities=mults,
        reduced=reduced,
        complete=complete,
        missing_degree=missing,
    )


def coordinatize_on_plane(points, plane: Plane, label: str = "") -> PointConfiguration:
    """Project P^3 points of a plane onto a coordinate chart of that plane.

    Drops the coordinate at the plane's first nonzero dual position; this
    restriction is a linear isomorphism onto P^2, so incidence data is
    preserved.
    """
    j = next(i for i, t in enumerate(plane.duals) if not t.is_zero)
    projected = []
    for pt in points:
        if pt.spec != plane.spec:
            raise ValueError("points and plane over different fields")
        if not plane.contains(pt):
            raise PointOffPlane(f"{pt!r} does not satisfy the plane equation")
        coords = [c for i, c in enumerate(pt.coords) if i != j]
        projected.append(ProjPoint(plane.spec, coords))
    return PointConfiguration(plane.spec, projected, label=label)


def lift_to_plane(config: PointConfiguration, plane: Plane):
    """Inverse of the coordinate chart: solve the plane equation for the
    dropped coordinate.  Returns P^3 points on the plane."""
    j = next(i for i, t in enumerate(plane.duals) if not t.is_zero)
    tj_inv = plane.duals[j].inverse()
    lifted = []
    for pt in config:
        rest = list(pt.coords)
        acc = plane.spec.zero
        others = [i for i in range(4) if i != j]
        for i, c in zip(others, rest):
            acc = acc + plane.duals[i] * c
        missing = -acc * tj_inv
        coords = rest[:j] + [missing] + rest[j:]
        lifted.append(ProjPoint(plane.spec, coords))
    return lifted


def random_plane(spec: FieldSpec, rng: random.Random, avoid=(), retries: int = 100) -> Plane:
    """Uniformly random plane, resampled until no avoid predicate fires.

    ``avoid`` holds (tag, predicate) pairs; a predicate returning True
    rejects the sample.  Deterministic given the rng state.  Raises
    GenericityExhausted with per-tag fire counts after ``retries`` failures.
    """
    fired: dict = {}
    for _ in range(retries):
        while True:
            duals = [spec.random_element(rng) for _ in range(4)]
            if any(not d.is_zero for d in duals):
                break
        plane = Plane(spec, duals)
        bad = False
        for tag, predicate in avoid:
            if predicate(plane):
                fired[tag] = fired.get(tag, 0) + 1
                bad = True
                break
        if not bad:
            return plane
    raise GenericityExhausted(
        f"no acceptable plane after {retries} samples", fired=fired
    )
