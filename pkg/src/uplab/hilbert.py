"""Hilbert functions of plane point configurations.

The Hilbert function H(X, i) counts the independent conditions that X
imposes on degree-i plane curves, computed as the rank of the evaluation
matrix (points as rows, degree-i monomials as columns, graded lexicographic
with x > y > z).  The first-difference sequence carries three landmarks:
a1 is the degree where it leaves the diagonal i+1, a2 the degree where it
first drops below a1, and t the last degree where it is positive.  When the
difference never drops below a1 before dying out, a2 is set to t + 1, which
makes the decreasing-type predicate vacuously true.

``classify_minimal_system`` turns a point count and a minimal curve degree
into an irreducibility verdict for the minimal linear system.  The verdict
is only meaningful when the configuration has the uniform position
property, so it carries a ``requires_upp`` flag.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .errors import EmptyConfiguration, InconsistentInput
from .geometry import PointConfiguration
from .linalg import rank_of_raw_rows

CASE_ALL_IRREDUCIBLE = "AllIrreducible"
CASE_GENERIC_IRREDUCIBLE = "GenericIrreducible"
CASE_NOT_APPLICABLE = "NotApplicable"


@lru_cache(maxsize=None)
def ternary_monomials(degree: int):
    """Exponent triples (a, b, c) of one degree, graded-lex, x > y > z."""
    out = []
    for a in range(degree, -1, -1):
        for b in range(degree - a, -1, -1):
            out.append((a, b, degree - a - b))
    return tuple(out)


@lru_cache(maxsize=4096)
def evaluation_rows(config: PointConfiguration, degree: int):
    """Raw evaluation rows of a configuration at one degree, cached.

    Row scaling does not change ranks or kernels of interest, so the
    normalized point representatives are evaluated directly.
    """
    ops = config.spec.ops
    monos = ternary_monomials(degree)
    rows = []
    for pt in config:
        x, y, z = (c.raw for c in pt.coords)
        # powers up to the degree, reused across monomials
        px = [ops.one]
        py = [ops.one]
        pz = [ops.one]
        for _ in range(degree):
            px.append(ops.mul(px[-1], x))
            py.append(ops.mul(py[-1], y))
            pz.append(ops.mul(pz[-1], z))
        row = tuple(
            ops.mul(ops.mul(px[a], py[b]), pz[c]) for a, b, c in monos
        )
        rows.append(row)
    return tuple(rows)


def hilbert_value(config: PointConfiguration, degree: int) -> int:
    """H(X, i): rank of the degree-i evaluation matrix."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    return subset_hilbert_value(config, range(len(config)), degree)


def subset_hilbert_value(config: PointConfiguration, indices, degree: int) -> int:
    """Hilbert value of a subset of the configuration, sharing row caches."""
    rows = evaluation_rows(config, degree)
    return rank_of_raw_rows(config.spec, [rows[i] for i in indices])


def h0_ideal(config: PointConfiguration, degree: int) -> int:
    """Dimension of the degree-i forms vanishing on all of X."""
    return comb(degree + 2, 2) - hilbert_value(config, degree)


def h1_ideal(config: PointConfiguration, degree: int) -> int:
    """Failure of X to impose independent conditions in degree i."""
    return len(config) - hilbert_value(config, degree)


@dataclass(frozen=True)
class HilbertProfile:
    """Hilbert values to stabilization plus difference landmarks."""

    values: tuple
    deltas: tuple
    a1: int
    a2: int
    t: int
    warnings: tuple = ()

    @property
    def point_count(self) -> int:
        return self.values[-1]

    def value_at(self, degree: int) -> int:
        if degree < 0:
            return 0
        if degree < len(self.values):
            return self.values[degree]
        return self.values[-1]

    def delta_at(self, degree: int) -> int:
        if 0 <= degree < len(self.deltas):
            return self.deltas[degree]
        return 0


def profile_from_values(values) -> HilbertProfile:
    """Landmarks and shape audit for a stabilized Hilbert value sequence."""
    values = tuple(values)
    deltas = [values[0]] + [values[k] - values[k - 1] for k in range(1, len(values))]

    a1 = next((k for k, d in enumerate(deltas) if d < k + 1), len(deltas))
    a2 = next((k for k in range(a1, len(deltas)) if deltas[k] < a1), len(deltas))
    t = len(deltas) - 1

    warnings = []
    for k in range(a1, min(a2, len(deltas))):
        if deltas[k] != a1:
            warnings.append(f"delta[{k}] = {deltas[k]} off the a1 plateau {a1}")
    for k in range(max(a2, 1), len(deltas)):
        if deltas[k] > deltas[k - 1]:
            warnings.append(f"delta increases at degree {k}")
    for k, d in enumerate(deltas):
        if d < 0 or d > k + 1:
            warnings.append(f"delta[{k}] = {d} outside [0, {k + 1}]")

    return HilbertProfile(
        values=values,
        deltas=tuple(deltas),
        a1=a1,
        a2=a2,
        t=t,
        warnings=tuple(warnings),
    )


def profile(config: PointConfiguration) -> HilbertProfile:
    """Hilbert values until stabilization, with landmarks and shape audit.

    The expected difference shape (diagonal, plateau at a1, then
    non-increasing tail) is validated structurally; violations are reported
    as warnings rather than errors because arbitrary input configurations
    carry no shape guarantee.
    """
    n = len(config)
    if n == 0:
        raise EmptyConfiguration("profile of an empty configuration")
    values = []
    i = 0
    while True:
        v = hilbert_value(config, i)
        values.append(v)
        if v == n:
            break
        if i >= n - 1:
            # A set of n points always stabilizes by degree n - 1.
            raise AssertionError("Hilbert value failed to stabilize; bug")
        i += 1
    return profile_from_values(values)


def truncation_predict(prof: HilbertProfile, n: int, degree: int) -> int:
    """Predicted Hilbert value of any n-point subset under uniform position."""
    if not 0 <= n <= prof.point_count:
        raise ValueError("subset size out of range")
    return min(prof.value_at(degree), n)


def is_decreasing_type(prof: HilbertProfile) -> bool:
    """Strict decrease of the difference sequence from a2 through t.

    Vacuously true when that window has fewer than two entries.
    """
    for k in range(prof.a2, prof.t):
        if prof.delta_at(k) <= prof.delta_at(k + 1):
            return False
    return True


@dataclass(frozen=True)
class MinimalSystemVerdict:
    """Irreducibility verdict for the minimal system through n points.

    Valid only under the uniform position property; ``requires_upp`` is
    always True to make that precondition explicit in reports.
    """

    n: int
    d: int
    h: int
    g: int
    case: str
    requires_upp: bool = True


def point_count_split(n: int):
    """The unique (d, h) with n = C(d+2, 2) + h and 0 <= h <= d + 1."""
    if n < 1:
        raise InconsistentInput("need at least one point")
    d = 0
    while comb(d + 2, 2) + (d + 1) < n:
        d += 1
    h = n - comb(d + 2, 2)
    if not 0 <= h <= d + 1:
        raise AssertionError("point count split out of range; bug")
    return d, h


def classify_minimal_system(n: int, g: int) -> MinimalSystemVerdict:
    """Classify the minimal-degree system through n uniform-position points.

    ``g`` is the least degree of a curve through the points; any point set
    of this size admits one of degree d + 1, so larger g is rejected.
    Every member is irreducible when g <= d, or g = d + 1 with h >= 2;
    only the generic member is guaranteed when g = d + 1 and h is 0 or 1.
    """
    if g < 1:
        raise InconsistentInput("minimal degree must be at least 1")
    d, h = point_count_split(n)
    if g > d + 1:
        raise InconsistentInput(
            f"g = {g} impossible: {n} points always lie on a curve of degree {d + 1}"
        )
    if g <= d or h >= 2:
        case = CASE_ALL_IRREDUCIBLE
    else:
        case = CASE_GENERIC_IRREDUCIBLE
    return MinimalSystemVerdict(n=n, d=d, h=h, g=g, case=case)
