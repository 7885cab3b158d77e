"""Plane curves through point configurations.

Covers the linear system of degree-s forms vanishing on a configuration,
its minimal degree and greatest common divisor, and exact factorization
machinery for ternary forms over finite fields: bivariate factorization by
squarefree specialization, linear Hensel lifting and subset recombination,
plus absolute irreducibility through conjugate-factor theory (an
irreducible form over GF(q) is absolutely irreducible exactly when it stays
irreducible over GF(q^r) for every prime r dividing its degree).

Ternary forms are dense, indexed by the shared graded-lex monomial order;
bivariate polynomials are dense in y with univariate x coefficients.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .errors import EmptySystem, RationalField, SubstitutionExhausted, ZeroPolynomial
from .fields import FieldElement, FieldSpec, embed, frobenius, make_extension, _prime_divisors
from .geometry import PointConfiguration, ProjPoint
from .hilbert import evaluation_rows, h0_ideal, point_count_split, ternary_monomials
from .linalg import ExactMatrix, kernel_basis
from .unipoly import UniPoly, factor_univariate, poly_gcd, poly_xgcd


class TernaryForm:
    """Homogeneous polynomial in three variables, dense by monomial order."""

    __slots__ = ("spec", "degree", "coeffs")

    def __init__(self, spec: FieldSpec, degree: int, coefficients):
        coeffs = tuple(spec.element(c) for c in coefficients)
        if len(coeffs) != len(ternary_monomials(degree)):
            raise ValueError("coefficient count does not match the degree")
        self.spec = spec
        self.degree = degree
        self.coeffs = coeffs

    @classmethod
    def from_dict(cls, spec, degree, table):
        monos = ternary_monomials(degree)
        lookup = {}
        for key, val in table.items():
            a, b, c = key
            if a + b + c != degree or min(a, b, c) < 0:
                raise ValueError(f"exponents {key} not of degree {degree}")
            lookup[(a, b, c)] = spec.element(val)
        return cls(spec, degree, [lookup.get(m, spec.zero) for m in monos])

    @property
    def monomials(self):
        return ternary_monomials(self.degree)

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for c in self.coeffs)

    def coefficient(self, a, b, c) -> FieldElement:
        monos = ternary_monomials(self.degree)
        return self.coeffs[monos.index((a, b, c))]

    def to_dict(self):
        return {
            m: c
            for m, c in zip(ternary_monomials(self.degree), self.coeffs)
            if not c.is_zero
        }

    def key(self):
        return (self.degree, tuple(c.key() for c in self.coeffs))

    def __eq__(self, other):
        if not isinstance(other, TernaryForm):
            return NotImplemented
        return (
            self.spec == other.spec
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.spec, self.degree, self.coeffs))

    def __repr__(self):
        terms = []
        for (a, b, c), v in self.to_dict().items():
            terms.append(f"{v.coeffs}*x^{a}y^{b}z^{c}")
        return "TernaryForm(" + (" + ".join(terms) or "0") + ")"

    def normalize(self) -> "TernaryForm":
        """Scale so the first nonzero coefficient in monomial order is one."""
        first = next((c for c in self.coeffs if not c.is_zero), None)
        if first is None or first == self.spec.one:
            return self
        inv = first.inverse()
        return TernaryForm(self.spec, self.degree, [c * inv for c in self.coeffs])

    def scale(self, s: FieldElement) -> "TernaryForm":
        return TernaryForm(self.spec, self.degree, [c * s for c in self.coeffs])

    def add(self, other: "TernaryForm") -> "TernaryForm":
        if other.degree != self.degree or other.spec != self.spec:
            raise ValueError("can only add forms of one degree over one field")
        return TernaryForm(
            self.spec, self.degree, [a + b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def multiply(self, other: "TernaryForm") -> "TernaryForm":
        if other.spec != self.spec:
            raise ValueError("forms over different fields")
        out: dict = {}
        for m1, c1 in self.to_dict().items():
            for m2, c2 in other.to_dict().items():
                key = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])
                prev = out.get(key)
                out[key] = c1 * c2 if prev is None else prev + c1 * c2
        return TernaryForm.from_dict(self.spec, self.degree + other.degree, out)

    def evaluate(self, point) -> FieldElement:
        if isinstance(point, ProjPoint):
            coords = point.coords
        else:
            coords = tuple(self.spec.element(v) for v in point)
        x, y, z = coords
        acc = self.spec.zero
        for (a, b, c), v in zip(ternary_monomials(self.degree), self.coeffs):
            if v.is_zero:
                continue
            acc = acc + v * x**a * y**b * z**c
        return acc

    def vanishes_on(self, config: PointConfiguration) -> bool:
        return all(self.evaluate(pt).is_zero for pt in config)

    def variable_divides(self, var: int) -> bool:
        """Does the ``var``-th variable divide this form?"""
        for (a, b, c), v in zip(ternary_monomials(self.degree), self.coeffs):
            if (a, b, c)[var] == 0 and not v.is_zero:
                return False
        return not self.is_zero

    def variable_power(self, var: int) -> int:
        """Largest k with variable^k dividing the form."""
        best = self.degree
        for (a, b, c), v in zip(ternary_monomials(self.degree), self.coeffs):
            if not v.is_zero:
                best = min(best, (a, b, c)[var])
        return best

    def embed(self, target: FieldSpec) -> "TernaryForm":
        return TernaryForm(target, self.degree, [embed(c, target) for c in self.coeffs])

    def dehomogenize(self, var: int = 2) -> "Bivariate":
        """Set the chosen variable to one; remaining variables keep order."""
        keep = [i for i in range(3) if i != var]
        table: dict = {}
        for (a, b, c), v in zip(ternary_monomials(self.degree), self.coeffs):
            if v.is_zero:
                continue
            expo = (a, b, c)
            table[(expo[keep[0]], expo[keep[1]])] = v
        return Bivariate.from_dict(self.spec, table)


def homogenize(poly: "Bivariate", var: int, degree: int, spec=None) -> TernaryForm:
    """Inverse of ``dehomogenize``: pad exponents with the missing variable."""
    spec = spec or poly.spec
    keep = [i for i in range(3) if i != var]
    table: dict = {}
    for (i, j), v in poly.to_dict().items():
        if i + j > degree:
            raise ValueError("bivariate degree exceeds the target form degree")
        expo = [0, 0, 0]
        expo[keep[0]] = i
        expo[keep[1]] = j
        expo[var] = degree - i - j
        table[tuple(expo)] = v
    return TernaryForm.from_dict(spec, degree, table)


# ---------------------------------------------------------------------------
# Dense bivariate polynomials: y-major with UniPoly coefficients in x.


class Bivariate:
    __slots__ = ("spec", "_coeffs")

    def __init__(self, spec: FieldSpec, coeffs_by_y_degree):
        coeffs = [
            c if isinstance(c, UniPoly) else UniPoly(spec, c)
            for c in coeffs_by_y_degree
        ]
        while coeffs and coeffs[-1].is_zero:
            coeffs.pop()
        self.spec = spec
        self._coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, spec):
        return cls(spec, ())

    @classmethod
    def from_dict(cls, spec, table):
        """Build from {(x_exponent, y_exponent): value}."""
        if not table:
            return cls.zero(spec)
        dy = max(j for _, j in table)
        rows: list = [dict() for _ in range(dy + 1)]
        for (i, j), v in table.items():
            rows[j][i] = v
        coeffs = []
        for row in rows:
            if row:
                dx = max(row)
                coeffs.append(UniPoly(spec, [row.get(i, 0) for i in range(dx + 1)]))
            else:
                coeffs.append(UniPoly.zero(spec))
        return cls(spec, coeffs)

    @classmethod
    def from_unipoly_x(cls, poly: UniPoly):
        return cls(poly.spec, [poly])

    @classmethod
    def from_unipoly_y(cls, poly: UniPoly):
        return cls(
            poly.spec, [UniPoly.constant(c) for c in poly.coefficients]
        )

    # -- views

    @property
    def degree_y(self) -> int:
        return len(self._coeffs) - 1

    @property
    def degree_x(self) -> int:
        return max((c.degree for c in self._coeffs), default=-1)

    @property
    def total_degree(self) -> int:
        best = -1
        for j, c in enumerate(self._coeffs):
            if not c.is_zero:
                best = max(best, c.degree + j)
        return best

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def y_coefficient(self, j: int) -> UniPoly:
        if 0 <= j < len(self._coeffs):
            return self._coeffs[j]
        return UniPoly.zero(self.spec)

    @property
    def leading_y(self) -> UniPoly:
        if self.is_zero:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self._coeffs[-1]

    def to_dict(self):
        out = {}
        for j, c in enumerate(self._coeffs):
            for i, v in enumerate(c.coefficients):
                if not v.is_zero:
                    out[(i, j)] = v
        return out

    def key(self):
        return (len(self._coeffs), tuple(c.key() for c in self._coeffs))

    def __eq__(self, other):
        if not isinstance(other, Bivariate):
            return NotImplemented
        return self.spec == other.spec and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self.spec, self._coeffs))

    def __repr__(self):
        terms = [f"({c!r})*y^{j}" for j, c in enumerate(self._coeffs)]
        return "Bivariate(" + (" + ".join(terms) or "0") + ")"

    # -- arithmetic

    def __add__(self, other):
        n = max(len(self._coeffs), len(other._coeffs))
        out = [
            self.y_coefficient(j) + other.y_coefficient(j) for j in range(n)
        ]
        return Bivariate(self.spec, out)

    def __sub__(self, other):
        n = max(len(self._coeffs), len(other._coeffs))
        out = [
            self.y_coefficient(j) - other.y_coefficient(j) for j in range(n)
        ]
        return Bivariate(self.spec, out)

    def __neg__(self):
        return Bivariate(self.spec, [-c for c in self._coeffs])

    def __mul__(self, other):
        if isinstance(other, UniPoly):
            return Bivariate(self.spec, [c * other for c in self._coeffs])
        if isinstance(other, FieldElement):
            return Bivariate(self.spec, [c.scale(other) for c in self._coeffs])
        if self.is_zero or other.is_zero:
            return Bivariate.zero(self.spec)
        out = [UniPoly.zero(self.spec)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for j, cj in enumerate(self._coeffs):
            if cj.is_zero:
                continue
            for k, dk in enumerate(other._coeffs):
                if dk.is_zero:
                    continue
                out[j + k] = out[j + k] + cj * dk
        return Bivariate(self.spec, out)

    def truncate_x(self, n: int) -> "Bivariate":
        """Drop x-degrees >= n in every coefficient."""
        out = []
        for c in self._coeffs:
            out.append(UniPoly(c.spec, list(c.coefficients[:n])))
        return Bivariate(self.spec, out)

    def x_slice(self, k: int) -> UniPoly:
        """Coefficient of x^k, as a polynomial in y."""
        return UniPoly(self.spec, [c.coefficient(k) for c in self._coeffs])

    # -- substitutions

    def evaluate_x(self, x0: FieldElement) -> UniPoly:
        return UniPoly(self.spec, [c.evaluate(x0) for c in self._coeffs])

    def evaluate(self, x0: FieldElement, y0: FieldElement) -> FieldElement:
        return self.evaluate_x(x0).evaluate(y0)

    def shift_x(self, c: FieldElement) -> "Bivariate":
        return Bivariate(self.spec, [u.shift(c) for u in self._coeffs])

    def swap_xy(self) -> "Bivariate":
        return Bivariate.from_dict(
            self.spec, {(j, i): v for (i, j), v in self.to_dict().items()}
        )

    def substitute_y_scale(self, factor: UniPoly) -> "Bivariate":
        """y -> factor(x) * y, coefficient-wise powers of the factor."""
        out = []
        power = UniPoly.one(self.spec)
        for c in self._coeffs:
            out.append(c * power)
            power = power * factor
        return Bivariate(self.spec, out)

    # -- calculus

    def partial_y(self) -> "Bivariate":
        ops = self.spec.ops
        out = []
        for j in range(1, len(self._coeffs)):
            scalar = FieldElement._make(self.spec, ops.from_int(j))
            out.append(self._coeffs[j].scale(scalar))
        return Bivariate(self.spec, out)

    def partial_x(self) -> "Bivariate":
        return Bivariate(self.spec, [c.derivative() for c in self._coeffs])

    def pth_root(self) -> "Bivariate":
        """Inverse of the p-th power map; exponents must be multiples of p."""
        p = self.spec.p
        table = {}
        for (i, j), v in self.to_dict().items():
            if i % p or j % p:
                raise ValueError("not a p-th power")
            root = FieldElement._make(self.spec, self.spec.ops.pth_root(v.raw))
            table[(i // p, j // p)] = root
        return Bivariate.from_dict(self.spec, table)

    # -- content and normalization

    def content_y(self) -> UniPoly:
        """Monic gcd of the y-coefficients, a polynomial in x."""
        acc = UniPoly.zero(self.spec)
        for c in self._coeffs:
            if not c.is_zero:
                acc = c.monic() if acc.is_zero else poly_gcd(acc, c)
                if acc.degree == 0:
                    break
        return acc

    def primitive_y(self) -> "Bivariate":
        cont = self.content_y()
        if cont.degree < 1:
            return self
        return Bivariate(self.spec, [c // cont for c in self._coeffs])

    def normalize(self) -> "Bivariate":
        """Scale so the (highest y, highest x) coefficient is one."""
        if self.is_zero:
            return self
        lead = self._coeffs[-1].leading
        if lead == self.spec.one:
            return self
        inv = lead.inverse()
        return Bivariate(self.spec, [c.scale(inv) for c in self._coeffs])

    def map_spec(self, target: FieldSpec) -> "Bivariate":
        return Bivariate(target, [c.map_spec(target) for c in self._coeffs])

    def frobenius_coeffs(self, rounds: int) -> "Bivariate":
        """Apply x -> x^(p^rounds) to every coefficient."""
        table = {
            key: frobenius(v, rounds) for key, v in self.to_dict().items()
        }
        return Bivariate.from_dict(self.spec, table)


def bivar_exact_divide(f: Bivariate, g: Bivariate):
    """Quotient f / g in K[x][y], or None when the division is inexact."""
    if g.is_zero:
        raise ZeroDivisionError("division by zero polynomial")
    if f.is_zero:
        return Bivariate.zero(f.spec)
    if g.degree_y == 0:
        d = g.y_coefficient(0)
        out = []
        for c in f._coeffs:
            q, r = divmod(c, d)
            if not r.is_zero:
                return None
            out.append(q)
        return Bivariate(f.spec, out)
    lead = g.leading_y
    rem = f
    qout: dict = {}
    while not rem.is_zero and rem.degree_y >= g.degree_y:
        q, r = divmod(rem.leading_y, lead)
        if not r.is_zero:
            return None
        shift = rem.degree_y - g.degree_y
        qout[shift] = q
        piece = Bivariate(
            f.spec,
            [UniPoly.zero(f.spec)] * shift + [q * c for c in g._coeffs],
        )
        rem = rem - piece
        if not rem.is_zero and rem.degree_y >= g.degree_y + shift:
            return None  # degree failed to drop; inexact
    if not rem.is_zero:
        return None
    dy = max(qout) if qout else 0
    return Bivariate(
        f.spec, [qout.get(j, UniPoly.zero(f.spec)) for j in range(dy + 1)]
    )


def _pseudo_remainder(f: Bivariate, g: Bivariate) -> Bivariate:
    """lc(g)^(deg f - deg g + 1) * f mod g, all in y."""
    lead = g.leading_y
    rem = f
    while not rem.is_zero and rem.degree_y >= g.degree_y:
        shift = rem.degree_y - g.degree_y
        top = rem.leading_y
        rem = Bivariate(f.spec, [c * lead for c in rem._coeffs]) - Bivariate(
            f.spec,
            [UniPoly.zero(f.spec)] * shift + [top * c for c in g._coeffs],
        )
    return rem


def bivar_gcd(f: Bivariate, g: Bivariate) -> Bivariate:
    """Primitive-part Euclidean gcd with univariate content tracking."""
    if f.is_zero:
        return g.normalize()
    if g.is_zero:
        return f.normalize()
    cf, cg = f.content_y(), g.content_y()
    cont = poly_gcd(cf, cg)
    fp, gp = f.primitive_y(), g.primitive_y()
    if fp.degree_y < gp.degree_y:
        fp, gp = gp, fp
    while gp.degree_y > 0:
        rem = _pseudo_remainder(fp, gp).primitive_y()
        fp, gp = gp, rem
    if gp.is_zero:
        pp = fp.primitive_y()
    else:
        pp = Bivariate(f.spec, [UniPoly.one(f.spec)])
    return (pp * cont).normalize()


def bivar_squarefree_decomposition(f: Bivariate):
    """[(squarefree part, multiplicity)] for a nonzero bivariate polynomial.

    Content is split off and decomposed univariately; the primitive part is
    peeled in y, with variable swaps handling layers whose y-derivative
    vanishes and p-th roots handling genuine p-th powers.
    """
    if f.is_zero:
        raise ZeroPolynomial("cannot decompose the zero polynomial")
    spec = f.spec
    parts: dict = {}

    def record(g: Bivariate, mult: int):
        if g.total_degree > 0:
            g = g.normalize()
            parts[g] = parts.get(g, 0) + mult

    def walk(g: Bivariate, mult: int, swapped: bool):
        if g.total_degree <= 0:
            return
        cont = g.content_y()
        if cont.degree > 0:
            from .unipoly import squarefree_decomposition as uni_sqf

            for upart, umult in uni_sqf(cont):
                piece = Bivariate.from_unipoly_x(upart)
                record(piece.swap_xy() if swapped else piece, umult * mult)
            g = g.primitive_y()
            if g.total_degree <= 0:
                return
        gy = g.partial_y()
        if gy.is_zero:
            gx = g.partial_x()
            if gx.is_zero:
                walk(g.pth_root(), mult * spec.p, swapped)
            else:
                walk(g.swap_xy(), mult, not swapped)
            return
        d = bivar_gcd(g, gy)
        gx = g.partial_x()
        if not gx.is_zero:
            d = bivar_gcd(d, gx)
        s = bivar_exact_divide(g, d)
        if s is None:
            raise AssertionError("gcd does not divide its argument; bug")
        j = 1
        y_, rest = s, d
        while y_.total_degree > 0:
            z = bivar_gcd(y_, rest)
            out = bivar_exact_divide(y_, z)
            if out is None:
                raise AssertionError("squarefree peel inexact; bug")
            record(out.swap_xy() if swapped else out, j * mult)
            nxt = bivar_exact_divide(rest, z)
            if nxt is None:
                raise AssertionError("squarefree peel inexact; bug")
            rest = nxt
            y_ = z
            j += 1
        walk(rest, mult, swapped)

    walk(f, 1, False)
    return sorted(parts.items(), key=lambda it: it[0].key())


def _find_substitution(gm: Bivariate):
    """Point x0 with gm(x0, y) squarefree; gm is monic in y."""
    spec = gm.spec
    dy, dx = gm.degree_y, gm.degree_x
    cap = 2 * dy * max(dx, 1) + dy + 8
    count = 0
    for x0 in spec.elements():
        u = gm.evaluate_x(x0)
        du = u.derivative()
        if not du.is_zero and poly_gcd(u, du).degree == 0:
            return x0, u
        count += 1
        if count >= cap:
            break
    raise SubstitutionExhausted(
        f"no squarefree specialization over {spec!r}; extend the field"
    )


def _hensel_lift(gs: Bivariate, u_factors, precision: int):
    """Lift the coprime univariate factors of gs(0, y) to x-adic precision.

    ``gs`` is monic in y.  Maintains monic lifted factors whose product
    agrees with gs modulo x^k at every step.
    """
    spec = gs.spec
    lifted = [Bivariate.from_unipoly_y(u) for u in u_factors]
    # Bezout data: s_i * prod_{j != i} u_j = 1 mod u_i
    bezout = []
    for i, ui in enumerate(u_factors):
        rest = UniPoly.one(spec)
        for j, uj in enumerate(u_factors):
            if j != i:
                rest = rest * uj % ui
        _, s, t = poly_xgcd(rest, ui)
        bezout.append(s % ui)
    for k in range(1, precision):
        prod = lifted[0]
        for f in lifted[1:]:
            prod = (prod * f).truncate_x(k + 1)
        err = (gs - prod).x_slice(k)
        if err.is_zero:
            continue
        for i, ui in enumerate(u_factors):
            delta = bezout[i] * err % ui
            if delta.is_zero:
                continue
            bump = Bivariate(
                spec,
                [UniPoly(spec, [spec.zero] * k + [c]) for c in delta.coefficients],
            )
            lifted[i] = lifted[i] + bump
    return lifted


def _factor_monic_squarefree(gm: Bivariate, seed: int):
    """Irreducible monic factors of a squarefree polynomial monic in y."""
    spec = gm.spec
    if gm.degree_y == 1:
        return [gm]
    x0, u = _find_substitution(gm)
    gs = gm.shift_x(x0)
    u_factors = [g for g, _ in factor_univariate(u, seed)]
    if len(u_factors) == 1:
        return [gm]
    precision = gs.degree_x + 1
    lifted = _hensel_lift(gs, u_factors, precision)

    found = []
    remaining = gs
    active = list(range(len(u_factors)))
    size = 1
    while 2 * size <= len(active):
        progressed = False
        for combo in combinations(active, size):
            cand = lifted[combo[0]]
            for i in combo[1:]:
                cand = (cand * lifted[i]).truncate_x(precision)
            quotient = bivar_exact_divide(remaining, cand)
            if quotient is not None:
                found.append(cand)
                remaining = quotient
                active = [i for i in active if i not in combo]
                progressed = True
                break
        if not progressed:
            size += 1
    if remaining.degree_y > 0:
        found.append(remaining)
    return [f.shift_x(-x0) for f in found]


def _factor_squarefree_primitive(g: Bivariate, seed: int, allow_swap: bool = True):
    """Irreducible factors of a squarefree, y-primitive polynomial."""
    spec = g.spec
    if g.degree_y == 0:
        # univariate in x
        poly = g.y_coefficient(0)
        return [
            Bivariate.from_unipoly_x(h) for h, _ in factor_univariate(poly, seed)
        ]
    if g.degree_x == 0:
        poly = UniPoly(spec, [c.coefficient(0) for c in g._coeffs])
        return [
            Bivariate.from_unipoly_y(h) for h, _ in factor_univariate(poly, seed)
        ]
    lead = g.leading_y
    if lead.degree == 0:
        gm = g * lead.leading.inverse()
        try:
            return [f.normalize() for f in _factor_monic_squarefree(gm, seed)]
        except SubstitutionExhausted:
            if not allow_swap:
                raise
            return _swap_and_factor(g, seed)
    # monicize: gm = lc^(dy-1) * g(x, y / lc), coefficient j scaled by lc^(dy-1-j)
    dy = g.degree_y
    powers = [UniPoly.one(spec)]
    for _ in range(dy):
        powers.append(powers[-1] * lead)
    monic_coeffs = [g._coeffs[j] * powers[dy - 1 - j] for j in range(dy)] + [
        UniPoly.one(spec)
    ]
    gm = Bivariate(spec, monic_coeffs)
    try:
        monic_factors = _factor_monic_squarefree(gm, seed)
    except SubstitutionExhausted:
        if not allow_swap:
            raise
        return _swap_and_factor(g, seed)
    out = []
    for fm in monic_factors:
        rescaled = fm.substitute_y_scale(lead).primitive_y().normalize()
        out.append(rescaled)
    return out


def _swap_and_factor(g: Bivariate, seed: int):
    sw = g.swap_xy()
    cont = sw.content_y()
    factors = []
    if cont.degree > 0:
        for h, mult in factor_univariate(cont, seed):
            if mult != 1:
                raise AssertionError("squarefree input grew multiplicity; bug")
            factors.append(Bivariate.from_unipoly_x(h))
        sw = sw.primitive_y()
    if sw.total_degree > 0:
        factors.extend(_factor_squarefree_primitive(sw, seed, allow_swap=False))
    return [f.swap_xy().normalize() for f in factors]


def factor_bivariate(f: Bivariate, seed: int = 0):
    """Full factorization over a finite field.

    Returns (unit, [(irreducible, multiplicity)]) with canonical scalar
    normalization on the factors, sorted; the product times the unit equals
    the input exactly, which is asserted before returning.
    """
    if not f.spec.is_finite:
        raise RationalField("bivariate factorization needs a finite field")
    if f.is_zero:
        raise ZeroPolynomial("cannot factor the zero polynomial")
    spec = f.spec
    collected: dict = {}
    for part, mult in bivar_squarefree_decomposition(f):
        cont = part.content_y()
        body = part.primitive_y() if cont.degree > 0 else part
        if cont.degree > 0:
            for h, hmult in factor_univariate(cont, seed):
                key = Bivariate.from_unipoly_x(h).normalize()
                collected[key] = collected.get(key, 0) + hmult * mult
        if body.total_degree > 0:
            for irr in _factor_squarefree_primitive(body, seed):
                key = irr.normalize()
                collected[key] = collected.get(key, 0) + mult

    factors = sorted(collected.items(), key=lambda it: it[0].key())
    product = Bivariate(spec, [UniPoly.one(spec)])
    for g, mult in factors:
        for _ in range(mult):
            product = product * g
    # the quotient of two equal-support polynomials is the unit scalar
    unit = None
    for (i, j), v in f.to_dict().items():
        pv = product.to_dict().get((i, j))
        if pv is None or pv.is_zero:
            raise AssertionError("factor product support mismatch; bug")
        unit = v * pv.inverse()
        break
    if unit is None:
        raise AssertionError("unreachable: nonzero input")
    if not (product * unit - f).is_zero:
        raise AssertionError("factorization does not multiply back; bug")
    return unit, factors


def _is_irreducible_bivariate(f: Bivariate, field: FieldSpec, seed: int = 0) -> bool:
    """Irreducibility of f over ``field`` (>= f's field), with fallback.

    When every substitution over ``field`` degenerates, factor over a small
    extension and count Frobenius orbits; one orbit of multiplicity-one
    factors means irreducible over ``field``.
    """
    g = f if f.spec == field else f.map_spec(field)
    if g.total_degree <= 0:
        return False
    try:
        _, factors = factor_bivariate(g, seed)
        return len(factors) == 1 and factors[0][1] == 1
    except SubstitutionExhausted:
        pass
    for e in (2, 3, 4, 5):
        ext = make_extension(field.p, field.m * e)
        try:
            _, factors = factor_bivariate(g.map_spec(ext), seed)
        except SubstitutionExhausted:
            continue
        if any(mult != 1 for _, mult in factors):
            return False
        polys = {h.normalize() for h, _ in factors}
        # orbit of one factor under the Frobenius fixing `field`
        start = next(iter(sorted(polys, key=lambda b: b.key())))
        orbit = set()
        cur = start
        while cur not in orbit:
            orbit.add(cur)
            cur = cur.frobenius_coeffs(field.m).normalize()
        return orbit == polys
    raise SubstitutionExhausted(
        "no squarefree specialization over the field or small extensions"
    )


def is_absolutely_irreducible(form: TernaryForm, max_conj: int | None = None):
    """Absolute irreducibility of a ternary form over a finite field.

    Returns True, False, or None for inconclusive (a required conjugate
    extension exceeds ``max_conj``).  Linear forms are always absolutely
    irreducible.  For an irreducible form over GF(q), the absolute factors
    are Frobenius conjugates whose count divides the degree, so testing
    irreducibility over GF(q^r) for every prime r dividing the degree
    decides the question.
    """
    spec = form.spec
    if not spec.is_finite:
        raise RationalField("absolute irreducibility needs a finite field")
    if form.is_zero:
        raise ZeroPolynomial("the zero form has no factorization")
    s = form.degree
    if s < 1:
        raise ValueError("the form must have positive degree")
    if s == 1:
        return True
    for var in range(3):
        if form.variable_divides(var):
            return False
    f = form.dehomogenize(2)
    if not _is_irreducible_bivariate(f, spec):
        return False
    exceeded = False
    for r in _prime_divisors(s):
        if max_conj is not None and r > max_conj:
            exceeded = True
            continue
        ext = make_extension(spec.p, spec.m * r)
        if not _is_irreducible_bivariate(f, ext):
            return False
    return None if exceeded else True


# ---------------------------------------------------------------------------
# Linear systems through a configuration.


@dataclass(frozen=True)
class LinearSystem:
    """Basis of the degree-s forms vanishing on a configuration."""

    config: PointConfiguration
    degree: int
    basis: tuple

    @property
    def dimension(self) -> int:
        return len(self.basis)


def linear_system(config: PointConfiguration, degree: int) -> LinearSystem:
    """Canonical kernel basis of the degree-s evaluation matrix."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    spec = config.spec
    rows = evaluation_rows(config, degree)
    matrix = ExactMatrix(
        spec, [[FieldElement._make(spec, v) for v in row] for row in rows]
    )
    forms = []
    for vec in kernel_basis(matrix):
        form = TernaryForm(spec, degree, vec).normalize()
        forms.append(form)
    system = LinearSystem(config=config, degree=degree, basis=tuple(forms))
    for form in system.basis:
        if not form.vanishes_on(config):
            raise AssertionError("kernel form does not vanish on the points; bug")
    return system


def minimal_degree(config: PointConfiguration) -> int:
    """Least degree of a plane curve containing the configuration."""
    if len(config) == 0:
        raise ValueError("empty configuration lies on every curve")
    d, _ = point_count_split(len(config))
    for s in range(0, d + 2):
        if h0_ideal(config, s) > 0:
            return s
    raise AssertionError("no curve of degree d + 1; impossible for any point set")


def random_member(
    system: LinearSystem, rng: random.Random, extension: FieldSpec | None = None
) -> TernaryForm:
    """Random nonzero member of the system, canonically normalized.

    Coefficients are sampled uniformly over the system's field, or over the
    given extension; the basis is embedded as needed.
    """
    if not system.basis:
        raise EmptySystem("the system has no nonzero members")
    spec = extension or system.config.spec
    basis = (
        system.basis
        if spec == system.config.spec
        else tuple(f.embed(spec) for f in system.basis)
    )
    while True:
        weights = [spec.random_element(rng) for _ in basis]
        if all(w.is_zero for w in weights):
            continue
        acc = basis[0].scale(weights[0])
        for w, f in zip(weights[1:], basis[1:]):
            acc = acc.add(f.scale(w))
        if not acc.is_zero:
            return acc.normalize()


def gcd_of_system(system: LinearSystem) -> TernaryForm:
    """Greatest common divisor of all basis forms, canonically normalized.

    Degree zero means the system has no common factor.
    """
    if not system.basis:
        raise EmptySystem("gcd of an empty system")
    spec = system.config.spec
    acc: TernaryForm | None = None
    for form in system.basis:
        acc = form if acc is None else _ternary_gcd(acc, form)
        if acc.degree == 0:
            break
    return acc.normalize()


def _ternary_gcd(f: TernaryForm, g: TernaryForm) -> TernaryForm:
    spec = f.spec
    za, zb = f.variable_power(2), g.variable_power(2)
    shared_z = min(za, zb)
    fb = f.dehomogenize(2)
    gb = g.dehomogenize(2)
    h = bivar_gcd(fb, gb)
    hdeg = h.total_degree
    out = homogenize(h, 2, hdeg, spec)
    for _ in range(shared_z):
        out = out.multiply(TernaryForm.from_dict(spec, 1, {(0, 0, 1): spec.one}))
    return out.normalize()


def ternary_divides(g: TernaryForm, f: TernaryForm) -> bool:
    """Exact divisibility of ternary forms."""
    if g.is_zero:
        return f.is_zero
    if f.is_zero:
        return True
    if g.degree > f.degree:
        return False
    if g.variable_power(2) > f.variable_power(2):
        return False
    quotient = bivar_exact_divide(f.dehomogenize(2), g.dehomogenize(2))
    return quotient is not None


def line_divides(form: TernaryForm, line) -> bool:
    """Does the linear form with the given three coefficients divide?

    Works by eliminating the line's first supported variable and testing
    that the restricted binary form vanishes identically; exact over any
    field, however small.
    """
    spec = form.spec
    a = [spec.element(c) for c in line]
    if all(c.is_zero for c in a):
        raise ValueError("the zero covector is not a line")
    j = next(i for i in range(3) if not a[i].is_zero)
    others = [i for i in range(3) if i != j]
    inv = a[j].inverse()
    alpha = -a[others[0]] * inv
    beta = -a[others[1]] * inv

    # binomial expansion of (alpha*u + beta*w)^e, cached per exponent
    expansions = [[spec.one]]
    for e in range(1, form.degree + 1):
        prev = expansions[-1]
        row = [spec.zero] * (e + 1)
        for i, c in enumerate(prev):
            row[i] = row[i] + c * alpha
            row[i + 1] = row[i + 1] + c * beta
        expansions.append(row)

    acc: dict = {}
    for (e0, e1, e2), v in zip(ternary_monomials(form.degree), form.coeffs):
        if v.is_zero:
            continue
        expo = (e0, e1, e2)
        ej = expo[j]
        eu, ew = expo[others[0]], expo[others[1]]
        for i, c in enumerate(expansions[ej]):
            if c.is_zero:
                continue
            key = (eu + ej - i, ew + i)
            prev = acc.get(key)
            acc[key] = v * c if prev is None else prev + v * c
    return all(val.is_zero for val in acc.values())
