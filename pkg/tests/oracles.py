"""Independent oracles for the test suite.

Absolute irreducibility is cross-checked against exhaustive divisor
enumeration: any absolute linear factor of a form of degree at most four
lives over a known small extension (conjugate orbits of a factor divide the
degree), and the only line-free reducible quartics are products of two
rank-3 conics, each rational over the quadratic extension.  Candidate
divisors are pruned through restriction to the line z = 0, which any
divisor must respect; the survivors are checked by exact division.
"""

from __future__ import annotations

from functools import lru_cache

from uplab.curves import TernaryForm, line_divides, ternary_divides
from uplab.fields import make_extension
from uplab.unipoly import UniPoly


def projective_pairs(spec):
    """Representatives of P^1 over the field: (1, b) for all b, then (0, 1)."""
    out = [(spec.one, b) for b in spec.elements()]
    out.append((spec.zero, spec.one))
    return out


def _binary_restriction(form):
    """Coefficients of F(x, y, 0) as a polynomial in y (degree-form implied)."""
    s = form.degree
    coeffs = [form.spec.zero] * (s + 1)
    for (a, b, c), v in form.to_dict().items():
        if c == 0:
            coeffs[b] = coeffs[b] + v
    return coeffs


def _binary_divides(div_coeffs, form_coeffs, spec):
    """Divisibility of homogeneous binary forms given low-to-high y-coeffs."""
    d = UniPoly(spec, div_coeffs)
    f = UniPoly(spec, form_coeffs)
    if f.is_zero:
        return True
    if d.is_zero:
        return False
    # x-multiplicities are the degree defects of the dehomogenizations
    xd = (len(div_coeffs) - 1) - d.degree
    xf = (len(form_coeffs) - 1) - f.degree
    if xd > xf:
        return False
    return (f % d).is_zero


def _line_factor_exists(form, ext_degree):
    """Any linear divisor over the extension of the given degree?

    Candidates are pruned by the necessary condition that the form vanish
    at the line's intersection with z = 0.
    """
    spec = form.spec
    ext = make_extension(spec.p, spec.m * ext_degree)
    f = form.embed(ext)
    for a, b in projective_pairs(ext):
        if not f.evaluate((b, -a, ext.zero)).is_zero:
            continue
        for c in ext.elements():
            if line_divides(f, (a, b, c)):
                return True
    return False


@lru_cache(maxsize=None)
def _rank3_conics_by_restriction(spec):
    """Rank-3 conics over the field, grouped by normalized z=0 restriction.

    Conic (a, b, c, d, e, f) stands for a x^2 + b xy + c y^2 + d xz +
    e yz + f z^2; rank is that of the symmetric matrix, which needs odd
    characteristic.  Line pairs (rank <= 2) are excluded: they are covered
    by line enumeration.
    """
    assert spec.p != 2
    half = spec.element(2).inverse()
    elements = list(spec.elements())
    groups: dict = {}

    def normalized(vec):
        first = next((v for v in vec if not v.is_zero), None)
        if first is None:
            return None
        inv = first.inverse()
        return tuple(v * inv for v in vec)

    def smooth(a, b, c, d, e, f):
        bh, dh, eh = b * half, d * half, e * half
        det = (
            a * (c * f - eh * eh)
            - bh * (bh * f - eh * dh)
            + dh * (bh * eh - c * dh)
        )
        return not det.is_zero

    # enumerate representatives with first nonzero coefficient equal to one
    for lead in range(6):
        prefix = [spec.zero] * lead + [spec.one]
        free = 5 - lead

        def rec(tail):
            if len(tail) < free:
                for v in elements:
                    rec(tail + [v])
                return
            a, b, c, d, e, f = prefix + tail
            if not smooth(a, b, c, d, e, f):
                return
            key = normalized((a, b, c))
            groups.setdefault(key, []).append((a, b, c, d, e, f))

        rec([])
    return groups


def _conic_pair_factor_exists(form):
    """Does a rank-3 conic over the quadratic extension divide the quartic?"""
    spec = form.spec
    ext = make_extension(spec.p, spec.m * 2)
    f = form.embed(ext)
    groups = _rank3_conics_by_restriction(ext)
    restriction = _binary_restriction(f)

    def normalized(vec):
        first = next((v for v in vec if not v.is_zero), None)
        if first is None:
            return None
        inv = first.inverse()
        return tuple(v * inv for v in vec)

    seen = set()
    for u0 in ext.elements():
        for u1 in ext.elements():
            for u2 in ext.elements():
                if u0.is_zero and u1.is_zero and u2.is_zero:
                    continue
                key = normalized((u0, u1, u2))
                if key in seen:
                    continue
                seen.add(key)
                if not _binary_divides([key[0], key[1], key[2]], restriction, ext):
                    continue
                for conic_coeffs in groups.get(key, ()):
                    a, b, c, d, e, g = conic_coeffs
                    conic = TernaryForm.from_dict(
                        ext,
                        2,
                        {
                            (2, 0, 0): a,
                            (1, 1, 0): b,
                            (0, 2, 0): c,
                            (1, 0, 1): d,
                            (0, 1, 1): e,
                            (0, 0, 2): g,
                        },
                    )
                    if ternary_divides(conic, f):
                        return True
    return False


def absolutely_reducible_by_enumeration(form: TernaryForm) -> bool:
    """Exhaustive-divisor oracle for absolute reducibility, degree <= 4.

    Line divisors of a degree-s form have conjugate orbits of size r <= s;
    cases with r = 3 inside a quartic force a residual rational line, so
    scanning lines over the degree-s extension alone is complete.  A
    line-free reducible quartic is a product of two rank-3 conics, each
    rational over the quadratic extension.
    """
    s = form.degree
    if s < 1:
        raise ValueError("degree must be positive")
    if s == 1:
        return False
    if any(form.variable_divides(v) for v in range(3)):
        return True
    if s > 4:
        raise ValueError("oracle implemented for degree <= 4")
    if _line_factor_exists(form, s if s > 2 else 2):
        return True
    if s == 4:
        return _conic_pair_factor_exists(form)
    return False
