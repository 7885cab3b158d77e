"""Dense univariate polynomials over an exact field.

Supplies ring arithmetic, gcd machinery, and complete factorization over
finite fields: squarefree decomposition that handles inseparable layers,
distinct-degree splitting, and randomized equal-degree splitting with an
explicit seed.  Factor lists are sorted canonically (degree, then
coefficient key), so the output is identical across runs and independent of
the splitting seed.
"""

from __future__ import annotations

import random

from .errors import RationalField, ZeroPolynomial
from .fields import FieldElement, FieldSpec, make_extension, embed, _prime_divisors


class UniPoly:
    """Coefficients lowest degree first; leading coefficient nonzero."""

    __slots__ = ("spec", "_raw")

    def __init__(self, spec: FieldSpec, coefficients=()):
        raws = []
        for c in coefficients:
            raws.append(spec.element(c).raw)
        is_zero = spec.ops.is_zero
        while raws and is_zero(raws[-1]):
            raws.pop()
        self.spec = spec
        self._raw = tuple(raws)

    @classmethod
    def _make(cls, spec, raw_tuple):
        p = object.__new__(cls)
        p.spec = spec
        p._raw = raw_tuple
        return p

    @classmethod
    def zero(cls, spec):
        return cls._make(spec, ())

    @classmethod
    def one(cls, spec):
        return cls._make(spec, (spec.ops.one,))

    @classmethod
    def x(cls, spec):
        ops = spec.ops
        return cls._make(spec, (ops.zero, ops.one))

    @classmethod
    def constant(cls, value: FieldElement):
        if value.is_zero:
            return cls.zero(value.spec)
        return cls._make(value.spec, (value.raw,))

    @classmethod
    def from_ints(cls, spec, ints):
        return cls(spec, [spec.element(i) for i in ints])

    # -- views

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self._raw) - 1

    @property
    def is_zero(self) -> bool:
        return not self._raw

    def coefficient(self, i: int) -> FieldElement:
        if 0 <= i < len(self._raw):
            return FieldElement._make(self.spec, self._raw[i])
        return self.spec.zero

    @property
    def coefficients(self):
        return tuple(FieldElement._make(self.spec, r) for r in self._raw)

    @property
    def leading(self) -> FieldElement:
        if not self._raw:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return FieldElement._make(self.spec, self._raw[-1])

    def key(self):
        ops = self.spec.ops
        return (len(self._raw), tuple(ops.key(c) for c in self._raw))

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.spec == other.spec and self._raw == other._raw

    def __hash__(self):
        return hash((self.spec, self._raw))

    def __repr__(self):
        if self.is_zero:
            return "UniPoly(0)"
        terms = []
        for i, c in enumerate(self._raw):
            if not self.spec.ops.is_zero(c):
                terms.append(f"{self.spec.ops.coeffs(c)}*t^{i}")
        return "UniPoly(" + " + ".join(terms) + ")"

    # -- ring operations on raw tuples

    def _trimmed(self, raws):
        is_zero = self.spec.ops.is_zero
        while raws and is_zero(raws[-1]):
            raws.pop()
        return UniPoly._make(self.spec, tuple(raws))

    def _check(self, other):
        if not isinstance(other, UniPoly):
            raise TypeError("expected a UniPoly")
        if other.spec != self.spec:
            raise ValueError("polynomials over different fields")

    def __add__(self, other):
        self._check(other)
        ops = self.spec.ops
        a, b = self._raw, other._raw
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = ops.add(out[i], c)
        return self._trimmed(out)

    def __sub__(self, other):
        self._check(other)
        ops = self.spec.ops
        n = max(len(self._raw), len(other._raw))
        zero = ops.zero
        out = []
        for i in range(n):
            x = self._raw[i] if i < len(self._raw) else zero
            y = other._raw[i] if i < len(other._raw) else zero
            out.append(ops.sub(x, y))
        return self._trimmed(out)

    def __neg__(self):
        ops = self.spec.ops
        return UniPoly._make(self.spec, tuple(ops.neg(c) for c in self._raw))

    def __mul__(self, other):
        if isinstance(other, FieldElement):
            return self.scale(other)
        self._check(other)
        a, b = self._raw, other._raw
        if not a or not b:
            return UniPoly.zero(self.spec)
        ops = self.spec.ops
        add, mul, zero = ops.add, ops.mul, ops.zero
        out = [zero] * (len(a) + len(b) - 1)
        is_zero = ops.is_zero
        for i, ai in enumerate(a):
            if is_zero(ai):
                continue
            for j, bj in enumerate(b):
                out[i + j] = add(out[i + j], mul(ai, bj))
        return self._trimmed(out)

    def scale(self, c: FieldElement):
        if c.spec != self.spec:
            raise ValueError("scalar over a different field")
        if c.is_zero:
            return UniPoly.zero(self.spec)
        mul = self.spec.ops.mul
        raw = c.raw
        return UniPoly._make(self.spec, tuple(mul(x, raw) for x in self._raw))

    def __divmod__(self, other):
        self._check(other)
        if other.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        ops = self.spec.ops
        a = list(self._raw)
        b = other._raw
        db = len(b) - 1
        inv_lead = ops.inv(b[-1])
        zero = ops.zero
        q = [zero] * max(len(a) - db, 0)
        while len(a) - 1 >= db and a:
            shift = len(a) - 1 - db
            factor = ops.mul(a[-1], inv_lead)
            q[shift] = factor
            for i, bi in enumerate(b):
                a[shift + i] = ops.sub(a[shift + i], ops.mul(factor, bi))
            while a and ops.is_zero(a[-1]):
                a.pop()
        return self._trimmed(q), self._trimmed(a)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    # -- calculus and evaluation

    def derivative(self):
        ops = self.spec.ops
        out = []
        for i in range(1, len(self._raw)):
            out.append(ops.mul(self._raw[i], ops.from_int(i)))
        return self._trimmed(out)

    def evaluate(self, x: FieldElement) -> FieldElement:
        if x.spec != self.spec:
            raise ValueError("evaluation point over a different field")
        ops = self.spec.ops
        acc = ops.zero
        for c in reversed(self._raw):
            acc = ops.add(ops.mul(acc, x.raw), c)
        return FieldElement._make(self.spec, acc)

    def shift(self, c: FieldElement):
        """f(t + c), by Horner: fold in coefficients highest degree first."""
        if c.is_zero or self.is_zero:
            return self
        ops = self.spec.ops
        raw_c = c.raw
        out = []
        for coeff in reversed(self._raw):
            new = [ops.zero] * (len(out) + 1)
            for i, v in enumerate(out):
                new[i + 1] = ops.add(new[i + 1], v)
                new[i] = ops.add(new[i], ops.mul(v, raw_c))
            new[0] = ops.add(new[0], coeff)
            out = new
        return self._trimmed(out)

    def monic(self):
        if self.is_zero:
            return self
        lead = self.leading
        if lead == self.spec.one:
            return self
        return self.scale(lead.inverse())

    def map_spec(self, target: FieldSpec):
        """Coefficient-wise embedding into an extension field."""
        return UniPoly(target, [embed(c, target) for c in self.coefficients])


def poly_gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    """Monic greatest common divisor."""
    while not g.is_zero:
        f, g = g, f % g
    return f.monic()


def poly_xgcd(f: UniPoly, g: UniPoly):
    """(d, s, t) with s*f + t*g = d, d monic."""
    spec = f.spec
    s0, s1 = UniPoly.one(spec), UniPoly.zero(spec)
    t0, t1 = UniPoly.zero(spec), UniPoly.one(spec)
    while not g.is_zero:
        q, r = divmod(f, g)
        f, g = g, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if f.is_zero:
        return f, s0, t0
    inv = f.leading.inverse()
    return f.scale(inv), s0.scale(inv), t0.scale(inv)


def powmod(base: UniPoly, e: int, mod: UniPoly) -> UniPoly:
    acc = UniPoly.one(base.spec)
    base = base % mod
    while e:
        if e & 1:
            acc = acc * base % mod
        base = base * base % mod
        e >>= 1
    return acc


def _pow_p_mod(f: UniPoly, mod: UniPoly) -> UniPoly:
    """f^p mod m using the coefficient-wise p-power map when cheap."""
    spec = f.spec
    p = spec.p
    if p == 2:
        ops = spec.ops
        out = [ops.zero] * (2 * len(f._raw) - 1) if f._raw else []
        for i, c in enumerate(f._raw):
            out[2 * i] = ops.mul(c, c)
        spread = UniPoly._make(spec, tuple(out))
        return spread % mod
    return powmod(f, p, mod)


def _pow_q_mod(f: UniPoly, mod: UniPoly) -> UniPoly:
    """f^(p^m) mod m, one Frobenius round per base-field power."""
    for _ in range(f.spec.m):
        f = _pow_p_mod(f, mod)
    return f


def _pth_root_element(c: FieldElement) -> FieldElement:
    return FieldElement._make(c.spec, c.spec.ops.pth_root(c.raw))


def _pth_root_poly(f: UniPoly) -> UniPoly:
    """Inverse of g -> g^p; requires every exponent divisible by p."""
    p = f.spec.p
    out = []
    for i in range(0, f.degree + 1, p):
        out.append(_pth_root_element(f.coefficient(i)))
    return UniPoly(f.spec, out)


def squarefree_decomposition(f: UniPoly):
    """[(g, multiplicity)] with f = lead * prod g^mult, g monic squarefree.

    Valid in any characteristic; inseparable layers are peeled through
    p-th roots.  Parts are pairwise coprime with distinct multiplicities.
    """
    if f.is_zero:
        raise ZeroPolynomial("cannot decompose the zero polynomial")
    spec = f.spec
    parts: dict = {}

    def record(g, mult):
        if g.degree > 0:
            key = g.monic()
            parts[key] = parts.get(key, 0) + mult

    def walk(g, mult):
        if g.degree <= 0:
            return
        d = g.derivative()
        if d.is_zero:
            if not spec.is_finite:
                raise RationalField("inseparable input needs a finite field")
            walk(_pth_root_poly(g), mult * spec.p)
            return
        a = poly_gcd(g, d)
        s = (g // a).monic()
        j = 1
        y, rest = s, a
        while y.degree > 0:
            z = poly_gcd(y, rest)
            out = y // z
            record(out, j * mult)
            rest = rest // z
            y = z
            j += 1
        walk(rest, mult)

    walk(f.monic(), 1)
    return sorted(parts.items(), key=lambda it: it[0].key())


def _distinct_degree(f: UniPoly):
    """Split monic squarefree f into (product-of-irreducibles, degree) parts."""
    spec = f.spec
    out = []
    h = UniPoly.x(spec) % f
    d = 0
    while f.degree > 0:
        d += 1
        if f.degree < 2 * d:
            out.append((f, f.degree))
            break
        h = _pow_q_mod(h, f)
        g = poly_gcd(f, h - UniPoly.x(spec))
        if g.degree > 0:
            out.append((g, d))
            f = f // g
            h = h % f
    return out


def _equal_degree(f: UniPoly, d: int, rng: random.Random):
    """Split a product of distinct irreducibles of shared degree d."""
    spec = f.spec
    if f.degree == d:
        return [f]
    n = f.degree
    while True:
        a = UniPoly(spec, [spec.random_element(rng) for _ in range(n)])
        if a.degree < 1:
            continue
        if spec.p == 2:
            # absolute trace from GF(2^(m*d)) down to GF(2)
            t = a % f
            acc = t
            for _ in range(spec.m * d - 1):
                t = _pow_p_mod(t, f)
                acc = acc + t
            g = poly_gcd(f, acc)
        else:
            e = (spec.order**d - 1) // 2
            b = powmod(a, e, f)
            g = poly_gcd(f, b - UniPoly.one(spec))
        if 0 < g.degree < f.degree:
            left = _equal_degree(g, d, rng)
            right = _equal_degree(f // g, d, rng)
            return left + right


def factor_univariate(f: UniPoly, seed: int = 0):
    """Complete factorization over a finite field.

    Returns [(monic irreducible, multiplicity)] sorted by (degree,
    coefficient key); the product times f's leading coefficient recovers f
    exactly.  Equal-degree splitting is randomized from ``seed`` but the
    sorted output does not depend on it.
    """
    if f.is_zero:
        raise ZeroPolynomial("cannot factor the zero polynomial")
    if not f.spec.is_finite:
        raise RationalField("factorization implemented for finite fields only")
    if f.degree == 0:
        return []
    rng = random.Random(seed)
    found: dict = {}
    for part, mult in squarefree_decomposition(f):
        for block, d in _distinct_degree(part):
            for irr in _equal_degree(block, d, rng):
                irr = irr.monic()
                found[irr] = found.get(irr, 0) + mult
    return sorted(found.items(), key=lambda it: it[0].key())


def is_irreducible(f: UniPoly) -> bool:
    """Rabin irreducibility test over the coefficient field."""
    if not f.spec.is_finite:
        raise RationalField("irreducibility test needs a finite field")
    n = f.degree
    if n < 1:
        return False
    if n == 1:
        return True
    spec = f.spec
    f = f.monic()
    t = UniPoly.x(spec)
    h = t % f
    for _ in range(n):
        h = _pow_q_mod(h, f)
    if not (h - t % f).is_zero:
        return False
    for r in _prime_divisors(n):
        h = t % f
        for _ in range(n // r):
            h = _pow_q_mod(h, f)
        if poly_gcd(f, h - t).degree != 0:
            return False
    return True


def roots_in_field(f: UniPoly, target: FieldSpec, seed: int = 0):
    """[(root, multiplicity)] of f inside the given extension field."""
    lifted = f if f.spec == target else f.map_spec(target)
    out = []
    for factor, mult in factor_univariate(lifted, seed):
        if factor.degree == 1:
            out.append((-factor.coefficient(0), mult))
    out.sort(key=lambda rm: rm[0].key())
    return out


def roots_in_extension(f: UniPoly, max_ext: int, seed: int = 0):
    """All roots in extensions of degree up to ``max_ext``.

    Each root is reported in the smallest field containing it, as
    (root, multiplicity, extension_degree).  Total multiplicity equals
    deg f exactly when every irreducible factor has degree <= max_ext.
    """
    if f.is_zero:
        raise ZeroPolynomial("the zero polynomial has every root")
    if not f.spec.is_finite:
        raise RationalField("root finding implemented for finite fields only")
    spec = f.spec
    out = []
    for factor, mult in factor_univariate(f, seed):
        d = factor.degree
        if d > max_ext:
            continue
        if d == 1:
            out.append((-factor.coefficient(0), mult, 1))
        else:
            ext = make_extension(spec.p, spec.m * d)
            for root, _ in roots_in_field(factor, ext, seed):
                out.append((root, mult, d))
    out.sort(key=lambda rme: (rme[2], rme[0].key()))
    return out
