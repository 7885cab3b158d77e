"""Exact coefficient fields: GF(p), GF(p^m), and arbitrary-precision rationals.

A ``FieldSpec`` names a field; two specs compare equal exactly when kind,
characteristic, extension degree and modulus all agree.  Extension fields use
a monic irreducible modulus over GF(p); when none is supplied the canonical
one is the lexicographically smallest (coefficients compared low degree
first).  ``FieldElement`` values are immutable and hashable, so they can be
shared freely and used as dict keys.

Internally each spec carries an arithmetic kernel tuned to its shape:
machine ints mod p for prime fields, bit-packed carry-less arithmetic in
characteristic 2, coefficient tuples with discrete-log tables for small odd
extensions, and ``fractions.Fraction`` for the rationals.  The public
surface never exposes the kernel representation.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .errors import (
    CompositeCharacteristic,
    DegreeZero,
    FieldMismatch,
    NoEmbedding,
    RationalField,
)

# Deterministic Miller-Rabin witness set, valid for every n < 3.3 * 10**24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Discrete-log multiplication tables are built for odd extensions up to this
# field order; beyond it schoolbook reduction is used.
_TABLE_LIMIT = 1 << 16


def is_prime(n: int) -> bool:
    """Deterministic primality test for desk-scale characteristics."""
    if n < 2:
        return False
    for small in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % small == 0:
            return n == small
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


# ---------------------------------------------------------------------------
# Raw polynomial arithmetic over GF(p).  Coefficient lists are ints in
# [0, p), lowest degree first, trimmed.  Used for modulus search and for the
# tuple-based extension kernel; UniPoly builds the general machinery on top.


def _pf_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _pf_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _pf_trim(out)


def _pf_mod(a, b, p):
    a = list(a)
    db = len(b) - 1
    inv_lead = pow(b[-1], -1, p)
    while len(a) - 1 >= db and a:
        shift = len(a) - 1 - db
        factor = a[-1] * inv_lead % p
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - factor * bi) % p
        _pf_trim(a)
    return a


def _pf_gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, _pf_mod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [ai * inv % p for ai in a]
    return a


def _pf_pow_p_mod(a, f, p):
    # a(t)^p mod f via the characteristic-p power map, then reduction.
    # Coefficients live in GF(p), so ai^p = ai.
    spread = [0] * ((len(a) - 1) * p + 1) if a else []
    for i, ai in enumerate(a):
        if ai:
            spread[i * p] = ai
    return _pf_mod(spread, f, p)


def _pf_powmod_q(a, f, p, rounds):
    # a^(p^rounds) mod f
    for _ in range(rounds):
        a = _pf_pow_p_mod(a, f, p)
    return a


def _pf2_mod(a: int, b: int) -> int:
    # bit-packed reduction over GF(2); b nonzero
    db = b.bit_length() - 1
    da = a.bit_length() - 1
    while da >= db and a:
        a ^= b << (da - db)
        da = a.bit_length() - 1
    return a


def _pf2_sqr_mod(a: int, f: int) -> int:
    # squaring over GF(2) spreads the bits apart
    sq = 0
    while a:
        low = a & -a
        sq |= 1 << (2 * (low.bit_length() - 1))
        a ^= low
    return _pf2_mod(sq, f)


def _pf2_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _pf2_mod(a, b)
    return a


def _pf2_is_irreducible(f: int, m: int) -> bool:
    h = 2  # the polynomial t
    for _ in range(m):
        h = _pf2_sqr_mod(h, f)
    if h != 2:
        return False
    for r in _prime_divisors(m):
        h = 2
        for _ in range(m // r):
            h = _pf2_sqr_mod(h, f)
        if _pf2_gcd(f, h ^ 2) != 1:
            return False
    return True


def _pf_is_irreducible(f, p) -> bool:
    """Rabin test on a monic polynomial over GF(p)."""
    m = len(f) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    if p == 2:
        packed = 0
        for i, c in enumerate(f):
            if c:
                packed |= 1 << i
        return _pf2_is_irreducible(packed, m)
    t = [0, 1]
    h = _pf_powmod_q(t, f, p, m)
    diff = list(h)
    while len(diff) < 2:
        diff.append(0)
    diff[1] = (diff[1] - 1) % p
    if _pf_trim(diff):
        return False
    for r in _prime_divisors(m):
        h = _pf_powmod_q(t, f, p, m // r)
        diff = list(h)
        while len(diff) < 2:
            diff.append(0)
        diff[1] = (diff[1] - 1) % p
        g = _pf_gcd(f, _pf_trim(diff), p)
        if len(g) - 1 != 0:
            return False
    return True


def _prime_divisors(n: int):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


_CANONICAL_MODULI: dict = {}


def canonical_modulus(p: int, m: int) -> tuple:
    """Lexicographically smallest monic irreducible of degree m over GF(p).

    Candidate coefficient vectors (c0, ..., c_{m-1}) are compared low degree
    first, each coefficient as an integer in [0, p).  Deterministic.
    """
    key = (p, m)
    cached = _CANONICAL_MODULI.get(key)
    if cached is not None:
        return cached
    if m == 1:
        mod = (0, 1)
        _CANONICAL_MODULI[key] = mod
        return mod
    # constant term zero means t divides, so start the lex scan at c0 = 1
    for c0 in range(1, p):
        for rest in itertools.product(range(p), repeat=m - 1):
            f = [c0, *rest, 1]
            if _pf_is_irreducible(f, p):
                mod = tuple(f)
                _CANONICAL_MODULI[key] = mod
                return mod
    raise AssertionError("no irreducible polynomial found; unreachable")


# ---------------------------------------------------------------------------
# Arithmetic kernels.  Raw representations per kind:
#   rational            Fraction
#   finite, m == 1      int in [0, p)
#   finite, p == 2      int bitmask of the coefficient vector
#   finite, odd p, m>1  tuple of ints in [0, p), length m


class _RationalOps:
    kind = "rational"
    zero = Fraction(0)
    one = Fraction(1)

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def inv(a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    @staticmethod
    def is_zero(a):
        return a == 0

    @staticmethod
    def from_int(k):
        return Fraction(k)

    @staticmethod
    def coeffs(a):
        return (a,)

    @staticmethod
    def key(a):
        return (a.numerator, a.denominator)

    @staticmethod
    def random(rng):
        return Fraction(rng.randrange(-20, 21), rng.randrange(1, 13))

    @staticmethod
    def pth_root(a):
        raise RationalField("p-th roots need positive characteristic")


class _PrimeOps:
    kind = "prime"

    def __init__(self, p):
        self.p = p
        self.zero = 0
        self.one = 1 % p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    @staticmethod
    def is_zero(a):
        return a == 0

    def from_int(self, k):
        return k % self.p

    @staticmethod
    def coeffs(a):
        return (a,)

    @staticmethod
    def key(a):
        return a

    def random(self, rng):
        return rng.randrange(self.p)

    @staticmethod
    def pth_root(a):
        return a


class _Gf2Ops:
    kind = "gf2"

    def __init__(self, m, modulus):
        self.m = m
        self.zero = 0
        self.one = 1
        self.mod_int = 0
        for i, c in enumerate(modulus):
            if c:
                self.mod_int |= 1 << i

    @staticmethod
    def add(a, b):
        return a ^ b

    sub = add

    def mul(self, a, b):
        acc = 0
        while b:
            if b & 1:
                acc ^= a
            b >>= 1
            a <<= 1
        m, mod = self.m, self.mod_int
        bl = acc.bit_length()
        while bl > m:
            acc ^= mod << (bl - 1 - m)
            bl = acc.bit_length()
        return acc

    @staticmethod
    def neg(a):
        return a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        r0, r1 = self.mod_int, a
        s0, s1 = 0, 1
        while r1:
            d = r0.bit_length() - r1.bit_length()
            if d < 0:
                r0, r1, s0, s1 = r1, r0, s1, s0
                continue
            r0 ^= r1 << d
            s0 ^= s1 << d
        # r0 is the gcd, a unit since the modulus is irreducible
        m, mod = self.m, self.mod_int
        bl = s0.bit_length()
        while bl > m:
            s0 ^= mod << (bl - 1 - m)
            bl = s0.bit_length()
        return s0

    @staticmethod
    def is_zero(a):
        return a == 0

    @staticmethod
    def from_int(k):
        return k & 1

    def coeffs(self, a):
        return tuple((a >> i) & 1 for i in range(self.m))

    @staticmethod
    def key(a):
        return a

    def random(self, rng):
        return rng.getrandbits(self.m)

    def pth_root(self, a):
        for _ in range(self.m - 1):
            a = self.mul(a, a)
        return a


class _OddExtOps:
    kind = "ext"

    def __init__(self, p, m, modulus):
        self.p = p
        self.m = m
        self.zero = (0,) * m
        self.one = (1,) + (0,) * (m - 1)
        self.modulus = modulus
        # t^(m+k) mod modulus for k = 0 .. m-2, as length-m tuples
        red0 = [(-c) % p for c in modulus[:m]]
        rows = [red0]
        for _ in range(m - 2):
            prev = rows[-1]
            row = [0] + prev[: m - 1]
            top = prev[m - 1]
            if top:
                row = [(row[i] + top * red0[i]) % p for i in range(m)]
            rows.append(row)
        self._red = [tuple(r) for r in rows]
        self._exp = None
        self._log = None
        order = p**m
        if order <= _TABLE_LIMIT:
            self._build_tables(order)

    def _build_tables(self, order):
        # discrete-log tables over a multiplicative generator
        for cand in self._element_iter():
            if all(c == 0 for c in cand):
                continue
            if self._order_of(cand, order - 1) == order - 1:
                gen = cand
                break
        exp = [self.one]
        cur = self.one
        for _ in range(order - 2):
            cur = self._mul_schoolbook(cur, gen)
            exp.append(cur)
        self._exp = exp
        self._log = {e: i for i, e in enumerate(exp)}
        self._group_order = order - 1

    def _element_iter(self):
        return itertools.product(range(self.p), repeat=self.m)

    def _order_of(self, a, group_order):
        for r in _prime_divisors(group_order):
            if self._pow_schoolbook(a, group_order // r) == self.one:
                return group_order // r  # proper divisor; not a generator
        return group_order

    def _pow_schoolbook(self, a, e):
        acc = self.one
        while e:
            if e & 1:
                acc = self._mul_schoolbook(acc, a)
            a = self._mul_schoolbook(a, a)
            e >>= 1
        return acc

    def _mul_schoolbook(self, a, b):
        p, m = self.p, self.m
        conv = [0] * (2 * m - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    conv[i + j] += ai * bj
        out = [c % p for c in conv[:m]]
        for k in range(m - 1):
            top = conv[m + k] % p
            if top:
                row = self._red[k]
                out = [(out[i] + top * row[i]) % p for i in range(m)]
        return tuple(out)

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def mul(self, a, b):
        log = self._log
        if log is not None:
            za = log.get(a)
            if za is None:
                return self.zero
            zb = log.get(b)
            if zb is None:
                return self.zero
            return self._exp[(za + zb) % self._group_order]
        return self._mul_schoolbook(a, b)

    def neg(self, a):
        p = self.p
        return tuple(-x % p for x in a)

    def inv(self, a):
        if a == self.zero:
            raise ZeroDivisionError("inverse of zero")
        if self._log is not None:
            za = self._log[a]
            return self._exp[(-za) % self._group_order]
        # extended Euclid against the modulus
        p = self.p
        r0, r1 = list(self.modulus), _pf_trim(list(a))
        s0, s1 = [], [1]
        while r1:
            db = len(r1) - 1
            inv_lead = pow(r1[-1], -1, p)
            q = [0] * (len(r0) - len(r1) + 1)
            rem = list(r0)
            while len(rem) - 1 >= db and rem:
                shift = len(rem) - 1 - db
                factor = rem[-1] * inv_lead % p
                q[shift] = factor
                for i, bi in enumerate(r1):
                    rem[shift + i] = (rem[shift + i] - factor * bi) % p
                _pf_trim(rem)
            r0, r1 = r1, rem
            new_s = [x % p for x in s0] if s0 else []
            prod = _pf_mul(q, s1, p)
            ln = max(len(new_s), len(prod))
            new_s = [
                ((new_s[i] if i < len(new_s) else 0) - (prod[i] if i < len(prod) else 0)) % p
                for i in range(ln)
            ]
            s0, s1 = s1, _pf_trim(new_s)
        lead_inv = pow(r0[-1], -1, p)
        s0 = [x * lead_inv % p for x in s0]
        s0 = s0 + [0] * (self.m - len(s0))
        return tuple(s0[: self.m])

    def is_zero(self, a):
        return a == self.zero

    def from_int(self, k):
        return (k % self.p,) + (0,) * (self.m - 1)

    @staticmethod
    def coeffs(a):
        return a

    @staticmethod
    def key(a):
        return a

    def random(self, rng):
        p = self.p
        return tuple(rng.randrange(p) for _ in range(self.m))

    def pth_root(self, a):
        e = self.p ** (self.m - 1)
        if self._log is not None:
            if a == self.zero:
                return a
            return self._exp[self._log[a] * e % self._group_order]
        return self._pow_schoolbook(a, e)


# ---------------------------------------------------------------------------


_SPEC_CACHE: dict = {}


class FieldSpec:
    """Description of an exact field; equality is structural."""

    __slots__ = ("kind", "p", "m", "modulus", "_ops", "_hash")

    def __init__(self, kind, p, m, modulus):
        self.kind = kind
        self.p = p
        self.m = m
        self.modulus = modulus
        self._ops = None
        self._hash = hash((kind, p, m, modulus))

    # -- constructors

    @classmethod
    def rationals(cls) -> "FieldSpec":
        key = ("rational", 0, 0, ())
        spec = _SPEC_CACHE.get(key)
        if spec is None:
            spec = cls(*key)
            _SPEC_CACHE[key] = spec
        return spec

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls.extension(p, 1)

    @classmethod
    def extension(cls, p: int, m: int, modulus=None) -> "FieldSpec":
        if m < 1:
            raise DegreeZero(f"extension degree must be >= 1, got {m}")
        if not is_prime(p):
            raise CompositeCharacteristic(f"{p} is not prime")
        if modulus is None:
            modulus = canonical_modulus(p, m)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != m + 1 or modulus[-1] != 1:
                raise ValueError("modulus must be monic of degree m")
            if not _pf_is_irreducible(list(modulus), p):
                raise ValueError("modulus is reducible over GF(p)")
        key = ("finite", p, m, modulus)
        spec = _SPEC_CACHE.get(key)
        if spec is None:
            spec = cls(*key)
            _SPEC_CACHE[key] = spec
        return spec

    # -- basic protocol

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return (self.kind, self.p, self.m, self.modulus) == (
            other.kind,
            other.p,
            other.m,
            other.modulus,
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if self.kind == "rational":
            return "FieldSpec(QQ)"
        if self.m == 1:
            return f"FieldSpec(GF({self.p}))"
        return f"FieldSpec(GF({self.p}^{self.m}))"

    # -- derived data

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    @property
    def order(self) -> int:
        if not self.is_finite:
            raise RationalField("the rationals are infinite")
        return self.p**self.m

    @property
    def ops(self):
        o = self._ops
        if o is None:
            if self.kind == "rational":
                o = _RationalOps()
            elif self.m == 1:
                o = _PrimeOps(self.p)
            elif self.p == 2:
                o = _Gf2Ops(self.m, self.modulus)
            else:
                o = _OddExtOps(self.p, self.m, self.modulus)
            self._ops = o
        return o

    # -- element construction

    @property
    def zero(self) -> "FieldElement":
        return FieldElement._make(self, self.ops.zero)

    @property
    def one(self) -> "FieldElement":
        return FieldElement._make(self, self.ops.one)

    def element(self, value) -> "FieldElement":
        """Coerce an int, Fraction, coefficient sequence, or element."""
        ops = self.ops
        if isinstance(value, FieldElement):
            if value.spec != self:
                raise FieldMismatch(f"{value.spec} element given to {self}")
            return value
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, int):
            return FieldElement._make(self, ops.from_int(value))
        if isinstance(value, Fraction):
            if self.kind == "rational":
                return FieldElement._make(self, value)
            num = ops.from_int(value.numerator)
            den = ops.from_int(value.denominator)
            return FieldElement._make(self, ops.mul(num, ops.inv(den)))
        if isinstance(value, (tuple, list)):
            if not self.is_finite:
                raise ValueError("coefficient vectors only describe finite elements")
            if len(value) != self.m:
                raise ValueError(f"need {self.m} coefficients, got {len(value)}")
            coeffs = [int(c) % self.p for c in value]
            if self.m == 1:
                return FieldElement._make(self, coeffs[0])
            if self.p == 2:
                raw = 0
                for i, c in enumerate(coeffs):
                    if c:
                        raw |= 1 << i
                return FieldElement._make(self, raw)
            return FieldElement._make(self, tuple(coeffs))
        raise TypeError(f"cannot build a field element from {type(value).__name__}")

    def random_element(self, rng) -> "FieldElement":
        return FieldElement._make(self, self.ops.random(rng))

    def elements(self):
        """Iterate over all elements (finite fields only), deterministically."""
        if not self.is_finite:
            raise RationalField("cannot enumerate the rationals")
        ops = self.ops
        if self.m == 1:
            for v in range(self.p):
                yield FieldElement._make(self, v)
        elif self.p == 2:
            for v in range(1 << self.m):
                yield FieldElement._make(self, v)
        else:
            for tup in itertools.product(range(self.p), repeat=self.m):
                yield FieldElement._make(self, tup)


def make_extension(p: int, m: int) -> FieldSpec:
    """GF(p^m) with the canonical modulus.  Deterministic across runs."""
    return FieldSpec.extension(p, m)


class FieldElement:
    """Immutable element of a ``FieldSpec``; supports field arithmetic."""

    __slots__ = ("spec", "raw")

    def __init__(self, spec: FieldSpec, value):
        coerced = spec.element(value)
        self.spec = spec
        self.raw = coerced.raw

    @classmethod
    def _make(cls, spec, raw):
        el = object.__new__(cls)
        el.spec = spec
        el.raw = raw
        return el

    # -- coercion helper

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise FieldMismatch(
                    f"cannot mix {self.spec} and {other.spec}; embed explicitly"
                )
            return other.raw
        if isinstance(other, int):
            return self.spec.ops.from_int(other)
        if isinstance(other, Fraction) and self.spec.kind == "rational":
            return other
        return None

    # -- arithmetic

    def __add__(self, other):
        raw = self._coerce(other)
        if raw is None:
            return NotImplemented
        return FieldElement._make(self.spec, self.spec.ops.add(self.raw, raw))

    __radd__ = __add__

    def __sub__(self, other):
        raw = self._coerce(other)
        if raw is None:
            return NotImplemented
        return FieldElement._make(self.spec, self.spec.ops.sub(self.raw, raw))

    def __rsub__(self, other):
        raw = self._coerce(other)
        if raw is None:
            return NotImplemented
        return FieldElement._make(self.spec, self.spec.ops.sub(raw, self.raw))

    def __mul__(self, other):
        raw = self._coerce(other)
        if raw is None:
            return NotImplemented
        return FieldElement._make(self.spec, self.spec.ops.mul(self.raw, raw))

    __rmul__ = __mul__

    def __truediv__(self, other):
        raw = self._coerce(other)
        if raw is None:
            return NotImplemented
        ops = self.spec.ops
        return FieldElement._make(self.spec, ops.mul(self.raw, ops.inv(raw)))

    def __rtruediv__(self, other):
        raw = self._coerce(other)
        if raw is None:
            return NotImplemented
        ops = self.spec.ops
        return FieldElement._make(self.spec, ops.mul(raw, ops.inv(self.raw)))

    def __neg__(self):
        return FieldElement._make(self.spec, self.spec.ops.neg(self.raw))

    def __pow__(self, e: int):
        ops = self.spec.ops
        if e < 0:
            base = ops.inv(self.raw)
            e = -e
        else:
            base = self.raw
        acc = ops.one
        while e:
            if e & 1:
                acc = ops.mul(acc, base)
            base = ops.mul(base, base)
            e >>= 1
        return FieldElement._make(self.spec, acc)

    def inverse(self) -> "FieldElement":
        return FieldElement._make(self.spec, self.spec.ops.inv(self.raw))

    # -- predicates and protocol

    @property
    def is_zero(self) -> bool:
        return self.spec.ops.is_zero(self.raw)

    def __bool__(self):
        return not self.is_zero

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.spec == other.spec and self.raw == other.raw
        if isinstance(other, int):
            return self.raw == self.spec.ops.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.spec._hash, self.raw))

    def __repr__(self):
        return f"<{self.coeffs!r} in {self.spec!r}>"

    # -- views

    @property
    def coeffs(self):
        """Coefficient vector over GF(p), or a 1-tuple Fraction for QQ."""
        return self.spec.ops.coeffs(self.raw)

    def key(self):
        """Total-order key, deterministic within one spec."""
        return self.spec.ops.key(self.raw)


# ---------------------------------------------------------------------------
# Frobenius and subfield embeddings.


def frobenius(x: FieldElement, e: int = 1) -> FieldElement:
    """x raised to the p^e power; the identity on GF(p)."""
    spec = x.spec
    if not spec.is_finite:
        raise RationalField("Frobenius needs positive characteristic")
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    out = x
    for _ in range(e):
        out = out**spec.p
    return out


_EMBED_CACHE: dict = {}


def _embedding_powers(source: FieldSpec, target: FieldSpec):
    key = (source, target)
    powers = _EMBED_CACHE.get(key)
    if powers is not None:
        return powers
    from .unipoly import UniPoly, factor_univariate

    # image of the source generator: the canonical root of the source
    # modulus inside the target
    mod_in_target = UniPoly(target, [target.element(c) for c in source.modulus])
    roots = []
    for factor, _ in factor_univariate(mod_in_target):
        if factor.degree == 1:
            roots.append(-factor.coefficient(0))
    if not roots:
        raise NoEmbedding(
            f"modulus of {source} has no root in {target}"
        )  # unreachable when degrees divide
    root = min(roots, key=lambda r: r.key())
    powers = [target.one]
    for _ in range(source.m - 1):
        powers.append(powers[-1] * root)
    _EMBED_CACHE[key] = powers
    return powers


def embed(x: FieldElement, target: FieldSpec) -> FieldElement:
    """Canonical embedding of x into an extension of its field.

    Requires equal characteristic and source degree dividing target degree.
    Constants of GF(p) map coefficient-wise.  Deterministic: the image of
    the source generator is the smallest root of the source modulus in the
    target, under the element key order.
    """
    spec = x.spec
    if spec == target:
        return x
    if spec.kind != target.kind:
        raise NoEmbedding(f"no embedding of {spec} into {target}")
    if spec.kind == "rational":
        return x
    if spec.p != target.p or target.m % spec.m != 0:
        raise NoEmbedding(f"no embedding of {spec} into {target}")
    powers = _embedding_powers(spec, target)
    acc = target.zero
    for c, pw in zip(x.coeffs, powers):
        if c:
            acc = acc + pw * c
    return acc
