"""Exact arithmetic in finite fields of small characteristic.

A field is described by a :class:`FieldCtx`: either a prime field F_p, or an
extension of another context by a monic irreducible modulus.  Two levels of
extension above the prime field are supported, which covers F_{p^e} plus one
further working extension (as used by the brute-force trace oracle).

Elements are canonical by construction.  Internally an element is a single
integer: the little-endian coefficient vector (c_0, ..., c_{d-1}) over the
base field packs into sum(c_i * |base|**i), where each c_i is itself a packed
base-field value.  The packing is bijective, so integer equality is
coefficient-wise equality, and the natural embedding of a subfield into any
field above it on the same chain preserves the packed value.  The vector view
is available as :attr:`FieldElement.coeffs`.

Contexts are cached, so two requests for the same field (same prime, same
modulus chain) return the identical object and context checks are identity
checks.  Everything here is immutable.
"""

from __future__ import annotations

import functools
from typing import Iterable, Iterator

from .errors import (
    CtxMismatch,
    DepthExceeded,
    DivisionByZero,
    NotInTower,
    NotMonic,
    NotPrime,
    PrimeTooLarge,
    ReducibleModulus,
)

#: Largest supported characteristic (exclusive).
MAX_PRIME = 1 << 20

#: Number of extension levels allowed above the prime field.
MAX_DEPTH = 2


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# ---------------------------------------------------------------------------
# packed-value operation factories
#
# Each factory returns closures working on packed integers.  The prime and
# extension-over-prime cases get hand-specialised loops because they carry
# all the hot arithmetic; the generic case (extension over an extension) goes
# through the base context's own closures and is only exercised by oracle
# code on towers of total degree <= a few dozen.

def _prime_ops(p):
    def add(x, y):
        return (x + y) % p

    def sub(x, y):
        return (x - y) % p

    def neg(x):
        return -x % p

    def mul(x, y):
        return (x * y) % p

    def inv(x):
        if x == 0:
            raise DivisionByZero("0 is not invertible")
        return pow(x, p - 2, p)

    def decode(v):
        return [v]

    def encode(digits):
        return digits[0]

    return add, sub, neg, mul, inv, decode, encode


def _list_divmod_mod_p(a, b, p):
    """Divmod of little-endian coefficient lists over F_p; b must be nonzero."""
    da, db = len(a) - 1, len(b) - 1
    if da < db:
        return [0], list(a)
    inv_lead = pow(b[db], p - 2, p)
    rem = list(a)
    quo = [0] * (da - db + 1)
    for k in range(da, db - 1, -1):
        c = rem[k]
        if c:
            f = c * inv_lead % p
            quo[k - db] = f
            for j in range(db):
                rem[k - db + j] = (rem[k - db + j] - f * b[j]) % p
            rem[k] = 0
    while len(rem) > 1 and rem[-1] == 0:
        rem.pop()
    return quo, rem


def _prime_ext_ops(p, d, modulus_digits):
    """Closures for F_p[X]/(m) with m monic of degree d, digits as plain ints."""
    mod_low = tuple(modulus_digits[:d])
    idx = range(d)

    def decode(v):
        out = []
        for _ in idx:
            v, r = divmod(v, p)
            out.append(r)
        return out

    def encode(digits):
        v = 0
        for c in reversed(digits):
            v = v * p + c
        return v

    def add(x, y):
        a, b = decode(x), decode(y)
        return encode([(a[i] + b[i]) % p for i in idx])

    def sub(x, y):
        a, b = decode(x), decode(y)
        return encode([(a[i] - b[i]) % p for i in idx])

    def neg(x):
        return encode([-c % p for c in decode(x)])

    def mul(x, y):
        a, b = decode(x), decode(y)
        prod = [0] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] += ai * bj
        for k in range(2 * d - 2, d - 1, -1):
            c = prod[k] % p
            if c:
                lo = k - d
                for j in idx:
                    prod[lo + j] -= c * mod_low[j]
        return encode([prod[i] % p for i in idx])

    full_mod = list(modulus_digits)

    def inv(x):
        if x == 0:
            raise DivisionByZero("0 is not invertible")
        # extended Euclid over F_p against the modulus, tracking only the
        # cofactor of x; terminates at a nonzero constant remainder because
        # the modulus is irreducible
        r0, r1 = full_mod, decode(x)
        while len(r1) > 1 and r1[-1] == 0:
            r1.pop()
        t0, t1 = [0], [1]
        while True:
            if len(r1) == 1:
                c_inv = pow(r1[0], p - 2, p)
                out = [c * c_inv % p for c in t1]
                out.extend([0] * (d - len(out)))
                return encode(out[:d])
            quo, rem = _list_divmod_mod_p(r0, r1, p)
            r0, r1 = r1, rem
            if r1 == [0]:
                raise ArithmeticError("modulus is not irreducible")
            prod = [0] * (len(quo) + len(t1) - 1)
            for i, qi in enumerate(quo):
                if qi:
                    for j, tj in enumerate(t1):
                        prod[i + j] += qi * tj
            new_t = [0] * max(len(t0), len(prod))
            for i, c in enumerate(t0):
                new_t[i] = c
            for i, c in enumerate(prod):
                new_t[i] = (new_t[i] - c) % p
            while len(new_t) > 1 and new_t[-1] == 0:
                new_t.pop()
            t0, t1 = t1, new_t

    return add, sub, neg, mul, inv, decode, encode


def _generic_ext_ops(base: "FieldCtx", d, modulus_digits):
    """Closures for base[X]/(m); digits are packed base values."""
    order = base.order
    badd, bsub, bneg, bmul, binv = (
        base.add_v, base.sub_v, base.neg_v, base.mul_v, base.inv_v)
    mod_low = tuple(modulus_digits[:d])
    idx = range(d)

    def decode(v):
        out = []
        for _ in idx:
            v, r = divmod(v, order)
            out.append(r)
        return out

    def encode(digits):
        v = 0
        for c in reversed(digits):
            v = v * order + c
        return v

    def add(x, y):
        a, b = decode(x), decode(y)
        return encode([badd(a[i], b[i]) for i in idx])

    def sub(x, y):
        a, b = decode(x), decode(y)
        return encode([bsub(a[i], b[i]) for i in idx])

    def neg(x):
        return encode([bneg(c) for c in decode(x)])

    def mul(x, y):
        a, b = decode(x), decode(y)
        prod = [0] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] = badd(prod[i + j], bmul(ai, bj))
        for k in range(2 * d - 2, d - 1, -1):
            c = prod[k]
            if c:
                lo = k - d
                for j in idx:
                    if mod_low[j]:
                        prod[lo + j] = bsub(prod[lo + j], bmul(c, mod_low[j]))
        return encode(prod[:d])

    full_mod = list(modulus_digits)

    def _poly_divmod(a, b):
        da, db = len(a) - 1, len(b) - 1
        if da < db:
            return [0], list(a)
        inv_lead = binv(b[db])
        rem = list(a)
        quo = [0] * (da - db + 1)
        for k in range(da, db - 1, -1):
            c = rem[k]
            if c:
                f = bmul(c, inv_lead)
                quo[k - db] = f
                for j in range(db):
                    rem[k - db + j] = bsub(rem[k - db + j], bmul(f, b[j]))
                rem[k] = 0
        while len(rem) > 1 and rem[-1] == 0:
            rem.pop()
        return quo, rem

    def inv(x):
        if x == 0:
            raise DivisionByZero("0 is not invertible")
        r0, r1 = full_mod, decode(x)
        while len(r1) > 1 and r1[-1] == 0:
            r1.pop()
        t0, t1 = [0], [1]
        while True:
            if len(r1) == 1:
                c_inv = binv(r1[0])
                out = [bmul(c, c_inv) for c in t1]
                out.extend([0] * (d - len(out)))
                return encode(out[:d])
            quo, rem = _poly_divmod(r0, r1)
            r0, r1 = r1, rem
            if r1 == [0]:
                raise ArithmeticError("modulus is not irreducible")
            prod = [0] * (len(quo) + len(t1) - 1)
            for i, qi in enumerate(quo):
                if qi:
                    for j, tj in enumerate(t1):
                        if tj:
                            prod[i + j] = badd(prod[i + j], bmul(qi, tj))
            new_t = [0] * max(len(t0), len(prod))
            for i, c in enumerate(t0):
                new_t[i] = c
            for i, c in enumerate(prod):
                new_t[i] = bsub(new_t[i], c)
            while len(new_t) > 1 and new_t[-1] == 0:
                new_t.pop()
            t0, t1 = t1, new_t

    return add, sub, neg, mul, inv, decode, encode


# ---------------------------------------------------------------------------
# contexts and elements

class FieldCtx:
    """A finite field, shared by all of its elements.

    Do not call the constructor directly; use :func:`prime_field`,
    :func:`extension_field` or :func:`finite_field`, which validate input
    and cache contexts so that equal fields are identical objects.

    The ``*_v`` attributes are closures on packed integer values; they are
    the arithmetic kernel and are also used directly by the polynomial layer.
    """

    __slots__ = (
        'kind', 'p', 'base', 'modulus_vals', 'degree', 'total_degree',
        'depth', 'order', 'prime_ctx',
        'add_v', 'sub_v', 'neg_v', 'mul_v', 'inv_v', 'decode_v', 'encode_v',
    )

    def __init__(self, p, base=None, modulus_vals=None):
        self.p = p
        self.base = base
        self.modulus_vals = modulus_vals
        if base is None:
            self.kind = 'prime'
            self.degree = 1
            self.total_degree = 1
            self.depth = 0
            self.order = p
            self.prime_ctx = self
            ops = _prime_ops(p)
        else:
            self.kind = 'extension'
            d = len(modulus_vals) - 1
            self.degree = d
            self.total_degree = d * base.total_degree
            self.depth = base.depth + 1
            self.order = base.order ** d
            self.prime_ctx = base.prime_ctx
            if base.kind == 'prime':
                ops = _prime_ext_ops(p, d, modulus_vals)
            else:
                ops = _generic_ext_ops(base, d, modulus_vals)
        (self.add_v, self.sub_v, self.neg_v, self.mul_v, self.inv_v,
         self.decode_v, self.encode_v) = ops

    # -- packed-value helpers ------------------------------------------------

    def pow_v(self, x: int, k: int) -> int:
        """x**k on packed values; k may be negative when x is invertible."""
        if k < 0:
            x = self.inv_v(x)
            k = -k
        result = 1
        while k:
            if k & 1:
                result = self.mul_v(result, x)
            k >>= 1
            if k:
                x = self.mul_v(x, x)
        return result

    # -- element construction --------------------------------------------------

    def element(self, val: int) -> "FieldElement":
        """The element with the given packed value."""
        if not 0 <= val < self.order:
            raise ValueError(f"packed value {val} out of range for {self!r}")
        return FieldElement(self, val)

    def from_int(self, k: int) -> "FieldElement":
        """The image of the integer k under Z -> F_p -> this field."""
        return FieldElement(self, k % self.p)

    def from_coeffs(self, coeffs: Iterable) -> "FieldElement":
        """Build an element from base-field coefficients, low degree first.

        Entries may be base-field elements or plain integers (reduced mod p
        when the base is the prime field).  Missing high coefficients are
        taken as zero.
        """
        digits = []
        for c in coeffs:
            if isinstance(c, FieldElement):
                if self.kind == 'prime' or c.ctx is not self.base:
                    raise CtxMismatch("coefficient from a different field")
                digits.append(c.val)
            else:
                if self.kind != 'prime' and self.base.kind != 'prime':
                    raise CtxMismatch(
                        "integer coefficients only embed over a prime base")
                digits.append(int(c) % self.p)
        if len(digits) > self.degree:
            raise ValueError(
                f"{len(digits)} coefficients for degree {self.degree}")
        digits.extend([0] * (self.degree - len(digits)))
        return FieldElement(self, self.encode_v(digits))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    @property
    def modulus_root(self) -> "FieldElement":
        """The residue of X, a root of the modulus (extensions only)."""
        if self.kind != 'extension':
            raise ValueError("prime field has no modulus root")
        return FieldElement(self, self.base.order)

    def elements(self) -> Iterator["FieldElement"]:
        """All field elements in packed-value order (0 and 1 come first)."""
        return (FieldElement(self, v) for v in range(self.order))

    # -- description -----------------------------------------------------------

    def describe(self) -> dict:
        """Plain-data description: p, absolute degree, modulus text."""
        if self.kind == 'prime':
            return {'p': self.p, 'e': 1, 'modulus': None}
        if self.depth == 1:
            mod = ','.join(str(c) for c in self.modulus_vals)
            return {'p': self.p, 'e': self.degree, 'modulus': mod}
        raise ValueError("no text description for towers above depth 1")

    def __repr__(self):
        if self.kind == 'prime':
            return f"GF({self.p})"
        return f"GF({self.p}^{self.total_degree})"


class FieldElement:
    """An element of a :class:`FieldCtx`.

    Supports +, -, *, /, ** (integer exponents, negative allowed for nonzero
    elements) and mixed arithmetic with plain integers, which embed through
    the prime field.  Instances are immutable and hashable.
    """

    __slots__ = ('ctx', 'val')

    def __init__(self, ctx: FieldCtx, val: int):
        self.ctx = ctx
        self.val = val

    @property
    def coeffs(self) -> tuple:
        """Coefficient vector over the base field, low degree first."""
        ctx = self.ctx
        if ctx.kind == 'prime':
            return (self,)
        base = ctx.base
        return tuple(FieldElement(base, d) for d in ctx.decode_v(self.val))

    def frobenius(self) -> "FieldElement":
        """The p-th power of this element."""
        return FieldElement(self.ctx, self.ctx.pow_v(self.val, self.ctx.p))

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.ctx is not self.ctx:
                raise CtxMismatch(
                    f"operands from {self.ctx!r} and {other.ctx!r}")
            return other
        if isinstance(other, int):
            return self.ctx.from_int(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.add_v(self.val, other.val))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.sub_v(self.val, other.val))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.sub_v(other.val, self.val))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.mul_v(self.val, other.val))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        inv = self.ctx.inv_v(other.val)
        return FieldElement(self.ctx, self.ctx.mul_v(self.val, inv))

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        inv = self.ctx.inv_v(self.val)
        return FieldElement(self.ctx, self.ctx.mul_v(other.val, inv))

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx.neg_v(self.val))

    def __pos__(self):
        return self

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.pow_v(self.val, k))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return other.ctx is self.ctx and other.val == self.val
        if isinstance(other, int):
            return self.val == other % self.ctx.p
        return NotImplemented

    def __hash__(self):
        return hash(self.val)

    def __bool__(self):
        return self.val != 0

    def __repr__(self):
        if self.ctx.depth <= 1:
            return f"{self.ctx!r}:{element_to_text(self)}"
        return f"{self.ctx!r}:#{self.val}"


# ---------------------------------------------------------------------------
# constructors

@functools.lru_cache(maxsize=None)
def prime_field(p: int) -> FieldCtx:
    """The prime field F_p.

    Raises NotPrime for composite or negative input and PrimeTooLarge when
    p is at or above MAX_PRIME.
    """
    if not isinstance(p, int) or not _is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p >= MAX_PRIME:
        raise PrimeTooLarge(f"{p} >= {MAX_PRIME}")
    return FieldCtx(p)


_extension_cache: dict = {}


def _ctx_key(ctx: FieldCtx):
    if ctx.kind == 'prime':
        return ('p', ctx.p)
    return ('x', _ctx_key(ctx.base), ctx.modulus_vals)


def extension_field(base: FieldCtx, modulus) -> FieldCtx:
    """Extend ``base`` by a monic irreducible ``modulus``.

    ``modulus`` is a polynomial over ``base`` (a :class:`Poly <.polys.Poly>`
    or a coefficient sequence, low degree first).  The modulus must be monic
    of degree >= 1 and irreducible over ``base``; the new context sits one
    level above ``base`` and at most MAX_DEPTH levels above the prime field.
    """
    if base.depth >= MAX_DEPTH:
        raise DepthExceeded(
            f"cannot extend beyond {MAX_DEPTH} levels above the prime field")
    vals = _modulus_vals(base, modulus)
    if len(vals) < 2:
        raise NotMonic("modulus must have degree >= 1")
    if vals[-1] != 1:
        raise NotMonic("modulus must be monic")
    key = (_ctx_key(base), vals)
    ctx = _extension_cache.get(key)
    if ctx is not None:
        return ctx
    from . import polys
    mod_poly = polys.Poly(base, [FieldElement(base, v) for v in vals])
    if len(vals) > 2 and not polys.is_irreducible(mod_poly):
        raise ReducibleModulus(f"{mod_poly!r} factors over {base!r}")
    ctx = FieldCtx(base.p, base, vals)
    _extension_cache[key] = ctx
    return ctx


def _modulus_vals(base: FieldCtx, modulus) -> tuple:
    vals = getattr(modulus, 'vals', None)
    if vals is not None:
        if modulus.ctx is not base:
            raise CtxMismatch("modulus is defined over a different field")
        return tuple(vals)
    out = []
    for c in modulus:
        if isinstance(c, FieldElement):
            if c.ctx is not base:
                raise CtxMismatch("modulus coefficient from a different field")
            out.append(c.val)
        else:
            if base.kind != 'prime':
                raise CtxMismatch(
                    "integer modulus coefficients need a prime base")
            out.append(int(c) % base.p)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def finite_field(p: int, e: int = 1, modulus=None) -> FieldCtx:
    """F_{p^e}, as an extension of F_p by ``modulus``.

    With e = 1 the prime field is returned and no modulus may be given.
    With e >= 2 and no modulus, the lexicographically smallest monic
    irreducible of degree e is used (constant term most significant), so the
    result is deterministic.
    """
    base = prime_field(p)
    if e < 1:
        raise ValueError(f"extension degree must be >= 1, got {e}")
    if e == 1:
        if modulus is not None:
            raise ValueError("a modulus makes no sense for e = 1")
        return base
    if modulus is None:
        from . import polys
        modulus = polys.find_irreducible(base, e)
    vals = _modulus_vals(base, modulus)
    if len(vals) - 1 != e:
        raise ValueError(
            f"modulus degree {len(vals) - 1} does not match e = {e}")
    return extension_field(base, vals)


# ---------------------------------------------------------------------------
# embeddings and traces

def relative_degree(field: FieldCtx, sub: FieldCtx) -> int:
    """[field : sub] along the base chain; NotInTower if sub is not on it."""
    deg = 1
    cur = field
    while cur is not sub:
        if cur.kind == 'prime':
            raise NotInTower(f"{sub!r} is not a subfield on the chain of {field!r}")
        deg *= cur.degree
        cur = cur.base
    return deg


def lift(x: FieldElement, field: FieldCtx) -> FieldElement:
    """Embed x into ``field``, which must lie above x's field on one chain.

    The packed value is unchanged; only the context moves.
    """
    relative_degree(field, x.ctx)
    return FieldElement(field, x.val)


def abs_trace(x: FieldElement) -> FieldElement:
    """Trace of x down to the prime field, as a prime-field element.

    Computed as the sum of the p-power conjugates x + x^p + ... + x^(p^(m-1))
    with m the absolute degree.
    """
    ctx = x.ctx
    p = ctx.p
    acc = t = x.val
    for _ in range(ctx.total_degree - 1):
        t = ctx.pow_v(t, p)
        acc = ctx.add_v(acc, t)
    if acc >= p:
        raise AssertionError("trace escaped the prime field")
    return FieldElement(ctx.prime_ctx, acc)


def rel_trace(x: FieldElement, sub: FieldCtx) -> FieldElement:
    """Trace of x down to the subfield ``sub`` on the same base chain.

    Sums the [field : sub] conjugates x^(|sub|^i).  The result's coefficient
    vector is checked to lie in ``sub`` (its packed value is below |sub|).
    """
    ctx = x.ctx
    m = relative_degree(ctx, sub)
    s = sub.order
    acc = t = x.val
    for _ in range(m - 1):
        t = ctx.pow_v(t, s)
        acc = ctx.add_v(acc, t)
    if acc >= s:
        raise AssertionError("relative trace escaped the subfield")
    return FieldElement(sub, acc)


# ---------------------------------------------------------------------------
# text encoding

def element_to_text(x: FieldElement) -> str:
    """Comma-separated coefficient text, low degree first, full length.

    A prime-field element renders as a single integer; an element of a
    depth-1 extension of degree e renders as exactly e comma-separated
    integers ("0,0" is the zero of F_9).  Deeper towers have no text form.
    """
    ctx = x.ctx
    if ctx.depth > 1:
        raise ValueError("no text encoding for towers above depth 1")
    return ','.join(str(c) for c in ctx.decode_v(x.val))


def element_from_text(ctx: FieldCtx, text: str) -> FieldElement:
    """Parse :func:`element_to_text` output (integers are reduced mod p).

    Short vectors are padded with zero coefficients; extra coefficients are
    an error.
    """
    if ctx.depth > 1:
        raise ValueError("no text encoding for towers above depth 1")
    parts = [s.strip() for s in text.split(',')]
    try:
        digits = [int(s) % ctx.p for s in parts]
    except ValueError:
        raise ValueError(f"bad element text {text!r}") from None
    if len(digits) > ctx.degree:
        raise ValueError(
            f"{len(digits)} coefficients for a degree {ctx.degree} field")
    digits.extend([0] * (ctx.degree - len(digits)))
    return FieldElement(ctx, ctx.encode_v(digits))
