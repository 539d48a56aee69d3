"""Arithmetic in small finite fields GF(q), q = p^m.

Elements are plain ints in range(q): the base-p encoding of the residue
polynomial's coefficient vector, lowest degree first (so for GF(4) with
modulus 1+x+x^2 the element codes are 0, 1, alpha=2, alpha+1=3).  All
arithmetic is table driven; tables for desk-scale q build instantly.
"""

from __future__ import annotations

from itertools import product


class FieldError(ValueError):
    """Bad field construction or misuse of field arithmetic."""


_MAX_Q = 512  # table-driven ceiling; desk-scale instances need q <= 81


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _trim(coeffs):
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mod(a, mod, p):
    """Remainder of a by monic mod, coefficients low degree first."""
    a = [x % p for x in a]
    deg_m = len(mod) - 1
    for i in range(len(a) - 1, deg_m - 1, -1):
        f = a[i]
        if f:
            for j in range(deg_m + 1):
                a[i - deg_m + j] = (a[i - deg_m + j] - f * mod[j]) % p
    return a[:deg_m]


def _poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def is_irreducible(modulus, p):
    """Trial division by every monic polynomial of degree <= deg/2."""
    mod = _trim(modulus)
    deg = len(mod) - 1
    if deg < 1 or mod[-1] != 1:
        return False
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for tail in product(range(p), repeat=d):
            divisor = list(tail) + [1]
            if not any(_poly_mod(mod, divisor, p)):
                return False
    return True


# Monic irreducible moduli, coefficients low degree first, covering every
# prime power p^m <= 81 with m > 1.  Re-verified irreducible whenever the
# corresponding field is constructed.
DEFAULT_MODULI = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 0, 0, 0, 1),
    (3, 2): (2, 1, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 1, 0, 0, 1),
    (5, 2): (1, 1, 1),
    (7, 2): (3, 1, 1),
}


class FieldCtx:
    """GF(p^m) with precomputed operation tables.

    Immutable; equality and hashing are by (p, m, modulus), so two
    contexts built the same way are interchangeable.
    """

    __slots__ = ("p", "m", "q", "modulus", "add_t", "sub_t", "mul_t",
                 "neg_t", "inv_t", "_key")

    def __init__(self, p, m=1, modulus=None):
        if not _is_prime(p):
            raise FieldError("characteristic %r is not prime" % (p,))
        if m < 1:
            raise FieldError("extension degree must be >= 1")
        q = p ** m
        if q > _MAX_Q:
            raise FieldError("q = %d exceeds table-driven limit %d" % (q, _MAX_Q))
        if modulus is None:
            if m == 1:
                modulus = (0, 1)
            else:
                try:
                    modulus = DEFAULT_MODULI[(p, m)]
                except KeyError:
                    raise FieldError("no built-in modulus for GF(%d^%d); "
                                     "supply one" % (p, m))
        modulus = tuple(x % p for x in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise FieldError("modulus must be monic of degree %d" % m)
        if m > 1 and not is_irreducible(modulus, p):
            raise FieldError("modulus %r is reducible over GF(%d)" % (modulus, p))
        self.p, self.m, self.q, self.modulus = p, m, q, modulus
        self._key = (p, m, modulus)
        self._build_tables()

    def _build_tables(self):
        p, m, q = self.p, self.m, self.q
        if m == 1:
            self.add_t = [[(a + b) % p for b in range(p)] for a in range(p)]
            self.sub_t = [[(a - b) % p for b in range(p)] for a in range(p)]
            self.mul_t = [[(a * b) % p for b in range(p)] for a in range(p)]
            self.neg_t = [(-a) % p for a in range(p)]
            self.inv_t = [0] + [pow(a, p - 2, p) for a in range(1, p)]
            return
        coeffs = [self.coeffs(a) for a in range(q)]
        enc = self.encode
        self.add_t = [[enc([(x + y) % p for x, y in zip(ca, cb)])
                       for cb in coeffs] for ca in coeffs]
        self.sub_t = [[enc([(x - y) % p for x, y in zip(ca, cb)])
                       for cb in coeffs] for ca in coeffs]
        self.neg_t = [enc([(-x) % p for x in ca]) for ca in coeffs]
        mul_t = []
        for ca in coeffs:
            row = []
            for cb in coeffs:
                prod_c = _poly_mod(_poly_mul(list(ca), list(cb), p),
                                   list(self.modulus), p)
                row.append(enc(prod_c))
            mul_t.append(row)
        self.mul_t = mul_t
        inv_t = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if mul_t[a][b] == 1:
                    inv_t[a] = b
                    break
            else:
                raise FieldError("no inverse for element %d; modulus reducible?" % a)
        self.inv_t = inv_t

    # -- element codecs ---------------------------------------------------

    def coeffs(self, a):
        """Coefficient tuple of element code a, low degree first, length m."""
        out = []
        for _ in range(self.m):
            out.append(a % self.p)
            a //= self.p
        return tuple(out)

    def encode(self, coeffs):
        a = 0
        for c in reversed(list(coeffs)):
            a = a * self.p + (c % self.p)
        return a

    # -- arithmetic on element codes --------------------------------------

    def add(self, a, b):
        return self.add_t[a][b]

    def sub(self, a, b):
        return self.sub_t[a][b]

    def mul(self, a, b):
        return self.mul_t[a][b]

    def neg(self, a):
        return self.neg_t[a]

    def inv(self, a):
        if a == 0:
            raise FieldError("inversion of zero")
        return self.inv_t[a]

    def div(self, a, b):
        if b == 0:
            raise FieldError("division by zero")
        return self.mul_t[a][self.inv_t[b]]

    def elements(self):
        """All q elements, zero first, in element-code order."""
        return range(self.q)

    def nonzero(self):
        return range(1, self.q)

    # -- text form ---------------------------------------------------------

    def parse_element(self, text):
        text = text.strip()
        if ":" in text:
            cs = [int(x) for x in text.split(":")]
            if len(cs) > self.m:
                raise FieldError("element %r has too many coefficients" % text)
            cs += [0] * (self.m - len(cs))
            return self.encode(cs)
        v = int(text)
        if not 0 <= v < self.q:
            raise FieldError("element %r out of range for GF(%d)" % (text, self.q))
        return v

    def format_element(self, a):
        if self.m == 1:
            return str(a)
        return ":".join(str(c) for c in self.coeffs(a))

    # -- field spec strings: "q=p^m[:modulus-coeffs]" ----------------------

    @classmethod
    def from_order(cls, q, modulus=None):
        p = 2
        while q % p:
            p += 1
        m = 0
        t = q
        while t > 1 and t % p == 0:
            t //= p
            m += 1
        if t != 1:
            raise FieldError("%d is not a prime power" % q)
        return cls(p, m, modulus)

    @classmethod
    def from_spec(cls, spec):
        spec = spec.strip()
        if spec.startswith("q="):
            spec = spec[2:]
        if ":" in spec:
            qs, ms = spec.split(":", 1)
            modulus = [int(x) for x in ms.split(",")]
        else:
            qs, modulus = spec, None
        if "^" in qs:
            p, m = (int(x) for x in qs.split("^"))
            return cls(p, m, modulus)
        return cls.from_order(int(qs), modulus)

    def spec(self):
        if self.m == 1:
            return "q=%d" % self.q
        return "q=%d:%s" % (self.q, ",".join(str(c) for c in self.modulus))

    # -- identity ----------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return "GF(%d)" % self.q


class FieldElement:
    """Operator wrapper over (ctx, code) for callers wanting infix arithmetic."""

    __slots__ = ("ctx", "code")

    def __init__(self, ctx, code):
        if not 0 <= code < ctx.q:
            raise FieldError("element code %r out of range" % (code,))
        self.ctx = ctx
        self.code = code

    def _peer(self, other):
        if not isinstance(other, FieldElement):
            raise FieldError("cannot mix FieldElement with %r" % (other,))
        if other.ctx != self.ctx:
            raise FieldError("operands from different fields")
        return other.code

    def __add__(self, other):
        return FieldElement(self.ctx, self.ctx.add(self.code, self._peer(other)))

    def __sub__(self, other):
        return FieldElement(self.ctx, self.ctx.sub(self.code, self._peer(other)))

    def __mul__(self, other):
        return FieldElement(self.ctx, self.ctx.mul(self.code, self._peer(other)))

    def __truediv__(self, other):
        return FieldElement(self.ctx, self.ctx.div(self.code, self._peer(other)))

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx.neg(self.code))

    def inv(self):
        return FieldElement(self.ctx, self.ctx.inv(self.code))

    def __eq__(self, other):
        return (isinstance(other, FieldElement) and other.ctx == self.ctx
                and other.code == self.code)

    def __hash__(self):
        return hash((self.ctx, self.code))

    def __repr__(self):
        return "FieldElement(GF(%d), %s)" % (self.ctx.q, self.ctx.format_element(self.code))
