"""Finite fields with int-encoded elements.

An element of a field with ``p**e`` elements is a plain int in
``range(p**e)`` encoding the coefficient vector of its polynomial
representative in base ``p`` (constant digit first).  Extension fields
keep eager log/exp tables whenever the order fits in memory, so
multiplication and inversion are table lookups.
"""

from __future__ import annotations

import functools

TABLE_LIMIT = 1 << 20


def _trial_factor(n):
    """Prime factors of n (small n, trial division)."""
    out = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out.append(m)
    return out


class FiniteField:
    """A finite field; either a prime field or an extension of one.

    Public attributes:
      p        characteristic
      e        degree over the prime field
      order    number of elements
      base     base field (None for prime fields)
      modulus  tuple of base-field ints, monic, length deg+1 (None for prime)
    """

    def __init__(self, p):
        # prime field constructor; use .extension() for the rest
        if p < 2 or any(p % r == 0 for r in range(2, int(p ** 0.5) + 1)):
            raise ValueError("p must be prime, got %r" % (p,))
        self.p = p
        self.e = 1
        self.order = p
        self.base = None
        self.modulus = None
        self.deg_over_base = 1
        self._exp = None
        self._log = None
        if p <= TABLE_LIMIT:
            self._build_tables()

    @classmethod
    def extension(cls, base, modulus):
        """Extension of `base` by a monic irreducible `modulus`.

        `modulus` is a tuple of base-field ints, constant term first,
        leading coefficient 1.  Irreducibility is the caller's problem;
        residue_field() and make_field() both check it.
        """
        self = object.__new__(cls)
        m = len(modulus) - 1
        if m < 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree >= 1")
        self.p = base.p
        self.e = base.e * m
        self.order = base.order ** m
        self.base = base
        self.modulus = tuple(modulus)
        self.deg_over_base = m
        self._exp = None
        self._log = None
        if self.order <= TABLE_LIMIT:
            self._build_tables()
        return self

    # -- element encoding -------------------------------------------------

    def digits(self, x):
        """Base-field digit vector of x, length deg_over_base."""
        if self.base is None:
            return (x,)
        b = self.base.order
        out = []
        for _ in range(self.deg_over_base):
            out.append(x % b)
            x //= b
        return tuple(out)

    def from_digits(self, ds):
        if self.base is None:
            return ds[0] % self.p
        b = self.base.order
        x = 0
        for d in reversed(ds):
            x = x * b + d
        return x

    def gen(self):
        """Residue class of the modulus variable (prime fields: 1)."""
        if self.base is None:
            return 1 % self.p
        return self.base.order if self.deg_over_base > 1 else self.neg(self.modulus[0])

    # -- arithmetic --------------------------------------------------------

    def add(self, a, b):
        if self.base is None:
            return (a + b) % self.p
        bb = self.base.order
        x, y, out, mult = a, b, 0, 1
        for _ in range(self.deg_over_base):
            out += self.base.add(x % bb, y % bb) * mult
            x //= bb
            y //= bb
            mult *= bb
        return out

    def neg(self, a):
        if self.base is None:
            return (-a) % self.p
        bb = self.base.order
        x, out, mult = a, 0, 1
        for _ in range(self.deg_over_base):
            out += self.base.neg(x % bb) * mult
            x //= bb
            mult *= bb
        return out

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        if self._log is not None:
            return self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]
        if self.base is None:
            return (a * b) % self.p
        return self._mul_poly(a, b)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        if self._log is not None:
            return self._exp[(-self._log[a]) % (self.order - 1)]
        return self.pow(a, self.order - 2)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n):
        n = int(n)
        if a == 0:
            if n < 0:
                raise ZeroDivisionError("inverse of 0")
            return 0 if n else 1
        if self._log is not None:
            return self._exp[(self._log[a] * n) % (self.order - 1)]
        n %= self.order - 1
        r, b = 1, a
        while n:
            if n & 1:
                r = self.mul(r, b)
            b = self.mul(b, b)
            n >>= 1
        return r

    def _mul_poly(self, a, b):
        # schoolbook product of digit vectors, reduced mod the modulus
        base = self.base
        m = self.deg_over_base
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * m - 1)
        for i, ca in enumerate(da):
            if ca == 0:
                continue
            for j, cb in enumerate(db):
                if cb:
                    prod[i + j] = base.add(prod[i + j], base.mul(ca, cb))
        # modulus is monic: x^m = -(lower part)
        red = [base.neg(c) for c in self.modulus[:-1]]
        for k in range(2 * m - 2, m - 1, -1):
            c = prod[k]
            if c:
                prod[k] = 0
                for j, r in enumerate(red):
                    if r:
                        prod[k - m + j] = base.add(prod[k - m + j], base.mul(c, r))
        return self.from_digits(prod[:m])

    def _build_tables(self):
        n = self.order
        if n == 2:
            self._exp, self._log = [1], [None, 0]
            return
        fac = _trial_factor(n - 1)
        g = None
        for cand in range(1, n):
            if cand == 0:
                continue
            if all(self._pow_slow(cand, (n - 1) // f) != 1 for f in fac):
                g = cand
                break
        assert g is not None, "no generator found"
        exp = [0] * (n - 1)
        log = [None] * n
        x = 1
        for k in range(n - 1):
            exp[k] = x
            log[x] = k
            x = (x * g) % self.p if self.base is None else self._mul_poly(x, g)
        self._exp, self._log = exp, log

    def _pow_slow(self, a, n):
        r, b = 1, a
        mul = (lambda u, v: (u * v) % self.p) if self.base is None else self._mul_poly
        while n:
            if n & 1:
                r = mul(r, b)
            b = mul(b, b)
            n >>= 1
        return r

    # -- misc ---------------------------------------------------------------

    def elements(self):
        return range(self.order)

    def units(self):
        return range(1, self.order)

    def mult_order(self, a):
        if a == 0:
            raise ValueError("0 has no multiplicative order")
        if self._log is not None:
            from math import gcd
            return (self.order - 1) // gcd(self._log[a], self.order - 1)
        n = self.order - 1
        for f in sorted(_trial_factor(n)):
            while n % f == 0 and self.pow(a, n // f) == 1:
                n //= f
        return n

    def fmt(self, x):
        """Render an element: prime -> int, extension -> g^j / 0 / 1."""
        if self.base is None or x < self.base.order:
            return str(x)
        if self._log is not None:
            return "g^%d" % self._log[x]
        return "#%d" % x

    def __repr__(self):
        if self.base is None:
            return "GF(%d)" % self.p
        return "GF(%d^%d)" % (self.p, self.e)

    def __eq__(self, other):
        return (isinstance(other, FiniteField)
                and self.p == other.p and self.e == other.e
                and self.modulus == other.modulus
                and (self.base == other.base))

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))


# ---------------------------------------------------------------------------


def _poly_irreducible_over_prime(p, coeffs):
    """Irreducibility over GF(p) by trial division, degree <= deg/2 divisors."""
    deg = len(coeffs) - 1
    if deg == 1:
        return True

    def pdiv(num, den):
        # remainder of num by monic den over GF(p)
        num = list(num)
        dd = len(den) - 1
        for k in range(len(num) - 1, dd - 1, -1):
            c = num[k]
            if c:
                num[k] = 0
                for j in range(dd):
                    num[k - dd + j] = (num[k - dd + j] - c * den[j]) % p
        while num and num[-1] == 0:
            num.pop()
        return num

    # all monic polys of degree up to deg // 2, filtered to irreducibles
    irreds = []
    for d in range(1, deg // 2 + 1):
        for code in range(p ** d):
            cand, x = [], code
            for _ in range(d):
                cand.append(x % p)
                x //= p
            cand.append(1)
            if any(not pdiv(cand, f) for f in irreds if len(f) - 1 <= d // 2):
                continue
            if not pdiv(coeffs, cand):
                return False
            irreds.append(cand)
    return True


@functools.cache
def make_field(p, e=1):
    """GF(p^e) with the lexicographically least monic irreducible modulus.

    Candidate moduli are ordered by their integer encoding (constant digit
    first, base p).  e == 1 gives the prime field itself.
    """
    if e == 1:
        return FiniteField(p)
    prime = make_field(p)
    for code in range(p ** e):
        cand, x = [], code
        for _ in range(e):
            cand.append(x % p)
            x //= p
        cand.append(1)
        if _poly_irreducible_over_prime(p, cand):
            return FiniteField.extension(prime, tuple(cand))
    raise AssertionError("unreachable: no irreducible of degree %d" % e)


@functools.cache
def residue_field(P):
    """A/PA for a monic irreducible P in F_q[T].

    Returns a FiniteField extension of P's coefficient field; the class
    of T is field.theta.  Elements embed F_q as ints < q.  Cached: the
    same P always hands back the same field object (and its tables).
    """
    from .polynomials import Poly
    if not isinstance(P, Poly):
        raise TypeError("P must be a Poly")
    if not P.is_monic():
        raise ValueError("P must be monic")
    if not P.is_irreducible():
        raise ValueError("P must be irreducible")
    F = FiniteField.extension(P.field, P.coeffs)
    d = P.degree
    F.theta = P.field.order if d > 1 else F.neg(P.coeffs[0])
    F.P = P
    return F


def frobenius_orbits(q, d):
    """Orbits of n -> q*n on Z/(q^d - 1), sorted by least element.

    These index the Frobenius orbits of characters of (A/PA)^* for an
    irreducible P of degree d.
    """
    L = q ** d - 1
    seen = [False] * L
    orbits = []
    for n0 in range(L):
        if seen[n0]:
            continue
        orb, n = [], n0
        while not seen[n]:
            seen[n] = True
            orb.append(n)
            n = (n * q) % L
        orbits.append(tuple(orb))
    return orbits
