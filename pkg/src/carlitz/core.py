"""Carlitz module core: the twisted-polynomial action, exponential and
logarithm in their completed homes, factorial tables and
Bernoulli-Carlitz numbers.

Notation: A = F_q[T]; D_i = prod_{j<i} (T^{q^i} - T^{q^j}) are the
exponential denominators, L_i = prod_{1<=j<=i} (T^{q^j} - T) the
logarithm ones, Pi(n) = prod D_i^{n_i} the Carlitz factorial over the
base-q digits of n.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import residue_field
from .laurent import LaurentSeries, RamifiedElem
from .padics import PadicCycElem
from .polynomials import MINUS_INF, Poly, RatFunc


class CarlitzTables:
    """Memoized D_i, L_i and Carlitz factorials over one base field."""

    _instances = {}

    def __new__(cls, field):
        if field not in cls._instances:
            self = object.__new__(cls)
            self.field = field
            self.q = field.order
            self._D = [Poly.one(field)]
            self._L = [Poly.one(field)]
            cls._instances[field] = self
        return cls._instances[field]

    def tq_minus(self, i):
        """T^{q^i} - T."""
        F = self.field
        cs = [0] * (self.q ** i + 1)
        cs[1] = F.neg(1)
        cs[-1] = F.add(cs[-1], 1) if len(cs) == 2 else 1
        return Poly(F, cs)

    def D(self, i):
        while len(self._D) <= i:
            k = len(self._D)
            self._D.append(self.tq_minus(k) * self._D[-1].frob_power(self.q))
        return self._D[i]

    def L(self, i):
        while len(self._L) <= i:
            k = len(self._L)
            self._L.append(self.tq_minus(k) * self._L[-1])
        return self._L[i]

    def factorial(self, n):
        """Pi(n) for n >= 0."""
        out = Poly.one(self.field)
        i = 0
        while n:
            digit = n % self.q
            if digit:
                out = out * self.D(i) ** digit
            n //= self.q
            i += 1
        return out

    def vP_D(self, i, d):
        """v_P(D_i) for irreducible P of degree d: sum of q^j over j < i
        with d | (i - j)."""
        return sum(self.q ** j for j in range(i) if (i - j) % d == 0)

    def vP_L(self, i, d):
        return i // d


class TauPoly:
    """Twisted polynomial sum c_i tau^i, coefficients in A."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        while coeffs and coeffs[-1].is_zero():
            coeffs = coeffs[:-1]
        self.field = field
        self.coeffs = tuple(coeffs)

    def __eq__(self, other):
        return isinstance(other, TauPoly) and self.coeffs == other.coeffs

    def __repr__(self):
        return "TauPoly(%r)" % (list(self.coeffs),)


def carlitz_poly(a):
    """phi_a as a TauPoly: the image of a in A{tau} under T -> T + tau.

    deg_tau phi_a = deg a, leading coefficient 1 for monic a, constant
    tau-coefficient a itself.
    """
    F = a.field
    q = F.order
    # phi_{T^j} by iterated composition with phi_T = T + tau
    powers = [[Poly.one(F)]]
    deg = int(a.degree) if a.coeffs else 0
    t_poly = Poly.x(F)
    for _ in range(deg):
        prev = powers[-1]
        nxt = [Poly.zero(F)] * (len(prev) + 1)
        for i, c in enumerate(prev):
            # (T + tau) . c tau^i = T*c tau^i + c^q tau^{i+1}
            nxt[i] = nxt[i] + c * t_poly
            nxt[i + 1] = nxt[i + 1] + c.frob_power(q)
        powers.append(nxt)
    out = [Poly.zero(F)] * (deg + 1)
    for j, aj in enumerate(a.coeffs):
        if aj:
            for i, c in enumerate(powers[j]):
                out[i] = out[i] + c.scale(aj)
    return TauPoly(F, out)


def carlitz_act(a, x):
    """phi_a(x) for x in any module exposing frobq() and
    mul_scalar_poly(); a is an exact element of A."""
    phi = carlitz_poly(a)
    acc = None
    cur = x
    for i, c in enumerate(phi.coeffs):
        if not c.is_zero():
            term = cur.mul_scalar_poly(c)
            acc = term if acc is None else acc + term
        if i + 1 < len(phi.coeffs):
            cur = cur.frobq()
    if acc is None:
        return x.mul_scalar_poly(Poly.zero(a.field))
    return acc


# -- infinity-adic exponential -------------------------------------------------


def exp_eval(z, wtarget):
    """exp_C(z) for z in the ramified completion, certified to w-precision
    wtarget.  exp_C is entire: term w-valuations q^i (w(z) + (q-1) i)
    tend to infinity for every w(z), and are monotone once the inner
    factor clears 1, which is the truncation criterion below."""
    q = z.q
    tab = CarlitzTables(_base_field_of(z))
    wz = z.wval()
    if wz is None:
        return z.truncate_w(wtarget)
    window = max(wtarget, 0) // (q - 1) + 8
    acc = None
    cur = z
    i = 0
    while True:
        term_w = (q ** i) * (wz + (q - 1) * i)
        if i > 0 and term_w >= wtarget and wz + (q - 1) * i >= 1:
            break
        if i == 0:
            term = cur
        else:
            Di = tab.D(i)
            dinv = LaurentSeries.from_poly(
                _embed_poly(Di, z.field), window + int(Di.degree) + 4).inv()
            term = cur.mul_laurent(dinv)
        acc = term if acc is None else acc + term
        cur = cur.frobq()
        i += 1
    return acc.truncate_w(wtarget)


def _base_field_of(z):
    # Carlitz data lives over F_q; z's coefficients are either F_q itself
    # or a residue field extending it
    if z.field.order == z.q:
        return z.field
    assert z.field.base is not None and z.field.base.order == z.q
    return z.field.base


def _embed_poly(p, field):
    if p.field is field or p.field == field:
        return p
    # F_q coefficients embed into a residue field as ints < q
    return Poly(field, list(p.coeffs))


# -- P-adic exponential and logarithm ------------------------------------------


def padic_exp(z, tables=None):
    """exp_{C,P}(z) for z in m^2 inside the completed cyclotomic ring.

    The result is certified modulo P^prec for the input's coordinate
    precision: exp_C is F_q-linear, so a representative off by m^{L prec}
    perturbs the value by exp of that error, which has the same
    valuation.  Internally the terms are computed with padded precision
    to absorb the D_i divisions.
    """
    return _padic_orbit_sum(z, kind="exp", tables=tables)


def padic_log(z, tables=None):
    """log_{C,P}(z) = sum (-1)^i z^{q^i} / L_i on m^2; same convergence
    and certification story as padic_exp (v_P(L_i) = floor(i/d))."""
    return _padic_orbit_sum(z, kind="log", tables=tables)


def _padic_orbit_sum(z, kind, tables=None):
    ring = z.ring
    ctx = ring.ctx
    q, d, L = ctx.q, ctx.d, ring.L
    tab = tables or CarlitzTables(ctx.field)
    vz = z.vm()
    if vz is None:
        return z
    if vz < 2:
        raise ValueError("argument must lie in m^2, got v_m = %d" % vz)
    target = z.mprec()
    # collect term indices: stop once q^i (v_m(z) - 1) clears the target,
    # since L * v_P(denominator_i) <= q^i for both D_i and L_i
    idxs = [0]
    i = 1
    while (q ** i) * (vz - 1) < target:
        idxs.append(i)
        i += 1
    pad = 0
    for i in idxs:
        pad = max(pad, tab.vP_D(i, d) if kind == "exp" else tab.vP_L(i, d))
    work = PadicCycElem(ring, z.coords, z.prec + pad)
    acc = None
    cur = work
    minus_one = Poly.const(ctx.field, ctx.field.neg(1))
    for i in idxs:
        if i == 0:
            term = cur
        else:
            den = tab.D(i) if kind == "exp" else tab.L(i)
            term = cur.div_scalar_poly(den)
            if kind == "log" and i % 2 == 1:
                term = term.mul_scalar_poly(minus_one)
        acc = term if acc is None else acc + term
        if i + 1 <= idxs[-1]:
            cur = cur.frobq()
    return acc.truncate(z.prec)


# -- Bernoulli-Carlitz numbers -------------------------------------------------


@dataclass
class BCValue:
    """Bernoulli-Carlitz data at index n: BC'_n from X/exp_C(X) and
    BC_n = BC'_n * Pi(n)."""
    n: int
    bc_prime: RatFunc
    bc: RatFunc

    def is_zero(self):
        return self.bc_prime.is_zero()


class _BCFactored:
    """Streaming BC'_n with factored denominators prod D_i^{e_i}.

    Keeps numerators unreduced; gcd work happens only when a value is
    exported.  Zero values have literally zero numerators, so vanishing
    checks are free.
    """

    def __init__(self, field):
        self.field = field
        self.q = field.order
        self.tab = CarlitzTables(field)
        self.vals = [(Poly.one(field), ())]  # BC'_0 = 1

    def extend(self, n_max):
        F, q = self.field, self.q
        while len(self.vals) <= n_max:
            N = len(self.vals)  # computing BC'_N via coefficient of X^{N+1}
            M = N + 1
            terms = []
            i = 1
            while q ** i <= M:
                num, evec = self.vals[M - q ** i]
                if num.coeffs:
                    terms.append((i, num, evec))
                i += 1
            if not terms:
                base = Poly.one(F) if M == 1 else Poly.zero(F)
                self.vals.append((base, ()))
                continue
            # common denominator: componentwise max of evec + 1_i
            width = max(max(len(ev), i + 1) for i, _, ev in terms)
            tgt = [0] * width
            for i, _, ev in terms:
                for j, e in enumerate(ev):
                    need = e + (1 if j == i else 0)
                    tgt[j] = max(tgt[j], need)
                if len(ev) <= i:
                    tgt[i] = max(tgt[i], 1)
            acc = Poly.zero(F)
            for i, num, ev in terms:
                mult = Poly.one(F)
                for j in range(width):
                    have = (ev[j] if j < len(ev) else 0) + (1 if j == i else 0)
                    gap = tgt[j] - have
                    if gap:
                        mult = mult * self.tab.D(j) ** gap
                acc = acc + num * mult
            if M == 1:
                # delta term with denominator prod D^tgt
                delta = Poly.one(F)
                for j, e in enumerate(tgt):
                    delta = delta * self.tab.D(j) ** e
                acc = delta - acc
            else:
                acc = -acc
            while tgt and tgt[-1] == 0:
                tgt.pop()
            self.vals.append((acc, tuple(tgt)))

    def raw(self, n):
        self.extend(n)
        return self.vals[n]

    def ratfunc(self, n):
        num, evec = self.raw(n)
        if num.is_zero():
            return RatFunc.zero(self.field)
        den = Poly.one(self.field)
        for j, e in enumerate(evec):
            if e:
                den = den * self.tab.D(j) ** e
        return RatFunc(num, den)


_bc_streams = {}


def _bc_stream_for(field):
    if field not in _bc_streams:
        _bc_streams[field] = _BCFactored(field)
    return _bc_streams[field]


def bc_exact(n, field, work_limit=512):
    """BCValue at index n by the exact recurrence from exp_C's defining
    identity.  Coefficient growth is unchecked; work_limit guards the
    index rather than the arithmetic."""
    if n > work_limit:
        raise ValueError("index %d beyond work limit %d" % (n, work_limit))
    stream = _bc_stream_for(field)
    bcp = stream.ratfunc(n)
    pi_n = CarlitzTables(field).factorial(n)
    return BCValue(n, bcp, bcp * RatFunc.from_poly(pi_n))


def bc_stream_mod_P(P, n_max):
    """Residues of BC'_0..BC'_{n_max} in A/PA.

    Valid for n_max <= q^d - 2: the recurrence only involves D_i with
    i < d, all P-units in that range.  Runs in O(n_max * d) field ops.
    """
    F = residue_field(P)
    Fq = P.field
    q = Fq.order
    d = int(P.degree)
    if n_max > q ** d - 2:
        raise ValueError("streaming recurrence needs n_max <= q^d - 2")
    # D_i mod P = prod_{j<i} (theta^{q^i} - theta^{q^j})
    theta_pows = [F.theta]
    for _ in range(d):
        theta_pows.append(F.pow(theta_pows[-1], q))
    dinv = [1]
    for i in range(1, d):
        val = 1
        for j in range(i):
            val = F.mul(val, F.sub(theta_pows[i], theta_pows[j]))
        dinv.append(F.inv(val))
    out = [1]  # BC'_0
    qpow = [q ** i for i in range(d)]
    for N in range(2, n_max + 2):
        acc = 0
        for i in range(1, d):
            if qpow[i] > N:
                break
            prev = out[N - qpow[i]]
            if prev:
                acc = F.add(acc, F.mul(prev, dinv[i]))
        out.append(F.neg(acc))
    return out


def bc_is_zero_index(n, q):
    """(q-1) | n fails exactly when BC_n = 0 (n > 0)."""
    return n > 0 and n % (q - 1) != 0
