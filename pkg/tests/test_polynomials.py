import pytest
from hypothesis import given, settings, strategies as st

from carlitz.fields import make_field, residue_field
from carlitz.polynomials import (MINUS_INF, Poly, RatFunc, format_poly,
                                 monic_irreducibles, monic_polys, parse_poly,
                                 rat_reduce_mod_P)

F2 = make_field(2)
F3 = make_field(3)


def rand_poly(field, max_deg):
    return st.lists(st.integers(0, field.order - 1), max_size=max_deg + 1).map(
        lambda cs: Poly(field, cs))


def test_zero_degree_sentinel():
    z = Poly.zero(F3)
    assert z.degree is MINUS_INF
    assert z.degree < 0
    assert z.degree < -10 ** 9
    assert (z * Poly.x(F3)).degree is MINUS_INF


def test_parse_and_format_roundtrip():
    for s in ["T^2+T+1", "T^3+T+1", "2*T^3+T^2+2", "T+1", "1", "T^9+2*T^6+2*T^4+2*T^3+2*T^2+1"]:
        F = F2 if "2" not in s else F3
        p = parse_poly(s, F)
        assert parse_poly(format_poly(p), F) == p


def test_parse_extension_coeffs():
    F9 = make_field(3, 2)
    p = parse_poly("g^2*T+g", F9)
    g = F9.gen()
    assert p.coeffs == (g, F9.pow(g, 2))


def test_parse_minus():
    p = parse_poly("T^2-1", F3)
    assert p.coeffs == (2, 0, 1)


def test_divmod_exact():
    a = parse_poly("T^5+2*T^2+1", F3)
    b = parse_poly("T^2+1", F3)
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


@settings(max_examples=60)
@given(rand_poly(F3, 6), rand_poly(F3, 4))
def test_divmod_property(a, b):
    if b.is_zero():
        return
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


@settings(max_examples=60)
@given(rand_poly(F3, 5), rand_poly(F3, 5), rand_poly(F3, 5))
def test_ring_axioms(a, b, c):
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert (a + b) + c == a + (b + c)


@settings(max_examples=40)
@given(rand_poly(F2, 6), rand_poly(F2, 6))
def test_xgcd(a, b):
    g, s, t = a.xgcd(b)
    assert s * a + t * b == g
    if not a.is_zero():
        assert (a % g).is_zero()


def test_numpy_fast_path_agrees():
    # force both paths on the same product
    a = Poly(F3, [i % 3 for i in range(1, 60)])
    b = Poly(F3, [(2 * i + 1) % 3 for i in range(1, 55)])
    big = a * b  # numpy path (len sum > cutoff)
    slow = Poly.zero(F3)
    for i, c in enumerate(a.coeffs):
        slow = slow + (b.scale(c)).shift(i)
    assert big == slow


def test_frob_power():
    a = parse_poly("T^2+2*T+1", F3)
    assert a.frob_power(3) == a * a * a


def test_monic_irreducibles_count():
    # #monic irreducibles over F_2: deg1:2, deg2:1, deg3:2, deg4:3
    by_deg = {}
    for f in monic_irreducibles(F2, 4):
        by_deg.setdefault(int(f.degree), []).append(f)
    assert [len(by_deg[d]) for d in (1, 2, 3, 4)] == [2, 1, 2, 3]


def test_is_irreducible_degree9():
    p = parse_poly("T^9+2*T^6+2*T^4+2*T^3+2*T^2+1", F3)
    assert p.is_irreducible()
    assert not (p * parse_poly("T+1", F3)).is_irreducible()


def test_ratfunc_arithmetic():
    a = RatFunc(parse_poly("T", F3), parse_poly("T^2+1", F3))
    b = RatFunc(parse_poly("1", F3), parse_poly("T", F3))
    s = a + b
    assert s.num == parse_poly("2*T^2+1", F3)
    assert s.den == parse_poly("T^3+T", F3)
    assert (a * a.inv()) == RatFunc.one(F3)
    assert (a - a).is_zero()


def test_ratfunc_reduction():
    n = parse_poly("T^2+2*T+1", F3)  # (T+1)^2
    d = parse_poly("T^2+1", F3) * parse_poly("T+1", F3)
    r = RatFunc(n, d)
    assert r.num == parse_poly("T+1", F3)
    assert r.den == parse_poly("T^2+1", F3)


def test_rat_reduce_mod_P_hom():
    P = parse_poly("T^2+1", F3)
    F = residue_field(P)
    a = RatFunc(parse_poly("T^3+2", F3), parse_poly("T+1", F3))
    b = RatFunc(parse_poly("T", F3), parse_poly("T^2+T+2", F3))
    ra, rb = rat_reduce_mod_P(a, F), rat_reduce_mod_P(b, F)
    assert rat_reduce_mod_P(a * b, F) == F.mul(ra, rb)
    assert rat_reduce_mod_P(a + b, F) == F.add(ra, rb)


def test_rat_reduce_mod_P_clears_common_P_powers():
    P = parse_poly("T^2+1", F3)
    F = residue_field(P)
    a = RatFunc(parse_poly("T", F3), parse_poly("T+1", F3))
    blown = RatFunc(a.num * P, a.den * P, reduce=False)
    assert rat_reduce_mod_P(blown, F) == rat_reduce_mod_P(a, F)


def test_rat_reduce_mod_P_pole_raises():
    P = parse_poly("T^2+1", F3)
    F = residue_field(P)
    r = RatFunc(Poly.one(F3), P)
    with pytest.raises(ZeroDivisionError):
        rat_reduce_mod_P(r, F)


def test_monic_polys_enumeration():
    ms = list(monic_polys(F2, 3))
    assert len(ms) == 8
    assert all(m.is_monic() and m.degree == 3 for m in ms)
