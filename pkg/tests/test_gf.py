import itertools

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from wittorsion import gf
from wittorsion.errors import (
    DegreeOutOfRange,
    DivisionByZero,
    FieldMismatch,
    FieldTooLarge,
    NotPrime,
    ReducibleModulus,
)


# naive oracle: coefficient lists mod (p, modulus), no tables
def naive_mul(a, b, modulus, p):
    k = len(modulus) - 1
    prod = [0] * (2 * k - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] += x * y
    for d in range(len(prod) - 1, k - 1, -1):
        c = prod[d] % p
        if c:
            for i, m in enumerate(modulus):
                prod[d - k + i] -= c * m
    return tuple(x % p for x in prod[:k])


def naive_add(a, b, p):
    return tuple((x + y) % p for x, y in zip(a, b))


FIELDS = [(7, 1), (7, 2), (5, 2), (5, 3), (3, 4), (7, 3), (11, 2)]


@pytest.mark.parametrize("p,k", FIELDS)
@settings(max_examples=200, deadline=None)
@given(data=st.data())
def test_arithmetic_matches_naive(p, k, data):
    F = gf.make_field(p, k)
    i = data.draw(st.integers(0, F.q - 1))
    j = data.draw(st.integers(0, F.q - 1))
    a, b = F.element(i), F.element(j)
    assert (a + b).coeffs == naive_add(a.coeffs, b.coeffs, p)
    assert (a * b).coeffs == naive_mul(a.coeffs, b.coeffs, F.modulus, p)
    assert (a - b) + b == a
    if b:
        assert (a / b) * b == a


@pytest.mark.parametrize("p,k", [(p, k) for p in (3, 5, 7, 11, 13) for k in (1, 2, 3, 4) if p**k <= 30000])
def test_default_modulus_is_smallest_irreducible(p, k):
    x = sympy.Symbol("x")
    want = None
    for low in itertools.product(range(p), repeat=k):
        expr = sum(c * x**i for i, c in enumerate(low)) + x**k
        if sympy.Poly(expr, x, modulus=p).is_irreducible:
            want = low + (1,)
            break
    assert gf.make_field(p, k).modulus == want


def test_frozen_moduli():
    assert gf.make_field(7, 2).modulus == (1, 0, 1)
    assert gf.make_field(5, 2).modulus == (1, 1, 1)
    assert gf.make_field(7, 3).modulus == (1, 0, 1, 1)
    assert gf.make_field(7, 4).modulus == (1, 0, 0, 1, 1)
    assert gf.make_field(5, 4).modulus == (1, 0, 1, 1, 1)


def test_small_examples():
    F7 = gf.make_field(7)
    assert F7(3) + F7(5) == F7(1)
    assert gf.inv(F7(3)) == F7(5)
    F49 = gf.make_field(7, 2, (1, 0, 1))
    t = F49.gen
    assert t * t == F49(6)
    assert gf.frobenius(t) == -t
    assert gf.frobenius(gf.frobenius(t)) == t
    assert gf.frobenius(F7(3)) == F7(3)
    assert gf.sqrt(F7(2)) == F7(3)
    assert gf.sqrt(F7(3)) is None
    assert gf.sqrt(F49.zero) == F49.zero
    assert gf.power(F7(3), -1) == F7(5)


def test_element_strings():
    F49 = gf.make_field(7, 2)
    assert str(F49.zero) == "0"
    assert str(F49.gen) == "1*t"
    assert str(F49([3, 2])) == "3+2*t"
    assert str(F49(4)) == "4"
    F = gf.make_field(5, 3)
    assert str(F([1, 0, 2])) == "1+2*t^2"
    assert str(gf.make_field(7)(6)) == "6"


def test_enumeration_order():
    assert [e.index for e in gf.enumerate_field(gf.make_field(7))] == list(range(7))
    els = gf.enumerate_field(gf.make_field(7, 2))
    assert len(els) == 49 and all(e.in_prime_field() for e in els[:7])
    assert not any(e.in_prime_field() for e in els[7:])
    assert len(gf.enumerate_field(gf.make_field(5, 2))) == 25


@pytest.mark.parametrize("p,k", [(7, 1), (3, 2), (5, 2), (3, 3), (7, 2)])
def test_exhaustive_axioms(p, k):
    F = gf.make_field(p, k)
    els = gf.enumerate_field(F)
    for a, b in itertools.product(els, repeat=2):
        assert a + b == b + a and a * b == b * a
        assert (a + b).frobenius() == a.frobenius() + b.frobenius()
        assert (a * b).frobenius() == a.frobenius() * b.frobenius()
    # full triples are cheap up to q = 49 (117649 of them)
    for a, b, c in itertools.product(els, repeat=3):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
    for a in els:
        assert a**F.q == a
        if a:
            assert a ** (F.q - 1) == F.one
            assert a * a.inverse() == F.one


@pytest.mark.parametrize("p,k", [(7, 1), (7, 2), (5, 2), (5, 3), (5, 4), (3, 4)])
def test_square_roots(p, k):
    F = gf.make_field(p, k)
    els = gf.enumerate_field(F)
    squares = set()
    for a in els:
        s = a.sqrt()
        if s is not None:
            assert s * s == a
            assert s == next(b for b in els if b * b == a)
            squares.add(a)
    assert len(squares) == (F.q - 1) // 2 + 1


def test_embed_restrict():
    F7, F49, F2401 = gf.make_field(7), gf.make_field(7, 2), gf.make_field(7, 4)
    for a in gf.enumerate_field(F49):
        b = gf.embed(a, F2401)
        assert gf.restrict(b, F49) == a
        for c in (F49.gen, F49([2, 5])):
            assert gf.embed(a * c, F2401) == b * gf.embed(c, F2401)
            assert gf.embed(a + c, F2401) == b + gf.embed(c, F2401)
    assert gf.restrict(gf.embed(F7(3), F49), F7) == F7(3)
    with pytest.raises(ValueError):
        gf.restrict(F49.gen, F7)
    with pytest.raises(FieldMismatch):
        gf.embed(F49.gen, gf.make_field(7, 3))


def test_errors():
    for bad in (2, 9, 1, 101):
        with pytest.raises(NotPrime):
            gf.make_field(bad)
    with pytest.raises(DegreeOutOfRange):
        gf.make_field(7, 5)
    with pytest.raises(DegreeOutOfRange):
        gf.make_field(7, 0)
    with pytest.raises(ReducibleModulus):
        gf.make_field(7, 2, (-1, 0, 1))
    with pytest.raises(ReducibleModulus):
        gf.make_field(5, 2, (1, 0, 1))
    F7, F5 = gf.make_field(7), gf.make_field(5)
    with pytest.raises(FieldMismatch):
        gf.add(F7(1), F5(1))
    with pytest.raises(FieldMismatch):
        F7(1) * F5(1)
    with pytest.raises(DivisionByZero):
        gf.inv(F7.zero)
    with pytest.raises(DivisionByZero):
        F7(1) / 0
    with pytest.raises(FieldTooLarge):
        gf.check_size(10**6 + 1)


def test_ceiling_read_at_call_time(monkeypatch):
    monkeypatch.setattr(gf, "FIELD_SIZE_CEILING", 30)
    with pytest.raises(FieldTooLarge):
        gf.enumerate_field(gf.make_field(7, 2))
    assert len(gf.enumerate_field(gf.make_field(5, 2))) == 25


def test_json():
    assert gf.make_field(7, 2).to_json() == {"p": 7, "k": 2, "modulus": [1, 0, 1]}
