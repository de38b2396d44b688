import pytest
from fractions import Fraction
from hypothesis import given, settings, strategies as st

from swcalc.laurent import (LaurentPoly, VarBasis, exact_div, is_symmetric,
                            parse_poly, try_exact_div)
from swcalc.errors import (BasisMismatch, DivisionByZero, InexactDivision,
                           InvalidParameters, ParseError, UnknownVariable)

T = VarBasis(("t",))
ET = VarBasis(("e1", "t"))


def tpoly(*pairs):
    return LaurentPoly.from_terms(T, [({"t": e}, c) for e, c in pairs])


def _poly_strategy(basis):
    exp = st.integers(min_value=-8, max_value=8)
    coeff = st.integers(min_value=-9, max_value=9)
    vec = st.tuples(*([exp] * len(basis)))
    return st.dictionaries(vec, coeff, max_size=6).map(
        lambda d: LaurentPoly(basis, d))


polys_t = _poly_strategy(T)
polys_et = _poly_strategy(ET)


class TestConstruction:
    def test_zero_terms_dropped(self):
        p = LaurentPoly(T, {(2,): 0, (4,): 3})
        assert len(p) == 1 and p.coefficient({"t": 2}) == 3

    def test_accumulation_cancels(self):
        p = LaurentPoly.from_terms(T, [({"t": 1}, 2), ({"t": 1}, -2)])
        assert p.is_zero()

    def test_half_exponents(self):
        p = LaurentPoly.monomial(T, {"t": Fraction(1, 2)})
        assert str(p) == "t^(1/2)"
        assert p.support() == [(Fraction(1, 2),)]

    def test_quarter_exponent_rejected(self):
        with pytest.raises(InvalidParameters):
            LaurentPoly.monomial(T, {"t": Fraction(1, 4)})

    def test_noninteger_coefficient_rejected(self):
        with pytest.raises(InvalidParameters):
            LaurentPoly(T, {(0,): 1.5})

    def test_bad_variable_name(self):
        with pytest.raises(UnknownVariable):
            VarBasis(("2bad",))

    def test_duplicate_basis(self):
        with pytest.raises(BasisMismatch):
            VarBasis(("t", "t"))

    def test_immutable(self):
        p = tpoly((1, 1))
        with pytest.raises(AttributeError):
            p.basis = T


class TestArithmetic:
    @settings(max_examples=200)
    @given(polys_t, polys_t, polys_t)
    def test_ring_axioms_univariate(self, a, b, c):
        zero = LaurentPoly.zero(T)
        one = LaurentPoly.one(T)
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert a + zero == a
        assert a - a == zero
        assert a * one == a
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c

    @settings(max_examples=100)
    @given(polys_et, polys_et, polys_et)
    def test_ring_axioms_multivariate(self, a, b, c):
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)

    def test_basis_mismatch(self):
        with pytest.raises(BasisMismatch):
            tpoly((1, 1)) + LaurentPoly.one(ET)

    def test_power(self):
        p = tpoly((1, 1), (-1, -1))
        assert p ** 0 == LaurentPoly.one(T)
        assert p ** 3 == p * p * p

    def test_negative_power_of_monomial(self):
        m = LaurentPoly.monomial(T, {"t": 2})
        assert m ** -2 == LaurentPoly.monomial(T, {"t": -4})

    def test_negative_power_of_sum_rejected(self):
        with pytest.raises(InexactDivision):
            tpoly((1, 1), (0, 1)) ** -1

    @settings(max_examples=200)
    @given(polys_t)
    def test_eval_at_one_is_coefficient_sum(self, p):
        assert p.eval_at_one() == sum(c for _, c in p.terms())


class TestStructural:
    @settings(max_examples=200)
    @given(polys_t)
    def test_invert_twice_is_identity(self, p):
        assert p.invert_variables().invert_variables() == p

    @settings(max_examples=200)
    @given(polys_t, st.integers(min_value=1, max_value=4),
           st.integers(min_value=1, max_value=4))
    def test_substitute_power_composes(self, p, k, m):
        assert (p.substitute_power("t", k).substitute_power("t", m)
                == p.substitute_power("t", k * m))

    @settings(max_examples=200)
    @given(polys_t, st.integers(min_value=1, max_value=5))
    def test_substitute_power_preserves_eval(self, p, k):
        assert p.substitute_power("t", k).eval_at_one() == p.eval_at_one()

    def test_substitute_negative_power(self):
        p = tpoly((2, 3), (0, 1))
        assert p.substitute_power("t", -1) == tpoly((-2, 3), (0, 1))

    def test_substitute_zero_rejected(self):
        with pytest.raises(InvalidParameters):
            tpoly((1, 1)).substitute_power("t", 0)

    def test_rename_and_extend(self):
        p = tpoly((1, 2))
        q = p.rename({"t": "s"})
        assert q.basis == VarBasis(("s",))
        r = p.extended(ET)
        assert r.coefficient({"t": 1}) == 2 and r.basis == ET

    def test_dropped(self):
        p = LaurentPoly.monomial(ET, {"t": 3}, 2)
        assert p.dropped(["e1"]).basis == T
        q = LaurentPoly.monomial(ET, {"e1": 1})
        with pytest.raises(BasisMismatch):
            q.dropped(["e1"])

    def test_is_symmetric(self):
        assert is_symmetric(tpoly((1, 1), (0, -1), (-1, 1)))
        assert is_symmetric(tpoly((1, 1), (-1, -1)), sign=-1)
        assert not is_symmetric(tpoly((1, 1), (0, 1), (2, 1)))
        p = LaurentPoly.from_terms(ET, [({"e1": 1, "t": 1}, 1),
                                        ({"e1": -1, "t": 1}, 1)])
        assert is_symmetric(p, variables=["e1"])
        assert not is_symmetric(p)


class TestDivision:
    @settings(max_examples=300)
    @given(polys_t, polys_t)
    def test_roundtrip(self, a, b):
        if b.is_zero():
            return
        q = exact_div(a * b, b)
        assert q == a

    @settings(max_examples=100)
    @given(polys_et, polys_et)
    def test_roundtrip_multivariate(self, a, b):
        if b.is_zero():
            return
        assert exact_div(a * b, b) == a

    def test_divide_by_zero(self):
        with pytest.raises(DivisionByZero):
            exact_div(tpoly((1, 1)), LaurentPoly.zero(T))

    def test_inexact_coefficients(self):
        with pytest.raises(InexactDivision):
            exact_div(tpoly((0, 3)), tpoly((0, 2)))

    def test_inexact_structure(self):
        # 1 / (t - t^-1) has no Laurent polynomial quotient
        with pytest.raises(InexactDivision):
            exact_div(LaurentPoly.one(T), tpoly((1, 1), (-1, -1)))

    def test_try_exact_div(self):
        assert try_exact_div(LaurentPoly.one(T), tpoly((1, 1), (-1, -1))) is None
        assert try_exact_div(tpoly((2, 1)), tpoly((1, 1))) == tpoly((1, 1))

    def test_sinh_quotient(self):
        num = tpoly((6, 1), (-6, -1))
        den = tpoly((2, 1), (-2, -1))
        assert exact_div(num, den) == tpoly((4, 1), (0, 1), (-4, 1))


class TestParsePrint:
    def test_canonical_forms(self):
        cases = [
            "t^4 + t^2 + 1 + t^-2 + t^-4",
            "t - 1 + t^-1",
            "-t + 3 - t^-1",
            "2t - 3 + 2t^-1",
            "t^(1/2) - t^(-1/2)",
            "0",
            "1",
            "-1",
            "7",
        ]
        for text in cases:
            assert str(parse_poly(text, T)) == text

    def test_multivariate_print(self):
        p = LaurentPoly.from_terms(ET, [({"e1": 1, "t": -1}, 3),
                                        ({"e1": -1}, -1)])
        assert str(p) == "3e1 t^-1 - e1^-1"

    @settings(max_examples=300)
    @given(polys_t)
    def test_roundtrip_univariate(self, p):
        assert parse_poly(str(p), T) == p

    @settings(max_examples=200)
    @given(polys_et)
    def test_roundtrip_multivariate(self, p):
        assert parse_poly(str(p), ET) == p

    def test_inferred_basis_is_sorted(self):
        p = parse_poly("t e1 + 1")
        assert p.basis == VarBasis(("e1", "t"))

    def test_explicit_basis_unknown_variable(self):
        with pytest.raises(UnknownVariable):
            parse_poly("s + 1", T)

    def test_parse_errors_carry_position(self):
        with pytest.raises(ParseError) as exc:
            parse_poly("t^", T)
        assert exc.value.pos is not None
        with pytest.raises(ParseError):
            parse_poly("t + + 1", T)
        with pytest.raises(ParseError):
            parse_poly("", T)

    def test_half_exponent_forms(self):
        assert parse_poly("t^(1/2)", T) == LaurentPoly.monomial(
            T, {"t": Fraction(1, 2)})
        assert parse_poly("t^(-3/2)", T) == LaurentPoly.monomial(
            T, {"t": Fraction(-3, 2)})
        with pytest.raises(ParseError):
            parse_poly("t^(1/3)", T)
