from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from gcl.errors import CharTwo, InconsistentInputs, TraceNotZero
from gcl.rings import DUAL, GF, QQ, Dual
from gcl.s3 import (
    S3CoverData,
    SurfaceNumbers,
    TripleCoverData,
    component_membership,
    discriminant,
    dual_number_datum,
    eta_delta,
    from_triple_cover,
    is_torsor_s3,
    quotient_by_sigma,
    regular_representation,
    surface_invariants,
    symmetric_form,
    triple_discriminant,
    u_alpha_chart,
    u_beta_chart,
    verify_s3,
)

F7 = GF(7)
rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
f7 = st.integers(0, 6).map(F7)


def sympy_system(p):
    """The local equation system written out again, as sympy expressions that must vanish."""
    a, b, c, d, e, f, w, A, B, C, D, m = (p[k] for k in ("a", "b", "c", "d", "e", "f", "omega", "A", "B", "C", "D", "m"))
    ta, t1, t2 = A + D, a + d, c + f
    return [
        m - A ** 2 - B * C, (A - D) * ta, B * ta, C * ta, w * ta,
        2 * a * A + b * B + c * C, 2 * c * A + d * B + e * C,
        C * t1 + b * ta, C * t2 + d * ta, B * t1 + c * ta, B * t2 + e * ta,
        a * ta - D * t1, c * ta - D * t2,
        a ** 2 + b * c + w * C, a * c + b * e - w * (A - D), c ** 2 + d * e - B * w,
        (a - d) * t1, b * t1, c * t1, (c - f) * t2, d * t2, e * t2,
        a * t1 + b * t2, e * t1 + c * t2, w * t1, w * t2,
    ]


def as_sympy(data):
    return {k: sympy.sympify(v) for k, v in data.items()}


def test_charts_symbolically():
    m, a, b, w, A, C, c, e = sympy.symbols("m a b w A C c e")
    ua = dict(a=a, b=b, c=-m * b, d=-a, e=m * a, f=m * b, omega=m * b ** 2 - a ** 2, A=0, B=m, C=1, D=0, m=m)
    ub = dict(a=0, b=1, c=-w * C, d=0, e=2 * w * A, f=w * C, omega=w, A=A, B=w * C ** 2, C=C, D=-A, m=A ** 2 + w * C ** 3)
    uw = dict(a=a, b=b, c=c, d=-a, e=e, f=-c, omega=1, A=(a * c + b * e) / 2, B=c ** 2 - a * e,
              C=-(a ** 2 + b * c), D=-(a * c + b * e) / 2)
    uw["m"] = uw["A"] ** 2 + uw["B"] * uw["C"]
    for chart in (ua, ub, uw):
        assert all(sympy.expand(x) == 0 for x in sympy_system(as_sympy(chart)))


def test_regular_representation():
    reg = regular_representation()
    assert verify_s3(reg) == []
    assert is_torsor_s3(reg)
    assert discriminant(reg) == Fraction(-1, 4)
    assert component_membership(reg) == {"main": True, "second": False}
    assert quotient_by_sigma(reg) == TripleCoverData.make(QQ, 0, 1, 0, 1)


def test_dual_number_datum():
    dn = dual_number_datum()
    assert verify_s3(dn) == []
    assert dn.m == DUAL.zero and dn.a + dn.d != DUAL.zero
    assert not is_torsor_s3(dn)
    assert component_membership(dn) == {"main": False, "second": False}
    with pytest.raises(TraceNotZero):
        quotient_by_sigma(dn)


def test_small_examples():
    pt = S3CoverData.make(QQ, b=1)
    assert verify_s3(pt) == []
    second = S3CoverData.make(QQ, A=1, D=1, m=1)
    assert verify_s3(second) == []
    assert component_membership(second) == {"main": False, "second": True}
    assert is_torsor_s3(u_beta_chart(QQ, 1, 1, 0))
    ua = u_alpha_chart(QQ, 0, 0, 0)
    assert verify_s3(ua) == [] and ua.C == 1
    assert all(v == 0 for k, v in ua.values().items() if k != "C")
    ub = u_beta_chart(QQ, 1, 0, 0)
    assert verify_s3(ub) == []
    assert {k: v for k, v in ub.values().items() if v} == {"b": 1, "omega": 1}


def test_violations_are_named():
    bad = S3CoverData.make(QQ, A=1, m=0)
    assert "m = A^2+BC" in verify_s3(bad)
    assert "(A-D)(A+D) = 0" in verify_s3(bad)


def test_triple_cover_examples():
    t = TripleCoverData.make(QQ, 0, 1, 0, 1)
    s = from_triple_cover(t)
    assert (s.A, s.B, s.C, s.m, s.omega) == (Fraction(1, 2), 0, 0, Fraction(1, 4), 1)
    assert verify_s3(s) == []
    assert eta_delta(t) == (0, 1, 0) and triple_discriminant(t) == -1
    z = from_triple_cover(TripleCoverData.make(QQ))
    assert z.omega == 1 and all(v == 0 for k, v in z.values().items() if k != "omega")
    assert eta_delta(TripleCoverData.make(QQ)) == (0, 0, 0)
    assert is_torsor_s3(s)
    with pytest.raises(CharTwo):
        from_triple_cover(TripleCoverData.make(GF(2), 1, 0, 0, 1))


def test_surface_invariant_examples():
    zero = surface_invariants(SurfaceNumbers())
    assert (zero.KX2, zero.pgX, zero.chiOX, zero.Y0count) == (0, 0, 0, 0)
    one = surface_invariants(SurfaceNumbers(KY2=1, chiOY=1))
    assert (one.KX2, one.chiOX, one.Y0count) == (6, 6, 0)
    assert surface_invariants(SurfaceNumbers(c2=1, D2=3)).Y0count == 1
    with pytest.raises(InconsistentInputs):
        surface_invariants(SurfaceNumbers(c2=1, D2=2))
    with pytest.raises(InconsistentInputs):
        surface_invariants(SurfaceNumbers(D2=3))


@given(rationals, rationals, rationals)
def test_u_alpha_closure_q(m, a, b):
    s = u_alpha_chart(QQ, m, a, b)
    assert verify_s3(s) == [] and component_membership(s)["main"]


@given(f7, f7, f7)
def test_u_alpha_closure_f7(m, a, b):
    s = u_alpha_chart(F7, m, a, b)
    assert verify_s3(s) == [] and component_membership(s)["main"]


@given(rationals, rationals, rationals)
def test_u_beta_closure_q(w, A, C):
    s = u_beta_chart(QQ, w, A, C)
    assert verify_s3(s) == [] and component_membership(s)["main"]
    assert is_torsor_s3(s) == QQ.is_unit(discriminant(s))


@given(f7, f7, f7)
def test_u_beta_closure_f7(w, A, C):
    s = u_beta_chart(F7, w, A, C)
    assert verify_s3(s) == [] and component_membership(s)["main"]
    assert is_torsor_s3(s) == F7.is_unit(discriminant(s))


@given(st.sampled_from([QQ, F7]), st.lists(rationals, min_size=4, max_size=4))
def test_triple_round_trip(ring, vals):
    if ring is F7:
        vals = [int(v.numerator) for v in vals]
    t = TripleCoverData.make(ring, *vals)
    s = from_triple_cover(t)
    assert verify_s3(s) == [] and component_membership(s)["main"]
    assert quotient_by_sigma(s) == t
    assert triple_discriminant(t) == 4 * discriminant(s)
    assert eta_delta(t) == tuple(2 * x for x in symmetric_form(s))


@given(st.integers(-3, 3), st.integers(-3, 3))
def test_dual_number_unit_test(x, y):
    s = S3CoverData.make(DUAL, **{"m": Dual(x, y), "A": 0, "omega": Dual(1, 0)})
    assert is_torsor_s3(s) == (x != 0)


@given(st.builds(SurfaceNumbers, **{k: rationals for k in ("KY2", "c1sq", "c1K", "DK", "chiOY", "pgY", "h2F", "h2LD")},
                 c2=st.integers(0, 9), D2=st.integers(0, 9).map(lambda k: 3 * k)))
def test_surface_formulas(s):
    if 3 * s.c2 - Fraction(2, 3) * s.D2 < 0:
        with pytest.raises(InconsistentInputs):
            surface_invariants(s)
        return
    out = surface_invariants(s)
    assert out.KX2 == 6 * s.KY2 + 6 * s.c1sq - 12 * s.c1K - Fraction(10, 3) * s.D2 - 4 * s.DK
    assert out.pgX == s.pgY + 2 * s.h2F + s.h2LD
    assert 2 * out.chiOX == 12 * s.chiOY - 4 * s.c2 + 3 * s.c1sq - 3 * s.c1K - s.DK - s.D2
