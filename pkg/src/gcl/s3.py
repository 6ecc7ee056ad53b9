"""Local data of (mu_3 x| Z/2)- and S_3-covers, triple covers, surface invariants.

A cover datum is the 12-tuple (a,b,c,d,e,f, omega, A,B,C,D, m) over an exact
ring: beta on the rank-2 piece is y^2 -> ay+bz, yz -> cy+dz, z^2 -> ey+fz,
alpha is the matrix ((A,B),(C,D)), omega the pairing and m the norm.
"""
from __future__ import annotations

from dataclasses import dataclass, fields
from fractions import Fraction
from typing import Any, Mapping

from .errors import CharTwo, InconsistentInputs, InvalidInput, TraceNotZero
from .rings import QQ, CoefficientRing

PARAMS = ("a", "b", "c", "d", "e", "f", "omega", "A", "B", "C", "D", "m")


@dataclass(frozen=True)
class S3CoverData:
    ring: CoefficientRing
    a: Any
    b: Any
    c: Any
    d: Any
    e: Any
    f: Any
    omega: Any
    A: Any
    B: Any
    C: Any
    D: Any
    m: Any

    @classmethod
    def make(cls, ring: CoefficientRing, **params) -> "S3CoverData":
        unknown = set(params) - set(PARAMS)
        if unknown:
            raise InvalidInput(f"unknown parameters {sorted(unknown)}")
        return cls(ring, **{k: ring(params.get(k, 0)) for k in PARAMS})

    def values(self) -> dict[str, Any]:
        return {k: getattr(self, k) for k in PARAMS}

    def to_json(self) -> dict:
        return {"ring": self.ring.to_json(), "params": {k: self.ring.format(v) for k, v in self.values().items()}}


@dataclass(frozen=True)
class TripleCoverData:
    """delta(y^3) = -b, delta(y^2 z) = a, delta(y z^2) = c, delta(z^3) = e."""

    ring: CoefficientRing
    a: Any
    b: Any
    c: Any
    e: Any

    @classmethod
    def make(cls, ring: CoefficientRing, a=0, b=0, c=0, e=0) -> "TripleCoverData":
        return cls(ring, ring(a), ring(b), ring(c), ring(e))

    def to_json(self) -> dict:
        return {
            "ring": self.ring.to_json(),
            "params": {k: self.ring.format(getattr(self, k)) for k in ("a", "b", "c", "e")},
        }


@dataclass(frozen=True)
class SurfaceNumbers:
    KY2: Fraction = Fraction(0)
    c1sq: Fraction = Fraction(0)
    c1K: Fraction = Fraction(0)
    c2: Fraction = Fraction(0)
    D2: Fraction = Fraction(0)
    DK: Fraction = Fraction(0)
    chiOY: Fraction = Fraction(0)
    pgY: Fraction = Fraction(0)
    h2F: Fraction = Fraction(0)
    h2LD: Fraction = Fraction(0)

    def __post_init__(self):
        for fld in fields(self):
            object.__setattr__(self, fld.name, QQ(getattr(self, fld.name)))

    @classmethod
    def from_mapping(cls, data: Mapping[str, Any]) -> "SurfaceNumbers":
        names = {f.name for f in fields(cls)}
        bad = set(data) - names
        if bad:
            raise InvalidInput(f"unknown surface numbers {sorted(bad)}")
        return cls(**{k: QQ(v) for k, v in data.items()})


def _equations(s: S3CoverData) -> list[tuple[str, Any]]:
    a, b, c, d, e, f = s.a, s.b, s.c, s.d, s.e, s.f
    w, A, B, C, D, m = s.omega, s.A, s.B, s.C, s.D, s.m
    trA, trb1, trb2 = A + D, a + d, c + f
    return [
        ("m = A^2+BC", m - (A * A + B * C)),
        ("(A-D)(A+D) = 0", (A - D) * trA),
        ("B(A+D) = 0", B * trA),
        ("C(A+D) = 0", C * trA),
        ("omega(A+D) = 0", w * trA),
        ("2aA+bB+cC = 0", 2 * a * A + b * B + c * C),
        ("2cA+dB+eC = 0", 2 * c * A + d * B + e * C),
        ("C(a+d)+b(A+D) = 0", C * trb1 + b * trA),
        ("C(c+f)+d(A+D) = 0", C * trb2 + d * trA),
        ("B(a+d)+c(A+D) = 0", B * trb1 + c * trA),
        ("B(c+f)+e(A+D) = 0", B * trb2 + e * trA),
        ("a(A+D)-D(a+d) = 0", a * trA - D * trb1),
        ("c(A+D)-D(c+f) = 0", c * trA - D * trb2),
        ("a^2+bc = -omega C", a * a + b * c + w * C),
        ("ac+be = omega(A-D)", a * c + b * e - w * (A - D)),
        ("c^2+de = B omega", c * c + d * e - B * w),
        ("(a-d)(a+d) = 0", (a - d) * trb1),
        ("b(a+d) = 0", b * trb1),
        ("c(a+d) = 0", c * trb1),
        ("(c-f)(c+f) = 0", (c - f) * trb2),
        ("d(c+f) = 0", d * trb2),
        ("e(c+f) = 0", e * trb2),
        ("a(a+d)+b(c+f) = 0", a * trb1 + b * trb2),
        ("e(a+d)+c(c+f) = 0", e * trb1 + c * trb2),
        ("omega(a+d) = 0", w * trb1),
        ("omega(c+f) = 0", w * trb2),
    ]


def verify_s3(data: S3CoverData) -> list[str]:
    return [name for name, val in _equations(data) if val != 0]


def discriminant(data: S3CoverData):
    return -(data.omega * data.omega) * data.m


def is_torsor_s3(data: S3CoverData) -> bool:
    r = data.ring
    return r.is_unit(data.m) and r.is_unit(data.omega)


def component_membership(data: S3CoverData) -> dict[str, bool]:
    s = data
    main = s.A + s.D == 0 and s.a + s.d == 0 and s.c + s.f == 0
    second = all(v == 0 for v in (s.a, s.b, s.c, s.d, s.e, s.f, s.omega, s.B, s.C)) and s.A == s.D
    return {"main": main, "second": second}


def from_triple_cover(t: TripleCoverData) -> S3CoverData:
    r = t.ring
    if not r.is_unit(r(2)):
        raise CharTwo("2 is not invertible in the coefficient ring")
    half = r.inv(r(2))
    a, b, c, e = t.a, t.b, t.c, t.e
    A = (a * c + b * e) * half
    B = c * c - a * e
    C = -(a * a + b * c)
    return S3CoverData(r, a, b, c, -a, e, -c, r.one, A, B, C, -A, A * A + B * C)


def u_alpha_chart(ring: CoefficientRing, m, a, b) -> S3CoverData:
    """The chart where the off-diagonal entry C of alpha is 1."""
    m, a, b = ring(m), ring(a), ring(b)
    return S3CoverData(
        ring, a, b, -m * b, -a, m * a, m * b, m * b * b - a * a, ring.zero, m, ring.one, ring.zero, m
    )


def u_beta_chart(ring: CoefficientRing, omega, A, C) -> S3CoverData:
    """The chart where b = 1."""
    w, A, C = ring(omega), ring(A), ring(C)
    return S3CoverData(
        ring, ring.zero, ring.one, -w * C, ring.zero, 2 * w * A, w * C, w, A, w * C * C, C, -A, A * A + w * C * C * C
    )


def eta_delta(t: TripleCoverData) -> tuple:
    a, b, c, e = t.a, t.b, t.c, t.e
    return (2 * (a * a + b * c), a * c + b * e, 2 * (c * c - a * e))


def triple_discriminant(t: TripleCoverData):
    yy, yz, zz = eta_delta(t)
    return yy * zz - yz * yz


def symmetric_form(data: S3CoverData) -> tuple:
    """(y,y), (y,z), (z,z) of the pairing induced by alpha and omega."""
    return (-data.C * data.omega, data.A * data.omega, data.B * data.omega)


def quotient_by_sigma(data: S3CoverData) -> TripleCoverData:
    if data.a + data.d != 0 or data.c + data.f != 0:
        raise TraceNotZero("trace of beta is not zero")
    return TripleCoverData(data.ring, data.a, data.b, data.c, data.e)


@dataclass(frozen=True)
class SurfaceInvariants:
    KX2: Fraction
    pgX: Fraction
    chiOX: Fraction
    Y0count: int

    def to_json(self) -> dict:
        return {k: QQ.format(getattr(self, k)) for k in ("KX2", "pgX", "chiOX", "Y0count")}


def surface_invariants(s: SurfaceNumbers) -> SurfaceInvariants:
    y0 = 3 * s.c2 - Fraction(2, 3) * s.D2
    if y0.denominator != 1 or y0 < 0:
        raise InconsistentInputs(f"number of total ramification points {y0} is not a natural number")
    kx2 = 6 * s.KY2 + 6 * s.c1sq - 12 * s.c1K - Fraction(10, 3) * s.D2 - 4 * s.DK
    pg = s.pgY + 2 * s.h2F + s.h2LD
    chi = 6 * s.chiOY - 2 * s.c2 + (3 * s.c1sq - 3 * s.c1K - s.DK - s.D2) / 2
    return SurfaceInvariants(kx2, pg, chi, int(y0))


REGULAR_REPRESENTATION = dict(a=0, b=1, c=0, d=0, e=1, f=0, omega=Fraction(-1, 2), A=-1, B=0, C=0, D=1, m=1)


def regular_representation(ring: CoefficientRing = QQ) -> S3CoverData:
    return S3CoverData.make(ring, **REGULAR_REPRESENTATION)


def dual_number_datum() -> S3CoverData:
    """A solution with nonzero trace of beta over Q[eps]."""
    from .rings import DUAL, Dual

    eps = Dual(0, 1)
    vals = {k: eps for k in PARAMS}
    vals["m"] = 0
    return S3CoverData.make(DUAL, **vals)
