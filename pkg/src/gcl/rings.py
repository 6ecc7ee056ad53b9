"""Exact coefficient rings: Q, F_p and the dual numbers Q[eps]/(eps^2).

Rational elements are plain ``Fraction``s; the other two rings use small
immutable element classes that mix freely with Python ints.
"""
from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .errors import InvalidInput


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


@dataclass(frozen=True)
class ModP:
    v: int
    p: int

    def _lift(self, other) -> "ModP":
        if isinstance(other, ModP):
            if other.p != self.p:
                raise InvalidInput("elements of different prime fields")
            return other
        if isinstance(other, Fraction):
            return ModP(other.numerator * pow(other.denominator, -1, self.p) % self.p, self.p)
        if isinstance(other, int):
            return ModP(other % self.p, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else ModP((self.v + o.v) % self.p, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else ModP((self.v - o.v) % self.p, self.p)

    def __rsub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else ModP((o.v - self.v) % self.p, self.p)

    def __mul__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else ModP(self.v * o.v % self.p, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return ModP(-self.v % self.p, self.p)

    def __pow__(self, k: int):
        return ModP(pow(self.v, k, self.p), self.p)

    def __eq__(self, other):
        o = self._lift(other) if isinstance(other, (int, Fraction, ModP)) else NotImplemented
        if o is NotImplemented:
            return NotImplemented
        return self.v == o.v

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"{self.v} mod {self.p}"


@dataclass(frozen=True)
class Dual:
    """a + b*eps with eps^2 = 0, rational coefficients."""

    a: Fraction
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    @staticmethod
    def _lift(other):
        if isinstance(other, Dual):
            return other
        if isinstance(other, (int, Fraction)):
            return Dual(Fraction(other))
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else Dual(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else Dual(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else Dual(o.a - self.a, o.b - self.b)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return Dual(self.a * o.a, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __neg__(self):
        return Dual(-self.a, -self.b)

    def __pow__(self, k: int):
        out = Dual(Fraction(1))
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        o = self._lift(other) if isinstance(other, (int, Fraction, Dual)) else NotImplemented
        if o is NotImplemented:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __repr__(self):
        return f"Dual({self.a}, {self.b})"


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidInput(f"cannot parse rational {text!r}") from exc


def _format_fraction(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class CoefficientRing:
    kind: str
    characteristic: int
    is_field: bool

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def __call__(self, x: Any):
        raise NotImplementedError

    def is_unit(self, x) -> bool:
        raise NotImplementedError

    def inv(self, x):
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    def format(self, x) -> str:
        raise NotImplementedError

    def to_json(self) -> dict:
        raise NotImplementedError

    def random_element(self, rng: random.Random):
        raise NotImplementedError

    def random_unit(self, rng: random.Random):
        while True:
            x = self.random_element(rng)
            if self.is_unit(x):
                return x

    def __eq__(self, other):
        return type(self) is type(other) and self.to_json() == other.to_json()

    def __hash__(self):
        return hash(tuple(sorted(self.to_json().items())))

    def __repr__(self):
        return f"{type(self).__name__}({self.to_json()})"


class Rationals(CoefficientRing):
    kind = "Q"
    characteristic = 0
    is_field = True

    def __call__(self, x):
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        raise InvalidInput(f"cannot coerce {x!r} into Q")

    def is_unit(self, x) -> bool:
        return x != 0

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("0 is not invertible")
        return 1 / Fraction(x)

    def parse(self, text: str):
        return _parse_fraction(text)

    def format(self, x) -> str:
        return _format_fraction(Fraction(x))

    def to_json(self) -> dict:
        return {"kind": "Q"}

    def random_element(self, rng):
        return Fraction(rng.randint(-9, 9), rng.randint(1, 5))


class PrimeField(CoefficientRing):
    kind = "Fp"
    is_field = True

    def __init__(self, p: int):
        if not _is_prime(int(p)):
            raise InvalidInput(f"{p} is not prime")
        self.p = int(p)
        self.characteristic = self.p

    def __call__(self, x):
        if isinstance(x, ModP):
            if x.p != self.p:
                raise InvalidInput("element of another prime field")
            return x
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, int):
            return ModP(x % self.p, self.p)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise InvalidInput(f"{x} has no image in F_{self.p}")
            return ModP(x.numerator * pow(x.denominator, -1, self.p) % self.p, self.p)
        raise InvalidInput(f"cannot coerce {x!r} into F_{self.p}")

    def is_unit(self, x) -> bool:
        return self(x).v != 0

    def inv(self, x):
        x = self(x)
        if x.v == 0:
            raise ZeroDivisionError("0 is not invertible")
        return ModP(pow(x.v, -1, self.p), self.p)

    def parse(self, text: str):
        return self(_parse_fraction(text))

    def format(self, x) -> str:
        return str(self(x).v)

    def to_json(self) -> dict:
        return {"kind": "Fp", "p": self.p}

    def random_element(self, rng):
        return ModP(rng.randrange(self.p), self.p)


class DualNumbers(CoefficientRing):
    kind = "dual"
    characteristic = 0
    is_field = False

    def __call__(self, x):
        if isinstance(x, Dual):
            return x
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, (int, Fraction)):
            return Dual(Fraction(x))
        raise InvalidInput(f"cannot coerce {x!r} into the dual numbers")

    def is_unit(self, x) -> bool:
        return self(x).a != 0

    def inv(self, x):
        x = self(x)
        if x.a == 0:
            raise ZeroDivisionError("not a unit")
        return Dual(1 / x.a, -x.b / (x.a * x.a))

    def parse(self, text: str):
        t = text.replace(" ", "")
        if "eps" not in t:
            return Dual(_parse_fraction(t))
        if not t.endswith("eps") or t.count("eps") != 1:
            raise InvalidInput(f"cannot parse dual number {text!r}")
        s = t[:-3]
        if s.endswith("*"):
            s = s[:-1]
        k = max((i for i in range(1, len(s)) if s[i] in "+-"), default=0)
        a_text, b_text = (s[:k], s[k:]) if k else ("", s)
        if b_text in ("", "+"):
            b = Fraction(1)
        elif b_text == "-":
            b = Fraction(-1)
        else:
            b = _parse_fraction(b_text)
        return Dual(_parse_fraction(a_text) if a_text else Fraction(0), b)

    def format(self, x) -> str:
        x = self(x)
        if x.b == 0:
            return _format_fraction(x.a)
        sign = "+" if x.b >= 0 else "-"
        return f"{_format_fraction(x.a)}{sign}{_format_fraction(abs(x.b))}*eps"

    def to_json(self) -> dict:
        return {"kind": "dual"}

    def random_element(self, rng):
        return Dual(Fraction(rng.randint(-5, 5), rng.randint(1, 3)), Fraction(rng.randint(-5, 5)))


QQ = Rationals()
DUAL = DualNumbers()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def ring_from_json(data: dict) -> CoefficientRing:
    kind = data.get("kind") if isinstance(data, dict) else None
    if kind == "Q":
        return QQ
    if kind == "Fp":
        return PrimeField(int(data.get("p", 0)))
    if kind == "dual":
        return DUAL
    raise InvalidInput(f"unknown ring {data!r}")


def ring_from_spec(text: str) -> CoefficientRing:
    """Parse ``q``, ``fp:7`` / ``f7`` / ``gf7`` or ``dual``."""
    t = text.strip().lower()
    if t in ("q", "qq", "rationals"):
        return QQ
    if t in ("dual", "d", "q[eps]"):
        return DUAL
    m = re.match(r"^(?:fp:?|f|gf)(\d+)$", t)
    if m:
        return PrimeField(int(m.group(1)))
    raise InvalidInput(f"unknown ring {text!r}")
