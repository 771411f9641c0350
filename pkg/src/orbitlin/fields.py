"""Exact scalar fields: the rationals, prime fields, and the four-element field.

Elements are plain Python values (``Fraction`` for the rationals, ``int``
residues otherwise); a field object supplies the arithmetic.
"""
from __future__ import annotations

from fractions import Fraction


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


class Rationals:
    name = "q"
    characteristic = 0
    order = None
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, x) -> Fraction:
        return Fraction(x)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def div(self, a, b):
        return a * self.inv(b)

    def fmt(self, a) -> str:
        return str(a)

    def parse(self, text) -> Fraction:
        return Fraction(str(text))

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Rationals()"


class PrimeField:
    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.order = p
        self.name = f"p:{p}"
        self.zero = 0
        self.one = 1 % p

    def __call__(self, x) -> int:
        if isinstance(x, Fraction):
            return self.div(x.numerator % self.p, x.denominator % self.p)
        return int(x) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def elements(self):
        return list(range(self.p))

    def fmt(self, a) -> str:
        return str(a)

    def parse(self, text) -> int:
        return self(Fraction(str(text)))

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


class GF4:
    """The field with four elements, encoded 0, 1, 2=x, 3=x+1 modulo x^2+x+1."""

    characteristic = 2
    order = 4
    name = "gf4"
    zero = 0
    one = 1
    _MUL = (
        (0, 0, 0, 0),
        (0, 1, 2, 3),
        (0, 2, 3, 1),
        (0, 3, 1, 2),
    )
    _INV = (None, 1, 3, 2)

    def __call__(self, x) -> int:
        x = int(x)
        if x not in (0, 1, 2, 3):
            # integers embed through the prime subfield
            return x % 2
        return x

    def add(self, a, b):
        return a ^ b

    sub = add

    def mul(self, a, b):
        return self._MUL[a][b]

    def neg(self, a):
        return a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._INV[a]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def elements(self):
        return [0, 1, 2, 3]

    def fmt(self, a) -> str:
        return str(a)

    def parse(self, text) -> int:
        return int(text)

    def __eq__(self, other):
        return isinstance(other, GF4)

    def __hash__(self):
        return hash("GF4")

    def __repr__(self):
        return "GF4()"


QQ = Rationals()


def finite_field(q: int):
    """Field of order ``q`` for the symplectic suite (q in 2, 3, 4, 5)."""
    if q == 4:
        return GF4()
    if _is_prime(q):
        return PrimeField(q)
    raise ValueError(f"no shipped field of order {q}")


def parse_field(selector: str):
    """Parse a CLI field selector: ``q`` or ``p:<prime>``."""
    selector = selector.strip().lower()
    if selector in ("q", "qq", "rationals"):
        return QQ
    if selector.startswith("p:"):
        p = int(selector[2:])
        if p > 97:
            raise ValueError("prime fields are shipped for p <= 97")
        return PrimeField(p)
    if selector == "gf4":
        return GF4()
    raise ValueError(f"unknown field selector {selector!r}")
