"""Exact scalar fields: prime fields GF(p) and the rationals.

Scalars are plain Python values (``int`` residues in ``[0, p)`` for GF(p),
``fractions.Fraction`` for Q).  Arithmetic is done with the ordinary
operators followed by :meth:`reduce`, which keeps values canonical so that
structural equality of elements is meaningful.
"""

from __future__ import annotations

import re
from fractions import Fraction


class FieldError(ValueError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class PrimeField:
    kind = "prime_field"

    def __init__(self, p: int):
        p = int(p)
        if not _is_prime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.zero = 0
        self.one = 1

    def __call__(self, value) -> int:
        if isinstance(value, Fraction):
            return (value.numerator * pow(value.denominator, -1, self.p)) % self.p
        return int(value) % self.p

    def reduce(self, value) -> int:
        return value % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def to_int(self, a: int) -> int:
        """Symmetric representative, used for printing signs."""
        return a if a <= self.p // 2 else a - self.p

    @property
    def name(self) -> str:
        return f"GF({self.p})"

    @property
    def token(self) -> str:
        return f"gf{self.p}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return self.name


class Rationals:
    kind = "rationals"
    characteristic = 0

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def __call__(self, value) -> Fraction:
        return Fraction(value)

    def reduce(self, value) -> Fraction:
        return Fraction(value)

    def inv(self, a) -> Fraction:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def to_int(self, a):
        return a

    @property
    def name(self) -> str:
        return "Q"

    @property
    def token(self) -> str:
        return "q"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


QQ = Rationals()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def parse_field(text: str):
    """Parse ``gf2``, ``GF(3)``, ``gf 5``, ``q``, ``Q`` or ``rationals``."""
    t = text.strip().lower().replace(" ", "")
    if t in ("q", "qq", "rationals", "rational"):
        return QQ
    m = re.fullmatch(r"(?:gf|f)\(?(\d+)\)?", t)
    if m:
        return PrimeField(int(m.group(1)))
    raise FieldError(f"unknown field {text!r}")
