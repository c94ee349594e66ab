"""Exact coefficient fields: Q and GF(p) for odd primes p.

Scalars are plain ints and Fractions over Q, ints in [0, p) over GF(p).
Characteristic 2 is rejected everywhere: 2 must be invertible.
"""

from fractions import Fraction

from .errors import InputError


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


class Field:
    """Q when p is None, otherwise GF(p) with p an odd prime."""

    __slots__ = ("p",)

    def __init__(self, p=None):
        if p is not None:
            if p == 2:
                raise InputError("characteristic 2 not supported: 2 must be invertible")
            if not _is_prime(p):
                raise InputError(f"modulus must be an odd prime, got {p}")
        self.p = p

    @property
    def char(self) -> int:
        return 0 if self.p is None else self.p

    @property
    def spec(self) -> str:
        return "Q" if self.p is None else f"Fp:{self.p}"

    zero = 0
    one = 1

    def normalize(self, x):
        """Canonical form: int when integral, reduced Fraction otherwise; mod p over GF(p)."""
        if self.p is not None:
            return x % self.p
        if isinstance(x, Fraction):
            return int(x) if x.denominator == 1 else x
        return x

    def is_zero(self, x) -> bool:
        return x % self.p == 0 if self.p is not None else x == 0

    def add(self, a, b):
        return self.normalize(a + b)

    def sub(self, a, b):
        return self.normalize(a - b)

    def mul(self, a, b):
        return self.normalize(a * b)

    def neg(self, a):
        return self.normalize(-a)

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero")
        if self.p is not None:
            return pow(a % self.p, self.p - 2, self.p)
        return self.normalize(Fraction(1, 1) / Fraction(a))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def from_int(self, n: int):
        return n % self.p if self.p is not None else n

    def parse(self, token: str):
        """Parse an integer or p/q coefficient token."""
        token = token.strip()
        try:
            if "/" in token:
                num, den = token.split("/", 1)
                num, den = int(num), int(den)
            else:
                num, den = int(token), 1
        except ValueError as exc:
            raise InputError(f"bad coefficient token: {token!r}") from exc
        if den == 0:
            raise InputError(f"zero denominator in coefficient: {token!r}")
        if self.p is not None:
            if den % self.p == 0:
                raise InputError(f"denominator not invertible mod {self.p}: {token!r}")
            return self.mul(num, self.inv(den))
        return self.normalize(Fraction(num, den))

    def fmt(self, x) -> str:
        x = self.normalize(x)
        if isinstance(x, Fraction):
            return f"{x.numerator}/{x.denominator}"
        return str(x)

    def __eq__(self, other):
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return f"Field({self.spec})"


def field_from_spec(spec: str) -> Field:
    """Build a field from its textual spec: "Q" or "Fp:<odd prime>"."""
    spec = spec.strip()
    if spec == "Q":
        return Field()
    if spec.startswith("Fp:"):
        try:
            p = int(spec[3:])
        except ValueError as exc:
            raise InputError(f"bad field spec: {spec!r}") from exc
        return Field(p)
    raise InputError(f"bad field spec: {spec!r} (expected Q or Fp:<odd prime>)")


QQ = Field()
