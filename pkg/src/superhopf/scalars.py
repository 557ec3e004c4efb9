"""Exact scalar fields: the rationals and prime fields F_p.

Elements are plain Python objects: ``Fraction`` over Q and ``int`` in
``range(p)`` over F_p.  Intermediate sums and products may be formed with
ordinary arithmetic on ints/Fractions; ``F(x)`` brings a value back to
canonical form.
"""

from fractions import Fraction


def is_prime(p):
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class Field:
    """Q (``p == 0``) or the prime field F_p."""

    __slots__ = ("p",)

    def __init__(self, p=0):
        p = int(p)
        if p != 0 and not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        self.p = p

    @property
    def characteristic(self):
        return self.p

    @property
    def kind(self):
        return "Rationals" if self.p == 0 else "PrimeField"

    @property
    def is_rational(self):
        return self.p == 0

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "QQ" if self.p == 0 else f"GF({self.p})"

    def __call__(self, x):
        if self.p == 0:
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"{x} has no image in GF({self.p})")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def inv(self, x):
        x = self(x)
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.p == 0:
            return 1 / x
        return pow(x, -1, self.p)

    def div(self, a, b):
        return self(self(a) * self.inv(b))

    def neg(self, x):
        return self(-x)

    def clean(self, d):
        """Canonicalise the values of a sparse dict and drop zeros."""
        out = {}
        for k, v in d.items():
            v = self(v)
            if v != 0:
                out[k] = v
        return out

    def fmt(self, x):
        x = self(x)
        if self.p:
            return str(x)
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"

    def parse(self, s):
        if isinstance(s, int):
            return self(s)
        s = str(s).strip()
        return self(Fraction(s))

    def spec(self):
        return {"kind": "Q"} if self.p == 0 else {"kind": "Fp", "p": self.p}

    @classmethod
    def from_spec(cls, d):
        kind = d.get("kind")
        if kind == "Q":
            return cls(0)
        if kind == "Fp":
            return cls(d["p"])
        raise ValueError(f"unknown field kind {kind!r}")


QQ = Field(0)


def GF(p):
    return Field(p)


def sign(k):
    """(-1)**k for an integer k."""
    return -1 if k & 1 else 1
