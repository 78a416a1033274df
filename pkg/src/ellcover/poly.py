"""Dense univariate polynomials over a described finite field.

Coefficients are stored low degree first with no trailing zeros, so
equality is structural and the zero polynomial is the empty vector.
"""

from __future__ import annotations

from typing import Iterable

from .errors import DomainError
from .field import FieldDesc, FieldElement

NEG_INF = float("-inf")


class Polynomial:
    __slots__ = ("desc", "coeffs")

    def __init__(self, desc: FieldDesc, coeffs: Iterable[FieldElement] = ()):
        cs = list(coeffs)
        for c in cs:
            if c.desc != desc:
                raise DomainError("polynomial coefficient from a different field")
        while cs and cs[-1].is_zero():
            cs.pop()
        self.desc = desc
        self.coeffs = tuple(cs)

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, desc: FieldDesc) -> Polynomial:
        return cls(desc, ())

    @classmethod
    def one(cls, desc: FieldDesc) -> Polynomial:
        return cls(desc, (desc.one(),))

    @classmethod
    def x(cls, desc: FieldDesc) -> Polynomial:
        return cls(desc, (desc.zero(), desc.one()))

    @classmethod
    def from_ints(cls, desc: FieldDesc, ints: Iterable[int]) -> Polynomial:
        return cls(desc, [desc.from_int(v) for v in ints])

    @classmethod
    def from_roots(cls, desc: FieldDesc, roots: Iterable[FieldElement]) -> Polynomial:
        out = cls.one(desc)
        for r in roots:
            out = out * cls(desc, (-r, desc.one()))
        return out

    # -- basic structure --------------------------------------------------

    @property
    def degree(self):
        """len - 1, or -inf for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> FieldElement:
        if not self.coeffs:
            raise DomainError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.desc.one()

    def coeff(self, i: int) -> FieldElement:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.desc.zero()

    def _check(self, other: Polynomial) -> None:
        if self.desc != other.desc:
            raise DomainError("polynomials over different fields")

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: Polynomial) -> Polynomial:
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self.desc, [self.coeff(i) + other.coeff(i) for i in range(n)])

    def __sub__(self, other: Polynomial) -> Polynomial:
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self.desc, [self.coeff(i) - other.coeff(i) for i in range(n)])

    def __neg__(self) -> Polynomial:
        return Polynomial(self.desc, [-c for c in self.coeffs])

    def __mul__(self, other: Polynomial) -> Polynomial:
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Polynomial.zero(self.desc)
        out = [self.desc.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial(self.desc, out)

    def scale(self, c: FieldElement) -> Polynomial:
        return Polynomial(self.desc, [c * a for a in self.coeffs])

    def shift(self, n: int) -> Polynomial:
        """Multiply by x^n."""
        if self.is_zero() or n == 0:
            return self
        return Polynomial(self.desc, (self.desc.zero(),) * n + self.coeffs)

    def __pow__(self, n: int) -> Polynomial:
        if n < 0:
            raise DomainError("polynomial power must be >= 0")
        result = Polynomial.one(self.desc)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: Polynomial) -> tuple[Polynomial, Polynomial]:
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dv = other.coeffs
        dd = len(dv) - 1
        inv_lead = dv[-1].inverse()
        quot = [self.desc.zero()] * max(0, len(rem) - dd)
        while rem and len(rem) - 1 >= dd:
            f = rem[-1] * inv_lead
            pos = len(rem) - 1 - dd
            quot[pos] = f
            for j in range(dd + 1):
                rem[pos + j] = rem[pos + j] - f * dv[j]
            while rem and rem[-1].is_zero():
                rem.pop()
        return Polynomial(self.desc, quot), Polynomial(self.desc, rem)

    def __mod__(self, other: Polynomial) -> Polynomial:
        return divmod(self, other)[1]

    def __floordiv__(self, other: Polynomial) -> Polynomial:
        return divmod(self, other)[0]

    def monic(self) -> Polynomial:
        if self.is_zero():
            return self
        return self.scale(self.coeffs[-1].inverse())

    def derivative(self) -> Polynomial:
        desc = self.desc
        out = []
        for i in range(1, len(self.coeffs)):
            mult = desc.from_int(i)
            out.append(mult * self.coeffs[i])
        return Polynomial(desc, out)

    def __call__(self, point: FieldElement) -> FieldElement:
        """Horner evaluation."""
        if point.desc != self.desc:
            raise DomainError("evaluation point from a different field")
        acc = self.desc.zero()
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    # -- identity ------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Polynomial) and self.desc == other.desc and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.desc, self.coeffs))

    def __repr__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            term = repr(c) if i == 0 else (f"{c!r}*x^{i}" if i > 1 else f"{c!r}*x")
            parts.append(term)
        return " + ".join(parts)


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic greatest common divisor by Euclid's algorithm."""
    f._check(g)
    while not g.is_zero():
        f, g = g, f % g
    return f.monic()


def is_squarefree(f: Polynomial) -> bool:
    """True iff f has no repeated factor.

    Defined via gcd(f, f') = 1.  A p-th-power factor only escapes f' when
    f' = 0, which is therefore treated as not squarefree (for deg >= 1).
    Nonzero constants are squarefree.
    """
    if f.is_zero():
        raise DomainError("squarefreeness of the zero polynomial is undefined")
    if f.degree == 0:
        return True
    d = f.derivative()
    if d.is_zero():
        return False
    return poly_gcd(f, d).degree == 0


def roots_in_field(f: Polynomial) -> list[FieldElement]:
    """All roots of f in its field of definition, in index order.

    Exhaustive evaluation; fine at desk scale (q enumerable by contract).
    """
    if f.is_zero():
        raise DomainError("every element is a root of the zero polynomial")
    return [a for a in f.desc.elements() if f(a).is_zero()]
