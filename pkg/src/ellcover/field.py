"""Exact arithmetic in prime and extension finite fields.

A field is described by ``(p, k)``: prime characteristic and extension
degree.  For ``k > 1`` elements live in ``F_p[x]/(m(x))`` where ``m`` is
the lexicographically smallest monic irreducible of degree ``k``,
coefficients compared low degree first as integers in ``[0, p)``.  This
pins a reproducible field description for every ``(p, k)`` without a
Conway-polynomial table.

Elements are immutable; every operation returns a fresh value, so field
descriptions and elements can be shared freely across workers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .errors import DomainError

# ---------------------------------------------------------------------------
# integer-tuple polynomials over F_p (internal; used for modulus arithmetic)
# ---------------------------------------------------------------------------


def _trim(c) -> tuple[int, ...]:
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return tuple(c[:n])


def _pmul(a: tuple[int, ...], b: tuple[int, ...], p: int) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _pmod(a: tuple[int, ...], m: tuple[int, ...], p: int) -> tuple[int, ...]:
    if not m:
        raise ZeroDivisionError("polynomial reduction by zero")
    r = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1] % p, p - 2, p)
    while r and len(r) - 1 >= dm:
        lead = (r[-1] * inv_lead) % p
        if lead:
            shift = len(r) - 1 - dm
            for j in range(dm + 1):
                r[shift + j] = (r[shift + j] - lead * m[j]) % p
        r.pop()
    return _trim(r)


def _ppowmod(a: tuple[int, ...], e: int, m: tuple[int, ...], p: int) -> tuple[int, ...]:
    result: tuple[int, ...] = (1,)
    base = _pmod(a, m, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), m, p)
        base = _pmod(_pmul(base, base, p), m, p)
        e >>= 1
    return result


def _pgcd(a: tuple[int, ...], b: tuple[int, ...], p: int) -> tuple[int, ...]:
    while b:
        a, b = b, _pmod(a, b, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = tuple((c * inv) % p for c in a)
    return a


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test (desk-scale n)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n by trial division."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def _is_irreducible(f: tuple[int, ...], p: int) -> bool:
    """Rabin irreducibility test for a monic f of degree >= 1 over F_p."""
    k = len(f) - 1
    x = (0, 1)
    if _ppowmod(x, p**k, f, p) != _pmod(x, f, p):
        return False
    for r in prime_factors(k):
        h = list(_ppowmod(x, p ** (k // r), f, p))
        while len(h) < 2:
            h.append(0)
        h[1] = (h[1] - 1) % p  # h - x
        if _pgcd(_trim(h), f, p) != (1,):
            return False
    return True


def _lex_least_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree k, low-degree-first lex order.

    Candidates (c_0, ..., c_{k-1}) are ordered with c_0 most significant,
    matching comparison of coefficient vectors low degree first.
    """
    for code in range(p**k):
        coeffs = []
        rem = code
        for pos in range(k - 1, -1, -1):
            digit, rem = divmod(rem, p**pos)
            coeffs.append(digit)
        f = tuple(coeffs) + (1,)
        if _is_irreducible(f, p):
            return f
    raise AssertionError("no irreducible polynomial of degree k exists")  # unreachable


# ---------------------------------------------------------------------------
# field description and elements
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FieldDesc:
    """Description of F_{p^k}; modulus present iff k > 1 (monic, low first)."""

    p: int
    k: int
    modulus: tuple[int, ...] | None

    @property
    def order(self) -> int:
        return self.p**self.k

    def zero(self) -> FieldElement:
        return FieldElement(self, (0,) * self.k)

    def one(self) -> FieldElement:
        return FieldElement(self, (1,) + (0,) * (self.k - 1))

    def gen(self) -> FieldElement:
        """Class of x for k > 1; the element 1 for prime fields."""
        if self.k == 1:
            return self.one()
        return FieldElement(self, (0, 1) + (0,) * (self.k - 2))

    def element(self, coeffs) -> FieldElement:
        c = tuple(int(v) % self.p for v in coeffs)
        if len(c) > self.k:
            if any(c[self.k :]):
                raise DomainError(f"coefficient vector longer than k={self.k}")
            c = c[: self.k]
        if len(c) < self.k:
            c = c + (0,) * (self.k - len(c))
        return FieldElement(self, c)

    def from_int(self, value: int) -> FieldElement:
        """Residue embedding of an integer (constant element)."""
        return self.element((value,))

    def from_index(self, index: int) -> FieldElement:
        """Element whose coefficients are the base-p digits of index."""
        if not 0 <= index < self.order:
            raise DomainError(f"index {index} out of range for field of order {self.order}")
        digits = []
        for _ in range(self.k):
            index, d = divmod(index, self.p)
            digits.append(d)
        return FieldElement(self, tuple(digits))

    def elements(self) -> Iterator[FieldElement]:
        """All field elements in index order (base-p digit packing)."""
        for i in range(self.order):
            yield self.from_index(i)

    def __str__(self) -> str:
        return f"F_{self.p}" if self.k == 1 else f"F_{{{self.p}^{self.k}}}"


class FieldElement:
    """Element of F_{p^k} as a coefficient vector in the power basis."""

    __slots__ = ("desc", "coeffs")

    def __init__(self, desc: FieldDesc, coeffs: tuple[int, ...]):
        self.desc = desc
        self.coeffs = coeffs

    def _check(self, other: FieldElement) -> None:
        if self.desc is not other.desc and self.desc != other.desc:
            raise DomainError(f"field mismatch: {self.desc} vs {other.desc}")

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    @property
    def index(self) -> int:
        """Base-p packing of the coefficient vector (canonical integer id)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * self.desc.p + c
        return acc

    def __add__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        p = self.desc.p
        return FieldElement(self.desc, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        p = self.desc.p
        return FieldElement(self.desc, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> FieldElement:
        p = self.desc.p
        return FieldElement(self.desc, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        desc = self.desc
        p = desc.p
        if desc.k == 1:
            return FieldElement(desc, ((self.coeffs[0] * other.coeffs[0]) % p,))
        prod = _pmul(self.coeffs, other.coeffs, p)
        red = _pmod(prod, desc.modulus, p)
        return FieldElement(desc, red + (0,) * (desc.k - len(red)))

    def __truediv__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return self * other.inverse()

    def inverse(self) -> FieldElement:
        if self.is_zero():
            raise ZeroDivisionError("division by zero field element")
        return self ** (self.desc.order - 2)

    def __pow__(self, e: int) -> FieldElement:
        if e < 0:
            return self.inverse() ** (-e)
        if self.is_zero():
            return self.desc.one() if e == 0 else self
        if self.desc.order > 2:
            e %= self.desc.order - 1  # arbitrary-precision exponents welcome
        result = self.desc.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def frobenius(self, i: int = 1) -> FieldElement:
        """i-fold Frobenius a -> a^(p^i)."""
        if i < 0:
            raise DomainError("frobenius power must be >= 0")
        return self ** (self.desc.p**i)

    def pth_root(self) -> FieldElement:
        """Inverse Frobenius (unique in a finite field): a^(p^(k-1))."""
        return self ** (self.desc.p ** (self.desc.k - 1))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FieldElement)
            and self.coeffs == other.coeffs
            and (self.desc is other.desc or self.desc == other.desc)
        )

    def __hash__(self) -> int:
        return hash((self.desc.p, self.desc.k, self.coeffs))

    def __repr__(self) -> str:
        if self.desc.k == 1:
            return str(self.coeffs[0])
        return str(list(self.coeffs))


@lru_cache(maxsize=None)
def make_field(p: int, k: int) -> FieldDesc:
    """Canonical field description for F_{p^k}; idempotent and deterministic."""
    if not isinstance(p, int) or not is_prime(p):
        raise DomainError(f"p = {p} is not prime")
    if not isinstance(k, int) or k < 1:
        raise DomainError(f"extension degree k = {k} must be >= 1")
    if k == 1:
        return FieldDesc(p, 1, None)
    return FieldDesc(p, k, _lex_least_irreducible(p, k))


def frobenius(a: FieldElement, i: int) -> FieldElement:
    """a^(p^i): the entrywise twist used for Cartier matrix products."""
    return a.frobenius(i)


def lth_power_count(c: FieldElement, l: int) -> int:
    """Number of y in F_q with y^l = c.

    Returns 1 if c = 0; otherwise, with d = gcd(l, q-1), returns d when c
    is a d-th power residue (c^((q-1)/d) = 1) and 0 otherwise.
    """
    if c.is_zero():
        return 1
    q = c.desc.order
    d = math.gcd(l, q - 1)
    test = c ** ((q - 1) // d)
    return d if test == c.desc.one() else 0
