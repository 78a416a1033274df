"""Zeta-function p-rank oracle for cyclic covers of the projective line.

Counts points of y^l = prod (x - alpha_j)^(a_j) over the extension fields
F_{q^i} for i = 1..g by exhaustive enumeration, assembles the numerator of
the zeta function through Newton's identities plus the functional
equation, and reads the p-rank off as the degree of its reduction mod p.
Everything is exact integer arithmetic; the only geometry encoded by hand
is the fiber structure: one point over each branch point, gcd(l, q^i - 1)
points over any other value (and over infinity, where the cover is
unramified because the inertia generators sum to zero and the branch
product is monic).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cartier import TriellipticCurve
from .errors import ConsistencyError, DomainError
from .field import FieldDesc, FieldElement, is_prime, lth_power_count, make_field
from .moduli import InertiaType
from .poly import Polynomial, roots_in_field
from .enumfield import enumerated_field

DEFAULT_ENUM_CAP = 1 << 24
OVERCOUNT_LIMIT = 1 << 22


@dataclass(frozen=True)
class CyclicCover:
    """Branch data for y^l = prod (x - alpha_j)^(a_j), not branched at infinity."""

    l: int
    field: FieldDesc
    branches: tuple[tuple[FieldElement, int], ...]

    @property
    def n(self) -> int:
        return len(self.branches)

    @property
    def genus(self) -> int:
        return (self.n - 2) * (self.l - 1) // 2

    def inertia_type(self) -> InertiaType:
        counts = [0] * (self.l - 1)
        for _, a in self.branches:
            counts[a - 1] += 1
        return InertiaType(self.l, tuple(counts))


def make_cover(l: int, field: FieldDesc, branches) -> CyclicCover:
    """Validate branch data and build the cover."""
    if not is_prime(l) or l == 2:
        raise DomainError(f"l = {l} must be an odd prime")
    if field.p == l:
        raise DomainError("cover degree l must differ from the characteristic")
    branches = tuple((alpha, int(a)) for alpha, a in branches)
    if len(branches) < 3:
        raise DomainError("need at least 3 branch points")
    seen = set()
    total = 0
    for alpha, a in branches:
        if alpha.desc != field:
            raise DomainError("branch point from a different field")
        if not 1 <= a <= l - 1:
            raise DomainError(f"inertia generator {a} outside 1..{l - 1}")
        if alpha.index in seen:
            raise DomainError("branch points must be pairwise distinct")
        seen.add(alpha.index)
        total += a
    if total % l != 0:
        raise DomainError("inertia generators must sum to 0 mod l")
    return CyclicCover(l=l, field=field, branches=branches)


def cover_from_curve(curve: TriellipticCurve) -> CyclicCover:
    """Branch data of a trielliptic curve: roots of p1 get a = 1, roots of
    p2 get a = 2.  Both polynomials must split over the base field."""
    branches = []
    for poly, a in ((curve.p1, 1), (curve.p2, 2)):
        if poly.degree == 0:
            continue
        roots = roots_in_field(poly)
        if len(roots) != poly.degree:
            raise DomainError(
                "curve branch points are not all rational over the base field; "
                "supply the cover over a splitting field instead"
            )
        branches.extend((r, a) for r in roots)
    return make_cover(3, curve.field, branches)


# ---------------------------------------------------------------------------
# point counting
# ---------------------------------------------------------------------------


def count_points(cover: CyclicCover, i: int, enum_cap: int = DEFAULT_ENUM_CAP) -> int:
    """Number of points of the smooth model over F_{q^i}."""
    if i < 1:
        raise DomainError("extension index must be >= 1")
    q = cover.field.order
    big_order = q**i
    if big_order > enum_cap:
        raise DomainError(
            f"field of order {cover.field.p}^{cover.field.k * i} exceeds the enumeration cap {enum_cap}"
        )
    d = math.gcd(cover.l, big_order - 1)
    if d == 1:
        # every fiber has exactly one point, branch or not
        return big_order + 1
    ef = enumerated_field(cover.field.p, cover.field.k * i)
    embed = ef.embedding_from(cover.field)
    branch_idx = [embed(alpha) for alpha, _ in cover.branches]
    weights = [a for _, a in cover.branches]
    n_branch, n_pass = ef.cover_affine_counts(branch_idx, weights, d)
    return n_branch + d * n_pass + d


def count_points_naive(cover: CyclicCover, i: int) -> int:
    """Reference count by scalar field arithmetic; independent of the
    table machinery, for cross-checking on small fields."""
    base = cover.field
    big = make_field(base.p, base.k * i)
    if base.k == 1:
        embed = lambda a: big.from_int(a.coeffs[0])  # noqa: E731
    elif big is base or big == base:
        embed = lambda a: a  # noqa: E731
    else:
        modulus = Polynomial.from_ints(big, base.modulus)
        rho = next(z for z in big.elements() if modulus(z).is_zero())
        powers = [big.one()]
        for _ in range(base.k - 1):
            powers.append(powers[-1] * rho)

        def embed(a, _powers=powers):
            acc = big.zero()
            for c, rp in zip(a.coeffs, _powers):
                if c:
                    acc = acc + big.from_int(c) * rp
            return acc

    f = Polynomial.one(big)
    for alpha, a in cover.branches:
        f = f * Polynomial.from_roots(big, [embed(alpha)]) ** a
    total = 0
    for x in big.elements():
        v = f(x)
        total += 1 if v.is_zero() else lth_power_count(v, cover.l)
    return total + math.gcd(cover.l, big.order - 1)


# ---------------------------------------------------------------------------
# L-polynomial assembly
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LPolynomial:
    """Numerator of the zeta function: degree 2g, c_0 = 1, functional
    equation c_{2g-i} = q^(g-i) c_i."""

    q: int
    g: int
    coeffs: tuple[int, ...]

    def __call__(self, t: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc


def _coeffs_from_counts(q: int, g: int, counts: list[int]) -> tuple[int, ...]:
    """Newton's identities on the power sums s_i = q^i + 1 - N_i, completed
    by the functional equation."""
    s = [0] * (g + 1)
    for i in range(1, g + 1):
        s[i] = q**i + 1 - counts[i - 1]
        if s[i] * s[i] > 4 * g * g * q**i:
            raise ConsistencyError(
                f"count N_{i} = {counts[i - 1]} violates the Weil bound over F_q^{i}"
            )
    c = [0] * (2 * g + 1)
    c[0] = 1
    for m in range(1, g + 1):
        acc = s[m]
        for i in range(1, m):
            acc += c[i] * s[m - i]
        if acc % m != 0:
            raise ConsistencyError(f"Newton identity at degree {m} is not integral")
        c[m] = -acc // m
    for i in range(g):
        c[2 * g - i] = q ** (g - i) * c[i]
    return tuple(c)


def power_sums(lpoly: LPolynomial, upto: int) -> list[int]:
    """s_1..s_upto of the inverse roots of the L-polynomial."""
    g2 = 2 * lpoly.g
    c = lpoly.coeffs
    s = [0] * (upto + 1)
    for m in range(1, upto + 1):
        acc = m * c[m] if m <= g2 else 0
        for i in range(1, min(m, g2 + 1)):
            acc += c[i] * s[m - i]
        s[m] = -acc
    return s[1:]


def predicted_count(lpoly: LPolynomial, i: int) -> int:
    """N_i implied by the L-polynomial."""
    s = power_sums(lpoly, i)
    return lpoly.q**i + 1 - s[i - 1]


def l_polynomial(
    cover: CyclicCover,
    enum_cap: int = DEFAULT_ENUM_CAP,
    verify_next_count: bool = True,
) -> LPolynomial:
    """Assemble the L-polynomial from N_1..N_g, with self-checks.

    When q^(g+1) is within the overcount limit, the polynomial's
    prediction of N_{g+1} is verified against a direct count.
    """
    q = cover.field.order
    g = cover.genus
    counts = [count_points(cover, i, enum_cap) for i in range(1, g + 1)]
    coeffs = _coeffs_from_counts(q, g, counts)
    lpoly = LPolynomial(q=q, g=g, coeffs=coeffs)
    if lpoly(1) <= 0:
        raise ConsistencyError("L(1) must be positive (the class number)")
    for i in range(g):
        if coeffs[2 * g - i] != q ** (g - i) * coeffs[i]:
            raise ConsistencyError("functional equation residual is nonzero")
    if verify_next_count and q ** (g + 1) <= OVERCOUNT_LIMIT:
        direct = count_points(cover, g + 1, enum_cap)
        if direct != predicted_count(lpoly, g + 1):
            raise ConsistencyError(
                f"L-polynomial predicts N_{g + 1} = {predicted_count(lpoly, g + 1)}, "
                f"direct count gives {direct}"
            )
    return lpoly


def prank_from_lpoly(lpoly: LPolynomial, p: int) -> int:
    """Degree of the L-polynomial mod p."""
    deg = 0
    for i, c in enumerate(lpoly.coeffs):
        if c % p != 0:
            deg = i
    return deg


def prank_zeta(cover: CyclicCover, enum_cap: int = DEFAULT_ENUM_CAP) -> int:
    """p-rank as the degree of the zeta numerator reduced mod p."""
    lpoly = l_polynomial(cover, enum_cap)
    f = prank_from_lpoly(lpoly, cover.field.p)
    if not 0 <= f <= cover.genus:
        raise ConsistencyError(f"p-rank {f} outside [0, g]")
    return f
