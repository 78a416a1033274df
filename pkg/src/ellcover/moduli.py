"""Combinatorics of cyclic covers: inertia types, signatures, p-rank bounds.

An inertia type records, for each nontrivial class h in (Z/lZ)*, how many
branch points carry canonical inertia generator h.  Everything downstream
(genus, signature, admissible p-ranks, boundary strata, dimension bounds)
is a pure function of this multiset together with p.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from itertools import combinations_with_replacement

from .errors import DomainError
from .field import is_prime


@dataclass(frozen=True)
class InertiaType:
    """Multiset of canonical inertia generators for a degree-l cover of P^1.

    counts[h-1] is the multiplicity of h, for h in 1..l-1.  The multiset
    must sum to 0 mod l (existence of the cover) and have at least three
    entries (stably marked genus-0 base).
    """

    l: int
    counts: tuple[int, ...]

    def __post_init__(self):
        if not is_prime(self.l) or self.l == 2:
            raise DomainError(f"l = {self.l} must be an odd prime")
        if len(self.counts) != self.l - 1 or any(c < 0 for c in self.counts):
            raise DomainError("counts must map each h in 1..l-1 to a multiplicity >= 0")
        if sum(h * c for h, c in self.items()) % self.l != 0:
            raise DomainError("inertia generators must sum to 0 mod l")
        if self.n < 3:
            raise DomainError("need at least 3 branch points")

    @classmethod
    def from_counts(cls, l: int, counts: dict[int, int]) -> InertiaType:
        vec = [0] * (l - 1)
        for h, c in counts.items():
            h = int(h)
            if not 1 <= h <= l - 1:
                raise DomainError(f"inertia generator {h} outside 1..{l - 1}")
            vec[h - 1] = int(c)
        return cls(l, tuple(vec))

    def items(self):
        return [(h, self.counts[h - 1]) for h in range(1, self.l)]

    @property
    def n(self) -> int:
        """Number of branch points."""
        return sum(self.counts)

    @property
    def genus(self) -> int:
        return genus_from_inertia(self)

    def swapped(self) -> InertiaType:
        """Relabel the group action by the inversion automorphism h -> l-h."""
        return InertiaType(self.l, tuple(reversed(self.counts)))


@dataclass(frozen=True)
class SignatureType:
    """Eigenspace dimensions (s_1, ..., s_{l-1}) of the regular differentials."""

    l: int
    dims: tuple[int, ...]

    @property
    def genus(self) -> int:
        return sum(self.dims)


@dataclass(frozen=True)
class PRankProfile:
    """Everything the p-rank bound needs in one place.

    e is the order of p mod l, epsilon is 1 exactly when p = 1 mod l, the
    orbits partition {1, ..., l-1} under multiplication by p^(-1), and
    bound is the resulting upper bound on the p-rank.
    """

    p: int
    l: int
    e: int
    epsilon: int
    orbits: tuple[tuple[int, ...], ...]
    bound: int


def genus_from_inertia(t: InertiaType) -> int:
    """g = (n-2)(l-1)/2."""
    return (t.n - 2) * (t.l - 1) // 2


def enumerate_inertia_types(l: int, g: int) -> list[InertiaType]:
    """All inertia types of genus g, ascending lexicographic in the counts vector.

    Empty when 2g is not divisible by l-1 (no such covers exist).
    """
    if not is_prime(l) or l == 2:
        raise DomainError(f"l = {l} must be an odd prime")
    if g < 1 or (2 * g) % (l - 1) != 0:
        return []
    n = 2 * g // (l - 1) + 2
    out = []
    # multisets of size n over {1..l-1} <-> counts vectors with sum n
    for combo in combinations_with_replacement(range(1, l), n):
        if sum(combo) % l != 0:
            continue
        vec = [0] * (l - 1)
        for h in combo:
            vec[h - 1] += 1
        out.append(InertiaType(l, tuple(vec)))
    out.sort(key=lambda t: t.counts)
    return out


def signature_from_inertia(t: InertiaType) -> SignatureType:
    """s_i = -1 + sum over branch points of the fractional part of i*a/l."""
    dims = []
    for i in range(1, t.l):
        total = sum(c * ((i * h) % t.l) for h, c in t.items())
        assert total % t.l == 0
        dims.append(total // t.l - 1)
    sig = SignatureType(t.l, tuple(dims))
    assert sig.genus == t.genus
    return sig


def trielliptic_signatures(g: int) -> list[tuple[int, int]]:
    """All (r, s) with r + s = g and max(r,s) <= 2 min(r,s) + 1, ascending in r."""
    if g < 1:
        raise DomainError("genus must be >= 1")
    out = []
    for r in range(g + 1):
        s = g - r
        if max(r, s) <= 2 * min(r, s) + 1:
            out.append((r, s))
    return out


def is_trielliptic_signature(r: int, s: int) -> bool:
    return r >= 0 and s >= 0 and r + s >= 1 and max(r, s) <= 2 * min(r, s) + 1


def inertia_from_signature(r: int, s: int) -> InertiaType:
    """The l=3 inertia type with d_1 = 2s - r + 1 and d_2 = 2r - s + 1."""
    if not is_trielliptic_signature(r, s):
        raise DomainError(f"({r}, {s}) is not a trielliptic signature")
    d1 = 2 * s - r + 1
    d2 = 2 * r - s + 1
    return InertiaType.from_counts(3, {1: d1, 2: d2})


def signature_rs(t: InertiaType) -> tuple[int, int]:
    """(r, s) of an l=3 type."""
    if t.l != 3:
        raise DomainError("signature (r, s) is specific to l = 3")
    sig = signature_from_inertia(t)
    return sig.dims[0], sig.dims[1]


def multiplicative_order(p: int, l: int) -> int:
    e, v = 1, p % l
    while v != 1:
        v = (v * p) % l
        e += 1
    return e


def prank_profile(p: int, t: InertiaType) -> PRankProfile:
    """Order e, the Cartier orbits on eigenspace indices, and the p-rank bound.

    The Cartier operator sends the i-th eigenspace into the (p^(-1) i)-th,
    so orbits are those of multiplication by p^(-1) on {1, ..., l-1}; each
    contributes e times the minimum eigenspace dimension along the orbit.
    """
    l = t.l
    if p == l:
        raise DomainError("p must differ from l")
    if not is_prime(p):
        raise DomainError(f"p = {p} is not prime")
    e = multiplicative_order(p, l)
    epsilon = 1 if p % l == 1 else 0
    pinv = pow(p, -1, l)
    dims = signature_from_inertia(t).dims
    seen = set()
    orbits = []
    for i in range(1, l):
        if i in seen:
            continue
        orbit = []
        j = i
        while j not in seen:
            seen.add(j)
            orbit.append(j)
            j = (pinv * j) % l
        orbits.append(tuple(orbit))
    bound = sum(e * min(dims[i - 1] for i in orbit) for orbit in orbits)
    assert all(len(o) == e for o in orbits)
    assert bound % e == 0 and 0 <= bound <= t.genus
    return PRankProfile(p=p, l=l, e=e, epsilon=epsilon, orbits=tuple(orbits), bound=bound)


def prank_admissible(p: int, t: InertiaType, f: int) -> tuple[bool, str]:
    """Whether f can be the p-rank of a cover with this inertia type.

    Requires 0 <= f <= B, e | f, and f != g-1 when l > 3 or p = 1 mod 3.
    Returns (ok, reason); reason names the violated clause.
    """
    profile = prank_profile(p, t)
    g = t.genus
    if f < 0 or f > profile.bound:
        return False, f"f = {f} outside [0, B] with B = {profile.bound}"
    if f % profile.e != 0:
        return False, f"e = {profile.e} does not divide f = {f}"
    if f == g - 1 and (t.l > 3 or p % 3 == 1):
        return False, f"f = g - 1 = {f} excluded for l > 3 or p = 1 mod 3"
    return True, "admissible"


def clutch_prank(f1: int, f2: int, kind: str, l: int) -> int:
    """p-rank of a clutched curve: sum for compact type, plus the torus
    contribution l-1 for non-compact type."""
    if f1 < 0 or f2 < 0:
        raise DomainError("p-ranks must be >= 0")
    if kind == "compact":
        return f1 + f2
    if kind == "noncompact":
        return f1 + f2 + (l - 1)
    raise DomainError(f"unknown clutching kind {kind!r}")


def strata_pairs(i: int, g: int, f: int, l: int, p: int, kind: str) -> list[tuple[int, int]]:
    """Boundary p-rank pairs (f1, f2) for the Delta_i or Xi_i stratum.

    Delta: f1 + f2 = f with 0 <= f1 <= i, 0 <= f2 <= g - i.
    Xi:    f1 + f2 = f - (l-1) with 0 <= f1 <= i, 0 <= f2 <= g - (l-1) - i.
    Both are filtered by the divisibility e | f1 and e | f2.  Xi strata
    are only described for f >= l-1; smaller f gives the empty list, and
    f in [2, l-1) is additionally flagged with a warning.
    """
    e = multiplicative_order(p, l)
    if kind in ("delta", "Δ"):
        if not 1 <= i <= g - 1:
            raise DomainError(f"delta index i = {i} out of range 1..{g - 1}")
        target = f
        f2_max = g - i
    elif kind in ("xi", "Ξ"):
        if not 0 <= i <= g - (l - 1):
            raise DomainError(f"xi index i = {i} out of range 0..{g - (l - 1)}")
        if 2 <= f < l - 1:
            warnings.warn(
                f"xi strata with f = {f} in [2, l-1) are not described; returning no pairs",
                stacklevel=2,
            )
        if f < l - 1:
            return []
        target = f - (l - 1)
        f2_max = g - (l - 1) - i
    else:
        raise DomainError(f"unknown stratum kind {kind!r}")
    out = []
    for f1 in range(0, min(i, target) + 1):
        f2 = target - f1
        if f2 < 0 or f2 > f2_max:
            continue
        if f1 % e == 0 and f2 % e == 0:
            out.append((f1, f2))
    return out


def stratum_dim_bounds(p: int, t: InertiaType, f: int) -> tuple[int, int]:
    """(lower bound, ambient dimension) for the p-rank f stratum.

    ambient = n - 3; lower = (n-3) - (B-f)/e + epsilon, capped at ambient
    (the cap only matters at f = B with p = 1 mod l, where the maximal
    stratum is open and dense of full dimension).
    """
    ok, reason = prank_admissible(p, t, f)
    if not ok:
        raise DomainError(f"inadmissible p-rank: {reason}")
    profile = prank_profile(p, t)
    ambient = t.n - 3
    lower = ambient - (profile.bound - f) // profile.e + profile.epsilon
    return min(lower, ambient), ambient


def trielliptic_dim_lower_bound(p: int, r: int, s: int, f: int) -> int:
    """Closed-form l=3 specialization of the stratum dimension bound:
    max(r,s) - 1 + f/2 for p = 2 mod 3; f for p = 1 mod 3 and f < g."""
    g = r + s
    if p % 3 == 2:
        return max(r, s) - 1 + f // 2
    if f < g:
        return f
    return g - 1  # maximal stratum is open and dense


def bouw_bound_rs(p: int, r: int, s: int) -> int:
    """Closed form for l=3: g if p = 1 mod 3, else 2 min(r, s)."""
    if p % 3 == 1:
        return r + s
    return 2 * min(r, s)
