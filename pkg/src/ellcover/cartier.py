"""Cartier operator matrices for trielliptic curves y^3 = p1(x) p2(x)^2.

The space of regular differentials splits into two character eigenspaces
of dimensions r and s with bases

    w_{1,j} = x^(j-1) dx/y        (1 <= j <= r)
    w_{2,j} = x^(j-1) p2(x) dx/y^2  (1 <= j <= s)

and the Cartier operator maps block i into block sigma(i), where sigma
swaps the blocks when p = 2 mod 3 and fixes them when p = 1 mod 3.  With

    h_1 = p1^((p-2)/3) p2^((2p-1)/3),  h_2 = p1^((2p-1)/3) p2^((p-2)/3)

for p = 2 mod 3 (exponents (p-1)/3 and (2p-2)/3 for p = 1 mod 3) and the
unique decomposition h = sum_t f_t(x)^p x^t, the image of w_{i,j} is

    x^floor((j-1)/p) * f^(h_{sigma(i)})_{(-j mod p)}(x) * w_{sigma(i),1}

re-expanded in the target basis.  Deriving the operator from first
principles (pulling p-th powers out of 1/y and 1/y^2) shows that the
f-polynomial comes from h indexed by the *target* block; the degenerate
blocks r = 0 or s = 0 then receive the zero map automatically.  The
p-rank equals the rank of the product of the g Frobenius-twisted copies
of the matrix, and the zeta oracle independently audits the convention.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConsistencyError, DomainError
from .field import FieldDesc, FieldElement
from .poly import Polynomial, is_squarefree, poly_gcd


@dataclass(frozen=True)
class TriellipticCurve:
    """y^3 = p1(x) p2(x)^2 with p1, p2 monic, squarefree, coprime."""

    field: FieldDesc
    p1: Polynomial
    p2: Polynomial
    d1: int
    d2: int
    g: int
    r: int
    s: int

    @property
    def p(self) -> int:
        return self.field.p


def validate_curve(field: FieldDesc, p1: Polynomial, p2: Polynomial) -> TriellipticCurve:
    """Check the curve data and derive (d1, d2, g, r, s), or reject."""
    if field.p == 3:
        raise DomainError("trielliptic curves require characteristic p != 3")
    for name, f in (("p1", p1), ("p2", p2)):
        if f.desc != field:
            raise DomainError(f"{name} is not defined over the given field")
        if f.is_zero():
            raise DomainError(f"{name} must be nonzero")
        if not f.is_monic():
            raise DomainError(f"{name} must be monic")
        if not is_squarefree(f):
            raise DomainError(f"{name} must be squarefree")
    if poly_gcd(p1, p2).degree != 0:
        raise DomainError("p1 and p2 must be relatively prime")
    d1, d2 = int(p1.degree), int(p2.degree)
    if (d1 + 2 * d2) % 3 != 0:
        raise DomainError(f"d1 + 2 d2 = {d1 + 2 * d2} must be 0 mod 3")
    g = d1 + d2 - 2
    if g < 1:
        raise DomainError(f"genus {g} < 1: need at least 3 branch points")
    r = (d1 + 2 * d2) // 3 - 1
    s = (2 * d1 + d2) // 3 - 1
    return TriellipticCurve(field=field, p1=p1, p2=p2, d1=d1, d2=d2, g=g, r=r, s=s)


def curve_from_int_coeffs(p: int, k: int, p1: list, p2: list) -> TriellipticCurve:
    from .field import make_field

    field = make_field(p, k)

    def build(spec_list):
        coeffs = []
        for v in spec_list:
            coeffs.append(field.from_int(v) if isinstance(v, int) else field.element(v))
        return Polynomial(field, coeffs)

    return validate_curve(field, build(p1), build(p2))


def elkin_h(curve: TriellipticCurve) -> tuple[Polynomial, Polynomial]:
    """The pair (h1, h2) with exponents chosen by p mod 3."""
    p = curve.p
    if p % 3 == 2:
        e_small, e_big = (p - 2) // 3, (2 * p - 1) // 3
    else:
        e_small, e_big = (p - 1) // 3, (2 * p - 2) // 3
    h1 = (curve.p1**e_small) * (curve.p2**e_big)
    h2 = (curve.p1**e_big) * (curve.p2**e_small)
    return h1, h2


def f_decomposition(h: Polynomial, p: int) -> list[Polynomial]:
    """The unique f_0, ..., f_{p-1} with h(x) = sum_t f_t(x)^p x^t.

    The coefficient of x^m in f_t is the p-th root of the coefficient of
    x^(mp + t) in h.
    """
    if h.desc.p != p:
        raise DomainError("decomposition characteristic must match the field")
    buckets: list[list[FieldElement]] = [[] for _ in range(p)]
    for mp_plus_t, c in enumerate(h.coeffs):
        m, t = divmod(mp_plus_t, p)
        bucket = buckets[t]
        while len(bucket) < m:
            bucket.append(h.desc.zero())
        bucket.append(c.pth_root())
    return [Polynomial(h.desc, b) for b in buckets]


@dataclass(frozen=True)
class CartierMatrix:
    """Matrix of the Cartier operator: rows are targets, columns sources.

    Basis order is the r vectors of the first eigenspace followed by the
    s vectors of the second; block records (r, s).
    """

    field: FieldDesc
    size: int
    entries: tuple[tuple[FieldElement, ...], ...]
    block: tuple[int, int]
    sigma_swaps: bool

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.entries for e in row)


def cartier_matrix(curve: TriellipticCurve) -> CartierMatrix:
    """Assemble the Cartier matrix of the curve from Elkin's formulas."""
    field, p = curve.field, curve.p
    r, s, g = curve.r, curve.s, curve.g
    swap = p % 3 == 2
    h1, h2 = elkin_h(curve)
    fams = {1: f_decomposition(h1, p), 2: f_decomposition(h2, p)}
    zero = field.zero()
    entries = [[zero] * g for _ in range(g)]
    block_dim = {1: r, 2: s}
    block_off = {1: 0, 2: r}
    for i, j_count in ((1, r), (2, s)):
        tgt = (3 - i) if swap else i  # sigma(i)
        fam = fams[tgt]
        for j in range(1, j_count + 1):
            t = (-j) % p
            q = fam[t].shift((j - 1) // p)
            if not q.is_zero() and q.degree >= block_dim[tgt]:
                raise ConsistencyError(
                    f"Cartier image of basis vector ({i},{j}) has degree "
                    f"{q.degree} >= target eigenspace dimension {block_dim[tgt]}"
                )
            col = block_off[i] + (j - 1)
            for m_minus_1, c in enumerate(q.coeffs):
                entries[block_off[tgt] + m_minus_1][col] = c
    return CartierMatrix(
        field=field,
        size=g,
        entries=tuple(tuple(row) for row in entries),
        block=(r, s),
        sigma_swaps=swap,
    )


def matrix_rank(rows: tuple[tuple[FieldElement, ...], ...], field: FieldDesc) -> int:
    """Rank by exact Gaussian elimination."""
    m = [list(row) for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, nrows) if not m[i][col].is_zero()), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = m[rank][col].inverse()
        m[rank] = [inv * v for v in m[rank]]
        for i in range(nrows):
            if i != rank and not m[i][col].is_zero():
                factor = m[i][col]
                m[i] = [a - factor * b for a, b in zip(m[i], m[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


def _twist(entries, i: int):
    """Entrywise Frobenius a -> a^(p^i)."""
    return tuple(tuple(e.frobenius(i) for e in row) for row in entries)


def _matmul(a, b, field: FieldDesc):
    n = len(a)
    zero = field.zero()
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = zero
            for k in range(n):
                if not a[i][k].is_zero():
                    acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def twisted_product(m: CartierMatrix, factors: int | None = None):
    """C^(p^(n-1)) ... C^(p) C with n = factors (default g)."""
    n = m.size if factors is None else factors
    if n == 0:
        # empty product: identity
        one, zero = m.field.one(), m.field.zero()
        return tuple(
            tuple(one if i == j else zero for j in range(m.size)) for i in range(m.size)
        )
    acc = m.entries
    for i in range(1, n):
        acc = _matmul(_twist(m.entries, i), acc, m.field)
    return acc


def prank_cartier(m: CartierMatrix) -> int:
    """p-rank: rank of the product of the g twisted copies of the matrix."""
    if m.size == 0:
        return 0
    return matrix_rank(twisted_product(m), m.field)


def is_superspecial(m: CartierMatrix) -> bool:
    """True iff the Cartier operator is identically zero."""
    return m.is_zero()


def prank_of_curve(curve: TriellipticCurve) -> int:
    return prank_cartier(cartier_matrix(curve))
