"""Table-backed finite fields for fast exhaustive point counting.

Elements of F_{p^m} are identified with integers in [0, p^m) by base-p
packing of their power-basis coefficients.  A discrete log / exp table
pair over a fixed generator turns the multiplicative tests needed for
fiber counting into vectorized integer arithmetic; the tables are built
in blocks (multiplication by a constant is linear over F_p, so a whole
block advances with one matrix product).

Supports desk-scale orders; the default enumeration cap lives in the
zeta module.  Construction cost is O(q * m^2) integer work via numpy.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .errors import DomainError
from .field import FieldDesc, FieldElement, make_field, prime_factors

_BLOCK = 4096
_CHUNK = 1 << 19


class EnumeratedField:
    """F_{p^m} with exp/log tables over a deterministic generator."""

    def __init__(self, p: int, m: int):
        self.desc: FieldDesc = make_field(p, m)
        self.p = p
        self.m = m
        self.q = p**m
        self._pvec = p ** np.arange(m, dtype=np.int64)
        self.generator = self._find_generator()
        self.exp, self.log = self._build_tables()
        self._embeddings: dict[tuple[int, int], list[FieldElement]] = {}

    # -- construction -----------------------------------------------------

    def _find_generator(self) -> FieldElement:
        one = self.desc.one()
        if self.q == 2:
            return one
        factors = prime_factors(self.q - 1)
        for idx in range(2, self.q):
            a = self.desc.from_index(idx)
            if all(a ** ((self.q - 1) // r) != one for r in factors):
                return a
        raise AssertionError("no generator found")  # unreachable

    def _mul_rows(self, c: FieldElement) -> np.ndarray:
        """Rows R[j] = coefficients of c * theta^j (theta = power-basis gen)."""
        rows = []
        cur = c
        theta = self.desc.gen()
        for _ in range(self.m):
            rows.append(cur.coeffs)
            cur = cur * theta
        return np.array(rows, dtype=np.int64)

    def _build_tables(self) -> tuple[np.ndarray, np.ndarray]:
        q, p, m = self.q, self.p, self.m
        exp = np.empty(q - 1, dtype=np.int32)
        t = min(_BLOCK, q - 1)
        cur_rows = []
        e = self.desc.one()
        for _ in range(t):
            cur_rows.append(e.coeffs)
            e = e * self.generator
        cur = np.array(cur_rows, dtype=np.int64)
        step = None
        if q - 1 > t:
            step = self._mul_rows(self.generator**t)
        pos = 0
        while pos < q - 1:
            take = min(t, q - 1 - pos)
            exp[pos : pos + take] = cur[:take] @ self._pvec
            pos += take
            if pos < q - 1:
                cur = (cur @ step) % p
        log = np.full(q, -1, dtype=np.int32)
        log[exp] = np.arange(q - 1, dtype=np.int32)
        return exp, log

    # -- element/index plumbing --------------------------------------------

    def digits_of(self, idx: np.ndarray) -> np.ndarray:
        out = np.empty((idx.shape[0], self.m), dtype=np.int64)
        cur = idx.astype(np.int64, copy=True)
        for j in range(self.m):
            out[:, j] = cur % self.p
            cur //= self.p
        return out

    def scalar_digits(self, index: int) -> np.ndarray:
        out = []
        for _ in range(self.m):
            index, d = divmod(index, self.p)
            out.append(d)
        return np.array(out, dtype=np.int64)

    def embedding_from(self, base: FieldDesc):
        """Map elements of the base field into this field, as indices.

        Uses the minimum-index root of the base modulus among the elements
        of the unique subfield of the right order, so the embedding is
        deterministic.
        """
        if base.p != self.p:
            raise DomainError("embedding requires equal characteristic")
        if self.m % base.k != 0:
            raise DomainError(f"F_{{{base.p}^{base.k}}} does not embed in F_{{{self.p}^{self.m}}}")
        if base.k == 1:
            return lambda a: a.coeffs[0]
        if base.k == self.m:
            return lambda a: a.index
        key = (base.p, base.k)
        if key not in self._embeddings:
            self._embeddings[key] = self._root_powers(base)
        powers = self._embeddings[key]

        def embed(a: FieldElement) -> int:
            acc = self.desc.zero()
            for c, rho_j in zip(a.coeffs, powers):
                if c:
                    acc = acc + self.desc.from_int(c) * rho_j
            return acc.index

        return embed

    def _root_powers(self, base: FieldDesc) -> list[FieldElement]:
        q0 = base.order
        stride = (self.q - 1) // (q0 - 1)
        candidates = [0] + [int(self.exp[j * stride]) for j in range(q0 - 1)]
        modulus = [self.desc.from_int(c) for c in base.modulus]
        roots = []
        for idx in candidates:
            z = self.desc.from_index(idx)
            acc = self.desc.zero()
            for c in reversed(modulus):
                acc = acc * z + c
            if acc.is_zero():
                roots.append(idx)
        if not roots:
            raise AssertionError("base modulus has no root in the extension")
        rho = self.desc.from_index(min(roots))
        powers = [self.desc.one()]
        for _ in range(base.k - 1):
            powers.append(powers[-1] * rho)
        return powers

    # -- counting kernel ------------------------------------------------------

    def cover_affine_counts(self, branch_indices: list[int], weights: list[int], d: int) -> tuple[int, int]:
        """(number of branch x, number of non-branch x passing the residue test).

        The fiber of y^l = F(x) over a non-branch x has size d exactly when
        sum_j a_j * log(x - alpha_j) = 0 mod d, where d = gcd(l, q-1).
        """
        n = len(branch_indices)
        if d == 1:
            return n, self.q - n
        alpha_digits = [self.scalar_digits(b) for b in branch_indices]
        pass_count = 0
        for lo in range(0, self.q, _CHUNK):
            hi = min(self.q, lo + _CHUNK)
            digs = self.digits_of(np.arange(lo, hi, dtype=np.int64))
            total = np.zeros(hi - lo, dtype=np.int64)
            branch_mask = np.zeros(hi - lo, dtype=bool)
            for bd, w in zip(alpha_digits, weights):
                vidx = ((digs - bd) % self.p) @ self._pvec
                lg = self.log[vidx].astype(np.int64)
                zero_here = vidx == 0
                branch_mask |= zero_here
                total += w * np.where(zero_here, 0, lg)
            pass_count += int(np.count_nonzero(((total % d) == 0) & ~branch_mask))
        return n, pass_count


@lru_cache(maxsize=8)
def enumerated_field(p: int, m: int) -> EnumeratedField:
    return EnumeratedField(p, m)
