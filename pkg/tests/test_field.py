"""Field arithmetic: frozen examples and small-field exhaustive laws."""

import math
import random

import pytest

from ellcover import DomainError, frobenius, lth_power_count, make_field
from ellcover.field import _is_irreducible


def brute_force_lex_least_irreducible(p, k):
    """Independent oracle: enumerate monic degree-k candidates low-first
    and trial-divide by all monic polynomials of degree 1..k//2."""

    def poly_mul(a, b):
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
        return out

    def poly_mod(a, m):
        r = list(a)
        while len(r) >= len(m) and any(r):
            if r[-1] == 0:
                r.pop()
                continue
            shift = len(r) - len(m)
            lead = r[-1]
            for j in range(len(m)):
                r[shift + j] = (r[shift + j] - lead * m[j]) % p
            r.pop()
        while r and r[-1] == 0:
            r.pop()
        return r

    def monic_polys(deg):
        for code in range(p**deg):
            c, rem = [], code
            for pos in range(deg - 1, -1, -1):
                d, rem = divmod(rem, p**pos)
                c.append(d)
            yield c + [1]

    for code in range(p**k):
        coeffs, rem = [], code
        for pos in range(k - 1, -1, -1):
            d, rem = divmod(rem, p**pos)
            coeffs.append(d)
        f = coeffs + [1]
        reducible = False
        for deg in range(1, k // 2 + 1):
            for g in monic_polys(deg):
                if not poly_mod(f, g):
                    reducible = True
                    break
            if reducible:
                break
        if not reducible:
            return tuple(f)
    raise AssertionError


def test_make_field_prime():
    F5 = make_field(5, 1)
    assert F5.modulus is None
    assert F5.order == 5
    assert len(list(F5.elements())) == 5


def test_make_field_f16_lex_least_modulus():
    F16 = make_field(2, 4)
    assert F16.order == 16
    assert F16.modulus == brute_force_lex_least_irreducible(2, 4)


def test_make_field_f9_modulus_matches_oracle():
    F9 = make_field(3, 2)
    assert F9.modulus == brute_force_lex_least_irreducible(3, 2)


def test_make_field_rejects_bad_input():
    with pytest.raises(DomainError):
        make_field(4, 1)
    with pytest.raises(DomainError):
        make_field(5, 0)


def test_make_field_idempotent():
    assert make_field(7, 2) is make_field(7, 2)


def test_prime_field_arithmetic():
    F5 = make_field(5, 1)
    three, four = F5.from_int(3), F5.from_int(4)
    assert (three * four) == F5.from_int(2)
    # 2^(-1) = 3 in F_5
    assert (F5.one() / F5.from_int(2)) == F5.from_int(3)


def test_f16_multiplicative_order():
    F16 = make_field(2, 4)
    x = F16.gen()
    # brute-force check of x * x^14 = 1 through a log table
    powers = [F16.one()]
    for _ in range(15):
        powers.append(powers[-1] * x)
    assert powers[15] == F16.one()
    assert x * (x**14) == F16.one()


def test_field_mismatch_rejected():
    a = make_field(5, 1).one()
    b = make_field(7, 1).one()
    with pytest.raises(DomainError):
        a + b


def test_division_by_zero():
    F5 = make_field(5, 1)
    with pytest.raises(ZeroDivisionError):
        F5.one() / F5.zero()


def test_frobenius_fixes_prime_field():
    F7 = make_field(7, 1)
    for a in F7.elements():
        assert frobenius(a, 1) == a


def test_frobenius_order_k():
    for p, k in [(2, 4), (3, 2), (5, 2)]:
        F = make_field(p, k)
        for a in F.elements():
            assert frobenius(a, k) == a


def test_frobenius_on_f9_generator():
    F9 = make_field(3, 2)
    a = F9.gen()
    assert frobenius(a, 1) == a**3


def test_frobenius_iterated_equals_power():
    rng = random.Random(7)
    for p, k in [(2, 4), (3, 3), (5, 2)]:
        F = make_field(p, k)
        for _ in range(20):
            a = F.from_index(rng.randrange(F.order))
            i = rng.randrange(0, 2 * k)
            b = a
            for _ in range(i):
                b = frobenius(b, 1)
            assert b == a ** (p**i)


@pytest.mark.parametrize("p,k", [(2, 3), (2, 9), (3, 5), (5, 3), (7, 2), (19, 2)])
def test_fermat_little_all_elements(p, k):
    F = make_field(p, k)
    assert F.order <= 512
    for a in F.elements():
        if not a.is_zero():
            assert a ** (F.order - 1) == F.one()


def test_pow_huge_exponent_reduced():
    F9 = make_field(3, 2)
    a = F9.gen()
    assert a ** (3 ** (50 - 1)) == a ** ((3 ** (50 - 1)) % 8)


def test_lth_power_count_zero():
    F5 = make_field(5, 1)
    assert lth_power_count(F5.zero(), 3) == 1


def test_lth_power_count_f5_cubing_bijective():
    F5 = make_field(5, 1)
    for c in F5.elements():
        brute = sum(1 for y in F5.elements() if y**3 == c)
        assert lth_power_count(c, 3) == brute
        if not c.is_zero():
            assert brute == 1


def test_lth_power_count_f7_cube_residue():
    F7 = make_field(7, 1)
    assert lth_power_count(F7.one(), 3) == 3
    cubes = sorted(y.index for y in F7.elements() if (y**3) == F7.one())
    assert cubes == [1, 2, 4]


@pytest.mark.parametrize("p,k,l", [(5, 1, 3), (7, 1, 3), (2, 4, 3), (3, 2, 5), (11, 1, 5)])
def test_lth_power_fibers_partition_field(p, k, l):
    F = make_field(p, k)
    assert sum(lth_power_count(c, l) for c in F.elements()) == F.order


def test_lth_power_count_matches_brute_force():
    for p, k, l in [(7, 1, 3), (2, 4, 3), (3, 2, 5)]:
        F = make_field(p, k)
        for c in F.elements():
            brute = sum(1 for y in F.elements() if y**l == c)
            assert lth_power_count(c, l) == brute


@pytest.mark.parametrize("p,k", [(5, 4), (5, 6), (7, 4), (3, 4)])
def test_composite_degree_modulus_is_irreducible(p, k):
    # regression: Rabin's test must reject candidates with small factors even
    # when intermediate gcd remainders are not monic (only possible for p > 2)
    F = make_field(p, k)
    assert F.modulus == brute_force_lex_least_irreducible(p, k)


def test_composite_degree_field_laws():
    F = make_field(5, 6)
    rng = random.Random(5)
    one = F.one()
    for _ in range(10):
        a = F.from_index(rng.randrange(1, F.order))
        assert a ** (F.order - 1) == one
        assert (a * a.inverse()) == one


def test_is_irreducible_agrees_with_trial_division():
    # cross-check the Rabin test used by make_field on every monic cubic over F_3
    p, k = 3, 3
    for code in range(p**k):
        coeffs, rem = [], code
        for pos in range(k - 1, -1, -1):
            d, rem = divmod(rem, p**pos)
            coeffs.append(d)
        f = tuple(coeffs) + (1,)
        # trial division: a cubic is reducible iff it has a root
        has_root = any(
            (sum(c * a**i for i, c in enumerate(f))) % p == 0 for a in range(p)
        )
        assert _is_irreducible(f, p) == (not has_root)
