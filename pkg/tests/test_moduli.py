"""Moduli combinatorics: frozen examples plus exhaustive small-genus laws."""

import pytest

from ellcover import DomainError
from ellcover.moduli import (
    InertiaType,
    bouw_bound_rs,
    clutch_prank,
    enumerate_inertia_types,
    genus_from_inertia,
    inertia_from_signature,
    prank_admissible,
    prank_profile,
    signature_from_inertia,
    signature_rs,
    strata_pairs,
    stratum_dim_bounds,
    trielliptic_dim_lower_bound,
    trielliptic_signatures,
)


def T(l, counts):
    return InertiaType.from_counts(l, counts)


def test_genus_examples():
    assert genus_from_inertia(T(3, {1: 2, 2: 2})) == 2
    assert genus_from_inertia(T(3, {1: 3})) == 1
    assert genus_from_inertia(T(5, {1: 3, 2: 1})) == 4


def test_inertia_type_validation():
    with pytest.raises(DomainError):
        T(3, {1: 2, 2: 1})  # 2 + 2 = 4 != 0 mod 3
    with pytest.raises(DomainError):
        T(3, {1: 0, 2: 0})  # n < 3
    with pytest.raises(DomainError):
        T(4, {1: 4})  # l not an odd prime


def brute_trielliptic_types(g):
    """Independent oracle from the (d1, d2) description."""
    out = []
    for d1 in range(g + 3):
        d2 = g + 2 - d1
        if d2 >= 0 and (d1 + 2 * d2) % 3 == 0:
            out.append((d1, d2))
    return out


def test_enumerate_genus2():
    types = enumerate_inertia_types(3, 2)
    assert [t.counts for t in types] == [(2, 2)]
    assert [(d1, d2) for d1, d2 in brute_trielliptic_types(2)] == [(2, 2)]


def test_enumerate_genus1():
    types = enumerate_inertia_types(3, 1)
    assert {t.counts for t in types} == {(3, 0), (0, 3)}
    # ascending lex on the counts vector
    assert [t.counts for t in types] == [(0, 3), (3, 0)]
    assert set(brute_trielliptic_types(1)) == {(3, 0), (0, 3)}


def test_enumerate_genus_obstruction():
    assert enumerate_inertia_types(5, 1) == []


def test_enumerate_matches_brute_force_l3():
    for g in range(1, 12):
        got = {t.counts for t in enumerate_inertia_types(3, g)}
        want = {(d1, d2) for d1, d2 in brute_trielliptic_types(g)}
        assert got == want


def test_signature_examples():
    assert signature_from_inertia(T(3, {1: 2, 2: 2})).dims == (1, 1)
    assert signature_from_inertia(T(3, {1: 3})).dims == (0, 1)
    assert signature_from_inertia(T(5, {1: 3, 2: 1})).dims == (0, 1, 1, 2)


def test_signature_sums_to_genus():
    for l in (3, 5, 7):
        for g in range(1, 13):
            for t in enumerate_inertia_types(l, g):
                assert signature_from_inertia(t).genus == genus_from_inertia(t) == g


def test_swap_exchanges_signature():
    for g in range(1, 10):
        for t in enumerate_inertia_types(3, g):
            s = signature_from_inertia(t).dims
            assert signature_from_inertia(t.swapped()).dims == (s[1], s[0])


def test_trielliptic_signatures_examples():
    assert trielliptic_signatures(2) == [(1, 1)]
    assert trielliptic_signatures(1) == [(0, 1), (1, 0)]
    assert trielliptic_signatures(3) == [(1, 2), (2, 1)]


def test_inertia_from_signature_examples():
    assert inertia_from_signature(1, 1).counts == (2, 2)
    assert inertia_from_signature(0, 1).counts == (3, 0)
    assert inertia_from_signature(2, 1).counts == (1, 4)
    with pytest.raises(DomainError):
        inertia_from_signature(0, 3)


def test_bijection_signatures_inertia_types():
    for g in range(1, 21):
        sigs = trielliptic_signatures(g)
        types = enumerate_inertia_types(3, g)
        assert len(sigs) == len(types)
        image = set()
        for r, s in sigs:
            t = inertia_from_signature(r, s)
            assert signature_rs(t) == (r, s)  # round trip
            image.add(t.counts)
        assert image == {t.counts for t in types}


def test_prank_profile_examples():
    prof = prank_profile(5, T(3, {1: 2, 2: 2}))
    assert (prof.e, prof.bound) == (2, 2)
    assert sorted(map(sorted, prof.orbits)) == [[1, 2]]

    prof = prank_profile(7, T(3, {1: 2, 2: 2}))
    assert (prof.e, prof.epsilon, prof.bound) == (1, 1, 2)

    prof = prank_profile(7, T(5, {1: 3, 2: 1}))
    assert (prof.e, prof.bound) == (4, 0)
    assert len(prof.orbits) == 1


def test_prank_profile_rejects_p_equal_l():
    with pytest.raises(DomainError):
        prank_profile(3, T(3, {1: 2, 2: 2}))


def test_profile_laws():
    for p in (2, 5, 7, 11, 13):
        for l in (3, 5, 7):
            if p == l:
                continue
            for g in range(1, 9):
                for t in enumerate_inertia_types(l, g):
                    prof = prank_profile(p, t)
                    assert prof.bound % prof.e == 0
                    assert 0 <= prof.bound <= g
                    assert prof.e % 1 == 0 and (l - 1) % prof.e == 0


def test_l3_closed_form_bound():
    for p in (2, 5, 7, 11, 13):
        for g in range(1, 13):
            for t in enumerate_inertia_types(3, g):
                r, s = signature_rs(t)
                assert prank_profile(p, t).bound == bouw_bound_rs(p, r, s)


def test_prank_admissible_examples():
    t = T(3, {1: 2, 2: 2})
    ok, reason = prank_admissible(5, t, 1)
    assert not ok and "does not divide" in reason
    ok, reason = prank_admissible(7, t, 1)
    assert not ok and "g - 1" in reason
    ok, _ = prank_admissible(5, t, 2)
    assert ok


def test_clutch_prank():
    assert clutch_prank(0, 0, "compact", 3) == 0
    assert clutch_prank(0, 0, "noncompact", 3) == 2
    assert clutch_prank(2, 4, "noncompact", 5) == 10
    with pytest.raises(DomainError):
        clutch_prank(-1, 0, "compact", 3)


def test_strata_pairs_examples():
    assert strata_pairs(1, 3, 2, 3, 5, "delta") == [(0, 2)]
    assert strata_pairs(0, 3, 2, 3, 5, "xi") == [(0, 0)]
    assert strata_pairs(1, 2, 0, 3, 5, "delta") == [(0, 0)]


def test_strata_pairs_oracle():
    # brute enumeration of the defining conditions
    for (i, g, f, l, p, kind) in [(1, 3, 2, 3, 5, "delta"), (2, 4, 2, 3, 7, "delta"),
                                  (0, 3, 2, 3, 5, "xi"), (1, 5, 4, 3, 5, "xi")]:
        e = 1
        v = p % l
        while v != 1:
            v = v * p % l
            e += 1
        target = f if kind == "delta" else f - (l - 1)
        hi2 = g - i if kind == "delta" else g - (l - 1) - i
        want = [
            (f1, f2)
            for f1 in range(i + 1)
            for f2 in range(hi2 + 1)
            if f1 + f2 == target and f1 % e == 0 and f2 % e == 0
        ]
        assert strata_pairs(i, g, f, l, p, kind) == want


def test_strata_pairs_range_errors_and_xi_flag():
    with pytest.raises(DomainError):
        strata_pairs(0, 3, 2, 3, 5, "delta")
    with pytest.raises(DomainError):
        strata_pairs(2, 3, 2, 3, 5, "xi")
    assert strata_pairs(0, 4, 0, 5, 3, "xi") == []  # f < 2: no pairs described
    with pytest.warns(UserWarning):
        assert strata_pairs(0, 4, 2, 5, 3, "xi") == []  # f in [2, l-1)


def test_stratum_dim_examples():
    assert stratum_dim_bounds(5, inertia_from_signature(1, 1), 0) == (0, 1)
    assert stratum_dim_bounds(5, inertia_from_signature(2, 2), 2) == (2, 3)
    assert stratum_dim_bounds(7, inertia_from_signature(1, 1), 0) == (0, 1)
    with pytest.raises(DomainError):
        stratum_dim_bounds(5, inertia_from_signature(1, 1), 1)


def test_general_dim_bound_matches_l3_closed_form():
    for p in (5, 7):
        for g in range(1, 16):
            for r, s in trielliptic_signatures(g):
                t = inertia_from_signature(r, s)
                bound = bouw_bound_rs(p, r, s)
                for f in range(0, bound + 1):
                    ok, _ = prank_admissible(p, t, f)
                    if not ok:
                        continue
                    if p % 3 == 1 and f >= g:
                        continue  # closed form stated only for f < g
                    lower, ambient = stratum_dim_bounds(p, t, f)
                    assert ambient == g - 1
                    assert lower == trielliptic_dim_lower_bound(p, r, s, f)
