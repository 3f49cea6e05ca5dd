"""Exact polynomial arithmetic, Sturm sequences, isolation, interlacing."""

import random
from fractions import Fraction

import pytest

from chromroots.polynomials import (
    Poly,
    cauchy_root_bound,
    has_all_real_roots,
    interlaces,
    isolate_real_roots,
    poly_gcd,
    real_root_count,
    refine_isolating_interval,
    square_free_decomposition,
    square_free_part,
    sturm_diagnostic,
    sturm_sequence,
)

X = Poly([0, 1])
PI_C4 = Poly([0, -3, 6, -4, 1])


def rand_poly(rng, max_deg=12, lo=-9, hi=9):
    deg = rng.randint(1, max_deg)
    coeffs = [rng.randint(lo, hi) for _ in range(deg)] + [rng.randint(1, hi)]
    return Poly(coeffs)


# -- ring basics -----------------------------------------------------------------


def test_canonical_form_and_equality():
    assert Poly([1, 2, 0, 0]) == Poly([1, 2])
    assert Poly([0, 0]).is_zero()
    assert Poly([Fraction(4, 2)]).coeffs == (2,)
    assert Poly([1, 1]) * Poly() == Poly()


def test_divmod_exact():
    f = Poly([2, 3, 1])  # (x+1)(x+2)
    q, r = divmod(f, Poly([1, 1]))
    assert q == Poly([2, 1]) and r.is_zero()
    q, r = divmod(Poly([1, 0, 1]), Poly([1, 1]))
    assert r == Poly([2])
    with pytest.raises(ArithmeticError):
        Poly([1, 0, 1]).exact_div(Poly([1, 1]))


# -- shifts ----------------------------------------------------------------------


def test_shift_examples():
    assert Poly([0, 0, 1]).shift(1) == Poly([1, 2, 1])
    assert PI_C4.shift(0) == PI_C4
    expected = Poly([3, 1]) * Poly([2, 1]) * Poly([3, 3, 1])
    assert PI_C4.shift(3) == expected


def test_shift_composition_and_degree():
    rng = random.Random(11)
    for _ in range(40):
        f = rand_poly(rng)
        a, b = rng.randint(-4, 4), rng.randint(-4, 4)
        assert f.shift(a).shift(b) == f.shift(a + b)
        assert f.shift(a).degree == f.degree
        assert f.shift(a).lc == f.lc


def test_rational_shift():
    f = Poly([0, 0, 1]).shift(Fraction(1, 2))
    assert f == Poly([Fraction(1, 4), 1, 1])
    assert f.clear_denominators() == Poly([1, 4, 4])


# -- even/odd split ----------------------------------------------------------------


def test_even_odd_split_examples():
    fe, fo = Poly([1, 2, 1]).even_odd_split()
    assert fe == Poly([1, 1]) and fo == Poly([2])
    fe, fo = Poly([0, 1, 0, 1]).even_odd_split()
    assert fe.is_zero() and fo == Poly([1, 1])
    fe, fo = PI_C4.even_odd_split()
    assert fe == Poly([0, 6, 1]) and fo == Poly([-3, -4])


def test_even_odd_reconstruction_random():
    rng = random.Random(12)
    for _ in range(1000):
        f = rand_poly(rng, max_deg=30, lo=-50, hi=50)
        fe, fo = f.even_odd_split()
        rebuilt = Poly([c for pair in zip_longest_coeffs(fe, fo) for c in pair])
        assert rebuilt == f


def zip_longest_coeffs(fe, fo):
    n = max(len(fe.coeffs), len(fo.coeffs))
    e = list(fe.coeffs) + [0] * (n - len(fe.coeffs))
    o = list(fo.coeffs) + [0] * (n - len(fo.coeffs))
    return zip(e, o)


# -- falling factorial ---------------------------------------------------------------


def test_falling_factorial_examples():
    assert PI_C4.to_falling_factorial() == [0, 0, 1, 2, 1]
    assert Poly([0, 0, 0, 0, 1]).to_falling_factorial() == [0, 1, 7, 6, 1]
    falling4 = Poly.from_falling_factorial([0, 0, 0, 0, 1])
    assert falling4 == Poly([0, -6, 11, -6, 1])
    assert falling4.to_falling_factorial() == [0, 0, 0, 0, 1]


def test_falling_factorial_round_trip_random():
    rng = random.Random(13)
    for _ in range(100):
        f = rand_poly(rng, max_deg=20, lo=-30, hi=30)
        assert Poly.from_falling_factorial(f.to_falling_factorial()) == f


# -- Sturm sequences -----------------------------------------------------------------


def test_sturm_sequence_examples():
    seq = sturm_sequence(Poly([6, -5, 1]))
    assert [p.degree for p in seq] == [2, 1, 0]
    assert sturm_diagnostic(seq).clean

    seq = sturm_sequence(Poly([1, 0, 1]))
    diag = sturm_diagnostic(seq)
    assert diag.negative_leading_index == 2
    assert diag.gap_index is None

    seq = sturm_sequence(Poly([0, 0, 0, 1]))  # triple root: ends early
    diag = sturm_diagnostic(seq)
    assert [p.degree for p in seq] == [3, 2]
    assert diag.gap_index == 2


def test_sturm_raw_mode_matches_primitive_signs():
    rng = random.Random(14)
    for _ in range(20):
        f = rand_poly(rng, max_deg=8)
        raw = sturm_sequence(f, primitive=False)
        prim = sturm_sequence(f, primitive=True)
        assert [p.degree for p in raw] == [p.degree for p in prim]
        for a, b in zip(raw, prim):
            assert (a.lc > 0) == (b.lc > 0)


def test_has_all_real_roots():
    ok, _ = has_all_real_roots(Poly([-1, 1]) * Poly([-2, 1]) * Poly([3, 1]))
    assert ok
    ok, diag = has_all_real_roots(Poly([1, 0, 1]))
    assert not ok and diag.negative_leading_index == 2
    ok, _ = has_all_real_roots(Poly([1, 1]) ** 2 * Poly([2, 1]))
    assert ok  # decided on the square-free part
    ok, _ = has_all_real_roots(Poly([1, 0, 0, 0, 1]))
    assert not ok
    with pytest.raises(ValueError):
        has_all_real_roots(Poly([1, -1]))


def test_has_all_real_roots_on_factored_products():
    # products of linear and irreducible quadratic factors are their own
    # certificate: all roots real iff no quadratic factor is present
    rng = random.Random(18)
    for _ in range(500):
        f = Poly([1])
        quadratics = 0
        deg = 0
        while deg < rng.randint(1, 12):
            if rng.random() < 0.5 and deg + 2 <= 12:
                b = rng.randint(-6, 6)
                c = rng.randint(b * b // 4 + 1, b * b // 4 + 9)  # b^2 - 4c < 0
                f = f * Poly([c, b, 1])
                quadratics += 1
                deg += 2
            else:
                f = f * Poly([-rng.randint(-8, 8), 1])
                deg += 1
        ok, _ = has_all_real_roots(f)
        assert ok == (quadratics == 0), f


# -- root counting ---------------------------------------------------------------------


def test_real_root_count_examples():
    assert real_root_count(Poly([6, -5, 1]), 0, 10) == 2
    assert real_root_count(Poly([1, 0, 1])) == 0
    assert real_root_count(Poly([0, 1, 1]), None, 0) == 2  # roots 0 and -1, both in (-inf, 0]
    assert real_root_count(Poly([0, 1, 1]), 0, None) == 0


def test_real_root_count_additive_over_partition():
    rng = random.Random(15)
    for _ in range(50):
        f = rand_poly(rng)
        cuts = sorted(rng.sample(range(-12, 13), 4))
        total = real_root_count(f, cuts[0], cuts[-1])
        pieces = sum(real_root_count(f, a, b) for a, b in zip(cuts, cuts[1:]))
        assert total == pieces


def test_real_root_count_multiplicity_collapses():
    f = Poly([1, 1]) ** 3 * Poly([-2, 1])
    assert real_root_count(f) == 2


# -- isolation --------------------------------------------------------------------------


def test_isolation_examples():
    ivs = isolate_real_roots(Poly([-2, 0, 1]), max_width=Fraction(1, 2**20))
    assert len(ivs) == 2
    for a, b in ivs:
        assert b - a <= Fraction(1, 2**20)
        assert (a < 0) == (b < 0) or a == b
    assert isolate_real_roots(Poly([5, 1])) == [(Fraction(-5), Fraction(-5))]
    assert isolate_real_roots(Poly([4, 0, 1])) == []
    with pytest.raises(ValueError):
        isolate_real_roots(Poly([1, 1]) ** 2)


def test_isolation_counts_and_disjointness():
    rng = random.Random(16)
    for _ in range(40):
        f = square_free_part(rand_poly(rng))
        if f.degree < 1:
            continue
        ivs = isolate_real_roots(f)
        assert len(ivs) == real_root_count(f)
        for (a1, b1), (a2, b2) in zip(ivs, ivs[1:]):
            assert b1 <= a2
        for a, b in ivs:
            if a == b:
                assert f(a) == 0
            else:
                assert f.sign_at(a) * f.sign_at(b) < 0


def test_refinement():
    f = Poly([-2, 0, 1])
    (a, b) = isolate_real_roots(f)[1]
    a2, b2 = refine_isolating_interval(f, (a, b), Fraction(1, 10**9))
    assert b2 - a2 <= Fraction(1, 10**9)
    assert Fraction(141421356, 10**8) < b2 < Fraction(141421357, 10**8) or a2 <= Fraction(141421356, 10**8)


# -- gcd / square-free -------------------------------------------------------------------


def test_gcd_and_square_free():
    f = Poly([1, 1]) ** 2 * Poly([-3, 1])
    g = Poly([1, 1]) * Poly([5, 1])
    assert poly_gcd(f, g) == Poly([1, 1])
    assert square_free_part(f) == Poly([1, 1]) * Poly([-3, 1])
    dec = square_free_decomposition(Poly([0, 1]) * Poly([-1, 1]) ** 3)
    assert [(p, k) for p, k in dec] == [(Poly([0, 1]), 1), (Poly([-1, 1]), 3)]


def test_cauchy_bound_contains_roots():
    f = Poly([6, -5, 1])
    b = cauchy_root_bound(f)
    assert real_root_count(f, -b, b) == 2


# -- interlacing ---------------------------------------------------------------------------


def test_interlacing_examples():
    res = interlaces(Poly([2, 1]), Poly([1, 1]) * Poly([3, 1]))
    assert res.ok and res.shape == "interlaces"
    res = interlaces(Poly([3, 1]), Poly([2, 1]))
    assert res.ok and res.shape == "alternates-left"
    res = interlaces(Poly([1, 1]), Poly([2, 1]))
    assert not res.ok


def test_interlacing_scalar_invariance():
    rng = random.Random(17)
    for _ in range(20):
        roots_g = sorted(rng.sample(range(-12, 0), 3))
        roots_f = [rng.randint(roots_g[0], roots_g[1]), rng.randint(roots_g[1], roots_g[2])]
        f = Poly([1])
        for r in roots_f:
            f = f * Poly([-r, 1])
        g = Poly([1])
        for r in roots_g:
            g = g * Poly([-r, 1])
        base = interlaces(f, g).ok
        assert interlaces(3 * f, g).ok == base
        assert interlaces(f, 7 * g).ok == base
        assert interlaces(Fraction(2, 3) * f, Fraction(7, 5) * g).ok == base


def test_interlacing_zero_and_failures():
    assert interlaces(Poly(), Poly([1, 1])).ok
    assert interlaces(Poly([1, 1]), Poly()).ok
    res = interlaces(Poly([1, 0, 1]), Poly([1, 1]))
    assert not res.ok and "real-rooted" in res.reason
    res = interlaces(Poly([1, 1]), Poly([0, 0, 1]) * Poly([1, 1]))
    assert not res.ok  # degree gap
    # shared roots cancelled first
    res = interlaces(Poly([2, 1]), Poly([2, 1]) * Poly([5, 1]))
    assert res.ok


def test_serialization_round_trip():
    f = Poly([0, -3, 6, -4, 1])
    assert Poly.from_json(f.to_json()) == f
    assert f.coefficient_strings() == ["0", "-3", "6", "-4", "1"]
