import math
from fractions import Fraction

import pytest

import isoray as ir
import isoray.linalg as la
from isoray import radius

from helpers import (
    hyperbolic_with_minus2,
    make_rng,
    max_root_modulus_float,
    random_unimodular,
    random_word,
    theorem_fixture,
    totient_oracle,
    unipotency_exponent_oracle,
    word_pools,
)


def test_is_isometry():
    L = ir.Lattice(((1, 0), (0, -2)))
    assert ir.is_isometry(L, ((1, 0), (0, 1)))
    assert ir.is_isometry(L, ((3, 4), (2, 3)))
    assert not ir.is_isometry(ir.hyperbolic_plane(), ((2, 0), (0, 1)))
    with pytest.raises(ValueError):
        ir.is_isometry(L, ((1, 0, 0), (0, 1, 0), (0, 0, 1)))


def test_isometry_construction_rejects_non_isometry():
    with pytest.raises(ValueError, match="gram not preserved"):
        ir.Isometry(ir.hyperbolic_plane(), ((2, 0), (0, 1)))


def test_isometry_inverse_and_matmul():
    L, g = ir.pell_isometry()
    inv = g.inverse()
    assert inv.matrix == ((3, -4), (-2, 3))
    assert (g @ inv).matrix == la.identity(2)
    assert g.power(3).matrix == la.mat_pow(g.matrix, 3)
    assert g.power(-2).matrix == la.mat_pow(inv.matrix, 2)


def test_is_in_O_prime():
    L, g = ir.pell_isometry()
    ident = ir.identity_isometry(L)
    assert ir.is_in_O_prime(L, ident)
    assert ir.is_in_O_prime(L, g)
    minus = ir.Isometry(L, ((-1, 0), (0, -1)))
    assert not ir.is_in_O_prime(L, minus)
    with pytest.raises(ValueError):
        ir.is_in_O_prime(ir.Lattice(((-2,),)), ((1,),))


def test_char_poly_examples():
    L = ir.hyperbolic_plane()
    ident = ir.identity_isometry(L)
    assert ir.char_poly(ident).coeffs == (1, -2, 1)
    _, g = ir.pell_isometry()
    assert ir.char_poly(g).coeffs == (1, -6, 1)
    L3 = hyperbolic_with_minus2()
    E = ir.eichler_transvection(L3, (1, 0, 0), (0, 0, 1))
    assert ir.char_poly(E).coeffs == (-1, 3, -3, 1)   # (x-1)^3


def test_char_poly_conjugation_invariance():
    rng = make_rng()
    L3 = hyperbolic_with_minus2()
    E = ir.eichler_transvection(L3, (1, 0, 0), (0, 0, 1))
    for _ in range(10):
        t = random_unimodular(rng, 3)
        conj = la.mat_mul(la.invert_unimodular(t), la.mat_mul(E.matrix, t))
        assert ir.char_poly(conj).coeffs == ir.char_poly(E).coeffs


def test_char_poly_str():
    _, g = ir.pell_isometry()
    assert str(ir.char_poly(g)) == "x^2 - 6x + 1"


def test_euler_phi_against_bruteforce():
    for d in range(1, 200):
        assert ir.euler_phi(d) == totient_oracle(d)
    with pytest.raises(ValueError):
        ir.euler_phi(0)


def test_unipotency_exponent_oracle_and_spot_values():
    for r in range(1, 21):
        assert ir.unipotency_exponent(r) == unipotency_exponent_oracle(r)
    assert ir.unipotency_exponent(1) == 2
    assert ir.unipotency_exponent(2) == 12
    assert ir.unipotency_exponent(4) == 120


def test_is_unipotent():
    L3 = hyperbolic_with_minus2()
    assert ir.is_unipotent(ir.identity_isometry(L3))
    E = ir.eichler_transvection(L3, (1, 0, 0), (0, 0, 1))
    assert ir.is_unipotent(E)
    _, g = ir.pell_isometry()
    assert not ir.is_unipotent(g)


def test_is_null_entropy_fixtures():
    L3 = hyperbolic_with_minus2()
    E = ir.eichler_transvection(L3, (1, 0, 0), (0, 0, 1))
    assert ir.is_null_entropy(E)
    swap = ir.Isometry(L3, ((0, 1, 0), (1, 0, 0), (0, 0, 1)))
    assert ir.is_null_entropy(swap)          # finite order
    _, g = ir.pell_isometry()
    assert not ir.is_null_entropy(g)


def test_null_entropy_against_float_oracle_random_words():
    rng = make_rng()
    checked = 0
    for L, gens in word_pools():
        for _ in range(30):
            _, iso = random_word(rng, gens, max_length=6)
            exact = ir.is_null_entropy(iso)
            numeric = max_root_modulus_float(ir.char_poly(iso)) <= 1 + 1e-8
            assert exact == numeric
            checked += 1
    assert checked >= 100


def test_spectral_radius_pell():
    _, g = ir.pell_isometry()
    ev = ir.spectral_radius(g, 1e-9)
    assert not ev.is_exactly_zero
    # 3 + 2 sqrt(2) is the largest root of x^2 - 6x + 1; the enclosure must
    # straddle it (sign change) and be at most tol wide
    def p(x):
        return x * x - 6 * x + 1
    assert p(ev.delta_low) <= 0 <= p(ev.delta_high)
    assert float(ev.delta_high - ev.delta_low) <= 1e-9
    assert abs(ev.log_spectral_radius - math.log(3 + 2 * math.sqrt(2))) < 1e-6
    assert ev.delta_low >= 1


def test_spectral_radius_exact_zero():
    L3 = hyperbolic_with_minus2()
    ident = ir.identity_isometry(L3)
    ev = ir.spectral_radius(ident, 1e-9)
    assert ev.is_exactly_zero
    assert ev.log_spectral_radius == 0.0
    assert ev.delta_low == ev.delta_high == 1
    E = ir.eichler_transvection(L3, (1, 0, 0), (0, 0, 1))
    assert ir.spectral_radius(E, 1e-9).is_exactly_zero


def test_spectral_radius_at_loose_tolerance():
    _, g = ir.pell_isometry()
    ev = ir.spectral_radius(g, 1e-2)
    assert ev.delta_high - ev.delta_low <= Fraction(1, 100)
    assert ev.delta_low <= Fraction(58285, 10000)
    assert ev.delta_high >= Fraction(58284, 10000)


def test_determinants_are_units():
    L3 = hyperbolic_with_minus2()
    isos = [
        ir.identity_isometry(L3),
        ir.eichler_transvection(L3, (1, 0, 0), (0, 0, 1)),
        ir.reflection(L3, (0, 0, 1)),
        ir.pell_isometry()[1],
    ]
    for iso in isos:
        assert iso.det in (1, -1)
        assert la.det(iso.matrix) == iso.det


def test_trace_power_product():
    L3 = hyperbolic_with_minus2()
    ident = ir.identity_isometry(L3)
    assert ir.trace_power_product(ident, ident, 5, 7) == 3
    _, g = ir.pell_isometry()
    ident2 = ir.identity_isometry(g.lattice)
    assert ir.trace_power_product(g, ident2, 1, 0) == 6
    with pytest.raises(ValueError):
        ir.trace_power_product(ident, ident2, 1, 1)
    with pytest.raises(ValueError):
        ir.trace_power_product(ident, ident, -1, 0)


def test_trace_identity_for_unipotent_pairs():
    S, _ = theorem_fixture()
    a, b = S.generators[0], S.generators[1]
    for l in range(0, 11):
        for m in range(0, 11):
            assert ir.trace_power_product(a, b, l, m) == 10


def test_unipotent_words_of_unipotent_pairs():
    S, _ = theorem_fixture()
    a, b = S.generators[0].matrix, S.generators[4].matrix
    for l in range(0, 11):
        for m in range(0, 11):
            word = la.mat_mul(la.mat_pow(a, l), la.mat_pow(b, m))
            assert ir.is_null_entropy(word)
            assert ir.is_unipotent(word)


def test_trace_bounded_for_null_entropy():
    # traces of null-entropy isometries lie in [-r, r], equality only when unipotent
    rng = make_rng()
    for L, gens in word_pools():
        r = L.rank
        for _ in range(12):
            _, iso = random_word(rng, gens, max_length=4)
            if not ir.is_null_entropy(iso):
                continue
            tr = sum(iso.matrix[i][i] for i in range(r))
            assert -r <= tr <= r
            if tr == r:
                assert ir.is_unipotent(iso)


def test_spectral_radius_lower_bound_on_fixtures():
    # ranks <= 4 keep the certified enclosure cheap for positive-entropy words;
    # null-entropy words of any rank short-circuit to the exact-zero branch
    rng = make_rng()
    for L, gens in word_pools():
        if L.rank > 4:
            continue
        for _ in range(5):
            _, iso = random_word(rng, gens, max_length=3)
            ev = ir.spectral_radius(iso, 1e-6)
            assert ev.delta_low >= 1
            assert ev.log_spectral_radius >= 0.0
            assert ev.is_exactly_zero == ir.is_null_entropy(iso)


def test_modulus_polynomial_pell():
    # roots of x^2-6x+1 are 3 +- 2 sqrt(2); pairwise products are
    # {z1^2, z2^2, 1, 1} giving (x^2-34x+1)(x-1)^2
    m = radius.modulus_polynomial([1, -6, 1])
    assert m == [1, -36, 70, -36, 1]


def test_graeffe_step_squares_roots():
    # x^2 - 3x + 2 has roots 1, 2 -> squared roots 1, 4
    assert radius.graeffe_step([2, -3, 1]) == [4, -5, 1]


def test_max_root_modulus_bounds_generic():
    lo, hi = radius.max_root_modulus_bounds([2, -3, 1], Fraction(1, 10**6))
    assert lo <= 2 <= hi
    assert hi - lo <= Fraction(1, 10**6)
    # all roots on the unit circle, floor pins the answer exactly
    lo, hi = radius.max_root_modulus_bounds([1, -1, 1], Fraction(1, 1000), lower_floor=Fraction(1))
    assert lo == hi == 1
