import itertools

import pytest

import isoray as ir
import isoray.linalg as la

from helpers import hyperbolic_with_minus2, make_rng, random_unimodular


def test_bilinear_examples():
    U = ir.hyperbolic_plane()
    assert ir.bilinear(U, (1, 0), (0, 1)) == 1
    assert ir.bilinear(U, (1, 0), (1, 0)) == 0
    E8m = ir.root_lattice("E", 8, negate=True)
    for i in range(8):
        root = tuple(1 if j == i else 0 for j in range(8))
        assert ir.bilinear(E8m, root, root) == -2


def test_bilinear_symmetry_random():
    rng = make_rng()
    L = hyperbolic_with_minus2()
    for _ in range(30):
        x = tuple(rng.randint(-9, 9) for _ in range(3))
        y = tuple(rng.randint(-9, 9) for _ in range(3))
        assert ir.bilinear(L, x, y) == ir.bilinear(L, y, x)


def test_bilinear_dimension_mismatch():
    with pytest.raises(ValueError):
        ir.bilinear(ir.hyperbolic_plane(), (1, 0, 0), (0, 1))


def test_lattice_validation():
    with pytest.raises(ValueError):
        ir.Lattice(((0, 1), (2, 0)))        # not symmetric
    with pytest.raises(ValueError):
        ir.Lattice(((1, 1), (1, 1)))        # degenerate
    with pytest.raises(ValueError):
        ir.Lattice(((1, 0),))               # not square
    with pytest.raises(ValueError):
        ir.Lattice(((0, 1), (1, 0)), positive_orientation=(1, 0))  # null square


def test_signature_table():
    assert ir.signature(ir.hyperbolic_plane()) == (1, 0, 1)
    assert ir.signature(ir.root_lattice("E", 8, negate=True)) == (0, 0, 8)
    assert ir.signature(ir.k3_lattice()) == (3, 0, 19)


def test_signature_invariance_under_congruence():
    rng = make_rng()
    grams = [
        ir.hyperbolic_plane().gram,
        hyperbolic_with_minus2().gram,
        ir.root_lattice("A", 2).gram,
        ir.root_lattice("D", 4, negate=True).gram,
        ir.direct_sum([ir.hyperbolic_plane(), ir.root_lattice("E", 8, negate=True)]).gram,
    ]
    for gram in grams:
        n = len(gram)
        base = la.inertia(gram)
        for _ in range(6):
            t = random_unimodular(rng, n)
            conj = la.mat_mul(la.transpose(t), la.mat_mul(gram, t))
            assert la.inertia(conj) == base


def test_classify():
    assert ir.classify(ir.hyperbolic_plane()) == ir.HYPERBOLIC
    assert ir.classify(ir.Lattice(((-2,),))) == ir.ELLIPTIC
    UU = ir.direct_sum([ir.hyperbolic_plane(), ir.hyperbolic_plane()])
    assert ir.classify(UU) == ir.OTHER
    assert ir.classify_signature(ir.Signature(0, 1, 2)) == ir.PARABOLIC


def test_is_primitive():
    L = hyperbolic_with_minus2()
    assert ir.is_primitive(L, (1, 0, 0))
    assert not ir.is_primitive(L, (2, 4, 0))
    assert ir.is_primitive(L, (3, 5, 0))
    with pytest.raises(ValueError):
        ir.is_primitive(L, (0, 0, 0))


def test_primitivize():
    L = ir.Lattice(((1, 0, 0), (0, -1, 0), (0, 0, -1)))
    assert L.positive_orientation == (1, 0, 0)
    assert ir.primitivize(L, (2, 4, 0)) == (1, 2, 0)
    # orientation flip driven by the pairing with x0
    assert ir.primitivize(L, (-3, -6, -9), orient=True) == (1, 2, 3)
    # already primitive, positively paired: unchanged
    assert ir.primitivize(L, (1, 2, 3), orient=True) == (1, 2, 3)
    with pytest.raises(ValueError):
        ir.primitivize(L, (0, 0, 0))
    # negative vector orthogonal to x0 keeps a deterministic sign
    assert ir.primitivize(L, (0, -2, 0), orient=True) == (0, 1, 0)


def test_orthogonal_complement_examples():
    U = ir.hyperbolic_plane()
    assert ir.orthogonal_complement(U, (1, 0)) == ((1, 0),)
    D = ir.Lattice(((1, 0), (0, -2)))
    assert ir.orthogonal_complement(D, (1, 0)) == ((0, 1),)
    L = hyperbolic_with_minus2()
    comp = ir.orthogonal_complement(L, (1, 0, 0))
    assert comp == ((1, 0, 0), (0, 0, 1))


def test_orthogonal_complement_is_saturated():
    rng = make_rng()
    L = ir.direct_sum([ir.hyperbolic_plane(), ir.root_lattice("A", 2, negate=True)])
    for _ in range(15):
        v = tuple(rng.randint(-4, 4) for _ in range(4))
        if not any(v):
            continue
        comp = ir.orthogonal_complement(L, v)
        assert len(comp) == 3
        assert all(d == 1 for d in la.elementary_divisors(comp))
        for row in comp:
            assert ir.bilinear(L, row, v) == 0


def test_complete_to_basis():
    U = ir.hyperbolic_plane()
    w = ir.complete_to_basis(U, ((1, 0),))
    assert la.det(((1, 0), w)) in (1, -1)
    L = hyperbolic_with_minus2()
    w3 = ir.complete_to_basis(L, ((1, 0, 0), (0, 0, 1)))
    assert la.det(((1, 0, 0), (0, 0, 1), w3)) in (1, -1)
    with pytest.raises(ValueError):
        ir.complete_to_basis(U, ((2, 0),))      # not primitive
    with pytest.raises(ValueError):
        ir.complete_to_basis(L, ((1, 0, 0),))   # wrong rank


def test_quotient_lattice_small():
    L = hyperbolic_with_minus2()
    q = ir.quotient_lattice(L, (1, 0, 0))
    assert q.quotient.gram == ((-2,),)
    assert q.complement_basis[0] == (1, 0, 0)
    assert ir.classify(q.quotient) == ir.ELLIPTIC
    # basis property: change of basis matrix is unimodular
    full = q.complement_basis + (q.completion_vector,)
    assert la.det(full) in (1, -1)
    # projection really inverts the basis matrix
    cols = la.transpose(full)
    assert la.mat_mul(q.projection, cols) == la.identity(3)


def test_quotient_lattice_e8():
    L = ir.direct_sum([ir.hyperbolic_plane(), ir.root_lattice("E", 8, negate=True)])
    v = (1, 0) + (0,) * 8
    q = ir.quotient_lattice(L, v)
    assert q.quotient.gram == ir.root_lattice("E", 8, negate=True).gram
    assert ir.signature(q.quotient) == (0, 0, 8)
    for u in q.complement_basis:
        assert ir.bilinear(L, u, v) == 0


def test_quotient_lattice_rank2_edge():
    U = ir.hyperbolic_plane()
    q = ir.quotient_lattice(U, (1, 0))
    assert q.quotient.rank == 0


def test_quotient_lattice_preconditions():
    with pytest.raises(ValueError, match="hyperbolic"):
        ir.quotient_lattice(ir.k3_lattice(), (1, 0) + (0,) * 20)
    L = hyperbolic_with_minus2()
    with pytest.raises(ValueError, match="primitive"):
        ir.quotient_lattice(L, (2, 0, 0))
    with pytest.raises(ValueError, match="isotropic"):
        ir.quotient_lattice(L, (1, 1, 0))
    with pytest.raises(ValueError, match="positive cone"):
        ir.quotient_lattice(L, (-1, 0, 0))


def test_quotient_definite_on_catalog_cases():
    cases = []
    for block in (ir.Lattice(((-2,),)), ir.root_lattice("A", 2, negate=True),
                  ir.root_lattice("E", 8, negate=True)):
        cases.append(ir.direct_sum([ir.hyperbolic_plane(), block]))
    for L in cases:
        v = tuple(1 if i == 0 else 0 for i in range(L.rank))
        q = ir.quotient_lattice(L, v)
        sig = ir.signature(q.quotient)
        assert sig == (0, 0, L.rank - 2)


def test_schwartz_property_on_boundary_vectors():
    # closure of the positive cone minus 0: (x, x') >= 0, equality only for
    # proportional boundary vectors
    L = hyperbolic_with_minus2()
    x0 = L.positive_orientation
    closure = []
    for coords in itertools.product(range(-4, 5), repeat=3):
        if not any(coords):
            continue
        if ir.bilinear(L, coords, coords) >= 0 and ir.bilinear(L, coords, x0) > 0:
            closure.append(coords)
    assert closure
    for x in closure:
        for y in closure:
            pairing = ir.bilinear(L, x, y)
            assert pairing >= 0
            if pairing == 0:
                assert ir.bilinear(L, x, x) == 0
                assert ir.bilinear(L, y, y) == 0
                # proportional boundary points
                assert all(
                    x[i] * y[j] == x[j] * y[i]
                    for i in range(3) for j in range(3)
                )


def test_lattice_rank_zero():
    L = ir.Lattice(())
    assert L.rank == 0
    assert ir.classify(L) == ir.ELLIPTIC
