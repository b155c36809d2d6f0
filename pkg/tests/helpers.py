"""Shared fixtures and independent oracles for the test suite."""

import math
import os
import random

import numpy as np

import isoray as ir
import isoray.linalg as la

SEED = int(os.environ.get("ISORAY_SEED", "0"))


def make_rng():
    return random.Random(SEED)


def totient_oracle(d: int) -> int:
    """Brute-force unit count mod d."""
    return sum(1 for k in range(1, d + 1) if math.gcd(k, d) == 1)


def unipotency_exponent_oracle(r: int) -> int:
    n = 1
    for d in range(1, 2 * r * r + 1):
        if totient_oracle(d) <= r:
            n = math.lcm(n, d)
    return n


def max_root_modulus_float(poly) -> float:
    """Independent floating-point root finder on the characteristic polynomial."""
    coeffs = list(reversed(poly.coeffs))
    if len(coeffs) <= 1:
        return 1.0
    roots = np.roots([float(c) for c in coeffs])
    if len(roots) == 0:
        return 1.0
    return float(np.max(np.abs(roots)))


def random_unimodular(rng, n, entry_bound=10, steps=40):
    """Product of elementary row additions, entries kept within the bound."""
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i = rng.randrange(n)
        j = rng.randrange(n)
        if i == j:
            continue
        s = rng.choice((-1, 1))
        cand = [a + s * b for a, b in zip(m[i], m[j])]
        if max(abs(x) for x in cand) <= entry_bound:
            m[i] = cand
    return tuple(tuple(row) for row in m)


def random_word(rng, generators, max_length=6):
    """Random reduced word over the generators and their inverses."""
    length = rng.randint(1, max_length)
    letters = []
    for _ in range(length):
        letters.append((rng.randrange(len(generators)), rng.choice((-1, 1))))
    iso = None
    for i, e in letters:
        step = generators[i] if e == 1 else generators[i].inverse()
        iso = step if iso is None else iso @ step
    return letters, iso


def hyperbolic_with_minus2():
    """U + <-2>, rank 3."""
    return ir.direct_sum([ir.hyperbolic_plane(), ir.Lattice(((-2,),))])


def theorem_fixture():
    """U + E8(-1) with the eight transvections E(e, u_j), rank 10."""
    L = ir.direct_sum([ir.hyperbolic_plane(), ir.root_lattice("E", 8, negate=True)])
    e = (1, 0) + (0,) * 8
    gens = tuple(
        ir.eichler_transvection(L, e, tuple(1 if i == 2 + j else 0 for i in range(10)))
        for j in range(8)
    )
    return ir.GeneratorSet(L, gens), e


def word_pools():
    """Generator pools on lattices of rank 2, 3, 4 and 10 mixing transvections,
    reflections in (-2)-vectors, and the positive-entropy rank-2 fixture."""
    pools = []
    Lp, pell = ir.pell_isometry()
    pools.append((Lp, (pell,)))

    L3 = hyperbolic_with_minus2()
    e3 = (1, 0, 0)
    u3 = (0, 0, 1)
    pools.append((L3, (ir.eichler_transvection(L3, e3, u3), ir.reflection(L3, u3))))

    L4 = ir.direct_sum([ir.hyperbolic_plane(), ir.root_lattice("A", 2, negate=True)])
    e4 = (1, 0, 0, 0)
    roots4 = [(0, 0, 1, 0), (0, 0, 0, 1), (0, 0, 1, 1)]
    gens4 = [ir.eichler_transvection(L4, e4, r) for r in roots4[:2]]
    gens4 += [ir.reflection(L4, r) for r in roots4]
    pools.append((L4, tuple(gens4)))

    S10, e10 = theorem_fixture()
    gens10 = list(S10.generators)
    for j in range(8):
        u = tuple(1 if i == 2 + j else 0 for i in range(10))
        gens10.append(ir.reflection(S10.lattice, u))
    pools.append((S10.lattice, tuple(gens10)))
    return pools
