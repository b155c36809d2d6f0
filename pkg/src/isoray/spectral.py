"""Isometries, exact characteristic polynomials, and certified entropy.

The null-entropy decision is exact: an integer matrix of determinant +-1 has
all eigenvalues on the unit circle precisely when its n(r)-th power is
unipotent, where n(r) is the least common multiple of every cyclotomic order
d with euler_phi(d) <= r (eigenvalues on the circle are algebraic integers,
hence roots of unity).  Only the positive-entropy branch involves real
numbers, and those come with certified rational enclosures from radius.py.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import linalg, radius
from .lattice import HYPERBOLIC, Lattice, bilinear, classify


@dataclass(frozen=True)
class IntPolynomial:
    """Univariate integer polynomial, coefficients in ascending degree."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_monic(self) -> bool:
        return self.coeffs and self.coeffs[-1] == 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self):
        if not any(self.coeffs):
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                term = str(mag)
            elif i == 1:
                term = "x" if mag == 1 else f"{mag}x"
            else:
                term = f"x^{i}" if mag == 1 else f"{mag}x^{i}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)


@dataclass(frozen=True)
class Isometry:
    """Integer matrix preserving the Gram form of its lattice (columns act on
    column vectors).  Construction checks g^T G g = G and det g = +-1."""

    lattice: Lattice
    matrix: tuple[tuple[int, ...], ...]
    det: int = field(init=False)

    def __post_init__(self):
        mat = linalg.as_matrix(self.matrix)
        object.__setattr__(self, "matrix", mat)
        r = self.lattice.rank
        if len(mat) != r or any(len(row) != r for row in mat):
            raise ValueError("matrix size does not match lattice rank")
        gram = self.lattice.gram
        if linalg.mat_mul(linalg.mat_mul(linalg.transpose(mat), gram), mat) != gram:
            raise ValueError("gram not preserved")
        d = linalg.det(mat)
        if d not in (1, -1):
            raise ValueError("isometry determinant is not +-1")
        object.__setattr__(self, "det", d)

    @property
    def rank(self) -> int:
        return self.lattice.rank

    def apply(self, v) -> tuple[int, ...]:
        return linalg.mat_vec(self.matrix, linalg.as_vector(v))

    def inverse(self) -> "Isometry":
        # g^{-1} = G^{-1} g^T G, which is integral because g preserves G
        gram = self.lattice.gram
        ginv = linalg.invert_rational(gram)
        prod = linalg.mat_mul(linalg.mat_mul(ginv, linalg.transpose(self.matrix)), gram)
        ints = tuple(tuple(int(x) for x in row) for row in prod)
        return Isometry(self.lattice, ints)

    def __matmul__(self, other: "Isometry") -> "Isometry":
        if other.lattice != self.lattice:
            raise ValueError("isometries live on different lattices")
        return Isometry(self.lattice, linalg.mat_mul(self.matrix, other.matrix))

    def power(self, k: int) -> "Isometry":
        if k < 0:
            return self.inverse().power(-k)
        return Isometry(self.lattice, linalg.mat_pow(self.matrix, k))


@dataclass(frozen=True)
class EntropyValue:
    """Entropy log(delta) with a certified enclosure delta in [delta_low, delta_high].

    is_exactly_zero is decided by the exact unit-circle test, never by the
    numeric value; when set, the enclosure is the point 1.
    """

    log_spectral_radius: float
    is_exactly_zero: bool
    spectral_radius: float
    tol: float
    delta_low: Fraction
    delta_high: Fraction


def is_isometry(L: Lattice, matrix) -> bool:
    """True when the integer matrix preserves the Gram form exactly."""
    mat = linalg.as_matrix(matrix)
    if len(mat) != L.rank or any(len(row) != L.rank for row in mat):
        raise ValueError("matrix size does not match lattice rank")
    return linalg.mat_mul(linalg.mat_mul(linalg.transpose(mat), L.gram), mat) == L.gram


def is_in_O_prime(L: Lattice, g) -> bool:
    """True when g preserves the chosen positive cone.

    Since g.x0 has positive square and the two cone components are separated
    by the sign of the pairing with any interior point, this is the sign test
    (g.x0, x0) > 0.
    """
    if classify(L) != HYPERBOLIC:
        raise ValueError("positive cone is only defined for hyperbolic lattices")
    mat = g.matrix if isinstance(g, Isometry) else linalg.as_matrix(g)
    x0 = L.positive_orientation
    return bilinear(L, linalg.mat_vec(mat, x0), x0) > 0


def char_poly(g) -> IntPolynomial:
    """Characteristic polynomial det(xI - g), monic of degree r, computed
    fraction-free by the Faddeev-LeVerrier recursion."""
    mat = g.matrix if isinstance(g, Isometry) else linalg.as_matrix(g)
    return IntPolynomial(_char_poly_coeffs(mat))


def _char_poly_coeffs(mat) -> tuple[int, ...]:
    n = len(mat)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = linalg.identity(n)     # M_1 = A * I
    for k in range(1, n + 1):
        m = linalg.mat_mul(mat, m)
        trace = sum(m[i][i] for i in range(n))
        c, rem = divmod(-trace, k)
        if rem:
            raise ArithmeticError("Faddeev-LeVerrier division failed")
        coeffs[n - k] = c
        if k < n:
            m = tuple(
                tuple(m[i][j] + (c if i == j else 0) for j in range(n))
                for i in range(n)
            )
    return tuple(coeffs)


def euler_phi(d: int) -> int:
    """Euler totient, by trial-division factorisation."""
    if d <= 0:
        raise ValueError("d must be positive")
    result = d
    n = d
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1 if p == 2 else 2
    if n > 1:
        result -= result // n
    return result


@lru_cache(maxsize=None)
def unipotency_exponent(r: int) -> int:
    """lcm of all d >= 1 with euler_phi(d) <= r.

    Raising any integer matrix of rank r with unit-circle spectrum to this
    power yields a unipotent matrix.  The search is finite because
    euler_phi(d) >= sqrt(d/2), so d <= 2 r^2.
    """
    if r < 1:
        raise ValueError("rank must be positive")
    n = 1
    for d in range(1, 2 * r * r + 1):
        if euler_phi(d) <= r:
            n = math.lcm(n, d)
    return n


def _is_nilpotent(mat) -> bool:
    """(mat)^r == 0, by repeated squaring with an early exit."""
    n = len(mat)
    if n == 0:
        return True
    power = mat
    covered = 1
    while True:
        if linalg.is_zero_matrix(power):
            return True
        if covered >= n:
            return False
        power = linalg.mat_mul(power, power)
        covered *= 2


def is_unipotent(g) -> bool:
    """All eigenvalues equal to 1, tested exactly as (g - I)^r = 0."""
    mat = g.matrix if isinstance(g, Isometry) else linalg.as_matrix(g)
    return _is_nilpotent(linalg.mat_sub(mat, linalg.identity(len(mat))))


def is_null_entropy(g) -> bool:
    """True iff every eigenvalue lies on the unit circle.

    Exact test: g^{n(r)} is unipotent, with n(r) = unipotency_exponent(r).
    A cheap necessary condition is checked first: a unit-circle spectrum
    forces |coeff of x^(r-k)| <= C(r,k) in the characteristic polynomial and
    in each of its Graeffe root-squared iterates, so any violation certifies
    an off-circle eigenvalue without computing large matrix powers.
    """
    mat = g.matrix if isinstance(g, Isometry) else linalg.as_matrix(g)
    r = len(mat)
    if r == 0:
        return True
    q = list(_char_poly_coeffs(mat))
    for _ in range(7):
        for k in range(1, r + 1):
            if abs(q[r - k]) > math.comb(r, k):
                return False
        q = radius.graeffe_step(q)
    if _is_nilpotent(linalg.mat_sub(mat, linalg.identity(r))):
        return True
    power = linalg.mat_pow(mat, unipotency_exponent(r))
    return _is_nilpotent(linalg.mat_sub(power, linalg.identity(r)))


def spectral_radius(g, tol: float = 1e-9) -> EntropyValue:
    """Spectral radius delta(g) and entropy log delta(g).

    The exact unit-circle test fires first; only genuinely positive-entropy
    inputs reach the certified numeric enclosure, which is tightened until
    its width is below tol.  Determinant +-1 pins delta >= 1, so the log of
    the enclosure is within tol of the true entropy as well.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if is_null_entropy(g):
        one = Fraction(1)
        return EntropyValue(
            log_spectral_radius=0.0,
            is_exactly_zero=True,
            spectral_radius=1.0,
            tol=tol,
            delta_low=one,
            delta_high=one,
        )
    mat = g.matrix if isinstance(g, Isometry) else linalg.as_matrix(g)
    coeffs = _char_poly_coeffs(mat)
    lo, hi = radius.max_root_modulus_bounds(coeffs, Fraction(tol) / 2, lower_floor=Fraction(1))
    mid = (lo + hi) / 2
    log_mid = math.log(mid.numerator) - math.log(mid.denominator)
    try:
        delta_float = float(mid)
    except OverflowError:
        delta_float = math.inf
    return EntropyValue(
        log_spectral_radius=log_mid,
        is_exactly_zero=False,
        spectral_radius=delta_float,
        tol=tol,
        delta_low=lo,
        delta_high=hi,
    )


def trace_power_product(a, b, l: int, m: int) -> int:
    """Exact trace of a^l b^m (powers by repeated squaring)."""
    amat = a.matrix if isinstance(a, Isometry) else linalg.as_matrix(a)
    bmat = b.matrix if isinstance(b, Isometry) else linalg.as_matrix(b)
    if len(amat) != len(bmat):
        raise ValueError("matrices must have equal rank")
    if l < 0 or m < 0:
        raise ValueError("exponents must be nonnegative")
    prod = linalg.mat_mul(linalg.mat_pow(amat, l), linalg.mat_pow(bmat, m))
    return sum(prod[i][i] for i in range(len(prod)))
