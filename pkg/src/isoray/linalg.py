"""Exact linear algebra over the integers and rationals.

Matrices are sequences of rows, vectors are flat sequences; everything is
plain Python ints (or Fractions where division is unavoidable), so results
are exact at any size.  All functions return tuples so values can be hashed
and shared freely.
"""

from fractions import Fraction
from math import gcd

Matrix = tuple[tuple[int, ...], ...]
Vector = tuple[int, ...]


def as_matrix(rows) -> Matrix:
    return tuple(tuple(int(x) for x in row) for row in rows)


def as_vector(v) -> Vector:
    return tuple(int(x) for x in v)


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(a) -> Matrix:
    return tuple(zip(*a)) if a else ()


def mat_mul(a, b) -> Matrix:
    bt = list(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def mat_vec(a, v) -> Vector:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def mat_add(a, b) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(a, b))


def mat_sub(a, b) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(a, b))


def mat_pow(a, k: int) -> Matrix:
    """k-th power of a square matrix by repeated squaring, k >= 0."""
    if k < 0:
        raise ValueError("negative exponent; invert first")
    result = identity(len(a))
    base = as_matrix(a)
    while k:
        if k & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base) if k > 1 else base
        k >>= 1
    return result


def is_zero_matrix(a) -> bool:
    return all(x == 0 for row in a for x in row)


def dot(u, v) -> int:
    return sum(x * y for x, y in zip(u, v))


def det(a) -> int:
    """Determinant of an integer matrix by fraction-free (Bareiss) elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(row) for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def rank(a) -> int:
    """Rank over the rationals, computed fraction-free."""
    if not a:
        return 0
    m = [list(row) for row in a]
    rows, cols = len(m), len(m[0])
    r = 0
    prev = 1
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, rows):
            for j in range(c + 1, cols):
                m[i][j] = (m[i][j] * m[r][c] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        r += 1
        if r == rows:
            break
    return r


def inertia_with_witness(gram):
    """Signature of a symmetric rational/integer matrix, without floating point.

    Performs a symmetric congruence reduction over exact rationals: pivot on a
    nonzero diagonal entry when available, otherwise repair a zero diagonal by
    the x -> x + y congruence trick; rows that vanish entirely are radical
    directions and count as zero eigenvalues.

    Returns ((positive, zero, negative), witness) where witness is a tuple of
    rational coordinate rows y_i with y_i G y_j^T diagonal, so the square of
    the vector represented by y_i is the i-th diagonal entry.  This is what
    Sylvester's law of inertia counts, so the triple is the exact signature.
    """
    n = len(gram)
    a = [[Fraction(x) for x in row] for row in gram]
    t = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    pos = neg = zero = 0
    for k in range(n):
        if a[k][k] == 0:
            swap = next((j for j in range(k + 1, n) if a[j][j] != 0), None)
            if swap is not None:
                a[k], a[swap] = a[swap], a[k]
                for row in a:
                    row[k], row[swap] = row[swap], row[k]
                t[k], t[swap] = t[swap], t[k]
            else:
                other = next((j for j in range(k + 1, n) if a[k][j] != 0), None)
                if other is None:
                    zero += 1
                    continue
                for j in range(n):
                    a[k][j] += a[other][j]
                for row in a:
                    row[k] += row[other]
                t[k] = [x + y for x, y in zip(t[k], t[other])]
        p = a[k][k]
        if p > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, n):
            if a[i][k] == 0:
                continue
            f = a[i][k] / p
            for j in range(n):
                a[i][j] -= f * a[k][j]
            for x in range(n):
                a[x][i] -= f * a[x][k]
            t[i] = [x - f * y for x, y in zip(t[i], t[k])]
    return (pos, zero, neg), tuple(tuple(row) for row in t)


def inertia(gram):
    """(positive, zero, negative) eigenvalue counts of a symmetric matrix, exactly."""
    return inertia_with_witness(gram)[0]


def hermite_normal_form(a) -> Matrix:
    """Row-style Hermite normal form (zero rows dropped, pivots positive,
    entries above each pivot reduced into [0, pivot))."""
    h, _ = hnf_with_transform(a)
    return h


def hnf_with_transform(a):
    """(H, U) with U unimodular, U @ a = (H padded with zero rows)."""
    m = [list(row) for row in a]
    rows = len(m)
    if rows == 0:
        return (), ()
    cols = len(m[0])
    u = [list(row) for row in identity(rows)]
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
            u[r], u[piv] = u[piv], u[r]
        for i in range(r + 1, rows):
            while m[i][c] != 0:
                q = m[r][c] // m[i][c]
                m[r] = [x - q * y for x, y in zip(m[r], m[i])]
                u[r] = [x - q * y for x, y in zip(u[r], u[i])]
                m[r], m[i] = m[i], m[r]
                u[r], u[i] = u[i], u[r]
        if m[r][c] < 0:
            m[r] = [-x for x in m[r]]
            u[r] = [-x for x in u[r]]
        for i in range(r):
            q = m[i][c] // m[r][c]
            if q:
                m[i] = [x - q * y for x, y in zip(m[i], m[r])]
                u[i] = [x - q * y for x, y in zip(u[i], u[r])]
        r += 1
        if r == rows:
            break
    h = tuple(tuple(row) for row in m[:r])
    return h, tuple(tuple(row) for row in u)


def kernel_basis(a, ncols: int | None = None) -> tuple[Vector, ...]:
    """Basis of the integer kernel {x : a @ x = 0}, as rows.

    The kernel of an integer matrix is automatically saturated; the basis is
    canonicalised by Hermite normal form so repeated runs agree bit for bit.
    Pass ncols when a may have no rows.
    """
    if not a:
        if ncols is None:
            raise ValueError("ncols required for an empty matrix")
        return identity(ncols)
    h, u = hnf_with_transform(transpose(a))
    null_rows = u[len(h):]
    if not null_rows:
        return ()
    return hermite_normal_form(null_rows)


def smith_normal_form(a):
    """(divisors, P, Qinv) with P @ a @ Qinv^{-1} diagonal.

    divisors are the elementary divisors d_1 | d_2 | ..., all nonnegative;
    P and Qinv are unimodular.  Row span of a equals the span of
    {d_i * Qinv[i]}, which is what basis-completion and saturation tests need.
    """
    m = [list(row) for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    p = [list(r) for r in identity(rows)]
    qinv = [list(r) for r in identity(cols)]

    def row_op(i, j, k):  # row_i -= k * row_j
        m[i] = [x - k * y for x, y in zip(m[i], m[j])]
        p[i] = [x - k * y for x, y in zip(p[i], p[j])]

    def col_op(j, i, k):  # col_j -= k * col_i ; inverse op on qinv rows
        for row in m:
            row[j] -= k * row[i]
        qinv[i] = [x + k * y for x, y in zip(qinv[i], qinv[j])]

    t = 0
    while t < min(rows, cols):
        # find the absolutely smallest nonzero entry in the trailing block
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if m[i][j] != 0 and (best is None or abs(m[i][j]) < abs(m[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        if bi != t:
            m[t], m[bi] = m[bi], m[t]
            p[t], p[bi] = p[bi], p[t]
        if bj != t:
            for row in m:
                row[t], row[bj] = row[bj], row[t]
            qinv[t], qinv[bj] = qinv[bj], qinv[t]
        dirty = False
        for i in range(t + 1, rows):
            if m[i][t] != 0:
                q = m[i][t] // m[t][t]
                row_op(i, t, q)
                if m[i][t] != 0:
                    dirty = True
        for j in range(t + 1, cols):
            if m[t][j] != 0:
                q = m[t][j] // m[t][t]
                col_op(j, t, q)
                if m[t][j] != 0:
                    dirty = True
        if dirty:
            continue
        # divisibility: fold in any entry the pivot does not divide
        culprit = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if m[i][j] % m[t][t] != 0:
                    culprit = i
                    break
            if culprit is not None:
                break
        if culprit is not None:
            row_op(t, culprit, -1)
            continue
        if m[t][t] < 0:
            m[t] = [-x for x in m[t]]
            p[t] = [-x for x in p[t]]
        t += 1
    divisors = tuple(m[i][i] for i in range(min(rows, cols)))
    return divisors, tuple(tuple(r) for r in p), tuple(tuple(r) for r in qinv)


def elementary_divisors(a) -> tuple[int, ...]:
    return smith_normal_form(a)[0]


def complete_basis_rows(rows, n: int) -> tuple[Vector, ...]:
    """Rows extending the given primitive, independent rows to a basis of Z^n.

    Raises ValueError when the input rows do not span a saturated sublattice
    of full row rank (some elementary divisor differs from 1).
    """
    k = len(rows)
    if k == 0:
        return identity(n)
    divisors, _, qinv = smith_normal_form(rows)
    if len(divisors) != k or any(d != 1 for d in divisors):
        raise ValueError("rows do not form a basis of a saturated sublattice")
    return tuple(qinv[k:])


def invert_rational(a):
    """Inverse of a square matrix as Fractions (Gauss-Jordan)."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(1 if i == j else 0) for j in range(n)]
         for i, row in enumerate(a)]
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        m[c], m[piv] = m[piv], m[c]
        inv = 1 / m[c][c]
        m[c] = [x * inv for x in m[c]]
        for i in range(n):
            if i != c and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return tuple(tuple(row[n:]) for row in m)


def invert_unimodular(a) -> Matrix:
    """Integer inverse of a matrix with determinant +-1."""
    inv = invert_rational(a)
    out = []
    for row in inv:
        ints = []
        for x in row:
            if x.denominator != 1:
                raise ValueError("matrix is not unimodular")
            ints.append(int(x))
        out.append(tuple(ints))
    return tuple(out)


def solve_rational(a, b):
    """Solution x of a @ x = b over the rationals, or None if inconsistent.

    For underdetermined systems the free variables are set to zero, so the
    answer is deterministic.
    """
    rows = len(a)
    cols = len(a[0]) if rows else 0
    m = [[Fraction(x) for x in row] + [Fraction(bv)] for row, bv in zip(a, b)]
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    for i in range(r, rows):
        if m[i][cols] != 0:
            return None
    x = [Fraction(0)] * cols
    for i, c in enumerate(pivots):
        x[c] = m[i][cols]
    return tuple(x)


def solve_integer(a, b) -> Vector | None:
    """Integer solution of a @ x = b, or None when none exists with the
    deterministic free-variable choice of solve_rational."""
    x = solve_rational(a, b)
    if x is None or any(v.denominator != 1 for v in x):
        return None
    return tuple(int(v) for v in x)


def content(v) -> int:
    """gcd of the entries (0 for the zero vector)."""
    g = 0
    for x in v:
        g = gcd(g, int(x))
    return g


def clear_denominators(v) -> Vector:
    """Scale a rational vector to a primitive integer vector."""
    fracs = [Fraction(x) for x in v]
    scale = 1
    for x in fracs:
        scale = scale * x.denominator // gcd(scale, x.denominator)
    ints = [int(x * scale) for x in fracs]
    g = content(ints)
    if g > 1:
        ints = [x // g for x in ints]
    return tuple(ints)
