"""Integer lattices with nondegenerate symmetric bilinear forms.

A lattice is held in a fixed basis: an exact integer Gram matrix plus, for
hyperbolic lattices, a reference vector selecting the positive cone.  Vectors
are plain tuples of ints in that basis and act as column vectors, so the
pairing is x^T G y.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import NamedTuple

from . import linalg

HYPERBOLIC = "hyperbolic"
PARABOLIC = "parabolic"
ELLIPTIC = "elliptic"
OTHER = "other"


class InternalInconsistencyError(RuntimeError):
    """A state the underlying theory rules out: corrupted input or a bug."""


class Signature(NamedTuple):
    positive: int
    zero: int
    negative: int


@dataclass(frozen=True)
class Lattice:
    """Free module of finite rank with an exact, nondegenerate Gram matrix.

    positive_orientation is a vector x0 with (x0, x0) > 0 marking the chosen
    positive cone.  When omitted it is derived canonically for hyperbolic
    lattices: congruence-diagonalise the form, clear denominators on the
    (unique) positive direction, and fix the sign so the first nonzero
    coordinate is positive.
    """

    gram: tuple[tuple[int, ...], ...]
    positive_orientation: tuple[int, ...] | None = None

    def __post_init__(self):
        gram = linalg.as_matrix(self.gram)
        object.__setattr__(self, "gram", gram)
        r = len(gram)
        for row in gram:
            if len(row) != r:
                raise ValueError("gram matrix is not square")
        for i in range(r):
            for j in range(i):
                if gram[i][j] != gram[j][i]:
                    raise ValueError("gram matrix is not symmetric")
        if linalg.det(gram) == 0:
            raise ValueError("gram matrix is degenerate")
        x0 = self.positive_orientation
        if x0 is not None:
            x0 = linalg.as_vector(x0)
            if len(x0) != r:
                raise ValueError("positive_orientation has wrong length")
            if linalg.dot(x0, linalg.mat_vec(gram, x0)) <= 0:
                raise ValueError("positive_orientation must have positive square")
            object.__setattr__(self, "positive_orientation", x0)
        elif _signature(gram) == Signature(1, 0, r - 1):
            object.__setattr__(self, "positive_orientation", _canonical_orientation(gram))

    @property
    def rank(self) -> int:
        return len(self.gram)


@dataclass(frozen=True)
class QuotientData:
    """The elliptic quotient of a hyperbolic lattice by a primitive isotropic v.

    complement_basis = (v, u_1, ..., u_{r-2}) is a basis of the saturated
    orthogonal complement of v; together with completion_vector w it is a
    basis of the whole lattice.  quotient carries the Gram matrix
    (u_i, u_j), and projection is the inverse of the column matrix
    [v u_1 ... u_{r-2} w], i.e. it rewrites ambient coordinates in the new
    basis.
    """

    quotient: Lattice
    complement_basis: tuple[tuple[int, ...], ...]
    completion_vector: tuple[int, ...]
    projection: tuple[tuple[int, ...], ...]


@lru_cache(maxsize=None)
def _signature(gram) -> Signature:
    return Signature(*linalg.inertia(gram))


def _canonical_orientation(gram) -> tuple[int, ...]:
    _, witness = linalg.inertia_with_witness(gram)
    return _positive_witness(gram, witness)


def _positive_witness(gram, witness_rows) -> tuple[int, ...]:
    """First congruence row with positive square, as a primitive integer vector
    with canonical sign (first nonzero coordinate positive)."""
    for row in witness_rows:
        x = linalg.clear_denominators(row)
        if not any(x):
            continue
        if linalg.dot(x, linalg.mat_vec(gram, x)) > 0:
            lead = next(c for c in x if c != 0)
            if lead < 0:
                x = tuple(-c for c in x)
            return x
    raise InternalInconsistencyError("no positive direction in a form declared positive")


def bilinear(L: Lattice, x, y) -> int:
    """Exact pairing x^T . gram . y."""
    x = linalg.as_vector(x)
    y = linalg.as_vector(y)
    if len(x) != L.rank or len(y) != L.rank:
        raise ValueError("vector length does not match lattice rank")
    return linalg.dot(x, linalg.mat_vec(L.gram, y))


def signature(L: Lattice) -> Signature:
    """Exact inertia (positive, zero, negative) of the Gram matrix."""
    return _signature(L.gram)


def classify(L: Lattice) -> str:
    """Signature trichotomy: hyperbolic (1,0,r-1), parabolic (0,1,r-1),
    elliptic (0,0,r), anything else 'other'."""
    return classify_signature(signature(L))


def classify_signature(sig) -> str:
    pos, zero, _ = sig
    if pos == 1 and zero == 0:
        return HYPERBOLIC
    if pos == 0 and zero == 1:
        return PARABOLIC
    if pos == 0 and zero == 0:
        return ELLIPTIC
    return OTHER


def is_primitive(L: Lattice, v) -> bool:
    """True when the quotient by Zv is free, i.e. gcd of coordinates is 1."""
    v = linalg.as_vector(v)
    if not any(v):
        raise ValueError("zero vector")
    return linalg.content(v) == 1


def primitivize(L: Lattice, v, orient: bool = False) -> tuple[int, ...]:
    """Divide out the content of v; with orient=True also flip the sign so
    that (result, x0) > 0, pointing into the closure of the positive cone.

    A vector of nonnegative square can never be orthogonal to the reference
    x0 (two positive directions, or a positive and a null one, would span a
    positive semidefinite 2-space inside a hyperbolic form), so hitting that
    case means the inputs are corrupt.
    """
    v = linalg.as_vector(v)
    if not any(v):
        raise ValueError("zero vector")
    g = linalg.content(v)
    v = tuple(c // g for c in v)
    if orient:
        if L.positive_orientation is None:
            raise ValueError("lattice carries no positive orientation")
        pairing = bilinear(L, v, L.positive_orientation)
        if pairing < 0:
            return tuple(-c for c in v)
        if pairing == 0:
            if bilinear(L, v, v) >= 0:
                raise InternalInconsistencyError(
                    "nonnegative vector orthogonal to the cone reference")
            lead = next(c for c in v if c != 0)
            if lead < 0:
                return tuple(-c for c in v)
    return v


def orthogonal_complement(L: Lattice, v) -> tuple[tuple[int, ...], ...]:
    """Basis of the saturated sublattice {x : (x, v) = 0}; rank r-1 for v != 0."""
    v = linalg.as_vector(v)
    if not any(v):
        raise ValueError("zero vector")
    functional = linalg.mat_vec(L.gram, v)
    return linalg.kernel_basis((functional,), ncols=L.rank)


def complete_to_basis(L: Lattice, sub_basis) -> tuple[int, ...]:
    """A vector w completing a primitive rank-(r-1) sublattice basis to a
    basis of the whole lattice."""
    rows = linalg.as_matrix(sub_basis)
    if len(rows) != L.rank - 1:
        raise ValueError("sub-basis must have rank r-1")
    return linalg.complete_basis_rows(rows, L.rank)[0]


def gram_of(L: Lattice, vectors) -> tuple[tuple[int, ...], ...]:
    """Gram matrix of the form restricted to the given vectors."""
    vecs = [linalg.as_vector(v) for v in vectors]
    images = [linalg.mat_vec(L.gram, v) for v in vecs]
    return tuple(
        tuple(linalg.dot(v, img) for img in images) for v in vecs
    )


def quotient_lattice(L: Lattice, v) -> QuotientData:
    """Quotient of the orthogonal complement of v by Zv.

    Requires L hyperbolic and v primitive, isotropic, in the closure of the
    positive cone.  The result has rank r-2 and is negative definite; any
    other outcome means the inputs were corrupt and raises.
    """
    v = linalg.as_vector(v)
    if classify(L) != HYPERBOLIC:
        raise ValueError("lattice is not hyperbolic")
    if not is_primitive(L, v):
        raise ValueError("v is not primitive")
    if bilinear(L, v, v) != 0:
        raise ValueError("v is not isotropic")
    if bilinear(L, v, L.positive_orientation) <= 0:
        raise ValueError("v is not in the closure of the positive cone")
    r = L.rank
    comp = orthogonal_complement(L, v)
    coords = linalg.solve_integer(linalg.transpose(comp), v)
    if coords is None or linalg.content(coords) != 1:
        raise InternalInconsistencyError("v is not primitive in its complement")
    rows = (coords,) + linalg.complete_basis_rows((coords,), r - 1)
    basis = linalg.mat_mul(rows, comp)          # rows: v, u_1, ..., u_{r-2}
    if basis[0] != v:
        raise InternalInconsistencyError("complement basis does not start at v")
    w = complete_to_basis(L, basis)
    us = basis[1:]
    qgram = gram_of(L, us)
    if linalg.inertia(qgram) != (0, 0, r - 2):
        raise ValueError("quotient form is not negative definite")
    full = basis + (w,)
    projection = linalg.invert_unimodular(linalg.transpose(full))
    return QuotientData(
        quotient=Lattice(qgram),
        complement_basis=basis,
        completion_vector=w,
        projection=projection,
    )
