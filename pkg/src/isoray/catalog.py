"""Constructors for standard lattices and concrete isometries.

Dynkin Gram convention: 2 on the diagonal, -1 for adjacent nodes.  A_n is a
chain; D_n is a chain of n-2 nodes with two extra nodes on its last node;
E_n (n = 6, 7, 8) is a chain of n-1 nodes with node n attached to node n-3.
The (-1)-twists used everywhere are plain rescalings.
"""

from dataclasses import dataclass

from . import linalg
from .lattice import ELLIPTIC, Lattice, bilinear, classify
from .spectral import Isometry


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    lattice: Lattice
    notes: str


def hyperbolic_plane() -> Lattice:
    """Even unimodular hyperbolic lattice of rank 2, Gram [[0,1],[1,0]]."""
    return Lattice(((0, 1), (1, 0)))


def root_lattice(family: str, n: int, negate: bool = False) -> Lattice:
    """Positive (or negated) definite root lattice of type A_n, D_n or E_n."""
    family = family.upper()
    if family == "A":
        if n < 1:
            raise ValueError("A_n needs n >= 1")
        edges = [(i, i + 1) for i in range(n - 1)]
    elif family == "D":
        if n < 4:
            raise ValueError("D_n needs n >= 4")
        edges = [(i, i + 1) for i in range(n - 3)]
        edges += [(n - 3, n - 2), (n - 3, n - 1)]
    elif family == "E":
        if n not in (6, 7, 8):
            raise ValueError("E_n needs n in {6, 7, 8}")
        edges = [(i, i + 1) for i in range(n - 2)]
        edges.append((n - 4, n - 1))
    else:
        raise ValueError(f"unknown root lattice family {family!r}")
    gram = [[0] * n for _ in range(n)]
    for i in range(n):
        gram[i][i] = 2
    for i, j in edges:
        gram[i][j] = gram[j][i] = -1
    if negate:
        gram = [[-x for x in row] for row in gram]
    return Lattice(gram)


def direct_sum(lattices) -> Lattice:
    """Orthogonal direct sum: block-diagonal Gram matrix."""
    blocks = list(lattices)
    total = sum(L.rank for L in blocks)
    gram = [[0] * total for _ in range(total)]
    offset = 0
    for L in blocks:
        for i in range(L.rank):
            for j in range(L.rank):
                gram[offset + i][offset + j] = L.gram[i][j]
        offset += L.rank
    return Lattice(gram)


def rescale(L: Lattice, m: int) -> Lattice:
    """Same module with the form multiplied by m != 0."""
    if m == 0:
        raise ValueError("rescaling by zero degenerates the form")
    return Lattice(tuple(tuple(m * x for x in row) for row in L.gram))


def k3_lattice() -> Lattice:
    """U^3 + E8(-1)^2, rank 22, signature (3, 0, 19)."""
    u = hyperbolic_plane()
    e8m = root_lattice("E", 8, negate=True)
    return direct_sum([u, u, u, e8m, e8m])


def ns_rank20(n_block: Lattice) -> Lattice:
    """U + E8(-1)^2 + N for a negative definite N of rank 2; hyperbolic of
    rank 20, signature (1, 0, 19)."""
    if n_block.rank != 2 or classify(n_block) != ELLIPTIC:
        raise ValueError("N must be negative definite of rank 2")
    e8m = root_lattice("E", 8, negate=True)
    return direct_sum([hyperbolic_plane(), e8m, e8m, n_block])


def is_even(L: Lattice) -> bool:
    """(x, x) even for every x; equivalent to an even Gram diagonal."""
    return all(L.gram[i][i] % 2 == 0 for i in range(L.rank))


def eichler_transvection(L: Lattice, v, u) -> Isometry:
    """The unipotent isometry x -> x - (x,v)u + (x,u)v - (u,u)/2 (x,v)v for an
    isotropic v and u orthogonal to v on an even lattice.  Fixes v; composing
    two maps with the same v adds their u-vectors."""
    if not is_even(L):
        raise ValueError("transvections need an even lattice")
    v = linalg.as_vector(v)
    u = linalg.as_vector(u)
    if bilinear(L, v, v) != 0:
        raise ValueError("v must be isotropic")
    if bilinear(L, v, u) != 0:
        raise ValueError("u must be orthogonal to v")
    half_uu = bilinear(L, u, u) // 2
    r = L.rank
    cols = []
    for i in range(r):
        e = tuple(1 if j == i else 0 for j in range(r))
        ev = bilinear(L, e, v)
        eu = bilinear(L, e, u)
        col = tuple(
            e[j] - ev * u[j] + (eu - half_uu * ev) * v[j] for j in range(r)
        )
        cols.append(col)
    matrix = linalg.transpose(cols)
    return Isometry(L, matrix)


def pell_isometry() -> tuple[Lattice, Isometry]:
    """Rank-2 hyperbolic fixture with positive entropy: Gram diag(1, -2) and
    g = [[3, 4], [2, 3]], characteristic polynomial x^2 - 6x + 1."""
    L = Lattice(((1, 0), (0, -2)))
    return L, Isometry(L, ((3, 4), (2, 3)))


def reflection(L: Lattice, u) -> Isometry:
    """Reflection in a vector with (u, u) = -2 (or +2): x -> x - 2(x,u)/(u,u) u."""
    u = linalg.as_vector(u)
    uu = bilinear(L, u, u)
    if uu not in (2, -2):
        raise ValueError("reflections here need (u, u) = +-2")
    r = L.rank
    cols = []
    for i in range(r):
        e = tuple(1 if j == i else 0 for j in range(r))
        scale = 2 * bilinear(L, e, u) // uu     # exact since (u, u) = +-2
        col = tuple(e[j] - scale * u[j] for j in range(r))
        cols.append(col)
    return Isometry(L, linalg.transpose(cols))


_BASE_NOTES = {
    "U": "even unimodular hyperbolic plane",
    "K3": "U^3 + E8(-1)^2, rank 22",
}


def lookup(name: str) -> CatalogEntry:
    """Resolve a catalog name: U, A<n>, D<n>, E<n> with optional (-1) suffix,
    sums joined by +, K3, and NS20:<N-spec> with N a rank-2 negative definite
    sum expression."""
    text = name.strip()
    if text.upper().startswith("NS20:"):
        inner = lookup(text[5:]).lattice
        lattice = ns_rank20(inner)
        return CatalogEntry(name=text, lattice=lattice,
                            notes="U + E8(-1)^2 + N, rank 20 hyperbolic")
    parts = [p.strip() for p in text.split("+")]
    if len(parts) > 1:
        lattice = direct_sum([lookup(p).lattice for p in parts])
        return CatalogEntry(name=text, lattice=lattice, notes="orthogonal direct sum")
    return _lookup_atom(parts[0])


def _lookup_atom(token: str) -> CatalogEntry:
    negate = False
    base = token
    if base.endswith("(-1)"):
        negate = True
        base = base[:-4].strip()
    upper = base.upper()
    if upper == "U":
        lattice = hyperbolic_plane()
        if negate:
            lattice = rescale(lattice, -1)
        return CatalogEntry(token, lattice, _BASE_NOTES["U"])
    if upper == "K3":
        lattice = k3_lattice()
        if negate:
            lattice = rescale(lattice, -1)
        return CatalogEntry(token, lattice, _BASE_NOTES["K3"])
    if upper and upper[0] in "ADE" and upper[1:].isdigit():
        lattice = root_lattice(upper[0], int(upper[1:]), negate=negate)
        kind = "negative definite" if negate else "positive definite"
        return CatalogEntry(token, lattice, f"{kind} root lattice")
    raise KeyError(f"unknown catalog name {token!r}")
