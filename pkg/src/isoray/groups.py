"""Analysis of finitely generated isometry groups of hyperbolic lattices.

Given generators in O(L)' the pipeline decides, exactly: does some short word
already have positive entropy (witness), does the group fix a vector of
positive square (hence is finite), or does it fix a primitive isotropic ray?
In the last case the group descends to the negative definite quotient lattice
of rank r-2, the kernel of that descent maps injectively into Z^(r-2) by
reading off translation coefficients along the ray, and the report carries
the observed rank of that image against the bound r-2.
"""

from dataclasses import dataclass

from . import linalg
from .lattice import (
    HYPERBOLIC,
    ELLIPTIC,
    InternalInconsistencyError,
    Lattice,
    QuotientData,
    bilinear,
    classify,
    gram_of,
    primitivize,
    quotient_lattice,
)
from .spectral import (
    EntropyValue,
    Isometry,
    is_in_O_prime,
    is_null_entropy,
    is_unipotent,
    spectral_radius,
    unipotency_exponent,
)

NULL_ENTROPY_STRUCTURE = "null_entropy_structure"
POSITIVE_ENTROPY = "positive_entropy"
FIXED_POSITIVE_VECTOR = "fixed_positive_vector"
FINITE_EXPONENT = "finite_exponent"
INCONCLUSIVE = "inconclusive"


class NotNullEntropyError(ValueError):
    """A generator fails the exact unit-circle test."""


class NonUnipotentPowerGroupError(ValueError):
    """The generator powers admit no usable common fixed structure; the
    generated group cannot satisfy the null-entropy hypothesis."""


class CapExceededError(ValueError):
    """A closure that theory promises to be finite outgrew its cap."""


@dataclass(frozen=True)
class Word:
    """Product of generator powers, letters = ((index, exponent), ...)."""

    letters: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "letters", tuple((int(i), int(e)) for i, e in self.letters)
        )

    @property
    def name(self) -> str:
        if not self.letters:
            return "1"
        parts = []
        for i, e in self.letters:
            parts.append(f"g{i + 1}" if e == 1 else f"g{i + 1}^{e}")
        return "*".join(parts)


@dataclass(frozen=True)
class GeneratorSet:
    """Hyperbolic lattice plus generators, each verified to preserve both the
    form (at Isometry construction) and the positive cone."""

    lattice: Lattice
    generators: tuple[Isometry, ...]

    def __post_init__(self):
        if classify(self.lattice) != HYPERBOLIC:
            raise ValueError("lattice is not hyperbolic")
        object.__setattr__(self, "generators", tuple(self.generators))
        for idx, g in enumerate(self.generators):
            if g.lattice != self.lattice:
                raise ValueError(f"generator g{idx + 1} lives on a different lattice")
            if not is_in_O_prime(self.lattice, g):
                raise ValueError(f"generator g{idx + 1} does not preserve the positive cone")


@dataclass(frozen=True)
class PositiveEntropyWitness:
    word: Word
    isometry: Isometry


@dataclass(frozen=True)
class FixedRay:
    """Primitive isotropic vector in the closure of the positive cone, fixed
    by every generator."""

    vector: tuple[int, ...]


@dataclass(frozen=True)
class FixedPositiveVector:
    """Vector of positive square fixed by every generator; the group embeds
    into the finite isometry group of its definite complement."""

    vector: tuple[int, ...]


@dataclass(frozen=True)
class FiniteExponent:
    """Every generator power g^exponent is the identity."""

    exponent: int


@dataclass(frozen=True)
class AnalysisReport:
    verdict: str
    rank: int
    word_depth: int
    null_entropy_evidence: str = ""
    witness_word: Word | None = None
    witness_entropy: EntropyValue | None = None
    fixed_vector: tuple[int, ...] | None = None
    exponent: int | None = None
    fixed_ray: tuple[int, ...] | None = None
    quotient: QuotientData | None = None
    descended: tuple[tuple[tuple[tuple[int, ...], ...], int], ...] | None = None
    phi_images: tuple[tuple[int, ...], ...] | None = None
    phi_rank: int | None = None
    rank_bound: int | None = None
    image_group_size: int | None = None
    n0_words_found: int | None = None
    reason: str | None = None


def identity_isometry(L: Lattice) -> Isometry:
    return Isometry(L, linalg.identity(L.rank))


def evaluate_word(S: GeneratorSet, word) -> Isometry:
    """Exact product of generator powers, left to right."""
    letters = word.letters if isinstance(word, Word) else tuple(word)
    result = identity_isometry(S.lattice)
    for i, e in letters:
        if not 0 <= i < len(S.generators):
            raise IndexError(f"generator index {i} out of range")
        result = result @ S.generators[i].power(e)
    return result


def _compress(steps) -> tuple[tuple[int, int], ...]:
    out = []
    for i, e in steps:
        if out and out[-1][0] == i:
            total = out[-1][1] + e
            if total == 0:
                out.pop()
            else:
                out[-1] = (i, total)
        else:
            out.append((i, e))
    return tuple(out)


def _iter_ball(S: GeneratorSet, depth: int):
    """Breadth-first, deduplicated enumeration of word values up to the given
    length: yields (steps, matrix) with single-letter steps, identity first.
    Immediate cancellations are skipped and equal matrices visited once, so
    iteration order is deterministic."""
    letters = []
    for i, g in enumerate(S.generators):
        letters.append(((i, 1), g.matrix))
        letters.append(((i, -1), g.inverse().matrix))
    ident = linalg.identity(S.lattice.rank)
    seen = {ident}
    frontier = [((), ident)]
    yield (), ident
    for _ in range(depth):
        fresh = []
        for steps, mat in frontier:
            last = steps[-1] if steps else None
            for (li, le), lmat in letters:
                if last is not None and last == (li, -le):
                    continue
                prod = linalg.mat_mul(mat, lmat)
                if prod in seen:
                    continue
                seen.add(prod)
                item = (steps + ((li, le),), prod)
                fresh.append(item)
                yield item
        if not fresh:
            return
        frontier = fresh


def verify_null_entropy_words(S: GeneratorSet, max_length: int):
    """Scan reduced words up to max_length for a positive-entropy element.

    Returns the first witness found, or None when every inspected word passes
    the exact test.  None is depth-bounded evidence, not a proof for the whole
    group, except when the generators visibly fix a vector of nonnegative
    square, which forces every word onto the unit circle.
    """
    if max_length < 1:
        raise ValueError("max_length must be at least 1")
    if _stabilizer_guarantee(S):
        return None
    for steps, mat in _iter_ball(S, max_length):
        if steps and not is_null_entropy(mat):
            return PositiveEntropyWitness(Word(_compress(steps)), Isometry(S.lattice, mat))
    return None


def _stabilizer_guarantee(S: GeneratorSet) -> bool:
    # A common fixed vector of positive square embeds the whole group into
    # the finite isometry group of a definite complement; a common fixed
    # isotropic vector makes every element preserve the flag v <= v-perp <= L
    # with definite middle quotient.  Either way every word has unit-circle
    # spectrum, so the word scan cannot find a witness.
    f1 = common_fixed_space(S, 1)
    if not f1:
        return False
    pos, zero, _ = linalg.inertia(gram_of(S.lattice, f1))
    return pos > 0 or zero > 0


def common_fixed_space(S: GeneratorSet, use_power: int):
    """Integer basis (saturated, canonical) of the intersection of the fixed
    spaces of the use_power-th generator powers."""
    if use_power < 1:
        raise ValueError("use_power must be at least 1")
    r = S.lattice.rank
    stacked = []
    for g in S.generators:
        p = linalg.mat_pow(g.matrix, use_power)
        stacked.extend(linalg.mat_sub(p, linalg.identity(r)))
    return linalg.kernel_basis(tuple(stacked), ncols=r)


def _positive_vector_in(L: Lattice, rows):
    """Primitive integer vector of positive square in the span of rows,
    oriented into the positive cone; None when the restricted form has no
    positive direction."""
    _, witness = linalg.inertia_with_witness(gram_of(L, rows))
    for wrow in witness:
        c = linalg.clear_denominators(wrow)
        if not any(c):
            continue
        x = tuple(
            sum(ci * row[j] for ci, row in zip(c, rows)) for j in range(L.rank)
        )
        if bilinear(L, x, x) > 0:
            return primitivize(L, x, orient=True)
    return None


def fixed_ray(S: GeneratorSet):
    """Case analysis on the common fixed space F of the generator powers
    g_i^n, n = unipotency_exponent(r), with the form restricted to F:

    - a positive direction in F that the generators themselves fix yields a
      FixedPositiveVector certificate (the group is finite);
    - a one-dimensional radical yields the FixedRay: its primitive oriented
      generator, re-verified to be fixed by the original generators;
    - a negative definite restriction forces every g_i^n = I, a
      FiniteExponent certificate.

    Anything else is either a hypothesis violation (the generated group has
    positive entropy even though each generator passes the unit-circle test)
    or corrupt input, and raises.
    """
    L = S.lattice
    r = L.rank
    n = unipotency_exponent(r)
    powers = []
    for idx, g in enumerate(S.generators):
        p = linalg.mat_pow(g.matrix, n)
        if not is_unipotent(p):
            raise NotNullEntropyError(f"generator g{idx + 1} is not of null entropy")
        powers.append(p)
    stacked = []
    for p in powers:
        stacked.extend(linalg.mat_sub(p, linalg.identity(r)))
    fixed = linalg.kernel_basis(tuple(stacked), ncols=r)
    if not fixed:
        raise NonUnipotentPowerGroupError(
            "generator powers have no common fixed vector")
    pos, _, _ = linalg.inertia(gram_of(L, fixed))
    if pos > 0:
        f1 = common_fixed_space(S, 1)
        x = _positive_vector_in(L, f1) if f1 else None
        if x is None:
            raise NonUnipotentPowerGroupError(
                "positive directions in the power-fixed space are not fixed by "
                "the generators; the group cannot be of null entropy")
        for idx, g in enumerate(S.generators):
            if g.apply(x) != x:
                raise InternalInconsistencyError(
                    f"certificate vector not fixed by g{idx + 1}")
        return FixedPositiveVector(x)
    radical = linalg.kernel_basis(gram_of(L, fixed), ncols=len(fixed))
    if len(radical) >= 2:
        raise InternalInconsistencyError(
            "two-dimensional totally isotropic subspace in a hyperbolic form")
    if len(radical) == 1:
        coords = radical[0]
        raw = tuple(
            sum(ci * row[j] for ci, row in zip(coords, fixed)) for j in range(r)
        )
        v = primitivize(L, raw, orient=True)
        for idx, g in enumerate(S.generators):
            if g.apply(v) != v:
                raise InternalInconsistencyError(
                    f"ray fixed by the generator powers but moved by g{idx + 1}")
        return FixedRay(v)
    # negative definite fixed space: a nontrivial unipotent power would fix
    # an isotropic vector, which cannot live here
    ident = linalg.identity(r)
    for idx, p in enumerate(powers):
        if p != ident:
            raise InternalInconsistencyError(
                f"negative definite fixed space but g{idx + 1}^{n} is not the identity")
    return FiniteExponent(n)


def triangularize_unipotent(S: GeneratorSet, use_power: int):
    """Integer basis in which every g_i^use_power is unit upper triangular.

    Recursive construction: take a common fixed vector, split it off by a
    unimodular change of basis, recurse on the quotient action.
    """
    if use_power < 1:
        raise ValueError("use_power must be at least 1")
    r = S.lattice.rank
    current = []
    for idx, g in enumerate(S.generators):
        p = linalg.mat_pow(g.matrix, use_power)
        if not is_unipotent(p):
            raise NonUnipotentPowerGroupError(
                f"g{idx + 1}^{use_power} is not unipotent")
        current.append(p)
    flag = []
    lift = linalg.identity(r)   # columns embed quotient coordinates in L
    d = r
    while d > 0:
        stacked = []
        for mat in current:
            stacked.extend(linalg.mat_sub(mat, linalg.identity(d)))
        kern = linalg.kernel_basis(tuple(stacked), ncols=d)
        if not kern:
            raise NonUnipotentPowerGroupError(
                "no common fixed vector at a flag level")
        w = kern[0]
        g = linalg.content(w)
        if g > 1:
            w = tuple(c // g for c in w)
        flag.append(linalg.mat_vec(lift, w))
        rows = (w,) + linalg.complete_basis_rows((w,), d)
        u = linalg.transpose(rows)
        uinv = linalg.invert_unimodular(u)
        fresh = []
        for mat in current:
            conj = linalg.mat_mul(uinv, linalg.mat_mul(mat, u))
            if conj[0][0] != 1 or any(conj[i][0] for i in range(1, d)):
                raise InternalInconsistencyError("flag vector not actually fixed")
            fresh.append(tuple(row[1:] for row in conj[1:]))
        current = fresh
        lifted = linalg.mat_mul(lift, u)
        lift = tuple(row[1:] for row in lifted)
        d -= 1
    return tuple(flag)


def _descend_matrix(Q: QuotientData, mat):
    """Matrix induced on the quotient by an isometry fixing the ray."""
    r = len(mat)
    cols = []
    for u in Q.complement_basis[1:]:
        y = linalg.mat_vec(Q.projection, linalg.mat_vec(mat, u))
        if y[r - 1] != 0:
            raise InternalInconsistencyError(
                "image of a complement vector leaves the complement")
        cols.append(y[1:r - 1])
    return linalg.transpose(cols) if cols else ()


def quotient_descend(S: GeneratorSet, v):
    """Quotient data for the fixed ray plus the descended generator images
    (each an isometry of the quotient) paired with original determinants."""
    v = linalg.as_vector(v)
    for idx, g in enumerate(S.generators):
        if g.apply(v) != v:
            raise ValueError(f"generator g{idx + 1} does not fix v")
    q = quotient_lattice(S.lattice, v)
    images = []
    for g in S.generators:
        hbar = _descend_matrix(q, g.matrix)
        images.append((Isometry(q.quotient, hbar), g.det))
    return q, tuple(images)


def image_group_closure(images, cap: int = 10**6):
    """Multiplicative closure of isometries of a definite lattice; finite by
    definiteness, so exceeding the cap means corrupt input."""
    isos = list(images)
    if not isos:
        raise ValueError("no images given")
    if classify(isos[0].lattice) != ELLIPTIC:
        raise ValueError("closure requires a negative definite lattice")
    gens = []
    for iso in isos:
        gens.append(iso.matrix)
        gens.append(iso.inverse().matrix)
    ident = linalg.identity(isos[0].lattice.rank)
    elements = {ident: None}
    queue = [ident]
    head = 0
    while head < len(queue):
        mat = queue[head]
        head += 1
        for gm in gens:
            prod = linalg.mat_mul(mat, gm)
            if prod not in elements:
                elements[prod] = None
                if len(elements) > cap:
                    raise CapExceededError(
                        f"closure exceeded cap {cap}; quotient input is corrupt")
                queue.append(prod)
    return tuple(elements)


def n0_membership(h: Isometry, v, Q: QuotientData) -> bool:
    """True when h descends to the identity on the quotient and det h = 1."""
    v = linalg.as_vector(v)
    if h.apply(v) != v:
        raise ValueError("h does not fix v")
    hbar = _descend_matrix(Q, h.matrix)
    return hbar == linalg.identity(len(hbar)) and h.det == 1


def _alpha_from_matrix(Q: QuotientData, mat):
    r = len(mat)
    alphas = []
    for u in Q.complement_basis[1:]:
        moved = linalg.mat_vec(mat, u)
        diff = tuple(a - b for a, b in zip(moved, u))
        y = linalg.mat_vec(Q.projection, diff)
        if any(y[1:]):
            raise InternalInconsistencyError("h(u) - u is not proportional to v")
        alphas.append(y[0])
    return tuple(alphas)


def alpha_map(h: Isometry, Q: QuotientData):
    """Translation coefficients along the ray: h(u_i) = u_i + alpha_i v.

    On the kernel subgroup selected by n0_membership this map is an
    injective homomorphism into Z^(r-2)."""
    v = Q.complement_basis[0]
    if not n0_membership(h, v, Q):
        raise ValueError("h is not in the kernel subgroup")
    return _alpha_from_matrix(Q, h.matrix)


def analyze_group(S: GeneratorSet, word_depth: int = 6,
                  closure_cap: int = 10**6, tol: float = 1e-9) -> AnalysisReport:
    """Full pipeline: word scan for positive entropy, fixed structure of the
    generator powers, descent to the quotient, and the observed rank of the
    translation image against the bound r-2.

    Word-bounded stages are labeled in the report; a structure verdict is
    exact, while the absence of a positive-entropy witness is evidence up to
    word_depth unless the stabilizer certificate applies.
    """
    if word_depth < 1:
        raise ValueError("word_depth must be at least 1")
    if closure_cap < 1:
        raise ValueError("closure_cap must be at least 1")
    if tol <= 0:
        raise ValueError("tol must be positive")
    L = S.lattice
    r = L.rank
    guaranteed = _stabilizer_guarantee(S)
    if guaranteed:
        evidence = "stabilizer-certificate"
    else:
        evidence = f"word-search(depth={word_depth})"
        for steps, mat in _iter_ball(S, word_depth):
            if steps and not is_null_entropy(mat):
                iso = Isometry(L, mat)
                return AnalysisReport(
                    verdict=POSITIVE_ENTROPY,
                    rank=r,
                    word_depth=word_depth,
                    null_entropy_evidence=evidence,
                    witness_word=Word(_compress(steps)),
                    witness_entropy=spectral_radius(iso, tol),
                )
    frag = fixed_ray(S)
    if isinstance(frag, FixedPositiveVector):
        return AnalysisReport(
            verdict=FIXED_POSITIVE_VECTOR,
            rank=r,
            word_depth=word_depth,
            null_entropy_evidence=evidence,
            fixed_vector=frag.vector,
        )
    if isinstance(frag, FiniteExponent):
        return AnalysisReport(
            verdict=FINITE_EXPONENT,
            rank=r,
            word_depth=word_depth,
            null_entropy_evidence=evidence,
            exponent=frag.exponent,
        )
    v = frag.vector
    q, images = quotient_descend(S, v)
    closure = image_group_closure([im for im, _ in images], cap=closure_cap)
    qid = linalg.identity(r - 2)
    maximal = qid
    phi_basis = ()
    n0_count = 0
    for steps, mat in _iter_ball(S, word_depth):
        if not steps:
            continue
        det = 1
        for i, _ in steps:
            det *= S.generators[i].det
        if det != 1:
            continue
        if _descend_matrix(q, mat) != qid:
            continue
        n0_count += 1
        alpha = _alpha_from_matrix(q, mat)
        if not any(alpha):
            raise InternalInconsistencyError(
                "nontrivial kernel word with zero translation vector")
        fresh = linalg.hermite_normal_form(phi_basis + (alpha,))
        if fresh != phi_basis:
            phi_basis = fresh
            if phi_basis == maximal:
                break   # the image lattice is all of Z^(r-2); nothing can grow
    if n0_count == 0:
        return AnalysisReport(
            verdict=INCONCLUSIVE,
            rank=r,
            word_depth=word_depth,
            null_entropy_evidence=evidence,
            fixed_ray=v,
            quotient=q,
            descended=tuple((im.matrix, d) for im, d in images),
            image_group_size=len(closure),
            reason="no nontrivial kernel words within the word depth",
        )
    phi_rank = len(phi_basis)
    if phi_rank > r - 2:
        raise InternalInconsistencyError("translation image exceeds rank r-2")
    return AnalysisReport(
        verdict=NULL_ENTROPY_STRUCTURE,
        rank=r,
        word_depth=word_depth,
        null_entropy_evidence=evidence,
        fixed_ray=v,
        quotient=q,
        descended=tuple((im.matrix, d) for im, d in images),
        phi_images=phi_basis,
        phi_rank=phi_rank,
        rank_bound=r - 2,
        image_group_size=len(closure),
        n0_words_found=n0_count,
    )
