"""JSON encoding and decoding for lattices, isometries, groups and reports.

Integers above 2^53 travel as decimal strings so no consumer is forced
through floating point; reals are emitted as fixed-place decimal strings
derived from exact rationals, never as binary floats.
"""

import json
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction

from .groups import AnalysisReport, GeneratorSet, Word
from .lattice import Lattice, QuotientData
from .spectral import EntropyValue, Isometry

_MAX_SAFE = 2**53
_PLACES = 12


def encode_int(v: int):
    return v if -_MAX_SAFE < v < _MAX_SAFE else str(v)


def decode_int(v) -> int:
    if isinstance(v, bool):
        raise ValueError("expected an integer, got a boolean")
    if isinstance(v, int):
        return v
    if isinstance(v, str):
        return int(v.strip())
    raise ValueError(f"expected an integer or decimal string, got {type(v).__name__}")


def encode_vector(v):
    return [encode_int(int(x)) for x in v]


def decode_vector(obj) -> tuple[int, ...]:
    return tuple(decode_int(x) for x in obj)


def encode_matrix(m):
    return [encode_vector(row) for row in m]


def decode_matrix(obj):
    return tuple(decode_vector(row) for row in obj)


def decimal_str(x, places: int = _PLACES) -> str:
    """Fixed-place decimal rendering of an exact rational (floats are taken
    at their exact binary value)."""
    fr = Fraction(x)
    with localcontext() as ctx:
        ctx.prec = 60
        d = Decimal(fr.numerator) / Decimal(fr.denominator)
        q = d.quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_EVEN)
    return format(q, "f")


def lattice_to_obj(L: Lattice) -> dict:
    obj = {"rank": L.rank, "gram": encode_matrix(L.gram)}
    if L.positive_orientation is not None:
        obj["positive_orientation"] = encode_vector(L.positive_orientation)
    return obj


def lattice_from_obj(obj) -> Lattice:
    gram = decode_matrix(obj["gram"])
    if "rank" in obj and decode_int(obj["rank"]) != len(gram):
        raise ValueError("rank field does not match gram size")
    orientation = obj.get("positive_orientation")
    if orientation is not None:
        orientation = decode_vector(orientation)
    return Lattice(gram, positive_orientation=orientation)


def vector_from_obj(obj) -> tuple[int, ...]:
    return decode_vector(obj["coords"])


def vector_to_obj(v) -> dict:
    return {"coords": encode_vector(v)}


def isometry_to_obj(g: Isometry) -> dict:
    return {"matrix": encode_matrix(g.matrix)}


def isometry_from_obj(L: Lattice, obj) -> Isometry:
    return Isometry(L, decode_matrix(obj["matrix"]))


def group_from_obj(obj) -> GeneratorSet:
    L = lattice_from_obj(obj["lattice"])
    gens = tuple(isometry_from_obj(L, g) for g in obj.get("generators", []))
    return GeneratorSet(L, gens)


def entropy_to_obj(ev: EntropyValue, char_poly_text: str | None = None) -> dict:
    mid = (ev.delta_low + ev.delta_high) / 2
    obj = {
        "delta": decimal_str(mid),
        "entropy": decimal_str(Fraction(ev.log_spectral_radius)),
        "exact_zero": ev.is_exactly_zero,
        "tol": decimal_str(Fraction(ev.tol)),
    }
    if char_poly_text is not None:
        obj["char_poly"] = char_poly_text
    return obj


def word_to_obj(w: Word) -> dict:
    return {"letters": [[i, e] for i, e in w.letters], "name": w.name}


def quotient_to_obj(q: QuotientData) -> dict:
    return {
        "lattice": lattice_to_obj(q.quotient),
        "complement_basis": [encode_vector(v) for v in q.complement_basis],
        "completion_vector": encode_vector(q.completion_vector),
        "projection": encode_matrix(q.projection),
    }


def report_to_obj(report: AnalysisReport, closure_cap: int, tol: float) -> dict:
    obj = {
        "verdict": report.verdict,
        "rank": report.rank,
        "null_entropy_evidence": report.null_entropy_evidence,
        "config": {
            "word_depth": report.word_depth,
            "closure_cap": closure_cap,
            "tol": decimal_str(Fraction(tol)),
        },
    }
    if report.witness_word is not None:
        obj["witness_word"] = word_to_obj(report.witness_word)
    if report.witness_entropy is not None:
        obj["entropy"] = entropy_to_obj(report.witness_entropy)
    if report.fixed_vector is not None:
        obj["fixed_vector"] = encode_vector(report.fixed_vector)
    if report.exponent is not None:
        obj["exponent"] = report.exponent
    if report.fixed_ray is not None:
        obj["fixed_ray"] = encode_vector(report.fixed_ray)
    if report.quotient is not None:
        obj["quotient"] = quotient_to_obj(report.quotient)
    if report.descended is not None:
        obj["descended_generators"] = [
            {"matrix": encode_matrix(m), "det": d} for m, d in report.descended
        ]
    if report.phi_images is not None:
        obj["phi_images"] = [encode_vector(v) for v in report.phi_images]
    if report.phi_rank is not None:
        obj["phi_rank"] = report.phi_rank
    if report.rank_bound is not None:
        obj["rank_bound"] = report.rank_bound
    if report.image_group_size is not None:
        obj["image_group_size"] = report.image_group_size
    if report.n0_words_found is not None:
        obj["n0_words_found"] = report.n0_words_found
    if report.reason is not None:
        obj["reason"] = report.reason
    return obj


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def load_file(path):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)
