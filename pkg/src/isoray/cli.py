"""Command line front end: entropy of one isometry, group analysis, catalog.

Exit codes for analyze: 0 structure or fixed positive vector, 2 positive
entropy, 3 finite-exponent certificate, 4 inconclusive, 1 input error.
"""

import argparse
import sys
from dataclasses import dataclass

from . import jsonio
from .catalog import lookup
from .groups import (
    FINITE_EXPONENT,
    FIXED_POSITIVE_VECTOR,
    INCONCLUSIVE,
    NULL_ENTROPY_STRUCTURE,
    POSITIVE_ENTROPY,
    analyze_group,
)
from .lattice import InternalInconsistencyError
from .spectral import char_poly, spectral_radius

EXIT_STRUCTURE = 0
EXIT_INPUT_ERROR = 1
EXIT_POSITIVE_ENTROPY = 2
EXIT_FINITE_CERTIFICATE = 3
EXIT_INCONCLUSIVE = 4

_VERDICT_EXIT = {
    NULL_ENTROPY_STRUCTURE: EXIT_STRUCTURE,
    FIXED_POSITIVE_VECTOR: EXIT_STRUCTURE,
    FINITE_EXPONENT: EXIT_FINITE_CERTIFICATE,
    POSITIVE_ENTROPY: EXIT_POSITIVE_ENTROPY,
    INCONCLUSIVE: EXIT_INCONCLUSIVE,
}


@dataclass
class Config:
    tolerance: float = 1e-9
    word_depth: int = 6
    closure_cap: int = 10**6
    output_format: str = "text"

    def __post_init__(self):
        if self.tolerance <= 0:
            raise ValueError("tolerance must be positive")
        if self.word_depth < 1:
            raise ValueError("word_depth must be at least 1")
        if self.closure_cap < 1:
            raise ValueError("closure_cap must be at least 1")
        if self.output_format not in ("text", "json"):
            raise ValueError("output format must be text or json")


def cmd_entropy(lattice_file: str, isometry_file: str, config: Config) -> int:
    try:
        lattice = jsonio.lattice_from_obj(jsonio.load_file(lattice_file))
        iso = jsonio.isometry_from_obj(lattice, jsonio.load_file(isometry_file))
    except (OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    poly = char_poly(iso)
    value = spectral_radius(iso, config.tolerance)
    obj = jsonio.entropy_to_obj(value, char_poly_text=str(poly))
    if config.output_format == "json":
        sys.stdout.write(jsonio.dumps(obj))
    else:
        print(f"char_poly={obj['char_poly']}")
        flag = "true" if obj["exact_zero"] else "false"
        print(f"delta={obj['delta']}, entropy={obj['entropy']}, exact_zero={flag}")
    return EXIT_STRUCTURE


def cmd_analyze(group_file: str, config: Config) -> int:
    try:
        gens = jsonio.group_from_obj(jsonio.load_file(group_file))
    except (OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    try:
        report = analyze_group(
            gens,
            word_depth=config.word_depth,
            closure_cap=config.closure_cap,
            tol=config.tolerance,
        )
    except (ValueError, InternalInconsistencyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    obj = jsonio.report_to_obj(report, config.closure_cap, config.tolerance)
    if config.output_format == "json":
        sys.stdout.write(jsonio.dumps(obj))
    else:
        _print_report_text(obj)
    return _VERDICT_EXIT[report.verdict]


def _print_report_text(obj: dict) -> None:
    print(f"verdict={obj['verdict']}")
    print(f"evidence={obj['null_entropy_evidence']}")
    if "witness_word" in obj:
        print(f"witness={obj['witness_word']['name']}")
    if "entropy" in obj:
        e = obj["entropy"]
        print(f"delta={e['delta']}, entropy={e['entropy']}, exact_zero="
              f"{'true' if e['exact_zero'] else 'false'}")
    if "fixed_vector" in obj:
        print(f"fixed_vector={obj['fixed_vector']}")
    if "exponent" in obj:
        print(f"exponent={obj['exponent']}")
    if "fixed_ray" in obj:
        print(f"fixed_ray={obj['fixed_ray']}")
    if "quotient" in obj:
        print(f"quotient_gram={obj['quotient']['lattice']['gram']}")
    if "phi_rank" in obj:
        print(f"phi_rank={obj['phi_rank']} (bound {obj['rank_bound']})")
    if "image_group_size" in obj:
        print(f"image_group_size={obj['image_group_size']}")
    if "reason" in obj:
        print(f"reason={obj['reason']}")


def cmd_catalog(name: str) -> int:
    try:
        entry = lookup(name)
    except (KeyError, ValueError) as exc:
        message = exc.args[0] if exc.args else exc
        print(f"error: {message}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    sys.stdout.write(jsonio.dumps(jsonio.lattice_to_obj(entry.lattice)))
    return EXIT_STRUCTURE


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="isoray",
        description="Exact entropy classification of hyperbolic lattice isometries",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--tol", type=float, default=1e-9)
        p.add_argument("--word-depth", type=int, default=6)
        p.add_argument("--closure-cap", type=int, default=10**6)
        p.add_argument("--format", choices=("text", "json"), default="text")

    p_entropy = sub.add_parser("entropy", help="entropy of a single isometry")
    p_entropy.add_argument("--lattice", required=True)
    p_entropy.add_argument("--isometry", required=True)
    common(p_entropy)

    p_analyze = sub.add_parser("analyze", help="analyze a generated isometry group")
    p_analyze.add_argument("--group", required=True)
    common(p_analyze)

    p_catalog = sub.add_parser("catalog", help="emit a named lattice as JSON")
    p_catalog.add_argument("name")
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 1
        return code if code == 0 else EXIT_INPUT_ERROR
    if args.command == "catalog":
        return cmd_catalog(args.name)
    try:
        config = Config(
            tolerance=args.tol,
            word_depth=args.word_depth,
            closure_cap=args.closure_cap,
            output_format=args.format,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    if args.command == "entropy":
        return cmd_entropy(args.lattice, args.isometry, config)
    return cmd_analyze(args.group, config)


if __name__ == "__main__":
    sys.exit(main())
