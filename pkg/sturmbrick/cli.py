"""Command-line front end: ``python -m sturmbrick <group> <command> ...``.

Exit codes: 0 success or consistency, 1 violation, mismatch or not a brick,
2 usage errors and malformed input.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Callable, Optional, Sequence

from pydantic import ValidationError

from .bridge import (
    classify_infinite,
    falsify,
    strong_inner_witness_ab,
    strong_inner_witness_generic,
    double_kronecker,
    verify_brick_band_christoffel,
    verify_single_kissing,
)
from .config import _ENV_KEYS, Settings, configure_logging, get_logger, load_settings
from .errors import SturmbrickError
from .exact import parse_interval, parse_rational, parse_slope
from .gentle import (
    Band,
    GentleAlgebra,
    enumerate_bands,
    enumerate_strings,
    format_string,
    parse_string,
    validate_gentle,
)
from .modules import band_module_end_dim, graph_maps, hom_dim_oracle, is_brick_finite, kisses
from .schemas import BandReport, ClassifyReport, InfiniteDKSpecFile
from .sturmian import characteristic_word, christoffel, lower_cutting_word, upper_cutting_word
from .words import CharacteristicCF, check_word, complexity, is_balanced

logger = get_logger(__name__)

Handler = Callable[[argparse.Namespace, Settings], int]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        raise UsageError(message)


def _load_algebra(path: str, check: bool = True) -> GentleAlgebra:
    p = Path(path)
    if not p.exists():
        raise UsageError(f"no such file: {path}")
    return GentleAlgebra.from_file(p, check=check)


def _parse_cf(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(t) for t in text.replace(",", " ").split())
    except ValueError as exc:
        raise UsageError(f"continued fraction coefficients must be integers: {text!r}") from exc


def _parse_cf_notation(text: str) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """``[0;1,1,1]`` terminates; a parenthesised tail repeats, as in ``[0;(1)]`` or ``[0;1,(2,3)]``."""
    body = text.strip()
    if body.startswith("[") != body.endswith("]"):
        raise UsageError(f"unbalanced brackets in continued fraction {text!r}")
    if body.startswith("["):
        body = body[1:-1]
    if ";" in body:
        whole, body = body.split(";", 1)
        if whole.strip() not in ("", "0"):
            raise UsageError(f"characteristic slopes lie in (0,1); got integer part {whole.strip()}")
    if "(" not in body:
        return _parse_cf(body), ()
    head, _, rest = body.partition("(")
    if not rest.rstrip().endswith(")"):
        raise UsageError(f"unclosed period in continued fraction {text!r}")
    period = _parse_cf(rest.rstrip()[:-1])
    if not period:
        raise UsageError(f"empty period in continued fraction {text!r}")
    return _parse_cf(head), period


# ---------------------------------------------------------------------------
# gentle
# ---------------------------------------------------------------------------


def cmd_gentle_validate(args: argparse.Namespace, settings: Settings) -> int:
    A = _load_algebra(args.file, check=False)
    violations = validate_gentle(A.quiver, A.relations)
    if not violations:
        print("ok")
        return 0
    for v in violations:
        print(v)
    return 1


def cmd_gentle_strings(args: argparse.Namespace, settings: Settings) -> int:
    A = _load_algebra(args.file)
    for w in enumerate_strings(A, args.max):
        print(format_string(w))
    return 0


def cmd_gentle_bands(args: argparse.Namespace, settings: Settings) -> int:
    A = _load_algebra(args.file)
    for band in enumerate_bands(A, args.max):
        print(band)
    return 0


def cmd_gentle_hom(args: argparse.Namespace, settings: Settings) -> int:
    A = _load_algebra(args.file)
    u, v = parse_string(args.w1, A), parse_string(args.w2, A)
    maps = graph_maps(u, v)
    dim = hom_dim_oracle(u, v, A)
    print(f"hom_dim {dim}")
    for gm in maps:
        print(f"graph_map {gm.describe()}")
    if len(maps) != dim:
        print(f"mismatch: {len(maps)} graph maps")
        return 1
    return 0


def cmd_gentle_brick(args: argparse.Namespace, settings: Settings) -> int:
    A = _load_algebra(args.file)
    result = is_brick_finite(parse_string(args.w, A))
    if result.brick:
        print("Brick")
        return 0
    print(f"NotBrick {result.witness.describe()}")
    return 1


def cmd_gentle_kisses(args: argparse.Namespace, settings: Settings) -> int:
    A = _load_algebra(args.file)
    found = kisses(parse_string(args.w1, A), parse_string(args.w2, A))
    if not found:
        print("none")
        return 0
    for k in found:
        side = "inverted " if k.target.inverted else ""
        print(
            f"kiss {format_string(k.pattern)}: quotient at {k.source.position} -> "
            f"{side}submodule at {k.target.position}"
        )
    return 1


def cmd_gentle_band_end(args: argparse.Namespace, settings: Settings) -> int:
    A = _load_algebra(args.file)
    band = Band.of(parse_string(args.band, A), A)
    dim = band_module_end_dim(band, A)
    print(f"end_dim {dim}")
    return 0 if dim == 1 else 1


# ---------------------------------------------------------------------------
# word
# ---------------------------------------------------------------------------


def cmd_word_christoffel(args: argparse.Namespace, settings: Settings) -> int:
    print(christoffel(args.p, args.q).word)
    return 0


def cmd_word_cutting(args: argparse.Namespace, settings: Settings) -> int:
    if args.slope and args.slope_flag and args.slope != args.slope_flag:
        raise UsageError("give the slope once, positionally or with --slope")
    text = args.slope or args.slope_flag
    if not text:
        raise UsageError("a slope is required")
    slope = parse_slope(text)
    intercept = parse_rational(args.intercept)
    domain = parse_interval(args.domain)
    generate = upper_cutting_word if args.upper else lower_cutting_word
    print(generate(slope, intercept, domain, args.max).word)
    return 0


def cmd_word_characteristic(args: argparse.Namespace, settings: Settings) -> int:
    if args.cf is not None:
        if args.cf_head or args.cf_period:
            raise UsageError("--cf replaces --cf-head and --cf-period")
        head, period = _parse_cf_notation(args.cf)
    else:
        head, period = _parse_cf(args.cf_head), _parse_cf(args.cf_period)
    print(characteristic_word(CharacteristicCF(head, period), args.length).word)
    return 0


def cmd_word_balanced(args: argparse.Namespace, settings: Settings) -> int:
    result = is_balanced(check_word(args.w))
    if result.balanced:
        print("balanced")
        return 0
    n, u1, u2 = result.witness
    print(f"unbalanced {n} {u1} {u2}")
    return 1


def cmd_word_complexity(args: argparse.Namespace, settings: Settings) -> int:
    print(complexity(check_word(args.w), args.n))
    return 0


# ---------------------------------------------------------------------------
# bridge
# ---------------------------------------------------------------------------


def _read_spec_files(path: str) -> list[InfiniteDKSpecFile]:
    p = Path(path)
    if not p.exists():
        raise UsageError(f"no such file: {path}")
    text = p.read_text(encoding="utf-8").strip()
    if p.suffix == ".jsonl":
        return [InfiniteDKSpecFile.model_validate_json(line) for line in text.splitlines() if line.strip()]
    data = json.loads(text)
    items = data if isinstance(data, list) else [data]
    return [InfiniteDKSpecFile.model_validate(item) for item in items]


def cmd_bridge_classify(args: argparse.Namespace, settings: Settings) -> int:
    window_length = args.window or settings.window
    status = 0
    for record in _read_spec_files(args.spec):
        spec = record.to_spec()
        verdict = classify_infinite(spec)
        refutation = None if verdict.brick else falsify(spec, window_length)
        label = "Brick" if verdict.brick else "NotBrick"
        matches = None if record.expected is None else record.expected == label
        report = ClassifyReport(
            name=record.name,
            verdict=label,
            case=verdict.case,
            reason=verdict.reason,
            falsification=str(refutation) if refutation else None,
            matches_expected=matches,
        )
        print(report.model_dump_json(by_alias=True, exclude_none=True))
        if matches is False or (matches is None and not verdict.brick):
            status = 1
    return status


def cmd_bridge_verify_christoffel(args: argparse.Namespace, settings: Settings) -> int:
    max_total = args.max or settings.max_band_letters
    report = verify_brick_band_christoffel(max_total, progress=settings.progress)
    for row in report.rows:
        record = BandReport(
            word=row.word,
            end_dim=row.end_dim,
            christoffel_class=row.christoffel_class,
            bwa_christoffel=row.bwa_christoffel,
            consistent=row.consistent,
        )
        print(record.model_dump_json(by_alias=True))
    print(f"bands {len(report.rows)} mismatches {len(report.mismatches)}")
    return 1 if report.mismatches else 0


def cmd_bridge_verify_config(args: argparse.Namespace, settings: Settings) -> int:
    A = _load_algebra(args.algebra, check=False)
    try:
        a, b = parse_string(args.a, A), parse_string(args.b, A)
    except SturmbrickError as exc:
        print(f"strings: {exc}")
        return 1
    check = verify_single_kissing(A, a, b)
    if check.ok:
        print(f"ok x={check.config.x} z={format_string(check.config.z)}")
        return 0
    for v in check.violations:
        print(v)
    return 1


def cmd_bridge_witness(args: argparse.Namespace, settings: Settings) -> int:
    word = check_word(args.word)
    x = strong_inner_witness_ab(word, args.left_open, args.right_open)
    generic = strong_inner_witness_generic(word, double_kronecker(), args.left_open, args.right_open)
    print("ab none" if x is None else f"ab {x!r}")
    print("generic none" if generic is None else f"generic {generic.describe()}")
    if (x is None) != (generic is None):
        print("mismatch")
        return 1
    return 0 if x is None else 1


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sturmbrick", description="Sturmian words and bricks over gentle algebras")
    parser.add_argument("--log-level", default=None, help="Overrides STURMBRICK_LOG_LEVEL")
    groups = parser.add_subparsers(dest="group", required=True, parser_class=_Parser)

    gentle = groups.add_parser("gentle", help="Gentle algebras, strings and bands")
    g = gentle.add_subparsers(dest="command", required=True, parser_class=_Parser)
    p = g.add_parser("validate", help="Check the gentle conditions of an algebra file")
    p.add_argument("file")
    p.set_defaults(handler=cmd_gentle_validate)
    p = g.add_parser("strings", help="Enumerate strings up to a length")
    p.add_argument("file")
    p.add_argument("--max", type=int, required=True)
    p.set_defaults(handler=cmd_gentle_strings)
    p = g.add_parser("bands", help="Enumerate band classes up to a length")
    p.add_argument("file")
    p.add_argument("--max", type=int, required=True)
    p.set_defaults(handler=cmd_gentle_bands)
    p = g.add_parser("hom", help="Hom dimension and graph maps between two string modules")
    p.add_argument("file")
    p.add_argument("w1")
    p.add_argument("w2")
    p.set_defaults(handler=cmd_gentle_hom)
    p = g.add_parser("brick", help="Decide whether a finite string module is a brick")
    p.add_argument("file")
    p.add_argument("w")
    p.set_defaults(handler=cmd_gentle_brick)
    p = g.add_parser("kisses", help="Kisses from one string to another")
    p.add_argument("file")
    p.add_argument("w1")
    p.add_argument("w2")
    p.set_defaults(handler=cmd_gentle_kisses)
    p = g.add_parser("band-end", help="End dimension of the degree one band module at parameter 1")
    p.add_argument("file")
    p.add_argument("band")
    p.set_defaults(handler=cmd_gentle_band_end)

    word = groups.add_parser("word", help="Binary words")
    w = word.add_subparsers(dest="command", required=True, parser_class=_Parser)
    p = w.add_parser("christoffel", help="Christoffel word of slope p/q")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.set_defaults(handler=cmd_word_christoffel)
    p = w.add_parser("cutting", help="Cutting word of y = slope*x + intercept")
    p.add_argument("slope", nargs="?", default=None, help="p/q, n or surd:A,B,C,d")
    p.add_argument("--slope", dest="slope_flag", default=None, help="Same as the positional slope")
    p.add_argument("--intercept", default="0")
    p.add_argument("--domain", default="(0,inf)", help="Interval such as (0,8) or [0,inf)")
    side = p.add_mutually_exclusive_group()
    side.add_argument("--lower", action="store_true")
    side.add_argument("--upper", action="store_true")
    p.add_argument("--len", "--max", dest="max", type=int, default=None, help="Letters to emit on infinite domains")
    p.set_defaults(handler=cmd_word_cutting)
    p = w.add_parser("characteristic", help="Prefix of a characteristic word from its continued fraction")
    p.add_argument("--cf", default=None, help="[0;a1,a2,...] with an optional (period), e.g. [0;(1)]")
    p.add_argument("--cf-head", default="")
    p.add_argument("--cf-period", default="")
    p.add_argument("--len", "--length", dest="length", type=int, required=True)
    p.set_defaults(handler=cmd_word_characteristic)
    p = w.add_parser("balanced", help="Balance check with a minimal witness")
    p.add_argument("w")
    p.set_defaults(handler=cmd_word_balanced)
    p = w.add_parser("complexity", help="Number of distinct factors of length n")
    p.add_argument("w")
    p.add_argument("n", type=int)
    p.set_defaults(handler=cmd_word_complexity)

    bridge = groups.add_parser("bridge", help="Bricks over the double Kronecker algebra")
    b = bridge.add_subparsers(dest="command", required=True, parser_class=_Parser)
    p = b.add_parser("classify", help="Classify infinite strings given as JSON specs")
    p.add_argument("--spec", required=True, help="JSON object, JSON list or JSONL of specs")
    p.add_argument("--window", type=int, default=None, help="Falsification window (STURMBRICK_WINDOW)")
    p.set_defaults(handler=cmd_bridge_classify)
    p = b.add_parser("verify-christoffel", help="End dimension of bands against Christoffel words")
    p.add_argument("--max", type=int, default=None, help="Letter bound (STURMBRICK_MAX_BAND_LETTERS)")
    p.set_defaults(handler=cmd_bridge_verify_christoffel)
    p = b.add_parser("verify-config", help="Check a single-kissing configuration")
    p.add_argument("--algebra", required=True)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.set_defaults(handler=cmd_bridge_verify_config)
    p = b.add_parser("witness", help="Strong inner brick witness of an ab-word")
    p.add_argument("--word", required=True)
    p.add_argument("--left-open", action="store_true")
    p.add_argument("--right-open", action="store_true")
    p.set_defaults(handler=cmd_bridge_witness)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    try:
        settings = load_settings()
    except ValidationError as exc:
        first = exc.errors()[0]
        key = _ENV_KEYS.get(str(first["loc"][0]), str(first["loc"][0])) if first["loc"] else "settings"
        print(f"invalid setting {key}: {first['msg']}", file=sys.stderr)
        return 2
    configure_logging(args.log_level or settings.log_level)
    try:
        return args.handler(args, settings)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
    except ValidationError as exc:
        first = exc.errors()[0]
        location = ".".join(str(part) for part in first["loc"])
        print(f"invalid input at {location or '<root>'}: {first['msg']}", file=sys.stderr)
    except json.JSONDecodeError as exc:
        print(f"invalid JSON: {exc}", file=sys.stderr)
    except SturmbrickError as exc:
        print(f"error: {exc}", file=sys.stderr)
    return 2


def main() -> None:
    sys.exit(run())
