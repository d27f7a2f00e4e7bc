"""Command-line front end: ``simniven {construct,verify,scan,order}``.

Exit codes: 0 success, 1 verification failure, 2 invalid parameters or
malformed input, 3 inadmissible ``s``, 4 size or iteration cap exceeded.
The default size cap (bits) is read from ``SIMNIVEN_SIZE_CAP``.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from pathlib import Path

from . import digits
from .construction import (
    DEFAULT_SIZE_CAP,
    Claim,
    ConstructionParams,
    ConstructionResult,
    NivenCertificate,
    admissible_stream,
    construct,
    construct_tower,
    validate,
)
from .errors import (
    DomainError,
    InadmissibleError,
    NotInvertibleError,
    ResourceLimitError,
    ValidationError,
)
from .numtheory import lcm_range, multiplicative_order
from .oracle import Verdict, scan_simultaneous, verify_certificate, verify_claims

SCHEMA_VERSION = "1"
SIZE_CAP_ENV = "SIMNIVEN_SIZE_CAP"

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INVALID = 2
EXIT_INADMISSIBLE = 3
EXIT_RESOURCE = 4

_CLAIM_NAME = re.compile(r"^([a-z_]+)(?:\[(\d+)\])?$")


class DocumentError(ValueError):
    """A certificate document could not be parsed."""


def default_size_cap() -> int:
    raw = os.environ.get(SIZE_CAP_ENV)
    if raw is None:
        return DEFAULT_SIZE_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValidationError(f"{SIZE_CAP_ENV}={raw!r} is not an integer") from None
    if cap < 1:
        raise ValidationError(f"{SIZE_CAP_ENV} must be positive, got {cap}")
    return cap


def to_document(result: ConstructionResult) -> dict:
    """Serialize a result; every integer becomes a decimal string."""
    p = result.params
    doc = {
        "schema_version": SCHEMA_VERSION,
        "params": {"b": str(p.b), "k": str(p.k), "B": str(p.B), "m": str(p.m), "r": str(p.r)},
        "s": str(result.s),
        "omega": str(result.omega),
    }
    if result.tower_K is not None:
        doc["tower_K"] = str(result.tower_K)
    doc["value_decimal"] = str(result.value)
    bases = result.bases
    doc["renderings"] = {str(g): digits.render(digits.to_base(result.value, g)) for g in bases}
    doc["digit_sums"] = {str(g): str(digits.digit_sum(result.value, g)) for g in bases}
    doc["claims"] = [
        {"name": c.name, "expected": str(c.expected), "actual": str(c.actual), "pass": c.passed}
        for c in result.certificate.claims
    ]
    return doc


def _int_field(obj: dict, key: str) -> int:
    try:
        raw = obj[key]
    except (KeyError, TypeError):
        raise DocumentError(f"missing field {key!r}") from None
    if not isinstance(raw, str) or not re.fullmatch(r"-?\d+", raw):
        raise DocumentError(f"field {key!r} must be a decimal string, got {raw!r}")
    return int(raw)


def from_document(doc: dict) -> ConstructionResult:
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise DocumentError(f"unsupported schema_version {doc.get('schema_version')!r}")
    p = doc.get("params")
    params = ConstructionParams(*(_int_field(p, key) for key in ("b", "k", "m", "r")))
    if "B" in (p or {}) and _int_field(p, "B") != params.B:
        raise DocumentError("params.B does not equal b**k")
    claims = []
    raw_claims = doc.get("claims")
    if not isinstance(raw_claims, list):
        raise DocumentError("claims must be a list")
    for item in raw_claims:
        match = _CLAIM_NAME.match(str(item.get("name", ""))) if isinstance(item, dict) else None
        if match is None:
            raise DocumentError(f"malformed claim {item!r}")
        base = int(match.group(2)) if match.group(2) else None
        claims.append(
            Claim(match.group(1), _int_field(item, "expected"), _int_field(item, "actual"), base)
        )
    tower_K = _int_field(doc, "tower_K") if "tower_K" in doc else None
    return ConstructionResult(
        params=params,
        s=_int_field(doc, "s"),
        omega=_int_field(doc, "omega"),
        value=_int_field(doc, "value_decimal"),
        certificate=NivenCertificate(tuple(claims)),
        tower_K=tower_K,
    )


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _format_text(result: ConstructionResult) -> str:
    p = result.params
    lines = [
        f"value: {result.value}",
        f"params: b={p.b} k={p.k} B={p.B} m={p.m} r={p.r}",
        f"s: {result.s}",
        f"omega: {result.omega}",
    ]
    if result.tower_K is not None:
        lines.append(f"tower K: {result.tower_K} (sparse repunit in base {result.spacing_base})")
    for g in sorted(result.bases, reverse=True):
        e = digits.to_base(result.value, g)
        ones = ", ".join(map(str, e.positions_of(1)))
        lines.append(f"base {g}: ({digits.render(e)})_{g}")
        lines.append(f"  digit sum {e.digit_sum}; 1s at positions {ones}")
    lines.append("claims:")
    lines.extend(_claim_line(c.name, c.expected, c.actual, c.passed) for c in result.certificate.claims)
    return "\n".join(lines) + "\n"


def _claim_line(name, expected, actual, ok, note="") -> str:
    return f"  {'PASS' if ok else 'FAIL'} {name}: expected {expected}, actual {actual}{note}"


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _err(msg: str) -> None:
    print(f"error: {msg}", file=sys.stderr)


def cmd_construct(args) -> int:
    params = ConstructionParams(args.b, args.k, args.m, args.r)
    try:
        validate(params)
        size_cap = args.size_cap if args.size_cap is not None else default_size_cap()
    except ValidationError as exc:
        _err(str(exc))
        return EXIT_INVALID
    build = construct_tower if args.tower else construct
    try:
        if args.s is not None:
            s = args.s
        else:
            if args.s_min < 1:
                raise ValidationError(f"--s-min must be >= 1, got {args.s_min}")
            s = next(admissible_stream(params, args.s_min)).s
        result = build(params, s, size_cap=size_cap)
    except InadmissibleError as exc:
        _err(str(exc))
        return EXIT_INADMISSIBLE
    except ResourceLimitError as exc:
        _err(str(exc))
        return EXIT_RESOURCE
    except DomainError as exc:
        _err(str(exc))
        return EXIT_INVALID
    if args.format == "json":
        _emit(dumps(to_document(result)), args.output)
    else:
        _emit(_format_text(result), args.output)
    if not (result.certificate.passed and verify_certificate(result).passed):
        _err("certificate failed independent verification (this is a bug)")
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def _print_verdict(verdict: Verdict) -> None:
    for c in verdict.claims:
        note = "" if c.recorded else " (certificate disagrees or omits this claim)"
        print(_claim_line(c.name, c.expected, c.actual, c.passed, note))
    print("verdict: " + ("PASS" if verdict.passed else "FAIL"))


def cmd_verify(args) -> int:
    if args.document is not None:
        try:
            text = sys.stdin.read() if args.document == "-" else Path(args.document).read_text()
            result = from_document(json.loads(text))
            validate(result.params)
        except (OSError, json.JSONDecodeError, DocumentError, DomainError) as exc:
            _err(f"malformed document: {exc}")
            return EXIT_INVALID
        verdict = verify_certificate(result)
    else:
        missing = [f for f in ("b", "k", "m", "r", "s") if getattr(args, f) is None]
        if missing:
            _err("--value needs " + ", ".join("--" + f for f in missing))
            return EXIT_INVALID
        params = ConstructionParams(args.b, args.k, args.m, args.r)
        try:
            validate(params)
            if args.s < 1 or args.value < 1:
                raise DomainError("--s and --value must be positive")
        except DomainError as exc:
            _err(str(exc))
            return EXIT_INVALID
        tower_K = lcm_range(params.k) if args.tower else None
        verdict = verify_claims(params, args.s, args.value, tower_K=tower_K)
    _print_verdict(verdict)
    return EXIT_OK if verdict.passed else EXIT_VERIFY_FAILED


def cmd_scan(args) -> int:
    params = ConstructionParams(args.b, args.k, args.m, args.r)
    try:
        report = scan_simultaneous(params, args.limit, shards=args.shards)
    except DomainError as exc:
        _err(str(exc))
        return EXIT_INVALID
    b, B = params.b, params.B
    out = []
    if args.format == "jsonl":
        for h in report.hits:
            out.append(json.dumps({"n": str(h)}))
        summary = {
            "b": str(b), "k": str(params.k), "B": str(B), "m": str(params.m),
            "r": str(params.r), "limit": str(report.limit), "count": str(report.count),
        }
        out.append(json.dumps({"summary": summary}))
    else:
        out.append(f"{'n':>12} {'s_' + str(b):>8} {'s_' + str(B):>8}")
        for h in report.hits:
            out.append(f"{h:>12} {digits.digit_sum(h, b):>8} {digits.digit_sum(h, B):>8}")
        out.append(f"{report.count} hits <= {report.limit}")
    _emit("\n".join(out) + "\n", args.output)
    return EXIT_OK


def cmd_order(args) -> int:
    try:
        print(multiplicative_order(args.a, args.n, cap=args.cap))
    except NotInvertibleError as exc:
        _err(str(exc))
        return EXIT_INVALID
    except ResourceLimitError as exc:
        _err(str(exc))
        return EXIT_RESOURCE
    except DomainError as exc:
        _err(str(exc))
        return EXIT_INVALID
    return EXIT_OK


def _add_params(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument("--b", type=int, required=required, help="base b >= 2")
    p.add_argument("--k", type=int, required=required, help="exponent k >= 1 (B = b**k)")
    p.add_argument("--m", type=int, required=required, help="progression modulus, gcd(m, b) = 1")
    p.add_argument("--r", type=int, required=required, help="progression residue, 0 <= r < m")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="simniven",
        description="Construct and verify integers that are Niven in bases b and b**k "
        "and lie in the progression r (mod m).",
        epilog=f"Environment: {SIZE_CAP_ENV} sets the default size cap in bits "
        f"(default {DEFAULT_SIZE_CAP}).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a sparse repunit and its certificate")
    _add_params(p)
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--s", type=int, help="digit-sum target (must be admissible)")
    which.add_argument("--s-min", type=int, help="use the least admissible s >= this")
    p.add_argument("--tower", action="store_true", help="certify every base b**l, l <= k")
    p.add_argument("--size-cap", type=int, help="refuse outputs above this many bits")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--output", help="write to this file instead of stdout")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="independently re-check a certificate")
    p.add_argument("document", nargs="?", help="certificate JSON path, or - for stdin")
    p.add_argument("--value", type=int, help="check a bare integer instead of a document")
    _add_params(p, required=False)
    p.add_argument("--s", type=int)
    p.add_argument("--tower", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="exhaustively list simultaneous Niven numbers")
    _add_params(p)
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--shards", type=int, default=1)
    p.add_argument("--format", choices=("jsonl", "table"), default="jsonl")
    p.add_argument("--output")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("order", help="multiplicative order of a modulo n")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cap", type=int, default=10**7, help="iteration cap")
    p.set_defaults(func=cmd_order)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and (args.document is None) == (args.value is None):
        parser.error("verify takes either a document or --value, not both or neither")
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
