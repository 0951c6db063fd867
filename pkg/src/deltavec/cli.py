"""Command-line interface.

Subcommands: ``delta`` (delta vector and verdicts for a simplex file),
``dilate`` (apply the dilation operator, both routes cross-checked),
``family`` (build a named family member and run the route/prediction
checks), ``sweep`` (per-n property table as CSV), ``oracle`` (brute-force
count table), and ``search`` (scan last-vertex simplices for a target
verdict combination).

Simplex files are JSON objects ``{"vertices": [[int, ...], ...]}`` with an
optional ``"name"``.  Reports are JSON with a fixed key order; integers that
do not fit in 64 bits are rendered as decimal strings.  Exit codes: 0 ok,
1 a family's asserted property failed, 2 usage/parse error, 3 math-domain
error, 4 dilation route mismatch, 5 family route disagreement, 6 dilation
guarantee violated (a bug).
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from typing import Any, Sequence

from .bruteforce import brute_count, delta_from_counts, reciprocity_check
from .errors import (
    DeltaVecError,
    DilationBoundViolated,
)
from .families import (
    Family,
    FamilySpec,
    build_simplex,
    nonunimodal_bounds,
    observed_properties,
    predicted_properties,
    three_route_check,
)
from .sequences import (
    check_hibi,
    check_stanley,
    delta_degree,
    is_alternatingly_increasing,
    is_log_concave,
    is_unimodal,
)
from .series import dilate_h, dilate_h_interpolated
from .simplex import (
    DeltaVector,
    LatticeSimplex,
    delta_vector,
    interior_count,
    normalized_volume,
)
from .verification import dilation_bounds, sweep

_INT64_MAX = 2**63 - 1


class UsageError(Exception):
    pass


def _env_int(name: str, fallback: int) -> int:
    raw = os.environ.get(f"EHRHART_{name}")
    return int(raw) if raw else fallback


def _jsonable(value: Any) -> Any:
    """Replace integers beyond 64 bits by decimal strings, recursively."""
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return str(value) if abs(value) > _INT64_MAX else value
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    return value


def _emit(payload: dict, stream=None) -> None:
    stream = stream or sys.stdout
    json.dump(_jsonable(payload), stream, indent=2)
    stream.write("\n")


def _load_simplex(path: str) -> tuple[LatticeSimplex, dict]:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read simplex file {path}: {exc}")
    if not isinstance(data, dict) or "vertices" not in data:
        raise UsageError(f"{path}: expected an object with a 'vertices' key")
    vertices = data["vertices"]
    if not isinstance(vertices, list) or not all(isinstance(v, list) for v in vertices):
        raise UsageError(f"{path}: 'vertices' must be a list of integer vectors")
    for v in vertices:
        for x in v:
            if not isinstance(x, int) or isinstance(x, bool):
                raise UsageError(f"{path}: vertex entries must be integers, got {x!r}")
    echo = {"path": path, "vertices": vertices}
    if "name" in data:
        echo["name"] = data["name"]
    return LatticeSimplex(tuple(tuple(v) for v in vertices)), echo


def _parse_delta_arg(raw: str) -> tuple[int, ...]:
    try:
        values = tuple(int(part) for part in raw.split(","))
    except ValueError:
        raise UsageError(f"--delta expects comma-separated integers, got {raw!r}")
    if not values:
        raise UsageError("--delta must not be empty")
    return values


def _properties(delta: Sequence[int]) -> dict:
    return {
        "unimodal": is_unimodal(delta).holds,
        "strictly_unimodal": is_unimodal(delta, strict=True).holds,
        "log_concave": is_log_concave(delta).holds,
        "strictly_log_concave": is_log_concave(delta, strict=True).holds,
        "alternatingly_increasing": is_alternatingly_increasing(delta).holds,
        "strictly_alternatingly_increasing": is_alternatingly_increasing(
            delta, strict=True
        ).holds,
        "stanley": check_stanley(delta).holds,
        "hibi": check_hibi(delta).holds,
    }


def _report(delta: Sequence[int], input_echo: dict, volume: int | None = None) -> dict:
    values = tuple(delta)
    d = len(values) - 1
    s = delta_degree(values)
    bound_lc, bound_ai = dilation_bounds(s, d)
    return {
        "input": input_echo,
        "delta": list(values),
        "d": d,
        "s": s,
        "normalized_volume": sum(values) if volume is None else volume,
        "interior_m1": interior_count(values, 1),
        "properties": _properties(values),
        "bound": {"lc": bound_lc, "ai": bound_ai},
    }


def cmd_delta(args) -> int:
    simplex, echo = _load_simplex(args.file)
    dv = delta_vector(simplex, cap=args.cap_box_points)
    _emit(_report(dv.delta, echo, volume=normalized_volume(simplex)))
    return 0


def cmd_dilate(args) -> int:
    if args.delta is not None:
        base = _parse_delta_arg(args.delta)
        echo = {"delta": list(base), "n": args.n}
    else:
        simplex, file_echo = _load_simplex(args.file)
        base = delta_vector(simplex, cap=args.cap_box_points).delta
        echo = {**file_echo, "n": args.n}
    if base[0] != 1 or any(v < 0 for v in base):
        raise UsageError("input coefficients must be nonnegative with leading 1")
    out = dilate_h(base, args.n)
    other = dilate_h_interpolated(base, args.n)
    agree = out.coeffs == other.coeffs
    report = _report(out.coeffs, echo)
    report["routes_agree"] = agree
    _emit(report)
    if not agree:
        print("dilation routes disagree; this is a bug", file=sys.stderr)
        return 4
    return 0


_FAMILY_CHOICES = {f.value: f for f in Family}


def _family_spec(args) -> FamilySpec:
    family = _FAMILY_CHOICES[args.name]
    return FamilySpec(family, l=args.l, d=args.d, m=args.m)


def cmd_family(args) -> int:
    spec = _family_spec(args)
    check = three_route_check(spec, cap=args.cap_box_points)
    enumerated = check.enumerated
    predicted = predicted_properties(spec)
    observed = observed_properties(enumerated)
    predicted_ok = all(observed[key] == value for key, value in predicted.items())
    if spec.family in (Family.NONUNIMODAL_ODD, Family.NONUNIMODAL_EVEN):
        predicted_ok = predicted_ok and all(
            nonunimodal_bounds(spec, enumerated).values()
        )
    report = _report(
        enumerated.delta,
        {
            "family": spec.family.value,
            "params": {k: v for k, v in (("l", spec.l), ("d", spec.d), ("m", spec.m)) if v is not None},
        },
    )
    report["routes"] = {
        "enumerated": list(enumerated.delta),
        "ceiling": list(check.ceiling.delta) if check.ceiling else None,
        "closed_form": list(check.closed_form.delta) if check.closed_form else None,
        "agree": check.agree,
    }
    report["predicted"] = predicted
    report["predicted_ok"] = predicted_ok
    _emit(report)
    if not check.agree:
        mismatch = check.first_mismatch()
        print(
            f"route {mismatch[0]} disagrees with enumeration first at index {mismatch[1]}",
            file=sys.stderr,
        )
        return 5
    if not predicted_ok:
        print("an asserted family property failed", file=sys.stderr)
        return 1
    return 0


def cmd_sweep(args) -> int:
    if args.n_max < 1:
        raise UsageError("--n-max must be >= 1")
    if args.delta is not None:
        base = _parse_delta_arg(args.delta)
        echo: dict = {"delta": list(base)}
    else:
        simplex, echo = _load_simplex(args.file)
        base = delta_vector(simplex, cap=args.cap_box_points).delta
    if base[0] != 1 or any(v < 0 for v in base):
        raise UsageError("input coefficients must be nonnegative with leading 1")
    report = sweep(base, args.n_max)
    if args.format == "json":
        payload = {
            "input": echo,
            "d": report.d,
            "s": report.s,
            "bound": {"lc": report.bound_lc, "ai": report.bound_ai},
            "hypotheses_satisfied": report.hypotheses.satisfied,
            "min_n": {"lc": report.min_n_lc, "ai": report.min_n_ai},
            "rows": [
                {
                    "n": row.n,
                    "delta": list(row.delta),
                    "strictly_log_concave": row.strictly_log_concave,
                    "chain_a": row.chain_a,
                    "chain_b": row.chain_b,
                    "strictly_alternatingly_increasing": row.strictly_alternatingly_increasing,
                    "at_or_above_bound": row.at_or_above_bound,
                }
                for row in report.rows
            ],
        }
        _emit(payload)
    else:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(
            [
                "n",
                "strictly_log_concave",
                "chain_a",
                "chain_b",
                "strictly_alternatingly_increasing",
                "at_or_above_bound",
            ]
        )
        for row in report.rows:
            writer.writerow(
                [
                    row.n,
                    str(row.strictly_log_concave).lower(),
                    str(row.chain_a).lower(),
                    str(row.chain_b).lower(),
                    str(row.strictly_alternatingly_increasing).lower(),
                    str(row.at_or_above_bound).lower(),
                ]
            )
    return 0


def cmd_oracle(args) -> int:
    simplex, echo = _load_simplex(args.file)
    d = simplex.d
    counts = [
        brute_count(simplex, m, cap=args.cap_oracle_box)
        for m in range(max(d, args.m_max) + 1)
    ]
    interior = [
        brute_count(simplex, m, interior=True, cap=args.cap_oracle_box)
        for m in range(1, args.m_max + 1)
    ]
    delta = delta_from_counts(counts, d)
    recip = reciprocity_check(simplex, args.m_max, cap=args.cap_oracle_box)
    _emit(
        {
            "input": echo,
            "counts": counts,
            "interior_counts": interior,
            "delta": list(delta.delta),
            "reciprocity": [
                {"m": m, "interior": brute, "polynomial": predicted}
                for m, brute, predicted in recip.rows
            ],
            "reciprocity_ok": recip.ok,
        }
    )
    return 0


_TARGET_KEYS = {
    "unimodal": is_unimodal,
    "log_concave": is_log_concave,
    "alternatingly_increasing": is_alternatingly_increasing,
}


def _parse_target(raw: str) -> list[tuple[str, bool]]:
    target = []
    for token in raw.split(","):
        token = token.strip()
        want = not token.startswith("!")
        key = token.lstrip("!")
        if key not in _TARGET_KEYS:
            raise UsageError(
                f"unknown target property {key!r}; choose from {sorted(_TARGET_KEYS)}"
            )
        target.append((key, want))
    return target


def _parse_box(raw: str, d: int) -> list[tuple[int, int]]:
    parts = raw.split(",")
    if len(parts) != d:
        raise UsageError(f"--box needs {d} lo:hi ranges, got {len(parts)}")
    box = []
    for part in parts:
        try:
            lo, hi = (int(x) for x in part.split(":"))
        except ValueError:
            raise UsageError(f"bad range {part!r}; expected lo:hi")
        if hi < lo:
            raise UsageError(f"empty range {part!r}")
        box.append((lo, hi))
    return box


def cmd_search(args) -> int:
    """Scan simplices (0, e_1..e_{d-1}, c) with c in the given box."""
    d = args.d
    if d < 1:
        raise UsageError("--d must be >= 1")
    target = _parse_target(args.target)
    box = _parse_box(args.box, d)
    frame = [tuple(0 for _ in range(d))] + [
        tuple(1 if i == j else 0 for i in range(d)) for j in range(d - 1)
    ]
    hits = 0
    suppressed = 0

    def candidates(index: int, prefix: list[int]):
        if index == d:
            yield tuple(prefix)
            return
        lo, hi = box[index]
        for value in range(lo, hi + 1):
            prefix.append(value)
            yield from candidates(index + 1, prefix)
            prefix.pop()

    for c in candidates(0, []):
        if c[d - 1] == 0:
            continue  # degenerate: volume would be zero
        if abs(c[d - 1]) > args.cap_box_points:
            continue
        simplex = LatticeSimplex(tuple(frame + [c]))
        values = delta_vector(simplex, cap=args.cap_box_points).delta
        ok = all(
            _TARGET_KEYS[key](values, strict=args.strict).holds == want
            for key, want in target
        )
        if not ok:
            continue
        if args.idp_necessary and values[1] ** 2 < values[0] * values[2]:
            suppressed += 1
            continue
        hits += 1
        report = _report(values, {})
        del report["input"]
        line = {"vertices": [list(v) for v in simplex.vertices], **report}
        print(json.dumps(_jsonable(line)))
        if args.limit is not None and hits >= args.limit:
            break
    if suppressed:
        print(
            f"note: {suppressed} hit(s) suppressed by the IDP-necessary filter "
            "delta_1^2 >= delta_0*delta_2; a polytope violating it never has IDP",
            file=sys.stderr,
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="deltavec",
        description="Exact delta vectors of lattice simplices and dilation checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_box_cap(p):
        p.add_argument(
            "--cap-box-points",
            type=int,
            default=_env_int("CAP_BOX_POINTS", 10**7),
            help="max box points to enumerate (default 1e7; env EHRHART_CAP_BOX_POINTS)",
        )

    p = sub.add_parser("delta", help="delta vector and verdicts for a simplex file")
    p.add_argument("file")
    add_box_cap(p)
    p.set_defaults(func=cmd_delta)

    p = sub.add_parser("dilate", help="apply the dilation operator")
    p.add_argument("file", nargs="?")
    p.add_argument("--delta", help="comma-separated coefficients instead of a file")
    p.add_argument("-n", "--n", type=int, required=True)
    add_box_cap(p)
    p.set_defaults(func=cmd_dilate)

    p = sub.add_parser("family", help="build a named family member and cross-check it")
    p.add_argument("name", choices=sorted(_FAMILY_CHOICES))
    p.add_argument("--l", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--m", type=int)
    add_box_cap(p)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("sweep", help="per-n property table")
    p.add_argument("file", nargs="?")
    p.add_argument("--delta", help="comma-separated coefficients instead of a file")
    p.add_argument(
        "--n-max", type=int, default=_env_int("N_MAX", 0), help="largest dilation factor"
    )
    p.add_argument(
        "--format",
        choices=("csv", "json"),
        default=os.environ.get("EHRHART_FORMAT", "csv"),
    )
    add_box_cap(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("oracle", help="brute-force count table and recovered delta")
    p.add_argument("file")
    p.add_argument("--m-max", type=int, default=3)
    p.add_argument(
        "--cap-oracle-box",
        type=int,
        default=_env_int("CAP_ORACLE_BOX", 10**8),
        help="max bounding-box points to scan (env EHRHART_CAP_ORACLE_BOX)",
    )
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("search", help="scan last-vertex simplices for a verdict combo")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--box", required=True, help="d comma-separated lo:hi ranges")
    p.add_argument(
        "--target",
        required=True,
        help="comma-separated properties, prefix ! to negate "
        "(unimodal, log_concave, alternatingly_increasing)",
    )
    p.add_argument("--idp-necessary", action="store_true")
    p.add_argument(
        "--strict",
        action="store_true",
        default=bool(os.environ.get("EHRHART_STRICT")),
        help="use the strict predicate variants",
    )
    p.add_argument("--limit", type=int)
    add_box_cap(p)
    p.set_defaults(func=cmd_search)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse uses exit code 2 for usage errors
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DilationBoundViolated as exc:
        print(f"dilation guarantee violated (bug): {exc}", file=sys.stderr)
        return 6
    except DeltaVecError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3


def entrypoint() -> None:
    sys.exit(main())
