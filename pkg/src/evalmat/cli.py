"""Command-line front end: det, verify, ffprob, bench, matrix."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import bench as bench_mod
from .det import (
    BORDERLINE,
    DIRECT,
    H_ROUTE,
    ORACLE,
    SUM_FORM,
    VANISH_RANK,
    DetReport,
    LinearChange,
    det_borderline,
    det_cauchy_binet,
    det_structured,
    det_sum_form,
    oracle_det,
    predict_equivariant_det,
    report_to_json,
)
from .ffprob import (
    ExperimentConfig,
    estimate_zero_probability,
    result_csv_line,
    result_to_json,
)
from .matrix import (
    PointVectors,
    bareiss_det,
    evaluation_matrix,
    factorization_parts,
    matrix_to_json,
    pascal_core,
)
from .poly import HomogeneousPoly, UnivariatePoly, poly_from_json, poly_to_json
from .scalar import (
    DomainMismatchError,
    ScalarDomain,
    SizeMismatchError,
    format_scalar,
    parse_domain,
    parse_scalar,
)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INPUT = 2
EXIT_SIZE = 3


@dataclass
class Instance:
    domain: ScalarDomain
    poly: HomogeneousPoly | UnivariatePoly
    pts: PointVectors
    linear_change: LinearChange | None


def load_instance(text: str) -> Instance:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValueError(f"instance is not valid JSON: {e}") from e
    if not isinstance(obj, dict):
        raise ValueError("instance must be a JSON object")

    def field(name, required=True):
        if name not in obj:
            if required:
                raise ValueError(f"field '{name}': missing")
            return None
        return obj[name]

    try:
        domain = parse_domain(field("domain"))
    except (ValueError, TypeError) as e:
        raise ValueError(f"field 'domain': {e}") from e
    try:
        poly = poly_from_json(field("poly"), domain)
    except (ValueError, TypeError, KeyError) as e:
        raise ValueError(f"field 'poly': {e}") from e
    try:
        a = [parse_scalar(s, domain) for s in field("a")]
        b = [parse_scalar(s, domain) for s in field("b")]
        pts = PointVectors(a, b, domain)
    except (ValueError, TypeError) as e:
        raise ValueError(f"field 'a'/'b': {e}") from e
    change = None
    raw_change = field("linear_change", required=False)
    if raw_change is not None:
        try:
            vals = [parse_scalar(s, domain) for s in raw_change]
            if len(vals) != 4:
                raise ValueError("need exactly four scalars (alpha, beta, gamma, delta)")
            change = LinearChange(*vals)
        except (ValueError, TypeError) as e:
            raise ValueError(f"field 'linear_change': {e}") from e
    return Instance(domain, poly, pts, change)


def instance_to_json(inst: Instance) -> dict:
    out = {
        "domain": inst.domain.name,
        "poly": poly_to_json(inst.poly),
        "a": [format_scalar(x) for x in inst.pts.a],
        "b": [format_scalar(x) for x in inst.pts.b],
    }
    if inst.linear_change is not None:
        lc = inst.linear_change
        out["linear_change"] = [format_scalar(x) for x in (lc.alpha, lc.beta, lc.gamma, lc.delta)]
    return out


def _read_instance(args) -> Instance:
    if args.infile and args.infile != "-":
        with open(args.infile, "r", encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    return load_instance(text)


def _auto_report(inst: Instance, minor_mode: str = DIRECT) -> DetReport:
    p, pts = inst.poly, inst.pts
    if isinstance(p, HomogeneousPoly):
        return det_structured(p, pts, minor_mode)
    # sum form: vanishing and borderline regimes have closed forms, the
    # rectangular-core regime n <= deg f falls back to the oracle
    k = p.degree
    if pts.n >= k + 2:
        return DetReport(value=pts.domain.zero, method=VANISH_RANK)
    if pts.n == k + 1:
        return det_sum_form(p, pts)
    return oracle_det(p, pts)


def cmd_det(args) -> int:
    inst = _read_instance(args)
    p, pts = inst.poly, inst.pts
    method = args.method
    if method == "auto":
        report = _auto_report(inst)
    elif method == "oracle":
        report = oracle_det(p, pts)
    elif method == "borderline":
        if not isinstance(p, HomogeneousPoly):
            raise ValueError("--method borderline needs a homogeneous polynomial")
        report = det_borderline(p, pts)
    elif method in ("cb-direct", "cb-h"):
        if not isinstance(p, HomogeneousPoly):
            raise ValueError(f"--method {method} needs a homogeneous polynomial")
        report = det_cauchy_binet(p, pts, DIRECT if method == "cb-direct" else H_ROUTE)
    else:  # sum-form
        if not isinstance(p, UnivariatePoly):
            raise ValueError("--method sum-form needs a sum_form polynomial")
        report = det_sum_form(p, pts)
    out = {"domain": inst.domain.name}
    out.update(report_to_json(report, include_terms=args.show_terms))
    print(json.dumps(out, indent=2))
    return EXIT_OK


def _engine_values(inst: Instance):
    """(label, value) for every engine legal at this (n, k), oracle last."""
    p, pts = inst.poly, inst.pts
    rows = []
    if isinstance(p, HomogeneousPoly):
        n, k = pts.n, p.degree
        if n >= k + 2:
            rows.append((VANISH_RANK, det_structured(p, pts).value))
        if n == k + 1:
            rows.append((BORDERLINE, det_borderline(p, pts).value))
        if n <= k + 1:
            rows.append(("CAUCHY_BINET_DIRECT", det_cauchy_binet(p, pts, DIRECT).value))
            rows.append(("CAUCHY_BINET_H_ROUTE", det_cauchy_binet(p, pts, H_ROUTE).value))
    else:
        n, k = pts.n, p.degree
        if n >= k + 2:
            rows.append((VANISH_RANK, pts.domain.zero))
        if n == k + 1:
            rows.append((SUM_FORM, det_sum_form(p, pts).value))
    rows.append((ORACLE, oracle_det(p, pts).value))
    return rows


def cmd_verify(args) -> int:
    inst = _read_instance(args)
    rows = _engine_values(inst)
    if args.expect is not None:
        rows.append(("EXPECTED", parse_scalar(args.expect, inst.domain)))

    groups = [rows]
    if inst.linear_change is not None:
        if not isinstance(inst.poly, UnivariatePoly):
            raise ValueError("linear_change applies to sum_form polynomials only")
        c, d, predicted = predict_equivariant_det(inst.poly, inst.linear_change, inst.pts)
        transformed = PointVectors(
            [c * x for x in inst.pts.a], [d * x for x in inst.pts.b], inst.domain
        )
        actual = bareiss_det(evaluation_matrix(inst.poly, transformed))
        groups.append(
            [("EQUIVARIANT_PREDICTED", predicted), ("TRANSFORMED_ORACLE", actual)]
        )

    ok = True
    width = max(len(label) for g in groups for label, _ in g) + 2
    for group in groups:
        for label, value in group:
            print(f"{label:<{width}}{format_scalar(value)}")
        for i in range(len(group)):
            for j in range(i + 1, len(group)):
                li, vi = group[i]
                lj, vj = group[j]
                if vi == vj:
                    print(f"  {li} == {lj}: PASS")
                else:
                    ok = False
                    print(
                        f"  {li} == {lj}: FAIL "
                        f"({format_scalar(vi)} != {format_scalar(vj)})"
                    )
    print("verification:", "PASS" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_matrix(args) -> int:
    inst = _read_instance(args)
    out = {"domain": inst.domain.name, "A": matrix_to_json(evaluation_matrix(inst.poly, inst.pts))}
    if isinstance(inst.poly, HomogeneousPoly):
        v, d, w = factorization_parts(inst.poly, inst.pts)
        out["V"] = matrix_to_json(v)
        out["D"] = matrix_to_json(d)
        out["W"] = matrix_to_json(w)
    else:
        out["core"] = matrix_to_json(pascal_core(inst.poly, inst.pts.n))
    print(json.dumps(out, indent=2))
    return EXIT_OK


def _resolve_seed(args) -> int:
    if args.seed is None:
        print("seed 0", file=sys.stderr)
        return 0
    return args.seed


def cmd_ffprob(args) -> int:
    if args.coeffs:
        coeffs = tuple(int(c) for c in args.coeffs.split(","))
        if len(coeffs) != args.k + 1:
            raise ValueError(f"--coeffs needs k+1 = {args.k + 1} entries, got {len(coeffs)}")
    else:
        coeffs = (1,) * (args.k + 1)
    cfg = ExperimentConfig(
        modulus=args.p, n=args.n, coeffs=coeffs, trials=args.trials, seed=_resolve_seed(args)
    )
    result = estimate_zero_probability(cfg)
    if args.csv:
        print(result_csv_line(result))
    else:
        print(json.dumps(result_to_json(result), indent=2))
    return EXIT_OK


def cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",")]
    if any(n < 1 for n in sizes):
        raise ValueError("bench sizes must be >= 1")
    domain = parse_domain(args.domain)
    records = bench_mod.run_bench(sizes, domain, args.trials, _resolve_seed(args))
    print(bench_mod.CSV_HEADER)
    for rec in records:
        print(bench_mod.record_csv_line(rec))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="evalmat",
        description="Exact determinants of bivariate polynomial evaluation matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_instance_args(p):
        p.add_argument("--in", dest="infile", default=None, help="instance file (default: stdin)")

    p_det = sub.add_parser("det", help="compute one determinant report")
    add_instance_args(p_det)
    p_det.add_argument(
        "--method",
        choices=["auto", "oracle", "borderline", "cb-direct", "cb-h", "sum-form"],
        default="auto",
    )
    p_det.add_argument("--show-terms", action="store_true", help="include subset terms")
    p_det.set_defaults(handler=cmd_det)

    p_verify = sub.add_parser("verify", help="cross-check every applicable engine")
    add_instance_args(p_verify)
    p_verify.add_argument("--expect", default=None, help="additionally compare to this value")
    p_verify.set_defaults(handler=cmd_verify)

    p_matrix = sub.add_parser("matrix", help="print A and its factors")
    add_instance_args(p_matrix)
    p_matrix.set_defaults(handler=cmd_matrix)

    p_ff = sub.add_parser("ffprob", help="finite-field vanishing experiment")
    p_ff.add_argument("--p", type=int, required=True, help="prime field order")
    p_ff.add_argument("--n", type=int, required=True)
    p_ff.add_argument("--k", type=int, required=True)
    p_ff.add_argument("--coeffs", default=None, help="comma-separated alpha_0..alpha_k (default: all 1)")
    p_ff.add_argument("--trials", type=int, required=True)
    p_ff.add_argument("--seed", type=int, default=None)
    p_ff.add_argument("--csv", action="store_true", help="emit the one-line CSV record")
    p_ff.set_defaults(handler=cmd_ffprob)

    p_bench = sub.add_parser("bench", help="time borderline formula vs elimination")
    p_bench.add_argument("--sizes", required=True, help="comma-separated n values (k = n-1)")
    p_bench.add_argument("--domain", default="fp:2147483647")
    p_bench.add_argument("--trials", type=int, default=3, help="timing repeats per method")
    p_bench.add_argument("--seed", type=int, default=None)
    p_bench.set_defaults(handler=cmd_bench)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except SizeMismatchError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_SIZE
    except bench_mod.BenchMismatchError as e:
        print(f"error: method values disagree: {e}", file=sys.stderr)
        return EXIT_MISMATCH
    except (DomainMismatchError, ZeroDivisionError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
