"""Command-line front end: every verification as a subcommand with JSON/CSV reports.

Exit codes: 0 all checks passed, 1 at least one check failed, 2 usage or
validation error, 3 resource budget exceeded.  Reports are deterministic for
a fixed argument vector (including --seed); the wall_ms field is the one
value that varies between runs.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import random
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .arith import is_prime, omega, primes_up_to, theta
from .characters import corollary_lhs_divisor_form, corollary_report
from .errors import BudgetError
from .farey import farey_size, gcd_sum_bound, kernel_direct, kernel_exact
from .polyroots import (
    IntPolynomial,
    euler_majorant,
    euler_majorant_fraction,
    lift_roots,
    prop1_sum,
    prop1_sum_fraction,
    rho_profile,
)
from .sharpness import (
    incomplete_check,
    lower_bound_demo,
    second_moment_lhs,
    weil_check,
)
from .sieve import (
    DEFAULT_TERM_BUDGET,
    SieveInstance,
    row_sup_majorant_fraction,
    theorem1_report,
)
from . import suite as suite_mod

SUBCOMMANDS = ("rho", "prop1", "kernel", "sieve", "sharpness", "corollary", "suite")


class UsageError(ValueError):
    """Invalid configuration detected after argument parsing."""


@dataclass
class RunConfig:
    subcommand: str
    poly: tuple[int, ...] | None = None
    order: int | None = None  # Q or D depending on the subcommand
    start: int = 0  # M
    length: int | None = None  # N
    weights: str = "ones"  # "ones" | "random" | file path
    seed: int = 0
    output: str = "json"
    budget: int = DEFAULT_TERM_BUDGET
    frequency: int | None = None  # c, for the kernel subcommand
    exponent: int | None = None  # n, for the sharpness subcommand
    prime: int | None = None  # q, for the sharpness subcommand
    demo_order: int | None = None
    demo_length: int | None = None
    extras: dict = field(default_factory=dict)


def _parse_poly(text: str) -> tuple[int, ...]:
    try:
        coeffs = tuple(int(part.strip()) for part in text.split(","))
    except ValueError:
        raise UsageError(f"polynomial must be comma-separated integers, got {text!r}")
    if not coeffs:
        raise UsageError("polynomial needs at least one coefficient")
    if len(coeffs) > 1 and coeffs[0] == 0:
        raise UsageError("leading polynomial coefficient must be nonzero")
    return coeffs


def parse_config(argv: list[str]) -> RunConfig:
    """Parse and validate the argument vector; argparse exits 2 on bad usage."""
    parser = argparse.ArgumentParser(
        prog="polysieve",
        description="Exact large-sieve verifications for integer polynomial phases.",
    )
    parser.add_argument("--output", choices=("json", "csv"), default="json")
    parser.add_argument("--budget", type=int, default=DEFAULT_TERM_BUDGET)
    parser.add_argument("--seed", type=int, default=0)

    # accepted before or after the subcommand; the per-subparser copies only
    # touch the namespace when given explicitly
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("json", "csv"), default=argparse.SUPPRESS)
    common.add_argument("--budget", type=int, default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)

    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_rho = sub.add_parser("rho", parents=[common], help="tabulate root counts modulo 1..Q")
    p_rho.add_argument("--poly", required=True)
    p_rho.add_argument("--Q", type=int, required=True)

    p_prop1 = sub.add_parser(
        "prop1", parents=[common], help="rho(m)/m partial sum and its majorant"
    )
    p_prop1.add_argument("--poly", required=True)
    p_prop1.add_argument("--Q", type=int, required=True)

    p_kernel = sub.add_parser(
        "kernel", parents=[common], help="exact Farey kernel at a frequency"
    )
    p_kernel.add_argument("--c", type=int, required=True)
    p_kernel.add_argument("--Q", type=int, required=True)

    p_sieve = sub.add_parser(
        "sieve", parents=[common], help="quadratic-form report for one instance"
    )
    p_sieve.add_argument("--poly", required=True)
    p_sieve.add_argument("--Q", type=int, required=True)
    p_sieve.add_argument("--M", type=int, default=0)
    p_sieve.add_argument("--N", type=int, required=True)
    p_sieve.add_argument("--weights", default="ones")

    p_sharp = sub.add_parser(
        "sharpness", parents=[common], help="power-sum identities and bounds"
    )
    p_sharp.add_argument("--n", type=int, required=True)
    p_sharp.add_argument("--q", type=int, required=True)
    p_sharp.add_argument("--Q", type=int, default=None)
    p_sharp.add_argument("--N", type=int, default=None)

    p_cor = sub.add_parser(
        "corollary", parents=[common], help="primitive character sum report"
    )
    p_cor.add_argument("--poly", required=True)
    p_cor.add_argument("--D", type=int, required=True)
    p_cor.add_argument("--M", type=int, default=0)
    p_cor.add_argument("--N", type=int, required=True)
    p_cor.add_argument("--weights", default="ones")

    sub.add_parser("suite", parents=[common], help="run the full acceptance battery")

    ns = parser.parse_args(argv)

    threads = os.environ.get("POLYSIEVE_THREADS")
    if threads is not None:
        try:
            if int(threads) < 1:
                raise ValueError
        except ValueError:
            raise UsageError(f"POLYSIEVE_THREADS must be a positive integer, got {threads!r}")

    cfg = RunConfig(
        subcommand=ns.subcommand,
        output=ns.output,
        budget=ns.budget,
        seed=ns.seed,
    )
    if cfg.budget < 1:
        raise UsageError("--budget must be positive")

    if ns.subcommand in ("rho", "prop1", "sieve", "corollary"):
        cfg.poly = _parse_poly(ns.poly)
    if ns.subcommand in ("rho", "prop1", "kernel", "sieve"):
        cfg.order = ns.Q
    if ns.subcommand == "corollary":
        cfg.order = ns.D
    if cfg.order is not None and cfg.order < 1:
        raise UsageError("Q/D must be >= 1")
    if ns.subcommand == "kernel":
        cfg.frequency = ns.c
    if ns.subcommand in ("sieve", "corollary"):
        cfg.start = ns.M
        cfg.length = ns.N
        cfg.weights = ns.weights
        if cfg.length < 1:
            raise UsageError("N must be >= 1")
        if len(cfg.poly) < 2:
            raise UsageError("the phase polynomial must have degree >= 1")
    if ns.subcommand == "sharpness":
        cfg.exponent = ns.n
        cfg.prime = ns.q
        cfg.demo_order = ns.Q
        cfg.demo_length = ns.N
        if cfg.exponent < 2:
            raise UsageError("n must be >= 2")
        if not is_prime(cfg.prime):
            raise UsageError(f"q must be prime, got {cfg.prime}")
        if (cfg.demo_order is None) != (cfg.demo_length is None):
            raise UsageError("provide both --Q and --N for the floor demo, or neither")
    return cfg


def _load_weights(cfg: RunConfig) -> SieveInstance:
    poly = IntPolynomial(cfg.poly)
    if cfg.weights == "ones":
        return SieveInstance.ones(poly, cfg.order, cfg.start, cfg.length)
    if cfg.weights == "random":
        rng = random.Random(cfg.seed)
        weights = tuple(rng.randint(-9, 9) for _ in range(cfg.length))
        return SieveInstance(poly, cfg.order, cfg.start, cfg.length, weights)
    weight_map: dict[int, complex] = {}
    try:
        with open(cfg.weights, newline="") as fh:
            for row in csv.reader(fh):
                if not row or row[0].lstrip().startswith("#"):
                    continue
                i = int(row[0])
                re = float(row[1]) if len(row) > 1 else 0.0
                im = float(row[2]) if len(row) > 2 else 0.0
                weight_map[i] = complex(re, im) if im else (int(re) if re.is_integer() else re)
    except OSError as exc:
        raise UsageError(f"cannot read weight file {cfg.weights!r}: {exc}")
    except (ValueError, IndexError):
        raise UsageError(f"weight file {cfg.weights!r} must hold rows i,re[,im]")
    try:
        return SieveInstance.from_map(poly, cfg.order, cfg.start, cfg.length, weight_map)
    except ValueError as exc:
        raise UsageError(str(exc))


def _check(name: str, ref: str, ok: bool) -> dict:
    return {"name": name, "paper_ref": ref, "ok": bool(ok)}


def _run_rho(cfg: RunConfig):
    poly = IntPolynomial(cfg.poly)
    profile = rho_profile(poly, cfg.order)
    table = list(profile.rho[1:])
    multiplicative = all(
        table[a * b - 1] == table[a - 1] * table[b - 1]
        for a in range(2, cfg.order + 1)
        for b in range(a, cfg.order // a + 1)
        if math.gcd(a, b) == 1
    )
    scan_limit = min(cfg.order, 100)
    scan_ok = all(
        table[m - 1] == sum(1 for x in range(m) if poly(x) % m == 0)
        for m in range(1, scan_limit + 1)
    )
    results = {
        "rho": table,
        "partial_sum": profile.partial_sum,
        "degree": poly.degree,
    }
    checks = [
        _check("rho-multiplicative", "root-count-multiplicativity", multiplicative),
        _check("rho-matches-scan", "root-count-scan-agreement", scan_ok),
    ]
    return results, checks


def _run_prop1(cfg: RunConfig):
    poly = IntPolynomial(cfg.poly)
    total = prop1_sum(poly, cfg.order)
    majorant = euler_majorant(poly, cfg.order)
    results = {
        "sum": total,
        "euler_majorant": majorant,
        "envelope_exponent": omega(poly.leading) + theta(poly.degree),
    }
    major_ok = prop1_sum_fraction(poly, cfg.order) <= euler_majorant_fraction(
        poly, cfg.order
    )
    k = poly.degree
    binom = math.comb(k + 1, 2)
    per_prime_ok = True
    for p in primes_up_to(min(cfg.order, 100)):
        if poly.leading % p == 0:
            continue
        partial = Fraction(1)
        pm = 1
        for m in range(1, 64):
            pm *= p
            if pm > 10**6:
                break
            partial += Fraction(len(lift_roots(poly, p, m).roots), pm)
        cap = 1 + Fraction(theta(k), p) + (k + 2) * binom * Fraction(1, p * (p - 1))
        if partial > cap:
            per_prime_ok = False
            break
    checks = [
        _check("majorization", "partial-sum-euler-majorization", major_ok),
        _check("per-prime-bound", "per-prime-series-bound", per_prime_ok),
    ]
    return results, checks


def _run_kernel(cfg: RunConfig):
    exact = kernel_exact(cfg.frequency, cfg.order)
    direct = kernel_direct(cfg.frequency, cfg.order)
    bound = gcd_sum_bound(cfg.frequency, cfg.order)
    results = {
        "kernel_exact": exact,
        "direct_sum_real": direct.real,
        "direct_sum_imag": direct.imag,
        "gcd_sum_bound": bound,
        "farey_size": farey_size(cfg.order),
    }
    checks = [
        _check(
            "closed-form-matches-direct",
            "farey-kernel-ramanujan-identity",
            abs(direct - exact) <= 1e-6,
        ),
        _check("gcd-majorant", "kernel-gcd-majorant", abs(exact) <= bound),
    ]
    return results, checks


def _run_sieve(cfg: RunConfig):
    inst = _load_weights(cfg)
    report = theorem1_report(inst, cfg.budget)
    results = {
        "lhs": report.lhs,
        "lhs_exact": report.lhs_exact,
        "norm_sq": report.norm_sq,
        "rhs_envelope": report.rhs_envelope,
        "ratio": report.ratio,
        "row_sup_at": report.row_sup_at,
        "row_sup": report.row_sup,
        "row_sup_bound": report.row_sup_bound,
        "log_substituted": report.log_substituted,
    }
    checks = [
        _check(
            "ratio-ceiling", "envelope-ratio-ceiling", report.ratio <= suite_mod.RATIO_CEILING
        )
    ]
    if report.lhs_exact is not None:
        rel = abs(report.lhs - report.lhs_exact) / max(1.0, abs(report.lhs_exact))
        checks.append(
            _check("numeric-exact-agreement", "gram-expansion-identity", rel <= 1e-8)
        )
        ints = inst.integer_weights()
        norm2 = sum(w * w for w in ints)
        chain_ok = (
            report.lhs_exact
            <= report.row_sup * norm2
            <= row_sup_majorant_fraction(inst) * norm2
        )
        checks.append(_check("bound-chain", "row-sum-bound-chain", chain_ok))
    return results, checks


def _run_sharpness(cfg: RunConfig):
    n, q = cfg.exponent, cfg.prime
    g = math.gcd(n, q - 1)
    lhs = second_moment_lhs(n, q)
    results: dict = {"gcd": g}
    if q % n == 1:
        rhs = (n - 1) * q * (q - 1)
        results.update({"ex1_lhs": lhs, "ex1_rhs": rhs, "ok": lhs == rhs})
        checks = [
            _check("second-moment-identity", "power-sum-second-moment-identity", lhs == rhs)
        ]
    else:
        rhs = (g - 1) * q * (q - 1)
        results.update({"general_lhs": lhs, "general_rhs": rhs, "ok": lhs == rhs})
        checks = [
            _check("second-moment-gcd-form", "power-sum-second-moment-identity", lhs == rhs)
        ]
    if q > n:
        weil_ok = weil_check(n, q)
        inc_ok = incomplete_check(n, q)
        results.update({"weil_ok": weil_ok, "incomplete_ok": inc_ok})
        checks.append(_check("weil-bound", "weil-square-root-bound", weil_ok))
        checks.append(_check("incomplete-bound", "incomplete-sum-log-bound", inc_ok))
    if cfg.demo_order is not None:
        try:
            demo_lhs, floor, ok = lower_bound_demo(
                n, cfg.demo_order, cfg.demo_length, cfg.budget
            )
        except ValueError as exc:
            raise UsageError(str(exc))
        results.update({"demo_lhs": demo_lhs, "demo_floor": floor, "demo_ok": ok})
        checks.append(_check("lower-bound-floor", "quadratic-form-floor", ok))
    return results, checks


def _run_corollary(cfg: RunConfig):
    inst = _load_weights(cfg)
    report = corollary_report(inst, cfg.budget)
    oracle = corollary_lhs_divisor_form(inst)
    oracle_f = float(oracle)
    results = {
        "lhs": report.lhs,
        "lhs_divisor_form": oracle_f,
        "norm_sq": report.norm_sq,
        "rhs_envelope": report.rhs_envelope,
        "ratio": report.ratio,
        "log_substituted": report.log_substituted,
    }
    checks = [
        _check(
            "dual-path-agreement",
            "character-sum-dual-path",
            abs(report.lhs - oracle_f) <= 1e-8 * max(1.0, abs(oracle_f)),
        ),
        _check(
            "ratio-ceiling", "character-envelope-ratio", report.ratio <= suite_mod.RATIO_CEILING
        ),
    ]
    return results, checks


_CRITERION_REFS = {
    1: "farey-kernel-ramanujan-identity",
    2: "gram-expansion-identity",
    3: "power-sum-second-moment-identity",
    4: "prime-power-root-bounds",
    5: "partial-sum-euler-majorization",
    6: "row-sum-bound-chain",
    7: "envelope-ratio-ceiling",
    8: "weil-square-root-bound",
    9: "quadratic-form-floor",
    10: "character-envelope-ratio",
    11: "vandermonde-determinant-identity",
}


def _run_suite(cfg: RunConfig):
    rows = suite_mod.run_all()
    results = {
        "criteria": [
            {
                "number": r.number,
                "name": r.name,
                "ok": r.ok,
                "wall_ms": round(r.wall_ms, 3),
                "within_limit": r.within_limit,
            }
            for r in rows
        ]
    }
    checks = [
        _check(f"criterion-{r.number}", _CRITERION_REFS[r.number], r.ok and r.within_limit)
        for r in rows
    ]
    return results, checks


_RUNNERS = {
    "rho": _run_rho,
    "prop1": _run_prop1,
    "kernel": _run_kernel,
    "sieve": _run_sieve,
    "sharpness": _run_sharpness,
    "corollary": _run_corollary,
    "suite": _run_suite,
}


def _echo_inputs(cfg: RunConfig) -> dict:
    inputs: dict = {"budget": cfg.budget, "seed": cfg.seed}
    if cfg.poly is not None:
        inputs["poly"] = list(cfg.poly)
    if cfg.order is not None:
        inputs["Q"] = cfg.order
    if cfg.subcommand in ("sieve", "corollary"):
        inputs.update({"M": cfg.start, "N": cfg.length, "weights": cfg.weights})
    if cfg.frequency is not None:
        inputs["c"] = cfg.frequency
    if cfg.exponent is not None:
        inputs.update({"n": cfg.exponent, "q": cfg.prime})
    if cfg.demo_order is not None:
        inputs.update({"demo_Q": cfg.demo_order, "demo_N": cfg.demo_length})
    return inputs


def _assert_finite(obj, path="report"):
    if isinstance(obj, float):
        if not math.isfinite(obj):
            raise ValueError(f"non-finite value at {path}")
    elif isinstance(obj, dict):
        for k, v in obj.items():
            _assert_finite(v, f"{path}.{k}")
    elif isinstance(obj, (list, tuple)):
        for idx, v in enumerate(obj):
            _assert_finite(v, f"{path}[{idx}]")


def run(cfg: RunConfig) -> tuple[int, dict]:
    """Execute the configured subcommand; returns (exit_code, report)."""
    t0 = time.perf_counter()
    results, checks = _RUNNERS[cfg.subcommand](cfg)
    report = {
        "subcommand": cfg.subcommand,
        "inputs": _echo_inputs(cfg),
        "results": results,
        "checks": checks,
        "wall_ms": round((time.perf_counter() - t0) * 1000, 3),
    }
    _assert_finite(report)
    code = 0 if all(c["ok"] for c in checks) else 1
    return code, report


def _flatten_for_csv(report: dict):
    yield ("meta", "subcommand", report["subcommand"])
    for key in sorted(report["inputs"]):
        yield ("input", key, report["inputs"][key])
    for key in sorted(report["results"]):
        value = report["results"][key]
        yield ("result", key, json.dumps(value) if isinstance(value, (list, dict)) else value)
    for chk in report["checks"]:
        yield (f"check:{chk['name']}", "ok", chk["ok"])
        yield (f"check:{chk['name']}", "paper_ref", chk["paper_ref"])
    yield ("meta", "wall_ms", report["wall_ms"])


def render(report: dict, output: str) -> str:
    if output == "json":
        return json.dumps(report, sort_keys=True, indent=2, allow_nan=False)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(("section", "key", "value"))
    for row in _flatten_for_csv(report):
        writer.writerow(row)
    return buf.getvalue().rstrip("\n")


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        cfg = parse_config(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        code, report = run(cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(render(report, cfg.output))
    return code


if __name__ == "__main__":
    sys.exit(main())
