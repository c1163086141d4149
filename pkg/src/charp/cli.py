"""Command-line front end: ``charp repro|check|gb|dim|jac``."""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import repro
from .certificate import CertificateDocument, write_certificate
from .commutator import det, jacobian
from .dsl import ScriptError, bind, evaluate, parse_poly, parse_script
from .fsing import (FAILS, HOLDS, INCONCLUSIVE, WitnessSpec, eval_qexpr, fedder_ci_check,
                    fedder_search, glassbrenner_ci_check)
from .groebner import DEFAULT_PAIR_BUDGET, dim_is_zero, is_member, leading_ideal, monomial_quotient_dim
from .repro import Certificate
from .ring import BudgetExceeded, is_prime, render

EXIT_OK, EXIT_FAIL, EXIT_INCONCLUSIVE, EXIT_USAGE = 0, 1, 2, 3
CLAIMS = ("T", "A3", "A4", "splits5", "splits6", "Bn", "known-fpurity")
DEFAULT_PRIMES = {"T": [2, 3, 5], "A3": [2, 3], "A4": [2, 3], "known-fpurity": [2, 3]}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a list of integers: {text!r}") from None


def _names(text: str) -> list[str]:
    return [t.strip() for t in text.split(",") if t.strip()]


def _default_budget() -> int:
    env = os.environ.get("CHARP_BUDGET")
    if env is None:
        return DEFAULT_PAIR_BUDGET
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"CHARP_BUDGET is not an integer: {env!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--budget", type=int, default=argparse.SUPPRESS,
                        help="pair and term caps (default: $CHARP_BUDGET or 1000000)")
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS,
                        help="worker processes across independent claims")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output on stdout")

    parser = _Parser(prog="charp", parents=[common],
                     description="F-purity and F-regularity checks over F_p.")
    sub = parser.add_subparsers(dest="command", required=True)

    r = sub.add_parser("repro", parents=[common], help="reproduce a claim and emit a certificate")
    r.add_argument("--claim", required=True, choices=CLAIMS)
    r.add_argument("--p", type=_int_list, help="comma-separated characteristics")
    r.add_argument("--out", type=Path, help="write the certificate (with timings) here")

    c = sub.add_parser("check", parents=[common], help="run the check directives of a script")
    c.add_argument("--script", required=True, type=Path)
    c.add_argument("--out", type=Path)

    for name, helptext in (("gb", "reduced Groebner basis of a script ideal"),
                           ("dim", "Krull dimension of the quotient by a script ideal")):
        g = sub.add_parser(name, parents=[common], help=helptext)
        g.add_argument("--script", required=True, type=Path)
        g.add_argument("--ideal", required=True)

    j = sub.add_parser("jac", parents=[common], help="Jacobian matrix and, if square, its determinant")
    j.add_argument("--script", required=True, type=Path)
    j.add_argument("--polys", required=True, type=_names)
    j.add_argument("--vars", required=True, type=_names)
    return parser


# --- claims -------------------------------------------------------------------


def _tasks(claim: str, primes: list[int] | None) -> list[tuple]:
    if claim in ("splits5", "splits6"):
        return [("splits", int(claim[-1]))]
    if claim == "Bn":
        return [("Bn", n) for n in (2, 3, 4)]
    primes = primes or DEFAULT_PRIMES[claim]
    for p in primes:
        if not is_prime(p):
            raise UsageError(f"{p} is not prime")
    if claim == "known-fpurity":
        return [("known", fam, n, p) for p in primes for fam, n in repro.known_fpurity_table(p)]
    return [(claim, tuple(primes))]


def _run_task(task: tuple, budget: int) -> Certificate:
    kind = task[0]
    if kind == "T":
        return repro.repro_T(task[1], budget=budget)
    if kind == "A3":
        return repro.repro_A3(task[1], budget=budget)
    if kind == "A4":
        return repro.repro_A4(task[1], budget=budget)
    if kind == "splits":
        return repro.repro_theorem_splits(task[1])
    if kind == "Bn":
        return repro.repro_Bn_bookkeeping(task[1])
    if kind == "known":
        return repro.check_known_fpurity(task[1], task[2], task[3], max_terms=budget)
    raise ValueError(f"unknown task {task!r}")


def run_claims(tasks: list[tuple], budget: int, threads: int = 1) -> list[Certificate]:
    """Run independent tasks, returning certificates in task order."""
    if threads <= 1 or len(tasks) <= 1:
        return [_run_task(t, budget) for t in tasks]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(_run_task, tasks, [budget] * len(tasks)))


# --- scripts ------------------------------------------------------------------


def _load(path: Path):
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return bind(parse_script(text))


def run_script(env, claim_id: str, budget: int) -> Certificate:
    """Evaluate each check directive of a bound script as one certificate step."""
    ring = env.ring
    cert = Certificate(claim_id, [ring.p], order=ring.order)
    for chk in env.checks:
        key = f"line{chk.tok.line}.{chk.kind}"
        I = env.ideal(chk.ideal)
        try:
            status, witness = _run_check(env, chk, I, budget)
        except BudgetExceeded as exc:
            status, witness = INCONCLUSIVE, str(exc)
        cert.add(key, f"check {chk.kind}", status, witness, p=ring.p)
    return cert


def _run_check(env, chk, I, budget):
    ring = env.ring
    if chk.kind == "dim0":
        ok = dim_is_zero(I, budget)
        return (HOLDS if ok else FAILS), f"dimension {monomial_quotient_dim(leading_ideal(I, budget))}"
    if chk.kind == "member":
        f = evaluate(chk.expr, ring, env.polys)
        return (HOLDS if is_member(f, I, budget) else FAILS), render(f)
    if chk.kind == "fpure":
        res = fedder_ci_check(I, chk.zero, budget) if chk.zero else fedder_search(I, max_terms=budget)
        return res.status, repro.describe_result(res)
    c = evaluate(chk.witness, ring, env.polys)
    pre = [(evaluate(b, ring, env.polys), k) for b, k in chk.prefactors]
    spec = WitnessSpec(c, list(I.generators), pre, chk.zero)
    qs = [eval_qexpr(q, ring.p, ring.p) for q in chk.q_list]
    res = glassbrenner_ci_check(spec, qs, max_terms=budget)
    return res.status, repro.describe_result(res)


# --- entry point --------------------------------------------------------------


def _exit_code(doc: CertificateDocument) -> int:
    return {"verified": EXIT_OK, "failed": EXIT_FAIL}.get(doc.overall, EXIT_INCONCLUSIVE)


def _emit(doc: CertificateDocument, args) -> None:
    if getattr(args, "out", None):
        with open(args.out, "wb") as fh:
            write_certificate(doc, fh, perf=True)
    if args.json:
        sys.stdout.buffer.write(write_certificate(doc))
        sys.stdout.flush()
        return
    for cert in doc.claims:
        print(f"{cert.claim_id}: {cert.overall} ({len(cert.steps)} steps)")
        for s in cert.failed_steps():
            where = f" p={s.p}" if s.p is not None else ""
            print(f"  {s.status}: {s.key}{where}: {s.description}")


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        for name, default in (("threads", 1), ("seed", 0), ("json", False)):
            if not hasattr(args, name):
                setattr(args, name, default)
        if not hasattr(args, "budget"):
            args.budget = _default_budget()
        if args.budget <= 0 or args.threads <= 0:
            raise UsageError("--budget and --threads must be positive")
        random.seed(args.seed)
        return _dispatch(args)
    except UsageError as exc:
        print(f"charp: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ScriptError as exc:
        print(f"charp: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"charp: inconclusive: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE


def _dispatch(args) -> int:
    if args.command == "repro":
        if args.claim in ("splits5", "splits6", "Bn") and args.p:
            print(f"charp: --p ignored for {args.claim} (characteristic-free)", file=sys.stderr)
        doc = CertificateDocument(run_claims(_tasks(args.claim, args.p), args.budget, args.threads))
        _emit(doc, args)
        return _exit_code(doc)

    env = _load(args.script)
    if args.command == "check":
        doc = CertificateDocument([run_script(env, args.script.name, args.budget)])
        _emit(doc, args)
        return _exit_code(doc)

    if args.command in ("gb", "dim"):
        if args.ideal not in env.ideals:
            raise UsageError(f"no ideal named {args.ideal!r} in {args.script}")
        I = env.ideals[args.ideal]
        if args.command == "gb":
            lines = [render(g) for g in I.groebner_basis(args.budget)]
        else:
            lines = [str(monomial_quotient_dim(leading_ideal(I, args.budget)))]
    else:
        missing = [v for v in args.vars if v not in env.ring]
        if missing:
            raise UsageError(f"unknown variables: {', '.join(missing)}")
        polys = [parse_poly(env.ring, t, env.polys) for t in args.polys]
        J = jacobian(polys, args.vars)
        lines = ["[" + ", ".join(render(e) for e in row) + "]" for row in J.entries]
        if J.is_square():
            lines.append(f"det = {render(det(J))}")
    if args.json:
        print(json.dumps({"command": args.command, "result": lines}, indent=2))
    else:
        print("\n".join(lines))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
