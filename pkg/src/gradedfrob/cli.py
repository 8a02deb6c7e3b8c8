"""Command dispatch, verdict reporting, and machine-readable output.

Exit codes: 0 yes/valid/accept, 1 no/reject, 2 inconclusive, 64 usage,
65 parse error, 70 internal inconsistency (certified criteria disagreed).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from typing import List, Optional, Tuple

from .algebra import AlgebraError, GradedAlgebra, ungrade
from .constructions import ConstructionSpec, build_construction, matrix_over
from .fileformat import (ParseError, parse_algebra_text, parse_certificate,
                         render_algebra, render_certificate)
from .frobenius import (Certificate, InternalInconsistencyError, Refutation, Verdict,
                        inertia_group, is_frobenius, is_graded_symmetric,
                        is_sigma_graded_frobenius, is_symmetric, left_sigma_faithful,
                        right_sigma_faithful, scan_sigma, verify_certificate)
from .groups import GroupError, render_group
from .linalg import Budget
from .scalars import ScalarError

EXIT_YES = 0
EXIT_NO = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 64
EXIT_PARSE = 65
EXIT_INTERNAL = 70

_OUTCOME_EXIT = {"yes": EXIT_YES, "no": EXIT_NO, "inconclusive": EXIT_INCONCLUSIVE}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _common_flags() -> _Parser:
    common = _Parser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="randomized-search seed")
    common.add_argument("--budget-trials", type=int, default=64,
                        help="randomized trials before a probabilistic verdict")
    common.add_argument("--json", action="store_true", help="structured report on stdout")
    return common


def _build_parser() -> _Parser:
    common = _common_flags()
    parser = _Parser(prog="gradedfrob",
                     description="Decide graded Frobenius / graded symmetric "
                                 "properties of finite-dimensional graded algebras, "
                                 "with verifiable certificates.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="parse and validate an algebra file")
    p.add_argument("file")

    p = sub.add_parser("check", parents=[common], help="sigma-graded Frobenius test")
    p.add_argument("file")
    p.add_argument("--sigma", type=int, required=True, help="group element index")
    p.add_argument("--method", choices=["iso", "form", "component", "all"], default="all")
    p.add_argument("--cert-out", help="write the certificate to this path")

    p = sub.add_parser("scan", parents=[common], help="Frobenius verdict for every degree")
    p.add_argument("file")
    p.add_argument("--method", choices=["iso", "form", "component", "all"], default="all")

    p = sub.add_parser("symmetric", parents=[common], help="graded or ungraded symmetry test")
    p.add_argument("file")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--graded", action="store_true", default=True)
    mode.add_argument("--ungraded", dest="graded", action="store_false")

    p = sub.add_parser("frobenius", parents=[common], help="ungraded Frobenius test")
    p.add_argument("file")
    p.add_argument("--method", choices=["iso", "form", "component", "all"], default="all")

    p = sub.add_parser("faithful", parents=[common], help="sigma-faithfulness test")
    p.add_argument("file")
    p.add_argument("--sigma", type=int, required=True)
    p.add_argument("--side", choices=["left", "right"], required=True)

    p = sub.add_parser("inertia", parents=[common],
                       help="degrees whose suspension fixes the regular module")
    p.add_argument("file")

    p = sub.add_parser("verify", parents=[common], help="re-check a certificate deterministically")
    p.add_argument("file")
    p.add_argument("cert")
    p.add_argument("--ungraded", action="store_true",
                   help="check against the algebra with its grading forgotten "
                        "(for frobenius/symmetric --ungraded certificates)")

    gen = sub.add_parser("gen", parents=[common], help="emit a builder fixture as an algebra file")
    gensub = gen.add_subparsers(dest="name", required=True)

    g = gensub.add_parser("group-algebra", parents=[common])
    g.add_argument("--field", default="Q")
    g.add_argument("--group", required=True, help='e.g. "cyclic 4" or "product cyclic 2 x cyclic 2"')

    g = gensub.add_parser("nakayama-nesbitt", parents=[common])
    g.add_argument("--field", default="Q")
    g.add_argument("--u", default="1")
    g.add_argument("--v", default="1")

    g = gensub.add_parser("trivial-extension", parents=[common])
    g.add_argument("--field", default="Q")
    g.add_argument("--base", default="kx2", help="k | kx2 | kx3 | kxk | m2")

    g = gensub.add_parser("split-trivial-extension", parents=[common])
    g.add_argument("--field", default="Q")
    g.add_argument("--base1", default="k")
    g.add_argument("--base2", default="k")
    g.add_argument("--group", default="cyclic 3")
    g.add_argument("--deg1", type=int, default=1)
    g.add_argument("--deg2", type=int, default=2)

    g = gensub.add_parser("matrix-good", parents=[common])
    g.add_argument("--field", default="Q")
    g.add_argument("--n", type=int, default=2)
    g.add_argument("--group", required=True)
    g.add_argument("--degrees", required=True, help="comma-separated row degrees")

    g = gensub.add_parser("matrix-fine", parents=[common])
    g.add_argument("--field", default="Q")
    g.add_argument("--n", type=int, default=2)

    g = gensub.add_parser("skew-group", parents=[common])
    g.add_argument("--field", default="Q")
    g.add_argument("--base", default="kxk")
    g.add_argument("--group", default="cyclic 2")
    g.add_argument("--action", default="identity", choices=["identity", "negate-x", "swap"])

    g = gensub.add_parser("matrix-over", parents=[common])
    g.add_argument("--n", type=int, default=2)
    g.add_argument("--field", default="Q")
    g.add_argument("--base", help="named base algebra")
    g.add_argument("--file", dest="base_file", help="algebra file to wrap instead of --base")

    g = gensub.add_parser("random", parents=[common])
    g.add_argument("--field", default="Q")
    g.add_argument("--max-dim", type=int, default=8)
    g.add_argument("--max-group", type=int, default=6)

    return parser


# ---------------------------------------------------------------------------
# Report assembly

def _algebra_summary(a: GradedAlgebra) -> dict:
    return {"dim": a.dim, "group": render_group(a.group), "field": str(a.field)}


def _certificate_json(cert: Certificate) -> dict:
    payload = None
    if cert.payload_matrix is not None:
        payload = [[cert.field.render(v) for v in row] for row in cert.payload_matrix.data]
    elif cert.payload_vector is not None:
        payload = [[cert.field.render(v) for v in cert.payload_vector]]
    return {"kind": cert.kind, "sigma": cert.sigma, "field": str(cert.field),
            "payload": payload}


def _refutation_json(a: GradedAlgebra, ref: Refutation) -> dict:
    out = {"reason": ref.reason, "certified": ref.certified}
    if ref.error_bound is not None:
        out["error_bound"] = str(ref.error_bound)
    if ref.witness_degree is not None:
        out["witness_degree"] = ref.witness_degree
    if ref.witness_vector is not None:
        out["witness"] = [a.field.render(v) for v in ref.witness_vector]
    if ref.detail:
        out["detail"] = ref.detail
    return out


def _verdict_json(a: GradedAlgebra, v: Verdict) -> dict:
    out = {"sigma": v.sigma, "outcome": v.outcome, "method": v.method}
    if v.refutation is not None and v.refutation.error_bound is not None:
        out["error_bound"] = str(v.refutation.error_bound)
    if v.certificate is not None:
        out["certificate"] = _certificate_json(v.certificate)
    elif v.refutation is not None:
        out["refutation"] = _refutation_json(a, v.refutation)
    return out


def _verdict_line(a: GradedAlgebra, v: Verdict) -> str:
    label = a.group.label(v.sigma) if v.sigma is not None else "-"
    if v.is_yes:
        return f"sigma={label}: yes ({v.method})"
    if v.outcome == "no":
        ref = v.refutation
        if ref and not ref.certified:
            return f"sigma={label}: no ({v.method}; probabilistic, error <= {ref.error_bound})"
        reason = ref.reason if ref else "certified"
        return f"sigma={label}: no ({v.method}; {reason})"
    return f"sigma={label}: inconclusive ({v.method})"


_GEN_PARAMS = {
    "group-algebra": ("field", "group"),
    "nakayama-nesbitt": ("field", "u", "v"),
    "trivial-extension": ("field", "base"),
    "split-trivial-extension": ("field", "base1", "base2", "group", "deg1", "deg2"),
    "matrix-good": ("field", "n", "group", "degrees"),
    "matrix-fine": ("field", "n"),
    "skew-group": ("field", "base", "group", "action"),
    "matrix-over": ("field", "n", "base"),
    "random": ("field", "max_dim", "max_group"),
}


def _gen_algebra(args) -> GradedAlgebra:
    name = args.name
    if name == "matrix-over" and args.base_file:
        # file-backed bases cannot be named in a ConstructionSpec
        return matrix_over(_load_algebra(args.base_file), args.n)
    if name == "matrix-over" and not args.base:
        raise UsageError("matrix-over needs --base or --file")
    parameters = {}
    for key in _GEN_PARAMS.get(name, ()):
        value = getattr(args, key, None)
        if value is not None:
            parameters[key.replace("_", "-")] = str(value)
    if name == "random":
        parameters["seed"] = str(args.seed)
    try:
        return build_construction(ConstructionSpec(name, parameters))
    except KeyError as exc:
        raise UsageError(f"missing parameter for builder {name!r}: {exc}") from None


def _load_algebra(path: str) -> GradedAlgebra:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    return parse_algebra_text(text)


def _check_sigma(a: GradedAlgebra, sigma: int) -> None:
    if not 0 <= sigma < a.group.order:
        raise UsageError(f"--sigma {sigma} is not an element of a group of order "
                         f"{a.group.order}")


def _dispatch(args) -> Tuple[int, dict, List[str]]:
    budget = Budget(trials=args.budget_trials)
    rng = random.Random(args.seed)
    report = {"command": args.command, "algebra": None, "verdicts": [],
              "seed": args.seed, "budget": {"trials": args.budget_trials}}
    lines: List[str] = []

    if args.command == "gen":
        algebra = _gen_algebra(args)
        text = render_algebra(algebra)
        report["algebra"] = _algebra_summary(algebra)
        report["algebra_text"] = text
        return EXIT_YES, report, [text.rstrip("\n")]

    if args.command == "verify":
        algebra = _load_algebra(args.file)
        report["algebra"] = _algebra_summary(algebra)
        try:
            with open(args.cert, "r", encoding="utf-8") as handle:
                cert = parse_certificate(handle.read())
        except OSError as exc:
            raise ParseError(f"cannot read {args.cert}: {exc}") from None
        target = ungrade(algebra) if args.ungraded else algebra
        ok, reason = verify_certificate(target, cert)
        report["accepted"] = ok
        report["reason"] = reason
        lines.append(f"certificate {'accepted' if ok else 'rejected'}: {reason}")
        return (EXIT_YES if ok else EXIT_NO), report, lines

    algebra = _load_algebra(args.file)
    report["algebra"] = _algebra_summary(algebra)

    if args.command == "validate":
        report["valid"] = True
        lines.append(f"valid: dim {algebra.dim} over {algebra.field}, "
                     f"group {render_group(algebra.group)}")
        return EXIT_YES, report, lines

    if args.command == "check":
        _check_sigma(algebra, args.sigma)
        verdict = is_sigma_graded_frobenius(algebra, args.sigma, args.method, budget, rng)
        report["verdicts"].append(_verdict_json(algebra, verdict))
        lines.append(_verdict_line(algebra, verdict))
        if verdict.certificate is not None:
            cert_text = render_certificate(verdict.certificate)
            if getattr(args, "cert_out", None):
                with open(args.cert_out, "w", encoding="utf-8") as handle:
                    handle.write(cert_text)
                lines.append(f"certificate written to {args.cert_out}")
            else:
                lines.append(cert_text.rstrip("\n"))
        return _OUTCOME_EXIT[verdict.outcome], report, lines

    if args.command == "scan":
        result = scan_sigma(algebra, budget, rng, method=args.method)
        for sigma in algebra.group.elements():
            verdict = result.verdicts[sigma]
            report["verdicts"].append(_verdict_json(algebra, verdict))
            lines.append(_verdict_line(algebra, verdict))
        report["yes_set"] = result.yes_set
        report["coset_ok"] = result.coset_ok
        yes_labels = "{" + ",".join(algebra.group.label(s) for s in result.yes_set) + "}"
        lines.append(f"yes-set: {yes_labels}")
        if result.coset_ok is not None:
            lines.append(f"coset structure check: {'ok' if result.coset_ok else 'violated'}")
        return (EXIT_YES if result.yes_set else EXIT_NO), report, lines

    if args.command == "symmetric":
        if args.graded:
            verdict = is_graded_symmetric(algebra, budget, rng)
        else:
            verdict = is_symmetric(algebra, budget, rng)
        entry = _verdict_json(algebra, verdict)
        if not args.graded:
            entry["graded"] = False  # certificate verifies against the ungraded algebra
        report["verdicts"].append(entry)
        lines.append(_verdict_line(algebra, verdict))
        if verdict.certificate is not None:
            lines.append(render_certificate(verdict.certificate).rstrip("\n"))
        return _OUTCOME_EXIT[verdict.outcome], report, lines

    if args.command == "frobenius":
        verdict = is_frobenius(algebra, args.method, budget, rng)
        entry = _verdict_json(algebra, verdict)
        entry["graded"] = False  # certificate verifies against the ungraded algebra
        report["verdicts"].append(entry)
        lines.append(_verdict_line(algebra, verdict))
        return _OUTCOME_EXIT[verdict.outcome], report, lines

    if args.command == "faithful":
        _check_sigma(algebra, args.sigma)
        fn = left_sigma_faithful if args.side == "left" else right_sigma_faithful
        answer, witness = fn(algebra, args.sigma)
        entry = {"sigma": args.sigma, "outcome": answer,
                 "method": f"{args.side}_faithful"}
        if witness is not None:
            deg, vec = witness
            entry["refutation"] = {"reason": "faithfulness_witness", "certified": True,
                                   "witness_degree": deg,
                                   "witness": [algebra.field.render(v) for v in vec]}
            lines.append(f"{args.side} {algebra.group.label(args.sigma)}-faithful: no "
                         f"(witness in degree {algebra.group.label(deg)})")
        else:
            lines.append(f"{args.side} {algebra.group.label(args.sigma)}-faithful: yes")
        report["verdicts"].append(entry)
        return (EXIT_YES if answer == "yes" else EXIT_NO), report, lines

    if args.command == "inertia":
        result = inertia_group(algebra, budget, rng)
        report["inertia"] = result.members
        report["subgroup_ok"] = result.subgroup_ok
        for g in algebra.group.elements():
            outcome = "yes" if g in result.members else "no"
            report["verdicts"].append({"sigma": g, "outcome": outcome, "method": "inertia"})
        members = "{" + ",".join(algebra.group.label(g) for g in result.members) + "}"
        lines.append(f"inertia group: {members}")
        return EXIT_YES, report, lines

    raise UsageError(f"unknown command {args.command!r}")


def run_command(argv: List[str]):
    """Execute one CLI invocation; returns (exit code, report, human lines, json?)."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        return EXIT_USAGE, {"error": str(exc)}, [f"usage error: {exc}"], False
    as_json = bool(getattr(args, "json", False))
    started = time.monotonic()
    try:
        code, report, lines = _dispatch(args)
    except UsageError as exc:
        return EXIT_USAGE, {"error": str(exc)}, [f"usage error: {exc}"], as_json
    except ParseError as exc:
        return EXIT_PARSE, {"error": str(exc)}, [f"parse error: {exc}"], as_json
    except (ScalarError, GroupError, AlgebraError) as exc:
        return EXIT_PARSE, {"error": str(exc)}, [f"parse error: {exc}"], as_json
    except InternalInconsistencyError as exc:
        return EXIT_INTERNAL, {"error": str(exc)}, [f"internal inconsistency: {exc}"], as_json
    if not as_json and args.command != "gen":
        lines.append(f"elapsed {time.monotonic() - started:.3f}s")
    return code, report, lines, as_json


def main(argv: Optional[List[str]] = None) -> None:
    code, report, lines, as_json = run_command(sys.argv[1:] if argv is None else argv)
    if as_json:
        print(json.dumps(report))
    else:
        for line in lines:
            print(line)
    sys.exit(code)


if __name__ == "__main__":
    main()
