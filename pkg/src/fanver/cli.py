"""Command-line interface.

Reports go to stdout as JSON; diagnostics go to stderr as JSON.  Exit
codes: 0 for a clean pass, 1 for a theorem-level finding (a parity or
representative check that came out false), 2 for input or validation
errors.  Outputs are deterministic for fixed inputs and seeds.
"""

from __future__ import annotations

import argparse
import random
import sys

from . import io as fio
from .complexes import (
    InvalidComplexError,
    LabellingInadmissibleError,
    QuotientNotSimplicialError,
    barycentric_subdivide,
    crosspolytope_boundary,
    generate_sphere_labelling,
    random_admissible_labelling,
    torus_fixture,
    validate_labelling,
    validate_z2_manifold,
)
from .matroids import (
    alternating_dual,
    check_cocircuit_axioms,
    chirotope_from_matrix,
    cocircuits_from_chirotope,
    dual,
)
from .verify import (
    FuzzConfig,
    build_cochain_representative,
    fuzz_campaign,
    kyfan_classical,
    parity_check,
    verify_representative,
)

PASS, FINDING, INPUT_ERROR = 0, 1, 2


def _emit(report: dict) -> None:
    sys.stdout.write(fio.json_dumps(report))


def _diagnose(payload: dict) -> int:
    sys.stderr.write(fio.json_dumps(payload))
    return INPUT_ERROR


def _load_validated_inputs(args):
    k = fio.load_complex(fio.load_json(args.complex))
    verdict = validate_z2_manifold(k)
    if not verdict:
        raise fio.InputDataError(
            f"complex validation failed: {verdict.reason}",
            {"check": "complex", "reason": verdict.reason, "witness": list(verdict.witness)},
        )
    labelling = fio.load_labelling(fio.load_json(args.labels))
    lab_verdict = validate_labelling(k, labelling)
    if not lab_verdict:
        raise fio.InputDataError(
            f"labelling validation failed: condition ({lab_verdict.condition})",
            {
                "check": "labelling",
                "condition": lab_verdict.condition,
                "witness": list(lab_verdict.witness),
            },
        )
    return k, labelling


def cmd_verify(args) -> int:
    k, labelling = _load_validated_inputs(args)
    matroid = fio.load_matroid_or_matrix(
        fio.load_json(args.matroid), args.complete_negatives
    )
    report = parity_check(k, labelling, matroid)
    _emit(report.to_json_dict())
    return PASS if report.passed else FINDING


def cmd_kyfan(args) -> int:
    k, labelling = _load_validated_inputs(args)
    report = kyfan_classical(k, labelling, args.m)
    _emit(report.to_json_dict())
    return PASS if report.parity.passed else FINDING


def cmd_om(args) -> int:
    if args.om_action == "alternating":
        _emit(fio.dump_matroid(alternating_dual(args.m, args.n)))
        return PASS
    data = fio.load_json(args.file)
    if args.om_action == "check-axioms":
        matroid = fio.load_matroid(data, args.complete_negatives)
        _emit(fio.dump_matroid(matroid))
        return PASS
    matrix = fio.load_matrix(data)
    chi = chirotope_from_matrix(matrix)
    if args.om_action == "dual":
        chi = dual(chi)
    _emit(fio.dump_matroid(cocircuits_from_chirotope(chi)))
    return PASS


def cmd_gen(args) -> int:
    if args.gen_action == "crosspolytope":
        _emit(fio.dump_complex(crosspolytope_boundary(args.k)))
        return PASS
    if args.gen_action == "torus":
        _emit(fio.dump_complex(torus_fixture(args.size)))
        return PASS
    k = fio.load_complex(fio.load_json(args.complex))
    if args.gen_action == "subdivide":
        for _ in range(args.times):
            k = barycentric_subdivide(k)
        _emit(fio.dump_complex(k))
        return PASS
    # labelling
    verdict = validate_z2_manifold(k)
    if not verdict:
        raise fio.InputDataError(
            f"complex validation failed: {verdict.reason}",
            {"check": "complex", "reason": verdict.reason, "witness": list(verdict.witness)},
        )
    rng = random.Random(args.seed)
    if k.coords is not None:
        labelling = generate_sphere_labelling(k, args.m, rng)
    else:
        labelling = random_admissible_labelling(k, args.m, rng)
    _emit(fio.dump_labelling(labelling))
    return PASS


def cmd_cochain(args) -> int:
    matroid = fio.load_matroid_or_matrix(
        fio.load_json(args.matroid), args.complete_negatives
    )
    cochain = build_cochain_representative(matroid)
    report = {"cochain": fio.dump_cochain(cochain), "m": matroid.m, "r": matroid.r}
    code = PASS
    if args.check:
        verification = verify_representative(matroid)
        report["verification"] = verification.to_json_dict()
        code = PASS if verification.passed else FINDING
    _emit(report)
    return code


def _parse_range(text: str) -> tuple[int, int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
    else:
        lo = hi = text
    return int(lo), int(hi)


def cmd_fuzz(args) -> int:
    config = FuzzConfig(
        trials=args.trials,
        n_range=_parse_range(args.n_range),
        m_range=_parse_range(args.m_range),
        seed=args.seed,
        workers=args.workers,
    )
    report = fuzz_campaign(config)
    _emit(report)
    return PASS if report["pass"] else FINDING


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fanver",
        description="Exact mod-2 verification of cocircuit counting identities",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="parity check from complex, labelling and matroid files")
    p.add_argument("complex")
    p.add_argument("labels")
    p.add_argument("matroid", help="matroid or matrix JSON file")
    p.add_argument("--complete-negatives", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("kyfan", help="parity check against the alternating matroid")
    p.add_argument("complex")
    p.add_argument("labels")
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_kyfan)

    p = sub.add_parser("om", help="oriented matroid constructions")
    om_sub = p.add_subparsers(dest="om_action", required=True)
    q = om_sub.add_parser("from-matrix")
    q.add_argument("file")
    q.set_defaults(func=cmd_om)
    q = om_sub.add_parser("dual")
    q.add_argument("file")
    q.set_defaults(func=cmd_om)
    q = om_sub.add_parser("check-axioms")
    q.add_argument("file")
    q.add_argument("--complete-negatives", action="store_true")
    q.set_defaults(func=cmd_om)
    q = om_sub.add_parser("alternating")
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--n", type=int, required=True)
    q.set_defaults(func=cmd_om)

    p = sub.add_parser("gen", help="fixture and labelling generators")
    gen_sub = p.add_subparsers(dest="gen_action", required=True)
    q = gen_sub.add_parser("crosspolytope")
    q.add_argument("--k", type=int, required=True)
    q.set_defaults(func=cmd_gen)
    q = gen_sub.add_parser("subdivide")
    q.add_argument("complex")
    q.add_argument("--times", type=int, default=1)
    q.set_defaults(func=cmd_gen)
    q = gen_sub.add_parser("torus")
    q.add_argument("--size", type=int, default=6)
    q.set_defaults(func=cmd_gen)
    q = gen_sub.add_parser("labelling")
    q.add_argument("complex")
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--seed", type=int, default=0)
    q.set_defaults(func=cmd_gen)

    p = sub.add_parser("cochain", help="cocircuit indicator cochain on the crosspolytope")
    p.add_argument("matroid", help="matroid or matrix JSON file")
    p.add_argument("--check", action="store_true")
    p.add_argument("--complete-negatives", action="store_true")
    p.set_defaults(func=cmd_cochain)

    p = sub.add_parser("fuzz", help="seeded randomized verification campaign")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n-range", default="1..2")
    p.add_argument("--m-range", default="3..6")
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(func=cmd_fuzz)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except fio.InputDataError as exc:
        return _diagnose(exc.to_json_dict())
    except InvalidComplexError as exc:
        return _diagnose(
            {
                "error": "validation",
                "check": "complex",
                "reason": exc.verdict.reason,
                "witness": list(exc.verdict.witness),
            }
        )
    except LabellingInadmissibleError as exc:
        return _diagnose(
            {"error": "labelling-inadmissible", "message": str(exc), "advice": "subdivide and retry"}
        )
    except QuotientNotSimplicialError as exc:
        return _diagnose(
            {"error": "quotient-not-simplicial", "message": str(exc), "advice": "subdivide and retry"}
        )
    except ValueError as exc:
        return _diagnose({"error": "input", "message": str(exc)})


if __name__ == "__main__":
    sys.exit(main())
