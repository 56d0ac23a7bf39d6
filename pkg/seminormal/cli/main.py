"""
Command-line entry point.

    seminormal paper-example [--fixtures DIR]
    seminormal verify {hecke,cactus,interp,csp,all} (--shape 3,3 | --max-size N)
    seminormal emit {u,sigma,t,that,phat,d,polynomial,orbits} [q_hook|maj] --shape 3,3

Exit status: 0 when every asserted claim holds, 1 on a mismatch or failed
claim, 2 on a usage error.
"""

import argparse
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Dict, List, Optional, Sequence, Tuple

from pydantic import ValidationError

from seminormal.cli.config import EMIT_OBJECTS, LOG_LEVELS, OutputFormat, RunConfig
from seminormal.combinat.cactus import (
    CactusWord,
    TableauAction,
    act_on_tableau,
    check_presentation,
    verify_lemma_cyclic,
    verify_rect_order,
)
from seminormal.combinat.csp import (
    CspPolynomial,
    character_check,
    compare_maj_and_hook,
    csp_check,
    csp_polynomial,
    matrix_power_traces,
    promotion_orbits,
)
from seminormal.combinat.tableau import Shape, enumerate_syt, jdt_promotion
from seminormal.errors import FixtureMismatchError
from seminormal.exact.matrix import MatrixQq
from seminormal.rep.hecke import (
    MatrixAction,
    SignConvention,
    build_sigma,
    build_t_q,
    build_u,
    long_cycle_matrix,
    relation_suite,
    resolve_convention,
)
from seminormal.rep.interp import (
    EXAMPLE_SHAPE,
    Normalization,
    hatted_generators,
    interpolating_matrix,
    match_paper_example,
    normalization_matrix,
)
from seminormal.report.core import (
    VERIFY_KINDS,
    RelationResult,
    Report,
    Status,
    demote_failures,
)
from seminormal.report.renderers import ReportRenderer
from seminormal.report.validate import validate_report

logger = logging.getLogger(__name__)

# matrix cactus relations are checked up to this size; the tableau action always
MATRIX_CACTUS_MAX_SIZE = 5


def _entries(results: Sequence[RelationResult]) -> List[Dict[str, Any]]:
    return [r.to_dict() for r in results]


def _status(holds: bool) -> Status:
    return Status.PASS if holds else Status.FAIL


# -- per-shape suites ----------------------------------------------------------


def hecke_section(shape: Shape, convention: SignConvention) -> List[RelationResult]:
    return relation_suite(shape, convention, include_cactus=False)


def cactus_section(shape: Shape, convention: SignConvention) -> List[RelationResult]:
    r = shape.size
    results = [
        RelationResult(
            f"tableau_{result.relation}", result.instance, result.status, result.detail
        )
        for result in check_presentation(TableauAction(shape))
    ]
    promotion = CactusWord.of(r, "p", r - 1)
    results.extend(
        RelationResult(
            "promotion_is_t_word",
            f"jdt promotion = t{r - 1}...t1 on {T}",
            _status(act_on_tableau(promotion, T) == jdt_promotion(T)),
        )
        for T in enumerate_syt(shape)
    )
    results.extend(verify_lemma_cyclic(shape))
    if shape.is_rectangular:
        results.extend(verify_rect_order(shape))
    else:
        power = promotion**r
        results.extend(
            demote_failures(
                RelationResult(
                    "rect_order",
                    f"p{r - 1}^{r} = 1 on {T}",
                    _status(act_on_tableau(power, T) == T),
                )
                for T in enumerate_syt(shape)
            )
        )
    if r <= MATRIX_CACTUS_MAX_SIZE:
        results.extend(
            RelationResult(f"matrix_{result.relation}", result.instance, result.status)
            for result in check_presentation(MatrixAction(build_t_q(shape, convention)))
        )
    return results


def interp_section(
    shape: Shape, convention: SignConvention, normalization: Normalization
) -> Tuple[List[RelationResult], Dict[str, Any]]:
    certificate = interpolating_matrix(shape, convention, normalization)
    results = certificate.results()
    t_q = build_t_q(shape, convention)
    has_orbit = any(not t.is_diagonal() for t in t_q)
    simple_pole = any(
        valuation == -1 for t in t_q for _, _, valuation in t.poles_at_zero()
    )
    results.append(
        RelationResult(
            "unhatted_simple_pole",
            "some t(i) has an entry with a simple pole at q = 0",
            _status(simple_pole) if has_orbit else Status.INFORMATIONAL,
        )
    )
    summary = certificate.to_dict()
    summary.pop("p_hat")
    return results, summary


def csp_section(shape: Shape) -> Tuple[List[RelationResult], Dict[str, Any]]:
    hook = csp_check(shape, CspPolynomial.Q_HOOK)
    maj = csp_check(shape, CspPolynomial.MAJ)
    comparison = compare_maj_and_hook(shape)
    long_cycle = long_cycle_matrix(shape, resolve_convention(shape, SignConvention.AUTO))
    traces = matrix_power_traces(long_cycle.evaluate(1), shape.size)
    characters = character_check(shape, traces)
    claimed = [
        RelationResult("csp_q_hook", f"q-hook CSP for promotion on {shape}", _status(hook.holds)),
        RelationResult(
            "character_check",
            "tr(c^k) = q-hook polynomial at w^k",
            _status(all(c.equal for c in characters)),
            {"traces": traces},
        ),
    ]
    if not shape.is_rectangular:
        claimed = demote_failures(claimed)
    results = claimed + [
        RelationResult(
            "maj_is_shifted_hook",
            f"maj generating function = q^{comparison['shift']} q-hook",
            _status(comparison["maj_is_shifted_hook"]),
        ),
        RelationResult(
            "csp_maj",
            f"maj CSP for promotion on {shape}; disagreeing k: {comparison['disagreeing_k']}",
            Status.INFORMATIONAL,
        ),
    ]
    verdicts = {"q_hook": hook.to_dict(), "maj": maj.to_dict(), "comparison": comparison}
    return results, verdicts


def run_shape(
    kind: str, shape: Shape, convention: SignConvention, normalization: Normalization
) -> Dict[str, Any]:
    """All sections of ``kind`` for one shape, as JSON-ready data."""
    logger.info("verifying %s on %s", kind, shape)
    kinds = [k for k in VERIFY_KINDS if k != "all"] if kind == "all" else [kind]
    section: Dict[str, Any] = {}
    for name in kinds:
        if name == "hecke":
            section["hecke"] = _entries(hecke_section(shape, convention))
        elif name == "cactus":
            section["cactus"] = _entries(cactus_section(shape, convention))
        elif name == "interp":
            results, certificate = interp_section(shape, convention, normalization)
            section["interp"] = _entries(results)
            section["certificate"] = certificate
        elif name == "csp":
            results, verdicts = csp_section(shape)
            section["csp"] = _entries(results)
            section["verdicts"] = verdicts
    return section


def _run_shape_args(args: Tuple[str, Shape, SignConvention, Normalization]) -> Dict[str, Any]:
    return run_shape(*args)


# -- commands ------------------------------------------------------------------


def cmd_verify(config: RunConfig) -> Report:
    shapes = config.shapes()
    jobs = [(config.kind, shape, config.convention, config.normalization) for shape in shapes]
    if config.parallel and len(jobs) > 1:
        with ProcessPoolExecutor() as pool:
            sections = list(pool.map(_run_shape_args, jobs))
    else:
        sections = [_run_shape_args(job) for job in jobs]
    report = Report(
        "verify",
        config.kind,
        metadata={
            "convention": config.convention.value,
            "normalization": config.normalization.value,
        },
    )
    for shape, section in zip(shapes, sections):
        report.add_section(str(shape), section)
    return report


def cmd_emit(config: RunConfig) -> Report:
    shape = Shape.parse(config.shape)
    kind = config.kind
    convention = config.convention
    if kind in ("u", "sigma", "t", "that"):
        builder = {
            "u": build_u,
            "sigma": build_sigma,
            "t": build_t_q,
        }.get(kind)
        if builder is None:
            matrices = hatted_generators(shape, convention, config.normalization)
        else:
            matrices = builder(shape, convention)
        payload: Dict[str, Any] = {
            f"{kind}{i}": m.to_dict() for i, m in enumerate(matrices, start=1)
        }
    elif kind == "phat":
        payload = {"phat": interpolating_matrix(shape, convention, config.normalization).p_hat.to_dict()}
    elif kind == "d":
        payload = {"d": normalization_matrix(shape, config.normalization).to_dict()}
    elif kind == "polynomial":
        payload = {config.polynomial.value: csp_polynomial(shape, config.polynomial).to_dict()}
    else:
        orbits = promotion_orbits(shape)
        payload = {
            "sizes": [len(orbit) for orbit in orbits],
            "orbits": [[T.to_dict() for T in orbit] for orbit in orbits],
        }
    payload["basis"] = [str(T) for T in enumerate_syt(shape)]
    report = Report(
        "emit",
        kind,
        metadata={
            "convention": resolve_convention(shape, convention).value,
            "normalization": config.normalization.value,
        },
    )
    report.add_section(str(shape), payload)
    return report


def cmd_paper_example(config: RunConfig) -> Report:
    report = Report("paper-example", "interp")
    try:
        match = match_paper_example(config.fixtures)
    except FixtureMismatchError as exc:
        logger.error("%s", exc)
        report.add_section(
            str(EXAMPLE_SHAPE),
            {
                "relations": [
                    RelationResult(
                        "example_match",
                        str(exc),
                        Status.FAIL,
                        {"closest": exc.closest, "diff": exc.diff},
                    ).to_dict()
                ]
            },
        )
        return report
    p_hat = match.certificate.p_hat.reindexed(match.order)
    p_hat_inverse = p_hat.inverse()
    matrices = {
        "interpolating": p_hat,
        "interpolating_inverse": p_hat_inverse,
        "rotation": p_hat.evaluate(1),
        "rotation_inverse": p_hat_inverse.evaluate(1),
        "promotion": p_hat.evaluate(0),
        "promotion_inverse": p_hat_inverse.evaluate(0),
    }
    section = match.to_dict()
    section["matrices"] = {
        name: (m if isinstance(m, MatrixQq) else MatrixQq.constant(m)).to_dict()
        for name, m in matrices.items()
    }
    report.add_section(str(EXAMPLE_SHAPE), section)
    return report


COMMANDS = {
    "paper-example": cmd_paper_example,
    "verify": cmd_verify,
    "emit": cmd_emit,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seminormal",
        description="Seminormal cactus matrices, the interpolating matrix and cyclic sieving",
    )
    parser.add_argument("--parallel", action="store_true", help="run shapes in a process pool")
    parser.add_argument("--log-level", default="WARNING", choices=LOG_LEVELS)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--output", default="json", choices=[f.value for f in OutputFormat])
        p.add_argument("--out", dest="out_path", default=None, help="write to this file")
        p.add_argument(
            "--convention", default="auto", choices=[c.value for c in SignConvention]
        )
        p.add_argument(
            "--normalization", default="inversion", choices=[n.value for n in Normalization]
        )

    example = sub.add_parser("paper-example", help="reproduce the worked example for shape 3,3")
    example.add_argument("--fixtures", default=None, help="directory of fixture files")
    common(example)

    verify = sub.add_parser("verify", help="run relation suites over shapes")
    verify.add_argument("kind", choices=VERIFY_KINDS)
    scope = verify.add_mutually_exclusive_group(required=True)
    scope.add_argument("--shape")
    scope.add_argument("--max-size", type=int)
    common(verify)

    emit = sub.add_parser("emit", help="write matrices, polynomials or orbits")
    emit.add_argument("kind", choices=EMIT_OBJECTS)
    emit.add_argument(
        "polynomial", nargs="?", default="q_hook", choices=[p.value for p in CspPolynomial]
    )
    emit.add_argument("--shape", required=True)
    common(emit)
    return parser


def parse_config(argv: Optional[Sequence[str]] = None) -> RunConfig:
    """
    Parse arguments into a validated ``RunConfig``.

    Raises:
        SystemExit: With status 2 on a usage error
        ValidationError: If the arguments are inconsistent
    """
    args = vars(build_parser().parse_args(argv))
    return RunConfig(**{k: v for k, v in args.items() if v is not None})


def _write(text: str, config: RunConfig) -> None:
    if config.out_path is None:
        sys.stdout.write(text)
    else:
        config.out_path.write_text(text, encoding="utf-8")


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        config = parse_config(argv)
    except ValidationError as exc:
        print(f"seminormal: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:
        return int(exc.code or 0)

    logging.basicConfig(
        level=config.log_level,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        report = COMMANDS[config.command](config)
    except ValueError as exc:
        logger.error("%s", exc)
        return 2
    data = report.to_dict()
    try:
        validate_report(data)
    except ValueError as exc:
        logger.error("%s", exc)
        return 1
    text = ReportRenderer.for_format(config.output.value).render(data)
    try:
        _write(text, config)
    except OSError as exc:
        logger.error("cannot write %s: %s", config.out_path, exc)
        return 2
    if not report.ok:
        logger.warning("%d failing entries", report.failures)
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
