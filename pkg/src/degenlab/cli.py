"""Command-line surface.

Subcommands take a scenario file (or ``-`` for stdin) and print JSON by
default.  Exit codes: 0 for success, 1 when a stability verdict is negative
or an oracle disagrees (the verdict is still printed), 2 for input errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .base import canonical_tuple, normal_form
from .configurations import normalize_pair, place, stability_report
from .dual_complex import build_fibre, complex_counts
from .errors import (
    CriterionViolated,
    DegenLabError,
    ParseError,
    RefuseBruteForce,
    TropicalIncompatibility,
    ValidationError,
)
from .limits import associated_pair, flat_limit, unique_stable_subdivision_oracle
from .render import FORMATS, render_fibre
from .scenario import (
    Scenario,
    complex_to_json,
    configuration_to_json,
    dumps,
    limit_report_to_json,
    normal_form_to_json,
    parse_scenario,
    stability_report_to_json,
)
from .verify import run_all
from .weights import (
    admissible_sign_vectors,
    bounded_weight,
    combinatorial_weight,
    constructive_linearization,
    default_scale,
    is_git_stable,
)

__all__ = ["main"]


def _read_scenario(args) -> Scenario:
    if args.scenario == "-":
        text = sys.stdin.read()
    else:
        path = Path(args.scenario)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise ParseError(f"cannot read scenario file {path}: {exc}") from exc
    return parse_scenario(text)


def _emit(args, text: str) -> None:
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _smooth_report(args) -> int:
    _emit(args, dumps({"height": 0, "smooth": True, "note": "no degeneration"}))
    return 0


def _cmd_limit(args) -> int:
    sc = _read_scenario(args)
    if sc.height == 0:
        if args.allow_smooth:
            return _smooth_report(args)
        raise ValidationError("height 0 means no degeneration (use --allow-smooth)")
    if sc.height is None:
        raise ValidationError("limit needs a height")
    points = [(p.valuations, p.multiplicity) for p in sc.points]
    if sc.cuts is not None or sc.tuple_ is not None:
        report = associated_pair(points, sc.height, sc.normal_form())
    else:
        report = flat_limit(points, sc.height)
    payload = limit_report_to_json(report)
    exit_code = 0
    m = report.configuration.m
    if sc.height <= args.max_k and m <= args.max_m:
        try:
            winners = unique_stable_subdivision_oracle(
                points, sc.height, max_height=args.max_k,
                max_multiplicity=args.max_m,
            )
            agreement = winners == [report.fibre.nf]
            payload["oracle"] = {
                "cut_sets": [list(nf.cuts) for nf in winners],
                "agrees": agreement,
            }
            if not agreement:
                exit_code = 1
        except RefuseBruteForce:
            payload["oracle"] = "skipped"
    else:
        payload["oracle"] = "skipped"
    if args.format == "text":
        lines = [
            f"height {sc.height}, cuts {list(report.fibre.nf.cuts)}",
            f"base tuple {list(report.base_tuple.exponents)}",
            f"points placed at "
            f"{[loc.stratum + ':' + str(loc.index) for loc in report.configuration.placements]}",
            f"stable: lw={report.stability.lw_stable} sws={report.stability.sws_stable}",
            f"oracle: {payload['oracle']}",
        ]
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit(args, dumps(payload))
    if args.render:
        sys.stdout.write(
            render_fibre(report.fibre, report.configuration, args.render)
        )
    return exit_code


def _scenario_fibre(sc: Scenario, args):
    if sc.height == 0:
        raise ValidationError("height 0 means no degeneration (use --allow-smooth)")
    return build_fibre(sc.normal_form())


def _cmd_fiber(args) -> int:
    sc = _read_scenario(args)
    if sc.height == 0 and args.allow_smooth:
        return _smooth_report(args)
    fibre = _scenario_fibre(sc, args)
    if args.format == "text":
        v, e, f = complex_counts(fibre)
        kinds = {}
        for vx in fibre.dual_complex.vertices:
            kinds[vx.kind.value] = kinds.get(vx.kind.value, 0) + 1
        lines = [
            f"height {fibre.height}, cuts {list(fibre.cuts)}",
            f"V={v} E={e} F={f} (V-E+F={v - e + f})",
            "vertices: " + ", ".join(f"{k}={n}" for k, n in sorted(kinds.items())),
        ]
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit(args, dumps(complex_to_json(fibre)))
    if args.render:
        sys.stdout.write(render_fibre(fibre, None, args.render))
    return 0


def _cmd_stability(args) -> int:
    sc = _read_scenario(args)
    presentation = sc.presentation()
    base = presentation if presentation is not None else sc.normal_form()
    cfg = place(base, sc.points)
    report = stability_report(cfg)
    payload = {
        "configuration": configuration_to_json(cfg),
        "stability": stability_report_to_json(report),
    }
    if args.format == "text":
        lines = [
            f"admissible: {report.admissible}",
            f"stabilizer rank: {report.stabilizer_rank}",
            f"lw_stable: {report.lw_stable}",
            f"ws_stable: {report.ws_stable}",
            f"sws_stable: {report.sws_stable}",
            f"unoccupied levels: {list(report.unoccupied_levels)}",
        ]
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit(args, dumps(payload))
    if args.render:
        sys.stdout.write(render_fibre(cfg.fibre, cfg, args.render))
    return 0 if report.lw_stable else 1


def _cmd_weights(args) -> int:
    sc = _read_scenario(args)
    presentation = sc.presentation()
    base = presentation if presentation is not None else sc.normal_form()
    cfg = place(base, sc.points)
    m = cfg.m
    scale = args.l or sc.l or default_scale(m)
    if sc.lin is not None:
        lin = sc.lin
        lin_source = "scenario"
    else:
        try:
            lin = constructive_linearization(cfg)
            lin_source = "constructive"
        except CriterionViolated as exc:
            payload = {
                "stabilizable": False,
                "reason": str(exc),
            }
            _emit(args, dumps(payload))
            return 1
    subgroups = [sc.s] if sc.s is not None else list(
        admissible_sign_vectors(cfg.presentation.vanishing_pattern())
    )
    rows = []
    for s in subgroups:
        mu_b, _ = bounded_weight(cfg, s)
        mu_c = combinatorial_weight(cfg, s, lin)
        rows.append(
            {"s": list(s), "bounded": mu_b, "combinatorial": mu_c,
             "total": mu_b + scale * mu_c}
        )
    stable = is_git_stable(cfg, lin, scale)
    payload = {
        "lin": [list(lift) for lift in lin.levels],
        "lin_source": lin_source,
        "l": scale,
        "rows": rows,
        "git_stable": stable,
    }
    if args.format == "text":
        lines = [
            f"lin ({lin_source}): {[tuple(x) for x in lin.levels]}  l={scale}",
            f"{'s':<16} {'bounded':>8} {'combinatorial':>14} {'total':>8}",
        ]
        for row in rows:
            lines.append(
                f"{str(row['s']):<16} {row['bounded']:>8} "
                f"{row['combinatorial']:>14} {row['total']:>8}"
            )
        lines.append(f"git_stable: {stable}")
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit(args, dumps(payload))
    return 0 if stable else 1


def _cmd_normalize(args) -> int:
    sc = _read_scenario(args)
    if sc.entries is not None:
        point = sc.entries
        if point.zero_count >= 1:
            payload = {"kind": "closed", "zero_count": point.zero_count}
        else:
            numeric, symbols = point.unit_product()
            payload = {
                "kind": "closed",
                "product": {"numeric": str(numeric), "symbols": list(symbols)},
            }
        _emit(args, dumps(payload))
        return 0
    presentation = sc.presentation()
    if presentation is None:
        raise ValidationError("normalize needs a tuple or closed-point entries")
    nf = normal_form(presentation)
    payload = {
        "tuple": list(presentation.exponents),
        "normal_form": normal_form_to_json(nf),
        "canonical_tuple": list(canonical_tuple(nf).exponents),
    }
    if sc.points:
        cfg = place(presentation, sc.points)
        payload["configuration"] = configuration_to_json(normalize_pair(cfg))
    _emit(args, dumps(payload))
    return 0


def _cmd_render(args) -> int:
    sc = _read_scenario(args)
    fibre = _scenario_fibre(sc, args)
    cfg = place(fibre, sc.points) if sc.points else None
    _emit(args, render_fibre(fibre, cfg, args.render_format))
    return 0


def _cmd_verify(args) -> int:
    results = run_all(max_k=args.max_k, max_m=args.max_m)
    ok = True
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        sys.stdout.write(f"[{status}] {r.name}: {r.detail}\n")
        ok = ok and r.ok
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="degenlab",
        description="Combinatorics of expanded degenerations of xyz = t",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, scenario=True):
        if scenario:
            p.add_argument("scenario", help="scenario JSON file, or - for stdin")
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--render", choices=FORMATS, default=None,
                       help="also print a diagram in this format")
        p.add_argument("--out", default=None, help="write the report here")
        p.add_argument("--allow-smooth", action="store_true",
                       help="accept height-0 scenarios")
        p.add_argument("--max-k", type=int, default=8,
                       help="height cap for brute-force checks")
        p.add_argument("--max-m", type=int, default=4,
                       help="multiplicity cap for brute-force checks")
        p.add_argument("--l", type=int, default=None,
                       help="scale factor for the stability test")

    add_common(sub.add_parser("limit", help="flat limit of valued points"))
    add_common(sub.add_parser("fiber", help="dual complex of a fibre"))
    add_common(sub.add_parser("stability", help="stability verdicts"))
    add_common(sub.add_parser("weights", help="weight table for subgroups"))
    add_common(sub.add_parser("normalize", help="normal form of a presentation"))

    render_p = sub.add_parser("render", help="diagram of a fibre")
    render_p.add_argument("render_format", choices=FORMATS)
    add_common(render_p)

    verify_p = sub.add_parser("verify", help="run the invariant suites")
    verify_p.add_argument("--max-k", type=int, default=4)
    verify_p.add_argument("--max-m", type=int, default=2)

    return parser


_HANDLERS = {
    "limit": _cmd_limit,
    "fiber": _cmd_fiber,
    "stability": _cmd_stability,
    "weights": _cmd_weights,
    "normalize": _cmd_normalize,
    "render": _cmd_render,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except (ParseError, ValidationError, TropicalIncompatibility) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except DegenLabError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
