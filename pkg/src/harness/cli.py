# src/harness/cli.py
# Command-line surface: compute, verify, census and export.
#
# Each subcommand is a function registered in COMMANDS that returns the text to
# emit and an exit code. main() owns the cross-cutting parts: settings overrides,
# logging level, run ids, error-to-exit-code mapping and the metrics dump.

import argparse
import json
import sys
from typing import Callable, Dict, List, Optional, Tuple

from config import settings
from errors import GrothError, UsageError
from grothendieck import groth, symp_groth
from involutions import FpfInvolution, Involution
from logger import get_logger, setup_logging
from metrics import COMPUTE_REQUESTS_TOTAL, write_metrics
from permgroup import Permutation, parse_partition
from tracking import run_context
from harness import census, export
from harness.sweeps import SWEEPS, run_sweep
from ortho import gc_values, gco, igrass_expansion, invgroth, ivex_formula, ortho_groth, shiftable_data

logger = get_logger(__name__)

COMPUTE_TARGETS = ("groth", "invgroth", "ortho", "symp", "gco", "ivex", "igrass")
FORMATS = ("text", "json", "dot")

CommandResult = Tuple[str, int]


# ---- input parsing ----------------------------------------------------


def _require(args: argparse.Namespace, name: str, target: str):
    value = getattr(args, name.replace("-", "_"), None)
    if value is None:
        raise UsageError(f"{target} needs --{name}")
    return value


def _involution(args: argparse.Namespace, target: str) -> Involution:
    return Involution.parse(_require(args, "z", target))


def _dumps(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _text_only(args: argparse.Namespace) -> None:
    if args.format == "dot":
        raise UsageError("--format dot is only available for export binv_plus_dot")


# ---- compute ----------------------------------------------------------


def _compute_payload(args: argparse.Namespace) -> Tuple[str, dict]:
    """
    Returns (text, json payload) for one compute target.
    """
    target = args.target
    if target == "groth":
        w = Permutation.parse(_require(args, "w", target))
        poly = groth(w)
        return poly.render(), {"w": w.to_json(), "poly": poly.to_json()}

    if target == "symp":
        z = FpfInvolution.parse(_require(args, "z", target))
        poly, expansion = symp_groth(z)
        text = f"{poly.render()}\n{expansion.render()}"
        return text, {"z": z.to_json(), "poly": poly.to_json(), "expansion": expansion.to_json()}

    if target == "igrass":
        mu = parse_partition(_require(args, "mu", target))
        n = _require(args, "n", target)
        terms = igrass_expansion(mu, n)
        lines = [
            f"{'+' if t.sign > 0 else '-'} ({t.varpi.render()}) b^{t.beta_pow} G^[<{','.join(map(str, t.lam))}|{n}>]"
            for t in terms
        ]
        return "\n".join(lines), {"mu": list(mu), "n": n, "terms": [t.to_json() for t in terms]}

    z = _involution(args, target)
    if target == "invgroth":
        poly = invgroth(z)
        return poly.render(), {"z": z.to_json(), "poly": poly.to_json()}
    if target == "ortho":
        poly = ortho_groth(z)
        return poly.render(), {"z": z.to_json(), "poly": poly.to_json()}
    if target == "gco":
        expansion = gco(z)
        values = gc_values(z)
        ordered = sorted(values, key=lambda w: w.sort_key())
        lines = [expansion.render()] + [f"{w.render()}: {values[w]}" for w in ordered]
        payload = {
            "z": z.to_json(),
            "expansion": expansion.to_json(),
            "gc": [{"w": w.to_json(), "value": values[w]} for w in ordered],
        }
        return "\n".join(lines), payload
    if target == "ivex":
        data = shiftable_data(z)
        lines = [
            f"S={{{','.join(map(str, s.members))}}} sigma={s.sigma.render()} "
            f"theta={s.theta} varpi={s.varpi.render()}"
            for s in data.sets
        ]
        lines.append(f"sum: {ivex_formula(z).render()}")
        return "\n".join(lines), data.to_json()
    raise UsageError(f"unknown compute target '{target}', expected one of {COMPUTE_TARGETS}")


def cmd_compute(args: argparse.Namespace) -> CommandResult:
    _text_only(args)
    COMPUTE_REQUESTS_TOTAL.labels(target=args.target).inc()
    text, payload = _compute_payload(args)
    if args.format == "json":
        return _dumps(payload), 0
    return text + "\n", 0


# ---- verify -----------------------------------------------------------


def cmd_verify(args: argparse.Namespace) -> CommandResult:
    _text_only(args)
    theorem_ids = sorted(SWEEPS) if args.theorem == "all" else [args.theorem]
    reports = [run_sweep(t, n_max=args.n_max, jobs=args.jobs) for t in theorem_ids]
    code = 0 if all(r.passed for r in reports) else 1
    if args.format == "json":
        # wall time is left out so identical runs serialize identically
        payload = [r.to_json(include_time=False) for r in reports]
        return _dumps(payload if len(payload) > 1 else payload[0]), code
    return "\n".join(r.render() for r in reports) + "\n", code


# ---- census -----------------------------------------------------------


def cmd_census(args: argparse.Namespace) -> CommandResult:
    _text_only(args)
    n = args.n if args.n is not None else args.n_max
    if n is None:
        raise UsageError("census needs --n")
    table = census.run_census(args.kind, n, jobs=args.jobs)
    if args.format == "json":
        return _dumps(table.to_json()), 0
    return table.render() + "\n", 0


# ---- export -----------------------------------------------------------


def cmd_export(args: argparse.Namespace) -> CommandResult:
    COMPUTE_REQUESTS_TOTAL.labels(target=args.kind).inc()
    z = Involution.parse(args.z) if args.z is not None else None
    poly = None
    if args.kind == "poly_json":
        if args.w is not None:
            poly = groth(Permutation.parse(args.w))
        elif z is not None:
            poly = ortho_groth(z)
    return export.export_text(args.kind, z=z, poly=poly), 0


COMMANDS: Dict[str, Callable[[argparse.Namespace], CommandResult]] = {
    "compute": cmd_compute,
    "verify": cmd_verify,
    "census": cmd_census,
    "export": cmd_export,
}


# ---- parser -----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=None,
                        help="output format (default: GROTH_OUTPUT_FORMAT or text)")
    common.add_argument("--jobs", type=int, default=None, help="worker processes for sweeps and censuses")
    common.add_argument("--out", default=None, help="write output to this file instead of stdout")
    common.add_argument("--long-run", action="store_true", help="allow the n >= 7 census rows")
    common.add_argument("--metrics-out", default=None, help="write Prometheus metrics to this file")
    common.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING, ERROR")

    parser = argparse.ArgumentParser(
        prog="groth",
        description="Orthogonal and symplectic Grothendieck polynomials: compute, verify, census, export",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", parents=[common], help="compute one polynomial or expansion")
    compute.add_argument("target", choices=COMPUTE_TARGETS)
    compute.add_argument("--z", help='involution, e.g. "(1,3)(2,4)" or "4321"')
    compute.add_argument("--w", help='permutation, e.g. "132"')
    compute.add_argument("--mu", help='strict partition, e.g. "3,2"')
    compute.add_argument("--n", type=int)

    verify = sub.add_parser("verify", parents=[common], help="run a verification sweep")
    verify.add_argument("theorem", choices=sorted(SWEEPS) + ["all"])
    verify.add_argument("--n-max", type=int, default=None)

    table = sub.add_parser("census", parents=[common], help="print a census table")
    table.add_argument("kind", choices=census.KINDS)
    table.add_argument("--n", type=int)
    table.add_argument("--n-max", type=int)

    dump = sub.add_parser("export", parents=[common], help="export a digraph or polynomial")
    dump.add_argument("kind", choices=export.KINDS)
    dump.add_argument("--z")
    dump.add_argument("--w")

    return parser


def _apply_overrides(args: argparse.Namespace) -> None:
    if args.log_level:
        settings.app.log_level = args.log_level.upper()
        setup_logging(settings.app.log_level)
    if args.long_run:
        settings.sweep.long_run = True
    if args.jobs is not None:
        if args.jobs < 1:
            raise UsageError(f"--jobs must be positive, got {args.jobs}")
        settings.sweep.jobs = args.jobs
    if args.format is None:
        args.format = settings.app.output_format


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        export.write_text(out, text)
    else:
        sys.stdout.write(text)


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run one CLI invocation and return its exit code:
    0 ok, 1 verification failure or precondition, 2 usage, 3 invariant breach.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    with run_context(args.command) as run:
        try:
            _apply_overrides(args)
            logger.debug(f"Run {run.run_id}: {args.command} {vars(args)}")
            text, code = COMMANDS[args.command](args)
            _emit(text, args.out)
        except GrothError as e:
            logger.error(f"{type(e).__name__}: {e}")
            print(f"error: {e}", file=sys.stderr)
            code = e.exit_code
        except OSError as e:
            logger.error(f"I/O error: {e}")
            print(f"error: {e}", file=sys.stderr)
            code = 1
        finally:
            if args.metrics_out:
                write_metrics(args.metrics_out)
                logger.info(f"Metrics written to {args.metrics_out}")
        logger.debug(f"Run {run.run_id} ({run.label}) finished in {run.elapsed():.2f}s")
    return code
