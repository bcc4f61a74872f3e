"""
padyn - Command Line Interface
One subcommand per analysis; every run prints a single JSON object on stdout and sends
logging to stderr
"""

import argparse
import sys
from pathlib import Path
from typing import Any, Callable, Dict, Optional, Sequence, Tuple

from ..analyzers import (ConditionReport, GapReport, backward_orbit_height_profile,
                         check_theorem_conditions, lattes_map, narkiewicz_gap_search)
from ..config import config, load_environment
from ..core.arith import require_prime
from ..core.dynamics import (backward_orbit, exact_period_points, is_preperiodic_rational,
                             multiplier, period_polynomial, rational_periodic_points)
from ..core.errors import InputError, PadynError, ResourceLimitError
from ..core.heights import canonical_height, height_bound_constant, weil_height
from ..core.padic import count_qp_roots, is_totally_padic, newton_polygon, splits_completely
from ..core.poly import discriminant, squarefree_part
from ..core.ratmap import bad_primes, good_reduction
from ..utils.logger import Logger, setup_logging
from .output import (EXIT_INPUT_ERROR, EXIT_RESOURCE_LIMIT, CommandResult,
                     HeightRenderer, render_float, render_map, render_point, render_points,
                     render_polynomial, render_rational, render_valuation)
from .parser import parse_int_list, parse_map, parse_point, parse_polynomial, parse_rational


class UsageError(InputError):
    """Malformed command line"""


class PadynArgumentParser(argparse.ArgumentParser):
    """argparse that raises instead of printing usage and exiting with status 2"""

    def error(self, message: str):
        raise UsageError(message)


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid number: {text!r}") from None
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return value


def build_parser() -> PadynArgumentParser:
    parser = PadynArgumentParser(
        prog="padyn",
        description="Arithmetic dynamics of rational maps over Q",
    )
    parser.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
                        help="override LOG_LEVEL")
    parser.add_argument("--log-base", choices=["e", "2", "10"], default="e",
                        help="logarithm base for reported heights")
    parser.add_argument("--show-config", action="store_true",
                        help="echo the active settings under input.config")
    sub = parser.add_subparsers(dest="command", parser_class=PadynArgumentParser)
    sub.required = True

    p = sub.add_parser("reduce", help="reduction type at a list of primes")
    p.add_argument("--map", required=True)
    p.add_argument("--primes", required=True, type=parse_int_list)

    p = sub.add_parser("periodic", help="points of exact period N")
    p.add_argument("--map", required=True)
    p.add_argument("--period", required=True, type=int)
    p.add_argument("--prime", type=int)

    p = sub.add_parser("canonical-height", help="certified canonical height of a rational point")
    p.add_argument("--map", required=True)
    p.add_argument("--point", required=True)
    p.add_argument("--eps", required=True, type=_positive_float)

    p = sub.add_parser("backward", help="backward orbit levels and their splitting")
    p.add_argument("--map", required=True)
    p.add_argument("--start", required=True)
    p.add_argument("--levels", required=True, type=int)
    p.add_argument("--primes", required=True, type=parse_int_list)

    p = sub.add_parser("totally-padic", help="whether all roots of a polynomial lie in Q_p")
    p.add_argument("--minpoly", required=True)
    p.add_argument("--prime", required=True, type=int)

    p = sub.add_parser("check", help="certificates for the Bogomolov-type conditions")
    p.add_argument("--map", required=True)
    p.add_argument("--prime", required=True, type=int)
    p.add_argument("--max-period", required=True, type=int)
    p.add_argument("--preperiodic-depth", type=int, default=0)

    p = sub.add_parser("gap", help="height-gap search over totally p-adic candidates")
    p.add_argument("--map", required=True)
    p.add_argument("--prime", required=True, type=int)
    p.add_argument("--degree", required=True, type=int)
    p.add_argument("--coeff-bound", required=True, type=int)
    p.add_argument("--eps", required=True, type=_positive_float)
    p.add_argument("--csv", type=Path)

    p = sub.add_parser("lattes", help="duplication Lattes map of y^2 = x^3 + ax + b")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)

    p = sub.add_parser("profile", help="height profile of a backward orbit")
    p.add_argument("--map", required=True)
    p.add_argument("--start", required=True)
    p.add_argument("--depth", required=True, type=int)

    p = sub.add_parser("bad-primes", help="primes of bad reduction up to a bound")
    p.add_argument("--map", required=True)
    p.add_argument("--bound", required=True, type=int)

    return parser


class PadynCLI:
    """
    Command-line interface for padyn
    Parses arguments, dispatches to one handler per subcommand and maps failures to exit codes
    """

    def __init__(self):
        self.logger = Logger(__name__)
        self.parser = build_parser()
        self.heights = HeightRenderer("e")
        self.handlers: Dict[str, Callable[[argparse.Namespace, CommandResult], None]] = {
            "reduce": self.cmd_reduce,
            "periodic": self.cmd_periodic,
            "canonical-height": self.cmd_canonical_height,
            "backward": self.cmd_backward,
            "totally-padic": self.cmd_totally_padic,
            "check": self.cmd_check,
            "gap": self.cmd_gap,
            "lattes": self.cmd_lattes,
            "profile": self.cmd_profile,
            "bad-primes": self.cmd_bad_primes,
        }

    def initialize(self, log_level: Optional[str] = None):
        """Load .env, refresh settings and set up logging"""
        load_environment()
        try:
            config.load_settings()
        except ValueError as e:
            raise InputError(f"invalid configuration value: {e}") from None
        if log_level:
            config.LOG_LEVEL = log_level
        problems = config.validate_config()
        if problems:
            raise InputError("invalid configuration: " + "; ".join(problems))
        setup_logging(config.LOG_LEVEL, config.LOG_FILE)
        self.logger = Logger(__name__)

    # -- dispatch -------------------------------------------------------------

    def dispatch(self, argv: Sequence[str]) -> CommandResult:
        result = CommandResult(command=self._guess_command(argv))
        try:
            args = self.parser.parse_args(list(argv))
            result.command = args.command
            self.initialize(args.log_level)
            self.heights = HeightRenderer(args.log_base)
            result.input = self._echo(args)
            self.handlers[args.command](args, result)
        except InputError as e:
            self._fail(result, e, EXIT_INPUT_ERROR)
        except PadynError as e:
            # resource limits and convergence failures
            self._fail(result, e, EXIT_RESOURCE_LIMIT)
        for message in result.diagnostics:
            self.logger.warning(message)
        return result

    def _guess_command(self, argv: Sequence[str]) -> Optional[str]:
        return next((a for a in argv if a in self.handlers), None)

    def _echo(self, args: argparse.Namespace) -> Dict[str, Any]:
        echo = {}
        for key, value in vars(args).items():
            if key in ("command", "log_level", "show_config"):
                continue
            echo[key] = str(value) if isinstance(value, Path) else value
        if args.show_config:
            echo["config"] = config.as_dict()
        return echo

    def _fail(self, result: CommandResult, error: PadynError, exit_code: int):
        result.exit_code = exit_code
        result.result = None
        result.error = {"type": type(error).__name__, "message": str(error)}
        if isinstance(error, ResourceLimitError):
            result.error.update({
                "attempted": error.attempted,
                "limit": error.limit,
                "minimal_epsilon": None if error.minimal_epsilon is None
                else render_float(error.minimal_epsilon),
                "last_completed": error.last_completed,
            })
        elif getattr(error, "offset", None) is not None:
            result.error["offset"] = error.offset
        result.diagnostics.append(str(error))

    # -- handlers -------------------------------------------------------------

    def cmd_reduce(self, args, result: CommandResult):
        f = parse_map(args.map)
        reduction, valuations = {}, {}
        for p in args.primes:
            report = good_reduction(f, p)
            reduction[str(p)] = "good" if report.good else "bad"
            valuations[str(p)] = render_valuation(report.resultant_valuation)
        result.result = {
            "map": render_map(f),
            "resultant": str(f.resultant),
            "reduction": reduction,
            "resultant_valuations": valuations,
        }

    def cmd_periodic(self, args, result: CommandResult):
        f = parse_map(args.map)
        n = args.period
        if n < 1:
            raise InputError("--period must be at least 1")
        phi = exact_period_points(f, n)
        points = rational_periodic_points(f, n)
        payload = {
            "map": render_map(f),
            "period": n,
            "period_polynomial": render_polynomial(period_polynomial(f, n)),
            "exact_period_polynomial": render_polynomial(phi),
            "rational_points": render_points(points),
        }
        if args.prime is not None:
            p = require_prime(args.prime)
            payload["prime"] = p
            payload["splits"] = phi.degree <= 0 or splits_completely(phi, p)
            multipliers = []
            for alpha in points:
                try:
                    report = multiplier(f, alpha, n, p)
                except InputError as e:
                    result.diagnostics.append(f"multiplier skipped at {render_rational(alpha)}: {e}")
                    continue
                multipliers.append({
                    "point": render_rational(report.point),
                    "multiplier": render_rational(report.multiplier),
                    "classification": report.classification.value,
                })
            payload["multipliers"] = multipliers
        result.result = payload

    def cmd_canonical_height(self, args, result: CommandResult):
        f = parse_map(args.map)
        point = parse_point(args.point)
        estimate = canonical_height(f, point, args.eps)
        result.result = {
            "map": render_map(f),
            "point": render_point(point),
            "height": self.heights(estimate),
            "weil_height": self.heights(weil_height(point)),
            "height_constant": self.heights.scalar(height_bound_constant(f).C),
            "log_base": self.heights.base_name,
        }

    def cmd_backward(self, args, result: CommandResult):
        f = parse_map(args.map)
        start = parse_rational(args.start)
        orbit = backward_orbit(f, start, args.levels, args.primes)
        levels = []
        for k, (level, splits) in enumerate(zip(orbit.levels, orbit.splits), start=1):
            levels.append({
                "level": k,
                "polynomial": render_polynomial(level),
                "expression": str(level),
                "degree": level.degree,
                "splits": {str(p): s for p, s in splits.items()},
            })
        result.result = {"map": render_map(f), "start": render_rational(start), "levels": levels}

    def cmd_totally_padic(self, args, result: CommandResult):
        m = parse_polynomial(args.minpoly)
        p = require_prime(args.prime)
        answer = is_totally_padic(m, p)
        counts = count_qp_roots(squarefree_part(m), p)
        polygon = newton_polygon(m, p)
        result.result = {
            "minpoly": render_polynomial(m),
            "prime": p,
            "totally_padic": answer,
            "roots_in_Zp": counts.roots_in_Zp,
            "roots_outside_Zp": counts.roots_outside_Zp,
            "discriminant": str(discriminant(m)),
            "newton_polygon": [{"slope": render_rational(s), "length": n}
                               for s, n in polygon.segments],
        }

    def cmd_check(self, args, result: CommandResult):
        f = parse_map(args.map)
        report = check_theorem_conditions(f, args.prime, args.max_period,
                                          preperiodic_depth=args.preperiodic_depth)
        result.result = self.render_condition_report(report)
        result.diagnostics.extend(report.diagnostics)

    def cmd_gap(self, args, result: CommandResult):
        f = parse_map(args.map)
        report = narkiewicz_gap_search(f, args.prime, args.degree, args.coeff_bound, args.eps)
        if args.csv is not None:
            report.to_csv(args.csv)
        result.result = self.render_gap_report(report)
        result.diagnostics.extend(report.diagnostics)

    def cmd_lattes(self, args, result: CommandResult):
        a, b = parse_rational(args.a), parse_rational(args.b)
        f = lattes_map(a, b)
        result.result = {"a": render_rational(a), "b": render_rational(b), "map": render_map(f)}

    def cmd_profile(self, args, result: CommandResult):
        f = parse_map(args.map)
        start = parse_rational(args.start)
        rows = backward_orbit_height_profile(f, start, args.depth)
        result.result = {
            "map": render_map(f),
            "start": render_rational(start),
            "preperiodic": is_preperiodic_rational(f, start),
            "tolerance": self.heights.scalar(height_bound_constant(f).canonical_gap + 1e-6),
            "rows": [{
                "level": row.level,
                "degree": row.polynomial.degree,
                "measured": self.heights(row.measured),
                "expected": self.heights.scalar(row.expected),
            } for row in rows],
        }

    def cmd_bad_primes(self, args, result: CommandResult):
        f = parse_map(args.map)
        if args.bound < 2:
            raise InputError("--bound must be at least 2")
        result.result = {"map": render_map(f), "bound": args.bound,
                         "bad_primes": bad_primes(f, args.bound)}

    # -- report rendering -----------------------------------------------------

    def render_condition_report(self, report: ConditionReport) -> Dict[str, Any]:
        nonsplit = None
        if report.nonsplit_witness is not None:
            n, phi = report.nonsplit_witness
            nonsplit = {"period": n, "polynomial": render_polynomial(phi), "expression": str(phi)}
        preperiodic = None
        if report.preperiodic_witness is not None:
            alpha, k, level = report.preperiodic_witness
            preperiodic = {"point": render_rational(alpha), "level": k,
                           "polynomial": render_polynomial(level), "expression": str(level)}
        return {
            "map": render_map(report.map),
            "prime": report.prime,
            "max_period": report.max_period,
            "verdict": report.verdict.value,
            "good_reduction": report.good_reduction,
            "resultant_valuation": render_valuation(report.resultant_valuation),
            "nonsplit_witness": nonsplit,
            "preperiodic_witness": preperiodic,
            "multiplier_census": [{
                "point": render_rational(r.point),
                "period": r.period,
                "multiplier": render_rational(r.multiplier),
                "classification": r.classification.value,
            } for r in report.multiplier_census],
            "repelling_points": [render_rational(r.point) for r in report.repelling_points],
            "routes": [{"route": r.route, "certified": r.certified, "verdict": r.verdict.value}
                       for r in report.routes],
        }

    def render_gap_report(self, report: GapReport) -> Dict[str, Any]:
        minimum = None
        if report.min_positive_height is not None:
            estimate, witness = report.min_positive_height
            minimum = {"height": self.heights(estimate), "witness": str(witness),
                       "witness_polynomial": render_polynomial(witness)}
        return {
            "map": render_map(report.map),
            "prime": report.prime,
            "degree_bound": report.degree_bound,
            "coefficient_bound": report.coefficient_bound,
            "epsilon": render_float(report.epsilon),
            "candidates_examined": report.candidates_examined,
            "totally_padic_candidates": sum(1 for c in report.candidates if c.splits),
            "preperiodic_found": [str(m) for m in report.preperiodic_found],
            "min_positive_height": minimum,
        }


def run(argv: Optional[Sequence[str]] = None) -> Tuple[CommandResult, int]:
    cli = PadynCLI()
    result = cli.dispatch(sys.argv[1:] if argv is None else argv)
    return result, result.exit_code


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Console entry point"""
    result, code = run(argv)
    sys.stdout.write(result.to_json() + "\n")
    sys.stdout.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
