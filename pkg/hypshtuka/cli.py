"""Command line front end."""
#   Copyright 2026 The hyp-shtuka Authors
#
#   Licensed under the Apache License, Version 2.0 (the "License");
#   you may not use this file except in compliance with the License.
#   You may obtain a copy of the License at
#
#       http://www.apache.org/licenses/LICENSE-2.0
#
#   Unless required by applicable law or agreed to in writing, software
#   distributed under the License is distributed on an "AS IS" BASIS,
#   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#   See the License for the specific language governing permissions and
#   limitations under the License.
import argparse
import json
import sys
from typing import Any
from typing import Dict
from typing import List
from typing import Optional

from hypshtuka import logger_factory
from hypshtuka.conductor import equivalent_mod_D
from hypshtuka.divisor import Divisor
from hypshtuka.errors import ComputationError
from hypshtuka.errors import InputError
from hypshtuka.fields import DEFAULT_MAX_ENUM
from hypshtuka.fields import FieldDesc
from hypshtuka.fields import KField
from hypshtuka.fields import k_field
from hypshtuka.hyp import hyp
from hypshtuka.model.check_result import CheckResult
from hypshtuka.model.hyp_method import HypMethod
from hypshtuka.model.output_format import OutputFormat
from hypshtuka.model.symbol_method import SymbolMethod
from hypshtuka.moore import moore_det
from hypshtuka.moore import moore_product
from hypshtuka.parser import format_value
from hypshtuka.parser import parse_divisor
from hypshtuka.parser import parse_element
from hypshtuka.parser import parse_field_spec
from hypshtuka.parser import parse_kelem
from hypshtuka.parser import parse_principal_part
from hypshtuka.parser import parse_ratfunc
from hypshtuka.report_emitter import make_emitter
from hypshtuka.rr import Differential
from hypshtuka.rr import omega_basis
from hypshtuka.rr import residue
from hypshtuka.rr import rr_basis
from hypshtuka.scenario import run_source
from hypshtuka.shtuka import cd_symbol
from hypshtuka.shtuka import shtuka_from_E0_case1
from hypshtuka.shtuka import shtuka_from_E0_case2
from hypshtuka.shtuka import tau_identity

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2

logger = logger_factory.logger_factory.get_logger(__name__)


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subcommand per operation."""
    parser = argparse.ArgumentParser(
        prog="hypshtuka",
        description="Exact hypergeometric ratios and shtuka symbols "
        "on the projective line over a finite field.",
    )
    parser.add_argument(
        "--max-enum",
        type=int,
        default=DEFAULT_MAX_ENUM,
        help=f"Cap on enumerated combinations (default: {DEFAULT_MAX_ENUM})",
    )
    parser.add_argument(
        "--log-level",
        choices=sorted(logger_factory.LEVELS),
        default="warning",
        help="Logging level (default: warning)",
    )
    parser.add_argument("--log-file", help="Also write logs to this file")
    parser.add_argument(
        "--format",
        choices=[f.value for f in OutputFormat],
        default=OutputFormat.TEXT.value,
        help="Output format (default: text)",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    command = commands.add_parser("hyp", help="Hypergeometric ratio")
    _field_argument(command)
    command.add_argument("--conductor", required=True)
    command.add_argument("--alpha", required=True)
    command.add_argument("--beta", required=True)
    command.add_argument("--E", dest="E", required=True)
    command.add_argument(
        "--method",
        choices=[m.value for m in HypMethod],
        default=HypMethod.ENUMERATE.value,
    )
    command.set_defaults(handler=cmd_hyp)

    command = commands.add_parser("moore", help="Moore determinant")
    _field_argument(command)
    command.add_argument(
        "--elements", required=True, help='Comma separated, e.g. "t^2,t,1"'
    )
    command.add_argument(
        "--scalars", type=int, help="Order of the scalar field"
    )
    command.add_argument(
        "--product",
        action="store_true",
        help="Also compute the product side of the Moore identity",
    )
    command.set_defaults(handler=cmd_moore)

    command = commands.add_parser("rr-basis", help="Riemann-Roch basis")
    _field_argument(command)
    command.add_argument("--E", dest="E", required=True)
    command.add_argument("--xi", default="tau")
    command.add_argument(
        "--differentials",
        action="store_true",
        help="Basis of H^0(Omega(-E)) instead of H^0(O(E))",
    )
    command.set_defaults(handler=cmd_rr_basis)

    command = commands.add_parser("residue", help="Residue of f*dt")
    _field_argument(command)
    command.add_argument("--omega", required=True, help="dt-coefficient")
    command.add_argument("--point", required=True, help='e.g. "inf", "0"')
    command.add_argument(
        "--no-trace",
        action="store_true",
        help="Residue class at a closed point instead of its trace",
    )
    command.set_defaults(handler=cmd_residue)

    command = commands.add_parser(
        "classgroup", help="Equivalence modulo a conductor"
    )
    _field_argument(command)
    command.add_argument("--conductor", required=True)
    command.add_argument("--e1", required=True)
    command.add_argument("--e2", required=True)
    command.add_argument("--xi", default="tau")
    command.set_defaults(handler=cmd_classgroup)

    command = commands.add_parser("symbol", help="Catalan-Drinfeld symbol")
    _field_argument(command)
    command.add_argument("--conductor", required=True)
    command.add_argument("--xi", default="tau")
    command.add_argument("--case", type=int, choices=(1, 2), required=True)
    command.add_argument("--N", dest="N", type=int, required=True)
    command.add_argument("--E0", dest="E0", required=True)
    command.add_argument("--alpha", required=True)
    command.add_argument("--beta", required=True)
    command.add_argument(
        "--method",
        choices=[m.value for m in SymbolMethod],
        default=SymbolMethod.SOLVE.value,
    )
    command.add_argument(
        "--all-methods",
        action="store_true",
        help="Compute with every method and report agreement",
    )
    command.set_defaults(handler=cmd_symbol)

    command = commands.add_parser("verify", help="Run a scenario")
    command.add_argument(
        "scenario", help="Scenario file, built-in suite name or 'all'"
    )
    command.add_argument("--seed", type=int, default=0)
    command.set_defaults(handler=cmd_verify)

    command = commands.add_parser(
        "tau-identity", help="Twisting identity at t = tau^(q-1)"
    )
    _field_argument(command)
    command.add_argument("--N", dest="N", type=int, required=True)
    command.add_argument("--c", dest="c", default="1")
    command.set_defaults(handler=cmd_tau_identity)
    return parser


def _field_argument(command: argparse.ArgumentParser) -> None:
    command.add_argument(
        "--q",
        dest="q",
        required=True,
        help="Field, e.g. 3, 2^2 or 2^2,modulus=u^2+u+1",
    )


def _format(args: argparse.Namespace) -> OutputFormat:
    return OutputFormat(args.format)


def _write(args: argparse.Namespace, payload: Dict[str, Any]) -> None:
    """Print a result as text lines or one JSON object."""
    if _format(args) == OutputFormat.JSON_LINES:
        print(json.dumps(payload, separators=(",", ":")))
        return
    for value in payload.values():
        if isinstance(value, list):
            for item in value:
                print(item)
        else:
            print(value)


def _generic_field(field: FieldDesc) -> KField:
    return k_field(field, field)


def _base_or_generic(E: Divisor, field: FieldDesc, K: KField) -> Any:
    return field if E.is_base_rational() else K


def cmd_hyp(args: argparse.Namespace) -> int:
    field = parse_field_spec(args.q)
    D = parse_divisor(args.conductor, field)
    alpha = parse_principal_part(args.alpha, D, field)
    beta = parse_principal_part(args.beta, D, field)
    E = parse_divisor(args.E, field)
    value = hyp(D, alpha, beta, E, HypMethod(args.method), args.max_enum)
    _write(args, {"hyp": value.format()})
    return EXIT_OK


def cmd_moore(args: argparse.Namespace) -> int:
    field = parse_field_spec(args.q)
    values = [parse_ratfunc(text, field) for text in args.elements.split(",")]
    if all(f.is_constant() for f in values):
        xs: List[Any] = [f.num.coefficient(0) for f in values]
    elif all(f.is_polynomial() for f in values):
        xs = [f.num for f in values]
    else:
        xs = values
    payload = {"moore": format_value(moore_det(xs, args.scalars))}
    if args.product:
        product = moore_product(xs, args.scalars, max_enum=args.max_enum)
        payload["product"] = format_value(product)
    _write(args, payload)
    return EXIT_OK


def cmd_rr_basis(args: argparse.Namespace) -> int:
    field = parse_field_spec(args.q)
    K = _generic_field(field)
    xi = parse_kelem(args.xi, K)
    E = parse_divisor(args.E, K, xi)
    target = _base_or_generic(E, field, K)
    E = E.over(target)
    if args.differentials:
        basis = [omega.format() for omega in omega_basis(E, target)]
    else:
        basis = [f.format() for f in rr_basis(E, target)]
    _write(args, {"basis": basis})
    return EXIT_OK


def cmd_residue(args: argparse.Namespace) -> int:
    field = parse_field_spec(args.q)
    omega = Differential(parse_ratfunc(args.omega, field))
    points = parse_divisor(f"[{args.point}]", field).support
    value = residue(omega, points[0], trace=not args.no_trace)
    _write(args, {"residue": format_value(value)})
    return EXIT_OK


def cmd_classgroup(args: argparse.Namespace) -> int:
    field = parse_field_spec(args.q)
    K = _generic_field(field)
    xi = parse_kelem(args.xi, K)
    D = parse_divisor(args.conductor, field)
    E1 = parse_divisor(args.e1, K, xi)
    E2 = parse_divisor(args.e2, K, xi)
    target = field
    if not (E1.is_base_rational() and E2.is_base_rational()):
        target = K
    witness = equivalent_mod_D(E1.over(target), E2.over(target), D, target)
    text = "not equivalent" if witness is None else witness.format()
    _write(args, {"witness": text})
    return EXIT_OK


def cmd_symbol(args: argparse.Namespace) -> int:
    field = parse_field_spec(args.q)
    K = _generic_field(field)
    xi = parse_kelem(args.xi, K)
    D = parse_divisor(args.conductor, field)
    E0 = parse_divisor(args.E0, field)
    if args.case == 1:
        s = shtuka_from_E0_case1(D, xi, args.N, E0)
    else:
        s = shtuka_from_E0_case2(D, xi, args.N, E0)
    alpha = parse_principal_part(args.alpha, D, field)
    beta = parse_principal_part(args.beta, D, field)
    if not args.all_methods:
        value = cd_symbol(
            s, alpha, beta, SymbolMethod(args.method), max_enum=args.max_enum
        )
        _write(args, {"symbol": value.format()})
        return EXIT_OK
    values = {
        method.value: cd_symbol(s, alpha, beta, method, max_enum=args.max_enum)
        for method in SymbolMethod
    }
    agree = len(set(values.values())) == 1
    if _format(args) == OutputFormat.JSON_LINES:
        payload: Dict[str, Any] = {k: v.format() for k, v in values.items()}
        payload["agree"] = agree
        _write(args, payload)
    else:
        for method, value in values.items():
            print(f"{method}: {value.format()}")
        print("agree" if agree else "disagree")
    return EXIT_OK if agree else EXIT_FAILED


def cmd_verify(args: argparse.Namespace) -> int:
    logger_factory.logger_factory.set_context(args.scenario)
    passed = run_source(
        args.scenario,
        max_enum=args.max_enum,
        seed=args.seed,
        output_format=_format(args),
    )
    return EXIT_OK if passed else EXIT_FAILED


def cmd_tau_identity(args: argparse.Namespace) -> int:
    field = parse_field_spec(args.q)
    c = parse_element(args.c, field)
    lhs, rhs = tau_identity(field, args.N, c, max_enum=args.max_enum)
    result = CheckResult(
        f"tau-identity q={args.q} N={args.N} c={args.c}",
        lhs.format(),
        rhs.format(),
        lhs == rhs,
    )
    emitter = make_emitter(_format(args))
    emitter.emit(result)
    return EXIT_OK if result.passed else EXIT_FAILED


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run the command line.

    :param argv: Arguments without the program name, sys.argv if omitted
    :type argv: list or None
    :returns: 0 on success, 1 on a failed check, 2 on an input error
    :rtype: int
    """
    args = build_parser().parse_args(argv)
    logger_factory.logging_config(args.log_level, args.log_file)
    if args.max_enum < 1:
        print("error: --max-enum must be positive", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.handler(args)
    except InputError as e:
        logger.debug(f"Input error in {args.command}: {e!r}")
        print(f"error: {e.__class__.__name__}: {e}", file=sys.stderr)
        return EXIT_INPUT
    except ComputationError as e:
        logger.error(f"{args.command} failed: {e.__class__.__name__}: {e}")
        print(f"error: {e.__class__.__name__}: {e}", file=sys.stderr)
        return EXIT_FAILED
