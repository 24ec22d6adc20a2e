"""Scenario files, built-in verification suites and their runner."""
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
import os
import random
import shlex
from typing import Any
from typing import Callable
from typing import Dict
from typing import Iterator
from typing import List
from typing import Optional
from typing import Tuple

from hypshtuka import logger_factory
from hypshtuka.conductor import restrict_to_D
from hypshtuka.divisor import Divisor
from hypshtuka.divisor import Point
from hypshtuka.errors import HypShtukaError
from hypshtuka.errors import ParseError
from hypshtuka.factor import is_irreducible
from hypshtuka.fields import DEFAULT_MAX_ENUM
from hypshtuka.fields import FieldDesc
from hypshtuka.fields import k_field
from hypshtuka.func import RatFunc
from hypshtuka.func import divisor_of
from hypshtuka.hyp import THREE_POINT_FORMS
from hypshtuka.hyp import hyp
from hypshtuka.hyp import preset
from hypshtuka.hyp import simple_example_case
from hypshtuka.hyp import three_point_case
from hypshtuka.interface.report_emitter import ReportEmitter
from hypshtuka.model.check_result import CheckResult
from hypshtuka.model.hyp_method import HypMethod
from hypshtuka.model.output_format import OutputFormat
from hypshtuka.model.point import INFINITY
from hypshtuka.model.point import Closed
from hypshtuka.model.point import Finite
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
from hypshtuka.poly import Poly
from hypshtuka.report_emitter import make_emitter
from hypshtuka.rr import Differential
from hypshtuka.rr import PrincipalPart
from hypshtuka.rr import pairing_is_perfect
from hypshtuka.rr import residue_sum
from hypshtuka.shtuka import Shtuka
from hypshtuka.shtuka import cd_symbol
from hypshtuka.shtuka import chi_zero_rank
from hypshtuka.shtuka import cohomology_vanishes
from hypshtuka.shtuka import shtuka_from_E0_case1
from hypshtuka.shtuka import shtuka_from_E0_case2
from hypshtuka.shtuka import shtuka_validate
from hypshtuka.shtuka import tau_identity

Check = Tuple[str, Dict[str, str]]

ENUMERATION_DEGREE = {2: 4, 3: 3, 4: 2}

SUITES = (
    "basic-threepoint",
    "simple-example",
    "hyp-relations",
    "moore-identity",
    "residues",
    "symbol-agreement",
    "chi-zero",
    "coleman-threepoint",
)


def format_check(kind: str, params: Dict[str, str]) -> str:
    """Scenario line of a check, parameters in insertion order."""
    parts = [kind] + [f"{k}={shlex.quote(v)}" for k, v in params.items()]
    return " ".join(parts)


def parse_scenario(text: str) -> List[Check]:
    """
    Read ``check <name> key=value ...`` lines.

    Blank lines and lines starting with ``#`` are skipped. Values may be
    quoted with shell syntax.

    :param text: Scenario file contents
    :type text: str
    :returns: checks in file order
    :rtype: list
    :raises ParseError: For malformed lines or unknown checks
    """
    checks: List[Check] = []
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        try:
            words = shlex.split(stripped)
        except ValueError as e:
            raise ParseError(f"Line {number}: {e}") from e
        if len(words) < 2 or words[0] != "check":
            raise ParseError(f"Line {number}: expected 'check <name> ...'")
        kind = words[1]
        if kind not in ScenarioRunner.CHECKS:
            raise ParseError(f"Line {number}: unknown check '{kind}'")
        params: Dict[str, str] = {}
        for word in words[2:]:
            key, sep, value = word.partition("=")
            if not sep or not key:
                raise ParseError(f"Line {number}: expected key=value")
            params[key] = value
        checks.append((kind, params))
    return checks


def _require(params: Dict[str, str], key: str) -> str:
    if key not in params:
        raise ParseError(f"Missing parameter '{key}'")
    return params[key]


def _integer(params: Dict[str, str], key: str) -> int:
    value = _require(params, key)
    try:
        return int(value)
    except ValueError as e:
        raise ParseError(f"Parameter {key}={value} is not an integer") from e


def candidate_points(field: FieldDesc) -> List[Point]:
    """Points of degree at most two over F_q in a fixed order."""
    points: List[Point] = [INFINITY]
    points.extend(Finite(x) for x in field.elements())
    for c0 in field.elements():
        for c1 in field.elements():
            poly = Poly(field, (c0, c1, field.one))
            if is_irreducible(poly):
                points.append(Closed(poly))
    return points


def degree_filler(degree: int, away: Divisor, field: FieldDesc) -> Divisor:
    """
    Divisor of the given degree supported on few small points off away.

    Uses a rational point when one is free, otherwise points of degree
    two and three.
    """
    for x in field.elements():
        if Finite(x) not in away.support:
            return Divisor.at(x, degree)
    if INFINITY not in away.support:
        return Divisor.infinity(degree)
    small = [p for p in candidate_points(field) if isinstance(p, Closed)]
    two = next(p for p in small if p not in away.support)
    if degree % 2 == 0:
        return Divisor.point(two, degree // 2)
    cubic = _cubic_point(field)
    return Divisor.point(cubic) + Divisor.point(two, (degree - 3) // 2)


def _cubic_point(field: FieldDesc) -> Closed:
    for c0 in field.nonzero_elements():
        for c1 in field.elements():
            for c2 in field.elements():
                poly = Poly(field, (c0, c1, c2, field.one))
                if is_irreducible(poly):
                    return Closed(poly)
    raise ParseError(f"No cubic point over {field!r}")  # pragma: no cover


def random_conductor(
    rng: random.Random, field: FieldDesc, degree: int, avoid: List[Point]
) -> Divisor:
    """Effective divisor of the given degree, multiplicities at most 2."""
    pool = [p for p in candidate_points(field) if p not in avoid]
    D = Divisor.zero()
    while D.degree < degree:
        room = degree - D.degree
        choices = [
            p for p in pool if p.degree <= room and p not in D.support
        ]
        point = rng.choice(choices)
        k = 2 if 2 * point.degree <= room and rng.random() < 0.3 else 1
        D = D + Divisor.point(point, k)
    return D


def random_divisor(
    rng: random.Random,
    field: FieldDesc,
    degree: int,
    D: Divisor,
    anchor: Point,
) -> Divisor:
    """Divisor of the given degree supported away from D."""
    pool = [
        p
        for p in candidate_points(field)
        if p not in D.support and p != anchor
    ]
    E = Divisor.zero()
    for point in rng.sample(pool, min(len(pool), rng.randint(0, 2))):
        E = E + Divisor.point(point, rng.choice((-1, 1)))
    return E + Divisor.point(anchor, degree - E.degree)


def random_principal_part(
    rng: random.Random, D: Divisor, field: FieldDesc
) -> PrincipalPart:
    elements = field.elements()
    while True:
        coords = [rng.choice(elements) for _ in range(D.degree)]
        alpha = PrincipalPart.from_coordinates(D, field, coords)
        if not alpha.is_zero():
            return alpha


def random_nonzero(rng: random.Random, field: FieldDesc) -> Any:
    return rng.choice(field.nonzero_elements())


def _field_text(field: FieldDesc) -> str:
    return f"{field.p}^{field.m}"


class ScenarioRunner:
    """
    Run checks and report both sides of every comparison.

    A check that raises a library error fails with the error's class name;
    the remaining checks still run.
    """

    CHECKS: Dict[str, str] = {
        "threepoint": "_check_threepoint",
        "simple-example": "_check_simple_example",
        "tau-identity": "_check_tau_identity",
        "hyp": "_check_hyp",
        "hyp-methods": "_check_hyp_methods",
        "hyp-scaling": "_check_hyp_scaling",
        "hyp-additivity": "_check_hyp_additivity",
        "hyp-twist": "_check_hyp_twist",
        "moore-identity": "_check_moore_identity",
        "residue-perfect": "_check_residue_perfect",
        "residue-sum": "_check_residue_sum",
        "symbol-agreement": "_check_symbol_agreement",
        "cohomology": "_check_cohomology",
        "chi-zero": "_check_chi_zero",
        "coleman": "_check_coleman",
    }

    def __init__(
        self,
        max_enum: int = DEFAULT_MAX_ENUM,
        seed: int = 0,
        output_format: OutputFormat = OutputFormat.TEXT,
    ) -> None:
        """
        Create a runner writing to standard output.

        :param max_enum: Enumeration cap handed to every computation
        :type max_enum: int
        :param seed: Seed of the randomized suites
        :type seed: int
        :param output_format: Report format
        :type output_format: OutputFormat
        """
        self.logger = logger_factory.logger_factory.get_logger(
            str(self.__class__.__name__)
        )
        self.max_enum = max_enum
        self.seed = seed
        self.output_format = output_format
        self.emitter: ReportEmitter = make_emitter(output_format)

    def with_max_enum(self, max_enum: int):  # type: ignore
        """
        Cap the number of enumerated combinations per product.

        :param max_enum: Positive cap
        :type max_enum: int
        """
        if max_enum < 1:
            raise ValueError("Enumeration cap must be positive")
        self.max_enum = max_enum
        return self

    def with_output_format(self, output_format: OutputFormat):  # type: ignore
        """
        Replace the emitter with one for the given format.

        :param output_format: Report format
        :type output_format: OutputFormat
        """
        self.output_format = output_format
        self.emitter = make_emitter(output_format)
        return self

    def with_seed(self, seed: int):  # type: ignore
        self.seed = seed
        return self

    def with_emitter(self, emitter: ReportEmitter):  # type: ignore
        """
        Use a custom emitter, e.g. one writing to a file.

        :param emitter: Report back end
        :type emitter: ReportEmitter
        """
        if not isinstance(emitter, ReportEmitter):
            raise ValueError("Invalid report emitter provided")
        self.emitter = emitter
        return self

    def load(self, source: str) -> List[Check]:
        """
        Checks of a built-in suite or of a scenario file.

        ``all`` expands to every built-in suite.

        :param source: Suite name or path
        :type source: str
        :returns: checks in order
        :rtype: list
        :raises ParseError: For an unreadable or malformed scenario
        """
        if source == "all":
            return [check for name in SUITES for check in self.suite(name)]
        if source in SUITES:
            return self.suite(source)
        if not os.path.isfile(source):
            raise ParseError(f"No suite or scenario file named '{source}'")
        try:
            with open(source, encoding="utf-8") as file:
                text = file.read()
        except OSError as e:
            raise ParseError(f"Cannot read '{source}': {e}") from e
        return parse_scenario(text)

    def suite(self, name: str) -> List[Check]:
        """
        Checks of a built-in suite.

        Randomized suites draw from a generator seeded with the runner's
        seed, so a suite is the same list on every call.

        :param name: One of SUITES
        :type name: str
        :returns: checks
        :rtype: list
        """
        builders: Dict[str, Callable[[random.Random], Iterator[Check]]] = {
            "basic-threepoint": self._suite_basic_threepoint,
            "simple-example": self._suite_simple_example,
            "hyp-relations": self._suite_hyp_relations,
            "moore-identity": self._suite_moore_identity,
            "residues": self._suite_residues,
            "symbol-agreement": self._suite_symbol_agreement,
            "chi-zero": self._suite_chi_zero,
            "coleman-threepoint": self._suite_coleman,
        }
        if name not in builders:
            raise ParseError(f"Unknown suite '{name}'")
        return list(builders[name](random.Random(self.seed)))

    def run_check(self, kind: str, params: Dict[str, str]) -> CheckResult:
        """
        Evaluate one check.

        :param kind: Check name
        :type kind: str
        :param params: Parameters as text
        :type params: dict
        :returns: the outcome, failed with the error name on library errors
        :rtype: CheckResult
        """
        name = format_check(kind, params)
        self.logger.info(f"Running {name}")
        try:
            lhs, rhs = getattr(self, self.CHECKS[kind])(params)
        except ParseError:
            raise
        except HypShtukaError as e:
            self.logger.error(f"{name} raised {e.__class__.__name__}: {e}")
            return CheckResult(name, "", "", False, e.__class__.__name__)
        result = CheckResult(
            name, format_value(lhs), format_value(rhs), lhs == rhs
        )
        if not result.passed:
            self.logger.warning(f"{name}: {result.lhs} != {result.rhs}")
        return result

    def run(self, checks: List[Check]) -> bool:
        """
        Run checks in order and emit a report.

        :param checks: Checks to evaluate
        :type checks: list
        :returns: True when every check passed
        :rtype: bool
        """
        passed = failed = 0
        for kind, params in checks:
            result = self.run_check(kind, params)
            self.emitter.emit(result)
            if result.passed:
                passed += 1
            else:
                failed += 1
        self.emitter.summary(passed, failed)
        self.logger.info(f"{passed} passed, {failed} failed")
        return failed == 0

    # Parameter decoding

    def _field(self, params: Dict[str, str]) -> FieldDesc:
        return parse_field_spec(_require(params, "q"))

    def _method(self, params: Dict[str, str]) -> HypMethod:
        try:
            return HypMethod(params.get("method", "enumerate"))
        except ValueError as e:
            raise ParseError(f"Unknown method: {e}") from e

    def _hyp_inputs(
        self, params: Dict[str, str]
    ) -> Tuple[FieldDesc, Divisor, PrincipalPart, PrincipalPart, Divisor]:
        field = self._field(params)
        D = parse_divisor(_require(params, "conductor"), field)
        alpha = parse_principal_part(_require(params, "alpha"), D, field)
        beta = parse_principal_part(_require(params, "beta"), D, field)
        E = parse_divisor(_require(params, "E"), field)
        return field, D, alpha, beta, E

    def _hyp(
        self,
        D: Divisor,
        alpha: PrincipalPart,
        beta: PrincipalPart,
        E: Divisor,
        method: HypMethod = HypMethod.ENUMERATE,
    ) -> RatFunc:
        return hyp(D, alpha, beta, E, method, self.max_enum)

    def _shtuka(self, params: Dict[str, str]) -> Shtuka:
        field = self._field(params)
        K = k_field(field, field)
        D = parse_divisor(_require(params, "conductor"), field)
        xi = parse_kelem(params.get("xi", "tau"), K)
        if "case" not in params:
            eta = parse_kelem(_require(params, "eta"), K, xi)
            E = parse_divisor(_require(params, "E"), K, xi)
            return shtuka_validate(D, xi, eta, E)
        N = _integer(params, "N")
        E0 = parse_divisor(_require(params, "E0"), field)
        case = _integer(params, "case")
        if case == 1:
            return shtuka_from_E0_case1(D, xi, N, E0)
        if case == 2:
            return shtuka_from_E0_case2(D, xi, N, E0)
        raise ParseError(f"Unknown case {case}")

    # Checks, each returning (computed, expected)

    def _check_threepoint(self, params: Dict[str, str]) -> Tuple[Any, Any]:
        field = self._field(params)
        case = three_point_case(
            _require(params, "form"), field, _integer(params, "N")
        )
        value = self._hyp(
            case.D, case.alpha, case.beta, case.E, self._method(params)
        )
        return value, case.expected

    def _check_simple_example(
        self, params: Dict[str, str]
    ) -> Tuple[Any, Any]:
        field = self._field(params)
        c = parse_element(_require(params, "c"), field)
        case = simple_example_case(field, _integer(params, "N"), c)
        value = self._hyp(
            case.D, case.alpha, case.beta, case.E, self._method(params)
        )
        return value, case.expected

    def _check_tau_identity(self, params: Dict[str, str]) -> Tuple[Any, Any]:
        field = self._field(params)
        c = parse_element(_require(params, "c"), field)
        return tau_identity(
            field,
            _integer(params, "N"),
            c,
            self._method(params),
            self.max_enum,
        )

    def _check_hyp(self, params: Dict[str, str]) -> Tuple[Any, Any]:
        field, D, alpha, beta, E = self._hyp_inputs(params)
        expected = parse_ratfunc(_require(params, "expected"), field)
        return self._hyp(D, alpha, beta, E, self._method(params)), expected

    def _check_hyp_methods(self, params: Dict[str, str]) -> Tuple[Any, Any]:
        _, D, alpha, beta, E = self._hyp_inputs(params)
        return (
            self._hyp(D, alpha, beta, E, HypMethod.ENUMERATE),
            self._hyp(D, alpha, beta, E, HypMethod.MOORE),
        )

    def _check_hyp_scaling(self, params: Dict[str, str]) -> Tuple[Any, Any]:
        field, D, alpha, beta, E = self._hyp_inputs(params)
        c = field.coerce(parse_element(_require(params, "c"), field))
        expected = self._hyp(D, alpha, beta, E).scale(c)
        if params.get("side", "alpha") == "beta":
            return self._hyp(D, alpha, beta.scale(field.one / c), E), expected
        return self._hyp(D, alpha.scale(c), beta, E), expected

    def _check_hyp_additivity(
        self, params: Dict[str, str]
    ) -> Tuple[Any, Any]:
        field, D, alpha, beta, E = self._hyp_inputs(params)
        other = parse_principal_part(_require(params, "alpha2"), D, field)
        whole = self._hyp(D, alpha + other, beta, E)
        return whole, self._hyp(D, alpha, beta, E) + self._hyp(
            D, other, beta, E
        )

    def _check_hyp_twist(self, params: Dict[str, str]) -> Tuple[Any, Any]:
        field, D, alpha, beta, E = self._hyp_inputs(params)
        f = parse_ratfunc(_require(params, "f"), field)
        unit = restrict_to_D(f, D)
        return (
            self._hyp(D, alpha, beta, E + divisor_of(f)),
            self._hyp(D, alpha.act(unit), beta.act(unit), E),
        )

    def _check_moore_identity(
        self, params: Dict[str, str]
    ) -> Tuple[Any, Any]:
        field = self._field(params)
        values = [
            parse_ratfunc(text, field)
            for text in _require(params, "elements").split(",")
        ]
        q = _integer(params, "scalars") if "scalars" in params else None
        if all(f.is_constant() for f in values):
            xs: List[Any] = [f.num.coefficient(0) for f in values]
        elif all(f.is_polynomial() for f in values):
            xs = [f.num for f in values]
        else:
            xs = values
        return (
            moore_det(xs, q),
            moore_product(xs, q, max_enum=self.max_enum),
        )

    def _check_residue_perfect(
        self, params: Dict[str, str]
    ) -> Tuple[Any, Any]:
        field = self._field(params)
        D = parse_divisor(_require(params, "conductor"), field)
        return pairing_is_perfect(D, field), True

    def _check_residue_sum(self, params: Dict[str, str]) -> Tuple[Any, Any]:
        field = self._field(params)
        omega = Differential(parse_ratfunc(_require(params, "omega"), field))
        return residue_sum(omega), field.zero

    def _check_symbol_agreement(
        self, params: Dict[str, str]
    ) -> Tuple[Any, Any]:
        s = self._shtuka(params)
        field = s.field.base
        alpha = parse_principal_part(_require(params, "alpha"), s.D, field)
        beta = parse_principal_part(_require(params, "beta"), s.D, field)
        try:
            method = SymbolMethod(params.get("method", "determinant"))
        except ValueError as e:
            raise ParseError(f"Unknown method: {e}") from e
        return (
            cd_symbol(s, alpha, beta, SymbolMethod.SOLVE),
            cd_symbol(s, alpha, beta, method, max_enum=self.max_enum),
        )

    def _check_cohomology(self, params: Dict[str, str]) -> Tuple[Any, Any]:
        s = self._shtuka(params)
        field = s.field.base
        alphas = PrincipalPart.basis(s.D, field)
        return cohomology_vanishes(s, alphas), True

    def _check_chi_zero(self, params: Dict[str, str]) -> Tuple[Any, Any]:
        s = self._shtuka(params)
        D1 = parse_divisor(_require(params, "D1"), s.field.base)
        n = _integer(params, "iterations")
        return chi_zero_rank(s, D1, _integer(params, "m"), n), n + 1

    def _check_coleman(self, params: Dict[str, str]) -> Tuple[Any, Any]:
        field = self._field(params)
        zero, one = Divisor.at(field.zero), Divisor.at(field.one)
        D = Divisor.infinity() + one + zero
        E = parse_divisor(_require(params, "E"), field)
        alpha_inf = preset("alpha_inf", D, field)
        alpha_0 = preset("alpha_0", D, field)
        rest = preset("alpha_1", D, field) - alpha_inf
        method = self._method(params)
        whole = self._hyp(D, alpha_0 + rest, alpha_inf, E, method)
        return whole, self._hyp(D, alpha_0, alpha_inf, E, method) + self._hyp(
            D, rest, alpha_inf, E, method
        )

    # Built-in suites

    def _suite_basic_threepoint(self, rng: random.Random) -> Iterator[Check]:
        for q in ("2", "3", "4"):
            for N in (-3, -2, -1, 1, 2, 3):
                for form in THREE_POINT_FORMS:
                    yield "threepoint", {"q": q, "form": form, "N": str(N)}

    def _suite_simple_example(self, rng: random.Random) -> Iterator[Check]:
        for q in ("2", "3", "4"):
            field = parse_field_spec(q)
            for N in (-3, -2, -1, 1, 2, 3):
                for c in field.nonzero_elements():
                    params = {"q": q, "N": str(N), "c": c.format()}
                    yield "simple-example", params
                    yield "tau-identity", dict(params)

    def _random_hyp_params(
        self,
        rng: random.Random,
        low: bool = False,
        max_degree: int = 4,
    ) -> Dict[str, str]:
        field = parse_field_spec(rng.choice(("2", "3", "4")))
        anchor = rng.choice([Finite(x) for x in field.elements()])
        D = random_conductor(rng, field, rng.randint(1, 3), [anchor])
        if low:
            degree = -D.degree - rng.randint(1, 2)
        else:
            top = min(max_degree, ENUMERATION_DEGREE[field.order])
            degree = rng.randint(-1, top)
        E = random_divisor(rng, field, degree, D, anchor)
        return {
            "q": _field_text(field),
            "conductor": D.format(),
            "alpha": random_principal_part(rng, D, field).lift().format(),
            "beta": random_principal_part(rng, D, field).lift().format(),
            "E": E.format(),
        }

    def _suite_hyp_relations(self, rng: random.Random) -> Iterator[Check]:
        for _ in range(50):
            yield "hyp-methods", self._random_hyp_params(rng)
        for i in range(25):
            params = self._random_hyp_params(rng, low=i % 2 == 1)
            field = parse_field_spec(params["q"])
            params["c"] = random_nonzero(rng, field).format()
            params["side"] = "beta" if i % 4 >= 2 else "alpha"
            yield "hyp-scaling", params
        for i in range(50):
            params = self._random_hyp_params(rng, low=i % 2 == 1)
            field = parse_field_spec(params["q"])
            D = parse_divisor(params["conductor"], field)
            alpha = parse_principal_part(params["alpha"], D, field)
            while True:
                other = random_principal_part(rng, D, field)
                if not (alpha + other).is_zero():
                    break
            params["alpha2"] = other.lift().format()
            yield "hyp-additivity", params
        for i in range(25):
            params = self._random_hyp_params(rng, low=i % 2 == 1, max_degree=2)
            field = parse_field_spec(params["q"])
            D = parse_divisor(params["conductor"], field)
            params["f"] = self._random_unit(rng, field, D).format()
            yield "hyp-twist", params

    def _random_unit(
        self, rng: random.Random, field: FieldDesc, D: Divisor
    ) -> RatFunc:
        pool = [
            p
            for p in candidate_points(field)
            if p != INFINITY and p not in D.support
        ]
        zeros = rng.sample(pool, min(len(pool), rng.randint(1, 2)))
        num = Poly.one(field)
        for point in zeros:
            num = num * _point_poly(point, field)
        rational = [p for p in pool if isinstance(p, Finite)]
        den = Poly.one(field)
        while den.degree < num.degree:
            den = den * _point_poly(rng.choice(rational), field)
        return RatFunc.make(num, den)

    def _suite_moore_identity(self, rng: random.Random) -> Iterator[Check]:
        for q in ("2", "3", "4"):
            for n in range(1, 5):
                elements = ",".join(
                    "t^" + str(k) if k > 1 else ("t" if k == 1 else "1")
                    for k in range(n - 1, -1, -1)
                )
                yield "moore-identity", {"q": q, "elements": elements}
        extensions = {2: "2^4", 3: "3^4", 4: "2^8"}
        for _ in range(25):
            q = rng.choice((2, 3, 4))
            field = parse_field_spec(extensions[q])
            n = rng.randint(1, 4)
            values = [rng.choice(field.elements()) for _ in range(n)]
            yield "moore-identity", {
                "q": extensions[q],
                "scalars": str(q),
                "elements": ",".join(x.format() for x in values),
            }

    def _suite_residues(self, rng: random.Random) -> Iterator[Check]:
        for q in ("2", "3", "4"):
            field = parse_field_spec(q)
            for degree in range(1, 5):
                D = random_conductor(rng, field, degree, [])
                yield "residue-perfect", {"q": q, "conductor": D.format()}
        for _ in range(50):
            field = parse_field_spec(rng.choice(("2", "3", "4")))
            D = random_conductor(rng, field, rng.randint(1, 3), [])
            alpha = random_principal_part(rng, D, field).lift()
            g = RatFunc.from_poly(
                Poly(field, [rng.choice(field.elements()) for _ in range(3)])
            )
            omega = alpha * g if not g.is_zero() else alpha
            yield "residue-sum", {
                "q": _field_text(field),
                "omega": omega.format(),
            }

    def _shapes(self) -> Iterator[Dict[str, str]]:
        conductors = ("[inf]+[0]", "[inf]+2*[0]", "[inf]+[1]+[0]")
        for q in ("2", "3"):
            field = parse_field_spec(q)
            for text in conductors:
                D = parse_divisor(text, field)
                for N in range(1, 5):
                    E0 = degree_filler(N - 2, D, field)
                    yield {
                        "q": q,
                        "conductor": text,
                        "case": "1",
                        "N": str(N),
                        "E0": E0.format(),
                    }
                for N in range(D.degree - 1, D.degree + 2):
                    E0 = degree_filler(-N - 2, D, field)
                    yield {
                        "q": q,
                        "conductor": text,
                        "case": "2",
                        "N": str(N),
                        "E0": E0.format(),
                    }

    def _suite_symbol_agreement(self, rng: random.Random) -> Iterator[Check]:
        for shape in self._shapes():
            for method in ("determinant", "hyp"):
                params = dict(shape)
                params.update(
                    alpha="alpha_inf", beta="alpha_0", method=method
                )
                yield "symbol-agreement", params
            yield "cohomology", dict(shape)

    def _suite_chi_zero(self, rng: random.Random) -> Iterator[Check]:
        for q in ("2", "3"):
            for N in (2, 3, 4):
                for m in (0, 1):
                    yield "chi-zero", {
                        "q": q,
                        "conductor": "[inf]+[0]",
                        "case": "1",
                        "N": str(N),
                        "E0": f"{N - 2}*[1]" if N > 2 else "0",
                        "D1": "2*[inf]",
                        "m": str(m),
                        "iterations": str(N - 1 + m),
                    }
        for n in (1, 2, 3):
            yield "chi-zero", {
                "q": "3",
                "conductor": "[inf]+[0]",
                "xi": "tau^2",
                "eta": "tau^4",
                "E": "[tau]-2*[1]",
                "D1": "2*[inf]",
                "m": "0",
                "iterations": str(n),
            }

    def _suite_coleman(self, rng: random.Random) -> Iterator[Check]:
        for q in ("2", "3"):
            field = parse_field_spec(q)
            D = parse_divisor("[inf]+[1]+[0]", field)
            for degree in (-5, -4, -1, 0, 1, 2):
                E = degree_filler(degree, D, field)
                yield "coleman", {"q": q, "E": E.format()}


def _point_poly(point: Point, field: FieldDesc) -> Poly:
    if isinstance(point, Closed):
        return point.poly
    return Poly.linear(field, point.x)


def run_source(
    source: str,
    max_enum: int = DEFAULT_MAX_ENUM,
    seed: int = 0,
    output_format: OutputFormat = OutputFormat.TEXT,
    emitter: Optional[ReportEmitter] = None,
) -> bool:
    """
    Load and run a suite or scenario file.

    :returns: True when every check passed
    :rtype: bool
    :raises ParseError: For an unreadable or malformed scenario
    """
    runner = (
        ScenarioRunner()
        .with_max_enum(max_enum)
        .with_seed(seed)
        .with_output_format(output_format)
    )
    if emitter is not None:
        runner.with_emitter(emitter)
    return runner.run(runner.load(source))
