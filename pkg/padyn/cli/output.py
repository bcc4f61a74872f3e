"""
JSON rendering for CLI results
Exact quantities become strings, floats are fixed at 12 significant digits, and key order
follows insertion so identical invocations print identical bytes
"""

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Union

from ..core.arith import ExtendedInteger, format_valuation
from ..core.heights import HeightEstimate
from ..core.poly import IntPolynomial, RatPolynomial
from ..core.ratmap import Finite, Infinity, ProjPoint, RationalMap

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_RESOURCE_LIMIT = 2


@dataclass
class CommandResult:
    command: str
    input: Dict[str, Any] = field(default_factory=dict)
    result: Any = None
    diagnostics: List[str] = field(default_factory=list)
    error: Optional[Dict[str, Any]] = None
    exit_code: int = EXIT_OK

    def to_dict(self) -> Dict[str, Any]:
        """Always the same four keys; a failure carries its error object as the result"""
        return {
            "command": self.command,
            "input": self.input,
            "result": self.result if self.error is None else {"error": self.error},
            "diagnostics": list(self.diagnostics),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False, allow_nan=False)


def render_float(value: float) -> Union[float, str]:
    if math.isinf(value):
        return "Infinity" if value > 0 else "-Infinity"
    return float(f"{value:.12g}")


def render_rational(value: Union[int, Fraction]) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def render_point(point: ProjPoint) -> str:
    if isinstance(point, Infinity):
        return "Infinity"
    return render_rational(point.value)


def render_valuation(v: ExtendedInteger) -> Union[int, str]:
    return format_valuation(v) if v == math.inf else int(v)


def render_polynomial(poly: Union[IntPolynomial, RatPolynomial]) -> List[str]:
    """Ascending coefficient array of decimal strings"""
    if isinstance(poly, RatPolynomial):
        return [render_rational(c) for c in poly.coeffs]
    return [str(c) for c in poly.coeffs]


def render_map(f: RationalMap) -> Dict[str, Any]:
    return {
        "expression": str(f),
        "numerator": render_polynomial(f.g),
        "denominator": render_polynomial(f.h),
        "degree": f.d,
    }


class HeightRenderer:
    """Heights as {value, error, method}, optionally converted to another log base"""

    BASES = {"e": math.e, "2": 2.0, "10": 10.0}

    def __init__(self, base: str = "e"):
        self.base_name = base
        self.base = self.BASES[base]

    def convert(self, estimate: HeightEstimate) -> HeightEstimate:
        return estimate if self.base_name == "e" else estimate.in_base(self.base)

    def scalar(self, value: float) -> Union[float, str]:
        return render_float(value if self.base_name == "e" else value / math.log(self.base))

    def __call__(self, estimate: Optional[HeightEstimate]) -> Optional[Dict[str, Any]]:
        if estimate is None:
            return None
        estimate = self.convert(estimate)
        return {
            "value": render_float(estimate.value),
            "error": render_float(estimate.error),
            "method": estimate.method.value,
        }


def render_points(points: Sequence[Union[Fraction, ProjPoint]]) -> List[str]:
    return [render_point(p) if isinstance(p, (Finite, Infinity)) else render_rational(p)
            for p in points]
