"""
Expression parser for maps, polynomials and points
Recursive descent over the grammar

    expr    := operand ["/" operand]
    operand := "(" poly ")" | poly
    poly    := ["+" | "-"] term (("+" | "-") term)*
    term    := coeff ["*"] ["x" ["^" int]] | "x" ["^" int]
    coeff   := int ["/" int]

An integer followed by "/" and an integer is a rational coefficient only when "*" or "x"
comes next; otherwise the "/" separates numerator and denominator of the map.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from ..config import config
from ..core.errors import ExpressionSyntaxError, InputError, ResourceLimitError
from ..core.poly import IntPolynomial, RatPolynomial
from ..core.ratmap import POINT_AT_INFINITY, Finite, ProjPoint, RationalMap, normalize

NUMBER = "number"
SYMBOL = "symbol"
VARIABLE = "x"
END = "end"

_SYMBOLS = "+-*/^()"


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    offset: int


def tokenize(text: str) -> List[Token]:
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            start = i
            while i < len(text) and text[i].isdigit():
                i += 1
            tokens.append(Token(NUMBER, text[start:i], start))
        elif ch == "x":
            tokens.append(Token(VARIABLE, ch, i))
            i += 1
        elif ch in _SYMBOLS:
            tokens.append(Token(SYMBOL, ch, i))
            i += 1
        else:
            raise ExpressionSyntaxError(f"unexpected character {ch!r}", i, text)
    tokens.append(Token(END, "", len(text)))
    return tokens


class ExpressionParser:
    """Single-use parser over one source text"""

    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.pos = 0

    # -- token helpers --------------------------------------------------------

    def peek(self, ahead: int = 0) -> Token:
        return self.tokens[min(self.pos + ahead, len(self.tokens) - 1)]

    def at(self, kind: str, text: Optional[str] = None, ahead: int = 0) -> bool:
        token = self.peek(ahead)
        return token.kind == kind and (text is None or token.text == text)

    def advance(self) -> Token:
        token = self.peek()
        self.pos += 1
        return token

    def expect(self, kind: str, text: Optional[str] = None, what: str = "") -> Token:
        if not self.at(kind, text):
            token = self.peek()
            found = "end of input" if token.kind == END else repr(token.text)
            raise ExpressionSyntaxError(f"expected {what or text or kind}, found {found}",
                                        token.offset, self.text)
        return self.advance()

    def error(self, message: str) -> ExpressionSyntaxError:
        return ExpressionSyntaxError(message, self.peek().offset, self.text)

    # -- grammar --------------------------------------------------------------

    def parse_map(self) -> RationalMap:
        numerator = self.operand()
        denominator = RatPolynomial((Fraction(1),))
        if self.at(SYMBOL, "/"):
            self.advance()
            denominator = self.operand()
        self.expect(END, what="end of input")
        return normalize(numerator, denominator)

    def parse_polynomial(self) -> RatPolynomial:
        poly = self.operand()
        self.expect(END, what="end of input")
        return poly

    def operand(self) -> RatPolynomial:
        if self.at(SYMBOL, "("):
            self.advance()
            poly = self.poly()
            self.expect(SYMBOL, ")")
            return poly
        return self.poly()

    def poly(self) -> RatPolynomial:
        sign = 1
        if self.at(SYMBOL, "+") or self.at(SYMBOL, "-"):
            sign = -1 if self.advance().text == "-" else 1
        result = self.term() * sign
        while self.at(SYMBOL, "+") or self.at(SYMBOL, "-"):
            sign = -1 if self.advance().text == "-" else 1
            result = result + self.term() * sign
        return result

    def term(self) -> RatPolynomial:
        if self.at(VARIABLE):
            return self.power(Fraction(1))
        if not self.at(NUMBER):
            raise self.error("expected a coefficient or x")
        coefficient = self.coefficient()
        if self.at(SYMBOL, "*"):
            self.advance()
            if not self.at(VARIABLE):
                raise self.error("expected x after '*'")
        if self.at(VARIABLE):
            return self.power(coefficient)
        return RatPolynomial((coefficient,))

    def coefficient(self) -> Fraction:
        value = Fraction(int(self.advance().text))
        # c/q is a coefficient only in front of '*' or 'x'
        if (self.at(SYMBOL, "/") and self.at(NUMBER, ahead=1)
                and (self.at(SYMBOL, "*", ahead=2) or self.at(VARIABLE, ahead=2))):
            self.advance()
            q = self.advance()
            if int(q.text) == 0:
                raise ExpressionSyntaxError("zero denominator", q.offset, self.text)
            value /= int(q.text)
        return value

    def power(self, coefficient: Fraction) -> RatPolynomial:
        self.expect(VARIABLE)
        k = 1
        if self.at(SYMBOL, "^"):
            self.advance()
            k = int(self.expect(NUMBER, what="integer exponent").text)
            if k > config.MAX_DEGREE:
                raise ResourceLimitError(
                    f"exponent {k} exceeds the degree cap {config.MAX_DEGREE} (PADYN_MAX_DEGREE)",
                    attempted=k, limit=config.MAX_DEGREE)
        return RatPolynomial((Fraction(0),) * k + (coefficient,))


def parse_map(text: str) -> RationalMap:
    """
    Normalized map from text such as "(x^2-x)/6" or "x^2+1"

    Raises:
        ExpressionSyntaxError: with the offending offset
        DegenerateMapError: from normalization
    """
    return ExpressionParser(text).parse_map()


def parse_polynomial(text: str) -> IntPolynomial:
    """Integer polynomial with denominators cleared, e.g. "x^2-x-18" """
    poly = ExpressionParser(text).parse_polynomial()
    if poly.is_zero():
        raise InputError("the zero polynomial is not allowed here")
    cleared, _ = poly.clear_denominators()
    return cleared


def parse_rational(text: str) -> Fraction:
    """Rational from "p/q", an integer or a decimal"""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise InputError(f"cannot read {text!r} as a rational number") from None


def parse_point(text: str) -> ProjPoint:
    """Rational point, or the point at infinity for "Infinity"/"inf" """
    if text.strip().lower() in ("infinity", "inf", "oo"):
        return POINT_AT_INFINITY
    return Finite(parse_rational(text))


def parse_int_list(text: str) -> List[int]:
    """Comma-separated integers, e.g. "2,3,5" """
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise InputError(f"cannot read {text!r} as a comma-separated list of integers") from None
