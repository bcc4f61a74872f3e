"""
Dense univariate polynomials for padyn
Integer and rational coefficients: arithmetic, gcd, resultants, discriminants,
squarefree parts and the cofactor identities behind height constants
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from .errors import PreconditionError

DEGREE_OF_ZERO = -1

# schoolbook multiplication below this length, Kronecker substitution above
_KRONECKER_THRESHOLD = 48


def _strip(coeffs: Iterable) -> tuple:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _pack(coeffs: Sequence[int], width: int) -> int:
    return int.from_bytes(b''.join(c.to_bytes(width, 'little') for c in coeffs), 'little')


def _unpack(value: int, width: int, count: int) -> List[int]:
    raw = value.to_bytes(width * count, 'little')
    return [int.from_bytes(raw[i * width:(i + 1) * width], 'little') for i in range(count)]


def _mul_nonnegative(a: Sequence[int], b: Sequence[int]) -> List[int]:
    """Kronecker substitution for lists of non-negative integers"""
    bound = max(a) * max(b) * min(len(a), len(b))
    width = bound.bit_length() // 8 + 1
    return _unpack(_pack(a, width) * _pack(b, width), width, len(a) + len(b) - 1)


def _mul_lists(a: Sequence[int], b: Sequence[int]) -> List[int]:
    if not a or not b:
        return []
    if min(len(a), len(b)) < _KRONECKER_THRESHOLD:
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return out

    # split into positive and negative parts so every packed digit is non-negative
    a_pos, a_neg = [max(c, 0) for c in a], [max(-c, 0) for c in a]
    b_pos, b_neg = [max(c, 0) for c in b], [max(-c, 0) for c in b]
    out = [0] * (len(a) + len(b) - 1)
    for x, y, sign in ((a_pos, b_pos, 1), (a_pos, b_neg, -1), (a_neg, b_pos, -1), (a_neg, b_neg, 1)):
        if any(x) and any(y):
            for k, c in enumerate(_mul_nonnegative(x, y)):
                out[k] += sign * c
    return out


@dataclass(frozen=True)
class IntPolynomial:
    """
    Polynomial with arbitrary-precision integer coefficients
    coeffs[i] is the coefficient of x^i; the leading coefficient is nonzero
    """
    coeffs: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'coeffs', _strip(int(c) for c in self.coeffs))

    # -- construction ---------------------------------------------------------

    @classmethod
    def x(cls) -> 'IntPolynomial':
        return cls((0, 1))

    @classmethod
    def constant(cls, c: int) -> 'IntPolynomial':
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> 'IntPolynomial':
        return cls((0,) * k + (c,))

    @classmethod
    def from_roots(cls, roots: Iterable[Union[int, Fraction]]) -> 'IntPolynomial':
        """Primitive polynomial prod (q*x - p) over roots p/q"""
        result = cls.constant(1)
        for r in roots:
            r = Fraction(r)
            result = result * cls((-r.numerator, r.denominator))
        return result

    # -- basic properties -----------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else DEGREE_OF_ZERO

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return self.degree <= 0

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other: 'IntPolynomial') -> 'IntPolynomial':
        other = _as_int_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(tuple(self[i] + other[i] for i in range(n)))

    __radd__ = __add__

    def __neg__(self) -> 'IntPolynomial':
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: 'IntPolynomial') -> 'IntPolynomial':
        return self + (-_as_int_poly(other))

    def __rsub__(self, other) -> 'IntPolynomial':
        return _as_int_poly(other) - self

    def __mul__(self, other: Union['IntPolynomial', int]) -> 'IntPolynomial':
        if isinstance(other, int):
            return IntPolynomial(tuple(c * other for c in self.coeffs))
        return IntPolynomial(_mul_lists(self.coeffs, _as_int_poly(other).coeffs))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> 'IntPolynomial':
        result, base = IntPolynomial.constant(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale_down(self, c: int) -> 'IntPolynomial':
        """Exact division of every coefficient by the integer c"""
        return IntPolynomial(tuple(a // c for a in self.coeffs))

    def __call__(self, x: Union[int, Fraction]) -> Union[int, Fraction]:
        result = 0
        for c in reversed(self.coeffs):
            result = result * x + c
        return result

    def evaluate_homogeneous(self, p: int, q: int, degree: Optional[int] = None) -> int:
        """sum a_i p^i q^(D-i) for the formal degree D (default: actual degree)"""
        n = self.degree
        if n < 0:
            return 0
        degree = n if degree is None else degree
        acc, qpow = 0, 1
        for c in reversed(self.coeffs):
            acc = acc * p + c * qpow
            qpow *= q
        return acc * q ** (degree - n)

    def derivative(self) -> 'IntPolynomial':
        return IntPolynomial(tuple(i * c for i, c in enumerate(self.coeffs))[1:])

    def compose(self, inner: 'IntPolynomial') -> 'IntPolynomial':
        result = IntPolynomial()
        for c in reversed(self.coeffs):
            result = result * inner + IntPolynomial.constant(c)
        return result

    def shift_scale(self, r: int, s: int) -> 'IntPolynomial':
        """The polynomial y -> a(r + s*y)"""
        return self.compose(IntPolynomial((r, s)))

    def reverse(self, degree: Optional[int] = None) -> 'IntPolynomial':
        """x^D a(1/x) for the formal degree D (default: actual degree)"""
        degree = self.degree if degree is None else degree
        padded = list(self.coeffs) + [0] * (degree + 1 - len(self.coeffs))
        return IntPolynomial(tuple(reversed(padded)))

    def zero_root_multiplicity(self) -> int:
        k = 0
        while k < len(self.coeffs) and self.coeffs[k] == 0:
            k += 1
        return k

    def content(self) -> int:
        return reduce(math.gcd, self.coeffs, 0)

    def primitive_part(self) -> 'IntPolynomial':
        """Content divided out, leading coefficient made positive"""
        if self.is_zero():
            return self
        c = self.content()
        if self.lc < 0:
            c = -c
        return self.scale_down(c)

    def norm1(self) -> int:
        return sum(abs(c) for c in self.coeffs)

    def height(self) -> int:
        return max((abs(c) for c in self.coeffs), default=0)

    def to_rational(self) -> 'RatPolynomial':
        return RatPolynomial(tuple(Fraction(c) for c in self.coeffs))

    def __str__(self) -> str:
        return format_polynomial(self.coeffs)


@dataclass(frozen=True)
class RatPolynomial:
    """Polynomial with Fraction coefficients; coeffs[i] multiplies x^i"""
    coeffs: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'coeffs', _strip(Fraction(c) for c in self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else DEGREE_OF_ZERO

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __add__(self, other: 'RatPolynomial') -> 'RatPolynomial':
        n = max(len(self.coeffs), len(other.coeffs))
        return RatPolynomial(tuple(self[i] + other[i] for i in range(n)))

    def __neg__(self) -> 'RatPolynomial':
        return RatPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: 'RatPolynomial') -> 'RatPolynomial':
        return self + (-other)

    def __mul__(self, other: Union['RatPolynomial', Fraction, int]) -> 'RatPolynomial':
        if isinstance(other, (int, Fraction)):
            return RatPolynomial(tuple(c * other for c in self.coeffs))
        out = [Fraction(0)] * max(len(self.coeffs) + len(other.coeffs) - 1, 0)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RatPolynomial(tuple(out))

    __rmul__ = __mul__

    def __call__(self, x: Union[int, Fraction]) -> Fraction:
        result = Fraction(0)
        for c in reversed(self.coeffs):
            result = result * x + c
        return result

    def divmod(self, other: 'RatPolynomial') -> Tuple['RatPolynomial', 'RatPolynomial']:
        """Euclidean division over Q"""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        quot = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        lead = other.lc
        for k in range(len(quot) - 1, -1, -1):
            c = rem[k + other.degree] / lead
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return RatPolynomial(tuple(quot)), RatPolynomial(tuple(rem[:other.degree] if other.degree > 0 else ()))

    def clear_denominators(self) -> Tuple[IntPolynomial, int]:
        """(integer polynomial, multiplier) with self * multiplier = polynomial"""
        multiplier = reduce(math.lcm, (c.denominator for c in self.coeffs), 1)
        return IntPolynomial(tuple(int(c * multiplier) for c in self.coeffs)), multiplier

    def __str__(self) -> str:
        return format_polynomial(self.coeffs)


def _as_int_poly(value) -> IntPolynomial:
    if isinstance(value, IntPolynomial):
        return value
    if isinstance(value, int):
        return IntPolynomial.constant(value)
    raise TypeError(f"cannot use {value!r} as an integer polynomial")


def format_polynomial(coeffs: Sequence[Union[int, Fraction]], var: str = "x") -> str:
    """Render ascending coefficients as e.g. 'x^2-x-18' (parseable by the CLI)"""
    if not coeffs:
        return "0"
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            power = var if i == 1 else f"{var}^{i}"
            body = power if mag == 1 else f"{mag}*{power}"
        terms.append((sign, body))
    first_sign, first_body = terms[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in terms[1:]:
        out += sign + body
    return out


# -- division, gcd ------------------------------------------------------------

def pseudo_remainder(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """prem(a, b): lc(b)^(deg a - deg b + 1) * a mod b, computed over Z"""
    if b.is_zero():
        raise ZeroDivisionError("pseudo-remainder by zero polynomial")
    rem = list(a.coeffs)
    db, lead = b.degree, b.lc
    if len(rem) - 1 < db:
        return a
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k]
        rem = [r * lead for r in rem]
        if c:
            for j, bj in enumerate(b.coeffs):
                rem[k - db + j] -= c * bj
        rem.pop()
    return IntPolynomial(tuple(rem))


def divmod_rational(a: IntPolynomial, b: IntPolynomial) -> Tuple[RatPolynomial, RatPolynomial]:
    return a.to_rational().divmod(b.to_rational())


def exact_quotient(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """
    Primitive part of a / b when b divides a in Q[x]

    Raises:
        PreconditionError: if b does not divide a
    """
    quot, rem = divmod_rational(a, b)
    if not rem.is_zero():
        raise PreconditionError(f"{b} does not divide {a}")
    return quot.clear_denominators()[0].primitive_part()


def divides(b: IntPolynomial, a: IntPolynomial) -> bool:
    """True when b divides a in Q[x]"""
    if b.is_zero():
        return a.is_zero()
    return divmod_rational(a, b)[1].is_zero()


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """
    Greatest common divisor in Q[x], returned primitive with positive leading coefficient
    Uses the primitive polynomial remainder sequence
    """
    if a.is_zero():
        return b.primitive_part()
    if b.is_zero():
        return a.primitive_part()
    a, b = a.primitive_part(), b.primitive_part()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        r = pseudo_remainder(a, b)
        a, b = b, r.primitive_part()
    return a.primitive_part()


# -- resultants ---------------------------------------------------------------

def resultant(a: IntPolynomial, b: IntPolynomial) -> int:
    """
    Sylvester resultant Res(a, b) = lc(a)^deg(b) * prod b(alpha) over roots of a

    Computed with the subresultant pseudo-remainder sequence, so intermediate
    coefficients stay as small as the determinant formulation allows.

    Raises:
        PreconditionError: both inputs zero
    """
    if a.is_zero() and b.is_zero():
        raise PreconditionError("resultant of two zero polynomials")
    if a.is_zero() or b.is_zero():
        return 0
    if a.degree == 0:
        return a.lc ** b.degree
    if b.degree == 0:
        return b.lc ** a.degree

    sign = 1
    if a.degree < b.degree:
        a, b = b, a
        if a.degree % 2 == 1 and b.degree % 2 == 1:
            sign = -1

    ca, cb = a.content(), b.content()
    a, b = a.scale_down(ca), b.scale_down(cb)
    t = ca ** b.degree * cb ** a.degree
    g = h = 1

    while True:
        delta = a.degree - b.degree
        if a.degree % 2 == 1 and b.degree % 2 == 1:
            sign = -sign
        r = pseudo_remainder(a, b)
        a = b
        if r.is_zero():
            return 0
        b = r.scale_down(g * h ** delta)
        g = a.lc
        h = g ** delta // h ** (delta - 1) if delta >= 1 else h
        if b.degree <= 0:
            break

    # b is a nonzero constant here
    h = b.lc ** a.degree // h ** (a.degree - 1)
    return sign * t * h


def discriminant(a: IntPolynomial) -> int:
    """disc(a) = (-1)^(d(d-1)/2) Res(a, a') / lc(a)"""
    d = a.degree
    if d < 1:
        raise PreconditionError("discriminant of a constant polynomial")
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * resultant(a, a.derivative()) // a.lc


def squarefree_part(a: IntPolynomial) -> IntPolynomial:
    """Primitive polynomial with the same roots as a, all simple, positive leading coefficient"""
    if a.is_zero():
        raise PreconditionError("squarefree part of the zero polynomial")
    if a.degree <= 0:
        return IntPolynomial.constant(1)
    g = poly_gcd(a, a.derivative())
    if g.degree == 0:
        return a.primitive_part()
    return exact_quotient(a, g)


def is_squarefree(a: IntPolynomial) -> bool:
    return a.degree <= 0 or poly_gcd(a, a.derivative()).degree == 0


def homogeneous_resultant(g: IntPolynomial, h: IntPolynomial, d: int) -> int:
    """
    Resultant of the degree-d forms G(X, Y) = Y^d g(X/Y), H(X, Y) = Y^d h(X/Y)

    Equals Res(g, h) times a power of the leading coefficient of whichever of g, h has
    degree d; it vanishes exactly when G and H share a zero on the projective line.
    """
    if g.is_zero() or h.is_zero():
        return 0
    res = resultant(g, h)
    if g.degree == d:
        return g.lc ** (d - h.degree) * res
    if h.degree == d:
        sign = -1 if (d + d * g.degree) % 2 else 1
        return sign * h.lc ** (d - g.degree) * res
    # both forms vanish at [1:0]
    return 0


def _solve_exact(matrix: List[List[Fraction]], rhs: List[Fraction]) -> List[Fraction]:
    """Gaussian elimination over Q for a square nonsingular system"""
    n = len(matrix)
    rows = [list(row) + [b] for row, b in zip(matrix, rhs)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if rows[r][col] != 0)
        rows[col], rows[pivot] = rows[pivot], rows[col]
        lead = rows[col][col]
        for r in range(n):
            if r != col and rows[r][col] != 0:
                factor = rows[r][col] / lead
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[col])]
    return [rows[i][n] / rows[i][i] for i in range(n)]


def homogeneous_cofactors(g: IntPolynomial, h: IntPolynomial, d: int
                          ) -> Tuple[IntPolynomial, IntPolynomial, IntPolynomial, IntPolynomial]:
    """
    Integer cofactors for the degree-d forms G, H of g, h

    Returns (A1, B1, A2, B2), dehomogenized, each of formal degree d - 1, with
        A1*G + B1*H = Res * X^(2d-1)
        A2*G + B2*H = Res * Y^(2d-1)
    where Res = homogeneous_resultant(g, h, d).

    Raises:
        PreconditionError: if G and H share a projective zero
    """
    res = homogeneous_resultant(g, h, d)
    if res == 0:
        raise PreconditionError("cofactors requested for forms with a common zero")
    size = 2 * d
    # column i < d: x^i * g, column d + i: x^i * h; row k: coefficient of x^k
    matrix = [[Fraction(0)] * size for _ in range(size)]
    for i in range(d):
        for k in range(d + 1):
            matrix[i + k][i] = Fraction(g[k])
            matrix[i + k][d + i] = Fraction(h[k])

    cofactors = []
    for target in (size - 1, 0):
        rhs = [Fraction(0)] * size
        rhs[target] = Fraction(res)
        solution = _solve_exact(matrix, rhs)
        if any(v.denominator != 1 for v in solution):
            raise ArithmeticError("non-integral cofactor solution")
        cofactors.append(IntPolynomial(tuple(int(v) for v in solution[:d])))
        cofactors.append(IntPolynomial(tuple(int(v) for v in solution[d:])))
    return tuple(cofactors)


def interpolate(points: Sequence[Tuple[int, int]]) -> RatPolynomial:
    """Lagrange interpolation through (x_j, y_j) with distinct integer nodes"""
    result = RatPolynomial()
    for j, (xj, yj) in enumerate(points):
        if yj == 0:
            continue
        basis = RatPolynomial((Fraction(1),))
        denom = Fraction(1)
        for k, (xk, _) in enumerate(points):
            if k != j:
                basis = basis * RatPolynomial((Fraction(-xk), Fraction(1)))
                denom *= xj - xk
        result = result + basis * (Fraction(yj) / denom)
    return result


def rational_roots(a: IntPolynomial) -> List[Fraction]:
    """Sorted distinct rational roots of a nonzero polynomial"""
    from .roots import rational_roots as _rational_roots
    return _rational_roots(a)


def is_irreducible(a: IntPolynomial) -> bool:
    """Irreducible over Q; a factor found numerically is confirmed by exact division"""
    if a.degree < 1:
        return False
    if a.degree == 1:
        return True
    if not is_squarefree(a):
        return False
    from .roots import proper_factor
    return proper_factor(a.primitive_part()) is None
