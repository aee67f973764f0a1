"""
β numbers and the greedy expansion d(1,β).

Three representations are supported:

* rational ``p/q`` (and integers), iterated exactly;
* algebraic ``poly:<expr>@[lo,hi]``, iterated exactly in Q(β) modulo the
  irreducible factor with a root in the interval, with floors certified on a
  shrinking isolating interval;
* decimal literals, iterated on mpfr intervals with outward rounding and
  precision escalation; their expansions are always reported as truncated.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import gmpy2
import sympy
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from .exceptions import AmbiguousDigit, UnsupportedSpec, WrongExpansionStatus
from .settings import shift_settings

logger = logging.getLogger(__name__)

FINITE = 'finite'
EVENTUALLY_PERIODIC = 'eventually_periodic'
TRUNCATED = 'truncated'

_x = sympy.Symbol('x')


@dataclass(frozen=True)
class BetaNumber:
    literal: str
    kind: str
    rational: Optional[Fraction] = None
    coefficients: Tuple[Fraction, ...] = ()  # minimal polynomial, highest degree first
    interval: Tuple[Fraction, Fraction] = (Fraction(0), Fraction(0))

    @classmethod
    def parse(cls, literal: str) -> 'BetaNumber':
        text = literal.strip()
        if text.startswith('poly:'):
            return cls._parse_algebraic(text)
        if '.' in text or 'e' in text.lower():
            value = Fraction(text)
            number = cls(text, 'decimal', interval=(value, value))
        else:
            number = cls(text, 'rational', rational=Fraction(text))
        if number.approximate() <= 1:
            raise UnsupportedSpec(f'β must exceed 1, got {text}.')
        return number

    @classmethod
    def _parse_algebraic(cls, text: str) -> 'BetaNumber':
        body, _, bounds = text[len('poly:'):].partition('@')
        lo, hi = (Fraction(b.strip()) for b in bounds.strip().strip('[]').split(','))
        expr = parse_expr(body, transformations=standard_transformations + (convert_xor,))
        poly = sympy.Poly(expr, _x, domain='QQ')
        _, factors = poly.factor_list()
        chosen = [f for f, _ in factors if f.count_roots(_rational(lo), _rational(hi)) == 1]
        if len(chosen) != 1 or sum(f.count_roots(_rational(lo), _rational(hi)) for f, _ in factors) != 1:
            raise UnsupportedSpec(f'{text}: the interval must isolate exactly one root.')
        factor = chosen[0].monic()
        coefficients = tuple(Fraction(int(c.p), int(c.q)) for c in factor.all_coeffs())
        if len(coefficients) == 2:
            return cls(text, 'rational', rational=-coefficients[1])
        number = cls(text, 'algebraic', coefficients=coefficients, interval=(lo, hi))
        if hi <= 1:
            raise UnsupportedSpec(f'β must exceed 1, got {text}.')
        return number

    def approximate(self) -> float:
        if self.kind == 'rational':
            return float(self.rational)
        lo, hi = self.interval
        return float((lo + hi) / 2)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def evaluate(self, t: Fraction) -> Fraction:
        value = Fraction(0)
        for c in self.coefficients:
            value = value * t + c
        return value


@dataclass(frozen=True)
class BetaExpansion:
    digits: Tuple[int, ...]
    status: str
    alphabet_max: int
    preperiod: int = 0
    period: int = 0

    def digit(self, i: int) -> int:
        """i-th digit of the infinite stream (zeros after a finite expansion)."""
        if i < len(self.digits):
            return self.digits[i]
        if self.status == EVENTUALLY_PERIODIC:
            return self.digits[self.preperiod + (i - self.preperiod) % self.period]
        if self.status == FINITE:
            return 0
        raise IndexError(i)


class _FieldElement:
    """Polynomial in β of degree below the minimal polynomial's, with rational coefficients."""

    def __init__(self, beta: BetaNumber):
        self.beta = beta
        self.modulus = beta.coefficients  # monic

    def reduce(self, coefficients: List[Fraction]) -> Tuple[Fraction, ...]:
        degree = self.beta.degree
        coefficients = list(coefficients)  # lowest degree first
        while len(coefficients) > degree:
            top = coefficients.pop()
            shift = len(coefficients) - degree
            for k in range(degree):
                # β^degree = -Σ modulus[degree-k] β^k
                coefficients[shift + k] -= top * self.modulus[degree - k]
        coefficients += [Fraction(0)] * (degree - len(coefficients))
        return tuple(coefficients)

    def times_beta(self, element: Tuple[Fraction, ...]) -> Tuple[Fraction, ...]:
        return self.reduce([Fraction(0)] + list(element))


def _interval_horner(element: Tuple[Fraction, ...], lo: Fraction, hi: Fraction) -> Tuple[Fraction, Fraction]:
    """Enclosure of Σ c_k t^k for t in [lo, hi] with 0 < lo."""
    low = high = Fraction(0)
    for c in reversed(element):
        candidates = [low * lo, low * hi, high * lo, high * hi]
        low, high = min(candidates) + c, max(candidates) + c
    return low, high


def _refine(beta: BetaNumber, lo: Fraction, hi: Fraction) -> Tuple[Fraction, Fraction]:
    mid = (lo + hi) / 2
    if beta.evaluate(mid) == 0:
        return mid, mid
    if (beta.evaluate(lo) < 0) == (beta.evaluate(mid) < 0):
        return mid, hi
    return lo, mid


def _closing(digits: List[int], vanished: bool, start: Optional[int]) -> BetaExpansion:
    """Status of an orbit stopped after the last requested digit."""
    if vanished:
        return BetaExpansion(tuple(digits), FINITE, digits[0])
    if start is not None:
        return BetaExpansion(tuple(digits), EVENTUALLY_PERIODIC, digits[0], start, len(digits) - start)
    return BetaExpansion(tuple(digits), TRUNCATED, digits[0] if digits else 0)


def _expand_algebraic(beta: BetaNumber, n: int) -> BetaExpansion:
    field_ = _FieldElement(beta)
    lo, hi = beta.interval
    ceiling = Fraction(1, 2 ** shift_settings.BETA_MAX_PRECISION)
    x = field_.reduce([Fraction(1)])
    seen: Dict[Tuple[Fraction, ...], int] = {}
    digits: List[int] = []
    for index in range(n):
        if all(c == 0 for c in x):
            return BetaExpansion(tuple(digits), FINITE, digits[0] if digits else 0)
        if x in seen:
            start = seen[x]
            return BetaExpansion(tuple(digits), EVENTUALLY_PERIODIC, digits[0], start, index - start)
        seen[x] = index
        y = field_.times_beta(x)
        if all(c == 0 for c in y[1:]):
            digit = math.floor(y[0])
        else:
            while True:
                low, high = _interval_horner(y, lo, hi)
                if math.floor(low) == math.floor(high):
                    digit = math.floor(low)
                    break
                if hi - lo < ceiling:
                    raise AmbiguousDigit(index, shift_settings.BETA_MAX_PRECISION)
                lo, hi = _refine(beta, lo, hi)
        digits.append(digit)
        x = tuple(c - (digit if k == 0 else 0) for k, c in enumerate(y))
    return _closing(digits, all(c == 0 for c in x), seen.get(x))


def _expand_rational(beta: Fraction, n: int) -> BetaExpansion:
    x = Fraction(1)
    seen: Dict[Fraction, int] = {}
    digits: List[int] = []
    for index in range(n):
        if x == 0:
            return BetaExpansion(tuple(digits), FINITE, digits[0])
        if x in seen:
            start = seen[x]
            return BetaExpansion(tuple(digits), EVENTUALLY_PERIODIC, digits[0], start, index - start)
        seen[x] = index
        y = beta * x
        digits.append(math.floor(y))
        x = y - digits[-1]
    return _closing(digits, x == 0, seen.get(x))


def _expand_decimal(beta: BetaNumber, n: int, precision: int) -> Tuple[List[int], bool]:
    """Digits on outward-rounded mpfr intervals; the flag is False when a floor is ambiguous."""
    with gmpy2.context(precision=precision, round=gmpy2.RoundDown):
        b_lo = gmpy2.mpfr(beta.literal)
    with gmpy2.context(precision=precision, round=gmpy2.RoundUp):
        b_hi = gmpy2.mpfr(beta.literal)
    x_lo = x_hi = gmpy2.mpfr(1)
    digits = []
    for _ in range(n):
        with gmpy2.context(precision=precision, round=gmpy2.RoundDown):
            y_lo = b_lo * x_lo
        with gmpy2.context(precision=precision, round=gmpy2.RoundUp):
            y_hi = b_hi * x_hi
        d_lo, d_hi = int(gmpy2.floor(y_lo)), int(gmpy2.floor(y_hi))
        if d_lo != d_hi:
            return digits, False
        digits.append(d_lo)
        with gmpy2.context(precision=precision, round=gmpy2.RoundDown):
            x_lo = y_lo - d_lo
        with gmpy2.context(precision=precision, round=gmpy2.RoundUp):
            x_hi = y_hi - d_lo
    return digits, True


def beta_expand(beta: BetaNumber, n: int) -> BetaExpansion:
    if beta.kind == 'rational':
        return _expand_rational(beta.rational, n)
    if beta.kind == 'algebraic':
        return _expand_algebraic(beta, n)
    precision = shift_settings.BETA_START_PRECISION
    while precision <= shift_settings.BETA_MAX_PRECISION:
        digits, certified = _expand_decimal(beta, n, precision)
        if certified:
            return BetaExpansion(tuple(digits), TRUNCATED, digits[0])
        logger.info(f'β={beta.literal}: escalating precision beyond {precision} bits')
        precision *= shift_settings.BETA_PRECISION_FACTOR
    raise AmbiguousDigit(len(digits), precision // shift_settings.BETA_PRECISION_FACTOR)


@dataclass(frozen=True)
class DigitStream:
    """
    A digit stream d₀d₁…: ``digits`` followed, when ``period`` > 0, by the last
    ``period`` digits repeated forever. With period 0 the stream is known only
    through its prefix.
    """
    digits: Tuple[int, ...]
    period: int = 0

    @property
    def is_periodic(self) -> bool:
        return self.period > 0

    @property
    def preperiod(self) -> int:
        return len(self.digits) - self.period

    @property
    def known(self) -> float:
        return math.inf if self.is_periodic else len(self.digits)

    def digit(self, i: int) -> int:
        if i < len(self.digits):
            return self.digits[i]
        if not self.is_periodic:
            raise IndexError(i)
        return self.digits[self.preperiod + (i - self.preperiod) % self.period]

    def prefix(self, n: int) -> Tuple[int, ...]:
        return tuple(self.digit(i) for i in range(n))


def star_expansion(expansion: BetaExpansion) -> DigitStream:
    if expansion.status != FINITE or not expansion.digits or expansion.digits[-1] < 1:
        raise WrongExpansionStatus(f'Expected a finite expansion, got {expansion.status}.')
    block = expansion.digits[:-1] + (expansion.digits[-1] - 1,)
    return DigitStream(block, period=len(block))


def stream_from_expansion(expansion: BetaExpansion) -> DigitStream:
    """The stream used for language work: d* for finite expansions."""
    if expansion.status == FINITE:
        return star_expansion(expansion)
    if expansion.status == EVENTUALLY_PERIODIC:
        end = expansion.preperiod + expansion.period
        digits = tuple(expansion.digit(i) for i in range(end))
        return DigitStream(digits, period=expansion.period)
    return DigitStream(expansion.digits)


def _rational(value: Fraction) -> sympy.Rational:
    return sympy.Rational(value.numerator, value.denominator)
