"""
β-shifts from a digit stream d = d(1,β) (or d* for finite expansions).

A word u is in the language when every suffix of u is lexicographically at
most the prefix of d of the same length. Eventually periodic streams also
get the finite presentation on the states 0, 1, … of the expansion.
"""
import enum
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

from .beta_numbers import DigitStream
from .exceptions import CannotClose, InsufficientDigits
from .forbidden import MFWTable
from .labeled import LabeledGraph
from .words import Alphabet, LanguageOracle, Word, sort_words

logger = logging.getLogger(__name__)


class Evidence(str, enum.Enum):
    STABLE = 'stable-evidence'
    UNSTABLE = 'unstable-evidence'
    INCONCLUSIVE = 'inconclusive'


def digit_alphabet(d: DigitStream) -> Alphabet:
    return Alphabet(tuple(str(i) for i in range(d.digit(0) + 1)))


def to_word(digits: Sequence[int]) -> Word:
    return tuple(str(i) for i in digits)


def to_digits(word: Sequence[str]) -> Tuple[int, ...]:
    return tuple(int(a) for a in word)


def _require(d: DigitStream, n: int) -> None:
    if n > d.known:
        raise InsufficientDigits(f'{n} digits needed, {len(d.digits)} known.')


def dominated(d: DigitStream, digits: Sequence[int]) -> bool:
    """Every suffix of ``digits`` is at most the prefix of d of its length."""
    n = len(digits)
    _require(d, n)
    prefix = d.prefix(n)
    return all(tuple(digits[i:]) <= prefix[:n - i] for i in range(n))


def beta_oracle(d: DigitStream, horizon: int, label: str = '') -> LanguageOracle:
    alphabet = digit_alphabet(d)
    if d.is_periodic:
        return beta_presentation(d).language_oracle(horizon, label=label)
    horizon = min(horizon, len(d.digits))
    return LanguageOracle(alphabet, horizon, lambda w: dominated(d, to_digits(w)), label=label)


def beta_language(d: DigitStream, n: int) -> List[Word]:
    _require(d, n)
    oracle = LanguageOracle(digit_alphabet(d), n, lambda w: dominated(d, to_digits(w)))
    return list(oracle.level(n))


def validate_expansion(d: DigitStream, horizon: int) -> bool:
    """
    σ^s d < d for 1 ≤ s < horizon. Periodic streams are compared exactly;
    for a bare prefix, agreement on the whole comparable window passes.
    """
    _require(d, horizon)
    for s in range(1, horizon):
        if d.is_periodic:
            length = s + len(d.digits) + d.period
            shifted = tuple(d.digit(s + i) for i in range(length))
            if shifted >= d.prefix(length):
                return False
        else:
            if tuple(d.digits[s:horizon]) > d.prefix(horizon - s):
                return False
    return True


def beta_mfw(d: DigitStream, N: int) -> MFWTable:
    _require(d, N)
    alphabet = digit_alphabet(d)
    top = d.digit(0)
    prefix = d.prefix(N)
    by_length: Dict[int, List[Word]] = {}
    for k in range(1, N):
        w = prefix[:k]
        for b in range(prefix[k] + 1, top + 1):
            if all(w[i:] + (b,) <= prefix[:k - i + 1] for i in range(1, k + 1)):
                by_length.setdefault(k + 1, []).append(to_word(w + (b,)))
    return MFWTable(alphabet, N, {n: tuple(sort_words(ws, alphabet)) for n, ws in by_length.items()})


def beta_presentation(d: DigitStream) -> LabeledGraph:
    if not d.is_periodic:
        raise CannotClose()
    alphabet = digit_alphabet(d)
    size = len(d.digits)
    transitions = []
    for i, digit in enumerate(d.digits):
        following = i + 1 if i + 1 < size else d.preperiod
        transitions.append((i, str(digit), following))
        transitions.extend((i, str(c), 0) for c in range(digit))
    return LabeledGraph(alphabet, transitions)


@dataclass(frozen=True)
class BetaDiagnostic:
    horizon: int
    prefix_reoccurrence: Dict[int, Tuple[int, ...]] = field(hash=False)
    d0_positions: Tuple[int, ...]
    verdict: Evidence


def prefix_occurrences(d: DigitStream, k: int, horizon: int) -> Tuple[int, ...]:
    """Indices j ≥ 1 with d_j…d_{j+k−1} equal to the prefix of length k and j+k ≤ horizon."""
    prefix = d.prefix(horizon)
    target = prefix[:k]
    return tuple(j for j in range(1, horizon - k + 1) if prefix[j:j + k] == target)


def beta_ls_diagnostic(d: DigitStream, horizon: int) -> BetaDiagnostic:
    _require(d, horizon)
    top = d.digit(0)
    prefix = d.prefix(horizon)
    occurrences = {k: prefix_occurrences(d, k, horizon) for k in range(1, horizon)}
    d0_positions = tuple(i for i, digit in enumerate(prefix) if digit == top)
    if d.is_periodic:
        tail = d.digits[d.preperiod:]
        vanishes = top not in tail
    else:
        vanishes = top not in prefix[horizon // 2:]
    if vanishes:
        verdict = Evidence.UNSTABLE
    elif all(occurrences[k] for k in range(1, horizon // 3 + 1)):
        verdict = Evidence.STABLE
    else:
        verdict = Evidence.INCONCLUSIVE
    logger.debug(f'β diagnostic at horizon {horizon}: {verdict.value}')
    return BetaDiagnostic(horizon, occurrences, d0_positions, verdict)


def example_betashift(mode: str, steps: int) -> DigitStream:
    """
    w₀ = 222, u₀ = 111 and w_{n+1} = w_n u_n w_n. The specified mode uses
    u_n = 1^(n+3); the synchronized mode uses u_n = 0^n for n ≥ 1.
    """
    w = (2, 2, 2)
    for n in range(steps):
        if mode == 'synchronized' and n >= 1:
            u = (0,) * n
        else:
            u = (1,) * (n + 3)
        w = w + u + w
    return DigitStream(w)


@dataclass(frozen=True)
class BorderReport:
    n: int
    borders: Tuple[Word, ...]
    mfw_at_next_length: bool


def beta_gap_length_check(d: DigitStream, n: int) -> BorderReport:
    """Proper borders of d₀…d_n and whether a minimal forbidden word has length n+1."""
    _require(d, n + 1)
    word = d.prefix(n + 1)
    borders = tuple(to_word(word[:k]) for k in range(1, n + 1) if word[:k] == word[n + 1 - k:])
    table = beta_mfw(d, n + 1)
    return BorderReport(n, borders, n + 1 in table.lengths())


def beta_mfw_gap_windows(d: DigitStream, N: int, D: int) -> List[Tuple[int, int]]:
    """Windows [n−D, n+2] inside [1, N] that contain no minimal forbidden word length."""
    lengths = set(beta_mfw(d, N).lengths())
    windows = []
    for n in range(D + 1, N - 1):
        if not any(m in lengths for m in range(n - D, n + 3)):
            windows.append((n - D, n + 2))
    return windows
