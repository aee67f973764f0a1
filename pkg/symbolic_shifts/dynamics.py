"""
Substitution shifts, complexity diagnostics, and induced systems recoded as
shifts over windows of the base shift.
"""
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Mapping, Optional, Set, Tuple

import numpy as np

from .exceptions import (
    EmptyClopenSet, HorizonExceeded, NonGrowingSubstitution, ReturnTimeCapExceeded, UnsupportedSpec,
)
from .forbidden import LSReport, ls_report, minimal_forbidden, shortest_forbidden_cover
from .settings import shift_settings
from .specs import InducedSpec, Substitution
from .words import Alphabet, LanguageOracle, Word, sort_words, special_words, subwords

logger = logging.getLogger(__name__)

HOMEOMORPHISM_UNCHECKED = 'the induced map is assumed to be a homeomorphism of U'


def iterate_lengths(tau: Substitution, k: int) -> int:
    """|τ^k(seed)| from the letter-count matrix."""
    index = tau.alphabet.index
    counts = np.zeros((len(index), len(index)), dtype=object)
    for a, image in tau.rules.items():
        for b in image:
            counts[index[a], index[b]] += 1
    row = np.zeros(len(index), dtype=object)
    row[index[tau.seed]] = 1
    for _ in range(k):
        row = row.dot(counts)
    return int(row.sum())


def check_growth(tau: Substitution) -> None:
    size = len(tau.alphabet)
    if iterate_lengths(tau, 3 * size) <= iterate_lengths(tau, size):
        raise NonGrowingSubstitution(f'|τ^k({tau.seed})| stays bounded.')


def subst_factors(tau: Substitution, n: int) -> Set[Word]:
    """Length-n subwords of the iterates τ^k(seed), collected until two iterates add nothing."""
    check_growth(tau)
    word: Word = (tau.seed,)
    collected: Set[Word] = set()
    quiet = 0
    for k in range(shift_settings.SUBSTITUTION_MAX_ITERATIONS):
        fresh = set(subwords(word, n)) - collected
        collected |= fresh
        if len(word) >= n and not fresh:
            quiet += 1
            if quiet == 2:
                logger.debug(f'{tau.label or "substitution"}: length {n} stable at iterate {k}')
                return collected
        else:
            quiet = 0
        word = tau.apply(word)
    logger.warning(f'{tau.label or "substitution"}: length {n} not stable after {k + 1} iterates')
    return collected


def subst_language(tau: Substitution, n: int) -> List[Word]:
    return sort_words(subst_factors(tau, n), tau.alphabet)


def substitution_oracle(tau: Substitution, horizon: int) -> LanguageOracle:
    top = subst_factors(tau, horizon)
    levels: Dict[int, Set[Word]] = {horizon: top}

    def membership(word: Word) -> bool:
        n = len(word)
        if n not in levels:
            levels[n] = {w for u in top for w in subwords(u, n)}
        return word in levels[n]

    return LanguageOracle(tau.alphabet, horizon, membership, label=tau.label)


@dataclass(frozen=True)
class ComplexityProfile:
    horizon: int
    differences: Tuple[int, ...]
    tail_minimum: int


def cassaigne_profile(oracle: LanguageOracle, N: int) -> ComplexityProfile:
    """p(n+1) − p(n) for 0 ≤ n ≤ N, and its minimum over the second half."""
    oracle.check_horizon(N + 1)
    counts = [len(oracle.level(n)) for n in range(N + 2)]
    differences = tuple(counts[n + 1] - counts[n] for n in range(N + 1))
    tail = differences[len(differences) // 2:]
    return ComplexityProfile(N + 1, differences, min(tail))


def bispecial_lengths(oracle: LanguageOracle, N: int) -> List[int]:
    oracle.check_horizon(N + 1)
    return [n for n in range(N + 1) if special_words(oracle, n).bispecial]


@dataclass(frozen=True)
class AperiodicityReport:
    k: int
    horizon: int
    power: Optional[int]


def aperiodicity_check(oracle: LanguageOracle, k: int, horizon: int) -> AperiodicityReport:
    """Smallest p with u^p forbidden for every allowed u of length at most k."""
    oracle.check_horizon(horizon // k * k)
    blocks = [u for m in range(1, k + 1) for u in oracle.level(m)]
    for p in range(1, horizon // k + 1):
        if not any(oracle.contains(u * p) for u in blocks):
            return AperiodicityReport(k, horizon, p)
    return AperiodicityReport(k, horizon, None)


class InducedRecoding:
    """
    The induced map x ↦ σ^ρ(x)(x) on U seen through (2N+1)-windows.

    Letters are the windows of U that occur in the base language; a superword
    y₀…y_{n−1} is allowed when some base word carries y_i at the position
    ρ(y₀) + … + ρ(y_{i−1}).
    """

    def __init__(self, spec: InducedSpec, base: LanguageOracle):
        self.spec = spec
        self.base = base
        self.window = 2 * spec.window + 1
        if any(len(w) != self.window for w in spec.clopen):
            raise UnsupportedSpec(f'Windows of U must have length {self.window}.')
        present = set(base.level(self.window))
        windows = [base.alphabet.check(tuple(w)) for w in spec.clopen]
        self.windows = tuple(sort_words((w for w in windows if w in present), base.alphabet))
        if not self.windows:
            raise EmptyClopenSet()
        self.returns = self._first_returns() if spec.first_return else self._given_returns()
        self.max_return = max(self.returns.values())
        self.min_return = min(self.returns.values())

    def __repr__(self):
        return f'<InducedRecoding letters={len(self.windows)} max_return={self.max_return}>'

    def symbol(self, window: Word) -> str:
        joiner = '' if self.base.alphabet.single_character else '.'
        return joiner.join(window)

    @cached_property
    def alphabet(self) -> Alphabet:
        return Alphabet(tuple(self.symbol(w) for w in self.windows))

    @cached_property
    def letters(self) -> Dict[str, Word]:
        return {self.symbol(w): w for w in self.windows}

    def _given_returns(self) -> Dict[Word, int]:
        rule = {tuple(w): int(r) for w, r in self.spec.returns.items()}
        missing = [w for w in self.windows if w not in rule]
        if missing:
            raise UnsupportedSpec(f'No return time for {len(missing)} windows of U.')
        if any(rule[w] < 1 for w in self.windows):
            raise UnsupportedSpec('Return times must be positive.')
        cap = shift_settings.RETURN_TIME_CAP
        if any(rule[w] > cap for w in self.windows):
            raise ReturnTimeCapExceeded()
        return {w: rule[w] for w in self.windows}

    def _first_returns(self) -> Dict[Word, int]:
        targets = set(self.windows)
        cap = shift_settings.RETURN_TIME_CAP
        returns = {}
        for start in self.windows:
            found = set()
            frontier = [start]
            t = 0
            while frontier:
                t += 1
                if t > cap:
                    raise ReturnTimeCapExceeded(f'No return to U within {cap} steps of {start}.')
                following = []
                for w in frontier:
                    for a in self.base.alphabet:
                        wa = w + (a,)
                        if not self.base.contains(wa):
                            continue
                        if wa[t:] in targets:
                            found.add(t)
                        else:
                            following.append(wa)
                frontier = following
                if len(found) > 1:
                    break
            if len(found) != 1:
                raise UnsupportedSpec(
                    f'The first return from {start} takes the values {sorted(found)}; '
                    f'use a wider window.'
                )
            returns[start] = found.pop()
        logger.debug(f'First-return times: {sorted(set(returns.values()))}')
        return returns

    def base_length(self, n: int) -> int:
        """Base words this long carry every realization of a length-n superword."""
        return max(n - 1, 0) * self.max_return + self.window

    @cached_property
    def horizon(self) -> int:
        return (self.base.max_reliable_length - self.window) // self.max_return + 1

    def superwords(self, n: int) -> Set[Word]:
        if n > self.horizon:
            raise HorizonExceeded(n, self.horizon)
        targets = set(self.windows)
        found = set()
        for x in self.base.level(self.base_length(n)):
            position, letters = 0, []
            while len(letters) < n:
                window = x[position:position + self.window]
                if window not in targets:
                    break
                letters.append(self.symbol(window))
                position += self.returns[window]
            if len(letters) == n:
                found.add(tuple(letters))
        logger.debug(f'Induced shift: {len(found)} superwords of length {n}')
        return found

    def oracle(self, horizon: int) -> LanguageOracle:
        levels: Dict[int, Set[Word]] = {}

        def membership(word: Word) -> bool:
            n = len(word)
            if n not in levels:
                levels[n] = self.superwords(n)
            return word in levels[n]

        label = self.spec.label or f'induced {self.spec.window}'
        return LanguageOracle(self.alphabet, min(horizon, self.horizon), membership, label=label)

    def realize(self, superword: Word) -> Tuple[Optional[Word], Tuple[int, ...]]:
        """
        Overlay the windows of ``superword`` at the visit times. Returns the base
        word (None when two windows disagree or leave a gap) and the visit times.
        """
        positions, position = [], 0
        for symbol in superword:
            positions.append(position)
            position += self.returns[self.letters[symbol]]
        letters: Dict[int, str] = {}
        for symbol, start in zip(superword, positions):
            for offset, a in enumerate(self.letters[symbol]):
                if letters.setdefault(start + offset, a) != a:
                    return None, tuple(positions)
        length = positions[-1] + self.window
        if len(letters) != length:
            return None, tuple(positions)
        return tuple(letters[i] for i in range(length)), tuple(positions)


def induce_recode(spec: InducedSpec, horizon: int, base: Optional[LanguageOracle] = None) -> LanguageOracle:
    return induced_recoding(spec, horizon, base).oracle(horizon)


def induced_recoding(
    spec: InducedSpec, horizon: int, base: Optional[LanguageOracle] = None
) -> InducedRecoding:
    if base is None:
        from .oracles import oracle_from_spec

        base = oracle_from_spec(spec.base, horizon)
    return InducedRecoding(spec, base)


@dataclass(frozen=True)
class GapRow:
    lower: int
    upper: int
    base_lower: int
    base_upper: int
    bound: int

    @property
    def within_bound(self) -> bool:
        return self.base_upper - self.base_lower <= self.bound


@dataclass(frozen=True)
class SpeedupReport:
    horizon: int
    base_horizon: int
    base_ls: LSReport
    induced_ls: LSReport
    max_return: int
    gap_correlation: Tuple[GapRow, ...]
    unchecked: Tuple[str, ...] = (HOMEOMORPHISM_UNCHECKED,)


def covering_length(recoding: InducedRecoding, superword: Word) -> Optional[int]:
    """
    Length of the shortest forbidden base word around the realization of a
    minimal forbidden superword that spans the inner visits.
    """
    word, positions = recoding.realize(superword)
    if word is None or len(superword) < 3:
        return None
    lo, hi = positions[1], positions[-2] + recoding.window
    found = shortest_forbidden_cover(recoding.base, word, lo, hi)
    return None if found is None else len(found)


def speedup_gap_compare(spec: InducedSpec, horizon: int, base_horizon: Optional[int] = None,
                        base: Optional[LanguageOracle] = None) -> SpeedupReport:
    if base is None:
        from .oracles import oracle_from_spec

        base = oracle_from_spec(spec.base, base_horizon or horizon)
    recoding = InducedRecoding(spec, base)
    induced = minimal_forbidden(recoding.oracle(horizon), min(horizon, recoding.horizon))
    base_table = minimal_forbidden(base, base_horizon or base.max_reliable_length)
    rows: List[GapRow] = []
    if recoding.max_return <= recoding.window:
        covered: Dict[int, int] = {}
        for length in induced.lengths():
            if length * recoding.min_return <= 2 * spec.window:
                continue
            values = [covering_length(recoding, t) for t in induced.by_length[length]]
            values = [v for v in values if v is not None]
            if values:
                covered[length] = min(values)
        lengths = sorted(covered)
        for l1, l2 in zip(lengths, lengths[1:]):
            bound = (l2 - l1 + 2) * recoding.max_return
            rows.append(GapRow(l1, l2, covered[l1], covered[l2], bound))
    else:
        logger.warning('Return times exceed the window; realizations are not determined')
    return SpeedupReport(
        horizon=induced.horizon,
        base_horizon=base_table.horizon,
        base_ls=ls_report(base_table),
        induced_ls=ls_report(induced),
        max_return=recoding.max_return,
        gap_correlation=tuple(rows),
    )
