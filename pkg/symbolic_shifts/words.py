"""
Alphabets, words, the prefix-first lexicographic order and language oracles.

A word is a tuple of symbols. Symbols are opaque strings ordered by their
position in the :class:`Alphabet`, so multi-character symbols (the recoded
superalphabets of induced shifts, for instance) behave like any other letter.
"""
import enum
import itertools
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .exceptions import AlphabetMismatch, EnumerationCapExceeded, HorizonExceeded
from .settings import shift_settings

logger = logging.getLogger(__name__)

Word = Tuple[str, ...]
EMPTY: Word = ()


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class Alphabet:
    symbols: Tuple[str, ...]

    def __post_init__(self):
        symbols = tuple(str(s) for s in self.symbols)
        if not symbols:
            raise AlphabetMismatch('An alphabet needs at least one symbol.')
        if len(set(symbols)) != len(symbols):
            raise AlphabetMismatch(f'Duplicate symbols in alphabet {symbols}.')
        object.__setattr__(self, 'symbols', symbols)

    @classmethod
    def of(cls, symbols: Iterable) -> 'Alphabet':
        return cls(tuple(symbols))

    @cached_property
    def index(self) -> Dict[str, int]:
        return {s: i for i, s in enumerate(self.symbols)}

    @cached_property
    def single_character(self) -> bool:
        return all(len(s) == 1 for s in self.symbols)

    def __len__(self):
        return len(self.symbols)

    def __iter__(self) -> Iterator[str]:
        return iter(self.symbols)

    def __contains__(self, symbol) -> bool:
        return symbol in self.index

    def key(self, word: Sequence[str]) -> Tuple[int, ...]:
        """Index tuple of ``word``; tuple comparison of keys is the prefix-first order."""
        try:
            return tuple(self.index[s] for s in word)
        except KeyError as exc:
            raise AlphabetMismatch(f'Symbol {exc.args[0]!r} is not in {self.symbols}.')

    def check(self, word: Sequence[str]) -> Word:
        self.key(word)
        return tuple(word)

    def words(self, n: int) -> Iterator[Word]:
        """All words of length ``n`` in lexicographic order."""
        return itertools.product(self.symbols, repeat=n)

    def parse(self, text) -> Word:
        if isinstance(text, (list, tuple)):
            return self.check(tuple(str(s) for s in text))
        text = str(text).strip()
        if self.single_character:
            return self.check(tuple(text.replace(' ', '').replace(',', '')))
        return self.check(tuple(t for t in text.replace(',', ' ').split() if t))

    def render(self, word: Sequence[str]) -> str:
        return ''.join(word) if self.single_character else ' '.join(word)

    def union(self, other: 'Alphabet') -> 'Alphabet':
        extra = [s for s in other.symbols if s not in self.index]
        return Alphabet(self.symbols + tuple(extra))


def lex_compare(u: Sequence[str], v: Sequence[str], alphabet: Alphabet) -> Ordering:
    ku, kv = alphabet.key(u), alphabet.key(v)
    if ku < kv:
        return Ordering.LESS
    if ku > kv:
        return Ordering.GREATER
    return Ordering.EQUAL


def sort_words(words: Iterable[Word], alphabet: Alphabet) -> List[Word]:
    return sorted(set(words), key=alphabet.key)


def subwords(word: Word, n: int) -> Iterator[Word]:
    for i in range(len(word) - n + 1):
        yield word[i:i + n]


def is_subword(u: Word, w: Word) -> bool:
    n = len(u)
    return any(w[i:i + n] == u for i in range(len(w) - n + 1))


def minimal_period(word: Word) -> int:
    """Smallest d dividing |word| with word equal to a power of word[:d]."""
    p = len(word)
    for d in range(1, p + 1):
        if p % d == 0 and word[:d] * (p // d) == word:
            return d
    return p


@dataclass(frozen=True)
class SpecialReport:
    length: int
    left_special: Tuple[Word, ...]
    right_special: Tuple[Word, ...]
    bispecial: Tuple[Word, ...]


@dataclass(frozen=True, eq=False)
class LanguageOracle:
    """
    Membership for the language of a shift, exact for words up to
    ``max_reliable_length``.

    When a ``presentation`` (an essential labeled graph) is attached, level
    enumeration tracks follower sets instead of re-testing every extension.
    """
    alphabet: Alphabet
    max_reliable_length: int
    membership: Callable[[Word], bool]
    presentation: Optional[object] = None
    label: str = ''
    _levels: Dict[int, List[Word]] = field(default_factory=dict, repr=False)

    def check_horizon(self, n: int) -> None:
        if n > self.max_reliable_length:
            raise HorizonExceeded(n, self.max_reliable_length)

    def contains(self, word: Sequence[str]) -> bool:
        word = tuple(word)
        self.check_horizon(len(word))
        self.alphabet.key(word)
        if not word:
            return True
        return bool(self.membership(word))

    __contains__ = contains

    def with_horizon(self, horizon: int) -> 'LanguageOracle':
        return LanguageOracle(
            self.alphabet, min(horizon, self.max_reliable_length), self.membership,
            self.presentation, self.label,
        )

    def level(self, n: int) -> List[Word]:
        self.check_horizon(n)
        if n in self._levels:
            return self._levels[n]
        if self.presentation is not None:
            words = [w for w, _ in self._graph_level(n)]
        else:
            words = self._extension_level(n)
        self._levels[n] = words
        return words

    def _extension_level(self, n: int) -> List[Word]:
        if n == 0:
            return [EMPTY]
        previous = self.level(n - 1)
        cap = shift_settings.ENUMERATION_CAP
        words = []
        for w in previous:
            for a in self.alphabet:
                wa = w + (a,)
                if self.membership(wa):
                    words.append(wa)
            if len(words) > cap:
                raise EnumerationCapExceeded(len(words), cap)
        logger.debug(f'{self.label or "oracle"}: {len(words)} words of length {n}')
        return words

    def _graph_level(self, n: int) -> List[Tuple[Word, frozenset]]:
        graph = self.presentation
        cache = self.__dict__.setdefault('_graph_levels', {0: [(EMPTY, graph.all_states)]})
        start = max(k for k in cache if k <= n)
        cap = shift_settings.ENUMERATION_CAP
        for m in range(start + 1, n + 1):
            level = []
            for w, states in cache[m - 1]:
                for a in self.alphabet:
                    nxt = graph.step(states, a)
                    if nxt:
                        level.append((w + (a,), nxt))
            if len(level) > cap:
                raise EnumerationCapExceeded(len(level), cap)
            cache[m] = level
            logger.debug(f'{self.label or "oracle"}: {len(level)} words of length {m}')
        return cache[n]


def enumerate_language(oracle: LanguageOracle, n: int) -> List[Word]:
    return list(oracle.level(n))


def complexity(oracle: LanguageOracle, n: int) -> int:
    return len(oracle.level(n))


def right_extensions(oracle: LanguageOracle, word: Word) -> List[str]:
    return [a for a in oracle.alphabet if oracle.contains(word + (a,))]


def left_extensions(oracle: LanguageOracle, word: Word) -> List[str]:
    return [a for a in oracle.alphabet if oracle.contains((a,) + word)]


def special_words(oracle: LanguageOracle, n: int) -> SpecialReport:
    oracle.check_horizon(n + 1)
    longer = set(oracle.level(n + 1))
    right, left = [], []
    for w in oracle.level(n):
        if sum(1 for a in oracle.alphabet if w + (a,) in longer) >= 2:
            right.append(w)
        if sum(1 for a in oracle.alphabet if (a,) + w in longer) >= 2:
            left.append(w)
    both = set(left) & set(right)
    return SpecialReport(
        length=n,
        left_special=tuple(left),
        right_special=tuple(right),
        bispecial=tuple(w for w in right if w in both),
    )
