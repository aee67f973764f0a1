"""
Descriptions of shifts and block codes.

These are plain immutable values; the modules that own each kind turn them
into graphs and oracles (see :func:`symbolic_shifts.oracles.oracle_from_spec`).
"""
import itertools
from dataclasses import dataclass, field
from typing import Callable, Dict, Mapping, Optional, Sequence, Tuple

from .exceptions import AlphabetMismatch, IncompleteBlockCode
from .words import Alphabet, Word, sort_words


@dataclass(frozen=True)
class FiniteTypeSpec:
    alphabet: Alphabet
    forbidden: Tuple[Word, ...] = ()
    label: str = ''

    def __post_init__(self):
        words = []
        for w in self.forbidden:
            w = self.alphabet.check(tuple(w))
            if not w:
                raise AlphabetMismatch('Forbidden words must be nonempty.')
            words.append(w)
        object.__setattr__(self, 'forbidden', tuple(sort_words(words, self.alphabet)))

    @property
    def memory(self) -> int:
        return max((len(w) for w in self.forbidden), default=1)

    kind = 'finite-type'


@dataclass(frozen=True)
class BlockCode:
    """
    A sliding block code of range ``radius``: ``rule`` maps every
    (2R+1)-word over ``source`` to a symbol of ``target``.
    """
    source: Alphabet
    target: Alphabet
    radius: int
    rule: Mapping[Word, str] = field(hash=False)

    def __post_init__(self):
        if self.radius < 0:
            raise IncompleteBlockCode('The range of a block code is nonnegative.')
        table = {}
        for window, image in self.rule.items():
            table[self.source.check(tuple(window))] = image
            self.target.check((image,))
        width = 2 * self.radius + 1
        missing = [w for w in self.source.words(width) if w not in table]
        if missing or any(len(w) != width for w in table):
            raise IncompleteBlockCode(
                f'Rule of range {self.radius} is undefined on {len(missing)} windows.'
            )
        object.__setattr__(self, 'rule', table)

    @classmethod
    def from_function(cls, source: Alphabet, target: Alphabet, radius: int,
                      fn: Callable[[Word], str]) -> 'BlockCode':
        return cls(source, target, radius, {w: fn(w) for w in source.words(2 * radius + 1)})

    @classmethod
    def from_letters(cls, source: Alphabet, target: Alphabet, mapping: Mapping[str, str]) -> 'BlockCode':
        return cls(source, target, 0, {(a,): mapping[a] for a in source})

    @classmethod
    def identity(cls, alphabet: Alphabet) -> 'BlockCode':
        return cls.from_letters(alphabet, alphabet, {a: a for a in alphabet})

    @property
    def width(self) -> int:
        return 2 * self.radius + 1

    def apply(self, word: Sequence[str]) -> Word:
        """Image of a finite word; it is shorter by 2R."""
        word = tuple(word)
        return tuple(self.rule[word[i:i + self.width]] for i in range(len(word) - self.width + 1))

    def apply_cyclic(self, word: Sequence[str]) -> Word:
        """Image of the periodic point word^∞, read over one period."""
        word = tuple(word)
        p, r = len(word), self.radius
        return tuple(
            self.rule[tuple(word[(i + j) % p] for j in range(-r, r + 1))] for i in range(p)
        )


@dataclass(frozen=True)
class SoficSpec:
    """
    A sofic shift, either as an explicit labeled graph (``transitions``) or as
    the image of a finite-type ``source`` under ``code``.
    """
    alphabet: Alphabet
    transitions: Tuple[Tuple[str, str, str], ...] = ()
    source: Optional[FiniteTypeSpec] = None
    code: Optional[BlockCode] = None
    label: str = ''

    kind = 'sofic'

    @property
    def is_image(self) -> bool:
        return self.source is not None


@dataclass(frozen=True)
class BetaSpec:
    """
    A β-shift, given by a β literal or directly by digits of d(1,β).

    ``period`` > 0 marks ``digits`` as eventually periodic with the last
    ``period`` digits repeating; ``finite`` marks a finite expansion.
    """
    beta: Optional[str] = None
    digits: Tuple[int, ...] = ()
    period: int = 0
    finite: bool = False
    digit_count: int = 64
    label: str = ''

    kind = 'beta'


@dataclass(frozen=True)
class Substitution:
    alphabet: Alphabet
    rules: Mapping[str, Word] = field(hash=False)
    seed: str = ''
    label: str = ''

    kind = 'substitution'

    def __post_init__(self):
        rules = {}
        for a in self.alphabet:
            if a not in self.rules:
                raise IncompleteBlockCode(f'Substitution is undefined on {a!r}.')
            image = self.alphabet.check(tuple(self.rules[a]))
            if not image:
                raise IncompleteBlockCode(f'Substitution maps {a!r} to the empty word.')
            rules[a] = image
        object.__setattr__(self, 'rules', rules)
        seed = self.seed or self.alphabet.symbols[0]
        self.alphabet.check((seed,))
        object.__setattr__(self, 'seed', seed)

    def apply(self, word: Sequence[str]) -> Word:
        return tuple(itertools.chain.from_iterable(self.rules[a] for a in word))


@dataclass(frozen=True)
class InducedSpec:
    """
    The induced system x ↦ σ^ρ(x)(x) on the clopen set U, recoded over
    (2N+1)-windows. ``returns`` maps windows to ρ; None means first return to U.
    """
    base: object
    window: int
    clopen: Tuple[Word, ...]
    returns: Optional[Mapping[Word, int]] = field(default=None, hash=False)
    label: str = ''

    kind = 'induced'

    @property
    def first_return(self) -> bool:
        return self.returns is None
