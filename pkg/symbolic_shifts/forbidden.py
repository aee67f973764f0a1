"""
Minimal forbidden words and the diagnostics built on them.

Everything here needs only membership queries, so any oracle (finite type,
sofic, β, substitution or induced) gets the same treatment. Oracles that carry
a presentation are searched through follower sets, which skips the words
whose left extensions cannot create new minimal forbidden words.
"""
import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

from .exceptions import InfeasibleLengths
from .graphs import sft_oracle
from .specs import FiniteTypeSpec
from .words import Alphabet, LanguageOracle, Word, sort_words

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MFWTable:
    alphabet: Alphabet
    horizon: int
    by_length: Dict[int, Tuple[Word, ...]] = field(hash=False)

    def lengths(self) -> List[int]:
        return sorted(n for n, words in self.by_length.items() if words)

    def words(self) -> Iterator[Word]:
        for n in self.lengths():
            yield from self.by_length[n]

    def up_to(self, n: int) -> 'MFWTable':
        return MFWTable(self.alphabet, min(n, self.horizon),
                        {k: v for k, v in self.by_length.items() if k <= n})


@dataclass(frozen=True)
class LSReport:
    horizon: int
    ls_set: Tuple[int, ...]
    max_gap: int
    window_densities: Dict[int, float] = field(hash=False)


def _letters_forbidden(oracle: LanguageOracle) -> List[Word]:
    return [(a,) for a in oracle.alphabet if not oracle.contains((a,))]


def _generic_search(oracle: LanguageOracle, N: int) -> Dict[int, List[Word]]:
    found: Dict[int, List[Word]] = {}
    for n in range(2, N + 1):
        shorter = set(oracle.level(n - 1))
        words = []
        for w in oracle.level(n - 2):
            lefts = [a for a in oracle.alphabet if (a,) + w in shorter]
            rights = [b for b in oracle.alphabet if w + (b,) in shorter]
            for a in lefts:
                for b in rights:
                    if not oracle.contains((a,) + w + (b,)):
                        words.append((a,) + w + (b,))
        found[n] = words
    return found


def _follower_search(oracle: LanguageOracle, N: int) -> Dict[int, List[Word]]:
    graph = oracle.presentation
    letters = list(oracle.alphabet)
    starts = {a: graph.step(graph.all_states, a) for a in letters}
    found: Dict[int, List[Word]] = {n: [] for n in range(2, N + 1)}
    # (w, T(w), {a: T(aw)})
    frontier: List[Tuple[Word, FrozenSet, Dict[str, FrozenSet]]] = [
        ((), graph.all_states, {a: s for a, s in starts.items() if s})
    ]
    for length in range(0, N - 1):
        following = []
        for w, states, lefts in frontier:
            for b in letters:
                after = graph.step(states, b)
                if not after:
                    continue
                for a, left_states in lefts.items():
                    if not graph.step(left_states, b):
                        found[length + 2].append((a,) + w + (b,))
            if length + 3 > N:
                continue
            for c in letters:
                after = graph.step(states, c)
                if not after:
                    continue
                extended = {a: graph.step(s, c) for a, s in lefts.items()}
                extended = {a: s for a, s in extended.items() if s}
                if all(s == after for s in extended.values()):
                    continue
                following.append((w + (c,), after, extended))
        frontier = following
        logger.debug(f'{oracle.label or "oracle"}: {len(frontier)} live words of length {length + 1}')
    return found


def minimal_forbidden(oracle: LanguageOracle, N: int) -> MFWTable:
    oracle.check_horizon(N)
    by_length: Dict[int, Tuple[Word, ...]] = {}
    if N >= 1:
        by_length[1] = tuple(_letters_forbidden(oracle))
    if N >= 2:
        if oracle.presentation is not None:
            found = _follower_search(oracle, N)
        else:
            found = _generic_search(oracle, N)
        for n, words in found.items():
            by_length[n] = tuple(sort_words(words, oracle.alphabet))
    by_length = {n: words for n, words in by_length.items() if words}
    return MFWTable(oracle.alphabet, N, by_length)


def uniform_density(lengths: Sequence[int], horizon: int, k: int) -> Tuple[float, float]:
    """Lower and upper densities of ``lengths`` over windows [n+1, n+k], 1 ≤ n, n+k ≤ horizon."""
    members = set(lengths)
    counts = [
        sum(1 for m in range(n + 1, n + k + 1) if m in members)
        for n in range(1, horizon - k + 1)
    ]
    if not counts:
        return 0.0, 0.0
    return min(counts) / k, max(counts) / k


def max_gap(lengths: Sequence[int], horizon: int) -> int:
    members, best, run = set(lengths), 0, 0
    for n in range(1, horizon + 1):
        run = 0 if n in members else run + 1
        best = max(best, run)
    return best


def ls_report(table: MFWTable) -> LSReport:
    ls_set = tuple(table.lengths())
    densities = {
        k: uniform_density(ls_set, table.horizon, k)[0]
        for k in range(1, table.horizon // 2 + 1)
    }
    return LSReport(table.horizon, ls_set, max_gap(ls_set, table.horizon), densities)


def cover_stabilizes(table: MFWTable, n: int, k: int) -> bool:
    """X_n = X_{n+k} exactly when no minimal forbidden word has length in (n, n+k]."""
    return not any(n < m <= n + k for m in table.lengths())


def well_approx_check(oracle: LanguageOracle, alpha: Callable[[int], int], N: int) -> List[int]:
    table = minimal_forbidden(oracle, N)
    return [n for n in range(1, N + 1) if n + alpha(n) <= N and cover_stabilizes(table, n, alpha(n))]


def reconstruct_language(table: MFWTable, n: int) -> List[Word]:
    """Length-n words avoiding every word of the table."""
    spec = FiniteTypeSpec(table.alphabet, tuple(table.words()))
    return list(sft_oracle(spec, n).level(n))


def useful_witness(oracle: LanguageOracle, u: Word, v: Word, s: Word) -> Optional[Word]:
    """
    For uv and vs allowed and uvs forbidden, the shortest forbidden subword of
    uvs containing the middle copy of v; it is minimal forbidden and no shorter
    than v. Returns None when the hypotheses fail.
    """
    word = u + v + s
    if not oracle.contains(u + v) or not oracle.contains(v + s) or oracle.contains(word):
        return None
    return shortest_forbidden_cover(oracle, word, len(u), len(u) + len(v))


def shortest_forbidden_cover(oracle: LanguageOracle, word: Word, lo: int, hi: int) -> Optional[Word]:
    """Shortest forbidden word[i:j] with i ≤ lo and j ≥ hi."""
    best = None
    for i in range(lo, -1, -1):
        for j in range(hi, len(word) + 1):
            if best is not None and j - i >= len(best):
                break
            if not oracle.contains(word[i:j]):
                best = word[i:j]
                break
    return best


def tau_eval(n: int) -> int:
    return 2 * n + (1 + n ** n) * n ** (4 * n + 1)


def example_nonempty_shift(lengths: Sequence[int]) -> FiniteTypeSpec:
    """
    Shift on {0, 1, 2} whose minimal forbidden words have exactly the given
    lengths: ℓ = n + 2 is carried by 01^n0 for even n and by 02^n0 for odd n.
    """
    lengths = sorted(set(int(n) for n in lengths))
    if any(n < 3 for n in lengths):
        raise InfeasibleLengths()
    alphabet = Alphabet(('0', '1', '2'))
    forbidden = []
    for length in lengths:
        n = length - 2
        inner = '1' if n % 2 == 0 else '2'
        forbidden.append(('0',) + (inner,) * n + ('0',))
    label = 'example ' + ','.join(str(n) for n in lengths) if lengths else 'example full'
    return FiniteTypeSpec(alphabet, tuple(forbidden), label=label)


def bispecial_core(table: MFWTable) -> List[Word]:
    """Middles u of the minimal forbidden words aub with |aub| ≥ 3."""
    return [w[1:-1] for w in table.words() if len(w) >= 3]

