"""
Shifts of finite type: block graphs, languages, entropy and periodic points.
"""
import logging
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Tuple

import networkx as nx
import numpy as np

from .exceptions import AlphabetMismatch, EnumerationCapExceeded, UndefinedEntropy
from .labeled import LabeledGraph, compare_languages, make_essential
from .settings import shift_settings
from .specs import FiniteTypeSpec
from .words import Alphabet, LanguageOracle, Word, minimal_period, sort_words

logger = logging.getLogger(__name__)


class BlockGraph:
    """
    Higher-block presentation of an SFT: vertices are allowed (f−1)-words
    (the single vertex ``()`` when f = 1) and the edge ``(u, a, v)`` stands for
    the allowed f-word ``ua``.
    """

    def __init__(self, alphabet: Alphabet, memory: int, graph: nx.MultiDiGraph, label: str = ''):
        self.alphabet = alphabet
        self.memory = memory
        self.graph = graph
        self.label = label

    def __repr__(self):
        return f'<BlockGraph memory={self.memory} vertices={len(self.vertices)}>'

    @cached_property
    def vertices(self) -> Tuple[Word, ...]:
        return tuple(sorted(self.graph.nodes, key=self.alphabet.key))

    @cached_property
    def edges(self) -> Tuple[Tuple[Word, str, Word], ...]:
        edges = [(u, a, v) for u, v, a in self.graph.edges(data='label')]
        return tuple(sorted(edges, key=lambda e: (self.alphabet.key(e[0]), self.alphabet.key(e[1]))))

    @property
    def is_empty(self) -> bool:
        return self.graph.number_of_nodes() == 0

    def adjacency(self, dtype=object) -> np.ndarray:
        index = {q: i for i, q in enumerate(self.vertices)}
        matrix = np.zeros((len(index), len(index)), dtype=dtype)
        for u, _, v in self.edges:
            matrix[index[u], index[v]] += 1
        return matrix

    def subgraph(self, vertices) -> 'BlockGraph':
        graph = nx.MultiDiGraph(self.graph.subgraph(vertices))
        return BlockGraph(self.alphabet, self.memory, make_essential(graph), self.label)

    def labeled(self) -> LabeledGraph:
        return LabeledGraph(self.alphabet, self.edges, prune=False)


def _clean(word: Word, forbidden: set, longest: int) -> bool:
    """True when no suffix of ``word`` is forbidden."""
    return not any(word[len(word) - k:] in forbidden for k in range(1, min(longest, len(word)) + 1))


def build_block_graph(spec: FiniteTypeSpec) -> BlockGraph:
    f = spec.memory
    forbidden = set(spec.forbidden)
    vertices: List[Word] = [()]
    for _ in range(f - 1):
        vertices = [w + (a,) for w in vertices for a in spec.alphabet if _clean(w + (a,), forbidden, f)]
    graph = nx.MultiDiGraph()
    graph.add_nodes_from(vertices)
    for u in vertices:
        for a in spec.alphabet:
            ua = u + (a,)
            if _clean(ua, forbidden, f):
                graph.add_edge(u, ua[1:] if f > 1 else (), label=a)
    make_essential(graph)
    if graph.number_of_nodes() == 0:
        logger.info(f'{spec.label or "spec"}: the shift is empty')
    return BlockGraph(spec.alphabet, f, graph, spec.label)


def forbidden_automaton(spec: FiniteTypeSpec) -> LabeledGraph:
    """
    Deterministic presentation whose states are the proper prefixes of the
    forbidden words; the state records the longest such suffix of the input.
    """
    forbidden = set(spec.forbidden)
    prefixes = {w[:k] for w in spec.forbidden for k in range(len(w))}
    longest = spec.memory

    def advance(state: Word, a: str) -> Optional[Word]:
        text = state + (a,)
        if not _clean(text, forbidden, longest):
            return None
        for k in range(len(text), -1, -1):
            if text[len(text) - k:] in prefixes:
                return text[len(text) - k:]
        return ()

    transitions = []
    seen = {()}
    queue = [()]
    while queue:
        state = queue.pop(0)
        for a in spec.alphabet:
            target = advance(state, a)
            if target is None:
                continue
            transitions.append((state, a, target))
            if target not in seen:
                seen.add(target)
                queue.append(target)
    return LabeledGraph(spec.alphabet, transitions)


def sft_oracle(spec: FiniteTypeSpec, horizon: int) -> LanguageOracle:
    return forbidden_automaton(spec).language_oracle(horizon, label=spec.label)


def sft_language(graph: BlockGraph, n: int) -> List[Word]:
    if graph.is_empty:
        return []
    return list(graph.labeled().language_oracle(n).level(n))


def sft_count(graph: BlockGraph, n: int) -> int:
    """Number of allowed n-words, as the entry sum of a power of the adjacency matrix."""
    if graph.is_empty:
        return 0
    steps = n - graph.memory + 1
    if steps < 0:
        return len(sft_language(graph, n))
    return int(np.linalg.matrix_power(graph.adjacency(), steps).sum())


@dataclass(frozen=True)
class PerronData:
    root: float
    lower: float
    upper: float
    vector: np.ndarray


def perron_data(matrix: np.ndarray) -> PerronData:
    """
    Perron root and right vector of an irreducible nonnegative matrix.

    Power iteration runs on A + I, which is primitive; the Collatz-Wielandt
    quotients bracket the root at every step.
    """
    size = matrix.shape[0]
    shifted = np.asarray(matrix, dtype=float) + np.eye(size)
    x = np.ones(size)
    tolerance = shift_settings.PERRON_TOLERANCE
    lower, upper = 0.0, math.inf
    for iteration in range(shift_settings.PERRON_MAX_ITERATIONS):
        y = shifted @ x
        ratios = y / x
        lower, upper = max(lower, ratios.min()), min(upper, ratios.max())
        x = y / y.max()
        if upper - lower < tolerance * max(1.0, upper):
            break
    else:
        logger.warning(f'Perron iteration stopped with bracket [{lower}, {upper}]')
    return PerronData(root=(lower + upper) / 2 - 1, lower=lower - 1, upper=upper - 1, vector=x / x.sum())


def _cyclic_components(graph: nx.MultiDiGraph) -> List[set]:
    components = []
    for component in nx.strongly_connected_components(graph):
        q = next(iter(component))
        if len(component) > 1 or graph.has_edge(q, q):
            components.append(component)
    return components


def component_roots(graph: BlockGraph) -> List[Tuple[set, PerronData]]:
    found = []
    for component in _cyclic_components(graph.graph):
        sub = graph.subgraph(component)
        found.append((component, perron_data(sub.adjacency(dtype=float))))
    return sorted(found, key=lambda item: min(graph.alphabet.key(v) for v in item[0]))


def sft_entropy(graph: BlockGraph) -> float:
    if graph.is_empty:
        raise UndefinedEntropy()
    return math.log(max(data.root for _, data in component_roots(graph)))


def per_count(graph: BlockGraph, p: int) -> int:
    if graph.is_empty:
        return 0
    return int(np.trace(np.linalg.matrix_power(graph.adjacency(), p)))


@dataclass(frozen=True)
class PeriodicPointSet:
    period: int
    points: Tuple[Tuple[Word, int], ...]

    def __len__(self):
        return len(self.points)

    @property
    def words(self) -> List[Word]:
        return [w for w, _ in self.points]


def closed_label_paths(graph: LabeledGraph, p: int, alphabet: Alphabet) -> List[Word]:
    """Label words of the closed paths of length p (with starting state)."""
    if graph.is_empty:
        return []
    index = {q: i for i, q in enumerate(graph.states)}
    step = graph.adjacency() > 0
    reach = [np.eye(len(index), dtype=bool)]
    for _ in range(p):
        reach.append((step.astype(int) @ reach[-1].astype(int)) > 0)
    successors: Dict[object, List[Tuple[str, object]]] = {q: [] for q in graph.states}
    for u, a, v in graph.transitions:
        successors[u].append((a, v))
    words = []
    for start in graph.states:
        target = index[start]
        stack = [(start, ())]
        while stack:
            q, word = stack.pop()
            if len(word) == p:
                if q == start:
                    words.append(word)
                continue
            remaining = p - len(word) - 1
            for a, v in successors[q]:
                if reach[remaining][index[v], target]:
                    stack.append((v, word + (a,)))
    return sorted(words, key=alphabet.key)


def per_enumerate(graph: BlockGraph, p: int) -> PeriodicPointSet:
    count = per_count(graph, p)
    cap = shift_settings.ENUMERATION_CAP
    if count > cap:
        raise EnumerationCapExceeded(count, cap)
    words = closed_label_paths(graph.labeled(), p, graph.alphabet)
    return PeriodicPointSet(p, tuple((w, minimal_period(w)) for w in words))


def sft_cover(oracle: LanguageOracle, n: int) -> FiniteTypeSpec:
    from .forbidden import minimal_forbidden

    table = minimal_forbidden(oracle, n)
    return FiniteTypeSpec(oracle.alphabet, tuple(table.words()), label=f'cover {n}')


def sft_equal(g1: BlockGraph, g2: BlockGraph) -> bool:
    if set(g1.alphabet) != set(g2.alphabet):
        raise AlphabetMismatch()
    if g1.is_empty or g2.is_empty:
        return g1.is_empty and g2.is_empty
    return compare_languages(g1.labeled(), g2.labeled(), g1.memory + g2.memory) is None


def scc_max_entropy_components(graph: BlockGraph) -> List[BlockGraph]:
    roots = component_roots(graph)
    if not roots:
        return []
    best = max(data.root for _, data in roots)
    tie = shift_settings.ENTROPY_TIE_TOLERANCE
    return [graph.subgraph(c) for c, data in roots if data.root >= best * (1 - tie)]


def brute_force_equal(g1: BlockGraph, g2: BlockGraph, n: int) -> bool:
    """Direct comparison of the enumerated languages up to length n."""
    return all(sft_language(g1, k) == sft_language(g2, k) for k in range(1, n + 1))
