"""
Labeled graphs: the finite presentations of sofic shifts.

A :class:`LabeledGraph` wraps a :class:`networkx.MultiDiGraph` whose edges
carry a ``label`` attribute. Graphs are pruned to their essential part on
construction, so every state lies on a bi-infinite path and the label
sequences of finite paths are exactly the language of the presented shift.
"""
import logging
from collections import defaultdict
from functools import cached_property
from typing import Dict, FrozenSet, Hashable, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from .words import Alphabet, LanguageOracle, Word

logger = logging.getLogger(__name__)

Transition = Tuple[Hashable, str, Hashable]


def make_essential(graph: nx.MultiDiGraph) -> nx.MultiDiGraph:
    """Remove stranded vertices until none remain (in place)."""
    stranded = [q for q in graph if graph.in_degree(q) == 0 or graph.out_degree(q) == 0]
    while stranded:
        graph.remove_nodes_from(stranded)
        stranded = [q for q in graph if graph.in_degree(q) == 0 or graph.out_degree(q) == 0]
    return graph


class LabeledGraph:
    """
    An essential labeled graph over ``alphabet``.

    ``transitions`` are ``(state, label, state)`` triples; states may be any
    hashable value. Insertion order of the transitions fixes the state order.
    """

    def __init__(self, alphabet: Alphabet, transitions: Iterable[Transition], prune: bool = True):
        self.alphabet = alphabet
        graph = nx.MultiDiGraph()
        for u, a, v in transitions:
            alphabet.key((a,))
            if not graph.has_edge(u, v) or all(d['label'] != a for d in graph[u][v].values()):
                graph.add_edge(u, v, label=a)
        if prune:
            before = graph.number_of_nodes()
            make_essential(graph)
            if graph.number_of_nodes() != before:
                logger.debug(f'Pruned {before - graph.number_of_nodes()} stranded states')
        self.graph = graph

    def __repr__(self):
        return f'<LabeledGraph states={len(self.states)} edges={len(self.transitions)}>'

    @cached_property
    def states(self) -> Tuple[Hashable, ...]:
        return tuple(self.graph.nodes)

    @cached_property
    def all_states(self) -> FrozenSet[Hashable]:
        return frozenset(self.graph.nodes)

    @cached_property
    def transitions(self) -> Tuple[Transition, ...]:
        return tuple((u, a, v) for u, v, a in self.graph.edges(data='label'))

    @cached_property
    def delta(self) -> Dict[Tuple[Hashable, str], FrozenSet[Hashable]]:
        table = defaultdict(set)
        for u, a, v in self.transitions:
            table[(u, a)].add(v)
        return {k: frozenset(v) for k, v in table.items()}

    @property
    def is_empty(self) -> bool:
        return self.graph.number_of_nodes() == 0

    @cached_property
    def is_deterministic(self) -> bool:
        return all(len(targets) == 1 for targets in self.delta.values())

    def labels(self) -> List[str]:
        used = {a for _, a, _ in self.transitions}
        return [a for a in self.alphabet if a in used]

    def step(self, states: Iterable[Hashable], a: str) -> FrozenSet[Hashable]:
        out = set()
        for q in states:
            out.update(self.delta.get((q, a), ()))
        return frozenset(out)

    def follow(self, word: Sequence[str], start: Optional[Iterable[Hashable]] = None) -> FrozenSet[Hashable]:
        """Follower set: states reached reading ``word`` from ``start`` (default: all states)."""
        states = self.all_states if start is None else frozenset(start)
        for a in word:
            if not states:
                break
            states = self.step(states, a)
        return states

    def accepts(self, word: Sequence[str]) -> bool:
        return bool(self.follow(word))

    def adjacency(self, dtype=np.int64) -> np.ndarray:
        index = {q: i for i, q in enumerate(self.states)}
        matrix = np.zeros((len(index), len(index)), dtype=dtype)
        for u, _, v in self.transitions:
            matrix[index[u], index[v]] += 1
        return matrix

    def relabel_states(self) -> 'LabeledGraph':
        """Same graph with states renamed 0, 1, ... in breadth-first order."""
        names: Dict[Hashable, int] = {}
        for root in self.states:
            if root in names:
                continue
            names[root] = len(names)
            for _, v in nx.bfs_edges(self.graph, root):
                if v not in names:
                    names[v] = len(names)
        return LabeledGraph(
            self.alphabet, [(names[u], a, names[v]) for u, a, v in self.transitions], prune=False
        )

    def language_oracle(self, horizon: int, label: str = '') -> LanguageOracle:
        return LanguageOracle(self.alphabet, horizon, self.accepts, presentation=self, label=label)


def compare_languages(g1: LabeledGraph, g2: LabeledGraph, n: Optional[int] = None) -> Optional[Word]:
    """
    Search the product of follower sets for a word accepted by exactly one graph.

    Returns a shortest distinguishing word of length at most ``n`` (unbounded when
    ``n`` is None), or None when the languages agree on that range.
    """
    start = (g1.all_states, g2.all_states)
    if bool(start[0]) != bool(start[1]):
        return ()
    labels = [a for a in g1.alphabet.union(g2.alphabet)]
    seen = {start}
    frontier: List[Tuple[Tuple[FrozenSet, FrozenSet], Word]] = [(start, ())]
    depth = 0
    while frontier and (n is None or depth < n):
        depth += 1
        following = []
        for (s1, s2), word in frontier:
            for a in labels:
                t1 = g1.step(s1, a) if a in g1.alphabet else frozenset()
                t2 = g2.step(s2, a) if a in g2.alphabet else frozenset()
                if bool(t1) != bool(t2):
                    return word + (a,)
                if t1 and (t1, t2) not in seen:
                    seen.add((t1, t2))
                    following.append(((t1, t2), word + (a,)))
        frontier = following
    return None
