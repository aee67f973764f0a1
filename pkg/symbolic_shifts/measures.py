"""
Measures known through their cylinder values: periodic-point measures ν_n,
Parry measures, pushforwards under block codes and maximal-entropy averages.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, List, Sequence, Tuple, Union

import networkx as nx
import numpy as np
from sympy import mobius

from .exceptions import (
    CutoffTooSmall, DepthExceeded, EmptySupport, EnumerationCapExceeded, NotAnAutomorphism,
    ReducibleGraph, UndefinedEntropy,
)
from .graphs import BlockGraph, build_block_graph, per_count, per_enumerate, perron_data
from .labeled import LabeledGraph
from .settings import shift_settings
from .sofic import apply_block_code, periodic_points_up_to, same_shift, sofic_entropy, sofic_per_enumerate
from .specs import BlockCode, SoficSpec
from .words import Alphabet, Word, minimal_period

logger = logging.getLogger(__name__)


def cylinder_words(alphabet: Alphabet, depth: int) -> Iterator[Word]:
    for m in range(1, depth + 1):
        yield from alphabet.words(m)


@dataclass(frozen=True)
class CylinderMeasure:
    alphabet: Alphabet
    depth: int
    values: Dict[Word, float] = field(hash=False)

    def cylinder(self, word: Sequence[str]) -> float:
        word = tuple(word)
        self.alphabet.key(word)
        if len(word) > self.depth:
            raise DepthExceeded()
        if not word:
            return 1.0
        return self.values.get(word, 0.0)

    @classmethod
    def tabulate(cls, measure, depth: int) -> 'CylinderMeasure':
        values = {w: float(measure.cylinder(w)) for w in cylinder_words(measure.alphabet, depth)}
        return cls(measure.alphabet, depth, {w: v for w, v in values.items() if v})


@dataclass(frozen=True)
class PeriodicSupportMeasure:
    """Finitely many periodic points, each given by its word over one minimal period."""
    alphabet: Alphabet
    support: Tuple[Tuple[Word, int, Fraction], ...]

    def cylinder(self, word: Sequence[str]) -> Fraction:
        word = tuple(word)
        self.alphabet.key(word)
        total = Fraction(0)
        for point, period, weight in self.support:
            repeated = point * (len(word) // period + 1)
            if repeated[:len(word)] == word:
                total += weight
        return total

    @property
    def total(self) -> Fraction:
        return sum((weight for _, _, weight in self.support), Fraction(0))


@dataclass(frozen=True, eq=False)
class ParryMeasure:
    """
    The Markov chain of maximal entropy on an irreducible block graph: an
    edge u → v is taken with probability r_v / (λ r_u).
    """
    graph: BlockGraph
    lam: float
    stationary: np.ndarray
    right: np.ndarray

    @property
    def alphabet(self) -> Alphabet:
        return self.graph.alphabet

    @property
    def index(self) -> Dict[Word, int]:
        return {q: i for i, q in enumerate(self.graph.vertices)}

    @property
    def transition(self) -> np.ndarray:
        index = self.index
        matrix = np.zeros((len(index), len(index)))
        for u, _, v in self.graph.edges:
            i, j = index[u], index[v]
            matrix[i, j] += self.right[j] / (self.lam * self.right[i])
        return matrix

    def cylinder(self, word: Sequence[str]) -> float:
        word = tuple(word)
        self.alphabet.key(word)
        index = self.index
        step = {(u, a): v for u, a, v in self.graph.edges}
        total = 0.0
        for u in self.graph.vertices:
            mass, q = self.stationary[index[u]], u
            for a in word:
                v = step.get((q, a))
                if v is None:
                    mass = 0.0
                    break
                mass *= self.right[index[v]] / (self.lam * self.right[index[q]])
                q = v
            total += mass
        return float(total)

    def entropy(self) -> float:
        # per edge; parallel edges share a matrix entry
        index = self.index
        h = 0.0
        for u, _, v in self.graph.edges:
            i, j = index[u], index[v]
            p = self.right[j] / (self.lam * self.right[i])
            h -= float(self.stationary[i] * p * np.log(p))
        return h if h > 0 else 0.0


def parry_measure(graph: BlockGraph) -> ParryMeasure:
    if graph.is_empty:
        raise UndefinedEntropy()
    if not nx.is_strongly_connected(graph.graph):
        raise ReducibleGraph()
    A = graph.adjacency(dtype=float)
    right = perron_data(A)
    left = perron_data(A.T)
    stationary = left.vector * right.vector
    return ParryMeasure(graph, right.root, stationary / stationary.sum(), right.vector)


Source = Union[BlockGraph, LabeledGraph]


def _points_of_minimal_period(source: Source, p: int) -> List[Word]:
    if isinstance(source, BlockGraph):
        return [w for w, d in per_enumerate(source, p).points if d == p]
    return [w for w, d in sofic_per_enumerate(source, p).points if d == p]


def nu_measure(source: Source, n: int) -> PeriodicSupportMeasure:
    """Uniform measure on the points of minimal period at most n."""
    if isinstance(source, BlockGraph):
        count = sum(per_count(source, p) for p in range(1, n + 1))
        cap = shift_settings.ENUMERATION_CAP
        if count > cap:
            raise EnumerationCapExceeded(count, cap)
    points = []
    for p in range(1, n + 1):
        points.extend((w, p) for w in _points_of_minimal_period(source, p))
    if not points:
        raise EmptySupport()
    weight = Fraction(1, len(points))
    logger.debug(f'ν_{n}: {len(points)} periodic points')
    return PeriodicSupportMeasure(source.alphabet, tuple((w, p, weight) for w, p in points))


def nu_cylinder_measure(graph: BlockGraph, n: int, depth: int) -> CylinderMeasure:
    """
    ν_n on cylinders up to ``depth``, counted exactly with traces of
    label-restricted adjacency products and Möbius inversion over periods.
    """
    if graph.is_empty:
        raise EmptySupport()
    index = {q: i for i, q in enumerate(graph.vertices)}
    size = len(index)
    by_label = {a: np.zeros((size, size), dtype=object) for a in graph.alphabet}
    for u, a, v in graph.edges:
        by_label[a][index[u], index[v]] += 1
    A = graph.adjacency()
    powers = [np.identity(size, dtype=object)]
    for _ in range(n):
        powers.append(powers[-1].dot(A))

    def period_count(word: Word, d: int) -> int:
        """Points x with σ^d x = x and x starting with word."""
        if d < len(word):
            if any(word[i] != word[i - d] for i in range(d, len(word))):
                return 0
            word = word[:d]
        product = np.identity(size, dtype=object)
        for a in word:
            product = product.dot(by_label[a])
        return int(np.trace(product.dot(powers[d - len(word)])))

    def minimal_count(word: Word) -> int:
        total = 0
        for p in range(1, n + 1):
            total += sum(int(mobius(p // d)) * period_count(word, d) for d in range(1, p + 1) if p % d == 0)
        return total

    points = minimal_count(())
    if points == 0:
        raise EmptySupport()
    values = {}
    for word in cylinder_words(graph.alphabet, depth):
        count = minimal_count(word)
        if count:
            values[word] = float(Fraction(count, points))
    return CylinderMeasure(graph.alphabet, depth, values)


def eval_cylinder(measure, word: Sequence[str]) -> float:
    return float(measure.cylinder(tuple(word)))


def weak_star_distance(m1, m2, depth: int) -> float:
    for m in (m1, m2):
        if isinstance(m, CylinderMeasure) and m.depth < depth:
            raise DepthExceeded()
    alphabet = m1.alphabet.union(m2.alphabet)
    best = 0
    for word in cylinder_words(alphabet, depth):
        values = []
        for m in (m1, m2):
            values.append(m.cylinder(word) if all(a in m.alphabet for a in word) else 0)
        best = max(best, abs(values[0] - values[1]))
    return float(best)


def pushforward(measure: PeriodicSupportMeasure, code: BlockCode) -> PeriodicSupportMeasure:
    merged: Dict[Word, Fraction] = {}
    for point, _, weight in measure.support:
        image = code.apply_cyclic(point)
        image = image[:minimal_period(image)]
        merged[image] = merged.get(image, Fraction(0)) + weight
    support = tuple((w, len(w), merged[w]) for w in sorted(merged, key=code.target.key))
    return PeriodicSupportMeasure(code.target, support)


@dataclass(frozen=True, eq=False)
class MaxEntropyComponent:
    source: BlockGraph
    graph: LabeledGraph
    entropy: float
    measure: CylinderMeasure


def _pushforward_parry(parry: ParryMeasure, code: BlockCode, depth: int) -> CylinderMeasure:
    length = depth + 2 * code.radius
    values: Dict[Word, float] = {}
    for u in parry.graph.labeled().language_oracle(length).level(length):
        mass = parry.cylinder(u)
        if not mass:
            continue
        image = code.apply(u)
        for k in range(1, depth + 1):
            values[image[:k]] = values.get(image[:k], 0.0) + mass
    return CylinderMeasure(code.target, depth, values)


def max_entropy_decomposition(spec: SoficSpec, depth: int) -> List[MaxEntropyComponent]:
    """
    Images of the transitive pieces of the source SFT that carry the full
    entropy of the image, each with the pushforward of its Parry measure.
    """
    X = build_block_graph(spec.source)
    if X.is_empty:
        raise UndefinedEntropy()
    candidates = []
    for component in nx.strongly_connected_components(X.graph):
        piece = X.subgraph(component)
        if piece.is_empty:
            continue
        image = apply_block_code(piece, spec.code)
        candidates.append((piece, image, sofic_entropy(image)))
    best = max(h for _, _, h in candidates)
    tie = shift_settings.ENTROPY_TIE_TOLERANCE
    components: List[MaxEntropyComponent] = []
    for piece, image, h in sorted(candidates, key=lambda c: min(X.alphabet.key(v) for v in c[0].vertices)):
        if h < best - tie * max(1.0, best):
            continue
        if any(same_shift(image, c.graph) for c in components):
            logger.debug('Merged a duplicate maximal-entropy image')
            continue
        measure = _pushforward_parry(parry_measure(piece), spec.code, depth)
        components.append(MaxEntropyComponent(piece, image, h, measure))
    return components


@dataclass(frozen=True)
class AveragedMeasure:
    measure: CylinderMeasure
    weights: Tuple[float, ...]
    cutoff: int


def mu_Y_average(components: Sequence[MaxEntropyComponent], cutoff: int) -> AveragedMeasure:
    """
    Σ c_i μ_i with c_i the share of the periodic points of period ≤ s lying in
    the i-th component, s the largest feasible value not above ``cutoff``.
    """
    s = cutoff
    while s >= 1:
        try:
            point_sets = [set(w for w, _ in periodic_points_up_to(c.graph, s)) for c in components]
            break
        except EnumerationCapExceeded:
            logger.info(f'Periodic points at cutoff {s} exceed the cap; lowering the cutoff')
            s -= 1
    else:
        raise CutoffTooSmall()
    if any(not points for points in point_sets):
        raise CutoffTooSmall()
    union = set().union(*point_sets)
    raw = [Fraction(len(points), len(union)) for points in point_sets]
    weights = [c / sum(raw) for c in raw]
    depth = min(c.measure.depth for c in components)
    alphabet = components[0].measure.alphabet
    for c in components[1:]:
        alphabet = alphabet.union(c.measure.alphabet)
    values: Dict[Word, float] = {}
    for c, weight in zip(components, weights):
        for word, value in c.measure.values.items():
            if len(word) <= depth:
                values[word] = values.get(word, 0.0) + float(weight) * value
    return AveragedMeasure(CylinderMeasure(alphabet, depth, values), tuple(float(w) for w in weights), s)


@dataclass(frozen=True)
class AutomorphismReport:
    period: int
    depth: int
    points: int
    distance: float
    tolerance: float
    invariant: bool


def check_inverse_pair(source: Source, beta: BlockCode, beta_inv: BlockCode) -> None:
    """Both composites must fix the center of every allowed window of width 2(R+R')+1."""
    radius = beta.radius + beta_inv.radius
    graph = source.labeled() if isinstance(source, BlockGraph) else source
    for u in graph.language_oracle(2 * radius + 1).level(2 * radius + 1):
        center = u[radius]
        if beta_inv.rule[beta.apply(u)] != center or beta.rule[beta_inv.apply(u)] != center:
            raise NotAnAutomorphism(f'The composite moves the window {"".join(u)!r}.')


def automorphism_invariance_check(source: Source, beta: BlockCode, beta_inv: BlockCode,
                                  n: int, depth: int, tol: float) -> AutomorphismReport:
    check_inverse_pair(source, beta, beta_inv)
    nu = nu_measure(source, n)
    distance = weak_star_distance(nu, pushforward(nu, beta), depth)
    return AutomorphismReport(n, depth, len(nu.support), distance, tol, distance <= tol)

