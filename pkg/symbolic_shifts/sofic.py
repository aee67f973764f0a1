"""
Sofic shifts: images of SFTs under block codes, determinization, periodic
points by pumping, and the finite-type decision.
"""
import logging
import math
from dataclasses import dataclass
from typing import Dict, List, Tuple

import networkx as nx

from .exceptions import AlphabetMismatch, EnumerationCapExceeded, UndefinedEntropy
from .forbidden import ls_report, minimal_forbidden
from .graphs import BlockGraph, PeriodicPointSet, build_block_graph, forbidden_automaton, perron_data
from .labeled import LabeledGraph, compare_languages
from .settings import shift_settings
from .specs import BlockCode, FiniteTypeSpec, SoficSpec
from .words import Word, minimal_period

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SoficClassTag:
    a: int
    f: int
    R: int

    @classmethod
    def of(cls, spec: SoficSpec) -> 'SoficClassTag':
        return cls(len(spec.source.alphabet), spec.source.memory, spec.code.radius)


def apply_block_code(graph: BlockGraph, code: BlockCode) -> LabeledGraph:
    """
    Present φ(X) on states (vertex, last 2R labels); each edge emits the code
    applied to the window it completes.
    """
    if set(code.source) != set(graph.alphabet):
        raise AlphabetMismatch('The code is not defined on the alphabet of the shift.')
    span = 2 * code.radius
    out_edges: Dict[Word, List[Tuple[str, Word]]] = {u: [] for u in graph.vertices}
    for u, a, v in graph.edges:
        out_edges[u].append((a, v))
    # states reachable after reading 2R labels
    states = [(u, ()) for u in graph.vertices]
    for _ in range(span):
        states = [(v, window + (a,)) for u, window in states for a, v in out_edges[u]]
    transitions = []
    for u, window in sorted(set(states), key=lambda s: (graph.alphabet.key(s[0]), graph.alphabet.key(s[1]))):
        for a, v in out_edges[u]:
            full = window + (a,)
            transitions.append(((u, window), code.rule[full], (v, full[1:])))
    return LabeledGraph(code.target, transitions)


def sofic_presentation(spec: SoficSpec) -> LabeledGraph:
    if spec.is_image:
        return apply_block_code(build_block_graph(spec.source), spec.code)
    return LabeledGraph(spec.alphabet, spec.transitions)


def determinize(g: LabeledGraph) -> LabeledGraph:
    """Subset construction from the full state set, pruned and renumbered."""
    if g.is_empty:
        return g
    start = g.all_states
    seen = {start}
    queue = [start]
    transitions = []
    while queue:
        states = queue.pop(0)
        for a in g.alphabet:
            target = g.step(states, a)
            if not target:
                continue
            transitions.append((states, a, target))
            if target not in seen:
                seen.add(target)
                queue.append(target)
    logger.debug(f'Subset construction: {len(g.states)} states became {len(seen)}')
    return LabeledGraph(g.alphabet, transitions).relabel_states()


def language_equal_up_to(g1: LabeledGraph, g2: LabeledGraph, n: int) -> bool:
    return compare_languages(g1, g2, n) is None


def same_shift(g1: LabeledGraph, g2: LabeledGraph) -> bool:
    return compare_languages(g1, g2) is None


def sofic_per_enumerate(g: LabeledGraph, p: int) -> PeriodicPointSet:
    """w^∞ is a point exactly when w^(V+1) labels a path, V the number of states."""
    if g.is_empty:
        return PeriodicPointSet(p, ())
    pumps = len(g.states) + 1
    candidates = g.language_oracle(p).level(p)
    cap = shift_settings.ENUMERATION_CAP
    points = [w for w in candidates if g.accepts(w * pumps)]
    if len(points) > cap:
        raise EnumerationCapExceeded(len(points), cap)
    return PeriodicPointSet(p, tuple((w, minimal_period(w)) for w in points))


def periodic_points_up_to(g: LabeledGraph, n: int) -> List[Tuple[Word, int]]:
    """Points of minimal period ≤ n, each as its word over one minimal period."""
    points = []
    for p in range(1, n + 1):
        points.extend((w, p) for w, d in sofic_per_enumerate(g, p).points if d == p)
    return points


def sft_memory_bound(det: LabeledGraph) -> int:
    states = len(det.states)
    return states * states + 2 + shift_settings.SFT_MEMORY_BOUND_EXTRA


def is_sft(g: LabeledGraph) -> bool:
    if g.is_empty:
        return True
    det = determinize(g)
    m = sft_memory_bound(det)
    cover = FiniteTypeSpec(det.alphabet, tuple(minimal_forbidden(det.language_oracle(m), m).words()))
    return same_shift(forbidden_automaton(cover), det)


def sofic_entropy(g: LabeledGraph) -> float:
    if g.is_empty:
        raise UndefinedEntropy()
    det = determinize(g)
    roots = []
    for component in nx.strongly_connected_components(det.graph):
        inside = [t for t in det.transitions if t[0] in component and t[2] in component]
        sub = LabeledGraph(det.alphabet, inside)
        if not sub.is_empty:
            roots.append(perron_data(sub.adjacency(dtype=float)).root)
    return math.log(max(roots))


@dataclass(frozen=True)
class DensityDiagnostic:
    horizon: int
    is_sft: bool
    mfw_lengths: Tuple[int, ...]
    window: int
    density_lower_bound: float


def sofic_density_diagnostic(g: LabeledGraph, horizon: int) -> DensityDiagnostic:
    """
    Lengths of minimal forbidden words up to the horizon and the smallest
    proportion of them in windows of half the horizon. A sofic shift that is
    not of finite type shows a positive proportion here.
    """
    report = ls_report(minimal_forbidden(determinize(g).language_oracle(horizon), horizon))
    window = max(1, horizon // 2)
    return DensityDiagnostic(
        horizon=horizon,
        is_sft=is_sft(g),
        mfw_lengths=report.ls_set,
        window=window,
        density_lower_bound=report.window_densities.get(window, 0.0),
    )
