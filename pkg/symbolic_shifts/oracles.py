"""
One entry point from a shift description to its language oracle.
"""
import logging
from typing import Union

from .beta_numbers import (
    FINITE, BetaExpansion, BetaNumber, DigitStream, beta_expand, star_expansion, stream_from_expansion,
)
from .beta_shifts import beta_oracle, beta_presentation
from .exceptions import UnsupportedSpec
from .graphs import forbidden_automaton, sft_oracle
from .labeled import LabeledGraph
from .sofic import sofic_presentation
from .specs import BetaSpec, FiniteTypeSpec, InducedSpec, SoficSpec, Substitution
from .words import LanguageOracle

logger = logging.getLogger(__name__)

ShiftSpec = Union[FiniteTypeSpec, SoficSpec, BetaSpec, Substitution, InducedSpec]


def beta_stream(spec: BetaSpec) -> DigitStream:
    """The digit stream used for language work (d* for finite expansions)."""
    if spec.beta:
        return stream_from_expansion(beta_expand(BetaNumber.parse(spec.beta), spec.digit_count))
    digits = tuple(int(d) for d in spec.digits)
    if spec.finite:
        return star_expansion(BetaExpansion(digits, FINITE, digits[0]))
    return DigitStream(digits, spec.period)


def presentation_from_spec(spec: ShiftSpec) -> LabeledGraph:
    if isinstance(spec, FiniteTypeSpec):
        return forbidden_automaton(spec)
    if isinstance(spec, SoficSpec):
        return sofic_presentation(spec)
    if isinstance(spec, BetaSpec):
        return beta_presentation(beta_stream(spec))
    raise UnsupportedSpec(f'A {spec.kind} shift has no finite presentation here.')


def oracle_from_spec(spec: ShiftSpec, horizon: int) -> LanguageOracle:
    if isinstance(spec, FiniteTypeSpec):
        return sft_oracle(spec, horizon)
    if isinstance(spec, SoficSpec):
        return sofic_presentation(spec).language_oracle(horizon, label=spec.label)
    if isinstance(spec, BetaSpec):
        return beta_oracle(beta_stream(spec), horizon, label=spec.label)
    if isinstance(spec, Substitution):
        from .dynamics import substitution_oracle

        return substitution_oracle(spec, horizon)
    if isinstance(spec, InducedSpec):
        from .dynamics import induce_recode

        return induce_recode(spec, horizon)
    raise UnsupportedSpec(f'Unknown shift description {type(spec).__name__}.')
