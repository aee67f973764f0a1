import json
from dataclasses import dataclass, field
from typing import Any, Dict, Mapping, Optional, Tuple

from django.utils.translation import gettext_lazy as _
from rest_framework import serializers

from .beta_shifts import example_betashift
from .exceptions import ShiftError
from .forbidden import example_nonempty_shift
from .specs import BetaSpec, BlockCode, FiniteTypeSpec, InducedSpec, SoficSpec, Substitution
from .validators import beta_literal_validator, word_literal_validator
from .words import Alphabet, Word

FINITE_TYPE = 'finite-type'
SOFIC = 'sofic'
BETA = 'beta'
SUBSTITUTION = 'substitution'
INDUCED = 'induced'
EXAMPLE_NONEMPTY = 'example-nonempty'
EXAMPLE_BETASHIFT = 'example-betashift'

KINDS = (FINITE_TYPE, SOFIC, BETA, SUBSTITUTION, INDUCED, EXAMPLE_NONEMPTY, EXAMPLE_BETASHIFT)


def word_from_literal(value) -> Word:
    """A word is either a string of one-character symbols or a list of symbols."""
    if isinstance(value, str):
        return tuple(value.split()) if ' ' in value.strip() else tuple(value)
    return tuple(str(s) for s in value)


def word_to_literal(word: Word):
    return ''.join(word) if all(len(s) == 1 for s in word) else list(word)


class WordField(serializers.Field):
    default_error_messages = {
        'invalid': _('A word is a string or a list of symbols.'),
    }

    def to_internal_value(self, data):
        if isinstance(data, str):
            word_literal_validator(data)
        elif not isinstance(data, (list, tuple)):
            self.fail('invalid')
        return word_from_literal(data)

    def to_representation(self, value):
        return word_to_literal(tuple(value))


class AlphabetField(serializers.ListField):
    child = serializers.CharField(allow_blank=False)

    def __init__(self, **kwargs):
        kwargs.setdefault('allow_empty', False)
        super().__init__(**kwargs)

    def to_internal_value(self, data):
        if isinstance(data, str):
            data = list(data)
        symbols = super().to_internal_value(data)
        if len(set(symbols)) != len(symbols):
            raise serializers.ValidationError(_('Alphabet symbols must be distinct.'))
        return symbols


def _checked(build):
    """Run a spec constructor and report domain errors as validation errors."""
    try:
        return build()
    except ShiftError as exc:
        raise serializers.ValidationError(exc.detail)


class FiniteTypeSerializer(serializers.Serializer):
    alphabet = AlphabetField()
    forbidden = serializers.ListField(child=WordField(), default=list)

    def validate(self, attrs):
        _checked(lambda: FiniteTypeSpec(Alphabet.of(attrs['alphabet']), tuple(attrs['forbidden'])))
        return attrs


class BlockCodeSerializer(serializers.Serializer):
    source = AlphabetField(required=False)
    target = AlphabetField()
    radius = serializers.IntegerField(min_value=0, default=0)
    rule = serializers.DictField(child=serializers.CharField())


def block_code(payload: Mapping, source: Optional[Alphabet] = None) -> BlockCode:
    source = source or Alphabet.of(payload['source'])
    rule = {word_from_literal(window): image for window, image in payload['rule'].items()}
    return BlockCode(source, Alphabet.of(payload['target']), payload.get('radius', 0), rule)


class SoficSerializer(serializers.Serializer):
    alphabet = AlphabetField(required=False)
    transitions = serializers.ListField(
        child=serializers.ListField(child=serializers.CharField(), min_length=3, max_length=3),
        default=list,
    )
    source = FiniteTypeSerializer(required=False)
    code = BlockCodeSerializer(required=False)

    def validate(self, attrs):
        if 'source' in attrs or 'code' in attrs:
            if 'source' not in attrs or 'code' not in attrs:
                raise serializers.ValidationError(_('An image needs both a source and a code.'))
            source = Alphabet.of(attrs['source']['alphabet'])
            _checked(lambda: block_code(attrs['code'], source))
        elif not attrs['transitions']:
            raise serializers.ValidationError(_('Give either transitions or a source and a code.'))
        elif 'alphabet' not in attrs:
            raise serializers.ValidationError({'alphabet': _('This field is required.')})
        else:
            alphabet = _checked(lambda: Alphabet.of(attrs['alphabet']))
            for _u, a, _v in attrs['transitions']:
                if a not in alphabet:
                    raise serializers.ValidationError({'transitions': _('Unknown label %(a)s.') % {'a': a}})
        return attrs


class BetaSerializer(serializers.Serializer):
    beta = serializers.CharField(required=False, validators=[beta_literal_validator])
    digits = serializers.ListField(child=serializers.IntegerField(min_value=0), default=list)
    period = serializers.IntegerField(min_value=0, default=0)
    finite = serializers.BooleanField(default=False)
    digit_count = serializers.IntegerField(min_value=1, default=64)

    def validate(self, attrs):
        digits = attrs['digits']
        if bool(attrs.get('beta')) == bool(digits):
            raise serializers.ValidationError(_('Give exactly one of beta and digits.'))
        if digits:
            if digits[0] < 1 or max(digits) > digits[0]:
                raise serializers.ValidationError(
                    {'digits': _('Every digit must lie between 0 and the first digit.')}
                )
            if attrs['period'] > len(digits):
                raise serializers.ValidationError({'period': _('The period exceeds the number of digits.')})
            if attrs['finite'] and attrs['period']:
                raise serializers.ValidationError(_('A finite expansion has no period.'))
        return attrs


class SubstitutionSerializer(serializers.Serializer):
    alphabet = AlphabetField()
    rules = serializers.DictField(child=WordField())
    seed = serializers.CharField(required=False, allow_blank=True, default='')

    def validate(self, attrs):
        _checked(lambda: Substitution(Alphabet.of(attrs['alphabet']), attrs['rules'], attrs['seed']))
        return attrs


class InducedSerializer(serializers.Serializer):
    base = serializers.DictField()
    window = serializers.IntegerField(min_value=0)
    clopen = serializers.ListField(child=WordField(), allow_empty=False)
    returns = serializers.DictField(
        child=serializers.IntegerField(min_value=1), required=False, allow_null=True, default=None
    )

    def validate_base(self, value):
        nested = ShiftDocumentSerializer(data=value)
        nested.is_valid(raise_exception=True)
        document = nested.save()
        return document.to_dict()

    def validate(self, attrs):
        width = 2 * attrs['window'] + 1
        if any(len(w) != width for w in attrs['clopen']):
            raise serializers.ValidationError({'clopen': _('Every word of U must have length 2N+1.')})
        return attrs


class ExampleNonemptySerializer(serializers.Serializer):
    lengths = serializers.ListField(child=serializers.IntegerField(min_value=1))


class ExampleBetashiftSerializer(serializers.Serializer):
    mode = serializers.ChoiceField(choices=['specified', 'synchronized'], default='specified')
    steps = serializers.IntegerField(min_value=0)


KIND_SERIALIZERS = {
    FINITE_TYPE: FiniteTypeSerializer,
    SOFIC: SoficSerializer,
    BETA: BetaSerializer,
    SUBSTITUTION: SubstitutionSerializer,
    INDUCED: InducedSerializer,
    EXAMPLE_NONEMPTY: ExampleNonemptySerializer,
    EXAMPLE_BETASHIFT: ExampleBetashiftSerializer,
}


@dataclass(frozen=True)
class ShiftDocument:
    """A validated shift description; ``payload`` holds the canonical kind-specific fields."""
    kind: str
    payload: Dict[str, Any] = field(hash=False)
    label: str = ''

    def to_dict(self) -> Dict[str, Any]:
        data = dict(self.payload)
        data['kind'] = self.kind
        if self.label:
            data['label'] = self.label
        return data

    def to_spec(self):
        return build_spec(self.kind, self.payload, self.label)


class ShiftDocumentSerializer(serializers.Serializer):
    """
    Validates a document of any kind. The kind-specific fields are checked by
    the matching serializer and stored in canonical form.
    """
    kind = serializers.ChoiceField(choices=KINDS)
    label = serializers.CharField(required=False, allow_blank=True, default='')

    def validate(self, attrs):
        payload = {k: v for k, v in self.initial_data.items() if k not in ('kind', 'label')}
        nested = KIND_SERIALIZERS[attrs['kind']](data=payload)
        if not nested.is_valid():
            raise serializers.ValidationError(nested.errors)
        # canonical JSON types
        attrs['payload'] = json.loads(json.dumps(nested.data))
        return attrs

    def create(self, validated_data):
        return ShiftDocument(validated_data['kind'], validated_data['payload'], validated_data['label'])


def _words(values) -> Tuple[Word, ...]:
    return tuple(word_from_literal(v) for v in values)


def _finite_type(payload: Mapping, label: str = '') -> FiniteTypeSpec:
    return FiniteTypeSpec(Alphabet.of(payload['alphabet']), _words(payload.get('forbidden', ())), label)


def build_spec(kind: str, payload: Mapping, label: str = ''):
    if kind == FINITE_TYPE:
        return _finite_type(payload, label)
    if kind == SOFIC:
        if payload.get('source'):
            source = _finite_type(payload['source'])
            code = block_code(payload['code'], source.alphabet)
            return SoficSpec(code.target, source=source, code=code, label=label)
        transitions = tuple(tuple(t) for t in payload['transitions'])
        return SoficSpec(Alphabet.of(payload['alphabet']), transitions, label=label)
    if kind == BETA:
        return BetaSpec(
            beta=payload.get('beta'), digits=tuple(payload.get('digits', ())),
            period=payload.get('period', 0), finite=payload.get('finite', False),
            digit_count=payload.get('digit_count', 64), label=label,
        )
    if kind == SUBSTITUTION:
        rules = {a: word_from_literal(w) for a, w in payload['rules'].items()}
        return Substitution(Alphabet.of(payload['alphabet']), rules, payload.get('seed', ''), label)
    if kind == INDUCED:
        base = payload['base']
        returns = payload.get('returns')
        if returns is not None:
            returns = {word_from_literal(w): r for w, r in returns.items()}
        return InducedSpec(
            build_spec(base['kind'], base, base.get('label', '')), payload['window'],
            _words(payload['clopen']), returns, label,
        )
    if kind == EXAMPLE_NONEMPTY:
        spec = example_nonempty_shift(payload['lengths'])
        return FiniteTypeSpec(spec.alphabet, spec.forbidden, label or spec.label)
    if kind == EXAMPLE_BETASHIFT:
        stream = example_betashift(payload['mode'], payload['steps'])
        return BetaSpec(digits=stream.digits, label=label or f'example {payload["mode"]} {payload["steps"]}')
    raise serializers.ValidationError({'kind': _('Unknown kind.')})


def load_document(data) -> ShiftDocument:
    """Parse JSON text or an already decoded mapping into a validated document."""
    if isinstance(data, (str, bytes)):
        try:
            data = json.loads(data)
        except ValueError as exc:
            raise serializers.ValidationError(_('Malformed document: %(error)s') % {'error': exc})
    if not isinstance(data, dict):
        raise serializers.ValidationError(_('A shift document is a JSON object.'))
    serializer = ShiftDocumentSerializer(data=data)
    serializer.is_valid(raise_exception=True)
    return serializer.save()


def dump_document(document: ShiftDocument) -> str:
    return json.dumps(document.to_dict(), sort_keys=True, indent=2, ensure_ascii=False) + '\n'


def read_document(path: str) -> ShiftDocument:
    with open(path, encoding='utf-8') as handle:
        return load_document(handle.read())


def load_block_code(data, source: Alphabet) -> BlockCode:
    if isinstance(data, (str, bytes)):
        data = json.loads(data)
    serializer = BlockCodeSerializer(data=data)
    serializer.is_valid(raise_exception=True)
    return _checked(lambda: block_code(serializer.validated_data, source))
