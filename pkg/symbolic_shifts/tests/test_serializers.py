import json

from django.test import SimpleTestCase
from rest_framework.exceptions import ValidationError

from symbolic_shifts.serializers import (
    ShiftDocumentSerializer, dump_document, load_block_code, load_document, word_from_literal,
    word_to_literal,
)
from symbolic_shifts.specs import BetaSpec, FiniteTypeSpec, InducedSpec, SoficSpec, Substitution

from .fixtures import BINARY, word, words

GOLDEN = {'kind': 'finite-type', 'alphabet': '01', 'forbidden': ['11'], 'label': 'golden mean'}


class WordLiteralTests(SimpleTestCase):
    """Test reading and writing words"""

    def test_strings_and_lists(self):
        """Test both spellings of a word"""
        self.assertEqual(word_from_literal('0110'), word('0110'))
        self.assertEqual(word_from_literal(['a0', 'a1']), ('a0', 'a1'))
        self.assertEqual(word_to_literal(word('01')), '01')
        self.assertEqual(word_to_literal(('a0', 'a1')), ['a0', 'a1'])


class FiniteTypeDocumentTests(SimpleTestCase):
    """Test finite-type documents"""

    def test_valid(self):
        """Test a document becomes a spec"""
        spec = load_document(json.dumps(GOLDEN)).to_spec()
        self.assertIsInstance(spec, FiniteTypeSpec)
        self.assertEqual(spec.forbidden, (word('11'),))
        self.assertEqual(spec.label, 'golden mean')

    def test_symbols_as_lists(self):
        """Test multi-character symbols"""
        data = {'kind': 'finite-type', 'alphabet': ['a0', 'a1'], 'forbidden': [['a1', 'a1']]}
        document = load_document(data)
        self.assertEqual(document.to_spec().forbidden, (('a1', 'a1'),))

    def test_unknown_symbol(self):
        """Test forbidden words must use the alphabet"""
        with self.assertRaises(ValidationError):
            load_document({'kind': 'finite-type', 'alphabet': '01', 'forbidden': ['12']})

    def test_duplicate_symbols(self):
        """Test an alphabet repeating a symbol"""
        with self.assertRaises(ValidationError):
            load_document({'kind': 'finite-type', 'alphabet': '010'})

    def test_unknown_kind(self):
        """Test the kind is checked"""
        serializer = ShiftDocumentSerializer(data={'kind': 'cellular', 'alphabet': '01'})
        self.assertFalse(serializer.is_valid())
        self.assertIn('kind', serializer.errors)

    def test_malformed_json(self):
        """Test text that is not JSON"""
        with self.assertRaises(ValidationError):
            load_document('{"kind": ')

    def test_not_an_object(self):
        """Test a JSON list is refused"""
        with self.assertRaises(ValidationError):
            load_document('[1, 2]')

    def test_dump(self):
        """Test a dumped document loads back unchanged"""
        document = load_document(GOLDEN)
        self.assertEqual(load_document(dump_document(document)).to_dict(), document.to_dict())


class SoficDocumentTests(SimpleTestCase):
    """Test sofic documents"""

    def test_transitions(self):
        """Test a labeled graph document"""
        data = {
            'kind': 'sofic', 'alphabet': '01',
            'transitions': [['E', '0', 'E'], ['E', '1', 'O'], ['O', '1', 'E']],
        }
        spec = load_document(data).to_spec()
        self.assertIsInstance(spec, SoficSpec)
        self.assertFalse(spec.is_image)
        self.assertEqual(len(spec.transitions), 3)

    def test_image(self):
        """Test an image document builds the code over the source alphabet"""
        data = {
            'kind': 'sofic',
            'source': {'alphabet': '012', 'forbidden': ['02', '10', '11', '22']},
            'code': {'target': '01', 'rule': {'0': '0', '1': '1', '2': '1'}},
        }
        spec = load_document(data).to_spec()
        self.assertTrue(spec.is_image)
        self.assertEqual(spec.alphabet, BINARY)
        self.assertEqual(spec.code.apply(word('012')), word('011'))

    def test_source_without_code(self):
        """Test an image needs a code"""
        data = {'kind': 'sofic', 'source': {'alphabet': '01'}}
        with self.assertRaises(ValidationError):
            load_document(data)

    def test_incomplete_code(self):
        """Test every window needs an image"""
        data = {
            'kind': 'sofic', 'source': {'alphabet': '012'},
            'code': {'target': '01', 'rule': {'0': '0', '1': '1'}},
        }
        with self.assertRaises(ValidationError):
            load_document(data)

    def test_unknown_label(self):
        """Test edge labels must be in the alphabet"""
        data = {'kind': 'sofic', 'alphabet': '01', 'transitions': [['a', '2', 'a']]}
        with self.assertRaises(ValidationError):
            load_document(data)

    def test_missing_alphabet(self):
        """Test transitions need an alphabet"""
        with self.assertRaises(ValidationError):
            load_document({'kind': 'sofic', 'transitions': [['a', '0', 'a']]})

    def test_empty(self):
        """Test a document with neither form"""
        with self.assertRaises(ValidationError):
            load_document({'kind': 'sofic', 'alphabet': '01'})


class BetaDocumentTests(SimpleTestCase):
    """Test β documents"""

    def test_literal(self):
        """Test a β literal"""
        spec = load_document({'kind': 'beta', 'beta': 'poly:x^2-x-1@[1.6,1.7]'}).to_spec()
        self.assertIsInstance(spec, BetaSpec)
        self.assertEqual(spec.beta, 'poly:x^2-x-1@[1.6,1.7]')
        self.assertEqual(spec.digit_count, 64)

    def test_digits(self):
        """Test digits with a period"""
        spec = load_document({'kind': 'beta', 'digits': [2, 1], 'period': 1}).to_spec()
        self.assertEqual((spec.digits, spec.period), ((2, 1), 1))

    def test_both_forms(self):
        """Test β and digits together are refused"""
        with self.assertRaises(ValidationError):
            load_document({'kind': 'beta', 'beta': '2', 'digits': [1]})

    def test_neither_form(self):
        """Test a β document needs one form"""
        with self.assertRaises(ValidationError):
            load_document({'kind': 'beta'})

    def test_digit_above_first(self):
        """Test digits are bounded by the first digit"""
        with self.assertRaises(ValidationError):
            load_document({'kind': 'beta', 'digits': [1, 2]})

    def test_leading_zero(self):
        """Test the first digit is positive"""
        with self.assertRaises(ValidationError):
            load_document({'kind': 'beta', 'digits': [0, 0]})

    def test_long_period(self):
        """Test the period fits in the digits"""
        with self.assertRaises(ValidationError):
            load_document({'kind': 'beta', 'digits': [1, 0], 'period': 3})

    def test_bad_literal(self):
        """Test β literals are checked"""
        with self.assertRaises(ValidationError):
            load_document({'kind': 'beta', 'beta': 'golden'})


class SubstitutionDocumentTests(SimpleTestCase):
    """Test substitution documents"""

    def test_valid(self):
        """Test the Fibonacci substitution"""
        data = {'kind': 'substitution', 'alphabet': '01', 'rules': {'0': '01', '1': '0'}}
        spec = load_document(data).to_spec()
        self.assertIsInstance(spec, Substitution)
        self.assertEqual(spec.seed, '0')
        self.assertEqual(spec.apply(word('01')), word('010'))

    def test_missing_rule(self):
        """Test every letter needs an image"""
        with self.assertRaises(ValidationError):
            load_document({'kind': 'substitution', 'alphabet': '01', 'rules': {'0': '01'}})


class InducedDocumentTests(SimpleTestCase):
    """Test induced documents"""

    def test_nested_base(self):
        """Test the base is validated and built"""
        data = {'kind': 'induced', 'base': GOLDEN, 'window': 1, 'clopen': ['000', '001']}
        spec = load_document(data).to_spec()
        self.assertIsInstance(spec, InducedSpec)
        self.assertIsInstance(spec.base, FiniteTypeSpec)
        self.assertEqual(spec.base.label, 'golden mean')
        self.assertEqual(spec.clopen, tuple(words('000', '001')))
        self.assertTrue(spec.first_return)

    def test_given_returns(self):
        """Test return times are keyed by window"""
        data = {'kind': 'induced', 'base': GOLDEN, 'window': 0, 'clopen': ['0'], 'returns': {'0': 2}}
        spec = load_document(data).to_spec()
        self.assertEqual(spec.returns, {word('0'): 2})

    def test_invalid_base(self):
        """Test errors in the base are reported"""
        data = {'kind': 'induced', 'base': {'kind': 'beta'}, 'window': 0, 'clopen': ['0']}
        with self.assertRaises(ValidationError):
            load_document(data)

    def test_window_length(self):
        """Test the words of U have length 2N+1"""
        data = {'kind': 'induced', 'base': GOLDEN, 'window': 1, 'clopen': ['00']}
        with self.assertRaises(ValidationError):
            load_document(data)


class ExampleDocumentTests(SimpleTestCase):
    """Test documents of the constructed examples"""

    def test_nonempty(self):
        """Test lengths become a finite-type spec"""
        spec = load_document({'kind': 'example-nonempty', 'lengths': [3]}).to_spec()
        self.assertEqual(spec.forbidden, (word('020'),))

    def test_betashift(self):
        """Test a constructed β-shift becomes digits"""
        spec = load_document({'kind': 'example-betashift', 'steps': 1}).to_spec()
        self.assertEqual(spec.digits, (2, 2, 2, 1, 1, 1, 2, 2, 2))

    def test_unknown_mode(self):
        """Test modes are checked"""
        with self.assertRaises(ValidationError):
            load_document({'kind': 'example-betashift', 'mode': 'other', 'steps': 1})


class BlockCodeDocumentTests(SimpleTestCase):
    """Test block code documents"""

    def test_flip(self):
        """Test a letter-to-letter code"""
        code = load_block_code('{"target": "01", "rule": {"0": "1", "1": "0"}}', BINARY)
        self.assertEqual(code.apply(word('001')), word('110'))

    def test_radius(self):
        """Test windows of a code with range one"""
        rule = {''.join(w): str(w.count('1') % 2) for w in BINARY.words(3)}
        code = load_block_code({'target': '01', 'radius': 1, 'rule': rule}, BINARY)
        self.assertEqual(code.apply(word('0110')), word('00'))

    def test_incomplete(self):
        """Test a missing window"""
        with self.assertRaises(ValidationError):
            load_block_code({'target': '01', 'radius': 1, 'rule': {'000': '0'}}, BINARY)


class RoundTripTests(SimpleTestCase):
    """Test dumped documents of every kind load back unchanged"""

    documents = {
        'finite-type': GOLDEN,
        'sofic transitions': {
            'kind': 'sofic', 'alphabet': '01', 'label': 'even shift',
            'transitions': [['E', '0', 'E'], ['E', '1', 'O'], ['O', '1', 'E']],
        },
        'sofic image': {
            'kind': 'sofic',
            'source': {'alphabet': '012', 'forbidden': ['02', '10', '11', '22']},
            'code': {'target': '01', 'rule': {'0': '0', '1': '1', '2': '1'}},
        },
        'beta literal': {'kind': 'beta', 'beta': 'poly:x^2-x-1@[1.6,1.7]', 'digit_count': 32},
        'beta digits': {'kind': 'beta', 'digits': [2, 1], 'period': 1},
        'substitution': {
            'kind': 'substitution', 'alphabet': '01', 'rules': {'0': '01', '1': '0'}, 'seed': '0',
        },
        'induced': {'kind': 'induced', 'base': GOLDEN, 'window': 1, 'clopen': ['000', '001']},
        'induced returns': {
            'kind': 'induced', 'base': GOLDEN, 'window': 0, 'clopen': ['0'], 'returns': {'0': 2},
        },
        'example-nonempty': {'kind': 'example-nonempty', 'lengths': [3, 5]},
        'example-betashift': {'kind': 'example-betashift', 'mode': 'synchronized', 'steps': 1},
    }

    def test_every_kind(self):
        """Test dump then load keeps the document and the spec it builds"""
        for name, data in self.documents.items():
            with self.subTest(name):
                document = load_document(data)
                again = load_document(dump_document(document))
                self.assertEqual(again.to_dict(), document.to_dict())
                self.assertEqual(again.to_spec(), document.to_spec())
