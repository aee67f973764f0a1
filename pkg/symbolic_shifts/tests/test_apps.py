from django.test import SimpleTestCase, override_settings

from symbolic_shifts.apps import validate_settings
from symbolic_shifts.exceptions import UnsupportedSpec
from symbolic_shifts.settings import shift_settings
from symbolic_shifts.utils import rate_function


class SettingsCheckTests(SimpleTestCase):
    """Test the system check for SYMBOLIC_SHIFTS"""

    def ids(self):
        return [message.id for message in validate_settings(None)]

    def test_defaults(self):
        """Test the defaults pass"""
        self.assertEqual(self.ids(), [])

    @override_settings(SYMBOLIC_SHIFTS={'DEFAULT_HORIZON': 0})
    def test_nonpositive_integer(self):
        """Test integer settings must be positive"""
        self.assertEqual(self.ids(), ['shifts.E001'])

    @override_settings(SYMBOLIC_SHIFTS={'PERRON_TOLERANCE': 2})
    def test_tolerance_range(self):
        """Test tolerances lie in (0, 1)"""
        self.assertEqual(self.ids(), ['shifts.E002'])

    @override_settings(SYMBOLIC_SHIFTS={'BETA_START_PRECISION': 128, 'BETA_MAX_PRECISION': 64})
    def test_precision_order(self):
        """Test the precision ceiling is above the start"""
        self.assertEqual(self.ids(), ['shifts.E003'])

    @override_settings(SYMBOLIC_SHIFTS={'BETA_PRECISION_FACTOR': 1})
    def test_precision_factor(self):
        """Test precision must grow"""
        self.assertEqual(self.ids(), ['shifts.E004'])

    @override_settings(SYMBOLIC_SHIFTS={'ENUMERATION_CAP': 10 ** 9})
    def test_large_cap(self):
        """Test a very large cap is a warning"""
        self.assertEqual(self.ids(), ['shifts.W001'])

    @override_settings(SYMBOLIC_SHIFTS={'RETURN_TIME_CAP': 7})
    def test_reload(self):
        """Test overridden settings are read again"""
        self.assertEqual(shift_settings.RETURN_TIME_CAP, 7)


class RateFunctionTests(SimpleTestCase):
    """Test parsing rates"""

    def test_expressions(self):
        """Test constants and polynomials in n"""
        self.assertEqual(rate_function('2')(10), 2)
        self.assertEqual(rate_function('n^2 + 1')(3), 10)
        self.assertEqual(rate_function('n/2')(5), 2)

    def test_other_symbols(self):
        """Test rates may only use n"""
        with self.assertRaises(UnsupportedSpec):
            rate_function('m + 1')

    def test_nonpositive(self):
        """Test a rate below one is refused when evaluated"""
        rate = rate_function('n - 3')
        with self.assertRaises(UnsupportedSpec):
            rate(2)

    def test_unreadable(self):
        """Test text that is not an expression"""
        with self.assertRaises(UnsupportedSpec):
            rate_function('n +* 2')
