import math

from django.test import SimpleTestCase, override_settings

from symbolic_shifts.beta_numbers import (
    EVENTUALLY_PERIODIC, FINITE, TRUNCATED, BetaNumber, DigitStream, beta_expand, star_expansion,
    stream_from_expansion,
)
from symbolic_shifts.beta_shifts import (
    Evidence, beta_gap_length_check, beta_language, beta_ls_diagnostic, beta_mfw, beta_mfw_gap_windows,
    beta_oracle, beta_presentation, dominated, example_betashift, validate_expansion,
)
from symbolic_shifts.exceptions import (
    AmbiguousDigit, CannotClose, InsufficientDigits, UnsupportedSpec, WrongExpansionStatus,
)
from symbolic_shifts.forbidden import reconstruct_language
from symbolic_shifts.graphs import forbidden_automaton
from symbolic_shifts.sofic import is_sft, same_shift, sofic_entropy

from .fixtures import golden_mean, word, words

GOLDEN = 'poly:x^2-x-1@[1.6,1.7]'
GOLDEN_STAR = DigitStream((1, 0), period=2)
TWO_ONES = DigitStream((2, 1), period=1)


class BetaNumberTests(SimpleTestCase):
    """Test parsing β literals"""

    def test_rational(self):
        """Test integers and fractions are rational"""
        self.assertEqual(BetaNumber.parse('2').kind, 'rational')
        self.assertEqual(BetaNumber.parse('5/2').approximate(), 2.5)

    def test_algebraic(self):
        """Test the minimal polynomial is kept monic"""
        beta = BetaNumber.parse(GOLDEN)
        self.assertEqual(beta.kind, 'algebraic')
        self.assertEqual(beta.degree, 2)

    def test_factor_with_root_in_interval(self):
        """Test the factor isolated by the interval is chosen"""
        beta = BetaNumber.parse('poly:(x^2-x-1)*(x-5)@[1.6,1.7]')
        self.assertEqual(beta.degree, 2)

    def test_linear_factor_is_rational(self):
        """Test a rational root is handled exactly"""
        beta = BetaNumber.parse('poly:x-3@[2,4]')
        self.assertEqual(beta.kind, 'rational')
        self.assertEqual(beta.rational, 3)

    def test_interval_with_two_roots(self):
        """Test the interval must isolate one root"""
        with self.assertRaises(UnsupportedSpec):
            BetaNumber.parse('poly:x^2-2@[-2,2]')

    def test_beta_must_exceed_one(self):
        """Test β = 1 is refused"""
        with self.assertRaises(UnsupportedSpec):
            BetaNumber.parse('1')


class ExpansionTests(SimpleTestCase):
    """Test the greedy expansion of 1"""

    def test_golden_mean(self):
        """Test the golden ratio expands as 11"""
        expansion = beta_expand(BetaNumber.parse(GOLDEN), 16)
        self.assertEqual(expansion.digits, (1, 1))
        self.assertEqual(expansion.status, FINITE)
        star = star_expansion(expansion)
        self.assertEqual((star.digits, star.period), ((1, 0), 2))

    def test_square_of_golden_mean(self):
        """Test φ² expands as 21 repeating 1"""
        expansion = beta_expand(BetaNumber.parse('poly:x^2-3*x+1@[2.6,2.7]'), 16)
        self.assertEqual(expansion.digits, (2, 1))
        self.assertEqual(expansion.status, EVENTUALLY_PERIODIC)
        self.assertEqual((expansion.preperiod, expansion.period), (1, 1))
        self.assertEqual(expansion.digit(7), 1)

    def test_integer(self):
        """Test an integer base has a one-digit expansion"""
        expansion = beta_expand(BetaNumber.parse('2'), 8)
        self.assertEqual((expansion.digits, expansion.status), ((2,), FINITE))
        star = star_expansion(expansion)
        self.assertEqual((star.digits, star.period), ((1,), 1))

    def test_classified_on_last_digit(self):
        """Test a finite expansion found with the last requested digit"""
        expansion = beta_expand(BetaNumber.parse(GOLDEN), 2)
        self.assertEqual(expansion.status, FINITE)

    def test_decimal_matches_rational(self):
        """Test interval arithmetic reproduces exact digits"""
        decimal = beta_expand(BetaNumber.parse('1.5'), 6)
        exact = beta_expand(BetaNumber.parse('3/2'), 6)
        self.assertEqual(decimal.status, TRUNCATED)
        self.assertEqual(decimal.digits, exact.digits)
        self.assertEqual(decimal.digits[:4], (1, 0, 1, 0))

    @override_settings(SYMBOLIC_SHIFTS={'BETA_START_PRECISION': 2, 'BETA_MAX_PRECISION': 2})
    def test_ambiguous_digit(self):
        """Test a floor that cannot be certified reports its index"""
        with self.assertRaises(AmbiguousDigit) as ctx:
            beta_expand(BetaNumber.parse('1.9999999999'), 4)
        self.assertEqual(ctx.exception.index, 0)
        self.assertEqual(ctx.exception.precision, 2)

    def test_star_needs_finite_expansion(self):
        """Test d* is only defined for finite expansions"""
        expansion = beta_expand(BetaNumber.parse('poly:x^2-3*x+1@[2.6,2.7]'), 16)
        with self.assertRaises(WrongExpansionStatus):
            star_expansion(expansion)

    def test_stream_from_periodic_expansion(self):
        """Test an eventually periodic expansion keeps its period"""
        expansion = beta_expand(BetaNumber.parse('poly:x^2-3*x+1@[2.6,2.7]'), 16)
        self.assertEqual(stream_from_expansion(expansion), TWO_ONES)


class ValidationTests(SimpleTestCase):
    """Test the admissibility of digit streams"""

    def test_periodic_prefix(self):
        """Test a prefix of (10)^∞ passes"""
        self.assertTrue(validate_expansion(DigitStream((1, 0) * 5), 10))

    def test_constant_stream(self):
        """Test 2^∞ equals its own shift"""
        self.assertFalse(validate_expansion(DigitStream((2,), 1), 5))

    def test_two_then_ones(self):
        """Test 21…1 passes"""
        self.assertTrue(validate_expansion(DigitStream((2,) + (1,) * 9), 10))

    def test_larger_shift(self):
        """Test a stream beaten by its own shift fails"""
        self.assertFalse(validate_expansion(DigitStream((1, 0, 1, 1)), 4))

    def test_short_prefix(self):
        """Test a horizon beyond the known digits"""
        with self.assertRaises(InsufficientDigits):
            validate_expansion(DigitStream((1, 0)), 5)


class BetaLanguageTests(SimpleTestCase):
    """Test languages and forbidden words of β-shifts"""

    def test_dominated(self):
        """Test suffix domination"""
        self.assertTrue(dominated(TWO_ONES, (1, 2, 1)))
        self.assertFalse(dominated(TWO_ONES, (2, 2)))

    def test_golden_mean_forbidden_words(self):
        """Test the golden β-shift forbids 11"""
        self.assertEqual(beta_mfw(GOLDEN_STAR, 4).by_length, {2: (word('11'),)})

    def test_two_ones_forbidden_words(self):
        """Test 21^k2 is forbidden for every k"""
        table = beta_mfw(TWO_ONES, 6)
        self.assertEqual(list(table.words()), words('22', '212', '2112', '21112', '211112'))

    def test_two_oracles_agree(self):
        """Test the forbidden-word cover rebuilds the domination language"""
        for d in (GOLDEN_STAR, TWO_ONES, DigitStream((2, 1, 0), period=1)):
            table = beta_mfw(d, 10)
            for n in range(1, 11):
                self.assertEqual(reconstruct_language(table, n), beta_language(d, n), (d, n))

    def test_presentation_language(self):
        """Test the graph presentation agrees with domination"""
        oracle = beta_oracle(TWO_ONES, 8)
        self.assertIsNotNone(oracle.presentation)
        for n in range(1, 9):
            self.assertEqual(oracle.level(n), beta_language(TWO_ONES, n))

    def test_truncated_stream_oracle(self):
        """Test a truncated stream bounds the horizon"""
        oracle = beta_oracle(DigitStream((2, 1, 1, 1)), 10)
        self.assertEqual(oracle.max_reliable_length, 4)
        self.assertIsNone(oracle.presentation)

    def test_insufficient_digits(self):
        """Test forbidden words need the digits of their length"""
        with self.assertRaises(InsufficientDigits):
            beta_mfw(DigitStream((1, 0, 1)), 5)


class BetaPresentationTests(SimpleTestCase):
    """Test graph presentations of β-shifts"""

    def test_golden_mean_graph(self):
        """Test the golden β-shift is of finite type"""
        graph = beta_presentation(GOLDEN_STAR)
        self.assertEqual(len(graph.states), 2)
        self.assertTrue(is_sft(graph))

    def test_golden_mean_graph_is_golden_mean_shift(self):
        """Test the golden β-shift forbids exactly 11 and has entropy log β"""
        graph = beta_presentation(GOLDEN_STAR)
        self.assertTrue(same_shift(graph, forbidden_automaton(golden_mean())))
        self.assertAlmostEqual(sofic_entropy(graph), math.log((1 + math.sqrt(5)) / 2), places=9)

    def test_two_ones_graph(self):
        """Test the β-shift of 21^∞ is strictly sofic"""
        self.assertFalse(is_sft(beta_presentation(TWO_ONES)))

    def test_truncated_stream(self):
        """Test a truncated stream has no presentation"""
        with self.assertRaises(CannotClose):
            beta_presentation(DigitStream((2, 1, 1)))


class DiagnosticTests(SimpleTestCase):
    """Test evidence about the lengths of forbidden words"""

    def test_vanishing_top_digit(self):
        """Test 21^∞ never returns to its first digit"""
        self.assertEqual(beta_ls_diagnostic(TWO_ONES, 12).verdict, Evidence.UNSTABLE)

    def test_recurrent_prefix(self):
        """Test (10)^∞ repeats its prefixes"""
        report = beta_ls_diagnostic(GOLDEN_STAR, 12)
        self.assertEqual(report.verdict, Evidence.STABLE)
        self.assertEqual(report.d0_positions, (0, 2, 4, 6, 8, 10))

    def test_constructed_stream(self):
        """Test the constructed expansion repeats its prefixes"""
        d = example_betashift('specified', 3)
        self.assertEqual(len(d.digits), 49)
        self.assertEqual(beta_ls_diagnostic(d, 49).verdict, Evidence.STABLE)

    def test_gap_windows(self):
        """Test 21^∞ has a forbidden word of every length"""
        self.assertEqual(beta_mfw_gap_windows(TWO_ONES, 12, 1), [])

    def test_gap_windows_of_golden_mean(self):
        """Test the golden mean shift leaves every window from 3 on empty"""
        windows = beta_mfw_gap_windows(GOLDEN_STAR, 8, 0)
        self.assertEqual(windows, [(3, 5), (4, 6), (5, 7), (6, 8)])

    def test_border_check(self):
        """Test the borders of 101"""
        report = beta_gap_length_check(GOLDEN_STAR, 2)
        self.assertEqual(report.borders, (word('1'),))
        self.assertFalse(report.mfw_at_next_length)

    def test_borders_rule_out_next_length(self):
        """Test a bordered prefix d₀…d_n leaves no minimal forbidden word of length n+1"""
        streams = (
            GOLDEN_STAR, TWO_ONES, example_betashift('specified', 1), example_betashift('synchronized', 1),
        )
        bordered = 0
        for d in streams:
            last = 12 if d.is_periodic else len(d.digits) - 1
            for n in range(1, last):
                report = beta_gap_length_check(d, n)
                if report.borders:
                    bordered += 1
                    self.assertFalse(report.mfw_at_next_length, (d.digits, n))
        self.assertGreater(bordered, 0)


class ConstructedExpansionTests(SimpleTestCase):
    """Test the constructed digit streams"""

    def test_first_steps(self):
        """Test the first two streams"""
        self.assertEqual(example_betashift('specified', 0).digits, (2, 2, 2))
        self.assertEqual(example_betashift('specified', 1).digits, (2, 2, 2, 1, 1, 1, 2, 2, 2))

    def test_both_modes_are_admissible(self):
        """Test both modes give valid expansions"""
        for mode in ('specified', 'synchronized'):
            d = example_betashift(mode, 2)
            self.assertTrue(validate_expansion(d, len(d.digits)), mode)
