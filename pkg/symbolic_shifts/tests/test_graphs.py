import functools
import itertools
import math
import random

from django.test import SimpleTestCase

from symbolic_shifts.exceptions import AlphabetMismatch, UndefinedEntropy
from symbolic_shifts.forbidden import minimal_forbidden
from symbolic_shifts.graphs import (
    brute_force_equal, build_block_graph, per_count, per_enumerate, sft_count, sft_cover, sft_entropy,
    sft_equal, sft_language, sft_oracle,
)
from symbolic_shifts.specs import FiniteTypeSpec
from symbolic_shifts.words import Alphabet, is_subword

from .fixtures import BINARY, TERNARY, full_shift, golden_mean, word, words

PHI = (1 + math.sqrt(5)) / 2


def avoids(w, forbidden):
    return not any(is_subword(f, w) for f in forbidden)


def brute_languages(spec, N):
    """Words up to length N that avoid the forbidden list and extend without end on both sides."""
    memory = max(len(f) for f in spec.forbidden) - 1
    reach = len(spec.alphabet) ** memory + memory + 1

    def keep(w, side):
        if not memory:
            return ()
        return w[-memory:] if side > 0 else w[:memory]

    @functools.lru_cache(maxsize=None)
    def extends(state, side, steps):
        if not steps:
            return True
        for a in spec.alphabet:
            longer = state + (a,) if side > 0 else (a,) + state
            if avoids(longer, spec.forbidden) and extends(keep(longer, side), side, steps - 1):
                return True
        return False

    def allowed(w):
        return avoids(w, spec.forbidden) and extends(keep(w, 1), 1, reach) and extends(keep(w, -1), -1, reach)

    languages = {0: {()} if allowed(()) else set()}
    for n in range(1, N + 1):
        languages[n] = {u + (a,) for u in languages[n - 1] for a in spec.alphabet if allowed(u + (a,))}
    return languages


def brute_mfw(spec, N):
    languages = brute_languages(spec, N)
    found = {}
    for n in range(1, N + 1):
        for u in sorted(languages[n - 1]):
            for a in spec.alphabet:
                w = u + (a,)
                if w not in languages[n] and w[1:] in languages[n - 1]:
                    found.setdefault(n, []).append(w)
    return found


def brute_periodic(spec, p):
    return sum(
        1 for w in itertools.product(spec.alphabet, repeat=p)
        if avoids((w * (3 // p + 2))[:p + 3], spec.forbidden)
    )


def random_spec(rng, alphabet, longest=4):
    forbidden = set()
    for _ in range(rng.randint(1, 4)):
        length = rng.randint(2, longest)
        forbidden.add(tuple(rng.choice(alphabet.symbols) for _ in range(length)))
    return FiniteTypeSpec(alphabet, tuple(forbidden))


class BlockGraphTests(SimpleTestCase):
    """Test higher-block graphs of finite-type shifts"""

    def test_golden_mean_graph(self):
        """Test the golden mean graph has two vertices and three edges"""
        graph = build_block_graph(golden_mean())
        self.assertEqual(graph.vertices, (word('0'), word('1')))
        self.assertEqual(len(graph.edges), 3)

    def test_full_shift_single_vertex(self):
        """Test memory one gives the single empty vertex"""
        graph = build_block_graph(full_shift())
        self.assertEqual(graph.vertices, ((),))
        self.assertEqual(sft_count(graph, 5), 32)

    def test_stranded_vertices_removed(self):
        """Test vertices off every bi-infinite path are pruned"""
        spec = FiniteTypeSpec(BINARY, tuple(words('01', '11')))
        graph = build_block_graph(spec)
        self.assertEqual(graph.vertices, (word('0'),))

    def test_empty_shift(self):
        """Test an SFT forbidding every letter is empty"""
        graph = build_block_graph(FiniteTypeSpec(BINARY, tuple(words('0', '1'))))
        self.assertTrue(graph.is_empty)
        self.assertEqual(per_count(graph, 3), 0)
        with self.assertRaises(UndefinedEntropy):
            sft_entropy(graph)

    def test_count_matches_language(self):
        """Test matrix counting agrees with enumeration"""
        graph = build_block_graph(golden_mean())
        for n in range(1, 8):
            self.assertEqual(sft_count(graph, n), len(sft_language(graph, n)))


class EntropyAndPeriodicPointTests(SimpleTestCase):
    """Test entropy and periodic points"""

    def test_golden_mean_entropy(self):
        """Test the golden mean entropy is log φ"""
        self.assertAlmostEqual(sft_entropy(build_block_graph(golden_mean())), math.log(PHI), places=9)

    def test_full_shift_entropy(self):
        """Test the full 3-shift has entropy log 3"""
        self.assertAlmostEqual(sft_entropy(build_block_graph(full_shift(TERNARY))), math.log(3), places=9)

    def test_entropy_sandwich(self):
        """Test log p(n)/n decreases to within 0.05 of the entropy by n = 40"""
        for spec in (golden_mean(), FiniteTypeSpec(BINARY, tuple(words('11', '000')))):
            graph = build_block_graph(spec)
            h = sft_entropy(graph)
            rates = [math.log(sft_count(graph, n)) / n for n in (10, 20, 40)]
            self.assertEqual(rates, sorted(rates, reverse=True))
            self.assertGreaterEqual(rates[-1], h - 1e-12)
            self.assertLess(rates[-1] - h, 0.05)

    def test_lucas_numbers(self):
        """Test golden mean periodic points are the Lucas numbers"""
        graph = build_block_graph(golden_mean())
        self.assertEqual([per_count(graph, p) for p in range(1, 9)], [1, 3, 4, 7, 11, 18, 29, 47])

    def test_enumeration_matches_count(self):
        """Test the listed periodic points match the trace"""
        graph = build_block_graph(golden_mean())
        points = per_enumerate(graph, 4)
        self.assertEqual(len(points), 7)
        self.assertIn((word('0101'), 2), points.points)
        self.assertIn((word('0000'), 1), points.points)

    def test_random_specs_against_brute_force(self):
        """Test periodic counts of random SFTs against direct enumeration"""
        rng = random.Random(7)
        for _ in range(100):
            spec = random_spec(rng, rng.choice([BINARY, TERNARY]))
            graph = build_block_graph(spec)
            for p in range(1, 9):
                self.assertEqual(per_count(graph, p), brute_periodic(spec, p), (spec.forbidden, p))


class MinimalForbiddenWordsOfSFTTests(SimpleTestCase):
    """Test minimal forbidden words of finite-type shifts"""

    def test_random_specs_against_brute_force(self):
        """Test minimal forbidden words of random SFTs against direct enumeration"""
        rng = random.Random(11)
        checked = 0
        while checked < 200:
            spec = random_spec(rng, rng.choice([BINARY, TERNARY]))
            if build_block_graph(spec).is_empty:
                continue
            table = minimal_forbidden(sft_oracle(spec, 8), 8)
            got = {n: list(ws) for n, ws in table.by_length.items()}
            self.assertEqual(got, brute_mfw(spec, 8), spec.forbidden)
            checked += 1

    def test_random_languages_against_brute_force(self):
        """Test languages of random SFTs against direct enumeration"""
        rng = random.Random(13)
        for _ in range(50):
            spec = random_spec(rng, rng.choice([BINARY, TERNARY]))
            graph = build_block_graph(spec)
            languages = brute_languages(spec, 8)
            for n in range(1, 9):
                self.assertEqual(set(sft_language(graph, n)), languages[n], (spec.forbidden, n))

    def test_random_covers(self):
        """Test the length-8 cover of a random SFT is the same shift and its own cover"""
        rng = random.Random(17)
        checked = 0
        while checked < 200:
            spec = random_spec(rng, rng.choice([BINARY, TERNARY]))
            graph = build_block_graph(spec)
            if graph.is_empty:
                continue
            cover = sft_cover(sft_oracle(spec, 8), 8)
            self.assertTrue(sft_equal(graph, build_block_graph(cover)), spec.forbidden)
            self.assertEqual(sft_cover(sft_oracle(cover, 8), 8).forbidden, cover.forbidden)
            checked += 1

    def test_cover_is_same_shift(self):
        """Test the cover from minimal forbidden words presents the same shift"""
        spec = FiniteTypeSpec(BINARY, tuple(words('11', '101')))
        cover = sft_cover(sft_oracle(spec, 6), 6)
        self.assertTrue(sft_equal(build_block_graph(spec), build_block_graph(cover)))


class EqualityTests(SimpleTestCase):
    """Test equality of finite-type shifts"""

    def test_redundant_forbidden_word(self):
        """Test adding a consequence of a forbidden word keeps the shift"""
        g1 = build_block_graph(golden_mean())
        g2 = build_block_graph(FiniteTypeSpec(BINARY, tuple(words('11', '111', '0110'))))
        self.assertTrue(sft_equal(g1, g2))
        self.assertTrue(brute_force_equal(g1, g2, 8))

    def test_different_shifts(self):
        """Test the golden mean differs from the full shift"""
        self.assertFalse(sft_equal(build_block_graph(golden_mean()), build_block_graph(full_shift())))

    def test_alphabet_mismatch(self):
        """Test shifts over different alphabets are not compared"""
        with self.assertRaises(AlphabetMismatch):
            sft_equal(build_block_graph(golden_mean()), build_block_graph(full_shift(Alphabet(('a', 'b')))))
