import argparse
import logging

from django.core.management.base import BaseCommand, CommandError, CommandParser
from rest_framework import serializers

from symbolic_shifts import beta_shifts, dynamics, forbidden, graphs, measures, sofic
from symbolic_shifts.beta_numbers import FINITE, BetaNumber, beta_expand, star_expansion
from symbolic_shifts.exceptions import ShiftError, UnsupportedSpec
from symbolic_shifts.oracles import beta_stream, oracle_from_spec, presentation_from_spec
from symbolic_shifts.reports import JSON, TEXT, envelope, render
from symbolic_shifts.serializers import load_block_code, read_document
from symbolic_shifts.settings import overridden, shift_settings
from symbolic_shifts.signals import report_emitted
from symbolic_shifts.specs import BetaSpec, FiniteTypeSpec, InducedSpec, SoficSpec, Substitution
from symbolic_shifts.utils import rate_function
from symbolic_shifts.words import complexity, enumerate_language, special_words

logger = logging.getLogger(__name__)


class Command(BaseCommand):
    help = 'Languages, forbidden words, measures and diagnostics of symbolic shifts.'

    def add_arguments(self, parser):
        self._output_flags(parser, TEXT, None)
        # the same flags after the subcommand; only set when given there
        common = argparse.ArgumentParser(add_help=False)
        self._output_flags(common, argparse.SUPPRESS, argparse.SUPPRESS)

        class SubParser(CommandParser):
            def __init__(self, **kwargs):
                kwargs.setdefault('called_from_command_line', parser.called_from_command_line)
                kwargs.setdefault('parents', [common])
                super().__init__(**kwargs)

        parser_class = SubParser
        commands = parser.add_subparsers(dest='command', required=True, parser_class=parser_class)

        def command(name, *flags, document=True, **kwargs):
            sub = commands.add_parser(name, **kwargs)
            if document:
                sub.add_argument('document', help='Shift document (JSON).')
            for flag in flags:
                self._flag(sub, flag)
            return sub

        command('lang', 'length')
        command('complexity', 'length')
        command('special', 'length')
        command('mfw', 'horizon')
        command('ls', 'horizon')
        command('well-approx', 'horizon').add_argument('--alpha', default='n')
        command('entropy')
        command('periodic', 'period')
        command('nu', 'period', 'depth').add_argument('--compare-parry', action='store_true')
        command('parry', 'depth')
        command('decompose', 'depth').add_argument('--cutoff', type=int, default=8)
        command('push', 'period', 'depth')
        auto = command('autocheck', 'period', 'depth', 'tol')
        auto.add_argument('code', help='Block code (JSON).')
        auto.add_argument('inverse', help='Inverse block code (JSON).')

        beta = commands.add_parser('beta').add_subparsers(dest='beta_command', required=True,
                                                          parser_class=parser_class)
        expand = beta.add_parser('expand')
        expand.add_argument('literal')
        expand.add_argument('--digits', type=int, default=16)
        for name, flags in (('mfw', ('horizon',)), ('lsdiag', ('horizon',)), ('graph', ())):
            sub = beta.add_parser(name)
            sub.add_argument('document')
            for flag in flags:
                self._flag(sub, flag)
        example = beta.add_parser('example')
        example.add_argument('--mode', choices=['specified', 'synchronized'], default='specified')
        example.add_argument('--steps', type=int, default=2)

        subst = commands.add_parser('subst').add_subparsers(dest='subst_command', required=True,
                                                            parser_class=parser_class)
        for name, flag in (('lang', 'length'), ('profile', 'horizon')):
            sub = subst.add_parser(name)
            sub.add_argument('document')
            self._flag(sub, flag)
            if name == 'profile':
                sub.add_argument('--k', type=int, default=2)

        command('induce', 'length', 'horizon')
        command('speedup-compare', 'horizon').add_argument('--base-horizon', type=int)

        so = commands.add_parser('sofic').add_subparsers(dest='sofic_command', required=True,
                                                         parser_class=parser_class)
        so.add_parser('det').add_argument('document')
        eq = so.add_parser('eq')
        eq.add_argument('document')
        eq.add_argument('other')
        so.add_parser('issft').add_argument('document')
        thm1 = so.add_parser('thm1')
        thm1.add_argument('document')
        self._flag(thm1, 'horizon')

        command('tau', document=False).add_argument('--n', type=int, required=True)

    @staticmethod
    def _output_flags(parser, format_default, cap_default):
        parser.add_argument('--format', choices=[TEXT, JSON], default=format_default)
        parser.add_argument('--cap', type=int, default=cap_default, help='Enumeration cap for this run.')

    @staticmethod
    def _flag(parser, name):
        if name == 'length':
            parser.add_argument('--length', type=int, default=4)
        elif name == 'horizon':
            parser.add_argument('--horizon', type=int)
        elif name == 'period':
            parser.add_argument('--period', type=int, default=8)
        elif name == 'depth':
            parser.add_argument('--depth', type=int)
        elif name == 'tol':
            parser.add_argument('--tol', type=float)

    def handle(self, *args, **options):
        name = options['command']
        for group in ('beta', 'subst', 'sofic'):
            if name == group:
                name = f'{group} {options[group + "_command"]}'
        if options.get('horizon') is None:
            options['horizon'] = shift_settings.DEFAULT_HORIZON
        if options.get('depth') is None:
            options['depth'] = shift_settings.DEFAULT_DEPTH
        if options.get('tol') is None:
            options['tol'] = shift_settings.DEFAULT_TOLERANCE
        handler = getattr(self, 'do_' + name.replace(' ', '_').replace('-', '_'))
        overrides = {'ENUMERATION_CAP': options['cap']} if options.get('cap') else {}
        try:
            with overridden(**overrides):
                report = handler(options)
        except serializers.ValidationError as exc:
            raise CommandError(f'Invalid document: {exc.detail}', returncode=2)
        except ShiftError as exc:
            raise CommandError(f'{exc.default_code}: {exc.detail}', returncode=1)
        except OSError as exc:
            raise CommandError(str(exc), returncode=2)
        output = render(report, options['format'])
        self.stdout.write(output)
        report_emitted.send(sender=self.__class__, command=name, report=report)
        logger.debug(f'{name}: report emitted')

    # documents

    def _spec(self, options, key='document'):
        return read_document(options[key]).to_spec()

    def _oracle(self, options, horizon):
        return oracle_from_spec(self._spec(options), horizon)

    def _finite_type(self, options) -> FiniteTypeSpec:
        spec = self._spec(options)
        if not isinstance(spec, FiniteTypeSpec):
            raise UnsupportedSpec(f'This command needs a finite-type shift, got {spec.kind}.')
        return spec

    def _image(self, options) -> SoficSpec:
        spec = self._spec(options)
        if not isinstance(spec, SoficSpec) or not spec.is_image:
            raise UnsupportedSpec('This command needs a sofic shift given as the image of a code.')
        return spec

    def _source(self, options):
        spec = self._spec(options)
        if isinstance(spec, FiniteTypeSpec):
            return graphs.build_block_graph(spec)
        return presentation_from_spec(spec)

    # core language

    def do_lang(self, options):
        n = options['length']
        oracle = self._oracle(options, n)
        return envelope('lang', {'length': n, 'words': enumerate_language(oracle, n)}, n)

    def do_complexity(self, options):
        n = options['length']
        oracle = self._oracle(options, n)
        return envelope('complexity', {k: complexity(oracle, k) for k in range(n + 1)}, n)

    def do_special(self, options):
        n = options['length']
        oracle = self._oracle(options, n + 1)
        return envelope('special', special_words(oracle, n), n + 1)

    # forbidden words

    def do_mfw(self, options):
        H = options['horizon']
        table = forbidden.minimal_forbidden(self._oracle(options, H), H)
        return envelope('mfw', table.by_length, H)

    def do_ls(self, options):
        H = options['horizon']
        report = forbidden.ls_report(forbidden.minimal_forbidden(self._oracle(options, H), H))
        return envelope('ls', report, H)

    def do_well_approx(self, options):
        H = options['horizon']
        witnesses = forbidden.well_approx_check(self._oracle(options, H), rate_function(options['alpha']), H)
        return envelope('well-approx', {'alpha': options['alpha'], 'witnesses': witnesses}, H)

    # graphs and measures

    def do_entropy(self, options):
        source = self._source(options)
        if isinstance(source, graphs.BlockGraph):
            value = graphs.sft_entropy(source)
        else:
            value = sofic.sofic_entropy(source)
        return envelope('entropy', {'entropy': value})

    def do_periodic(self, options):
        p = options['period']
        source = self._source(options)
        if isinstance(source, graphs.BlockGraph):
            points = graphs.per_enumerate(source, p)
            result = {'count': graphs.per_count(source, p), 'points': points.points}
        else:
            points = sofic.sofic_per_enumerate(source, p)
            result = {'count': len(points), 'points': points.points}
        return envelope('periodic', result)

    def do_nu(self, options):
        n, depth = options['period'], options['depth']
        source = self._source(options)
        if isinstance(source, graphs.BlockGraph):
            nu = measures.nu_cylinder_measure(source, n, depth)
        else:
            nu = measures.CylinderMeasure.tabulate(measures.nu_measure(source, n), depth)
        result = {'period': n, 'depth': depth, 'cylinders': nu.values}
        if options['compare_parry']:
            if not isinstance(source, graphs.BlockGraph):
                raise UnsupportedSpec('The Parry measure needs a finite-type shift.')
            parry = measures.parry_measure(source)
            result['parry_distance'] = measures.weak_star_distance(nu, parry, depth)
        return envelope('nu', result)

    def do_parry(self, options):
        depth = options['depth']
        parry = measures.parry_measure(graphs.build_block_graph(self._finite_type(options)))
        table = measures.CylinderMeasure.tabulate(parry, depth)
        return envelope('parry', {'entropy': parry.entropy(), 'depth': depth, 'cylinders': table.values})

    def do_decompose(self, options):
        spec = self._image(options)
        components = measures.max_entropy_decomposition(spec, options['depth'])
        average = measures.mu_Y_average(components, options['cutoff'])
        result = {
            'components': [
                {'entropy': c.entropy, 'states': len(c.graph.states), 'cylinders': c.measure.values}
                for c in components
            ],
            'average': {'weights': average.weights, 'cutoff': average.cutoff,
                        'cylinders': average.measure.values},
        }
        return envelope('decompose', result)

    def do_push(self, options):
        spec = self._image(options)
        nu = measures.nu_measure(graphs.build_block_graph(spec.source), options['period'])
        image = measures.pushforward(nu, spec.code)
        table = measures.CylinderMeasure.tabulate(image, options['depth'])
        return envelope('push', {'period': options['period'], 'cylinders': table.values})

    def do_autocheck(self, options):
        source = self._source(options)
        code = self._read_code(options['code'], source.alphabet)
        inverse = self._read_code(options['inverse'], code.target)
        report = measures.automorphism_invariance_check(
            source, code, inverse, options['period'], options['depth'], options['tol'],
        )
        return envelope('autocheck', report)

    @staticmethod
    def _read_code(path, alphabet):
        with open(path, encoding='utf-8') as handle:
            return load_block_code(handle.read(), alphabet)

    # β-shifts

    def do_beta_expand(self, options):
        expansion = beta_expand(BetaNumber.parse(options['literal']), options['digits'])
        result = {'expansion': expansion}
        if expansion.status == FINITE:
            star = star_expansion(expansion)
            result['star'] = {'digits': star.digits, 'period': star.period}
        return envelope('beta expand', result)

    def _stream(self, options):
        spec = self._spec(options)
        if not isinstance(spec, BetaSpec):
            raise UnsupportedSpec(f'This command needs a β-shift, got {spec.kind}.')
        return beta_stream(spec)

    def do_beta_mfw(self, options):
        H = options['horizon']
        table = beta_shifts.beta_mfw(self._stream(options), H)
        return envelope('beta mfw', table.by_length, H)

    def do_beta_lsdiag(self, options):
        H = options['horizon']
        return envelope('beta lsdiag', beta_shifts.beta_ls_diagnostic(self._stream(options), H), H)

    def do_beta_graph(self, options):
        graph = beta_shifts.beta_presentation(self._stream(options))
        result = {'transitions': sorted(graph.transitions), 'is_sft': sofic.is_sft(graph)}
        return envelope('beta graph', result)

    def do_beta_example(self, options):
        stream = beta_shifts.example_betashift(options['mode'], options['steps'])
        valid = beta_shifts.validate_expansion(stream, len(stream.digits))
        return envelope('beta example', {'digits': ''.join(map(str, stream.digits)), 'valid': valid},
                        len(stream.digits))

    # substitutions and induced systems

    def _substitution(self, options) -> Substitution:
        spec = self._spec(options)
        if not isinstance(spec, Substitution):
            raise UnsupportedSpec(f'This command needs a substitution, got {spec.kind}.')
        return spec

    def do_subst_lang(self, options):
        n = options['length']
        return envelope('subst lang', dynamics.subst_language(self._substitution(options), n), n)

    def do_subst_profile(self, options):
        H = options['horizon']
        oracle = dynamics.substitution_oracle(self._substitution(options), H)
        result = {
            'profile': dynamics.cassaigne_profile(oracle, H - 1),
            'bispecial_lengths': dynamics.bispecial_lengths(oracle, H - 1),
            'aperiodicity': dynamics.aperiodicity_check(oracle, options['k'], H),
        }
        return envelope('subst profile', result, H)

    def _induced(self, options) -> InducedSpec:
        spec = self._spec(options)
        if not isinstance(spec, InducedSpec):
            raise UnsupportedSpec(f'This command needs an induced shift, got {spec.kind}.')
        return spec

    def do_induce(self, options):
        n, H = options['length'], options['horizon']
        recoding = dynamics.induced_recoding(self._induced(options), H)
        oracle = recoding.oracle(H)
        result = {
            'letters': recoding.letters,
            'returns': recoding.returns,
            'words': enumerate_language(oracle, n),
        }
        notes = [dynamics.HOMEOMORPHISM_UNCHECKED]
        return envelope('induce', result, oracle.max_reliable_length, notes=notes)

    def do_speedup_compare(self, options):
        report = dynamics.speedup_gap_compare(
            self._induced(options), options['horizon'], options['base_horizon']
        )
        return envelope('speedup-compare', report, report.horizon, notes=list(report.unchecked))

    # sofic shifts

    def do_sofic_det(self, options):
        det = sofic.determinize(presentation_from_spec(self._spec(options)))
        return envelope('sofic det', {'states': len(det.states), 'transitions': sorted(det.transitions)})

    def do_sofic_eq(self, options):
        g1 = presentation_from_spec(self._spec(options))
        g2 = presentation_from_spec(self._spec(options, 'other'))
        return envelope('sofic eq', {'equal': sofic.same_shift(g1, g2)})

    def do_sofic_issft(self, options):
        graph = presentation_from_spec(self._spec(options))
        return envelope('sofic issft', {'is_sft': sofic.is_sft(graph)})

    def do_sofic_thm1(self, options):
        H = options['horizon']
        graph = presentation_from_spec(self._spec(options))
        return envelope('sofic thm1', sofic.sofic_density_diagnostic(graph, H), H)

    def do_tau(self, options):
        return envelope('tau', {'n': options['n'], 'tau': forbidden.tau_eval(options['n'])})
