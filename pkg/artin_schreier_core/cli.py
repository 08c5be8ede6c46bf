# coding: utf-8

# Copyright 2021 artin-schreier-core contributors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""The artin-schreier command line.

Exit codes: 0 success, 1 a verification claim failed or the oracle was
inconsistent, 2 usage, file or guard errors.
"""

import argparse
import logging
import sys
from typing import Dict, List, Optional, Sequence, Tuple

from .changemaking import ChangeMakingTable, CoinSet, is_tight, weight_lower_bound
from .computation_exception import ComputationException
from .curves import (CurveSpec, build_broad_family, build_gv_family, construct_slope_curve,
                     construct_small_genus_curve, format_curve, read_curve_file, support_analysis,
                     write_curve_file)
from .detailed_report import DetailedReport
from .get_point_counter import get_point_counter
from .minimizers import graph_cycles, maximal_minimizer, tightness_graph
from .padic import to_digit_form, weight
from .predict import predict_support, verify
from .psymmetry import census, census_ratio, detect
from .repro import REGISTRY, repro_tags, run_repro
from .run_config import RunConfig
from .utils import DEFAULT_CONFIG_NAME, fraction_to_string, parse_int_list
from .version import __version__
from .zeta import count_points, first_slope, is_supersingular, newton_polygon, numerator_from_counts

logger = logging.getLogger(__name__)

# a command returns its JSON-ready result, its exit code and the human-readable text
Outcome = Tuple[dict, int, str]


def _parse_terms(val: str) -> Dict[int, int]:
    """'1:1,2:3' -> {1: 1, 2: 3}"""
    terms = {}
    for item in (x.strip() for x in val.split(',') if x.strip()):
        key, sep, coeff = item.partition(':')
        try:
            terms[int(key)] = int(coeff) if sep else 1
        except ValueError:
            raise ValueError('Expected index:coefficient pairs, got \'{0}\''.format(val)) from None
    return terms


def _int_list(val: str) -> List[int]:
    try:
        return parse_int_list(val)
    except ValueError as err:
        raise argparse.ArgumentTypeError(str(err))


def _cmd_weight(args: argparse.Namespace, _: RunConfig) -> Outcome:
    form = to_digit_form(args.n, args.p)
    result = {'n': args.n, 'p': args.p, 'digits': form.to_dict()['digits'], 'weight': weight(args.n, args.p)}
    return result, 0, '{0} = {1}, s_{2} = {3}'.format(args.n, form, args.p, result['weight'])


def _cmd_change(args: argparse.Namespace, _: RunConfig) -> Outcome:
    coin_set = CoinSet(p=args.p, a=args.a, exponent_set=tuple(args.support))
    table = ChangeMakingTable(coin_set, args.target)
    report = is_tight(coin_set, args.target, table=table)
    result = {'coin_set': coin_set.to_dict(), 'tightness': report.to_dict()}
    lines = ['M_C({0}) = {1}'.format(args.target, report.solution_value if report.solution_value is not None
                                     else 'infeasible'),
             'lower bound {0}, tight: {1}'.format(fraction_to_string(weight_lower_bound(coin_set, args.target)),
                                                 report.tight)]
    if args.all_solutions:
        solutions = table.solutions(args.target)
        result['solutions'] = [s.to_dict() for s in solutions]
        for s in solutions:
            lines.append('  ' + ' + '.join('{0}*{1}'.format(t, i * args.p**j) for (i, j), t in s.multiplicities))
    return result, 0, '\n'.join(lines)


def _cmd_detect(args: argparse.Namespace, config: RunConfig) -> Outcome:
    verdict = detect(args.nu, args.p, args.kmax or config.k_max)
    result = verdict.to_dict()
    if verdict.symmetric:
        c = verdict.certificate
        text = '{0} * {1} = ({2}^{3} - 1) * {4}, shift factor {5}{6}'.format(
            c.nu, c.w, c.p, c.k, c.ell, c.shift_factor, '' if c.minimal else ' (minimality not proven)')
    else:
        text = 'no certificate with k <= {0}'.format(verdict.k_max)
    return result, 0, text


def _cmd_census(args: argparse.Namespace, config: RunConfig) -> Outcome:
    k_max = args.kmax or config.k_max
    found = census(args.p, args.digits, k_max, workers=max(config.threads, 1))
    ratio = census_ratio(args.p, args.digits, k_max)
    result = {'p': args.p, 'digits': args.digits, 'symmetric': found, 'ratio': fraction_to_string(ratio)}
    return result, 0, '{0}\nratio {1}'.format(', '.join(str(n) for n in found), ratio)


def _cmd_minimizer(args: argparse.Namespace, _: RunConfig) -> Outcome:
    coin_set = CoinSet(p=args.p, a=args.a, exponent_set=tuple(args.support))
    graph = tightness_graph(coin_set)
    cycles = graph_cycles(graph)
    maximal = maximal_minimizer(coin_set)
    height = maximal.height if maximal else 0
    result = {'edges': [list(e) for e in graph.edges], 'cycles': [list(c) for c in cycles], 'height': height}
    text = 'edges: {0}\ncycles: {1}\nheight: {2}'.format(
        ' '.join('{0}->{1}'.format(u, v) for u, v in graph.edges), cycles, height)
    return result, 0, text


def _emit_curve(spec: CurveSpec, out: Optional[str]) -> Outcome:
    if out:
        write_curve_file(spec, out)
    result = spec.to_dict()
    result['support_analysis'] = support_analysis(spec).to_dict()
    text = '{0}\ngenus {1}\n{2}'.format(spec, spec.genus, format_curve(spec).rstrip())
    return result, 0, text


def _cmd_curve_gv(args: argparse.Namespace, _: RunConfig) -> Outcome:
    spec = build_gv_family(args.p, args.a, args.nu, args.c_nu, _parse_terms(args.ai or ''), args.i_max)
    return _emit_curve(spec, args.out)


def _cmd_curve_slope(args: argparse.Namespace, _: RunConfig) -> Outcome:
    return _emit_curve(construct_slope_curve(args.p, args.n, args.genus_floor, args.extra or ()), args.out)


def _cmd_curve_small_genus(args: argparse.Namespace, _: RunConfig) -> Outcome:
    return _emit_curve(construct_small_genus_curve(args.p, args.n), args.out)


def _cmd_curve_broad(args: argparse.Namespace, _: RunConfig) -> Outcome:
    spec = build_broad_family(args.p, args.a, args.nu, args.c_nu, _parse_terms(args.low or ''))
    return _emit_curve(spec, args.out)


def _cmd_curve_show(args: argparse.Namespace, _: RunConfig) -> Outcome:
    return _emit_curve(read_curve_file(args.curve), None)


def _cmd_zeta(args: argparse.Namespace, config: RunConfig) -> Outcome:
    spec = read_curve_file(args.curve)
    through = args.through_degree or spec.genus
    counter = get_point_counter(config)
    counts = [count_points(spec, m, counter=counter, guard=config.field_size_guard) for m in range(1, through + 1)]
    result = {'curve': spec.to_dict(), 'counts': [r.to_dict() for r in counts]}
    lines = [str(spec)] + ['N_{0} = {1}'.format(r.m, r.points) for r in counts]
    if spec.genus and through >= spec.genus:
        numerator = numerator_from_counts(spec, counts[:spec.genus])
        polygon = newton_polygon(numerator)
        slope, mult = first_slope(polygon)
        result.update({'numerator': numerator.to_dict(), 'polygon': polygon.to_dict(),
                       'first_slope': {'slope': fraction_to_string(slope), 'multiplicity': mult},
                       'supersingular': is_supersingular(polygon)})
        lines.append('P(s) coefficients: {0}'.format(list(numerator.coefficients)))
        lines.append('vertices: {0}'.format(' '.join('({0}, {1})'.format(i, v) for i, v in polygon.vertices)))
        lines.append('first slope {0} with multiplicity {1}'.format(slope, mult))
    return result, 0, '\n'.join(lines)


def _cmd_predict(args: argparse.Namespace, config: RunConfig) -> Outcome:
    prediction = predict_support(args.p, args.support, args.kmax or config.k_max)
    text = '{0}: first slope {1} {2}'.format(
        prediction.basis.value, '>' if prediction.strict else ('=' if prediction.exact_slope is not None else '>='),
        prediction.lower_bound)
    if prediction.multiplicity is not None:
        text += ', multiplicity {0}'.format(prediction.multiplicity)
    elif prediction.multiplicity_interval is not None:
        text += ', multiplicity in [{0}, {1}]'.format(*prediction.multiplicity_interval)
    return prediction.to_dict(), 0, text


def _cmd_verify(args: argparse.Namespace, config: RunConfig) -> Outcome:
    spec = read_curve_file(args.curve)
    report = verify(spec, args.kmax or config.k_max, counter=get_point_counter(config),
                    guard=config.field_size_guard)
    lines = [str(spec)] + ['{0:<18} {1} {2}'.format(c.name, c.status.value, c.detail) for c in report.claims]
    lines.append('PASS' if report.passed else 'FAIL')
    return report.to_dict(), 0 if report.passed else 1, '\n'.join(lines)


def _cmd_repro(args: argparse.Namespace, config: RunConfig) -> Outcome:
    if args.list or not args.tag:
        return {'tags': repro_tags()}, 0, '\n'.join('{0:<18} {1}'.format(t, REGISTRY[t].description)
                                                  for t in repro_tags())
    result = run_repro(args.tag, config)
    lines = ['{0}: {1}'.format(result.tag, result.description)]
    lines.extend('  {0} {1} {2}'.format(c.status.value, c.name, c.detail) for c in result.checks)
    lines.append(result.status.value)
    return result.to_dict(), 0 if result.passed else 1, '\n'.join(lines)


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--json', action='store_true', help='emit a JSON report')
    parser.add_argument('--verbose', '-v', action='store_true', help='log at DEBUG level')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='artin-schreier',
                                     description='p-adic combinatorics and first slopes of Artin-Schreier curves.')
    parser.add_argument('--version', action='version', version='%(prog)s ' + __version__)
    parser.add_argument('--config', default=DEFAULT_CONFIG_NAME, help='configuration name (key prefix)')
    parser.add_argument('--guard', type=int, help='largest field size the point counter may enumerate')
    parser.add_argument('--threads', type=int, help='point-counting workers, 0 for one per CPU')
    commands = parser.add_subparsers(dest='command', metavar='COMMAND')
    commands.required = True

    cmd = commands.add_parser('weight', help='base-p digits and weight of N')
    cmd.add_argument('--p', type=int, required=True)
    cmd.add_argument('--n', type=int, required=True)
    cmd.set_defaults(handler=_cmd_weight)

    cmd = commands.add_parser('change', help='change-making over the coins i*p^j')
    cmd.add_argument('--p', type=int, required=True)
    cmd.add_argument('--a', type=int, required=True)
    cmd.add_argument('--support', type=_int_list, required=True, help='comma-separated exponents')
    cmd.add_argument('--target', type=int, required=True)
    cmd.add_argument('--all-solutions', action='store_true')
    cmd.set_defaults(handler=_cmd_change)

    cmd = commands.add_parser('detect', help='search for a p-symmetry certificate')
    cmd.add_argument('--nu', type=int, required=True)
    cmd.add_argument('--p', type=int, required=True)
    cmd.add_argument('--kmax', type=int)
    cmd.set_defaults(handler=_cmd_detect)

    cmd = commands.add_parser('census', help='p-symmetric numbers with a given digit count')
    cmd.add_argument('--p', type=int, required=True)
    cmd.add_argument('--digits', type=int, required=True)
    cmd.add_argument('--kmax', type=int)
    cmd.set_defaults(handler=_cmd_census)

    cmd = commands.add_parser('minimizer', help='tightness graph and maximal minimizer')
    cmd.add_argument('--p', type=int, required=True)
    cmd.add_argument('--a', type=int, required=True)
    cmd.add_argument('--support', type=_int_list, required=True)
    cmd.set_defaults(handler=_cmd_minimizer)

    curve = commands.add_parser('curve', help='build or inspect curve files')
    curve_commands = curve.add_subparsers(dest='curve_command', metavar='ACTION')
    curve_commands.required = True
    build = curve_commands.add_parser('build', help='build a curve from a family')
    builders = build.add_subparsers(dest='family', metavar='FAMILY')
    builders.required = True

    cmd = builders.add_parser('gv', help='c_nu x^nu + sum a_i x^(1 + p^i)')
    cmd.add_argument('--p', type=int, required=True)
    cmd.add_argument('--a', type=int, default=1)
    cmd.add_argument('--nu', type=int, required=True)
    cmd.add_argument('--c-nu', type=int, default=1)
    cmd.add_argument('--ai', help='comma-separated i:a_i pairs')
    cmd.add_argument('--i-max', type=int, required=True)
    cmd.add_argument('--out')
    cmd.set_defaults(handler=_cmd_curve_gv)

    cmd = builders.add_parser('slope', help='first slope 1/n with genus at least a floor')
    cmd.add_argument('--p', type=int, required=True)
    cmd.add_argument('--n', type=int, required=True)
    cmd.add_argument('--genus-floor', type=int, default=0)
    cmd.add_argument('--extra', type=_int_list, help='exponents 1 + p^i1 + ... + p^im, m <= n - 2')
    cmd.add_argument('--out')
    cmd.set_defaults(handler=_cmd_curve_slope)

    cmd = builders.add_parser('small-genus', help='x^((p^n - 1)/(p - 1))')
    cmd.add_argument('--p', type=int, required=True)
    cmd.add_argument('--n', type=int, required=True)
    cmd.add_argument('--out')
    cmd.set_defaults(handler=_cmd_curve_small_genus)

    cmd = builders.add_parser('broad', help='c_nu x^nu + g with every weight of g below s_p(nu)')
    cmd.add_argument('--p', type=int, required=True)
    cmd.add_argument('--a', type=int, default=1)
    cmd.add_argument('--nu', type=int, required=True)
    cmd.add_argument('--c-nu', type=int, default=1)
    cmd.add_argument('--low', help='comma-separated i:c pairs')
    cmd.add_argument('--out')
    cmd.set_defaults(handler=_cmd_curve_broad)

    cmd = curve_commands.add_parser('show', help='parse, normalize and describe a curve file')
    cmd.add_argument('--curve', required=True)
    cmd.set_defaults(handler=_cmd_curve_show)

    cmd = commands.add_parser('zeta', help='point counts, zeta numerator and Newton polygon')
    cmd.add_argument('--curve', required=True)
    cmd.add_argument('--through-degree', type=int)
    cmd.set_defaults(handler=_cmd_zeta)

    cmd = commands.add_parser('predict', help='predict the first slope from the support')
    cmd.add_argument('--p', type=int, required=True)
    cmd.add_argument('--support', type=_int_list, required=True)
    cmd.add_argument('--kmax', type=int)
    cmd.set_defaults(handler=_cmd_predict)

    cmd = commands.add_parser('verify', help='check a prediction against the zeta oracle')
    cmd.add_argument('--curve', required=True)
    cmd.add_argument('--kmax', type=int)
    cmd.set_defaults(handler=_cmd_verify)

    cmd = commands.add_parser('repro', help='run a scripted reproduction')
    cmd.add_argument('tag', nargs='?', help='one of: ' + ', '.join(repro_tags()))
    cmd.add_argument('--list', action='store_true')
    cmd.set_defaults(handler=_cmd_repro)

    for sub in (commands, curve_commands, builders):
        for name, sub_parser in sub.choices.items():
            if name not in ('curve', 'build'):
                _add_common(sub_parser)
    return parser


def _configure(args: argparse.Namespace) -> RunConfig:
    config = RunConfig().configure(args.config)
    if args.guard is not None:
        config.set_field_size_guard(args.guard)
    if args.threads is not None:
        config.set_threads(args.threads)
    if args.json:
        config.set_output('json')
    if args.verbose:
        config.set_log_level('DEBUG')
    return config


def _command_name(args: argparse.Namespace) -> str:
    parts = [args.command, getattr(args, 'curve_command', None), getattr(args, 'family', None)]
    return ' '.join(p for p in parts if p)


def dispatch(argv: Optional[Sequence[str]] = None) -> int:
    """Run one command and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return err.code if isinstance(err.code, int) else 2
    try:
        config = _configure(args)
    except (TypeError, ValueError) as err:
        print('error: {0}'.format(err), file=sys.stderr)
        return 2
    logging.basicConfig(level=config.log_level, format='%(levelname)s %(name)s: %(message)s')
    logging.getLogger().setLevel(config.log_level)

    command = _command_name(args)
    error = None
    try:
        result, code, text = args.handler(args, config)
    except ComputationException as err:
        code = 2 if err.code in (ComputationException.USAGE, ComputationException.GUARD_EXCEEDED) else 1
        result, text, error = {'error': err.message, 'code': err.code, 'details': err.details}, None, str(err)
        if code == 1:
            logger.exception('%s failed', command)
    except (OSError, TypeError, ValueError) as err:
        code, result, text, error = 2, {'error': str(err)}, None, str(err)

    if config.output == 'json':
        print(DetailedReport(result=result, command=command, exit_code=code))
    elif text is not None:
        print(text)
    if error is not None:
        print('error: {0}'.format(error), file=sys.stderr)
    return code


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))
