"""Command-line interface.

Every sub-command reads codes given either as a family spec string (see
`families.build_from_spec_string`) or as a matrix file, and writes either a
matrix in the text format of `matfq` or a report as JSON (keys sorted), CSV or
plain text.  Reports always include the seed.

Exit status is 0 on success, 1 on a domain error or unreadable input, and 2 on
a usage error.
"""

from typing import (Any, Callable, Dict, List, NamedTuple, Optional, Sequence,
                    Tuple, Union)
import argparse
import csv
import io
import json
import logging
import os
import sys

import atomicwrites
import jsonschema
import numpy as np

from .errors import (SpecFormatError, StarcodeError, TooLargeToEnumerate,
                     ZeroCode)
from . import distinguish
from . import ecp
from . import families
from .families import AgCodeSpec
from . import field
from . import hull
from . import linear_code
from .linear_code import LinearCode
from . import matfq
from . import spec_parsing
from . import sss

logger = logging.getLogger(__name__)

ExperimentConfig = NamedTuple('ExperimentConfig', [
    ('command', str),
    ('code', Optional[str]),
    ('seed', int),
    ('trials', Optional[int]),
    ('output_format', str),
    ('output', Optional[str]),
])

# Either a report or the text of a matrix file.
Result = Union[Dict[str, Any], str]

FIELD_OPS_ARITY = {
    'info': 0,
    'enumerate': 0,
    'neg': 1,
    'inv': 1,
    'add': 2,
    'mul': 2,
}


def _seed(x: str) -> int:
    value = int(x)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError('seed must be in [0, 2^64)')
    return value


def get_common_argparser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(add_help=False)
    ap.add_argument(
        '--seed',
        type=_seed,
        default=0,
        help='Seed for all randomized operations.')
    ap.add_argument(
        '--format',
        dest='output_format',
        choices=['json', 'csv', 'text'],
        default='json',
        help='Report format.  Matrices are always written in matrix format.')
    ap.add_argument(
        '--output', type=str, help='Output file (default: standard output).')
    ap.add_argument(
        '--log-output',
        type=str,
        help='Filename to which log output will be written.')
    ap.add_argument(
        '-d',
        '--debug',
        help='Set log verbosity to DEBUG.',
        action='store_const',
        dest='loglevel',
        const=logging.DEBUG,
        default=logging.WARNING)
    ap.add_argument(
        '-v',
        '--verbose',
        help='Set log verbosity to INFO.',
        action='store_const',
        dest='loglevel',
        const=logging.INFO)
    return ap


def _add_code_argument(ap: argparse.ArgumentParser, required: bool = True,
                       name: str = '--code') -> None:
    names = [name, '--spec'] if name == '--code' else [name]
    ap.add_argument(
        *names,
        dest=name.lstrip('-').replace('-', '_'),
        required=required,
        help='Family spec string such as "rs:q=7,n=7,k=3", or a matrix file.')


def parse_arguments(argv, **kwargs):
    common = get_common_argparser()
    argparser = argparse.ArgumentParser(
        prog='starcode',
        description='Star products, decoding, distinguishing, secret sharing '
        'and quadratic hulls of linear codes.')
    subparsers = argparser.add_subparsers(dest='command', metavar='COMMAND')
    subparsers.required = True

    ap = subparsers.add_parser(
        'field', parents=[common], help='Finite field arithmetic.')
    ap.add_argument('--field', required=True, help='Field as "p^m" or q.')
    ap.add_argument(
        '--op', required=True, choices=sorted(FIELD_OPS_ARITY))
    ap.add_argument('--a', type=int, help='First operand (encoding).')
    ap.add_argument('--b', type=int, help='Second operand (encoding).')
    ap.set_defaults(func=run_field)

    ap = subparsers.add_parser(
        'code', parents=[common], help='Build and transform codes.')
    ap.add_argument(
        'action',
        choices=[
            'info', 'emit', 'dual', 'shorten', 'puncture', 'subfield',
            'subcode', 'degenerate', 'gamma'
        ])
    _add_code_argument(ap)
    ap.add_argument(
        '--coords',
        type=str,
        help='Comma-separated 0-based coordinates for shorten and puncture.')
    ap.add_argument('--dim', type=int, help='Dimension for subcode.')
    ap.set_defaults(func=run_code)

    ap = subparsers.add_parser(
        'star', parents=[common], help='Star product of two codes.')
    _add_code_argument(ap, name='--a')
    _add_code_argument(ap, name='--b')
    ap.add_argument(
        '--emit',
        action='store_true',
        help='Write the product code as a matrix instead of a report.')
    ap.set_defaults(func=run_star)

    ap = subparsers.add_parser(
        'decode', parents=[common], help='Error-correcting-pairs decoding.')
    _add_code_argument(ap)
    ap.add_argument('--t', type=int, required=True, help='Decoding radius.')
    ap.add_argument(
        '--y',
        required=True,
        help='Received word as comma-separated encodings.')
    _add_code_argument(ap, required=False, name='--aux')
    ap.set_defaults(func=run_decode)

    ap = subparsers.add_parser(
        'distinguish', parents=[common], help='Square-code distinguisher.')
    _add_code_argument(ap)
    ap.add_argument(
        '--audit',
        action='store_true',
        help='Also run the distinguisher on the dual code.')
    ap.set_defaults(func=run_distinguish)

    ap = subparsers.add_parser(
        'experiment', parents=[common], help='Randomized experiments.')
    ap.add_argument('action', choices=['random-square', 'relaxed-decode'])
    ap.add_argument('--q', type=str, help='Field for random-square.')
    ap.add_argument('--n', type=int)
    ap.add_argument('--k', type=int)
    ap.add_argument('--trials', type=int, default=200)
    _add_code_argument(ap, required=False, name='--control')
    _add_code_argument(ap, required=False)
    _add_code_argument(ap, required=False, name='--aux')
    ap.add_argument('--t', type=int, help='Decoding radius.')
    ap.add_argument('--weight', type=int, help='Weight of the random errors.')
    ap.set_defaults(func=run_experiment)

    ap = subparsers.add_parser(
        'share', parents=[common], help='Secret sharing with a code.')
    ap.add_argument('action', choices=['deal', 'reconstruct', 'audit', 'multiply'])
    _add_code_argument(ap)
    ap.add_argument('--secret', type=int, help='Secret to deal (encoding).')
    ap.add_argument('--packet', type=str, help='Share packet JSON file.')
    ap.add_argument(
        '--packet2', type=str, help='Second share packet JSON file.')
    ap.add_argument(
        '--players',
        type=str,
        help='Comma-separated players whose shares are used.')
    ap.add_argument(
        '--r-max',
        dest='r_max',
        type=int,
        help='Largest coalition size to audit.')
    ap.set_defaults(func=run_share)

    ap = subparsers.add_parser(
        'hull', parents=[common], help='Quadratic hull of a code.')
    _add_code_argument(ap)
    ap.add_argument(
        '--points', action='store_true', help='List the hull points.')
    ap.set_defaults(func=run_hull)

    argparser.set_defaults(**kwargs)
    args = argparser.parse_args(argv)
    _check_required(argparser, args)
    return args


_REQUIRED = {
    ('code', 'shorten'): ['coords'],
    ('code', 'puncture'): ['coords'],
    ('code', 'subcode'): ['dim'],
    ('experiment', 'random-square'): ['q', 'n', 'k'],
    ('experiment', 'relaxed-decode'): ['code', 't', 'weight'],
    ('share', 'deal'): ['secret'],
    ('share', 'reconstruct'): ['packet'],
    ('share', 'audit'): ['r_max'],
    ('share', 'multiply'): ['packet', 'packet2'],
}


def _check_required(argparser: argparse.ArgumentParser,
                    args: argparse.Namespace) -> None:
    if args.command == 'field':
        needed = ['a', 'b'][:FIELD_OPS_ARITY[args.op]]
        context = 'field --op %s' % args.op
    else:
        action = getattr(args, 'action', None)
        needed = _REQUIRED.get((args.command, action), [])
        context = '%s %s' % (args.command, action)
    for name in needed:
        if getattr(args, name) is None:
            argparser.error('%s requires --%s' %
                            (context, name.replace('_', '-')))


def experiment_config(args: argparse.Namespace) -> ExperimentConfig:
    return ExperimentConfig(
        command=args.command,
        code=getattr(args, 'code', None),
        seed=args.seed,
        trials=getattr(args, 'trials', None),
        output_format=args.output_format,
        output=args.output)


def load_code(x: str) -> Tuple[LinearCode, Optional[AgCodeSpec]]:
    """Reads a code from a spec string or, if `x` names a file, a matrix file."""
    if spec_parsing.looks_like_code_spec(x) and not os.path.exists(x):
        return families.build_from_spec_string(x)
    return linear_code.from_generator(matfq.read_matrix_file(x)), None


def _ints(a) -> List[int]:
    return [int(x) for x in a]


def _matrix_result(code: LinearCode, config: ExperimentConfig) -> str:
    return '# seed %d\n' % config.seed + matfq.format_matrix(code.gen)


def run_field(args: argparse.Namespace) -> Result:
    ctx = spec_parsing.parse_field(args.field)
    if args.op == 'info':
        return {
            'field': str(ctx),
            'p': ctx.p,
            'm': ctx.m,
            'q': ctx.q,
            'modulus': list(ctx.modulus),
            'primitive_element': ctx.primitive_element,
        }
    if args.op == 'enumerate':
        return {
            'field': str(ctx),
            'elements': [e.value for e in field.enumerate_elements(ctx)],
        }
    a = ctx.element(args.a)
    if args.op == 'neg':
        value = field.neg(a)
    elif args.op == 'inv':
        value = field.inv(a)
    else:
        b = ctx.element(args.b)
        value = field.add(a, b) if args.op == 'add' else field.mul(a, b)
    return {'field': str(ctx), 'op': args.op, 'result': value.value}


def _code_info(code: LinearCode,
               spec: Optional[AgCodeSpec]) -> Dict[str, Any]:
    try:
        d = linear_code.min_distance(code)  # type: Optional[int]
    except (TooLargeToEnumerate, ZeroCode):
        d = None
    info = {
        'field': str(code.ctx),
        'n': code.n,
        'k': code.k,
        'd': d,
        'd_star': None,
    }  # type: Dict[str, Any]
    if spec is not None:
        params = families.designed_params(spec)
        info['d_star'] = params.d_star
        info['family'] = spec.family
        info['genus'] = spec.genus
        info['k_lower'] = params.k_lower
    return info


def run_code(args: argparse.Namespace) -> Result:
    config = experiment_config(args)
    code, spec = load_code(args.code)
    if args.action == 'info':
        return _code_info(code, spec)
    if args.action == 'emit':
        return _matrix_result(code, config)
    if args.action == 'dual':
        return _matrix_result(linear_code.dual(code), config)
    if args.action == 'shorten':
        return _matrix_result(
            linear_code.shorten(code,
                                spec_parsing.parse_coordinate_set(args.coords)),
            config)
    if args.action == 'puncture':
        return _matrix_result(
            linear_code.puncture(
                code, spec_parsing.parse_coordinate_set(args.coords)), config)
    if args.action == 'subfield':
        return _matrix_result(
            linear_code.subfield_subcode(code, field.field_create(code.ctx.p)),
            config)
    if args.action == 'subcode':
        return _matrix_result(
            linear_code.random_subcode(code, args.dim, args.seed), config)
    if args.action == 'degenerate':
        result = linear_code.is_degenerate(code)
        return {
            'degenerate': result.degenerate,
            'components': [{
                'k': c.k,
                'support': _ints(np.nonzero(np.any(c.gen.entries, axis=0))[0]),
            } for c in result.components],
        }
    assert args.action == 'gamma'
    return {
        'k': code.k,
        'dim_square': linear_code.square(code).k,
        'gamma': linear_code.gamma(code),
    }


def run_star(args: argparse.Namespace) -> Result:
    a, _ = load_code(args.a)
    b, _ = load_code(args.b)
    product = linear_code.star_product(a, b)
    if args.emit:
        return _matrix_result(product, experiment_config(args))
    return {'n': product.n, 'dim': product.k}


def _outcome_json(outcome: ecp.DecodeOutcome) -> Dict[str, Any]:
    return {
        'status': outcome.status,
        'codeword': (None if outcome.codeword is None else
                     _ints(outcome.codeword)),
        'error': None if outcome.error is None else _ints(outcome.error),
        'locator_dim': outcome.locator_dim,
        'located': sorted(outcome.located),
    }


def _decode_instance(code: LinearCode, spec: Optional[AgCodeSpec],
                     aux: Optional[str], t: int) -> ecp.DecodeInstance:
    if aux is not None:
        aux_code, _ = load_code(aux)
        return ecp.make_instance(code, aux_code, t)
    if spec is None or spec.family not in (families.REED_SOLOMON,
                                           families.HERMITIAN_ONE_POINT):
        raise SpecFormatError(
            '--aux is required unless the code is a Reed-Solomon or Hermitian '
            'family spec')
    return ecp.ag_instance(spec, t)


def run_decode(args: argparse.Namespace) -> Result:
    code, spec = load_code(args.code)
    instance = _decode_instance(code, spec, args.aux, args.t)
    y = spec_parsing.parse_vector(args.y, code.ctx)
    result = _outcome_json(ecp.decode_with(instance, y))
    result['guarantee'] = instance.guarantee
    return result


def _report_json(report: Optional[distinguish.DistinguishReport]
                 ) -> Optional[Dict[str, Any]]:
    if report is None:
        return None
    return dict(report._asdict())


def run_distinguish(args: argparse.Namespace) -> Result:
    code, _ = load_code(args.code)
    if args.audit:
        audit = distinguish.audit_subcode(code)
        return {
            'code': _report_json(audit.code),
            'dual': _report_json(audit.dual),
        }
    result = _report_json(distinguish.distinguish(code))
    assert result is not None
    return result


def run_experiment(args: argparse.Namespace) -> Result:
    if args.action == 'random-square':
        ctx = spec_parsing.parse_field(args.q)
        control = None
        if args.control is not None:
            control, _ = load_code(args.control)
        histogram = distinguish.random_square_experiment(
            ctx, args.n, args.k, args.trials, args.seed, control=control)
        generic_dim = distinguish.generic_square_dimension(args.n, args.k)
        return {
            'field': str(ctx),
            'n': args.n,
            'k': args.k,
            'trials': args.trials,
            'generic_dim': generic_dim,
            'mass_at_generic': distinguish.mass_at(histogram, generic_dim),
            'rows': [{
                'dim_square': dim,
                'count': count
            } for dim, count in histogram.items()],
        }
    code, spec = load_code(args.code)
    instance = _decode_instance(code, spec, args.aux, args.t)
    report = ecp.relaxed_failure_rate(instance, args.weight, args.trials,
                                      args.seed)
    result = dict(report._asdict())
    result['guarantee'] = instance.guarantee
    result['t'] = args.t
    return result


def _read_packet(path: str) -> sss.SharePacket:
    with open(path, 'r', encoding='utf-8') as f:
        return sss.loads_packet(f.read())


def _packet_result(packet: sss.SharePacket, seed: int) -> Dict[str, Any]:
    result = dict(sss.packet_to_json(packet))  # type: Dict[str, Any]
    result['seed'] = seed
    return result


def run_share(args: argparse.Namespace) -> Result:
    code, spec = load_code(args.code)
    distance = None
    if spec is not None:
        distance = families.designed_params(spec).d_star
    if args.action == 'deal':
        return _packet_result(sss.deal(code, args.secret, args.seed), args.seed)
    if args.action == 'reconstruct':
        packet = _read_packet(args.packet)
        if (packet.code_id != sss.code_fingerprint(code) and packet.code_id ==
                sss.code_fingerprint(linear_code.square(code))):
            # A product packet from `share multiply`.
            code, distance = linear_code.square(code), None
        players = None
        if args.players is not None:
            players = sorted(spec_parsing.parse_coordinate_set(args.players))
        secret = sss.reconstruct_packet(code, packet, players, distance)
        return {
            'players': sorted(packet.shares if players is None else players),
            'threshold': sss.recovery_threshold(code, distance),
            'secret': secret,
        }
    if args.action == 'multiply':
        product = sss.multiply_shares(
            _read_packet(args.packet), _read_packet(args.packet2), code)
        return _packet_result(product, args.seed)
    assert args.action == 'audit'
    dual_distance = None
    if spec is not None:
        dual_distance = families.dual_designed_distance(spec)
    rows = sss.privacy_audit(code, args.r_max, dual_distance)
    return {'rows': [dict(row._asdict()) for row in rows]}


def run_hull(args: argparse.Namespace) -> Result:
    code, spec = load_code(args.code)
    report = hull.hull_report(code, spec)
    result = {
        'n': report.n,
        'k': report.k,
        'dim_i2': report.dim_i2,
        'dim_square': report.dim_square,
        'hull_count': report.hull_count,
        'ideal_basis': report.ideal.basis.to_lists(),
        'exact_sequence': report.exact_sequence,
        'contains_code_points': report.contains_code_points,
        'gamma': report.gamma,
        'square_at_most_3k_minus_4': report.square_at_most_3k_minus_4,
        'gamma_in_freiman_range': report.gamma_in_freiman_range,
        'degree_hypotheses_hold': report.degree_hypotheses_hold,
        'hull_equals_curve': report.hull_equals_curve,
    }  # type: Dict[str, Any]
    if args.points:
        result['points'] = [list(p) for p in report.hull]
    return result


def _scalar(value) -> str:
    if isinstance(value, (list, dict)):
        return json.dumps(value, sort_keys=True)
    if value is None:
        return ''
    return str(value)


def format_result(result: Result, config: ExperimentConfig) -> str:
    if isinstance(result, str):
        return result
    result = dict(result)
    result['seed'] = config.seed
    if config.output_format == 'json':
        return json.dumps(result, indent=2, sort_keys=True) + '\n'
    out = io.StringIO()
    if config.output_format == 'csv':
        writer = csv.writer(out, lineterminator='\n')
        rows = result.pop('rows', None)
        if rows is not None:
            keys = sorted(rows[0]) if rows else []
            extra = sorted(result)
            writer.writerow(keys + extra)
            for row in rows:
                writer.writerow([_scalar(row[k]) for k in keys] +
                                [_scalar(result[k]) for k in extra])
        else:
            keys = sorted(result)
            writer.writerow(keys)
            writer.writerow([_scalar(result[k]) for k in keys])
        return out.getvalue()
    for key in sorted(result):
        out.write('%s: %s\n' % (key, _scalar(result[key])))
    return out.getvalue()


def write_output(text: str, config: ExperimentConfig, stdout) -> None:
    if config.output is None:
        stdout.write(text)
        return
    with atomicwrites.atomic_write(
            config.output, overwrite=True, newline='\n') as f:
        f.write(text)


def run(argv: Sequence[str], stdout=None, stderr=None) -> int:
    if stdout is None:
        stdout = sys.stdout
    if stderr is None:
        stderr = sys.stderr
    try:
        args = parse_arguments(list(argv))
    except SystemExit as e:
        return 0 if not e.code else 2
    logging_args = dict(level=args.loglevel)  # type: Dict[str, Any]
    if args.log_output is not None:
        logging_args['filename'] = args.log_output
    logging.basicConfig(**logging_args)
    config = experiment_config(args)
    func = args.func  # type: Callable[[argparse.Namespace], Result]
    try:
        write_output(format_result(func(args), config), config, stdout)
    except (StarcodeError, OSError, ValueError,
            jsonschema.ValidationError) as e:
        logger.debug('%s failed', args.command, exc_info=True)
        stderr.write('starcode %s: error: %s\n' % (args.command, e))
        return 1
    return 0


def main(argv: Optional[Sequence[str]] = None) -> None:
    sys.exit(run(sys.argv[1:] if argv is None else argv))


if __name__ == '__main__':
    main()
