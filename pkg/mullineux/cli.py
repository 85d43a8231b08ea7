# -*- coding: utf-8 -*-

'''
cli
---

command line interface: m_1, m_l, Ψ, crystal export and verification
sweeps

every command prints JSON on stdout (or DOT for `crystal --dot`); errors
print {"error": <name>, "message": <text>} and exit with 1, or with 2 when
the input is malformed
'''

###############################################################################


from __future__ import (
    absolute_import,
    division,
    print_function,
    unicode_literals,
)
import argparse
import io
import re
import sys

from logbook import (
    INFO,
    WARNING,
    Logger,
    NestedSetup,
    NullHandler,
    StreamHandler,
)

from . import __version__
from .affine_weyl import (
    IndexOutOfRange,
    WeylWord,
    alpha_word,
    sigma,
    tau,
    tau_inv,
    w0_word,
)
from .core import MullineuxError
from .crystal import (
    NodeOrder,
    enumerate_crystal,
)
from .formats import (
    InputError,
    ParseError,
    dumps,
    parse_charges,
    parse_modulus,
    parse_multicharge,
    parse_multipartition,
    parse_partition,
)
from .involution import (
    mullineux,
    mullineux_infinity,
    mullineux_oracle,
    verify_sweep,
)
from .partitions import (
    INFINITY,
    Multicharge,
    PartitionError,
)
from .rank1 import (
    m1,
    m1_rim,
)
from .symbols import psi_word


_TOKEN = re.compile(
    r'^(?:s(?P<s>\d+)|(?P<tinv>t-)|(?P<t>t)|(?P<w0>w0)|a(?P<a>\d+))'
    r'(?:\^(?P<exp>-?\d+))?$'
)


def _offset(text, pos):
    return len(text[:pos].encode('utf-8'))


def parse_weyl_word(text, level):
    '''
    parses a whitespace separated word such as "a1^8 a2^8 w0"

    tokens are `s<k>`, `t`, `t-`, `w0` and `a<k>`, each optionally raised
    to `^<exp>`; the word acts right to left

    :param text: the word
    :param level: the level the word acts on
    :type text: `str`
    :type level: `int`
    :rtype: `WeylWord`
    :raises ParseError: on an unknown token or an index outside the level
    '''

    word = WeylWord()

    for match in re.finditer(r'\S+', text):

        token = _TOKEN.match(match.group())
        offset = _offset(text, match.start())

        if token is None:
            raise ParseError('unknown token %r' % match.group(), offset)

        try:
            if token.group('s'):
                part = WeylWord([sigma(int(token.group('s')))]).check(level)
            elif token.group('tinv'):
                part = WeylWord([tau_inv()])
            elif token.group('t'):
                part = WeylWord([tau()])
            elif token.group('w0'):
                part = w0_word(level)
            else:
                part = alpha_word(int(token.group('a')), level)
        except IndexOutOfRange as err:
            raise ParseError(str(err), offset)

        exp = token.group('exp')
        word = word * (part ** int(exp) if exp is not None else part)

    return word


def _modulus(args):
    return parse_modulus(args.e)


def _m1(args, log):

    e = _modulus(args)
    p = parse_partition(args.partition)
    image = m1_rim(p, e) if args.rim else m1(p, e)

    return dumps(image)


def _mullineux(args, log):

    e = _modulus(args)
    mp = parse_multipartition(args.mp)
    charges = parse_charges(args.charge)

    if len(charges) != mp.level:
        v = (args.charge, mp.level)
        raise InputError('charge class %s does not have level %s' % v)

    if e == INFINITY:
        return dumps(mullineux_infinity(mp, Multicharge(charges), log=log))

    if args.oracle:
        return dumps(mullineux_oracle(mp, charges, e))

    result = mullineux(
        mp, charges, e, n=args.n, stabilize=args.stabilize, log=log
    )

    return dumps(result.to_dict() if args.trace else result.image)


def _psi(args, log):

    e = None if args.e is None else _modulus(args)
    s = parse_multicharge(args.charge, e=e)
    mp = parse_multipartition(args.mp, level=s.level)
    image, charge = psi_word(mp, s, parse_weyl_word(args.word, s.level))

    return dumps({'mp': image, 'charge': charge})


def _graph(args, log, with_edges):

    e = _modulus(args)
    charges = parse_charges(args.charge)

    if args.order == 'kleshchev' and e == INFINITY:
        raise InputError('the kleshchev order needs a finite e')

    order = NodeOrder(args.order, Multicharge(charges, e))

    return enumerate_crystal(
        order, args.nmax, with_edges=with_edges, log=log
    )


def _crystal(args, log):

    graph = _graph(args, log, True)
    return graph.to_dot() if args.dot else graph.to_json()


def _enumerate(args, log):

    graph = _graph(args, log, False)

    return dumps({
        'sizes': [len(layer) for layer in graph.layers],
        'layers': graph.layers,
    })


def _verify(args, log):

    e = _modulus(args)

    if e == INFINITY:
        raise InputError('verify needs a finite e')

    report = verify_sweep(args.level, e, args.nmax, log=log)
    args.failed = not report.ok

    if args.json:
        return report.to_json()

    lines = [report.table.to_string(index=False)]
    lines.append('%s mismatches' % len(report.mismatches))

    for m in report.mismatches:
        lines.append(dumps(m))

    return '\n'.join(lines)


def _parser():

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--out', help='write the output to this path')
    common.add_argument(
        '--verbose', action='store_true', help='log progress on stderr'
    )

    parser = argparse.ArgumentParser(
        prog='mullineux',
        description='generalized Mullineux involution on Kleshchev '
                    'multipartitions',
    )
    parser.add_argument('--version', action='version', version=__version__)
    commands = parser.add_subparsers(dest='command')
    commands.required = True

    cmd = commands.add_parser(
        'm1',
        parents=[common],
        help='Mullineux map of an e-regular partition',
    )
    cmd.add_argument(
        '--e', required=True, help='modulus, an integer >= 2 or inf'
    )
    cmd.add_argument(
        '--partition', required=True, help='JSON array, e.g. [4,1]'
    )
    cmd.add_argument(
        '--rim',
        action='store_true',
        help='use rim stripping instead of the crystal',
    )
    cmd.set_defaults(func=_m1)

    cmd = commands.add_parser(
        'mullineux',
        parents=[common],
        help='m_l of a Kleshchev multipartition',
    )
    cmd.add_argument('--e', required=True)
    cmd.add_argument(
        '--charge-class',
        '--charge',
        dest='charge',
        required=True,
        help='JSON array of residues (integer charges for --e inf)',
    )
    cmd.add_argument('--mp', required=True, help='JSON array of arrays')
    cmd.add_argument(
        '--n', type=int, help='rank bound of the asymptotic lift'
    )
    cmd.add_argument(
        '--trace', action='store_true', help='print every pipeline stage'
    )
    cmd.add_argument(
        '--stabilize', action='store_true', help='use the least η exponents'
    )
    cmd.add_argument(
        '--oracle',
        action='store_true',
        help='replay the negated crystal path instead',
    )
    cmd.set_defaults(func=_mullineux)

    cmd = commands.add_parser(
        'psi',
        parents=[common],
        help='apply Ψ for a word in the extended affine symmetric group',
    )
    cmd.add_argument(
        '--charge',
        required=True,
        help='{"charges": [...], "e": k} or a JSON array with --e',
    )
    cmd.add_argument('--e')
    cmd.add_argument('--word', required=True, help='e.g. "a1^8 a2^8 w0"')
    cmd.add_argument('--mp', required=True)
    cmd.set_defaults(func=_psi)

    for (name, func) in (('crystal', _crystal), ('enumerate', _enumerate)):
        cmd = commands.add_parser(
            name, parents=[common], help='%s the crystal of ∅' % name
        )
        cmd.add_argument(
            '--order', choices=['uglov', 'kleshchev'], required=True
        )
        cmd.add_argument(
            '--charge', '--charge-class', dest='charge', required=True
        )
        cmd.add_argument('--e', required=True)
        cmd.add_argument('--nmax', type=int, required=True)
        if name == 'crystal':
            cmd.add_argument(
                '--dot', action='store_true', help='graphviz output'
            )
        cmd.set_defaults(func=func)

    cmd = commands.add_parser(
        'verify',
        parents=[common],
        help='compare the pipeline with the crystal oracle',
    )
    cmd.add_argument('--l', dest='level', type=int, required=True)
    cmd.add_argument('--e', required=True)
    cmd.add_argument('--nmax', type=int, required=True)
    cmd.add_argument('--json', action='store_true')
    cmd.set_defaults(func=_verify)

    return parser


def _error(err):
    return dumps({'error': type(err).__name__, 'message': str(err)})


def _write(text, path):

    if path is None:
        sys.stdout.write(text + '\n')
        return

    with io.open(path, 'w', encoding='utf-8') as f:
        f.write(text + '\n')


def run(argv=None):
    '''
    runs the command line `argv` and returns the exit code

    :type argv: `list` of `str` (default=`sys.argv[1:]`)
    :rtype: `int`
    '''

    try:
        args = _parser().parse_args(argv)
    except SystemExit as err:
        return err.code or 0

    log = Logger('mullineux')
    level = INFO if args.verbose else WARNING
    handler = StreamHandler(sys.stderr, level=level)
    args.failed = False

    with NestedSetup([NullHandler(), handler]).applicationbound():

        try:
            output = args.func(args, log)
        except (InputError, PartitionError) as err:
            _write(_error(err), None)
            return 2
        except MullineuxError as err:
            log.error('%s: %s' % (type(err).__name__, err))
            _write(_error(err), None)
            return 1

    _write(output, args.out)

    return 1 if args.failed else 0


def main():
    sys.exit(run())
