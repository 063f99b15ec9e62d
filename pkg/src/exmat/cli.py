"""# Command Line Interface

The `exmat` command. Each subcommand reads a matroid file (see
`exmat.utils.data_utils.check_matroid_document`), runs one of the library
procedures and prints exactly one JSON result document on stdout:

    {"command": ..., "input_digest": ..., "arguments": {...},
     "certificates": [...], "valid": ...}

`valid` is recomputed from the certificates as written in the document by
`validate_document`. Diagnostics go to stderr. The exit code is 0 for a valid
document, 2 for unreadable or malformed input, 3 for domain and precondition
errors (e.g. `b1 is not a basis`) and 4 for invalid certificates.

Label lists are given comma separated (`--b0 12,23,34`), partition classes
separated by semicolons (`--classes "12;23,34"`). Bases may instead be read
from a sidecar JSON file `{"b0": [...], "b1": [...]}` with `--bases`.
"""

#   _____ _      _____
#  / ____| |    |_   _|
# | |    | |      | |
# | |    | |      | |
# | |____| |____ _| |_
#  \_____|______|_____|

# ExMat - Python package for matroid base exchange.

from __future__ import absolute_import, division, print_function

import argparse
from itertools import combinations
import os
import sys
import time

from exmat.algorithms.bijection import build_bijection, enumerate_graph
from exmat.algorithms.exchange import (PartitionExchangePlan, SerialOrder, SymmetricExchangeCertificate,
                                       partition_exchange, partition_exchange_one_infinite,
                                       serial_exchange_order, symmetric_exchange)
from exmat.counterexample import is_candidate, verify_forced_prefix
from exmat.matroid import require_basis
from exmat.models import figure_graph, matroid_from_dict, random_instance
from exmat.oracle import all_bases, bijection_solutions, check_axioms, exchange_search
from exmat.utils.data_utils import FormatError, canonical_json, input_digest, load_json
from exmat.utils.generic_utils import SEED_ENV_VAR, InvariantViolation, canonical

__all__ = [
    'main',
    'build_parser',
    'validate_document',
    'cmd_symmetric',
    'cmd_partition',
    'cmd_serial',
    'cmd_bijection',
    'cmd_verify_counterexample',
    'cmd_check_axioms',
    'cmd_generate',
    'cmd_oracle_all_bases',
    'cmd_oracle_exchange_search',
    'cmd_oracle_bijection_search'
]

###############################################################################
# Helpers
###############################################################################

# maps label tokens (compared as strings) to ground elements of m
def resolve_labels(m, labels, name):
    lookup = {str(e): e for e in m.elements}
    resolved = []
    for label in labels:
        if str(label) not in lookup:
            raise ValueError('{}: unknown label {!r}'.format(name, label))
        resolved.append(lookup[str(label)])
    if len(set(resolved)) != len(resolved):
        raise ValueError('{}: repeated label'.format(name))
    return frozenset(resolved)

def split_labels(text):
    return [t.strip() for t in text.split(',') if t.strip()]

def split_classes(text):
    return [split_labels(c) for c in text.split(';')]

def _labels(s):
    return list(canonical(s))

def _document(command, digest, arguments, certificates):
    return {'command': command, 'input_digest': digest, 'arguments': arguments,
            'certificates': certificates, 'valid': False}

def _bases(m, b0, b1):
    b0 = require_basis(m, resolve_labels(m, b0, 'b0'), 'b0')
    b1 = require_basis(m, resolve_labels(m, b1, 'b1'), 'b1')
    return b0, b1

###############################################################################
# Commands
###############################################################################

def cmd_symmetric(matroid_doc, b0, b1, x, verbose=False):
    """Symmetric exchange for `x`, see `exmat.symmetric_exchange`."""

    m = matroid_from_dict(matroid_doc)
    b0, b1 = _bases(m, b0, b1)
    x = resolve_labels(m, x, 'x')
    cert = symmetric_exchange(m, b0, b1, x, verbose=verbose)
    doc = _document('symmetric', input_digest(matroid_doc),
                    {'b0': _labels(b0), 'b1': _labels(b1), 'x': _labels(x)}, [cert.to_dict()])
    return validate_document(doc, m)

def cmd_partition(matroid_doc, b0, b1, classes, last_large=False, verbose=False):
    """Partition exchange for the given classes. With `last_large` the last
    class is treated as the large class of `partition_exchange_one_infinite`.
    """

    m = matroid_from_dict(matroid_doc)
    b0, b1 = _bases(m, b0, b1)
    classes = [resolve_labels(m, cls, 'classes') for cls in classes]
    if last_large:
        plan = partition_exchange_one_infinite(m, b0, b1, classes, verbose=verbose)
    else:
        plan = partition_exchange(m, b0, b1, classes, verbose=verbose)
    doc = _document('partition', input_digest(matroid_doc),
                    {'b0': _labels(b0), 'b1': _labels(b1), 'classes': [_labels(c) for c in classes],
                     'last_large': last_large}, [plan.to_dict()])
    return validate_document(doc, m)

def cmd_serial(matroid_doc, b0, b1, verbose=False):
    m = matroid_from_dict(matroid_doc)
    b0, b1 = _bases(m, b0, b1)
    order = serial_exchange_order(m, b0, b1, verbose=verbose)
    doc = _document('serial', input_digest(matroid_doc), {'b0': _labels(b0), 'b1': _labels(b1)},
                    [order.to_dict()])
    return validate_document(doc, m)

def cmd_bijection(matroid_doc, b0, b1, max_size, verbose=False):
    """The graph of the subset bijection on subsets of size at most
    `max_size`, see `exmat.enumerate_graph`.
    """

    start = time.time()
    m = matroid_from_dict(matroid_doc)
    b0, b1 = _bases(m, b0, b1)
    pairs = enumerate_graph(build_bijection(m, b0, b1), max_size)
    if verbose:
        print('Evaluated {} subsets in {:.3f}s'.format(len(pairs), time.time() - start), file=sys.stderr)
    doc = _document('bijection', input_digest(matroid_doc),
                    {'b0': _labels(b0), 'b1': _labels(b1), 'max_size': max_size},
                    [{'I': _labels(i), 'F': _labels(j)} for i,j in pairs])
    return validate_document(doc, m)

def cmd_verify_counterexample(n, k=None, n_jobs=1, verbose=False):
    report = verify_forced_prefix(n, k, n_jobs=n_jobs, verbose=verbose)
    arguments = {'n': n, 'k': report.k}
    doc = _document('verify-counterexample', input_digest(arguments), arguments, [report.to_dict()])
    return validate_document(doc)

def cmd_check_axioms(matroid_doc):
    m = matroid_from_dict(matroid_doc)
    report = check_axioms(m)
    doc = _document('check-axioms', input_digest(matroid_doc), {}, [report.to_dict()])
    return validate_document(doc, m)

def cmd_generate(kind, size, seed=None, **kwargs):
    """Matroid file document for `random_instance`. Without `seed` the
    `EXMAT_SEED` environment variable is used, and 0 if it is unset.
    """

    if seed is None:
        value = os.environ.get(SEED_ENV_VAR)
        try:
            seed = 0 if value is None else int(value)
        except ValueError:
            raise FormatError('{} must be an integer, got {!r}'.format(SEED_ENV_VAR, value))
    doc = random_instance(kind, size, seed, **kwargs).to_dict()
    return doc

def cmd_oracle_all_bases(matroid_doc):
    m = matroid_from_dict(matroid_doc)
    doc = _document('oracle all-bases', input_digest(matroid_doc), {}, [{'bases': [_labels(b) for b in all_bases(m)]}])
    return validate_document(doc, m)

def cmd_oracle_exchange_search(matroid_doc, b0, b1, x):
    m = matroid_from_dict(matroid_doc)
    b0, b1 = _bases(m, b0, b1)
    x = resolve_labels(m, x, 'x')
    doc = _document('oracle exchange-search', input_digest(matroid_doc),
                    {'b0': _labels(b0), 'b1': _labels(b1), 'x': _labels(x)},
                    [{'Y': [_labels(Y) for Y in exchange_search(m, b0, b1, x)]}])
    return validate_document(doc, m)

def cmd_oracle_bijection_search(matroid_doc, b0, b1, k):
    m = matroid_from_dict(matroid_doc)
    b0, b1 = _bases(m, b0, b1)
    solution = next(bijection_solutions(m, b0, b1, k), None)
    found = [] if solution is None else [{'I': _labels(i), 'F': _labels(solution[i])}
                                         for i in sorted(solution, key=canonical)]
    doc = _document('oracle bijection-search', input_digest(matroid_doc),
                    {'b0': _labels(b0), 'b1': _labels(b1), 'k': k},
                    [{'exists': solution is not None, 'solution': found}])
    return validate_document(doc, m)

###############################################################################
# Validation
###############################################################################

def _valid_pairs(m, b0, b1, pairs, sizes):
    b0, b1 = frozenset(b0), frozenset(b1)
    images = set()
    for pair in pairs:
        I, F = frozenset(pair['I']), frozenset(pair['F'])
        if not (I <= b0 and F <= b1 and len(I) == len(F) and m.is_basis((b0 - I) | F)):
            return False
        images.add(F)
    sources = set(frozenset(pair['I']) for pair in pairs)
    expected = set(frozenset(i) for k in sizes for i in combinations(canonical(b0), k))
    return len(images) == len(pairs) and sources == expected

def _certificates_valid(doc, m):
    command, args, certs = doc['command'], doc['arguments'], doc['certificates']

    if command == 'verify-counterexample':
        report = certs[0]
        fg = figure_graph(report['n'])
        forced0, forced1 = set(report['forced_s0']), set(report['forced_s1'])
        return (report['candidate_count'] == len(report['candidates']) > 0
                and all(is_candidate(fg, c['s0'], c['s1']) and forced0 <= set(c['s0']) and forced1 <= set(c['s1'])
                        for c in report['candidates'])
                and report['component_count'] in (None, 2))

    if command == 'check-axioms':
        return certs[0]['holds'] and len(certs[0]['counterexamples']) == 0

    if command == 'oracle all-bases':
        return all(m.is_basis(b) for b in certs[0]['bases'])

    b0, b1 = frozenset(args['b0']), frozenset(args['b1'])
    if not (m.is_basis(b0) and m.is_basis(b1)):
        return False

    if command == 'symmetric':
        c = certs[0]
        cert = SymmetricExchangeCertificate(c['X'], c['Y'], c['base_a'], c['base_b'])
        return frozenset(args['x']) == cert.X and len(cert.failures(m, b0, b1)) == 0

    if command == 'partition':
        plan = PartitionExchangePlan((c['X'], c['Y']) for c in certs[0]['classes'])
        classes = [frozenset(c) for c in args['classes']]
        return plan.X == classes and len(plan.failures(m, b0, b1)) == 0

    if command == 'serial':
        order = SerialOrder(certs[0]['e_seq'], certs[0]['f_seq'])
        return len(order.failures(m, b0, b1)) == 0

    if command == 'bijection':
        return _valid_pairs(m, b0, b1, certs, range(args['max_size'] + 1))

    if command == 'oracle exchange-search':
        x = frozenset(args['x'])
        return len(certs[0]['Y']) > 0 and all(
            SymmetricExchangeCertificate(x, Y, (b0 - x) | set(Y), (b1 - set(Y)) | x).failures(m, b0, b1) == []
            for Y in certs[0]['Y'])

    if command == 'oracle bijection-search':
        return certs[0]['exists'] and _valid_pairs(m, b0, b1, certs[0]['solution'], [args['k']])

    raise FormatError('unknown command {!r}'.format(command))

def validate_document(doc, m=None):
    """Recomputes the `valid` field of a result document from its
    certificates, using only the data in the document and the matroid `m`
    (not needed for `verify-counterexample`). Returns the document.
    """

    try:
        doc['valid'] = bool(_certificates_valid(doc, m))
    except (KeyError, TypeError, ValueError) as e:
        if isinstance(e, FormatError):
            raise
        doc['valid'] = False
    return doc

###############################################################################
# Parser
###############################################################################

def build_parser():
    parser = argparse.ArgumentParser(prog='exmat', description='Constructive matroid base exchange.',
                                     formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    subparsers = parser.add_subparsers(dest='command')
    subparsers.required = True

    def add_command(subs, name, help, matroid=True, bases=False):
        p = subs.add_parser(name, help=help, formatter_class=argparse.ArgumentDefaultsHelpFormatter)
        if matroid:
            p.add_argument('matroid', help='matroid JSON file, - for stdin')
        if bases:
            p.add_argument('--b0', help='comma separated labels of the first basis')
            p.add_argument('--b1', help='comma separated labels of the second basis')
            p.add_argument('--bases', help='JSON file with keys "b0" and "b1"')
        p.add_argument('--output', '-o', help='write the JSON document to this file instead of stdout')
        p.add_argument('--verbose', '-v', action='store_true', help='print diagnostics to stderr')
        return p

    p = add_command(subparsers, 'symmetric', 'symmetric exchange of a subset of b0', bases=True)
    p.add_argument('--x', default='', help='comma separated subset of b0')
    p.set_defaults(func=_run_symmetric)

    p = add_command(subparsers, 'partition', 'partition exchange with tail property', bases=True)
    p.add_argument('--classes', required=True, help='classes partitioning b0, separated by ";"')
    p.add_argument('--last-large', action='store_true', help='treat the last class as the large class')
    p.set_defaults(func=_run_partition)

    p = add_command(subparsers, 'serial', 'serial exchange order of two bases', bases=True)
    p.set_defaults(func=_run_serial)

    p = add_command(subparsers, 'bijection', 'graph of the subset bijection', bases=True)
    p.add_argument('--max-size', type=int, required=True, help='largest subset size')
    p.set_defaults(func=_run_bijection)

    p = add_command(subparsers, 'verify-counterexample', 'verify the forced prefix on a truncation', matroid=False)
    p.add_argument('--n', type=int, required=True, help='number of vertices of the truncation')
    p.add_argument('--k', type=int, default=None, help='prefix length, the largest admissible by default')
    p.add_argument('--n-jobs', type=int, default=1, help='number of worker processes')
    p.set_defaults(func=_run_verify_counterexample)

    p = add_command(subparsers, 'check-axioms', 'check the independence axioms exhaustively')
    p.set_defaults(func=_run_check_axioms)

    p = add_command(subparsers, 'generate', 'write a random matroid file', matroid=False)
    p.add_argument('--kind', choices=['uniform', 'graphic', 'gf2'], required=True, help='matroid family')
    p.add_argument('--size', type=int, required=True, help='ground set size bound')
    p.add_argument('--seed', type=int, default=None, help='random seed, {} if not given'.format(SEED_ENV_VAR))
    p.add_argument('--edge-prob', type=float, default=None, help='edge probability for graphic instances')
    p.add_argument('--rows', type=int, default=None, help='column length for gf2 instances')
    p.set_defaults(func=_run_generate)

    oracle = subparsers.add_parser('oracle', help='brute-force oracles')
    oracle_subs = oracle.add_subparsers(dest='oracle_command')
    oracle_subs.required = True

    p = add_command(oracle_subs, 'all-bases', 'list all bases')
    p.set_defaults(func=_run_all_bases)

    p = add_command(oracle_subs, 'exchange-search', 'list all symmetric exchanges of x', bases=True)
    p.add_argument('--x', default='', help='comma separated subset of b0')
    p.set_defaults(func=_run_exchange_search)

    p = add_command(oracle_subs, 'bijection-search', 'search for a bijection of k-subsets', bases=True)
    p.add_argument('--k', type=int, required=True, help='subset size')
    p.set_defaults(func=_run_bijection_search)

    return parser

# bases from the command line, falling back to the sidecar file
def _read_bases(args):
    b0 = None if args.b0 is None else split_labels(args.b0)
    b1 = None if args.b1 is None else split_labels(args.b1)
    if args.bases is not None:
        sidecar = load_json(args.bases)
        if not isinstance(sidecar, dict) or not all(isinstance(sidecar.get(b), list) for b in ('b0', 'b1')):
            raise FormatError('bases file must contain lists "b0" and "b1"')
        b0 = sidecar['b0'] if b0 is None else b0
        b1 = sidecar['b1'] if b1 is None else b1
    if b0 is None or b1 is None:
        raise FormatError('both bases are required, give --b0 and --b1 or --bases')
    return b0, b1

def _run_symmetric(args):
    return cmd_symmetric(load_json(args.matroid), *_read_bases(args), x=split_labels(args.x), verbose=args.verbose)

def _run_partition(args):
    return cmd_partition(load_json(args.matroid), *_read_bases(args), classes=split_classes(args.classes),
                         last_large=args.last_large, verbose=args.verbose)

def _run_serial(args):
    return cmd_serial(load_json(args.matroid), *_read_bases(args), verbose=args.verbose)

def _run_bijection(args):
    return cmd_bijection(load_json(args.matroid), *_read_bases(args), max_size=args.max_size, verbose=args.verbose)

def _run_verify_counterexample(args):
    return cmd_verify_counterexample(args.n, args.k, n_jobs=args.n_jobs, verbose=args.verbose)

def _run_check_axioms(args):
    return cmd_check_axioms(load_json(args.matroid))

def _run_generate(args):
    kwargs = {}
    if args.edge_prob is not None:
        kwargs['edge_prob'] = args.edge_prob
    if args.rows is not None:
        kwargs['rows'] = args.rows
    return cmd_generate(args.kind, args.size, args.seed, **kwargs)

def _run_all_bases(args):
    return cmd_oracle_all_bases(load_json(args.matroid))

def _run_exchange_search(args):
    return cmd_oracle_exchange_search(load_json(args.matroid), *_read_bases(args), x=split_labels(args.x))

def _run_bijection_search(args):
    return cmd_oracle_bijection_search(load_json(args.matroid), *_read_bases(args), k=args.k)

###############################################################################
# Entry point
###############################################################################

def main(argv=None):
    """Runs the `exmat` command with the arguments `argv` (`sys.argv[1:]` by
    default) and returns the exit code.
    """

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code

    start = time.time()
    try:
        doc = args.func(args)
    except FormatError as e:
        print('exmat: input error: {}'.format(e), file=sys.stderr)
        return 2
    except InvariantViolation as e:
        print('exmat: invariant violation: {}'.format(e), file=sys.stderr)
        return 4
    except ValueError as e:
        print('exmat: error: {}'.format(e), file=sys.stderr)
        return 3

    text = canonical_json(doc) + '\n'
    if args.output is not None:
        with open(args.output, 'w') as f:
            f.write(text)
    else:
        sys.stdout.write(text)

    if args.verbose:
        print('Finished {} in {:.3f}s'.format(args.command, time.time() - start), file=sys.stderr)

    return 0 if doc.get('valid', True) else 4

if __name__ == '__main__':
    sys.exit(main())
