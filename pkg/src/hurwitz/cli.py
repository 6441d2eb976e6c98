"""Command line front ends: hw (counts), wop (operators), verify (checks).

Every command prints compact JSON on stdout.  Counts are emitted as
strings so arbitrarily large integers survive any JSON consumer.  Exit
codes: 0 success, 1 failed verification, 2 usage or budget error.
"""

import argparse
import csv
import json
import sys

from . import budget, checks
from .counting import count_factorizations, minimal_k
from .operators import (TermTable, apply_reconstructed_linear,
                        apply_W2_explicit, apply_W3_explicit,
                        apply_W_groupalg, local_coefficient, meet_count)
from .perms import aut_size, mu, partitions_of
from .series import phi, to_records


def _partition_arg(text):
    parts = []
    for tok in text.split(','):
        tok = tok.strip()
        if not tok.isdigit() or int(tok) < 1:
            raise argparse.ArgumentTypeError(
                'partition parts must be positive integers: %r' % text)
        parts.append(int(tok))
    if not parts:
        raise argparse.ArgumentTypeError('empty partition: %r' % text)
    return tuple(sorted(parts, reverse=True))


def format_partition(alpha):
    return ','.join(str(a) for a in alpha)


def _emit(obj):
    print(json.dumps(obj, separators=(',', ':')))


def _budget_error(err):
    _emit({'error': 'budget', 'name': err.name, 'cap': err.cap,
           'requested': err.requested})
    return 2


def hw_main(argv=None):
    parser = argparse.ArgumentParser(
        prog='hw', description='factorization counts')
    sub = parser.add_subparsers(dest='cmd', required=True)

    p = sub.add_parser('count', help='count k-tuples with a given product')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--d', type=int, required=True)
    p.add_argument('--k', type=int, required=True)
    p.add_argument('--alpha', type=_partition_arg, required=True)
    p.add_argument('--transitive', action='store_true')

    p = sub.add_parser('min', help='minimal transitive tuple length and count')
    p.add_argument('--d', type=int, required=True)
    p.add_argument('--alpha', type=_partition_arg, required=True)

    p = sub.add_parser('table', help='minimal counts for all types up to nmax')
    p.add_argument('--d', type=int, required=True)
    p.add_argument('--nmax', type=int, required=True)
    p.add_argument('--format', choices=('json', 'csv'), default='json')

    args = parser.parse_args(argv)
    try:
        if args.cmd == 'count':
            c = count_factorizations(args.n, args.d, args.k, args.alpha,
                                     transitive=args.transitive)
            _emit({'count': str(c)})
        elif args.cmd == 'min':
            got = minimal_k(sum(args.alpha), args.d, args.alpha)
            if got is None:
                _emit({'k': None, 'h': None})
            else:
                _emit({'k': got[0], 'h': str(got[1])})
        else:
            budget.require('max_n', args.nmax)
            rows = []
            for n in range(1, args.nmax + 1):
                for alpha in partitions_of(n):
                    got = minimal_k(n, args.d, alpha)
                    rows.append({'n': n, 'alpha': format_partition(alpha),
                                 'mu': str(mu(args.d, alpha)),
                                 'h': str(got[1]) if got else '0'})
            if args.format == 'csv':
                w = csv.DictWriter(sys.stdout, fieldnames=('n', 'alpha',
                                                           'mu', 'h'))
                w.writeheader()
                w.writerows(rows)
            else:
                for row in rows:
                    _emit(row)
    except budget.BudgetError as err:
        return _budget_error(err)
    return 0


def wop_main(argv=None):
    parser = argparse.ArgumentParser(
        prog='wop', description='cut-and-join type operators')
    sub = parser.add_subparsers(dest='cmd', required=True)

    p = sub.add_parser('apply', help='apply the operator to a power sum monomial')
    p.add_argument('--d', type=int, required=True)
    p.add_argument('--alpha', type=_partition_arg, required=True)
    p.add_argument('--method',
                   choices=('groupalg', 'explicit', 'reconstructed'),
                   default='groupalg')

    p = sub.add_parser('coeff', help='one structural coefficient')
    p.add_argument('--d', type=int, required=True)
    p.add_argument('--b', type=_partition_arg, required=True)
    p.add_argument('--a', type=_partition_arg, required=True)

    p = sub.add_parser('table', help='all structural coefficients up to a weight')
    p.add_argument('--d', type=int, required=True)
    p.add_argument('--max-weight', type=int, required=True)
    p.add_argument('--out')

    args = parser.parse_args(argv)
    try:
        if args.cmd == 'apply':
            F = phi(args.alpha)
            if args.method == 'groupalg':
                out = apply_W_groupalg(args.d, F)
            elif args.method == 'explicit':
                if args.d == 2:
                    out = apply_W2_explicit(F)
                elif args.d == 3:
                    out = apply_W3_explicit(F)
                else:
                    parser.error('explicit form is only written for d=2,3')
            else:
                table = TermTable(args.d, sum(args.alpha))
                out = apply_reconstructed_linear(table, F)
            _emit({'alpha': format_partition(args.alpha),
                   'method': args.method, 'terms': to_records(out)})
        elif args.cmd == 'coeff':
            _emit({'c': str(local_coefficient(args.d, args.b, args.a)),
                   'N': str(meet_count(args.d, args.b, args.a)),
                   'aut': str(aut_size(args.b))})
        else:
            table = TermTable(args.d, args.max_weight)
            records = []
            for (B, A), (cnt, c, degree) in sorted(table.terms.items()):
                records.append({'B': list(B), 'A': list(A), 'N': str(cnt),
                                'c': str(c), 'degree': degree})
            doc = {'d': args.d, 'max_weight': args.max_weight,
                   'terms': records}
            if args.out:
                with open(args.out, 'w') as fh:
                    json.dump(doc, fh, separators=(',', ':'))
                _emit({'written': args.out, 'terms': len(records)})
            else:
                _emit(doc)
    except budget.BudgetError as err:
        return _budget_error(err)
    return 0


def verify_main(argv=None):
    parser = argparse.ArgumentParser(
        prog='verify', description='verify the generating function identities')
    sub = parser.add_subparsers(dest='cmd', required=True)

    p = sub.add_parser('closed-form', help='transposition counts vs formula')
    p.add_argument('--nmax', type=int, default=6)

    p = sub.add_parser('gj-pde', help='second order equation for F_2')
    p.add_argument('--N', type=int, default=6)

    p = sub.add_parser('thm53', help='third order equation for F_3')
    p.add_argument('--N', type=int, default=6)

    p = sub.add_parser('thm55', help='rewritten third order equation for F_3')
    p.add_argument('--N', type=int, default=6)
    p.add_argument('--literal', action='store_true')

    p = sub.add_parser('conjecture', help='first derivative equation for F_d')
    p.add_argument('--d', type=int, default=4)
    p.add_argument('--N', type=int, default=6)

    p = sub.add_parser('components', help='classified tuples vs summation families')
    p.add_argument('--N', type=int, default=4)

    args = parser.parse_args(argv)
    try:
        if args.cmd == 'closed-form':
            rep = checks.check_closed_form(args.nmax)
        elif args.cmd == 'gj-pde':
            rep = checks.check_gj_pde(args.N)
        elif args.cmd == 'thm53':
            rep = checks.check_thm53(args.N)
        elif args.cmd == 'thm55':
            rep = checks.check_thm55(args.N, literal=args.literal)
        elif args.cmd == 'conjecture':
            rep = checks.check_conjecture(args.d, args.N)
        else:
            rep = checks.check_components(args.N)
    except budget.BudgetError as err:
        return _budget_error(err)
    rep['budget'] = budget.caps()
    _emit(rep)
    if rep['pass'] or rep.get('experimental'):
        return 0
    return 1
