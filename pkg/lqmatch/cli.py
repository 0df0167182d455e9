# Copyright (C) lqmatch contributors, see LICENSE for text of ISC license

"""The ``lqmatch`` command line."""

import argparse
import json
import logging
import os
import sys
import time

import lqmatch.classic
import lqmatch.exception
import lqmatch.fpt
import lqmatch.gen
import lqmatch.instance
import lqmatch.kernel
import lqmatch.matching
import lqmatch.optimality
import lqmatch.oracle
import lqmatch.version

logger = logging.getLogger(__name__)

#: exit status of a successful run
EXIT_OK = 0
#: exit status when no solution exists
EXIT_NONE = 2
#: exit status when the assignment budget was exceeded
EXIT_BUDGET = 3
#: exit status on bad input or usage
EXIT_INPUT = 4

THREADS_ENV = 'LQMATCH_THREADS'


class UsageError(lqmatch.exception.LQException):
    """The command line is invalid."""


class _Parser(argparse.ArgumentParser):

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, '%s: error: %s\n' % (self.prog, message))


class _Report(object):

    """What a command prints, as text or as a single JSON object."""

    def __init__(self, command):
        self.command = command
        self.fields = {'command': command}
        self.text = []
        self.assignments = 0
        self.bound = None
        self.started = time.perf_counter()

    def set(self, key, value, text=None):
        self.fields[key] = value
        if text is not None:
            self.text.append(text)
        elif not isinstance(value, (dict, list)):
            self.text.append('%s: %s' % (key, value))

    def add_matching(self, inst, m):
        self.set('size', len(m))
        self.fields['matching'] = [list(e) for e in m.sorted_edges(inst)]
        self.text.append('matching:')
        self.text.append(lqmatch.matching.to_text(m, inst).rstrip('\n'))

    def render(self, as_json):
        elapsed = int(round((time.perf_counter() - self.started) * 1000))
        if as_json:
            self.fields['stats'] = {
                'assignments_enumerated': self.assignments,
                'elapsed_ms': elapsed,
            }
            if self.bound is not None:
                self.fields['stats']['assignment_bound'] = self.bound
            return json.dumps(self.fields, sort_keys=True) + '\n'
        lines = [line for line in self.text if line != '']
        return '\n'.join(lines) + '\n'


def _threads_default():
    value = os.environ.get(THREADS_ENV)
    if value is None or value == '':
        return 1
    try:
        threads = int(value)
    except ValueError:
        raise UsageError('%s must be an integer, got %r' %
                         (THREADS_ENV, value))
    if threads < 1:
        raise UsageError('%s must be positive' % THREADS_ENV)
    return threads


def _positive(value):
    try:
        number = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError('%r is not an integer' % value)
    if number < 1:
        raise argparse.ArgumentTypeError('%r is not positive' % value)
    return number


def _yes_no(flag):
    return 'yes' if flag else 'no'


def _check(args, report):
    inst = lqmatch.instance.from_file(args.instance)
    m = lqmatch.matching.from_file(args.matching)
    lqmatch.matching.validate(inst, m)
    properties = {
        'feasible': lqmatch.optimality.is_feasible(inst, m),
        'stable': lqmatch.optimality.is_stable(inst, m),
        'envy_free': lqmatch.optimality.is_envy_free(inst, m),
        'relaxed_stable': lqmatch.optimality.is_relaxed_stable(inst, m),
    }
    blocking = lqmatch.optimality.blocking_pairs(inst, m)
    envy = lqmatch.optimality.envy_pairs(inst, m)
    report.set('verdict', 'valid')
    report.set('size', len(m))
    report.set('properties', properties)
    for name in ('feasible', 'stable', 'envy_free', 'relaxed_stable'):
        report.text.append('%s: %s' % (name, _yes_no(properties[name])))
    report.set('violations', {'blocking_pairs': [list(p) for p in blocking],
                              'envy_pairs': [list(p) for p in envy]})
    report.text.extend('blocking: %s %s' % p for p in blocking)
    report.text.extend('envy: %s %s' % p for p in envy)
    return EXIT_OK


def _params(args, report):
    inst = lqmatch.instance.from_file(args.instance)
    params = lqmatch.instance.compute_params(inst)
    report.set('verdict', 'ok')
    report.set('params', params.to_dict())
    report.text.extend('%s: %d' % (f, getattr(params, f))
                       for f in params.FIELDS)
    return EXIT_OK


def _solve(args, report, solver):
    inst = lqmatch.instance.from_file(args.instance)
    kwargs = {'threads': args.threads, 'budget': args.budget}
    try:
        if args.clone:
            solution = lqmatch.fpt.solve_cloned(inst, solver, **kwargs)
        else:
            solution = solver(inst, **kwargs)
    except lqmatch.exception.NoFeasibleMatching:
        report.set('verdict', 'none')
        report.set('reason', 'no feasible matching exists')
        return EXIT_NONE
    report.assignments = solution.assignments
    report.bound = solution.bound
    report.text.append('assignments_enumerated: %d' % solution.assignments)
    report.text.append('assignment_bound: %d' % solution.bound)
    if solution.matching is None:
        report.set('verdict', 'none')
        return EXIT_NONE
    report.set('verdict', 'found')
    report.add_matching(inst, solution.matching)
    return EXIT_OK


def _solve_efm(args, report):
    return _solve(args, report, lqmatch.fpt.alg_efm)


def _solve_rsm(args, report):
    return _solve(args, report, lqmatch.fpt.alg_rsm)


def _write_text(path, text):
    with open(path, 'w', encoding='utf-8') as f:
        f.write(text)


def _kernel_report(inst, kr, report, args):
    report.set('s', len(kr.stable))
    if kr.verdict == lqmatch.kernel.TRIVIAL_YES:
        report.set('verdict', kr.verdict)
        report.add_matching(inst, kr.witness)
        return EXIT_OK
    if kr.verdict == lqmatch.kernel.TRIVIAL_NO:
        report.set('verdict', kr.verdict)
        report.set('reason', kr.reason)
        return EXIT_NONE
    report.set('verdict', kr.verdict)
    report.set('edges', len(kr.marks))
    lqmatch.instance.to_file(kr.reduced, args.out)
    logger.debug('kernel written to %s', args.out)
    report.set('kernel', lqmatch.instance.to_text(kr.reduced),
               text='out: %s' % args.out)
    report.set('marks', [[a, b, kr.marks[(a, b)]]
                         for (a, b) in inst.sort_edges(kr.marks)])
    if args.marks is not None:
        _write_text(args.marks, lqmatch.kernel.marks_to_text(inst, kr))
        report.text.append('marks: %s' % args.marks)
    return EXIT_OK


def _kernel_efm(args, report):
    inst = lqmatch.instance.from_file(args.instance)
    try:
        kr = lqmatch.kernel.efm_kernelize(inst, args.k)
    except lqmatch.exception.NoFeasibleMatching:
        report.set('verdict', lqmatch.kernel.TRIVIAL_NO)
        report.set('reason', 'no feasible matching exists')
        return EXIT_NONE
    return _kernel_report(inst, kr, report, args)


def _kernel_rsm(args, report):
    inst = lqmatch.instance.from_file(args.instance)
    return _kernel_report(inst, lqmatch.kernel.rsm_kernelize(inst, args.k),
                          report, args)


def _extend(args, report):
    inst = lqmatch.instance.from_file(args.instance)
    m = lqmatch.matching.from_file(args.matching)
    extended = lqmatch.fpt.extend(inst, m)
    envy_free = lqmatch.optimality.is_envy_free(inst, extended)
    report.set('verdict', 'envy_free' if envy_free else 'envy')
    report.add_matching(inst, extended)
    return EXIT_OK


def _oracle(args, report):
    inst = lqmatch.instance.from_file(args.instance)
    if args.rsm:
        best = lqmatch.oracle.max_rsm_bruteforce(inst, cap=args.cap)
    else:
        best = lqmatch.oracle.max_efm_bruteforce(inst, cap=args.cap)
    if best is None:
        report.set('verdict', 'none')
        return EXIT_NONE
    report.set('verdict', 'found')
    report.add_matching(inst, best)
    return EXIT_OK


def _emit_instance(inst, report):
    text = lqmatch.instance.to_text(inst)
    report.set('verdict', 'ok', text='')
    report.set('instance', text, text=text.rstrip('\n'))
    return EXIT_OK


def _gen(args, report):
    if args.family == 'fig1':
        inst = lqmatch.gen.gen_fig1(args.variant)
    elif args.family == 'indset':
        g = lqmatch.gen.graph_from_file(args.graph)
        inst = lqmatch.gen.gen_indset_reduction(g, args.k)
    else:
        inst = lqmatch.gen.gen_random(args.agents, args.resources, args.lq,
                                      args.maxlen, seed=args.seed,
                                      max_retries=args.retries,
                                      max_upper=args.max_upper)
    return _emit_instance(inst, report)


def _clone(args, report):
    inst = lqmatch.instance.from_file(args.instance)
    (cloned, _) = lqmatch.instance.clone_to_one_one(inst)
    return _emit_instance(cloned, report)


def _build_parser():
    parser = _Parser(prog='lqmatch',
                     description='Matchings under lower quotas: checkers, '
                     'kernels, exact solvers and generators.')
    parser.add_argument('--version', action='version',
                        version='%(prog)s ' + lqmatch.version.version)
    common = _Parser(add_help=False)
    common.add_argument('--json', action='store_true',
                        help='print a single JSON object')
    common.add_argument('-v', '--verbose', action='store_true',
                        help='log debugging output to stderr')
    sub = parser.add_subparsers(dest='command', metavar='command')
    sub.required = True

    p = sub.add_parser('check', parents=[common],
                       help='check the properties of a matching')
    p.add_argument('instance')
    p.add_argument('--matching', required=True,
                   help='matching file, one "agent resource" pair per line')
    p.set_defaults(func=_check)

    p = sub.add_parser('params', parents=[common],
                       help='print the parameter profile of an instance')
    p.add_argument('instance')
    p.set_defaults(func=_params)

    for (name, func, what) in (('solve-efm', _solve_efm, 'envy-free'),
                               ('solve-rsm', _solve_rsm, 'relaxed stable')):
        p = sub.add_parser(name, parents=[common],
                           help='compute a maximum feasible %s matching' %
                           what)
        p.add_argument('instance')
        p.add_argument('--threads', type=_positive, default=None,
                       help='worker threads (default $%s or 1)' %
                       THREADS_ENV)
        p.add_argument('--budget', type=_positive, default=None,
                       help='fail once more assignments are enumerated')
        p.add_argument('--clone', action='store_true',
                       help='solve a MANY-ONE-LQ instance through cloning')
        p.set_defaults(func=func)

    p = sub.add_parser('kernel-efm', parents=[common],
                       help='kernelize for envy-free matchings')
    p.add_argument('instance')
    p.add_argument('--k', type=int, default=None, help='target size')
    p.add_argument('--out', required=True,
                   help='where to write the kernel instance')
    p.add_argument('--marks', default=None,
                   help='where to write the marked edges')
    p.set_defaults(func=_kernel_efm)

    p = sub.add_parser('kernel-rsm', parents=[common],
                       help='kernelize for relaxed stable matchings')
    p.add_argument('instance')
    p.add_argument('--k', type=int, required=True, help='target size')
    p.add_argument('--out', required=True,
                   help='where to write the kernel instance')
    p.add_argument('--marks', default=None,
                   help='where to write the marked edges')
    p.set_defaults(func=_kernel_rsm)

    p = sub.add_parser('extend', parents=[common],
                       help='extend a minimal feasible matching')
    p.add_argument('instance')
    p.add_argument('--matching', required=True,
                   help='minimal feasible matching file')
    p.set_defaults(func=_extend)

    p = sub.add_parser('oracle', parents=[common],
                       help='solve a small instance exhaustively')
    p.add_argument('instance')
    kind = p.add_mutually_exclusive_group(required=True)
    kind.add_argument('--efm', action='store_true')
    kind.add_argument('--rsm', action='store_true')
    p.add_argument('--cap', type=_positive,
                   default=lqmatch.oracle.DEFAULT_CAP,
                   help='largest number of vertices searched')
    p.set_defaults(func=_oracle)

    p = sub.add_parser('gen', help='generate an instance')
    families = p.add_subparsers(dest='family', metavar='family')
    families.required = True
    f = families.add_parser('fig1', parents=[common],
                            help='the two-agent example')
    f.add_argument('--variant', default=lqmatch.gen.BASE,
                   choices=[lqmatch.gen.BASE, lqmatch.gen.B1LQ,
                            lqmatch.gen.BOTHLQ])
    f = families.add_parser('indset', parents=[common],
                            help='reduction from independent set')
    f.add_argument('graph')
    f.add_argument('--k', type=int, required=True)
    f = families.add_parser('random', parents=[common],
                            help='seeded random instance')
    f.add_argument('--agents', type=int, required=True)
    f.add_argument('--resources', type=int, required=True)
    f.add_argument('--lq', type=int, required=True)
    f.add_argument('--maxlen', type=int, required=True)
    f.add_argument('--seed', type=int, default=None)
    f.add_argument('--retries', type=_positive, default=100)
    f.add_argument('--max-upper', type=_positive, default=1)
    p.set_defaults(func=_gen)

    p = sub.add_parser('clone', parents=[common],
                       help='expand into a ONE-ONE-LQ instance')
    p.add_argument('instance')
    p.set_defaults(func=_clone)
    return parser


def dispatch(argv, out=None, err=None):
    """Run the command line *argv* and return the exit status.

    Reports go to *out* (default ``sys.stdout``); errors go to *err*
    (default ``sys.stderr``).
    """

    if out is None:
        out = sys.stdout
    if err is None:
        err = sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as detail:
        return detail.code
    logging.basicConfig(stream=err,
                        level=logging.DEBUG if args.verbose else
                        logging.WARNING,
                        format='%(name)s: %(levelname)s: %(message)s',
                        force=True)
    report = _Report(args.command)
    try:
        if getattr(args, 'threads', 0) is None:
            args.threads = _threads_default()
        status = args.func(args, report)
    except lqmatch.fpt.BudgetExceeded as detail:
        err.write('lqmatch: %s\n' % detail)
        report.set('verdict', 'budget_exceeded')
        report.assignments = detail.kwargs.get('budget', 0)
        status = EXIT_BUDGET
    except (lqmatch.exception.LQException, OSError) as detail:
        err.write('lqmatch: %s\n' % detail)
        if not args.json:
            return EXIT_INPUT
        report.set('verdict', 'error')
        report.set('error', str(detail))
        status = EXIT_INPUT
    out.write(report.render(args.json))
    return status


def main():
    sys.exit(dispatch(sys.argv[1:]))
