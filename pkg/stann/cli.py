"""
Command-line interface.

The command `stann` (or `python -m stann`) loads a built-in catalog or an
input document, runs one analysis, and prints a report, as JSON by
default. Exit codes are 0 on success, 1 if the input is invalid, and 2
on usage errors.
"""

########################################
# Components                           #
########################################
from .           import meta                     # meta information
from .config     import option                   # configuration
from .arith      import format_polynomial        # canonical form
from .ideals     import jacobian_ideal           # Jacobian ideal
from .ideals     import ideal_contains           # ideal containment
from .matfac     import annihilate               # stable annihilators
from .matfac     import is_nullhomotopic         # homotopy witness
from .matfac     import verify_homotopy          # witness check
from .matfac     import knorrer_cover            # double branched cover
from .catalog    import CatalogSpec              # built-in catalogs
from .catalog    import parse_document           # input documents
from .spaces     import build_space              # finite space
from .spaces     import enumerate_closed_sets    # Alexandrov topology
from .spaces     import kolmogorov_poset         # Kolmogorov quotient
from .spaces     import is_compact               # compactness
from .spaces     import direct_sum_realization   # minimum via direct sum
from .spaces     import cl_n_report              # cl_n with closed hull
from .spaces     import cln_closed_sets          # cl_n topology
from .spaces     import find_cln_transitivity_failures
from .spaces     import is_cln_compact           # cl_n compactness
from .spaces     import cln_compactness_exponent
from .spaces     import isomorphism              # order isomorphism
from .spaces     import to_dot                   # Graphviz output

########################################
# Dependencies                         #
########################################
import json                                      # JSON documents
import logging                                   # logging configuration
import sys                                       # standard streams
from argparse import ArgumentParser              # command-line parsing
from argparse import ArgumentTypeError           # argument validation
from hashlib import sha256                       # input digest
from pathlib import Path                         # file-system path
from logging import getLogger                    # event logging

########################################
# Globals                              #
########################################
log = getLogger(__package__)                     # event log

caveat = """
Computations take place in polynomial rings k[x, y, ...] over the
rationals, not in the power series rings of the local theory. For the
quasi-homogeneous potentials of the built-in catalogs, both give the same
annihilators and containments. For other inputs this is not guaranteed.
"""


########################################
# Documents                            #
########################################

def read_document(path):
    """Reads an input document from a JSON file."""
    file = Path(path)
    if not file.is_file():
        error = f'Input file "{path}" does not exist.'
        log.error(error)
        raise FileNotFoundError(error)
    return json.loads(file.read_text(encoding='utf-8'))


def load_document(path, workers=None):
    """
    Loads the modules of an input document and computes their annihilators.

    Returns the list of [`ModulePoint`](#ModulePoint) objects in document
    order. Raises `ValueError` if the document is invalid.
    """
    document = read_document(path)
    mfs = parse_document(document, source=Path(path).name)
    if not mfs:
        error = f'Input file "{path}" contains no modules.'
        log.error(error)
        raise ValueError(error)
    return annihilate(mfs, workers)


def dump_document(items, provenance=None):
    """
    Returns the input document describing the given modules.

    `items` are matrix factorizations or module points over the same
    hypersurface ring. The result can be written as JSON and loaded back.
    """
    mfs = [getattr(item, 'mf', item) for item in items]
    if not mfs:
        error = 'Cannot write a document without modules.'
        log.error(error)
        raise ValueError(error)
    ctx = mfs[0].ctx
    document = {
        'ring':      {'variables': list(ctx.variables), 'field': 'QQ'},
        'potential': format_polynomial(ctx.potential),
        'modules':   [mf.document() for mf in mfs],
    }
    if provenance:
        document['provenance'] = provenance
    return document


def digest(document):
    """Returns the SHA-256 digest of a document in canonical JSON form."""
    text = json.dumps(document, sort_keys=True, separators=(',', ':'),
                      ensure_ascii=False)
    return sha256(text.encode('utf-8')).hexdigest()


########################################
# Commands                             #
########################################

class Usage(Exception):
    """Raised on usage errors detected after argument parsing."""


def ideal(value):
    return value.strings()


def command_verify(mfs, arguments):
    results = {'modules': [{'name': mf.label, 'size': mf.size, 'valid': True}
                           for mf in mfs]}
    lines = [f'{mf.label}: valid {mf.size}×{mf.size} factorization'
             for mf in mfs]
    return (results, lines, None)


def command_annihilate(mfs, arguments):
    if arguments.module:
        selected = [mf for mf in mfs if mf.label in arguments.module]
        missing = set(arguments.module) - {mf.label for mf in selected}
        if missing:
            raise Usage(f'No module named "{sorted(missing)[0]}".')
        mfs = selected
    points = annihilate(mfs, arguments.workers)
    witnesses = arguments.witnesses or option('witnesses')
    jacobian = jacobian_ideal(mfs[0].ctx)
    modules = []
    lines = []
    for point in points:
        entry = {
            'name':        point.label,
            'annihilator': ideal(point.annihilator),
            'jacobian':    ideal_contains(point.annihilator, jacobian),
        }
        if witnesses:
            entry['witnesses'] = []
            for g in point.annihilator.basis:
                (found, witness) = is_nullhomotopic(point.mf, g, witness=True)
                if not found or not verify_homotopy(point.mf, g, witness):
                    error = (f'No valid homotopy for generator '
                             f'{format_polynomial(g)} of "{point.label}".')
                    log.error(error)
                    raise RuntimeError(error)
                entry['witnesses'].append(
                    {'generator': format_polynomial(g), **witness.document()})
        modules.append(entry)
        lines.append(f'{point.label}: {point.annihilator}')
    dot = to_dot(kolmogorov_poset(build_space(points)), 'poset')
    return ({'modules': modules}, lines, dot)


def summary(space):
    """Returns the report section describing points, classes, and order."""
    poset = kolmogorov_poset(space)
    return {
        'points':  [{'name': point.label, 'annihilator': ideal(point.annihilator)}
                    for point in space.points],
        'classes': [{'members': space.names(members),
                     'annihilator': ideal(poset.ideal(a))}
                    for (a, members) in enumerate(poset.classes)],
        'order':   [[a+1, b+1] for (a, b) in poset.edges],
    }


def command_space(mfs, arguments):
    space = build_space(annihilate(mfs, arguments.workers))
    poset = kolmogorov_poset(space)
    lattice = enumerate_closed_sets(space)
    (compact, witness, minimum) = is_compact(space)
    results = summary(space)
    results['closed_sets'] = len(lattice)
    results['compact'] = {
        'witness': space.points[witness].label if compact else None,
        'minimum': ideal(minimum),
    }
    if arguments.closed_sets:
        results['lattice'] = lattice.named()
    lines  = [f'{point.label}: {point.annihilator}' for point in space.points]
    lines += [f'{len(poset)} classes, {len(lattice)} closed sets']
    if arguments.closed_sets:
        lines += [f'{i}: {label}'
                  for (i, label) in enumerate(lattice.node_labels(), 1)]
    return (results, lines, to_dot(poset, 'poset'))


def command_hasse(mfs, arguments):
    space = build_space(annihilate(mfs, arguments.workers))
    lattice = enumerate_closed_sets(space)
    results = {
        'nodes': [{'number': i, 'members': members}
                  for (i, members) in enumerate(lattice.named(), 1)],
        'edges': [[a+1, b+1] for (a, b) in lattice.edges],
    }
    lines  = [f'{i}: {label}'
              for (i, label) in enumerate(lattice.node_labels(), 1)]
    lines += [f'{a+1} -> {b+1}' for (a, b) in lattice.edges]
    return (results, lines, to_dot(lattice, 'closed_sets'))


def command_compact(mfs, arguments):
    space = build_space(annihilate(mfs, arguments.workers))
    (compact, witness, minimum) = is_compact(space)
    (indices, _) = direct_sum_realization(space)
    jacobian = jacobian_ideal(space.points[0].ctx)
    (exponent, cln_witness) = cln_compactness_exponent(space)
    results = {
        'compact':     compact,
        'witness':     space.points[witness].label if compact else None,
        'minimum':     ideal(minimum),
        'realization': space.names(indices),
        'jacobian':    ideal_contains(minimum, jacobian),
        'cln':         {
            'exponent': exponent,
            'witness':  (space.points[cln_witness].label
                         if exponent is not None else None),
        },
    }
    lines = [f'minimum ideal: {minimum}']
    if compact:
        lines.append(f'witness: {space.points[witness].label}')
    else:
        lines.append('no single point attains the minimum')
    lines.append('direct sum: ' + ' + '.join(space.names(indices)))
    return (results, lines, to_dot(kolmogorov_poset(space), 'poset'))


def command_cln(mfs, arguments):
    n = arguments.n
    if n < 1:
        raise Usage(f'Exponent --n must be positive, not {n}.')
    space = build_space(annihilate(mfs, arguments.workers))
    lattice = cln_closed_sets(space, n)
    points = []
    lines = []
    for i in range(len(space)):
        (cl, hull) = cl_n_report(space, i, n, lattice)
        points.append({'name': space.points[i].label,
                       'cl_n': space.names(cl),
                       'closed_hull': space.names(hull)})
        lines.append(f'cl_{n}({space.points[i].label}) = '
                     '{' + ', '.join(space.names(cl)) + '}')
    (found, witness, minimum) = is_cln_compact(space, n)
    results = {
        'n':           n,
        'points':      points,
        'closed_sets': len(lattice),
        'lattice':     lattice.named(),
        'compact':     {
            'witness': space.points[witness].label if found else None,
            'minimum': ideal(minimum),
        },
    }
    lines.append(f'{len(lattice)} closed sets')
    if arguments.check_transitivity:
        failures = find_cln_transitivity_failures(space, n)
        results['failures'] = [
            {role: {'name': space.points[index].label,
                    'annihilator': ideal(space.annihilator(index))}
             for (role, index) in zip(('N', 'M', 'L'), triple)}
            for triple in failures]
        results['transitive'] = not failures
        lines.append(f'{len(failures)} transitivity failures')
        for (N, M, L) in failures:
            (a, b, c) = (space.points[k].label for k in (N, M, L))
            lines.append(f'{b} ∈ cl_{n}({a}), {c} ∈ cl_{n}({b}), '
                         f'{c} ∉ cl_{n}({a})')
    return (results, lines, to_dot(lattice, f'cl_{n}'))


def command_knorrer(mfs, arguments):
    covers = [knorrer_cover(mf, arguments.variable) for mf in mfs]
    space = build_space(annihilate(mfs, arguments.workers))
    cover = build_space(annihilate(covers, arguments.workers))
    (a, b) = (kolmogorov_poset(space), kolmogorov_poset(cover))
    mapping = isomorphism(a, b)
    results = {
        'variable':   arguments.variable,
        'potential':  format_polynomial(covers[0].potential),
        'modules':    [{'name': point.label,
                        'annihilator': ideal(point.annihilator)}
                       for point in cover.points],
        'classes':    [len(a), len(b)],
        'isomorphic': mapping is not None,
        'relabeling': [{'from': ideal(a.ideal(i)), 'to': ideal(b.ideal(j))}
                       for (i, j) in (mapping or {}).items()],
    }
    lines  = [f'{point.label}: {point.annihilator}' for point in cover.points]
    lines += ['Kolmogorov quotients are '
              + ('isomorphic' if mapping is not None else 'not isomorphic')]
    lines += [f'{a.ideal(i)} -> {b.ideal(j)}'
              for (i, j) in (mapping or {}).items()]
    return (results, lines, to_dot(b, 'cover'))


commands = {
    'verify':     (command_verify,     'Check that all matrix pairs are factorizations.'),
    'annihilate': (command_annihilate, 'Compute stable annihilators.'),
    'space':      (command_space,      'Summarize the Alexandrov space.'),
    'hasse':      (command_hasse,      'List closed sets and their Hasse diagram.'),
    'compact':    (command_compact,    'Check compactness and find the minimum ideal.'),
    'cln':        (command_cln,        'Analyze the cl_n operator and its topology.'),
    'knorrer':    (command_knorrer,    'Compare with the double branched cover.'),
}
"""Subcommands: implementation and help text."""


########################################
# Parser                               #
########################################

def worker_count(value):
    """Parses the number of worker processes, which must be positive."""
    try:
        count = int(value)
    except ValueError:
        raise ArgumentTypeError(f'invalid worker count: "{value}"') from None
    if count < 1:
        raise ArgumentTypeError(f'need at least one worker, not {count}')
    return count


def parser():
    """Returns the command-line argument parser."""
    shared = ArgumentParser(add_help=False)
    source = shared.add_mutually_exclusive_group(required=True)
    source.add_argument('--catalog', metavar='NAME',
                        help='Built-in catalog: A0:n, A1:n, D:n, D5, D7, E6, E7, E8.')
    source.add_argument('--file', metavar='PATH',
                        help='Input document (JSON).')
    shared.add_argument('--format', choices=('json', 'text'), default='json',
                        help='Report format (default: json).')
    shared.add_argument('--dot', metavar='PATH',
                        help='Also write the diagram to this DOT file.')
    shared.add_argument('--workers', type=worker_count, default=None,
                        help='Number of worker processes.')
    shared.add_argument('--verbose', action='store_true',
                        help='Log progress to standard error.')
    shared.add_argument('--debug', action='store_true',
                        help='Log details to standard error.')

    main = ArgumentParser(prog='stann', description=meta.synopsis + '.',
                          epilog=caveat, allow_abbrev=False)
    main.add_argument('--version', action='version',
                      version=f'{meta.title} {meta.version}')
    subparsers = main.add_subparsers(dest='command', metavar='command',
                                     required=True)
    for (name, (_, description)) in commands.items():
        sub = subparsers.add_parser(name, parents=[shared], help=description,
                                    description=description, epilog=caveat,
                                    allow_abbrev=False)
        if name == 'annihilate':
            sub.add_argument('--module', action='append', metavar='NAME',
                             help='Only this module (repeatable).')
            sub.add_argument('--witnesses', action='store_true',
                             help='Report verified homotopy witnesses.')
        elif name == 'space':
            sub.add_argument('--closed-sets', action='store_true',
                             help='List all closed sets.')
        elif name == 'cln':
            sub.add_argument('--n', type=int, default=2,
                             help='Exponent n (default: 2).')
            sub.add_argument('--check-transitivity', action='store_true',
                             help='Find triples violating transitivity.')
        elif name == 'knorrer':
            sub.add_argument('--variable', default='z',
                             help='Name of the new variable (default: z).')
    return main


def configure_logging(arguments):
    level = logging.WARNING
    if arguments.verbose:
        level = logging.INFO
    if arguments.debug:
        level = logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr,
                        format='%(levelname)s: %(message)s')
    logging.getLogger(__package__).setLevel(level)


########################################
# Entry points                         #
########################################

def run_command(argv=None):
    """
    Runs the command given by the argument list `argv`.

    Prints the report to standard output and diagnostics to standard
    error. Returns the exit code: 0 on success, 1 if the input is
    invalid, 2 on usage errors.
    """
    try:
        arguments = parser().parse_args(argv)
    except SystemExit as exit:
        if exit.code is None:
            return 0
        return exit.code if isinstance(exit.code, int) else 2
    configure_logging(arguments)

    def fail(message, code):
        print(f'stann: error: {message}', file=sys.stderr)
        return code

    try:
        spec = CatalogSpec.parse(arguments.catalog) if arguments.catalog else None
    except ValueError as error:
        return fail(str(error), 2)
    try:
        if spec:
            mfs = spec.factorizations()
            document = dump_document(mfs)
            source = f'catalog:{arguments.catalog}'
        else:
            document = read_document(arguments.file)
            source = arguments.file
            mfs = parse_document(document, source=Path(arguments.file).name)
    except FileNotFoundError as error:
        return fail(str(error), 2)
    except json.JSONDecodeError as error:
        return fail(f'Invalid JSON in "{arguments.file}": {error}', 1)
    except ValueError as error:
        return fail(str(error), 1)
    if not mfs:
        return fail('The input contains no modules.', 2)

    (function, _) = commands[arguments.command]
    try:
        (results, lines, dot) = function(mfs, arguments)
    except Usage as error:
        return fail(str(error), 2)
    except (ValueError, RuntimeError) as error:
        return fail(str(error), 1)

    report = {
        'tool':    meta.title,
        'version': meta.version,
        'input':   {'source': source, 'digest': digest(document)},
        'command': arguments.command,
        'results': results,
    }
    if arguments.format == 'json':
        print(json.dumps(report, indent=2, ensure_ascii=False))
    else:
        for line in lines:
            print(line)
    if arguments.dot:
        if dot is None:
            log.warning(f'Command "{arguments.command}" draws no diagram.')
        else:
            try:
                Path(arguments.dot).write_text(dot, encoding='utf-8')
            except OSError as error:
                return fail(f'Cannot write diagram to "{arguments.dot}": '
                            f'{error.strerror}.', 1)
    return 0


def main():
    """Entry point of the `stann` command."""
    sys.exit(run_command())
