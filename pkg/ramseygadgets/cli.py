"""
# Ramsey Gadgets: cli.py

Licensed under "MIT No Attribution" (MIT-0), see LICENSE.

Command-line interface.
"""

import argparse
import json
import re
import sys
import time
import warnings

from ramseygadgets._version import __version__
from ramseygadgets.colorings import CliqueTuple, arrows
from ramseygadgets.constants import (
    COMMAND_LINE_ERROR_EXIT_CODE,
    DEFAULT_SEARCH_BUDGET,
    DEFAULT_SEED,
    DETERMINER_KIND,
    GRAPH_FILE_FORMAT_HELP,
    MINIMAL_ENUMERATION_VERTEX_CAP,
    NEGATIVE_POLARITY,
    NEGATIVE_RESULT_EXIT_CODE,
    PACKING_VERTEX_CAP,
    POSITIVE_POLARITY,
    SENDER_KIND,
    SUCCESS_EXIT_CODE,
)
from ramseygadgets.constructions import CONSTRUCTION_NAMES, ComposedGadget, replay
from ramseygadgets.digraphs import DigraphReport, aux_digraph, basic_conditions
from ramseygadgets.exceptions import (
    ColoringException,
    ConstructionException,
    GadgetException,
    GraphException,
    HypergraphException,
    PackingException,
    SearchCapException,
    TupleException,
)
from ramseygadgets.formats import parse_graph6, parse_graph_text
from ramseygadgets.gadgets import GadgetCertificate, verify_determiner, verify_sender
from ramseygadgets.packing import packing_bounds, packing_parameter
from ramseygadgets.searches import (
    GadgetSearch,
    claw_threshold,
    iterate_random_graphs,
    iterate_small_graphs,
    minimal_ramsey_enumeration,
)
from ramseygadgets.utilities import compute_digest, parse_edge_argument, parse_integer_list

DESCRIPTION = '''
    Build and verify Ramsey gadgets (set-determiners and set-senders) for tuples of cliques.
'''
EPILOG = GRAPH_FILE_FORMAT_HELP
GRAPH_FILE_HELP = '''
    graph file (graph6, or an edge list with an optional vertex-count first line)
'''
TUPLE_HELP = '''
    clique orders `t1,t2,...,tq`, largest first
'''
NONDECREASING_HELP = '''
    accept the clique orders in any order (they are sorted largest first; the original text is recorded)
'''
JOBS_HELP = '''
    number of worker processes (results never depend on it)
'''
SEED_HELP = '''
    random seed, recorded in the run record
'''
N_MAX_HELP = '''
    largest vertex count to search
'''
BUDGET_HELP = '''
    largest number of verifications a gadget search may run
'''
VERBOSE_MODE_HELP = '''
    run in verbose mode (prints progress to standard error)
'''
KIND_HELP = '''
    gadget kind
'''
COLORS_HELP = '''
    the color set X, as `c1,c2,...`
'''
EDGE_HELP = '''
    a signal edge `u,v` (give once for a determiner, twice for a sender)
'''
POLARITY_HELP = '''
    sender polarity
'''
CONSTRUCTION_HELP = '''
    name of the construction to apply
'''
OPERAND_HELP = '''
    operand files: graph files, or JSON documents written by `compose`
'''
TRACK_HELP = '''
    name an operand edge, as `INDEX:NAME=u,v` (operands are numbered from 0; the first two names are the signal edges)
'''
PARAM_HELP = '''
    construction parameter, as `key=value`
    (integers and comma lists become numbers, `none` becomes null, `@path` reads a file)
'''
SEARCH_MODE_HELP = '''
    what to search for
'''
SOURCE_HELP = '''
    candidate graphs: all graphs on at most n-max vertices, or seeded G(n, p) samples on n-max vertices
'''
PROBABILITY_HELP = '''
    edge probability of random candidate graphs
'''
COUNT_HELP = '''
    number of random candidate graphs
'''
COLOR_HELP = '''
    the color of the claw edge xy
'''
CLIQUE_SIZE_HELP = '''
    order of the claw clique (default r(T) - 1)
'''

FILE_METAVAR = 'file'


class CommandLineError(Exception):
    pass


class RunRecord:
    """
    The document written for every invocation; only `result` is covered by the replay contract.
    """
    def __init__(self, subcommand, arguments, input_digests, seed, wall_time_seconds, result):
        self._subcommand = subcommand
        self._arguments = arguments
        self._input_digests = input_digests
        self._seed = seed
        self._wall_time_seconds = wall_time_seconds
        self._result = result

    @property
    def result(self):
        return self._result

    def to_document(self):
        return {
            'subcommand': self._subcommand,
            'arguments': self._arguments,
            'input_digests': self._input_digests,
            'seed': self._seed,
            'wall_time_seconds': self._wall_time_seconds,
            'result': self._result,
        }


def format_warning(message, category, filename, lineno, line=None):
    return f'warning: {message}\n'


def print_progress(verbose_mode_enabled, message):
    if verbose_mode_enabled:
        print(f'progress: {message}', file=sys.stderr)


def add_common_arguments(parser, tuple_required=True):
    parser.add_argument(
        '-t', '--tuple',
        dest='tuple_text',
        required=tuple_required,
        help=TUPLE_HELP,
        metavar='t1,...,tq',
    )
    parser.add_argument(
        '--nondecreasing',
        dest='nondecreasing_enabled',
        action='store_true',
        help=NONDECREASING_HELP,
    )
    parser.add_argument(
        '-j', '--jobs',
        default=1,
        type=int,
        help=JOBS_HELP,
    )
    parser.add_argument(
        '-x', '--verbose',
        dest='verbose_mode_enabled',
        action='store_true',
        help=VERBOSE_MODE_HELP,
    )


def add_gadget_shape_arguments(parser):
    parser.add_argument(
        '--kind',
        choices=[DETERMINER_KIND, SENDER_KIND],
        default=DETERMINER_KIND,
        help=KIND_HELP,
    )
    parser.add_argument(
        '--colors',
        dest='colors_text',
        required=True,
        help=COLORS_HELP,
        metavar='c1,...',
    )
    parser.add_argument(
        '--polarity',
        choices=[POSITIVE_POLARITY, NEGATIVE_POLARITY],
        default=None,
        help=POLARITY_HELP,
    )


def parse_command_line_arguments(arguments=None):
    argument_parser = argparse.ArgumentParser(
        description=DESCRIPTION,
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    argument_parser.add_argument(
        '-v', '--version',
        action='version',
        version=f'{argument_parser.prog} version {__version__}',
    )
    subparsers = argument_parser.add_subparsers(dest='subcommand', required=True)

    arrows_parser = subparsers.add_parser('arrows', help='decide whether a graph arrows a tuple of cliques')
    add_common_arguments(arrows_parser)
    arrows_parser.add_argument('graph_file_name', help=GRAPH_FILE_HELP, metavar=FILE_METAVAR)

    verify_parser = subparsers.add_parser('verify', help='verify a set-determiner or set-sender')
    add_common_arguments(verify_parser)
    add_gadget_shape_arguments(verify_parser)
    verify_parser.add_argument(
        '-e', '--edge',
        dest='edge_texts',
        action='append',
        default=[],
        help=EDGE_HELP,
        metavar='u,v',
    )
    verify_parser.add_argument('graph_file_name', help=GRAPH_FILE_HELP, metavar=FILE_METAVAR)

    digraph_parser = subparsers.add_parser('digraph', help='compute the auxiliary color digraph of two edges')
    add_common_arguments(digraph_parser)
    digraph_parser.add_argument(
        '-e', '--edge',
        dest='edge_texts',
        action='append',
        default=[],
        help=EDGE_HELP,
        metavar='u,v',
    )
    digraph_parser.add_argument('graph_file_name', help=GRAPH_FILE_HELP, metavar=FILE_METAVAR)

    compose_parser = subparsers.add_parser('compose', help='apply a gadget construction')
    add_common_arguments(compose_parser, tuple_required=False)
    compose_parser.add_argument('construction', choices=CONSTRUCTION_NAMES, help=CONSTRUCTION_HELP)
    compose_parser.add_argument('operand_file_names', nargs='*', default=[], help=OPERAND_HELP, metavar='operand')
    compose_parser.add_argument(
        '--track',
        dest='track_texts',
        action='append',
        default=[],
        help=TRACK_HELP,
        metavar='INDEX:NAME=u,v',
    )
    compose_parser.add_argument(
        '--param',
        dest='param_texts',
        action='append',
        default=[],
        help=PARAM_HELP,
        metavar='key=value',
    )

    packing_parser = subparsers.add_parser('packing', help='compute the packing parameter by exhaustive search')
    add_common_arguments(packing_parser)
    packing_parser.add_argument('--n-max', dest='n_max', default=PACKING_VERTEX_CAP, type=int, help=N_MAX_HELP)

    search_parser = subparsers.add_parser('search', help='search for gadgets, Ramsey-minimal graphs, or claw thresholds')
    add_common_arguments(search_parser)
    search_parser.add_argument('mode', choices=['gadgets', 'minimal', 'claw'], help=SEARCH_MODE_HELP)
    search_parser.add_argument('graph_file_name', nargs='?', default=None, help=GRAPH_FILE_HELP, metavar=FILE_METAVAR)
    search_parser.add_argument('--n-max', dest='n_max', default=4, type=int, help=N_MAX_HELP)
    search_parser.add_argument('--budget', default=DEFAULT_SEARCH_BUDGET, type=int, help=BUDGET_HELP)
    search_parser.add_argument('--seed', default=DEFAULT_SEED, type=int, help=SEED_HELP)
    search_parser.add_argument('--kind', choices=[DETERMINER_KIND, SENDER_KIND], default=DETERMINER_KIND, help=KIND_HELP)
    search_parser.add_argument('--colors', dest='colors_text', default=None, help=COLORS_HELP, metavar='c1,...')
    search_parser.add_argument('--polarity', choices=[POSITIVE_POLARITY, NEGATIVE_POLARITY], default=None, help=POLARITY_HELP)
    search_parser.add_argument('--source', choices=['small', 'random'], default='small', help=SOURCE_HELP)
    search_parser.add_argument('--probability', default=0.5, type=float, help=PROBABILITY_HELP)
    search_parser.add_argument('--count', default=100, type=int, help=COUNT_HELP)
    search_parser.add_argument(
        '-e', '--edge',
        dest='edge_texts',
        action='append',
        default=[],
        help=EDGE_HELP,
        metavar='u,v',
    )
    search_parser.add_argument('--color', default=1, type=int, help=COLOR_HELP)
    search_parser.add_argument('--clique-size', dest='clique_size', default=None, type=int, help=CLIQUE_SIZE_HELP)

    return argument_parser.parse_args(arguments)


def read_input_file(file_name, input_digests):
    try:
        with open(file_name, 'rb') as input_file:
            data = input_file.read()
    except FileNotFoundError as file_not_found_error:
        raise CommandLineError(f'file `{file_name}` not found') from file_not_found_error
    except OSError as os_error:
        raise CommandLineError(f'cannot read `{file_name}`: {os_error}') from os_error

    input_digests[file_name] = compute_digest(data)
    try:
        return data.decode('utf-8')
    except UnicodeDecodeError as unicode_decode_error:
        raise CommandLineError(f'file `{file_name}` is not UTF-8 text') from unicode_decode_error


def read_graph_file(file_name, input_digests):
    text = read_input_file(file_name, input_digests)
    try:
        return parse_graph_text(text)
    except GraphException as graph_exception:
        raise CommandLineError(f'file `{file_name}`: {graph_exception}') from graph_exception


def read_operand_file(file_name, input_digests):
    """
    Read a compose operand: a graph file, a `compose` result, or a run record holding one.
    """
    text = read_input_file(file_name, input_digests)
    if not text.lstrip().startswith('{'):
        try:
            return ComposedGadget.from_graph(parse_graph_text(text))
        except GraphException as graph_exception:
            raise CommandLineError(f'file `{file_name}`: {graph_exception}') from graph_exception

    try:
        document = json.loads(text)
        document = document.get('result', document)
        graph = parse_graph6(document['graph6'])
        tracked = {name: tuple(edge) for name, edge in document.get('tracked', [])}
        return ComposedGadget.from_graph(graph, tracked)
    except (ValueError, KeyError, TypeError, AttributeError) as error:
        raise CommandLineError(f'file `{file_name}`: not a composed gadget document ({error})') from error
    except (GraphException, ConstructionException) as error:
        raise CommandLineError(f'file `{file_name}`: {error}') from error


def read_clique_tuple(parsed_arguments, minimum_order):
    if parsed_arguments.tuple_text is None:
        raise CommandLineError('argument -t/--tuple is required here')
    try:
        return CliqueTuple.from_string(
            parsed_arguments.tuple_text,
            allow_nondecreasing=parsed_arguments.nondecreasing_enabled,
            minimum_order=minimum_order,
        )
    except TupleException as tuple_exception:
        raise CommandLineError(f'argument -t/--tuple: {tuple_exception}') from tuple_exception


def read_edges(parsed_arguments, count):
    if len(parsed_arguments.edge_texts) != count:
        raise CommandLineError(f'expected {count} edge argument(s) -e/--edge, got {len(parsed_arguments.edge_texts)}')
    try:
        return [parse_edge_argument(text) for text in parsed_arguments.edge_texts]
    except ValueError as value_error:
        raise CommandLineError(f'argument -e/--edge: {value_error}') from value_error


def read_colors(colors_text):
    if colors_text is None:
        raise CommandLineError('argument --colors is required here')
    try:
        return parse_integer_list(colors_text)
    except ValueError as value_error:
        raise CommandLineError(f'argument --colors: {value_error}') from value_error


def parse_track_argument(string):
    match = re.fullmatch(
        pattern=r'(?P<index> [0-9]+ ) : (?P<name> [A-Za-z_][A-Za-z0-9_]* ) = (?P<edge> .+ )',
        string=string.strip(),
        flags=re.VERBOSE,
    )
    if match is None:
        raise CommandLineError(f'argument --track: `{string}` is not of the form `INDEX:NAME=u,v`')
    try:
        edge = parse_edge_argument(match.group('edge'))
    except ValueError as value_error:
        raise CommandLineError(f'argument --track: {value_error}') from value_error

    return int(match.group('index')), match.group('name'), edge


def parse_parameter_value(string, input_digests):
    if string.startswith('@'):
        return read_input_file(string[1:], input_digests)
    if string == 'none':
        return None
    try:
        integers = parse_integer_list(string)
    except ValueError:
        return string

    return integers[0] if len(integers) == 1 and ',' not in string else integers


def parse_param_arguments(param_texts, input_digests):
    parameters = {}
    for text in param_texts:
        key, separator, value = text.partition('=')
        if not separator or not key:
            raise CommandLineError(f'argument --param: `{text}` is not of the form `key=value`')
        parameters[key] = parse_parameter_value(value, input_digests)

    return parameters


def run_arrows(parsed_arguments, input_digests):
    clique_tuple = read_clique_tuple(parsed_arguments, minimum_order=2)
    graph = read_graph_file(parsed_arguments.graph_file_name, input_digests)
    print_progress(
        parsed_arguments.verbose_mode_enabled,
        f'deciding arrowing of ({clique_tuple}) on {graph.vertex_count} vertices, {graph.edge_count} edges',
    )
    verdict = arrows(graph, clique_tuple, jobs=parsed_arguments.jobs)

    return verdict.to_document(), SUCCESS_EXIT_CODE


def run_verify(parsed_arguments, input_digests):
    clique_tuple = read_clique_tuple(parsed_arguments, minimum_order=3)
    graph = read_graph_file(parsed_arguments.graph_file_name, input_digests)
    colors = read_colors(parsed_arguments.colors_text)

    if parsed_arguments.kind == DETERMINER_KIND:
        (e,) = read_edges(parsed_arguments, 1)
        verdict = verify_determiner(graph, clique_tuple, e, colors, jobs=parsed_arguments.jobs)
    else:
        if parsed_arguments.polarity is None:
            raise CommandLineError('argument --polarity is required for a sender')
        e, f = read_edges(parsed_arguments, 2)
        verdict = verify_sender(graph, clique_tuple, e, f, colors, parsed_arguments.polarity, jobs=parsed_arguments.jobs)

    exit_code = SUCCESS_EXIT_CODE if isinstance(verdict, GadgetCertificate) else NEGATIVE_RESULT_EXIT_CODE
    return verdict.to_document(), exit_code


def run_digraph(parsed_arguments, input_digests):
    clique_tuple = read_clique_tuple(parsed_arguments, minimum_order=2)
    graph = read_graph_file(parsed_arguments.graph_file_name, input_digests)
    g1, g2 = read_edges(parsed_arguments, 2)

    digraph = aux_digraph(graph, clique_tuple, g1, g2, jobs=parsed_arguments.jobs)
    hint = basic_conditions(digraph)
    result = {
        'colors': digraph.color_count,
        'arcs': digraph.to_lines(),
        'report': DigraphReport(digraph).to_document(),
        'determiner_hint': None if hint is None else {
            'signal': hint.signal,
            'excluded_color': hint.excluded_color,
            'colors': sorted(hint.colors),
        },
    }
    return result, SUCCESS_EXIT_CODE


def run_compose(parsed_arguments, input_digests):
    operands = [read_operand_file(file_name, input_digests) for file_name in parsed_arguments.operand_file_names]

    tracked_from_index = {}
    for text in parsed_arguments.track_texts:
        index, name, edge = parse_track_argument(text)
        if index >= len(operands):
            raise CommandLineError(f'argument --track: operand {index} does not exist ({len(operands)} given)')
        tracked_from_index.setdefault(index, {})[name] = edge
    for index, tracked in tracked_from_index.items():
        operands[index] = ComposedGadget.from_graph(operands[index].graph, {**operands[index].tracked, **tracked})

    provenance = {
        'construction': parsed_arguments.construction,
        'operands': [operand.to_operand_document() for operand in operands],
        'parameters': parse_param_arguments(parsed_arguments.param_texts, input_digests),
    }
    clique_tuple = None
    if parsed_arguments.tuple_text is not None:
        clique_tuple = read_clique_tuple(parsed_arguments, minimum_order=2)

    print_progress(parsed_arguments.verbose_mode_enabled, f'applying {parsed_arguments.construction}')
    composed = replay(provenance, clique_tuple)

    return composed.to_document(), SUCCESS_EXIT_CODE


def run_packing(parsed_arguments, input_digests):
    clique_tuple = read_clique_tuple(parsed_arguments, minimum_order=2)
    orders = list(clique_tuple.orders)
    result = packing_parameter(
        orders, parsed_arguments.n_max, jobs=parsed_arguments.jobs, progress=parsed_arguments.verbose_mode_enabled,
    )

    document = result.to_document()
    if len(orders) >= 2:
        lower, upper = packing_bounds(orders)
        document['bounds'] = {'lower': lower, 'upper': upper}
    if result.value is None:
        warnings.warn(f'no valid pattern on at most {parsed_arguments.n_max} vertices; only a lower bound is known')
        return document, NEGATIVE_RESULT_EXIT_CODE

    return document, SUCCESS_EXIT_CODE


def run_search_gadgets(parsed_arguments, input_digests):
    clique_tuple = read_clique_tuple(parsed_arguments, minimum_order=3)
    colors = read_colors(parsed_arguments.colors_text)
    if parsed_arguments.kind == SENDER_KIND and parsed_arguments.polarity is None:
        raise CommandLineError('argument --polarity is required for a sender')

    if parsed_arguments.graph_file_name is not None:
        graphs = [read_graph_file(parsed_arguments.graph_file_name, input_digests)]
    elif parsed_arguments.source == 'random':
        graphs = iterate_random_graphs(
            parsed_arguments.n_max, parsed_arguments.probability, parsed_arguments.count, parsed_arguments.seed,
        )
    else:
        graphs = iterate_small_graphs(parsed_arguments.n_max)

    search = GadgetSearch(
        clique_tuple,
        parsed_arguments.kind,
        colors,
        parsed_arguments.polarity,
        budget=parsed_arguments.budget,
        jobs=parsed_arguments.jobs,
        progress=parsed_arguments.verbose_mode_enabled,
    )
    certificate_count = 0
    for certificate in search.run(graphs):
        certificate_count += 1
        print(json.dumps(certificate.to_document(), sort_keys=True))

    result = {
        'certificate_count': certificate_count,
        'examined_count': search.examined_count,
        'budget_exhausted': search.budget_exhausted,
    }
    return result, SUCCESS_EXIT_CODE if certificate_count > 0 else NEGATIVE_RESULT_EXIT_CODE


def run_search_minimal(parsed_arguments, input_digests):
    clique_tuple = read_clique_tuple(parsed_arguments, minimum_order=2)
    if parsed_arguments.n_max > MINIMAL_ENUMERATION_VERTEX_CAP:
        raise CommandLineError(f'argument --n-max: exceeds the enumeration cap {MINIMAL_ENUMERATION_VERTEX_CAP}')

    graphs = minimal_ramsey_enumeration(
        clique_tuple, parsed_arguments.n_max, jobs=parsed_arguments.jobs,
        progress=parsed_arguments.verbose_mode_enabled,
    )
    result = {
        'n_max': parsed_arguments.n_max,
        'graphs': [
            {'graph6': document['graph6'], 'vertex_count': document['vertex_count'], 'edge_count': document['edge_count']}
            for document in (ComposedGadget.from_graph(graph).to_document() for graph in graphs)
        ],
    }
    return result, SUCCESS_EXIT_CODE if graphs else NEGATIVE_RESULT_EXIT_CODE


def run_search_claw(parsed_arguments, input_digests):
    clique_tuple = read_clique_tuple(parsed_arguments, minimum_order=3)
    if parsed_arguments.graph_file_name is None:
        raise CommandLineError('search claw needs the gadget graph file')
    graph = read_graph_file(parsed_arguments.graph_file_name, input_digests)
    e, f = read_edges(parsed_arguments, 2)
    if parsed_arguments.color not in clique_tuple.colors:
        raise CommandLineError(f'argument --color: {parsed_arguments.color} is not a color of ({clique_tuple})')

    gadget = ComposedGadget.from_graph(graph, {'e': e, 'f': f})
    threshold = claw_threshold(clique_tuple, gadget, parsed_arguments.color, h=parsed_arguments.clique_size)
    result = {'color': parsed_arguments.color, 'threshold': threshold}

    return result, SUCCESS_EXIT_CODE if threshold is not None else NEGATIVE_RESULT_EXIT_CODE


def run_search(parsed_arguments, input_digests):
    return RUNNER_FROM_SEARCH_MODE[parsed_arguments.mode](parsed_arguments, input_digests)


RUNNER_FROM_SUBCOMMAND = {
    'arrows': run_arrows,
    'verify': run_verify,
    'digraph': run_digraph,
    'compose': run_compose,
    'packing': run_packing,
    'search': run_search,
}
RUNNER_FROM_SEARCH_MODE = {
    'gadgets': run_search_gadgets,
    'minimal': run_search_minimal,
    'claw': run_search_claw,
}
LIBRARY_EXCEPTIONS = (
    ColoringException,
    ConstructionException,
    GadgetException,
    GraphException,
    HypergraphException,
    PackingException,
    SearchCapException,
    TupleException,
)


def recorded_arguments(parsed_arguments):
    return {key: value for key, value in sorted(vars(parsed_arguments).items())}


def main(arguments=None):
    parsed_arguments = parse_command_line_arguments(arguments)
    warnings.formatwarning = format_warning

    input_digests = {}
    start_time = time.perf_counter()
    try:
        result, exit_code = RUNNER_FROM_SUBCOMMAND[parsed_arguments.subcommand](parsed_arguments, input_digests)
    except CommandLineError as command_line_error:
        print(f'error: {command_line_error}', file=sys.stderr)
        sys.exit(COMMAND_LINE_ERROR_EXIT_CODE)
    except LIBRARY_EXCEPTIONS as library_exception:
        print(f'error: {library_exception}', file=sys.stderr)
        sys.exit(COMMAND_LINE_ERROR_EXIT_CODE)
    wall_time_seconds = time.perf_counter() - start_time

    run_record = RunRecord(
        parsed_arguments.subcommand,
        recorded_arguments(parsed_arguments),
        input_digests,
        getattr(parsed_arguments, 'seed', DEFAULT_SEED),
        round(wall_time_seconds, 6),
        result,
    )
    print(json.dumps(run_record.to_document(), sort_keys=True, indent=2))
    sys.exit(exit_code)


if __name__ == '__main__':
    main()
