"""
# Ramsey Gadgets: packing.py

Licensed under "MIT No Attribution" (MIT-0), see LICENSE.

Color patterns, the packing parameter P_q, its bounds, and the Turán blow-up of hypergraph families.
"""

import itertools
import math

import networkx as nx
import numpy as np
from tqdm import tqdm

from ramseygadgets.constants import DEFAULT_BLOWUP_RETRY_CAP, PACKING_VERTEX_CAP, PREFIXES_PER_WORKER
from ramseygadgets.exceptions import Graph6Exception, PackingException, SearchCapException
from ramseygadgets.formats import parse_graph6, write_graph6
from ramseygadgets.graphs import Graph, cliques_of_size
from ramseygadgets.utilities import map_in_order


class ColorPattern:
    """
    Pairwise edge-disjoint graphs G_1, ..., G_q on the common vertex set 0, ..., n-1.
    """
    def __init__(self, vertex_count, graphs):
        graphs = tuple(graphs)
        for index, graph in enumerate(graphs, start=1):
            if graph.vertex_count != vertex_count:
                raise PackingException(f'G_{index} has {graph.vertex_count} vertices, expected {vertex_count}')

        owner_from_edge = {}
        for index, graph in enumerate(graphs, start=1):
            for edge in graph.edges:
                if edge in owner_from_edge:
                    raise PackingException(f'edge {edge} lies in both G_{owner_from_edge[edge]} and G_{index}')
                owner_from_edge[edge] = index

        self._vertex_count = vertex_count
        self._graphs = graphs

    def __eq__(self, other):
        if not isinstance(other, ColorPattern):
            return NotImplemented

        return self._vertex_count == other._vertex_count and self._graphs == other._graphs

    def __hash__(self):
        return hash((self._vertex_count, self._graphs))

    def __repr__(self):
        return f'ColorPattern({self._vertex_count}, {list(self._graphs)})'

    @property
    def vertex_count(self):
        return self._vertex_count

    @property
    def graphs(self):
        return self._graphs

    @property
    def color_count(self):
        return len(self._graphs)

    def to_document(self):
        return {
            'vertex_count': self._vertex_count,
            'graphs': [write_graph6(graph) for graph in self._graphs],
            'edges': [[list(edge) for edge in graph.edges] for graph in self._graphs],
        }


class PatternVerdict:
    """
    Outcome of checking a pattern: when invalid, either `clique` is a K_{t_i + 1} in G_i
    (its color in `clique_color`), or `uncovered_coloring` is a vertex coloring
    with no K_{t_i} of G_i inside any color class i.
    """
    def __init__(self, valid, clique_color=None, clique=None, uncovered_coloring=None):
        self._valid = valid
        self._clique_color = clique_color
        self._clique = clique
        self._uncovered_coloring = uncovered_coloring

    def __bool__(self):
        return self._valid

    @property
    def valid(self):
        return self._valid

    @property
    def clique_color(self):
        return self._clique_color

    @property
    def clique(self):
        return self._clique

    @property
    def uncovered_coloring(self):
        return self._uncovered_coloring

    def to_document(self):
        return {
            'valid': self._valid,
            'clique_color': self._clique_color,
            'clique': None if self._clique is None else list(self._clique),
            'uncovered_coloring': None if self._uncovered_coloring is None else list(self._uncovered_coloring),
        }


def _require_orders(orders, color_count=None):
    orders = tuple(orders)
    if not orders or any(not isinstance(order, int) or order < 2 for order in orders):
        raise PackingException(f'packing orders must be integers at least 2, got {list(orders)}')
    if color_count is not None and len(orders) != color_count:
        raise PackingException(f'{len(orders)} orders given for a pattern of {color_count} graphs')

    return orders


def _has_clique_within(neighbour_masks, candidates, size):
    """
    Decide whether the vertices of the bitmask `candidates` contain a clique of `size` vertices.
    """
    if size <= 0:
        return True
    while candidates and candidates.bit_count() >= size:
        low_bit = candidates & -candidates
        vertex = low_bit.bit_length() - 1
        candidates ^= low_bit
        if _has_clique_within(neighbour_masks, candidates & neighbour_masks[vertex], size - 1):
            return True

    return False


def _uncovered_vertex_coloring(masks_by_color, orders, vertex_count):
    """
    Return the first vertex coloring (lexicographic) in which no color class i holds a K_{t_i} of G_i, or None.
    """
    color_count = len(orders)
    for vertex_coloring in itertools.product(range(1, color_count + 1), repeat=vertex_count):
        class_masks = [0] * (color_count + 1)
        for vertex, color in enumerate(vertex_coloring):
            class_masks[color] |= 1 << vertex
        if not any(
            _has_clique_within(masks_by_color[color - 1], class_masks[color], orders[color - 1])
            for color in range(1, color_count + 1)
        ):
            return vertex_coloring

    return None


def pattern_valid(pattern, orders):
    """
    Check (P1) each G_i is K_{t_i + 1}-free and (P2) every q-coloring of the vertices
    has a color i whose class contains a K_{t_i} of G_i.
    """
    orders = _require_orders(orders, pattern.color_count)
    for color, (graph, order) in enumerate(zip(pattern.graphs, orders), start=1):
        clique = next(cliques_of_size(graph, order + 1), None)
        if clique is not None:
            return PatternVerdict(False, clique_color=color, clique=clique)

    uncovered = _uncovered_vertex_coloring(
        [graph.neighbour_masks for graph in pattern.graphs], orders, pattern.vertex_count
    )
    if uncovered is not None:
        return PatternVerdict(False, uncovered_coloring=uncovered)

    return PatternVerdict(True)


class PatternSearch:
    """
    Depth-first search over color patterns on n vertices.

    Each potential edge, in canonical order, goes to G_1, ..., G_q or is left out, in that order of preference.
    Symmetries are broken by putting the edge (0, 1) in G_1 and, among colors of equal order,
    by using a color only after the previous one of its group has been used.
    (P1) is maintained edge by edge; only maximal patterns (no edge can be added to any G_i) are tested for (P2).
    """
    def __init__(self, orders, vertex_count):
        self._orders = _require_orders(orders)
        self._vertex_count = vertex_count
        self._edges = list(itertools.combinations(range(vertex_count), 2))
        self._class_order = list(range(1, len(self._orders) + 1)) + [0]

        self._predecessor_from_color = {}
        previous_from_order = {}
        for color, order in enumerate(self._orders, start=1):
            self._predecessor_from_color[color] = previous_from_order.get(order)
            previous_from_order[order] = color

    @property
    def edges(self):
        return self._edges

    def _completes_clique(self, masks, color, u, v):
        color_masks = masks[color]
        return _has_clique_within(color_masks, color_masks[u] & color_masks[v], self._orders[color - 1] - 1)

    def _allowed(self, masks, used_counts, color, u, v):
        if color == 0:
            return True
        predecessor = self._predecessor_from_color[color]
        if predecessor is not None and used_counts[predecessor] == 0:
            return False

        return not self._completes_clique(masks, color, u, v)

    def _is_maximal(self, masks, assignment):
        for (u, v), color in zip(self._edges, assignment):
            if color != 0:
                continue
            if any(not self._completes_clique(masks, other, u, v) for other in range(1, len(self._orders) + 1)):
                return False

        return True

    def iterate(self, prefix=(), depth_limit=None):
        """
        Yield (assignment, masks) for every admissible assignment of the first `depth_limit` edges
        (all edges by default) that extends `prefix`, in search order.
        """
        if depth_limit is None:
            depth_limit = len(self._edges)

        color_count = len(self._orders)
        masks = [[0] * self._vertex_count for _ in range(color_count + 1)]
        used_counts = [0] * (color_count + 1)
        assignment = []

        def place(color, u, v):
            assignment.append(color)
            used_counts[color] += 1
            if color != 0:
                masks[color][u] |= 1 << v
                masks[color][v] |= 1 << u

        def remove(u, v):
            color = assignment.pop()
            used_counts[color] -= 1
            if color != 0:
                masks[color][u] &= ~(1 << v)
                masks[color][v] &= ~(1 << u)

        for depth, color in enumerate(prefix):
            u, v = self._edges[depth]
            choices = [1] if depth == 0 else self._class_order
            if color not in choices or not self._allowed(masks, used_counts, color, u, v):
                return
            place(color, u, v)

        def descend(depth):
            if depth == depth_limit:
                yield tuple(assignment), masks
                return

            u, v = self._edges[depth]
            choices = [1] if depth == 0 else self._class_order
            for color in choices:
                if self._allowed(masks, used_counts, color, u, v):
                    place(color, u, v)
                    yield from descend(depth + 1)
                    remove(u, v)

        yield from descend(len(prefix))

    def first_valid(self, prefix=()):
        """
        Return (first valid maximal assignment or None, number of maximal patterns examined).
        """
        examined_count = 0
        for assignment, masks in self.iterate(prefix):
            if not self._is_maximal(masks, assignment):
                continue
            examined_count += 1
            if _uncovered_vertex_coloring(masks[1:], self._orders, self._vertex_count) is None:
                return assignment, examined_count

        return None, examined_count

    def prefixes(self, target_count):
        prefix_length = 0
        while prefix_length < len(self._edges) and (len(self._orders) + 1) ** prefix_length < target_count:
            prefix_length += 1

        for assignment, _ in self.iterate(depth_limit=prefix_length):
            yield assignment

    def to_pattern(self, assignment):
        return ColorPattern(
            self._vertex_count,
            (
                Graph(self._vertex_count, (edge for edge, color in zip(self._edges, assignment) if color == class_color))
                for class_color in range(1, len(self._orders) + 1)
            ),
        )


def _pattern_search_task(task):
    orders, vertex_count, prefix = task
    return PatternSearch(orders, vertex_count).first_valid(prefix)


class PackingResult:
    """
    The least n ≤ n_max admitting a valid pattern (with a witness), or None;
    `examined_from_vertex_count` records, for every refuted n, how many maximal patterns were ruled out.
    """
    def __init__(self, orders, n_max, value, witness, examined_from_vertex_count):
        self._orders = tuple(orders)
        self._n_max = n_max
        self._value = value
        self._witness = witness
        self._examined_from_vertex_count = dict(examined_from_vertex_count)

    @property
    def value(self):
        return self._value

    @property
    def witness(self):
        return self._witness

    @property
    def examined_from_vertex_count(self):
        return self._examined_from_vertex_count

    @property
    def lower_bound(self):
        """
        A proven lower bound: the value itself, or n_max + 1 when nothing was found.
        """
        return self._value if self._value is not None else self._n_max + 1

    def to_document(self):
        return {
            'orders': list(self._orders),
            'n_max': self._n_max,
            'value': self._value,
            'lower_bound': self.lower_bound,
            'witness': None if self._witness is None else self._witness.to_document(),
            'refutations': {str(n): count for n, count in sorted(self._examined_from_vertex_count.items())},
        }


def packing_parameter(orders, n_max=PACKING_VERTEX_CAP, jobs=1, progress=False):
    """
    Compute P_q(t_1, ..., t_q) by exhaustive search over n = 1, ..., n_max.

    The witness is the first valid pattern in search order, whatever the number of jobs.
    """
    orders = _require_orders(orders)
    if n_max > PACKING_VERTEX_CAP:
        raise SearchCapException(f'packing search up to {n_max} vertices exceeds the cap {PACKING_VERTEX_CAP}', PACKING_VERTEX_CAP)

    examined_from_vertex_count = {}
    for vertex_count in range(1, n_max + 1):
        search = PatternSearch(orders, vertex_count)
        prefixes = list(search.prefixes(max(jobs, 1) * PREFIXES_PER_WORKER)) if jobs > 1 else [()]
        tasks = [(orders, vertex_count, prefix) for prefix in prefixes]

        examined_count = 0
        witness_assignment = None
        results = map_in_order(_pattern_search_task, tasks, jobs)
        try:
            for assignment, count in tqdm(
                results, total=len(tasks), desc=f'packing n={vertex_count}', disable=not progress, leave=False,
            ):
                examined_count += count
                if assignment is not None:
                    witness_assignment = assignment
                    break
        finally:
            results.close()

        if witness_assignment is not None:
            return PackingResult(orders, n_max, vertex_count, search.to_pattern(witness_assignment), examined_from_vertex_count)
        examined_from_vertex_count[vertex_count] = examined_count

    return PackingResult(orders, n_max, None, None, examined_from_vertex_count)


def packing_bounds(orders):
    """
    Return (t_1 t_2, upper) for P_q, where upper holds ⌈(8 q t_1 log t_1)³⌉ with base-2 and natural logarithms.
    """
    orders = _require_orders(orders)
    if len(orders) < 2:
        raise PackingException(f'packing bounds need at least 2 colors, got {len(orders)}')
    if any(earlier < later for earlier, later in zip(orders, orders[1:])):
        raise PackingException(f'packing orders must be largest first, got {list(orders)}')

    color_count = len(orders)
    largest = orders[0]
    upper = {
        'log2': math.ceil((8 * color_count * largest * math.log2(largest)) ** 3),
        'ln': math.ceil((8 * color_count * largest * math.log(largest)) ** 3),
    }
    return orders[0] * orders[1], upper


def minimum_degree_bounds(clique_tuple):
    """
    Bounds on s_q(T): lower (t_1 - 1)(t_2 - 1), upper the packing upper bound at (t_1 - 1, ..., t_q - 1).
    """
    clique_tuple.require_gadget_orders()
    return packing_bounds([order - 1 for order in clique_tuple.orders])


class HypergraphFamily:
    """
    Edge-disjoint s-uniform hypergraphs on a common vertex set (arc orientation ignored).

    `girth_claims` optionally maps a hypergraph index to a claimed lower bound on its girth.
    """
    def __init__(self, hypergraphs, regularity=None, girth_claims=None):
        hypergraphs = tuple(hypergraphs)
        if not hypergraphs:
            raise PackingException('a hypergraph family needs at least one hypergraph')

        vertex_count = hypergraphs[0].vertex_count
        uniformity = hypergraphs[0].uniformity
        owner_from_hyperedge = {}
        for index, hypergraph in enumerate(hypergraphs):
            if hypergraph.vertex_count != vertex_count or hypergraph.uniformity != uniformity:
                raise PackingException(f'hypergraph {index} does not share the vertex set and uniformity of the family')
            for arc in hypergraph.arcs:
                hyperedge = frozenset(arc)
                if hyperedge in owner_from_hyperedge:
                    raise PackingException(f'hyperedge {sorted(hyperedge)} appears more than once in the family')
                owner_from_hyperedge[hyperedge] = index

        degrees = [self._degrees(hypergraph, vertex_count) for hypergraph in hypergraphs]
        if regularity is not None:
            for index, hypergraph_degrees in enumerate(degrees):
                if set(hypergraph_degrees) != {regularity}:
                    raise PackingException(f'hypergraph {index} is not {regularity}-regular')

        self._hypergraphs = hypergraphs
        self._vertex_count = vertex_count
        self._uniformity = uniformity
        self._regularity = regularity
        self._girth_claims = dict(girth_claims or {})

    @staticmethod
    def _degrees(hypergraph, vertex_count):
        degrees = [0] * vertex_count
        for arc in hypergraph.arcs:
            for vertex in arc:
                degrees[vertex] += 1
        return degrees

    @property
    def hypergraphs(self):
        return self._hypergraphs

    @property
    def vertex_count(self):
        return self._vertex_count

    @property
    def uniformity(self):
        return self._uniformity

    @property
    def regularity(self):
        return self._regularity

    @property
    def girth_claims(self):
        return self._girth_claims


def turan_blowup(family, orders, seed):
    """
    For every hyperedge of H_i, split its vertices into t_i parts by a seeded uniformly random equipartition
    and put the complete t_i-partite graph on them into G_i.

    One generator serves all hyperedges, in family order then arc order.
    Raises PackingException if some G_i contains a K_{t_i + 1}.
    """
    orders = _require_orders(orders, len(family.hypergraphs))
    for order in orders:
        if order > family.uniformity:
            raise PackingException(f'cannot split hyperedges of size {family.uniformity} into {order} parts')

    generator = np.random.default_rng(seed)
    graphs = []
    for hypergraph, order in zip(family.hypergraphs, orders):
        edges = []
        for arc in hypergraph.arcs:
            shuffled = [int(vertex) for vertex in generator.permutation(sorted(arc))]
            part_from_vertex = {vertex: position % order for position, vertex in enumerate(shuffled)}
            edges.extend(
                (u, v)
                for u, v in itertools.combinations(shuffled, 2)
                if part_from_vertex[u] != part_from_vertex[v]
            )
        graphs.append(Graph(family.vertex_count, edges))

    for color, (graph, order) in enumerate(zip(graphs, orders), start=1):
        clique = next(cliques_of_size(graph, order + 1), None)
        if clique is not None:
            raise PackingException(f'G_{color} contains a K_{order + 1} on {clique}; the family girth is too small')

    return ColorPattern(family.vertex_count, graphs)


def turan_blowup_with_retries(family, orders, seed, retries=DEFAULT_BLOWUP_RETRY_CAP):
    """
    Retry the blow-up with seeds seed, seed + 1, ... until the pattern is valid.

    Returns (pattern, seed used), or None when every retry fails.
    """
    for attempt in range(retries):
        attempt_seed = seed + attempt
        try:
            pattern = turan_blowup(family, orders, attempt_seed)
        except PackingException:
            continue
        if pattern_valid(pattern, orders).valid:
            return pattern, attempt_seed

    return None


def _is_complete_multipartite(graph, vertices, part_count=None, equipartite=False):
    vertices = sorted(vertices)
    parts = []
    for vertex in vertices:
        for part in parts:
            if not graph.has_edge(vertex, part[0]):
                part.append(vertex)
                break
        else:
            parts.append([vertex])

    part_from_vertex = {vertex: index for index, part in enumerate(parts) for vertex in part}
    for u, v in itertools.combinations(vertices, 2):
        if graph.has_edge(u, v) != (part_from_vertex[u] != part_from_vertex[v]):
            return False
    if part_count is not None and len(parts) != part_count:
        return False
    if equipartite and max(map(len, parts)) - min(map(len, parts)) > 1:
        return False

    return True


def blocks_are_complete_multipartite(pattern, family, orders):
    """
    Check that each G_i, on each hyperedge of H_i, is a complete t_i-partite graph with parts of near-equal size,
    and has no edge outside those hyperedges.
    """
    orders = _require_orders(orders, pattern.color_count)
    for graph, hypergraph, order in zip(pattern.graphs, family.hypergraphs, orders):
        block_edges = set()
        for arc in hypergraph.arcs:
            if not _is_complete_multipartite(graph, arc, order, equipartite=True):
                return False
            block_edges.update(edge for edge in itertools.combinations(sorted(arc), 2) if graph.has_edge(*edge))
        if set(graph.edges) != block_edges:
            return False

    return True


def components_are_complete_multipartite(pattern, orders):
    """
    Check that every connected component of every G_i is complete multipartite with at most t_i parts.

    This matches the blow-up shape when the hyperedges of each H_i are vertex-disjoint.
    """
    orders = _require_orders(orders, pattern.color_count)
    for graph, order in zip(pattern.graphs, orders):
        for component in nx.connected_components(graph.to_networkx()):
            if len(component) == 1:
                continue
            if not _is_complete_multipartite(graph, component):
                return False
            parts_count = len({frozenset(graph.neighbours(vertex)) for vertex in component})
            if parts_count > order:
                return False

    return True


def parse_pattern(string):
    """
    Parse a pattern file: a header `pattern n q`, then q graph6 lines.
    """
    lines = [line.strip() for line in string.splitlines() if line.strip() and not line.strip().startswith('#')]
    if not lines:
        raise PackingException('missing header `pattern n q`')

    header = lines[0].split()
    if len(header) != 3 or header[0] != 'pattern' or not header[1].isdigit() or not header[2].isdigit():
        raise PackingException(f'expected a header `pattern n q`, got `{lines[0]}`')

    vertex_count, color_count = int(header[1]), int(header[2])
    if len(lines) - 1 != color_count:
        raise PackingException(f'expected {color_count} graph6 lines, got {len(lines) - 1}')

    graphs = []
    for index, line in enumerate(lines[1:], start=1):
        try:
            graphs.append(parse_graph6(line))
        except Graph6Exception as graph6_exception:
            raise PackingException(f'G_{index}: {graph6_exception}') from graph6_exception

    return ColorPattern(vertex_count, graphs)


def write_pattern(pattern):
    lines = [f'pattern {pattern.vertex_count} {pattern.color_count}']
    lines.extend(write_graph6(graph) for graph in pattern.graphs)
    return '\n'.join(lines) + '\n'
