"""
# Ramsey Gadgets: hypergraphs.py

Licensed under "MIT No Attribution" (MIT-0), see LICENSE.

Oriented hypergraphs, forbidden patterns, girth, and pattern-avoiding vertex colorings.
"""

import itertools
import math
import re
import warnings

from ramseygadgets.constants import DEFAULT_GIRTH_BOUND, DEFAULT_SEARCH_BUDGET, GIRTH_SUBSET_CAP
from ramseygadgets.exceptions import HypergraphException


class OrientedHypergraph:
    """
    An oriented l-graph: arcs are ordered l-tuples of distinct vertices of 0, ..., n-1.

    `distinguished` is an optional pair (u, u') of distinct vertices.
    """
    def __init__(self, vertex_count, arcs, uniformity=None, distinguished=None):
        arcs = tuple(tuple(arc) for arc in arcs)
        if uniformity is None:
            if not arcs:
                raise HypergraphException('the uniformity of a hypergraph without arcs must be given')
            uniformity = len(arcs[0])
        if uniformity < 1:
            raise HypergraphException(f'uniformity must be positive, got {uniformity}')

        for arc in arcs:
            if len(arc) != uniformity:
                raise HypergraphException(f'arc {arc} does not have {uniformity} vertices')
            if len(set(arc)) != len(arc):
                raise HypergraphException(f'arc {arc} repeats a vertex')
            if any(not 0 <= vertex < vertex_count for vertex in arc):
                raise HypergraphException(f'arc {arc} out of range for {vertex_count} vertices')

        if distinguished is not None:
            distinguished = tuple(distinguished)
            if len(distinguished) != 2 or distinguished[0] == distinguished[1]:
                raise HypergraphException(f'distinguished vertices must be two distinct vertices, got {distinguished}')
            if any(not 0 <= vertex < vertex_count for vertex in distinguished):
                raise HypergraphException(f'distinguished vertices {distinguished} out of range')

        self._vertex_count = vertex_count
        self._arcs = arcs
        self._uniformity = uniformity
        self._distinguished = distinguished

    def __eq__(self, other):
        if not isinstance(other, OrientedHypergraph):
            return NotImplemented

        return (self._vertex_count, self._arcs, self._uniformity, self._distinguished) == (
            other._vertex_count, other._arcs, other._uniformity, other._distinguished
        )

    def __hash__(self):
        return hash((self._vertex_count, self._arcs, self._uniformity, self._distinguished))

    def __repr__(self):
        return f'OrientedHypergraph({self._vertex_count}, {list(self._arcs)}, {self._uniformity}, {self._distinguished})'

    @property
    def vertex_count(self):
        return self._vertex_count

    @property
    def arcs(self):
        return self._arcs

    @property
    def uniformity(self):
        return self._uniformity

    @property
    def distinguished(self):
        return self._distinguished

    def with_arc(self, arc):
        return OrientedHypergraph(self._vertex_count, self._arcs + (tuple(arc),), self._uniformity, self._distinguished)

    def covered_vertices(self):
        return {vertex for arc in self._arcs for vertex in arc}


class PatternSet:
    """
    A set of (q, l)-patterns: l-tuples over the colors 1, ..., q.
    """
    def __init__(self, color_count, length, members):
        members = frozenset(tuple(pattern) for pattern in members)
        for pattern in members:
            if len(pattern) != length or any(not 1 <= color <= color_count for color in pattern):
                raise HypergraphException(f'{pattern} is not a ({color_count}, {length})-pattern')

        self._color_count = color_count
        self._length = length
        self._members = members

    def __contains__(self, pattern):
        return tuple(pattern) in self._members

    def __len__(self):
        return len(self._members)

    def __eq__(self, other):
        if not isinstance(other, PatternSet):
            return NotImplemented

        return (self._color_count, self._length, self._members) == (other._color_count, other._length, other._members)

    def __hash__(self):
        return hash((self._color_count, self._length, self._members))

    @property
    def color_count(self):
        return self._color_count

    @property
    def length(self):
        return self._length

    @property
    def members(self):
        return self._members

    @staticmethod
    def everything(color_count, length):
        return PatternSet(color_count, length, itertools.product(range(1, color_count + 1), repeat=length))

    @staticmethod
    def monochromatic(color_count, length):
        return PatternSet(color_count, length, ((color,) * length for color in range(1, color_count + 1)))

    @staticmethod
    def with_fewer_colors(color_count, length):
        """
        All patterns using fewer than `color_count` distinct colors.
        """
        return PatternSet(
            color_count,
            length,
            (
                pattern
                for pattern in itertools.product(range(1, color_count + 1), repeat=length)
                if len(set(pattern)) < color_count
            ),
        )

    def contains_monochromatic(self):
        return PatternSet.monochromatic(self._color_count, self._length).members <= self._members

    def is_everything(self):
        return len(self._members) == self._color_count ** self._length

    def to_document(self):
        return {
            'colors': self._color_count,
            'length': self._length,
            'patterns': [list(pattern) for pattern in sorted(self._members)],
        }


class GirthResult:
    """
    A girth value; when `exact` is false, `value` is only a lower bound (no circuit on fewer arcs).
    """
    def __init__(self, value, exact):
        self._value = value
        self._exact = exact

    def __repr__(self):
        return f'GirthResult({self._value}, exact={self._exact})'

    @property
    def value(self):
        return self._value

    @property
    def exact(self):
        return self._exact

    def exceeds(self, bound):
        return self._value > bound

    def to_document(self):
        return {
            'value': None if self._value == math.inf else self._value,
            'infinite': self._value == math.inf,
            'exact': self._exact,
        }


def hypergraph_girth(hypergraph, subset_cap=GIRTH_SUBSET_CAP):
    """
    Least h ≥ 2 such that some h arcs cover at most (l-1)h vertices (orientation ignored).

    Arc subsets are examined up to `subset_cap` arcs; beyond that the answer is a lower bound.
    """
    uniformity = hypergraph.uniformity
    if uniformity < 2:
        raise HypergraphException(f'girth needs uniformity at least 2, got {uniformity}')

    vertex_sets = [frozenset(arc) for arc in hypergraph.arcs]
    largest_size = min(subset_cap, len(vertex_sets))
    for size in range(2, largest_size + 1):
        for subset in itertools.combinations(vertex_sets, size):
            if len(frozenset().union(*subset)) <= (uniformity - 1) * size:
                return GirthResult(size, exact=True)

    if largest_size < len(vertex_sets):
        warnings.warn(f'girth search capped at {subset_cap} arcs; the girth is only known to exceed {subset_cap}')
        return GirthResult(subset_cap + 1, exact=False)

    return GirthResult(math.inf, exact=True)


def _require_matching_patterns(hypergraph, patterns, color_count):
    if hypergraph.uniformity != patterns.length:
        raise HypergraphException(
            f'hypergraph uniformity {hypergraph.uniformity} does not match pattern length {patterns.length}'
        )
    if color_count is not None and color_count != patterns.color_count:
        raise HypergraphException(f'pattern set is over {patterns.color_count} colors, not {color_count}')


def iterate_phi_avoiding_colorings(hypergraph, patterns, color_count=None):
    """
    Yield every vertex coloring (a tuple, vertex v colored `coloring[v]`) in which no arc realises
    a forbidden pattern, in lexicographic order.

    Each arc is checked once its largest vertex is colored.
    """
    _require_matching_patterns(hypergraph, patterns, color_count)
    color_count = patterns.color_count
    vertex_count = hypergraph.vertex_count

    arcs_from_last_vertex = [[] for _ in range(vertex_count)]
    for arc in hypergraph.arcs:
        arcs_from_last_vertex[max(arc)].append(arc)

    coloring = [0] * vertex_count

    def extend(vertex):
        if vertex == vertex_count:
            yield tuple(coloring)
            return

        for color in range(1, color_count + 1):
            coloring[vertex] = color
            if any(tuple(coloring[member] for member in arc) in patterns for arc in arcs_from_last_vertex[vertex]):
                continue
            yield from extend(vertex + 1)
        coloring[vertex] = 0

    yield from extend(0)


def phi_avoiding_coloring(hypergraph, patterns, color_count=None):
    return next(iterate_phi_avoiding_colorings(hypergraph, patterns, color_count), None)


class HypergraphReport:
    """
    The three existence properties of a hypergraph for a pattern set, plus its girth bound:
    (1) a pattern-avoiding coloring exists;
    (2) no arc contains both distinguished vertices;
    (3) every pattern-avoiding coloring separates the distinguished vertices.
    """
    def __init__(self, has_avoiding_coloring, no_arc_with_both, distinguished_separated, girth, girth_bound):
        self._has_avoiding_coloring = has_avoiding_coloring
        self._no_arc_with_both = no_arc_with_both
        self._distinguished_separated = distinguished_separated
        self._girth = girth
        self._girth_bound = girth_bound

    @property
    def has_avoiding_coloring(self):
        return self._has_avoiding_coloring

    @property
    def no_arc_with_both(self):
        return self._no_arc_with_both

    @property
    def distinguished_separated(self):
        return self._distinguished_separated

    @property
    def girth(self):
        return self._girth

    @property
    def girth_ok(self):
        return self._girth.exceeds(self._girth_bound)

    @property
    def all_hold(self):
        return (
            self._has_avoiding_coloring
            and self._no_arc_with_both
            and self._distinguished_separated
            and self.girth_ok
        )

    def to_document(self):
        return {
            'has_avoiding_coloring': self._has_avoiding_coloring,
            'no_arc_with_both': self._no_arc_with_both,
            'distinguished_separated': self._distinguished_separated,
            'girth': self._girth.to_document(),
            'girth_bound': self._girth_bound,
            'girth_ok': self.girth_ok,
        }


def verify_hypergraph_properties(hypergraph, patterns, girth_bound=DEFAULT_GIRTH_BOUND):
    """
    Check the existence properties by full enumeration of pattern-avoiding colorings,
    and that the girth exceeds `girth_bound`.
    """
    if hypergraph.distinguished is None:
        raise HypergraphException('the hypergraph has no distinguished vertices')

    u, u_prime = hypergraph.distinguished
    has_avoiding_coloring = False
    distinguished_separated = True
    for coloring in iterate_phi_avoiding_colorings(hypergraph, patterns):
        has_avoiding_coloring = True
        if coloring[u] == coloring[u_prime]:
            distinguished_separated = False
            break

    no_arc_with_both = not any(u in arc and u_prime in arc for arc in hypergraph.arcs)
    with warnings.catch_warnings():
        warnings.simplefilter('ignore')
        girth = hypergraph_girth(hypergraph, subset_cap=girth_bound)

    return HypergraphReport(has_avoiding_coloring, no_arc_with_both, distinguished_separated, girth, girth_bound)


def toy_hypergraph_search(
    patterns,
    girth_bound=DEFAULT_GIRTH_BOUND,
    max_vertices=5,
    max_arcs=4,
    budget=DEFAULT_SEARCH_BUDGET,
):
    """
    Exhaustively look for a small oriented hypergraph with all three existence properties
    and girth above `girth_bound`, distinguished vertices u = 0 and u' = 1.

    Candidates are tried by increasing vertex count, then arc count, then lexicographically;
    every vertex must lie on some arc. Returns the first hit, or None when the caps
    or the candidate budget run out (the latter with a warning).
    """
    if not patterns.contains_monochromatic():
        raise HypergraphException('the forbidden patterns must include every monochromatic pattern')
    if patterns.is_everything():
        return None

    uniformity = patterns.length
    examined_count = 0
    for vertex_count in range(max(uniformity, 2), max_vertices + 1):
        candidate_arcs = [
            arc
            for arc in itertools.permutations(range(vertex_count), uniformity)
            if not (0 in arc and 1 in arc)
        ]
        for arc_count in range(1, max_arcs + 1):
            for arcs in itertools.combinations(candidate_arcs, arc_count):
                covered = {vertex for arc in arcs for vertex in arc}
                if len(covered) != vertex_count:
                    continue

                examined_count += 1
                if examined_count > budget:
                    warnings.warn(f'toy hypergraph search stopped after its budget of {budget} candidates')
                    return None

                hypergraph = OrientedHypergraph(vertex_count, arcs, uniformity, distinguished=(0, 1))
                if verify_hypergraph_properties(hypergraph, patterns, girth_bound).all_hold:
                    return hypergraph

    return None


def parse_hypergraph(string):
    """
    Parse the hypergraph file format: header `n l`, one arc per line, optional `distinguished u u'`.
    """
    header = None
    arcs = []
    distinguished = None
    for line_number, line in enumerate(string.splitlines(), start=1):
        line = line.strip()
        if line == '' or line.startswith('#'):
            continue

        fields = line.split()
        if fields[0] == 'distinguished':
            if len(fields) != 3 or not all(re.fullmatch(pattern='[0-9]+', string=field) for field in fields[1:]):
                raise HypergraphException(f'line {line_number}: expected `distinguished u u\'`, got `{line}`')
            distinguished = (int(fields[1]), int(fields[2]))
            continue

        if not all(re.fullmatch(pattern='[0-9]+', string=field) for field in fields):
            raise HypergraphException(f'line {line_number}: expected nonnegative integers, got `{line}`')
        numbers = [int(field) for field in fields]

        if header is None:
            if len(numbers) != 2:
                raise HypergraphException(f'line {line_number}: expected a header `n l`, got `{line}`')
            header = numbers
            continue
        if len(numbers) != header[1]:
            raise HypergraphException(f'line {line_number}: expected an arc of {header[1]} vertices, got `{line}`')
        arcs.append(tuple(numbers))

    if header is None:
        raise HypergraphException('missing header `n l`')

    vertex_count, uniformity = header
    try:
        return OrientedHypergraph(vertex_count, arcs, uniformity, distinguished)
    except HypergraphException as hypergraph_exception:
        raise HypergraphException(f'invalid hypergraph: {hypergraph_exception}') from hypergraph_exception


def write_hypergraph(hypergraph):
    lines = [f'{hypergraph.vertex_count} {hypergraph.uniformity}']
    lines.extend(' '.join(str(vertex) for vertex in arc) for arc in hypergraph.arcs)
    if hypergraph.distinguished is not None:
        u, u_prime = hypergraph.distinguished
        lines.append(f'distinguished {u} {u_prime}')

    return '\n'.join(lines) + '\n'
