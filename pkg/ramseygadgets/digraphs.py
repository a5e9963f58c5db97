"""
# Ramsey Gadgets: digraphs.py

Licensed under "MIT No Attribution" (MIT-0), see LICENSE.

Auxiliary color digraphs of a graph with two distinguished edges.
"""

from ramseygadgets.colorings import Coloring, extend, iterate_free_colorings
from ramseygadgets.constants import DETERMINER_KIND, NEGATIVE_POLARITY, POSITIVE_POLARITY
from ramseygadgets.exceptions import ColoringConflictException, GraphException
from ramseygadgets.utilities import map_in_order


class AuxDigraph:
    """
    A digraph on the colors 1, ..., q (loops allowed).

    For a graph G with distinguished edges g1 and g2, the arc (i, j) is present
    iff some T-free coloring of G gives g1 color i and g2 color j.
    """
    def __init__(self, color_count, arcs):
        arcs = frozenset((i, j) for i, j in arcs)
        for i, j in arcs:
            if not (1 <= i <= color_count and 1 <= j <= color_count):
                raise GraphException(f'arc ({i}, {j}) lies outside the palette 1..{color_count}')

        self._color_count = color_count
        self._arcs = arcs

    def __eq__(self, other):
        if not isinstance(other, AuxDigraph):
            return NotImplemented

        return self._color_count == other._color_count and self._arcs == other._arcs

    def __hash__(self):
        return hash((self._color_count, self._arcs))

    def __repr__(self):
        return f'AuxDigraph({self._color_count}, {sorted(self._arcs)})'

    @property
    def color_count(self):
        return self._color_count

    @property
    def arcs(self):
        return self._arcs

    @property
    def colors(self):
        return range(1, self._color_count + 1)

    def has_arc(self, i, j):
        return (i, j) in self._arcs

    def out_neighbourhood(self, i):
        return frozenset(j for source, j in self._arcs if source == i)

    def in_neighbourhood(self, j):
        return frozenset(i for i, target in self._arcs if target == j)

    def second_out_neighbourhood(self, i):
        return frozenset(
            second
            for middle in self.out_neighbourhood(i)
            for second in self.out_neighbourhood(middle)
        )

    def loops(self):
        return frozenset(i for i, j in self._arcs if i == j)

    def to_lines(self):
        return [f'{i} -> {j}' for i, j in sorted(self._arcs)]

    @staticmethod
    def from_lines(color_count, lines):
        arcs = []
        for line in lines:
            source, _, target = line.partition('->')
            arcs.append((int(source), int(target)))

        return AuxDigraph(color_count, arcs)


class DigraphReport:
    """
    Summary of an auxiliary digraph.

    A 2-cycle is a pair of arcs (i, j), (j, i) with i ≠ j; loops do not count.
    """
    def __init__(self, digraph):
        colors = list(digraph.colors)
        self._out_neighbourhoods = {i: digraph.out_neighbourhood(i) for i in colors}
        self._in_neighbourhoods = {i: digraph.in_neighbourhood(i) for i in colors}
        self._empty_out = frozenset(i for i in colors if not self._out_neighbourhoods[i])
        self._empty_in = frozenset(i for i in colors if not self._in_neighbourhoods[i])
        self._has_two_cycle = any(i != j and digraph.has_arc(j, i) for i, j in digraph.arcs)
        self._symmetric = all(digraph.has_arc(j, i) for i, j in digraph.arcs)
        self._loops = digraph.loops()

    @property
    def empty_out(self):
        return self._empty_out

    @property
    def empty_in(self):
        return self._empty_in

    @property
    def has_two_cycle(self):
        return self._has_two_cycle

    @property
    def symmetric(self):
        return self._symmetric

    @property
    def loops(self):
        return self._loops

    @property
    def out_neighbourhoods(self):
        return self._out_neighbourhoods

    @property
    def in_neighbourhoods(self):
        return self._in_neighbourhoods

    def to_document(self):
        return {
            'empty_out': sorted(self._empty_out),
            'empty_in': sorted(self._empty_in),
            'has_two_cycle': self._has_two_cycle,
            'symmetric': self._symmetric,
            'loops': sorted(self._loops),
            'out_neighbourhoods': {str(i): sorted(members) for i, members in self._out_neighbourhoods.items()},
            'in_neighbourhoods': {str(i): sorted(members) for i, members in self._in_neighbourhoods.items()},
        }


class DeterminerHint:
    """
    A determiner read off an auxiliary digraph: one signal edge never takes `excluded_color`.

    `signal` is 'first' (edge g1) or 'second' (edge g2); `colors` are the colors that edge does take.
    """
    def __init__(self, signal, excluded_color, colors):
        self._signal = signal
        self._excluded_color = excluded_color
        self._colors = frozenset(colors)

    @property
    def signal(self):
        return self._signal

    @property
    def excluded_color(self):
        return self._excluded_color

    @property
    def colors(self):
        return self._colors


def _require_distinct_edges(graph, g1, g2):
    g1 = graph.require_edge(g1)
    g2 = graph.require_edge(g2)
    if g1 == g2:
        raise GraphException(f'the distinguished edges must be distinct, got {g1} twice')

    return g1, g2


def _arc_witness_task(task):
    graph, clique_tuple, g1, g2, i, j = task
    try:
        return extend(graph, clique_tuple, Coloring({g1: i, g2: j}))
    except ColoringConflictException:
        return None


def aux_digraph_with_witnesses(graph, clique_tuple, g1, g2, jobs=1):
    """
    Compute the auxiliary digraph by q² extension queries, keeping the witness of every arc.

    Returns (digraph, witness_from_arc), each witness the lexicographically least one.
    """
    g1, g2 = _require_distinct_edges(graph, g1, g2)
    pairs = [(i, j) for i in clique_tuple.colors for j in clique_tuple.colors]
    tasks = [(graph, clique_tuple, g1, g2, i, j) for i, j in pairs]

    witness_from_arc = {}
    for pair, witness in zip(pairs, map_in_order(_arc_witness_task, tasks, jobs)):
        if witness is not None:
            witness_from_arc[pair] = witness

    return AuxDigraph(clique_tuple.color_count, witness_from_arc), witness_from_arc


def aux_digraph(graph, clique_tuple, g1, g2, jobs=1):
    digraph, _ = aux_digraph_with_witnesses(graph, clique_tuple, g1, g2, jobs)
    return digraph


def aux_digraph_by_enumeration(graph, clique_tuple, g1, g2):
    """
    Compute the auxiliary digraph from one sweep over all T-free colorings.
    """
    g1, g2 = _require_distinct_edges(graph, g1, g2)
    arcs = {(coloring.color_of(g1), coloring.color_of(g2)) for coloring in iterate_free_colorings(graph, clique_tuple)}
    return AuxDigraph(clique_tuple.color_count, arcs)


def analyze(digraph):
    return DigraphReport(digraph)


def expected_shape_check(digraph, spec):
    """
    Decide whether a digraph has exactly the shape a gadget spec demands.

    negative X-sender: every arc (i, j) with i ≠ j in X, nothing else;
    positive X-sender: exactly the loops on X;
    X-determiner: the colors with nonempty out-neighbourhood are exactly X.
    """
    colors = set(spec.colors)
    if spec.kind == DETERMINER_KIND:
        return {i for i in digraph.colors if digraph.out_neighbourhood(i)} == colors
    if spec.polarity == NEGATIVE_POLARITY:
        return digraph.arcs == {(i, j) for i in colors for j in colors if i != j}
    if spec.polarity == POSITIVE_POLARITY:
        return digraph.arcs == {(i, i) for i in colors}

    return False


def basic_conditions(digraph):
    """
    Look for a color with empty out- or in-neighbourhood.

    If N⁺(i) is empty, g1 never takes color i, so the graph is a determiner on g1
    for the colors with nonempty out-neighbourhood; likewise for N⁻(i) and g2.
    Returns the first such DeterminerHint (out-neighbourhoods checked before in-neighbourhoods),
    or None when there is none or the digraph has no arcs at all.
    """
    if not digraph.arcs:
        return None

    report = DigraphReport(digraph)
    for i in digraph.colors:
        if i in report.empty_out:
            return DeterminerHint('first', i, (c for c in digraph.colors if c not in report.empty_out))
        if i in report.empty_in:
            return DeterminerHint('second', i, (c for c in digraph.colors if c not in report.empty_in))

    return None


def is_complement_pair(digraph, complement_digraph):
    """
    Check that N_{D^c}(i) = [q] ∖ N_D(i) at every color i where N⁺_D(i) = N⁻_D(i).
    """
    if digraph.color_count != complement_digraph.color_count:
        return False

    palette = frozenset(digraph.colors)
    for i in digraph.colors:
        neighbourhood = digraph.out_neighbourhood(i)
        if neighbourhood != digraph.in_neighbourhood(i):
            continue
        complement_neighbourhood = complement_digraph.out_neighbourhood(i)
        if complement_neighbourhood != complement_digraph.in_neighbourhood(i):
            return False
        if complement_neighbourhood != palette - neighbourhood:
            return False

    return True
