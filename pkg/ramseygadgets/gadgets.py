"""
# Ramsey Gadgets: gadgets.py

Licensed under "MIT No Attribution" (MIT-0), see LICENSE.

Set-determiner and set-sender verification, safeness, and certificates.
"""

import itertools

from ramseygadgets.colorings import Coloring, extend, is_free
from ramseygadgets.constants import (
    DETERMINER_KIND,
    DETERMINER_SAFENESS_LEMMA,
    NEGATIVE_POLARITY,
    NO_EXTENSION_VERDICT,
    POSITIVE_POLARITY,
    SAFE_STATUS,
    SENDER_KIND,
    SENDER_SAFE_DISTANCE,
    SENDER_SAFENESS_LEMMA,
    UNKNOWN_STATUS,
)
from ramseygadgets.digraphs import aux_digraph_with_witnesses
from ramseygadgets.exceptions import ColoringConflictException, GadgetException, GraphException
from ramseygadgets.formats import write_graph6
from ramseygadgets.graphs import cliques_of_size, edge_distance
from ramseygadgets.utilities import map_in_order, normalise_edge


class GadgetSpec:
    """
    What a gadget is claimed to be: an X-determiner with one signal edge,
    or a positive or negative X-sender with two signal edges.
    """
    def __init__(self, kind, colors, signal_edges, polarity=None):
        colors = frozenset(colors)
        signal_edges = tuple(normalise_edge(*edge) for edge in signal_edges)

        if len(colors) == 0:
            raise GadgetException('the color set X must be non-empty')
        if any(not isinstance(color, int) or color < 1 for color in colors):
            raise GadgetException(f'colors must be positive integers, got {sorted(colors)}')

        if kind == DETERMINER_KIND:
            if len(signal_edges) != 1:
                raise GadgetException(f'a determiner has exactly one signal edge, got {len(signal_edges)}')
            if polarity is not None:
                raise GadgetException('a determiner has no polarity')
        elif kind == SENDER_KIND:
            if len(signal_edges) != 2:
                raise GadgetException(f'a sender has exactly two signal edges, got {len(signal_edges)}')
            if signal_edges[0] == signal_edges[1]:
                raise GadgetException(f'the signal edges of a sender must be distinct, got {signal_edges[0]} twice')
            if polarity not in (POSITIVE_POLARITY, NEGATIVE_POLARITY):
                raise GadgetException(f'sender polarity must be `positive` or `negative`, got {polarity}')
            if polarity == NEGATIVE_POLARITY and len(colors) < 2:
                raise GadgetException('a negative sender needs at least two colors')
        else:
            raise GadgetException(f'gadget kind must be `determiner` or `sender`, got {kind}')

        self._kind = kind
        self._colors = colors
        self._signal_edges = signal_edges
        self._polarity = polarity

    def __eq__(self, other):
        if not isinstance(other, GadgetSpec):
            return NotImplemented

        return (self._kind, self._colors, self._signal_edges, self._polarity) == (
            other._kind, other._colors, other._signal_edges, other._polarity
        )

    def __hash__(self):
        return hash((self._kind, self._colors, self._signal_edges, self._polarity))

    def __repr__(self):
        return f'GadgetSpec({self._kind}, {sorted(self._colors)}, {list(self._signal_edges)}, {self._polarity})'

    @property
    def kind(self):
        return self._kind

    @property
    def colors(self):
        return self._colors

    @property
    def signal_edges(self):
        return self._signal_edges

    @property
    def polarity(self):
        return self._polarity

    def require_palette(self, clique_tuple):
        if not self._colors <= set(clique_tuple.colors):
            raise GadgetException(f'colors {sorted(self._colors)} are not all in the palette of ({clique_tuple})')

    def allowed_signal_colors(self):
        """
        The signal colors (determiner) or signal color pairs (sender) this gadget shape allows.
        """
        if self._kind == DETERMINER_KIND:
            return {(color,) for color in self._colors}
        if self._polarity == NEGATIVE_POLARITY:
            return {(i, j) for i in self._colors for j in self._colors if i != j}

        return {(i, i) for i in self._colors}

    def to_document(self):
        return {
            'kind': self._kind,
            'colors': sorted(self._colors),
            'polarity': self._polarity,
            'signal_edges': [list(edge) for edge in self._signal_edges],
        }


class GadgetCertificate:
    """
    Evidence that a graph satisfies a gadget spec for a clique tuple.

    `witness_from_signal_colors` maps each allowed signal color tuple to a T-free coloring realising it;
    `exclusions` lists every other signal color tuple, each refuted by the extension oracle;
    `safeness` is 'safe' or 'unknown', with the lemma invoked.
    """
    def __init__(self, spec, clique_tuple, graph, witness_from_signal_colors, exclusions, safeness, lemma):
        self._spec = spec
        self._clique_tuple = clique_tuple
        self._graph = graph
        self._witness_from_signal_colors = dict(witness_from_signal_colors)
        self._exclusions = tuple(sorted(exclusions))
        self._safeness = safeness
        self._lemma = lemma

    @property
    def spec(self):
        return self._spec

    @property
    def clique_tuple(self):
        return self._clique_tuple

    @property
    def graph(self):
        return self._graph

    @property
    def witness_from_signal_colors(self):
        return self._witness_from_signal_colors

    @property
    def exclusions(self):
        return self._exclusions

    @property
    def safeness(self):
        return self._safeness

    @property
    def lemma(self):
        return self._lemma

    def to_document(self):
        return {
            'certificate': self._spec.to_document(),
            'tuple': str(self._clique_tuple),
            'graph6': write_graph6(self._graph),
            'witnesses': [
                {'signal_colors': list(signal_colors), 'coloring': witness.to_lines()}
                for signal_colors, witness in sorted(self._witness_from_signal_colors.items())
            ],
            'exclusions': [
                {'signal_colors': list(signal_colors), 'verdict': NO_EXTENSION_VERDICT}
                for signal_colors in self._exclusions
            ],
            'safeness': {'status': self._safeness, 'lemma': self._lemma},
        }


class GadgetRefusal:
    """
    Why a graph fails a gadget spec: the first violated axiom with the offending colors and, if any, a witness.
    """
    def __init__(self, spec, axiom, message, offending_colors, witness=None):
        self._spec = spec
        self._axiom = axiom
        self._message = message
        self._offending_colors = offending_colors
        self._witness = witness

    @property
    def spec(self):
        return self._spec

    @property
    def axiom(self):
        return self._axiom

    @property
    def message(self):
        return self._message

    @property
    def offending_colors(self):
        return self._offending_colors

    @property
    def witness(self):
        return self._witness

    def to_document(self):
        return {
            'refusal': self._spec.to_document(),
            'axiom': self._axiom,
            'message': self._message,
            'offending_colors': None if self._offending_colors is None else list(self._offending_colors),
            'witness': None if self._witness is None else self._witness.to_lines(),
        }


def _signal_witness_task(task):
    graph, clique_tuple, color_from_edge = task
    try:
        return extend(graph, clique_tuple, Coloring(color_from_edge))
    except ColoringConflictException:
        return None


def achievable_colors_with_witnesses(graph, clique_tuple, e, jobs=1):
    e = graph.require_edge(e)
    tasks = [(graph, clique_tuple, {e: color}) for color in clique_tuple.colors]
    return {
        color: witness
        for color, witness in zip(clique_tuple.colors, map_in_order(_signal_witness_task, tasks, jobs))
        if witness is not None
    }


def achievable_colors(graph, clique_tuple, e, jobs=1):
    """
    The colors the edge e takes in some T-free coloring of the graph.
    """
    return frozenset(achievable_colors_with_witnesses(graph, clique_tuple, e, jobs))


def _safeness_of(graph, spec):
    if spec.kind == DETERMINER_KIND:
        return SAFE_STATUS, DETERMINER_SAFENESS_LEMMA
    if edge_distance(graph, *spec.signal_edges) >= SENDER_SAFE_DISTANCE:
        return SAFE_STATUS, SENDER_SAFENESS_LEMMA

    return UNKNOWN_STATUS, SENDER_SAFENESS_LEMMA


def verify_determiner(graph, clique_tuple, e, colors, jobs=1):
    """
    Verify that e is the signal edge of an X-determiner.

    Axioms, checked in order:
    (R1) the graph has a T-free coloring;
    (R2) no T-free coloring gives e a color outside X;
    (R3) every color of X is taken by e in some T-free coloring.
    Returns a GadgetCertificate, or a GadgetRefusal naming the first violated axiom.
    """
    clique_tuple.require_gadget_orders()
    e = graph.require_edge(e)
    spec = GadgetSpec(DETERMINER_KIND, colors, [e])
    spec.require_palette(clique_tuple)

    witness_from_color = achievable_colors_with_witnesses(graph, clique_tuple, e, jobs)
    if not witness_from_color:
        return GadgetRefusal(spec, 'R1', 'the graph has no T-free coloring at all', None)
    for color in sorted(witness_from_color):
        if color not in spec.colors:
            return GadgetRefusal(
                spec, 'R2', f'color {color} is achievable on the signal edge but not in X',
                (color,), witness_from_color[color],
            )
    for color in sorted(spec.colors):
        if color not in witness_from_color:
            return GadgetRefusal(spec, 'R3', f'color {color} of X is not achievable on the signal edge', (color,))

    safeness, lemma = _safeness_of(graph, spec)
    return GadgetCertificate(
        spec,
        clique_tuple,
        graph,
        {(color,): witness for color, witness in witness_from_color.items()},
        [(color,) for color in clique_tuple.colors if color not in spec.colors],
        safeness,
        lemma,
    )


def verify_sender(graph, clique_tuple, e, f, colors, polarity, jobs=1):
    """
    Verify that (e, f) are the signal edges of a positive or negative X-sender.

    Axioms, checked in order:
    (S1) the graph has a T-free coloring;
    (S2) every T-free coloring gives (e, f) an allowed pair
         (distinct colors of X when negative, equal colors of X when positive);
    (S3) every allowed pair is realised.
    """
    clique_tuple.require_gadget_orders()
    e = graph.require_edge(e)
    f = graph.require_edge(f)
    if e == f:
        raise GraphException(f'the signal edges must be distinct, got {e} twice')
    spec = GadgetSpec(SENDER_KIND, colors, [e, f], polarity)
    spec.require_palette(clique_tuple)

    digraph, witness_from_arc = aux_digraph_with_witnesses(graph, clique_tuple, e, f, jobs)
    allowed_pairs = spec.allowed_signal_colors()

    if not digraph.arcs:
        return GadgetRefusal(spec, 'S1', 'the graph has no T-free coloring at all', None)
    for pair in sorted(digraph.arcs):
        if pair not in allowed_pairs:
            return GadgetRefusal(
                spec, 'S2', f'the signal edges can take colors {pair}, which X and the polarity forbid',
                pair, witness_from_arc[pair],
            )
    for pair in sorted(allowed_pairs):
        if pair not in digraph.arcs:
            return GadgetRefusal(spec, 'S3', f'the allowed colors {pair} are not realised on the signal edges', pair)

    safeness, lemma = _safeness_of(graph, spec)
    return GadgetCertificate(
        spec,
        clique_tuple,
        graph,
        witness_from_arc,
        [pair for pair in itertools.product(clique_tuple.colors, repeat=2) if pair not in allowed_pairs],
        safeness,
        lemma,
    )


def verify_spec(graph, clique_tuple, spec, jobs=1):
    if spec.kind == DETERMINER_KIND:
        return verify_determiner(graph, clique_tuple, spec.signal_edges[0], spec.colors, jobs)

    return verify_sender(graph, clique_tuple, *spec.signal_edges, spec.colors, spec.polarity, jobs)


def structural_safeness(graph, clique_tuple, spec, certificate=None, jobs=1):
    """
    Return (status, lemma) for a verified spec.

    Determiners are always safe; senders are safe when their signal edges are at distance at least 3,
    otherwise 'unknown' (never guessed).
    Without a certificate the spec is verified first, and a refusal raises.
    """
    if certificate is None:
        certificate = verify_spec(graph, clique_tuple, spec, jobs)
        if isinstance(certificate, GadgetRefusal):
            raise GadgetException(f'structural safeness needs a verified spec, but axiom {certificate.axiom} fails')
    if (
        not isinstance(certificate, GadgetCertificate)
        or certificate.spec != spec
        or certificate.graph != graph
        or certificate.clique_tuple != clique_tuple
    ):
        raise GadgetException('structural safeness needs a certificate for this very graph, tuple, and spec')

    return _safeness_of(graph, spec)


def confirm_clique_confinement(graph, surgery_map):
    """
    Check that every clique on at least 3 vertices of a surgery product lies in one side.

    A clique lies in a side when all of its vertices and all of its edges are images from that side.
    Returns the first offending clique, or None.
    """
    sides = surgery_map.sides()
    size = 3
    while True:
        found_any = False
        for clique in cliques_of_size(graph, size):
            found_any = True
            clique_vertices = set(clique)
            clique_edges = set(itertools.combinations(clique, 2))
            if not any(
                clique_vertices <= side_vertices and clique_edges <= side_edges
                for side_vertices, side_edges in sides
            ):
                return clique
        if not found_any:
            return None
        size += 1


def revalidate_certificate(certificate):
    """
    Replay a certificate: every witness must be T-free with the right signal colors,
    and every exclusion must be refuted again by the extension oracle.
    """
    graph = certificate.graph
    clique_tuple = certificate.clique_tuple
    signal_edges = certificate.spec.signal_edges

    if set(certificate.witness_from_signal_colors) != certificate.spec.allowed_signal_colors():
        return False
    for signal_colors, witness in certificate.witness_from_signal_colors.items():
        if not witness.is_total_on(graph) or not is_free(graph, witness, clique_tuple):
            return False
        if tuple(witness.color_of(edge) for edge in signal_edges) != signal_colors:
            return False

    for signal_colors in certificate.exclusions:
        task = (graph, clique_tuple, dict(zip(signal_edges, signal_colors)))
        if _signal_witness_task(task) is not None:
            return False

    return True


def sender_as_determiner(certificate, which=0, jobs=1):
    """
    Re-verify an X-sender with X a proper subset of the palette as an X-determiner on one signal edge.
    """
    spec = certificate.spec
    if spec.kind != SENDER_KIND:
        raise GadgetException('only a sender certificate can be read as a determiner')
    if spec.colors == frozenset(certificate.clique_tuple.colors):
        raise GadgetException('a sender for the whole palette is not a determiner')

    return verify_determiner(
        certificate.graph, certificate.clique_tuple, spec.signal_edges[which], spec.colors, jobs
    )
