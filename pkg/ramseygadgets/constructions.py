"""
# Ramsey Gadgets: constructions.py

Licensed under "MIT No Attribution" (MIT-0), see LICENSE.

Gadget compositions by graph surgery, each recording a replayable provenance.

Labelling conventions: the host (or base path/clique) keeps its labels,
named vertices come next, and gadget copies are appended one after another
in canonical edge order, each copy's own vertices in increasing order.
"""

import itertools

from ramseygadgets.colorings import Coloring, arrows, extend, is_minimal, ramsey_number
from ramseygadgets.constants import (
    DETERMINER_KIND,
    FORBIDDEN_PATTERN_DEGREE_CAP,
    NEGATIVE_POLARITY,
    POSITIVE_POLARITY,
    RAMSEY_NUMBER_VERTEX_CAP,
    SENDER_KIND,
)
from ramseygadgets.exceptions import (
    ColoringConflictException,
    ConstructionException,
    GraphException,
    SearchCapException,
)
from ramseygadgets.formats import parse_graph6, write_graph6
from ramseygadgets.gadgets import GadgetCertificate
from ramseygadgets.graphs import Graph, clique_number, complete_graph, default_orientation, identify, path_graph
from ramseygadgets.hypergraphs import PatternSet, parse_hypergraph, write_hypergraph
from ramseygadgets.utilities import map_in_order, normalise_edge


class ComposedGadget:
    """
    A graph with named tracked edges and the provenance that rebuilds it.

    Tracked edges keep their insertion order;
    the first two are the signal edges e, f when the gadget is used as an operand.
    """
    def __init__(self, graph, tracked, provenance, surgery_maps=()):
        tracked = {name: normalise_edge(*edge) for name, edge in dict(tracked).items()}
        for name, edge in tracked.items():
            if not graph.has_edge(*edge):
                raise ConstructionException(f'tracked edge `{name}` = {edge} is not an edge of the graph')

        self._graph = graph
        self._tracked = tracked
        self._provenance = provenance
        self._surgery_maps = tuple(surgery_maps)

    @staticmethod
    def from_graph(graph, tracked=None):
        tracked = dict(tracked or {})
        provenance = {
            'construction': 'graph',
            'operands': [],
            'parameters': {
                'graph6': write_graph6(graph),
                'tracked': [[name, list(normalise_edge(*edge))] for name, edge in tracked.items()],
            },
        }
        return ComposedGadget(graph, tracked, provenance)

    @property
    def graph(self):
        return self._graph

    @property
    def tracked(self):
        return self._tracked

    @property
    def signal_names(self):
        return tuple(self._tracked)

    @property
    def signal_edges(self):
        return tuple(self._tracked.values())

    @property
    def provenance(self):
        return self._provenance

    @property
    def surgery_maps(self):
        return self._surgery_maps

    def edge(self, name):
        try:
            return self._tracked[name]
        except KeyError as key_error:
            raise ConstructionException(
                f'no tracked edge `{name}` (tracked: {", ".join(self._tracked) or "none"})'
            ) from key_error

    def signal_pair(self):
        if len(self._tracked) < 2:
            raise ConstructionException(f'a two-signal gadget needs two tracked edges, got {len(self._tracked)}')

        return self.signal_edges[0], self.signal_edges[1]

    def to_operand_document(self):
        return {
            'graph6': write_graph6(self._graph),
            'tracked': [[name, list(edge)] for name, edge in self._tracked.items()],
        }

    def to_document(self):
        return {
            'graph6': write_graph6(self._graph),
            'vertex_count': self._graph.vertex_count,
            'edge_count': self._graph.edge_count,
            'tracked': [[name, list(edge)] for name, edge in self._tracked.items()],
            'provenance': self._provenance,
        }


def _as_gadget(operand):
    """
    View a Graph, ComposedGadget or GadgetCertificate as a ComposedGadget.
    """
    if isinstance(operand, ComposedGadget):
        return operand
    if isinstance(operand, GadgetCertificate):
        names = ('e',) if operand.spec.kind == DETERMINER_KIND else ('e', 'f')
        return ComposedGadget.from_graph(operand.graph, dict(zip(names, operand.spec.signal_edges)))
    if isinstance(operand, Graph):
        return ComposedGadget.from_graph(operand)

    raise ConstructionException(f'cannot use {type(operand).__name__} as a construction operand')


def _as_graph(operand):
    return _as_gadget(operand).graph


def _parameter_edge(edge):
    return list(normalise_edge(*edge))


def _provenance(construction, operands, parameters):
    return {
        'construction': construction,
        'operands': [_as_gadget(operand).to_operand_document() for operand in operands],
        'parameters': parameters,
    }


def orient_at_shared_vertex(e, f):
    """
    For edges sharing exactly one vertex w, return (w, p, r) with e = wp and f = wr.
    """
    shared = set(e) & set(f)
    if len(shared) != 1:
        raise ConstructionException(f'edges {tuple(e)} and {tuple(f)} must share exactly one vertex')

    (w,) = shared
    p = e[0] if e[1] == w else e[1]
    r = f[0] if f[1] == w else f[1]
    return w, p, r


def _glue_copy(current, gadget_graph, pairs):
    """
    Append a copy of `gadget_graph`, identifying each (current-vertex, gadget-vertex) pair.
    """
    try:
        return identify(current, gadget_graph, pairs)
    except GraphException as graph_exception:
        raise ConstructionException(f'gadget copy cannot be glued: {graph_exception}') from graph_exception


def _join_adjacent(current, gadget, w_image, p_image, r_image):
    """
    Glue a copy of a gadget whose signal edges e = wp and f = wr share w,
    sending w, p, r to the given vertices of the current graph.
    """
    w, p, r = orient_at_shared_vertex(*gadget.signal_pair())
    combined, _ = _glue_copy(current, gadget.graph, [(w_image, w), (p_image, p), (r_image, r)])
    return combined


def attach(host, target, gadget, signal):
    """
    Identify the signal edge of a gadget with the target edge of the host (default orientation).
    """
    host_graph = _as_graph(host)
    gadget_graph = _as_graph(gadget)
    target = host_graph.require_edge(target)
    signal = gadget_graph.require_edge(signal)

    combined, surgery_map = identify(host_graph, gadget_graph, default_orientation(target, signal))
    provenance = _provenance(
        'attach', [host_graph, gadget_graph],
        {'target': _parameter_edge(target), 'signal': _parameter_edge(signal)},
    )
    return ComposedGadget(combined, {'e': surgery_map.left_edge(target)}, provenance, [surgery_map])


def join(host, a, b, gadget, e, f):
    """
    Join host edges a and b by a gadget with signal edges e and f.

    The endpoints are paired positionally: a[0] with e[0], a[1] with e[1], b[0] with f[0], b[1] with f[1].
    Coincident vertices collapse; a collapse forcing two adjacent vertices together is rejected.
    """
    host_graph = _as_graph(host)
    gadget_graph = _as_graph(gadget)
    host_graph.require_edge(a)
    host_graph.require_edge(b)
    gadget_graph.require_edge(e)
    gadget_graph.require_edge(f)
    if normalise_edge(*a) == normalise_edge(*b):
        raise ConstructionException(f'the host edges must be distinct, got {tuple(a)} twice')
    if normalise_edge(*e) == normalise_edge(*f):
        raise ConstructionException(f'the signal edges must be distinct, got {tuple(e)} twice')

    pairs = [(a[0], e[0]), (a[1], e[1]), (b[0], f[0]), (b[1], f[1])]
    combined, surgery_map = _glue_copy(host_graph, gadget_graph, pairs)
    provenance = _provenance(
        'join', [host_graph, gadget_graph],
        {'a': list(a), 'b': list(b), 'e': list(e), 'f': list(f)},
    )
    tracked = {'a': surgery_map.left_edge(a), 'b': surgery_map.left_edge(b)}
    return ComposedGadget(combined, tracked, provenance, [surgery_map])


def glue_on_path(g1, a1, b1, c1, g2, a2, b2, c2):
    """
    Identify the paths a1 b1 c1 of g1 and a2 b2 c2 of g2 vertex by vertex.

    Both paths must be induced: a_i c_i is not an edge of g_i.
    """
    g1 = _as_graph(g1)
    g2 = _as_graph(g2)
    for graph, a, b, c in ((g1, a1, b1, c1), (g2, a2, b2, c2)):
        if len({a, b, c}) != 3:
            raise ConstructionException(f'path vertices {a}, {b}, {c} must be distinct')
        graph.require_edge((a, b))
        graph.require_edge((b, c))
        if graph.has_edge(a, c):
            raise ConstructionException(f'the glued path {a} {b} {c} must not be closed by the edge ({a}, {c})')

    combined, surgery_map = identify(g1, g2, [(a1, a2), (b1, b2), (c1, c2)])
    provenance = _provenance(
        'glue_on_path', [g1, g2],
        {'first_path': [a1, b1, c1], 'second_path': [a2, b2, c2]},
    )
    tracked = {'ab': surgery_map.left_edge((a1, b1)), 'bc': surgery_map.left_edge((b1, c1))}
    return ComposedGadget(combined, tracked, provenance, [surgery_map])


def symmetric_double(s, e, f):
    """
    Glue two copies of s on a path abc: the first with e on ab and f on bc, the second reversed.

    e and f must share exactly one vertex, and their other endpoints must be non-adjacent.
    """
    graph = _as_graph(s)
    e = graph.require_edge(e)
    f = graph.require_edge(f)
    w, p, r = orient_at_shared_vertex(e, f)
    if graph.has_edge(p, r):
        raise ConstructionException(f'the signal edges {e} and {f} lie on a triangle')

    others = [vertex for vertex in range(graph.vertex_count) if vertex not in (w, p, r)]
    label_from_vertex = [0] * graph.vertex_count
    label_from_vertex[p] = 0
    label_from_vertex[w] = 1
    label_from_vertex[r] = 2
    for label, vertex in enumerate(others, start=3):
        label_from_vertex[vertex] = label
    first_copy = graph.relabelled(label_from_vertex)

    combined, surgery_map = identify(first_copy, graph, [(0, r), (1, w), (2, p)])
    provenance = _provenance('symmetric_double', [graph], {'e': list(e), 'f': list(f)})
    return ComposedGadget(combined, {'ab': (0, 1), 'bc': (1, 2)}, provenance, [surgery_map])


def claw(s, h=None, d=0, clique_tuple=None):
    """
    K_h on v_1, ..., v_h, plus x, y with the edge xy and the edges x v_1, ..., x v_{d+1},
    where each x v_i (i ≤ d) is joined to xy by a copy of s.

    Vertices: v_1..v_h are 0..h-1, x = h, y = h+1. Tracked: xy and xz with z = v_{d+1}.
    The signal edges of s must share a vertex, which goes to x.
    `h` defaults to r(T) - 1 for the given clique tuple.
    """
    gadget = _as_gadget(s)
    if h is None:
        if clique_tuple is None:
            raise ConstructionException('claw needs either h or a clique tuple to compute r(T) - 1')
        ramsey_vertex_count = ramsey_number(clique_tuple)
        if ramsey_vertex_count is None:
            raise SearchCapException(f'r({clique_tuple}) is beyond the Ramsey number cap', RAMSEY_NUMBER_VERTEX_CAP)
        h = ramsey_vertex_count - 1
    if d < 0:
        raise ConstructionException(f'd must be nonnegative, got {d}')
    if h <= d:
        raise ConstructionException(f'claw needs h > d, got h = {h} and d = {d}')

    x = h
    y = h + 1
    base_edges = list(complete_graph(h).edges) + [(x, y)] + [(x, vertex) for vertex in range(d + 1)]
    current = Graph(h + 2, base_edges)
    for vertex in range(d):
        current = _join_adjacent(current, gadget, x, y, vertex)

    provenance = _provenance('claw', [gadget], {'h': h, 'd': d})
    return ComposedGadget(current, {'xy': (x, y), 'xz': (x, d)}, provenance)


def _chain_endpoints(gadget, names):
    return [gadget.edge(name) for name in names]


def chain_T(s, sc):
    """
    On a path a b c d: join ab, bc by s (e on ab, f on bc) and bc, cd by sc (e on bc, f on cd).

    Vertices a, b, c, d are 0, 1, 2, 3. Tracked: ab, bc, cd.
    """
    s = _as_gadget(s)
    sc = _as_gadget(sc)
    a, b, c, d = 0, 1, 2, 3
    current = path_graph(3)
    current = _join_adjacent(current, s, b, a, c)
    current = _join_adjacent(current, sc, c, b, d)

    provenance = _provenance('chain_T', [s, sc], {})
    return ComposedGadget(current, {'ab': (a, b), 'bc': (b, c), 'cd': (c, d)}, provenance)


def chain_Tprime(s, sc):
    """
    On a path p a b c d: join pa, ab by sc, then ab, bc by s, then bc, cd by another copy of sc.

    Vertices p, a, b, c, d are 0, 1, 2, 3, 4. Tracked: pa, ab, bc, cd.
    """
    s = _as_gadget(s)
    sc = _as_gadget(sc)
    p, a, b, c, d = 0, 1, 2, 3, 4
    current = path_graph(4)
    current = _join_adjacent(current, sc, a, p, b)
    current = _join_adjacent(current, s, b, a, c)
    current = _join_adjacent(current, sc, c, b, d)

    provenance = _provenance('chain_Tprime', [s, sc], {})
    return ComposedGadget(current, {'pa': (p, a), 'ab': (a, b), 'bc': (b, c), 'cd': (c, d)}, provenance)


def star_attach_all(f, r, e, except_edge=None):
    """
    Attach a copy of the gadget r, by its edge e, to every edge of f except `except_edge`.

    Copies are appended in canonical edge order of f. Tracked: the exception, as `e`, if given.
    """
    host = _as_graph(f)
    gadget_graph = _as_graph(r)
    e = gadget_graph.require_edge(e)
    if except_edge is not None:
        except_edge = host.require_edge(except_edge)

    current = host
    for edge in host.edges:
        if edge == except_edge:
            continue
        current, _ = identify(current, gadget_graph, default_orientation(edge, e))

    tracked = {} if except_edge is None else {'e': except_edge}
    provenance = _provenance(
        'star_attach_all', [host, gadget_graph],
        {'e': list(e), 'except_edge': None if except_edge is None else list(except_edge)},
    )
    return ComposedGadget(current, tracked, provenance)


def _require_certificate(operand, kind, polarity, stand_in, construction):
    if isinstance(operand, GadgetCertificate):
        spec = operand.spec
        if spec.kind != kind or spec.polarity != polarity:
            wanted = kind if polarity is None else f'{polarity} {kind}'
            raise ConstructionException(f'{construction} needs a {wanted} certificate')
        return operand
    if not stand_in:
        raise ConstructionException(
            f'{construction} needs a gadget certificate; pass stand_in=True to compose an uncertified stand-in'
        )

    return None


def complement_determiner(determiner, g_min, e, stand_in=False, jobs=1):
    """
    Attach a copy of an X-determiner to every edge of g_min except e.

    With a certificate, g_min must be Ramsey-minimal for the restricted tuple T_X.
    The result is a candidate complement determiner with signal edge e, to be re-verified.
    """
    certificate = _require_certificate(determiner, DETERMINER_KIND, None, stand_in, 'complement_determiner')
    gadget = _as_gadget(determiner)
    host = _as_graph(g_min)
    e = host.require_edge(e)
    if not gadget.signal_edges:
        raise ConstructionException('complement_determiner needs a tracked signal edge on the determiner')

    if certificate is not None:
        restricted_tuple = certificate.clique_tuple.restrict(certificate.spec.colors)
        if not is_minimal(host, restricted_tuple, jobs=jobs):
            raise ConstructionException(f'g_min is not Ramsey-minimal for the restricted tuple ({restricted_tuple})')

    composed = star_attach_all(host, gadget.graph, gadget.signal_edges[0], except_edge=e)
    provenance = _provenance(
        'complement_determiner', [gadget, host],
        {'e': list(e)},
    )
    return ComposedGadget(composed.graph, {'e': e}, provenance)


def positive_from_negative(sender, color_count=None, stand_in=False):
    """
    A matching e_1, ..., e_{q+1} with every pair joined by a copy of a negative sender,
    except the pair (e_q, e_{q+1}), which becomes the signal pair e, f.

    e_i is the edge (2i - 2, 2i - 1); copies follow in lexicographic order of pairs.
    """
    certificate = _require_certificate(sender, SENDER_KIND, NEGATIVE_POLARITY, stand_in, 'positive_from_negative')
    gadget = _as_gadget(sender)
    if certificate is not None:
        color_count = certificate.clique_tuple.color_count
        if certificate.spec.colors != frozenset(certificate.clique_tuple.colors):
            raise ConstructionException('positive_from_negative needs a sender for the whole palette')
    if color_count is None or color_count < 2:
        raise ConstructionException(f'positive_from_negative needs at least 2 colors, got {color_count}')

    e, f = gadget.signal_pair()
    matching_edges = [(2 * index, 2 * index + 1) for index in range(color_count + 1)]
    current = Graph(2 * (color_count + 1), matching_edges)
    image_from_vertex = list(range(current.vertex_count))

    for i, j in itertools.combinations(range(color_count + 1), 2):
        if (i, j) == (color_count - 1, color_count):
            continue
        first = matching_edges[i]
        second = matching_edges[j]
        pairs = [
            (image_from_vertex[first[0]], e[0]), (image_from_vertex[first[1]], e[1]),
            (image_from_vertex[second[0]], f[0]), (image_from_vertex[second[1]], f[1]),
        ]
        current, surgery_map = _glue_copy(current, gadget.graph, pairs)
        image_from_vertex = [surgery_map.vertex_map_left[image] for image in image_from_vertex]

    last, after_last = matching_edges[color_count - 1], matching_edges[color_count]
    tracked = {
        'e': (image_from_vertex[last[0]], image_from_vertex[last[1]]),
        'f': (image_from_vertex[after_last[0]], image_from_vertex[after_last[1]]),
    }
    provenance = _provenance('positive_from_negative', [gadget], {'color_count': color_count})
    return ComposedGadget(current, tracked, provenance)


def determiner_from_positive(sender, t=None, stand_in=False):
    """
    A copy of K_t on 0, ..., t-1 and a disjoint edge e = (t, t+1),
    with e joined to every edge of K_t by a copy of a positive sender. `t` defaults to t_q.
    """
    certificate = _require_certificate(sender, SENDER_KIND, POSITIVE_POLARITY, stand_in, 'determiner_from_positive')
    gadget = _as_gadget(sender)
    if t is None:
        if certificate is None:
            raise ConstructionException('determiner_from_positive needs t for an uncertified stand-in')
        t = certificate.clique_tuple.orders[-1]
    if t < 2:
        raise ConstructionException(f't must be at least 2, got {t}')

    e, f = gadget.signal_pair()
    signal = (t, t + 1)
    current = Graph(t + 2, list(complete_graph(t).edges) + [signal])
    for edge in complete_graph(t).edges:
        pairs = [(signal[0], e[0]), (signal[1], e[1]), (edge[0], f[0]), (edge[1], f[1])]
        current, _ = _glue_copy(current, gadget.graph, pairs)

    provenance = _provenance('determiner_from_positive', [gadget], {'t': t})
    return ComposedGadget(current, {'e': signal}, provenance)


def two_level_star(h, s):
    """
    H on 0, ..., m-1, then u = m and v = m+1, with the edges uv and vx for x = 0, ..., m-2.

    For every edge xy of H (x < y), one copy of s joins uv and vx (e on uv, f on vx)
    and another joins vx and xy (e on vx, f on xy). Tracked: uv.
    """
    host = _as_graph(h)
    gadget = _as_gadget(s)
    vertex_count = host.vertex_count
    u = vertex_count
    v = vertex_count + 1

    base_edges = list(host.edges) + [(u, v)] + [(v, x) for x in range(vertex_count - 1)]
    current = Graph(vertex_count + 2, base_edges)
    for x, y in host.edges:
        current = _join_adjacent(current, gadget, v, u, x)
        current = _join_adjacent(current, gadget, x, v, y)

    provenance = _provenance('two_level_star', [host, gadget], {})
    return ComposedGadget(current, {'uv': (u, v)}, provenance)


TEE_STAR_MODES = ('case1', 'case2')


def tee_star(h, t_gadget, mode):
    """
    H on 0, ..., m-1, u = m, v = m+1, and one gadget copy per edge xy of H (x < y), in canonical order.

    case1: a copy of T (tracked ab, bc, cd) with a on u, b on v, c on x, d on y;
    case2: a copy of T' (tracked pa, cd) with p on u, a on v, c on x, d on y. Tracked: uv.
    """
    host = _as_graph(h)
    gadget = _as_gadget(t_gadget)
    vertex_count = host.vertex_count
    u = vertex_count
    v = vertex_count + 1

    if mode == 'case1':
        ab, bc, cd = _chain_endpoints(gadget, ('ab', 'bc', 'cd'))
        b, a, _ = orient_at_shared_vertex(ab, bc)
        c, d, _ = orient_at_shared_vertex(cd, bc)
        near, far = a, b
    elif mode == 'case2':
        pa, cd = _chain_endpoints(gadget, ('pa', 'cd'))
        near, far = pa
        c, d = cd
    else:
        raise ConstructionException(f'tee_star mode must be one of {", ".join(TEE_STAR_MODES)}, got `{mode}`')

    current = Graph(vertex_count + 2, list(host.edges) + [(u, v)])
    for x, y in host.edges:
        current, _ = _glue_copy(current, gadget.graph, [(u, near), (v, far), (x, c), (y, d)])

    provenance = _provenance('tee_star', [host, gadget], {'mode': mode})
    return ComposedGadget(current, {'uv': (u, v)}, provenance)


def _require_neighbour_order(graph, x, order):
    graph.require_vertex(x)
    order = list(order)
    if len(set(order)) != len(order) or set(order) != set(graph.neighbours(x)):
        raise ConstructionException(f'order {order} is not an arrangement of the neighbours of {x}')

    return order


def _pattern_task(task):
    graph, clique_tuple, star_edges, pattern = task
    try:
        return extend(graph, clique_tuple, Coloring(dict(zip(star_edges, pattern)))) is None
    except ColoringConflictException:
        return True


def forbidden_patterns(f, clique_tuple, x, order, jobs=1, degree_cap=FORBIDDEN_PATTERN_DEGREE_CAP):
    """
    The patterns (c_1, ..., c_l) such that coloring x order[i] with c_i does not extend
    to a T-free coloring of f.
    """
    graph = _as_graph(f)
    clique_tuple.require_gadget_orders()
    order = _require_neighbour_order(graph, x, order)
    if len(order) > degree_cap:
        raise SearchCapException(f'degree {len(order)} of vertex {x} exceeds the pattern cap {degree_cap}', degree_cap)

    star_edges = [normalise_edge(x, neighbour) for neighbour in order]
    patterns = list(itertools.product(clique_tuple.colors, repeat=len(order)))
    tasks = [(graph, clique_tuple, star_edges, pattern) for pattern in patterns]
    forbidden = [pattern for pattern, is_forbidden in zip(patterns, map_in_order(_pattern_task, tasks, jobs)) if is_forbidden]

    return PatternSet(clique_tuple.color_count, len(order), forbidden)


def assemble_core(f, x, order, hyper):
    """
    One copy of f per arc, with order[i] identified with the i-th vertex of the arc,
    and every copy of x identified into x0.

    Vertices: the hypergraph's vertices first, then x0, then the remaining vertices of each copy.
    Tracked: e = x0 u and f = x0 u' for the distinguished vertices (u, u').
    """
    graph = _as_graph(f)
    order = _require_neighbour_order(graph, x, order)
    if hyper.uniformity != len(order):
        raise ConstructionException(
            f'hypergraph uniformity {hyper.uniformity} does not match the degree {len(order)} of vertex {x}'
        )
    if hyper.distinguished is None:
        raise ConstructionException('the hypergraph needs distinguished vertices u, u\'')

    x0 = hyper.vertex_count
    current = Graph(hyper.vertex_count + 1)
    for arc in hyper.arcs:
        pairs = [(x0, x)] + [(arc_vertex, neighbour) for arc_vertex, neighbour in zip(arc, order)]
        current, _ = _glue_copy(current, graph, pairs)

    u, u_prime = hyper.distinguished
    if not (current.has_edge(x0, u) and current.has_edge(x0, u_prime)):
        raise ConstructionException('both distinguished vertices must lie on some arc')

    provenance = _provenance(
        'assemble_core', [graph],
        {'x': x, 'order': order, 'hypergraph': write_hypergraph(hyper)},
    )
    return ComposedGadget(current, {'e': (x0, u), 'f': (x0, u_prime)}, provenance)


def attach_everywhere_equivalence(f, certificate, jobs=1):
    """
    Compare whether f arrows T_X with whether f, with the X-determiner attached to every edge, arrows T.

    Returns the two verdicts; for a certified determiner they agree.
    """
    if not isinstance(certificate, GadgetCertificate) or certificate.spec.kind != DETERMINER_KIND:
        raise ConstructionException('attach_everywhere_equivalence needs a determiner certificate')

    host = _as_graph(f)
    restricted_tuple = certificate.clique_tuple.restrict(certificate.spec.colors)
    composed = star_attach_all(host, certificate.graph, certificate.spec.signal_edges[0])
    return (
        arrows(host, restricted_tuple, jobs=jobs).arrows,
        arrows(composed.graph, certificate.clique_tuple, jobs=jobs).arrows,
    )


def validate_host(h, t, clique_tuple=None, jobs=1):
    """
    Check an input host graph: it must be K_t-free, and, when a tuple is given, arrow it.

    Returns (is K_t-free, arrows the tuple or None).
    """
    host = _as_graph(h)
    is_clique_free = clique_number(host) < t
    if clique_tuple is None:
        return is_clique_free, None

    return is_clique_free, arrows(host, clique_tuple, jobs=jobs).arrows


def _operand_from_document(document):
    graph = parse_graph6(document['graph6'])
    return ComposedGadget.from_graph(graph, {name: tuple(edge) for name, edge in document.get('tracked', [])})


def _replay_graph(operands, parameters, clique_tuple):
    graph = parse_graph6(parameters['graph6'])
    return ComposedGadget.from_graph(graph, {name: tuple(edge) for name, edge in parameters.get('tracked', [])})


_REPLAYER_FROM_CONSTRUCTION = {
    'graph': _replay_graph,
    'attach': lambda operands, parameters, clique_tuple: attach(
        operands[0], parameters['target'], operands[1], parameters['signal'],
    ),
    'join': lambda operands, parameters, clique_tuple: join(
        operands[0], parameters['a'], parameters['b'], operands[1], parameters['e'], parameters['f'],
    ),
    'glue_on_path': lambda operands, parameters, clique_tuple: glue_on_path(
        operands[0], *parameters['first_path'], operands[1], *parameters['second_path'],
    ),
    'symmetric_double': lambda operands, parameters, clique_tuple: symmetric_double(
        operands[0], parameters['e'], parameters['f'],
    ),
    'claw': lambda operands, parameters, clique_tuple: claw(
        operands[0], parameters.get('h'), parameters.get('d', 0), clique_tuple,
    ),
    'chain_T': lambda operands, parameters, clique_tuple: chain_T(operands[0], operands[1]),
    'chain_Tprime': lambda operands, parameters, clique_tuple: chain_Tprime(operands[0], operands[1]),
    'star_attach_all': lambda operands, parameters, clique_tuple: star_attach_all(
        operands[0], operands[1], parameters['e'], parameters.get('except_edge'),
    ),
    'complement_determiner': lambda operands, parameters, clique_tuple: complement_determiner(
        operands[0], operands[1], parameters['e'], stand_in=True,
    ),
    'positive_from_negative': lambda operands, parameters, clique_tuple: positive_from_negative(
        operands[0], parameters['color_count'], stand_in=True,
    ),
    'determiner_from_positive': lambda operands, parameters, clique_tuple: determiner_from_positive(
        operands[0], parameters['t'], stand_in=True,
    ),
    'two_level_star': lambda operands, parameters, clique_tuple: two_level_star(operands[0], operands[1]),
    'tee_star': lambda operands, parameters, clique_tuple: tee_star(operands[0], operands[1], parameters['mode']),
    'assemble_core': lambda operands, parameters, clique_tuple: assemble_core(
        operands[0], parameters['x'], parameters['order'], parse_hypergraph(parameters['hypergraph']),
    ),
}

CONSTRUCTION_NAMES = tuple(sorted(name for name in _REPLAYER_FROM_CONSTRUCTION if name != 'graph'))


def replay(provenance, clique_tuple=None):
    """
    Rebuild a composed gadget from its provenance.

    `clique_tuple` fills in parameters derived from the tuple, such as the default claw size.
    """
    construction = provenance.get('construction')
    try:
        replayer = _REPLAYER_FROM_CONSTRUCTION[construction]
    except KeyError as key_error:
        raise ConstructionException(f'unknown construction `{construction}`') from key_error

    operands = [_operand_from_document(document) for document in provenance.get('operands', [])]
    try:
        return replayer(operands, provenance.get('parameters', {}), clique_tuple)
    except (KeyError, IndexError, TypeError) as error:
        raise ConstructionException(f'malformed parameters for `{construction}`: {error}') from error
