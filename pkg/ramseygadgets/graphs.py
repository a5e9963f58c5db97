"""
# Ramsey Gadgets: graphs.py

Licensed under "MIT No Attribution" (MIT-0), see LICENSE.

Simple graphs, graph surgery, cliques, distances, and canonical forms.
"""

import math

import networkx as nx

from ramseygadgets.constants import ADJACENCY_VERTEX_CAP, CANONICAL_FORM_VERTEX_CAP
from ramseygadgets.exceptions import CanonicalFormCapException, GraphException
from ramseygadgets.utilities import iterate_bits, normalise_edge


class Graph:
    """
    A simple undirected graph on the vertices 0, ..., n-1.

    Graphs are immutable. Edges are stored as pairs (u, v) with u < v,
    sorted lexicographically; this canonical edge order is used wherever ties must break.
    Adjacency is kept as one neighbour bitmask per vertex.
    """
    def __init__(self, vertex_count, edges=()):
        if vertex_count < 0:
            raise GraphException(f'vertex count must be nonnegative, got {vertex_count}')
        if vertex_count > ADJACENCY_VERTEX_CAP:
            raise GraphException(f'vertex count {vertex_count} exceeds the cap {ADJACENCY_VERTEX_CAP}')

        normalised_edges = set()
        neighbour_masks = [0] * vertex_count
        for u, v in edges:
            if u == v:
                raise GraphException(f'self-loop at vertex {u}')
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise GraphException(f'edge ({u}, {v}) out of range for {vertex_count} vertices')

            normalised_edges.add(normalise_edge(u, v))
            neighbour_masks[u] |= 1 << v
            neighbour_masks[v] |= 1 << u

        self._vertex_count = vertex_count
        self._edges = tuple(sorted(normalised_edges))
        self._neighbour_masks = tuple(neighbour_masks)
        self._index_from_edge = None

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented

        return self._vertex_count == other._vertex_count and self._edges == other._edges

    def __hash__(self):
        return hash((self._vertex_count, self._edges))

    def __repr__(self):
        return f'Graph({self._vertex_count}, {list(self._edges)})'

    @property
    def vertex_count(self):
        return self._vertex_count

    @property
    def edges(self):
        return self._edges

    @property
    def edge_count(self):
        return len(self._edges)

    @property
    def neighbour_masks(self):
        return self._neighbour_masks

    @property
    def index_from_edge(self):
        if self._index_from_edge is None:
            self._index_from_edge = {edge: index for index, edge in enumerate(self._edges)}

        return self._index_from_edge

    def has_edge(self, u, v):
        if not (0 <= u < self._vertex_count and 0 <= v < self._vertex_count):
            return False

        return bool(self._neighbour_masks[u] >> v & 1)

    def require_edge(self, edge):
        """
        Return the normalised form of an edge reference, raising if it is not an edge.
        """
        u, v = edge
        if u == v or not self.has_edge(u, v):
            raise GraphException(f'({u}, {v}) is not an edge of the graph')

        return normalise_edge(u, v)

    def require_vertex(self, vertex):
        if not 0 <= vertex < self._vertex_count:
            raise GraphException(f'{vertex} is not a vertex of the graph')

        return vertex

    def neighbours(self, vertex):
        return list(iterate_bits(self._neighbour_masks[vertex]))

    def degree(self, vertex):
        return self._neighbour_masks[vertex].bit_count()

    def isolated_vertices(self):
        return [vertex for vertex in range(self._vertex_count) if self._neighbour_masks[vertex] == 0]

    def without_edge(self, edge):
        edge = self.require_edge(edge)
        return Graph(self._vertex_count, (other for other in self._edges if other != edge))

    def with_edges(self, edges):
        return Graph(self._vertex_count, list(self._edges) + list(edges))

    def relabelled(self, label_from_vertex, vertex_count=None):
        """
        Relabel vertex v as `label_from_vertex[v]`.

        The labels must be injective; `vertex_count` defaults to the current count.
        """
        if vertex_count is None:
            vertex_count = self._vertex_count
        if len(set(label_from_vertex)) != len(label_from_vertex):
            raise GraphException('relabelling is not injective')

        return Graph(vertex_count, ((label_from_vertex[u], label_from_vertex[v]) for u, v in self._edges))

    def induced_subgraph(self, vertices):
        """
        Return the subgraph induced by `vertices`, relabelled 0, 1, ... in increasing order.
        """
        vertices = sorted(set(vertices))
        label_from_vertex = {vertex: label for label, vertex in enumerate(vertices)}
        return Graph(
            len(vertices),
            (
                (label_from_vertex[u], label_from_vertex[v])
                for u, v in self._edges
                if u in label_from_vertex and v in label_from_vertex
            ),
        )

    def without_isolated_vertices(self):
        kept_vertices = [vertex for vertex in range(self._vertex_count) if self._neighbour_masks[vertex] != 0]
        return self.induced_subgraph(kept_vertices), kept_vertices

    def to_networkx(self):
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(self._vertex_count))
        nx_graph.add_edges_from(self._edges)
        return nx_graph

    @staticmethod
    def from_networkx(nx_graph):
        vertices = sorted(nx_graph.nodes())
        label_from_vertex = {vertex: label for label, vertex in enumerate(vertices)}
        return Graph(len(vertices), ((label_from_vertex[u], label_from_vertex[v]) for u, v in nx_graph.edges()))


class SurgeryMap:
    """
    Label images produced by a surgery on a left graph and a right graph.

    `vertex_map_left[v]` is the label in the combined graph of vertex v of the left graph,
    and likewise for the right graph. Identified vertices share an image.
    """
    def __init__(self, vertex_map_left, vertex_map_right, left_graph, right_graph):
        self._vertex_map_left = tuple(vertex_map_left)
        self._vertex_map_right = tuple(vertex_map_right)
        self._edge_map_left = {
            edge: normalise_edge(self._vertex_map_left[edge[0]], self._vertex_map_left[edge[1]])
            for edge in left_graph.edges
        }
        self._edge_map_right = {
            edge: normalise_edge(self._vertex_map_right[edge[0]], self._vertex_map_right[edge[1]])
            for edge in right_graph.edges
        }

    @property
    def vertex_map_left(self):
        return self._vertex_map_left

    @property
    def vertex_map_right(self):
        return self._vertex_map_right

    @property
    def edge_map_left(self):
        return self._edge_map_left

    @property
    def edge_map_right(self):
        return self._edge_map_right

    def left_edge(self, edge):
        return normalise_edge(self._vertex_map_left[edge[0]], self._vertex_map_left[edge[1]])

    def right_edge(self, edge):
        return normalise_edge(self._vertex_map_right[edge[0]], self._vertex_map_right[edge[1]])

    def sides(self):
        """
        Return the (vertex image set, edge image set) of the left and of the right graph.
        """
        return (
            (set(self._vertex_map_left), set(self._edge_map_left.values())),
            (set(self._vertex_map_right), set(self._edge_map_right.values())),
        )


def complete_graph(vertex_count):
    return Graph(vertex_count, ((u, v) for u in range(vertex_count) for v in range(u + 1, vertex_count)))


def path_graph(edge_count):
    """
    Path with `edge_count` edges on the vertices 0, ..., edge_count.
    """
    if edge_count < 0:
        raise GraphException(f'edge count must be nonnegative, got {edge_count}')

    return Graph(edge_count + 1, ((vertex, vertex + 1) for vertex in range(edge_count)))


def cycle_graph(vertex_count):
    if vertex_count < 3:
        raise GraphException(f'a cycle needs at least 3 vertices, got {vertex_count}')

    return Graph(vertex_count, ((vertex, (vertex + 1) % vertex_count) for vertex in range(vertex_count)))


def matching(edge_count):
    if edge_count < 0:
        raise GraphException(f'edge count must be nonnegative, got {edge_count}')

    return Graph(2 * edge_count, ((2 * index, 2 * index + 1) for index in range(edge_count)))


def disjoint_union(g, h):
    offset = g.vertex_count
    return Graph(offset + h.vertex_count, list(g.edges) + [(u + offset, v + offset) for u, v in h.edges])


def cliques_of_size(graph, size):
    """
    Yield every clique of the given size as a sorted vertex tuple, in lexicographic order.
    """
    if size < 1:
        raise GraphException(f'clique size must be positive, got {size}')

    neighbour_masks = graph.neighbour_masks

    def extend(clique, candidates):
        if len(clique) == size:
            yield tuple(clique)
            return

        needed = size - len(clique)
        while candidates and candidates.bit_count() >= needed:
            low_bit = candidates & -candidates
            vertex = low_bit.bit_length() - 1
            candidates ^= low_bit
            clique.append(vertex)
            yield from extend(clique, candidates & neighbour_masks[vertex])
            clique.pop()

    yield from extend([], (1 << graph.vertex_count) - 1)


def clique_number(graph):
    size = 0
    while next(cliques_of_size(graph, size + 1), None) is not None:
        size += 1

    return size


def edge_distance(graph, e, f):
    """
    Length of a shortest path with one endpoint in e and the other in f.

    Returns 0 when the edges share a vertex, and `math.inf` when no such path exists.
    """
    e = graph.require_edge(e)
    f = graph.require_edge(f)
    if set(e) & set(f):
        return 0

    path_lengths = nx.multi_source_dijkstra_path_length(graph.to_networkx(), set(e))
    return min(path_lengths.get(vertex, math.inf) for vertex in f)


def identify(g, h, pairs):
    """
    Take the disjoint union of g and h, then identify each listed (g-vertex, h-vertex) pair.

    Identifications are closed transitively, so vertices forced together collapse.
    Each resulting class is labelled by the position of its least member
    in the disjoint-union order (g first, then h), so the labels of g are kept
    unless two vertices of g are forced together.
    Parallel edges collapse; a class containing two adjacent vertices is rejected.
    """
    g_count = g.vertex_count
    h_count = h.vertex_count
    parent = list(range(g_count + h_count))

    def find(vertex):
        while parent[vertex] != vertex:
            parent[vertex] = parent[parent[vertex]]
            vertex = parent[vertex]
        return vertex

    for g_vertex, h_vertex in pairs:
        g.require_vertex(g_vertex)
        h.require_vertex(h_vertex)
        g_root = find(g_vertex)
        h_root = find(g_count + h_vertex)
        if g_root != h_root:
            parent[max(g_root, h_root)] = min(g_root, h_root)

    label_from_root = {}
    for vertex in range(g_count + h_count):
        root = find(vertex)
        if root not in label_from_root:
            label_from_root[root] = len(label_from_root)
    label_from_vertex = [label_from_root[find(vertex)] for vertex in range(g_count + h_count)]

    combined_edges = []
    for u, v in g.edges:
        combined_edges.append((label_from_vertex[u], label_from_vertex[v]))
    for u, v in h.edges:
        combined_edges.append((label_from_vertex[g_count + u], label_from_vertex[g_count + v]))
    for u, v in combined_edges:
        if u == v:
            raise GraphException(f'identification collapses two adjacent vertices into vertex {u}')

    combined = Graph(len(label_from_root), combined_edges)
    surgery_map = SurgeryMap(label_from_vertex[:g_count], label_from_vertex[g_count:], g, h)

    return combined, surgery_map


def default_orientation(ge, he):
    """
    Pair the smaller endpoint of ge with the smaller endpoint of he, and likewise the larger.
    """
    ge = normalise_edge(*ge)
    he = normalise_edge(*he)
    return (ge[0], he[0]), (ge[1], he[1])


def merge_edges(g, ge, h, he, orientation):
    """
    Identify the edge ge of g with the edge he of h.

    `orientation` is a pair of (g-endpoint, h-endpoint) correspondences
    pairing the endpoints of ge with those of he bijectively.
    """
    ge = g.require_edge(ge)
    he = h.require_edge(he)
    orientation = [tuple(pair) for pair in orientation]
    if (
        len(orientation) != 2
        or {pair[0] for pair in orientation} != set(ge)
        or {pair[1] for pair in orientation} != set(he)
    ):
        raise GraphException(f'orientation {orientation} does not pair the endpoints of {ge} with those of {he}')

    return identify(g, h, orientation)


def _refine_cells(neighbour_masks, cells):
    """
    Refine an ordered partition until it is equitable.

    A cell is split by the number of neighbours each vertex has in every cell,
    the pieces ordered by that signature, which keeps the result isomorphism-invariant.
    """
    while True:
        cell_masks = [sum(1 << vertex for vertex in cell) for cell in cells]
        refined_cells = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                refined_cells.append(cell)
                continue

            signature_from_vertex = {
                vertex: tuple((neighbour_masks[vertex] & cell_mask).bit_count() for cell_mask in cell_masks)
                for vertex in cell
            }
            signatures = sorted(set(signature_from_vertex.values()))
            if len(signatures) > 1:
                changed = True
            for signature in signatures:
                refined_cells.append([vertex for vertex in cell if signature_from_vertex[vertex] == signature])

        cells = refined_cells
        if not changed:
            return cells


def _twin_representatives(neighbour_masks, cell):
    # Swapping twins fixes the partition, so one twin per class suffices.
    representatives = []
    for vertex in cell:
        if not any(
            neighbour_masks[vertex] & ~(1 << representative) == neighbour_masks[representative] & ~(1 << vertex)
            for representative in representatives
        ):
            representatives.append(vertex)

    return representatives


def _adjacency_code(neighbour_masks, order):
    code = 0
    for i, u in enumerate(order):
        for v in order[i + 1:]:
            code = code << 1 | (neighbour_masks[u] >> v & 1)

    return code


def _initial_cells(vertex_count, cells):
    if cells is None:
        return [list(range(vertex_count))] if vertex_count > 0 else []

    seen = set()
    initial_cells = []
    for cell in cells:
        cell = sorted(set(cell))
        if seen & set(cell):
            raise GraphException('initial cells must be disjoint')
        seen |= set(cell)
        if cell:
            initial_cells.append(cell)

    rest = [vertex for vertex in range(vertex_count) if vertex not in seen]
    if rest:
        initial_cells.append(rest)

    return initial_cells


def canonical_labelling(graph, cells=None, vertex_cap=CANONICAL_FORM_VERTEX_CAP):
    """
    Compute a canonical vertex order by individualisation and refinement.

    Returns (order, code): `order[i]` is the vertex placed at position i,
    and `code` is the adjacency bit-string (upper triangle, row by row) under that order,
    minimal over all leaves of the search tree.
    If ordered initial `cells` are given, the order respects them
    (vertices not mentioned form a final cell).
    """
    vertex_count = graph.vertex_count
    if vertex_count > vertex_cap:
        raise CanonicalFormCapException(
            f'canonical form requested for {vertex_count} vertices, above the cap {vertex_cap}'
        )

    neighbour_masks = graph.neighbour_masks
    best_order = []
    best_code = None

    stack = [_refine_cells(neighbour_masks, _initial_cells(vertex_count, cells))]
    while stack:
        partition = stack.pop()
        target_index = next((index for index, cell in enumerate(partition) if len(cell) > 1), None)

        if target_index is None:
            order = [cell[0] for cell in partition]
            code = _adjacency_code(neighbour_masks, order)
            if best_code is None or code < best_code:
                best_code = code
                best_order = order
            continue

        target_cell = partition[target_index]
        for vertex in reversed(_twin_representatives(neighbour_masks, target_cell)):
            rest = [other for other in target_cell if other != vertex]
            child = partition[:target_index] + [[vertex], rest] + partition[target_index + 1:]
            stack.append(_refine_cells(neighbour_masks, child))

    return best_order, best_code if best_code is not None else 0


def canonical_form(graph, vertex_cap=CANONICAL_FORM_VERTEX_CAP):
    order, _ = canonical_labelling(graph, vertex_cap=vertex_cap)
    label_from_vertex = [0] * graph.vertex_count
    for position, vertex in enumerate(order):
        label_from_vertex[vertex] = position

    return graph.relabelled(label_from_vertex)


def canonical_key(graph, cells=None, vertex_cap=CANONICAL_FORM_VERTEX_CAP):
    """
    Hashable isomorphism invariant; with `cells` it is invariant for graphs with marked vertex classes.
    """
    initial_cells = _initial_cells(graph.vertex_count, cells)
    _, code = canonical_labelling(graph, cells=initial_cells, vertex_cap=vertex_cap)
    return graph.vertex_count, tuple(len(cell) for cell in initial_cells), code


def iso_equal(g, h, vertex_cap=CANONICAL_FORM_VERTEX_CAP):
    if g.vertex_count != h.vertex_count or g.edge_count != h.edge_count:
        return False

    return canonical_form(g, vertex_cap) == canonical_form(h, vertex_cap)


def iterate_nonisomorphic_graphs(vertex_count, min_edges=0, max_edges=None, vertex_cap=CANONICAL_FORM_VERTEX_CAP):
    """
    Yield one canonical representative of every graph on `vertex_count` vertices
    with between `min_edges` and `max_edges` edges.

    Graphs are generated level by level by deleting edges from the complete graph,
    deduplicated by canonical form, densest level first.
    """
    total_edges = vertex_count * (vertex_count - 1) // 2
    if max_edges is None or max_edges > total_edges:
        max_edges = total_edges
    min_edges = max(min_edges, 0)

    level = {canonical_form(complete_graph(vertex_count), vertex_cap)}
    for edge_count in range(total_edges, min_edges - 1, -1):
        if edge_count <= max_edges:
            yield from sorted(level, key=lambda graph: graph.edges)
        if edge_count == min_edges:
            break

        level = {
            canonical_form(graph.without_edge(edge), vertex_cap)
            for graph in level
            for edge in graph.edges
        }
