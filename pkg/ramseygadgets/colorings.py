"""
# Ramsey Gadgets: colorings.py

Licensed under "MIT No Attribution" (MIT-0), see LICENSE.

Clique tuples, edge colorings, the extension oracle, and arrowing.
"""

import functools
import itertools
import math

from ramseygadgets.constants import PREFIXES_PER_WORKER, RAMSEY_NUMBER_VERTEX_CAP
from ramseygadgets.exceptions import (
    ColoringConflictException,
    ColoringException,
    NotRamseyException,
    SearchCapException,
    TupleException,
)
from ramseygadgets.graphs import cliques_of_size, complete_graph
from ramseygadgets.satisfiability import first_red_graph_extension
from ramseygadgets.utilities import first_as_completed, first_in_order, normalise_edge, parse_integer_list


class CliqueTuple:
    """
    A tuple of clique orders (t_1, ..., t_q), largest first, with palette {1, ..., q}.

    Color i is forbidden from containing a monochromatic K_{t_i}.
    Orders of 2 are admitted here (packing needs them);
    gadget-facing callers demand at least 3 via `require_gadget_orders()`.
    """
    def __init__(self, orders, minimum_order=2):
        orders = tuple(orders)
        if len(orders) == 0:
            raise TupleException('a clique tuple needs at least one order')
        for order in orders:
            if not isinstance(order, int) or order < minimum_order:
                raise TupleException(f'clique orders must be integers at least {minimum_order}, got {order}')
        if any(earlier < later for earlier, later in zip(orders, orders[1:])):
            text = ','.join(str(order) for order in orders)
            expected = ','.join(str(order) for order in sorted(orders, reverse=True))
            raise TupleException(f'clique orders must be largest first: got `{text}`, expected `{expected}`')

        self._orders = orders

    def __eq__(self, other):
        if not isinstance(other, CliqueTuple):
            return NotImplemented

        return self._orders == other._orders

    def __hash__(self):
        return hash(self._orders)

    def __repr__(self):
        return f'CliqueTuple({self._orders})'

    def __str__(self):
        return ','.join(str(order) for order in self._orders)

    @staticmethod
    def from_string(string, allow_nondecreasing=False, minimum_order=2):
        """
        Parse `t1,t2,...,tq`. With `allow_nondecreasing`, any order is accepted and sorted largest first.
        """
        try:
            orders = parse_integer_list(string)
        except ValueError as value_error:
            raise TupleException(str(value_error)) from value_error

        if allow_nondecreasing:
            orders = sorted(orders, reverse=True)

        return CliqueTuple(orders, minimum_order)

    @property
    def orders(self):
        return self._orders

    @property
    def color_count(self):
        return len(self._orders)

    @property
    def colors(self):
        return range(1, len(self._orders) + 1)

    def order_of(self, color):
        return self._orders[color - 1]

    def restrict(self, colors):
        """
        The restricted tuple T_X, palette relabelled 1, ..., |X| in increasing order of X.
        """
        colors = sorted(set(colors))
        if not colors or any(color not in self.colors for color in colors):
            raise TupleException(f'cannot restrict {self} to colors {colors}')

        return CliqueTuple((self.order_of(color) for color in colors), minimum_order=2)

    def equal_order_classes(self):
        classes = {}
        for color in self.colors:
            classes.setdefault(self.order_of(color), []).append(color)

        return [frozenset(members) for members in classes.values()]

    def require_gadget_orders(self):
        if any(order < 3 for order in self._orders):
            raise TupleException(f'gadget operations need clique orders at least 3, got `{self}`')

        return self


class Coloring:
    """
    A total or partial map from edges to colors.

    Edges are normalised to (u, v) with u < v; colors are positive integers.
    """
    def __init__(self, color_from_edge=None):
        normalised = {}
        for edge, color in (color_from_edge or {}).items():
            if not isinstance(color, int) or color < 1:
                raise ColoringException(f'color of edge {edge} must be a positive integer, got {color}')
            normalised[normalise_edge(*edge)] = color

        self._color_from_edge = normalised

    def __eq__(self, other):
        if not isinstance(other, Coloring):
            return NotImplemented

        return self._color_from_edge == other._color_from_edge

    def __hash__(self):
        return hash(frozenset(self._color_from_edge.items()))

    def __len__(self):
        return len(self._color_from_edge)

    def __repr__(self):
        return f'Coloring({dict(self.items())})'

    @staticmethod
    def from_colors(graph, colors):
        """
        Build a coloring from a sequence of colors in canonical edge order (0 for unset).
        """
        return Coloring({edge: color for edge, color in zip(graph.edges, colors) if color != 0})

    @staticmethod
    def from_lines(string):
        color_from_edge = {}
        for line_number, line in enumerate(string.splitlines(), start=1):
            if line.strip() == '':
                continue
            try:
                u, v, color = (int(field) for field in line.split())
            except ValueError as value_error:
                raise ColoringException(f'line {line_number}: expected `u v c`, got `{line}`') from value_error
            color_from_edge[(u, v)] = color

        return Coloring(color_from_edge)

    def color_of(self, edge):
        return self._color_from_edge.get(normalise_edge(*edge))

    def items(self):
        return sorted(self._color_from_edge.items())

    def colors_on(self, graph):
        return tuple(self._color_from_edge.get(edge, 0) for edge in graph.edges)

    def is_total_on(self, graph):
        return len(self._color_from_edge) == graph.edge_count and all(
            edge in self._color_from_edge for edge in graph.edges
        )

    def require_within(self, graph, color_count):
        for edge, color in self._color_from_edge.items():
            if not graph.has_edge(*edge):
                raise ColoringException(f'colored pair {edge} is not an edge of the graph')
            if color > color_count:
                raise ColoringException(f'color {color} of edge {edge} is outside the palette 1..{color_count}')

        return self

    def require_total(self, graph, color_count):
        self.require_within(graph, color_count)
        if not self.is_total_on(graph):
            raise ColoringException('coloring is partial where a total coloring is required')

        return self

    def permuted(self, image_from_color):
        return Coloring({edge: image_from_color[color] for edge, color in self._color_from_edge.items()})

    def with_colors(self, color_from_edge):
        combined = dict(self._color_from_edge)
        combined.update({normalise_edge(*edge): color for edge, color in color_from_edge.items()})
        return Coloring(combined)

    def to_lines(self):
        return [f'{u} {v} {color}' for (u, v), color in self.items()]


class ArrowVerdict:
    """
    Outcome of an arrowing decision: either G arrows T, or a witness T-free coloring.
    """
    def __init__(self, arrows, witness=None):
        if arrows == (witness is not None):
            raise ColoringException('a verdict carries a witness exactly when the graph does not arrow')

        self._arrows = arrows
        self._witness = witness

    @property
    def arrows(self):
        return self._arrows

    @property
    def witness(self):
        return self._witness

    def to_document(self):
        return {
            'arrows': self._arrows,
            'witness': None if self._witness is None else self._witness.to_lines(),
        }


class ExtensionSearch:
    """
    Depth-first search for T-free colorings of one graph.

    Edges are visited in canonical order and colors tried in increasing order,
    so the first coloring found is the lexicographically least one.
    A branch is cut as soon as the edge just colored completes a monochromatic K_{t_c};
    for that test, every (edge, color) pair stores the other edges of each K_{t_c} through the edge.
    Colorings are handled internally as lists of colors in canonical edge order, 0 meaning unset.
    """
    def __init__(self, graph, clique_tuple):
        self._graph = graph
        self._clique_tuple = clique_tuple

        index_from_edge = graph.index_from_edge
        others_from_order = {}
        for order in set(clique_tuple.orders):
            others_by_edge = [[] for _ in graph.edges]
            for clique in cliques_of_size(graph, order):
                clique_edges = [index_from_edge[edge] for edge in itertools.combinations(clique, 2)]
                for edge_index in clique_edges:
                    others = tuple(other for other in clique_edges if other != edge_index)
                    others_by_edge[edge_index].append((others, clique))
            others_from_order[order] = others_by_edge

        self._others_by_edge_color = [
            [others_from_order[order][edge_index] for order in clique_tuple.orders]
            for edge_index in range(graph.edge_count)
        ]

    @property
    def graph(self):
        return self._graph

    @property
    def clique_tuple(self):
        return self._clique_tuple

    def completed_clique(self, colors, edge_index, color):
        """
        Return a clique monochromatic in `color` that coloring `edge_index` would complete, or None.
        """
        for others, clique in self._others_by_edge_color[edge_index][color - 1]:
            for other in others:
                if colors[other] != color:
                    break
            else:
                return clique

        return None

    def colors_from_coloring(self, coloring):
        if coloring is None:
            return [0] * self._graph.edge_count

        coloring.require_within(self._graph, self._clique_tuple.color_count)
        return list(coloring.colors_on(self._graph))

    def require_conflict_free(self, colors):
        for edge_index, color in enumerate(colors):
            if color == 0:
                continue
            clique = self.completed_clique(colors, edge_index, color)
            if clique is not None:
                raise ColoringConflictException(
                    f'partial coloring already has a monochromatic K_{len(clique)} in color {color} on {clique}',
                    clique,
                )

    def iterate_extensions(self, colors):
        """
        Yield every T-free total extension of `colors`, as tuples, in lexicographic order.
        """
        colors = list(colors)
        free_indices = [edge_index for edge_index, color in enumerate(colors) if color == 0]
        color_count = self._clique_tuple.color_count
        tried_colors = [0] * len(free_indices)

        depth = 0
        while depth >= 0:
            if depth == len(free_indices):
                yield tuple(colors)
                depth -= 1
                continue

            edge_index = free_indices[depth]
            colors[edge_index] = 0
            color = tried_colors[depth] + 1
            while color <= color_count and self.completed_clique(colors, edge_index, color) is not None:
                color += 1

            if color <= color_count:
                colors[edge_index] = color
                tried_colors[depth] = color
                depth += 1
            else:
                tried_colors[depth] = 0
                depth -= 1

    def iterate_prefixes(self, colors, target_count):
        """
        Yield, in lexicographic order, the conflict-free assignments of the first few free edges.

        Enough free edges are fixed to produce about `target_count` subtrees.
        """
        free_indices = [edge_index for edge_index, color in enumerate(colors) if color == 0]
        color_count = self._clique_tuple.color_count
        prefix_length = 0
        while prefix_length < len(free_indices) and color_count ** prefix_length < target_count:
            prefix_length += 1

        for assignment in itertools.product(range(1, color_count + 1), repeat=prefix_length):
            trial = list(colors)
            for edge_index, color in zip(free_indices, assignment):
                if self.completed_clique(trial, edge_index, color) is not None:
                    break
                trial[edge_index] = color
            else:
                yield trial


@functools.lru_cache(maxsize=16)
def _cached_search(graph, clique_tuple):
    return ExtensionSearch(graph, clique_tuple)


def _first_extension_task(task):
    graph, clique_tuple, colors = task
    return next(_cached_search(graph, clique_tuple).iterate_extensions(colors), None)


def is_free(graph, coloring, clique_tuple):
    """
    Decide whether a total coloring has no monochromatic K_{t_i} in any color i.
    """
    coloring.require_total(graph, clique_tuple.color_count)
    for color in clique_tuple.colors:
        for clique in cliques_of_size(graph, clique_tuple.order_of(color)):
            if all(coloring.color_of(edge) == color for edge in itertools.combinations(clique, 2)):
                return False

    return True


def extend(graph, clique_tuple, partial=None, jobs=1, any_witness=False, use_fast_path=True):
    """
    Extend a partial coloring to a T-free total coloring.

    Returns the lexicographically least extension (canonical edge order, then color order),
    or None when there is none. Raises ColoringConflictException
    when the colored part already contains a monochromatic clique.
    With `jobs` above 1 the search tree is split into subtrees handed to worker processes;
    the answer is unchanged unless `any_witness` is set,
    in which case whichever worker finishes first wins.
    """
    search = _cached_search(graph, clique_tuple)
    colors = search.colors_from_coloring(partial)
    search.require_conflict_free(colors)

    if use_fast_path and clique_tuple.color_count == 2:
        extension = first_red_graph_extension(graph, clique_tuple, colors)
    elif jobs is not None and jobs > 1:
        tasks = (
            (graph, clique_tuple, prefix)
            for prefix in search.iterate_prefixes(colors, jobs * PREFIXES_PER_WORKER)
        )
        choose_first = first_as_completed if any_witness else first_in_order
        extension = choose_first(_first_extension_task, tasks, jobs)
    else:
        extension = next(search.iterate_extensions(colors), None)

    if extension is None:
        return None

    return Coloring.from_colors(graph, extension)


def iterate_free_colorings(graph, clique_tuple, partial=None):
    """
    Yield every T-free total extension of `partial`, in lexicographic order.
    """
    search = _cached_search(graph, clique_tuple)
    colors = search.colors_from_coloring(partial)
    search.require_conflict_free(colors)
    for extension in search.iterate_extensions(colors):
        yield Coloring.from_colors(graph, extension)


def arrows(graph, clique_tuple, jobs=1, any_witness=False, use_fast_path=True):
    witness = extend(graph, clique_tuple, None, jobs=jobs, any_witness=any_witness, use_fast_path=use_fast_path)
    return ArrowVerdict(witness is None, witness)


def is_minimal(graph, clique_tuple, jobs=1):
    """
    Decide whether a graph arrows T while no graph obtained by deleting one edge does.
    """
    if not arrows(graph, clique_tuple, jobs=jobs).arrows:
        return False

    return not any(arrows(graph.without_edge(edge), clique_tuple, jobs=jobs).arrows for edge in graph.edges)


def minimal_subgraph(graph, clique_tuple, jobs=1):
    """
    Greedily delete edges (canonical order) while arrowing is preserved, then drop isolated vertices.
    """
    if not arrows(graph, clique_tuple, jobs=jobs).arrows:
        raise NotRamseyException(f'graph does not arrow ({clique_tuple}), so it has no Ramsey-minimal subgraph')

    current = graph
    for edge in graph.edges:
        candidate = current.without_edge(edge)
        if arrows(candidate, clique_tuple, jobs=jobs).arrows:
            current = candidate

    minimal, _ = current.without_isolated_vertices()
    return minimal


def color_class_permutation_check(graph, coloring, clique_tuple, sigma):
    """
    Return is_free(graph, sigma∘coloring, T) for a permutation sigma of the palette.

    `sigma` maps color i to `sigma[i]` (a dict) or `sigma[i - 1]` (a sequence).
    It may only permute colors whose clique orders are equal,
    in which case the result equals is_free(graph, coloring, T).
    """
    if isinstance(sigma, dict):
        image_from_color = dict(sigma)
    else:
        image_from_color = {color: image for color, image in zip(clique_tuple.colors, sigma)}

    palette = set(clique_tuple.colors)
    if set(image_from_color) != palette or set(image_from_color.values()) != palette:
        raise ColoringException(f'{sigma} is not a permutation of the palette 1..{clique_tuple.color_count}')
    for color, image in image_from_color.items():
        if clique_tuple.order_of(color) != clique_tuple.order_of(image):
            raise ColoringException(
                f'permutation sends color {color} (K_{clique_tuple.order_of(color)}) '
                f'to color {image} (K_{clique_tuple.order_of(image)})'
            )

    return is_free(graph, coloring.permuted(image_from_color), clique_tuple)


def ramsey_number(clique_tuple, vertex_max=RAMSEY_NUMBER_VERTEX_CAP, jobs=1):
    """
    Least n ≤ vertex_max with K_n arrowing T, or None.
    """
    if vertex_max > RAMSEY_NUMBER_VERTEX_CAP:
        raise SearchCapException(
            f'Ramsey number search up to {vertex_max} vertices exceeds the cap {RAMSEY_NUMBER_VERTEX_CAP}',
            RAMSEY_NUMBER_VERTEX_CAP,
        )

    for vertex_count in range(1, vertex_max + 1):
        if arrows(complete_graph(vertex_count), clique_tuple, jobs=jobs).arrows:
            return vertex_count

    return None


def size_ramsey_lower_bound(clique_tuple, vertex_max=RAMSEY_NUMBER_VERTEX_CAP, jobs=1):
    """
    Least edge count of a graph arrowing T, which equals C(r, 2) for r the Ramsey number; None if r is beyond reach.
    """
    ramsey_vertex_count = ramsey_number(clique_tuple, vertex_max, jobs)
    if ramsey_vertex_count is None:
        return None

    return math.comb(ramsey_vertex_count, 2)


def fresh_color_extension(graph, clique_tuple, edge, extra_order):
    """
    Color a Ramsey-minimal graph freely for the tuple T extended by one more color.

    A T-free coloring of G - e exists by minimality;
    giving e the fresh color q+1 cannot create a K_{extra_order} (extra_order ≥ 3) in that color.
    Returns (extended tuple, coloring); `extra_order` may not exceed t_q (largest-first convention).
    """
    edge = graph.require_edge(edge)
    if extra_order < 3:
        raise TupleException(f'the fresh color needs a clique order at least 3, got {extra_order}')

    extended_tuple = CliqueTuple(clique_tuple.orders + (extra_order,))
    remainder_coloring = extend(graph.without_edge(edge), clique_tuple)
    if remainder_coloring is None:
        raise NotRamseyException(f'deleting {edge} leaves a graph arrowing ({clique_tuple}); the graph is not minimal')

    return extended_tuple, remainder_coloring.with_colors({edge: clique_tuple.color_count + 1})
