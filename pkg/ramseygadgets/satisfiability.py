"""
# Ramsey Gadgets: satisfiability.py

Licensed under "MIT No Attribution" (MIT-0), see LICENSE.

Two-color fast path: the "red graph" formulation solved with CaDiCaL.
"""

import itertools

from pysat.formula import IDPool
from pysat.solvers import Cadical195

from ramseygadgets.exceptions import ColoringException
from ramseygadgets.graphs import cliques_of_size


def build_red_graph_formula(graph, clique_tuple, colors):
    """
    Encode the 2-colorings of a graph without a red K_{t1} and without a blue K_{t2}.

    The variable of an edge is true iff the edge is red (color 1).
    `colors` lists the color of each edge in canonical order, 0 for unset;
    set edges become assumption literals rather than unit clauses,
    so that one solver can serve the whole lexicographic descent.
    Returns (clauses, variable_from_edge, assumptions).
    """
    if clique_tuple.color_count != 2:
        raise ColoringException(f'the red graph formulation needs exactly 2 colors, got {clique_tuple.color_count}')

    pool = IDPool()
    variable_from_edge = {edge: pool.id(edge) for edge in graph.edges}
    red_order, blue_order = clique_tuple.orders

    clauses = []
    for clique in cliques_of_size(graph, red_order):
        clauses.append([-variable_from_edge[edge] for edge in itertools.combinations(clique, 2)])
    for clique in cliques_of_size(graph, blue_order):
        clauses.append([variable_from_edge[edge] for edge in itertools.combinations(clique, 2)])

    assumptions = [
        variable_from_edge[edge] if color == 1 else -variable_from_edge[edge]
        for edge, color in zip(graph.edges, colors)
        if color != 0
    ]

    return clauses, variable_from_edge, assumptions


def first_red_graph_extension(graph, clique_tuple, colors):
    """
    Return the lexicographically least free extension of `colors` (a tuple of colors), or None.

    Edges are fixed one at a time in canonical order, preferring red.
    Whenever the current model already makes an edge red no solver call is needed,
    since that model satisfies the extended assumptions too.
    """
    clauses, variable_from_edge, assumptions = build_red_graph_formula(graph, clique_tuple, colors)
    constrained_variables = {abs(literal) for clause in clauses for literal in clause}
    assumptions = [literal for literal in assumptions if abs(literal) in constrained_variables]

    with Cadical195(bootstrap_with=clauses) as solver:
        if not solver.solve(assumptions=assumptions):
            return None
        model = set(solver.get_model() or [])

        extension = []
        for edge, color in zip(graph.edges, colors):
            variable = variable_from_edge[edge]
            if color != 0:
                extension.append(color)
                continue
            if variable not in constrained_variables:
                extension.append(1)
                continue

            if variable in model:
                literal = variable
            elif solver.solve(assumptions=assumptions + [variable]):
                model = set(solver.get_model())
                literal = variable
            else:
                literal = -variable

            assumptions.append(literal)
            extension.append(1 if literal > 0 else 2)

    return tuple(extension)
