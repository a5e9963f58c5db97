"""
# Ramsey Gadgets: searches.py

Licensed under "MIT No Attribution" (MIT-0), see LICENSE.

Exhaustive searches: claw thresholds, gadgets within a graph stream, and Ramsey-minimal graphs.
"""

import itertools
import warnings

import networkx as nx
from tqdm import tqdm

from ramseygadgets.colorings import Coloring, extend, is_minimal, ramsey_number
from ramseygadgets.constants import (
    DEFAULT_SEARCH_BUDGET,
    DETERMINER_KIND,
    MINIMAL_ENUMERATION_VERTEX_CAP,
    RAMSEY_NUMBER_VERTEX_CAP,
    SENDER_KIND,
)
from ramseygadgets.constructions import claw
from ramseygadgets.exceptions import SearchCapException
from ramseygadgets.gadgets import GadgetCertificate, GadgetSpec, verify_determiner, verify_sender
from ramseygadgets.graphs import Graph, canonical_key, iterate_nonisomorphic_graphs
from ramseygadgets.utilities import map_in_order


def _claw_feasible(gadget, clique_tuple, color, h, d):
    composed = claw(gadget, h, d)
    return extend(composed.graph, clique_tuple, Coloring({composed.edge('xy'): color})) is not None


def claw_threshold(clique_tuple, s, color, h=None):
    """
    The largest d for which claw(s, h, d) has a T-free coloring giving xy the color `color`, or None if even d = 0 fails.

    Feasibility is downward-closed in d, so the scan stops at the first infeasible d.
    `h` defaults to r(T) - 1.
    """
    if h is None:
        ramsey_vertex_count = ramsey_number(clique_tuple)
        if ramsey_vertex_count is None:
            raise SearchCapException(f'r({clique_tuple}) is beyond the Ramsey number cap', RAMSEY_NUMBER_VERTEX_CAP)
        h = ramsey_vertex_count - 1

    threshold = None
    for d in range(h):
        if not _claw_feasible(s, clique_tuple, color, h, d):
            break
        threshold = d

    return threshold


def iterate_small_graphs(vertex_max, vertex_min=2):
    """
    Every graph with at least one edge on vertex_min, ..., vertex_max vertices, up to isomorphism.
    """
    for vertex_count in range(vertex_min, vertex_max + 1):
        yield from iterate_nonisomorphic_graphs(vertex_count, min_edges=1)


def iterate_random_graphs(vertex_count, probability, count, seed):
    """
    `count` samples of G(n, p), the k-th drawn with seed + k.
    """
    for index in range(count):
        yield Graph.from_networkx(nx.gnp_random_graph(vertex_count, probability, seed=seed + index))


def _marked_cells(e, f=None):
    if f is None:
        return [list(e)]

    shared = set(e) & set(f)
    return [sorted(shared), sorted(set(e) - shared), sorted(set(f) - shared)]


def _verify_candidate_task(task):
    graph, clique_tuple, kind, colors, polarity, signal_edges = task
    if kind == DETERMINER_KIND:
        verdict = verify_determiner(graph, clique_tuple, signal_edges[0], colors)
    else:
        verdict = verify_sender(graph, clique_tuple, *signal_edges, colors, polarity)

    return verdict if isinstance(verdict, GadgetCertificate) else None


class GadgetSearch:
    """
    Verify a gadget shape on every candidate graph, one signal edge (or ordered pair) per orbit.

    Each verification counts against the budget; when it runs out the search stops with a warning
    and `budget_exhausted` is set.
    """
    def __init__(self, clique_tuple, kind, colors, polarity=None, budget=DEFAULT_SEARCH_BUDGET, jobs=1, progress=False):
        clique_tuple.require_gadget_orders()
        placeholder_edges = [(0, 1)] if kind == DETERMINER_KIND else [(0, 1), (1, 2)]
        GadgetSpec(kind, colors, placeholder_edges, polarity).require_palette(clique_tuple)

        self._clique_tuple = clique_tuple
        self._kind = kind
        self._colors = frozenset(colors)
        self._polarity = polarity
        self._budget = budget
        self._jobs = jobs
        self._progress = progress
        self._examined_count = 0
        self._budget_exhausted = False

    @property
    def examined_count(self):
        return self._examined_count

    @property
    def budget_exhausted(self):
        return self._budget_exhausted

    def signal_choices(self, graph):
        """
        Orbit representatives of signal edges (determiner) or ordered signal edge pairs (sender).
        """
        if self._kind == DETERMINER_KIND:
            choices = [(edge,) for edge in graph.edges]
        else:
            choices = [(e, f) for e, f in itertools.permutations(graph.edges, 2)]

        seen_keys = set()
        for choice in choices:
            key = canonical_key(graph, cells=_marked_cells(*choice))
            if key not in seen_keys:
                seen_keys.add(key)
                yield choice

    def _tasks(self, graphs):
        for graph in graphs:
            if self._kind == SENDER_KIND and graph.edge_count < 2:
                continue
            for signal_edges in self.signal_choices(graph):
                yield graph, self._clique_tuple, self._kind, self._colors, self._polarity, signal_edges

    def run(self, graphs):
        """
        Yield a GadgetCertificate for every verified candidate, in stream order.
        """
        self._examined_count = 0
        self._budget_exhausted = False

        all_tasks = self._tasks(graphs)
        budgeted_tasks = itertools.islice(all_tasks, self._budget)
        results = map_in_order(_verify_candidate_task, budgeted_tasks, self._jobs)
        try:
            for certificate in tqdm(results, desc='gadget search', disable=not self._progress, leave=False):
                self._examined_count += 1
                if certificate is not None:
                    yield certificate
        finally:
            results.close()

        if next(all_tasks, None) is not None:
            self._budget_exhausted = True
            warnings.warn(f'gadget search budget of {self._budget} verifications exhausted; results are partial')


def gadget_search(clique_tuple, kind, colors, graphs, polarity=None, budget=DEFAULT_SEARCH_BUDGET, jobs=1):
    return GadgetSearch(clique_tuple, kind, colors, polarity, budget, jobs).run(graphs)


def minimal_ramsey_enumeration(clique_tuple, vertex_max, jobs=1, progress=False):
    """
    All Ramsey-minimal graphs for T on at most vertex_max vertices, up to isomorphism, in canonical form.

    Candidates have no isolated vertices and at least C(r, 2) edges, the size Ramsey number of the tuple.
    """
    if vertex_max > MINIMAL_ENUMERATION_VERTEX_CAP:
        raise SearchCapException(
            f'minimal enumeration up to {vertex_max} vertices exceeds the cap {MINIMAL_ENUMERATION_VERTEX_CAP}',
            MINIMAL_ENUMERATION_VERTEX_CAP,
        )

    ramsey_vertex_count = ramsey_number(clique_tuple, min(vertex_max, RAMSEY_NUMBER_VERTEX_CAP), jobs)
    if ramsey_vertex_count is None:
        return []

    edge_lower_bound = ramsey_vertex_count * (ramsey_vertex_count - 1) // 2
    minimal_graphs = []
    for vertex_count in range(ramsey_vertex_count, vertex_max + 1):
        candidates = iterate_nonisomorphic_graphs(vertex_count, min_edges=edge_lower_bound)
        for graph in tqdm(candidates, desc=f'minimal n={vertex_count}', disable=not progress, leave=False):
            if graph.isolated_vertices():
                continue
            if is_minimal(graph, clique_tuple, jobs=jobs):
                minimal_graphs.append(graph)

    return minimal_graphs
