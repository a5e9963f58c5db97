"""
# Ramsey Gadgets: test_constructions.py

Licensed under "MIT No Attribution" (MIT-0), see LICENSE.

Perform unit testing for `constructions.py`.
"""

import itertools
import json
import math
import os
import random
import unittest

from ramseygadgets.colorings import CliqueTuple, is_minimal
from ramseygadgets.constants import POSITIVE_POLARITY
from ramseygadgets.constructions import (
    CONSTRUCTION_NAMES,
    ComposedGadget,
    assemble_core,
    attach,
    attach_everywhere_equivalence,
    chain_T,
    chain_Tprime,
    claw,
    complement_determiner,
    determiner_from_positive,
    forbidden_patterns,
    glue_on_path,
    join,
    positive_from_negative,
    replay,
    star_attach_all,
    symmetric_double,
    tee_star,
    two_level_star,
    validate_host,
)
from ramseygadgets.digraphs import analyze, aux_digraph_by_enumeration
from ramseygadgets.exceptions import ConstructionException, GraphException, SearchCapException
from ramseygadgets.gadgets import verify_determiner, verify_sender
from ramseygadgets.graphs import Graph, complete_graph, cycle_graph, iso_equal, matching, path_graph
from ramseygadgets.hypergraphs import OrientedHypergraph, PatternSet

SLOW_TESTS_ENABLED = bool(os.environ.get('RAMSEYGADGETS_SLOW_TESTS'))


def random_graph(generator, vertex_count, edge_count):
    pairs = list(itertools.combinations(range(vertex_count), 2))
    edges = generator.sample(pairs, min(edge_count, len(pairs)))
    return Graph(vertex_count, edges)


def random_signal_gadget(generator, vertex_min=3, vertex_max=6, extra_edge_max=6):
    """
    A random gadget with signal edges e = (0, 1) and f = (0, 2), where 1 and 2 are non-adjacent.
    """
    vertex_count = generator.randint(vertex_min, vertex_max)
    candidates = [
        edge for edge in itertools.combinations(range(vertex_count), 2) if edge not in ((0, 1), (0, 2), (1, 2))
    ]
    extra_edges = generator.sample(candidates, generator.randint(0, min(extra_edge_max, len(candidates))))
    graph = Graph(vertex_count, [(0, 1), (0, 2)] + extra_edges)
    return ComposedGadget.from_graph(graph, {'e': (0, 1), 'f': (0, 2)})


def path_sender():
    return ComposedGadget.from_graph(path_graph(2), {'e': (0, 1), 'f': (1, 2)})


def twin_sender():
    graph = complete_graph(6).without_edge((4, 5))
    return verify_sender(graph, CliqueTuple([3, 3]), (0, 4), (0, 5), {1, 2}, POSITIVE_POLARITY)


def induced_paths(graph):
    return [
        (a, b, c)
        for b in range(graph.vertex_count)
        for a, c in itertools.permutations(graph.neighbours(b), 2)
        if not graph.has_edge(a, c)
    ]


def make_freeness_checker(graph, clique_tuple):
    """
    Return a function deciding T-freeness of a color sequence given in canonical edge order.
    """
    index_from_edge = {edge: index for index, edge in enumerate(graph.edges)}
    indices_from_color = {}
    for color in clique_tuple.colors:
        order = clique_tuple.order_of(color)
        indices_from_color[color] = [
            [index_from_edge[edge] for edge in itertools.combinations(clique, 2)]
            for clique in itertools.combinations(range(graph.vertex_count), order)
            if all(graph.has_edge(u, v) for u, v in itertools.combinations(clique, 2))
        ]

    def is_free(colors):
        return not any(
            all(colors[index] == color for index in indices)
            for color, cliques in indices_from_color.items()
            for indices in cliques
        )

    return is_free


class TestConstructions(unittest.TestCase):
    def test_composed_gadget(self):
        gadget = ComposedGadget.from_graph(path_graph(2), {'e': (1, 0), 'f': (1, 2)})
        self.assertEqual(gadget.tracked, {'e': (0, 1), 'f': (1, 2)})
        self.assertEqual(gadget.signal_pair(), ((0, 1), (1, 2)))
        self.assertEqual(gadget.edge('f'), (1, 2))
        self.assertRaises(ConstructionException, gadget.edge, 'g')
        self.assertRaises(ConstructionException, ComposedGadget.from_graph(path_graph(2), {'e': (0, 1)}).signal_pair)
        self.assertRaises(ConstructionException, ComposedGadget.from_graph, path_graph(2), {'e': (0, 2)})

        document = gadget.to_document()
        self.assertEqual(document['vertex_count'], 3)
        self.assertEqual(document['tracked'], [['e', [0, 1]], ['f', [1, 2]]])
        self.assertEqual(document['provenance']['construction'], 'graph')
        self.assertEqual(replay(document['provenance']).tracked, gadget.tracked)

    def test_attach(self):
        composed = attach(cycle_graph(4), (2, 3), complete_graph(3), (0, 1))
        self.assertEqual(composed.graph.vertex_count, 5)
        self.assertEqual(composed.graph.edge_count, 6)
        self.assertEqual(composed.tracked, {'e': (2, 3)})
        self.assertTrue(composed.graph.has_edge(2, 4) and composed.graph.has_edge(3, 4))

        generator = random.Random(11)
        for _ in range(100):
            host = random_graph(generator, generator.randint(2, 7), generator.randint(1, 8))
            gadget = random_graph(generator, generator.randint(2, 7), generator.randint(1, 8))
            composed = attach(host, generator.choice(host.edges), gadget, generator.choice(gadget.edges))
            self.assertEqual(composed.graph.vertex_count, host.vertex_count + gadget.vertex_count - 2)
            self.assertEqual(composed.graph.edge_count, host.edge_count + gadget.edge_count - 1)

    def test_join(self):
        host = matching(2)
        composed = join(host, (0, 1), (2, 3), path_graph(3), (0, 1), (2, 3))
        self.assertEqual(composed.graph, path_graph(3))
        self.assertEqual(composed.tracked, {'a': (0, 1), 'b': (2, 3)})

        composed = join(cycle_graph(6), (0, 1), (3, 4), matching(2), (0, 1), (2, 3))
        self.assertTrue(iso_equal(composed.graph, cycle_graph(6)))

        composed = join(path_graph(2), (0, 1), (1, 2), matching(2), (0, 1), (2, 3))
        self.assertEqual(composed.graph, path_graph(2))
        self.assertRaises(ConstructionException, join, path_graph(2), (0, 1), (1, 2), path_graph(3), (0, 1), (2, 3))

        self.assertRaises(ConstructionException, join, host, (0, 1), (1, 0), matching(2), (0, 1), (2, 3))
        self.assertRaises(ConstructionException, join, host, (0, 1), (2, 3), matching(2), (0, 1), (0, 1))
        self.assertRaises(ConstructionException, join, complete_graph(3), (0, 1), (1, 2), path_graph(3), (0, 1), (2, 3))

        generator = random.Random(12)
        for _ in range(100):
            host = random_graph(generator, generator.randint(4, 7), generator.randint(2, 10))
            gadget = random_graph(generator, generator.randint(4, 7), generator.randint(2, 10))
            host_pairs = [(a, b) for a, b in itertools.combinations(host.edges, 2) if not set(a) & set(b)]
            gadget_pairs = [(e, f) for e, f in itertools.combinations(gadget.edges, 2) if not set(e) & set(f)]
            if not host_pairs or not gadget_pairs:
                continue
            (a, b), (e, f) = generator.choice(host_pairs), generator.choice(gadget_pairs)
            composed = join(host, a, b, gadget, e, f)
            self.assertEqual(composed.graph.vertex_count, host.vertex_count + gadget.vertex_count - 4)

    def test_glue_on_path(self):
        composed = glue_on_path(path_graph(2), 0, 1, 2, cycle_graph(4), 3, 0, 1)
        self.assertEqual(composed.graph, cycle_graph(4))
        self.assertEqual(composed.tracked, {'ab': (0, 1), 'bc': (1, 2)})

        self.assertRaises(ConstructionException, glue_on_path, complete_graph(3), 0, 1, 2, path_graph(2), 0, 1, 2)
        self.assertRaises(ConstructionException, glue_on_path, path_graph(2), 0, 1, 0, path_graph(2), 0, 1, 2)
        self.assertRaises(GraphException, glue_on_path, path_graph(2), 0, 2, 1, path_graph(2), 0, 1, 2)

    def test_glue_on_path_freeness(self):
        generator = random.Random(13)
        tuples = [CliqueTuple([3, 3]), CliqueTuple([4, 3]), CliqueTuple([3, 3, 3])]
        instance_count = 0
        while instance_count < 200:
            g1 = random_graph(generator, generator.randint(3, 5), generator.randint(2, 6))
            g2 = random_graph(generator, generator.randint(3, 5), generator.randint(2, 6))
            paths1 = induced_paths(g1)
            paths2 = induced_paths(g2)
            clique_tuple = generator.choice(tuples)
            edge_total = g1.edge_count + g2.edge_count - 2
            if not paths1 or not paths2 or clique_tuple.color_count ** edge_total > 4096:
                continue

            composed = glue_on_path(g1, *generator.choice(paths1), g2, *generator.choice(paths2))
            glued = composed.graph
            self.assertEqual(glued.vertex_count, g1.vertex_count + g2.vertex_count - 3)
            self.assertEqual(glued.edge_count, edge_total)

            surgery_map = composed.surgery_maps[0]
            index_from_edge = {edge: index for index, edge in enumerate(glued.edges)}
            left_indices = [index_from_edge[surgery_map.edge_map_left[edge]] for edge in g1.edges]
            right_indices = [index_from_edge[surgery_map.edge_map_right[edge]] for edge in g2.edges]
            glued_is_free = make_freeness_checker(glued, clique_tuple)
            left_is_free = make_freeness_checker(g1, clique_tuple)
            right_is_free = make_freeness_checker(g2, clique_tuple)

            for colors in itertools.product(clique_tuple.colors, repeat=glued.edge_count):
                left_colors = [colors[index] for index in left_indices]
                right_colors = [colors[index] for index in right_indices]
                self.assertEqual(glued_is_free(colors), left_is_free(left_colors) and right_is_free(right_colors))
            instance_count += 1

    def test_symmetric_double(self):
        composed = symmetric_double(path_graph(2), (0, 1), (1, 2))
        self.assertEqual(composed.graph, path_graph(2))
        self.assertEqual(composed.tracked, {'ab': (0, 1), 'bc': (1, 2)})

        self.assertRaises(ConstructionException, symmetric_double, complete_graph(3), (0, 1), (1, 2))
        self.assertRaises(ConstructionException, symmetric_double, matching(2), (0, 1), (2, 3))

        generator = random.Random(14)
        tuples = [CliqueTuple([3, 3]), CliqueTuple([4, 3])]
        for _ in range(24):
            gadget = random_signal_gadget(generator, vertex_min=3, vertex_max=6, extra_edge_max=5)
            s = gadget.graph
            clique_tuple = generator.choice(tuples)
            composed = symmetric_double(s, *gadget.signal_pair())
            self.assertEqual(composed.graph.vertex_count, 2 * s.vertex_count - 3)
            self.assertEqual(composed.graph.edge_count, 2 * s.edge_count - 2)

            digraph = aux_digraph_by_enumeration(s, clique_tuple, *gadget.signal_pair())
            double_digraph = aux_digraph_by_enumeration(composed.graph, clique_tuple, (0, 1), (1, 2))
            self.assertTrue(analyze(double_digraph).symmetric)
            self.assertEqual(double_digraph.arcs, {(i, j) for i, j in digraph.arcs if digraph.has_arc(j, i)})

    def test_claw(self):
        sender = twin_sender()
        composed = claw(sender, h=7, d=3)
        self.assertEqual(composed.graph.vertex_count, 7 + 2 + 3 * 3)
        self.assertEqual(composed.graph.edge_count, 21 + 1 + 4 + 3 * 12)
        self.assertEqual(composed.tracked, {'xy': (7, 8), 'xz': (3, 7)})

        composed = claw(sender, h=5, d=0)
        self.assertEqual(composed.graph, Graph(7, list(complete_graph(5).edges) + [(5, 6), (0, 5)]))

        composed = claw(path_graph(2), d=0, clique_tuple=CliqueTuple([3, 3]))
        self.assertEqual(composed.graph.vertex_count, 7)

        self.assertRaises(ConstructionException, claw, sender)
        self.assertRaises(ConstructionException, claw, sender, h=3, d=3)
        self.assertRaises(ConstructionException, claw, sender, h=3, d=-1)
        disjoint = ComposedGadget.from_graph(matching(2), {'e': (0, 1), 'f': (2, 3)})
        self.assertRaises(ConstructionException, claw, disjoint, h=4, d=1)

        generator = random.Random(15)
        for _ in range(60):
            gadget = random_signal_gadget(generator)
            h = generator.randint(2, 7)
            d = generator.randint(0, h - 1)
            composed = claw(gadget, h=h, d=d)
            s = gadget.graph
            self.assertEqual(composed.graph.vertex_count, h + 2 + d * (s.vertex_count - 3))
            self.assertEqual(composed.graph.edge_count, math.comb(h, 2) + 1 + (d + 1) + d * (s.edge_count - 2))

    def test_chains(self):
        generator = random.Random(16)
        for _ in range(40):
            s = random_signal_gadget(generator)
            sc = random_signal_gadget(generator)
            composed = chain_T(s, sc)
            self.assertEqual(composed.graph.vertex_count, 4 + (s.graph.vertex_count - 3) + (sc.graph.vertex_count - 3))
            self.assertEqual(composed.graph.edge_count, 3 + (s.graph.edge_count - 2) + (sc.graph.edge_count - 2))
            self.assertEqual(composed.tracked, {'ab': (0, 1), 'bc': (1, 2), 'cd': (2, 3)})

            composed = chain_Tprime(s, sc)
            self.assertEqual(
                composed.graph.vertex_count,
                5 + (s.graph.vertex_count - 3) + 2 * (sc.graph.vertex_count - 3),
            )
            self.assertEqual(composed.graph.edge_count, 4 + (s.graph.edge_count - 2) + 2 * (sc.graph.edge_count - 2))
            self.assertEqual(composed.tracked, {'pa': (0, 1), 'ab': (1, 2), 'bc': (2, 3), 'cd': (3, 4)})

        composed = chain_T(path_sender(), path_sender())
        self.assertEqual(composed.graph, path_graph(3))
        self.assertRaises(ConstructionException, chain_T, ComposedGadget.from_graph(path_graph(2)), composed)

    def test_star_attach_all(self):
        composed = star_attach_all(complete_graph(3), path_graph(2), (0, 1), except_edge=(0, 1))
        self.assertEqual(composed.graph.vertex_count, 5)
        self.assertEqual(composed.graph.edge_count, 5)
        self.assertEqual(composed.tracked, {'e': (0, 1)})

        generator = random.Random(17)
        for _ in range(60):
            host = random_graph(generator, generator.randint(2, 6), generator.randint(1, 8))
            gadget = random_graph(generator, generator.randint(2, 5), generator.randint(1, 6))
            except_edge = generator.choice([None, generator.choice(host.edges)])
            composed = star_attach_all(host, gadget, generator.choice(gadget.edges), except_edge)
            attached_count = host.edge_count - (except_edge is not None)
            self.assertEqual(composed.graph.vertex_count, host.vertex_count + attached_count * (gadget.vertex_count - 2))
            self.assertEqual(composed.graph.edge_count, host.edge_count + attached_count * (gadget.edge_count - 1))

    def test_complement_determiner(self):
        stand_in = ComposedGadget.from_graph(path_graph(2), {'e': (0, 1)})
        composed = complement_determiner(stand_in, complete_graph(3), (0, 1), stand_in=True)
        self.assertEqual(composed.graph.vertex_count, 5)
        self.assertEqual(composed.tracked, {'e': (0, 1)})
        self.assertRaises(ConstructionException, complement_determiner, stand_in, complete_graph(3), (0, 1))
        self.assertRaises(
            ConstructionException, complement_determiner, path_graph(2), complete_graph(3), (0, 1), stand_in=True,
        )

        clique_tuple = CliqueTuple([3, 3])
        certificate = verify_determiner(complete_graph(2), clique_tuple, (0, 1), {1, 2})
        composed = complement_determiner(certificate, complete_graph(6), (0, 1))
        self.assertEqual(composed.graph, complete_graph(6))
        self.assertRaises(ConstructionException, complement_determiner, certificate, complete_graph(7), (0, 1))
        self.assertRaises(ConstructionException, complement_determiner, twin_sender(), complete_graph(6), (0, 1))

    def test_positive_from_negative(self):
        stand_in = ComposedGadget.from_graph(path_graph(3), {'e': (0, 1), 'f': (2, 3)})
        composed = positive_from_negative(stand_in, color_count=2, stand_in=True)
        self.assertEqual(composed.graph, Graph(6, [(0, 1), (2, 3), (4, 5), (1, 2), (1, 4)]))
        self.assertEqual(composed.tracked, {'e': (2, 3), 'f': (4, 5)})

        composed = positive_from_negative(stand_in, color_count=3, stand_in=True)
        self.assertEqual(composed.graph.vertex_count, 8)
        self.assertEqual(composed.graph.edge_count, 4 + 5)

        self.assertRaises(ConstructionException, positive_from_negative, stand_in, color_count=2)
        self.assertRaises(ConstructionException, positive_from_negative, stand_in, color_count=1, stand_in=True)
        self.assertRaises(ConstructionException, positive_from_negative, twin_sender())

    def test_determiner_from_positive(self):
        stand_in = ComposedGadget.from_graph(path_graph(3), {'e': (0, 1), 'f': (2, 3)})
        composed = determiner_from_positive(stand_in, t=3, stand_in=True)
        self.assertEqual(composed.graph, Graph(5, [(0, 1), (0, 2), (1, 2), (3, 4), (0, 4), (1, 4)]))
        self.assertEqual(composed.tracked, {'e': (3, 4)})

        self.assertRaises(ConstructionException, determiner_from_positive, stand_in, stand_in=True)
        self.assertRaises(ConstructionException, determiner_from_positive, stand_in, t=1, stand_in=True)
        self.assertRaises(ConstructionException, determiner_from_positive, stand_in, t=3)

    def test_two_level_star(self):
        composed = two_level_star(path_graph(1), path_sender())
        self.assertEqual(composed.graph, Graph(4, [(0, 1), (2, 3), (0, 3)]))
        self.assertEqual(composed.tracked, {'uv': (2, 3)})

        generator = random.Random(18)
        for _ in range(40):
            host = random_graph(generator, generator.randint(2, 5), generator.randint(1, 4))
            gadget = random_signal_gadget(generator)
            composed = two_level_star(host, gadget)
            m = host.vertex_count
            s = gadget.graph
            self.assertEqual(composed.graph.vertex_count, m + 2 + 2 * host.edge_count * (s.vertex_count - 3))
            self.assertEqual(
                composed.graph.edge_count,
                host.edge_count + 1 + (m - 1) + 2 * host.edge_count * (s.edge_count - 2),
            )

    def test_tee_star(self):
        generator = random.Random(19)
        for _ in range(30):
            host = random_graph(generator, generator.randint(2, 5), generator.randint(1, 4))
            t_gadget = chain_T(random_signal_gadget(generator), random_signal_gadget(generator))
            composed = tee_star(host, t_gadget, 'case1')
            per_copy = t_gadget.graph.vertex_count - 4
            self.assertEqual(composed.graph.vertex_count, host.vertex_count + 2 + host.edge_count * per_copy)
            self.assertEqual(composed.tracked, {'uv': (host.vertex_count, host.vertex_count + 1)})

            t_prime_gadget = chain_Tprime(random_signal_gadget(generator), random_signal_gadget(generator))
            composed = tee_star(host, t_prime_gadget, 'case2')
            per_copy = t_prime_gadget.graph.vertex_count - 4
            self.assertEqual(composed.graph.vertex_count, host.vertex_count + 2 + host.edge_count * per_copy)

        t_gadget = chain_T(path_sender(), path_sender())
        composed = tee_star(matching(2), t_gadget, 'case1')
        self.assertEqual(composed.graph.edge_count, 2 + 1 + 2 * (t_gadget.graph.edge_count - 2))
        self.assertRaises(ConstructionException, tee_star, matching(2), t_gadget, 'case3')
        self.assertRaises(ConstructionException, tee_star, matching(2), t_gadget, 'case2')

    def test_forbidden_patterns(self):
        clique_tuple = CliqueTuple([3, 3])
        self.assertEqual(forbidden_patterns(complete_graph(3), clique_tuple, 0, [1, 2]), PatternSet(2, 2, []))

        patterns = forbidden_patterns(complete_graph(5), clique_tuple, 0, [1, 2, 3, 4], jobs=2)
        self.assertEqual(len(patterns), 10)
        self.assertIn((1, 1, 1, 2), patterns)
        self.assertNotIn((1, 2, 2, 1), patterns)

        self.assertEqual(len(forbidden_patterns(complete_graph(6), clique_tuple, 0, [5, 4, 3, 2, 1])), 32)
        self.assertRaises(ConstructionException, forbidden_patterns, complete_graph(3), clique_tuple, 0, [1])
        self.assertRaises(ConstructionException, forbidden_patterns, complete_graph(3), clique_tuple, 0, [1, 1])
        self.assertRaises(SearchCapException, forbidden_patterns, complete_graph(5), clique_tuple, 0, [1, 2, 3, 4], degree_cap=3)

    def test_forbidden_patterns_contain_fewer_color_patterns(self):
        clique_tuple = CliqueTuple([3, 3])
        self.assertTrue(is_minimal(complete_graph(6), clique_tuple))
        f = complete_graph(6).without_edge((4, 5))
        for x in [4, 0]:
            order = [vertex for vertex in range(6) if f.has_edge(x, vertex)]
            patterns = forbidden_patterns(f, clique_tuple, x, order)
            for pattern in itertools.product(clique_tuple.colors, repeat=len(order)):
                if len(set(pattern)) < clique_tuple.color_count:
                    self.assertIn(pattern, patterns)

        self.assertNotIn((1, 2, 1, 2), forbidden_patterns(f, clique_tuple, 4, [0, 1, 2, 3]))
        self.assertIn((1, 2, 1, 2, 1), forbidden_patterns(f, clique_tuple, 0, [1, 2, 3, 4, 5]))

    @unittest.skipUnless(SLOW_TESTS_ENABLED, 'set RAMSEYGADGETS_SLOW_TESTS to run')
    def test_forbidden_patterns_contain_fewer_color_patterns_asymmetric(self):
        clique_tuple = CliqueTuple([4, 3])
        f = complete_graph(9).without_edge((7, 8))
        patterns = forbidden_patterns(f, clique_tuple, 0, list(range(1, 9)))
        self.assertIn((1,) * 8, patterns)
        self.assertIn((2,) * 8, patterns)

    def test_assemble_core(self):
        hyper = OrientedHypergraph(3, [(0, 1), (1, 2)], 2, distinguished=(0, 2))
        composed = assemble_core(complete_graph(3), 0, [1, 2], hyper)
        self.assertEqual(composed.graph, Graph(4, [(0, 1), (0, 3), (1, 2), (1, 3), (2, 3)]))
        self.assertEqual(composed.tracked, {'e': (0, 3), 'f': (2, 3)})

        generator = random.Random(20)
        for _ in range(40):
            f = random_graph(generator, generator.randint(3, 6), generator.randint(2, 8))
            x = generator.choice([vertex for vertex in range(f.vertex_count) if f.degree(vertex) > 0])
            order = f.neighbours(x)
            generator.shuffle(order)
            uniformity = len(order)
            vertex_count = uniformity + generator.randint(1, 3)
            arcs = [tuple(generator.sample(range(vertex_count), uniformity)) for _ in range(generator.randint(1, 4))]
            covered = sorted({vertex for arc in arcs for vertex in arc})
            if len(covered) < 2:
                continue
            hyper = OrientedHypergraph(vertex_count, arcs, uniformity, distinguished=(covered[0], covered[-1]))
            composed = assemble_core(f, x, order, hyper)
            self.assertEqual(
                composed.graph.vertex_count,
                vertex_count + 1 + len(arcs) * (f.vertex_count - 1 - uniformity),
            )

        self.assertRaises(ConstructionException, assemble_core, complete_graph(3), 0, [1, 2], OrientedHypergraph(3, [(0, 1, 2)]))
        self.assertRaises(ConstructionException, assemble_core, complete_graph(3), 0, [1, 2], OrientedHypergraph(3, [(0, 1)]))
        self.assertRaises(
            ConstructionException, assemble_core, complete_graph(3), 0, [1, 2],
            OrientedHypergraph(4, [(0, 1)], distinguished=(0, 3)),
        )

    def test_attach_everywhere_equivalence(self):
        certificate = verify_determiner(complete_graph(2), CliqueTuple([3, 3]), (0, 1), {1, 2})
        self.assertEqual(attach_everywhere_equivalence(complete_graph(6), certificate), (True, True))
        self.assertEqual(attach_everywhere_equivalence(complete_graph(5), certificate), (False, False))
        self.assertRaises(ConstructionException, attach_everywhere_equivalence, complete_graph(5), twin_sender())

    def test_validate_host(self):
        self.assertEqual(validate_host(cycle_graph(5), 3), (True, None))
        self.assertEqual(validate_host(complete_graph(6), 3, CliqueTuple([3, 3])), (False, True))
        self.assertEqual(validate_host(cycle_graph(5), 3, CliqueTuple([3, 3])), (True, False))

    def test_replay(self):
        generator = random.Random(21)
        s = random_signal_gadget(generator)
        sc = random_signal_gadget(generator)
        t_gadget = chain_T(s, sc)
        stand_in = ComposedGadget.from_graph(path_graph(3), {'e': (0, 1), 'f': (2, 3)})
        hyper = OrientedHypergraph(3, [(0, 1), (1, 2)], 2, distinguished=(0, 2))
        composed_gadgets = [
            attach(cycle_graph(5), (1, 2), complete_graph(4), (0, 3)),
            join(cycle_graph(6), (0, 1), (3, 4), path_graph(4), (0, 1), (3, 4)),
            glue_on_path(path_graph(2), 0, 1, 2, cycle_graph(5), 4, 0, 1),
            symmetric_double(s, *s.signal_pair()),
            claw(s, h=5, d=2),
            t_gadget,
            chain_Tprime(s, sc),
            star_attach_all(complete_graph(4), path_graph(2), (1, 2), except_edge=(0, 3)),
            complement_determiner(ComposedGadget.from_graph(path_graph(2), {'e': (0, 1)}), complete_graph(3), (0, 1), stand_in=True),
            positive_from_negative(stand_in, color_count=2, stand_in=True),
            determiner_from_positive(stand_in, t=3, stand_in=True),
            two_level_star(cycle_graph(4), s),
            tee_star(path_graph(2), t_gadget, 'case1'),
            assemble_core(complete_graph(3), 0, [2, 1], hyper),
        ]
        self.assertEqual(
            sorted({composed.provenance['construction'] for composed in composed_gadgets}),
            list(CONSTRUCTION_NAMES),
        )
        for composed in composed_gadgets:
            provenance = json.loads(json.dumps(composed.provenance))
            replayed = replay(provenance)
            self.assertEqual(replayed.graph, composed.graph)
            self.assertEqual(replayed.tracked, composed.tracked)

        self.assertRaises(ConstructionException, replay, {'construction': 'fold', 'operands': [], 'parameters': {}})
        self.assertRaises(ConstructionException, replay, {'construction': 'claw', 'operands': [], 'parameters': {'h': 3}})

        unsized = {'construction': 'claw', 'operands': [path_sender().to_operand_document()], 'parameters': {'d': 0}}
        composed = replay(unsized, CliqueTuple([3, 3]))
        self.assertEqual(composed.graph, Graph(7, list(complete_graph(5).edges) + [(5, 6), (0, 5)]))
        self.assertEqual(composed.provenance['parameters'], {'h': 5, 'd': 0})
        self.assertRaises(ConstructionException, replay, unsized)


if __name__ == '__main__':
    unittest.main()
