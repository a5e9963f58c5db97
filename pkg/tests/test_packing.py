"""
# Ramsey Gadgets: test_packing.py

Licensed under "MIT No Attribution" (MIT-0), see LICENSE.

Perform unit testing for `packing.py`.
"""

import math
import os
import unittest

from ramseygadgets.colorings import CliqueTuple
from ramseygadgets.exceptions import PackingException, SearchCapException, TupleException
from ramseygadgets.graphs import Graph, complete_graph, cycle_graph, iso_equal, path_graph
from ramseygadgets.hypergraphs import OrientedHypergraph
from ramseygadgets.packing import (
    ColorPattern,
    HypergraphFamily,
    PatternSearch,
    blocks_are_complete_multipartite,
    components_are_complete_multipartite,
    minimum_degree_bounds,
    packing_bounds,
    packing_parameter,
    parse_pattern,
    pattern_valid,
    turan_blowup,
    turan_blowup_with_retries,
    write_pattern,
)

SLOW_TESTS_ENABLED = bool(os.environ.get('RAMSEYGADGETS_SLOW_TESTS'))


def square_with_diagonals():
    return ColorPattern(4, [cycle_graph(4), Graph(4, [(0, 2), (1, 3)])])


class TestPacking(unittest.TestCase):
    def test_color_pattern(self):
        pattern = square_with_diagonals()
        self.assertEqual(pattern.color_count, 2)
        self.assertEqual(pattern, square_with_diagonals())
        self.assertEqual(pattern.to_document()['edges'][1], [[0, 2], [1, 3]])

        self.assertRaises(PackingException, ColorPattern, 4, [cycle_graph(4), Graph(3)])
        self.assertRaises(PackingException, ColorPattern, 4, [cycle_graph(4), Graph(4, [(0, 1)])])

    def test_pattern_valid(self):
        verdict = pattern_valid(square_with_diagonals(), [2, 2])
        self.assertTrue(verdict)
        self.assertTrue(verdict.valid)
        self.assertEqual(
            verdict.to_document(),
            {'valid': True, 'clique_color': None, 'clique': None, 'uncovered_coloring': None},
        )

        verdict = pattern_valid(ColorPattern(3, [complete_graph(3), Graph(3)]), [2, 2])
        self.assertFalse(verdict)
        self.assertEqual((verdict.clique_color, verdict.clique), (1, (0, 1, 2)))

        verdict = pattern_valid(ColorPattern(2, [complete_graph(2), Graph(2)]), [2, 2])
        self.assertFalse(verdict)
        self.assertIsNone(verdict.clique)
        self.assertEqual(verdict.uncovered_coloring, (1, 2))

        self.assertTrue(pattern_valid(ColorPattern(2, [complete_graph(2)]), [2]))
        self.assertTrue(pattern_valid(ColorPattern(3, [complete_graph(3)]), [3]))
        self.assertFalse(pattern_valid(ColorPattern(3, [path_graph(2)]), [3]))

        self.assertRaises(PackingException, pattern_valid, square_with_diagonals(), [2])
        self.assertRaises(PackingException, pattern_valid, square_with_diagonals(), [2, 1])

    def test_pattern_search(self):
        self.assertEqual([assignment for assignment, _ in PatternSearch([2, 2], 2).iterate()], [(1,)])

        search = PatternSearch([2, 2, 2], 4)
        assignments = [assignment for assignment, _ in search.iterate()]
        self.assertTrue(assignments)
        self.assertEqual(len(set(assignments)), len(assignments))
        for assignment in assignments:
            self.assertEqual(assignment[0], 1)
            if 3 in assignment:
                self.assertIn(2, assignment[:assignment.index(3)])
            pattern = search.to_pattern(assignment)
            self.assertFalse(pattern_valid(pattern, [2, 2, 2]).clique)

        search = PatternSearch([2, 2], 4)
        prefixes = list(search.prefixes(8))
        self.assertTrue(all(len(prefix) == 2 and prefix[0] == 1 for prefix in prefixes))
        self.assertEqual(prefixes, [prefix for prefix, _ in search.iterate(depth_limit=2)])

        assignment, examined_count = search.first_valid()
        self.assertTrue(pattern_valid(search.to_pattern(assignment), [2, 2]))
        self.assertGreaterEqual(examined_count, 1)
        self.assertEqual(PatternSearch([2, 2], 3).first_valid()[0], None)

    def test_packing_parameter(self):
        result = packing_parameter([2, 2])
        self.assertEqual(result.value, 4)
        self.assertEqual(result.lower_bound, 4)
        self.assertTrue(pattern_valid(result.witness, [2, 2]))
        self.assertEqual(sorted(result.examined_from_vertex_count), [1, 2, 3])
        self.assertEqual(result.examined_from_vertex_count[1], 1)

        document = result.to_document()
        self.assertEqual(document['value'], 4)
        self.assertEqual(sorted(document['refutations']), ['1', '2', '3'])

        parallel = packing_parameter([2, 2], jobs=2)
        self.assertEqual(parallel.value, 4)
        self.assertEqual(parallel.witness, result.witness)
        self.assertEqual(parallel.examined_from_vertex_count, result.examined_from_vertex_count)

        self.assertEqual(packing_parameter([2]).value, 2)

        capped = packing_parameter([2, 2], n_max=3)
        self.assertIsNone(capped.value)
        self.assertIsNone(capped.witness)
        self.assertEqual(capped.lower_bound, 4)

        self.assertRaises(SearchCapException, packing_parameter, [2, 2], n_max=9)
        self.assertRaises(PackingException, packing_parameter, [2, 1])

    @unittest.skipUnless(SLOW_TESTS_ENABLED, 'set RAMSEYGADGETS_SLOW_TESTS to run')
    def test_packing_parameter_slow(self):
        self.assertEqual(packing_parameter([3, 2], jobs=2).value, 6)

    def test_packing_bounds(self):
        lower, upper = packing_bounds([2, 2])
        self.assertEqual(lower, 4)
        self.assertEqual(upper['log2'], 32768)
        self.assertEqual(upper['ln'], math.ceil((32 * math.log(2)) ** 3))

        lower, upper = packing_bounds([3, 3, 2])
        self.assertEqual(lower, 9)
        self.assertEqual(upper['log2'], math.ceil((72 * math.log2(3)) ** 3))

        self.assertRaises(PackingException, packing_bounds, [3])
        self.assertRaises(PackingException, packing_bounds, [2, 3])

        self.assertEqual(minimum_degree_bounds(CliqueTuple([3, 3])), packing_bounds([2, 2]))
        self.assertEqual(minimum_degree_bounds(CliqueTuple([4, 3]))[0], 6)
        self.assertRaises(TupleException, minimum_degree_bounds, CliqueTuple([3, 2]))

    def test_hypergraph_family(self):
        family = HypergraphFamily(
            [OrientedHypergraph(4, [(0, 1), (2, 3)]), OrientedHypergraph(4, [(1, 2), (3, 0)])], regularity=1,
        )
        self.assertEqual((family.vertex_count, family.uniformity, family.regularity), (4, 2, 1))

        self.assertRaises(PackingException, HypergraphFamily, [])
        self.assertRaises(
            PackingException, HypergraphFamily, [OrientedHypergraph(4, [(0, 1)]), OrientedHypergraph(5, [(0, 1)])],
        )
        self.assertRaises(
            PackingException, HypergraphFamily, [OrientedHypergraph(4, [(0, 1)]), OrientedHypergraph(4, [(1, 0)])],
        )
        self.assertRaises(PackingException, HypergraphFamily, [OrientedHypergraph(4, [(0, 1), (1, 2)])], regularity=1)

    def test_turan_blowup(self):
        family = HypergraphFamily([OrientedHypergraph(4, [(0, 1, 2, 3)])])
        pattern = turan_blowup(family, [2], seed=0)
        self.assertTrue(iso_equal(pattern.graphs[0], cycle_graph(4)))
        self.assertEqual(pattern, turan_blowup(family, [2], seed=0))
        self.assertTrue(blocks_are_complete_multipartite(pattern, family, [2]))
        self.assertFalse(blocks_are_complete_multipartite(pattern, family, [3]))
        self.assertTrue(components_are_complete_multipartite(pattern, [2]))

        self.assertEqual(turan_blowup_with_retries(family, [2], seed=5), (turan_blowup(family, [2], seed=5), 5))
        self.assertRaises(PackingException, turan_blowup, family, [5], seed=0)

        two_blocks = HypergraphFamily([
            OrientedHypergraph(9, [(0, 1, 2), (3, 4, 5)]),
            OrientedHypergraph(9, [(0, 3, 6), (1, 4, 7)]),
        ])
        pattern = turan_blowup(two_blocks, [3, 2], seed=7)
        self.assertEqual(pattern.graphs[0], Graph(9, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]))
        self.assertEqual(pattern.graphs[1].edge_count, 4)
        self.assertTrue(blocks_are_complete_multipartite(pattern, two_blocks, [3, 2]))
        self.assertTrue(components_are_complete_multipartite(pattern, [3, 2]))

        complete = HypergraphFamily([OrientedHypergraph(4, [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)])])
        self.assertRaises(PackingException, turan_blowup, complete, [3], seed=0)
        self.assertIsNone(turan_blowup_with_retries(complete, [3], seed=0, retries=3))

    def test_components_are_complete_multipartite(self):
        self.assertFalse(components_are_complete_multipartite(ColorPattern(4, [path_graph(3)]), [2]))
        self.assertFalse(components_are_complete_multipartite(ColorPattern(3, [complete_graph(3)]), [2]))
        self.assertTrue(components_are_complete_multipartite(ColorPattern(3, [complete_graph(3)]), [3]))
        self.assertTrue(components_are_complete_multipartite(ColorPattern(5, [Graph(5, [(0, 1)])]), [2]))

    def test_parse_pattern(self):
        text = write_pattern(square_with_diagonals())
        self.assertEqual(text.splitlines()[0], 'pattern 4 2')
        self.assertEqual(parse_pattern(text), square_with_diagonals())
        self.assertEqual(parse_pattern('# two colors\n' + text), square_with_diagonals())

        self.assertRaises(PackingException, parse_pattern, '')
        self.assertRaises(PackingException, parse_pattern, 'pattern 4\nCr\n')
        self.assertRaises(PackingException, parse_pattern, 'pattern 4 2\nCr\n')
        self.assertRaises(PackingException, parse_pattern, 'pattern 4 1\nC~~\n')
        self.assertRaises(PackingException, parse_pattern, 'pattern 5 1\nCr\n')


if __name__ == '__main__':
    unittest.main()
