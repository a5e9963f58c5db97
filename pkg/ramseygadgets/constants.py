"""
# Ramsey Gadgets: constants.py

Licensed under "MIT No Attribution" (MIT-0), see LICENSE.

Constants.
"""

SUCCESS_EXIT_CODE = 0
NEGATIVE_RESULT_EXIT_CODE = 1
COMMAND_LINE_ERROR_EXIT_CODE = 2

ADJACENCY_VERTEX_CAP = 1024
CANONICAL_FORM_VERTEX_CAP = 16
FORBIDDEN_PATTERN_DEGREE_CAP = 8
GIRTH_SUBSET_CAP = 6
DEFAULT_GIRTH_BOUND = 3
PACKING_VERTEX_CAP = 8
MINIMAL_ENUMERATION_VERTEX_CAP = 8
RAMSEY_NUMBER_VERTEX_CAP = 10
DEFAULT_SEARCH_BUDGET = 100_000
DEFAULT_BLOWUP_RETRY_CAP = 16
DEFAULT_SEED = 0

# Subtree prefixes handed to each worker when the coloring search fans out.
PREFIXES_PER_WORKER = 4

DETERMINER_SAFENESS_LEMMA = 'every set-determiner for a tuple of cliques is safe'
SENDER_SAFENESS_LEMMA = 'set-senders whose signal edges are at distance at least three are safe'
SENDER_SAFE_DISTANCE = 3

GRAPH_FILE_FORMAT_HELP = '''\
A graph file must be in one of the following formats:
(1) graph6, a single line, optionally preceded by the header `>>graph6<<`;
(2) an edge list, one `u v` pair per line, vertex labels 0-based.
- Note for (2): an optional first line consisting of a single integer
  fixes the vertex count, so that isolated vertices can be kept.
- Note for (2): blank lines and lines beginning with `#` are ignored.
'''

HYPERGRAPH_FILE_FORMAT_HELP = '''\
A hypergraph file must consist of:
(1) a header line `n l` (vertex count and uniformity);
(2) one arc per line, as `l` space-separated vertex labels;
(3) optionally, a line `distinguished u u'`.
'''

DETERMINER_KIND = 'determiner'
SENDER_KIND = 'sender'
POSITIVE_POLARITY = 'positive'
NEGATIVE_POLARITY = 'negative'

SAFE_STATUS = 'safe'
UNKNOWN_STATUS = 'unknown'
NO_EXTENSION_VERDICT = 'no extension'
