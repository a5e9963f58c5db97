"""
# Ramsey Gadgets: formats.py

Licensed under "MIT No Attribution" (MIT-0), see LICENSE.

Graph serialisation (graph6 and edge lists).
"""

import re

import networkx as nx

from ramseygadgets.constants import ADJACENCY_VERTEX_CAP
from ramseygadgets.exceptions import EdgeListException, Graph6Exception
from ramseygadgets.graphs import Graph


class Graph6Master:
    """
    Static class validating and converting the graph6 format.

    A graph6 string is «size»«data», every byte lying between `?` (63) and `~` (126).
    «size» is one byte n+63 for n ≤ 62, or `~` followed by three size bytes (18 bits) for n ≤ 258047,
    or `~~` followed by six size bytes (36 bits) beyond that.
    «data» is the upper triangle of the adjacency matrix, column by column
    (x(0,1), x(0,2), x(1,2), x(0,3), ...), six bits per byte, zero-padded.

    Validation is done here so that every error can carry a byte offset;
    the bit-level conversion itself is delegated to networkx.
    """
    def __new__(cls):
        raise TypeError('Graph6Master cannot be instantiated')

    HEADER = '>>graph6<<'
    _BYTE_MIN = 63
    _BYTE_MAX = 126

    @staticmethod
    def _read_size(data, offset):
        def read_bytes(start, count):
            if len(data) < start + count:
                raise Graph6Exception('truncated size field', len(data) + offset)
            value = 0
            for byte in data[start:start + count]:
                value = value << 6 | byte - Graph6Master._BYTE_MIN
            return value

        if len(data) == 0:
            raise Graph6Exception('truncated: empty graph6 string', offset)

        if data[0] != Graph6Master._BYTE_MAX:
            return data[0] - Graph6Master._BYTE_MIN, 1
        if len(data) > 1 and data[1] == Graph6Master._BYTE_MAX:
            return read_bytes(2, 6), 8

        return read_bytes(1, 3), 4

    @staticmethod
    def parse(string):
        """
        Parse a graph6 string (trailing whitespace and an optional `>>graph6<<` header allowed).
        """
        string = string.rstrip()
        offset = 0
        if string.startswith(Graph6Master.HEADER):
            string = string[len(Graph6Master.HEADER):]
            offset = len(Graph6Master.HEADER)

        data = string.encode()
        for index, byte in enumerate(data):
            if not Graph6Master._BYTE_MIN <= byte <= Graph6Master._BYTE_MAX:
                raise Graph6Exception(f'byte {byte} out of range 63..126', offset + index)

        vertex_count, size_length = Graph6Master._read_size(data, offset)
        if vertex_count > ADJACENCY_VERTEX_CAP:
            raise Graph6Exception(f'vertex count {vertex_count} exceeds the cap {ADJACENCY_VERTEX_CAP}', offset)

        bit_count = vertex_count * (vertex_count - 1) // 2
        expected_length = size_length + (bit_count + 5) // 6
        if len(data) < expected_length:
            raise Graph6Exception(
                f'truncated bitstream: {vertex_count} vertices need {expected_length} bytes, got {len(data)}',
                offset + len(data),
            )
        if len(data) > expected_length:
            raise Graph6Exception(f'unexpected trailing bytes after {expected_length} bytes', offset + expected_length)

        return Graph.from_networkx(nx.from_graph6_bytes(data))

    @staticmethod
    def write(graph):
        return nx.to_graph6_bytes(graph.to_networkx(), header=False).decode().rstrip('\n')


def parse_graph6(string):
    return Graph6Master.parse(string)


def write_graph6(graph):
    return Graph6Master.write(graph)


def _significant_lines(string):
    for line_number, line in enumerate(string.splitlines(), start=1):
        line = line.strip()
        if line == '' or line.startswith('#'):
            continue
        yield line_number, line


def parse_edge_list(string):
    """
    Parse whitespace-separated `u v` pairs, one per line.

    An optional first line consisting of a single integer fixes the vertex count;
    otherwise the vertex count is one more than the largest label.
    """
    declared_vertex_count = None
    edges = []
    for line_number, line in _significant_lines(string):
        fields = line.split()
        if not all(re.fullmatch(pattern='[0-9]+', string=field) for field in fields):
            raise EdgeListException(f'expected nonnegative integers, got `{line}`', line_number)

        if len(fields) == 1 and declared_vertex_count is None and not edges:
            declared_vertex_count = int(fields[0])
            continue
        if len(fields) != 2:
            raise EdgeListException(f'expected a pair `u v`, got `{line}`', line_number)

        u, v = int(fields[0]), int(fields[1])
        if u == v:
            raise EdgeListException(f'self-loop at vertex {u}', line_number)
        if declared_vertex_count is not None and max(u, v) >= declared_vertex_count:
            raise EdgeListException(f'vertex label out of range for {declared_vertex_count} vertices', line_number)
        edges.append((u, v))

    if declared_vertex_count is None:
        declared_vertex_count = max((max(edge) for edge in edges), default=-1) + 1

    return Graph(declared_vertex_count, edges)


def write_edge_list(graph):
    lines = [str(graph.vertex_count)]
    lines.extend(f'{u} {v}' for u, v in graph.edges)
    return '\n'.join(lines) + '\n'


def parse_graph_text(string):
    """
    Parse a graph given either as graph6 or as an edge list.
    """
    first_line = next((line for _, line in _significant_lines(string)), '')
    if re.fullmatch(pattern=r'[0-9]+ (?: \s+ [0-9]+ )?', string=first_line, flags=re.VERBOSE):
        return parse_edge_list(string)

    return parse_graph6(first_line)
