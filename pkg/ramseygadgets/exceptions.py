"""
# Ramsey Gadgets: exceptions.py

Licensed under "MIT No Attribution" (MIT-0), see LICENSE.

Exception classes.
"""


class GraphException(Exception):
    pass


class Graph6Exception(GraphException):
    def __init__(self, message, offset):
        super().__init__(f'{message} (byte offset {offset})')
        self._offset = offset

    @property
    def offset(self):
        return self._offset


class EdgeListException(GraphException):
    def __init__(self, message, line_number):
        super().__init__(f'line {line_number}: {message}')
        self._line_number = line_number

    @property
    def line_number(self):
        return self._line_number


class CanonicalFormCapException(GraphException):
    pass


class TupleException(Exception):
    pass


class ColoringException(Exception):
    pass


class ColoringConflictException(ColoringException):
    def __init__(self, message, clique):
        super().__init__(message)
        self._clique = clique

    @property
    def clique(self):
        return self._clique


class NotRamseyException(Exception):
    pass


class GadgetException(Exception):
    pass


class ConstructionException(Exception):
    pass


class HypergraphException(Exception):
    pass


class PackingException(Exception):
    pass


class SearchCapException(Exception):
    def __init__(self, message, cap):
        super().__init__(message)
        self._cap = cap

    @property
    def cap(self):
        return self._cap
