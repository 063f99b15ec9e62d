"""Various useful functions on graphs."""

#   _____ _____            _____  _    _          _    _ _______ _____ _       _____
#  / ____|  __ \     /\   |  __ \| |  | |        | |  | |__   __|_   _| |     / ____|
# | |  __| |__) |   /  \  | |__) | |__| |        | |  | |  | |    | | | |    | (___
# | | |_ |  _  /   / /\ \ |  ___/|  __  |        | |  | |  | |    | | | |     \___ \
# | |__| | | \ \  / ____ \| |    | |  | | ______ | |__| |  | |   _| |_| |____ ____) |
#  \_____|_|  \_\/_/    \_\_|    |_|  |_||______| \____/   |_|  |_____|______|_____/

# ExMat - Python package for matroid base exchange.

from __future__ import absolute_import

from collections import Counter, defaultdict

__all__ = [
    'UnionFind',
    'get_components',
    'get_valency_structure',
    'is_forest'
]

# standard graph form:
#   - a graph is a list of tuples
#   - each tuple in the list corresponds to an edge,
#     specified by a pair of hashable vertex labels
#   - the same edge may appear more than once, in which
#     case the graph is a multigraph
#   - a tuple (v, v) is a loop
#
# each of the functions below operates on graphs assumed
# to be in this standard form

###############################################################################
# UnionFind
###############################################################################

class UnionFind(object):

    """Disjoint-set forest over hashable vertices with union by size. Path
    compression is not used so that unions can be undone in LIFO order with
    `rollback`, which backtracking searches rely on.
    """

    def __init__(self, vertices=()):
        self._parent = {}
        self._size = {}
        self._history = []
        for v in vertices:
            self.add(v)

    def add(self, v):
        if v not in self._parent:
            self._parent[v] = v
            self._size[v] = 1
        return v

    def find(self, v):
        self.add(v)
        while self._parent[v] != v:
            v = self._parent[v]
        return v

    def union(self, u, v):
        """Merges the classes of `u` and `v`. Returns `False` without changing
        anything if they already share a class, i.e. if the edge `(u, v)`
        would close a cycle.
        """

        ru, rv = self.find(u), self.find(v)
        if ru == rv:
            return False
        if self._size[ru] < self._size[rv]:
            ru, rv = rv, ru
        self._parent[rv] = ru
        self._size[ru] += self._size[rv]
        self._history.append(rv)
        return True

    def rollback(self):
        """Undoes the most recent successful `union`."""

        rv = self._history.pop()
        ru = self._parent[rv]
        self._parent[rv] = rv
        self._size[ru] -= self._size[rv]

    def roots(self):
        return {v: self.find(v) for v in self._parent}

def get_components(graph, vertices=()):
    """Returns a list of lists of vertices in each connected component of the
    graph. Isolated `vertices` may be passed explicitly, otherwise only the
    vertices touched by some edge are considered.
    """

    vds = get_valency_structure(graph)
    for v in vertices:
        vds.setdefault(v, Counter())

    verts = set(vds.keys())
    components = []
    while len(verts):
        i = 0
        component = [verts.pop()]
        while i < len(component):

            # append all vertices touched by the present one that haven't already been visited
            for v in vds[component[i]]:
                if v in verts:
                    verts.remove(v)
                    component.append(v)
            i += 1
        components.append(component)

    return components

def get_valency_structure(graph):
    """Maps each vertex to a `Counter` of its neighbours, so that parallel
    edges are counted. A loop counts twice at its vertex.
    """

    adjacency = defaultdict(Counter)
    for u, v in graph:
        adjacency[u][v] += 1
        adjacency[v][u] += 1
    return dict(adjacency)

def is_forest(graph):
    """Whether the graph contains no cycle. Loops and repeated edges count as
    cycles.
    """

    uf = UnionFind()
    return all(uf.union(u, v) for u, v in graph)
