r"""# Matroid Models

Concrete matroid families: uniform, graphic, GF(2)-linear, free and explicit
matroids, seeded random instances, and the truncations of the infinite graph
on which edge-disjoint spanning trees cannot be exchanged (see
`exmat.counterexample`).
"""

#  __  __  ____  _____  ______ _       _____
# |  \/  |/ __ \|  __ \|  ____| |     / ____|
# | \  / | |  | | |  | | |__  | |    | (___
# | |\/| | |  | | |  | |  __| | |     \___ \
# | |  | | |__| | |__| | |____| |____ ____) |
# |_|  |_|\____/|_____/|______|______|_____/

# ExMat - Python package for matroid base exchange.

from __future__ import absolute_import, division, print_function

import itertools
import string

import numpy as np

from exmat.algorithms.gf2 import gf2_rank
from exmat.matroid import Matroid
from exmat.utils.data_utils import FormatError, check_matroid_document
from exmat.utils.generic_utils import DEFAULT_EDGE_PROB, DEFAULT_GF2_ROWS, canonical, kwargs_check
from exmat.utils.graph_utils import UnionFind, get_components

__all__ = [
    'MultiGraph',
    'UniformMatroid',
    'GraphicMatroid',
    'Gf2Matroid',
    'FreeMatroid',
    'ExplicitMatroid',
    'FigureGraph',
    'uniform_matroid',
    'graphic_matroid',
    'gf2_matroid',
    'free_matroid',
    'explicit_matroid',
    'complete_graph',
    'figure_graph',
    'matroid_from_dict',
    'random_instance'
]

###############################################################################
# MultiGraph
###############################################################################

class MultiGraph(object):

    """A finite multigraph with labelled edges. Loops and parallel edges are
    allowed.
    """

    def __init__(self, vertices, edges):
        """**Arguments**

        - **vertices** : _int_ or iterable
            - Either the number of vertices, in which case the vertices are
            `0, ..., vertices-1`, or the vertex labels themselves.
        - **edges** : iterable of `(label, u, v)`
            - The edges with unique labels and declared endpoints.
        """

        if isinstance(vertices, int):
            vertices = range(vertices)
        self.vertices = tuple(vertices)
        self.edges = tuple((label, u, v) for label, u, v in edges)

        vertex_set = set(self.vertices)
        if len(vertex_set) != len(self.vertices):
            raise ValueError('duplicate vertices')
        self.endpoints = {}
        for label, u, v in self.edges:
            if label in self.endpoints:
                raise ValueError('duplicate edge label {!r}'.format(label))
            if u not in vertex_set or v not in vertex_set:
                raise ValueError('edge {!r} has an undeclared endpoint'.format(label))
            self.endpoints[label] = (u, v)

    @property
    def labels(self):
        return tuple(label for label, u, v in self.edges)

    def graph(self, labels=None):
        """The edges with the given labels (all edges by default) in the
        standard graph form of `exmat.utils.graph_utils`.
        """

        if labels is None:
            labels = self.labels
        return [self.endpoints[label] for label in labels]

    def components(self, labels=None):
        """Connected components over all vertices of the graph formed by the
        edges with the given labels.
        """

        return get_components(self.graph(labels), self.vertices)

    def to_dict(self):
        if self.vertices != tuple(range(len(self.vertices))):
            return None
        return {'type': 'graphic', 'vertices': len(self.vertices),
                'edges': [[u, v, label] for label, u, v in self.edges]}

###############################################################################
# Matroid families
###############################################################################

class UniformMatroid(Matroid):

    """The uniform matroid U(r, n): sets of size at most `rank`."""

    def __init__(self, rank, ground):

        ground = list(ground)
        super(UniformMatroid, self).__init__(ground)
        if not 0 <= rank <= len(ground):
            raise ValueError('rank {} out of range for {} elements'.format(rank, len(ground)))
        self.r = rank
        self._order = ground

    def _independent(self, s):
        return len(s) <= self.r

    def description(self):
        return 'U({},{})'.format(self.r, len(self._order))

    def to_dict(self):
        return {'type': 'uniform', 'rank': self.r, 'ground': list(self._order)}

class GraphicMatroid(Matroid):

    """Cycle matroid of a multigraph: edge sets containing no cycle. Loops
    are dependent and parallel edges form circuits of size two.
    """

    def __init__(self, graph):

        super(GraphicMatroid, self).__init__(graph.labels)
        self.graph = graph

    def _independent(self, s):
        uf = UnionFind()
        endpoints = self.graph.endpoints
        return all(uf.union(*endpoints[e]) for e in s)

    def description(self):
        return 'graphic({} vertices, {} edges)'.format(len(self.graph.vertices), len(self.graph.edges))

    def to_dict(self):
        return self.graph.to_dict()

class Gf2Matroid(Matroid):

    """Linear matroid of the columns of a binary matrix over GF(2)."""

    def __init__(self, columns):

        columns = dict(columns)
        super(Gf2Matroid, self).__init__(columns.keys())
        lengths = set(len(bits) for bits in columns.values())
        if len(lengths) > 1:
            raise ValueError('columns have different lengths')
        self.nrows = lengths.pop() if len(lengths) else 0

        self.columns = columns
        self._index = {e: j for j,e in enumerate(self.elements)}
        matrix = np.zeros((self.nrows, len(self.elements)), dtype=np.uint8)
        for e, j in self._index.items():
            bits = np.asarray(columns[e], dtype=np.int64)
            if np.any((bits != 0) & (bits != 1)):
                raise ValueError('column {!r} is not a bit vector'.format(e))
            matrix[:,j] = bits
        self.matrix = matrix

    def _independent(self, s):
        if len(s) > self.nrows:
            return False
        cols = sorted(self._index[e] for e in s)
        return gf2_rank(self.matrix[:,cols]) == len(cols)

    def description(self):
        return 'gf2({}x{})'.format(self.nrows, len(self.elements))

    def to_dict(self):
        if not all(isinstance(e, str) for e in self.elements):
            return None
        return {'type': 'gf2', 'columns': {e: [int(b) for b in self.columns[e]] for e in self.elements}}

class FreeMatroid(Matroid):

    """The free matroid in which every set is independent."""

    def __init__(self, ground):

        ground = list(ground)
        super(FreeMatroid, self).__init__(ground)
        self._order = ground

    def _independent(self, s):
        return True

    def description(self):
        return 'free({})'.format(len(self._order))

    def to_dict(self):
        return {'type': 'free', 'ground': list(self._order)}

class ExplicitMatroid(Matroid):

    """A set system given by the list of its independent sets. It need not
    satisfy the matroid axioms, which makes it useful for exercising the
    axiom checker.
    """

    def __init__(self, ground, independent_sets):

        ground = list(ground)
        super(ExplicitMatroid, self).__init__(ground)
        self._order = ground
        self._sets = [list(s) for s in independent_sets]
        self.family = frozenset(frozenset(s) for s in self._sets)
        for s in self.family:
            if not s <= self.ground:
                raise ValueError('independent set {} is not a subset of ground'.format(canonical(s)))

    def _independent(self, s):
        return s in self.family

    def description(self):
        return 'explicit({} elements, {} sets)'.format(len(self._order), len(self.family))

    def to_dict(self):
        return {'type': 'explicit', 'ground': list(self._order),
                'independent': [list(s) for s in self._sets]}

###############################################################################
# Constructors
###############################################################################

def uniform_matroid(rank, ground):
    """Uniform matroid of the given rank. `ground` may be an integer `n`, in
    which case the labels are the first `n` lowercase letters.
    """

    if isinstance(ground, int):
        ground = _labels(ground)
    return UniformMatroid(rank, ground)

def graphic_matroid(graph):
    return GraphicMatroid(graph)

def gf2_matroid(columns):
    """Linear matroid over GF(2).

    **Arguments**

    - **columns** : _dict_
        - Map from labels to bit vectors of one common length.

    **Returns**

    - _Gf2Matroid_
    """

    return Gf2Matroid(columns)

def free_matroid(ground):
    return FreeMatroid(ground)

def explicit_matroid(ground, independent_sets):
    return ExplicitMatroid(ground, independent_sets)

def complete_graph(n):
    """Graphic matroid of the complete graph on vertices `1, ..., n`. The
    edge joining `i < j` is labelled `'ij'`, so `n` is at most 9.
    """

    if not 0 <= n <= 9:
        raise ValueError('complete_graph supports 0 <= n <= 9')
    edges = [('{}{}'.format(i+1, j+1), i, j) for i,j in itertools.combinations(range(n), 2)]
    return GraphicMatroid(MultiGraph(n, edges))

def matroid_from_dict(doc):
    """Builds a matroid from a matroid file document, see
    `exmat.utils.data_utils.check_matroid_document` for the accepted formats.
    Raises `FormatError` for malformed documents.
    """

    check_matroid_document(doc)
    kind = doc['type']
    try:
        if kind == 'uniform':
            return UniformMatroid(doc['rank'], doc['ground'])
        if kind == 'graphic':
            return GraphicMatroid(MultiGraph(doc['vertices'], [(l, u, v) for u, v, l in doc['edges']]))
        if kind == 'gf2':
            return Gf2Matroid(doc['columns'])
        if kind == 'free':
            return FreeMatroid(doc['ground'])
        return ExplicitMatroid(doc['ground'], doc['independent'])
    except ValueError as e:
        raise FormatError(str(e))

def random_instance(kind, size, seed, **kwargs):
    """Seeded random matroid, identical on every run for the same arguments.

    **Arguments**

    - **kind** : {`'uniform'`, `'graphic'`, `'gf2'`}
        - `'uniform'` draws U(r, size) with r uniform in `0, ..., size`.
        `'graphic'` takes the smallest vertex count `v` with at least `size`
        vertex pairs, keeps each pair independently with probability
        `edge_prob` and retains the first `size` kept pairs.
        `'gf2'` draws `size` uniformly random columns with `rows` bits.
    - **size** : _int_
        - Upper bound on the size of the ground set.
    - **seed** : _int_
        - Seed for `numpy.random.default_rng`.
    - **edge_prob** : _float_
        - Edge probability for graphic instances.
    - **rows** : _int_
        - Column length for gf2 instances.

    **Returns**

    - _Matroid_
        - Ground labels are lowercase letters (or `'e00'`, `'e01'`, ... above
        26 elements).
    """

    kwargs_check('random_instance', kwargs, allowed=['edge_prob', 'rows'])
    edge_prob = kwargs.get('edge_prob', DEFAULT_EDGE_PROB)
    rows = kwargs.get('rows', DEFAULT_GF2_ROWS)
    if size < 0:
        raise ValueError('size must be non-negative')

    rng = np.random.default_rng(seed)
    labels = _labels(size)

    if kind == 'uniform':
        return UniformMatroid(int(rng.integers(0, size + 1)), labels)

    if kind == 'graphic':
        v = 0
        while v*(v - 1)//2 < size:
            v += 1
        pairs = list(itertools.combinations(range(v), 2))
        mask = rng.random(len(pairs)) < edge_prob
        kept = [pair for pair,m in zip(pairs, mask) if m][:size]
        return GraphicMatroid(MultiGraph(v, [(label, u, w) for label,(u, w) in zip(labels, kept)]))

    if kind == 'gf2':
        matrix = rng.integers(0, 2, size=(rows, size))
        return Gf2Matroid({label: [int(b) for b in matrix[:,j]] for j,label in enumerate(labels)})

    raise ValueError('unknown random instance kind {!r}'.format(kind))

# element labels in canonical order
def _labels(size):
    if size <= 26:
        return list(string.ascii_lowercase[:size])
    width = len(str(size - 1))
    return ['e{}'.format(str(i).zfill(width)) for i in range(size)]

###############################################################################
# FigureGraph
###############################################################################

class FigureGraph(MultiGraph):

    """Finite truncation to the vertices `0, ..., N-1` of the infinite graph
    with edges

    - `f_k = {k, k+1}`
    - `e_k = {2k+1, 2k+3}`
    - `h_k = {2k, 2k+3}`

    labelled `'f0'`, `'e0'`, `'h0'`, ... An edge is kept iff both of its
    endpoints exist. In the infinite graph the f-edges form the spanning tree
    `T0` and the e- and h-edges form the spanning tree `T1`; the even and odd
    f-edges form the bipartition `X0`, `X1` of `T0`.
    """

    def __init__(self, n):

        if n < 4:
            raise ValueError('figure_graph requires n >= 4, got {}'.format(n))
        self.n = n

        self.f_edges = ['f{}'.format(k) for k in range(n - 1)]
        self.e_edges = ['e{}'.format(k) for k in range((n - 2)//2)]
        self.h_edges = ['h{}'.format(k) for k in range((n - 2)//2)]

        edges = [('f{}'.format(k), k, k + 1) for k in range(n - 1)]
        edges += [('e{}'.format(k), 2*k + 1, 2*k + 3) for k in range((n - 2)//2)]
        edges += [('h{}'.format(k), 2*k, 2*k + 3) for k in range((n - 2)//2)]
        super(FigureGraph, self).__init__(n, edges)

        self.t0 = frozenset(self.f_edges)
        self.t1 = frozenset(self.e_edges + self.h_edges)
        self.x0 = frozenset(self.f_edges[::2])
        self.x1 = frozenset(self.f_edges[1::2])

        # a vertex is interior iff all of its edges in the infinite graph are present
        self.interior_vertices = tuple(v for v in self.vertices if v + (3 if v % 2 == 0 else 2) <= n - 1)
        self.boundary_vertices = tuple(v for v in self.vertices if v not in self.interior_vertices)

    def tree_truncations(self):
        """The truncations of `T0` and `T1` as a pair of `frozenset`s."""

        return self.t0, self.t1

    def matroid(self):
        return GraphicMatroid(self)

def figure_graph(n):
    """Truncation of the counterexample graph to `n` vertices, see
    `FigureGraph`. Raises `ValueError` for `n < 4`.
    """

    return FigureGraph(n)
