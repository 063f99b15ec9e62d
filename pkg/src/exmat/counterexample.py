r"""# Counterexample

Exhaustive verification, on finite truncations, that two edge-disjoint
spanning trees $S_0, S_1$ of the infinite graph of `exmat.models.FigureGraph`
with $T_0 \cap S_i = X_i$ are forced into the pattern
$S_0 = X_0 \cup \{e_i\}$, $S_1 = X_1 \cup \{h_i\}$, whose second tree is not
connected: $X_1 \cup \{h_i\}$ consists of two vertex-disjoint rays. Hence the
bipartition $X_0, X_1$ of $T_0$ has no matching bipartition of $T_1$.

A truncation to $N$ vertices cannot contain two spanning trees (it has at
most $2N - 3$ edges), so candidates are required to satisfy the finite
shadow of being a spanning tree of the infinite graph: both sides are
acyclic and every connected component of each side contains a boundary
vertex, i.e. every set of interior vertices has an edge of each side leaving
it.
"""

#   _____ ____  _    _ _   _ _______ ______ _____  ________   __
#  / ____/ __ \| |  | | \ | |__   __|  ____|  __ \|  ____\ \ / /
# | |   | |  | | |  | |  \| |  | |  | |__  | |__) | |__   \ V /
# | |   | |  | | |  | | . ` |  | |  |  __| |  _  /|  __|   > <
# | |___| |__| | |__| | |\  |  | |  | |____| | \ \| |____ / . \
#  \_____\____/ \____/|_| \_|  |_|  |______|_|  \_\______/_/ \_\

# ExMat - Python package for matroid base exchange.

from __future__ import absolute_import, division, print_function

import sys
import time
import warnings

from exmat.models import figure_graph
from exmat.utils.generic_utils import canonical, create_pool
from exmat.utils.graph_utils import UnionFind, get_components, is_forest

__all__ = [
    'AssignmentCandidate',
    'ForcedPrefixReport',
    'enumerate_candidates',
    'interior_cut_condition',
    'is_candidate',
    'max_forced_prefix',
    'verify_forced_prefix',
    'vertex_sets',
    'limit_witness'
]

###############################################################################
# AssignmentCandidate
###############################################################################

class AssignmentCandidate(object):

    """Split of the edges of a truncation into two sides `s0` and `s1` with
    `s0 & T0 = X0` and `s1 & T0 = X1`.
    """

    def __init__(self, s0, s1):
        self.s0 = frozenset(s0)
        self.s1 = frozenset(s1)

    def __eq__(self, other):
        return isinstance(other, AssignmentCandidate) and (self.s0, self.s1) == (other.s0, other.s1)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.s0, self.s1))

    def __repr__(self):
        return 'AssignmentCandidate(s0={}, s1={})'.format(_edge_order(self.s0), _edge_order(self.s1))

    def to_dict(self):
        return {'s0': _edge_order(self.s0), 's1': _edge_order(self.s1)}

# sorts edge labels like 'e10' by family and then index
def _edge_order(labels):
    return sorted(labels, key=lambda l: (l[0], int(l[1:])))

###############################################################################
# Candidate predicates
###############################################################################

def interior_cut_condition(fg, edges):
    """Whether every connected component of the graph formed by `edges` on
    the vertices of the truncation `fg` contains a boundary vertex.
    """

    boundary = set(fg.boundary_vertices)
    return all(boundary.intersection(c) for c in fg.components(edges))

def is_candidate(fg, s0, s1, require_connected=True, boundary_exempt=True):
    """The predicate filtered by `enumerate_candidates`, evaluated directly on
    a split of the edges of the truncation `fg`.
    """

    s0, s1 = frozenset(s0), frozenset(s1)
    if not (fg.x0 <= s0 and fg.x1 <= s1 and not (s0 & s1) and (s0 | s1) == set(fg.labels)):
        return False
    if not (is_forest(fg.graph(s0)) and is_forest(fg.graph(s1))):
        return False
    if not require_connected:
        return True
    if boundary_exempt:
        return interior_cut_condition(fg, s0) and interior_cut_condition(fg, s1)
    return len(fg.components(s0)) == 1 and len(fg.components(s1)) == 1

# the e- and h-edges, interleaved as e0, h0, e1, h1, ...
def _free_edges(fg):
    return [l for pair in zip(fg.e_edges, fg.h_edges) for l in pair]

###############################################################################
# Enumeration
###############################################################################

def _search(n, prefix, require_connected, boundary_exempt):
    """Backtracking over the sides of the free edges with `prefix` fixed.
    Branches closing a cycle are pruned. Returns the candidates, as pairs of
    sorted label lists, and the number of complete assignments checked.
    """

    fg = figure_graph(n)
    free = _free_edges(fg)
    boundary = set(fg.boundary_vertices)

    ufs = (UnionFind(fg.vertices), UnionFind(fg.vertices))
    sides = (set(fg.x0), set(fg.x1))
    for side in (0, 1):
        for label in sides[side]:
            ufs[side].union(*fg.endpoints[label])

    candidates, checked = [], [0]

    def leaf():
        checked[0] += 1
        if require_connected:
            for uf in ufs:
                roots = uf.roots()
                if boundary_exempt:
                    if set(roots.values()) != set(roots[v] for v in boundary):
                        return
                elif len(set(roots.values())) != 1:
                    return
        candidates.append((sorted(sides[0]), sorted(sides[1])))

    def assign(depth):
        if depth == len(free):
            leaf()
            return
        label = free[depth]
        forced = prefix[depth] if depth < len(prefix) else None
        for side in (0, 1):
            if forced is not None and side != forced:
                continue
            if ufs[side].union(*fg.endpoints[label]):
                sides[side].add(label)
                assign(depth + 1)
                sides[side].remove(label)
                ufs[side].rollback()

    assign(0)
    return candidates, checked[0]

# picklable entry point for the process pool
def _search_worker(args):
    return _search(*args)

def _prefixes(length):
    if length == 0:
        return [()]
    return [p + (side,) for p in _prefixes(length - 1) for side in (0, 1)]

def _enumerate(n, require_connected, boundary_exempt, n_jobs):
    fg = figure_graph(n)
    nfree = len(_free_edges(fg))

    # split the search by the sides of the first few free edges
    if n_jobs != 1 and nfree > 0:
        depth = min(nfree, 4)
        tasks = [(n, p, require_connected, boundary_exempt) for p in _prefixes(depth)]
        with create_pool(n_jobs) as pool:
            results = pool.map(_search_worker, tasks)
    else:
        results = [_search(n, (), require_connected, boundary_exempt)]

    candidates = [AssignmentCandidate(s0, s1) for cands,_ in results for s0,s1 in cands]
    checked = sum(c for _,c in results)

    return candidates, checked

def enumerate_candidates(n, require_connected, boundary_exempt=True, n_jobs=1):
    """All assignments of the e- and h-edges of the truncation to two sides
    such that both sides are acyclic and contain `X0` and `X1` respectively.

    **Arguments**

    - **n** : _int_
        - Number of vertices of the truncation, at least 4.
    - **require_connected** : _bool_
        - Whether both sides must also be connected. By default this means
        every component of either side contains a boundary vertex; with
        `boundary_exempt=False` it means spanning trees of the truncation,
        which never exist.
    - **boundary_exempt** : _bool_
        - Selects the connectivity requirement as above.
    - **n_jobs** : _int_
        - Number of worker processes; `None` uses all CPUs.

    **Returns**

    - _list_ of `AssignmentCandidate`
        - In search order, side `s0` tried first for each free edge.
    """

    return _enumerate(n, require_connected, boundary_exempt, n_jobs)[0]

###############################################################################
# ForcedPrefixReport
###############################################################################

class ForcedPrefixReport(object):

    """Outcome of `verify_forced_prefix`."""

    def __init__(self, n, k, candidates, assignments_checked, boundary_vertices, vertex_sets, component_count):
        self.n = n
        self.k = k
        self.candidates = list(candidates)
        self.assignments_checked = assignments_checked
        self.boundary_vertices = list(boundary_vertices)
        self.vertex_sets = [list(v) for v in vertex_sets]
        self.component_count = component_count

        self.forced_s0 = ['e{}'.format(i) for i in range(k)]
        self.forced_s1 = ['h{}'.format(i) for i in range(k)]
        self.violations = [c for c in self.candidates
                           if not (set(self.forced_s0) <= c.s0 and set(self.forced_s1) <= c.s1)]

    @property
    def candidate_count(self):
        return len(self.candidates)

    @property
    def vacuous(self):
        return len(self.candidates) == 0

    @property
    def passed(self):
        return not self.vacuous and len(self.violations) == 0

    def __repr__(self):
        return 'ForcedPrefixReport(n={}, k={}, candidates={}, passed={})'.format(
               self.n, self.k, self.candidate_count, self.passed)

    def to_dict(self):
        return {'n': self.n, 'k': self.k,
                'candidate_count': self.candidate_count,
                'assignments_checked': self.assignments_checked,
                'candidates': [c.to_dict() for c in self.candidates],
                'forced_s0': self.forced_s0, 'forced_s1': self.forced_s1,
                'violations': [c.to_dict() for c in self.violations],
                'boundary_vertices': self.boundary_vertices,
                'vertex_sets': self.vertex_sets,
                'component_count': self.component_count,
                'vacuous': self.vacuous, 'passed': self.passed}

def max_forced_prefix(n):
    """Largest `k` for which the cuts forcing `e_i` and `h_i`, `i < k`, only
    involve interior vertices of the truncation to `n` vertices.
    """

    return max((n - 2)//2, 0)

def vertex_sets(k):
    """The vertex sets `V_j`, `j < k - 1`, enclosed by `X1 | {h_i : i <= j}`
    just before `h_{j+1}` is forced. `V_j` consists of the vertices
    `2j + 2 - 4i` for `0 <= i <= (j + 1)/2` and `2j + 1 - 4i` for
    `0 <= i <= j/2`, skipping negative indices.
    """

    sets = []
    for j in range(max(k - 1, 0)):
        vs = [2*j + 2 - 4*i for i in range((j + 1)//2 + 1)] + [2*j + 1 - 4*i for i in range(j//2 + 1)]
        sets.append(sorted(v for v in vs if v >= 0))
    return sets

def verify_forced_prefix(n, k=None, n_jobs=1, verbose=False):
    """Checks that every candidate forces `h_i` into `s1` and `e_i` into
    `s0` for all `i < k`.

    **Arguments**

    - **n** : _int_
        - Number of vertices of the truncation, at least 4.
    - **k** : _int_ or `None`
        - Length of the prefix to check, at most `max_forced_prefix(n)`,
        which is the default.
    - **n_jobs** : _int_
        - Number of worker processes for the enumeration.
    - **verbose** : _bool_
        - Whether to print timing information to stderr.

    **Returns**

    - `ForcedPrefixReport`
        - With `passed` set only if there is at least one candidate and all
        candidates follow the forced pattern. A vacuous check also emits a
        warning.
    """

    start = time.time()
    fg = figure_graph(n)
    kmax = max_forced_prefix(n)
    if k is None:
        k = kmax
    if not 0 <= k <= kmax:
        raise ValueError('k must be between 0 and {} for n = {}, got {}'.format(kmax, n, k))

    candidates, checked = _enumerate(n, True, True, n_jobs)
    if verbose:
        print('Checked {} assignments for n = {}, found {} candidates in {:.3f}s'.format(
              checked, n, len(candidates), time.time() - start), file=sys.stderr)

    report = ForcedPrefixReport(n, k, candidates, checked, fg.boundary_vertices, vertex_sets(k),
                                limit_witness(n) if n >= 5 else None)
    if report.vacuous:
        warnings.warn('no candidates for n = {}, the forced prefix check is vacuous'.format(n))

    return report

###############################################################################
# Limit witness
###############################################################################

def limit_witness(n):
    """Number of connected components of `X1 | {h_i}` over the vertices it
    covers. Equal to 2 for every `n >= 5`: the forced second side splits into
    two disjoint rays.
    """

    if n < 5:
        raise ValueError('limit_witness requires n >= 5, got {}'.format(n))
    fg = figure_graph(n)
    return len(get_components(fg.graph(canonical(fg.x1 | set(fg.h_edges)))))
