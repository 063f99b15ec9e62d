r"""# Matroid Union

Covering a common ground set by disjoint independent sets of several
matroids. Given matroids $M_0, \ldots, M_{k-1}$ on a ground set $E$ and
pairwise disjoint sets $I_i$ independent in $M_i$, `try_augment` either
covers one more element by shifting elements between the parts along a
shortest path of the exchange digraph, or returns a blocking set $S$
containing every uncovered element such that $I_i \cap S$ spans $S$ in $M_i$
for every $i$. In the second case no family of disjoint independent sets
covers more elements.
"""

#  _    _ _   _ _____ ____  _   _
# | |  | | \ | |_   _/ __ \| \ | |
# | |  | |  \| | | || |  | |  \| |
# | |  | | . ` | | || |  | | . ` |
# | |__| | |\  |_| || |__| | |\  |
#  \____/|_| \_|_____\____/|_| \_|

# ExMat - Python package for matroid base exchange.

from __future__ import absolute_import, division, print_function

from collections import deque
import sys
import time

from exmat.matroid import invariant
from exmat.utils.generic_utils import InvariantViolation, PreconditionError, canonical

__all__ = [
    'CoverState',
    'AugmentOutcome',
    'exchange_digraph',
    'try_augment',
    'cover_or_block',
    'verify_blocker',
    'max_cover'
]

###############################################################################
# CoverState
###############################################################################

class CoverState(object):

    """Matroids on a common ground set together with pairwise disjoint parts,
    part `i` independent in matroid `i`. Immutable.
    """

    def __init__(self, matroids, parts=None):
        """**Arguments**

        - **matroids** : _list_ of `Matroid`
            - Matroids sharing one ground set.
        - **parts** : _list_ of sets or `None`
            - One part per matroid, empty by default.

        Raises `ValueError` if the ground sets differ, the parts overlap, or a
        part is not independent in its matroid.
        """

        self.matroids = tuple(matroids)
        if len(self.matroids) == 0:
            raise ValueError('at least one matroid is required')
        self.ground = self.matroids[0].ground
        if any(m.ground != self.ground for m in self.matroids):
            raise ValueError('matroids must share a common ground set')

        if parts is None:
            parts = [()]*len(self.matroids)
        self.parts = tuple(frozenset(p) for p in parts)
        if len(self.parts) != len(self.matroids):
            raise ValueError('expected {} parts, got {}'.format(len(self.matroids), len(self.parts)))

        covered = set()
        for i,(m, part) in enumerate(zip(self.matroids, self.parts)):
            if covered & part:
                raise ValueError('parts are not pairwise disjoint')
            if not m.is_independent(part):
                raise ValueError('part {} is not independent in {}'.format(i, m.describe()))
            covered |= part

        self.covered = frozenset(covered)
        self.uncovered = self.ground - self.covered

    def __repr__(self):
        return 'CoverState(parts={}, uncovered={})'.format([list(canonical(p)) for p in self.parts],
                                                           list(canonical(self.uncovered)))

    @property
    def k(self):
        return len(self.matroids)

    def part_of(self):
        """Map from covered elements to the index of their part."""

        return {e: i for i,part in enumerate(self.parts) for e in part}

    def replace(self, parts):
        return CoverState(self.matroids, parts)

###############################################################################
# AugmentOutcome
###############################################################################

class AugmentOutcome(object):

    """Result of `try_augment`: either new parts covering one more element
    (`augmented` is `True`) or a blocking set.
    """

    def __init__(self, parts=None, blocker=None, element=None, path=None):
        self.parts = parts
        self.blocker = blocker
        self.element = element
        self.path = path

    @property
    def augmented(self):
        return self.parts is not None

    def __repr__(self):
        if self.augmented:
            return 'AugmentOutcome(element={!r}, path={})'.format(self.element, self.path)
        return 'AugmentOutcome(blocker={})'.format(list(canonical(self.blocker)))

###############################################################################
# Exchange digraph
###############################################################################

# arcs (y, i, x) out of y: y enters part i, ejecting x (x is None if no ejection is needed)
def _arcs_from(state, y, part_of):
    arcs = []
    own = part_of.get(y)
    for i,(m, part) in enumerate(zip(state.matroids, state.parts)):
        if i == own:
            continue
        if m.is_independent(part | {y}):
            arcs.append((y, i, None))
        else:
            circuit = m.fundamental_circuit(y, part)
            arcs.extend((y, i, x) for x in canonical(circuit - {y}))
    return arcs

def exchange_digraph(state):
    """All arcs of the exchange digraph of `state`.

    **Arguments**

    - **state** : `CoverState`

    **Returns**

    - _list_ of `(y, i, x)`
        - Moving `y` into part `i` and ejecting `x` from it keeps part `i`
        independent. `x` is `None` when `y` can be added to part `i` directly.
        Arcs are listed in canonical order of `y`, then `i`, then `x`.
    """

    part_of = state.part_of()
    return [arc for y in canonical(state.ground) for arc in _arcs_from(state, y, part_of)]

###############################################################################
# Augmentation
###############################################################################

def try_augment(state):
    """Searches the exchange digraph breadth first from the uncovered
    elements, taken in canonical order.

    **Arguments**

    - **state** : `CoverState`
        - A state with at least one uncovered element.

    **Returns**

    - `AugmentOutcome`
        - If an element can be inserted directly into some part, the shortest
        path leading to it is replayed and the new parts cover exactly one
        more element. Otherwise the set of reached elements is returned as a
        blocker, after checking that every part spans it.
    """

    if len(state.uncovered) == 0:
        raise PreconditionError('try_augment requires an uncovered element')

    part_of = state.part_of()
    sources = canonical(state.uncovered)
    parent = {}
    reached = set(sources)
    queue = deque(sources)

    sink = None
    while queue:
        y = queue.popleft()
        arcs = _arcs_from(state, y, part_of)

        # direct insertions are checked before expanding
        direct = [i for _,i,x in arcs if x is None]
        if len(direct):
            sink = (y, direct[0])
            break

        for _,i,x in arcs:
            if x not in reached:
                reached.add(x)
                parent[x] = (y, i)
                queue.append(x)

    if sink is None:
        blocker = frozenset(reached)
        verify_blocker(state, blocker)
        return AugmentOutcome(blocker=blocker)

    # replay the path backwards: each element leaves its original part and enters its new one
    moves = [sink]
    node = sink[0]
    while node in parent:
        prev, i = parent[node]
        moves.append((prev, i))
        node = prev

    new_parts = [set(p) for p in state.parts]
    for e, i in moves:
        if e in part_of:
            new_parts[part_of[e]].remove(e)
        new_parts[i].add(e)

    try:
        new_state = state.replace(new_parts)
    except ValueError as e:
        raise InvariantViolation('augmenting path produced an invalid cover: {}'.format(e))

    m = state.matroids[sink[1]]
    invariant(len(new_state.covered) == len(state.covered) + 1, m,
              'augmentation did not cover exactly one more element')
    invariant(node in state.uncovered, m, 'augmenting path does not start at an uncovered element')

    return AugmentOutcome(parts=new_state.parts, element=node, path=list(reversed(moves)))

def verify_blocker(state, blocker):
    """Checks literally that `state.parts[i] & blocker` spans every element
    of `blocker` in `state.matroids[i]` and that `blocker` contains every
    uncovered element, raising `InvariantViolation` otherwise.
    """

    blocker = frozenset(blocker)
    invariant(state.uncovered <= blocker, state.matroids[0], 'blocker misses an uncovered element')
    for m, part in zip(state.matroids, state.parts):
        inside = part & blocker
        for s in canonical(blocker):
            if not m.spans(inside, s):
                raise InvariantViolation('blocker element {!r} is not spanned by {} in {}'.format(
                                         s, list(canonical(inside)), m.describe()))
    return True

def cover_or_block(state, verbose=False):
    """Applies `try_augment` until every element is covered or a blocker is
    found.

    **Arguments**

    - **state** : `CoverState`
        - The initial cover.
    - **verbose** : _bool_
        - Whether to print progress to stderr.

    **Returns**

    - (`CoverState`, _frozenset_ or `None`)
        - The final cover and the blocker, which is `None` if everything
        is covered.
    """

    start = time.time()
    naugs = 0
    while len(state.uncovered):
        outcome = try_augment(state)
        if not outcome.augmented:
            if verbose:
                print('Blocked after {} augmentations in {:.3f}s, blocker {}'.format(
                      naugs, time.time() - start, list(canonical(outcome.blocker))), file=sys.stderr)
            return state, outcome.blocker
        state = state.replace(outcome.parts)
        naugs += 1

    if verbose:
        print('Covered {} elements with {} augmentations in {:.3f}s'.format(
              len(state.ground), naugs, time.time() - start), file=sys.stderr)

    return state, None

def max_cover(matroids, verbose=False):
    """Maximum cover of the common ground set by disjoint independent sets,
    built from empty parts. Returns the same pair as `cover_or_block`.
    """

    return cover_or_block(CoverState(matroids), verbose=verbose)
