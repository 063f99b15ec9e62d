"""Set partition generators used to drive partition exchanges."""

# ExMat - Python package for matroid base exchange.

from __future__ import absolute_import

import itertools

from exmat.utils.generic_utils import canonical

__all__ = ['ordered_partitions', 'set_partitions']

# gets ordered partitions of elements into nonempty classes, at most max_classes of them
def ordered_partitions(elements, max_classes=None):
    for part in set_partitions(elements, max_classes):
        for ordered_part in itertools.permutations(part):
            yield list(ordered_part)

# gets unordered partitions of elements into nonempty classes, classes sorted by first element
def set_partitions(elements, max_classes=None):
    elements = canonical(elements)
    if max_classes is None:
        max_classes = len(elements)
    if len(elements) == 0:
        yield []
        return

    # restricted growth strings: element i joins one of the classes opened so far or opens one
    a = [0]*len(elements)
    def grow(i, nclasses):
        if i == len(elements):
            classes = [[] for c in range(nclasses)]
            for e, c in zip(elements, a):
                classes[c].append(e)
            yield [frozenset(c) for c in classes]
            return
        for c in range(min(nclasses + 1, max_classes)):
            a[i] = c
            for p in grow(i + 1, max(nclasses, c + 1)):
                yield p

    for p in grow(0, 0):
        yield p
