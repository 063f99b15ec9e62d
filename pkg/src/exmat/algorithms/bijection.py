r"""# Subset Bijection

A size-preserving bijection $F$ from the finite subsets of a basis $B_0$ to
those of a basis $B_1$ such that $(B_0 \setminus I) \cup F(I)$ is a basis for
every $I$. It is built on a serial exchange order
$(e_\alpha, f_\alpha)$: writing $e_\alpha$ for the element of $I$ that comes
first in the order,

$$F(I) = F_\alpha(I - e_\alpha) + f_\alpha$$

where $F_\alpha$ is the bijection of the same kind for the bases
$\{e_\beta : \beta > \alpha\}$ and $\{f_\beta : \beta > \alpha\}$ of the
contraction by $\{e_\beta : \beta < \alpha\} \cup \{f_\alpha\}$. Values are
computed on demand and memoized.
"""

#  ____ _____ _ ______ _____ _______ _____ ____  _   _
# |  _ \_   _| |  ____/ ____|__   __|_   _/ __ \| \ | |
# | |_) || | | | |__ | |       | |    | || |  | |  \| |
# |  _ < | | | |  __|| |       | |    | || |  | | . ` |
# | |_) || |_| | |___| |____   | |   _| || |__| | |\  |
# |____/_____|_|______\_____|  |_|  |_____\____/|_| \_|

# ExMat - Python package for matroid base exchange.

from __future__ import absolute_import, division, print_function

from itertools import combinations

from exmat.algorithms.exchange import serial_exchange_order
from exmat.matroid import invariant, require_basis
from exmat.utils.generic_utils import InvariantViolation, canonical

__all__ = ['SubsetBijection', 'build_bijection', 'enumerate_graph']

###############################################################################
# SubsetBijection
###############################################################################

class SubsetBijection(object):

    """Lazily evaluated bijection between the finite subsets of two bases.

    Evaluation fills memo tables, so concurrent calls to `apply` must be
    serialized by the caller. Results do not depend on the order of
    evaluation.
    """

    def __init__(self, m, b0, b1, order=None):
        """**Arguments**

        - **m** : `Matroid`
        - **b0**, **b1** : sets of labels
            - Bases of `m`.
        - **order** : `SerialOrder` or `None`
            - The serial order to build on, computed with
            `serial_exchange_order` if not given. A given order is validated.
        """

        self.m = m
        self.b0 = require_basis(m, b0, 'b0')
        self.b1 = require_basis(m, b1, 'b1')
        if order is None:
            order = serial_exchange_order(m, self.b0, self.b1)
        self.order = order.validate(m, self.b0, self.b1)

        self._position = {e: a for a,e in enumerate(order.e_seq)}

        # one sub-bijection per position serves every subset size
        self._children = {}
        self._values = {frozenset(): frozenset()}
        self._preimages = {frozenset(): frozenset()}

    def __call__(self, i):
        return self.apply(i)

    def __repr__(self):
        return 'SubsetBijection(order={}, evaluated={})'.format(self.order, len(self._values))

    @property
    def rank(self):
        return len(self.b0)

    @property
    def evaluated(self):
        """Number of subsets evaluated so far at this level."""

        return len(self._values)

    def apply(self, i):
        """Evaluates `F(i)`.

        **Arguments**

        - **i** : set of labels
            - A subset of `b0`.

        **Returns**

        - _frozenset_
            - A subset of `b1` of the same size as `i` such that
            `(b0 - i) | F(i)` is a basis.
        """

        i = frozenset(i)
        if not i <= self.b0:
            raise ValueError('{} is not a subset of b0'.format(list(i - self.b0)))
        if i in self._values:
            return self._values[i]

        alpha = min(self._position[e] for e in i)
        e, f = self.order.e_seq[alpha], self.order.f_seq[alpha]
        value = self.child(alpha).apply(i - {e}) | {f}

        invariant(len(value) == len(i), self.m, 'F changed the size of {}'.format(list(canonical(i))))
        invariant(self.m.is_basis((self.b0 - i) | value), self.m,
                  '(B0 - I) | F(I) is not a basis for I = {}'.format(list(canonical(i))))
        previous = self._preimages.setdefault(value, i)
        if previous != i:
            raise InvariantViolation('F is not injective: {} and {} both map to {} in {}'.format(
                                     list(canonical(previous)), list(canonical(i)),
                                     list(canonical(value)), self.m.describe()))

        return self._values.setdefault(i, value)

    def child(self, alpha):
        """The sub-bijection used for subsets whose first element in the
        serial order is `e_seq[alpha]`.
        """

        child = self._children.get(alpha)
        if child is None:
            e_seq, f_seq = self.order.e_seq, self.order.f_seq
            minor = self.m.contract(set(e_seq[:alpha]) | {f_seq[alpha]})
            child = self._children.setdefault(alpha, SubsetBijection(minor, e_seq[alpha+1:], f_seq[alpha+1:]))
        return child

    def size_class(self, k):
        """All pairs `(I, F(I))` with `|I| = k`, in canonical order of `I`."""

        if not 0 <= k <= self.rank:
            raise ValueError('size {} out of range 0..{}'.format(k, self.rank))
        return [(frozenset(i), self.apply(i)) for i in combinations(canonical(self.b0), k)]

    def inverse(self, j):
        """The subset `I` of `b0` with `F(I) = j`, found by evaluating the
        size class of `j`.
        """

        j = frozenset(j)
        if not j <= self.b1:
            raise ValueError('{} is not a subset of b1'.format(list(j - self.b1)))
        if j not in self._preimages:
            self.size_class(len(j))
        if j not in self._preimages:
            raise InvariantViolation('F is not surjective: {} has no preimage in {}'.format(
                                     list(canonical(j)), self.m.describe()))
        return self._preimages[j]

def build_bijection(m, b0, b1, order=None):
    """Builds the bijection without evaluating any subset, see
    `SubsetBijection`.
    """

    return SubsetBijection(m, b0, b1, order=order)

def enumerate_graph(bij, max_size):
    """All pairs `(I, F(I))` with `|I| <= max_size`, by size and then in
    canonical order, after checking that `F` is a bijection between the
    subsets of size at most `max_size` of the two bases.

    **Arguments**

    - **bij** : `SubsetBijection`
    - **max_size** : _int_
        - At most the rank.

    **Returns**

    - _list_ of (_frozenset_, _frozenset_)
    """

    if not 0 <= max_size <= bij.rank:
        raise ValueError('max_size must be between 0 and {}'.format(bij.rank))

    pairs = []
    for k in range(max_size + 1):
        size_class = bij.size_class(k)
        images = set(value for _,value in size_class)
        targets = set(frozenset(j) for j in combinations(canonical(bij.b1), k))
        if len(images) != len(size_class):
            raise InvariantViolation('F is not injective on subsets of size {}'.format(k))
        if images != targets:
            raise InvariantViolation('F is not surjective on subsets of size {}'.format(k))
        pairs.extend(size_class)

    return pairs
