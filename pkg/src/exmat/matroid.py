r"""# Matroids

Base classes for matroids presented by an independence oracle over a finite
ground set, together with the minor operations used throughout ExMat.

Ground elements are opaque labels (strings or integers, all of one type)
compared in their natural order, which is called the canonical order. Every
choice made by the operations below (greedy extension, circuit reduction,
contraction transversals) follows the canonical order, so all results are
reproducible. Sets returned by these methods are `frozenset`s; use
`exmat.canonical` to obtain them in canonical order.

A `Matroid` is immutable after construction and all of its methods are pure,
so instances can be shared freely between threads and worker processes.
"""

#  __  __       _______ _____   ____ _____ _____
# |  \/  |   /\|__   __|  __ \ / __ \_   _|  __ \
# | \  / |  /  \  | |  | |__) | |  | || | | |  | |
# | |\/| | / /\ \ | |  |  _  /| |  | || | | |  | |
# | |  | |/ ____ \| |  | | \ \| |__| || |_| |__| |
# |_|  |_/_/    \_\_|  |_|  \_\\____/_____|_____/

# ExMat - Python package for matroid base exchange.

from __future__ import absolute_import, division, print_function

from abc import ABCMeta, abstractmethod

from exmat.utils.generic_utils import InvariantViolation, PreconditionError, canonical

__all__ = ['Matroid', 'MatroidView', 'require_basis', 'require_independent']

###############################################################################
# Matroid
###############################################################################

class Matroid(object, metaclass=ABCMeta):

    """Abstract base class for a matroid on a finite ground set. Subclasses
    implement `_independent`, which receives a `frozenset` already known to be
    contained in the ground set.
    """

    def __init__(self, ground):

        ground = tuple(ground)
        try:
            self._elements = canonical(ground)
        except TypeError:
            raise ValueError('ground set labels must all be of one comparable type')
        if len(set(self._elements)) != len(self._elements):
            raise ValueError('ground set contains duplicate labels')
        self._ground = frozenset(self._elements)

    def __repr__(self):
        return '<{} {}>'.format(self.__class__.__name__, self.describe())

    @property
    def ground(self):
        """The ground set as a `frozenset`."""

        return self._ground

    @property
    def elements(self):
        """The ground set as a tuple in canonical order."""

        return self._elements

    @property
    def base(self):
        """The matroid this one is a minor of (itself for a concrete matroid)."""

        return self

    @property
    def minor_stack(self):
        """List of `(contracted, deleted)` pairs of canonical tuples applied to
        `base`, oldest first.
        """

        return []

    @abstractmethod
    def _independent(self, s):
        pass

    @abstractmethod
    def description(self):
        """Short human readable name of the matroid, e.g. `'U(2,4)'`."""

    def describe(self):
        """Description of the matroid together with its minor stack, used in
        diagnostics.
        """

        d = self.base.description()
        for contracted, deleted in self.minor_stack:
            if len(contracted):
                d += ' / {' + ','.join(map(str, contracted)) + '}'
            if len(deleted):
                d += ' \\ {' + ','.join(map(str, deleted)) + '}'
        return d

    def to_dict(self):
        """The matroid file document describing this matroid, or `None` if it
        has no file representation.
        """

        return None

    ################
    # PUBLIC METHODS
    ################

    def is_independent(self, s):
        """Tests independence through the oracle.

        **Arguments**

        - **s** : iterable of labels
            - A subset of the ground set.

        **Returns**

        - _bool_
            - Whether `s` is independent.

        Raises `ValueError` if `s` is not contained in the ground set.
        """

        return bool(self._independent(self._check(s)))

    def is_basis(self, s):
        s = self._check(s)
        if not self._independent(s):
            return False
        return not any(self._independent(s | {e}) for e in self._elements if e not in s)

    def is_circuit(self, c):
        c = self._check(c)
        if len(c) == 0 or self._independent(c):
            return False
        return all(self._independent(c - {e}) for e in c)

    def fundamental_circuit(self, e, i):
        """The unique circuit contained in `i + e`, which must be dependent
        while `i` is independent. Elements of `i` are removed one at a time in
        canonical order whenever dependence persists without them.

        **Arguments**

        - **e** : label
            - A ground element not in `i`.
        - **i** : iterable of labels
            - An independent set.

        **Returns**

        - _frozenset_
            - The fundamental circuit, which contains `e`.
        """

        i = require_independent(self, i, 'i')
        self._check([e])
        if e in i:
            raise PreconditionError('{!r} is already in i'.format(e))

        circuit = set(i | {e})
        if self._independent(frozenset(circuit)):
            raise PreconditionError('no circuit: i + {!r} is independent'.format(e))

        for x in canonical(i):
            circuit.remove(x)
            if self._independent(frozenset(circuit)):
                circuit.add(x)

        return frozenset(circuit)

    def extend_to_basis(self, i=(), pool=None):
        """Greedily extends the independent set `i` with elements of `pool`
        (the whole ground set by default) in canonical order.

        **Arguments**

        - **i** : iterable of labels
            - An independent set.
        - **pool** : iterable of labels or `None`
            - Candidate elements.

        **Returns**

        - _frozenset_
            - A maximal independent subset of `i | pool` containing `i`.
        """

        i = require_independent(self, i, 'i')
        pool = self._ground if pool is None else self._check(pool)
        current = set(i)
        for e in canonical(pool - i):
            current.add(e)
            if not self._independent(frozenset(current)):
                current.remove(e)
        return frozenset(current)

    def rank(self, x=None):
        x = self._ground if x is None else x
        return len(self.extend_to_basis((), x))

    def spans(self, x, e):
        """Whether `x` spans `e`, i.e. `e` is in `x` or `{e}` is dependent in
        the contraction by `x`.
        """

        x = self._check(x)
        self._check([e])
        if e in x:
            return True
        return not self.contract(x).is_independent([e])

    def closure(self, x):
        """All ground elements spanned by `x`."""

        x = self._check(x)
        b = self.extend_to_basis((), x)
        return frozenset(x | {e for e in self._elements if not self._independent(b | {e})})

    def contract(self, x):
        """The contraction by `x`. A maximal independent subset of `x` is
        chosen greedily in canonical order and stored in the new view.
        """

        x = self._check(x)
        transversal = self.extend_to_basis((), x)
        return MatroidView(self, self._ground - x, transversal, (canonical(x), ()))

    def restrict(self, x):
        """The restriction to `x`."""

        x = self._check(x)
        return MatroidView(self, x, frozenset(), ((), canonical(self._ground - x)))

    def delete(self, x):
        """The deletion of `x`, the restriction to the complement of `x`."""

        x = self._check(x)
        return self.restrict(self._ground - x)

    #################
    # PRIVATE METHODS
    #################

    # validates that s is a subset of the ground set and returns it as a frozenset
    def _check(self, s):
        if isinstance(s, str):
            raise TypeError('sets of labels must not be given as a single string')
        s = frozenset(s)
        if not s <= self._ground:
            missing = s - self._ground
            try:
                missing = canonical(missing)
            except TypeError:
                missing = list(missing)
            raise ValueError('elements {} not in ground set of {}'.format(list(missing), self.describe()))
        return s

###############################################################################
# MatroidView
###############################################################################

class MatroidView(Matroid):

    """A minor of a concrete matroid obtained by a sequence of contractions
    and restrictions. A set `s` is independent in the view if `s` together
    with the stored transversal of the contracted elements is independent in
    the underlying matroid. Views are normally created with `contract`,
    `restrict` and `delete` rather than directly.
    """

    def __init__(self, parent, ground, transversal, step):

        super(MatroidView, self).__init__(ground)

        self._base = parent.base
        self._transversal = frozenset(transversal) | _transversal_of(parent)
        self._stack = parent.minor_stack + [step]

    @property
    def base(self):
        return self._base

    @property
    def minor_stack(self):
        return list(self._stack)

    @property
    def transversal(self):
        """Independent set of the underlying matroid spanning everything
        contracted so far.
        """

        return self._transversal

    def description(self):
        return self._base.description()

    def _independent(self, s):
        return self._base._independent(s | self._transversal)

# the stored transversal of a view, empty for concrete matroids
def _transversal_of(m):
    return getattr(m, '_transversal', frozenset())

###############################################################################
# Preconditions
###############################################################################

def require_independent(m, s, name='s'):
    s = m._check(s)
    if not m._independent(s):
        raise PreconditionError('{} is not independent in {}'.format(name, m.describe()))
    return s

def require_basis(m, s, name='s'):
    """Returns `s` as a `frozenset` after checking that it is a basis of `m`,
    raising `PreconditionError` (e.g. `'b1 is not a basis'`) otherwise.
    """

    s = m._check(s)
    if not m.is_basis(s):
        raise PreconditionError('{} is not a basis of {}'.format(name, m.describe()))
    return s

# raises InvariantViolation carrying the minor stack of m
def invariant(condition, m, message):
    if not condition:
        raise InvariantViolation('{} in {}'.format(message, m.describe()))
