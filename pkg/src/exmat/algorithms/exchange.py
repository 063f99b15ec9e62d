r"""# Base Exchange

Constructive base exchange for two bases $B_0, B_1$ of a matroid.

- `symmetric_exchange` finds, for $X \subseteq B_0$, a set $Y \subseteq B_1$
such that $(B_0 \setminus X) \cup Y$ and $(B_1 \setminus Y) \cup X$ are both
bases. `symmetric_exchange_cofinite` does the same when the complement
$B_0 \setminus X$ is the given part.
- `partition_exchange` matches a partition $X_0, \ldots, X_{n-1}$ of $B_0$
with a partition $Y_0, \ldots, Y_{n-1}$ of $B_1$ such that every
$(B_0 \setminus X_i) \cup Y_i$ and every tail
$\bigcup_{j<i} X_j \cup \bigcup_{j \geq i} Y_j$ is a basis.
`streaming_partition_exchange` produces the same matching lazily from a
stream of classes, and `partition_exchange_one_infinite` lets the last class
be arbitrarily large (or given by its complement).
- `serial_exchange_order` pairs the elements of $B_0$ and $B_1$ one by one.

Every result is checked against its defining properties before it is
returned; a failure raises `InvariantViolation`.
"""

#  ________   _______ _    _          _   _  _____ ______
# |  ____\ \ / / ____| |  | |   /\   | \ | |/ ____|  ____|
# | |__   \ V / |    | |__| |  /  \  |  \| | |  __| |__
# |  __|   > <| |    |  __  | / /\ \ | . ` | | |_ |  __|
# | |____ / . \ |____| |  | |/ ____ \| |\  | |__| | |____
# |______/_/ \_\_____|_|  |_/_/    \_\_| \_|\_____|______|

# ExMat - Python package for matroid base exchange.

from __future__ import absolute_import, division, print_function

from exmat.algorithms.union import CoverState, cover_or_block
from exmat.matroid import invariant, require_basis
from exmat.utils.generic_utils import InvariantViolation, canonical

__all__ = [
    'Cofinite',
    'SymmetricExchangeCertificate',
    'PartitionExchangePlan',
    'SerialOrder',
    'StreamingPartitionExchange',
    'symmetric_exchange',
    'symmetric_exchange_cofinite',
    'partition_exchange',
    'streaming_partition_exchange',
    'partition_exchange_one_infinite',
    'serial_exchange_order',
    'validate_plan',
    'validate_serial_order',
    'is_base_transition_edge',
    'base_transition_graph'
]

###############################################################################
# Cofinite
###############################################################################

class Cofinite(object):

    """Marker for the subset `B0 - excluded` of a basis `B0`, standing in for
    a class given by its (finite) complement.
    """

    def __init__(self, excluded=()):
        self.excluded = frozenset(excluded)

    def __repr__(self):
        return 'Cofinite(excluded={})'.format(list(canonical(self.excluded)))

    def resolve(self, b0):
        if not self.excluded <= b0:
            raise ValueError('excluded elements {} are not in b0'.format(list(canonical(self.excluded - b0))))
        return frozenset(b0) - self.excluded

###############################################################################
# Certificates
###############################################################################

class SymmetricExchangeCertificate(object):

    """The answer `Y` to a symmetric exchange query for `X`, with the two
    bases `base_a = (B0 - X) | Y` and `base_b = (B1 - Y) | X`.
    """

    def __init__(self, X, Y, base_a, base_b):
        self.X = frozenset(X)
        self.Y = frozenset(Y)
        self.base_a = frozenset(base_a)
        self.base_b = frozenset(base_b)

    def __repr__(self):
        return 'SymmetricExchangeCertificate(X={}, Y={})'.format(list(canonical(self.X)), list(canonical(self.Y)))

    def failures(self, m, b0, b1):
        """List of the properties that do not hold, empty for a valid
        certificate.
        """

        b0, b1 = frozenset(b0), frozenset(b1)
        failures = []
        if not self.X <= b0:
            failures.append('X is not a subset of B0')
        if not self.Y <= b1:
            failures.append('Y is not a subset of B1')
        if self.base_a != (b0 - self.X) | self.Y:
            failures.append('base_a is not (B0 - X) | Y')
        if self.base_b != (b1 - self.Y) | self.X:
            failures.append('base_b is not (B1 - Y) | X')
        if not m.is_basis(self.base_a):
            failures.append('(B0 - X) | Y is not a basis')
        if not m.is_basis(self.base_b):
            failures.append('(B1 - Y) | X is not a basis')
        if len(self.Y - b0) != len(self.X - b1):
            failures.append('|Y - B0| != |X - B1|')
        return failures

    def validate(self, m, b0, b1):
        failures = self.failures(m, b0, b1)
        if len(failures):
            raise InvariantViolation('invalid exchange certificate {}: {} in {}'.format(
                                     self, '; '.join(failures), m.describe()))
        return self

    def to_dict(self):
        return {'X': list(canonical(self.X)), 'Y': list(canonical(self.Y)),
                'base_a': list(canonical(self.base_a)), 'base_b': list(canonical(self.base_b))}

class PartitionExchangePlan(object):

    """Ordered classes `(X_i, Y_i)` of a partition exchange. The classes are
    matched by the identity permutation, stored as `sigma`.
    """

    def __init__(self, classes):
        self.classes = [(frozenset(X), frozenset(Y)) for X,Y in classes]
        self.sigma = list(range(len(self.classes)))

    def __len__(self):
        return len(self.classes)

    def __eq__(self, other):
        return isinstance(other, PartitionExchangePlan) and self.classes == other.classes

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return 'PartitionExchangePlan({})'.format([(list(canonical(X)), list(canonical(Y)))
                                                   for X,Y in self.classes])

    @property
    def X(self):
        return [X for X,Y in self.classes]

    @property
    def Y(self):
        return [Y for X,Y in self.classes]

    def exchange_sets(self, b0):
        """The sets `(B0 - X_i) | Y_i`."""

        b0 = frozenset(b0)
        return [(b0 - X) | Y for X,Y in self.classes]

    def tail_sets(self):
        """The sets `X_0 | ... | X_{i-1} | Y_i | ... | Y_{n-1}` for
        `i = 0, ..., n`.
        """

        tails = []
        for i in range(len(self.classes) + 1):
            head = frozenset().union(*self.X[:i])
            tails.append(head.union(*self.Y[i:]))
        return tails

    def failures(self, m, b0, b1):
        b0, b1 = frozenset(b0), frozenset(b1)
        failures = []
        if not _is_partition(self.X, b0):
            failures.append('classes X_i do not partition B0')
        if not _is_partition(self.Y, b1):
            failures.append('classes Y_i do not partition B1')
        for i,s in enumerate(self.exchange_sets(b0)):
            if not m.is_basis(s):
                failures.append('(B0 - X_{0}) | Y_{0} is not a basis'.format(i))
        for i,s in enumerate(self.tail_sets()):
            if not m.is_basis(s):
                failures.append('tail set {} is not a basis'.format(i))
        return failures

    def validate(self, m, b0, b1):
        failures = self.failures(m, b0, b1)
        if len(failures):
            raise InvariantViolation('invalid partition exchange plan {}: {} in {}'.format(
                                     self, '; '.join(failures), m.describe()))
        return self

    def to_dict(self):
        return {'classes': [{'X': list(canonical(X)), 'Y': list(canonical(Y))} for X,Y in self.classes],
                'sigma': list(self.sigma)}

class SerialOrder(object):

    """Enumerations `e_seq` of `B0` and `f_seq` of `B1` such that swapping
    `e_a` for `f_a` and swapping the tails `e_a, e_{a+1}, ...` for
    `f_a, f_{a+1}, ...` both give bases, for every position `a`.
    """

    def __init__(self, e_seq, f_seq):
        self.e_seq = tuple(e_seq)
        self.f_seq = tuple(f_seq)
        if len(self.e_seq) != len(self.f_seq):
            raise ValueError('e_seq and f_seq must have the same length')

    def __len__(self):
        return len(self.e_seq)

    def __repr__(self):
        return 'SerialOrder(e_seq={}, f_seq={})'.format(list(self.e_seq), list(self.f_seq))

    def pairs(self):
        return list(zip(self.e_seq, self.f_seq))

    def failures(self, m, b0, b1):
        b0, b1 = frozenset(b0), frozenset(b1)
        failures = []
        if len(set(self.e_seq)) != len(self.e_seq) or set(self.e_seq) != b0:
            failures.append('e_seq does not enumerate B0')
        if len(set(self.f_seq)) != len(self.f_seq) or set(self.f_seq) != b1:
            failures.append('f_seq does not enumerate B1')
        for a,(e, f) in enumerate(self.pairs()):
            if not m.is_basis((b0 - {e}) | {f}):
                failures.append('B0 - e_{0} + f_{0} is not a basis'.format(a))
            if not m.is_basis((b0 - set(self.e_seq[a:])) | set(self.f_seq[a:])):
                failures.append('tail swap at position {} is not a basis'.format(a))
        return failures

    def validate(self, m, b0, b1):
        failures = self.failures(m, b0, b1)
        if len(failures):
            raise InvariantViolation('invalid serial order {}: {} in {}'.format(
                                     self, '; '.join(failures), m.describe()))
        return self

    def to_dict(self):
        return {'e_seq': list(self.e_seq), 'f_seq': list(self.f_seq)}

###############################################################################
# Symmetric exchange
###############################################################################

def symmetric_exchange(m, b0, b1, x, verbose=False):
    """Finds `Y` for a finite `X` by covering `B1 - B0` with two disjoint
    sets. In the contraction by `B0 & B1`, with `X' = X - B1`, part `Y` must
    stay independent together with `B0 - B1 - X'` and part `Z` together with
    `X'`. A maximum cover found by augmenting paths covers all of `B1 - B0`,
    after which `|Y| = |X'|` and both exchanges give bases.

    **Arguments**

    - **m** : `Matroid`
    - **b0**, **b1** : sets of labels
        - Bases of `m`.
    - **x** : set of labels
        - A subset of `b0`.
    - **verbose** : _bool_
        - Whether to print the progress of the covering.

    **Returns**

    - `SymmetricExchangeCertificate`
        - The validated certificate. `Y` contains `X & B1` unchanged.
    """

    b0 = require_basis(m, b0, 'b0')
    b1 = require_basis(m, b1, 'b1')
    x = m._check(x)
    if not x <= b0:
        raise ValueError('x is not a subset of b0: {} not in b0'.format(list(canonical(x - b0))))

    common = b0 & b1
    b0p, b1p = b0 - common, b1 - common
    xp = x - b1

    # the two covering matroids on B1 - B0
    mc = m.contract(common)
    m_y = mc.contract(b0p - xp).restrict(b1p)
    m_z = mc.contract(xp).restrict(b1p)

    state, blocker = cover_or_block(CoverState([m_y, m_z]), verbose=verbose)
    if blocker is not None:
        raise InvariantViolation('could not cover B1 - B0, blocker {} in {}'.format(
                                 list(canonical(blocker)), m.describe()))
    y, z = set(state.parts[0]), set(state.parts[1])

    # relocate elements from z to y until |y| = |x'|
    for e in canonical(z):
        if len(y) >= len(xp):
            break
        if m_y.is_independent(y | {e}):
            y.add(e)
            z.remove(e)
    invariant(len(y) == len(xp), m, 'rebalancing did not reach |Y| = |X - B1|')

    Y = frozenset(y) | (common & x)
    cert = SymmetricExchangeCertificate(x, Y, (b0 - x) | Y, (b1 - Y) | x)
    return cert.validate(m, b0, b1)

def symmetric_exchange_cofinite(m, b0, b1, x, verbose=False):
    """Symmetric exchange for a set given through its complement in `b0`.

    **Arguments**

    - **x** : `Cofinite` or set of labels
        - Either a `Cofinite` marker or the subset of `b0` itself. The
        exchange is computed for the complement `b0 - x` and the roles of
        the two parts are then swapped.

    **Returns**

    - `SymmetricExchangeCertificate`
        - A validated certificate for `x`.
    """

    b0 = require_basis(m, b0, 'b0')
    b1 = require_basis(m, b1, 'b1')
    if isinstance(x, Cofinite):
        x = x.resolve(b0)
    else:
        x = m._check(x)
        if not x <= b0:
            raise ValueError('x is not a subset of b0')

    complement = symmetric_exchange(m, b0, b1, b0 - x, verbose=verbose)
    Y = b1 - complement.Y
    cert = SymmetricExchangeCertificate(x, Y, complement.base_b, complement.base_a)
    return cert.validate(m, b0, b1)

###############################################################################
# Partition exchange
###############################################################################

class StreamingPartitionExchange(object):

    """Iterator yielding `(X_i, Y_i)` for a stream of classes partitioning
    `B0`. Step `i` computes a symmetric exchange for `X_i` in the contraction
    by `X_0 | ... | X_{i-1}`, between the remainders of the two bases. A
    consumer may stop after any prefix; `tail_invariant_holds` then checks
    that `X_0 | ... | X_{i-1} | (B1 - Y_0 - ... - Y_{i-1})` is a basis.

    Single consumer only: the iterator is stateful.
    """

    def __init__(self, m, b0, b1, class_stream, verbose=False):

        self.m = m
        self.b0 = require_basis(m, b0, 'b0')
        self.b1 = require_basis(m, b1, 'b1')
        self.verbose = verbose
        self.used_x = frozenset()
        self.used_y = frozenset()
        self.classes = []
        self._stream = iter(class_stream)

    def __iter__(self):
        return self

    def __next__(self):
        cls = next(self._stream)
        step = len(self.classes)
        if isinstance(cls, Cofinite):
            raise ValueError('class {} is an infinite class'.format(step))
        cls = self.m._check(cls)
        if not cls <= self.b0:
            raise ValueError('class {} is not a subset of b0'.format(step))
        if cls & self.used_x:
            raise ValueError('class {} overlaps earlier classes in {}'.format(
                             step, list(canonical(cls & self.used_x))))

        minor = self.m.contract(self.used_x)
        cert = symmetric_exchange(minor, self.b0 - self.used_x, self.b1 - self.used_y, cls,
                                  verbose=self.verbose)

        self.used_x |= cls
        self.used_y |= cert.Y
        self.classes.append((cls, cert.Y))
        return cls, cert.Y

    next = __next__

    @property
    def steps(self):
        return len(self.classes)

    def remainder(self):
        """The parts of `B0` and `B1` not yet exchanged."""

        return self.b0 - self.used_x, self.b1 - self.used_y

    def tail_invariant_holds(self):
        return self.m.is_basis(self.used_x | (self.b1 - self.used_y))

    def plan(self):
        return PartitionExchangePlan(self.classes)

def streaming_partition_exchange(m, b0, b1, class_stream, verbose=False):
    """Lazy partition exchange, see `StreamingPartitionExchange`. Overlapping
    classes raise `ValueError` at the step where they occur.
    """

    return StreamingPartitionExchange(m, b0, b1, class_stream, verbose=verbose)

def partition_exchange(m, b0, b1, classes, verbose=False):
    """Partition exchange for finite classes.

    **Arguments**

    - **m** : `Matroid`
    - **b0**, **b1** : sets of labels
        - Bases of `m`.
    - **classes** : _list_ of sets of labels
        - Classes partitioning `b0`, processed in the given order.

    **Returns**

    - `PartitionExchangePlan`
        - The validated plan, with per-index and tail bases checked.
    """

    b0 = require_basis(m, b0, 'b0')
    b1 = require_basis(m, b1, 'b1')
    classes = list(classes)
    if any(isinstance(cls, Cofinite) for cls in classes):
        raise ValueError('partition_exchange does not accept an infinite class')
    classes = [m._check(cls) for cls in classes]
    _require_partition(classes, b0)

    stream = StreamingPartitionExchange(m, b0, b1, classes, verbose=verbose)
    for _ in stream:
        pass

    return stream.plan().validate(m, b0, b1)

def partition_exchange_one_infinite(m, b0, b1, classes, max_class_size=None, verbose=False):
    """Partition exchange in which the last class may be large. It is given
    either explicitly or as a `Cofinite` marker and receives the remainder of
    `B1` once the other classes have been exchanged.

    **Arguments**

    - **classes** : _list_
        - Sets of labels partitioning `b0`, at most one of which is large.
    - **max_class_size** : _int_ or `None`
        - Classes above this size count as large, as does every `Cofinite`
        class. A large class that is not last raises `ValueError`, as do two
        large classes.

    **Returns**

    - `PartitionExchangePlan`
        - The validated plan.
    """

    b0 = require_basis(m, b0, 'b0')
    b1 = require_basis(m, b1, 'b1')
    classes = list(classes)

    large = [i for i,cls in enumerate(classes)
             if isinstance(cls, Cofinite) or (max_class_size is not None and len(cls) > max_class_size)]
    if len(large) > 1:
        raise ValueError('more than one large class: {}'.format(large))
    if len(large) == 1 and large[0] != len(classes) - 1:
        raise ValueError('the large class must be the last class')

    if len(classes) and isinstance(classes[-1], Cofinite):
        classes[-1] = classes[-1].resolve(b0)
    classes = [m._check(cls) for cls in classes]
    _require_partition(classes, b0)
    if len(classes) == 0:
        return PartitionExchangePlan([]).validate(m, b0, b1)

    stream = StreamingPartitionExchange(m, b0, b1, classes[:-1], verbose=verbose)
    for _ in stream:
        pass

    _, rest = stream.remainder()
    plan = PartitionExchangePlan(stream.classes + [(classes[-1], rest)])
    return plan.validate(m, b0, b1)

def serial_exchange_order(m, b0, b1, verbose=False):
    """Pairs the elements of two bases by a partition exchange with singleton
    classes in canonical order of `b0`.

    **Returns**

    - `SerialOrder`
        - `e_seq` is `b0` in canonical order and `f_seq[a]` the element
        exchanged for `e_seq[a]`.
    """

    b0 = require_basis(m, b0, 'b0')
    b1 = require_basis(m, b1, 'b1')
    e_seq = canonical(b0)
    plan = partition_exchange(m, b0, b1, [[e] for e in e_seq], verbose=verbose)

    f_seq = []
    for X,Y in plan.classes:
        invariant(len(Y) == 1, m, 'singleton class {} was not matched to a singleton'.format(list(X)))
        f_seq.extend(Y)

    return SerialOrder(e_seq, f_seq).validate(m, b0, b1)

def validate_plan(m, b0, b1, plan):
    return len(plan.failures(m, b0, b1)) == 0

def validate_serial_order(m, b0, b1, order):
    return len(order.failures(m, b0, b1)) == 0

###############################################################################
# Base transition graph
###############################################################################

def is_base_transition_edge(m, b0, b1, e, f):
    """Whether `B0 - e + f` and `B1 - f + e` are both bases."""

    b0, b1 = frozenset(b0), frozenset(b1)
    if e not in b0 or f not in b1:
        raise ValueError('e must be in b0 and f in b1')
    return m.is_basis((b0 - {e}) | {f}) and m.is_basis((b1 - {f}) | {e})

def base_transition_graph(m, b0, b1):
    """All pairs `(e, f)` that are base transition edges, in canonical order."""

    b0 = require_basis(m, b0, 'b0')
    b1 = require_basis(m, b1, 'b1')
    return [(e, f) for e in canonical(b0) for f in canonical(b1) if is_base_transition_edge(m, b0, b1, e, f)]

# whether the classes are pairwise disjoint and cover target exactly
def _is_partition(classes, target):
    union = set()
    for cls in classes:
        if union & cls:
            return False
        union |= cls
    return union == set(target)

def _require_partition(classes, b0):
    if not _is_partition(classes, b0):
        raise ValueError('classes do not partition b0')
