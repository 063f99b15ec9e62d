r"""# Brute-Force Oracles

Exhaustive enumeration over small instances, used as an independent check of
the exchange algorithms. Nothing here uses augmenting paths or exchange
logic: every answer comes from enumerating subsets and querying the
independence oracle. All functions are exponential in the size of the ground
set and warn above `ADVISORY_GROUND_LIMIT` elements.
"""

#   ____  _____            _____ _      ______
#  / __ \|  __ \     /\   / ____| |    |  ____|
# | |  | | |__) |   /  \ | |    | |    | |__
# | |  | |  _  /   / /\ \| |    | |    |  __|
# | |__| | | \ \  / ____ \ |____| |____| |____
#  \____/|_|  \_\/_/    \_\_____|______|______|

# ExMat - Python package for matroid base exchange.

from __future__ import absolute_import, division, print_function

from itertools import combinations
import warnings

from exmat.matroid import require_basis
from exmat.utils.generic_utils import ADVISORY_GROUND_LIMIT, canonical, powerset

__all__ = [
    'OracleReport',
    'check_axioms',
    'all_independent_sets',
    'all_bases',
    'all_circuits',
    'exchange_search',
    'bijection_solutions',
    'bijection_search',
    'max_cover_size'
]

###############################################################################
# OracleReport
###############################################################################

class OracleReport(object):

    """Number of individual checks performed, certificates of what was found
    and counterexamples to the checked property.
    """

    def __init__(self, name, checked=0, witnesses=None, counterexamples=None):
        self.name = name
        self.checked = checked
        self.witnesses = [] if witnesses is None else witnesses
        self.counterexamples = [] if counterexamples is None else counterexamples

    @property
    def holds(self):
        return len(self.counterexamples) == 0

    def __bool__(self):
        return self.holds

    def __repr__(self):
        return 'OracleReport({!r}, checked={}, counterexamples={})'.format(
               self.name, self.checked, len(self.counterexamples))

    def to_dict(self):
        return {'name': self.name, 'checked': self.checked, 'holds': self.holds,
                'witnesses': self.witnesses, 'counterexamples': self.counterexamples}

def _advise(m, what):
    if len(m.ground) > ADVISORY_GROUND_LIMIT:
        warnings.warn('{} enumerates all subsets of {} elements'.format(what, len(m.ground)))

###############################################################################
# Enumeration
###############################################################################

def all_independent_sets(m):
    """All independent sets, smallest first and in canonical order within
    each size.
    """

    _advise(m, 'all_independent_sets')
    return [frozenset(s) for s in powerset(m.elements) if m.is_independent(s)]

def all_bases(m):
    """All maximal independent sets, sorted by their canonical tuples."""

    _advise(m, 'all_bases')
    family = set(all_independent_sets(m))
    bases = [s for s in family if not any(s | {e} in family for e in m.elements if e not in s)]
    return sorted(bases, key=canonical)

def all_circuits(m):
    """All minimal dependent sets, smallest first."""

    _advise(m, 'all_circuits')
    family = set(all_independent_sets(m))
    circuits = []
    for s in powerset(m.elements):
        s = frozenset(s)
        if s not in family and all(s - {e} in family for e in s):
            circuits.append(s)
    return circuits

def check_axioms(m):
    """Checks the independence axioms by full enumeration: the empty set is
    independent (I), subsets of independent sets are independent (II), and
    for independent `I`, `J` with `|I| < |J|` some `e` in `J - I` makes
    `I + e` independent (III).

    **Arguments**

    - **m** : `Matroid`

    **Returns**

    - `OracleReport`
        - Counterexamples are dicts naming the axiom. Axiom II
        counterexamples give the independent `set` and its dependent
        `subset`, axiom III counterexamples give `I` and `J`.
    """

    _advise(m, 'check_axioms')
    report = OracleReport('axioms')
    family = set(all_independent_sets(m))

    report.checked += 1
    if frozenset() not in family:
        report.counterexamples.append({'axiom': 'I', 'set': []})

    # one-element deletions suffice for downward closure
    for s in sorted(family, key=lambda s: (len(s), canonical(s))):
        for e in canonical(s):
            report.checked += 1
            if s - {e} not in family:
                report.counterexamples.append({'axiom': 'II', 'set': list(canonical(s)),
                                               'subset': list(canonical(s - {e}))})

    # elements extending each independent set
    extensions = {s: frozenset(e for e in m.elements if e not in s and s | {e} in family) for s in family}
    by_size = sorted(family, key=lambda s: (len(s), canonical(s)))
    for I in by_size:
        for J in by_size:
            if len(J) <= len(I):
                continue
            report.checked += 1
            if not (J - I) & extensions[I]:
                report.counterexamples.append({'axiom': 'III', 'I': list(canonical(I)), 'J': list(canonical(J))})

    report.witnesses.append({'independent_sets': len(family)})
    return report

def exchange_search(m, b0, b1, x):
    """All `Y` contained in `b1` such that `(b0 - x) | Y` and `(b1 - Y) | x`
    are both bases, smallest first and in canonical order within each size.
    """

    _advise(m, 'exchange_search')
    b0 = require_basis(m, b0, 'b0')
    b1 = require_basis(m, b1, 'b1')
    x = frozenset(x)
    if not x <= b0:
        raise ValueError('x is not a subset of b0')

    results = []
    for Y in powerset(b1):
        Y = frozenset(Y)
        if m.is_basis((b0 - x) | Y) and m.is_basis((b1 - Y) | x):
            results.append(Y)
    return results

def bijection_solutions(m, b0, b1, k):
    """Generates every bijection `F` from the `k`-subsets of `b0` to the
    `k`-subsets of `b1` such that `(b0 - I) | F(I)` is a basis for every `I`.
    The search assigns the most constrained subset first.

    **Yields**

    - _dict_
        - Map from `frozenset` to `frozenset`.
    """

    _advise(m, 'bijection_solutions')
    b0 = require_basis(m, b0, 'b0')
    b1 = require_basis(m, b1, 'b1')
    if not 0 <= k <= len(b0):
        raise ValueError('k must be between 0 and {}'.format(len(b0)))

    sources = [frozenset(i) for i in combinations(canonical(b0), k)]
    targets = [frozenset(j) for j in combinations(canonical(b1), k)]
    domains = {i: [j for j in targets if m.is_basis((b0 - i) | j)] for i in sources}

    assignment, used = {}, set()

    def search():
        if len(assignment) == len(sources):
            yield dict(assignment)
            return

        # unassigned source with the fewest remaining targets
        best, best_options = None, None
        for i in sources:
            if i in assignment:
                continue
            options = [j for j in domains[i] if j not in used]
            if best is None or len(options) < len(best_options):
                best, best_options = i, options
        for j in best_options:
            assignment[best] = j
            used.add(j)
            for solution in search():
                yield solution
            used.remove(j)
            del assignment[best]

    for solution in search():
        yield solution

def bijection_search(m, b0, b1, k):
    """Whether some bijection of `bijection_solutions` exists."""

    for _ in bijection_solutions(m, b0, b1, k):
        return True
    return False

def max_cover_size(m0, m1):
    """Largest `|I0| + |I1|` over disjoint `I0`, `I1` independent in `m0`
    and `m1` respectively, which must share a ground set.
    """

    if m0.ground != m1.ground:
        raise ValueError('matroids must share a common ground set')
    indep0 = all_independent_sets(m0)
    indep1 = all_independent_sets(m1)
    return max(len(I0) + len(I1) for I0 in indep0 for I1 in indep1 if not I0 & I1)
