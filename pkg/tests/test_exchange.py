# ExMat - Python package for matroid base exchange.

from __future__ import absolute_import

import itertools

import numpy as np
import pytest

import exmat as em

U24 = em.uniform_matroid(2, 4)
U36 = em.uniform_matroid(3, 6)
K4 = em.complete_graph(4)
K4_B0 = {'12', '23', '34'}
K4_B1 = {'13', '24', '14'}

def basis_pairs(m, seed, npairs=20):
    bases = em.all_bases(m)
    rng = np.random.default_rng(seed)
    pairs = [(bases[i], bases[j]) for i,j in rng.integers(0, len(bases), size=(npairs, 2))]
    return pairs

# symmetric exchange

@pytest.mark.exchange
@pytest.mark.parametrize('m, b0, b1, x, y', [
    (U24, {'a', 'b'}, {'c', 'd'}, {'a'}, {'c'}),
    (K4, K4_B0, K4_B1, {'12', '23'}, {'13', '24'}),
    (K4, K4_B0, K4_B1, set(), set()),
    (U24, {'a', 'b'}, {'c', 'd'}, {'a', 'b'}, {'c', 'd'}),
    (U24, {'a', 'b'}, {'b', 'c'}, {'b'}, {'b'}),
])
def test_symmetric_exchange(m, b0, b1, x, y):
    cert = em.symmetric_exchange(m, b0, b1, x)
    assert cert.X == x
    assert cert.Y == y
    assert m.is_basis(cert.base_a) and m.is_basis(cert.base_b)
    assert cert.failures(m, b0, b1) == []

@pytest.mark.exchange
def test_symmetric_exchange_k4_bases():
    cert = em.symmetric_exchange(K4, K4_B0, K4_B1, {'12', '23'})
    assert cert.base_a == {'34', '13', '24'}
    assert cert.base_b == {'14', '12', '23'}
    assert cert.to_dict() == {'X': ['12', '23'], 'Y': ['13', '24'],
                              'base_a': ['13', '24', '34'], 'base_b': ['12', '14', '23']}

@pytest.mark.exchange
def test_symmetric_exchange_errors():
    with pytest.raises(ValueError, match='not a subset of b0'):
        em.symmetric_exchange(U24, {'a', 'b'}, {'c', 'd'}, {'c'})
    with pytest.raises(em.PreconditionError, match='b1 is not a basis'):
        em.symmetric_exchange(U24, {'a', 'b'}, {'c'}, {'a'})
    with pytest.raises(em.PreconditionError, match='b0 is not a basis'):
        em.symmetric_exchange(K4, {'12', '23', '13'}, K4_B1, set())

@pytest.mark.exchange
def test_certificate_failures():
    cert = em.SymmetricExchangeCertificate({'a'}, {'d'}, {'b', 'd'}, {'a', 'c'})
    assert cert.failures(U24, {'a', 'b'}, {'c', 'd'}) == []

    bad = em.SymmetricExchangeCertificate({'12'}, {'24'}, {'23', '24', '34'}, {'12', '13', '14'})
    assert bad.failures(K4, K4_B0, K4_B1) == ['(B0 - X) | Y is not a basis']
    with pytest.raises(em.InvariantViolation, match='not a basis'):
        bad.validate(K4, K4_B0, K4_B1)

# cofinite symmetric exchange

@pytest.mark.exchange
def test_cofinite_full_swap():
    cert = em.symmetric_exchange_cofinite(U24, {'a', 'b'}, {'c', 'd'}, em.Cofinite())
    assert cert.X == {'a', 'b'}
    assert cert.Y == {'c', 'd'}

@pytest.mark.exchange
def test_cofinite_k4():
    cert = em.symmetric_exchange_cofinite(K4, K4_B0, K4_B1, em.Cofinite({'12', '23'}))
    assert cert.X == {'34'}
    assert cert.Y == {'14'}
    assert cert.base_a == {'12', '23', '14'}
    assert cert.failures(K4, K4_B0, K4_B1) == []

    direct = em.symmetric_exchange(K4, K4_B0, K4_B1, {'34'})
    assert direct.failures(K4, K4_B0, K4_B1) == []

@pytest.mark.exchange
@pytest.mark.parametrize('m, b0, b1', [
    (U24, {'a', 'b'}, {'c', 'd'}),
    (K4, K4_B0, K4_B1),
])
def test_cofinite_whole_basis(m, b0, b1):
    assert em.symmetric_exchange_cofinite(m, b0, b1, b0).Y == b1

@pytest.mark.exchange
def test_cofinite_errors():
    with pytest.raises(ValueError):
        em.symmetric_exchange_cofinite(U24, {'a', 'b'}, {'c', 'd'}, em.Cofinite({'c'}))
    with pytest.raises(ValueError):
        em.symmetric_exchange_cofinite(U24, {'a', 'b'}, {'c', 'd'}, {'c'})

# partition exchange

@pytest.mark.exchange
def test_partition_k4_singletons():
    plan = em.partition_exchange(K4, K4_B0, K4_B1, [{'12'}, {'23'}, {'34'}])
    assert plan.X == [{'12'}, {'23'}, {'34'}]
    assert all(len(Y) == 1 for Y in plan.Y)
    assert frozenset().union(*plan.Y) == K4_B1
    assert plan.sigma == [0, 1, 2]
    assert all(K4.is_basis(s) for s in plan.exchange_sets(K4_B0))
    assert all(K4.is_basis(s) for s in plan.tail_sets())
    assert em.validate_plan(K4, K4_B0, K4_B1, plan)

@pytest.mark.exchange
@pytest.mark.parametrize('m, b0, b1', [
    (U24, {'a', 'b'}, {'c', 'd'}),
    (K4, K4_B0, K4_B1),
])
def test_partition_single_class(m, b0, b1):
    plan = em.partition_exchange(m, b0, b1, [b0])
    assert plan.Y == [b1]
    assert plan.tail_sets() == [b1, b0]

@pytest.mark.exchange
def test_partition_uniform():
    plan = em.partition_exchange(U24, {'a', 'b'}, {'c', 'd'}, [{'a'}, {'b'}])
    assert plan.Y == [{'c'}, {'d'}]
    assert plan.to_dict() == {'classes': [{'X': ['a'], 'Y': ['c']}, {'X': ['b'], 'Y': ['d']}],
                              'sigma': [0, 1]}

@pytest.mark.exchange
def test_partition_errors():
    with pytest.raises(ValueError, match='partition'):
        em.partition_exchange(K4, K4_B0, K4_B1, [{'12'}, {'23'}])
    with pytest.raises(ValueError, match='partition'):
        em.partition_exchange(K4, K4_B0, K4_B1, [{'12', '23'}, {'23', '34'}])
    with pytest.raises(ValueError, match='infinite'):
        em.partition_exchange(K4, K4_B0, K4_B1, [{'12'}, em.Cofinite({'12'})])

@pytest.mark.exchange
def test_plan_failures():
    plan = em.PartitionExchangePlan([({'a'}, {'d'}), ({'b'}, {'c'})])
    assert em.validate_plan(U24, {'a', 'b'}, {'c', 'd'}, plan)

    plan = em.PartitionExchangePlan([({'12'}, {'24'}), ({'23', '34'}, {'13', '14'})])
    assert not em.validate_plan(K4, K4_B0, K4_B1, plan)
    with pytest.raises(em.InvariantViolation):
        plan.validate(K4, K4_B0, K4_B1)

# streaming partition exchange

@pytest.mark.exchange
def test_streaming_matches_batch():
    classes = [{'12'}, {'23'}, {'34'}]
    stream = em.streaming_partition_exchange(K4, K4_B0, K4_B1, iter(classes))
    pairs = list(stream)
    assert [X for X,_ in pairs] == classes
    assert stream.plan() == em.partition_exchange(K4, K4_B0, K4_B1, classes)

@pytest.mark.exchange
def test_streaming_prefix():
    stream = em.streaming_partition_exchange(K4, K4_B0, K4_B1, [{'12'}, {'23'}, {'34'}])
    X0, Y0 = next(stream)
    assert X0 == {'12'} and len(Y0) == 1 and Y0 <= K4_B1
    assert stream.steps == 1
    assert stream.tail_invariant_holds()
    assert K4.is_basis({'12'} | (K4_B1 - Y0))
    assert stream.remainder() == (frozenset(['23', '34']), K4_B1 - Y0)

@pytest.mark.exchange
def test_streaming_empty():
    m = em.uniform_matroid(0, 2)
    assert list(em.streaming_partition_exchange(m, set(), set(), [])) == []

@pytest.mark.exchange
def test_streaming_overlap():
    stream = em.streaming_partition_exchange(K4, K4_B0, K4_B1, [{'12'}, {'12', '23'}])
    next(stream)
    with pytest.raises(ValueError, match='overlaps'):
        next(stream)

@pytest.mark.exchange
def test_streaming_rejects_cofinite():
    stream = em.streaming_partition_exchange(K4, K4_B0, K4_B1, [em.Cofinite()])
    with pytest.raises(ValueError, match='infinite'):
        next(stream)

@pytest.mark.exchange
def test_streaming_generator_input():
    def classes():
        for e in sorted(K4_B0):
            yield [e]
    stream = em.streaming_partition_exchange(K4, K4_B0, K4_B1, classes())
    for i,_ in enumerate(stream):
        assert stream.tail_invariant_holds()
    assert stream.steps == 3
    assert em.validate_plan(K4, K4_B0, K4_B1, stream.plan())

# one large class

@pytest.mark.exchange
@pytest.mark.parametrize('m, b0, b1, classes', [
    (K4, K4_B0, K4_B1, [{'12'}, {'23', '34'}]),
    (K4, K4_B0, K4_B1, [{'12'}, em.Cofinite({'12'})]),
    (K4, K4_B0, K4_B1, [K4_B0]),
    (U36, {'a', 'b', 'c'}, {'d', 'e', 'f'}, [{'a'}, {'b', 'c'}]),
])
def test_one_infinite(m, b0, b1, classes):
    plan = em.partition_exchange_one_infinite(m, b0, b1, classes, max_class_size=1)
    assert plan.failures(m, b0, b1) == []
    if len(plan) == 1:
        assert plan.Y == [b1]

@pytest.mark.exchange
def test_one_infinite_errors():
    with pytest.raises(ValueError, match='more than one'):
        em.partition_exchange_one_infinite(U36, {'a', 'b', 'c'}, {'d', 'e', 'f'},
                                           [{'a', 'b'}, em.Cofinite({'a', 'b'})], max_class_size=1)
    with pytest.raises(ValueError, match='last'):
        em.partition_exchange_one_infinite(U36, {'a', 'b', 'c'}, {'d', 'e', 'f'},
                                           [{'a', 'b'}, {'c'}], max_class_size=1)
    with pytest.raises(ValueError, match='partition'):
        em.partition_exchange_one_infinite(U36, {'a', 'b', 'c'}, {'d', 'e', 'f'}, [{'a'}, {'b'}])

# serial exchange

@pytest.mark.exchange
def test_serial_uniform():
    order = em.serial_exchange_order(U24, {'a', 'b'}, {'c', 'd'})
    assert order.e_seq == ('a', 'b')
    assert order.f_seq == ('c', 'd')
    assert order.pairs() == [('a', 'c'), ('b', 'd')]
    assert U24.is_basis({'c', 'b'}) and U24.is_basis({'a', 'd'})

@pytest.mark.exchange
def test_serial_k4():
    order = em.serial_exchange_order(K4, K4_B0, K4_B1)
    assert order.e_seq == ('12', '23', '34')
    assert set(order.f_seq) == K4_B1
    for e, f in order.pairs():
        assert K4.is_basis((K4_B0 - {e}) | {f})
    assert em.validate_serial_order(K4, K4_B0, K4_B1, order)

@pytest.mark.exchange
def test_serial_equal_bases():
    order = em.serial_exchange_order(K4, K4_B0, K4_B0)
    assert order.e_seq == order.f_seq

@pytest.mark.exchange
def test_serial_order_failures():
    order = em.SerialOrder(['a', 'b'], ['c', 'd'])
    assert order.to_dict() == {'e_seq': ['a', 'b'], 'f_seq': ['c', 'd']}
    assert not em.validate_serial_order(U24, {'a', 'b'}, {'c', 'd'}, em.SerialOrder(['a'], ['c']))
    bad = em.SerialOrder(['12', '23', '34'], ['24', '13', '14'])
    assert 'B0 - e_0 + f_0 is not a basis' in bad.failures(K4, K4_B0, K4_B1)
    with pytest.raises(ValueError):
        em.SerialOrder(['a'], [])

# base transition graph

@pytest.mark.exchange
def test_base_transition_graph():
    assert em.base_transition_graph(U24, {'a', 'b'}, {'c', 'd'}) == [
        ('a', 'c'), ('a', 'd'), ('b', 'c'), ('b', 'd')]
    assert em.is_base_transition_edge(K4, K4_B0, K4_B1, '12', '14')
    assert not em.is_base_transition_edge(K4, K4_B0, K4_B1, '12', '13')
    with pytest.raises(ValueError):
        em.is_base_transition_edge(K4, K4_B0, K4_B1, '13', '12')

# agreement with exhaustive search

@pytest.mark.exchange
@pytest.mark.slow
@pytest.mark.parametrize('seed', range(200))
def test_symmetric_exchange_random(seed):
    kind = ['uniform', 'graphic', 'gf2'][seed % 3]
    m = em.random_instance(kind, 4 + seed % 4, seed)
    for b0, b1 in basis_pairs(m, seed):
        for r in range(min(len(b0), 3) + 1):
            for x in itertools.combinations(em.canonical(b0), r):
                cert = em.symmetric_exchange(m, b0, b1, x)
                assert cert.failures(m, b0, b1) == []
                assert len(cert.Y - b0) == len(set(x) - b1)
                assert cert.Y in em.exchange_search(m, b0, b1, x)

@pytest.mark.exchange
@pytest.mark.slow
@pytest.mark.parametrize('m', [K4, U36])
def test_partition_exchange_all_partitions_fixed(m):
    for b0, b1 in basis_pairs(m, 0, npairs=4):
        for classes in em.ordered_partitions(b0, max_classes=4):
            plan = em.partition_exchange(m, b0, b1, classes)
            for s in plan.exchange_sets(b0) + plan.tail_sets():
                assert m.is_basis(s)

@pytest.mark.exchange
@pytest.mark.slow
@pytest.mark.parametrize('seed', range(15))
def test_partition_exchange_all_partitions(seed):
    kind = ['uniform', 'graphic', 'gf2'][seed % 3]
    m = em.random_instance(kind, 4 + seed % 2 if kind == 'uniform' else 4 + seed % 4, seed)
    assert m.rank() <= 5
    for b0, b1 in basis_pairs(m, seed, npairs=3):
        for classes in em.ordered_partitions(b0, max_classes=4):
            plan = em.partition_exchange(m, b0, b1, classes)
            for s in plan.exchange_sets(b0) + plan.tail_sets():
                assert m.is_basis(s)

@pytest.mark.exchange
@pytest.mark.slow
@pytest.mark.parametrize('seed', range(100))
def test_streaming_deterministic(seed):
    kind = ['uniform', 'graphic', 'gf2'][seed % 3]
    m = em.random_instance(kind, 4 + seed % 4, seed)
    rng = np.random.default_rng(seed)
    for b0, b1 in basis_pairs(m, seed, npairs=3):
        partitions = list(em.set_partitions(b0))
        classes = partitions[int(rng.integers(0, len(partitions)))]
        batch = em.partition_exchange(m, b0, b1, classes)
        stream = em.streaming_partition_exchange(m, b0, b1, iter(classes))
        assert list(stream) == batch.classes
        assert stream.plan() == batch

@pytest.mark.exchange
@pytest.mark.slow
@pytest.mark.parametrize('seed', range(50))
def test_serial_order_random(seed):
    kind = ['uniform', 'graphic', 'gf2'][seed % 3]
    m = em.random_instance(kind, 4 + seed % 5, seed)
    for b0, b1 in basis_pairs(m, seed, npairs=5):
        order = em.serial_exchange_order(m, b0, b1)
        assert order.failures(m, b0, b1) == []
