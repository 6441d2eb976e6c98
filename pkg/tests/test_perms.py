import itertools
from fractions import Fraction
from functools import reduce
from math import factorial

import pytest
from hypothesis import given, strategies as st

from hurwitz.perms import (all_d_cycles, aut_size, canonical_perm,
                           centralizer_size, class_size,
                           classify_3cycle_case, compose, cycle_count_delta,
                           cycle_type, cycles, dist, format_perm, from_cycles,
                           identity, inverse, is_admissible, is_transitive,
                           minimal_3cycle_chain, mu, num_cycles,
                           orbit_blocks, parse_perm, partitions_of)


def test_compose_order():
    # (pq)(x) = p(q(x)): apply q first
    p = parse_perm('(1 2)', 3)
    q = parse_perm('(2 3)', 3)
    assert format_perm(compose(p, q)) == '(1 2 3)'
    assert format_perm(compose(q, p)) == '(1 3 2)'


def test_parse_format_roundtrip():
    p = parse_perm('(2 4 3 5 6)', 6)
    assert p == (0, 3, 4, 2, 5, 1)
    assert format_perm(p) == '(1)(2 4 3 5 6)'
    assert parse_perm(format_perm(p)) == p
    assert parse_perm('(1,2)(3)', 3) == (1, 0, 2)
    assert parse_perm('', 4) == identity(4)


def test_parse_rejects():
    with pytest.raises(ValueError):
        parse_perm('(1 2')
    with pytest.raises(ValueError):
        parse_perm('(1 2)(2 3)')
    with pytest.raises(ValueError):
        parse_perm('(0 1)')


def test_cycles_and_type():
    p = from_cycles(6, [(0, 2), (1, 4, 3)])
    assert cycles(p) == [(0, 2), (1, 4, 3), (5,)]
    assert cycle_type(p) == (3, 2, 1)
    assert num_cycles(p) == 3
    assert cycle_type(identity(4)) == (1, 1, 1, 1)
    assert canonical_perm((3, 2)) == from_cycles(5, [(0, 1, 2), (3, 4)])
    assert format_perm(canonical_perm((3, 2))) == '(1 2 3)(4 5)'


def test_partitions_of():
    assert list(partitions_of(0)) == [()]
    assert list(partitions_of(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1),
                                      (1, 1, 1, 1)]
    assert list(partitions_of(5, cap=2)) == [(2, 2, 1), (2, 1, 1, 1),
                                             (1, 1, 1, 1, 1)]
    assert len(list(partitions_of(10))) == 42


def test_class_sizes():
    assert class_size((2, 1)) == 3
    assert class_size((3,)) == 2
    assert aut_size((2, 2, 1, 1, 1)) == 12
    assert centralizer_size((2, 1)) == 2
    # brute force over S4
    counts = {}
    for img in itertools.permutations(range(4)):
        t = cycle_type(img)
        counts[t] = counts.get(t, 0) + 1
    for t, c in counts.items():
        assert class_size(t) == c
    for n in range(1, 10):
        assert sum(class_size(a) for a in partitions_of(n)) == factorial(n)


def test_all_d_cycles():
    assert len(list(all_d_cycles(3, 3))) == 2
    assert len(list(all_d_cycles(4, 3))) == 8
    assert len(list(all_d_cycles(2, 2))) == 1
    assert len(list(all_d_cycles(7, 3))) == 70
    assert list(all_d_cycles(3, 4)) == []
    for c in all_d_cycles(5, 4):
        assert cycle_type(c) == (4, 1)
    with pytest.raises(ValueError):
        list(all_d_cycles(3, 1))


def test_classify_cases():
    omega = parse_perm('(1 2 3)', 3)
    # three distinct cycles of sigma
    assert classify_3cycle_case(omega, identity(3)) == 1
    # exactly two
    assert classify_3cycle_case(omega, parse_perm('(1 2)', 3)) == 2
    # one cycle, cutting
    assert classify_3cycle_case(parse_perm('(1 3 2)', 3),
                                parse_perm('(1 2 3)', 3)) == 3
    # one cycle, preserving the cycle count
    sigma = parse_perm('(1 2 3 4 5)', 5)
    omega = parse_perm('(1 4 2)', 5)
    case = classify_3cycle_case(omega, sigma)
    assert num_cycles(compose(omega, sigma)) - num_cycles(sigma) == \
        cycle_count_delta(case)
    with pytest.raises(ValueError):
        classify_3cycle_case(parse_perm('(1 2)', 3), identity(3))


def test_classify_matches_cycle_count_delta_exhaustively():
    for n in (3, 4, 5, 6):
        omegas = list(all_d_cycles(n, 3))
        for img in itertools.permutations(range(n)):
            for omega in omegas:
                case = classify_3cycle_case(omega, img)
                got = num_cycles(compose(omega, img)) - num_cycles(img)
                assert got == cycle_count_delta(case), (omega, img, case)


def test_classify_rotation_invariant():
    sigma = from_cycles(6, [(0, 1, 2), (3, 4, 5)])
    a = from_cycles(6, [(0, 3, 1)])
    b = from_cycles(6, [(3, 1, 0)])
    c = from_cycles(6, [(1, 0, 3)])
    assert a == b == c
    assert classify_3cycle_case(a, sigma) == 2


def test_dist():
    sigma = parse_perm('(1 4 5 2 3)', 5)
    marked = {0, 1, 2}
    assert dist(0, sigma, marked) == 3
    assert dist(1, sigma, marked) == 1
    assert dist(2, sigma, marked) == 1
    # steps from each marked point to the next cover the whole cycle
    assert sum(dist(j, sigma, marked) for j in marked) == 5
    with pytest.raises(ValueError):
        dist(3, sigma, marked)


def test_minimal_3cycle_chain():
    assert minimal_3cycle_chain(3) == [from_cycles(3, [(2, 1, 0)])]
    assert minimal_3cycle_chain(4) == [from_cycles(4, [(3, 2, 1)]),
                                       from_cycles(4, [(2, 1, 0)])]
    assert minimal_3cycle_chain(5) == [from_cycles(5, [(4, 3, 2)]),
                                       from_cycles(5, [(2, 1, 0)])]
    for n in range(3, 16):
        chain = minimal_3cycle_chain(n)
        prod = reduce(compose, chain)
        t = cycle_type(prod)
        if n % 2:
            assert t == (n,)
        else:
            assert t == tuple(sorted((n - 2, 2), reverse=True))
        assert is_transitive(n, chain)
        assert len(chain) == mu(3, t)
        for c in chain:
            assert cycle_type(c)[0] == 3
    with pytest.raises(ValueError):
        minimal_3cycle_chain(2)


def test_mu_and_admissibility():
    assert mu(2, (3, 1)) == 4
    assert mu(3, (3,)) == 1
    assert mu(3, (2, 1)) == Fraction(3, 2)
    assert mu(4, (4,)) == 1
    assert is_admissible(3, (3,))
    assert not is_admissible(3, (2, 1))
    assert is_admissible(2, (2, 1))
    # integrality only: mu(4, (2,1)) = 1 even though no 4-cycle fits in S_3
    assert is_admissible(4, (2, 1))
    with pytest.raises(ValueError):
        mu(3, ())
    # for odd d the weight is integral exactly when n - l is even
    for n in range(1, 11):
        for alpha in partitions_of(n):
            for d in (3, 5):
                assert is_admissible(d, alpha) == \
                    ((n - len(alpha)) % 2 == 0
                     and (n + len(alpha) - 2) % (d - 1) == 0)


def test_orbits():
    perms = [from_cycles(5, [(0, 1)]), from_cycles(5, [(3, 4)])]
    assert orbit_blocks(5, perms) == [(0, 1), (2,), (3, 4)]
    assert not is_transitive(5, perms)
    assert is_transitive(3, [from_cycles(3, [(0, 1, 2)])])
    assert is_transitive(1, [])
    assert not is_transitive(2, [])


@st.composite
def perms_st(draw, n):
    return tuple(draw(st.permutations(list(range(n)))))


@given(st.integers(2, 6).flatmap(
    lambda n: st.tuples(perms_st(n), perms_st(n), perms_st(n))))
def test_group_axioms(triple):
    p, q, r = triple
    n = len(p)
    assert compose(p, compose(q, r)) == compose(compose(p, q), r)
    assert compose(p, identity(n)) == p
    assert compose(identity(n), p) == p
    assert compose(p, inverse(p)) == identity(n)
    # conjugation preserves the cycle type
    assert cycle_type(compose(q, compose(p, inverse(q)))) == cycle_type(p)
