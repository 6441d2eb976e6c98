"""Exact permutation and partition calculus for the symmetric group.

A permutation of degree n is a tuple of 0-based images: p[x] is the image
of x.  Products compose right-to-left, (pq)(x) = p(q(x)), so in a product
delta_1 ... delta_k the rightmost factor acts first.  Text notation is
1-based disjoint cycle form, "(1 2 4)(3 5 6)", where a cycle (a b c)
sends a to b, b to c and c back to a.
"""

from collections import Counter
from fractions import Fraction
from math import factorial
import itertools
import re

_CYCLE_RE = re.compile(r'\(([^()]*)\)')
_POINT_SEP_RE = re.compile(r'[,\s]+')


def identity(n):
    return tuple(range(n))


def compose(p, q):
    """Product pq acting as x -> p(q(x))."""
    if len(p) != len(q):
        raise ValueError('degree mismatch: %d vs %d' % (len(p), len(q)))
    return tuple(p[x] for x in q)


def inverse(p):
    inv = [0] * len(p)
    for x, y in enumerate(p):
        inv[y] = x
    return tuple(inv)


def cycles(p):
    """Disjoint cycles of p, fixed points included.

    Each cycle starts at its smallest element and cycles are sorted by
    their smallest elements, so the output is canonical.
    """
    seen = [False] * len(p)
    out = []
    for x in range(len(p)):
        if seen[x]:
            continue
        seen[x] = True
        cyc = [x]
        y = p[x]
        while y != x:
            seen[y] = True
            cyc.append(y)
            y = p[y]
        out.append(tuple(cyc))
    return out


def cycle_type(p):
    """Cycle lengths of p as a partition, largest first."""
    return tuple(sorted((len(c) for c in cycles(p)), reverse=True))


def num_cycles(p):
    return len(cycles(p))


def from_cycles(n, cycs):
    """Permutation of degree n built from disjoint 0-based cycles."""
    images = list(range(n))
    for cyc in cycs:
        for a, b in zip(cyc, cyc[1:]):
            images[a] = b
        if cyc:
            images[cyc[-1]] = cyc[0]
    return tuple(images)


def parse_perm(text, n=0):
    """Parse 1-based cycle notation; omitted points are fixed points."""
    body = text.strip()
    if not re.fullmatch(r'(\s*\([\d,\s]*\)\s*)*', body):
        raise ValueError('cannot parse permutation %r' % text)
    cycs = []
    for m in _CYCLE_RE.finditer(body):
        toks = [t for t in _POINT_SEP_RE.split(m.group(1).strip()) if t]
        pts = [int(t) - 1 for t in toks]
        if any(x < 0 for x in pts):
            raise ValueError('points are 1-based in %r' % text)
        cycs.append(pts)
    flat = [x for c in cycs for x in c]
    if len(set(flat)) != len(flat):
        raise ValueError('cycles are not disjoint in %r' % text)
    need = max(flat, default=-1) + 1
    return from_cycles(max(n, need), cycs)


def format_perm(p):
    """1-based cycle notation with fixed points written out."""
    return ''.join('(%s)' % ' '.join(str(x + 1) for x in c) for c in cycles(p))


def canonical_perm(alpha):
    """The permutation of type alpha with cycles (1..a1)(a1+1..a1+a2)..."""
    n = sum(alpha)
    cycs = []
    start = 0
    for part in alpha:
        cycs.append(tuple(range(start, start + part)))
        start += part
    return from_cycles(n, cycs)


def partitions_of(n, cap=None):
    """Yield the partitions of n as descending tuples, largest part first."""
    if n < 0:
        return
    if n == 0:
        yield ()
        return
    if cap is None or cap > n:
        cap = n
    for first in range(cap, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def aut_size(alpha):
    """Order of the part-permuting symmetry group: product of m_r! ."""
    out = 1
    for m in Counter(alpha).values():
        out *= factorial(m)
    return out


def centralizer_size(alpha):
    """Order of the centralizer of a permutation of type alpha."""
    out = aut_size(alpha)
    for part in alpha:
        out *= part
    return out


def class_size(alpha):
    """Number of permutations with cycle type alpha."""
    return factorial(sum(alpha)) // centralizer_size(alpha)


def all_d_cycles(n, d):
    """Yield the d-cycles of S_n: C(n,d)*(d-1)! of them, none when d > n."""
    if d < 2:
        raise ValueError('d must be at least 2')
    for supp in itertools.combinations(range(n), d):
        for rest in itertools.permutations(supp[1:]):
            yield from_cycles(n, [(supp[0],) + rest])


def classify_3cycle_case(omega, sigma):
    """Case 1..4 of the 3-cycle omega relative to sigma.

    Writing omega = (j3 j2 j1) starting from its smallest moved point, the
    case records how j1, j2, j3 sit in the disjoint cycles of sigma:
    three distinct cycles (1), exactly two (2), a single cycle traversed
    in the order j1, j2, j3 (3), or in the order j1, j3, j2 (4).  The
    answer does not depend on which rotation of omega is written down.
    """
    if len(omega) != len(sigma):
        raise ValueError('degree mismatch')
    moved = [x for x in range(len(omega)) if omega[x] != x]
    if len(moved) != 3:
        raise ValueError('omega is not a 3-cycle')
    j3 = moved[0]
    j2 = omega[j3]
    j1 = omega[j2]
    cyc_of = {}
    for idx, cyc in enumerate(cycles(sigma)):
        for x in cyc:
            cyc_of[x] = idx
    distinct = len({cyc_of[j1], cyc_of[j2], cyc_of[j3]})
    if distinct == 3:
        return 1
    if distinct == 2:
        return 2
    y = sigma[j1]
    while y not in (j2, j3):
        y = sigma[y]
    return 3 if y == j2 else 4


_CASE_DELTA = {1: -2, 2: 0, 3: 2, 4: 0}


def cycle_count_delta(case):
    """Change in the number of disjoint cycles from sigma to omega*sigma."""
    return _CASE_DELTA[case]


def dist(j, sigma, points):
    """Smallest l >= 1 with sigma^l(j) in points; j must lie in points."""
    if j not in points:
        raise ValueError('j must be one of the marked points')
    steps = 1
    y = sigma[j]
    while y not in points:
        y = sigma[y]
        steps += 1
    return steps


def minimal_3cycle_chain(n):
    """A shortest transitive chain of 3-cycles with a fixed product.

    For odd n the (n-1)/2 cycles multiply to the full cycle (n n-1 ... 1);
    for even n the n/2 cycles multiply to (n n-1)(n-2 ... 1).  In both
    cases the factors act transitively on {1,...,n} and the length meets
    the (n + l - 2)/2 lower bound.
    """
    if n < 3:
        raise ValueError('need n >= 3')
    chain = []
    if n % 2:
        for pos in range(1, (n - 1) // 2 + 1):
            i = (n - 1) // 2 - pos + 1
            chain.append(from_cycles(n, [(2 * i, 2 * i - 1, 2 * i - 2)]))
    else:
        chain.append(from_cycles(n, [(n - 1, n - 2, n - 3)]))
        for pos in range(2, n // 2 + 1):
            i = n // 2 - pos + 2
            chain.append(from_cycles(n, [(2 * i - 2, 2 * i - 3, 2 * i - 4)]))
    return chain


def mu(d, alpha):
    """(n + l - 2)/(d - 1) as an exact Fraction.

    This is the minimal number of d-cycle factors in a transitive
    factorization of a permutation of type alpha, whenever the value is a
    nonnegative integer and such a factorization exists at all.
    """
    n = sum(alpha)
    if n < 1:
        raise ValueError('alpha must be a partition of a positive integer')
    return Fraction(n + len(alpha) - 2, d - 1)


def is_admissible(d, alpha):
    """True when mu(d, alpha) is a nonnegative integer."""
    m = mu(d, alpha)
    return m.denominator == 1 and m >= 0


def orbit_blocks(n, perms):
    """Orbits of {0,...,n-1} under the given permutations, sorted blocks."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in perms:
        for x in range(n):
            if p[x] != x:
                rx, ry = find(x), find(p[x])
                if rx != ry:
                    parent[max(rx, ry)] = min(rx, ry)
    blocks = {}
    for x in range(n):
        blocks.setdefault(find(x), []).append(x)
    return sorted(tuple(b) for b in blocks.values())


def is_transitive(n, perms):
    return len(orbit_blocks(n, perms)) == 1
