"""Counting ordered factorizations of permutations into d-cycles.

count_factorizations(n, d, k, alpha) counts ordered k-tuples of d-cycles
in S_n whose product (leftmost factor applied last) is the inverse of the
canonical permutation of type alpha, optionally restricted to tuples whose
factors generate a transitive group.  By conjugation the count is the same
for any representative of the type.  The workhorse is a dynamic program
over pairs (product so far, orbit partition of the factors so far); a
direct enumerator doubles as an oracle on small instances.
"""

from functools import reduce
import itertools

from . import budget
from .perms import (all_d_cycles, canonical_perm, class_size,
                    classify_3cycle_case, compose, cycle_type, identity,
                    inverse, is_admissible, is_transitive, mu, orbit_blocks,
                    partitions_of)


class DPRun:
    """Layered walk over (product, orbit partition) states for one (n, d).

    Layer k holds the number of ordered k-tuples of d-cycles reaching each
    state; states are byte strings of the product's images followed by
    canonically relabeled orbit labels.  Per-layer tallies are kept for
    every target type so all partitions of n share one run.
    """

    def __init__(self, n, d):
        self.n = n
        self.d = d
        cycs = list(all_d_cycles(n, d))
        self.deltas = [bytes(p) for p in cycs]
        self.supports = [tuple(x for x in range(n) if p[x] != x) for p in cycs]
        self.targets = {
            bytes(inverse(canonical_perm(alpha))): alpha
            for alpha in partitions_of(n)
        }
        self.one_block = bytes(n)
        ident = bytes(range(n))
        self.states = {ident + ident: 1}
        self.k_done = 0
        self.tallies = {0: self._tally(self.states)}
        self._merges = {}

    def _tally(self, states):
        n = self.n
        out = {}
        for key, count in states.items():
            alpha = self.targets.get(key[:n])
            if alpha is None:
                continue
            rec = out.setdefault(alpha, [0, 0])
            rec[1] += count
            if key[n:] == self.one_block:
                rec[0] += count
        return out

    def _merge(self, blocks, ci):
        """Orbit labels after adding cycle ci, relabeled by first occurrence."""
        cached = self._merges.get((blocks, ci))
        if cached is not None:
            return cached
        ids = {blocks[x] for x in self.supports[ci]}
        low = min(ids)
        relabel = {}
        out = bytearray()
        for b in blocks:
            if b in ids:
                b = low
            out.append(relabel.setdefault(b, len(relabel)))
        merged = bytes(out)
        self._merges[(blocks, ci)] = merged
        return merged

    def extend(self, k):
        n = self.n
        while self.k_done < k:
            nxt = {}
            merge = self._merge
            for key, count in self.states.items():
                perm = key[:n]
                blocks = key[n:]
                for ci, delta in enumerate(self.deltas):
                    # appending delta on the right: x -> perm(delta(x))
                    newkey = bytes(map(perm.__getitem__, delta)) + merge(blocks, ci)
                    nxt[newkey] = nxt.get(newkey, 0) + count
            self.states = nxt
            self.k_done += 1
            self.tallies[self.k_done] = self._tally(nxt)

    def counts(self, k, alpha):
        """(transitive, total) tuple counts for layer k and type alpha."""
        self.extend(k)
        rec = self.tallies[k].get(tuple(alpha))
        return (rec[0], rec[1]) if rec else (0, 0)


_runs = {}


def _dp(n, d):
    run = _runs.get((n, d))
    if run is None:
        run = _runs[(n, d)] = DPRun(n, d)
    return run


def _check_partition(n, alpha):
    alpha = tuple(sorted(alpha, reverse=True))
    if not alpha or min(alpha) < 1 or sum(alpha) != n:
        raise ValueError('alpha must be a partition of %d, got %s' % (n, alpha))
    return alpha


def count_factorizations(n, d, k, alpha, transitive=False):
    """Ordered k-tuples of d-cycles in S_n with the fixed target product.

    The target is the inverse of the canonical permutation of type alpha;
    with transitive=True only tuples whose factors generate a transitive
    group are counted.
    """
    alpha = _check_partition(n, alpha)
    if d < 2:
        raise ValueError('d must be at least 2')
    if k < 0:
        raise ValueError('k must be nonnegative')
    # sign obstruction: k d-cycles multiply to a permutation of sign k(d-1)
    if (k * (d - 1) - (n - len(alpha))) % 2:
        return 0
    budget.require('max_n', n)
    budget.require('max_k', k)
    trans, total = _dp(n, d).counts(k, alpha)
    return trans if transitive else total


def minimal_k(n, d, alpha):
    """Smallest k admitting a transitive factorization, with its count.

    Searches k = 0 .. n + l - 2 (the bound for transpositions, hence for
    any d since a d-cycle is d - 1 transpositions) and returns (k, count),
    or None when no k in range works.
    """
    alpha = _check_partition(n, alpha)
    if d < 2:
        raise ValueError('d must be at least 2')
    if (d - 1) % 2 == 0 and (n - len(alpha)) % 2:
        return None  # every product of d-cycles is even
    for k in range(n + len(alpha) - 1):
        if (k * (d - 1) - (n - len(alpha))) % 2:
            continue
        h = count_factorizations(n, d, k, alpha, transitive=True)
        if h:
            return k, h
    return None


def class_count_table(d, N):
    """Minimal tuple counts for every type of weight at most N, class-summed.

    The value at (n, alpha) is the number of minimal transitive tuples
    (delta_1, ..., delta_k, sigma) where sigma ranges over all
    permutations of type alpha, i.e. class_size(alpha) times the
    fixed-product count; types with no factorization get zero.
    """
    out = {}
    for n in range(1, N + 1):
        for alpha in partitions_of(n):
            h = 0
            if is_admissible(d, alpha):
                m = int(mu(d, alpha))
                h = count_factorizations(n, d, m, alpha, transitive=True)
            out[(n, alpha)] = h * class_size(alpha)
    return out


def enumerate_factorizations(n, d, k, alpha):
    """Yield every transitive k-tuple with the fixed target product.

    Brute force over all |d-cycles|^k candidate tuples, guarded by the
    enum_budget cap; larger instances belong to count_factorizations.
    """
    alpha = _check_partition(n, alpha)
    cycs = list(all_d_cycles(n, d))
    budget.require('enum_budget', len(cycs) ** k)
    target = inverse(canonical_perm(alpha))
    ident = identity(n)
    for tup in itertools.product(cycs, repeat=k):
        prod = ident
        for delta in tup:
            prod = compose(prod, delta)
        if prod == target and is_transitive(n, tup):
            yield tup


def classify_leading_case(tuples):
    """Histogram over cases 1..4 of the leading factor of 3-cycle tuples.

    For each minimal transitive tuple (delta_1, ..., delta_k) with product
    sigma, the inverse of delta_1 is classified as a 3-cycle against
    sigma.  Case 4 cannot occur on minimal input; non-minimal tuples are
    rejected.
    """
    hist = {1: 0, 2: 0, 3: 0, 4: 0}
    for tup in tuples:
        if not tup:
            raise ValueError('empty tuple has no leading factor')
        sigma = reduce(compose, tup)
        m = mu(3, cycle_type(sigma))
        if m.denominator != 1 or int(m) != len(tup):
            raise ValueError('tuple of length %d is not minimal for type %s'
                             % (len(tup), cycle_type(sigma)))
        hist[classify_3cycle_case(inverse(tup[0]), sigma)] += 1
    return hist


def component_histogram(tuples):
    """Tuples bucketed by the orbit count of all factors but the first.

    Independent cross-check of classify_leading_case: on minimal
    transitive tuples the tail generates 1, 2 or 3 orbits, and the orbit
    count equals the case number of the leading factor.
    """
    hist = {}
    for tup in tuples:
        q = len(orbit_blocks(len(tup[0]), tup[1:]))
        hist[q] = hist.get(q, 0) + 1
    return hist
