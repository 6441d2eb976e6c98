"""The cut-and-join style operators W([d]) on C[p_1, p_2, ...].

Three equivalent realizations of the linear operator are provided: group
algebra multiplication by the sum of all d-cycles (apply_W_groupalg), the
literal differential displays for d = 2, 3 (apply_W2_explicit and
apply_W3_explicit), and a reconstruction from a brute-forced table of
local removal/insertion terms (TermTable, apply_reconstructed_linear).
The nonlinear variants replace higher derivatives with products of first
derivatives (apply_tildeW, apply_tildeHW).
"""

from fractions import Fraction
from functools import lru_cache
from math import comb
import itertools

from . import budget
from .perms import (all_d_cycles, aut_size, canonical_perm, compose,
                    cycle_type, partitions_of)
from .series import PSeries, d_dp, mul_by_p, zero


@lru_cache(maxsize=None)
def _class_row(d, n, alpha):
    """Cycle type distribution of omega * sigma over all d-cycles omega."""
    row = {}
    sigma = canonical_perm(alpha)
    for omega in all_d_cycles(n, d):
        t = cycle_type(compose(omega, sigma))
        row[t] = row.get(t, 0) + 1
    return row


def class_product_vector(d, n, vec):
    """Multiply a type-indexed vector by the sum of all d-cycles of S_n.

    vec maps cycle types to coefficients; the result is the distribution
    after one more left factor, valid because the d-cycle class sum is
    central in the group algebra.
    """
    out = {}
    for alpha, c in vec.items():
        for t, cnt in _class_row(d, n, tuple(alpha)).items():
            out[t] = out.get(t, 0) + c * cnt
    return out


def apply_W_groupalg(d, F):
    """W([d]) on a series, term by term via class sum multiplication.

    A monomial (n, alpha) maps to the sum over all d-cycles omega of S_n
    of the monomial of cycle_type(omega * sigma0); degrees n < d map to
    zero since S_n has no d-cycles.
    """
    acc = {}
    for (n, alpha), c in F.terms.items():
        if n < d:
            continue
        for t, cnt in _class_row(d, n, alpha).items():
            key = (n, t)
            acc[key] = acc.get(key, 0) + c * cnt
    return PSeries(F.N, acc)


def apply_W2_explicit(F):
    """The two-summation differential form of W([2])."""
    N = F.N
    out = zero(N)
    for i in range(1, N + 1):
        for j in range(1, N - i + 1):
            s = i + j
            g = mul_by_p(s, d_dp(i, d_dp(j, F)))
            out = out + g.scale(Fraction(i * j, 2))
            g = mul_by_p(i, mul_by_p(j, d_dp(s, F)))
            out = out + g.scale(Fraction(s, 2))
    return out


def apply_W3_explicit(F):
    """The six-summation differential form of W([3])."""
    N = F.N
    out = zero(N)
    third = Fraction(1, 3)
    for i1 in range(1, N + 1):
        for i2 in range(1, N - i1 + 1):
            for i3 in range(1, N - i1 - i2 + 1):
                s = i1 + i2 + i3
                g = mul_by_p(s, d_dp(i1, d_dp(i2, d_dp(i3, F))))
                out = out + g.scale(third * i1 * i2 * i3)
                g = mul_by_p(i1 + i3, mul_by_p(i2, d_dp(i1, d_dp(i2 + i3, F))))
                out = out + g.scale(third * i1 * (i2 + i3))
                g = mul_by_p(i1 + i2, mul_by_p(i3, d_dp(i2, d_dp(i1 + i3, F))))
                out = out + g.scale(third * i2 * (i1 + i3))
                g = mul_by_p(i3 + i2, mul_by_p(i1, d_dp(i3, d_dp(i1 + i2, F))))
                out = out + g.scale(third * i3 * (i1 + i2))
                g = mul_by_p(i1, mul_by_p(i2, mul_by_p(i3, d_dp(s, F))))
                out = out + g.scale(third * s)
                g = mul_by_p(s, d_dp(s, F))
                out = out + g.scale(third * s)
    return out


@lru_cache(maxsize=None)
def meet_count(d, B, A):
    """N(B, A): d-cycles omega of S_m whose support meets every cycle of
    the canonical permutation of type B and with cycle_type(omega*sigma_B)
    equal to A, where m = |B|."""
    m = sum(B)
    if sum(A) != m or d > m or len(B) > d:
        return 0
    sigma = canonical_perm(B)
    cyc_of = []
    for idx, part in enumerate(B):
        cyc_of.extend([idx] * part)
    want = set(range(len(B)))
    count = 0
    for omega in all_d_cycles(m, d):
        touched = {cyc_of[x] for x in range(m) if omega[x] != x}
        if touched == want and cycle_type(compose(omega, sigma)) == A:
            count += 1
    return count


def local_coefficient(d, B, A):
    """c(B, A) = N(B, A)/|Aut(B)|, the local term coefficient of W([d])."""
    B = tuple(sorted(B, reverse=True))
    A = tuple(sorted(A, reverse=True))
    return Fraction(meet_count(d, B, A), aut_size(B))


class TermTable:
    """All nonzero local terms (B, A) of W([d]) with block weight <= M.

    terms maps (B, A) to (N, c, degree) where N is the brute-forced cycle
    count, c = N/|Aut(B)| and degree = l(A) + l(B) is the z-grading shift
    exponent of the term.  by_block indexes the same data by B.
    """

    def __init__(self, d, M):
        budget.require('max_table_weight', M)
        self.d = d
        self.M = M
        self.terms = {}
        self.by_block = {}
        for m in range(d, M + 1):
            for B in partitions_of(m):
                if len(B) > d:
                    continue
                for A in partitions_of(m):
                    cnt = meet_count(d, B, A)
                    if cnt:
                        c = Fraction(cnt, aut_size(B))
                        self.terms[(B, A)] = (cnt, c, len(A) + len(B))
                        self.by_block.setdefault(B, []).append((A, cnt))


def _sub_multisets(alpha, d):
    """Sub-multisets B of alpha with l(B) <= d, with selection counts.

    Yields (B, ways) where ways is the product of binomials counting how
    many ways the parts of B can be chosen among equal parts of alpha.
    """
    items = sorted(set(alpha), reverse=True)
    mults = [alpha.count(r) for r in items]
    for take in itertools.product(*(range(m + 1) for m in mults)):
        if not 0 < sum(take) <= d:
            continue
        B = []
        ways = 1
        for r, m, t in zip(items, mults, take):
            B.extend([r] * t)
            ways *= comb(m, t)
        yield tuple(B), ways


def apply_reconstructed_linear(table, F):
    """W([d]) rebuilt from a local term table: remove parts B, insert A.

    Each monomial (n, alpha) receives, for every sub-multiset B of alpha
    and every table entry (B, A), the monomial with B replaced by A,
    weighted by N(B, A) times the number of ways to select B in alpha.
    """
    acc = {}
    for (n, alpha), c in F.terms.items():
        if n < table.d:
            continue
        needed = sum(alpha[:table.d])
        if needed > table.M:
            raise ValueError('table covers block weights up to %d, monomial '
                             '%s selects blocks of weight up to %d'
                             % (table.M, alpha, needed))
        for B, ways in _sub_multisets(alpha, table.d):
            hits = table.by_block.get(B)
            if not hits:
                continue
            rest = list(alpha)
            for part in B:
                rest.remove(part)
            for A, cnt in hits:
                key = (n, tuple(sorted(rest + list(A), reverse=True)))
                acc[key] = acc.get(key, 0) + c * cnt * ways
    return PSeries(F.N, acc)


def apply_tildeW(d, F):
    """The first-derivative variant of the d = 2, 3 differential forms.

    Same summations as the explicit operators with every higher derivative
    replaced by the product of the matching first derivatives of F.
    """
    N = F.N
    dF = {i: d_dp(i, F) for i in range(1, N + 1)}
    out = zero(N)
    if d == 2:
        for i in range(1, N + 1):
            for j in range(1, N - i + 1):
                s = i + j
                g = mul_by_p(s, dF[i] * dF[j])
                out = out + g.scale(Fraction(i * j, 2))
                g = mul_by_p(i, mul_by_p(j, dF[s]))
                out = out + g.scale(Fraction(s, 2))
        return out
    if d == 3:
        third = Fraction(1, 3)
        for i1 in range(1, N + 1):
            for i2 in range(1, N - i1 + 1):
                for i3 in range(1, N - i1 - i2 + 1):
                    s = i1 + i2 + i3
                    g = mul_by_p(s, dF[i1] * dF[i2] * dF[i3])
                    out = out + g.scale(third * i1 * i2 * i3)
                    g = mul_by_p(i1 + i3, mul_by_p(i2, dF[i1] * dF[i2 + i3]))
                    out = out + g.scale(third * i1 * (i2 + i3))
                    g = mul_by_p(i1 + i2, mul_by_p(i3, dF[i2] * dF[i1 + i3]))
                    out = out + g.scale(third * i2 * (i1 + i3))
                    g = mul_by_p(i3 + i2, mul_by_p(i1, dF[i3] * dF[i1 + i2]))
                    out = out + g.scale(third * i3 * (i1 + i2))
                    g = mul_by_p(i1, mul_by_p(i2, mul_by_p(i3, dF[s])))
                    out = out + g.scale(third * s)
                    g = mul_by_p(s, dF[s])
                    out = out + g.scale(third * s)
        return out
    raise ValueError('no differential display for d=%d' % d)


def fixed_point_sum(F):
    """The single-cycle summation (1/3) sum over i,j,k of
    (i+j+k) p_{i+j+k} dF/dp_{i+j+k}: ordered triples with total s
    contribute s*C(s-1,2)/3 times p_s dF/dp_s."""
    out = zero(F.N)
    for s in range(3, F.N + 1):
        g = mul_by_p(s, d_dp(s, F))
        out = out + g.scale(Fraction(s * comb(s - 1, 2), 3))
    return out


def apply_tildeHW(d, table, F):
    """The degree-homogeneous first-derivative operator from a term table.

    Keeps only the table terms with degree l(A) + l(B) = d + 1 and applies
    them as c(B, A) * p_A * product of dF/dp_b over b in B.
    """
    if table.d != d:
        raise ValueError('table was built for d=%d' % table.d)
    if table.M < F.N:
        raise ValueError('table covers block weights up to %d, need %d'
                         % (table.M, F.N))
    N = F.N
    dF = {i: d_dp(i, F) for i in range(1, N + 1)}
    out = zero(N)
    for (B, A), (cnt, c, degree) in sorted(table.terms.items()):
        if degree != d + 1 or sum(B) > N:
            continue
        g = dF[B[0]]
        for b in B[1:]:
            g = g * dF[b]
        if g.is_zero():
            continue
        for a in A:
            g = mul_by_p(a, g)
        out = out + g.scale(c)
    return out
