"""Truncated exact series in the power-sum variables p_1, p_2, ...

A PSeries holds rational coefficients on monomials z^n p_alpha where alpha
is a partition of n, truncated at z-degree N.  Every operator in this
package is z-homogeneous, so |alpha| = n is an invariant of all stored
terms; the derivative d/dp_i is bookkept as lowering the z-degree by i and
multiplying by p_i as raising it by i, which preserves the invariant on
intermediate values as well.
"""

from fractions import Fraction
from math import factorial

from .perms import mu, partitions_of


def _insert(alpha, part):
    return tuple(sorted(alpha + (part,), reverse=True))


def _merge(a, b):
    return tuple(sorted(a + b, reverse=True))


class PSeries:
    """Sparse series: terms maps (n, alpha) to a nonzero Fraction."""

    __slots__ = ('N', 'terms')

    def __init__(self, N, terms=None):
        self.N = N
        clean = {}
        for (n, alpha), c in (terms or {}).items():
            if c == 0 or n > N:
                continue
            if sum(alpha) != n:
                raise ValueError('monomial %s has weight %d, not %d'
                                 % (alpha, sum(alpha), n))
            clean[(n, tuple(alpha))] = Fraction(c)
        self.terms = clean

    def _check(self, other):
        if self.N != other.N:
            raise ValueError('truncation mismatch: %d vs %d' % (self.N, other.N))

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                del out[key]
        return PSeries(self.N, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return PSeries(self.N)
        return PSeries(self.N, {key: c * v for key, v in self.terms.items()})

    def __mul__(self, other):
        self._check(other)
        out = {}
        for (n1, a1), c1 in self.terms.items():
            for (n2, a2), c2 in other.terms.items():
                n = n1 + n2
                if n > self.N:
                    continue
                key = (n, _merge(a1, a2))
                out[key] = out.get(key, 0) + c1 * c2
        return PSeries(self.N, out)

    def __eq__(self, other):
        return (isinstance(other, PSeries) and self.N == other.N
                and self.terms == other.terms)

    __hash__ = None

    def is_zero(self):
        return not self.terms

    def max_abs(self):
        """Largest absolute coefficient, 0 for the zero series."""
        return max((abs(c) for c in self.terms.values()), default=Fraction(0))

    def coeff(self, alpha):
        alpha = tuple(sorted(alpha, reverse=True))
        return self.terms.get((sum(alpha), alpha), Fraction(0))

    def __repr__(self):
        if not self.terms:
            return 'PSeries(N=%d, 0)' % self.N
        bits = ('%s*z^%d*p%s' % (c, n, list(alpha))
                for (n, alpha), c in sorted(self.terms.items()))
        return 'PSeries(N=%d, %s)' % (self.N, ' + '.join(bits))


def zero(N):
    return PSeries(N)


def one(N):
    return PSeries(N, {(0, ()): 1})


def monomial(N, alpha, coeff=1):
    alpha = tuple(sorted(alpha, reverse=True))
    return PSeries(N, {(sum(alpha), alpha): coeff})


def phi(alpha, N=None):
    """The power-sum image of a cycle type: p_alpha at z-degree |alpha|."""
    n = sum(alpha)
    return monomial(n if N is None else N, alpha)


def d_dp(i, F):
    """Partial derivative in p_i, lowering the z-degree by i."""
    out = {}
    for (n, alpha), c in F.terms.items():
        m = alpha.count(i)
        if not m:
            continue
        rest = list(alpha)
        rest.remove(i)
        key = (n - i, tuple(rest))
        out[key] = out.get(key, 0) + m * c
    return PSeries(F.N, out)


def mul_by_p(i, F):
    """Multiply by p_i, raising the z-degree by i (overflow is dropped)."""
    out = {}
    for (n, alpha), c in F.terms.items():
        if n + i > F.N:
            continue
        out[(n + i, _insert(alpha, i))] = c
    return PSeries(F.N, out)


def euler_z(F):
    """z d/dz: multiply each term by its z-degree."""
    return PSeries(F.N, {key: key[0] * c for key, c in F.terms.items()})


def euler_p(F):
    """Sum over i of p_i d/dp_i: multiply each term by its length l(alpha)."""
    return PSeries(F.N, {key: len(key[1]) * c for key, c in F.terms.items()})


def build_F(d, N, counts):
    """Generating series of the minimal d-cycle factorization counts.

    counts maps (n, alpha) to the number of minimal transitive tuples
    (delta_1, ..., delta_k, sigma) over all permutations sigma of type
    alpha; the coefficient on z^n p_alpha is that count over n! mu!.
    Types without factorizations must be present with count zero.
    """
    terms = {}
    for n in range(1, N + 1):
        for alpha in partitions_of(n):
            if (n, alpha) not in counts:
                raise KeyError('missing count for n=%d, alpha=%s' % (n, alpha))
            h = counts[(n, alpha)]
            if h == 0:
                continue
            m = mu(d, alpha)
            if m.denominator != 1 or m < 0:
                raise ValueError('nonzero count on inadmissible type %s' % (alpha,))
            terms[(n, alpha)] = Fraction(h, factorial(n) * factorial(int(m)))
    return PSeries(N, terms)


def u_weight(d, monomial_key):
    """Implicit u-exponent mu^d(alpha) of the monomial (n, alpha)."""
    _, alpha = monomial_key
    return mu(d, alpha)


def d_du(d, F):
    """d/du at u=1 for a series graded by mu^d: term-wise multiply by mu."""
    return PSeries(F.N, {key: mu(d, key[1]) * c for key, c in F.terms.items()})


def to_records(F):
    """JSON-ready list of {n, alpha, coeff} sorted by (n, alpha)."""
    return [{'n': n, 'alpha': list(alpha), 'coeff': str(c)}
            for (n, alpha), c in sorted(F.terms.items())]
