"""Machine verification of the generating function identities.

Every check evaluates an exact residual series over the rationals and
reports it as a JSON-ready dict: {id, N, pass, residual_terms, max_abs,
runtime_ms, ...}.  A check passes only when the residual is identically
zero at the stated truncation.
"""

from fractions import Fraction
from math import factorial
import itertools
import time

from . import budget
from .counting import (class_count_table, classify_leading_case,
                       count_factorizations, enumerate_factorizations,
                       minimal_k)
from .operators import TermTable, apply_tildeW, fixed_point_sum
from .perms import class_size, is_admissible, mu, partitions_of
from .series import (PSeries, build_F, d_dp, d_du, euler_p, euler_z,
                     mul_by_p, to_records, zero)

_F_cache = {}


def series_F(d, N):
    """The truncated generating series F_d, built from engine counts."""
    budget.require('max_N', N)
    key = (d, N)
    if key not in _F_cache:
        _F_cache[key] = build_F(d, N, class_count_table(d, N))
    return _F_cache[key]


def _report(check_id, N, residual, t0, **extra):
    rep = {
        'id': check_id,
        'N': N,
        'pass': residual.is_zero(),
        'residual_terms': to_records(residual),
        'max_abs': str(residual.max_abs()),
        'runtime_ms': int((time.perf_counter() - t0) * 1000),
    }
    rep.update(extra)
    return rep


def closed_form_h2(alpha):
    """n^(l-3) (n+l-2)! prod a^a/(a-1)! as an exact integer."""
    n = sum(alpha)
    val = Fraction(n) ** (len(alpha) - 3) * factorial(n + len(alpha) - 2)
    for a in alpha:
        val *= Fraction(a ** a, factorial(a - 1))
    if val.denominator != 1:
        raise ArithmeticError('closed form is not integral on %s' % (alpha,))
    return int(val)


def check_closed_form(nmax):
    """Transposition counts from the engine against the closed form."""
    t0 = time.perf_counter()
    budget.require('max_n', nmax)
    mismatches = []
    checked = 0
    for n in range(1, nmax + 1):
        for alpha in partitions_of(n):
            expected = (n + len(alpha) - 2, closed_form_h2(alpha))
            got = minimal_k(n, 2, alpha)
            checked += 1
            if got != expected:
                mismatches.append({'n': n, 'alpha': list(alpha),
                                   'formula': [expected[0], str(expected[1])],
                                   'engine': got and [got[0], str(got[1])]})
    return {
        'id': 'closed-form',
        'N': nmax,
        'pass': not mismatches,
        'checked': checked,
        'residual_terms': mismatches,
        'runtime_ms': int((time.perf_counter() - t0) * 1000),
    }


def check_gj_pde(N):
    """Second order cut-and-join equation for F_2."""
    t0 = time.perf_counter()
    F = series_F(2, N)
    residual = apply_tildeW(2, F) - euler_z(F) - euler_p(F) + F.scale(2)
    return _report('gj-pde', N, residual, t0)


def _euler_rhs(F, d):
    return (euler_z(F) + euler_p(F) - F.scale(2)).scale(Fraction(1, d - 1))


def check_thm53(N):
    """Third order equation for F_3, transcribed family by family."""
    t0 = time.perf_counter()
    F = series_F(3, N)
    dF = {i: d_dp(i, F) for i in range(1, N + 1)}
    third = Fraction(1, 3)
    acc = zero(N)
    for i in range(1, N + 1):
        for j in range(1, N - i + 1):
            for k in range(1, N - i - j + 1):
                s = i + j + k
                g = mul_by_p(i, mul_by_p(j, mul_by_p(k, dF[s])))
                acc = acc + g.scale(third * s)
                g = mul_by_p(s, dF[i] * dF[j] * dF[k])
                acc = acc + g.scale(third * i * j * k)
                g = mul_by_p(i, mul_by_p(j + k, dF[i + j] * dF[k]))
                acc = acc + g.scale((i + j) * k)
    return _report('thm53', N, acc - _euler_rhs(F, 3), t0)


def check_thm55(N, literal=False):
    """Rewritten third order equation for F_3.

    The subtracted single-cycle sum is read with the 1/3 prefactor by
    default, which makes the statement match check_thm53 exactly; the
    literal reading subtracts it three times and its residual is minus
    twice the single-cycle sum.
    """
    t0 = time.perf_counter()
    F = series_F(3, N)
    sub = fixed_point_sum(F)
    if literal:
        sub = sub.scale(3)
    residual = apply_tildeW(3, F) - sub - _euler_rhs(F, 3)
    return _report('thm55', N, residual, t0,
                   reading='literal' if literal else 'normalized')


def tildeHW_graded(d, table, F):
    """apply_tildeHW with the degree grading checked term combination-wise.

    For every combination of source monomials consumed by a block B and
    every inserted type A, the output weight mu must exceed the sum of the
    source weights by exactly one; a violation raises.
    """
    N = F.N
    if table.d != d or table.M < N:
        raise ValueError('table does not cover the truncation')
    dF = {i: d_dp(i, F) for i in range(1, N + 1)}
    acc = {}
    for (B, A), (cnt, c, degree) in sorted(table.terms.items()):
        if degree != d + 1 or sum(B) > N:
            continue
        factor_terms = [list(dF[b].terms.items()) for b in B]
        if not all(factor_terms):
            continue
        for combo in itertools.product(*factor_terms):
            n_out = sum(key[0] for key, _ in combo) + sum(A)
            if n_out > N:
                continue
            coeff = c
            parts = list(A)
            mu_in = Fraction(0)
            for b, ((nd, ad), cc) in zip(B, combo):
                coeff *= cc
                parts.extend(ad)
                mu_in += Fraction(nd + b + len(ad) - 1, d - 1)
            alpha_out = tuple(sorted(parts, reverse=True))
            if mu(d, alpha_out) != mu_in + 1:
                raise ArithmeticError('weight grading broken at %s -> %s'
                                      % (B, A))
            key = (n_out, alpha_out)
            acc[key] = acc.get(key, 0) + coeff
    return PSeries(N, acc)


def assert_admissible_support(d, F):
    """Raise unless every monomial of F has a nonnegative integer weight."""
    for (n, alpha) in F.terms:
        if not is_admissible(d, alpha):
            raise ArithmeticError('monomial (%d, %s) has no integer weight '
                                  'for d=%d' % (n, alpha, d))


def check_conjecture(d, N):
    """Degree-homogeneous first-derivative equation for F_d.

    Proven ground for d = 2, 3; for d >= 4 the result is reported as
    experimental and is not a gate.
    """
    t0 = time.perf_counter()
    F = series_F(d, N)
    assert_admissible_support(d, F)
    table = TermTable(d, N)
    residual = tildeHW_graded(d, table, F) - _euler_rhs(F, d)
    return _report('conjecture', N, residual, t0, d=d, experimental=d >= 4)


def _rhs_components(F):
    """The three summation families matched against the component series.

    Returns (join3, middle_literal, middle_diagonal, cut3): the triple
    join, the two-factor middle summation in its literal index reading and
    in the index-consistent reading, and the triple cut.
    """
    N = F.N
    dF = {i: d_dp(i, F) for i in range(1, N + 1)}
    third = Fraction(1, 3)
    join3 = zero(N)
    mid_lit = zero(N)
    mid_diag = zero(N)
    cut3 = zero(N)
    for i in range(1, N + 1):
        for j in range(1, N - i + 1):
            for k in range(1, N - i - j + 1):
                s = i + j + k
                g = mul_by_p(s, dF[i] * dF[j] * dF[k])
                join3 = join3 + g.scale(third * i * j * k)
                g = mul_by_p(i + k, mul_by_p(j, dF[i] * dF[j + k]))
                mid_lit = mid_lit + g.scale(i * (j + k))
                g = mul_by_p(i, mul_by_p(j + k, dF[i] * dF[j + k]))
                mid_diag = mid_diag + g.scale(i * (j + k))
                g = mul_by_p(i, mul_by_p(j, mul_by_p(k, dF[s])))
                cut3 = cut3 + g.scale(third * s)
    return join3, mid_lit, mid_diag, cut3


def check_components(N):
    """Classified minimal tuples against the per-type summation families.

    Enumerates the minimal transitive tuples for every admissible type of
    weight at most N, classifies the leading factor, and compares the
    three resulting component series against the matching summation
    families; their sum must be the weight derivative of F_3.  On budget
    exhaustion a partial report with the covered types is returned.
    """
    t0 = time.perf_counter()
    budget.require('max_N', N)
    F = series_F(3, N)
    comp_terms = {1: {}, 2: {}, 3: {}}
    covered = []
    case4_total = 0
    hist_consistent = True
    partial = None
    case_of_type = {1: 3, 2: 2, 3: 1}
    for n in range(1, N + 1):
        for alpha in partitions_of(n):
            if not is_admissible(3, alpha):
                continue
            m = int(mu(3, alpha))
            if m < 1:
                continue
            try:
                tuples = list(enumerate_factorizations(n, 3, m, alpha))
            except budget.BudgetError as err:
                partial = {'n': n, 'alpha': list(alpha), 'error': str(err)}
                break
            hist = classify_leading_case(tuples)
            case4_total += hist[4]
            h_fixed = count_factorizations(n, 3, m, alpha, transitive=True)
            if sum(hist.values()) != h_fixed:
                hist_consistent = False
            denom = factorial(n) * factorial(m - 1)
            weight = Fraction(class_size(alpha), denom)
            for i in (1, 2, 3):
                if hist[case_of_type[i]]:
                    comp_terms[i][(n, alpha)] = hist[case_of_type[i]] * weight
            covered.append([n, list(alpha)])
        if partial:
            break
    report = {
        'id': 'components',
        'N': N,
        'covered': covered,
        'case4_total': case4_total,
        'histograms_match_counts': hist_consistent,
    }
    if partial:
        report['pass'] = False
        report['partial'] = partial
        report['runtime_ms'] = int((time.perf_counter() - t0) * 1000)
        return report
    comps = {i: PSeries(N, comp_terms[i]) for i in (1, 2, 3)}
    join3, mid_lit, mid_diag, cut3 = _rhs_components(F)
    eq1 = comps[1] - join3
    eq2_lit = comps[2] - mid_lit
    eq2_diag = comps[2] - mid_diag
    eq3 = comps[3] - cut3
    total = comps[1] + comps[2] + comps[3] - d_du(3, F)
    report.update({
        'pass': (eq1.is_zero() and eq3.is_zero() and total.is_zero()
                 and case4_total == 0 and hist_consistent),
        'eq1_pass': eq1.is_zero(),
        'eq2_literal_match': eq2_lit.is_zero(),
        'eq2_diagonal_match': eq2_diag.is_zero(),
        'eq3_pass': eq3.is_zero(),
        'sum_pass': total.is_zero(),
        'residual_terms': to_records(eq1 + eq3 + total),
        'runtime_ms': int((time.perf_counter() - t0) * 1000),
    })
    return report
