"""
The alternating Jacobsthal triangle: binomials along rows of the Catalan
triangle, column generating functions, subsequences and diagonal sums.
"""
from exactmath.numbers import binomial, exact_div, fibonacci
from genfun.registry import coefficient_stream, make_id
from identities.registry import IdentityRecord, register
from triangles.services import a_entry, alt_jacobsthal_entry, b_entry, b_sub_entry, catalan_entry, diagonal_sum

A = alt_jacobsthal_entry

SERIES_ORDER = 40

# binom(n+k+1,k) worked out term by term for these (n, k)
WORKED_EXAMPLES = {(4, 3): 56, (5, 3): 84, (4, 4): 126}


def _nmk_rhs(n: int, m: int, k: int) -> int:
    head = sum(catalan_entry(n + m, s) * 2 ** (k - m - s) for s in range(k - m + 1))
    return head + sum(A(m, t) * catalan_entry(n + m, k - m + t) for t in range(1, m + 1))


def _ac_rhs(n: int, k: int) -> int:
    return sum(A(k, t) * catalan_entry(n + k, t) for t in range(k + 1))


def _column_series(gf_name: str, t: int):
    return [c.coeff(0) for c in coefficient_stream(make_id(gf_name, t=t), SERIES_ORDER)]


def _companion_rhs(t: int):
    values = []
    for i in range(SERIES_ORDER + 1):
        j, odd = divmod(i, 2)
        values.append(b_sub_entry(j + 1, t) if odd else a_entry(j + 1, t))
    return values


def _sub_closed_forms(n: int):
    return [
        n, n,
        n * n, n * (n + 1),
        exact_div(n * (n + 1) * (4 * n - 1), 6), exact_div(n * (n + 1) * (4 * n + 5), 6),
        exact_div(n * (n + 1) * (2 * n * n + 2 * n - 1), 6), exact_div(n * (n + 1) ** 2 * (n + 2), 3),
    ]


def _sub_lhs(n: int):
    values = []
    for t in range(2, 6):
        values += [a_entry(n, t), b_sub_entry(n, t)]
    for t in range(2, 7):
        values += [a_entry(n, t), b_sub_entry(n, t)]
    return values


def _sub_rhs(n: int):
    values = _sub_closed_forms(n)
    for t in range(2, 7):
        a_prev = sum(a_entry(k, t - 1) for k in range(1, n + 1))
        b_prev = sum(b_sub_entry(k, t - 1) for k in range(1, n + 1))
        values += [a_prev + b_prev - b_sub_entry(n, t - 1), b_prev + a_prev]
    return values


def _b_formula(m: int, t: int) -> int:
    if t == 1:
        return 2 - m
    if t == 2:
        return 4 + exact_div(m * (m - 5), 2)
    return 8 - exact_div(m * (m * m - 9 * m + 32), 6)


def _lembk_lhs(m: int, t: int):
    return [b_entry(m, t)] * (2 if t <= 3 else 1)


def _lembk_rhs(m: int, t: int):
    values = [1 - sum(b_entry(k, t - 1) for k in range(t, m))]
    if t <= 3:
        values.append(_b_formula(m, t))
    return values


def _bs(s: int) -> int:
    return diagonal_sum(1, s + 2)


def _bs_lhs(s: int):
    values = [_bs(s)] * 3
    if s >= 1:
        values.append(_bs(s + 1))
    return values


def _bs_rhs(s: int):
    sign = -1 if s % 2 else 1
    values = [
        1 + sign * fibonacci(s),
        sum((-1) ** (k - 1) * fibonacci(k) for k in range(1, s + 2)),
        coefficient_stream(make_id('F'), s)[s].coeff(0),
    ]
    if s >= 1:
        values.append(-_bs(s) + _bs(s - 1) + 1)
    return values


register(IdentityRecord(
    id='nmk',
    anchor='binom(n+k+1,k) along row n+m with the m-th row of the alternating Jacobsthal triangle',
    quote=r'For any $n > k \ge m \ge t \ge 1$, we have',
    params=('n', 'm', 'k'),
    domain=lambda n, m, k: n > k >= m >= 1,
    lhs=lambda n, m, k: binomial(n + k + 1, k),
    rhs=_nmk_rhs,
    domain_text='n > k >= m >= 1',
    default_box={'n': (1, 30), 'm': (1, 29), 'k': (1, 29)},
))

register(IdentityRecord(
    id='AC',
    anchor='binom(n+k+1,k) = sum_t A(k,t) C(n+k,t)',
    quote=r'For any $n > k$, we have',
    params=('n', 'k'),
    domain=lambda n, k: n > k >= 0,
    lhs=lambda n, k: binomial(n + k + 1, k),
    rhs=_ac_rhs,
    domain_text='n > k >= 0',
    default_box={'n': (1, 30), 'k': (0, 29)},
    notes='Sweeping with the domain check off shows it also holds at k = n and k = n+1.',
))

register(IdentityRecord(
    id='AC-examples',
    anchor='the three worked values 56, 84 and 126',
    quote='1 \\times 1+ 1 \\times 7 - 1 \\times 27',
    params=('n', 'k'),
    domain=lambda n, k: (n, k) in WORKED_EXAMPLES,
    lhs=lambda n, k: _ac_rhs(n, k),
    rhs=lambda n, k: WORKED_EXAMPLES[(n, k)],
    domain_text='(n, k) in {(4, 3), (5, 3), (4, 4)}',
    default_box={'n': (4, 5), 'k': (3, 4)},
))

register(IdentityRecord(
    id='rowsum',
    anchor='rows of A sum to 1 past column 0 and end in 1',
    quote='by induction on $m$, one can see that',
    params=('m',),
    domain=lambda m: m >= 1,
    lhs=lambda m: [sum(A(m, t) for t in range(1, m + 1)), A(m, m)],
    rhs=lambda m: [1, 1],
    domain_text='m >= 1',
    default_box={'m': (1, 100)},
))

register(IdentityRecord(
    id='alt-column',
    anchor='A(m,t) as an alternating sum down column t-1',
    quote='The numbers $A(m,t)$ can be encoded into a generating function',
    params=('m', 't'),
    domain=lambda m, t: m >= t >= 1,
    lhs=A,
    rhs=lambda m, t: sum((-1) ** (m - 1 - k) * A(k, t - 1) for k in range(t - 1, m)),
    domain_text='m >= t >= 1',
    default_box={'m': (1, 40), 't': (1, 40)},
))

register(IdentityRecord(
    id='colgf',
    anchor='1/((1-x)(1+x)^t) = sum_m A(m,t) x^(m-t)',
    quote='We have',
    params=('t',),
    domain=lambda t: t >= 0,
    lhs=lambda t: _column_series('ColumnGF', t),
    rhs=lambda t: [A(t + i, t) for i in range(SERIES_ORDER + 1)],
    domain_text='t >= 0',
    default_box={'t': (0, 30)},
    notes='Coefficients compared up to x^40.',
))

register(IdentityRecord(
    id='companion',
    anchor='1/((1+x)(1-x)^t) interleaves a_(m,t) and b_(m,t)',
    quote='Note also that',
    params=('t',),
    domain=lambda t: t >= 1,
    lhs=lambda t: _column_series('CompanionColumnGF', t),
    rhs=_companion_rhs,
    domain_text='t >= 1',
    default_box={'t': (1, 20)},
    notes='Coefficients compared up to x^40.',
))

register(IdentityRecord(
    id='sub',
    anchor='closed forms of a_(n,t), b_(n,t) for t <= 5 and the two column recurrences',
    quote='We compute more and obtain',
    params=('n',),
    domain=lambda n: n >= 1,
    lhs=_sub_lhs,
    rhs=_sub_rhs,
    domain_text='n >= 1',
    default_box={'n': (1, 50)},
    notes='The recurrences are checked for t = 2..6.',
))

register(IdentityRecord(
    id='lembk',
    anchor='B(m,t) = 1 - sum_{k=t..m-1} B(k,t-1), with the explicit columns t <= 3',
    quote=r'For $m \ge t$, we have',
    params=('m', 't'),
    domain=lambda m, t: m >= t >= 1,
    lhs=_lembk_lhs,
    rhs=_lembk_rhs,
    domain_text='m >= t >= 1',
    default_box={'m': (1, 60), 't': (1, 60)},
))

register(IdentityRecord(
    id='Bs',
    anchor='anti-diagonal sums B_s = 1 + (-1)^s Fib(s), their generating function and recurrence',
    quote='the sums along lines of slope $1$',
    params=('s',),
    domain=lambda s: s >= 0,
    lhs=_bs_lhs,
    rhs=_bs_rhs,
    domain_text='s >= 0',
    default_box={'s': (0, 60)},
))
