"""
k-analogues A_k(m,t) and the families built on them.
"""
from exactmath.numbers import binomial, fibonacci
from genfun.registry import coefficient_stream, make_id
from identities.registry import IdentityRecord, register
from oeisdata.services import load_bundled
from pathoracle.services import count_dyck_height
from polyfam.families import (
    bk_poly,
    bk_poly_from_series,
    bk_tilde_poly,
    bk_tilde_poly_by_rows,
    bq_tilde_poly,
    hk_poly,
    hk_poly_from_series,
    jk_at_one,
    jk_poly,
    jk_poly_from_series,
)
from polyfam.lseries import lk_series, lk_series_from_q_expansion
from triangles.services import b_k_entry, diagonal_sum, k_analog_entry

K_BOX = (-3, 3)
SERIES_ORDER = 40
LK_ORDER = 30

# J_(2,m)(1) for m = 1 .. 8 as printed
PRINTED_J2_AT_ONE = [1, 1, 4, 6, 16, 28, 64, 120]

# k = -1 lists as printed: diagonal sums from s = 2, |A_(-1)(m,4)| from m = 4,
# B_(-1)(m,2) from m = 5 and -B_(-1)(m,3) from m = 6
PRINTED_KM1_DIAGONALS = [1, 1, 4, 9, 25, 64, 169, 441]
PRINTED_KM1_COLUMN4 = [1, 3, 5, 7, 10, 14, 18, 22]
PRINTED_KM1_B2 = [2, 5, 9, 14, 20, 27]
PRINTED_KM1_B3 = [2, 7, 16, 30, 50, 77]


def _snapshot_term(oeis_id: str, index: int):
    seq = load_bundled(oeis_id)
    if index in seq.index_range():
        return seq.terms[index - seq.offset]
    return None


def _hk_lhs(k: int, m: int):
    return [
        hk_poly(k, m)(1),
        hk_poly(k, m),
        coefficient_stream(make_id('Qk_at_q1', k=k), m)[m].coeff(0),
    ]


def _hk_rhs(k: int, m: int):
    power = k ** ((m - 1) // 2)
    return [power, hk_poly_from_series(k, m), power]


def _jk_lhs(k: int, m: int):
    values = [jk_poly(k, m)]
    if k > 0:
        values.append(jk_at_one(k, m))
    if k == 2 and m <= len(PRINTED_J2_AT_ONE):
        values.append(jk_at_one(k, m))
    return values


def _jk_rhs(k: int, m: int):
    values = [jk_poly_from_series(k, m)]
    if k > 0:
        values.append(sum(abs(k_analog_entry(k, m, t)) for t in range(1, m + 1)))
    if k == 2 and m <= len(PRINTED_J2_AT_ONE):
        values.append(PRINTED_J2_AT_ONE[m - 1])
    return values


def _fk_lhs(k: int, s: int):
    values = [bk_poly(k, s), bk_tilde_poly(k, s)]
    if k == 1:
        values.append(bk_tilde_poly(k, s))
    return values


def _fk_rhs(k: int, s: int):
    values = [bk_poly_from_series(k, s), bk_tilde_poly_by_rows(k, s)]
    if k == 1:
        values.append(bq_tilde_poly(s))
    return values


def _lk_lhs(k: int, ell: int):
    series = lk_series(k, ell, LK_ORDER)
    return [series, series[ell + 1:]]


def _lk_rhs(k: int, ell: int):
    return [
        lk_series_from_q_expansion(k, ell, LK_ORDER),
        [b_k_entry(k, m, ell) for m in range(ell + 1, LK_ORDER + 1)],
    ]


def _k2_lhs(s: int):
    negative = -diagonal_sum(2, 2 * s + 1)
    values = [diagonal_sum(2, 2 * s), negative]
    if _snapshot_term('A258109', s + 1) is not None:
        values.append(negative)
    return values


def _k2_rhs(s: int):
    values = [fibonacci(2 * s), count_dyck_height(2 * (s + 1), 3)]
    term = _snapshot_term('A258109', s + 1)
    if term is not None:
        values.append(term)
    return values


def _km1_sides(s: int):
    diagonal = diagonal_sum(-1, 2 * s, include_zero_column=True)
    column4 = abs(k_analog_entry(-1, s + 3, 4))
    lhs = [diagonal, column4]
    rhs = [fibonacci(s - 1) ** 2, binomial(s + 2, 2) // 2]
    printed = [
        (diagonal, PRINTED_KM1_DIAGONALS, s - 2),
        (column4, PRINTED_KM1_COLUMN4, s - 1),
        (b_k_entry(-1, s + 4, 2), PRINTED_KM1_B2, s - 1),
        (-b_k_entry(-1, s + 5, 3), PRINTED_KM1_B3, s - 1),
    ]
    for value, listed, index in printed:
        if 0 <= index < len(listed):
            lhs.append(value)
            rhs.append(listed[index])
    return lhs, rhs


register(IdentityRecord(
    id='k',
    anchor='H_(k,m) from A_k against Q_k(x,q); H_(k,m)(1) = k^floor((m-1)/2) and Q_k(x,1)',
    quote='In particular, when $q=1$, we have',
    params=('k', 'm'),
    domain=lambda k, m: k != 0 and m >= 1,
    lhs=_hk_lhs,
    rhs=_hk_rhs,
    domain_text='k != 0, m >= 1',
    default_box={'k': K_BOX, 'm': (1, 30)},
))

register(IdentityRecord(
    id='Lk',
    anchor='L_(k,l) from its recursion against the q-expansion of Q_k and column l of B_k',
    quote='using a similar argument as in the proof',
    params=('k', 'ell'),
    domain=lambda k, ell: k != 0 and ell >= 0,
    lhs=_lk_lhs,
    rhs=_lk_rhs,
    domain_text='k != 0, ell >= 0',
    default_box={'k': K_BOX, 'ell': (0, 10)},
    notes='Series compared up to x^30; the inhomogeneous term carries k^floor((ell+1)/2).',
))

register(IdentityRecord(
    id='Jk',
    anchor='J_(k,m)(q) = H_(k,m)(-q) against Q_k(x,-q); for k > 0, J_(k,m)(1) is the absolute row sum',
    quote='can be considered as the $k$-analogue of the $m^{\\mathrm{th}}$ Jacobsthal number',
    params=('k', 'm'),
    domain=lambda k, m: k != 0 and m >= 1,
    lhs=_jk_lhs,
    rhs=_jk_rhs,
    domain_text='k != 0, m >= 1',
    default_box={'k': K_BOX, 'm': (1, 30)},
    notes='For k < 0 the row signs do not alternate, so the absolute row sum differs from J_(k,m)(1).',
))

register(IdentityRecord(
    id='Fk',
    anchor='B_(k,s)(q), B~_(k,s)(q) from A_k against F_k(x,q) and CF_k(x,q)',
    quote='The polynomial $\\widetilde{B}_{k,s}(q)$ can be considered as a $k$-analogue',
    params=('k', 's'),
    domain=lambda k, s: k != 0 and s >= 0,
    lhs=_fk_lhs,
    rhs=_fk_rhs,
    domain_text='k != 0, s >= 0',
    default_box={'k': K_BOX, 's': (0, 30)},
    notes='F_k(x,q) is indexed from s = 0, with B_(k,0)(q) = 1.',
))

register(IdentityRecord(
    id='colgf-k',
    anchor='1/((1-kx^2)(1+x)^(t-1)) = sum_m A_k(m,t) x^(m-t)',
    quote='in the same way as we obtained',
    params=('k', 't'),
    domain=lambda k, t: k != 0 and t >= 1,
    lhs=lambda k, t: [c.coeff(0) for c in coefficient_stream(make_id('AkColumnGF', t=t, k=k), SERIES_ORDER)],
    rhs=lambda k, t: [k_analog_entry(k, t + i, t) for i in range(SERIES_ORDER + 1)],
    domain_text='k != 0, t >= 1',
    default_box={'k': K_BOX, 't': (1, 20)},
))

register(IdentityRecord(
    id='k2diag',
    anchor='k = 2 diagonals: positive ones give Fib(2s), negative ones Dyck paths of height 3',
    quote='We also consider diagonal sums and find',
    params=('s',),
    domain=lambda s: s >= 1,
    lhs=_k2_lhs,
    rhs=_k2_rhs,
    domain_text='s >= 1',
    default_box={'s': (1, 20)},
    notes='Also compared with the bundled A258109 terms where the snapshot reaches.',
))

register(IdentityRecord(
    id='km1diag',
    anchor='k = -1 diagonals including column 0 give Fib(s-1)^2; |A_(-1)(m,4)| = floor(binom(m-1,2)/2)',
    quote='We find some meaningful subsequences of this triangle',
    params=('s',),
    domain=lambda s: s >= 1,
    lhs=lambda s: _km1_sides(s)[0],
    rhs=lambda s: _km1_sides(s)[1],
    domain_text='s >= 1',
    default_box={'s': (1, 20)},
    notes='The diagonal sums include the t = 0 column; without it they do not give squares. '
          'Also compared with the printed lists for s <= 9.',
))
