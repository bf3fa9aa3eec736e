"""
q-deformations: B_s(q), B~_s(q), H_m(q), J_m(q) and the column series L_l.
"""
from typing import Optional

from exactmath.numbers import binomial, fibonacci, jacobsthal, pell
from exactmath.poly import Poly, is_weakly_unimodal
from genfun.registry import coefficient_stream, make_id
from identities.registry import IdentityRecord, register
from polyfam.families import (
    bq_poly,
    bq_tilde_poly,
    bq_tilde_poly_by_rows,
    bq_tilde_poly_from_series,
    fib_poly,
    fib_poly_by_recurrence,
    h_poly,
    h_poly_from_series,
    j_poly,
    j_poly_from_series,
)
from polyfam.lseries import l_closed_form_series, l_series, lk_series_from_q_expansion, lowest_degree
from triangles.services import alt_jacobsthal_entry, b_entry

L_ORDER = 60

# B~_1 .. B~_8 as printed, coefficients by ascending power of q
PRINTED_BQ_TILDE = [
    [0, 1],
    [1],
    [0, 1, 0, 1],
    [1, 0, 2],
    [0, 2, 0, 2, 0, 1],
    [1, 0, 4, 0, 3],
    [0, 3, 0, 6, 0, 3, 0, 1],
    [1, 0, 7, 0, 9, 0, 4],
]

# B~_s(2) for s = 1 .. 9
PRINTED_BQ_TILDE_AT_TWO = [2, 1, 10, 9, 52, 65, 278, 429, 1520]


def _sign(s: int) -> int:
    return -1 if s % 2 else 1


def _bsq_lhs(s: int):
    values = [bq_poly(s), bq_tilde_poly(s), bq_tilde_poly(s), coefficient_stream(make_id('Fq_shifted'), s)[s]]
    if s >= 1:
        values.append(bq_poly(s + 1))
    return values


def _bsq_rhs(s: int):
    values = [
        coefficient_stream(make_id('Fq'), s)[s],
        bq_tilde_poly_by_rows(s),
        bq_tilde_poly_from_series(s),
        bq_tilde_poly(s) * _sign(s),
    ]
    if s >= 1:
        q = Poly.monomial(1, 1)
        values.append(-q * bq_poly(s) + bq_poly(s - 1) + Poly.monomial(1, s + 1))
    return values


def _bt_list_lhs(s: int):
    poly = bq_tilde_poly(s)
    values = [poly(2)]
    if s <= len(PRINTED_BQ_TILDE):
        values.append(poly.to_list())
    return values


def _bt_list_rhs(s: int):
    values = [PRINTED_BQ_TILDE_AT_TWO[s - 1]]
    if s <= len(PRINTED_BQ_TILDE):
        values.append(PRINTED_BQ_TILDE[s - 1])
    return values


def _shape(poly: Poly, parity: Optional[int] = None):
    coeffs = poly.to_list()
    flags = [
        all(c >= 0 for c in coeffs),
        is_weakly_unimodal([c for c in coeffs if c]),
    ]
    if parity is not None:
        flags.append(all(c == 0 for power, c in enumerate(coeffs) if power % 2 != parity))
    return flags


def _h_lhs(m: int):
    h = h_poly(m)
    values = [
        h(0), h(1), h(-1), j_poly(m)(1),
        sum(binomial(m - r - 1, r) * 2 ** r for r in range((m - 1) // 2 + 1)),
        sum(abs(alt_jacobsthal_entry(m, t)) for t in range(1, m + 1)),
        h, j_poly(m),
    ]
    if m >= 3:
        values.append(h(-1))
    return values


def _h_rhs(m: int):
    values = [1, 1] + [jacobsthal(m)] * 4 + [h_poly_from_series(m), j_poly_from_series(m)]
    if m >= 3:
        values.append(h_poly(m - 1)(-1) + 2 * h_poly(m - 2)(-1))
    return values


def _l_lhs(ell: int):
    series = l_series(ell, L_ORDER)
    values = [series, series[ell + 1:]]
    if ell <= 3:
        values.append(series)
    return values


def _l_rhs(ell: int):
    values = [
        lk_series_from_q_expansion(1, ell, L_ORDER),
        [b_entry(m, ell) for m in range(ell + 1, L_ORDER + 1)],
    ]
    if ell <= 3:
        values.append(l_closed_form_series(ell, L_ORDER))
    return values


register(IdentityRecord(
    id='Bsq',
    anchor='B_s(q), B~_s(q) from the triangle against F(x,q), CF(x,q) and the B_s(q) recurrence',
    quote='we define a $q$-analogue of Fibonacci number',
    params=('s',),
    domain=lambda s: s >= 0,
    lhs=_bsq_lhs,
    rhs=_bsq_rhs,
    domain_text='s >= 0',
    default_box={'s': (0, 40)},
    notes='The recurrence needs q^(s+1) as its last term; with q^s it already fails at s = 1.',
))

register(IdentityRecord(
    id='Bt-list',
    anchor='B~_1 .. B~_8 and the values B~_s(2) as printed',
    quote='In particular, we have',
    params=('s',),
    domain=lambda s: 1 <= s <= len(PRINTED_BQ_TILDE_AT_TWO),
    lhs=_bt_list_lhs,
    rhs=_bt_list_rhs,
    domain_text='1 <= s <= 9',
    default_box={'s': (1, 9)},
))

register(IdentityRecord(
    id='Bt-shape',
    anchor='B~_s(q) has non-negative coefficients on powers of the parity of s and is weakly unimodal',
    quote='We observe that',
    params=('s',),
    domain=lambda s: s >= 0,
    lhs=lambda s: _shape(bq_tilde_poly(s), s % 2),
    rhs=lambda s: [True, True, True],
    domain_text='s >= 0',
    default_box={'s': (0, 60)},
    notes='Unimodality is read on the nonzero coefficients.',
))

register(IdentityRecord(
    id='H',
    anchor='H_m(0) = H_m(1) = 1, H_m(-1) = J_m(1) = J_m, and H_m, J_m from Q(x,q), Q(x,-q)',
    quote='That is, we have',
    params=('m',),
    domain=lambda m: m >= 1,
    lhs=_h_lhs,
    rhs=_h_rhs,
    domain_text='m >= 1',
    default_box={'m': (1, 50)},
))

register(IdentityRecord(
    id='J-shape',
    anchor='J_m(q) has non-negative, weakly unimodal coefficients',
    quote='Note that $J_m(q)$ is weakly unimodal.',
    params=('m',),
    domain=lambda m: m >= 1,
    lhs=lambda m: _shape(j_poly(m)),
    rhs=lambda m: [True, True],
    domain_text='m >= 1',
    default_box={'m': (1, 60)},
    notes='Unimodality is read on the nonzero coefficients.',
))

register(IdentityRecord(
    id='fibpoly',
    anchor='Fibonacci polynomials from 1/(1-qx-x^2); Pell numbers at q = 2',
    quote='The well-known Fibonacci polynomial',
    params=('s',),
    domain=lambda s: s >= 0,
    lhs=lambda s: [fib_poly(s), fib_poly(s)(2), fib_poly(s)(1)],
    rhs=lambda s: [fib_poly_by_recurrence(s), pell(s), fibonacci(s)],
    domain_text='s >= 0',
    default_box={'s': (0, 30)},
    notes='Indexed with F_1 = 1, F_2 = q, so the x^s coefficient of the series is F_(s+1).',
))

register(IdentityRecord(
    id='L',
    anchor='L_l from its recursion against the q-expansion of Q(x,q), column l of B, and the closed forms',
    quote=r'For $\ell \ge 0$, we have',
    params=('ell',),
    domain=lambda ell: ell >= 0,
    lhs=_l_lhs,
    rhs=_l_rhs,
    domain_text='ell >= 0',
    default_box={'ell': (0, 15)},
    notes='Series compared up to x^60; closed forms exist for ell <= 3.',
))

register(IdentityRecord(
    id='lowdeg',
    anchor='L_l starts at x^(l+1) for even l and at x^(l+2) for odd l',
    quote='the lowest degree of $L_{\\ell}(x)$',
    params=('ell',),
    domain=lambda ell: ell >= 0,
    lhs=lambda ell: lowest_degree(l_series(ell, ell + 4)),
    rhs=lambda ell: ell + 1 + ell % 2,
    domain_text='ell >= 0',
    default_box={'ell': (0, 20)},
))
