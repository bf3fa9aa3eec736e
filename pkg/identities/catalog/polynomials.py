"""
Catalan triangle polynomials and their modified version.
"""
from exactmath.numbers import binomial
from identities.registry import IdentityRecord, register
from oeisdata.services import load_bundled
from polyfam.families import (
    catalan_poly,
    catalan_poly_terms,
    modified_catalan_poly,
    modified_catalan_poly_terms,
)
from triangles.services import catalan_entry, trapezoid_entry


def _bino_lhs(d: int, n: int, k: int):
    values = [d * catalan_poly(n - 1, k)(d) - (d - 1) * catalan_poly(n, k)(d)]
    if d == 2:
        values.append(2 * modified_catalan_poly(n - 1, k)(2) - modified_catalan_poly(n, k)(2))
    return values


def _bino_rhs(d: int, n: int, k: int):
    return [catalan_entry(n, k)] * (2 if d == 2 else 1)


def _eval_f_lhs(n: int, k: int):
    poly = catalan_poly(n, k)
    values = [poly(0), poly(1), poly(1), poly(2)]
    if k < n:
        values.append(poly(2))
    return values


def _eval_f_rhs(n: int, k: int):
    values = [catalan_entry(n, k), catalan_entry(n + 1, k), trapezoid_entry(2, n, k), binomial(n + k + 1, k)]
    if k < n:
        values.append(trapezoid_entry(n, n + 1, k))
    return values


def _eval_ft_lhs(n: int, k: int):
    poly = modified_catalan_poly(n, k)
    return [poly(0), poly(1), poly(2)]


def _eval_ft_rhs(n: int, k: int):
    return [
        catalan_entry(n + 1, k - 1) + catalan_entry(n + 1, k),
        catalan_entry(n + 2, k),
        binomial(n + k + 1, k),
    ]


def _sigma_term(n: int) -> int:
    seq = load_bundled('A059714')
    return seq.terms[n - seq.offset]


def _sigma_in_range(n: int) -> bool:
    # the domain is bounded by the bundled snapshot
    try:
        seq = load_bundled('A059714')
    except ValueError:
        return False
    return n in seq.index_range()


register(IdentityRecord(
    id='bino',
    anchor='C(n,k) = d F_(n-1,k)(d) - (d-1) F_(n,k)(d); the modified polynomials only at d = 2',
    quote=r'For any $d \in \mathbb{Z}_{\ge 1}$, we have',
    params=('d', 'n', 'k'),
    domain=lambda d, n, k: d >= 1 and n >= 1 and 0 <= k <= n - 1,
    lhs=_bino_lhs,
    rhs=_bino_rhs,
    domain_text='d >= 1, n >= 1, 0 <= k <= n-1',
    default_box={'d': (1, 6), 'n': (1, 31), 'k': (0, 30)},
    notes='The same statement for the modified polynomials holds at d = 2 only; see bino2-corrected.',
))

register(IdentityRecord(
    id='bino2-corrected',
    anchor='d F~_(n-1,k)(d) - (d-1) F~_(n,k)(d) = C(n,k) + (2-d) C(n+1,k-1)',
    quote='We have the same result',
    params=('d', 'n', 'k'),
    domain=lambda d, n, k: d >= 1 and n >= 1 and 0 <= k <= n - 1,
    lhs=lambda d, n, k: d * modified_catalan_poly(n - 1, k)(d) - (d - 1) * modified_catalan_poly(n, k)(d),
    rhs=lambda d, n, k: catalan_entry(n, k) + (2 - d) * catalan_entry(n + 1, k - 1),
    domain_text='d >= 1, n >= 1, 0 <= k <= n-1',
    default_box={'d': (1, 6), 'n': (1, 31), 'k': (0, 30)},
    notes='Correction term found by sweeping; it vanishes at d = 2. Smallest failure of the '
          'uncorrected form: d=3, n=2, k=1.',
))

register(IdentityRecord(
    id='evalF',
    anchor='F_(n,k) at 0, 1 and 2: C(n,k), C(n+1,k) = C_2(n,k), binom(n+k+1,k)',
    quote='Evaluations of',
    params=('n', 'k'),
    domain=lambda n, k: 0 <= k <= n,
    lhs=_eval_f_lhs,
    rhs=_eval_f_rhs,
    domain_text='0 <= k <= n',
    default_box={'n': (0, 30), 'k': (0, 30)},
    notes='F_(n,k)(2) = C_n(n+1,k) only for k < n; at k = n the trapezoid entry is '
          'binom(2n+1,n) - 1.',
))

register(IdentityRecord(
    id='evalFt',
    anchor='F~_(n,k) at 0, 1 and 2: C(n+1,k-1) + C(n+1,k), C(n+2,k), binom(n+k+1,k)',
    quote='Evaluations of',
    params=('n', 'k'),
    domain=lambda n, k: 0 <= k <= n,
    lhs=_eval_ft_lhs,
    rhs=_eval_ft_rhs,
    domain_text='0 <= k <= n',
    default_box={'n': (0, 30), 'k': (0, 30)},
))

register(IdentityRecord(
    id='pascal',
    anchor='F_(n,k) = F_(n,k-1) + F_(n-1,k), and the same for F~, as polynomials',
    quote='Clearly,',
    params=('n', 'k'),
    domain=lambda n, k: 1 <= k <= n,
    lhs=lambda n, k: [catalan_poly(n, k), modified_catalan_poly(n, k)],
    rhs=lambda n, k: [
        catalan_poly(n, k - 1) + catalan_poly_terms(n - 1, k),
        modified_catalan_poly(n, k - 1) + modified_catalan_poly_terms(n - 1, k),
    ],
    domain_text='1 <= k <= n',
    default_box={'n': (1, 40), 'k': (1, 40)},
    notes='At k = n the row n-1 term is read with C(n-1,n) = 0.',
))

register(IdentityRecord(
    id='sigma',
    anchor='stacked directed animals: sigma_n = F~_(n,n)(3)',
    quote='We conjecture',
    params=('n',),
    domain=_sigma_in_range,
    lhs=lambda n: modified_catalan_poly(n, n)(3),
    rhs=_sigma_term,
    domain_text='n within the bundled A059714 snapshot',
    default_box={'n': (0, 11)},
    notes='Conjecture; checked against the bundled terms only.',
))
