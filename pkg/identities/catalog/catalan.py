"""
Binomial coefficients as 2-power weighted sums along rows of the Catalan
triangle, and the Catalan trapezoids.
"""
from functools import lru_cache
from math import factorial

from django.conf import settings

from exactmath.numbers import binomial, catalan_closed_form, ceil_half, exact_div, floor_half
from identities.registry import IdentityRecord, register
from pathoracle.services import verify_bijection
from triangles.services import catalan_entry, catalan_number, trapezoid_closed_form, trapezoid_entry


def weighted_row_sum(n: int, k: int) -> int:
    """sum_{s=0..k} C(n,s) 2^(k-s)"""
    return sum(catalan_entry(n, s) * 2 ** (k - s) for s in range(k + 1))


def shifted_row_sum(n: int, k: int) -> int:
    """sum_{s=0..k} C(n+1,s) 2^max(k-1-s, 0)"""
    return sum(catalan_entry(n + 1, s) * 2 ** max(k - 1 - s, 0) for s in range(k + 1))


def _central(n: int) -> int:
    return binomial(n + 1, ceil_half(n + 1))


def _central_rhs(n: int) -> int:
    half = ceil_half(n)
    return sum(catalan_entry(half, s) * 2 ** max(floor_half(n) - s, 0) for s in range(half + 1))


def _packet_lhs(n: int) -> int:
    return exact_div((n + 3) * catalan_number(n), 2)


def _packet_rhs(n: int) -> int:
    return sum(catalan_entry(n, k) * 2 ** abs(n - 2 - k) for k in range(n))


def _dual_lhs(n: int):
    values = [binomial(n + 1, floor_half(n + 1))]
    if n >= 1:
        values += [binomial(2 * n, n)] * 3
    return values


def _dual_rhs(n: int):
    half = floor_half(n)
    values = [sum(catalan_entry(half, s) * 2 ** (ceil_half(n) - s) for s in range(half + 1))]
    if n >= 1:
        values.append(sum(catalan_entry(n - 1, s) * 2 ** (n - s) for s in range(n)))
        values.append(sum(
            exact_div(factorial(n + s - 1) * (n - s), factorial(s) * factorial(n)) * 2 ** (n - s)
            for s in range(n + 1)
        ))
        values.append(sum(binomial(n, s) ** 2 for s in range(n + 1)))
    return values


def _trapezoid_rhs(n: int, m: int, k: int):
    tail = sum(catalan_entry(n + m, s) * 2 ** (k - m - s) for s in range(k - m + 1))
    stair = sum(catalan_entry(n + 1 + s, k - s) for s in range(m))
    return [weighted_row_sum(n, k), tail + stair]


@lru_cache(maxsize=64)
def _bijection_sides(n: int, k: int):
    report = verify_bijection(n, k)
    lhs = (report.lhs,) + tuple(c.size for c in report.per_s)
    rhs = (binomial(n + 1 + k, k),) + tuple(c.expected for c in report.per_s)
    return lhs, rhs


register(IdentityRecord(
    id='main1',
    anchor='binom(n+k+1,k) as a 2-power weighted sum along row n',
    quote='we have the identities',
    params=('n', 'k'),
    domain=lambda n, k: n >= 1 and 0 <= k <= n + 1,
    lhs=lambda n, k: binomial(n + k + 1, k),
    rhs=weighted_row_sum,
    domain_text='n >= 1, 0 <= k <= n+1',
    default_box={'n': (1, 40), 'k': (0, 41)},
))

register(IdentityRecord(
    id='main2',
    anchor='binom(n+k+1,k) as a shifted 2-power weighted sum along row n+1',
    quote='we have the identities',
    params=('n', 'k'),
    domain=lambda n, k: n >= 1 and 0 <= k <= n + 1,
    lhs=lambda n, k: binomial(n + k + 1, k),
    rhs=shifted_row_sum,
    domain_text='n >= 1, 0 <= k <= n+1',
    default_box={'n': (1, 40), 'k': (0, 41)},
))

register(IdentityRecord(
    id='mm',
    anchor='central binomial binom(n+1, ceil((n+1)/2)) along row ceil(n/2)',
    quote=r'For $n \in \mathbb{Z}_{\ge 0}$, we have',
    params=('n',),
    domain=lambda n: n >= 0,
    lhs=_central,
    rhs=_central_rhs,
    domain_text='n >= 0',
    default_box={'n': (0, 80)},
))

register(IdentityRecord(
    id='Dn',
    anchor='packet decomposition (n+3)/2 C_n of fully commutative elements of type D_n',
    quote=r'For $n \ge 1$, we have',
    params=('n',),
    domain=lambda n: n >= 1,
    lhs=_packet_lhs,
    rhs=_packet_rhs,
    domain_text='n >= 1',
    default_box={'n': (1, 40)},
))

register(IdentityRecord(
    id='dual',
    anchor='dual central form; for n >= 1 also three expressions of binom(2n,n)',
    quote='the dual form',
    params=('n',),
    domain=lambda n: n >= 0,
    lhs=_dual_lhs,
    rhs=_dual_rhs,
    domain_text='n >= 0',
    default_box={'n': (0, 40)},
))

register(IdentityRecord(
    id='s1',
    anchor='binom(2k,k-1) along row k',
    quote='we obtain a new identity',
    params=('k',),
    domain=lambda k: k >= 1,
    lhs=lambda k: binomial(2 * k, k - 1),
    rhs=lambda k: sum(catalan_entry(k, s) * 2 ** (k - 1 - s) for s in range(k)),
    domain_text='k >= 1',
    default_box={'k': (1, 40)},
))

register(IdentityRecord(
    id='larger',
    anchor='binom(n+k+1,k) with the sum cut at min(n,k)',
    quote='an interesting expression of a binomial',
    params=('n', 'k'),
    domain=lambda n, k: n >= 0 and 0 <= k <= n + 1,
    lhs=lambda n, k: binomial(n + k + 1, k),
    rhs=lambda n, k: sum(catalan_entry(n, s) * 2 ** (k - s) for s in range(min(n, k) + 1)),
    domain_text='n >= 0, 0 <= k <= n+1',
    default_box={'n': (0, 40), 'k': (0, 41)},
))

register(IdentityRecord(
    id='trap',
    anchor='binom(n+k+1,k) split through the m-column Catalan trapezoid',
    quote='For any triple of integers',
    params=('n', 'm', 'k'),
    domain=lambda n, m, k: n >= 0 and 1 <= m <= k <= n + 1,
    lhs=lambda n, m, k: [binomial(n + k + 1, k)] * 2,
    rhs=_trapezoid_rhs,
    domain_text='n >= 0, 1 <= m <= k <= n+1',
    default_box={'n': (0, 30), 'm': (1, 31), 'k': (1, 31)},
    notes='Stated for m <= k <= n+m; the middle sum equals the binomial only up to k = n+1.',
))

register(IdentityRecord(
    id='trap2',
    anchor='the one- and two-column trapezoids are the Catalan triangle and its shift',
    quote='the numbers $C_m(n,k)$ can be defined in the following way',
    params=('n', 'k'),
    domain=lambda n, k: n >= 0 and 0 <= k <= n + 1,
    lhs=lambda n, k: [trapezoid_entry(2, n, k), trapezoid_entry(1, n, k)],
    rhs=lambda n, k: [catalan_entry(n + 1, k), catalan_entry(n, k)],
    domain_text='n >= 0, 0 <= k <= n+1',
    default_box={'n': (0, 40), 'k': (0, 41)},
))

register(IdentityRecord(
    id='trap-closed',
    anchor='trapezoid entries from the additive rule against binom(n+k,k) - binom(n+k,k-m)',
    quote='the numbers $C_m(n,k)$ can be defined in the following way',
    params=('m', 'n', 'k'),
    domain=lambda m, n, k: m >= 1 and n >= 0 and 0 <= k <= m + n - 1,
    lhs=trapezoid_entry,
    rhs=trapezoid_closed_form,
    domain_text='m >= 1, n >= 0, 0 <= k <= m+n-1',
    default_box={'m': (1, 6), 'n': (0, 40), 'k': (0, 46)},
))

register(IdentityRecord(
    id='cnk',
    anchor='C(n,k) = 2 binom(n+k,k) - binom(n+k+1,k), with the factorial closed form',
    quote='the description of $C(n,k)$ in terms of binomial coefficients',
    params=('n', 'k'),
    domain=lambda n, k: 0 <= k <= n,
    lhs=lambda n, k: [catalan_entry(n, k)] * 2,
    rhs=lambda n, k: [2 * binomial(n + k, k) - binomial(n + k + 1, k), catalan_closed_form(n, k)],
    domain_text='0 <= k <= n',
    default_box={'n': (0, 60), 'k': (0, 60)},
))

register(IdentityRecord(
    id='bijection',
    anchor='2^s-to-1 map from free paths to Dyck paths, class by class',
    quote='we sketch a bijective proof',
    params=('n', 'k'),
    domain=lambda n, k: n >= 0 and 0 <= k <= n + 1 and n + 1 + k <= settings.PATH_ENUMERATION_LIMIT,
    lhs=lambda n, k: _bijection_sides(n, k)[0],
    rhs=lambda n, k: _bijection_sides(n, k)[1],
    domain_text='n >= 0, 0 <= k <= n+1, n+1+k <= PATH_ENUMERATION_LIMIT',
    default_box={'n': (0, 8), 'k': (0, 9)},
    notes='Exhaustive enumeration; class s counts paths with s returns to the axis after the start.',
))
