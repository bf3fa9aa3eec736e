"""
Brute-force lattice path counting, independent of the algebraic formulas.

Counting uses dynamic programming over (step, height). The bijection check
enumerates every free path explicitly and sorts the paths by how often they
touch the x-axis after the start; flipping the excursions below the axis
turns each class into 2^s copies of non-negative paths.
"""
import logging
from collections import Counter
from itertools import combinations
from typing import Dict, Iterator, Sequence, Tuple

from django.conf import settings

from core.exceptions import BoundExceeded, DomainError
from exactmath.numbers import binomial
from pathoracle.models import BijectionReport, PathConstraint, PathSpec, ReturnClass
from triangles.services import catalan_entry

logger = logging.getLogger("pathoracle.services")

Path = Tuple[int, ...]


def count_paths(spec: PathSpec) -> int:
    """
    Number of paths matching ``spec``.

    Args:
        spec: Endpoint and height constraint

    Returns:
        Exact count; 0 when the endpoint has the wrong parity or is out of reach

    Raises:
        DomainError: If ``spec.x`` is negative or a height ceiling is missing
    """
    if spec.x < 0:
        raise DomainError(f"Path length must be non-negative, got {spec.x}")
    if (spec.x - spec.y) % 2 or abs(spec.y) > spec.x:
        return 0
    if spec.constraint == PathConstraint.FREE:
        return _count_dp(spec.x, spec.y, None, None)
    if spec.constraint == PathConstraint.NON_NEGATIVE:
        return _count_dp(spec.x, spec.y, 0, None)
    if spec.h is None or spec.h < 0:
        raise DomainError(f"Height ceiling must be given and non-negative, got {spec.h}")
    return _count_dp(spec.x, spec.y, 0, spec.h)


def _count_dp(steps: int, target: int, floor, ceiling) -> int:
    heights: Dict[int, int] = {0: 1}
    for _ in range(steps):
        following: Dict[int, int] = {}
        for height, ways in heights.items():
            for nxt in (height + 1, height - 1):
                if floor is not None and nxt < floor:
                    continue
                if ceiling is not None and nxt > ceiling:
                    continue
                following[nxt] = following.get(nxt, 0) + ways
        heights = following
    return heights.get(target, 0)


def enumerate_paths(x: int, y: int) -> Iterator[Path]:
    """Every free path to (x, y) as a tuple of +1/-1 steps, in lexicographic order of down-step positions."""
    if x < 0 or (x - y) % 2 or abs(y) > x:
        return
    downs = (x - y) // 2
    for positions in combinations(range(x), downs):
        steps = [1] * x
        for p in positions:
            steps[p] = -1
        yield tuple(steps)


def decompose_returns(path: Sequence[int]) -> int:
    """Number of points after the start where the path is back on the x-axis."""
    height, contacts = 0, 0
    for step in path:
        height += step
        if height == 0:
            contacts += 1
    return contacts


def verify_bijection(n: int, k: int) -> BijectionReport:
    """
    Enumerate the free paths to (n+1+k, n+1-k) and check the class sizes.

    Class s (paths touching the axis s times after the start) must hold
    C(n, k-s) * 2^s paths, which adds up to binom(n+1+k, k).

    Raises:
        DomainError: Outside 0 <= k <= n+1
        BoundExceeded: If n+1+k exceeds ``settings.PATH_ENUMERATION_LIMIT``
    """
    if n < 0 or k < 0 or k > n + 1:
        raise DomainError(f"Bijection check needs 0 <= k <= n+1, got n={n}, k={k}")
    length = n + 1 + k
    limit = settings.PATH_ENUMERATION_LIMIT
    if length > limit:
        raise BoundExceeded(f"Path length {length} exceeds the enumeration limit {limit}")

    classes = Counter(decompose_returns(path) for path in enumerate_paths(length, n + 1 - k))
    per_s = []
    for s in range(0, k + 1):
        dyck_count = catalan_entry(n, k - s)
        per_s.append(ReturnClass(s=s, size=classes.get(s, 0), dyck_count=dyck_count, expected=dyck_count * 2 ** s))
    lhs = sum(classes.values())
    rhs = sum(c.expected for c in per_s)
    holds = lhs == rhs == binomial(length, k) and all(c.size == c.expected for c in per_s)
    holds = holds and set(classes) <= {c.s for c in per_s}
    logger.debug(f"Bijection check n={n}, k={k}: {lhs} paths, holds={holds}")
    return BijectionReport(n=n, k=k, lhs=lhs, rhs=rhs, per_s=per_s, holds=holds)


def count_dyck_height(length: int, h: int) -> int:
    """Non-negative paths from (0,0) to (length,0) whose maximum height is exactly h."""
    if length < 0 or length % 2:
        raise DomainError(f"Dyck path length must be even and non-negative, got {length}")
    if h < 1:
        raise DomainError(f"Height must be positive, got {h}")
    return _count_dp(length, 0, 0, h) - _count_dp(length, 0, 0, h - 1)


def dyck_height_profile(length: int) -> Dict[int, int]:
    """Number of Dyck paths of ``length`` by maximum height."""
    if length < 0 or length % 2:
        raise DomainError(f"Dyck path length must be even and non-negative, got {length}")
    if length == 0:
        return {0: 1}
    return {h: count_dyck_height(length, h) for h in range(1, length // 2 + 1)}
