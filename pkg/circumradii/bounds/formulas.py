"""Bound formulas module."""

from fractions import Fraction
from typing import NamedTuple, Optional

from scipy.special import comb  # type: ignore

from circumradii.bounds.exceptions import BoundShapeError, KTooSmallError
from circumradii.utils.logger import logger

MIN_K = 4
SMALL_CASES = {4: 9, 5: 37}
CURVE_POINTS = 36  # Bezout bound for a sextic against a sextic
LEMMA_FLOOR = 37
RATIO_K_MIN = 10
LEMMA_RATIO_FACTOR = 2


class BoundTable(NamedTuple):
    """Exact values of the bound formulas at one k."""

    k: int
    erdos_claimed: int
    small_case: Optional[int]
    lemma_m: int
    main_n: int


def _binom(n: int, k: int) -> int:
    return int(comb(n, k, exact=True))


def check_k(k: int) -> None:
    """Check k is an integer of at least 4.

    :param k: target subset size
    :type k: int
    :raises TypeError: Type error exception
    :raises KTooSmallError: K too small exception
    """
    if isinstance(k, bool) or not isinstance(k, int):
        raise TypeError("k must be an integer.")
    if k < MIN_K:
        raise KTooSmallError(f"k must be at least {MIN_K}, got {k}.")


def circle_case_bound(l: int) -> int:  # noqa: E741
    """Points excluded on circles through two chosen points.

    Each of the C(l, 2) pairs carries two circles for each of the C(l, 3)
    radii of the chosen set.

    :param l: size of the chosen set
    :type l: int
    :return: 2 * C(l, 2) * C(l, 3)
    :rtype: int
    """
    return 2 * _binom(l, 2) * _binom(l, 3)


def locus_case_bound(l: int, m: int) -> int:  # noqa: E741
    """Points excluded on locus curves of two chosen pairs.

    :param l: size of the chosen set
    :type l: int
    :param m: points allowed on each locus curve
    :type m: int
    :return: C(C(l, 2), 2) * m
    :rtype: int
    """
    return _binom(_binom(l, 2), 2) * m


def erdos_claimed_bound(k: int) -> int:
    """Erdős' claimed bound 2 * C(k-1, 2) * C(k-1, 3) + k.

    :param k: target subset size
    :type k: int
    :raises KTooSmallError: K too small exception
    :return: bound
    :rtype: int
    """
    check_k(k=k)
    return k + circle_case_bound(k - 1)


def erdos_stated_bound(k: int) -> int:
    """Factor-free variant C(k-1, 2) * C(k-1, 3) + k of the claimed bound.

    :param k: target subset size
    :type k: int
    :raises KTooSmallError: K too small exception
    :return: bound
    :rtype: int
    """
    check_k(k=k)
    return k + _binom(k - 1, 2) * _binom(k - 1, 3)


def lemma_m_bound(k: int) -> int:
    """Points on a fixed irreducible low-degree curve forcing a k-subset.

    :param k: target subset size
    :type k: int
    :raises KTooSmallError: K too small exception
    :return: bound
    :rtype: int
    """
    check_k(k=k)
    if k in SMALL_CASES:
        return SMALL_CASES[k]
    return max(
        LEMMA_FLOOR,
        k + circle_case_bound(k - 1) + locus_case_bound(k - 1, CURVE_POINTS),
    )


def main_n_bound(k: int) -> int:
    """Points in general position forcing a k-subset with distinct radii.

    :param k: target subset size
    :type k: int
    :raises KTooSmallError: K too small exception
    :return: bound
    :rtype: int
    """
    check_k(k=k)
    if k in SMALL_CASES:
        return SMALL_CASES[k]
    return (
        k
        + circle_case_bound(k - 1)
        + locus_case_bound(k - 1, lemma_m_bound(k - 1))
    )


def bound_table(k_min: int, k_max: int) -> list[BoundTable]:
    """Tabulate every bound for k_min <= k <= k_max.

    :param k_min: first k
    :type k_min: int
    :param k_max: last k
    :type k_max: int
    :raises KTooSmallError: K too small exception
    :raises ValueError: Value error exception
    :return: one row per k
    :rtype: list[BoundTable]
    """
    check_k(k=k_min)
    if k_max < k_min:
        raise ValueError("k_max must be greater than or equal to k_min.")
    return [
        BoundTable(
            k=k,
            erdos_claimed=erdos_claimed_bound(k),
            small_case=SMALL_CASES.get(k),
            lemma_m=lemma_m_bound(k),
            main_n=main_n_bound(k),
        )
        for k in range(k_min, k_max + 1)
    ]


def asymptotic_ratio_check(k_max: int) -> Fraction:
    """Check the polynomial growth of the bounds over 10 <= k <= k_max.

    :param k_max: last k of the scan
    :type k_max: int
    :raises ValueError: Value error exception
    :raises BoundShapeError: Bound shape exception
    :return: max of main_n_bound(k) / k**9 over the scan
    :rtype: Fraction
    """
    if k_max < RATIO_K_MIN:
        raise ValueError(f"k_max must be at least {RATIO_K_MIN}.")
    lemma_limit = LEMMA_RATIO_FACTOR * Fraction(
        lemma_m_bound(RATIO_K_MIN), RATIO_K_MIN**5
    )
    best = Fraction(0)
    for k in range(RATIO_K_MIN, k_max + 1):
        lemma_ratio = Fraction(lemma_m_bound(k), k**5)
        if lemma_ratio > lemma_limit:
            raise BoundShapeError(
                f"lemma_m_bound({k}) / {k}**5 = {float(lemma_ratio)} exceeds "
                f"{float(lemma_limit)}."
            )
        best = max(best, Fraction(main_n_bound(k), k**9))
    logger.debug("Max main_n_bound(k) / k**9 up to k=%s: %s", k_max, float(best))
    return best
