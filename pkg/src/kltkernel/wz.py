"""
Exact verification of the alternating binomial/Catalan identity that makes
the non-admissible faces cancel.

Everything here is exact: big integers and fractions only.  The identity

    1/(p+2) * sum_k (-2)**(p-k) C(p,k) C(p+k+2, k+1)
        = (-1)**(p/2) Catalan(p/2)   (p even),   0   (p odd)

is checked both directly and through its telescoping certificate, whose
summand-level identity collapses to a two-term recurrence.  The same
quantity evaluated at p = n-3 is the (-2)**dim weighted count of all faces
of the associahedron on n-1 letters.
"""
from __future__ import annotations

import math
from fractions import Fraction

ExactRational = Fraction


def catalan(k: int) -> int:
    """
    The k-th Catalan number C(2k, k)/(k+1), exactly.

    >>> [catalan(k) for k in range(5)]
    [1, 1, 2, 5, 14]
    """
    if k < 0:
        raise ValueError(f"need k >= 0, got {k}")
    quotient, remainder = divmod(math.comb(2 * k, k), k + 1)
    assert remainder == 0
    return quotient


def summand(p: int, k: int) -> Fraction:
    """F(p, k) = (-2)**(p-k) C(p,k) C(p+k+2, k+1) / (p+2); 0 off support."""
    if p < 0:
        raise ValueError(f"need p >= 0, got {p}")
    if k < 0 or k > p:
        return Fraction(0)
    return Fraction((-2) ** (p - k) * math.comb(p, k) * math.comb(p + k + 2, k + 1),
                    p + 2)


def wz_lhs(p: int) -> Fraction:
    """
    The alternating sum, exactly.

    >>> [wz_lhs(p) for p in range(4)]
    [Fraction(1, 1), Fraction(0, 1), Fraction(-1, 1), Fraction(0, 1)]
    """
    return sum((summand(p, k) for k in range(p + 1)), Fraction(0))


def wz_rhs(p: int) -> Fraction:
    """(-1)**(p/2) Catalan(p/2) for even p, 0 for odd p."""
    if p < 0:
        raise ValueError(f"need p >= 0, got {p}")
    if p % 2 == 1:
        return Fraction(0)
    half = p // 2
    return Fraction((-1) ** (half % 2) * catalan(half))


def certificate_term(p: int, k: int) -> Fraction:
    """
    G(p, k): the telescoping partner R(p, k) * F(p, k) with the support
    boundary zeros of R's denominator cancelled before evaluation.

    R(p, k) = -8(p+1)(2p+5)k(k+1) / ((p+3)(p-k+1)(p-k+2)); multiplying into
    the factorials of F leaves a rational that is finite for 0 <= k <= p+2
    and zero outside the support.
    """
    if p < 0:
        raise ValueError(f"need p >= 0, got {p}")
    if k < 1 or k > p + 2:
        return Fraction(0)
    return (Fraction(-8 * (p + 1) * (2 * p + 5))
            * Fraction(-2) ** (p - k)
            * Fraction(math.factorial(p) * math.factorial(p + k + 2),
                       (p + 2) * (p + 3)
                       * math.factorial(k - 1) * math.factorial(k)
                       * math.factorial(p - k + 2) * math.factorial(p + 1)))


def certificate_check(p: int, k: int) -> bool:
    """
    The summand-level telescoping identity, exactly:
    (p+4) F(p+2, k) + 4(p+1) F(p, k) = G(p, k+1) - G(p, k).
    """
    lhs = (p + 4) * summand(p + 2, k) + 4 * (p + 1) * summand(p, k)
    rhs = certificate_term(p, k + 1) - certificate_term(p, k)
    return lhs == rhs


def recurrence_check(p: int) -> bool:
    """Two-term recurrence: (p+4) f(p+2) + 4(p+1) f(p) = 0, exactly."""
    return (p + 4) * wz_lhs(p + 2) + 4 * (p + 1) * wz_lhs(p) == 0


def cf_face_sum(n: int) -> int:
    """
    Sum of (-2)**dim(F) over all faces of the associahedron on n-1
    letters, via the closed form (an integer for every n >= 3).

    >>> [cf_face_sum(n) for n in (3, 4, 5, 6)]
    [1, 0, -1, 0]
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    value = wz_lhs(n - 3)
    assert value.denominator == 1
    return int(value)
