"""
Circular orders on the labels {1, ..., n}.

A circular order is stored in word form as a tuple (a(1), ..., a(n)) read
clockwise around a circle.  Two words name the same circle iff one is a
cyclic rotation of the other; the dihedral quotient additionally identifies
a circle with its mirror image.  The canonical word of a rotation class is
the unique rotation whose last entry is n.
"""
from __future__ import annotations

import itertools
import json
from typing import Iterable, Sequence


def check_order(order: Sequence[int]) -> tuple[int, ...]:
    """Validate that ``order`` is a permutation of {1, ..., n}, n >= 3."""
    word = tuple(order)
    n = len(word)
    if n < 3:
        raise ValueError(f"need at least 3 labels, got {n}")
    if sorted(word) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {word}")
    return word


def cyclic_normalize(order: Sequence[int]) -> tuple[int, ...]:
    """
    The unique rotation of ``order`` whose last entry is n.

    >>> cyclic_normalize((5, 6, 1, 2, 3, 4))
    (1, 2, 3, 4, 5, 6)
    >>> cyclic_normalize((4, 6, 2, 5, 1, 3))
    (2, 5, 1, 3, 4, 6)
    """
    word = check_order(order)
    n = len(word)
    cut = word.index(n) + 1
    return word[cut:] + word[:cut]


def reversal(order: Sequence[int]) -> tuple[int, ...]:
    """The mirror image of the circle, normalized to end with n."""
    return cyclic_normalize(tuple(reversed(tuple(order))))


def rotations(order: Sequence[int]) -> list[tuple[int, ...]]:
    word = tuple(order)
    return [word[i:] + word[:i] for i in range(len(word))]


def dihedral_equal(a: Sequence[int], b: Sequence[int]) -> bool:
    """
    True iff ``b`` is a rotation of ``a`` or of ``a`` reversed.

    >>> dihedral_equal((1, 2, 3, 4), (4, 3, 2, 1))
    True
    >>> dihedral_equal((1, 2, 3, 4), (1, 3, 2, 4))
    False
    """
    wa, wb = check_order(a), check_order(b)
    if len(wa) != len(wb):
        raise ValueError(f"mismatched sizes {len(wa)} and {len(wb)}")
    na, nb = cyclic_normalize(wa), cyclic_normalize(wb)
    return nb == na or nb == reversal(na)


def is_standard(order: Sequence[int]) -> bool:
    """
    True iff the normalized word ends with n and lists 1 before n-1.

    Exactly one of a rotation class and its mirror class is standard, so the
    standard words index the dihedral classes.
    """
    word = cyclic_normalize(order)
    n = len(word)
    return word.index(1) < word.index(n - 1)


def standard_representatives(n: int) -> list[tuple[int, ...]]:
    """
    One representative word per dihedral class, in lexicographic order.

    Each word ends with n and lists label 1 before label n-1; there are
    (n-1)!/2 of them.

    >>> standard_representatives(4)
    [(1, 2, 3, 4), (1, 3, 2, 4), (2, 1, 3, 4)]
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    reps = []
    for head in itertools.permutations(range(1, n)):
        if head.index(1) < head.index(n - 1):
            reps.append(head + (n,))
    return reps


def winding_number(a: Sequence[int], b: Sequence[int]) -> int:
    """
    Number of full clockwise turns made when tracing b's word around a
    circle whose labels are placed clockwise in a's order.

    >>> winding_number((1, 2, 3, 4, 5), (3, 1, 4, 2, 5))
    3
    >>> winding_number((1, 2, 3, 4, 5), (1, 2, 3, 4, 5))
    1
    """
    wa, wb = check_order(a), check_order(b)
    n = len(wa)
    if len(wb) != n:
        raise ValueError(f"mismatched sizes {n} and {len(wb)}")
    position = {label: i for i, label in enumerate(wa)}
    total = 0
    for i in range(n):
        step = (position[wb[(i + 1) % n]] - position[wb[i]]) % n
        total += step
    if total % n != 0:
        raise AssertionError(f"non-integral winding for {wa} vs {wb}")
    return total // n


def format_order(order: Sequence[int]) -> str:
    """Digit string for n <= 9, JSON array otherwise."""
    word = tuple(order)
    if len(word) <= 9:
        return "".join(str(x) for x in word)
    return json.dumps(list(word))


def parse_order(text: str) -> tuple[int, ...]:
    """Inverse of :func:`format_order`; accepts digit strings or JSON arrays."""
    text = text.strip()
    if text.startswith("["):
        return check_order(json.loads(text))
    if not text.isdigit():
        raise ValueError(f"cannot parse circular order from {text!r}")
    return check_order(tuple(int(c) for c in text))


def relabel(sigma: dict[int, int] | Sequence[int], order: Sequence[int]) -> tuple[int, ...]:
    """
    Apply a label substitution to a word.  ``sigma`` is either a mapping or
    a word s with s[i-1] = sigma(i).
    """
    if not isinstance(sigma, dict):
        word = tuple(sigma)
        sigma = {i + 1: word[i] for i in range(len(word))}
    return tuple(sigma[x] for x in order)


def inverse_word(order: Sequence[int]) -> tuple[int, ...]:
    """The inverse permutation of a word, as a word."""
    word = check_order(order)
    inv = [0] * len(word)
    for i, x in enumerate(word):
        inv[x - 1] = i + 1
    return tuple(inv)


def all_orders(n: int) -> Iterable[tuple[int, ...]]:
    """All normalized words (rotation classes): permutations ending with n."""
    for head in itertools.permutations(range(1, n)):
        yield head + (n,)
