"""
How associahedra glue into the real genus-zero moduli space.

One associahedron chart per dihedral class of circular orders; a face of
one chart coincides with a face of another precisely when a sequence of
twists (block reversals along a diagonal) carries one to the other.  The
common face of two charts is found by closing candidate faces under twists
and testing membership of the second word.
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .circular import check_order, cyclic_normalize, dihedral_equal, is_standard, reversal
from .faces import Bracket, Face, bracket_key, enumerate_faces, is_cyclic_interval, make_face


class AmbiguousIntersectionError(AssertionError):
    """Two incomparable candidate faces at minimal codimension: a bug, not data."""


@dataclass(frozen=True)
class TwistOrbit:
    """Closure of a face under twists; members differ only in their words."""

    seed: Face
    members: frozenset[Face]

    def words(self) -> frozenset[tuple[int, ...]]:
        return frozenset(f.word for f in self.members)


def twist(face: Face, bracket: Iterable[int]) -> Face:
    """
    Reverse the block of the bracket's labels in the face's word.

    The bracket and every other bracket keep their label sets: a diagonal
    separates the same labels after the flip.  Twisting twice at the same
    bracket is the identity.
    """
    b = frozenset(bracket)
    if b not in face.brackets:
        raise ValueError(f"{sorted(b)} is not a bracket of the face")
    word = face.word
    positions = sorted(word.index(x) for x in b)
    lo, hi = positions[0], positions[-1]
    new_word = word[:lo] + tuple(reversed(word[lo:hi + 1])) + word[hi + 1:]
    return Face(new_word, face.brackets)


@functools.lru_cache(maxsize=100_000)
def twist_orbit(face: Face) -> TwistOrbit:
    """Breadth-first closure of {face} under twists at all its brackets."""
    brackets = sorted(face.brackets, key=bracket_key)
    seen = {face.word}
    queue = [face]
    members = [face]
    while queue:
        current = queue.pop()
        for b in brackets:
            flipped = twist(current, b)
            if flipped.word not in seen:
                seen.add(flipped.word)
                queue.append(flipped)
                members.append(flipped)
    return TwistOrbit(face, frozenset(members))


def orbit_contains(face: Face, beta: tuple[int, ...]) -> bool:
    """True iff the twist orbit has a member word dihedral-equal to beta."""
    targets = {beta, reversal(beta)}
    return any(w in targets for w in twist_orbit(face).words())


def mutual_brackets(alpha: Sequence[int], beta: Sequence[int]) -> list[Bracket]:
    """Normalized label sets that are cyclic intervals of both circles."""
    n = len(alpha)
    out = []
    for length in range(2, n - 1):
        for start in range(0, n - length):
            labels = frozenset(alpha[start:start + length])
            if is_cyclic_interval(labels, beta):
                out.append(labels)
    return sorted(set(out), key=bracket_key)


def _nested(family: tuple[Bracket, ...]) -> bool:
    return all(a <= b or b <= a or not (a & b)
               for a, b in itertools.combinations(family, 2))


def intersection_face(alpha: Sequence[int], beta: Sequence[int]) -> Face | None:
    """
    The maximal-dimension face of alpha's chart glued to a face of beta's
    chart, or None when the two charts do not meet.

    Candidate brackets are restricted to intervals of both words; nested
    families are tested by increasing codimension, and twist-orbit
    membership is the arbiter.  A unique hit is required.

    >>> f = intersection_face((1, 2, 3, 4, 5, 6), (1, 3, 4, 2, 5, 6))
    >>> f.key()
    ((2, 3, 4), (3, 4))
    >>> intersection_face((1, 2, 3, 4, 5, 6), (1, 4, 6, 3, 2, 5)) is None
    True
    """
    a = cyclic_normalize(check_order(alpha))
    b = cyclic_normalize(check_order(beta))
    if len(a) != len(b):
        raise ValueError(f"mismatched sizes {len(a)} and {len(b)}")
    if dihedral_equal(a, b):
        return Face(a, frozenset())
    candidates = mutual_brackets(a, b)
    n = len(a)
    for codim in range(1, n - 2):
        hits = []
        for family in itertools.combinations(candidates, codim):
            if not _nested(family):
                continue
            face = Face(a, frozenset(family))
            if orbit_contains(face, b):
                hits.append(face)
        if hits:
            if len(hits) > 1:
                raise AmbiguousIntersectionError(
                    f"{len(hits)} incomparable common faces of {a} and {b} "
                    f"at codimension {codim}: {[h.key() for h in hits]}")
            return hits[0]
    return None


def intersection_face_oracle(alpha: Sequence[int], beta: Sequence[int]) -> Face | None:
    """
    Definition-level brute force: scan every face of alpha's chart by
    increasing codimension and return the first whose twist orbit reaches
    beta, insisting it is unique at that codimension.
    """
    a = cyclic_normalize(check_order(alpha))
    b = cyclic_normalize(check_order(beta))
    if len(a) != len(b):
        raise ValueError(f"mismatched sizes {len(a)} and {len(b)}")
    hits: list[Face] = []
    current_codim = 0
    for face in enumerate_faces(a):
        if face.codim != current_codim:
            if hits:
                break
            current_codim = face.codim
        if orbit_contains(face, b):
            hits.append(face)
    if not hits:
        return None
    if len(hits) > 1:
        raise AmbiguousIntersectionError(
            f"{len(hits)} incomparable common faces of {a} and {b}: "
            f"{[h.key() for h in hits]}")
    return hits[0]


def intersection_to_json(alpha: Sequence[int], beta: Sequence[int],
                         face: Face | None) -> dict:
    from .circular import format_order
    return {
        "alpha": format_order(cyclic_normalize(alpha)),
        "beta": format_order(cyclic_normalize(beta)),
        "empty": face is None,
        "brackets": [] if face is None else [list(k) for k in face.key()],
    }


def glued_cells(face: Face) -> frozenset[tuple[int, ...]]:
    """Standard words of the top cells whose charts contain this face."""
    classes = set()
    for w in twist_orbit(face).words():
        classes.add(w if is_standard(w) else reversal(w))
    return frozenset(classes)


def validate_face(face: Face) -> Face:
    """Re-run the full constructor checks on a face built elsewhere."""
    return make_face(face.word, face.brackets)
