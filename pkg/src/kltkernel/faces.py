"""
Faces of the associahedron attached to a circular order.

A face of the (n-3)-dimensional associahedron on the word a(1)...a(n) is a
nested family of brackets, where a bracket is a set of labels occupying
consecutive positions among the first n-1 letters.  Brackets are stored as
frozensets of labels, normalized so that they never contain the label n
(of the two complementary arcs cut out by a diagonal, keep the one away
from n).  Faces double as planar trees: one internal vertex per region of
the dual polygon subdivision, with the clockwise edge order recorded.
"""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .circular import check_order

Bracket = frozenset[int]
Block = tuple[int, ...]


def bracket_key(bracket: Bracket) -> tuple[int, ...]:
    return tuple(sorted(bracket))


def face_key(brackets: frozenset[Bracket]) -> tuple[tuple[int, ...], ...]:
    """Canonical sort key: the sorted tuple of sorted bracket labels."""
    return tuple(sorted(bracket_key(b) for b in brackets))


def normalize_bracket(labels: Iterable[int], n: int) -> Bracket:
    """Of the pair {S, complement}, return the side not containing n."""
    s = frozenset(labels)
    if n in s:
        s = frozenset(range(1, n + 1)) - s
    if not 2 <= len(s) <= n - 2:
        raise ValueError(f"bracket size {len(s)} out of range for n={n}")
    return s


def is_cyclic_interval(labels: frozenset[int], word: Sequence[int]) -> bool:
    """True iff the labels occupy consecutive positions on the circle."""
    n = len(word)
    positions = sorted(word.index(x) for x in labels)
    if len(labels) < 2:
        return True
    gaps = sum(1 for i, p in enumerate(positions)
               if (positions[(i + 1) % len(positions)] - p) % n > 1)
    return gaps <= 1


@dataclass(frozen=True)
class Face:
    """A face of the associahedron on ``word`` (word ends with n)."""

    word: tuple[int, ...]
    brackets: frozenset[Bracket]

    @property
    def n(self) -> int:
        return len(self.word)

    @property
    def codim(self) -> int:
        return len(self.brackets)

    @property
    def dim(self) -> int:
        return self.n - 3 - len(self.brackets)

    def key(self) -> tuple[tuple[int, ...], ...]:
        return face_key(self.brackets)

    def to_json(self) -> dict:
        return {"word": list(self.word),
                "brackets": [list(k) for k in self.key()]}


def make_face(word: Sequence[int], brackets: Iterable[Iterable[int]] = ()) -> Face:
    """Validate and build a face: nested/disjoint brackets on word's circle."""
    w = check_order(word)
    n = len(w)
    if w[-1] != n:
        raise ValueError(f"word must end with {n}: {w}")
    normalized = frozenset(normalize_bracket(b, n) for b in brackets)
    for b in normalized:
        if not is_cyclic_interval(b, w):
            raise ValueError(f"{sorted(b)} is not an interval of {w}")
    items = sorted(normalized, key=bracket_key)
    for i, a in enumerate(items):
        for b in items[i + 1:]:
            if not (a <= b or b <= a or not (a & b)):
                raise ValueError(f"brackets {sorted(a)} and {sorted(b)} cross")
    face = Face(w, normalized)
    if face.dim < 0:
        raise ValueError(f"too many brackets ({len(normalized)}) for n={n}")
    return face


def _intervals(n: int) -> list[tuple[int, int]]:
    """Position intervals [i, j] within 0..n-2 with length 2..n-2."""
    out = []
    for length in range(2, n - 1):
        for start in range(0, n - 1 - length + 1):
            out.append((start, start + length - 1))
    return out


def _compatible(a: tuple[int, int], b: tuple[int, int]) -> bool:
    return a[1] < b[0] or b[1] < a[0] or \
        (a[0] <= b[0] and b[1] <= a[1]) or (b[0] <= a[0] and a[1] <= b[1])


@functools.lru_cache(maxsize=64)
def _all_faces(word: tuple[int, ...]) -> tuple[Face, ...]:
    """
    Every face of the associahedron on ``word``, ordered by codimension and
    then lexicographically on the sorted bracket sets.
    """
    n = len(word)
    intervals = _intervals(n)
    labels = [frozenset(word[i:j + 1]) for i, j in intervals]
    order = sorted(range(len(intervals)), key=lambda k: bracket_key(labels[k]))
    families: list[list[int]] = []

    def extend(chosen: list[int], start: int) -> None:
        families.append(list(chosen))
        for pos in range(start, len(order)):
            k = order[pos]
            if all(_compatible(intervals[k], intervals[c]) for c in chosen):
                chosen.append(k)
                extend(chosen, pos + 1)
                chosen.pop()

    extend([], 0)
    faces = [Face(word, frozenset(labels[k] for k in chosen))
             for chosen in families]
    faces.sort(key=lambda f: (f.codim, f.key()))
    return tuple(faces)


def enumerate_faces(word: Sequence[int], min_codim: int = 0,
                    max_codim: int | None = None) -> Iterator[Face]:
    """
    Yield each nested bracket family on word's first n-1 letters exactly
    once, by increasing codimension, lexicographic within a codimension.

    >>> [f.key() for f in enumerate_faces((1, 2, 3, 4))]
    [(), ((1, 2),), ((2, 3),)]
    """
    w = check_order(word)
    n = len(w)
    if w[-1] != n:
        raise ValueError(f"word must end with {n}: {w}")
    if max_codim is None:
        max_codim = n - 3
    if not 0 <= min_codim <= max_codim <= n - 3:
        raise ValueError(f"bad codimension range [{min_codim}, {max_codim}] for n={n}")
    for face in _all_faces(w):
        if min_codim <= face.codim <= max_codim:
            yield face


def face_count(n: int, k: int) -> int:
    """
    Number of codimension-k faces of the associahedron on n-1 letters,
    as an exact integer: C(n-3, k) * C(n+k-1, k+1) / (n-1).

    >>> face_count(5, 1)
    5
    >>> face_count(6, 3)
    14
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    if not 0 <= k <= n - 3:
        raise ValueError(f"codimension {k} out of range for n={n}")
    numerator = math.comb(n - 3, k) * math.comb(n + k - 1, k + 1)
    quotient, remainder = divmod(numerator, n - 1)
    assert remainder == 0
    return quotient


@dataclass(frozen=True)
class LabeledTree:
    """
    Dual tree of a polygon subdivision.

    ``vertices[v]`` lists the edges at internal vertex v in clockwise order
    as (far_block, neighbor) pairs: ``far_block`` is the run of external
    labels behind the edge, read in the ambient circular order, and
    ``neighbor`` is the internal vertex index across the edge (None for an
    edge to an external label).  Vertex 0 is the region adjacent to label n.
    """

    word: tuple[int, ...]
    vertices: tuple[tuple[tuple[Block, int | None], ...], ...]

    def valencies(self) -> tuple[int, ...]:
        return tuple(len(v) for v in self.vertices)

    def internal_edges(self) -> list[tuple[int, int, Bracket]]:
        """Edges between internal vertices as (u, v, bracket) with u < v."""
        n = len(self.word)
        out = []
        for u, edges in enumerate(self.vertices):
            for block, v in edges:
                if v is not None and u < v:
                    out.append((u, v, normalize_bracket(block, n)))
        return out


@functools.lru_cache(maxsize=100_000)
def face_to_tree(face: Face) -> LabeledTree:
    """
    Dual tree of the subdivision: one internal vertex per region, internal
    edges in bijection with the brackets, clockwise edge order per vertex.
    """
    word, n = face.word, face.n
    # Brackets as position intervals of the word (they never contain n, so
    # they never wrap).  Vertex 0 is the outer region; vertex i >= 1 is the
    # region just inside intervals[i - 1].
    intervals = sorted(
        ((min(word.index(x) for x in b), max(word.index(x) for x in b))
         for b in face.brackets),
        key=lambda iv: (iv[0], -(iv[1] - iv[0])))
    index_of = {iv: i + 1 for i, iv in enumerate(intervals)}

    def children_in(lo: int, hi: int, candidates: list[tuple[int, int]]):
        """Maximal intervals strictly inside [lo, hi], with free positions."""
        edges: list[tuple[Block, int | None]] = []
        pos = lo
        remaining = [iv for iv in candidates if lo <= iv[0] and iv[1] <= hi]
        while pos <= hi:
            child = next((iv for iv in remaining
                          if iv[0] == pos and iv != (lo, hi)), None)
            if child is not None:
                edges.append((word[child[0]:child[1] + 1], index_of[child]))
                pos = child[1] + 1
            else:
                edges.append(((word[pos],), None))
                pos += 1
        return edges

    vertices: list[tuple[tuple[Block, int | None], ...]] = []
    vertices.append(tuple(children_in(0, n - 1, intervals)))
    for lo, hi in intervals:
        inner = [iv for iv in intervals
                 if iv != (lo, hi) and lo <= iv[0] and iv[1] <= hi]
        edges = children_in(lo, hi, inner)
        # close the walk with the edge toward the parent region
        far = word[hi + 1:] + word[:lo]
        edges.append((far, _parent_index(intervals, index_of, (lo, hi))))
        vertices.append(tuple(edges))
    return LabeledTree(word, tuple(vertices))


def _parent_index(intervals, index_of, child) -> int:
    lo, hi = child
    best = None
    for iv in intervals:
        if iv != child and iv[0] <= lo and hi <= iv[1]:
            if best is None or (iv[1] - iv[0]) < (best[1] - best[0]):
                best = iv
    return 0 if best is None else index_of[best]


def vertex_blocks(tree: LabeledTree, v: int) -> list[Block]:
    """
    Blocks of external labels around internal vertex v, clockwise.  They
    partition {1, ..., n} and concatenate to the ambient circular order.
    """
    if not 0 <= v < len(tree.vertices):
        raise ValueError(f"no internal vertex {v}")
    return [block for block, _ in tree.vertices[v]]


def is_admissible(face: Face) -> bool:
    """True iff every internal vertex of the dual tree has odd valency."""
    return all(val % 2 == 1 for val in face_to_tree(face).valencies())


def subfaces(face: Face) -> Iterator[Face]:
    """All faces of ``face``: same word, bracket family containing face's."""
    for g in _all_faces(face.word):
        if face.brackets <= g.brackets:
            yield g
