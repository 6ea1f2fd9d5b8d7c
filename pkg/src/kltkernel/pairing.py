"""
Intersection pairings of twisted cycles attached to circular orders.

The fast path expands the pairing over admissible faces (all internal tree
vertices of odd valency): each vertex contributes a Catalan number, each
internal edge a cotangent, and the common face of the two charts supplies
cosecant factors and an overall sign from the relative winding number.
Two definition-level oracles evaluate the same numbers as alternating sums
of 1/(e^(2*pi*i*s) - 1) over entire face lattices; the agreement of the two
routes is the content of the admissible-tree expansion and is what the
test suite pins down.
"""
from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .circular import (check_order, cyclic_normalize, format_order, inverse_word,
                       is_standard, relabel, standard_representatives, winding_number)
from .faces import (Block, Face, bracket_key, enumerate_faces, face_to_tree,
                    is_admissible, subfaces, vertex_blocks)
from .gluing import intersection_face
from .kinematics import GenericityError, Kinematics, s_subset
from .wz import catalan

DEFAULT_MARGIN = 1e-3


def _guard(value: float, labels: Iterable[int], margin: float) -> float:
    if abs(value - round(value)) < margin:
        raise GenericityError(labels, value)
    return value


def cot_pi(s: float) -> float:
    """cot(pi*s), evaluated after reducing s modulo 1 for conditioning."""
    r = s - round(s)
    return math.cos(math.pi * r) / math.sin(math.pi * r)


def csc_pi(s: float) -> float:
    """csc(pi*s); the reduction picks up a sign from the period 2."""
    k = round(s)
    r = s - k
    return (-1) ** (k % 2) / math.sin(math.pi * r)


def expi(s: float) -> complex:
    """e(s) = exp(2*pi*i*s), reduced modulo 1."""
    return cmath.exp(2j * math.pi * (s - round(s)))


def half_i_power(power: int) -> complex:
    """(i/2)**power by repeated multiplication (exact dyadic components)."""
    out = complex(1.0)
    for _ in range(power):
        out *= 0.5j
    return out


@dataclass(frozen=True)
class PairValue:
    """An intersection number together with its factored form."""

    value: complex
    sign: int
    prefactor_power: int
    csc_args: tuple[float, ...]
    m_factors: tuple[float, ...]
    empty: bool

    def to_json(self) -> dict:
        return {
            "value": {"re": self.value.real, "im": self.value.imag},
            "empty": self.empty,
            "sign": self.sign,
            "prefactor_power": self.prefactor_power,
            "csc_args": list(self.csc_args),
            "m_factors": list(self.m_factors),
        }


def empty_pair_value(n: int) -> PairValue:
    return PairValue(0j, 1, n - 3, (), (), True)


def _face_weight(face: Face, edge_sum, margin: float) -> float | None:
    """
    Catalan/cotangent weight of one admissible face; None when skipped.

    ``edge_sum`` maps a bracket (frozenset of letters of face.word) to the
    parameter sum attached to that internal edge.
    """
    tree = face_to_tree(face)
    weight = 1.0
    for valency in tree.valencies():
        if valency % 2 == 0:
            return None
        weight *= catalan((valency - 3) // 2)
    for bracket in sorted(face.brackets, key=bracket_key):
        labels, value = edge_sum(bracket)
        weight *= cot_pi(_guard(value, labels, margin))
    return weight


def m_value(blocks: Sequence[Block], kin: Kinematics,
            margin: float = DEFAULT_MARGIN) -> float:
    """
    Admissible-face expansion for a circle of consecutive blocks.

    The blocks partition {1, ..., n} into p >= 3 runs; the expansion runs
    over the admissible faces of the associahedron on the p super-letters
    (the last block plays the role of the root), each face contributing a
    Catalan number per internal vertex and cot(pi*s_e) per internal edge.

    With three blocks the polytope is a point and the value is 1.
    """
    p = len(blocks)
    if p < 3:
        raise ValueError(f"need at least 3 blocks, got {p}")
    letters = tuple(range(1, p + 1))
    label_sets = {i + 1: frozenset(blocks[i]) for i in range(p)}

    def edge_sum(bracket):
        labels = frozenset().union(*(label_sets[i] for i in bracket))
        return labels, s_subset(kin, labels)

    total = 0.0
    for face in enumerate_faces(letters):
        weight = _face_weight(face, edge_sum, margin)
        if weight is not None:
            total += weight
    return total


def singleton_blocks(word: Sequence[int]) -> tuple[Block, ...]:
    return tuple((x,) for x in word)


def diagonal(alpha: Sequence[int], kin: Kinematics,
             margin: float = DEFAULT_MARGIN) -> PairValue:
    """
    Self-pairing of a chart: (i/2)**(n-3) times the admissible-face
    expansion of the chart's own word, positive sign, no cosecants.
    """
    word = cyclic_normalize(check_order(alpha))
    n = len(word)
    m = m_value(singleton_blocks(word), kin, margin)
    value = half_i_power(n - 3) * m
    return PairValue(value, 1, n - 3, (), (m,), False)


def oracle_diagonal(kin: Kinematics, n: int,
                    margin: float = DEFAULT_MARGIN) -> complex:
    """
    Face-lattice sum for the identity chart paired with itself:
    (-1)**(n-3) * sum over every face of prod_a 1/(e(s_a) - 1).
    """
    word = tuple(range(1, n + 1))
    total = 0j
    for face in enumerate_faces(word):
        product = complex(1.0)
        for bracket in sorted(face.brackets, key=bracket_key):
            value = _guard(s_subset(kin, bracket), bracket, margin)
            product /= expi(value) - 1.0
        total += product
    return (-1) ** (n - 3) * total


def pair(alpha: Sequence[int], beta: Sequence[int], kin: Kinematics,
         margin: float = DEFAULT_MARGIN) -> PairValue:
    """
    Intersection pairing of the cycles named by two circular orders.

    Empty chart intersection gives the zero value.  Otherwise the common
    face F contributes csc(pi*s_e) per internal edge and one admissible
    expansion per internal vertex (blocks read in alpha's chart), with
    overall sign (-1)**(w(alpha|beta)+1) and prefactor (i/2)**(n-3).
    """
    a = cyclic_normalize(check_order(alpha))
    b = cyclic_normalize(check_order(beta))
    n = len(a)
    face = intersection_face(a, b)
    if face is None:
        return empty_pair_value(n)
    sign = (-1) ** ((winding_number(a, b) + 1) % 2)
    tree = face_to_tree(face)
    csc_args = []
    csc_product = 1.0
    for _, _, bracket in sorted(tree.internal_edges(),
                                key=lambda e: bracket_key(e[2])):
        value = _guard(s_subset(kin, bracket), bracket, margin)
        csc_args.append(math.pi * value)
        csc_product *= csc_pi(value)
    m_factors = []
    for v in range(len(tree.vertices)):
        m_factors.append(m_value(vertex_blocks(tree, v), kin, margin))
    value = sign * half_i_power(n - 3) * csc_product * math.prod(m_factors)
    return PairValue(value, sign, n - 3, tuple(csc_args), tuple(m_factors), False)


def relative_word(alpha: Sequence[int], beta: Sequence[int]) -> tuple[int, ...]:
    """beta read in alpha's chart: the normalized word of alpha^(-1)beta."""
    return cyclic_normalize(relabel(inverse_word(alpha), beta))


def oracle_pair(alpha: Sequence[int], beta: Sequence[int], kin: Kinematics,
                margin: float = DEFAULT_MARGIN) -> complex:
    """
    Blow-up/face-lattice evaluation of the pairing for charts that meet.

    With F the common face: prod_a (-1)**(|a|-2) * (1/(2i))**|F| *
    prod_a csc(pi*s_a) * (-1)**dim(F) * sum over subfaces F' >= F of
    prod over the brackets added by F' of 1/(e(s_a) - 1).  When beta needs
    a reflection to standardize relative to alpha, the cycle orientation
    flips the result by (-1)**n.
    """
    a = cyclic_normalize(check_order(alpha))
    b = cyclic_normalize(check_order(beta))
    n = len(a)
    face = intersection_face(a, b)
    if face is None:
        raise ValueError("charts do not meet; the pairing is 0 by definition")
    blowup_sign = 1.0
    csc_product = 1.0
    for bracket in sorted(face.brackets, key=bracket_key):
        value = _guard(s_subset(kin, bracket), bracket, margin)
        blowup_sign *= (-1) ** (len(bracket) - 2)
        csc_product *= csc_pi(value)
    inner = 0j
    for refinement in subfaces(face):
        product = complex(1.0)
        for bracket in sorted(refinement.brackets - face.brackets, key=bracket_key):
            value = _guard(s_subset(kin, bracket), bracket, margin)
            product /= expi(value) - 1.0
        inner += product
    prefactor = half_i_power(len(face.brackets)).conjugate()  # (1/(2i))**|F|
    orientation = 1 if is_standard(relative_word(a, b)) else (-1) ** (n % 2)
    return (orientation * blowup_sign * (-1) ** (face.dim % 2)
            * prefactor * csc_product * inner)


def ft_inverse_kernel(alpha: Sequence[int], beta: Sequence[int],
                      kin: Kinematics) -> float:
    """
    Leading small-parameter behaviour of the pairing: the sum over the
    trivalent refinements of the common face of prod over internal edges
    of 1/s_e, signed by (-1)**(w(alpha|beta)+1).
    """
    a = cyclic_normalize(check_order(alpha))
    b = cyclic_normalize(check_order(beta))
    n = len(a)
    face = intersection_face(a, b)
    if face is None:
        raise ValueError("charts do not meet; no trivalent refinements")
    sign = (-1) ** ((winding_number(a, b) + 1) % 2)
    total = 0.0
    for refinement in subfaces(face):
        if refinement.codim != n - 3:
            continue
        term = 1.0
        for bracket in sorted(refinement.brackets, key=bracket_key):
            value = s_subset(kin, bracket)
            if value == 0.0:
                raise ZeroDivisionError(
                    f"s over {sorted(bracket)} is exactly zero")
            term /= value
        total += term
    return sign * total


BASIS_CHOICES = ("all_classes", "bounded_chambers")


def basis_words(n: int, basis: str) -> list[tuple[int, ...]]:
    """Index set for the pairing matrix."""
    if basis == "all_classes":
        return standard_representatives(n)
    if basis == "bounded_chambers":
        middle = range(2, n - 1)
        return [(1,) + mid + (n - 1, n)
                for mid in itertools.permutations(middle)]
    raise ValueError(f"unknown basis {basis!r}; expected one of {BASIS_CHOICES}")


@dataclass(frozen=True)
class PairMatrix:
    n: int
    basis: str
    labels: tuple[tuple[int, ...], ...]
    entries: tuple[tuple[PairValue, ...], ...]

    def to_json(self, factored: bool = False) -> dict:
        rows = []
        for row in self.entries:
            if factored:
                rows.append([value.to_json() for value in row])
            else:
                rows.append([{"re": value.value.real, "im": value.value.imag}
                             for value in row])
        return {"n": self.n, "basis": self.basis,
                "labels": [format_order(w) for w in self.labels],
                "entries": rows}


def matrix(n: int, kin: Kinematics, basis: str = "all_classes",
           margin: float = DEFAULT_MARGIN) -> PairMatrix:
    """Square table of pairings over the chosen index set."""
    words = basis_words(n, basis)
    entries = tuple(tuple(pair(row, col, kin, margin) for col in words)
                    for row in words)
    return PairMatrix(n, basis, tuple(words), entries)
