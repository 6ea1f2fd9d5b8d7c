"""
Symmetric parameter tables s_ij with vanishing row sums.

The table plays the role of Mandelstam-like variables: s_ij = s_ji, the
diagonal is absent, and sum_j s_ij = 0 for every i.  Subset sums s_S then
agree with the sum over the complementary subset, which is what makes the
value attached to an internal tree edge well defined.
"""
from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np


class GenericityError(ValueError):
    """A subset sum is too close to an integer for stable evaluation."""

    def __init__(self, subset: Iterable[int], value: float):
        self.subset = tuple(sorted(subset))
        self.value = value
        super().__init__(
            f"subset sum s_{{{','.join(map(str, self.subset))}}} = {value!r} "
            f"is within margin of an integer")


@dataclass(frozen=True)
class Kinematics:
    """Symmetric table of parameters for n labels, vanishing row sums."""

    n: int
    table: np.ndarray  # (n, n), zero diagonal, symmetric

    def s(self, i: int, j: int) -> float:
        if i == j:
            raise ValueError("s_ii is undefined")
        return float(self.table[i - 1, j - 1])

    def row_residuals(self) -> np.ndarray:
        return np.abs(self.table.sum(axis=1))

    def scaled(self, factor: float) -> "Kinematics":
        """The table with every entry multiplied by ``factor``."""
        return Kinematics(self.n, self.table * factor)

    def relabeled(self, sigma: Sequence[int]) -> "Kinematics":
        """Table with indices permuted: new s_ij = old s_sigma(i)sigma(j)."""
        idx = np.array([sigma[i] - 1 for i in range(self.n)])
        return Kinematics(self.n, self.table[np.ix_(idx, idx)])


def _build(n: int, table: np.ndarray) -> Kinematics:
    table = np.asarray(table, dtype=float)
    if table.shape != (n, n):
        raise ValueError(f"table shape {table.shape} does not match n={n}")
    if not np.allclose(table, table.T, atol=0.0, rtol=0.0):
        raise ValueError("table is not symmetric")
    if np.any(np.diag(table) != 0.0):
        raise ValueError("table has nonzero diagonal entries")
    kin = Kinematics(n, table)
    worst = float(kin.row_residuals().max())
    if worst > 1e-9:
        raise ValueError(f"row sums do not vanish (worst residual {worst:g})")
    return kin


def sample(n: int, seed: int) -> Kinematics:
    """
    Deterministic generic table: draw s_ij uniform in [-1, 1] for
    1 <= i < j <= n-1 except the last pair (n-2, n-1), which is set so the
    drawn pairs sum to zero; the column s_in then closes every row sum.
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    rng = np.random.default_rng(seed)
    table = np.zeros((n, n))
    for i in range(0, n - 1):
        for j in range(i + 1, n - 1):
            if (i, j) == (n - 3, n - 2):
                continue
            table[i, j] = table[j, i] = rng.uniform(-1.0, 1.0)
    closing = -(table[: n - 1, : n - 1].sum() / 2.0)
    table[n - 3, n - 2] = table[n - 2, n - 3] = closing
    for i in range(0, n - 1):
        column = -table[i, : n - 1].sum()
        table[i, n - 1] = table[n - 1, i] = column
    if n == 3:
        warnings.warn("n=3 leaves no free parameters; the table is identically 0")
    return Kinematics(n, table)


def s_subset(kin: Kinematics, labels: Iterable[int]) -> float:
    """
    Sum of s_ij over pairs inside the subset.  Equals the sum over the
    complementary subset because the row sums vanish.
    """
    idx = sorted(set(labels))
    if not 2 <= len(idx) <= kin.n - 2:
        raise ValueError(f"subset size {len(idx)} out of range for n={kin.n}")
    if idx[0] < 1 or idx[-1] > kin.n:
        raise ValueError(f"labels out of range: {idx}")
    rows = np.array(idx) - 1
    return float(kin.table[np.ix_(rows, rows)].sum() / 2.0)


def genericity_check(kin: Kinematics, margin: float = 1e-3) -> list[tuple[tuple[int, ...], float]]:
    """
    Subsets (one per complement pair, sizes 2..n-2) whose sum lies within
    ``margin`` of an integer.  An empty list means every cotangent and
    cosecant evaluated anywhere on any chart is well conditioned.
    """
    n = kin.n
    violations = []
    for mask in range(0, 1 << (n - 1)):
        size = mask.bit_count()
        if not 2 <= size <= n - 2:
            continue
        subset = tuple(i + 1 for i in range(n - 1) if mask >> i & 1)
        value = s_subset(kin, subset)
        if abs(value - round(value)) < margin:
            violations.append((subset, value))
    return sorted(violations)


def to_json(kin: Kinematics) -> dict:
    pairs = {f"{i},{j}": kin.s(i, j)
             for i in range(1, kin.n + 1) for j in range(i + 1, kin.n + 1)}
    return {"n": kin.n, "s": pairs}


def from_json(data: dict) -> Kinematics:
    """
    Read {"n": ..., "s": {"i,j": value, ...}}.  Both orders of a pair are
    accepted but must agree; row sums must vanish to 1e-9.
    """
    n = int(data["n"])
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    table = np.zeros((n, n))
    seen = np.zeros((n, n), dtype=bool)
    for key, value in data["s"].items():
        i_text, j_text = key.split(",")
        i, j = int(i_text), int(j_text)
        if not (1 <= i <= n and 1 <= j <= n and i != j):
            raise ValueError(f"bad pair key {key!r} for n={n}")
        if seen[i - 1, j - 1] and table[i - 1, j - 1] != float(value):
            raise ValueError(f"conflicting values for pair {key!r}")
        table[i - 1, j - 1] = table[j - 1, i - 1] = float(value)
        seen[i - 1, j - 1] = seen[j - 1, i - 1] = True
    missing = [(i + 1, j + 1) for i in range(n) for j in range(i + 1, n)
               if not seen[i, j]]
    if missing:
        raise ValueError(f"missing pairs: {missing[:5]}{'...' if len(missing) > 5 else ''}")
    return _build(n, table)


def load(path: str) -> Kinematics:
    with open(path, "r", encoding="utf-8") as handle:
        return from_json(json.load(handle))
