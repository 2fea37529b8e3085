"""Domain types for the hard-core SOS model on the wand graph.

Spins live in {0, ..., m} with m even.  Neighboring spins i, j on the
tree are admissible iff |i - j| = 1, or i = j with i even (the wand
graph: a path with loops attached to the even spins).  Each admissible
pair carries an activity weight: 1 on even loops, theta on unit steps.

For m = 2 a translation-invariant splitting Gibbs measure is described
by a positive pair (x, y), the k-th roots of the boundary-law entries;
``TisgmSolution`` records such a pair together with its branch label.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

# Below this distance from x = 1 the asymmetric branches cannot be told
# apart from the symmetric one at root-finder accuracy.
BRANCH_TOL = 1e-9


class Branch(Enum):
    SYMMETRIC = "Symmetric"
    UPPER = "Upper"
    LOWER = "Lower"


def branch_of(x: float, tol: float = BRANCH_TOL) -> Branch:
    """Branch label implied by the first fixed-point coordinate."""
    if abs(x - 1.0) < tol:
        return Branch.SYMMETRIC
    return Branch.UPPER if x > 1.0 else Branch.LOWER


@dataclass(frozen=True)
class ModelParams:
    """Model instance: tree order k >= 2, coupling theta > 0, even spin cap m."""

    k: int
    theta: float
    m: int = 2

    def __post_init__(self) -> None:
        if self.k < 2:
            raise ValueError(f"tree order k must be >= 2, got {self.k}")
        if not self.theta > 0:
            raise ValueError(f"coupling theta must be positive, got {self.theta}")
        if self.m < 2 or self.m % 2 != 0:
            raise ValueError(f"spin cap m must be even and >= 2, got {self.m}")


@dataclass(frozen=True)
class WandAdmissibility:
    """Edge predicate of the wand graph on spins {0, ..., m}."""

    m: int

    def __post_init__(self) -> None:
        if self.m < 2 or self.m % 2 != 0:
            raise ValueError(f"spin cap m must be even and >= 2, got {self.m}")


@dataclass(frozen=True)
class Activity:
    """Activity weights on wand-graph edges: 1 on even loops, theta on steps."""

    m: int
    theta: float

    def __post_init__(self) -> None:
        if self.m < 2 or self.m % 2 != 0:
            raise ValueError(f"spin cap m must be even and >= 2, got {self.m}")
        if not self.theta > 0:
            raise ValueError(f"coupling theta must be positive, got {self.theta}")


def _check_spin(m: int, s: int) -> None:
    if not 0 <= s <= m:
        raise ValueError(f"spin {s} outside {{0, ..., {m}}}")


def is_admissible(adm: WandAdmissibility, i: int, j: int) -> bool:
    """True iff spins i, j may sit on neighboring vertices."""
    _check_spin(adm.m, i)
    _check_spin(adm.m, j)
    return abs(i - j) == 1 or (i == j and i % 2 == 0)


def activity_of(act: Activity, i: int, j: int) -> float:
    """Edge weight for the pair (i, j): 1, theta, or 0."""
    _check_spin(act.m, i)
    _check_spin(act.m, j)
    if i == j and i % 2 == 0:
        return 1.0
    if abs(i - j) == 1:
        return act.theta
    return 0.0


def activity_matrix(act: Activity) -> np.ndarray:
    """(m+1) x (m+1) matrix of edge weights; zero exactly off the wand graph."""
    n = act.m + 1
    lam = np.zeros((n, n))
    for i in range(n):
        for j in range(n):
            if i == j and i % 2 == 0:
                lam[i, j] = 1.0
            elif abs(i - j) == 1:
                lam[i, j] = act.theta
    return lam


@dataclass(frozen=True)
class TisgmSolution:
    """Positive fixed point (x, y) of the m = 2 compatibility system.

    x and y are the k-th roots of the two free boundary-law entries; the
    branch tag records which side of x = 1 the solution sits on.
    """

    x: float
    y: float
    branch: Branch

    def __post_init__(self) -> None:
        if not (self.x > 0 and self.y > 0):
            raise ValueError(f"fixed point must be positive, got ({self.x}, {self.y})")
        if self.branch is not branch_of(self.x):
            raise ValueError(
                f"branch {self.branch.value} inconsistent with x = {self.x}"
            )
