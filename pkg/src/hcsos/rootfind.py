"""Certified scalar root finding on sign-change brackets.

Bisection is the backbone: once a bracket with a sign change is
certified, the root estimate is correct to the bracket width no matter
how badly behaved the derivative is.  An optional Newton-style polish
runs after bisection and is accepted only if it stays inside the final
bracket, so it can sharpen the estimate but never invalidate it.

All routines are pure and deterministic: identical inputs produce
bit-identical outputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

# Relative floor on the bracket width: below ~4 ulp the float midpoint
# can no longer split the interval, whatever abs_tol asks for.
_REL_FLOOR = 4.0 * math.ulp(1.0)

_MAX_DOUBLINGS = 60


class BracketError(ValueError):
    """The requested bracket does not certify a sign change."""


class UnboundedBracketError(BracketError):
    """Doubling the upper endpoint never crossed the target value."""


class ConvergenceError(RuntimeError):
    """Iteration budget exhausted; carries the best estimate found."""

    def __init__(self, message: str, best: float):
        super().__init__(message)
        self.best = best


def _sign(v: float) -> int:
    if v > 0.0:
        return 1
    if v < 0.0:
        return -1
    return 0


@dataclass(frozen=True)
class Bracket:
    """Interval [lo, hi] with a certified sign change of the target function."""

    lo: float
    hi: float
    f_lo_sign: int
    f_hi_sign: int

    def __post_init__(self) -> None:
        if not self.lo < self.hi:
            raise BracketError(f"need lo < hi, got [{self.lo}, {self.hi}]")
        if self.f_lo_sign == self.f_hi_sign:
            raise BracketError(
                f"no sign change on [{self.lo}, {self.hi}]: "
                f"signs ({self.f_lo_sign}, {self.f_hi_sign})"
            )

    @classmethod
    def certify(cls, f: Callable[[float], float], lo: float, hi: float) -> "Bracket":
        """Evaluate f at the endpoints and certify the sign change."""
        return cls(lo, hi, _sign(f(lo)), _sign(f(hi)))


@dataclass(frozen=True)
class RootConfig:
    abs_tol: float = 1e-12
    max_iter: int = 200
    polish: bool = True

    def __post_init__(self) -> None:
        if not self.abs_tol > 0:
            raise ValueError("abs_tol must be positive")
        if self.max_iter < 1:
            raise ValueError("max_iter must be >= 1")


def _width_tol(cfg: RootConfig, lo: float, hi: float) -> float:
    return cfg.abs_tol + _REL_FLOOR * max(abs(lo), abs(hi))


def find_root(
    f: Callable[[float], float], b: Bracket, cfg: RootConfig = RootConfig()
) -> float:
    """Root of f inside the certified bracket b.

    Bisects until the bracket width falls below abs_tol (plus a few-ulp
    relative floor so roots of any magnitude terminate), then optionally
    polishes with one Newton step built from the secant slope of the
    final bracket.  The result always lies inside the certified bracket.

    Raises ConvergenceError (carrying the best estimate) if max_iter
    bisections do not reach the tolerance.
    """
    if b.f_lo_sign == 0:
        return b.lo
    if b.f_hi_sign == 0:
        return b.hi

    lo, hi = b.lo, b.hi
    f_lo, f_hi = f(lo), f(hi)
    lo_sign = _sign(f_lo)

    for _ in range(cfg.max_iter):
        if hi - lo <= _width_tol(cfg, lo, hi):
            break
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            break  # float floor: the interval cannot be split further
        f_mid = f(mid)
        if f_mid == 0.0:
            return mid
        if _sign(f_mid) == lo_sign:
            lo, f_lo = mid, f_mid
        else:
            hi, f_hi = mid, f_mid
    else:
        raise ConvergenceError(
            f"no convergence after {cfg.max_iter} bisections; "
            f"bracket [{lo}, {hi}]",
            best=0.5 * (lo + hi),
        )

    root = 0.5 * (lo + hi)
    if not lo < root < hi:
        root = lo if abs(f_lo) <= abs(f_hi) else hi

    if cfg.polish:
        slope = (f_hi - f_lo) / (hi - lo)
        if slope != 0.0 and math.isfinite(slope):
            f_root = f(root)
            cand = root - f_root / slope
            if lo <= cand <= hi and abs(f(cand)) <= abs(f_root):
                root = cand
    return root


def expand_bracket_decreasing(
    f: Callable[[float], float], lo: float, target: float
) -> Bracket:
    """Bracket the solution of f(x) = target for f strictly decreasing on [lo, inf).

    Doubles the upper endpoint starting from lo until f drops below the
    target; the returned bracket certifies the sign change of
    f(x) - target.  Raises UnboundedBracketError after 60 doublings.
    """
    if lo < 0.0:
        raise BracketError(f"expansion by doubling needs lo >= 0, got {lo}")
    g_lo = f(lo) - target
    if not g_lo > 0.0:
        raise BracketError(
            f"f(lo) = target + {g_lo}; need f(lo) > target to start the expansion"
        )
    hi = 2.0 * lo if lo > 0 else 1.0
    for _ in range(_MAX_DOUBLINGS):
        g_hi = f(hi) - target
        if g_hi <= 0.0:
            return Bracket(lo, hi, 1, _sign(g_hi))
        hi *= 2.0
    raise UnboundedBracketError(
        f"f stayed above target {target} out to x = {hi}; no bracket found"
    )
