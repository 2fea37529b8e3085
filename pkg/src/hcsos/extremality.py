"""Extremality classification of the translation-invariant Gibbs measures.

Two criteria drive every verdict:

* Kesten-Stigum (non-extremality): k s2^2 > 1, with s2 the modulus of
  the second-largest eigenvalue of the transition kernel.
* MSW (extremality): k kappa gamma < 1 with the row-distance quantities
  from the chain module; kappa = gamma here, so the test is k kappa^2 < 1.

On the symmetric branch kappa = gamma = s2, so the two tests are sharp
complements of each other: outside a small boundary band exactly one of
them decides.  The band where neither strict inequality holds (and the
s2 branch switch at theta = 1) is reported as Undetermined.

For the asymmetric measures at k = 2 the Kesten-Stigum condition
provably never holds (it reduces to (x-1)^2 + 2(x^2+1) < 0), so the
verdict is Extreme when 2 kappa^2 < 1 and Undetermined otherwise --
never NonExtreme.  For k >= 3 the row-distance identity kappa = gamma is
not backed by theory, so only the Kesten-Stigum side is trusted there.

Thresholds (all for the symmetric measure unless noted, boundary values
excluded):

  k = 2: non-extreme below theta1 = (1/2)(4 sqrt2 - 4)^(1/3) and above
         theta2 = (1/2)(28 + 20 sqrt2)^(1/3); extreme between.
         The asymmetric pair is extreme on (theta5, 1) with
         theta5 = ((2 + sqrt(2 + 2 sqrt2)) / (2 + 2 sqrt2))^(1/3).
  k = 3: same picture with root-found theta3, theta4 (no closed form).
  k >= 4: never extreme (k s2^2 > 1 for every theta except the single
         boundary point of k = 4 at theta = 1).

Each threshold is the root of its defining margin function (h, q, or
the 2 kappa^2 = 1 equation); where a closed form exists the two routes
are computed independently and must agree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .chain import (
    gamma_of,
    kappa_of,
    kernel_of,
    spectrum_asymmetric_k2,
    spectrum_numeric,
    spectrum_symmetric,
)
from .model import Branch, TisgmSolution
from .rootfind import Bracket, RootConfig, find_root
from .tisgm import (
    solve_asymmetric,
    solve_k2_closed_form,
    solve_symmetric,
    theta_cr,
)

DEFAULT_BOUNDARY_TOL = 1e-9


class Verdict(Enum):
    EXTREME = "Extreme"
    NON_EXTREME = "NonExtreme"
    UNDETERMINED = "Undetermined"


class Measure(Enum):
    MU0 = "mu0"  # symmetric branch
    MU1 = "mu1"  # upper branch, x > 1
    MU2 = "mu2"  # lower branch, x < 1


_MEASURE_OF_BRANCH = {
    Branch.SYMMETRIC: Measure.MU0,
    Branch.UPPER: Measure.MU1,
    Branch.LOWER: Measure.MU2,
}


@dataclass(frozen=True)
class ExtremalityVerdict:
    """Classification of one measure with its witness quantities."""

    measure: Measure
    verdict: Verdict
    s2: float
    kappa: float
    gamma: float
    ks_value: float  # k * s2^2; > 1 proves non-extremality
    msw_value: float  # k * kappa * gamma; < 1 proves extremality


def kesten_stigum(k: int, s2: float) -> tuple[bool, float]:
    """(condition holds, k s2^2); True signals non-extremality."""
    if k < 2:
        raise ValueError(f"tree order k must be >= 2, got {k}")
    if abs(s2) > 1.0:
        raise ValueError(f"|s2| must be <= 1, got {s2}")
    value = k * s2 * s2
    return value > 1.0, value


def msw_extreme(k: int, kappa: float, gamma: float) -> tuple[bool, float]:
    """(condition holds, k kappa gamma); True signals extremality."""
    if k < 2:
        raise ValueError(f"tree order k must be >= 2, got {k}")
    if not (0.0 <= kappa <= 1.0 and 0.0 <= gamma <= 1.0):
        raise ValueError(f"kappa, gamma must lie in [0, 1], got {kappa}, {gamma}")
    value = k * kappa * gamma
    return value < 1.0, value


def classify_solution(
    k: int,
    theta: float,
    sol: TisgmSolution,
    boundary_tol: float = DEFAULT_BOUNDARY_TOL,
) -> ExtremalityVerdict:
    """Verdict for the measure indexed by an already-computed fixed point.

    Symmetric branch: the Kesten-Stigum value decides both directions
    (the test is sharp there), with Undetermined inside the boundary
    band |k s2^2 - 1| <= boundary_tol.  The s2 branch switch at theta = 1
    needs no special casing: both eigenvalue branches give s2 = 1/2
    there, so only k = 4 lands on the band (k s2^2 = 1 exactly).
    Asymmetric at k = 2: Extreme iff 2 kappa^2 < 1 - boundary_tol,
    otherwise Undetermined.  Asymmetric at k >= 3: NonExtreme iff the
    numeric Kesten-Stigum value exceeds 1 + boundary_tol, otherwise
    Undetermined.
    """
    kern = kernel_of(sol, k, theta)
    kappa = kappa_of(kern)
    gamma = gamma_of(kern)
    measure = _MEASURE_OF_BRANCH[sol.branch]

    if sol.branch is Branch.SYMMETRIC:
        spec = spectrum_symmetric(sol.y, theta, k)
        ks = k * spec.s2**2
        msw = k * kappa * gamma
        if ks > 1.0 + boundary_tol:
            verdict = Verdict.NON_EXTREME
        elif ks < 1.0 - boundary_tol:
            verdict = Verdict.EXTREME
        else:
            verdict = Verdict.UNDETERMINED
    elif k == 2:
        spec = spectrum_asymmetric_k2(sol.x)
        ks = k * spec.s2**2
        msw = k * kappa * gamma
        verdict = (
            Verdict.EXTREME if msw < 1.0 - boundary_tol else Verdict.UNDETERMINED
        )
    else:
        spec = spectrum_numeric(kern)
        ks = k * spec.s2**2
        msw = k * kappa * gamma
        verdict = (
            Verdict.NON_EXTREME if ks > 1.0 + boundary_tol else Verdict.UNDETERMINED
        )
    return ExtremalityVerdict(measure, verdict, spec.s2, kappa, gamma, ks, msw)


def classify_mu0(
    k: int, theta: float, boundary_tol: float = DEFAULT_BOUNDARY_TOL
) -> ExtremalityVerdict:
    """Classify the symmetric measure, which exists at every (k, theta)."""
    return classify_solution(k, theta, solve_symmetric(k, theta), boundary_tol)


def classify_mu12_k2(
    theta: float,
    boundary_tol: float = DEFAULT_BOUNDARY_TOL,
    measure: Measure = Measure.MU1,
) -> ExtremalityVerdict:
    """Classify an asymmetric measure at k = 2 (exists for 0 < theta < 1).

    Kesten-Stigum can never hold here, so the only decisive outcome is
    Extreme (2 kappa^2 < 1); anything else stays Undetermined.
    """
    if measure is Measure.MU0:
        raise ValueError("mu0 is handled by classify_mu0")
    if not 0.0 < theta < 1.0:
        raise ValueError(
            f"mu1/mu2 exist only for 0 < theta < theta_cr(2) = 1, got {theta}"
        )
    upper, lower = solve_k2_closed_form(theta)
    sol = upper if measure is Measure.MU1 else lower
    return classify_solution(2, theta, sol, boundary_tol)


def classify_mu12(
    k: int,
    theta: float,
    measure: Measure = Measure.MU1,
    boundary_tol: float = DEFAULT_BOUNDARY_TOL,
) -> ExtremalityVerdict:
    """Classify an asymmetric measure for any k >= 2.

    k = 2 uses the closed-form route; k >= 3 trusts only the
    Kesten-Stigum direction (numeric spectrum).  Raises ValueError when
    the measure does not exist (theta at or above theta_cr(k)).
    """
    if measure is Measure.MU0:
        raise ValueError("mu0 is handled by classify_mu0")
    if k == 2:
        return classify_mu12_k2(theta, boundary_tol, measure)
    pair = solve_asymmetric(k, theta)
    if not pair:
        raise ValueError(
            f"mu1/mu2 do not exist at k={k}, theta={theta} >= theta_cr = {theta_cr(k)}"
        )
    upper, lower = pair
    sol = upper if measure is Measure.MU1 else lower
    return classify_solution(k, theta, sol, boundary_tol)


def h_func(k: int, theta: float) -> float:
    """Kesten-Stigum margin of the symmetric measure for theta <= 1.

    Equals k / (theta y^k + 1)^2 - 1 at the symmetric root y; positive
    means non-extreme.
    """
    if not 0.0 < theta <= 1.0:
        raise ValueError(f"h is defined for 0 < theta <= 1, got {theta}")
    y = solve_symmetric(k, theta).y
    return k / (theta * y**k + 1.0) ** 2 - 1.0


def q_func(k: int, theta: float) -> float:
    """Kesten-Stigum margin of the symmetric measure for theta >= 1.

    Equals k (w / (w + 1))^2 - 1 with w = theta y^k; positive means
    non-extreme.
    """
    if not theta >= 1.0:
        raise ValueError(f"q is defined for theta >= 1, got {theta}")
    y = solve_symmetric(k, theta).y
    w = theta * y**k
    return k * (w / (w + 1.0)) ** 2 - 1.0


@dataclass(frozen=True)
class Threshold:
    """One classification threshold, root-found and (when available) closed-form."""

    name: str
    root_found: float
    closed_form: float | None

    @property
    def provenance(self) -> str:
        return "closed-form" if self.closed_form is not None else "root-found"

    @property
    def value(self) -> float:
        return self.closed_form if self.closed_form is not None else self.root_found


@dataclass(frozen=True)
class ThresholdTable:
    k: int
    entries: tuple[Threshold, ...]

    def __getitem__(self, name: str) -> Threshold:
        for entry in self.entries:
            if entry.name == name:
                return entry
        raise KeyError(name)


_ROOT_CFG = RootConfig(abs_tol=1e-12)


def _mu12_margin_k2(theta: float) -> float:
    # 2 kappa^2 - 1 for the upper branch; decreasing in theta on (0, 1)
    x1 = solve_k2_closed_form(theta)[0].x
    kappa = x1 * x1 / (x1 * x1 + 1.0)
    return 2.0 * kappa * kappa - 1.0


def thresholds(k: int) -> ThresholdTable:
    """Classification thresholds for k in {2, 3}.

    Each entry is the root of its defining margin function; the k = 2
    entries also carry independent closed forms.  k outside {2, 3}
    raises: for k >= 4 no thresholds exist because the symmetric measure
    is never extreme.
    """
    if k == 2:
        t1_closed = 0.5 * (4.0 * math.sqrt(2.0) - 4.0) ** (1.0 / 3.0)
        t2_closed = 0.5 * (28.0 + 20.0 * math.sqrt(2.0)) ** (1.0 / 3.0)
        s = math.sqrt(2.0 + 2.0 * math.sqrt(2.0))
        t5_closed = ((2.0 + s) / (2.0 + 2.0 * math.sqrt(2.0))) ** (1.0 / 3.0)
        h2 = lambda t: h_func(2, t)
        q2 = lambda t: q_func(2, t)
        t1_root = find_root(h2, Bracket.certify(h2, 0.01, 1.0), _ROOT_CFG)
        t2_root = find_root(q2, Bracket.certify(q2, 1.0, 4.0), _ROOT_CFG)
        t5_root = find_root(
            _mu12_margin_k2, Bracket.certify(_mu12_margin_k2, 0.5, 0.999), _ROOT_CFG
        )
        return ThresholdTable(
            k=2,
            entries=(
                Threshold("theta1", t1_root, t1_closed),
                Threshold("theta2", t2_root, t2_closed),
                Threshold("theta5", t5_root, t5_closed),
            ),
        )
    if k == 3:
        h3 = lambda t: h_func(3, t)
        q3 = lambda t: q_func(3, t)
        t3_root = find_root(h3, Bracket.certify(h3, 0.01, 1.0), _ROOT_CFG)
        t4_root = find_root(q3, Bracket.certify(q3, 1.0, 4.0), _ROOT_CFG)
        return ThresholdTable(
            k=3,
            entries=(
                Threshold("theta3", t3_root, None),
                Threshold("theta4", t4_root, None),
            ),
        )
    raise ValueError(
        f"thresholds exist only for k in {{2, 3}}; for k = {k} >= 4 the "
        "symmetric measure is non-extreme at every theta"
    )
