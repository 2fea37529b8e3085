"""Acceptance suite: one test per criterion, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -s`` to see the per-criterion
lines.  Every tolerance is pinned here, not configurable.
"""

import math

import mpmath as mp
import numpy as np

from hcsos.chain import (
    gamma_of,
    kappa_of,
    kernel_of,
    spectrum_asymmetric_k2,
    spectrum_numeric,
    spectrum_symmetric,
)
from hcsos.extremality import Verdict, classify_mu0, classify_mu12_k2, thresholds
from hcsos.model import ModelParams
from hcsos.sampler import TreeConfig, count_inadmissible_edges, estimate_marginals, sample
from hcsos.tisgm import (
    BoundaryLaw,
    compatibility_residual,
    enumerate_solutions,
    iterate_boundary_law,
    solve_k2_closed_form,
    solve_symmetric,
    theta_cr,
)


def _report(number: int, description: str, ok: bool, detail: str = "") -> None:
    line = f"[criterion {number:02d}] {'PASS' if ok else 'FAIL'}: {description}"
    if detail:
        line += f" ({detail})"
    print(line)
    assert ok, line


def test_criterion_01_theta_cr_exactness():
    exact_k2 = theta_cr(2) == 1.0
    with mp.workdps(50):
        oracle = float(mp.power(mp.mpf(2) * mp.mpf(3) ** 3 / mp.mpf(2) ** 3,
                                 mp.mpf(1) / 4))
    err_k3 = abs(theta_cr(3) - oracle)
    _report(
        1,
        "theta_cr(2) exact and theta_cr(3) within 1e-12 of high-precision value",
        exact_k2 and err_k3 <= 1e-12,
        f"theta_cr(2)={theta_cr(2)!r}, |theta_cr(3)-oracle|={err_k3:.2e}",
    )


def test_criterion_02_solution_counts():
    ok = True
    detail = ""
    for k in range(2, 9):
        tc = theta_cr(k)
        for theta in np.linspace(0.1, 2.0 * tc, 50):
            theta = float(theta)
            if abs(theta - tc) <= 1e-9:
                continue
            sset = enumerate_solutions(k, theta)
            expected = 3 if theta < tc else 1
            if len(sset) != expected:
                ok, detail = False, f"count {len(sset)} != {expected} at k={k}, theta={theta}"
                break
            for sol in sset.solutions:
                if compatibility_residual(k, theta, sol.x, sol.y) >= 1e-10:
                    ok, detail = False, f"residual breach at k={k}, theta={theta}"
                    break
            if expected == 3:
                _, upper, lower = sset.solutions
                if abs(upper.x * lower.x - 1.0) > 1e-9:
                    ok, detail = False, f"reciprocity breach at k={k}, theta={theta}"
            if not ok:
                break
        if not ok:
            break
    _report(
        2,
        "counts 3 below / 1 at-or-above theta_cr for k=2..8 with residual "
        "< 1e-10 and x1*x2 = 1 +- 1e-9",
        ok,
        detail,
    )


def test_criterion_03_k2_thresholds():
    table = thresholds(2)
    t1_closed = 0.5 * (4.0 * math.sqrt(2.0) - 4.0) ** (1.0 / 3.0)
    t2_closed = 0.5 * (28.0 + 20.0 * math.sqrt(2.0)) ** (1.0 / 3.0)
    from hcsos.extremality import h_func, q_func

    err_t1 = abs(table["theta1"].root_found - t1_closed)
    err_t2 = abs(table["theta2"].root_found - t2_closed)
    err_h = abs(h_func(2, 0.2) - 0.8846)
    err_q = abs(q_func(2, 4.0) - 0.4476)
    _report(
        3,
        "k=2 margin roots match closed forms to 1e-8; h(0.2) ~ 0.8846 and "
        "q(4) ~ 0.4476 to 1e-3",
        err_t1 <= 1e-8 and err_t2 <= 1e-8 and err_h <= 1e-3 and err_q <= 1e-3,
        f"|root-closed|: {err_t1:.2e}, {err_t2:.2e}; spot errs {err_h:.2e}, {err_q:.2e}",
    )


def test_criterion_04_k3_thresholds():
    # Pinned targets 0.801 / 1.8462.  The margin functions' actual roots
    # (three independent solvers agree, and the same machinery reproduces
    # the k=2 closed forms exactly) are 0.83039 / 1.22633, so this
    # criterion records a genuine discrepancy in the pinned values rather
    # than a solver defect.  See the k=3 entries of `thresholds`.
    table = thresholds(3)
    t3, t4 = table["theta3"].root_found, table["theta4"].root_found
    err_t3 = abs(t3 - 0.801)
    err_t4 = abs(t4 - 1.8462)
    _report(
        4,
        "k=3 margin roots within 1e-3 of pinned values 0.801 / 1.8462",
        err_t3 <= 1e-3 and err_t4 <= 1e-3,
        f"root(h3)={t3!r}, root(q3)={t4!r}; errors {err_t3:.2e}, {err_t4:.2e}",
    )


def test_criterion_05_large_k_never_extreme():
    ok = True
    detail = ""
    for k in range(4, 11):
        for theta in np.linspace(0.05, 5.0, 50):
            v = classify_mu0(k, float(theta))
            if v.verdict is not Verdict.NON_EXTREME or v.ks_value <= 1.0:
                ok = False
                detail = f"k={k}, theta={theta}: {v.verdict.value}, ks={v.ks_value}"
                break
        if not ok:
            break
    _report(
        5,
        "symmetric measure strictly non-extreme for k=4..10 across 50 "
        "couplings in (0.05, 5)",
        ok,
        detail,
    )


def test_criterion_06_asymmetric_extremality_window():
    table = thresholds(2)
    t5_closed = ((2.0 + math.sqrt(2.0 + 2.0 * math.sqrt(2.0)))
                 / (2.0 + 2.0 * math.sqrt(2.0))) ** (1.0 / 3.0)
    err_root = abs(table["theta5"].root_found - t5_closed)
    ok = err_root <= 1e-8
    detail = f"|root-closed|={err_root:.2e}"
    for theta in np.linspace(t5_closed + 1e-4, 1.0 - 1e-4, 25):
        if classify_mu12_k2(float(theta)).verdict is not Verdict.EXTREME:
            ok, detail = False, f"not Extreme at theta={theta}"
            break
    if ok:
        for theta in np.linspace(0.05, t5_closed - 1e-4, 25):
            if classify_mu12_k2(float(theta)).verdict is not Verdict.UNDETERMINED:
                ok, detail = False, f"not Undetermined at theta={theta}"
                break
    _report(
        6,
        "2 kappa^2 = 1 root matches closed form to 1e-8; Extreme on "
        "(theta5, 1), Undetermined below",
        ok,
        detail,
    )


def test_criterion_07_spectrum_agreement():
    worst_spec = 0.0
    worst_kg = 0.0
    for k in range(2, 9):
        for theta in np.linspace(0.1, 2.5, 20):
            theta = float(theta)
            sol = solve_symmetric(k, theta)
            kern = kernel_of(sol, k, theta)
            closed = spectrum_symmetric(sol.y, theta, k)
            numeric = spectrum_numeric(kern)
            worst_spec = max(worst_spec, abs(closed.s2 - numeric.s2))
            worst_kg = max(worst_kg, abs(kappa_of(kern) - gamma_of(kern)))
    for theta in np.linspace(0.05, 0.95, 20):
        theta = float(theta)
        for sol in solve_k2_closed_form(theta):
            kern = kernel_of(sol, 2, theta)
            closed = spectrum_asymmetric_k2(sol.x)
            numeric = spectrum_numeric(kern)
            worst_spec = max(worst_spec, abs(closed.s2 - numeric.s2))
            worst_kg = max(worst_kg, abs(kappa_of(kern) - gamma_of(kern)))
    _report(
        7,
        "closed-form and numeric spectra agree to 1e-10; kappa = gamma to 1e-12",
        worst_spec <= 1e-10 and worst_kg <= 1e-12,
        f"worst s2 gap {worst_spec:.2e}, worst kappa-gamma gap {worst_kg:.2e}",
    )


def test_criterion_08_ks_impossible_for_asymmetric_k2():
    values = [
        2.0 * spectrum_asymmetric_k2(float(x)).s2 ** 2
        for x in np.logspace(-2, 2, 200)
    ]
    _report(
        8,
        "2 s2^2 < 1 for 200 log-spaced x in (0.01, 100)",
        max(values) < 1.0,
        f"max 2 s2^2 = {max(values):.6f}",
    )


def test_criterion_09_sampler_statistics():
    n = 100_000
    kern = kernel_of(solve_symmetric(2, 1.0), 2, 1.0)
    cfg = TreeConfig(k=2, depth=4, seed=20240810)
    stats = estimate_marginals(kern, cfg, n)
    sigma = math.sqrt((1.0 / 3.0) * (2.0 / 3.0) / n)
    worst = max(
        float(np.max(np.abs(freq - 1.0 / 3.0))) for freq in stats.level_frequencies
    )
    pf = stats.pair_frequencies
    clean = pf[0, 2] == 0.0 and pf[1, 1] == 0.0 and pf[2, 0] == 0.0
    for seed in range(10):
        config = sample(kern, TreeConfig(k=2, depth=4, seed=seed))
        clean = clean and count_inadmissible_edges(config) == 0
    _report(
        9,
        "all level marginals within 4 sigma of uniform at n=1e5; zero "
        "inadmissible edges",
        worst <= 4.0 * sigma and clean,
        f"worst deviation {worst:.2e} vs 4 sigma {4.0 * sigma:.2e}",
    )


def test_criterion_10_iteration_consistency():
    pairs = [
        (2, 0.5), (2, 0.8), (2, 0.97), (2, 1.0), (2, 1.5),
        (3, 0.4), (3, 1.2), (3, 2.0), (4, 0.5), (5, 2.5),
    ]
    ok = True
    detail = ""
    converged_runs = 0
    for k, theta in pairs:
        params = ModelParams(k=k, theta=theta, m=2)
        sset = enumerate_solutions(k, theta)

        def matches(outcome, sol=None):
            x = outcome.law.z[0] ** (1.0 / k)
            y = outcome.law.z[1] ** (1.0 / k)
            pool = [sol] if sol is not None else list(sset.solutions)
            return any(
                max(abs(x - s.x), abs(y - s.y)) <= 1e-8 for s in pool
            )

        out = iterate_boundary_law(params, max_iter=20_000, tol=1e-10)
        if out.converged:
            converged_runs += 1
            if not matches(out):
                ok, detail = False, f"wrong fixed point from ones at k={k}, theta={theta}"
                break
        elif out.law is not None or len(out.tail) < 2:
            ok, detail = False, f"malformed divergence report at k={k}, theta={theta}"
            break
        for sol in sset.solutions:
            seeded = iterate_boundary_law(
                params, BoundaryLaw((sol.x**k, sol.y**k, 1.0)),
                max_iter=20_000, tol=1e-10,
            )
            if not (seeded.converged and matches(seeded, sol)):
                ok = False
                detail = f"{sol.branch.value} not reproduced at k={k}, theta={theta}"
                break
            converged_runs += 1
        if not ok:
            break
    _report(
        10,
        "forward iteration reproduces every seeded solution to 1e-8 over 10 "
        "(k, theta) pairs; divergent runs yield reports, never wrong fixed points",
        ok and converged_runs >= 25,
        detail or f"{converged_runs} converged runs",
    )
