"""The verification suite: seeded, deterministic property checks for the
multiple-Gamma machinery and the conjectured Stieltjes representations,
aggregated into a structured report.

Checks tied to the conjecture are asserted only for orders <= 3 (the cases
with published proofs); for higher orders the same computations run in
evidence mode and are recorded, never asserted.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import brentq

from .foundations import (
    DomainError,
    binomial,
    counting_N,
    max_order,
    pochhammer,
    principal_log,
    southeast_diagonal_sum,
    zero_multiplicity,
)
from .multigamma import (
    boundary_log_gn,
    d3_constants,
    log_abs_gn_negative_axis,
    log_gn_shifted,
    log_gn_shifted_vec,
    log_weierstrass_part,
    recurrence_residual,
    stirling_log_g3,
)
from .pick_stieltjes import (
    DensityQuadrature,
    boundary_im_f_n,
    complete_monotonicity_probe,
    density_negative_arg_vec,
    f_n_eval,
    f_n_eval_vec,
    g_n_stieltjes_reconstruct,
    herglotz_params,
    pick_grid_scan,
    point_mass_estimate,
    stieltjes_log_inverse,
    stieltjes_reconstruct,
)
from .quadrature import QuadratureConfig
from .report import (
    CheckResult,
    VerificationReport,
    config_hash,
    status_class,
)

__all__ = ["SuiteConfig", "run_suite"]

VERSION = "0.1.0"


@dataclass(frozen=True)
class SuiteConfig:
    """Configuration of one verification run; fully determines the report
    (modulo runtime fields) together with the package version."""

    orders: tuple[int, ...] = (1, 2, 3)
    region: tuple[float, float, float, float] = (-10.0, 10.0, 0.01, 10.0)
    grid_resolution: int = 64
    quadrature: QuadratureConfig = field(default_factory=QuadratureConfig)
    output_format: str = "json"
    seed: int = 20260809
    # sample sizes (the acceptance suite cranks these to its own values)
    recurrence_samples: int = 200
    recurrence_radius: float = 20.0
    density_samples: int = 2000
    identity_samples: int = 300
    reconstruction_points: int = 8
    logref_samples: int = 300

    def __post_init__(self) -> None:
        if not self.orders:
            raise DomainError("orders must be nonempty")
        cap = max_order()
        for n in self.orders:
            if not 1 <= int(n) <= cap:
                raise DomainError(f"order {n} outside [1, {cap}]")
        x0, x1, y0, y1 = self.region
        if not (x0 < x1 and 0.0 < y0 < y1):
            raise DomainError("region must satisfy x0 < x1 and 0 < y0 < y1 (upper half plane)")
        if self.grid_resolution < 16:
            raise DomainError("grid_resolution must be >= 16")
        if self.output_format not in ("json", "csv"):
            raise DomainError(f"unknown output format {self.output_format!r}")

    def to_dict(self) -> dict:
        return {
            "orders": list(self.orders),
            "region": list(self.region),
            "grid_resolution": self.grid_resolution,
            "quadrature": {
                "tolerance": self.quadrature.tolerance,
                "cutoff_T": self.quadrature.cutoff_T,
                "levels": self.quadrature.levels,
                "tail_fit_window": list(self.quadrature.tail_fit_window),
                "max_cutoff_doublings": self.quadrature.max_cutoff_doublings,
            },
            "output_format": self.output_format,
            "seed": self.seed,
            "recurrence_samples": self.recurrence_samples,
            "recurrence_radius": self.recurrence_radius,
            "density_samples": self.density_samples,
            "identity_samples": self.identity_samples,
            "reconstruction_points": self.reconstruction_points,
            "logref_samples": self.logref_samples,
        }


# ---------------------------------------------------------------------------
# sampling helpers
# ---------------------------------------------------------------------------

def _sample_cut_plane(rng: np.random.Generator, count: int, radius: float) -> np.ndarray:
    """Seeded points with |z| <= radius, kept away from the cut and from the
    nonpositive integers (1e-3 guard; pole behavior is tested separately)."""
    out: list[complex] = []
    while len(out) < count:
        z = complex(rng.uniform(-radius, radius), rng.uniform(-radius, radius))
        if abs(z) > radius:
            continue
        if abs(z.imag) < 1e-3 and z.real < 0.5:
            continue
        if abs(z.imag) < 1e-3 and abs(z.real - round(z.real)) < 1e-3:
            continue
        out.append(z)
    return np.array(out)


def _sample_negative_noninteger(rng: np.random.Generator, count: int, lo: float) -> np.ndarray:
    out = lo * rng.random(count)
    mask = np.abs(out - np.round(out)) < 1e-6
    while np.any(mask):
        out[mask] = lo * rng.random(int(mask.sum()))
        mask = np.abs(out - np.round(out)) < 1e-6
    return out


def _timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, (time.perf_counter() - t0) * 1000.0


def _result(name, anchor, ok, residual, tol, ms, detail="", order=None) -> CheckResult:
    cls = status_class(anchor, order)
    status = "evidence" if cls == "evidence" else ("pass" if ok else "fail")
    return CheckResult(
        name=name,
        paper_anchor=anchor,
        status=status,
        residual=residual,
        tolerance=tol,
        runtime_ms=round(ms, 3),
        detail=detail,
    )


# ---------------------------------------------------------------------------
# individual checks
# ---------------------------------------------------------------------------

def check_southeast(cfg: SuiteConfig) -> CheckResult:
    def body():
        worst = 0
        for k in range(1, 21):
            for m in range(1, 21):
                lhs, rhs = southeast_diagonal_sum(k, m)
                worst = max(worst, abs(lhs - rhs))
        return worst

    worst, ms = _timed(body)
    return _result(
        "southeast-diagonal", "southeast-diagonal-sum-identity",
        worst == 0, float(worst), 0.0, ms, "exact integers, 1<=k,m<=20",
    )


def check_counting_jumps(cfg: SuiteConfig) -> CheckResult:
    def body():
        worst = 0.0
        for n in range(1, max(cfg.orders) + 1):
            for k in range(1, 30):
                jump = counting_N(n, k + 0.25) - counting_N(n, k - 0.25)
                want = binomial(n + k - 2, n - 1)
                worst = max(worst, abs(jump - want))
                if zero_multiplicity(n, k) != binomial(n + k - 1, n - 1):
                    worst = max(worst, 1.0)
        return worst

    worst, ms = _timed(body)
    return _result(
        "counting-function-jumps", "zero-counting-jumps",
        worst == 0.0, worst, 0.0, ms,
    )


def check_principal_log(cfg: SuiteConfig) -> CheckResult:
    rng = np.random.default_rng(cfg.seed + 11)

    def body():
        zs = _sample_cut_plane(rng, 1000, 50.0)
        worst = 0.0
        for z in zs:
            w = principal_log(complex(z))
            worst = max(worst, abs(np.exp(w) - z) / abs(z))
        return worst

    worst, ms = _timed(body)
    return _result(
        "principal-log-roundtrip", "principal-branch-roundtrip",
        worst <= 1e-14, worst, 1e-14, ms, "exp(Log z) = z on 1000 seeded points",
    )


def check_normalization(cfg: SuiteConfig) -> CheckResult:
    def body():
        worst = 0.0
        for n in range(1, max_order() + 1):
            worst = max(worst, abs(log_gn_shifted(0.0, n)), abs(log_gn_shifted(1.0, n)))
        return worst

    worst, ms = _timed(body)
    return _result(
        "normalization", "normalization-Gn-equals-one",
        worst <= 1e-12, worst, 1e-12, ms, "log G_n(1) and log G_n(2) for all supported n",
    )


def check_recurrence(cfg: SuiteConfig, n: int) -> CheckResult:
    rng = np.random.default_rng(cfg.seed + 100 + n)

    def body():
        zs = _sample_cut_plane(rng, cfg.recurrence_samples, cfg.recurrence_radius)
        worst = 0.0
        for z in zs:
            worst = max(worst, recurrence_residual(complex(z), n))
        return worst

    worst, ms = _timed(body)
    return _result(
        f"recurrence-n{n}", "recurrence-relation",
        worst <= 1e-9, worst, 1e-9, ms,
        f"{cfg.recurrence_samples} seeded z, |z| <= {cfg.recurrence_radius}",
    )


def check_conjugate_symmetry(cfg: SuiteConfig, n: int) -> CheckResult:
    rng = np.random.default_rng(cfg.seed + 200 + n)

    def body():
        zs = _sample_cut_plane(rng, 100, 15.0)
        worst = 0.0
        for z in zs:
            a = log_gn_shifted(complex(z), n)
            b = log_gn_shifted(complex(z).conjugate(), n)
            worst = max(worst, abs(a - b.conjugate()) / max(1.0, abs(a)))
        return worst

    worst, ms = _timed(body)
    return _result(
        f"conjugate-symmetry-n{n}", "reflection-symmetry",
        worst <= 1e-12, worst, 1e-12, ms,
    )


def check_boundary_phase(cfg: SuiteConfig, n: int) -> CheckResult:
    def body():
        worst = 0.0
        for k in range(1, 11):
            t = -k + 0.5
            bv = boundary_log_gn(t, n)
            want = (-1.0) ** n * math.pi * pochhammer(float(k), n) / math.factorial(n)
            worst = max(worst, abs(bv.imag_part - want))
            # independent route: hockey-stick sum of the product multiplicities
            # (both sides are exact small integers in float)
            hs = sum(binomial(n + j - 2, n - 1) for j in range(1, k + 1))
            worst = max(worst, abs(pochhammer(float(k), n) / math.factorial(n) - hs))
        return worst

    worst, ms = _timed(body)
    return _result(
        f"boundary-phase-n{n}", "boundary-phase-pochhammer",
        worst == 0.0, worst, 0.0, ms, "exact assembly, k <= 10",
    )


def check_boundary_limit(cfg: SuiteConfig, n: int) -> CheckResult:
    def body():
        worst = 0.0
        decreasing = True
        for k in range(1, 11):
            t = -k + 0.5
            bv = boundary_log_gn(t, n)
            target = complex(bv.real_part, bv.imag_part)
            diffs = [abs(log_gn_shifted(complex(t, y) - 1.0, n) - target) for y in (1e-2, 1e-4, 1e-6)]
            decreasing &= diffs[0] > diffs[1] > diffs[2]
            worst = max(worst, diffs[2])
        return worst, decreasing

    (worst, decreasing), ms = _timed(body)
    return _result(
        f"boundary-limit-n{n}", "boundary-limit-convergence",
        decreasing and worst <= 1e-5, worst, 1e-5, ms,
        "y = 1e-2, 1e-4, 1e-6; midpoints of (-k, -k+1), k <= 10",
    )


def check_convexity(cfg: SuiteConfig, n: int) -> CheckResult:
    def body():
        h = 0.1
        xs = np.arange(1.0, 20.0 + h / 2, h)
        vals = log_gn_shifted_vec(xs - 1.0, n)
        d = np.diff(np.real(vals), n + 1) / h ** (n + 1)
        return float(np.min(d))

    mn, ms = _timed(body)
    return _result(
        f"convexity-ladder-n{n}", "log-convexity-order-n-plus-1",
        mn >= -1e-8, max(0.0, -mn), 1e-8, ms,
        f"({n + 1})-th central difference on [1,20], step 0.1; min = {mn:.3e}",
    )


def check_growth_bound(cfg: SuiteConfig) -> CheckResult:
    def body():
        thetas = np.linspace(0.02, math.pi - 0.02, 64)
        ratios = {}
        for r in (10.0, 20.0, 40.0, 80.0):
            zs = r * np.exp(1j * thetas)
            vals = [abs(log_weierstrass_part(complex(z), 3)) for z in zs]
            ratios[r] = max(vals) / (r**3 * math.log(r))
        fitted_c = 1.05 * max(ratios[10.0], ratios[20.0], ratios[40.0])
        return ratios[80.0], fitted_c

    (r80, fitted_c), ms = _timed(body)
    return _result(
        "growth-bound", "product-part-growth-bound",
        r80 <= fitted_c, r80, fitted_c, ms,
        f"max |log product part| / (r^3 log r) at r=80 vs 1.05x max over r in {{10,20,40}}",
    )


def check_asymptotic_limit(cfg: SuiteConfig, n: int) -> CheckResult:
    def body():
        # the heights 1e2..1e4 are the documented n=3 case; for other orders the
        # O(1/x) contamination at x=100 would mask the 1/log-x extrapolation,
        # so start a decade higher
        xs = (1e2, 1e3, 1e4) if n == 3 else (1e3, 1e4, 1e5)
        fv = [f_n_eval(x, n).real for x in xs]
        target = 1.0 / math.factorial(n)
        monotone = (fv[0] < fv[1] < fv[2] < target) or (fv[0] > fv[1] > fv[2] > target)
        gap = abs(fv[2] - target)
        h = [1.0 / math.log(x) for x in xs]
        rich = (h[1] * fv[2] - h[2] * fv[1]) / (h[1] - h[2])
        rich_err = abs(rich - target)
        ok = monotone and rich_err <= 1e-3
        if n == 3:
            ok = ok and gap <= 3e-2
        detail = (
            f"f({xs[0]:g})={fv[0]:.6f} f({xs[1]:g})={fv[1]:.6f} f({xs[2]:g})={fv[2]:.6f}; "
            f"|f(1e4)-1/{n}!|={gap:.5f}; richardson err={rich_err:.2e}"
        )
        return ok, gap, rich_err, detail

    (ok, gap, rich_err, detail), ms = _timed(body)
    return _result(
        f"asymptotic-limit-n{n}", "asymptotic-limit-inverse-factorial",
        ok, gap if n == 3 else rich_err, 3e-2 if n == 3 else 1e-3, ms, detail, order=n,
    )


def check_density_nonnegativity(cfg: SuiteConfig, n: int) -> CheckResult:
    rng = np.random.default_rng(cfg.seed + 300 + n)

    def body():
        t = _sample_negative_noninteger(rng, cfg.density_samples, -25.0)
        vals = density_negative_arg_vec(-t, n, guard=0.0)
        i = int(np.argmin(vals))
        return float(vals[i]), float(t[i])

    (mn, at), ms = _timed(body)
    return _result(
        f"density-nonnegativity-n{n}", "density-nonnegativity",
        mn >= -1e-12, max(0.0, -mn), 1e-12, ms,
        f"min density {mn:.4e} at t={at:.4f} over {cfg.density_samples} seeded points in (-25,0)",
        order=n,
    )


def check_density_boundary_identity(cfg: SuiteConfig, n: int) -> CheckResult:
    rng = np.random.default_rng(cfg.seed + 400 + n)

    def body():
        ts = _sample_negative_noninteger(rng, cfg.identity_samples, -25.0)
        worst = 0.0
        for t in ts:
            d = density_negative_arg_vec(np.array([-t]), n, guard=1e-9)[0]
            worst = max(worst, abs(boundary_im_f_n(float(t), n) - math.pi * d))
        return worst

    worst, ms = _timed(body)
    return _result(
        f"density-boundary-identity-n{n}", "density-equals-boundary-imaginary-part",
        worst <= 1e-10, worst, 1e-10, ms,
        "floor-counting route vs Pochhammer route",
        order=n,
    )


def check_cubic_minimum(cfg: SuiteConfig) -> CheckResult:
    def body():
        d, e, f = d3_constants()
        a3, a2, a1 = 3.0 * (d + 1.0 / 3.0), 2.0 * (e - 0.5), f + 1.0
        gp = lambda t: a3 * t * t + a2 * t + a1 - 1.0 / (1.0 + t)
        roots = []
        grid = np.linspace(-1.999, -1.001, 400)
        vals = [gp(t) for t in grid]
        for i in range(len(grid) - 1):
            if vals[i] == 0.0 or vals[i] * vals[i + 1] < 0.0:
                roots.append(brentq(gp, grid[i], grid[i + 1], xtol=1e-13))
        t0 = roots[0] if roots else math.nan
        g = lambda t: (d + 1.0 / 3.0) * t**3 + (e - 0.5) * t**2 + (f + 1.0) * t - math.log(abs(1.0 + t))
        gpp = lambda t: 2.0 * a3 * t + a2 + 1.0 / (1.0 + t) ** 2
        return t0, len(roots), g(t0), gpp(t0)

    (t0, nroots, gt0, gppt0), ms = _timed(body)
    err = abs(t0 - (-1.50615))
    ok = nroots == 1 and err <= 5e-5 and gt0 > 0.0 and gppt0 > 0.0
    return _result(
        "cubic-minimum", "cubic-interior-minimum",
        ok, err, 5e-5, ms,
        f"t0={t0:.7f} (unique: {nroots == 1}), g(t0)={gt0:.6f}, g''(t0)={gppt0:.4f}",
    )


def check_reconstruction(cfg: SuiteConfig, n: int) -> CheckResult:
    rng = np.random.default_rng(cfg.seed + 500 + n)

    def body():
        npts = cfg.reconstruction_points
        zs = list(1.0 + 99.0 * rng.random(npts // 2))
        zs += [complex(rng.uniform(0.5, 60.0), rng.uniform(0.2, 60.0)) for _ in range(npts - npts // 2)]
        worst = 0.0
        tail = 0.0
        for z in zs:
            r = stieltjes_reconstruct(complex(z), n, cfg.quadrature)
            worst = max(worst, r.residual)
            tail = max(tail, r.tail_estimate)
        return worst, tail

    (worst, tail), ms = _timed(body)
    tol = 10.0 * cfg.quadrature.tolerance
    return _result(
        f"stieltjes-reconstruction-n{n}", "stieltjes-representation",
        worst <= tol, worst, tol, ms,
        f"max residual over {cfg.reconstruction_points} points; max modeled tail {tail:.3e}",
        order=n,
    )


def check_herglotz(cfg: SuiteConfig, n: int) -> CheckResult:
    def body():
        return herglotz_params(n)

    hp, ms = _timed(body)
    return _result(
        f"herglotz-linear-term-n{n}", "herglotz-linear-term-vanishes",
        hp.a_modulus <= 1e-4, hp.a_modulus, 1e-4, ms,
        f"a={hp.a:.3e} (|a_limit|={hp.a_modulus:.3e}), b={hp.b:.6f}",
        order=n,
    )


def check_pick_scan(cfg: SuiteConfig, n: int) -> CheckResult:
    def body():
        return pick_grid_scan(n, cfg.region, cfg.grid_resolution)

    scan, ms = _timed(body)
    return _result(
        f"pick-scan-n{n}", "pick-property-upper-half-plane",
        scan.min_im >= -1e-10, max(0.0, -scan.min_im), 1e-10, ms,
        f"min Im f_{n} = {scan.min_im:.6g} at {scan.at}",
        order=n,
    )


def check_monotonicity(cfg: SuiteConfig, n: int) -> CheckResult:
    def body():
        grid = np.linspace(0.5, 50.0, 60)
        return complete_monotonicity_probe(n, 5, grid)

    rep, ms = _timed(body)
    worst = min(v[0] for v in rep.entries.values())
    detail = "; ".join(
        f"m={m}: min={v[0]:.3e}{'' if v[3] else ' (violated)'}" for m, v in rep.entries.items()
    )
    return _result(
        f"complete-monotonicity-n{n}", "complete-monotonicity-of-derivative",
        rep.passed, max(0.0, -worst), None, ms, detail, order=n,
    )


def check_log_inverse(cfg: SuiteConfig) -> CheckResult:
    rng = np.random.default_rng(cfg.seed + 600)

    def body():
        worst = 0.0
        for _ in range(20):
            z = complex(rng.uniform(-0.8, 40.0), rng.uniform(-20.0, 20.0))
            if abs(z) < 0.05:
                z += 0.5
            got = stieltjes_log_inverse(z, cfg.quadrature)
            want = 1.0 / principal_log(z + 1.0)
            worst = max(worst, abs(got - want))
        return worst

    worst, ms = _timed(body)
    return _result(
        "log-inverse-kernel", "log-inverse-stieltjes-kernel",
        worst <= 1e-8, worst, 1e-8, ms, "20 seeded points vs closed form",
    )


def check_gn_reconstruction(cfg: SuiteConfig, n: int) -> CheckResult:
    rng = np.random.default_rng(cfg.seed + 700 + n)

    def body():
        worst = 0.0
        for _ in range(cfg.reconstruction_points):
            z = complex(rng.uniform(0.5, 30.0), rng.uniform(0.0, 20.0))
            r = g_n_stieltjes_reconstruct(z, n, cfg.quadrature)
            worst = max(worst, r.residual)
        return worst

    worst, ms = _timed(body)
    return _result(
        f"unit-ball-reconstruction-n{n}", "unit-ball-ratio-representation",
        worst <= 1e-5, worst, 1e-5, ms, order=n,
    )


def check_point_mass(cfg: SuiteConfig, n: int) -> CheckResult:
    def body():
        return point_mass_estimate(n, cfg.quadrature)

    pm, ms = _timed(body)
    c = abs(pm.extrapolated)
    return _result(
        f"vanishing-point-mass-n{n}", "vanishing-point-mass-at-origin",
        c <= 1e-3, c, 1e-3, ms,
        f"samples {pm.samples}; extrapolated {pm.extrapolated:.3e}",
        order=n,
    )


def check_stirling(cfg: SuiteConfig) -> CheckResult:
    def body():
        errs = {}
        for x in (50.0, 200.0):
            ref = log_gn_shifted(x, 3).real
            errs[x] = abs(stirling_log_g3(x) - ref) / abs(ref)
        ratio = stirling_log_g3(1e4) / (1e12 * math.log(1e4))
        return errs, ratio

    (errs, ratio), ms = _timed(body)
    ok = errs[50.0] <= 1e-3 and errs[200.0] <= 1e-4 and errs[200.0] < errs[50.0] and abs(ratio - 1.0 / 6.0) < 5e-2
    return _result(
        "stirling-log-g3", "triple-gamma-stirling-formula",
        ok, errs[200.0], 1e-4, ms,
        f"rel err: x=50 {errs[50.0]:.2e}, x=200 {errs[200.0]:.2e}; x^3 log x ratio at 1e4: {ratio:.5f}",
    )


def check_log_gamma_functional(cfg: SuiteConfig) -> CheckResult:
    rng = np.random.default_rng(cfg.seed + 800)

    def body():
        from .multigamma import log_gamma

        zs = _sample_cut_plane(rng, cfg.logref_samples, 30.0)
        worst = 0.0
        for z in zs:
            z = complex(z)
            lhs = log_gamma(z + 1.0).value
            rhs = log_gamma(z).value + principal_log(z)
            worst = max(worst, abs(lhs - rhs) / max(1.0, abs(lhs)))
        return worst

    worst, ms = _timed(body)
    return _result(
        "log-gamma-functional-equation", "log-gamma-functional-equation",
        worst <= 1e-13, worst, 1e-13, ms,
    )


def check_conjecture_evidence(cfg: SuiteConfig, n: int) -> CheckResult:
    rng = np.random.default_rng(cfg.seed + 900 + n)

    def body():
        scan = pick_grid_scan(n, cfg.region, cfg.grid_resolution)
        t = _sample_negative_noninteger(rng, cfg.density_samples, -25.0)
        dens = density_negative_arg_vec(-t, n, guard=0.0)
        rec = stieltjes_reconstruct(2.0, n, cfg.quadrature)
        return scan.min_im, float(np.min(dens)), rec.residual

    (min_im, min_d, resid), ms = _timed(body)
    return _result(
        f"conjecture-evidence-n{n}", "conjecture-evidence-summary",
        True, resid, None, ms,
        f"min Im f_{n} = {min_im:.6g}; min density = {min_d:.6g}; reconstruction residual = {resid:.6g}",
        order=n,
    )


# ---------------------------------------------------------------------------
# the suite driver
# ---------------------------------------------------------------------------

def run_suite(cfg: SuiteConfig) -> VerificationReport:
    """Execute all checks for the configured orders; deterministic under a
    fixed seed. Conjecture-tied checks for orders > 3 report evidence only."""
    checks: list[CheckResult] = []
    checks.append(check_southeast(cfg))
    checks.append(check_counting_jumps(cfg))
    checks.append(check_principal_log(cfg))
    checks.append(check_normalization(cfg))
    checks.append(check_log_gamma_functional(cfg))
    checks.append(check_cubic_minimum(cfg))
    checks.append(check_growth_bound(cfg))
    checks.append(check_stirling(cfg))
    checks.append(check_log_inverse(cfg))
    for n in cfg.orders:
        n = int(n)
        if n + 1 <= max_order():
            checks.append(check_recurrence(cfg, n))
        checks.append(check_conjugate_symmetry(cfg, n))
        checks.append(check_boundary_phase(cfg, n))
        checks.append(check_boundary_limit(cfg, n))
        checks.append(check_convexity(cfg, n))
        checks.append(check_asymptotic_limit(cfg, n))
        checks.append(check_density_nonnegativity(cfg, n))
        checks.append(check_density_boundary_identity(cfg, n))
        checks.append(check_reconstruction(cfg, n))
        checks.append(check_herglotz(cfg, n))
        checks.append(check_pick_scan(cfg, n))
        checks.append(check_monotonicity(cfg, n))
        checks.append(check_gn_reconstruction(cfg, n))
        checks.append(check_point_mass(cfg, n))
        if n > 3:
            checks.append(check_conjecture_evidence(cfg, n))
    meta = {
        "version": VERSION,
        "seed": cfg.seed,
        "config": cfg.to_dict(),
        "config_hash": config_hash(cfg.to_dict()),
    }
    return VerificationReport(checks=checks, metadata=meta)
