"""`verify`: the acceptance suite, one JSON entry per check."""

import logging
import tempfile
import time
from collections.abc import Callable
from dataclasses import dataclass, field, replace
from fractions import Fraction
from pathlib import Path

import numpy as np

from devils_coliseum.affine.staircase import CANTOR_MAPS, lebesgue_maps, staircase_sweep, staircase_T
from devils_coliseum.config import RunConfig, build_generator_system
from devils_coliseum.errors import ConfigError, OrderViolation
from devils_coliseum.field.export import write_json
from devils_coliseum.field.julia import classify_julia, julia_backward_cloud, julia_value_coverage
from devils_coliseum.field.masks import difference, disk_mask, filled_julia_mask
from devils_coliseum.field.operator import field_from_function, fixed_point_residual, operator_limit_check
from devils_coliseum.field.render import estimate_T_points
from devils_coliseum.field.types import GridSpec, RegionMask, ScalarField
from devils_coliseum.poly.roots import polynomial_roots
from devils_coliseum.poly.types import Polynomial
from devils_coliseum.reports.analyze import holder_survey
from devils_coliseum.reports.common import annulus_masks, prepare_output, render_config_field, report_header
from devils_coliseum.reports.render import cmd_render
from devils_coliseum.reports.types import CheckResult, CommandResult
from devils_coliseum.semigroup.preimage import preimage_disjointness
from devils_coliseum.semigroup.trap import certify_image_containment, mask_inside_interior
from devils_coliseum.semigroup.types import Disjointness, GeneratorSystem
from devils_coliseum.symbolic.coding import invert_t
from devils_coliseum.symbolic.components import sample_lambda_typical, t_value_gate
from devils_coliseum.symbolic.exponents import dim_lower_bound, sum_inv_deg, u_exponent
from devils_coliseum.symbolic.holder import empirical_holder
from devils_coliseum.symbolic.kernel import kernel_julia_probe
from devils_coliseum.symbolic.order import monotonicity_audit, order_generators
from devils_coliseum.symbolic.types import Word
from devils_coliseum.symbolic.words import parse_word

logger = logging.getLogger(__name__)

CLOSED_FORM_TOLERANCE = 1e-12
ORACLE_TOLERANCE = 1e-9
BOUNDARY_FIXED_POINT_MIN = 0.95
COVERAGE_MIN = 0.75
HOLDER_MEDIAN_RANGE = (0.3, 0.7)
HOLDER_BELOW_ONE_MIN = 0.6
HOLDER_CALIBRATION_TOLERANCE = 0.05
MC_SIGMAS = 4.0
DETERMINISM_SIZE = 32
DETERMINISM_WORKERS = (1, 4, 8)
DETERMINISM_IMAGES = ("T.pgm", "julia.pgm")


@dataclass
class VerifyContext:
    """Shared state of one verify run; the T field and generator order are computed once."""

    config: RunConfig
    sys: GeneratorSystem
    workers: int | None
    _T: ScalarField | None = field(default=None, repr=False)
    _sorted: GeneratorSystem | None = field(default=None, repr=False)

    @property
    def seed(self) -> int:
        return self.config.sampling.seed

    @property
    def T(self) -> ScalarField:
        if self._T is None:
            self._T = render_config_field(self.config, self.sys, self.workers)
        return self._T

    @property
    def geometry_grid(self) -> GridSpec:
        size = self.config.verify.geometry_size
        return GridSpec(*self.config.grid.rect, size, size)

    @property
    def sorted_system(self) -> GeneratorSystem:
        if self._sorted is None:
            self._sorted, _ = order_generators(self.sys, self.geometry_grid)
        return self._sorted


type Check = Callable[[VerifyContext], list[CheckResult]]


def _skipped(name: str, reason: str) -> list[CheckResult]:
    return [CheckResult(name, True, detail=f"skipped: {reason}")]


def check_closed_forms(ctx: VerifyContext) -> list[CheckResult]:
    degs, p = ctx.sys.degrees, ctx.sys.weights
    u = u_exponent(degs, p)
    dim = dim_lower_bound(degs, p)
    total = sum_inv_deg(degs)
    return [
        CheckResult("closed_forms.u_below_one", u.value < 1.0 and not u.warning, u.value, 1.0),
        CheckResult(
            "closed_forms.dim_bound",
            abs(dim - (1.0 + u.value)) <= CLOSED_FORM_TOLERANCE,
            dim,
            CLOSED_FORM_TOLERANCE,
            "dim_lower_bound = 1 + u",
        ),
        CheckResult("closed_forms.sum_inv_deg", total < 1.0, total, 1.0),
    ]


def check_trap(ctx: VerifyContext) -> list[CheckResult]:
    certificate = ctx.sys.trap
    if certificate is None:
        return [CheckResult("trap", False, detail="system has no certified trap")]
    return [CheckResult("trap", True, certificate.min_clearance, certificate.margin)]


def _trap_mask(sys: GeneratorSystem, grid: GridSpec) -> RegionMask:
    region = sys.trap_region
    bits = region.contains(grid.points()) if region is not None else np.zeros(grid.size, dtype=bool)
    return RegionMask(grid, bits.reshape(grid.shape))


def check_geometry(ctx: VerifyContext) -> list[CheckResult]:
    if ctx.sys.m != 2:
        return _skipped("geometry", "needs two generators")
    if ctx.sys.trap_region is None:
        return [CheckResult("geometry", False, detail="system has no certified trap")]
    grid = ctx.geometry_grid
    inner, outer = ctx.sorted_system.generators
    k_inner = filled_julia_mask(inner, grid)
    k_outer = filled_julia_mask(outer, grid)

    results = []
    image = certify_image_containment(outer, k_inner, k_inner)
    results.append(
        CheckResult(
            "geometry.image_containment",
            image.contained,
            image.violations,
            0,
            "outer generator maps K(inner) into int K(inner)",
        )
    )
    for index, disk in enumerate(ctx.sys.trap_region.disks):
        inside = mask_inside_interior(disk_mask(grid, disk.center, disk.radius), k_inner)
        results.append(
            CheckResult(f"geometry.trap_disk_{index}", inside.contained, inside.violations, 0, str(disk))
        )

    annulus = difference(k_outer, _trap_mask(ctx.sys, grid))
    report = preimage_disjointness(ctx.sorted_system, annulus)
    results.append(
        CheckResult(
            "geometry.preimage_disjointness",
            report.verdict is Disjointness.DISJOINT,
            report.to_dict(),
            str(Disjointness.DISJOINT),
        )
    )
    return results


def _trap_samples(ctx: VerifyContext, count: int) -> np.ndarray:
    disk = ctx.sys.trap_region.disks[0]
    rng = np.random.default_rng([ctx.seed, 2])
    radius = 0.9 * disk.radius * np.sqrt(rng.random(count))
    return disk.center + radius * np.exp(2j * np.pi * rng.random(count))


def outer_fixed_point(g: Polynomial) -> complex:
    """The fixed point of g of largest modulus."""
    shifted = list(g.coeffs)
    shifted[1] -= 1.0
    roots = polynomial_roots(Polynomial.from_coeffs(shifted))
    return complex(roots[np.argmax(np.abs(roots))])


def check_boundary(ctx: VerifyContext) -> list[CheckResult]:
    sampling, verify = ctx.config.sampling, ctx.config.verify
    N, n_max = sampling.N, sampling.n_max
    results = []

    if ctx.sys.trap_region is not None:
        points = _trap_samples(ctx, verify.boundary_points)
        counts = estimate_T_points(ctx.sys, points, N, n_max, ctx.seed, ctx.workers)
        escaped = int(counts.escaped.sum() + counts.undecided.sum())
        results.append(CheckResult("boundary.trap_zero", escaped == 0, escaped, 0))

    rng = np.random.default_rng([ctx.seed, 3])
    far = 1.05 * ctx.sys.escape_radius * np.exp(2j * np.pi * rng.random(verify.boundary_points))
    counts = estimate_T_points(ctx.sys, far, N, n_max, ctx.seed, ctx.workers)
    stayed = int(N * far.size - counts.escaped.sum())
    results.append(CheckResult("boundary.outside_one", stayed == 0, stayed, 0))

    if ctx.sys.m == 2:
        z = outer_fixed_point(ctx.sorted_system.generators[-1])
        counts = estimate_T_points(ctx.sys, np.asarray([z]), verify.gate_N, n_max, ctx.seed, ctx.workers)
        value = float(counts.escaped[0]) / verify.gate_N
        results.append(
            CheckResult(
                "boundary.outer_fixed_point",
                value >= BOUNDARY_FIXED_POINT_MIN,
                value,
                BOUNDARY_FIXED_POINT_MIN,
                f"z = {z.real:.6g}{z.imag:+.6g}i",
            )
        )
    return results


def check_residual(ctx: VerifyContext) -> list[CheckResult]:
    report = fixed_point_residual(ctx.sys, ctx.T)
    return [CheckResult("residual", report.passed, report.residual, report.bound, f"{report.pixels} pixels")]


def check_operator_limit(ctx: VerifyContext) -> list[CheckResult]:
    verify = ctx.config.verify
    T = ctx.T
    phi = field_from_function(T.grid, lambda z: 1.0 / (1.0 + np.abs(z) ** 2))
    report = operator_limit_check(ctx.sys, phi, T, complex(*verify.mu_point), verify.operator_steps, 0.0)
    return [
        CheckResult(
            "operator_limit",
            report.final <= verify.limit_tolerance and report.eventually_decreasing,
            report.final,
            verify.limit_tolerance,
            f"interior sup {report.final_interior:.4g}; eventually decreasing: {report.eventually_decreasing}",
        )
    ]


def check_julia_coverage(ctx: VerifyContext) -> list[CheckResult]:
    T = ctx.T
    mask = classify_julia(ctx.sys, T, ctx.config.analysis.julia_window)
    coverage = julia_value_coverage(T, mask)
    return [CheckResult("julia_coverage", coverage >= COVERAGE_MIN, coverage, COVERAGE_MIN, f"{mask.count} pixels")]


def check_t_value_gate(ctx: VerifyContext) -> list[CheckResult]:
    if ctx.sys.m != 2:
        return _skipped("t_value_gate", "needs two generators")
    verify = ctx.config.verify
    words = [parse_word(text) for text in ctx.config.analysis.words]
    checks = t_value_gate(
        ctx.sys,
        words,
        verify.gate_N,
        ctx.config.sampling.n_max,
        ctx.seed,
        verify.gate_points,
        ctx.workers,
    )
    return [
        CheckResult(
            f"t_value_gate.{check.word}",
            check.deviation <= 3.0 * check.stderr,
            check.to_dict(),
            3.0 * check.stderr,
        )
        for check in checks
    ]


def check_order(ctx: VerifyContext) -> list[CheckResult]:
    masks = annulus_masks(ctx.T.grid, ctx.config.analysis.annuli)
    try:
        report = monotonicity_audit(ctx.sys, ctx.T, masks)
    except OrderViolation as exc:
        return [CheckResult("order", False, {"pair": list(exc.pair)}, detail=f"OrderViolation: {exc}")]
    except ValueError as exc:
        return [CheckResult("order", False, detail=f"annuli unusable on this grid: {exc}")]
    return [CheckResult("order", True, list(report.means))]


def check_invert(ctx: VerifyContext) -> list[CheckResult]:
    if ctx.sys.m != 2:
        return _skipped("invert", "needs two generators")
    p1 = ctx.sys.weights[0]
    words = invert_t(ctx.sys.weights, p1)
    expected = (Word((1,), (2,)), Word((2,), (1,)))
    return [CheckResult("invert", words == expected, [str(w) for w in words], [str(w) for w in expected])]


def check_kernel(ctx: VerifyContext) -> list[CheckResult]:
    analysis = ctx.config.analysis
    cloud = julia_backward_cloud(ctx.sys, None, analysis.kernel_points, ctx.seed)
    report = kernel_julia_probe(ctx.sys, cloud, analysis.kernel_depth)
    return [
        CheckResult(
            "kernel",
            report.fraction == 1.0,
            report.fraction,
            1.0,
            f"{report.points} points, depth {report.depth}",
        )
    ]


def _calibration(exponent: float) -> CheckResult:
    grid = GridSpec.square(1.0, 129)
    z0 = grid.point_at(64, 64)
    synthetic = field_from_function(grid, lambda z: np.abs(z - z0) ** exponent)
    estimate = empirical_holder(synthetic, z0)
    return CheckResult(
        f"holder.calibration_{exponent:g}",
        abs(estimate.exponent - exponent) <= HOLDER_CALIBRATION_TOLERANCE,
        estimate.exponent,
        HOLDER_CALIBRATION_TOLERANCE,
    )


def check_holder(ctx: VerifyContext) -> list[CheckResult]:
    analysis = ctx.config.analysis
    points = sample_lambda_typical(ctx.sys, analysis.holder_points, analysis.lambda_word_len, ctx.seed)
    survey = holder_survey(ctx.T, points)
    lo, hi = HOLDER_MEDIAN_RANGE
    median, below = survey["median"], survey["below_one"]
    passed = survey["reliable"] > 0 and lo <= median <= hi and below >= HOLDER_BELOW_ONE_MIN
    summary = {k: survey[k] for k in ("points", "skipped", "reliable", "median", "below_one")}
    return [
        CheckResult("holder.lambda_samples", passed, summary, {"median": [lo, hi], "below_one": HOLDER_BELOW_ONE_MIN}),
        _calibration(1.0),
        _calibration(0.5),
    ]


def cantor_function(x: float, digits: int = 64) -> float:
    """The Cantor function from the ternary digits of x, in exact arithmetic."""
    value = Fraction(x)
    if value <= 0:
        return 0.0
    if value >= 1:
        return 1.0
    total = Fraction(0)
    for k in range(1, digits + 1):
        value *= 3
        digit = int(value)
        value -= digit
        if digit == 1:
            return float(total + Fraction(1, 2**k))
        total += Fraction(digit // 2, 2**k)
    return float(total)


def check_staircase(ctx: VerifyContext) -> list[CheckResult]:
    verify, staircase = ctx.config.verify, ctx.config.staircase
    rng = np.random.default_rng([ctx.seed, 4])
    xs = rng.random(verify.staircase_points)
    half = (0.5, 0.5)

    cantor = staircase_sweep(CANTOR_MAPS, half, xs, depth=staircase.depth)
    oracle = np.array([cantor_function(float(x)) for x in xs])
    cantor_error = float(np.abs(cantor - oracle).max())

    identity = staircase_sweep(lebesgue_maps(), half, xs, depth=staircase.depth)
    identity_error = float(np.abs(identity - xs).max())

    weights = [k / 10 for k in range(1, 10)]
    midpoint_error = max(abs(staircase_T(lebesgue_maps(), (a, 1.0 - a), 0.5) - a) for a in weights)

    mc_xs = xs[: verify.mc_points]
    mc = staircase_sweep(
        CANTOR_MAPS,
        half,
        mc_xs,
        mode="monte-carlo",
        samples=staircase.samples,
        n_max=staircase.n_max,
        seed=ctx.seed,
    )
    exact = cantor[: verify.mc_points]
    stderr = np.sqrt(np.maximum(exact * (1.0 - exact), 1.0 / staircase.samples) / staircase.samples)
    z_score = float((np.abs(mc - exact) / stderr).max()) if mc.size else 0.0

    return [
        CheckResult("staircase.cantor_oracle", cantor_error <= ORACLE_TOLERANCE, cantor_error, ORACLE_TOLERANCE),
        CheckResult("staircase.lebesgue_identity", identity_error <= ORACLE_TOLERANCE, identity_error, ORACLE_TOLERANCE),
        CheckResult("staircase.lebesgue_midpoint", midpoint_error <= ORACLE_TOLERANCE, midpoint_error, ORACLE_TOLERANCE),
        CheckResult("staircase.monte_carlo", z_score <= MC_SIGMAS, z_score, MC_SIGMAS, "max |MC - exact| / stderr"),
    ]


def check_determinism(ctx: VerifyContext) -> list[CheckResult]:
    """Repeat the render command on a small grid and compare its PGM bytes across worker counts."""
    config = ctx.config
    images: list[tuple[bytes, ...]] = []
    with tempfile.TemporaryDirectory(prefix="coliseum-determinism-") as scratch:
        for workers in DETERMINISM_WORKERS:
            run = replace(
                config,
                grid=replace(config.grid, width=DETERMINISM_SIZE, height=DETERMINISM_SIZE),
                sampling=replace(config.sampling, N=min(config.sampling.N, 64)),
                analysis=replace(config.analysis, cloud_points=min(config.analysis.cloud_points, 200)),
                output=replace(config.output, dir=str(Path(scratch) / f"w{workers}"), png=False, csv=False),
            )
            cmd_render(run, workers)
            images.append(tuple(run.output.artifact(name).read_bytes() for name in DETERMINISM_IMAGES))
    identical = all(run == images[0] for run in images[1:])
    workers_text = "/".join(str(w) for w in DETERMINISM_WORKERS)
    return [
        CheckResult(
            "determinism",
            identical,
            identical,
            True,
            f"{', '.join(DETERMINISM_IMAGES)} at {DETERMINISM_SIZE}² with workers {workers_text}",
        )
    ]


CHECKS: dict[str, Check] = {
    "closed_forms": check_closed_forms,
    "trap": check_trap,
    "geometry": check_geometry,
    "boundary": check_boundary,
    "residual": check_residual,
    "operator_limit": check_operator_limit,
    "julia_coverage": check_julia_coverage,
    "t_value_gate": check_t_value_gate,
    "order": check_order,
    "invert": check_invert,
    "kernel": check_kernel,
    "holder": check_holder,
    "staircase": check_staircase,
    "determinism": check_determinism,
}


def selected_checks(names: tuple[str, ...]) -> list[str]:
    if not names:
        return list(CHECKS)
    unknown = [name for name in names if name not in CHECKS]
    if unknown:
        raise ConfigError(f"unknown verify.checks: {', '.join(unknown)}; available: {', '.join(CHECKS)}")
    return list(names)


def cmd_verify(config: RunConfig, workers: int | None = None) -> CommandResult:
    start = time.perf_counter()
    names = selected_checks(config.verify.checks)
    sys = build_generator_system(config.system)
    ctx = VerifyContext(config, sys, workers)
    prepare_output(config)

    results: list[CheckResult] = []
    for name in names:
        check_start = time.perf_counter()
        entries = CHECKS[name](ctx)
        results.extend(entries)
        failed = [entry.name for entry in entries if not entry.passed]
        logger.info(
            "Check %s: %s (%.2fs)",
            name,
            "FAILED " + ", ".join(failed) if failed else "passed",
            time.perf_counter() - check_start,
        )

    ok = all(entry.passed for entry in results)
    report = report_header(config, sys)
    report["passed"] = ok
    report["checks"] = [entry.to_dict() for entry in results]

    result = CommandResult(ok=ok)
    result.paths.append(write_json(config.output.artifact("verify.json"), report))
    result.summary = {
        "command": "verify",
        "files": [str(p) for p in result.paths],
        "passed": ok,
        "failed": [entry.name for entry in results if not entry.passed],
    }
    logger.info("Verification %s in %.2fs", "passed" if ok else "FAILED", time.perf_counter() - start)
    return result
