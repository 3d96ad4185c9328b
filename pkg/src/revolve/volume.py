"""Volumes of solids of revolution, computed by mutually cross-validating
methods.

Four routes are implemented:

* ``shell``     -- direct shell quadrature 2*pi*Int x*f(x) dx of the region
                   between the curve and the abscissa axis;
* ``disk``      -- direct disk quadrature pi*Int g(y)^2 dy, inverting the
                   curve numerically per quadrature node when it is given
                   the other way around;
* ``theorem1``  -- the sign-corrected boundary-term formula
                   sgn(f(b)-f(a)) * {pi*[b^2 f(b) - a^2 f(a)] - 2*pi*Int x*f(x) dx}
                   valid for strictly monotone curves (``theorem3`` is its
                   x-axis mirror, ``theorem2`` the piecewise-monotone
                   extension under single-intersection hypotheses);
* ``piecewise`` -- the alternating sum of per-piece boundary-term volumes,
                   whose telescoping must reproduce the ``theorem2`` value.

The boundary-term formulas are evaluated with a single quadrature plus
boundary terms, never by numerically inverting the curve; the direct disk
route does invert.  Keeping that asymmetry is what makes cross-validation
meaningful.

Reported volumes follow the convention that the region extends to the
rotation axis: rotation about the y-axis takes the region bounded by
x = 0, the two horizontal endpoint lines, and the curve; rotation about
the x-axis is the mirror image.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Mapping

from .errors import RevolveError
from .expr import Expression, bind, differentiate, the_variable
from .monotone import (
    HypothesisReport,
    MonotonePartition,
    critical_points,
    partition,
    validate_revolution_hypotheses,
)
from .numerics import (
    Interval,
    QuadratureResult,
    Tolerances,
    integrate,
    newton_solve,
)

__all__ = [
    "AXIS_X",
    "AXIS_Y",
    "HypothesisViolationError",
    "METHODS",
    "NegativeCurveError",
    "NotInvertibleError",
    "NotMonotoneError",
    "ROLE_X_OF_Y",
    "ROLE_Y_OF_X",
    "VolumeProblem",
    "VolumeReport",
    "WARN_NOT_CONVERGED",
    "cross_validate",
    "disk_volume_x_axis",
    "disk_volume_y_axis",
    "piecewise_signed_sum",
    "shell_volume",
    "solve",
    "theorem1_x",
    "theorem1_y",
    "theorem2_y",
    "theorem3_x",
]

AXIS_Y = "y-axis"
AXIS_X = "x-axis"
ROLE_Y_OF_X = "y-of-x"
ROLE_X_OF_Y = "x-of-y"
METHODS = ("shell", "disk", "theorem1", "theorem2", "theorem3", "piecewise", "all")

WARN_NOT_CONVERGED = "quadrature-not-converged"

# Roundoff slack for nonnegativity checks (matches the hypothesis layer).
_NONNEG_FLOOR = -1e-12


class NegativeCurveError(RevolveError):
    """The curve dips below zero where the method requires f >= 0."""

    def __init__(self, x: float, value: float):
        self.x = x
        self.value = value
        super().__init__(f"curve is negative: f({x!r}) = {value!r}")


class NotMonotoneError(RevolveError):
    """The single-piece boundary-term formula needs a strictly monotone curve."""


class NotInvertibleError(RevolveError):
    """Disk quadrature cannot invert a non-monotone curve."""


class HypothesisViolationError(RevolveError):
    """The piecewise formulas refuse curves that fail validation."""

    def __init__(self, report: HypothesisReport):
        self.report = report
        rules = ", ".join(f"{rule} at {loc!r}" for rule, loc in report.violations)
        super().__init__(f"revolution hypotheses violated: {rules}")


@dataclass(frozen=True)
class VolumeProblem:
    """One volume-of-revolution request.

    ``curve_role`` says whether the expression gives the ordinate as a
    function of the abscissa (``y-of-x``) or the other way around;
    ``interval`` is the range of the expression's free variable.
    """

    curve: Expression
    interval: Interval
    curve_role: str = ROLE_Y_OF_X
    axis: str = AXIS_Y
    method: str = "all"
    tol: Tolerances = field(default_factory=Tolerances)
    parameters: Mapping[str, float] = field(default_factory=dict)

    def __post_init__(self):
        if self.curve_role not in (ROLE_Y_OF_X, ROLE_X_OF_Y):
            raise ValueError(f"unknown curve role {self.curve_role!r}")
        if self.axis not in (AXIS_Y, AXIS_X):
            raise ValueError(f"unknown axis {self.axis!r}")
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}")


@dataclass(frozen=True)
class VolumeReport:
    """Result of a volume computation.

    ``sign_factor`` is the orientation correction sgn(f(b) - f(a)) applied
    by the boundary-term formulas; methods that need no correction report
    +1.  ``cross_checks`` holds ``(method, value, delta)`` triples relative
    to the primary value.
    """

    value: float
    method: str
    error_estimate: float
    sign_factor: int
    partition: MonotonePartition | None = None
    cross_checks: tuple[tuple[str, float, float], ...] = ()
    warnings: tuple[str, ...] = ()

    def __post_init__(self):
        if self.sign_factor not in (-1, 1):
            raise ValueError("sign_factor must be -1 or +1")


# ---------------------------------------------------------------------------
# Internal helpers

def _curve_function(curve: Expression, parameters: Mapping[str, float] | None
                    ) -> tuple[Callable[[float], float], str | None]:
    var = the_variable(curve)
    return bind(curve, var or "_", parameters), var


def _check_nonnegative(fn: Callable[[float], float], interval: Interval,
                       grid_n: int = 4096) -> None:
    step = interval.width / grid_n
    for i in range(grid_n + 1):
        x = interval.hi if i == grid_n else interval.lo + i * step
        v = fn(x)
        if v < _NONNEG_FLOOR:
            raise NegativeCurveError(x, v)


def _clamp(raw: float, err: float) -> float:
    # volumes are nonnegative; absorb quadrature roundoff at zero
    if raw < 0.0 and -raw <= max(err, 1e-12):
        return 0.0
    return raw


def _parts_value(fn: Callable[[float], float], lo: float, hi: float,
                 tol: Tolerances) -> tuple[float, float, int, QuadratureResult]:
    """Boundary-term evaluation shared by every formula tier.

    Returns ``(value, error_estimate, sign_factor, quadrature)`` for
    sgn(h(hi)-h(lo)) * {pi*[hi^2 h(hi) - lo^2 h(lo)] - 2*pi*Int t*h(t) dt}.
    """
    h_lo = fn(lo)
    h_hi = fn(hi)
    sign = 1 if h_hi > h_lo else -1
    quad = integrate(lambda t: t * fn(t), lo, hi, tol)
    boundary = math.pi * (hi * hi * h_hi - lo * lo * h_lo)
    raw = sign * (boundary - 2.0 * math.pi * quad.value)
    err = 2.0 * math.pi * quad.error_estimate
    return _clamp(raw, err), err, sign, quad


def _quad_warnings(*quads: QuadratureResult) -> list[str]:
    return [WARN_NOT_CONVERGED] if any(not q.converged for q in quads) else []


def _inverse_on_piece(fn: Callable[[float], float],
                      derivative: Callable[[float], float],
                      piece: Interval, tol: Tolerances) -> Callable[[float], float]:
    """Evaluator for the inverse of ``fn`` restricted to a monotone piece.

    Each call solves fn(t) = s by Newton iteration, bracketed by the piece
    and seeded with the previous root so successive quadrature nodes
    converge in O(1) iterations.
    """
    seed = [piece.midpoint]

    def inverse(s: float) -> float:
        result = newton_solve(lambda t: fn(t) - s, derivative, seed[0],
                              bracket=piece, tol=tol)
        seed[0] = result.root
        return result.root

    return inverse


# ---------------------------------------------------------------------------
# Direct quadrature methods

def shell_volume(curve: Expression, interval: Interval,
                 tol: Tolerances | None = None,
                 parameters: Mapping[str, float] | None = None) -> VolumeReport:
    """Shell quadrature 2*pi*Int x*f(x) dx about the perpendicular axis.

    This is the volume of the region between the curve and its abscissa
    axis.  Requires f >= 0 and an interval within [0, inf).
    """
    tol = tol or Tolerances()
    if interval.lo < 0.0:
        raise ValueError("shell quadrature requires an interval within [0, inf)")
    fn, _ = _curve_function(curve, parameters)
    _check_nonnegative(fn, interval)
    quad = integrate(lambda x: x * fn(x), interval.lo, interval.hi, tol)
    return VolumeReport(
        value=_clamp(2.0 * math.pi * quad.value, 2.0 * math.pi * quad.error_estimate),
        method="shell",
        error_estimate=2.0 * math.pi * quad.error_estimate,
        sign_factor=1,
        warnings=tuple(_quad_warnings(quad)),
    )


def disk_volume_y_axis(curve: Expression, role: str, c: float, d: float,
                       tol: Tolerances | None = None,
                       parameters: Mapping[str, float] | None = None,
                       x_interval: Interval | None = None) -> VolumeReport:
    """Disk quadrature pi*Int g(y)^2 dy about the y-axis.

    With ``role="x-of-y"`` the curve already gives the disk radius.  With
    ``role="y-of-x"`` the curve is inverted numerically: it must be
    strictly monotone on ``x_interval``, and each quadrature node solves
    f(x) = y with the interval as bracket.
    """
    tol = tol or Tolerances()
    if not c < d:
        raise ValueError("disk quadrature requires c < d")
    if role == ROLE_X_OF_Y:
        fn, _ = _curve_function(curve, parameters)
        quad = integrate(lambda y: fn(y) ** 2, c, d, tol)
    elif role == ROLE_Y_OF_X:
        if x_interval is None:
            raise ValueError("role 'y-of-x' requires the curve's x interval")
        if critical_points(curve, x_interval, tol, parameters):
            raise NotInvertibleError(
                "curve is not strictly monotone on its interval")
        fn, var = _curve_function(curve, parameters)
        derivative = bind(differentiate(curve, var), var, parameters)
        g = _inverse_on_piece(fn, derivative, x_interval, tol)
        quad = integrate(lambda y: g(y) ** 2, c, d, tol)
    else:
        raise ValueError(f"unknown curve role {role!r}")
    err = math.pi * quad.error_estimate
    return VolumeReport(
        value=_clamp(math.pi * quad.value, err),
        method="disk",
        error_estimate=err,
        sign_factor=1,
        warnings=tuple(_quad_warnings(quad)),
    )


def disk_volume_x_axis(curve: Expression, role: str, a: float, b: float,
                       tol: Tolerances | None = None,
                       parameters: Mapping[str, float] | None = None,
                       y_interval: Interval | None = None) -> VolumeReport:
    """Disk quadrature pi*Int f(x)^2 dx about the x-axis (mirror of
    :func:`disk_volume_y_axis`)."""
    tol = tol or Tolerances()
    if not a < b:
        raise ValueError("disk quadrature requires a < b")
    if role == ROLE_Y_OF_X:
        fn, _ = _curve_function(curve, parameters)
        quad = integrate(lambda x: fn(x) ** 2, a, b, tol)
    elif role == ROLE_X_OF_Y:
        if y_interval is None:
            raise ValueError("role 'x-of-y' requires the curve's y interval")
        if critical_points(curve, y_interval, tol, parameters):
            raise NotInvertibleError(
                "curve is not strictly monotone on its interval")
        fn, var = _curve_function(curve, parameters)
        derivative = bind(differentiate(curve, var), var, parameters)
        f = _inverse_on_piece(fn, derivative, y_interval, tol)
        quad = integrate(lambda x: f(x) ** 2, a, b, tol)
    else:
        raise ValueError(f"unknown curve role {role!r}")
    err = math.pi * quad.error_estimate
    return VolumeReport(
        value=_clamp(math.pi * quad.value, err),
        method="disk",
        error_estimate=err,
        sign_factor=1,
        warnings=tuple(_quad_warnings(quad)),
    )


# ---------------------------------------------------------------------------
# Boundary-term formulas

def _require_monotone(curve: Expression, interval: Interval, tol: Tolerances,
                      parameters: Mapping[str, float] | None) -> None:
    if critical_points(curve, interval, tol, parameters):
        raise NotMonotoneError("curve has interior extrema on the interval")


def theorem1_y(curve: Expression, interval: Interval,
               tol: Tolerances | None = None,
               parameters: Mapping[str, float] | None = None) -> VolumeReport:
    """Boundary-term formula for a strictly monotone curve y = f(x)
    rotated about the y-axis.

        sgn(f(b)-f(a)) * {pi*[b^2 f(b) - a^2 f(a)] - 2*pi*Int x*f(x) dx}
    """
    tol = tol or Tolerances()
    if interval.lo < 0.0:
        raise ValueError("the boundary-term formula requires an interval "
                         "within [0, inf)")
    _require_monotone(curve, interval, tol, parameters)
    fn, _ = _curve_function(curve, parameters)
    f_lo, f_hi = fn(interval.lo), fn(interval.hi)
    if f_lo == f_hi:
        raise NotMonotoneError("endpoint values are equal")
    if min(f_lo, f_hi) < _NONNEG_FLOOR:
        raise NegativeCurveError(
            interval.lo if f_lo < f_hi else interval.hi, min(f_lo, f_hi))
    value, err, sign, quad = _parts_value(fn, interval.lo, interval.hi, tol)
    return VolumeReport(
        value=value,
        method="theorem1",
        error_estimate=err,
        sign_factor=sign,
        warnings=tuple(_quad_warnings(quad)),
    )


def theorem1_x(curve: Expression, interval: Interval,
               tol: Tolerances | None = None,
               parameters: Mapping[str, float] | None = None) -> VolumeReport:
    """Mirror of :func:`theorem1_y`: strictly monotone x = g(y) rotated
    about the x-axis.

        sgn(g(d)-g(c)) * {pi*[d^2 g(d) - c^2 g(c)] - 2*pi*Int y*g(y) dy}
    """
    report = theorem1_y(curve, interval, tol, parameters)
    return VolumeReport(
        value=report.value,
        method="theorem1",
        error_estimate=report.error_estimate,
        sign_factor=report.sign_factor,
        warnings=report.warnings,
    )


def theorem2_y(curve: Expression, interval: Interval,
               tol: Tolerances | None = None,
               parameters: Mapping[str, float] | None = None) -> VolumeReport:
    """Piecewise-monotone boundary-term formula about the y-axis.

    Validates the revolution hypotheses first (violations raise
    ``HypothesisViolationError`` carrying the report).  On strictly
    monotone input this degenerates to :func:`theorem1_y` exactly: both
    run the same code path, so the results agree bit for bit.
    """
    tol = tol or Tolerances()
    if interval.lo < 0.0:
        raise ValueError("the boundary-term formula requires an interval "
                         "within [0, inf)")
    report = validate_revolution_hypotheses(curve, interval, tol, parameters)
    if not report.satisfied:
        raise HypothesisViolationError(report)
    part = partition(curve, interval, tol, parameters)
    fn, _ = _curve_function(curve, parameters)
    value, err, sign, quad = _parts_value(fn, interval.lo, interval.hi, tol)
    return VolumeReport(
        value=value,
        method="theorem2",
        error_estimate=err,
        sign_factor=sign,
        partition=part,
        warnings=tuple(_quad_warnings(quad)),
    )


def theorem3_x(curve: Expression, interval: Interval,
               tol: Tolerances | None = None,
               parameters: Mapping[str, float] | None = None) -> VolumeReport:
    """Mirror of :func:`theorem2_y`: piecewise-monotone x = g(y) rotated
    about the x-axis."""
    report = theorem2_y(curve, interval, tol, parameters)
    return VolumeReport(
        value=report.value,
        method="theorem3",
        error_estimate=report.error_estimate,
        sign_factor=report.sign_factor,
        partition=report.partition,
        warnings=report.warnings,
    )


def piecewise_signed_sum(curve: Expression, p: MonotonePartition,
                         tol: Tolerances | None = None,
                         parameters: Mapping[str, float] | None = None
                         ) -> VolumeReport:
    """Alternating sum of per-piece boundary-term volumes.

    Piece i contributes (-1)^i times its own (nonnegative) volume; the
    telescoping of the boundary terms makes the total equal the
    single-formula value, which is exactly what cross-validation checks.
    """
    tol = tol or Tolerances()
    span = Interval(p.breakpoints[0], p.breakpoints[-1])
    report = validate_revolution_hypotheses(curve, span, tol, parameters)
    if not report.satisfied:
        raise HypothesisViolationError(report)
    fn, _ = _curve_function(curve, parameters)

    total = 0.0
    err = 0.0
    quads = []
    for i, (piece, _direction) in enumerate(p.pieces()):
        piece_value, piece_err, _sign, quad = _parts_value(
            fn, piece.lo, piece.hi, tol)
        total += piece_value if i % 2 == 0 else -piece_value
        err += piece_err
        quads.append(quad)

    f_lo, f_hi = fn(span.lo), fn(span.hi)
    return VolumeReport(
        value=_clamp(total, err),
        method="piecewise",
        error_estimate=err,
        sign_factor=1 if f_hi > f_lo else -1,
        partition=p,
        warnings=tuple(_quad_warnings(*quads)),
    )


# ---------------------------------------------------------------------------
# Cross-validation

def _disk_pieces_value(fn: Callable[[float], float],
                       derivative: Callable[[float], float],
                       p: MonotonePartition, tol: Tolerances
                       ) -> tuple[float, float, list[QuadratureResult]]:
    """Alternating sum of per-piece disk volumes via numeric inversion.

    This is the fully independent route: a different integrand, taken in
    the transverse variable, with the curve inverted per node.
    """
    total = 0.0
    err = 0.0
    quads = []
    for i, (piece, _direction) in enumerate(p.pieces()):
        y0, y1 = fn(piece.lo), fn(piece.hi)
        lo_y, hi_y = min(y0, y1), max(y0, y1)
        g = _inverse_on_piece(fn, derivative, piece, tol)
        quad = integrate(lambda y, g=g: g(y) ** 2, lo_y, hi_y, tol)
        piece_value = math.pi * quad.value
        total += piece_value if i % 2 == 0 else -piece_value
        err += math.pi * quad.error_estimate
        quads.append(quad)
    return total, err, quads


def _pairwise_warnings(rows: list[tuple[str, float, float]],
                       tol: Tolerances) -> list[str]:
    warnings = []
    scale = max(abs(value) for _, value, _ in rows)
    floor = max(tol.abs_tol, tol.rel_tol * scale)
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            name_i, value_i, err_i = rows[i]
            name_j, value_j, err_j = rows[j]
            allowed = max(err_i + err_j, floor)
            delta = abs(value_i - value_j)
            if delta > allowed:
                warnings.append(
                    f"methods {name_i} and {name_j} disagree: "
                    f"|delta| = {delta:.3e} > allowed {allowed:.3e}")
    return warnings


def _cross_theorem_frame(problem: VolumeProblem) -> VolumeReport:
    """Cross-validate a problem whose boundary-term formula applies
    directly (y-of-x about the y-axis, or x-of-y about the x-axis)."""
    tol = problem.tol
    interval = problem.interval
    primary_tag = "theorem2" if problem.axis == AXIS_Y else "theorem3"
    if interval.lo < 0.0:
        raise ValueError("the boundary-term formulas require an interval "
                         "within [0, inf)")

    report = validate_revolution_hypotheses(
        problem.curve, interval, tol, problem.parameters)
    if not report.satisfied:
        raise HypothesisViolationError(report)
    part = partition(problem.curve, interval, tol, problem.parameters)
    fn, var = _curve_function(problem.curve, problem.parameters)
    derivative = bind(differentiate(problem.curve, var), var, problem.parameters)

    value, err, sign, quad = _parts_value(fn, interval.lo, interval.hi, tol)
    rows: list[tuple[str, float, float]] = [(primary_tag, value, err)]
    quads = [quad]

    if part.interior_count == 0:
        # the formulas coincide on monotone input; record the tier anyway
        rows.append(("theorem1", value, err))

    piecewise = piecewise_signed_sum(problem.curve, part, tol, problem.parameters)
    rows.append(("piecewise", piecewise.value, piecewise.error_estimate))

    disk_value, disk_err, disk_quads = _disk_pieces_value(fn, derivative, part, tol)
    rows.append(("disk", _clamp(disk_value, disk_err), disk_err))
    quads.extend(disk_quads)

    # complement through the bounding cylinders: the region between the
    # curve and its own axis plus this region fill sgn-corrected cylinders
    shell = shell_volume(problem.curve, interval, tol, problem.parameters)
    h_lo, h_hi = fn(interval.lo), fn(interval.hi)
    boundary = math.pi * (interval.hi ** 2 * h_hi - interval.lo ** 2 * h_lo)
    complement = sign * (boundary - shell.value)
    rows.append(("shell-complement",
                 _clamp(complement, shell.error_estimate),
                 shell.error_estimate))

    warnings = _quad_warnings(*quads) + list(piecewise.warnings) + \
        list(shell.warnings) + _pairwise_warnings(rows, tol)
    cross = tuple((name, v, abs(v - value)) for name, v, _ in rows[1:])
    return VolumeReport(
        value=value,
        method=primary_tag,
        error_estimate=err,
        sign_factor=sign,
        partition=part,
        cross_checks=cross,
        warnings=tuple(dict.fromkeys(warnings)),
    )


def _cross_disk_frame(problem: VolumeProblem) -> VolumeReport:
    """Cross-validate a problem whose direct route is the disk quadrature
    (x-of-y about the y-axis, or y-of-x about the x-axis).

    No boundary-term formula applies to this frame directly; when the
    curve is strictly monotone the formula is evaluated on the numerically
    inverted curve instead, as the independent check.
    """
    tol = problem.tol
    interval = problem.interval
    fn, var = _curve_function(problem.curve, problem.parameters)
    derivative = bind(differentiate(problem.curve, var), var, problem.parameters)

    quad = integrate(lambda t: fn(t) ** 2, interval.lo, interval.hi, tol)
    value = _clamp(math.pi * quad.value, math.pi * quad.error_estimate)
    err = math.pi * quad.error_estimate
    rows: list[tuple[str, float, float]] = [("disk", value, err)]
    quads = [quad]
    warnings: list[str] = []

    h_lo, h_hi = fn(interval.lo), fn(interval.hi)
    sign = 1 if h_hi > h_lo else -1
    mirror_tag = "theorem1" if problem.axis == AXIS_Y else "theorem3"

    if h_lo == h_hi or critical_points(problem.curve, interval, tol,
                                       problem.parameters):
        warnings.append(
            "curve is not strictly monotone: no independent formula route")
    else:
        # boundary-term formula on the inverse curve, one inversion per node
        t_lo, t_hi = min(h_lo, h_hi), max(h_lo, h_hi)
        inv_lo = interval.lo if h_lo < h_hi else interval.hi
        inv_hi = interval.hi if h_lo < h_hi else interval.lo
        inverse = _inverse_on_piece(fn, derivative, interval, tol)
        inv_quad = integrate(lambda t: t * inverse(t), t_lo, t_hi, tol)
        boundary = math.pi * (t_hi ** 2 * inv_hi - t_lo ** 2 * inv_lo)
        inv_sign = 1 if inv_hi > inv_lo else -1
        inv_err = 2.0 * math.pi * inv_quad.error_estimate
        inv_value = _clamp(
            inv_sign * (boundary - 2.0 * math.pi * inv_quad.value), inv_err)
        rows.append((mirror_tag, inv_value, inv_err))
        quads.append(inv_quad)

    warnings = _quad_warnings(*quads) + warnings + _pairwise_warnings(rows, tol)
    cross = tuple((name, v, abs(v - value)) for name, v, _ in rows[1:])
    return VolumeReport(
        value=value,
        method="disk",
        error_estimate=err,
        sign_factor=sign if h_lo != h_hi else 1,
        cross_checks=cross,
        warnings=tuple(dict.fromkeys(warnings)),
    )


def cross_validate(problem: VolumeProblem) -> VolumeReport:
    """Run every method applicable to ``problem`` and compare them.

    The primary value is the one with the fewest quadrature layers (the
    boundary-term formula where it applies directly, otherwise the direct
    disk quadrature); every other method lands in ``cross_checks`` with
    its absolute deviation, and any pair disagreeing beyond their combined
    error budget adds a warning instead of raising.
    """
    if problem.method != "all":
        raise ValueError("cross_validate requires method='all'")
    direct = (problem.axis == AXIS_Y and problem.curve_role == ROLE_Y_OF_X) or \
             (problem.axis == AXIS_X and problem.curve_role == ROLE_X_OF_Y)
    if direct:
        return _cross_theorem_frame(problem)
    return _cross_disk_frame(problem)


# ---------------------------------------------------------------------------
# Problem dispatch

def solve(problem: VolumeProblem) -> VolumeReport:
    """Dispatch a :class:`VolumeProblem` to the requested method."""
    method = problem.method
    axis, role = problem.axis, problem.curve_role
    curve, interval = problem.curve, problem.interval
    tol, params = problem.tol, problem.parameters

    if method == "all":
        return cross_validate(problem)
    if method == "shell":
        if (axis == AXIS_Y) != (role == ROLE_Y_OF_X):
            raise ValueError("shell needs the curve expressed along the "
                             "perpendicular axis")
        return shell_volume(curve, interval, tol, params)
    if method == "disk":
        fn, _ = _curve_function(curve, params)
        lo_v, hi_v = fn(interval.lo), fn(interval.hi)
        c, d = min(lo_v, hi_v), max(lo_v, hi_v)
        if axis == AXIS_Y:
            if role == ROLE_X_OF_Y:
                return disk_volume_y_axis(curve, role, interval.lo, interval.hi,
                                          tol, params)
            return disk_volume_y_axis(curve, role, c, d, tol, params,
                                      x_interval=interval)
        if role == ROLE_Y_OF_X:
            return disk_volume_x_axis(curve, role, interval.lo, interval.hi,
                                      tol, params)
        return disk_volume_x_axis(curve, role, c, d, tol, params,
                                  y_interval=interval)
    if method == "theorem1":
        if axis == AXIS_Y and role == ROLE_Y_OF_X:
            return theorem1_y(curve, interval, tol, params)
        if axis == AXIS_X and role == ROLE_X_OF_Y:
            return theorem1_x(curve, interval, tol, params)
        raise ValueError("theorem1 applies to y-of-x curves about the y-axis "
                         "or x-of-y curves about the x-axis")
    if method == "theorem2":
        if axis != AXIS_Y or role != ROLE_Y_OF_X:
            raise ValueError("theorem2 applies to y-of-x curves about the y-axis")
        return theorem2_y(curve, interval, tol, params)
    if method == "theorem3":
        if axis != AXIS_X or role != ROLE_X_OF_Y:
            raise ValueError("theorem3 applies to x-of-y curves about the x-axis")
        return theorem3_x(curve, interval, tol, params)
    if method == "piecewise":
        if (axis == AXIS_Y) != (role == ROLE_Y_OF_X):
            raise ValueError("piecewise needs the curve expressed along the "
                             "perpendicular axis")
        part = partition(curve, interval, tol, params)
        return piecewise_signed_sum(curve, part, tol, params)
    raise ValueError(f"unknown method {method!r}")
