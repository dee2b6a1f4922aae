"""Closed-form self-supporting string-loop curve.

A circulating string loop held up by tangential air drag takes a planar
shape with two analytic halves

    z(x) = (x/2) * [ (x/x_h)^(+R) / (1+R) - (x/x_h)^(-R) / (1-R) ]   (upper)
    z(x) = (x/2) * [ (x/x_h)^(-R) / (1-R) - (x/x_h)^(+R) / (1+R) ]   (lower)

where R = mu*g/f is the gravity-to-drag ratio and x_h is the horizontal
distance from the curve origin to the half's horizontal-tangent extremum.
A finite loop exists only for R < 1.  Signs are kept exactly as written:
the "upper" half dips to z = -R*x_h/(1-R^2) at its extremum and the
"lower" half rises to +R*x_h/(1-R^2); renderers may mirror axes but the
model never flips signs.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from scipy.integrate import quad

from .errors import DomainError, ModelInvalid

__all__ = [
    "PhysicalParams",
    "LoopParams",
    "CurvePoint",
    "PlanarCurve",
    "eval_half",
    "eval_half_slope",
    "half_arc_length_to",
    "sample_loop",
    "loop_arc_length",
    "scale_to_length",
    "params_from_physics",
    "effective_tension",
]

# Smallest |x| used inside the power terms; x == 0 itself short-circuits to z = 0.
_X_CLAMP = 1e-15


@dataclass(frozen=True)
class PhysicalParams:
    """String properties: mass density mu [kg/m], drag coefficient f [N/m]
    (force per unit length opposing tangential motion at operating speed),
    gravity g [m/s^2], circulation speed v [m/s]."""

    mu: float
    f: float
    g: float = 9.81
    v: float = 0.0

    def __post_init__(self):
        if not (self.mu > 0 and np.isfinite(self.mu)):
            raise ModelInvalid(f"mu must be positive and finite, got {self.mu}")
        if not (self.f > 0 and np.isfinite(self.f)):
            raise ModelInvalid(f"f must be positive and finite, got {self.f}")
        if not (self.g > 0 and np.isfinite(self.g)):
            raise ModelInvalid(f"g must be positive and finite, got {self.g}")
        if not (self.v >= 0 and np.isfinite(self.v)):
            raise ModelInvalid(f"v must be nonnegative and finite, got {self.v}")


@dataclass(frozen=True)
class LoopParams:
    """Shape triple (r, x_plus, x_minus); r is dimensionless, extents in meters."""

    r: float
    x_plus: float
    x_minus: float

    def __post_init__(self):
        if not np.isfinite(self.r) or not (0.0 < self.r < 1.0):
            raise ModelInvalid(
                f"loop requires 0 < R < 1 (drag must exceed gravity), got R={self.r}"
            )
        if not (self.x_plus > 0 and np.isfinite(self.x_plus)):
            raise ModelInvalid(f"x_plus must be positive, got {self.x_plus}")
        if not (self.x_minus > 0 and np.isfinite(self.x_minus)):
            raise ModelInvalid(f"x_minus must be positive, got {self.x_minus}")

    def extent(self, half: str) -> float:
        if half == "upper":
            return self.x_plus
        if half == "lower":
            return self.x_minus
        raise ValueError(f"half must be 'upper' or 'lower', got {half!r}")

    def scaled(self, factor: float) -> "LoopParams":
        return LoopParams(self.r, self.x_plus * factor, self.x_minus * factor)


@dataclass(frozen=True)
class CurvePoint:
    """One sample of a planar curve: position, tangent angle, arc length."""

    x: float
    z: float
    theta: float
    s: float

    @property
    def tangent(self) -> np.ndarray:
        return np.array([np.cos(self.theta), np.sin(self.theta)])

    @property
    def normal(self) -> np.ndarray:
        return np.array([-np.sin(self.theta), np.cos(self.theta)])


@dataclass
class PlanarCurve:
    """Ordered polyline samples (x, z, theta, s) of a curve in its working plane."""

    x: np.ndarray
    z: np.ndarray
    theta: np.ndarray
    s: np.ndarray
    closed: bool = False
    tension: np.ndarray | None = field(default=None)

    def __post_init__(self):
        self.x = np.asarray(self.x, float)
        self.z = np.asarray(self.z, float)
        self.theta = np.asarray(self.theta, float)
        self.s = np.asarray(self.s, float)
        n = len(self.x)
        if not (len(self.z) == len(self.theta) == len(self.s) == n):
            raise ValueError("x, z, theta, s must have equal length")
        if n >= 2:
            dx = np.diff(self.x)
            dz = np.diff(self.z)
            if np.any(np.hypot(dx, dz) <= 0.0):
                raise ValueError("consecutive curve points must have positive spacing")
            if np.any(np.diff(self.s) < 0.0):
                raise ValueError("arc length must be nondecreasing")
        if self.closed and n >= 2:
            gap = np.hypot(self.x[0] - self.x[-1], self.z[0] - self.z[-1])
            spacing = np.median(np.hypot(np.diff(self.x), np.diff(self.z)))
            if gap > 2.0 * spacing:
                raise ValueError("closed curve must end within spacing of its start")

    def __len__(self) -> int:
        return len(self.x)

    def point(self, i: int) -> CurvePoint:
        return CurvePoint(self.x[i], self.z[i], self.theta[i], self.s[i])

    def points(self) -> list[CurvePoint]:
        return [self.point(i) for i in range(len(self))]

    def vertices(self) -> np.ndarray:
        """(n, 2) array of (x, z) positions."""
        return np.stack([self.x, self.z], axis=1)

    def to_csv(self) -> str:
        cols = ["x", "z", "theta", "s"]
        data = [self.x, self.z, self.theta, self.s]
        if self.tension is not None:
            cols.append("tension")
            data.append(self.tension)
        buf = io.StringIO()
        buf.write(",".join(cols) + "\n")
        for row in zip(*data):
            buf.write(",".join(f"{v:.17g}" for v in row) + "\n")
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str, closed: bool = False) -> "PlanarCurve":
        lines = [ln for ln in text.strip().splitlines() if ln.strip()]
        header = [h.strip() for h in lines[0].split(",")]
        rows = [[float(v) for v in ln.split(",")] for ln in lines[1:]]
        arr = np.asarray(rows, float)
        col = {name: arr[:, i] for i, name in enumerate(header)}
        tension = col.get("tension")
        return cls(col["x"], col["z"], col["theta"], col["s"], closed=closed,
                   tension=tension)


def _half_sign(half: str) -> float:
    if half == "upper":
        return 1.0
    if half == "lower":
        return -1.0
    raise ValueError(f"half must be 'upper' or 'lower', got {half!r}")


def eval_half(params: LoopParams, half: str, x):
    """Height z(x) of one half of the loop, signs taken literally.

    x may be a scalar or array; the domain is [0, x_half].  z(0) is exactly 0.
    """
    sign = _half_sign(half)
    xh = params.extent(half)
    r = params.r
    xa = np.asarray(x, float)
    if np.any(xa < 0.0) or np.any(xa > xh * (1.0 + 1e-12)):
        raise DomainError(f"x outside [0, {xh}] for {half} half")
    xs = np.where(xa == 0.0, _X_CLAMP, np.clip(np.abs(xa), _X_CLAMP, None))
    ratio = xs / xh
    z = 0.5 * (xs / (1.0 + r) * ratio**r - xs / (1.0 - r) * ratio**(-r))
    z = sign * z
    z = np.where(xa == 0.0, 0.0, z)
    return float(z) if np.isscalar(x) else z


def eval_half_slope(params: LoopParams, half: str, x):
    """Analytic dz/dx of a half: +-0.5*((x/x_h)^R - (x/x_h)^-R).

    Unbounded as x -> 0 (vertical tangent), zero at x = x_half.
    """
    sign = _half_sign(half)
    xh = params.extent(half)
    r = params.r
    xa = np.asarray(x, float)
    if np.any(xa < 0.0) or np.any(xa > xh * (1.0 + 1e-12)):
        raise DomainError(f"x outside [0, {xh}] for {half} half")
    ratio = np.clip(np.abs(xa), _X_CLAMP, None) / xh
    slope = sign * 0.5 * (ratio**r - ratio**(-r))
    return float(slope) if np.isscalar(x) else slope


def half_arc_length_to(params: LoopParams, half: str, x) -> float:
    """Arc length of a half from the origin to x, by adaptive quadrature
    with the endpoint-clustering substitution x = x_h*sin^2(t)."""
    xh = params.extent(half)
    r = params.r
    xa = float(x)
    if not (0.0 <= xa <= xh * (1.0 + 1e-12)):
        raise DomainError(f"x outside [0, {xh}] for {half} half")
    if xa == 0.0:
        return 0.0
    t_end = np.arcsin(min(1.0, np.sqrt(xa / xh)))

    def integrand(t):
        xt = xh * np.sin(t) ** 2
        ratio = max(xt, _X_CLAMP) / xh
        ds_dx = 0.5 * (ratio**r + ratio**(-r))  # == sqrt(1 + z'^2), exactly
        return ds_dx * xh * np.sin(2.0 * t)

    val, _ = quad(integrand, 0.0, t_end, epsabs=1e-13, epsrel=1e-11, limit=200)
    return val


def sample_loop(params: LoopParams, n: int) -> PlanarCurve:
    """Closed sampling of the loop: upper half out to x_plus and back, then
    lower half out to x_minus and back, ending at the origin.

    Exactly n points, first == last, extremum points hit exactly.  Nodes
    cluster near x = 0 (and the extrema) through the sin^2 spacing because
    the tangent is vertical at the origin.
    """
    if n < 16:
        raise ValueError(f"need n >= 16 samples, got {n}")
    quarter, rem = divmod(n - 1, 4)
    counts = [quarter + (1 if i < rem else 0) for i in range(4)]

    def half_x(count, xh, outward):
        t = np.linspace(0.0, np.pi / 2.0, count + 1)
        xs = xh * np.sin(t) ** 2
        xs[0], xs[-1] = 0.0, xh  # exact endpoints
        if outward:
            return xs[:count + 1]
        return xs[::-1]

    xp, xm = params.x_plus, params.x_minus
    x_segs = [
        half_x(counts[0], xp, True),            # origin -> x_plus, inclusive
        half_x(counts[1], xp, False)[1:],       # back, excl x_plus, incl origin
        half_x(counts[2], xm, True)[1:],        # out, excl origin, incl x_minus
        half_x(counts[3], xm, False)[1:],       # back, excl x_minus, incl origin
    ]
    halves = ["upper", "upper", "lower", "lower"]
    xs = np.concatenate(x_segs)
    zs = np.concatenate([eval_half(params, h, seg) for h, seg in zip(halves, x_segs)])
    assert len(xs) == n

    dx = np.gradient(xs)
    dz = np.gradient(zs)
    theta = np.arctan2(dz, dx)
    theta[theta <= -np.pi] = np.pi
    seg = np.hypot(np.diff(xs), np.diff(zs))
    s = np.concatenate([[0.0], np.cumsum(seg)])
    return PlanarCurve(xs, zs, theta, s, closed=True)


@lru_cache(maxsize=256)
def _unit_loop_length(r: float, ratio: float) -> float:
    unit = LoopParams(r, ratio, 1.0)
    return _loop_arc_length_impl(unit)


def _loop_arc_length_impl(params: LoopParams) -> float:
    up = half_arc_length_to(params, "upper", params.x_plus)
    lo = half_arc_length_to(params, "lower", params.x_minus)
    return 2.0 * (up + lo)


def loop_arc_length(params: LoopParams) -> float:
    """Total length of the closed sampling path (each half traversed out and
    back), converged to better than 1e-9 relative."""
    return _loop_arc_length_impl(params)


def scale_to_length(r: float, ratio: float, l_target: float) -> LoopParams:
    """Loop of given shape family (r, x_plus/x_minus ratio) whose closed
    sampling path has total length l_target.

    The curve family is degree-1 homogeneous in (x, x_plus, x_minus), so a
    single scale factor l_target / L_unit suffices.
    """
    if not (0.0 < r < 1.0):
        raise ModelInvalid(f"loop requires 0 < R < 1, got R={r}")
    if ratio <= 0:
        raise ModelInvalid(f"x_plus/x_minus ratio must be positive, got {ratio}")
    if l_target <= 0:
        raise ModelInvalid(f"target length must be positive, got {l_target}")
    scale = l_target / _unit_loop_length(r, ratio)
    return LoopParams(r, ratio * scale, scale)


def params_from_physics(phys: PhysicalParams) -> float:
    """Gravity-to-drag ratio R = mu*g/f; the loop exists only for R < 1."""
    r = phys.mu * phys.g / phys.f
    if r >= 1.0:
        raise ModelInvalid(
            f"R = mu*g/f = {r:.6g} >= 1: drag cannot support the string weight"
        )
    return r


def effective_tension(phys: PhysicalParams, tension: float) -> float:
    """Effective tension T0 = T - mu*v^2 governing the static shape."""
    return tension - phys.mu * phys.v**2
