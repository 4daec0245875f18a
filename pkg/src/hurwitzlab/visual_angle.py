"""Visual angles from exterior points and exterior-plane integrals.

The visual angle omega(P) of a convex body from an exterior point P is the
angle between the two tangent lines through P.  Integrals of kernels
f(omega) over the whole exterior are evaluated two independent ways:

* tangent coordinates (primary): exterior points are parametrized by the
  normal angle phi1 of one support line and the gap delta in (0, pi) to
  the other, with area element dP = (t1*t2/sin(omega)) dphi1 ddelta where
  t_i are the tangent-segment lengths.  The domain is the finite rectangle
  [0,2*pi) x (0,pi) and the integrand stays bounded because every admitted
  kernel vanishes like omega^3 while the area element grows like
  omega^-3 as delta -> pi.

* polar grid (oracle): direct 2D quadrature about the Steiner point out to
  a cutoff radius, calling the tangent root finder at every node, plus a
  fitted 1/r^2 tail for the remainder.

The convention omega = pi - delta is pinned by the circle: a unit circle
seen from distance d subtends omega = 2*arcsin(1/d).

Kernels are stored exactly as alpha0*omega + sum_k alpha_k sin(k*omega);
that makes the omega -> 0 behaviour checkable by series (the coefficient
of omega must cancel) and lets small-omega evaluation switch to the
Maclaurin series, avoiding the cancellation that direct evaluation of
terms like omega - sin(omega) suffers near zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .bodies import (
    TrigSupport,
    _eval,
    _require_validated,
    boundary_point,
    recenter_to_steiner,
)
from .errors import (
    BadOrder,
    BoundaryCollar,
    DegenerateGap,
    InteriorPoint,
    NonIntegrableKernel,
    RootCountAnomaly,
)
from .quadrature import gauss_panels

TWO_PI = 2.0 * math.pi
PI = math.pi

_SERIES_CUTOFF = 0.25
_SERIES_TERMS = 16


@dataclass(frozen=True)
class Kernel:
    """Exterior kernel f(omega) = omega_coeff*omega + sum alpha_k sin(k omega)."""

    name: str
    omega_coeff: float
    sin_coeffs: tuple[tuple[int, float], ...]

    @property
    def linear_term(self) -> float:
        """Maclaurin coefficient of omega; must vanish for integrability."""
        return self.omega_coeff + math.fsum(k * a for k, a in self.sin_coeffs)

    @property
    def cubic_term(self) -> float:
        return math.fsum(-a * k**3 / 6.0 for k, a in self.sin_coeffs)

    def check_integrable(self) -> None:
        scale = abs(self.omega_coeff) + math.fsum(abs(k * a) for k, a in self.sin_coeffs)
        if abs(self.linear_term) > 1e-12 * max(scale, 1.0):
            raise NonIntegrableKernel(
                f"kernel {self.name!r} behaves like {self.linear_term:.3g}*omega near 0; "
                "exterior integrals need O(omega^3)"
            )

    @cached_property
    def _series(self) -> np.ndarray:
        # Maclaurin coefficients of omega^(2j+1), j = 0.._SERIES_TERMS-1.
        coeffs = np.zeros(_SERIES_TERMS)
        coeffs[0] = self.omega_coeff
        for k, a in self.sin_coeffs:
            term = float(k)
            for j in range(_SERIES_TERMS):
                coeffs[j] += a * term
                term *= -(k * k) / ((2 * j + 2) * (2 * j + 3))
        return coeffs

    def __call__(self, omega):
        om = np.asarray(omega, dtype=float)
        out = self.omega_coeff * om
        for k, a in self.sin_coeffs:
            out = out + a * np.sin(k * om)
        small = np.abs(om) < _SERIES_CUTOFF
        if np.any(small):
            om_s = np.where(small, om, 0.0)
            acc = np.zeros_like(om_s)
            sq = om_s * om_s
            for c in self._series[::-1]:
                acc = acc * sq + c
            out = np.where(small, acc * om_s, out)
        if np.ndim(omega) == 0:
            return float(out)
        return out


def _merge_sin(terms: list[tuple[int, float]]) -> tuple[tuple[int, float], ...]:
    acc: dict[int, float] = {}
    for k, a in terms:
        acc[k] = acc.get(k, 0.0) + a
    return tuple(sorted((k, a) for k, a in acc.items() if a != 0.0))


def crofton_kernel() -> Kernel:
    """omega - sin(omega); integrates to L^2/2 - pi*F over the exterior."""
    return Kernel("crofton", 1.0, ((1, -1.0),))


def sin_cubed_kernel() -> Kernel:
    """sin^3(omega) = (3 sin(omega) - sin(3 omega)) / 4."""
    return Kernel("sin_cubed", 0.0, ((1, 0.75), (3, -0.25)))


def moment_kernel(n: int) -> Kernel:
    """Kernel whose exterior integral is L^2 + (-1)^n pi^2 (n^2-1) c_n^2."""
    if not isinstance(n, (int, np.integer)) or n < 2:
        raise BadOrder(f"moment order must be an integer >= 2, got {n!r}")
    n = int(n)
    terms = [(1, -2.0), (n - 1, (n + 1) / (n - 1)), (n + 1, -(n - 1) / (n + 1))]
    return Kernel(f"moment_{n}", 0.0, _merge_sin(terms))


def visual_deficit_kernel() -> Kernel:
    """omega - sin(omega) - (2/3) sin^3(omega), the general deficit kernel."""
    return Kernel("visual_deficit", 1.0, ((1, -1.5), (3, 1.0 / 6.0)))


def visual_deficit_cw_kernel() -> Kernel:
    """omega - 2 sin(omega) + sin(2 omega) - (1/4) sin(4 omega) - sin^3(omega).

    Constant-width deficit kernel; equals crofton + (1/2)*moment_3
    - (3/4)*moment_2 pointwise.
    """
    return Kernel(
        "visual_deficit_cw",
        1.0,
        ((1, -2.75), (2, 1.0), (3, 0.25), (4, -0.25)),
    )


KERNELS = {
    "crofton": crofton_kernel,
    "sin_cubed": sin_cubed_kernel,
    "visual_deficit": visual_deficit_kernel,
    "visual_deficit_cw": visual_deficit_cw_kernel,
}


@dataclass(frozen=True)
class TangentPair:
    """The two support lines through an exterior point.

    phi1, phi2 are normal angles in [0, 2*pi); the counterclockwise gap
    from phi1 to phi2 is delta in (0, pi) and the visual angle is
    omega = pi - delta.  t1, t2 are the tangent-segment lengths from the
    point to the two tangency points.
    """

    phi1: float
    phi2: float
    omega: float
    t1: float
    t2: float

    @property
    def delta(self) -> float:
        return (self.phi2 - self.phi1) % TWO_PI


@dataclass(frozen=True)
class ExteriorConfig:
    """Controls for exterior integrals.

    nodes_phi: periodic trapezoid nodes in the angular direction.
    nodes_delta: total Gauss points along the gap direction (16 per panel).
    delta_min: collar excluded near the boundary (delta -> 0); its dropped
        mass is bounded and reported inside the error bar.
    r_max, radial_nodes apply to the polar oracle only.
    """

    nodes_phi: int = 256
    nodes_delta: int = 256
    delta_min: float = 1e-4
    method: str = "tangent_coords"
    r_max: float | None = None
    radial_nodes: int = 96

    def __post_init__(self):
        if min(self.nodes_phi, self.nodes_delta, self.radial_nodes) < 16:
            raise ValueError("node counts must be >= 16")
        if not (0.0 < self.delta_min < PI / 64.0):
            raise ValueError(f"delta_min must lie in (0, pi/64), got {self.delta_min}")
        if self.method not in ("tangent_coords", "polar_grid"):
            raise ValueError(f"unknown method {self.method!r}")


@dataclass(frozen=True)
class IntegralResult:
    value: float
    error_bar: float
    method: str
    nodes: int

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "error_bar": self.error_bar,
            "method": self.method,
            "nodes": self.nodes,
        }


# ---------------------------------------------------------------------------
# Tangent root finding


def _g_and_dg(body: TrigSupport, point, phi):
    c, s = np.cos(phi), np.sin(phi)
    g = point[0] * c + point[1] * s - _eval(body, phi, 0)
    dg = -point[0] * s + point[1] * c - _eval(body, phi, 1)
    return g, dg


def _refine_root(body: TrigSupport, point, lo, hi, glo, ghi, tol):
    """Hybrid bisection/Newton on g(phi) = <P, N(phi)> - p(phi) within a bracket."""
    x = 0.5 * (lo + hi)
    for _ in range(200):
        g, dg = _g_and_dg(body, point, x)
        if abs(g) <= tol:
            return x
        if g * glo < 0.0:
            hi = x
        else:
            lo, glo = x, g
        moved = False
        if dg != 0.0:
            xn = x - g / dg
            if lo < xn < hi:
                x, moved = xn, True
        if not moved:
            x = 0.5 * (lo + hi)
    return x


def support_line_angles(body: TrigSupport, point, collar: float = 1e-9) -> TangentPair:
    """Normal angles of the two support lines through an exterior point.

    Roots of g(phi) = <P, N(phi)> - p(phi) are bracketed by sign changes on
    a dense grid and polished to |g| <= 1e-13 * (|P| + a0).  Raises
    InteriorPoint when g never becomes positive and BoundaryCollar when the
    point clears the boundary by less than collar * a0.
    """
    _require_validated(body)
    point = np.asarray(point, dtype=float)
    pnorm = float(np.hypot(point[0], point[1]))
    tol = 1e-13 * (pnorm + body.a0)

    n_scan = max(64, 8 * body.max_degree)
    for _ in range(5):
        phis = np.linspace(0.0, TWO_PI, n_scan, endpoint=False)
        g = point[0] * np.cos(phis) + point[1] * np.sin(phis) - _eval(body, phis, 0)
        gmax = float(np.max(g))
        if gmax <= tol:
            # polish the grid maximum before declaring the point interior
            i = int(np.argmax(g))
            x = phis[i]
            for _ in range(60):
                _, dg = _g_and_dg(body, point, x)
                d2 = -point[0] * math.cos(x) - point[1] * math.sin(x) - _eval(body, x, 2)
                if d2 >= 0.0:
                    break
                step = dg / d2
                x -= step
                if abs(step) < 1e-15:
                    break
            gmax = _g_and_dg(body, point, x)[0]
            if gmax <= tol:
                raise InteriorPoint(f"point {point.tolist()} lies inside the body")
        if gmax <= collar * body.a0:
            raise BoundaryCollar(
                f"point clears the boundary by {gmax:.3g}, below collar {collar * body.a0:.3g}"
            )
        g_next = np.roll(g, -1)
        idx = np.nonzero((g <= 0.0) & (g_next > 0.0) | (g > 0.0) & (g_next <= 0.0))[0]
        if len(idx) == 2:
            roots = []
            h = TWO_PI / n_scan
            for i in idx:
                roots.append(
                    _refine_root(body, point, phis[i], phis[i] + h, g[i], g_next[i], tol)
                )
            r1, r2 = sorted(r % TWO_PI for r in roots)
            mid = 0.5 * (r1 + r2)
            if _g_and_dg(body, point, mid)[0] > 0.0:
                phi1, delta = r1, r2 - r1
            else:
                phi1, delta = r2, TWO_PI - (r2 - r1)
            if not (0.0 < delta < PI):
                raise RootCountAnomaly(
                    f"positive arc has length {delta:.6g}, outside (0, pi)"
                )
            phi2 = (phi1 + delta) % TWO_PI
            g1 = boundary_point(body, phi1)
            g2 = boundary_point(body, phi2)
            t1 = float(np.hypot(*(point - g1)))
            t2 = float(np.hypot(*(point - g2)))
            return TangentPair(phi1=phi1, phi2=phi2, omega=PI - delta, t1=t1, t2=t2)
        n_scan *= 2
    raise RootCountAnomaly(
        f"could not isolate exactly two support-line roots (last count {len(idx)})"
    )


def exterior_point(body: TrigSupport, phi1: float, delta: float):
    """Exterior point with support-line normals at phi1 and phi1 + delta.

    Returns (P, jac, omega): P solves the 2x2 linear system of the two
    support-line equations, jac = t1*t2/sin(omega) is the area-element
    factor of the (phi1, delta) parametrization, and omega = pi - delta.
    """
    _require_validated(body)
    if not (0.0 < delta < PI):
        raise DegenerateGap(f"delta must lie in (0, pi), got {delta}")
    phi2 = phi1 + delta
    p1 = _eval(body, phi1, 0)
    p2 = _eval(body, phi2, 0)
    sd = math.sin(delta)
    c1, s1 = math.cos(phi1), math.sin(phi1)
    c2, s2 = math.cos(phi2), math.sin(phi2)
    px = (p1 * s2 - p2 * s1) / sd
    py = (p2 * c1 - p1 * c2) / sd
    u1 = -px * s1 + py * c1 - _eval(body, phi1, 1)
    u2 = -px * s2 + py * c2 - _eval(body, phi2, 1)
    jac = abs(u1 * u2) / sd
    return np.array([px, py]), jac, PI - delta


# ---------------------------------------------------------------------------
# Tangent-coordinate integration


def _gap_mass(body: TrigSupport, delta, nodes_phi: int):
    """Integral over phi1 of the area-element factor at fixed gap delta.

    Vectorized over an array of gaps; returns G with
    integral_exterior f(omega) dP = integral_0^pi f(pi - delta) G(delta) ddelta.
    """
    phi1 = np.linspace(0.0, TWO_PI, nodes_phi, endpoint=False)
    deltas = np.atleast_1d(np.asarray(delta, dtype=float))
    out = np.empty(deltas.shape)
    c1, s1 = np.cos(phi1), np.sin(phi1)
    p1 = _eval(body, phi1, 0)
    dp1 = _eval(body, phi1, 1)
    for i, d in enumerate(deltas):
        phi2 = phi1 + d
        c2, s2 = np.cos(phi2), np.sin(phi2)
        p2 = _eval(body, phi2, 0)
        dp2 = _eval(body, phi2, 1)
        sd = math.sin(d)
        px = (p1 * s2 - p2 * s1) / sd
        py = (p2 * c1 - p1 * c2) / sd
        u1 = -px * s1 + py * c1 - dp1
        u2 = -px * s2 + py * c2 - dp2
        out[i] = TWO_PI / nodes_phi * math.fsum(np.abs(u1 * u2).tolist()) / sd
    return out


def _delta_edges(delta_min: float, panels: int) -> np.ndarray:
    s = np.linspace(0.0, 1.0, panels + 1)
    return delta_min + (PI - delta_min) * (1.0 - (1.0 - s) ** 2)


def _tangent_level(body, kernel, nodes_phi, panels, delta_min):
    nodes, weights = gauss_panels(_delta_edges(delta_min, panels), points=16)
    mass = _gap_mass(body, nodes, nodes_phi)
    fvals = kernel(PI - nodes)
    total = math.fsum((weights * fvals * mass).tolist())
    return total, nodes.size * nodes_phi


def exterior_integral(body: TrigSupport, kernel: Kernel, config: ExteriorConfig | None = None) -> IntegralResult:
    """Integral of kernel(omega(P)) over the exterior, in tangent coordinates.

    Composite Gauss panels in the gap direction (graded toward delta = pi,
    where the integrand has a removable limit) and a periodic trapezoid in
    the angular direction.  The error bar combines a coarse/fine difference
    with a bound on the mass dropped inside the near-boundary collar.
    """
    _require_validated(body)
    kernel.check_integrable()
    cfg = config or ExteriorConfig()
    panels = max(4, cfg.nodes_delta // 16)
    fine, n_fine = _tangent_level(body, kernel, cfg.nodes_phi, panels, cfg.delta_min)
    coarse, _ = _tangent_level(
        body, kernel, max(16, cfg.nodes_phi // 2), max(2, panels // 2), cfg.delta_min
    )
    collar_row = float(_gap_mass(body, cfg.delta_min, cfg.nodes_phi)[0])
    # the dropped collar mass is ~ 0.5*delta_min*row; report twice that for safety
    collar_err = cfg.delta_min * abs(kernel(PI - cfg.delta_min)) * collar_row
    err = abs(fine - coarse) + collar_err + 1e-14 * abs(fine)
    return IntegralResult(fine, err, "tangent_coords", n_fine)


# ---------------------------------------------------------------------------
# Polar-grid oracle


def _radial_boundary(body: TrigSupport, theta: float) -> float:
    """Distance from the origin to the boundary along direction theta.

    Minimizes p(phi)/cos(theta - phi) over the half-turn window, by grid
    scan plus golden-section refinement (origin must be interior).
    """
    span = PI / 2.0 - 1e-6
    n = max(128, 16 * body.max_degree)
    phis = np.linspace(theta - span, theta + span, n)
    vals = _eval(body, phis, 0) / np.cos(theta - phis)
    i = int(np.argmin(vals))
    lo = phis[max(i - 1, 0)]
    hi = phis[min(i + 1, n - 1)]

    def f(x):
        return _eval(body, x, 0) / math.cos(theta - x)

    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(60):
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = f(d)
    x = 0.5 * (a + b)
    return f(x)


def _polish_pair(body, point, guess1, guess2, tol):
    """Newton-polish both tangency angles from warm starts; None on failure."""
    roots = []
    for x0 in (guess1, guess2):
        x = x0
        ok = False
        for _ in range(30):
            g, dg = _g_and_dg(body, point, x)
            if abs(g) <= tol:
                ok = True
                break
            if dg == 0.0 or abs(g / dg) > 0.5:
                break
            x -= g / dg
        if not ok:
            return None
        roots.append(x % TWO_PI)
    r1, r2 = sorted(roots)
    if r2 - r1 < 1e-12 or TWO_PI - (r2 - r1) < 1e-12:
        return None
    mid = 0.5 * (r1 + r2)
    if _g_and_dg(body, point, mid)[0] > 0.0:
        delta = r2 - r1
        pair = (r1, r2)
    else:
        delta = TWO_PI - (r2 - r1)
        pair = (r2, r1)
    if not (0.0 < delta < PI):
        return None
    return pair[0], pair[1], PI - delta


_POLAR_CACHE: dict = {}


def _polar_field(body: TrigSupport, cfg: ExteriorConfig):
    """Visual-angle field on a polar grid about the Steiner point.

    Returns (omegas, weights, far_r, far_omega, bound_mass):
      omegas/weights: flattened nodes with full area measure r*dr*dtheta;
      far_r, far_omega: common outer radial nodes (per theta) for tail fits;
      bound_mass: integral of r over the collar ring, bounding dropped area.
    Cached per (body, config): the field is kernel independent.
    """
    key = (body, cfg)
    if key in _POLAR_CACHE:
        return _POLAR_CACHE[key]
    centered = recenter_to_steiner(body)
    a0 = centered.a0
    r_max = cfg.r_max if cfg.r_max is not None else 40.0 * a0
    if r_max < 20.0 * a0:
        raise ValueError(f"r_max must be at least 20*a0 = {20 * a0:.6g}, got {r_max}")
    collar = 1e-5 * a0
    n_theta = cfg.nodes_phi
    thetas = np.linspace(0.0, TWO_PI, n_theta, endpoint=False)
    w_theta = TWO_PI / n_theta
    tol_scale = 1e-13

    rbs = np.array([_radial_boundary(centered, t) for t in thetas])
    r1 = 3.0 * float(np.max(rbs))
    near_panels = max(4, cfg.radial_nodes // 16)
    far_panels = max(4, cfg.radial_nodes // 16)
    far_edges = np.geomspace(r1, r_max, far_panels + 1)
    far_nodes, far_w = gauss_panels(far_edges, points=8)

    omegas = []
    weights = []
    far_omega = np.empty((n_theta, far_nodes.size))
    ring_mass = 0.0
    for it, theta in enumerate(thetas):
        rb = rbs[it]
        ct, st = math.cos(theta), math.sin(theta)
        # near zone: r = rb + u^2 smooths the sqrt-type onset of omega(r)
        u_lo, u_hi = math.sqrt(collar), math.sqrt(r1 - rb)
        u_nodes, u_w = gauss_panels(np.linspace(u_lo, u_hi, near_panels + 1), points=8)
        rs_near = rb + u_nodes**2
        w_near = 2.0 * u_nodes * u_w
        rs = np.concatenate([rs_near, far_nodes])
        ws = np.concatenate([w_near, far_w])
        prev = None
        for j, (r, w) in enumerate(zip(rs, ws)):
            point = np.array([r * ct, r * st])
            tol = tol_scale * (r + a0)
            res = None
            if prev is not None:
                res = _polish_pair(centered, point, prev[0], prev[1], tol)
            if res is None:
                tp = support_line_angles(centered, point)
                res = (tp.phi1, tp.phi2, tp.omega)
            prev = res
            om = res[2]
            omegas.append(om)
            weights.append(w_theta * w * r)
            if j >= rs_near.size:
                far_omega[it, j - rs_near.size] = om
        ring_mass += w_theta * rb * collar
    out = (
        np.array(omegas),
        np.array(weights),
        far_nodes,
        far_omega,
        ring_mass,
    )
    _POLAR_CACHE[key] = out
    return out


def exterior_integral_grid(body: TrigSupport, kernel: Kernel, config: ExteriorConfig | None = None) -> IntegralResult:
    """Polar-grid oracle for the exterior integral.

    2D quadrature about the Steiner point up to r_max, followed by a tail
    of the form C/r^2 fitted on the outermost decade of radii.  Much
    coarser than the tangent integrator; its honest error bar combines an
    angular-resolution difference, the tail-fit scatter and the dropped
    collar ring.
    """
    _require_validated(body)
    kernel.check_integrable()
    cfg = config or ExteriorConfig()
    omegas, weights, far_r, far_omega, ring_mass = _polar_field(body, cfg)
    fvals = kernel(omegas)
    main = math.fsum((weights * fvals).tolist())

    # angular-resolution estimate: same field restricted to every other theta
    n_theta = cfg.nodes_phi
    per_theta = omegas.size // n_theta
    sel = np.zeros(omegas.size, dtype=bool)
    for it in range(0, n_theta, 2):
        sel[it * per_theta : (it + 1) * per_theta] = True
    coarse = 2.0 * math.fsum((weights[sel] * fvals[sel]).tolist())

    # tail: theta-averaged ring mass m(r) = r * mean_theta f; fit m ~ C/r^2
    ring = far_r * np.mean(kernel(far_omega), axis=0) * TWO_PI
    fit_mask = far_r >= far_r[-1] / 10.0
    scaled = ring[fit_mask] * far_r[fit_mask] ** 2
    c_fit = float(np.mean(scaled))
    r_max = cfg.r_max if cfg.r_max is not None else 40.0 * body.a0
    tail = c_fit / r_max
    tail_err = (float(np.max(np.abs(scaled - c_fit))) if scaled.size else 0.0) / r_max + 0.2 * abs(tail)

    collar_err = abs(kernel(PI)) * ring_mass if kernel(PI) != 0.0 else 0.1 * ring_mass
    err = 2.0 * abs(main - coarse) + tail_err + collar_err + 1e-12 * abs(main)
    return IntegralResult(main + tail, err, "polar_grid", omegas.size)


def visual_moment(body: TrigSupport, n: int, config: ExteriorConfig | None = None) -> tuple[float, float]:
    """Exterior moment of order n, numerically and in closed form.

    numeric: exterior integral of the order-n moment kernel;
    spectral: L^2 + (-1)^n pi^2 (n^2 - 1) c_n^2 with c_n about the Steiner
    point.  Returned together so each path can audit the other.
    """
    if not isinstance(n, (int, np.integer)) or n < 2:
        raise BadOrder(f"moment order must be an integer >= 2, got {n!r}")
    numeric = exterior_integral(body, moment_kernel(n), config).value
    centered = recenter_to_steiner(body)
    L = TWO_PI * body.a0
    spectral = L * L + (-1.0) ** n * PI * PI * (n * n - 1.0) * centered.c_sq(n)
    return numeric, spectral
