"""Convex bodies encoded by truncated trigonometric support functions.

A planar convex body K is stored through the coefficients of its support
function

    p(phi) = a0 + sum_n [ a_n cos(n phi) + b_n sin(n phi) ],

the signed distance from the origin to the supporting line of K with
outward normal N(phi) = (cos phi, sin phi).  The boundary is recovered as
gamma(phi) = p N + p' N' and the curvature radius is rho = p + p''.
A support function describes a strictly convex body exactly when rho > 0
everywhere; operations that rely on convexity only accept bodies blessed
by `validate_convex`.

Coefficients are kept as a sparse, frequency-sorted tuple.  The extremal
bodies of interest (parallels of astroids, Steiner curves, five-cusped
hypocycloids and their Minkowski sums) have one to three harmonics, so the
sparse form keeps every downstream spectral sum exact.

Conventions: angles in radians, positive rotation counterclockwise, a
rotation by theta maps p to p(phi - theta).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Iterable, Sequence, Union

import numpy as np

from .errors import (
    AmplitudeTooLarge,
    BadSpec,
    GridNotUniform,
    InsufficientSamples,
    NonpositiveMean,
    NotStrictlyConvex,
    NotValidated,
)

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class Harmonic:
    """Single frequency term a*cos(n phi) + b*sin(n phi) of a support function."""

    n: int
    a: float
    b: float

    def __post_init__(self):
        if not isinstance(self.n, (int, np.integer)) or self.n < 1:
            raise ValueError(f"harmonic frequency must be an integer >= 1, got {self.n!r}")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "a", float(self.a))
        object.__setattr__(self, "b", float(self.b))

    @property
    def c_sq(self) -> float:
        """Squared amplitude a^2 + b^2, invariant under rotations."""
        return self.a * self.a + self.b * self.b


@dataclass(frozen=True)
class TrigSupport:
    """Support function a0 + sum of harmonics, sorted by frequency.

    `validated` marks that strict convexity and a positive mean term have
    been certified by `validate_convex`.  Values are immutable; every
    operation returns a new instance.
    """

    a0: float
    harmonics: tuple[Harmonic, ...] = ()
    validated: bool = False

    def __post_init__(self):
        object.__setattr__(self, "a0", float(self.a0))
        hs = tuple(h if isinstance(h, Harmonic) else Harmonic(*h) for h in self.harmonics)
        hs = tuple(sorted((h for h in hs if h.a != 0.0 or h.b != 0.0), key=lambda h: h.n))
        seen = [h.n for h in hs]
        if len(set(seen)) != len(seen):
            raise ValueError(f"duplicate harmonic frequencies: {seen}")
        object.__setattr__(self, "harmonics", hs)

    @property
    def max_degree(self) -> int:
        return self.harmonics[-1].n if self.harmonics else 0

    def harmonic(self, n: int) -> Harmonic:
        """The harmonic at frequency n (zero harmonic if absent)."""
        for h in self.harmonics:
            if h.n == n:
                return h
        return Harmonic(max(n, 1), 0.0, 0.0)

    def c_sq(self, n: int) -> float:
        return self.harmonic(n).c_sq

    def coeff_scale(self) -> float:
        """Magnitude scale used for tolerances on this body."""
        amps = [abs(self.a0)] + [max(abs(h.a), abs(h.b)) for h in self.harmonics]
        return max(amps)


def _require_validated(body: TrigSupport) -> None:
    if not isinstance(body, TrigSupport) or not body.validated:
        raise NotValidated("body must pass validate_convex first")


def _eval(body: TrigSupport, phi, order: int):
    """Evaluate the order-th derivative of p at phi (scalar or array)."""
    phi_arr = np.asarray(phi, dtype=float)
    out = np.zeros(phi_arr.shape)
    if order == 0:
        out += body.a0
    shift = order * (math.pi / 2.0)
    for h in body.harmonics:
        scale = float(h.n) ** order
        arg = h.n * phi_arr + shift
        out = out + scale * (h.a * np.cos(arg) + h.b * np.sin(arg))
    if phi_arr.ndim == 0:
        return float(out)
    return out


def eval_support(body: TrigSupport, phi, order: int = 0):
    """p, p', p'' or p''' at phi, by direct trigonometric summation.

    Exact (to round-off) for the truncated series; accepts scalars or
    arrays of angles.
    """
    if order not in (0, 1, 2, 3):
        raise ValueError(f"order must be one of 0,1,2,3, got {order}")
    return _eval(body, phi, order)


def boundary_point(body: TrigSupport, phi):
    """Boundary parametrization gamma(phi) = p N + p' N'."""
    phi_arr = np.asarray(phi, dtype=float)
    p = _eval(body, phi_arr, 0)
    dp = _eval(body, phi_arr, 1)
    c, s = np.cos(phi_arr), np.sin(phi_arr)
    return np.stack([p * c - dp * s, p * s + dp * c], axis=-1)


def min_curvature_radius(body: TrigSupport) -> tuple[float, float]:
    """Global minimum of the curvature radius rho = p + p'' and its angle.

    Dense sampling at 16*max(N,4) points followed by a Newton/bisection
    polish on rho' down to |rho'| <= 1e-12 * scale.
    """
    if not body.harmonics:
        return body.a0, 0.0
    n_grid = 16 * max(body.max_degree, 4)
    phis = np.linspace(0.0, TWO_PI, n_grid, endpoint=False)
    rho = _eval(body, phis, 0) + _eval(body, phis, 2)
    scale = max(body.coeff_scale(), 1e-300)
    tol = 1e-12 * scale

    def drho(x):
        return _eval(body, x, 1) + _eval(body, x, 3)

    def d2rho(x):
        # rho'' needs the 4th derivative of p; computed term by term.
        val = _eval(body, x, 2)
        for h in body.harmonics:
            k = float(h.n) ** 4
            val += k * (h.a * math.cos(h.n * x) + h.b * math.sin(h.n * x))
        return val

    best_val = math.inf
    best_phi = 0.0
    prev = np.roll(rho, 1)
    nxt = np.roll(rho, -1)
    candidates = np.nonzero((rho <= prev) & (rho <= nxt))[0]
    h = TWO_PI / n_grid
    for i in candidates:
        lo, hi = phis[i] - h, phis[i] + h
        dlo, dhi = drho(lo), drho(hi)
        x = phis[i]
        if dlo <= 0.0 <= dhi:
            # polish the stationary point, keeping the bracket alive
            for _ in range(120):
                dx = drho(x)
                if abs(dx) <= tol:
                    break
                curv = d2rho(x)
                step_ok = False
                if curv > 0.0:
                    xn = x - dx / curv
                    if lo < xn < hi:
                        x, step_ok = xn, True
                if not step_ok:
                    x = 0.5 * (lo + hi)
                d = drho(x)
                if d > 0.0:
                    hi = x
                else:
                    lo = x
        val = _eval(body, x, 0) + _eval(body, x, 2)
        if val < best_val:
            best_val = val
            best_phi = x % TWO_PI
    return float(best_val), float(best_phi)


def validate_convex(body: TrigSupport, eps: float | None = None) -> TrigSupport:
    """Certify strict convexity; returns the body marked as validated.

    Raises NonpositiveMean when a0 <= 0 and NotStrictlyConvex when the
    curvature radius dips below eps (default 1e-9 * a0).
    """
    if body.a0 <= 0.0:
        raise NonpositiveMean(f"mean term a0={body.a0:.6g} must be positive")
    if eps is None:
        eps = 1e-9 * body.a0
    if eps <= 0.0:
        raise ValueError("eps must be positive")
    rho_min, phi_at = min_curvature_radius(body)
    if rho_min < eps:
        raise NotStrictlyConvex(rho_min, phi_at)
    return replace(body, validated=True)


def steiner_point(body: TrigSupport) -> np.ndarray:
    """Steiner point (a1, b1): the degree-one Fourier coefficients."""
    h1 = body.harmonic(1)
    return np.array([h1.a, h1.b])


def recenter_to_steiner(body: TrigSupport) -> TrigSupport:
    """Support function with the Steiner point as origin (degree-1 term removed).

    The curvature radius is unchanged (degree-1 terms cancel in p + p''),
    so a validated body stays validated.
    """
    hs = tuple(h for h in body.harmonics if h.n != 1)
    return replace(body, harmonics=hs)


def minkowski_sum(a: TrigSupport, b: TrigSupport) -> TrigSupport:
    """Coefficient-wise sum of support functions.

    Perimeter and Steiner point are additive; the sum of two validated
    bodies is again strictly convex (curvature radii add).
    """
    coeffs: dict[int, list[float]] = {}
    for body in (a, b):
        for h in body.harmonics:
            acc = coeffs.setdefault(h.n, [0.0, 0.0])
            acc[0] += h.a
            acc[1] += h.b
    hs = tuple(Harmonic(n, ab[0], ab[1]) for n, ab in sorted(coeffs.items()))
    return TrigSupport(a.a0 + b.a0, hs, validated=a.validated and b.validated)


def offset(body: TrigSupport, r: float) -> TrigSupport:
    """Parallel body at signed distance r: only the mean term shifts.

    Inner parallels (r < 0) may lose convexity, so the result is only kept
    validated for outward offsets of validated bodies.
    """
    return replace(body, a0=body.a0 + float(r), validated=body.validated and r >= 0.0)


def rigid_motion(body: TrigSupport, theta: float = 0.0, v: Sequence[float] = (0.0, 0.0)) -> TrigSupport:
    """Rotate by theta (counterclockwise) then translate by v.

    Rotation shifts each harmonic phase by n*theta; translation only
    touches the degree-one harmonic, so all c_n^2 with n >= 2 are exact
    invariants.
    """
    vx, vy = float(v[0]), float(v[1])
    coeffs: dict[int, list[float]] = {}
    for h in body.harmonics:
        c, s = math.cos(h.n * theta), math.sin(h.n * theta)
        coeffs[h.n] = [h.a * c - h.b * s, h.a * s + h.b * c]
    if vx != 0.0 or vy != 0.0:
        acc = coeffs.setdefault(1, [0.0, 0.0])
        acc[0] += vx
        acc[1] += vy
    hs = tuple(Harmonic(n, ab[0], ab[1]) for n, ab in sorted(coeffs.items()))
    return TrigSupport(body.a0, hs, validated=body.validated)


def derivative(body: TrigSupport) -> TrigSupport:
    """Coefficients of p'; a generalized support, not a convex body."""
    hs = tuple(Harmonic(h.n, h.n * h.b, -h.n * h.a) for h in body.harmonics)
    return TrigSupport(0.0, hs)


def evolute_support(body: TrigSupport) -> TrigSupport:
    """Generalized support function of the evolute, p'(phi - pi/2)."""
    return rigid_motion(derivative(body), theta=math.pi / 2.0)


def wigner_support(body: TrigSupport) -> TrigSupport:
    """Generalized support of the Wigner caustic, (p(phi) - p(phi + pi)) / 2.

    Keeps exactly the odd harmonics of p.
    """
    hs = tuple(h for h in body.harmonics if h.n % 2 == 1)
    return TrigSupport(0.0, hs)


def is_constant_width(body: TrigSupport, tol: float | None = None) -> tuple[bool, float]:
    """Whether p(phi) + p(phi + pi) is constant, and the width w = 2*a0.

    Constant width is equivalent to all even harmonics (n >= 2) vanishing;
    they are compared against tol (default 1e-10 * a0).
    """
    if tol is None:
        tol = 1e-10 * max(abs(body.a0), 1e-300)
    flag = all(
        max(abs(h.a), abs(h.b)) <= tol for h in body.harmonics if h.n >= 2 and h.n % 2 == 0
    )
    return flag, 2.0 * body.a0


def from_samples(values: Iterable[tuple[float, float]], degree: int) -> TrigSupport:
    """Discrete Fourier analysis of (phi, p) samples on a uniform grid.

    With M >= 2*degree + 2 equispaced samples the projection is exact (to
    round-off) whenever the data comes from a trigonometric polynomial of
    degree <= `degree`.  Coefficients below 1e-13 of the sample scale are
    pruned.
    """
    pts = sorted((float(phi), float(p)) for phi, p in values)
    m = len(pts)
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    if m < 2 * degree + 2:
        raise InsufficientSamples(f"need at least {2 * degree + 2} samples for degree {degree}, got {m}")
    phis = np.array([q[0] for q in pts])
    ps = np.array([q[1] for q in pts])
    step = TWO_PI / m
    gaps = np.diff(np.append(phis, phis[0] + TWO_PI))
    if np.any(np.abs(gaps - step) > 1e-9):
        raise GridNotUniform("sample angles are not equispaced on [0, 2*pi)")

    a0 = math.fsum(ps.tolist()) / m
    tol = 1e-13 * max(1.0, float(np.max(np.abs(ps))))
    hs = []
    for n in range(1, degree + 1):
        an = 2.0 / m * math.fsum((ps * np.cos(n * phis)).tolist())
        bn = 2.0 / m * math.fsum((ps * np.sin(n * phis)).tolist())
        if max(abs(an), abs(bn)) > tol:
            hs.append(Harmonic(n, an, bn))
    return TrigSupport(a0, tuple(hs))


# ---------------------------------------------------------------------------
# Named body specifications


@dataclass(frozen=True)
class CircleSpec:
    radius: float


@dataclass(frozen=True)
class AstroidParallelSpec:
    """Outer parallel of an astroid: p = a0 + amp*sin(2 phi); needs |amp| < a0/3."""

    a0: float
    amp: float


@dataclass(frozen=True)
class DeltoidParallelSpec:
    """Outer parallel of a Steiner curve: p = a0 + amp*cos(3 phi); needs |amp| < a0/8."""

    a0: float
    amp: float


@dataclass(frozen=True)
class HypocycloidParallelSpec:
    """Outer parallel of a k-cusped hypocycloid: p = a0 + amp*cos(k phi)."""

    k: int
    a0: float
    amp: float


@dataclass(frozen=True)
class RandomBodySpec:
    seed: int
    degree: int
    constant_width: bool = False


@dataclass(frozen=True)
class ExplicitSpec:
    body: TrigSupport


BodySpec = Union[
    CircleSpec,
    AstroidParallelSpec,
    DeltoidParallelSpec,
    HypocycloidParallelSpec,
    RandomBodySpec,
    ExplicitSpec,
]


@dataclass(frozen=True)
class HypocycloidSpec:
    """Hypocycloid traced by a circle of radius r rolling inside radius k*r.

    k = m/n in lowest terms with m > 2n; the closed curve has m cusps and
    closes after the rolling parameter sweeps [0, 2*pi*n].
    """

    m: int
    n: int = 1
    r: float = 1.0

    def __post_init__(self):
        if self.m <= 0 or self.n <= 0:
            raise BadSpec("hypocycloid m, n must be positive integers")
        if math.gcd(self.m, self.n) != 1:
            raise BadSpec(f"hypocycloid m={self.m}, n={self.n} must be coprime")
        if self.m <= 2 * self.n:
            raise BadSpec(f"hypocycloid needs k = m/n > 2, got {self.m}/{self.n}")
        if self.r <= 0:
            raise BadSpec("rolling radius must be positive")

    @property
    def k(self) -> float:
        return self.m / self.n

    @property
    def cusps(self) -> int:
        return self.m

    @property
    def fixed_radius(self) -> float:
        return self.k * self.r


def random_body(
    seed: int,
    degree: int,
    constant_width: bool = False,
    index: int = 0,
    a0: float = 1.0,
) -> TrigSupport:
    """Reproducible random validated body with |c_n| <= 0.5*a0*n^-3 decay.

    Randomness flows from a counter-based generator keyed on (seed, index)
    so sweeps are reproducible and order-independent.  Amplitudes are
    halved (at most 60 times) until strict convexity holds.
    """
    if degree < 1:
        raise ValueError("degree must be >= 1")
    ss = np.random.SeedSequence(entropy=int(seed), spawn_key=(int(index),))
    rng = np.random.Generator(np.random.Philox(seed=ss))
    hs = []
    for n in range(1, degree + 1):
        mag = rng.uniform(0.0, 0.5) * a0 / n**3
        phase = rng.uniform(0.0, TWO_PI)
        if constant_width and n >= 2 and n % 2 == 0:
            continue
        hs.append(Harmonic(n, mag * math.cos(phase), mag * math.sin(phase)))
    body = TrigSupport(a0, tuple(hs))
    for _ in range(60):
        try:
            return validate_convex(body)
        except NotStrictlyConvex:
            body = TrigSupport(
                body.a0, tuple(Harmonic(h.n, 0.5 * h.a, 0.5 * h.b) for h in body.harmonics)
            )
    raise AmplitudeTooLarge("random draw could not be rescaled to a convex body")


def construct(spec: BodySpec) -> TrigSupport:
    """Build and validate the body described by a spec.

    Amplitude bounds are checked eagerly so misuse fails before any
    computation: |amp|*(k^2 - 1) < a0 keeps p + p'' positive for a single
    harmonic of frequency k.
    """
    if isinstance(spec, CircleSpec):
        return validate_convex(TrigSupport(spec.radius))
    if isinstance(spec, AstroidParallelSpec):
        if 3.0 * abs(spec.amp) >= spec.a0:
            raise AmplitudeTooLarge(
                f"astroid parallel needs |amp| < a0/3, got amp={spec.amp:.6g}, a0={spec.a0:.6g}"
            )
        return validate_convex(TrigSupport(spec.a0, (Harmonic(2, 0.0, spec.amp),)))
    if isinstance(spec, DeltoidParallelSpec):
        if 8.0 * abs(spec.amp) >= spec.a0:
            raise AmplitudeTooLarge(
                f"deltoid parallel needs |amp| < a0/8, got amp={spec.amp:.6g}, a0={spec.a0:.6g}"
            )
        return validate_convex(TrigSupport(spec.a0, (Harmonic(3, spec.amp, 0.0),)))
    if isinstance(spec, HypocycloidParallelSpec):
        if not isinstance(spec.k, (int, np.integer)) or spec.k < 3:
            raise BadSpec(f"hypocycloid parallel needs integer k >= 3, got {spec.k!r}")
        if (spec.k**2 - 1) * abs(spec.amp) >= spec.a0:
            raise AmplitudeTooLarge(
                f"hypocycloid parallel needs |amp|*(k^2-1) < a0, got amp={spec.amp:.6g}, "
                f"k={spec.k}, a0={spec.a0:.6g}"
            )
        return validate_convex(TrigSupport(spec.a0, (Harmonic(int(spec.k), spec.amp, 0.0),)))
    if isinstance(spec, RandomBodySpec):
        return random_body(spec.seed, spec.degree, spec.constant_width)
    if isinstance(spec, ExplicitSpec):
        return validate_convex(spec.body)
    raise BadSpec(f"unknown body spec {spec!r}")


# ---------------------------------------------------------------------------
# JSON form: {"a0": <number>, "harmonics": [{"n":..., "a":..., "b":...}, ...]}


def body_to_dict(body: TrigSupport) -> dict:
    return {
        "a0": body.a0,
        "harmonics": [{"n": h.n, "a": h.a, "b": h.b} for h in body.harmonics],
    }


def body_from_dict(data: dict) -> TrigSupport:
    try:
        a0 = float(data["a0"])
        hs = tuple(Harmonic(int(h["n"]), float(h["a"]), float(h["b"])) for h in data.get("harmonics", ()))
    except (KeyError, TypeError, ValueError) as exc:
        raise BadSpec(f"malformed body JSON: {exc}") from exc
    try:
        return TrigSupport(a0, hs)
    except ValueError as exc:
        raise BadSpec(str(exc)) from exc
