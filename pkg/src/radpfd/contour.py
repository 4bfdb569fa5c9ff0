"""Contour integration: arc approximation, Cauchy oracle, region checks.

Two independent integral routes to the coefficients live here.  The arc
approximation integrates

    (-z)^{l-1/2} / sqrt(1 - e^z) * exp(z/N + (N/z)(Li2(e^z) - pi^2/6))

over the left half of the circle |z| = 5 (composite Gauss-Legendre),
exploiting conjugate symmetry to halve the arc.  The Cauchy oracle
recovers the exact coefficient as (1/2 pi i) times the loop integral of
x^{l-1} prod_{j<=N} (1 - (x+1)^j)^{-1} around a small circle inside the
pole-free annulus (trapezoid rule, spectrally accurate).  The remaining
operations are numeric witnesses for facts used in the error analysis:
monotonicity of Re((Li2(e^z) - pi^2/6)/z) along a contour leg, a
trigonometric lower bound on a rectangle, and the Euler-summation
constant c with an independent quadrature check.

Node positions and the expensive per-node data for the arc (dilogarithm
values, branch logs) depend only on (node count, precision), never on
(l, N), and are cached module-wide.  Caches are append-only dicts; a
concurrent duplicate insert recomputes the same immutable tuple, which
is harmless.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Optional

import mpmath as mp

from .specfun import dilog

__all__ = [
    "QuadratureSpec",
    "OracleValue",
    "MonotoneReport",
    "QuadratureWarning",
    "arc_spec",
    "oracle_spec",
    "integral_approx_at",
    "integral_approx_C",
    "integral_approx_full",
    "cauchy_oracle",
    "check_monotone_exponent",
    "check_lower_bound_inequality",
    "constant_c",
    "constant_c_euler_check",
]

_GUARD = 32
_RULES = ("gauss_legendre_composite", "trapezoid_periodic")

# Relative node-doubling delta above which an arc result is flagged.
_FLAG_REL_TOL = 1e-6


class QuadratureWarning(UserWarning):
    """Raised as a warning when node doubling fails to stabilize."""


@dataclass(frozen=True)
class QuadratureSpec:
    nodes: int
    precision: int
    radius: float
    rule: str

    def __post_init__(self):
        if self.nodes < 8:
            raise ValueError("need at least 8 nodes")
        if self.precision < 64:
            raise ValueError("precision must be at least 64 bits")
        if not self.radius > 0:
            raise ValueError("radius must be positive")
        if self.rule not in _RULES:
            raise ValueError(f"unknown rule {self.rule!r}")


@dataclass(frozen=True)
class OracleValue:
    value: mp.mpc
    node_doubling_delta: mp.mpf


@dataclass(frozen=True)
class MonotoneReport:
    ok: bool
    violations: tuple  # indices i where value[i+1] < value[i]


def arc_spec(nodes: int = 64, precision: int = 256) -> QuadratureSpec:
    """Spec for the |z| = 5 arc integral."""
    return QuadratureSpec(
        nodes=nodes, precision=precision, radius=5.0, rule="gauss_legendre_composite"
    )


def oracle_spec(
    N: int, nodes: Optional[int] = None, precision: Optional[int] = None
) -> QuadratureSpec:
    """Default oracle contour for a given N: radius 3/N, inside the
    pole-free annulus, with precision growing 1.5 bits per unit N to
    absorb the cancellation between huge node values and an O(1) result."""
    if N < 1:
        raise ValueError("N must be positive")
    if nodes is None:
        nodes = 8 * N + 64
    if precision is None:
        precision = 64 + math.ceil(1.5 * N)
    return QuadratureSpec(
        nodes=nodes,
        precision=max(64, precision),
        radius=3.0 / N,
        rule="trapezoid_periodic",
    )


def _pairwise_sum(values):
    n = len(values)
    if n == 0:
        return mp.mpc(0)
    if n == 1:
        return values[0]
    half = n // 2
    return _pairwise_sum(values[:half]) + _pairwise_sum(values[half:])


_LEGENDRE_CACHE: dict = {}


def _legendre_rule(n: int, precision: int):
    """Nodes and weights of n-point Gauss-Legendre on [-1, 1]."""
    key = (n, precision)
    got = _LEGENDRE_CACHE.get(key)
    if got is not None:
        return got
    with mp.workprec(precision + _GUARD):
        nodes = []
        for k in range(n):
            x = mp.mpf(math.cos(math.pi * (k + 0.75) / (n + 0.5)))
            for _ in range(precision):
                # Recurrence for P_n(x) and P_{n-1}(x).
                p0, p1 = mp.mpf(1), x
                for j in range(2, n + 1):
                    p0, p1 = p1, ((2 * j - 1) * x * p1 - (j - 1) * p0) / j
                dp = n * (x * p1 - p0) / (x * x - 1)
                dx = p1 / dp
                x -= dx
                if abs(dx) < mp.mpf(2) ** (-(precision + 8)):
                    break
            p0, p1 = mp.mpf(1), x
            for j in range(2, n + 1):
                p0, p1 = p1, ((2 * j - 1) * x * p1 - (j - 1) * p0) / j
            dp = n * (x * p1 - p0) / (x * x - 1)
            w = 2 / ((1 - x * x) * dp * dp)
            nodes.append((x, w))
        result = tuple(nodes)
    _LEGENDRE_CACHE[key] = result
    return result


_ARC_CACHE: dict = {}


def _arc_nodes(nodes: int, precision: int, full: bool):
    """Per-node data on the arc theta in [pi/2, pi] (or [pi/2, 3pi/2]).

    Each entry is (z, wdz, log(-z), 1/sqrt(1 - e^z), (Li2(e^z) - pi^2/6)/z)
    with wdz = weight * dz/dtheta * panel scale.  Everything here is
    independent of l and N, which is what makes batch comparison over
    many N cheap.
    """
    key = (nodes, precision, full)
    got = _ARC_CACHE.get(key)
    if got is not None:
        return got
    panel_size = min(32, nodes)
    panels = max(1, round(nodes / panel_size))
    rule = _legendre_rule(panel_size, precision)
    with mp.workprec(precision + _GUARD):
        lo = mp.pi / 2
        hi = 3 * mp.pi / 2 if full else mp.pi
        width = (hi - lo) / panels
        pi2_6 = mp.pi**2 / 6
        out = []
        for panel in range(panels):
            a = lo + panel * width
            mid = a + width / 2
            half = width / 2
            for x, w in rule:
                theta = mid + half * x
                z = 5 * mp.exp(mp.mpc(0, 1) * theta)
                wdz = w * half * 5j * mp.exp(mp.mpc(0, 1) * theta)
                li = dilog(mp.exp(z), precision).value
                out.append(
                    (z, wdz, mp.log(-z), 1 / mp.sqrt(1 - mp.exp(z)), (li - pi2_6) / z)
                )
        result = tuple(out)
    _ARC_CACHE[key] = result
    return result


def _check_arc_spec(spec: QuadratureSpec, l: int, N: int):
    if l < 1 or N < 1:
        raise ValueError("l and N must be positive integers")
    if spec.rule != "gauss_legendre_composite":
        raise ValueError("arc integral requires the gauss_legendre_composite rule")
    if spec.radius != 5.0:
        raise ValueError("arc radius is fixed at 5")


def integral_approx_at(l: int, N: int, spec: QuadratureSpec) -> mp.mpf:
    """Arc approximation at exactly spec.nodes nodes (no doubling check)."""
    _check_arc_spec(spec, l, N)
    data = _arc_nodes(spec.nodes, spec.precision, full=False)
    with mp.workprec(spec.precision + _GUARD):
        half = l - mp.mpf(1) / 2
        terms = [
            mp.exp(half * logmz + z / N + N * v) * invsq * wdz
            for (z, wdz, logmz, invsq, v) in data
        ]
        A = _pairwise_sum(terms)
        sign = 1 if l % 2 == 1 else -1
        value = sign * 2 * A.imag / (mp.mpf(N) ** (l + mp.mpf(1) / 2) * (2 * mp.pi) ** mp.mpf("1.5"))
        return mp.mpf(value)


def integral_approx_C(l: int, N: int, spec: QuadratureSpec) -> mp.mpf:
    """Arc approximation with an internal node-doubling convergence check.

    Returns the doubled-node value; emits QuadratureWarning if doubling
    moved the result by more than a 1e-6 relative tolerance.
    """
    coarse = integral_approx_at(l, N, spec)
    fine = integral_approx_at(
        l, N, arc_spec(nodes=2 * spec.nodes, precision=spec.precision)
    )
    with mp.workprec(spec.precision + _GUARD):
        delta = abs(fine - coarse)
        floor = mp.mpf(2) ** (-(spec.precision // 2))
        if delta > _FLAG_REL_TOL * max(abs(fine), floor):
            warnings.warn(
                f"arc quadrature not converged at {spec.nodes} nodes "
                f"(doubling delta {mp.nstr(delta, 3)})",
                QuadratureWarning,
                stacklevel=2,
            )
    return fine


def integral_approx_full(l: int, N: int, spec: QuadratureSpec) -> mp.mpc:
    """Same integral over the whole left arc, returned before the real
    cast.  Conjugate symmetry makes the true value real; the imaginary
    part is pure quadrature noise and a useful self-check."""
    _check_arc_spec(spec, l, N)
    data = _arc_nodes(spec.nodes, spec.precision, full=True)
    with mp.workprec(spec.precision + _GUARD):
        half = l - mp.mpf(1) / 2
        terms = [
            mp.exp(half * logmz + z / N + N * v) * invsq * wdz
            for (z, wdz, logmz, invsq, v) in data
        ]
        A = _pairwise_sum(terms)
        sign = 1 if l % 2 == 1 else -1
        return sign * A / (mp.mpc(0, 1) * mp.mpf(N) ** (l + mp.mpf(1) / 2) * (2 * mp.pi) ** mp.mpf("1.5"))


def cauchy_oracle(l: int, N: int, spec: QuadratureSpec) -> OracleValue:
    """Loop-integral oracle for the exact coefficient C(N, l).

    Trapezoid rule with spec.nodes points, plus the interleaved
    double-count for the convergence delta; the two rules share the
    even-indexed nodes so the doubled run costs one extra sweep.
    """
    if l < 1 or N < 1:
        raise ValueError("l and N must be positive integers")
    if spec.rule != "trapezoid_periodic":
        raise ValueError("oracle requires the trapezoid_periodic rule")
    if N >= 2 and not spec.radius < 2 * math.sin(math.pi / N):
        raise ValueError("radius reaches the nearest nonzero pole of the product")
    if spec.precision < 64 + math.ceil(1.5 * N):
        raise ValueError("precision too low for the oscillatory cancellation")
    M = spec.nodes
    with mp.workprec(spec.precision + _GUARD):
        r = mp.mpf(spec.radius)
        vals = []
        for k in range(2 * M):
            x = r * mp.expjpi(mp.mpf(k) / M)  # e^{i pi k / M}, 2M-th roots
            y = 1 + x
            yj = y
            prod = mp.mpc(1)
            for _ in range(N):
                prod *= 1 - yj
                yj *= y
            vals.append(x**l / prod)  # f(x) * x with f = x^{l-1}/prod
        coarse = _pairwise_sum(vals[0::2]) / M
        fine = _pairwise_sum(vals) / (2 * M)
        return OracleValue(value=fine, node_doubling_delta=mp.mpf(abs(fine - coarse)))


def check_monotone_exponent(path, precision: int = 128) -> MonotoneReport:
    """Whether Re((Li2(e^z) - pi^2/6)/z) is nondecreasing along the path.

    The quantity is the growth exponent of the integrand along a contour
    leg; the error analysis needs it to increase toward the saddle.
    """
    with mp.workprec(precision + _GUARD):
        pi2_6 = mp.pi**2 / 6
        samples = []
        for z in path:
            z = mp.mpc(z)
            if z == 0:
                raise ValueError("path touches z = 0")
            if z.real > 0:
                raise ValueError("path leaves the half-plane Re z <= 0")
            li = dilog(mp.exp(z), precision).value
            samples.append(((li - pi2_6) / z).real)
        bad = tuple(
            i for i in range(len(samples) - 1) if samples[i + 1] < samples[i]
        )
        return MonotoneReport(ok=not bad, violations=bad)


def check_lower_bound_inequality(grid, rhs_scale: float = 1.0) -> bool:
    """Check 1 + e^{2ux} - 2 cos(5u) e^{ux} >= (11 u^2 / 12)(x^2 + 25)
    on grid points (u, x) with u = j/N in (0, 1/10] and x = Re z in [-1, 0].

    rhs_scale is a test hook: inflating the right side must break the
    inequality if the detector works.
    """
    for u, x in grid:
        u = mp.mpf(u)
        x = mp.mpf(x)
        if not (0 < u <= mp.mpf(1) / 10):
            raise ValueError("j/N outside (0, 1/10]")
        if not (-1 <= x <= 0):
            raise ValueError("Re z outside [-1, 0]")
        e = mp.exp(u * x)
        lhs = 1 + e * e - 2 * mp.cos(5 * u) * e
        rhs = rhs_scale * (11 * u * u / 12) * (x * x + 25)
        if lhs < rhs:
            return False
    return True


def constant_c(precision: int = 256) -> mp.mpf:
    """The Euler-summation constant c, about 0.11262, in closed form:

    c = (99i + 8 log(1-e^{i/2}) - 80 log(1-e^{5i}) - 4 log(1-cos(1/2))
         + 40 log(1-cos 5) - 16i Li2(e^{i/2}) + 16i Li2(e^{5i})) / 40

    The expression is real; the imaginary residue is asserted small.
    """
    with mp.workprec(precision + _GUARD):
        i = mp.mpc(0, 1)
        e_half = mp.exp(i / 2)
        e_five = mp.exp(5 * i)
        total = (
            99 * i
            + 8 * mp.log(1 - e_half)
            - 80 * mp.log(1 - e_five)
            - 4 * mp.log(1 - mp.cos(mp.mpf(1) / 2))
            + 40 * mp.log(1 - mp.cos(5))
            - 16 * i * dilog(e_half, precision).value
            + 16 * i * dilog(e_five, precision).value
        ) / 40
        if abs(total.imag) >= mp.mpf(2) ** (-(precision // 2)):
            raise ArithmeticError("closed form failed to be real")
        return mp.mpf(total.real)


def constant_c_euler_check(N: int = 10**4, precision: int = 128) -> mp.mpf:
    """Relative deviation between the closed-form c and the direct
    quadrature of -log(1 - cos(5x/N)) over [floor(N/10), N+1], whose
    value is -cN up to an O(1) remainder.  Small output (under 1e-3 at
    N = 10^4) confirms both computations."""
    with mp.workprec(precision + _GUARD):
        nn = mp.mpf(N)

        def integrand(x):
            return -mp.log(1 - mp.cos(5 * x / nn))

        integral = mp.quad(integrand, [mp.floor(nn / 10), nn + 1])
        c = constant_c(precision)
        return mp.mpf(abs(integral - (-c * nn)) / (c * nn))
