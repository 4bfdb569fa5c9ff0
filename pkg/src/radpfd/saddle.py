"""Saddle point of phi and the closed-form asymptotic coefficient formula.

The saddle z0 is the root of phi near -1.61 + 7.42i.  From it every
constant of the asymptotic main term is derived:

    a     = pi/2 - arg(e^{z0} / (z0 (1 - e^{z0}))) / 2,   rho = e^{ia}
    b     = 1 / |1 - e^{z0}|
    theta = arg(1 - e^{z0}),   p = 2 pi / |theta|
    alpha = Re( -rho^2 e^{z0} / (z0 (1 - e^{z0})) )

and the approximation to the partial-fraction coefficient C(N, l) is
b^N N^{-l-1} H_l(N) with H_l the bounded periodic amplitude implemented
here.  The growth factor per period is b^p, about 8.81.
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath as mp

from .specfun import phi, phi_derivative

__all__ = [
    "SaddleData",
    "AsymptoticValue",
    "DEFAULT_INITIAL",
    "solve_saddle",
    "saddle_constants",
    "H",
    "asymptotic_C",
    "argument_principle_count",
]

_GUARD = 32

# First displayed decimals of the root; also the uniqueness-disk center.
DEFAULT_INITIAL = complex(-1.61, 7.42)


@dataclass(frozen=True)
class SaddleData:
    """Saddle point and the constants derived from it.

    precision records the bit budget the fields were computed at; every
    downstream evaluation works at that same budget.
    """

    z0: mp.mpc
    rho: mp.mpc
    a: mp.mpf
    b: mp.mpf
    alpha: mp.mpf
    p: mp.mpf
    theta: mp.mpf
    precision: int


@dataclass(frozen=True)
class AsymptoticValue:
    N: int
    l: int
    main_term: mp.mpf
    H_value: mp.mpf


def solve_saddle(precision: int = 256, initial=None) -> mp.mpc:
    """Newton iteration for the root of phi near the initial guess.

    The initial guess must lie within distance 1 of -1.61 + 7.42i or of
    its conjugate (the root is simple and unique in either disk).  Fails
    if 100 iterations do not converge or an iterate drifts more than
    distance 2 from the start.
    """
    if initial is None:
        initial = DEFAULT_INITIAL
    with mp.workprec(precision + _GUARD):
        z = mp.mpc(initial)
        near_upper = abs(z - mp.mpc(DEFAULT_INITIAL)) <= 1
        near_lower = abs(z - mp.mpc(DEFAULT_INITIAL).conjugate()) <= 1
        if not (near_upper or near_lower):
            raise ValueError(
                "initial guess outside the uniqueness disk around -1.61 + 7.42i"
            )
        start = z
        target = mp.mpf(2) ** (-(precision - 16))
        fz = phi(z, precision)
        for _ in range(100):
            if abs(fz) < target:
                return z
            step = fz / phi_derivative(z, precision)
            # Step halving: accept only a decrease of |phi|.
            for _ in range(60):
                cand = z - step
                fc = phi(cand, precision)
                if abs(fc) < abs(fz):
                    break
                step /= 2
            else:
                raise RuntimeError("Newton stalled: no descent direction")
            z, fz = cand, fc
            if abs(z - start) > 2:
                raise RuntimeError("iterate left the radius-2 disk; diverging")
        raise RuntimeError("no convergence within 100 iterations")


def saddle_constants(z0, precision: int = 256) -> SaddleData:
    """Derive the full constant set from a solved saddle point."""
    with mp.workprec(precision + _GUARD):
        z0 = mp.mpc(z0)
        residual = abs(phi(z0, precision))
        if residual >= mp.mpf(2) ** (-(precision - 16)):
            raise ValueError("z0 does not satisfy the saddle equation")
        ez = mp.exp(z0)
        u = 1 - ez
        a = mp.pi / 2 - mp.arg(ez / (z0 * u)) / 2
        rho = mp.exp(mp.mpc(0, 1) * a)
        radicand = -z0 * u / (rho**2 * ez)
        if abs(radicand.imag) >= mp.mpf(2) ** (-(precision // 2)):
            raise ArithmeticError("axis radicand is not real at this precision")
        if radicand.real <= 0:
            raise ArithmeticError("axis radicand is not positive")
        alpha = (1 / radicand).real
        theta = mp.arg(u)
        return SaddleData(
            z0=z0,
            rho=rho,
            a=mp.mpf(a),
            b=1 / abs(u),
            alpha=mp.mpf(alpha),
            p=2 * mp.pi / abs(theta),
            theta=mp.mpf(theta),
            precision=precision,
        )


def H(l: int, N, sd: SaddleData) -> mp.mpf:
    """Bounded periodic amplitude H_l(N), period p in N.

    N may be any real number so the periodicity is directly observable;
    the asymptotics only ever evaluates it at integers.
    """
    if l < 1:
        raise ValueError("l must be a positive integer")
    with mp.workprec(sd.precision + _GUARD):
        N = mp.mpf(N)
        ez = mp.exp(sd.z0)
        # K = rho (-z0)^{l-1/2} / sqrt(1 - e^{z0}), principal branches.
        K = sd.rho * (-sd.z0) ** (l - mp.mpf(1) / 2) / mp.sqrt(1 - ez)
        scale = mp.sqrt(1 / sd.alpha) / mp.pi
        if l % 2 == 0:
            scale = -scale
        angle = N * sd.theta
        return mp.mpf(scale * (K.imag * mp.cos(angle) - K.real * mp.sin(angle)))


def asymptotic_C(l: int, N: int, sd: SaddleData) -> AsymptoticValue:
    """Main term b^N N^{-l-1} H_l(N) of the coefficient asymptotics."""
    if l < 1 or N < 1:
        raise ValueError("l and N must be positive integers")
    with mp.workprec(sd.precision + _GUARD):
        h = H(l, N, sd)
        main = sd.b ** N * mp.mpf(N) ** (-l - 1) * h
        return AsymptoticValue(N=int(N), l=int(l), main_term=mp.mpf(main), H_value=h)


def argument_principle_count(
    center=DEFAULT_INITIAL, radius=1.0, precision: int = 128, nodes: int = 128
) -> int:
    """Number of roots of phi inside the given circle.

    Trapezoid rule on (1/2 pi i) times the integral of phi'/phi; the
    integrand is analytic and periodic along the circle so convergence
    is spectral.  The result is rounded to the nearest integer.
    """
    with mp.workprec(precision + _GUARD):
        center = mp.mpc(center)
        radius = mp.mpf(radius)
        acc = mp.mpc(0)
        for k in range(nodes):
            w = mp.expjpi(mp.mpf(2 * k) / nodes)
            z = center + radius * w
            acc += phi_derivative(z, precision) / phi(z, precision) * radius * w
        return int(mp.nint((acc / nodes).real))
