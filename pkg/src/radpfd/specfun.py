"""High-precision complex special functions on explicit precision budgets.

Everything the analytic side of the package needs: the dilogarithm on the
closed unit disk, the Hurwitz zeta function for Re s > 1, the negative-order
polylogarithm Li_{1-s}(e^z) through its Hurwitz-zeta representation, and the
saddle function

    phi(z) = log(1 - e^z) + (Li2(e^z) - pi^2/6) / z

together with its derivative.  Precision is always an explicit argument in
mantissa bits, never ambient mpmath state; internally each routine works at
precision + 32 guard bits.  Functions returning an EvalResult report an
upper bound on their truncation error alongside the value.
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath as mp

__all__ = [
    "EvalResult",
    "dilog",
    "hurwitz_zeta",
    "polylog_jonquiere",
    "phi",
    "phi_derivative",
]

_GUARD = 32


@dataclass(frozen=True)
class EvalResult:
    value: mp.mpc
    error_estimate: mp.mpf  # upper bound on the truncation error


def _check_precision(precision):
    if precision < 64:
        raise ValueError("precision must be at least 64 bits")


def _pi2_over_6():
    return mp.pi**2 / 6


def _series_li2(u, precision):
    """Direct series sum_{k>=1} u^k / k^2 at the ambient working precision.

    Stops once a term drops below 2^-(precision+8) of the accumulated
    modulus; callers guarantee |u| is bounded away from 1 so the tail is
    geometric.
    """
    if u == 0:
        return mp.mpc(0)
    cutoff = mp.mpf(2) ** (-(precision + 8))
    acc = mp.mpc(0)
    power = mp.mpc(1)
    for k in range(1, 64 * (precision + 64)):
        power *= u
        term = power / (k * k)
        acc += term
        if abs(term) < cutoff * abs(acc):
            return acc
    raise RuntimeError("dilogarithm series failed to converge")


def _dilog_value(w, precision, depth=0):
    if w == 0:
        return mp.mpc(0)
    if w == 1:
        return mp.mpc(_pi2_over_6())
    m_direct = abs(w)
    m_reflect = abs(1 - w)
    m_landen = abs(w / (w - 1))
    best = min(m_direct, m_reflect, m_landen)
    if best > mp.mpf("0.75") and depth < 4:
        # Near w = e^(+-i pi/3) all three routes degenerate toward
        # modulus 1; the square relation Li2(w) = Li2(w^2)/2 - Li2(-w)
        # maps both children to well-conditioned regions.
        return _dilog_value(w * w, precision, depth + 1) / 2 - _dilog_value(
            -w, precision, depth + 1
        )
    if best == m_direct:
        return _series_li2(w, precision)
    if best == m_reflect:
        return (
            _pi2_over_6()
            - mp.log(w) * mp.log(1 - w)
            - _series_li2(1 - w, precision)
        )
    return -_series_li2(w / (w - 1), precision) - mp.log(1 - w) ** 2 / 2


def dilog(w, precision: int = 256) -> EvalResult:
    """Li2(w) on the closed unit disk, |w| <= 1."""
    _check_precision(precision)
    with mp.workprec(precision + _GUARD):
        w = mp.mpc(w)
        # Unit-circle inputs computed as exp(i y) may overshoot |w| = 1
        # by a rounding ulp; only genuine exterior points are rejected.
        if abs(w) > 1 + mp.mpf(2) ** (-(precision - 8)):
            raise ValueError("outside supported domain: |w| > 1")
        value = _dilog_value(w, precision)
        err = (abs(value) + mp.mpf(2) ** (-precision)) * mp.mpf(2) ** (
            -(precision - 8)
        )
        return EvalResult(value=value, error_estimate=mp.mpf(err))


def hurwitz_zeta(s, q, precision: int = 256) -> EvalResult:
    """sum_{n>=0} (q + n)^{-s} for Re s > 1 by Euler-Maclaurin summation.

    The shift q may sit on the imaginary axis (Re q >= 0, q != 0), which
    is where the polylogarithm representation puts it for real z.
    """
    _check_precision(precision)
    work = precision + _GUARD
    with mp.workprec(work):
        s = mp.mpc(s)
        q = mp.mpc(q)
        if s.real <= 1:
            raise ValueError("outside convergence region: Re s <= 1")
        if q == 0 or q.real < 0:
            raise ValueError("shift must satisfy Re q >= 0, q != 0")
        target = mp.mpf(2) ** (-(precision + 8))
        M = max(16, int(0.2 * work) + 8, int(abs(q.imag)) + 8)
        for _ in range(8):
            value, err, ok = _euler_maclaurin(s, q, M, target)
            if ok:
                return EvalResult(value=value, error_estimate=err)
            M *= 2
    raise RuntimeError("Euler-Maclaurin tail failed to converge")


def _euler_maclaurin(s, q, M, target):
    # Direct block: sum_{n<M} (q+n)^{-s}
    head = mp.mpc(0)
    for n in range(M):
        head += (q + n) ** (-s)
    qM = q + M
    tail = qM ** (1 - s) / (s - 1) + qM ** (-s) / 2
    # Correction terms B_{2j}/(2j)! * (s)_{2j-1} * (q+M)^{-s-2j+1}
    poch = s  # (s)_1
    power = qM ** (-s - 1)
    inv2 = qM ** (-2)
    acc = head + tail
    prev = mp.inf
    for j in range(1, 8 * M):
        term = mp.bernoulli(2 * j) / mp.factorial(2 * j) * poch * power
        acc += term
        t = abs(term)
        if t < target * abs(acc):
            # Remainder is bounded by a small multiple of the first
            # omitted term for Re(q+M) > 0.
            err = 4 * t + abs(acc) * target
            return acc, mp.mpf(err), True
        if t > prev:
            return acc, mp.mpf(t), False
        prev = t
        poch *= (s + 2 * j - 1) * (s + 2 * j)
        power *= inv2
    return acc, mp.mpf(prev), False


_I_POWERS = (1, 1j, -1, -1j)


def polylog_jonquiere(s, z, precision: int = 256) -> EvalResult:
    """Li_{1-s}(e^z) through the Hurwitz-zeta representation

        Li_{1-s}(e^z) = Gamma(s)/(2 pi)^s * ( i^s  zeta(s, 1/2 + log(-e^z)/(2 pi i))
                                            + i^-s zeta(s, 1/2 - log(-e^z)/(2 pi i)) )

    for integer s >= 2 and z in the strip Re z <= 0, |Im z| < 8, bounded
    away from 0 and +-2 pi i.  Gamma(s) is just (s-1)!; complex order is
    out of scope.
    """
    _check_precision(precision)
    work = precision + _GUARD
    with mp.workprec(work):
        s_c = mp.mpc(s)
        s_int = int(mp.nint(s_c.real))
        if s_c != s_int or s_int < 2:
            raise ValueError("only integer s >= 2 is supported")
        z = mp.mpc(z)
        if z.real > 0:
            raise ValueError("outside supported strip: Re z > 0")
        if abs(z.imag) >= 8:
            raise ValueError("outside supported strip: |Im z| >= 8")
        margin = mp.mpf(1) / 16
        if abs(z) < margin or abs(z - 2j * mp.pi) < margin or abs(z + 2j * mp.pi) < margin:
            raise ValueError("outside supported strip: too close to a singular point")
        L = mp.log(-mp.exp(z))  # principal branch
        shift = L / (2j * mp.pi)
        zp = hurwitz_zeta(s_int, mp.mpf(1) / 2 + shift, precision)
        zm = hurwitz_zeta(s_int, mp.mpf(1) / 2 - shift, precision)
        pref = mp.factorial(s_int - 1) / (2 * mp.pi) ** s_int
        value = pref * (
            _I_POWERS[s_int % 4] * zp.value + _I_POWERS[(-s_int) % 4] * zm.value
        )
        err = pref * (zp.error_estimate + zm.error_estimate) + abs(value) * mp.mpf(
            2
        ) ** (-(precision + 8))
        return EvalResult(value=value, error_estimate=mp.mpf(err))


def _domain_check(z):
    if z == 0:
        raise ValueError("singular at z = 0")
    if z.real > 0:
        raise ValueError("outside domain: Re z > 0")


def phi(z, precision: int = 256) -> mp.mpc:
    """The saddle function log(1 - e^z) + (Li2(e^z) - pi^2/6)/z."""
    _check_precision(precision)
    with mp.workprec(precision + _GUARD):
        z = mp.mpc(z)
        _domain_check(z)
        ez = mp.exp(z)
        u = 1 - ez
        if u == 0:
            raise ValueError("singular: e^z = 1")
        if u.imag == 0 and u.real < 0:
            # Unreachable for Re z <= 0 (there Re(1 - e^z) >= 0); kept as
            # a branch-cut guard.
            raise ValueError("log branch cut: 1 - e^z is negative real")
        li = _dilog_value(ez, precision)
        return mp.log(u) + (li - _pi2_over_6()) / z


def phi_derivative(z, precision: int = 256) -> mp.mpc:
    """d/dz of phi, using d/dz Li2(e^z) = -log(1 - e^z)."""
    _check_precision(precision)
    with mp.workprec(precision + _GUARD):
        z = mp.mpc(z)
        _domain_check(z)
        ez = mp.exp(z)
        u = 1 - ez
        if u == 0:
            raise ValueError("singular: e^z = 1")
        if u.imag == 0 and u.real < 0:
            raise ValueError("log branch cut: 1 - e^z is negative real")
        li = _dilog_value(ez, precision)
        return -ez / u - mp.log(u) / z - (li - _pi2_over_6()) / z**2
