"""Comparison tables, peak analysis, and serialization.

Builds per-N rows holding the exact coefficient next to its asymptotic
and integral approximations, finds the peaks of |C(N, l)| that witness
the oscillating exponential growth, and serializes everything as CSV or
JSON deterministically: the same configuration always produces the same
bytes, and parsing an emitted CSV and re-emitting it is the identity.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import mpmath as mp

from .contour import arc_spec, integral_approx_C
from .exact import (
    coefficient_range,
    decimal_str,
    float_coefficients,
    parse_rational,
    rational_str,
)
from .saddle import SaddleData, asymptotic_C, saddle_constants, solve_saddle

__all__ = [
    "ComparisonRow",
    "RunConfig",
    "DisproofReport",
    "CSV_HEADER",
    "build_rows",
    "emit_csv",
    "parse_csv",
    "emit_json",
    "find_peaks",
    "analyze_divergence",
    "magnitude_series",
    "figure_configs",
]

CSV_HEADER = "N,l,exact_rational,exact_decimal,asymptotic,integral,abs_err_asym,rel_err_asym"

_FORMATS = ("csv", "json", "svg")
_MODES = ("exact", "asymptotic", "integral")


@dataclass(frozen=True)
class ComparisonRow:
    N: int
    l: int
    exact: Optional[Fraction]
    exact_decimal: str  # empty when the exact mode was skipped
    asymptotic: Optional[mp.mpf]
    integral: Optional[mp.mpf]
    abs_err_asym: Optional[mp.mpf]
    rel_err_asym: Optional[mp.mpf]


@dataclass(frozen=True)
class RunConfig:
    precision_bits: int = 256
    n_from: int = 1
    n_to: int = 1
    l: int = 1
    output_format: str = "csv"
    modes: frozenset = frozenset({"exact", "asymptotic"})

    def __post_init__(self):
        if self.n_from > self.n_to:
            raise ValueError("empty range: n_from > n_to")
        if self.precision_bits < 64:
            raise ValueError("precision must be at least 64 bits")
        if self.l < 1:
            raise ValueError("l must be a positive integer")
        if self.output_format not in _FORMATS:
            raise ValueError(f"unknown output format {self.output_format!r}")
        if not self.modes:
            raise ValueError("modes must be nonempty")
        for m in self.modes:
            if m not in _MODES:
                raise ValueError(f"unknown mode {m!r}")


@dataclass(frozen=True)
class DisproofReport:
    l: int
    n_from: int
    n_to: int
    peaks: tuple  # (N, magnitude) pairs
    spacings: tuple
    ratios: tuple
    growth: Optional[mp.mpf]  # last peak magnitude / first peak magnitude
    threshold: Optional[mp.mpf]  # expected exponential factor over the same span
    verdict: str


def _to_mpf(q: Fraction, precision: int) -> mp.mpf:
    with mp.workprec(precision):
        return mp.mpf(q.numerator) / q.denominator


def build_rows(
    cfg: RunConfig,
    sd: Optional[SaddleData] = None,
    float_exact: bool = False,
    integral_nodes: int = 64,
):
    """One ComparisonRow per N in [n_from, n_to] for the configured l.

    Exact values for the whole range come from a single incremental
    product sweep; rows where l > N leave the exact cells empty (no such
    coefficient exists).  float_exact switches the exact pipeline to its
    high-precision floating twin, for ranges where rationals are too slow.
    """
    want_exact = "exact" in cfg.modes
    want_asym = "asymptotic" in cfg.modes
    want_int = "integral" in cfg.modes
    prec = cfg.precision_bits
    if want_asym and sd is None:
        sd = saddle_constants(solve_saddle(prec), prec)

    exact_vectors = {}
    if want_exact and not float_exact:
        for vec in coefficient_range(cfg.n_from, cfg.n_to):
            exact_vectors[vec.N] = vec

    spec = arc_spec(nodes=integral_nodes, precision=prec) if want_int else None

    rows = []
    for N in range(cfg.n_from, cfg.n_to + 1):
        exact_q = None
        exact_dec = ""
        exact_val = None
        if want_exact and cfg.l <= N:
            if float_exact:
                exact_val = float_coefficients(N, prec)[cfg.l - 1]
                exact_dec = mp.nstr(exact_val, 17)
            else:
                exact_q = exact_vectors[N].coeff(cfg.l)
                exact_dec = decimal_str(exact_q)
                exact_val = _to_mpf(exact_q, prec + 32)
        asym = None
        abs_err = None
        rel_err = None
        if want_asym:
            asym = asymptotic_C(cfg.l, N, sd).main_term
            if exact_val is not None:
                with mp.workprec(prec + 32):
                    abs_err = abs(exact_val - asym)
                    if exact_val != 0:
                        rel_err = abs_err / abs(exact_val)
        integ = integral_approx_C(cfg.l, N, spec) if want_int else None
        rows.append(
            ComparisonRow(
                N=N,
                l=cfg.l,
                exact=exact_q,
                exact_decimal=exact_dec,
                asymptotic=asym,
                integral=integ,
                abs_err_asym=abs_err,
                rel_err_asym=rel_err,
            )
        )
    return rows


def _cell(x) -> str:
    if x is None:
        return ""
    return mp.nstr(x, 17)


def emit_csv(rows) -> str:
    lines = [CSV_HEADER]
    for r in rows:
        lines.append(
            ",".join(
                [
                    str(r.N),
                    str(r.l),
                    rational_str(r.exact) if r.exact is not None else "",
                    r.exact_decimal,
                    _cell(r.asymptotic),
                    _cell(r.integral),
                    _cell(r.abs_err_asym),
                    _cell(r.rel_err_asym),
                ]
            )
        )
    return "\n".join(lines) + "\n"


def _parse_cell(s: str) -> Optional[mp.mpf]:
    if s == "":
        return None
    with mp.workprec(80):
        return mp.mpf(s)


def parse_csv(text: str):
    """Inverse of emit_csv; emit(parse(emit(rows))) is byte-identical."""
    lines = text.strip("\n").split("\n")
    if not lines or lines[0] != CSV_HEADER:
        raise ValueError("unrecognized CSV header")
    rows = []
    for line in lines[1:]:
        parts = line.split(",")
        if len(parts) != 8:
            raise ValueError(f"malformed row: {line!r}")
        rows.append(
            ComparisonRow(
                N=int(parts[0]),
                l=int(parts[1]),
                exact=parse_rational(parts[2]) if parts[2] else None,
                exact_decimal=parts[3],
                asymptotic=_parse_cell(parts[4]),
                integral=_parse_cell(parts[5]),
                abs_err_asym=_parse_cell(parts[6]),
                rel_err_asym=_parse_cell(parts[7]),
            )
        )
    return rows


def emit_json(rows) -> str:
    payload = []
    for r in rows:
        payload.append(
            {
                "N": r.N,
                "l": r.l,
                "exact_rational": rational_str(r.exact) if r.exact is not None else "",
                "exact_decimal": r.exact_decimal,
                "asymptotic": _cell(r.asymptotic),
                "integral": _cell(r.integral),
                "abs_err_asym": _cell(r.abs_err_asym),
                "rel_err_asym": _cell(r.rel_err_asym),
            }
        )
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def find_peaks(series):
    """Local maxima of a magnitude sequence [(N, magnitude), ...].

    A peak is strictly greater than its left neighbor and at least its
    right neighbor, so a flat run of equal maxima credits its leftmost
    point.  Endpoints never qualify.
    """
    peaks = []
    for i in range(1, len(series) - 1):
        if series[i][1] > series[i - 1][1] and series[i][1] >= series[i + 1][1]:
            peaks.append(series[i])
    return peaks


def analyze_divergence(series, b, p, l: int = 1) -> DisproofReport:
    """Peak statistics and a divergence verdict for a magnitude series.

    The asymptotics predicts one extremum pattern repeating every p with
    magnitudes scaled by b^p each period, i.e. growth b per unit N.  The
    verdict is "diverges" when the observed end-to-end peak growth
    exceeds b^(span/2), half the predicted exponent: enough margin for
    the slowly converging amplitude while still rejecting any bounded
    sequence.  Fewer than two peaks, or shrinking peaks, give "no
    divergence detected".
    """
    if not series:
        raise ValueError("empty series")
    n_from, n_to = series[0][0], series[-1][0]
    if n_to - n_from < 2 * p:
        raise ValueError("range too short: need at least two oscillation periods")
    peaks = find_peaks(series)
    spacings = tuple(peaks[i + 1][0] - peaks[i][0] for i in range(len(peaks) - 1))
    with mp.workprec(96):
        ratios = tuple(
            mp.mpf(peaks[i + 1][1]) / mp.mpf(peaks[i][1])
            for i in range(len(peaks) - 1)
            if peaks[i][1] != 0
        )
        growth = None
        threshold = None
        verdict = "no divergence detected"
        if len(peaks) >= 2 and peaks[0][1] != 0:
            span = peaks[-1][0] - peaks[0][0]
            growth = mp.mpf(peaks[-1][1]) / mp.mpf(peaks[0][1])
            threshold = mp.mpf(b) ** (mp.mpf(span) / 2)
            if growth > threshold:
                verdict = "diverges"
    return DisproofReport(
        l=l,
        n_from=n_from,
        n_to=n_to,
        peaks=tuple(peaks),
        spacings=spacings,
        ratios=ratios,
        growth=growth,
        threshold=threshold,
        verdict=verdict,
    )


def magnitude_series(n_from: int, n_to: int, l: int = 1, precision: int = 256):
    """[(N, |C(N, l)|), ...] over a range, one incremental sweep."""
    out = []
    with mp.workprec(precision):
        for vec in coefficient_range(max(n_from, l), n_to):
            out.append((vec.N, abs(_to_mpf(vec.coeff(l), precision))))
    return out


def figure_configs(precision: int = 256):
    """The three standard figure datasets as (filename stem, RunConfig,
    integral node count) triples: l = 1 and l = 2 exact-vs-asymptotic
    over N = 100..150, and l = 1 exact-vs-integral over N = 1..70."""
    overlay = frozenset({"exact", "asymptotic"})
    return (
        ("fig1", RunConfig(precision, 100, 150, 1, "csv", overlay), 64),
        ("fig2", RunConfig(precision, 100, 150, 2, "csv", overlay), 64),
        (
            "fig3",
            RunConfig(precision, 1, 70, 1, "csv", frozenset({"exact", "integral"})),
            64,
        ),
    )
