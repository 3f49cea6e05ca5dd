"""Hurwitz stability of exact integer polynomials, decided without floats.

A standard polynomial f splits as f(x) = even(x^2) + x * odd(x^2); it has
every root in the closed left half-plane exactly when both parts are
standard with only nonpositive real roots and the odd part interlaces the
even part.  All three conditions are certified with Sturm sequences and
root isolation, so a verdict carries a machine-checkable certificate.
Imaginary-axis roots (the quasi-stable / stable gap) are located exactly
through the gcd of the two parts.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .polynomials import (
    Poly,
    has_all_real_roots,
    interlaces,
    poly_gcd,
    real_root_count,
    sturm_sequence,
)

VERDICT_STABLE = "stable"
VERDICT_QUASI = "quasi-stable-not-stable"
VERDICT_NOT_QUASI = "not-quasi-stable"


@dataclass
class StabilityReport:
    """Verdict plus the certificate that justifies it.

    The certificate is a plain dict (JSON-ready): Sturm diagnostics and
    positive-root counts for the even/odd parts, the interlacing witness,
    and the imaginary-axis analysis.
    """

    verdict: str
    certificate: dict = field(default_factory=dict)
    shift: Fraction = Fraction(0)

    @property
    def quasi_stable(self) -> bool:
        return self.verdict != VERDICT_NOT_QUASI

    @property
    def stable(self) -> bool:
        return self.verdict == VERDICT_STABLE

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "shift": str(self.shift),
            "certificate": self.certificate,
        }


def _part_report(name: str, part: Poly) -> tuple[bool, dict]:
    """Standardness, real-rootedness and nonpositivity of one split part."""
    info: dict = {"name": name, "degree": part.degree}
    if part.is_zero():
        info["zero"] = True
        return True, info
    if part.lc <= 0:
        info["failure"] = "negative leading coefficient"
        return False, info
    if part.degree >= 1:
        real, diag = has_all_real_roots(part)
        info["sturm"] = diag.to_dict()
        if not real:
            info["failure"] = "not real-rooted"
            return False, info
        positive_roots = real_root_count(part, 0, None)
        info["positive_root_count"] = positive_roots
        if positive_roots:
            info["failure"] = "positive real root"
            return False, info
    return True, info


def analyze_stability(f: Poly) -> StabilityReport:
    """Full three-way verdict for a standard integer polynomial of degree >= 1."""
    if f.degree < 1:
        raise ValueError("stability analysis needs degree at least 1")
    if f.lc <= 0:
        raise ValueError("polynomial must be standard (positive leading coefficient)")
    even, odd = f.even_odd_split()
    cert: dict = {}
    ok_even, info_even = _part_report("even", even)
    ok_odd, info_odd = _part_report("odd", odd)
    cert["even_part"] = info_even
    cert["odd_part"] = info_odd
    if not (ok_even and ok_odd):
        return StabilityReport(VERDICT_NOT_QUASI, cert)
    inter = interlaces(odd, even)
    cert["interlacing"] = inter.to_dict()
    if not inter.ok:
        return StabilityReport(VERDICT_NOT_QUASI, cert)
    # quasi-stable; now locate imaginary-axis roots exactly
    axis: dict = {}
    root_at_zero = f.coeffs[0] == 0
    axis["root_at_zero"] = root_at_zero
    common = poly_gcd(even, odd)
    axis["common_factor_degree"] = max(common.degree, 0)
    pair = False
    if common.degree >= 1:
        # a shared root t0 <= 0 of the split parts puts a conjugate pair at
        # +/- i*sqrt(-t0) on the axis
        pair = real_root_count(common, None, 0) > 0
    axis["axis_pair"] = pair
    cert["imaginary_axis"] = axis
    if root_at_zero or pair:
        return StabilityReport(VERDICT_QUASI, cert)
    return StabilityReport(VERDICT_STABLE, cert)


def is_quasi_stable(f: Poly) -> StabilityReport:
    """Every root has real part <= 0?  (Report verdict distinguishes further.)"""
    return analyze_stability(f)


def is_stable(f: Poly) -> StabilityReport:
    """Every root has real part < 0?"""
    return analyze_stability(f)


def low_degree_stable(f: Poly) -> bool:
    """Closed-form stability test for degrees 1..3.

    Linear/quadratic: all coefficients share one sign.  Cubic with positive
    leading coefficient A: the other coefficients B, C, D are positive and
    B*C > A*D.
    """
    d = f.degree
    if not 1 <= d <= 3:
        raise ValueError("closed-form test covers degrees 1..3")
    coeffs = list(f.coeffs)
    if coeffs[-1] < 0:
        coeffs = [-c for c in coeffs]
    if d <= 2:
        return all(c > 0 for c in coeffs)
    a, b, c0, d0 = coeffs[3], coeffs[2], coeffs[1], coeffs[0]
    return b > 0 and c0 > 0 and d0 > 0 and b * c0 > a * d0


def stability_at_shift(f: Poly, c) -> StabilityReport:
    """Stability analysis of f(x + c) for rational c.

    Not-quasi-stable means some root of f has real part greater than c;
    quasi-stable means every root has real part at most c.
    """
    c = Fraction(c)
    shifted = f.shift(c).clear_denominators()
    report = analyze_stability(shifted)
    report.shift = c
    return report


# -- complete-bipartite instability indicator ------------------------------------------


def sturm_remainder_indicator(p: int, q: int) -> int:
    """2n*a_{n-4} - (n-2)*a_{n-2}^2 for the shifted bipartite polynomial.

    Built from the closed-form coefficient magnitudes of pi(K_{p,q}) through
    the shift-by-p coefficient identities.  A positive value certifies that
    the second Sturm remainder of the even split part has negative leading
    coefficient (for even n, barring degree collapse), which refutes
    real-rootedness and hence quasi-stability of pi(K_{p,q}, x + p).
    """
    if p < 2 or q < 2:
        raise ValueError("defined for p, q >= 2")
    n = p + q
    h1 = p * q
    h2 = comb(p * q, 2)
    h3 = comb(p * q, 3) - comb(q, 2) * comb(p, 2)
    h4 = (
        comb(p * q, 4)
        - (p * q - 3) * comb(q, 2) * comb(p, 2)
        + comb(q, 2) * (comb(p, 3) if p >= 3 else 0)
        + comb(p, 2) * (comb(q, 3) if q >= 3 else 0)
    )
    a2 = comb(n, 2) * p**2 - (n - 1) * p * h1 + h2
    a4 = (
        comb(n, 4) * p**4
        - comb(n - 1, 3) * p**3 * h1
        + comb(n - 2, 2) * p**2 * h2
        - (n - 3) * p * h3
        + h4
    )
    return 2 * n * a4 - (n - 2) * a2 * a2


def sturm_remainder_indicator_quartic(p: int, q: int) -> Fraction:
    """The same indicator evaluated as an explicit quartic in q.

    The coefficients are polynomials in p with leading term p(p-1)/6 on q^4,
    so the value is eventually positive in q for every fixed p >= 2.
    """
    if p < 2 or q < 2:
        raise ValueError("defined for p, q >= 2")
    P = Fraction(p)
    c4 = P**2 / 6 - P / 6
    c3 = P**4 / 2 - 5 * P**3 / 3 + 11 * P**2 / 6 - 2 * P / 3
    c2 = -5 * P**5 / 6 + 5 * P**4 / 3 - 5 * P**3 / 6 - P**2 / 3 + P / 3
    c1 = -(P**8) / 6 + P**6 / 3 + P**5 / 2 - 5 * P**4 / 6 - P**3 / 6 + P**2 / 3
    c0 = -(P**9) / 6 + P**8 / 2 - P**7 / 3
    q = Fraction(q)
    return ((c4 * q + c3) * q + c2) * q**2 + c1 * q + c0


def raw_even_part_sturm(f: Poly) -> list[Poly]:
    """Unscaled rational Sturm sequence of the even split part.

    Exposed so the leading coefficient of the second remainder can be read
    off literally and compared against the indicator value.
    """
    even, _ = f.even_odd_split()
    return sturm_sequence(even, primitive=False)
