"""Arbitrary-precision complex roots of exact integer polynomials.

Simultaneous Aberth-Ehrlich iteration on each square-free factor, with the
factor multiplicity attached afterwards, deterministic seeded initial
placement on a Cauchy-bound circle, a Newton polishing pass, and residual
error radii.  Verdicts that matter are made by the exact machinery; this
module exists for cross-checks and root-cloud output.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import mpmath as mp

from .graphs import Graph
from .polynomials import Poly, square_free_decomposition

DEFAULT_PRECISION_BITS = 256
MAX_PRECISION_BITS = 4096
DEGREE_LIMIT = 400
DEFAULT_REAL_TOLERANCE = 1e-9
_MAX_ITERATIONS = 400


class NonConvergenceError(RuntimeError):
    """Aberth iteration failed to settle; carries the partial approximations."""

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


@dataclass
class Root:
    re: mp.mpf
    im: mp.mpf
    radius: mp.mpf
    multiplicity: int = 1

    def as_complex(self) -> complex:
        return complex(float(self.re), float(self.im))

    def to_dict(self) -> dict:
        return {
            "re": mp.nstr(self.re, 25),
            "im": mp.nstr(self.im, 25),
            "radius": mp.nstr(self.radius, 8),
            "multiplicity": self.multiplicity,
        }


@dataclass
class RootSet:
    roots: list[Root]
    degree: int
    precision_bits: int

    def total_multiplicity(self) -> int:
        return sum(r.multiplicity for r in self.roots)

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "precision_bits": self.precision_bits,
            "roots": [r.to_dict() for r in self.roots],
        }


def _poly_mpf(coeffs_desc, z):
    acc = mp.mpf(0)
    for c in coeffs_desc:
        acc = acc * z + c
    return acc


def _aberth_square_free(coeffs: list[int], prec: int, seed: int):
    """Roots of a square-free integer polynomial at working precision `prec`."""
    deg = len(coeffs) - 1
    with mp.workprec(prec):
        if deg == 1:
            z = mp.mpf(-coeffs[0]) / mp.mpf(coeffs[1])
            return [(mp.mpc(z), mp.mpf(0))]
        cs = [mp.mpf(c) for c in coeffs]
        desc = list(reversed(cs))
        dcs = [k * c for k, c in enumerate(cs)][1:]
        ddesc = list(reversed(dcs))
        # Fujiwara bound: tracks the actual root magnitude far better than
        # the Cauchy bound when trailing coefficients dominate
        lead = abs(cs[-1])
        fujiwara = mp.mpf(0)
        for k in range(1, deg + 1):
            c = abs(cs[deg - k]) / (lead if k < deg else 2 * lead)
            if c > 0:
                fujiwara = max(fujiwara, c ** (mp.mpf(1) / k))
        bound = 2 * fujiwara if fujiwara > 0 else mp.mpf(1)
        rng = random.Random(seed)
        jitter = [rng.uniform(-0.12, 0.12) for _ in range(deg)]
        radius = bound * mp.mpf("0.7")
        zs = [
            radius * mp.expjpi(2 * (k + mp.mpf("0.37") + jitter[k]) / deg)
            for k in range(deg)
        ]
        eps = mp.mpf(2) ** (-(prec - 12))
        noise_floor = mp.mpf(2) ** (-(prec // 2))
        converged = False
        best = mp.mpf("inf")
        stagnant = 0
        for _ in range(_MAX_ITERATIONS):
            largest = mp.mpf(0)
            new = list(zs)
            for i, z in enumerate(zs):
                fv = _poly_mpf(desc, z)
                dv = _poly_mpf(ddesc, z)
                if dv == 0:
                    new[i] = z + eps * (1 + abs(z))
                    largest = mp.mpf("inf")
                    continue
                newton = fv / dv
                s = mp.mpc(0)
                for j, w in enumerate(zs):
                    if j != i:
                        s += 1 / (z - w)
                denom = 1 - newton * s
                step = newton if denom == 0 else newton / denom
                new[i] = z - step
                largest = max(largest, abs(step) / (1 + abs(z)))
            zs = new
            if largest <= eps:
                converged = True
                break
            # steps bottom out at the evaluation noise of the working
            # precision; accept once they stop improving well below it
            if largest < best / 2:
                best = largest
                stagnant = 0
            else:
                stagnant += 1
                if stagnant >= 6 and largest <= noise_floor:
                    converged = True
                    break
        if not converged:
            raise NonConvergenceError(
                f"Aberth iteration did not converge at {prec} bits", partial=zs
            )
        # Newton polish and residual radii
        out = []
        for z in zs:
            for _ in range(3):
                fv = _poly_mpf(desc, z)
                dv = _poly_mpf(ddesc, z)
                if dv == 0:
                    break
                z = z - fv / dv
            fv = _poly_mpf(desc, z)
            dv = _poly_mpf(ddesc, z)
            radius = mp.mpf("inf") if dv == 0 else deg * abs(fv) / abs(dv)
            out.append((z, radius))
        return out


def _pair_conjugates(items, prec):
    """Snap near-conjugate pairs so non-real roots come in exact pairs."""
    with mp.workprec(prec):
        used = [False] * len(items)
        out = []
        order = sorted(range(len(items)), key=lambda i: (items[i][0].real, abs(items[i][0].imag)))
        for i in order:
            if used[i]:
                continue
            z, r = items[i]
            if abs(z.imag) <= r:
                out.append((mp.mpc(z.real, 0), r))
                used[i] = True
                continue
            best = None
            best_d = None
            for j in order:
                if j == i or used[j]:
                    continue
                w, rw = items[j]
                d = abs(w - mp.conj(z))
                if best is None or d < best_d:
                    best, best_d = j, d
            if best is not None and best_d <= (r + items[best][1]) * 4 + mp.mpf(2) ** (-prec // 2):
                w, rw = items[best]
                avg = (z + mp.conj(w)) / 2
                rad = max(r, rw)
                out.append((avg, rad))
                out.append((mp.conj(avg), rad))
                used[i] = used[best] = True
            else:
                out.append((z, r))
                used[i] = True
        return out


def all_roots(f: Poly, precision_bits: int = DEFAULT_PRECISION_BITS, seed: int = 0) -> RootSet:
    """All complex roots of f with error radii and multiplicities.

    Deterministic given (f, precision_bits, seed).  Retries internally with
    doubled precision up to 4096 bits before giving up.
    """
    if f.degree < 1:
        raise ValueError("root finding needs degree at least 1")
    if f.degree > DEGREE_LIMIT:
        raise ValueError(f"degree {f.degree} exceeds the configured cap {DEGREE_LIMIT}")
    if precision_bits < 53:
        raise ValueError("precision must be at least 53 bits")
    if not f.is_integer():
        f = f.clear_denominators()
    factors = square_free_decomposition(f)
    prec = precision_bits
    last_exc = None
    while prec <= MAX_PRECISION_BITS:
        try:
            roots = []
            for factor, mult in factors:
                found = _aberth_square_free([int(c) for c in factor.coeffs], prec, seed)
                found = _pair_conjugates(found, prec)
                for z, radius in found:
                    roots.append(Root(z.real, z.imag, radius, mult))
            roots.sort(key=lambda r: (r.re, abs(r.im), r.im))
            return RootSet(roots=roots, degree=f.degree, precision_bits=prec)
        except NonConvergenceError as exc:
            last_exc = exc
            prec *= 2
    raise NonConvergenceError(
        f"no convergence up to {MAX_PRECISION_BITS} bits", partial=getattr(last_exc, "partial", None)
    )


def max_real_part(rs: RootSet) -> tuple[mp.mpf, Root, bool]:
    """Largest real part, its witness root, and an ambiguity flag.

    The flag is set when another root with a different real-part estimate
    could still hold the maximum once error radii are taken into account.
    """
    if not rs.roots:
        raise ValueError("empty root set")
    witness = max(rs.roots, key=lambda r: r.re)
    ambiguous = any(
        r is not witness and r.re != witness.re and r.re + r.radius >= witness.re - witness.radius
        for r in rs.roots
    )
    return witness.re, witness, ambiguous


def classify_real(rs: RootSet, tol: float = DEFAULT_REAL_TOLERANCE) -> tuple[list[Root], list[Root]]:
    """Split roots into (real, non-real) by |im| <= max(tol, radius).

    Non-real roots must close up under conjugation within error radii.
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    real, nonreal = [], []
    for r in rs.roots:
        if abs(r.im) <= max(mp.mpf(tol), r.radius):
            real.append(r)
        else:
            nonreal.append(r)
    unmatched = list(nonreal)
    while unmatched:
        r = unmatched.pop()
        partner = None
        for s in unmatched:
            if (
                abs(s.re - r.re) <= (r.radius + s.radius + mp.mpf(tol))
                and abs(s.im + r.im) <= (r.radius + s.radius + mp.mpf(tol))
                and s.multiplicity == r.multiplicity
            ):
                partner = s
                break
        if partner is None:
            raise ArithmeticError("non-real roots do not pair into conjugates")
        unmatched.remove(partner)
    return real, nonreal


def brown_bound_check(g: Graph, rs: RootSet) -> bool:
    """All roots inside |z - 1| <= bound (+ error radius), where the bound is
    the largest excess m_c - n_c + 1 over the components of g, floored at 1.

    The floor keeps the trivial roots 0 and 1 inside the disc for forests,
    where the excess is nonpositive.
    """
    bound = 1
    for comp in g.components():
        verts = [v for v in range(g.n) if (comp >> v) & 1]
        sub = g.induced(verts)
        bound = max(bound, sub.m - sub.n + 1)
    centre = mp.mpc(1, 0)
    for r in rs.roots:
        if abs(mp.mpc(r.re, r.im) - centre) > bound + r.radius:
            return False
    return True
