"""Exact dense univariate polynomial arithmetic over the integers and rationals.

Coefficients are stored lowest power first with no trailing zeros; the zero
polynomial has an empty coefficient tuple.  Integer inputs stay integer
through ring operations; division and Sturm machinery promote to Fraction
and renormalise back to primitive integer form where that provably
preserves every sign and degree the callers read.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from fractions import Fraction


def _norm_scalar(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    if isinstance(c, bool):
        return int(c)
    return c


class Poly:
    """Immutable dense polynomial with exact (int or Fraction) coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_norm_scalar(Fraction(c) if isinstance(c, str) else c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("Poly is immutable")

    # -- basics --------------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self):
        """Leading coefficient (0 for the zero polynomial)."""
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_integer(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def __eq__(self, other):
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            term = "" if (abs(c) == 1 and k > 0) else str(abs(c))
            if k >= 2:
                term += f"x^{k}"
            elif k == 1:
                term += "x"
            parts.append(("- " if c < 0 else "+ " if parts else "") + term)
        return " ".join(parts)

    # -- ring operations -------------------------------------------------------

    def __add__(self, other):
        other = other if isinstance(other, Poly) else Poly([other])
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = _norm_scalar(out[i] + c)
        return Poly(out)

    def __radd__(self, other):
        return self + other

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = other if isinstance(other, Poly) else Poly([other])
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return Poly([_norm_scalar(c * other) for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Poly([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other: "Poly"):
        """Exact rational division with remainder."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly(), self
        quo = [0] * (dq + 1)
        olc = other.coeffs[-1]
        for k in range(dq, -1, -1):
            top = rem[k + len(other.coeffs) - 1]
            if top == 0:
                continue
            c = _norm_scalar(Fraction(top) / Fraction(olc))
            quo[k] = c
            for i, oc in enumerate(other.coeffs):
                rem[k + i] = _norm_scalar(rem[k + i] - c * oc)
        return Poly(quo), Poly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError("division was expected to be exact")
        return q

    # -- calculus / evaluation ---------------------------------------------------

    def derivative(self) -> "Poly":
        return Poly([_norm_scalar(k * c) for k, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return _norm_scalar(acc) if isinstance(acc, Fraction) else acc

    def sign_at(self, x) -> int:
        """Sign of the value at x; x may be +/- math.inf."""
        if self.is_zero():
            return 0
        if x == math.inf:
            return 1 if self.lc > 0 else -1
        if x == -math.inf:
            s = 1 if self.lc > 0 else -1
            return s if self.degree % 2 == 0 else -s
        v = self(x)
        return (v > 0) - (v < 0)

    # -- transforms ---------------------------------------------------------------

    def shift(self, c) -> "Poly":
        """Taylor shift: returns the polynomial x -> f(x + c), exactly."""
        if c == 0 or self.is_zero():
            return self
        out = list(self.coeffs)
        n = len(out)
        for i in range(n - 1):
            for j in range(n - 2, i - 1, -1):
                out[j] = _norm_scalar(out[j] + c * out[j + 1])
        return Poly(out)

    def even_odd_split(self) -> tuple["Poly", "Poly"]:
        """Even/odd split: f(x) = even(x^2) + x * odd(x^2)."""
        return Poly(self.coeffs[0::2]), Poly(self.coeffs[1::2])

    def to_falling_factorial(self) -> list:
        """Coefficients a_0..a_deg with f = sum a_i * x(x-1)...(x-i+1).

        Computed by repeated synthetic division by x, x-1, x-2, ...
        """
        out = []
        work = self
        root = 0
        while not work.is_zero():
            out.append(work(root))
            work = (work - out[-1]).exact_div(Poly([-root, 1]))
            root += 1
        return out if out else [0]

    @staticmethod
    def from_falling_factorial(coeffs) -> "Poly":
        acc = Poly()
        for k in range(len(coeffs) - 1, -1, -1):
            acc = acc * Poly([-k, 1]) + Poly([coeffs[k]])
        return acc

    # -- integer normalisation ------------------------------------------------------

    def content(self):
        """Positive rational c with self = c * primitive-integer polynomial."""
        if self.is_zero():
            return Fraction(1)
        num = 0
        den = 1
        for c in self.coeffs:
            f = Fraction(c)
            num = math.gcd(num, abs(f.numerator))
            den = den * f.denominator // math.gcd(den, f.denominator)
        return Fraction(num, den)

    def primitive(self) -> "Poly":
        """Primitive integer polynomial with the same sign pattern."""
        if self.is_zero():
            return self
        c = self.content()
        return Poly([int(Fraction(x) / c) for x in self.coeffs])

    def clear_denominators(self) -> "Poly":
        """Integer polynomial: self multiplied by the positive lcm of denominators."""
        den = 1
        for c in self.coeffs:
            d = Fraction(c).denominator
            den = den * d // math.gcd(den, d)
        return Poly([_norm_scalar(c * den) for c in self.coeffs])

    # -- serialization -----------------------------------------------------------------

    def coefficient_strings(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    def to_json(self) -> str:
        return json.dumps(self.coefficient_strings())

    @staticmethod
    def from_json(text: str) -> "Poly":
        return Poly(json.loads(text))


X = Poly([0, 1])


# -- gcd / square-free machinery ---------------------------------------------------


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Greatest common divisor, returned primitive with positive leading coefficient."""
    a, b = f.primitive(), g.primitive()
    while not b.is_zero():
        a, b = b, (a % b).primitive()
    if a.is_zero():
        return a
    return a if a.lc > 0 else -a


def square_free_part(f: Poly) -> Poly:
    """f divided by gcd(f, f'), primitive, keeping the sign of the leading coefficient."""
    if f.degree < 1:
        return f.primitive()
    g = poly_gcd(f, f.derivative())
    sf = f.exact_div(g).primitive()
    if (sf.lc > 0) != (f.lc > 0):
        sf = -sf
    return sf


def square_free_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm: [(g_k, k)] with f = lc * prod g_k^k, g_k primitive, squarefree."""
    if f.degree < 1:
        return []
    work = f.primitive()
    out = []
    g = poly_gcd(work, work.derivative())
    c = work.exact_div(g)
    d = work.derivative().exact_div(g) - c.derivative()
    k = 1
    while True:
        if c.degree < 1:
            break
        a = poly_gcd(c, d)
        if a.degree >= 1:
            out.append((a, k))
        c = c.exact_div(a)
        d = d.exact_div(a) - c.derivative()
        k += 1
    return out


# -- Sturm sequences ------------------------------------------------------------------


@dataclass(frozen=True)
class SturmDiagnostic:
    """Degrees and leading-coefficient signs of a Sturm sequence, plus the
    first violation of the all-real-roots pattern, if any.

    `gap_index` points at the first member whose degree drops by more than
    one (an early zero remainder counts as a gap at the position after the
    last member); `negative_leading_index` at the first negative leading
    coefficient.
    """

    degrees: tuple[int, ...]
    leading_signs: tuple[int, ...]
    gap_index: int | None
    negative_leading_index: int | None

    @property
    def clean(self) -> bool:
        return self.gap_index is None and self.negative_leading_index is None

    def to_dict(self) -> dict:
        return {
            "degrees": list(self.degrees),
            "leading_signs": list(self.leading_signs),
            "gap_index": self.gap_index,
            "negative_leading_index": self.negative_leading_index,
        }


def sturm_sequence(f: Poly, primitive: bool = True) -> list[Poly]:
    """Sturm sequence f, f', then negated remainders, ending at the last nonzero member.

    With `primitive` (the default) each member is rescaled by a positive
    rational to primitive integer form, which preserves all signs and
    degrees; pass primitive=False for the raw rational sequence.
    """
    if f.degree < 1:
        raise ValueError("Sturm sequence needs positive degree")
    seq = [f.primitive() if primitive else f]
    d = f.derivative()
    seq.append(d.primitive() if primitive else d)
    while True:
        rem = seq[-2] % seq[-1]
        if rem.is_zero():
            break
        rem = -rem
        seq.append(rem.primitive() if primitive else rem)
    return seq


def sturm_diagnostic(seq: list[Poly]) -> SturmDiagnostic:
    degrees = tuple(p.degree for p in seq)
    signs = tuple(1 if p.lc > 0 else -1 for p in seq)
    gap = None
    for i in range(1, len(seq)):
        if degrees[i] < degrees[i - 1] - 1:
            gap = i
            break
    if gap is None and degrees[-1] > 0:
        gap = len(seq)  # sequence ended early: nonzero gcd swallowed the tail
    neg = None
    for i, s in enumerate(signs):
        if s < 0:
            neg = i
            break
    return SturmDiagnostic(degrees, signs, gap, neg)


def has_all_real_roots(f: Poly) -> tuple[bool, SturmDiagnostic]:
    """Whether every complex root of f is real, plus the raw-sequence diagnostic.

    Decided via the Sturm no-gap / no-negative-leading criterion on the
    square-free part; inputs must be standard (positive leading coefficient).
    """
    if f.degree < 1:
        raise ValueError("needs positive degree")
    if f.lc <= 0:
        raise ValueError("polynomial must have positive leading coefficient")
    raw = sturm_diagnostic(sturm_sequence(f))
    sf = square_free_part(f)
    if sf.degree == raw.degrees[0]:
        return raw.clean, raw
    verdict = sturm_diagnostic(sturm_sequence(sf)).clean if sf.degree >= 1 else True
    return verdict, raw


def _sign_variations(values) -> int:
    signs = [v for v in values if v != 0]
    return sum(1 for a, b in itertools.pairwise(signs) if a * b < 0)


def real_root_count(f: Poly, lower=None, upper=None) -> int:
    """Number of distinct real roots of f in the half-open interval (lower, upper].

    Endpoints are exact rationals; None means -infinity / +infinity.
    """
    if f.is_zero():
        raise ValueError("zero polynomial")
    if f.degree < 1:
        return 0
    sf = square_free_part(f)
    if sf.degree < 1:
        return 0
    seq = sturm_sequence(sf)
    lo = -math.inf if lower is None else lower
    hi = math.inf if upper is None else upper
    v_lo = _sign_variations([p.sign_at(lo) for p in seq])
    v_hi = _sign_variations([p.sign_at(hi) for p in seq])
    count = v_lo - v_hi
    assert count >= 0
    return count


def cauchy_root_bound(f: Poly) -> Fraction:
    """Rational B with every complex root strictly inside |z| < B."""
    if f.degree < 1:
        raise ValueError("needs positive degree")
    lc = abs(Fraction(f.lc))
    return 1 + max(abs(Fraction(c)) for c in f.coeffs[:-1]) / lc


def isolate_real_roots(f: Poly, max_width: Fraction | None = None) -> list[tuple[Fraction, Fraction]]:
    """Disjoint rational intervals, one distinct real root each.

    Input must be square-free.  Each item (a, b) either has a == b (the root
    is exactly that rational) or a < b with the root in the open interval,
    f(a) != 0 != f(b).  Intervals can be refined to any width.
    """
    if f.is_zero():
        raise ValueError("zero polynomial")
    if square_free_part(f).degree != f.degree:
        raise ValueError("input must be square-free")
    work = f
    exact: list[Fraction] = []
    while True:
        hit = None
        intervals: list[tuple[Fraction, Fraction]] = []
        if work.degree == 1:
            root = Fraction(-Fraction(work.coeffs[0]), Fraction(work.coeffs[1]))
            exact.append(root)
            work = Poly([1])
        if work.degree >= 1:
            seq = sturm_sequence(work)

            def var_at(x):
                return _sign_variations([p.sign_at(x) for p in seq])

            bound = cauchy_root_bound(work)
            stack = [(-bound, bound, var_at(-bound) - var_at(bound))]
            while stack:
                a, b, cnt = stack.pop()
                if cnt == 0:
                    continue
                if cnt == 1:
                    intervals.append((Fraction(a), Fraction(b)))
                    continue
                mid = (Fraction(a) + Fraction(b)) / 2
                if work(mid) == 0:
                    hit = mid
                    break
                vm = var_at(mid)
                stack.append((a, mid, var_at(a) - vm))
                stack.append((mid, b, vm - var_at(b)))
            if hit is not None:
                exact.append(hit)
                work = work.exact_div(Poly([-hit, 1]))
                continue
        # keep intervals clear of the deflated exact roots so that interval
        # endpoints are never roots and each closure holds exactly one root
        out = [(r, r) for r in exact]
        for iv in intervals:
            out.append(_shrink_off_points(work, iv, exact))
        break
    if max_width is not None:
        out = [refine_isolating_interval(f, iv, max_width) for iv in out]
    return sorted(out)


def _shrink_off_points(work: Poly, interval, points) -> tuple[Fraction, Fraction]:
    """Halve an isolating interval of `work` until no listed point touches its
    closure; may collapse to an exact point if a midpoint is the root."""
    a, b = interval
    while any(a <= r <= b for r in points):
        mid = (a + b) / 2
        sm = work.sign_at(mid)
        if sm == 0:
            return (mid, mid)
        if sm != work.sign_at(a):
            b = mid
        else:
            a = mid
    return (a, b)


def refine_isolating_interval(f: Poly, interval, max_width) -> tuple[Fraction, Fraction]:
    """Shrink an isolating interval below max_width by sign-test bisection."""
    a, b = Fraction(interval[0]), Fraction(interval[1])
    if a == b:
        return (a, b)
    sa = f.sign_at(a)
    if sa == 0 or f.sign_at(b) == 0:
        raise ValueError("interval endpoints must not be roots")
    while b - a > max_width:
        mid = (a + b) / 2
        sm = f.sign_at(mid)
        if sm == 0:
            return (mid, mid)
        if sm != sa:
            b = mid
        else:
            a = mid
            sa = sm
    return (a, b)


# -- interlacing -----------------------------------------------------------------------


@dataclass
class InterlacingCheck:
    """Outcome of testing whether f interlaces or alternates left of g."""

    ok: bool
    shape: str | None  # "interlaces" | "alternates-left" | None
    reason: str | None
    f_roots: list | None = None
    g_roots: list | None = None

    def to_dict(self) -> dict:
        def conv(items):
            if items is None:
                return None
            return [[str(a), str(b)] for a, b in items]

        return {
            "ok": self.ok,
            "shape": self.shape,
            "reason": self.reason,
            "f_roots": conv(self.f_roots),
            "g_roots": conv(self.g_roots),
        }


def _certified_order(f: Poly, fivs, g: Poly, givs, max_rounds: int = 200):
    """Refine the two interval lists until totally ordered across lists.

    Returns the merged list of ('f'|'g', lo, hi) sorted by position.
    Inputs must be coprime and square-free, so separation is guaranteed.
    """
    fivs = [list(map(Fraction, iv)) for iv in fivs]
    givs = [list(map(Fraction, iv)) for iv in givs]
    for _ in range(max_rounds):
        conflict = False
        for i, fi in enumerate(fivs):
            for j, gj in enumerate(givs):
                # disjoint when one closure lies strictly left of the other's interior
                if fi[1] < gj[0] or gj[1] < fi[0]:
                    continue
                if fi[0] == fi[1] and gj[0] == gj[1]:
                    continue  # distinct exact points
                conflict = True
                width = max((fi[1] - fi[0]) / 2, (gj[1] - gj[0]) / 2, Fraction(1, 2 ** 30)) / 2
                fivs[i] = list(refine_isolating_interval(f, fi, width))
                givs[j] = list(refine_isolating_interval(g, gj, width))
        if not conflict:
            merged = [("f", a, b) for a, b in fivs] + [("g", a, b) for a, b in givs]
            merged.sort(key=lambda t: (t[1], t[2]))
            return merged
    raise ArithmeticError("interval refinement failed to separate roots")


def interlaces(f: Poly, g: Poly) -> InterlacingCheck:
    """Decide f < g in the interlacing order: f interlaces g (deg g = deg f + 1)
    or f alternates left of g (equal degrees), roots interleaving.

    Both inputs must be standard (zero, or positive leading coefficient) and
    real-rooted; shared roots are handled by cancelling the gcd first.  By
    convention the check passes when either polynomial is identically zero.
    """
    for name, p in (("f", f), ("g", g)):
        if not p.is_zero() and p.lc <= 0:
            return InterlacingCheck(False, None, f"{name} is not standard")
    if f.is_zero() or g.is_zero():
        return InterlacingCheck(True, None, "zero polynomial, vacuous")
    for name, p in (("f", f), ("g", g)):
        if p.degree >= 1:
            real, diag = has_all_real_roots(p)
            if not real:
                return InterlacingCheck(False, None, f"{name} is not real-rooted")
    if g.degree == f.degree + 1:
        shape = "interlaces"
    elif g.degree == f.degree:
        shape = "alternates-left"
    else:
        return InterlacingCheck(False, None, "degree mismatch")
    d = poly_gcd(f, g)
    fr = f.exact_div(d).primitive()
    gr = g.exact_div(d).primitive()
    if square_free_part(fr).degree != fr.degree or square_free_part(gr).degree != gr.degree:
        return InterlacingCheck(False, shape, "repeated root with no matching partner")
    fivs = isolate_real_roots(fr) if fr.degree >= 1 else []
    givs = isolate_real_roots(gr) if gr.degree >= 1 else []
    merged = _certified_order(fr, fivs, gr, givs)
    labels = [t[0] for t in merged]
    if shape == "interlaces":
        expect = ["g" if i % 2 == 0 else "f" for i in range(len(labels))]
        ok = labels == expect and (not labels or labels[-1] == "g")
    else:
        expect = ["f" if i % 2 == 0 else "g" for i in range(len(labels))]
        ok = labels == expect and (not labels or labels[-1] == "g")
    if len(fivs) + len(givs) != len(labels):
        ok = False
    return InterlacingCheck(
        ok,
        shape,
        None if ok else "roots do not interleave",
        [(a, b) for lab, a, b in merged if lab == "f"],
        [(a, b) for lab, a, b in merged if lab == "g"],
    )
