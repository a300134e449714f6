"""Polynomials in a central indeterminate t with even CGA coefficients.

Factorization uses the remainder-root scheme: for a chosen sequence of real
monic quadratics M_1..M_n with C * rev(C) = M_1...M_n, the linear remainder of
C modulo M_n has a unique right root -h_n, the right factor t + h_n is divided
off, and the process repeats on the quotient.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Sequence

import sympy

from .dorst import MotionType, classify_motion, line_normalize
from .errors import (
    ConfStudyError, NoFactorization, NotRotorPolynomial, SchemaError,
    UnfactorableOverRationals,
)
from .fourquat import FQ_ONE, FourQuat, fq_mul, fq_reverse, join
from .rational import as_rational, fmt

__all__ = [
    "RotorPoly", "RealPoly", "Factorization", "Skip", "FactorizeResult", "poly_mul",
    "poly_eval", "norm_poly", "quadratic_splits", "factorize", "factorize_report",
    "linear", "FLOAT_TOL",
]

FLOAT_TOL = 1e-9


@dataclass(frozen=True)
class RotorPoly:
    """Coefficients in ascending degree; trailing zeros are stripped."""

    coeffs: tuple

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1].is_zero():
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> FourQuat:
        return self.coeffs[-1]

    def reverse(self) -> RotorPoly:
        return RotorPoly(tuple(fq_reverse(c) for c in self.coeffs))

    def __mul__(self, o: RotorPoly) -> RotorPoly:
        return poly_mul(self, o)

    def __call__(self, t0) -> FourQuat:
        return poly_eval(self, t0)

    def to_json(self) -> dict:
        return {"coeffs": [c.to_json() for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj) -> RotorPoly:
        if not isinstance(obj, dict) or set(obj) != {"coeffs"} or not isinstance(obj["coeffs"], list):
            raise SchemaError('polynomial JSON must be {"coeffs": [<fourquat>, ...]}')
        return cls(tuple(FourQuat.from_json(c) for c in obj["coeffs"]))


def linear(h: FourQuat) -> RotorPoly:
    """t + h"""
    return RotorPoly((h, FQ_ONE))


@dataclass(frozen=True)
class RealPoly:
    coeffs: tuple

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def of(cls, *coeffs) -> RealPoly:
        return cls(tuple(as_rational(c) for c in coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __mul__(self, o: RealPoly) -> RealPoly:
        if not (self.coeffs and o.coeffs):
            return RealPoly(())
        out = [0] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(o.coeffs):
                out[i + j] += a * b
        return RealPoly(tuple(out))

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def to_json(self) -> list[str]:
        return [fmt(c) if isinstance(c, Fraction) else repr(float(c)) for c in self.coeffs]

    def __str__(self):
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = {0: "", 1: "t"}.get(k, f"t^{k}")
            coef = fmt(c) if isinstance(c, Fraction) else f"{c:g}"
            if mono and coef in ("1", "-1"):
                coef = coef[:-1]
            terms.append(f"{coef}{mono}")
        return " + ".join(terms).replace("+ -", "- ") or "0"


def poly_mul(p: RotorPoly, q: RotorPoly) -> RotorPoly:
    if p.is_zero() or q.is_zero():
        return RotorPoly(())
    out = [FourQuat()] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        for j, b in enumerate(q.coeffs):
            out[i + j] = out[i + j] + fq_mul(a, b)
    return RotorPoly(tuple(out))


def poly_eval(c: RotorPoly, t0) -> FourQuat:
    t0 = as_rational(t0)
    acc = FourQuat()
    for a in reversed(c.coeffs):
        acc = acc * t0 + a
    return acc


def norm_poly(c: RotorPoly) -> RealPoly:
    """C * rev(C) as a real polynomial, checked against rev(C) * C."""
    r = c.reverse()
    left, right = poly_mul(c, r), poly_mul(r, c)
    if left != right:
        raise NotRotorPolynomial("C rev(C) and rev(C) C differ")
    if left.is_zero():
        raise NotRotorPolynomial("C rev(C) vanishes")
    bad = [k for k, a in enumerate(left.coeffs) if not a.is_scalar()]
    if bad:
        raise NotRotorPolynomial("C rev(C) has non-real coefficients", degrees=bad)
    return RealPoly(tuple(a.q0.w for a in left.coeffs))


# -- quadratic splits ------------------------------------------------------------

_T = sympy.Symbol("t")


def _to_sympy(n: RealPoly):
    return sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(n.coeffs)], _T, domain="QQ")


def _from_sympy(p) -> RealPoly:
    return RealPoly(tuple(Fraction(int(c.p), int(c.q)) for c in reversed(p.all_coeffs())))


def _pairings(roots: list) -> set:
    """All multisets of pairs covering the (sorted) multiset ``roots``."""
    if not roots:
        return {()}
    first, rest = roots[0], roots[1:]
    out = set()
    for i in range(len(rest)):
        if i and rest[i] == rest[i - 1]:
            continue
        pair = (first, rest[i])
        for tail in _pairings(rest[:i] + rest[i + 1:]):
            out.add(tuple(sorted((pair,) + tail)))
    return out


def _quad_from_roots(a, b) -> RealPoly:
    return RealPoly((a * b, -(a + b), type(a)(1)))


def _seq_key(seq):
    return tuple(tuple(float(c) if not isinstance(c, Fraction) else c for c in m.coeffs) for m in seq)


def _orderings(multiset: Sequence[RealPoly]) -> list[tuple]:
    return sorted(set(permutations(multiset)), key=_seq_key)


def _exact_parts(n: RealPoly):
    """Split N into rational real roots (with multiplicity) and irreducible quadratics."""
    _, factors = sympy.factor_list(_to_sympy(n))
    roots, quads = [], []
    for f, mult in factors:
        deg = f.degree()
        if deg == 1:
            a, b = f.all_coeffs()
            r = Fraction(int((-b / a).p), int((-b / a).q))
            roots += [r] * mult
        elif deg == 2 and sympy.discriminant(f) < 0:
            quads += [_from_sympy(f.monic())] * mult
        else:
            raise UnfactorableOverRationals(
                "norm polynomial has irrational real roots", factor=str(f.as_expr()),
            )
    return roots, quads


def _float_parts(n: RealPoly, tol: float):
    import numpy as np

    rts = np.roots([float(c) for c in reversed(n.coeffs)])
    roots, quads = [], []
    for z in rts:
        if abs(z.imag) <= tol:
            roots.append(float(z.real))
        elif z.imag > 0:
            quads.append(RealPoly((float(abs(z) ** 2), float(-2 * z.real), 1.0)))
    roots.sort()
    return roots, quads


def quadratic_splits(n: RealPoly, *, float_mode: bool = False, tol: float = FLOAT_TOL) -> list[tuple]:
    """Every ordered sequence of monic real quadratics whose product is N.

    Real roots are paired among themselves; irreducible quadratics stay intact.
    Duplicate sequences are removed and the result is sorted.
    """
    if n.degree < 0 or n.degree % 2:
        raise NotRotorPolynomial("norm polynomial must have even degree", degree=n.degree)
    lead = n.coeffs[-1]
    if lead != 1:
        n = RealPoly(tuple(c / lead for c in n.coeffs))
    roots, quads = _float_parts(n, tol) if float_mode else _exact_parts(n)
    if len(roots) % 2:
        raise UnfactorableOverRationals("odd number of real roots cannot be paired")
    seqs = set()
    for pairing in _pairings(sorted(roots)):
        multiset = [_quad_from_roots(a, b) for a, b in pairing] + quads
        seqs.update(_orderings(multiset))
    return sorted(seqs, key=_seq_key)


# -- factorization ---------------------------------------------------------------


def _scalar_of(x: FourQuat, tol):
    """The real value of x if it is a (nonzero) real, else None."""
    coords = x.coords()
    if tol is None:
        return coords[0] if x.is_scalar() and coords[0] else None
    if any(abs(c) > tol for c in coords[1:]) or abs(coords[0]) <= tol:
        return None
    return coords[0]


def _coord_grade(k: int) -> int:
    c = [0] * 16
    c[k] = 1
    (grade,) = join(FourQuat.from_coords([Fraction(x) for x in c])).grades()
    return grade


_GRADES = tuple(_coord_grade(k) for k in range(16))


def _inverse(r: FourQuat, tol=None):
    """Two-sided inverse of r in the even subalgebra, or None if r is a zero divisor.

    N = r rev(r) has grades 0 and 4 only. With N' its grade 4 part negated,
    N N' is real, and it vanishes exactly when r is a zero divisor. Then
    r^-1 = rev(r) N' / (N N').
    """
    rr = fq_mul(r, fq_reverse(r))
    s = _scalar_of(rr, tol)
    if s is not None:
        return fq_reverse(r) / s
    eps = 0 if tol is None else tol
    if any(abs(c) > eps and g not in (0, 4) for c, g in zip(rr.coords(), _GRADES)):
        raise AssertionError("r rev(r) must have grades 0 and 4 only")
    nbar = FourQuat.from_coords([-c if g == 4 else c for c, g in zip(rr.coords(), _GRADES)])
    s = _scalar_of(fq_mul(rr, nbar), tol)
    if s is None:
        return None
    return fq_mul(fq_reverse(r), nbar) / s


def _rem_by_real(c: RotorPoly, m: RealPoly) -> list:
    """Coefficients of C mod M for a monic real M (t central, so plain long division)."""
    rem = list(c.coeffs)
    d = m.degree
    for k in range(len(rem) - 1, d - 1, -1):
        lead = rem[k]
        if lead.is_zero():
            continue
        for j in range(d + 1):
            rem[k - d + j] = rem[k - d + j] - lead * m.coeffs[j]
    return rem[:d] + [FourQuat()] * (d - len(rem[:d]))


def _right_divide_linear(c: RotorPoly, h: FourQuat, tol=None) -> RotorPoly | None:
    """Q with Q * (t + h) = C, or None if the division is not exact."""
    cs = c.coeffs
    n = len(cs) - 1
    q = [None] * n
    q[n - 1] = cs[n]
    for k in range(n - 1, 0, -1):
        q[k - 1] = cs[k] - fq_mul(q[k], h)
    last = cs[0] - fq_mul(q[0], h)
    if tol is None:
        if not last.is_zero():
            return None
    elif any(abs(x) > tol for x in last.coords()):
        return None
    return RotorPoly(tuple(q))


@dataclass(frozen=True)
class Factorization:
    """C = leading * (t + h_1) ... (t + h_n), with (t + h_i)(t + rev h_i) = M_i."""

    factors: tuple
    quadratics: tuple
    leading: FourQuat = FQ_ONE

    def kinds(self) -> list[MotionType | None]:
        out = []
        for h in self.factors:
            try:
                out.append(classify_motion(line_normalize(h)))
            except ConfStudyError:
                out.append(None)
        return out

    def product(self) -> RotorPoly:
        acc = RotorPoly((self.leading,))
        for h in self.factors:
            acc = poly_mul(acc, linear(h))
        return acc

    def to_json(self) -> dict:
        return {
            "quadratics": [m.to_json() for m in self.quadratics],
            "factors": [h.to_json() for h in self.factors],
            "kinds": [k.value if k is not None else None for k in self.kinds()],
        }


@dataclass(frozen=True)
class Skip:
    """An ordering abandoned because a remainder's linear coefficient is a zero divisor."""

    quadratics: tuple
    step: int
    remainder: tuple

    def to_json(self) -> dict:
        return {
            "quadratics": [m.to_json() for m in self.quadratics],
            "step": self.step,
            "remainder": [r.to_json() for r in self.remainder],
        }


@dataclass
class FactorizeResult:
    factorizations: list = field(default_factory=list)
    skipped: list = field(default_factory=list)


def _factor_ordering(c: RotorPoly, seq: tuple, tol):
    factors = []
    for i in range(len(seq) - 1, -1, -1):
        r0, r1 = _rem_by_real(c, seq[i])
        inv = _inverse(r1, tol)
        if inv is None:
            return Skip(seq, i, (r0, r1))
        h = fq_mul(inv, r0)
        quot = _right_divide_linear(c, h, tol)
        if quot is None:
            return Skip(seq, i, (r0, r1))
        factors.append(h)
        c = quot
    return Factorization(tuple(reversed(factors)), seq)


def _threads() -> int:
    raw = os.environ.get("CONFSTUDY_THREADS", "0")
    try:
        n = int(raw)
    except ValueError:
        n = 0
    return n if n > 0 else (os.cpu_count() or 1)


def factorize_report(c: RotorPoly, *, float_mode: bool = False, tol: float = FLOAT_TOL) -> FactorizeResult:
    """Factorizations of C into linear factors together with the skipped orderings."""
    norm = norm_poly(c)
    lead = c.leading
    inv = _inverse(lead)
    if inv is None:
        raise NotRotorPolynomial("leading coefficient is not invertible", leading=lead)
    monic = RotorPoly(tuple(fq_mul(inv, a) for a in c.coeffs))
    seqs = quadratic_splits(norm, float_mode=float_mode, tol=tol)
    ftol = tol if float_mode else None
    if float_mode:
        monic = RotorPoly(tuple(FourQuat.from_coords([float(x) for x in a.coords()]) for a in monic.coeffs))

    workers = min(_threads(), len(seqs)) or 1
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(lambda s: _factor_ordering(monic, s, ftol), seqs))
    else:
        outcomes = [_factor_ordering(monic, s, ftol) for s in seqs]

    result = FactorizeResult()
    seen = set()
    for out in outcomes:
        if isinstance(out, Skip):
            result.skipped.append(out)
            continue
        if out.factors in seen:
            continue
        seen.add(out.factors)
        result.factorizations.append(Factorization(out.factors, out.quadratics, lead))
    return result


def factorize(c: RotorPoly, **kw) -> list[Factorization]:
    res = factorize_report(c, **kw)
    if not res.factorizations:
        raise NoFactorization(
            "no ordering of quadratic factors admits a factorization",
            skipped=[s.to_json() for s in res.skipped],
        )
    return res.factorizations
