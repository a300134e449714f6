"""Straight lines on the Study variety through the identity (elementary Dorst motions).

A line through [1] is parametrized projectively as t + q with q + rev(q) = 0.
Everything here stays exact; :func:`eval_motion_param` is the only float path
and exists for plotting the cos/sin, linear and cosh/sinh parametrizations.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .clifford import EI, Multivector, classify_vector, dot2, embed_point, gp, reverse, vector, wedge2
from .errors import (
    ConfStudyError, DegenerateBlade, InvalidParams, NormalizeAtInfinity, NotALine,
    NotAVector, NotOnStudy, ZeroDirection, ZeroVector,
)
from .fourquat import FQ_ONE, FourQuat, Quaternion, fq_reverse, join, split
from .rational import as_rational
from .study import on_study, rotor_norm

__all__ = [
    "LineDirection", "Blade2", "MotionType", "DorstMotion", "Surd", "NullIntersection",
    "TrajectorySample", "line_normalize", "wedge_decompose", "motion_from_blade",
    "motion_from_direction", "classify_motion", "eval_motion", "eval_motion_param",
    "null_intersections", "sandwich", "make_primitive", "translation_rotor",
    "scaling_rotor", "trajectory",
]


def _cross(a, b):
    return (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])


def _dot(a, b):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def _is_line_form(q: FourQuat) -> bool:
    # (q + rev q)/2 = Scal(q0) + Scal(q1) eps1 + Scal(q2) eps2 + Vect(q3) eps3
    return q.q1.w == 0 and q.q2.w == 0 and q.q3.is_scalar()


@dataclass(frozen=True)
class LineDirection:
    """Normalized direction q of the line t + q (on the Study variety, q + rev q = 0)."""

    q: FourQuat

    def __post_init__(self):
        q = self.q
        if q.is_zero():
            raise ZeroDirection("line direction must be nonzero")
        if q.q0.w != 0 or not _is_line_form(q):
            raise NotALine("q + rev(q) must vanish", element=q)
        if not on_study(q):
            raise NotOnStudy("line direction is not on the Study variety", element=q)

    def norm(self) -> Fraction:
        return rotor_norm(self.q)


@dataclass(frozen=True)
class Blade2:
    a: Multivector
    b: Multivector

    def wedge(self) -> Multivector:
        return wedge2(self.a, self.b)

    def to_json(self) -> dict:
        return {"a": self.a.to_json(), "b": self.b.to_json()}


class MotionType(str, enum.Enum):
    ConformalRotation = "ConformalRotation"
    ConformalScaling = "ConformalScaling"
    Transversion = "Transversion"
    EuclideanRotation = "EuclideanRotation"
    Translation = "Translation"
    UniformScaling = "UniformScaling"


def _branch(norm) -> str:
    if norm > 0:
        return "circular"
    return "linear" if norm == 0 else "hyperbolic"


@dataclass(frozen=True)
class DorstMotion:
    direction: LineDirection
    blade: Blade2
    kind: MotionType
    branch: str

    @property
    def q(self) -> FourQuat:
        return self.direction.q

    def to_json(self) -> dict:
        return {
            "blade": self.blade.to_json(),
            "direction": self.q.to_json(),
            "kind": self.kind.value,
            "branch": self.branch,
        }


def line_normalize(q: FourQuat) -> LineDirection:
    """Shift t so that the line t + q has q + rev(q) = 0."""
    if q.is_zero():
        raise ZeroDirection("line direction must be nonzero")
    if not _is_line_form(q):
        raise NotALine(
            "q + rev(q) is not real",
            scal_q1=q.q1.w, scal_q2=q.q2.w, vect_q3=q.q3.xyz(),
        )
    if not on_study(q):
        raise NotOnStudy("[q] is not on the Study variety", element=q)
    return LineDirection(q - q.q0.w)


def _vec(v3, o=0, inf=0) -> Multivector:
    return vector(v3[0], v3[1], v3[2], o=o, inf=inf)


def wedge_decompose(d: LineDirection) -> Blade2:
    """Vectors a, b with a ^ b = q (b has no e_o component).

    Free choices are fixed: in the rigid case the plane normals are
    q_a = q0 x e_k (first k giving a nonzero vector) and its completion; in the
    remaining cases a_o = -1 and the free a_inf is 0 where the system leaves it open.
    """
    q = d.q if isinstance(d, LineDirection) else d
    if q.is_zero():
        raise ZeroDirection("cannot decompose the zero direction")
    q0, q1, q2 = q.q0.xyz(), q.q1.xyz(), q.q2.xyz()
    s = q.q3.w
    if s == 0 and not any(q2):
        if not any(q0):
            a, b = _vec(q1), EI
        else:
            axes = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
            u = next(c for c in (_cross(q0, e) for e in axes) if any(c))
            uu = _dot(u, u)
            v = tuple(c / uu for c in _cross(u, q0))
            b_inf = _dot(q1, u) / uu
            a_inf = -_dot(q1, v) / _dot(v, v)
            a, b = _vec(u, inf=a_inf), _vec(v, inf=b_inf)
    elif s == 0:
        n2 = _dot(q2, q2)
        a_inf = -_dot(q1, q2) / n2
        qa = tuple(c / n2 for c in _cross(q0, q2))
        a, b = _vec(qa, o=-1, inf=a_inf), _vec(q2)
    else:
        qa = tuple(c / s for c in q1)
        a, b = _vec(qa, o=-1), _vec(q2, inf=s)
    blade = Blade2(a, b)
    if split(blade.wedge()) != q:
        raise NotOnStudy("direction violates the Study conditions needed for a ^ b", element=q)
    return blade


def classify_motion(d: LineDirection) -> MotionType:
    q = d.q
    norm = rotor_norm(q)
    rigid = q.q2.is_zero() and q.q3.is_zero()
    if norm > 0:
        return MotionType.EuclideanRotation if rigid else MotionType.ConformalRotation
    if norm == 0:
        return MotionType.Translation if rigid else MotionType.Transversion
    uniform = q.q0.is_scalar() and q.q1.w == 0 and q.q2.is_zero() and q.q3.is_scalar()
    return MotionType.UniformScaling if uniform else MotionType.ConformalScaling


def motion_from_blade(a: Multivector, b: Multivector) -> DorstMotion:
    w = wedge2(a, b)
    if w.is_zero():
        raise DegenerateBlade("a ^ b vanishes")
    d = LineDirection(split(w))
    return DorstMotion(d, Blade2(a, b), classify_motion(d), _branch(d.norm()))


def motion_from_direction(q: FourQuat | LineDirection) -> DorstMotion:
    d = q if isinstance(q, LineDirection) else line_normalize(q)
    return DorstMotion(d, wedge_decompose(d), classify_motion(d), _branch(d.norm()))


def _direction_of(m) -> FourQuat:
    if isinstance(m, DorstMotion):
        return m.q
    if isinstance(m, LineDirection):
        return m.q
    return m


def eval_motion(m, t=None, *, at_infinity: bool = False) -> FourQuat:
    """Point t + q on the line; ``at_infinity`` gives the identity class [1]."""
    if at_infinity:
        return FQ_ONE
    return _direction_of(m) + as_rational(t)


def eval_motion_param(m, u: float) -> FourQuat:
    """Float evaluation of cos u + q sin u, 1 + q u, or cosh u + q sinh u.

    Projectively these equal t + q for t = cot u, 1/u and coth u.
    """
    q = _direction_of(m)
    norm = rotor_norm(q)
    fq = FourQuat.from_coords([float(c) for c in q.coords()])
    if norm > 0:
        return fq * math.sin(u) + math.cos(u)
    if norm == 0:
        return fq * float(u) + 1.0
    return fq * math.sinh(u) + math.cosh(u)


@dataclass(frozen=True)
class Surd:
    """Exact real number coeff * sqrt(radicand), radicand a positive square-free-ish int."""

    coeff: Fraction
    radicand: int = 1

    @classmethod
    def sqrt(cls, x, sign: int = 1) -> Surd:
        x = as_rational(x)
        if x < 0:
            raise ValueError("negative radicand")
        # sqrt(p/q) = sqrt(p*q)/q
        n, den = x.numerator * x.denominator, x.denominator
        root = math.isqrt(n)
        if root * root == n:
            return cls(sign * Fraction(root, den), 1)
        out, f = 1, 2
        while f * f <= n and f < 10_000:
            while n % (f * f) == 0:
                n //= f * f
                out *= f
            f += 1
        return cls(sign * Fraction(out, den), n)

    def is_rational(self) -> bool:
        return self.radicand == 1 or self.coeff == 0

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("irrational surd")
        return self.coeff

    def square(self) -> Fraction:
        return self.coeff * self.coeff * self.radicand

    def __float__(self):
        return float(self.coeff) * math.sqrt(self.radicand)

    def to_json(self):
        from .rational import fmt
        if self.is_rational():
            return fmt(self.coeff)
        return {"coeff": fmt(self.coeff), "radicand": str(self.radicand)}


@dataclass(frozen=True)
class NullIntersection:
    """Parameter t of a real intersection of t + q with the null quadric.

    ``point`` is t + q when t is rational, otherwise None (t stays symbolic).
    """

    t: Surd
    q: FourQuat
    point: FourQuat | None

    def null_value(self) -> Fraction:
        # q + rev q = 0 makes null_value(t + q) = t^2 + norm(q)
        return self.t.square() + rotor_norm(self.q)


def null_intersections(d: LineDirection) -> list[NullIntersection]:
    q = d.q if isinstance(d, LineDirection) else d
    norm = rotor_norm(q)
    if norm > 0:
        return []
    if norm == 0:
        return [NullIntersection(Surd(Fraction(0)), q, q)]
    out = []
    for sign in (1, -1):
        t = Surd.sqrt(-norm, sign)
        out.append(NullIntersection(t, q, q + t.coeff if t.is_rational() else None))
    return out


def sandwich(r, v: Multivector, normalize: bool = False) -> Multivector:
    """r v rev(r); with ``normalize`` the e_o coefficient is scaled to 1."""
    if v.grades() - {1}:
        raise NotAVector("sandwich acts on vectors")
    rm = join(r) if isinstance(r, FourQuat) else r
    y = gp(gp(rm, v), reverse(rm))
    if normalize:
        w = y["eo"]
        if w == 0:
            raise NormalizeAtInfinity("image has no e_o component", image=y)
        y = y / w
    return y


def translation_rotor(v) -> FourQuat:
    """Rotor of the translation by vector v: 1 - (1/2) v eps1."""
    return FourQuat(Quaternion(Fraction(1)), Quaternion.vector(v) * Fraction(-1, 2))


def scaling_rotor(sigma, center=(0, 0, 0)) -> FourQuat:
    """(1+s) + (1-s) eps3, translated to ``center``; it scales points about the center by s."""
    sigma = as_rational(sigma)
    s = FourQuat.of(1 + sigma, 0, 0, 1 - sigma)
    if any(center):
        t = translation_rotor(center)
        s = t * s * fq_reverse(t)
    return s


def _point3(p, name):
    try:
        p = tuple(as_rational(c) for c in p)
    except TypeError as exc:
        raise InvalidParams(f"{name} must be three rationals") from exc
    if len(p) != 3:
        raise InvalidParams(f"{name} must be three rationals")
    return p


def make_primitive(kind: MotionType | str, **params) -> DorstMotion:
    """Build one of the six elementary motions.

    EuclideanRotation(axis, point=origin), Translation(vector),
    UniformScaling(center), Transversion(point, normal),
    ConformalScaling(points=(p, p')), ConformalRotation(a, b) with vectors a, b.
    """
    kind = MotionType(kind)
    if kind is MotionType.EuclideanRotation:
        axis = _point3(params.get("axis", ()), "axis")
        if not any(axis):
            raise InvalidParams("rotation axis must be nonzero")
        q = FourQuat(Quaternion.vector(axis))
        point = _point3(params.get("point", (0, 0, 0)), "point")
        if any(point):
            t = translation_rotor(point)
            q = t * q * fq_reverse(t)
        m = motion_from_direction(LineDirection(q))
    elif kind is MotionType.Translation:
        v = _point3(params.get("vector", ()), "vector")
        if not any(v):
            raise InvalidParams("translation vector must be nonzero")
        m = motion_from_direction(LineDirection(FourQuat(q1=Quaternion.vector(v) * Fraction(-1, 2))))
    elif kind is MotionType.UniformScaling:
        c = _point3(params.get("center", (0, 0, 0)), "center")
        m = motion_from_blade(embed_point(*c), EI)
    elif kind is MotionType.Transversion:
        a = _point3(params.get("point", (0, 0, 0)), "point")
        n = _point3(params.get("normal", ()), "normal")
        if not any(n):
            raise InvalidParams("transversion plane normal must be nonzero")
        m = motion_from_blade(embed_point(*a), vector(*n, inf=_dot(a, n)))
    elif kind is MotionType.ConformalScaling:
        pts = params.get("points", ())
        if len(pts) != 2:
            raise InvalidParams("conformal scaling needs two points")
        p, r = _point3(pts[0], "point"), _point3(pts[1], "point")
        if p == r:
            raise InvalidParams("conformal scaling needs two distinct points")
        m = motion_from_blade(embed_point(*p), embed_point(*r))
    else:
        a, b = params.get("a"), params.get("b")
        if not isinstance(a, Multivector) or not isinstance(b, Multivector):
            raise InvalidParams("conformal rotation needs vectors a and b")
        m = motion_from_blade(a, b)
    if m.kind is not kind:
        raise InvalidParams(f"parameters give a {m.kind.value}, not a {kind.value}")
    return m


@dataclass(frozen=True)
class TrajectorySample:
    t: Fraction
    kind: str
    point: tuple | None = None
    error: str | None = None


def trajectory(m, p0: Sequence, samples: Sequence) -> list[TrajectorySample]:
    """Images of the point p0 under t + q for each sample t; errors are per sample.

    ``m`` may also be any callable t -> FourQuat, e.g. a rotor polynomial.
    """
    if not samples:
        raise InvalidParams("trajectory needs at least one sample")
    x = embed_point(*p0)
    out = []
    for t in samples:
        t = as_rational(t)
        try:
            y = sandwich(m(t) if callable(m) else eval_motion(m, t), x)
            vk = classify_vector(y)
        except ZeroVector:
            out.append(TrajectorySample(t, "Error", error="ZeroImage"))
            continue
        except ConfStudyError as exc:
            out.append(TrajectorySample(t, "Error", error=exc.code))
            continue
        point = vk.center if vk.tag == "FinitePoint" else None
        out.append(TrajectorySample(t, vk.tag, point))
    return out
