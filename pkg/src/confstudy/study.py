"""Study variety, null quadric and kinematic subgroups in four quaternion form."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidParams, NotOnStudy
from .fourquat import FQ_ONE, FourQuat, QI, QJ, QK, fq_mul, fq_reverse, study_form
from .linalg import rank
from .rational import fmt

__all__ = [
    "GENERATOR_LABELS", "StudyResidual", "GroupTag", "ideal_generators", "on_study",
    "null_value", "rotor_norm", "subgroup_member", "subgroups", "jacobian_rank",
    "generators_along_line", "left_right_norms",
]

GENERATOR_LABELS = (
    "S(q0,q1)", "S(q1,q3)", "S(q0,q2)", "S(q2,q3)",
    "S(q0,iq3)-S(q1,iq2)", "S(q0,jq3)-S(q1,jq2)", "S(q0,kq3)-S(q1,kq2)",
    "S(q0,q3i)+S(q1,q2i)", "S(q0,q3j)+S(q1,q2j)", "S(q0,q3k)+S(q1,q2k)",
)


@dataclass(frozen=True)
class StudyResidual:
    values: tuple

    labels = GENERATOR_LABELS

    def is_zero(self) -> bool:
        return not any(self.values)

    def __iter__(self):
        return iter(self.values)

    def to_json(self) -> list[dict]:
        return [{"label": lab, "value": fmt(v)} for lab, v in zip(self.labels, self.values)]


def _generators(q: FourQuat) -> tuple:
    q0, q1, q2, q3 = q.parts
    S = study_form
    return (
        S(q0, q1), S(q1, q3), S(q0, q2), S(q2, q3),
        S(q0, QI * q3) - S(q1, QI * q2),
        S(q0, QJ * q3) - S(q1, QJ * q2),
        S(q0, QK * q3) - S(q1, QK * q2),
        S(q0, q3 * QI) + S(q1, q2 * QI),
        S(q0, q3 * QJ) + S(q1, q2 * QJ),
        S(q0, q3 * QK) + S(q1, q2 * QK),
    )


def ideal_generators(q: FourQuat) -> StudyResidual:
    """The ten bilinear generators of the Study variety ideal, evaluated at q."""
    return StudyResidual(_generators(q))


def on_study(q: FourQuat) -> bool:
    if q.is_zero():
        raise InvalidParams("the zero element is not a projective point")
    return not any(_generators(q))


def left_right_norms(q: FourQuat) -> tuple[FourQuat, FourQuat]:
    """(q * rev q, rev q * q) computed with the four quaternion product."""
    r = fq_reverse(q)
    return fq_mul(q, r), fq_mul(r, q)


def null_value(q: FourQuat):
    """q0*conj(q0) - S(q1, q2) - q3*conj(q3); vanishes exactly on the null quadric."""
    return q.q0.norm() - study_form(q.q1, q.q2) - q.q3.norm()


def rotor_norm(q: FourQuat):
    """Scalar q * rev(q) of a Study point.

    Its sign separates the two components of the Study variety minus the null
    quadric; which sign stands for direct displacements is not fixed here.
    """
    if not on_study(q):
        raise NotOnStudy("rotor norm is only defined on the Study variety", element=q)
    n = fq_mul(q, fq_reverse(q))
    assert n.is_scalar()
    return n.q0.w


class GroupTag(str, enum.Enum):
    SO3 = "SO3"
    SE3 = "SE3"
    Em = "Em"
    Sim = "Sim"
    ScaleTrans = "ScaleTrans"
    Transversion = "Transversion"


def _vect_zero(q) -> bool:
    return not (q.x or q.y or q.z)


def _member(q: FourQuat, tag: GroupTag) -> bool:
    q0, q1, q2, q3 = q.parts
    if tag is GroupTag.SO3:
        return q1.is_zero() and q2.is_zero() and q3.is_zero()
    if tag is GroupTag.SE3:
        return q2.is_zero() and q3.is_zero() and study_form(q0, q1) == 0
    if tag is GroupTag.Em:
        return q0.is_zero() and q2.is_zero() and study_form(q1, q3) == 0
    if tag is GroupTag.Sim:
        return q2.is_zero() and study_form(q0, q1) == 0 and _vect_zero(q0 * q3.conj())
    if tag is GroupTag.ScaleTrans:
        return _vect_zero(q0) and q1.w == 0 and q2.is_zero() and _vect_zero(q3)
    if tag is GroupTag.Transversion:
        return q1.is_zero() and q3.is_zero() and study_form(q0, q2) == 0
    raise InvalidParams(f"unknown group tag {tag!r}")


def subgroup_member(q: FourQuat, tag: GroupTag | str) -> bool:
    """Membership of [q] in one of the kinematic subgroups, via its linear-plus-Study ideal."""
    tag = GroupTag(tag)
    if not on_study(q):
        raise NotOnStudy("subgroup membership requires a Study point", element=q)
    return _member(q, tag)


def subgroups(q: FourQuat) -> list[GroupTag]:
    """All subgroup tags containing [q]; empty off the Study variety."""
    if not on_study(q):
        return []
    return [g for g in GroupTag if _member(q, g)]


def _unit(k: int) -> FourQuat:
    c = [0] * 16
    c[k] = 1
    return FourQuat.from_coords([Fraction(x) for x in c])


_UNITS = tuple(_unit(k) for k in range(16))


def jacobian(q: FourQuat) -> list[list[Fraction]]:
    """10x16 Jacobian of the generators at q.

    The generators are quadratic forms, so the central difference
    (g(q + e_k) - g(q - e_k)) / 2 is the exact partial derivative.
    """
    cols = []
    for u in _UNITS:
        gp_, gm = _generators(q + u), _generators(q - u)
        cols.append([(a - b) / 2 for a, b in zip(gp_, gm)])
    return [list(row) for row in zip(*cols)]


def jacobian_rank(q: FourQuat) -> int:
    """Exact rank of the generator Jacobian; 5 at smooth non-null Study points."""
    return rank(jacobian(q))


def generators_along_line(q: FourQuat) -> list[tuple]:
    """Coefficients (c0, c1, c2) of each generator of t + q as a polynomial in t."""
    g_q, g_1, g_sum = _generators(q), _generators(FQ_ONE), _generators(q + FQ_ONE)
    return [(a, c - a - b, b) for a, b, c in zip(g_q, g_1, g_sum)]
