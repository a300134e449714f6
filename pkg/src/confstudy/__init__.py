"""Exact Study-variety toolkit for conformal kinematics."""

from .clifford import Multivector, classify_vector, dot2, embed_point, gp, reverse, wedge2
from .dorst import (
    DorstMotion, LineDirection, MotionType, classify_motion, line_normalize, make_primitive,
    motion_from_blade, null_intersections, sandwich, trajectory, wedge_decompose,
)
from .errors import ConfStudyError
from .fourquat import FourQuat, Quaternion, fq_mul, fq_reverse, join, split
from .rotor_poly import RealPoly, RotorPoly, factorize, norm_poly, quadratic_splits
from .study import GroupTag, ideal_generators, jacobian_rank, null_value, on_study, rotor_norm

__all__ = [
    "Multivector", "classify_vector", "dot2", "embed_point", "gp", "reverse", "wedge2",
    "DorstMotion", "LineDirection", "MotionType", "classify_motion", "line_normalize",
    "make_primitive", "motion_from_blade", "null_intersections", "sandwich", "trajectory",
    "wedge_decompose", "ConfStudyError", "FourQuat", "Quaternion", "fq_mul", "fq_reverse",
    "join", "split", "RealPoly", "RotorPoly", "factorize", "norm_poly", "quadratic_splits",
    "GroupTag", "ideal_generators", "jacobian_rank", "null_value", "on_study", "rotor_norm",
]
