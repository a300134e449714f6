"""Four quaternion representation of the even subalgebra.

An even element is written q0 + q1*eps1 + q2*eps2 + q3*eps3 with quaternions
q0..q3, eps1 = e_{123inf}, eps2 = e_{123o} and eps3 = eps1*eps2 + 1 (the
bivector e_inf ^ e_o). Quaternion units map to CGA as i -> -e23, j -> e13,
k -> -e12; every other sign in this module is derived from those by the
geometric product, see ``_JOIN``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .clifford import Multivector, ONE, blade, gp
from .errors import NotEven, SchemaError
from .rational import as_rational, fmt

__all__ = [
    "Quaternion", "FourQuat", "QI", "QJ", "QK", "QONE", "EPS1", "EPS2", "EPS3",
    "FQ_ONE", "split", "join", "fq_mul", "fq_reverse", "study_form", "dq_embed",
]


@dataclass(frozen=True)
class Quaternion:
    w: Fraction = Fraction(0)
    x: Fraction = Fraction(0)
    y: Fraction = Fraction(0)
    z: Fraction = Fraction(0)

    @classmethod
    def of(cls, w=0, x=0, y=0, z=0) -> Quaternion:
        return cls(*(as_rational(c) for c in (w, x, y, z)))

    @classmethod
    def vector(cls, v) -> Quaternion:
        return cls(Fraction(0), *(as_rational(c) for c in v))

    def __iter__(self):
        return iter((self.w, self.x, self.y, self.z))

    def __add__(self, o: Quaternion) -> Quaternion:
        if not isinstance(o, Quaternion):
            o = Quaternion(o)
        return Quaternion(self.w + o.w, self.x + o.x, self.y + o.y, self.z + o.z)

    __radd__ = __add__

    def __sub__(self, o: Quaternion) -> Quaternion:
        if not isinstance(o, Quaternion):
            o = Quaternion(o)
        return Quaternion(self.w - o.w, self.x - o.x, self.y - o.y, self.z - o.z)

    def __rsub__(self, o):
        return (-self) + o

    def __neg__(self) -> Quaternion:
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, o):
        if isinstance(o, Quaternion):
            a, b, c, d = self
            e, f, g, h = o
            return Quaternion(
                a * e - b * f - c * g - d * h,
                a * f + b * e + c * h - d * g,
                a * g - b * h + c * e + d * f,
                a * h + b * g - c * f + d * e,
            )
        return Quaternion(self.w * o, self.x * o, self.y * o, self.z * o)

    def __rmul__(self, o):
        return Quaternion(o * self.w, o * self.x, o * self.y, o * self.z)

    def __truediv__(self, o):
        return Quaternion(self.w / o, self.x / o, self.y / o, self.z / o)

    def conj(self) -> Quaternion:
        """Quaternion conjugate, which is the CGA reverse of the embedded element."""
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def scal(self):
        return self.w

    def vect(self) -> Quaternion:
        return Quaternion(Fraction(0), self.x, self.y, self.z)

    def norm(self):
        """q * conj(q), a scalar."""
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def dot(self, o: Quaternion):
        return self.w * o.w + self.x * o.x + self.y * o.y + self.z * o.z

    def xyz(self) -> tuple:
        return (self.x, self.y, self.z)

    def is_zero(self) -> bool:
        return not (self.w or self.x or self.y or self.z)

    def is_scalar(self) -> bool:
        return not (self.x or self.y or self.z)

    def to_json(self) -> list[str]:
        return [fmt(c) for c in self]

    @classmethod
    def from_json(cls, obj) -> Quaternion:
        if not isinstance(obj, list) or len(obj) != 4:
            raise SchemaError("quaternion must be a list of 4 rational strings")
        for c in obj:
            if isinstance(c, bool) or not isinstance(c, (str, int)):
                raise SchemaError(f"bad quaternion coefficient {c!r}")
        return cls.of(*obj)

    def __repr__(self):
        parts = [fmt(c) if isinstance(c, Fraction) else repr(c) for c in self]
        return "Q(" + ", ".join(parts) + ")"


QONE = Quaternion(Fraction(1))
QI = Quaternion.of(0, 1, 0, 0)
QJ = Quaternion.of(0, 0, 1, 0)
QK = Quaternion.of(0, 0, 0, 1)
QZERO = Quaternion()


def study_form(f: Quaternion, g: Quaternion):
    """S(f, g) = f*conj(g) + g*conj(f) = 2 <f, g>."""
    return 2 * f.dot(g)


@dataclass(frozen=True)
class FourQuat:
    q0: Quaternion = QZERO
    q1: Quaternion = QZERO
    q2: Quaternion = QZERO
    q3: Quaternion = QZERO

    @classmethod
    def scalar(cls, s) -> FourQuat:
        return cls(Quaternion(as_rational(s) if not isinstance(s, float) else s))

    @classmethod
    def of(cls, q0=0, q1=0, q2=0, q3=0) -> FourQuat:
        """Build from quaternions or rational scalars."""
        def q(v):
            return v if isinstance(v, Quaternion) else Quaternion(as_rational(v))
        return cls(q(q0), q(q1), q(q2), q(q3))

    @property
    def parts(self) -> tuple[Quaternion, Quaternion, Quaternion, Quaternion]:
        return (self.q0, self.q1, self.q2, self.q3)

    def coords(self) -> tuple:
        """The 16 real coordinates (q0.w, q0.x, ..., q3.z)."""
        return tuple(c for q in self.parts for c in q)

    @classmethod
    def from_coords(cls, c) -> FourQuat:
        return cls(*(Quaternion(*c[4 * i:4 * i + 4]) for i in range(4)))

    def __add__(self, o) -> FourQuat:
        if not isinstance(o, FourQuat):
            return FourQuat(self.q0 + o, self.q1, self.q2, self.q3)
        return FourQuat(*(a + b for a, b in zip(self.parts, o.parts)))

    __radd__ = __add__

    def __neg__(self) -> FourQuat:
        return FourQuat(*(-a for a in self.parts))

    def __sub__(self, o) -> FourQuat:
        return self + (-o)

    def __rsub__(self, o) -> FourQuat:
        return (-self) + o

    def __mul__(self, o):
        if isinstance(o, FourQuat):
            return fq_mul(self, o)
        return FourQuat(*(a * o for a in self.parts))

    def __rmul__(self, o):
        return FourQuat(*(o * a for a in self.parts))

    def __truediv__(self, o) -> FourQuat:
        return FourQuat(*(a / o for a in self.parts))

    def reverse(self) -> FourQuat:
        return fq_reverse(self)

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self.parts)

    def is_scalar(self) -> bool:
        """True iff the element is a real number (possibly zero)."""
        return self.q0.is_scalar() and self.q1.is_zero() and self.q2.is_zero() and self.q3.is_zero()

    def scalar_part(self):
        """Coefficient of 1 in the four quaternion basis (not the CGA grade-0 part)."""
        return self.q0.w

    def to_json(self) -> dict:
        return {f"q{i}": q.to_json() for i, q in enumerate(self.parts)}

    @classmethod
    def from_json(cls, obj) -> FourQuat:
        if not isinstance(obj, dict) or set(obj) != {"q0", "q1", "q2", "q3"}:
            raise SchemaError('fourquat JSON must have exactly the keys "q0".."q3"')
        return cls(*(Quaternion.from_json(obj[f"q{i}"]) for i in range(4)))

    def __repr__(self):
        return f"FourQuat({self.q0!r}, {self.q1!r}, {self.q2!r}, {self.q3!r})"


FQ_ONE = FourQuat(QONE)
EPS1 = FourQuat(q1=QONE)
EPS2 = FourQuat(q2=QONE)
EPS3 = FourQuat(q3=QONE)


def fq_mul(p: FourQuat, s: FourQuat) -> FourQuat:
    p0, p1, p2, p3 = p.parts
    s0, s1, s2, s3 = s.parts
    return FourQuat(
        p0 * s0 - p1 * s2 - p2 * s1 + p3 * s3,
        p1 * (s0 + s3) + (p0 - p3) * s1,
        p2 * (s0 - s3) + (p0 + p3) * s2,
        p0 * s3 + p1 * s2 - p2 * s1 + p3 * s0,
    )


def fq_reverse(q: FourQuat) -> FourQuat:
    return FourQuat(q.q0.conj(), q.q1.conj(), q.q2.conj(), -q.q3.conj())


def dq_embed(primal: Quaternion, dual: Quaternion) -> FourQuat:
    """Dual quaternion primal + eps*dual, with eps = eps1."""
    return FourQuat(primal, dual)


# -- conversion to and from Multivector ----------------------------------------

def _build_join():
    units = (ONE, -blade("23"), blade("13"), -blade("12"))
    eps1, eps2 = blade("123i"), blade("123o")
    groups = (ONE, eps1, eps2, gp(eps1, eps2) + 1)
    table = []
    for g in groups:
        row = []
        for u in units:
            (key, sign), = gp(u, g).items()  # each image is a single signed blade
            row.append((key, sign))
        table.append(tuple(row))
    return tuple(table)


_JOIN = _build_join()
_SPLIT = {key: (g, n, sign) for g, row in enumerate(_JOIN) for n, (key, sign) in enumerate(row)}


def join(fq: FourQuat) -> Multivector:
    out = {}
    for g, q in enumerate(fq.parts):
        for n, c in enumerate(q):
            if c:
                key, sign = _JOIN[g][n]
                out[key] = sign * c
    return Multivector(out)


def split(m: Multivector) -> FourQuat:
    if not m.is_even():
        raise NotEven("element has a nonzero odd part")
    coords = [Fraction(0)] * 16
    for key, c in m.items():
        g, n, sign = _SPLIT[key]
        coords[4 * g + n] = sign * c
    return FourQuat.from_coords(coords)
