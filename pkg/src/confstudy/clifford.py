"""Exact conformal geometric algebra R(4,1).

Multivectors are stored over the null basis {e1, e2, e3, e_o, e_inf}. A key is
a bitmask (bit 0..4 = 1, 2, 3, o, inf) naming the *outer* blade of those
vectors in ascending order, so ``0b11000`` is e_o ^ e_inf. Products are
evaluated once per blade pair in the orthonormal basis {e1, e2, e3, e+, e-}
(e+^2 = 1, e-^2 = -1) and cached as a 32x32 table over null-basis keys.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Mapping

from .errors import InvalidParams, NotAVector, SchemaError, ZeroVector
from .rational import as_rational, fmt

__all__ = [
    "Multivector", "VectorKind", "E1", "E2", "E3", "EO", "EI", "ONE",
    "gp", "reverse", "grade_part", "wedge2", "dot2", "embed_point",
    "make_plane", "make_sphere", "classify_vector", "blade", "basis_product",
    "parse_terms", "key_name", "key_from_name", "vector",
]

N_BLADES = 32
_CHARS = "123oi"
_O, _INF = 1 << 3, 1 << 4
_EUCL = 0b111


def _grade(k: int) -> int:
    return bin(k).count("1")


def key_name(k: int) -> str:
    """JSON name of a blade key: "1" for the scalar, else "e" + indices."""
    if k == 0:
        return "1"
    return "e" + "".join(c for i, c in enumerate(_CHARS) if k >> i & 1)


def key_from_name(name: str) -> int:
    if name == "1":
        return 0
    if not name.startswith("e") or len(name) < 2:
        raise SchemaError(f"bad blade key {name!r}")
    idx = []
    for c in name[1:]:
        if c not in _CHARS:
            raise SchemaError(f"bad blade index {c!r} in {name!r}")
        idx.append(_CHARS.index(c))
    if idx != sorted(set(idx)):
        raise SchemaError(f"blade key {name!r} is not in ascending order")
    return sum(1 << i for i in idx)


CANONICAL_KEYS = tuple(sorted(range(N_BLADES), key=lambda k: (_grade(k), [i for i in range(5) if k >> i & 1])))


# -- orthonormal-basis arithmetic ------------------------------------------

_DIAG_SQUARE = (1, 1, 1, 1, -1)  # e1 e2 e3 e+ e-


def _diag_blade_product(a: int, b: int) -> tuple[int, int]:
    """Product of orthonormal basis blades: returns (sign, key)."""
    swaps = 0
    t = a >> 1
    while t:
        swaps += _grade(t & b)
        t >>= 1
    sign = -1 if swaps & 1 else 1
    common = a & b
    for i in range(5):
        if common >> i & 1:
            sign *= _DIAG_SQUARE[i]
    return sign, a ^ b


def _null_to_diag(k: int) -> dict[int, Fraction]:
    a = k & _EUCL
    p, m = 1 << 3, 1 << 4  # e+, e-
    has_o, has_i = bool(k & _O), bool(k & _INF)
    if not has_o and not has_i:
        return {a: Fraction(1)}
    if has_o and not has_i:  # e_o = (e- - e+)/2
        return {a | m: Fraction(1, 2), a | p: Fraction(-1, 2)}
    if has_i and not has_o:  # e_inf = e- + e+
        return {a | m: Fraction(1), a | p: Fraction(1)}
    return {a | p | m: Fraction(-1)}  # e_o ^ e_inf = -e+ e-


def _diag_to_null(k: int) -> dict[int, Fraction]:
    a = k & _EUCL
    has_p, has_m = bool(k & (1 << 3)), bool(k & (1 << 4))
    if not has_p and not has_m:
        return {a: Fraction(1)}
    if has_p and not has_m:  # e+ = e_inf/2 - e_o
        return {a | _INF: Fraction(1, 2), a | _O: Fraction(-1)}
    if has_m and not has_p:  # e- = e_inf/2 + e_o
        return {a | _INF: Fraction(1, 2), a | _O: Fraction(1)}
    return {a | _O | _INF: Fraction(-1)}


def _build_table() -> list[list[tuple[tuple[int, Fraction], ...]]]:
    table = []
    for ka in range(N_BLADES):
        row = []
        da = _null_to_diag(ka)
        for kb in range(N_BLADES):
            diag: dict[int, Fraction] = {}
            for ba, ca in da.items():
                for bb, cb in _null_to_diag(kb).items():
                    s, k = _diag_blade_product(ba, bb)
                    diag[k] = diag.get(k, 0) + s * ca * cb
            out: dict[int, Fraction] = {}
            for k, c in diag.items():
                if c:
                    for kn, cn in _diag_to_null(k).items():
                        out[kn] = out.get(kn, 0) + c * cn
            row.append(tuple((k, c) for k, c in sorted(out.items()) if c))
        table.append(row)
    return table


_TABLE = _build_table()


# -- Multivector -------------------------------------------------------------

class Multivector:
    """Immutable element of CGA with exact rational coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, object] | None = None):
        c = {}
        for k, v in (coeffs or {}).items():
            if not 0 <= k < N_BLADES:
                raise ValueError(f"blade key out of range: {k}")
            v = as_rational(v)
            if v:
                c[k] = v
        object.__setattr__(self, "_c", c)

    def __setattr__(self, name, value):
        raise AttributeError("Multivector is immutable")

    @classmethod
    def scalar(cls, x) -> Multivector:
        return cls({0: x})

    @property
    def coeffs(self) -> dict[int, Fraction]:
        return dict(self._c)

    def __getitem__(self, key: int | str) -> Fraction:
        if isinstance(key, str):
            key = key_from_name(key)
        return self._c.get(key, Fraction(0))

    def items(self):
        """Nonzero (key, coefficient) pairs in canonical order."""
        return [(k, self._c[k]) for k in CANONICAL_KEYS if k in self._c]

    def __bool__(self):
        return bool(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def grades(self) -> set[int]:
        return {_grade(k) for k in self._c}

    def is_even(self) -> bool:
        return all(_grade(k) % 2 == 0 for k in self._c)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Multivector.scalar(other)
        if not isinstance(other, Multivector):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Multivector.scalar(other)
        if not isinstance(other, Multivector):
            return NotImplemented
        out = dict(self._c)
        for k, v in other._c.items():
            out[k] = out.get(k, 0) + v
        return Multivector(out)

    __radd__ = __add__

    def __neg__(self):
        return Multivector({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return gp(self, other)
        if isinstance(other, (int, Fraction)):
            return Multivector({k: v * other for k, v in self._c.items()})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Multivector({k: v * other for k, v in self._c.items()})
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / other)
        return NotImplemented

    def reverse(self) -> Multivector:
        return reverse(self)

    def grade(self, k: int) -> Multivector:
        return grade_part(self, k)

    def __repr__(self):
        if not self._c:
            return "Multivector(0)"
        terms = []
        for k, v in self.items():
            terms.append(fmt(v) if k == 0 else f"{fmt(v)}*{key_name(k)}")
        return "Multivector(" + " + ".join(terms) + ")"

    # JSON: {"blades": {"1": "2", "e12": "-1/2"}}
    def to_json(self) -> dict:
        return {"blades": {key_name(k): fmt(v) for k, v in self.items()}}

    @classmethod
    def from_json(cls, obj) -> Multivector:
        if not isinstance(obj, dict) or not isinstance(obj.get("blades"), dict):
            raise SchemaError('multivector JSON must be {"blades": {...}}')
        coeffs = {}
        for name, val in obj["blades"].items():
            if not isinstance(val, (str, int)) or isinstance(val, bool):
                raise SchemaError(f"coefficient of {name!r} must be a rational string")
            coeffs[key_from_name(name)] = as_rational(val)
        return cls(coeffs)


def _mv(x) -> Multivector:
    return x if isinstance(x, Multivector) else Multivector.scalar(x)


def gp(a: Multivector, b: Multivector) -> Multivector:
    """Geometric product."""
    a, b = _mv(a), _mv(b)
    out: dict[int, Fraction] = {}
    for ka, ca in a._c.items():
        row = _TABLE[ka]
        for kb, cb in b._c.items():
            c = ca * cb
            for k, s in row[kb]:
                out[k] = out.get(k, 0) + c * s
    return Multivector(out)


def reverse(a: Multivector) -> Multivector:
    out = {}
    for k, v in _mv(a)._c.items():
        g = _grade(k)
        out[k] = -v if (g * (g - 1) // 2) % 2 else v
    return Multivector(out)


def grade_part(a: Multivector, k: int) -> Multivector:
    if not 0 <= k <= 5:
        raise ValueError("grade must be in 0..5")
    return Multivector({key: v for key, v in _mv(a)._c.items() if _grade(key) == k})


def _require_vector(*vs: Multivector) -> None:
    for v in vs:
        if not isinstance(v, Multivector) or v.grades() - {1}:
            raise NotAVector(f"expected a grade-1 vector, got {v!r}")


def dot2(a: Multivector, b: Multivector) -> Fraction:
    """Scalar product of two vectors."""
    _require_vector(a, b)
    return gp(a, b)[0]


def wedge2(a: Multivector, b: Multivector) -> Multivector:
    """Outer product of two vectors, ab - a.b."""
    _require_vector(a, b)
    return gp(a, b) - dot2(a, b)


def vector(x1=0, x2=0, x3=0, o=0, inf=0) -> Multivector:
    return Multivector({1: x1, 2: x2, 4: x3, _O: o, _INF: inf})


ONE = Multivector.scalar(1)
E1, E2, E3, EO, EI = (Multivector({1 << i: 1}) for i in range(5))
_BASIS = dict(zip(_CHARS, (E1, E2, E3, EO, EI)))


def blade(indices: str) -> Multivector:
    """Outer blade of basis vectors, e.g. ``blade("23oi")``; any order allowed."""
    indices = indices.replace("∞", "i")
    if len(set(indices)) != len(indices):
        return Multivector()
    return grade_part(basis_product(indices), len(indices))


def basis_product(indices: str) -> Multivector:
    """Geometric product of basis vectors in the given order (subscript notation such as e_{io})."""
    indices = indices.replace("∞", "i")
    return reduce(gp, (_BASIS[c] for c in indices), ONE)


_TERM = re.compile(r"\s*([+-])?\s*(\d+(?:/\d+)?)?\s*\*?\s*(e[123oi∞]+)?\s*")


def parse_terms(text: str) -> Multivector:
    """Parse ``"1 - 1/2 e3i + e3o + eio"``; each ``e..`` is a geometric product."""
    out = Multivector()
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos or (m.group(2) is None and m.group(3) is None):
            raise ValueError(f"cannot parse multivector term at {text[pos:]!r}")
        sign = -1 if m.group(1) == "-" else 1
        coef = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        unit = basis_product(m.group(3)[1:]) if m.group(3) else ONE
        out = out + sign * coef * unit
        pos = m.end()
    return out


# -- geometric dictionary ----------------------------------------------------

def embed_point(x1, x2, x3) -> Multivector:
    x1, x2, x3 = (as_rational(v) for v in (x1, x2, x3))
    return vector(x1, x2, x3, o=1, inf=(x1 * x1 + x2 * x2 + x3 * x3) / 2)


def make_plane(n1, n2, n3, d) -> Multivector:
    n1, n2, n3, d = (as_rational(v) for v in (n1, n2, n3, d))
    if not (n1 or n2 or n3):
        raise InvalidParams("plane normal must be nonzero")
    return vector(n1, n2, n3, inf=d)


def make_sphere(m1, m2, m3, sigma, alpha=1) -> Multivector:
    """Sphere with center m and squared radius sigma (negative: imaginary)."""
    m1, m2, m3, sigma, alpha = (as_rational(v) for v in (m1, m2, m3, sigma, alpha))
    if not alpha:
        raise InvalidParams("sphere weight must be nonzero")
    return alpha * vector(m1, m2, m3, o=1, inf=(m1 * m1 + m2 * m2 + m3 * m3 - sigma) / 2)


@dataclass(frozen=True)
class VectorKind:
    """Geometric reading of a nonzero vector.

    ``center`` holds the point coordinates (FinitePoint, spheres) or the plane
    normal (Plane); ``value`` is the squared radius for spheres and the offset
    d for planes.
    """

    tag: str
    center: tuple[Fraction, Fraction, Fraction] | None = None
    value: Fraction | None = None
    weight: Fraction | None = None

    def to_json(self) -> dict:
        out: dict = {"kind": self.tag}
        if self.tag == "FinitePoint":
            out["point"] = [fmt(c) for c in self.center]
        elif self.tag == "Plane":
            out["normal"] = [fmt(c) for c in self.center]
            out["offset"] = fmt(self.value)
        elif self.tag in ("RealSphere", "ImaginarySphere"):
            out["center"] = [fmt(c) for c in self.center]
            out["radius_squared"] = fmt(self.value)
        if self.weight is not None:
            out["weight"] = fmt(self.weight)
        return out


def classify_vector(v: Multivector) -> VectorKind:
    _require_vector(v)
    if v.is_zero():
        raise ZeroVector("the zero vector has no geometric meaning")
    alpha = v[_O]
    eucl = (v[1], v[2], v[4])
    if alpha == 0:
        if not any(eucl):
            return VectorKind("PointAtInfinity", weight=v[_INF])
        return VectorKind("Plane", center=eucl, value=v[_INF])
    center = tuple(c / alpha for c in eucl)
    sigma = dot2(v, v) / (alpha * alpha)
    if sigma == 0:
        return VectorKind("FinitePoint", center=center, weight=alpha)
    tag = "RealSphere" if sigma > 0 else "ImaginarySphere"
    return VectorKind(tag, center=center, value=sigma, weight=alpha)
