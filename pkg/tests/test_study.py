import json
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings

from confstudy.clifford import gp, reverse
from confstudy.errors import InvalidParams, NotOnStudy
from confstudy.fourquat import (
    EPS1, FQ_ONE, FourQuat, QI, QJ, QK, QONE, Quaternion, dq_embed, fq_mul, fq_reverse, join,
)
from confstudy.linalg import rank
from confstudy.study import (
    GENERATOR_LABELS, GroupTag, generators_along_line, ideal_generators, jacobian, jacobian_rank,
    null_value, on_study, rotor_norm, subgroup_member, subgroups,
)

from conftest import fourquats, line_directions, rand_fourquat, rand_rotor, rand_se3
from fixture_data import FIXTURES, H, MINIMALITY_WITNESSES, SCALING

Z = Quaternion()
X = sympy.symbols("x0:16")


def symbolic_generators():
    return [sympy.expand(g) for g in ideal_generators(FourQuat.from_coords(list(X))).values]


def test_generator_examples():
    assert ideal_generators(FQ_ONE).is_zero()
    assert ideal_generators(H[2]).is_zero()
    assert ideal_generators(FourQuat(QONE, QI)).is_zero()
    assert len(GENERATOR_LABELS) == 10
    assert [d["label"] for d in ideal_generators(FQ_ONE).to_json()] == list(GENERATOR_LABELS)


def test_on_study_examples():
    assert on_study(FQ_ONE)
    assert not on_study(FourQuat(QONE, Z, Z, QI))
    assert on_study(H[0])
    with pytest.raises(InvalidParams):
        on_study(FourQuat())


def test_null_value_and_norm_examples():
    assert null_value(FQ_ONE) == 1
    assert null_value(H[0]) == 4
    assert null_value(H[2]) == 0
    assert rotor_norm(FQ_ONE) == 1
    assert rotor_norm(H[1]) == -4
    a, b = QI + QONE * 2, QJ * 3
    assert rotor_norm(dq_embed(a, b)) == a.norm()
    with pytest.raises(NotOnStudy):
        rotor_norm(FourQuat(QONE, Z, Z, QI))


def test_subgroup_examples():
    assert subgroup_member(FourQuat(QK), GroupTag.SO3)
    assert subgroup_member(SCALING, "Sim")
    assert SCALING == FourQuat.of(5, 0, 0, -3)
    assert subgroup_member(FourQuat(QONE, Z, QI), GroupTag.Transversion)
    assert subgroup_member(FourQuat(QONE, QI * Fraction(-1, 2)), GroupTag.SE3)
    assert subgroup_member(SCALING, GroupTag.ScaleTrans)
    assert subgroup_member(FourQuat(Z, QI, Z, QJ), GroupTag.Em)
    with pytest.raises(NotOnStudy):
        subgroup_member(FourQuat(QONE, Z, Z, QI), GroupTag.SE3)


def test_subgroup_inclusions_on_random_members():
    rng = random.Random(3)
    for _ in range(40):
        q = rand_se3(rng)
        tags = set(subgroups(q))
        assert GroupTag.SE3 in tags and GroupTag.Sim in tags
        r = FourQuat(q.q0)
        assert {GroupTag.SO3, GroupTag.SE3, GroupTag.Sim} <= set(subgroups(r))


@settings(max_examples=150, deadline=None)
@given(fourquats())
def test_generators_faithful_to_norm_scalarness(q):
    if q.is_zero():
        return
    m = join(q)
    left, right = gp(m, reverse(m)), gp(reverse(m), m)
    real = left.grades() <= {0} and right.grades() <= {0}
    assert on_study(q) == real


def test_generators_span_norm_conditions():
    q = FourQuat.from_coords(list(X))
    nonscalar = []
    for prod in (fq_mul(q, fq_reverse(q)), fq_mul(fq_reverse(q), q)):
        nonscalar += [sympy.expand(c) for c in prod.coords()[1:]]
    gens = symbolic_generators()
    monos = sorted({m for e in gens + nonscalar for m in sympy.Poly(e, *X).monoms()})

    def row(e):
        p = sympy.Poly(e, *X)
        return [Fraction(int(p.coeff_monomial(m))) for m in monos]

    assert rank([row(g) for g in gens]) == 10
    assert rank([row(e) for e in nonscalar if e != 0]) == 10
    assert rank([row(e) for e in gens + nonscalar if e != 0]) == 10


def test_generators_linearly_minimal():
    # No generator lies in the span of the other nine.
    gens = symbolic_generators()
    monos = sorted({m for g in gens for m in sympy.Poly(g, *X).monoms()})
    rows = [[Fraction(int(sympy.Poly(g, *X).coeff_monomial(m))) for m in monos] for g in gens]
    for i in range(10):
        assert rank(rows[:i] + rows[i + 1:]) == 9


def test_vector_generator_obstruction():
    # If nine generators vanish at a point the tenth does too, whenever the tenth is one of 4..9.
    g = symbolic_generators()
    lhs = sum(v ** 2 for v in g[4:7]) - sum(v ** 2 for v in g[7:10])
    assert sympy.expand(lhs - 4 * (g[1] * g[2] - g[0] * g[3])) == 0


def test_minimality_witness_fixtures():
    stored = json.loads((FIXTURES / "minimality_witnesses.json").read_text())
    assert {int(k) for k in stored} == set(MINIMALITY_WITNESSES)
    for k, coords in stored.items():
        vals = ideal_generators(FourQuat.from_coords([Fraction(c) for c in coords])).values
        assert [i for i, v in enumerate(vals) if v] == [int(k)]


def test_jacobian_matches_symbolic_differentiation():
    gens = symbolic_generators()
    rng = random.Random(11)
    for _ in range(5):
        q = rand_fourquat(rng)
        subs = {x: sympy.Rational(c.numerator, c.denominator) for x, c in zip(X, q.coords())}
        sym = [[Fraction(str(sympy.diff(g, x).subs(subs))) for x in X] for g in gens]
        assert jacobian(q) == sym


def test_jacobian_rank_examples():
    assert jacobian_rank(FQ_ONE) == 5
    rng = random.Random(5)
    assert jacobian_rank(fq_mul(H[0] + 1, rand_rotor(rng))) == 5
    assert jacobian_rank(rand_se3(rng)) == 5


def test_null_quadric_gram_regular():
    q = FourQuat.from_coords(list(X))
    form = sympy.Poly(sympy.expand(null_value(q)), *X)
    gram = [[Fraction(str(sympy.Rational(1, 2) * sympy.diff(form.as_expr(), a, b))) for b in X] for a in X]
    assert rank(gram) == 16


def test_dual_quaternion_specialization():
    q = FourQuat(*(Quaternion(*X[4 * i:4 * i + 4]) for i in range(2)))
    form = sympy.expand(null_value(q))
    assert form == sum(x ** 2 for x in X[:4])
    assert rank([[Fraction(str(sympy.diff(form, a, b))) for b in X[:8]] for a in X[:8]]) == 4


def test_norm_multiplicative_on_study():
    rng = random.Random(13)
    for _ in range(30):
        p, s = rand_rotor(rng, 2), rand_rotor(rng, 1)
        ps = fq_mul(p, s)
        assert on_study(ps)
        assert rotor_norm(ps) == rotor_norm(p) * rotor_norm(s)


@settings(max_examples=60, deadline=None)
@given(line_directions())
def test_lines_through_identity_lie_on_study(q):
    for coeffs in generators_along_line(q):
        assert coeffs == (0, 0, 0)
    assert rotor_norm(q + 7) == null_value(q + 7)
