import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from confstudy.clifford import EI, EO, Multivector, N_BLADES, vector, wedge2
from confstudy.fourquat import FourQuat, Quaternion, split

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)
points = st.tuples(small, small, small)


@st.composite
def multivectors(draw, max_terms=6):
    keys = draw(st.lists(st.integers(0, N_BLADES - 1), max_size=max_terms, unique=True))
    return Multivector({k: draw(small) for k in keys})


@st.composite
def vectors(draw):
    return vector(*(draw(small) for _ in range(5)))


@st.composite
def quaternions(draw):
    return Quaternion(*(draw(small) for _ in range(4)))


@st.composite
def fourquats(draw):
    return FourQuat(*(draw(quaternions()) for _ in range(4)))


@st.composite
def line_directions(draw):
    """split(a ^ b) for random vectors with a nonzero wedge."""
    a = draw(vectors())
    b = draw(vectors())
    w = wedge2(a, b)
    from hypothesis import assume

    assume(not w.is_zero())
    return split(w)


def rand_fraction(rng: random.Random, lo=-9, hi=9, den=5) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, den))


def rand_fourquat(rng: random.Random) -> FourQuat:
    return FourQuat.from_coords([rand_fraction(rng) for _ in range(16)])


def rand_vector(rng: random.Random, lo=-4, hi=4):
    return vector(*(Fraction(rng.randint(lo, hi)) for _ in range(5)))


def rand_direction(rng: random.Random) -> FourQuat:
    while True:
        w = wedge2(rand_vector(rng), rand_vector(rng))
        if not w.is_zero():
            return split(w)


@pytest.fixture
def rng():
    return random.Random(20240611)


def rand_rotor(rng: random.Random, factors: int = 3) -> FourQuat:
    """Product of random Dorst rotors t + q, kept off the null quadric."""
    from confstudy.fourquat import fq_mul
    from confstudy.study import null_value

    while True:
        acc = FourQuat.scalar(1)
        for _ in range(factors):
            acc = fq_mul(acc, rand_direction(rng) + rand_fraction(rng))
        if null_value(acc) != 0:
            return acc


def rand_se3(rng: random.Random) -> FourQuat:
    """Random dual quaternion q0 + eps1 q1 with S(q0, q1) = 0."""
    while True:
        q0 = Quaternion(*(rand_fraction(rng) for _ in range(4)))
        if not q0.is_zero():
            break
    v = Quaternion.vector([rand_fraction(rng) for _ in range(3)])
    return FourQuat(q0, v * q0 * Fraction(-1, 2))


def case_direction(rng: random.Random, case: str) -> FourQuat:
    """Random split(a ^ b) falling into the given decomposition case (1.1, 1.2 or 2)."""
    while True:
        a = rand_vector(rng)
        b = rand_vector(rng)
        if case == "1.1":
            a, b = a - EO * a["eo"], b - EO * b["eo"]
        elif case == "1.2":
            a = a - EO * a["eo"] - EO
            b = b - EO * b["eo"] - EI * b["ei"]
        else:
            b = b - EO * b["eo"] + EI * (1 if b["ei"] == 0 else 0)
        w = wedge2(a, b)
        if w.is_zero():
            continue
        q = split(w)
        hit = {"1.1": q.q2.is_zero() and q.q3.is_zero(), "1.2": q.q3.is_zero() and not q.q2.is_zero(),
               "2": not q.q3.is_zero()}[case]
        if hit:
            return q


ACCEPTANCE_LINES: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])
