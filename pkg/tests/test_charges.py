import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from dynkinstab.charges import (
    GQ,
    I,
    act_weyl,
    charge,
    charge_from_json,
    charge_to_json,
    evaluate,
    in_fundamental,
    in_fundamental_closure,
    parse_rational,
    scale,
)
from dynkinstab.diagrams import build_diagram
from dynkinstab.errors import InvalidInputError
from dynkinstab.rootsys import is_regular
from dynkinstab.weylbraid import simple_reflection, word_to_matrix

A2 = build_diagram("A", 2)
rats = st.fractions(min_value=-20, max_value=20, max_denominator=12)
gqs = st.builds(GQ, rats, rats)


@given(gqs, gqs)
def test_arithmetic_matches_complex(a, b):
    ca, cb = complex(float(a.re), float(a.im)), complex(float(b.re), float(b.im))
    for got, want in [(a + b, ca + cb), (a - b, ca - cb), (a * b, ca * cb)]:
        assert abs(complex(float(got.re), float(got.im)) - want) < 1e-9
    if b:
        q = a / b
        assert q * b == a


def test_gq_basics():
    assert I * I == -1
    assert GQ(1, 2).conjugate() == GQ(1, -2)
    assert not GQ() and GQ(0, 1)
    assert GQ(3).is_integer() and not GQ(Fraction(1, 2)).is_integer()
    assert str(GQ(Fraction(1, 2), -3)) == "1/2-3i"
    with pytest.raises(ZeroDivisionError):
        GQ(1) / GQ()
    with pytest.raises(TypeError):
        GQ.of(1.5j)


def test_evaluate_examples():
    assert evaluate((I, I), (1, 1)) == GQ(0, 2)
    assert evaluate((I, GQ(1)), (1, 1)) == GQ(1, 1)
    assert evaluate((GQ(3, 4), GQ(-1, 2)), (0, 0)) == 0


def test_act_weyl_examples():
    Z = (I, I)
    assert act_weyl(word_to_matrix(A2, ()), Z) == Z
    s1 = simple_reflection(A2, 1)
    assert act_weyl(s1, Z) == (GQ(0, -1), GQ(0, 2))
    assert act_weyl(s1, act_weyl(s1, Z)) == Z


@given(st.lists(st.sampled_from([1, 2, 3]), max_size=6), st.lists(gqs, min_size=3, max_size=3))
def test_act_weyl_preserves_regularity(w, Z):
    d = build_diagram("A", 3)
    M = word_to_matrix(d, [(x, 1) for x in w])
    assert is_regular(d, Z).regular == is_regular(d, act_weyl(M, Z)).regular


@given(st.lists(gqs, min_size=3, max_size=3), gqs.filter(bool))
def test_scaling_preserves_regularity(Z, mu):
    d = build_diagram("A", 2, True)
    assert is_regular(d, Z).regular == is_regular(d, scale(mu, Z)).regular


def test_act_weyl_is_left_action():
    d = build_diagram("A", 3)
    rng = random.Random(3)
    Z = tuple(GQ(rng.randint(-5, 5), rng.randint(1, 5)) for _ in range(3))
    a = word_to_matrix(d, [(1, 1), (2, 1)])
    b = word_to_matrix(d, [(3, 1), (2, 1)])
    ab = word_to_matrix(d, [(1, 1), (2, 1), (3, 1), (2, 1)])
    assert act_weyl(ab, Z) == act_weyl(a, act_weyl(b, Z))


def test_fundamental_predicates():
    assert in_fundamental((I, I))
    assert not in_fundamental((I, GQ(1)))
    assert not in_fundamental(charge([(0, 1), 1]))
    assert in_fundamental_closure((GQ(-1), I))
    assert not in_fundamental_closure((GQ(1), I))


def test_scale_rejects_zero():
    with pytest.raises(InvalidInputError):
        scale(GQ(), (I,))


def test_json_examples():
    assert charge_from_json([{"re": "0", "im": "1"}, {"re": "0", "im": "1"}]) == (I, I)
    z = charge_from_json([{"re": "1/2", "im": "-3/7"}], 1)
    assert z == (GQ(Fraction(1, 2), Fraction(-3, 7)),)
    for bad in ([{"re": "0.5", "im": "0"}], [{"re": 0.5, "im": "0"}], [{"re": "1/0", "im": "0"}],
                [{"re": "1"}], {"re": "1", "im": "1"}):
        with pytest.raises(InvalidInputError):
            charge_from_json(bad)
    with pytest.raises(InvalidInputError):
        charge_from_json([{"re": "0", "im": "1"}], 2)


@given(st.lists(gqs, min_size=1, max_size=5))
def test_json_round_trip(Z):
    assert charge_from_json(charge_to_json(Z)) == tuple(Z)


def test_parse_rational():
    assert parse_rational("-3/6") == Fraction(-1, 2)
    assert parse_rational(4) == 4
    for bad in ("1e3", "1.0", "", "1/2/3", True):
        with pytest.raises(InvalidInputError):
            parse_rational(bad)
