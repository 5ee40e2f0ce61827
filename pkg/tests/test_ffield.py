import pytest
from hypothesis import given, settings, strategies as st

from carlitz.errors import FieldConstructionError
from carlitz.ffield import FieldContext, FqElem

SUPPORTED = [3, 4, 5, 7, 8, 9, 16, 25, 27]


def test_q2_rejected_with_reason():
    with pytest.raises(FieldConstructionError, match="q > 2"):
        FieldContext(2)


def test_non_prime_power_rejected():
    for q in (6, 12, 15):
        with pytest.raises(FieldConstructionError):
            FieldContext(q)


def test_bad_modulus_rejected():
    # x^2 + 2 = (x + 1)(x + 2) over F_3 is reducible
    with pytest.raises(FieldConstructionError, match="irreducible"):
        FieldContext(9, modulus=(2, 0, 1))
    with pytest.raises(FieldConstructionError, match="degree"):
        FieldContext(9, modulus=(1, 1))


def test_custom_modulus_accepted():
    # x^2 + x + 2 is irreducible over F_3
    ctx = FieldContext(9, modulus=(2, 1, 1))
    a = ctx.element((0, 1))  # x
    assert (a * a).coords == (1, 2)  # x^2 = -x - 2 = 2x + 1


@pytest.mark.parametrize("q", SUPPORTED)
def test_field_axioms_exhaustive_small(q):
    ctx = FieldContext(q)
    els = range(q)
    for a in els:
        assert ctx.add[a][0] == a
        assert ctx.mul[a][1] == a
        assert ctx.add[a][ctx.neg[a]] == 0
        if a:
            assert ctx.mul[a][ctx.inv[a]] == 1
        # Frobenius fixes F_q pointwise: a^q = a
        assert ctx.epow(a, q) == a
    if q <= 9:
        for a in els:
            for b in els:
                assert ctx.add[a][b] == ctx.add[b][a]
                assert ctx.mul[a][b] == ctx.mul[b][a]
                for c in els:
                    assert ctx.mul[a][ctx.add[b][c]] == \
                        ctx.add[ctx.mul[a][b]][ctx.mul[a][c]]


def test_f4_known_table():
    ctx = FieldContext(4)
    x = ctx.element((0, 1))
    assert (x * x).coords == (1, 1)       # x^2 = x + 1
    assert (x * x * x).code == 1          # x^3 = 1
    assert (x + x).code == 0              # characteristic 2


def test_element_ops_and_errors(ctx3, ctx5):
    a = ctx3.element(2)
    b = ctx3.element(1)
    assert (a + b).code == 0
    assert (a * a).code == 1
    assert (a / a).code == 1
    assert (-a).code == 1
    assert a ** -1 == a.__pow__(-1)
    with pytest.raises(ZeroDivisionError):
        a / ctx3.element(0)
    with pytest.raises(FieldConstructionError):
        a + ctx5.element(2)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([3, 4, 9, 25]), st.data())
def test_pow_matches_repeated_multiplication(q, data):
    ctx = FieldContext(q)
    a = data.draw(st.integers(0, q - 1))
    n = data.draw(st.integers(0, 12))
    expected = 1
    for _ in range(n):
        expected = ctx.mul[expected][a]
    assert ctx.epow(a, n) == expected


def test_context_equality_and_elements_order(ctx3):
    assert FieldContext(3) == ctx3
    assert FieldContext(4) != ctx3
    assert [e.code for e in ctx3.elements()] == [0, 1, 2]
    assert repr(FieldContext(4).element(3)) == "[x + 1]"
