import pytest
import sympy
from hypothesis import given, strategies as st

from bbdehn.stacks import (
    StackParams,
    closed_form_length,
    corridor_area,
    cubic_bound,
    growth_exponent,
    length_gap,
    lower_bound_area,
    next_length_from_types,
    stack_area,
    sweep,
    verify_cubic_bound,
    worst_case_stack_profile,
)

params = st.builds(StackParams, st.integers(3, 8), st.integers(0, 30), st.integers(0, 60))


def test_worked_profile():
    p = StackParams(3, 2, 3)
    assert worst_case_stack_profile(p) == (2, 9, 24, 43)
    assert stack_area((2, 9, 24, 43)) == 111
    assert verify_cubic_bound(p) == (111, 12420, True)


def test_small_cases():
    assert worst_case_stack_profile(StackParams(3, 0, 0)) == (0,)
    assert verify_cubic_bound(StackParams(3, 0, 1)) == (3, 276, True)
    assert cubic_bound(StackParams(3, 5, 0)) == 0


def test_params_validated():
    for bad in ((2, 0, 1), (3, -1, 1), (3, 0, -1)):
        with pytest.raises(ValueError):
            StackParams(*bad)


def test_first_word_from_types():
    # every vertex of the top word has the maximal type
    for k in range(3, 7):
        for l in range(0, 12):
            assert worst_case_stack_profile(StackParams(k, l, 1))[1] == next_length_from_types({k: l + 1})
    assert next_length_from_types({2: 3, 3: 1}) == 9
    with pytest.raises(ValueError):
        next_length_from_types({3: -1})


def test_corridor_area():
    assert corridor_area(2, 9) == 11
    with pytest.raises(ValueError):
        corridor_area(-1, 2)


@given(params)
def test_area_is_sum_of_corridors(p):
    prof = worst_case_stack_profile(p)
    assert len(prof) == p.h + 1
    if p.h:
        assert stack_area(prof) == sum(corridor_area(a, b) for a, b in zip(prof, prof[1:]))
    assert all(b > a for a, b in zip(prof, prof[1:]))


@given(params)
def test_recurrence_and_gaps(p):
    prof = worst_case_stack_profile(p)
    for i in range(2, p.h):
        assert prof[i + 1] - prof[i - 1] == length_gap(p, i)
        assert closed_form_length(p, i) == prof[i + 1]
    assert length_gap(p, 4) - length_gap(p, 2) == 8 * p.k - 8


def test_closed_form_range():
    p = StackParams(3, 1, 5)
    with pytest.raises(IndexError):
        closed_form_length(p, 1)
    with pytest.raises(IndexError):
        closed_form_length(p, 5)


def test_closed_form_symbolically():
    # sum the gap recurrence with sympy and compare with the closed form
    k, l, j = sympy.symbols("k l j", integer=True, positive=True)
    gap = lambda i: 2 * k * l + 2 * l + 4 * i * k - 4 * i + 2
    t1 = k * (l + 1)
    t2 = 2 * k * l + l + 4 * k - 2
    for i in range(2, 30):
        if i % 2 == 0:
            expr = t1 + sum(gap(s) for s in range(2, i + 1, 2))
        else:
            expr = t2 + sum(gap(s) for s in range(3, i + 1, 2))
        for kv, lv in ((3, 0), (4, 7), (9, 2)):
            assert int(expr.subs({k: kv, l: lv})) == closed_form_length(StackParams(kv, lv, i + 1), i)


def test_lower_bound_values():
    assert lower_bound_area(1, 1) == 2
    assert lower_bound_area(1, 3) == 32
    c, r, i = sympy.symbols("c r i", integer=True, positive=True)
    closed = sympy.simplify(c * r + c + sympy.summation(4 * i * (c * (r - i) + c), (i, 1, r - 1)))
    for cv in (1, 2, 5):
        for rv in (1, 2, 7, 40):
            assert lower_bound_area(cv, rv) == int(closed.subs({c: cv, r: rv}))
    with pytest.raises(ValueError):
        lower_bound_area(1, 0)


def test_growth_exponent_exact_powers():
    for e in (1, 2, 3, 4):
        assert growth_exponent([(n, n ** e) for n in range(1, 20)]) == pytest.approx(e)
    # lower-order terms fade in the top half
    assert growth_exponent([(n, n ** 3 + 50 * n ** 2) for n in range(100, 2000, 100)]) == pytest.approx(3, abs=0.1)


@pytest.mark.parametrize("samples", [
    [(1, 1), (2, 2), (3, 3)],
    [(1, 1), (1, 2), (3, 3), (4, 4)],
    [(1, 1), (2, 0), (3, 3), (4, 4)],
])
def test_growth_exponent_rejects(samples):
    with pytest.raises(ValueError):
        growth_exponent(samples)


def test_small_sweep_matches_direct():
    rows = list(sweep(range(3, 5), range(0, 4), range(1, 12)))
    for k, l, h, area, bound, ok in rows:
        assert (area, bound, ok) == verify_cubic_bound(StackParams(k, l, h))
