from __future__ import annotations

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import squigonometry as sg
from squigonometry import ParameterError, SquigParams


def derivative_rows_oracle(p: int, m: int, n: int, K: int) -> list[dict[int, int]]:
    """Rows 0..K via literal symbolic differentiation over the (a, b) basis.

    Tracks exact integer coefficients of cq^a sq^b terms and applies the
    product/chain rule directly (cq' = -sq^(p-1), sq' = cq^(p-1)); shares no
    code with the recursion it checks.
    """
    state: dict[tuple[int, int], int] = {(m, n): 1}
    rows: list[dict[int, int]] = []
    for k in range(K + 1):
        row: dict[int, int] = {}
        for (a, b), c in state.items():
            assert (b - (n - k)) % p == 0
            j = (b - (n - k)) // p
            assert a == m + k * (p - 1) - p * j
            row[j] = row.get(j, 0) + c * (-1) ** (j % 2)
        rows.append({j: v for j, v in row.items() if v})
        nxt: dict[tuple[int, int], int] = {}
        for (a, b), c in state.items():
            if a:
                key = (a - 1, b + p - 1)
                nxt[key] = nxt.get(key, 0) - a * c
            if b:
                key = (a + p - 1, b - 1)
                nxt[key] = nxt.get(key, 0) + b * c
        state = {key: v for key, v in nxt.items() if v}
    return rows


# Printed coefficient table for the 4-cosquine, orders 0..6.
GOLDEN_COSQUINE_P4 = [
    {0: 1},
    {1: 1},
    {1: 3},
    {1: 6, 2: 9},
    {1: 6, 2: 81, 3: 18},
    {2: 378, 3: 549, 4: 18},
    {2: 1134, 3: 6867, 4: 2394},
]

SWEEP = [(p, m, n) for p in (2, 3, 4) for m, n in ((1, 0), (0, 1), (2, 1))]


def test_golden_rows_cosquine_p4():
    tri = sg.build_triangle(SquigParams(p=4, m=1, n=0), 6)
    assert list(tri.rows) == GOLDEN_COSQUINE_P4


def test_golden_row_squine_p4():
    tri = sg.build_triangle(SquigParams(p=4, m=0, n=1), 4)
    assert tri.rows[4] == {1: 18, 2: 81, 3: 6}


def test_golden_row_squine_p6():
    tri = sg.build_triangle(SquigParams(p=6, m=0, n=1), 4)
    assert tri.rows[4] == {1: 100, 2: 425, 3: 60}


@pytest.mark.parametrize("p,m,n", SWEEP + [(4, 1, 1), (5, 0, 1), (6, 1, 0)])
def test_rows_match_symbolic_differentiation(p, m, n):
    tri = sg.build_triangle(SquigParams(p=p, m=m, n=n), 10)
    assert list(tri.rows) == derivative_rows_oracle(p, m, n, 10)


@pytest.mark.parametrize("p,m,n", SWEEP)
def test_structure_clean(p, m, n):
    tri = sg.build_triangle(SquigParams(p=p, m=m, n=n), 20)
    assert sg.verify_structure(tri) == []


def test_structure_empty_band_all_zero_function():
    tri = sg.build_triangle(SquigParams(p=3, m=0, n=0), 6)
    assert sg.verify_structure(tri) == []
    assert all(not row for row in tri.rows[1:])


def test_band_edges_are_falling_factorials():
    params = SquigParams(p=4, m=3, n=5)
    tri = sg.build_triangle(params, 12)
    for k in range(6):
        assert sg.coefficient(tri, k, 0) == sg.falling_factorial(5, k)
    for k in range(4):
        assert sg.coefficient(tri, k, k) == sg.falling_factorial(3, k)


@settings(max_examples=50, deadline=None)
@given(
    p=st.integers(min_value=2, max_value=5),
    m=st.integers(min_value=0, max_value=3),
    n=st.integers(min_value=0, max_value=3),
    k=st.integers(min_value=0, max_value=12),
)
def test_swap_symmetry(p, m, n, k):
    # Exchanging m and n reverses each row.
    a = sg.build_triangle(SquigParams(p=p, m=m, n=n), k)
    b = sg.build_triangle(SquigParams(p=p, m=n, n=m), k)
    assert a.rows[k] == {k - j: v for j, v in b.rows[k].items()}


@settings(max_examples=50, deadline=None)
@given(
    p=st.integers(min_value=2, max_value=6),
    m=st.integers(min_value=0, max_value=3),
    n=st.integers(min_value=0, max_value=3),
)
def test_entries_positive_inside_band(p, m, n):
    tri = sg.build_triangle(SquigParams(p=p, m=m, n=n), 15)
    for k, row in enumerate(tri.rows):
        j_lo, j_hi = sg.band_limits(tri.params, k)
        for j, v in row.items():
            assert v > 0
            assert j_lo <= j <= j_hi


def test_p2_rows_degenerate_to_single_entries():
    sine = sg.build_triangle(SquigParams(p=2, m=0, n=1), 12)
    cosine = sg.build_triangle(SquigParams(p=2, m=1, n=0), 12)
    for k in range(13):
        assert sine.rows[k] == {k // 2: 1}
        assert cosine.rows[k] == {(k + 1) // 2: 1}


def test_coefficient_out_of_band_is_zero():
    tri = sg.build_triangle(SquigParams(p=4, m=1, n=0), 6)
    assert sg.coefficient(tri, 6, 0) == 0
    assert sg.coefficient(tri, 6, 6) == 0
    with pytest.raises(ParameterError):
        sg.coefficient(tri, 7, 0)
    with pytest.raises(ParameterError):
        sg.coefficient(tri, -1, 0)


def test_json_round_trip_exact():
    tri = sg.build_triangle(SquigParams(p=3, m=2, n=1), 40)
    back = sg.triangle_from_json(sg.triangle_to_json(tri))
    assert back.params == tri.params
    assert back.K == tri.K
    assert list(back.rows) == list(tri.rows)


def test_json_uses_decimal_strings_for_values():
    tri = sg.build_triangle(SquigParams(p=4, m=1, n=0), 6)
    doc = json.loads(sg.triangle_to_json(tri))
    assert doc["rows"][6][0] == [2, "1134"]


def test_validation_errors():
    with pytest.raises(ParameterError):
        SquigParams(p=1, m=0, n=1)
    with pytest.raises(ParameterError):
        SquigParams(p=2.0, m=0, n=1)  # type: ignore[arg-type]
    with pytest.raises(ParameterError):
        sg.build_triangle(SquigParams(p=4, m=-1, n=0), 4)
    with pytest.raises(ParameterError):
        sg.build_triangle(SquigParams(p=4, m=1, n=0), -1)
    with pytest.raises(ParameterError):
        sg.falling_factorial(3, -1)


def test_falling_factorial_values():
    assert sg.falling_factorial(5, 0) == 1
    assert sg.falling_factorial(5, 3) == 60
    assert sg.falling_factorial(2, 4) == 0
    assert sg.falling_factorial(-1, 3) == -6
