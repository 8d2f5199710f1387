from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from staircase_tableaux import (
    Symbol,
    Tableau,
    counts,
    dagger,
    parse,
    render_text,
    serialize,
    subtableau,
    validate,
    weight,
    weight_exponents,
)
from staircase_tableaux.enumeration import enumerate_ab, enumerate_four
from staircase_tableaux.errors import (
    DomainError,
    InvalidTableauError,
    MalformedDocumentError,
)

A, B, G, D = Symbol.ALPHA, Symbol.BETA, Symbol.GAMMA, Symbol.DELTA


def test_showcase_is_valid(showcase8):
    assert validate(showcase8) == []


def test_smallest_tableau_valid():
    assert validate(Tableau.of(1, [(1, 1, A)])) == []


def test_rule_iii_violation():
    t = Tableau.of(2, [(1, 1, B), (1, 2, B), (2, 1, A)])
    violations = validate(t)
    assert any(v.rule == "iii" and v.box == (1, 2) for v in violations)


def test_rule_iv_violation():
    t = Tableau.of(2, [(1, 1, B), (1, 2, A), (2, 1, A)])
    violations = validate(t)
    assert [(v.rule, v.box) for v in violations] == [("iv", (2, 1))]


def test_empty_diagonal_reported():
    t = Tableau.of(2, [(1, 2, A)])
    assert any(v.rule == "ii" and v.box == (2, 1) for v in validate(t))


def test_out_of_shape_reported_first():
    t = Tableau.of(2, [(2, 2, A)])
    violations = validate(t)
    assert violations[0].rule == "shape" and violations[0].box == (2, 2)


def test_validation_reports_all_violations():
    # two empty diagonal boxes, one rule-iii breach, one rule-iv breach
    t = Tableau.of(3, [(1, 1, B), (1, 2, B), (2, 1, A), (1, 3, A)])
    rules = sorted(v.rule for v in validate(t))
    assert rules == ["ii", "ii", "iii", "iv"]


def test_counts_showcase(showcase8):
    c = counts(showcase8)
    assert (c.n_alpha, c.n_beta, c.n_delta, c.n_gamma) == (5, 2, 3, 3)
    # alpha-indexed rows of the fixture: 1, 3 and 8
    assert c.alpha_indexed_rows == 3
    assert c.diagonal_alpha == 2 and c.diagonal_beta == 1


def test_counts_all_alpha_diagonal():
    n = 5
    t = Tableau.of(n, [(i, n + 1 - i, A) for i in range(1, n + 1)])
    c = counts(t)
    assert c.n_alpha == c.diagonal_alpha == n
    assert c.alpha_indexed_rows == n
    assert c.n_beta == c.n_gamma == c.n_delta == 0


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_r_identity_ab(n):
    for t in enumerate_ab(n):
        c = counts(t)
        assert c.alpha_indexed_rows == n - c.n_beta
        assert c.diagonal_alpha + c.diagonal_beta == n


def test_weight_showcase(showcase8):
    assert weight(showcase8, 1, 1, 1, 1) == 1
    assert weight_exponents(showcase8) == (5, 2, 3, 3)


def test_weight_size2():
    t = Tableau.of(2, [(2, 1, A), (1, 2, B)])
    assert weight(t, 2, 3, 0, 0) == 6


def test_subtableau_identity(showcase8):
    assert subtableau(showcase8, 1, 1) == showcase8


def test_subtableau_size(showcase8):
    s = subtableau(showcase8, 1, 2)
    assert s.n == 7
    assert validate(s) == []


def test_subtableau_out_of_range(showcase8):
    with pytest.raises(DomainError):
        subtableau(showcase8, 4, 6)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_subtableau_always_valid(n):
    for t in enumerate_ab(n):
        for i in range(1, n + 1):
            for j in range(1, n + 2 - i):
                assert validate(subtableau(t, i, j)) == []


def test_dagger_swaps_diagonal():
    n = 4
    t = Tableau.of(n, [(i, n + 1 - i, A) for i in range(1, n + 1)])
    d = dagger(t)
    assert all(s is B for s in d.diagonal())


def test_dagger_counts_swap(showcase8):
    c, cd = counts(showcase8), counts(dagger(showcase8))
    assert (cd.n_alpha, cd.n_beta) == (c.n_beta, c.n_alpha)
    assert (cd.n_gamma, cd.n_delta) == (c.n_delta, c.n_gamma)
    assert (cd.diagonal_alpha, cd.diagonal_beta) == (c.diagonal_beta, c.diagonal_alpha)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_dagger_involution_and_validity(n):
    for t in enumerate_four(n):
        d = dagger(t)
        assert validate(d) == []
        assert len(d.cells) == len(t.cells)
        assert dagger(d) == t


def test_render_showcase(showcase8):
    assert render_text(showcase8) == "\n".join([
        ".a.....g",
        ".b..a.g",
        "..a..g",
        "....d",
        ".d.a",
        "..d",
        ".b",
        "a",
    ])


def test_render_row_widths(showcase8):
    widths = [len(line) for line in render_text(showcase8).splitlines()]
    assert widths == [8, 7, 6, 5, 4, 3, 2, 1]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_serialize_round_trip(n):
    for t in enumerate_ab(n):
        assert parse(serialize(t)) == t


def test_serialize_is_canonical(showcase8):
    data = serialize(showcase8)
    assert data == serialize(parse(data))
    assert b'"sym":"alpha"' in data


def test_parse_rejects_malformed():
    with pytest.raises(MalformedDocumentError):
        parse(b"not json")
    with pytest.raises(MalformedDocumentError):
        parse(b'{"n": 1}')
    with pytest.raises(MalformedDocumentError):
        parse(b'{"n": 1, "cells": [{"row": 1, "col": 1, "sym": "epsilon"}]}')


def test_parse_rejects_invalid_tableau():
    with pytest.raises(InvalidTableauError):
        parse(b'{"n": 1, "cells": []}')   # empty diagonal


def test_duplicate_cell_rejected():
    with pytest.raises(ValueError):
        Tableau.of(2, [(1, 1, A), (1, 1, B), (1, 2, A), (2, 1, B)])


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_symbol_count_bounds(n):
    for t in enumerate_ab(n):
        total = len(t.cells)
        assert n <= total <= 2 * n - 1


@pytest.mark.parametrize("n", [1, 2, 3])
def test_per_line_symbol_limits(n):
    for t in enumerate_four(n):
        per_col: dict[int, int] = {}
        per_row: dict[int, int] = {}
        for r, c, s in t.cells:
            if s.column_type:
                per_col[c] = per_col.get(c, 0) + 1
            else:
                per_row[r] = per_row.get(r, 0) + 1
        assert all(v <= 1 for v in per_col.values())
        assert all(v <= 1 for v in per_row.values())


@st.composite
def sampled_tableaux(draw):
    from staircase_tableaux.sampling import Params, sample_ab

    n = draw(st.integers(min_value=1, max_value=6))
    seed = draw(st.integers(min_value=0, max_value=2**63))
    a = draw(st.sampled_from([F(0), F(1, 3), F(1), F(5, 2)]))
    b = draw(st.sampled_from([F(0), F(1, 2), F(1), F(4)]))
    return sample_ab(n, Params(a, b), seed)


@given(sampled_tableaux())
@settings(max_examples=60, deadline=None)
def test_sampled_tableaux_invariants(t):
    assert validate(t) == []
    assert parse(serialize(t)) == t
    assert dagger(dagger(t)) == t
    c = counts(t)
    assert t.n <= c.total <= 2 * t.n - 1
