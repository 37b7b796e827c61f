"""Frieze-matrix construction, validation, triangulation and determinants."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from friezecalc import (
    RATIONAL,
    FriezeMatrix,
    SeedData,
    TriangularMatrix,
    ZeroEntryError,
    build_from_seeds,
    check_ptolemy,
    check_t_properties,
    det_closed_form,
    det_cofactor,
    det_elimination,
    reconstruct_entry,
    triangulate,
    validate,
)
from friezecalc.generators import random_frieze_matrix

from conftest import el5, rat


def grid_of(m) -> list[list[str]]:
    rows = m.rows() if isinstance(m, FriezeMatrix) else m.rows
    return [[str(e) for e in row] for row in rows]


class TestBuildFromSeeds:
    def test_constant_x2_y3(self):
        m = build_from_seeds(
            SeedData(tuple(rat(2) for _ in range(4)), tuple(rat(3) for _ in range(3)))
        )
        for i in range(1, 3):
            assert m.entry(i, i + 3) == rat(Fraction(5, 2))
        assert m.entry(1, 5) == rat(Fraction(3, 4))
        assert validate(m).ok

    def test_n3_is_just_the_seeds(self):
        m = build_from_seeds(SeedData((rat(1), rat(1)), (rat(1),)))
        assert grid_of(m) == [["0", "1", "1"], ["1", "0", "1"], ["1", "1", "0"]]

    def test_quadratic_seeds(self, exm_seeds, exm_corrected):
        m = build_from_seeds(exm_seeds)
        assert m.entry(1, 4) == el5("2")
        assert m.entry(2, 5) == el5("1/2")
        assert m.entry(3, 6) == el5("-3 - 1/2*sqrt(5)")
        assert m.entry(2, 6) == el5("-1/2 + 1/4*sqrt(5)")
        assert m.entry(1, 6) == el5("-1 - 1/2*sqrt(5)")
        assert m == exm_corrected
        assert validate(m).ok

    def test_zero_entry_reported_with_index(self):
        # x = y = 1 forces a zero at distance 3
        seeds = SeedData(tuple(rat(1) for _ in range(4)), tuple(rat(1) for _ in range(3)))
        with pytest.raises(ZeroEntryError) as info:
            build_from_seeds(seeds)
        assert info.value.indices == (1, 4)

    def test_zero_seeds_rejected(self):
        with pytest.raises(ValueError):
            SeedData((rat(1), rat(0)), (rat(1),))


class TestValidate:
    def test_printed_example_flags_diamond(self, exm_printed):
        report = validate(exm_printed)
        assert not report.ok
        assert len(report.violations) == 1
        v = report.violations[0]
        assert v.rule == "diamond"
        assert v.indices == (3, 5)
        assert v.lhs == rat(-6) and v.rhs == rat(6)

    def test_corrected_example_passes(self, exm_corrected):
        assert validate(exm_corrected).ok

    def test_zero_off_diagonal(self):
        m = build_from_seeds(SeedData((rat(1), rat(1)), (rat(1),)))
        rows = [list(r) for r in m.rows()]
        rows[0][2] = rows[2][0] = RATIONAL.zero
        report = validate(FriezeMatrix(rows))
        assert any(
            v.rule == "nonzero_off_diagonal" and v.indices == (1, 3)
            for v in report.violations
        )

    def test_asymmetry_and_diagonal(self):
        m = build_from_seeds(SeedData((rat(1), rat(1)), (rat(1),)))
        rows = [list(r) for r in m.rows()]
        rows[0][1] = rat(7)
        rows[1][1] = rat(1)
        report = validate(FriezeMatrix(rows))
        rules = {v.rule for v in report.violations}
        assert "symmetry" in rules and "zero_diagonal" in rules


class TestPtolemy:
    def test_trivial_quadruple(self, exm_corrected):
        assert check_ptolemy(exm_corrected, (2, 2, 4, 6)).ok

    def test_example_quadruple(self, exm_corrected):
        m = exm_corrected
        assert m.entry(1, 4) * m.entry(3, 6) == el5("-6 - sqrt(5)")
        assert check_ptolemy(m, (1, 3, 4, 6)).ok

    def test_exhaustive_on_constant_matrix(self, const23):
        assert check_ptolemy(const23).ok

    def test_bad_quadruple_rejected(self, const23):
        with pytest.raises(IndexError):
            check_ptolemy(const23, (3, 1, 4, 6))
        with pytest.raises(IndexError):
            check_ptolemy(const23, (1, 2, 3, 7))

    def test_violation_reported_on_corrupted_matrix(self, exm_printed):
        report = check_ptolemy(exm_printed)
        assert not report.ok


def expected_stage_entry(m, k, i, j):
    """Independent closed form for stage k of the elimination, case by case.

    Stages 0..2 are the swap and the two explicit first reductions; from
    stage 3 on the entries follow the four-case description with the
    partial-sum form for the not-yet-reduced block.
    """
    e = m.entry
    if i == 1:
        return e(2, j)
    if i == 2:
        return e(1, j)
    if k == 0:
        return e(i, j)

    def m2(i, j):  # stage-2 value for rows >= 3
        return e(i, j) - e(1, i) * e(2, j) / e(1, 2) - e(2, i) * e(1, j) / e(1, 2)

    if k == 1:
        return e(i, j) - e(1, i) * e(2, j) / e(1, 2)
    if k == 2:
        return m2(i, j)
    if j <= min(i - 1, k):
        return m.field.zero
    if 3 <= i <= k + 1 and j >= i:
        return m.field.from_int(-2) * e(1, j) * e(i - 1, i) / e(1, i - 1)
    assert i >= k + 2 and j >= k + 1
    acc = m2(i, j)
    for t in range(3, k + 1):
        stage_t = m.field.from_int(-2) * e(1, j) * e(t - 1, t) / e(1, t - 1)
        acc = acc - e(1, i) * stage_t / e(1, t)
    return acc


def assert_trace_valid(m):
    t, trace = triangulate(m, keep_trace=True)
    n = m.n
    assert len(trace.matrices) == n
    for k, stage in enumerate(trace.matrices):
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                assert stage[i - 1][j - 1] == expected_stage_entry(m, k, i, j), (
                    f"stage {k} mismatch at ({i},{j})"
                )
    assert trace.matrices[-1] == t.rows
    det_m = det_elimination(m)
    for stage in trace.matrices:
        assert det_elimination(stage) == -det_m
    return t, trace


class TestTriangulate:
    def test_n3_fixture(self):
        m = build_from_seeds(SeedData((rat(1), rat(1)), (rat(1),)))
        t, _ = triangulate(m)
        assert grid_of(t) == [["1", "0", "1"], ["0", "1", "1"], ["0", "0", "-2"]]
        assert det_elimination(t) == rat(-2)
        assert det_cofactor(m) == rat(2)

    def test_example_diagonal(self, exm_corrected):
        t, _ = triangulate(exm_corrected)
        assert [str(v) for v in t.diagonal()] == ["1", "1", "8", "-12", "2", "-2 - sqrt(5)"]

    def test_first_two_rows_swapped(self, exm_corrected):
        t, _ = triangulate(exm_corrected)
        m = exm_corrected
        assert t.rows[0] == tuple(m.entry(2, j) for j in range(1, 7))
        assert t.rows[1] == tuple(m.entry(1, j) for j in range(1, 7))

    def test_trace_matches_stage_oracle(self, exm_corrected, const23):
        assert_trace_valid(exm_corrected)
        assert_trace_valid(const23)

    def test_trace_on_randoms(self):
        rng = random.Random(7)
        for _ in range(10):
            assert_trace_valid(random_frieze_matrix(rng, rng.randint(2, 8), RATIONAL))

    def test_trace_step_descriptions(self, const23):
        _, trace = triangulate(const23, keep_trace=True)
        assert trace.steps[0] == "swap rows 1 and 2"
        assert "R3 <- R3" in trace.steps[1]


class TestDeterminants:
    def test_identity_like(self):
        eye = [[RATIONAL.one if i == j else RATIONAL.zero for j in range(4)] for i in range(4)]
        assert det_elimination(eye) == RATIONAL.one
        assert det_cofactor(eye) == RATIONAL.one

    def test_minor_matrix_by_hand(self):
        grid = [
            [rat(0), rat(-3), rat(-6)],
            [rat(-3), rat(0), rat(-3)],
            [rat(-6), rat(-3), rat(0)],
        ]
        assert det_elimination(grid) == rat(-108)
        assert det_cofactor(grid) == rat(-108)

    def test_swap_accounting(self):
        grid = [[RATIONAL.zero, RATIONAL.one], [RATIONAL.one, RATIONAL.zero]]
        assert det_elimination(grid) == rat(-1)

    def test_singular(self):
        one = RATIONAL.one
        grid = [[one, one], [one, one]]
        assert det_elimination(grid).is_zero

    def test_example_value(self, exm_corrected):
        expected = el5("-384 - 192*sqrt(5)")
        assert det_closed_form(exm_corrected) == expected
        assert det_elimination(exm_corrected) == expected
        assert det_cofactor(exm_corrected) == expected

    def test_closed_equals_elimination_on_randoms(self):
        rng = random.Random(99)
        for _ in range(25):
            m = random_frieze_matrix(rng, rng.randint(3, 9), RATIONAL)
            d = det_closed_form(m)
            assert d == det_elimination(m)
            if m.n <= 6:
                assert d == det_cofactor(m)

    def test_n2(self):
        m = build_from_seeds(SeedData((rat(3),), ()))
        assert det_closed_form(m) == rat(-9)
        assert det_elimination(m) == rat(-9)


class TestReconstruct:
    def test_i3_j3_always_zero(self, exm_corrected, const23):
        assert reconstruct_entry(exm_corrected, 3, 3).is_zero
        assert reconstruct_entry(const23, 3, 3).is_zero

    def test_example_entry(self, exm_corrected):
        assert reconstruct_entry(exm_corrected, 3, 4) == el5("6")

    def test_constant_matrix_y_entry(self, const23):
        assert reconstruct_entry(const23, 4, 6) == rat(3)

    def test_full_range(self, exm_corrected):
        m = exm_corrected
        for i in range(3, m.n + 1):
            for j in range(i, m.n + 1):
                assert reconstruct_entry(m, i, j) == m.entry(i, j)

    def test_index_errors(self, const23):
        for bad in ((2, 3), (3, 2), (7, 7), (3, 7)):
            with pytest.raises(IndexError):
                reconstruct_entry(const23, *bad)


class TestTProperties:
    def test_example(self, exm_corrected):
        t, _ = triangulate(exm_corrected)
        assert check_t_properties(t, exm_corrected).ok

    def test_quiddity_matrix(self):
        m = build_from_seeds(
            SeedData(tuple(rat(1) for _ in range(3)), (rat(1), rat(2)))
        )
        t, _ = triangulate(m)
        assert check_t_properties(t, m).ok

    def test_perturbed_t_reports_zero_diamond(self, const23):
        t, _ = triangulate(const23)
        rows = [list(r) for r in t.rows]
        rows[2][4] = rows[2][4] + rat(1)
        report = check_t_properties(TriangularMatrix(tuple(tuple(r) for r in rows)), const23)
        assert not report.ok
        assert any(v.rule == "zero_diamond" for v in report.violations)
