import json
import math

import pytest

from gaussorder.bounds import (
    BOUND_NAMES,
    EXAMPLE_PAIRS,
    BoundReport,
    classify_regime,
    closed_form,
    closed_form_case1,
    closed_form_case2,
    exact_bound_z1,
    exact_bound_z2,
    exact_bound_z3,
    log2_int,
    render_table,
    table_row,
)
from gaussorder.errors import NotPrime, WrongRegime
from gaussorder.partitions import count_partitions, count_partitions_bounded

# Reference table rows (p, r) -> (log2 group order, log2 z1, z2, z3).
REFERENCE_ROWS = {
    (5, 257): (594.41, 26.93, 27.03, 64.43),
    (3, 401): (634.0, 35.65, 39.22, 77.86),
    (11, 1009): (3487.1, 74.24, 90.13, 153.64),
}
# The case2 reference row disagrees with a direct evaluation of the closed
# forms; both value sets are recorded here and the constants are not tuned
# to force agreement.
CASE2_REFERENCE = (647.18, 24.71, 28.71, 38.89)
CASE2_COMPUTED = (647.18, 24.88, 29.94, 39.17)


class TestExactBounds:
    def test_z1_values(self):
        assert exact_bound_z1(2, 5) == 2  # U(3, 1)
        assert exact_bound_z1(3, 5) == 2  # U(3, 2)
        assert exact_bound_z1(5, 7) == 6  # U(5, 4)
        assert exact_bound_z1(2, 11) == 8  # U(9, 1)

    def test_z2_values(self):
        assert exact_bound_z2(5, 7) == 2  # floor(U(2,4)^2 / 2) = 4 // 2
        assert exact_bound_z2(7, 11) == 12  # floor(U(4,6)^2 / 2) = 25 // 2
        assert exact_bound_z2(5, 257) == 605671512**2 // 2  # U(127,4) = 605671512

    def test_z3_values(self):
        assert exact_bound_z3(5, 7) == 6  # floor(6 * 2 / 2)
        assert exact_bound_z3(7, 11) == 70  # floor(U(9,6) * U(4,6) / 2) = 28 * 5 // 2
        assert exact_bound_z3(3, 5) == 1  # floor(2 * 1 / 2), vacuous but defined

    def test_case2_cap_is_inactive(self):
        # r - 2 < p makes the multiplicity cap irrelevant
        assert exact_bound_z1(107, 97) == count_partitions(95)


class TestRegimes:
    def test_examples(self):
        assert classify_regime(5, 257) == "case1"
        assert classify_regime(3, 401) == "case1"
        assert classify_regime(11, 1009) == "case1"
        assert classify_regime(107, 97) == "case2"
        assert classify_regime(7, 23) == "gap"  # 20 < 98 and 21 >= 7
        assert classify_regime(2, 11) == "case1"  # 8 >= 8

    def test_cases_mutually_exclusive(self):
        for p in range(2, 41):
            for r in range(5, 600):
                assert not (r - 3 >= 2 * p * p and r - 2 < p), (p, r)


class TestClosedForms:
    def test_case1_reference_rows(self):
        for (p, r), (_, z1, z2, z3) in REFERENCE_ROWS.items():
            values = [closed_form_case1(p, r, name).log2 for name in BOUND_NAMES]
            for got, expected in zip(values, (z1, z2, z3)):
                assert abs(got - expected) <= 0.1, (p, r, got, expected)

    def test_case1_regression_values(self):
        # frozen from this implementation at full precision
        assert closed_form_case1(5, 257, "z1").log2 == pytest.approx(26.9304, abs=1e-3)
        assert closed_form_case1(5, 257, "z2").log2 == pytest.approx(27.0388, abs=1e-3)
        assert closed_form_case1(5, 257, "z3").log2 == pytest.approx(64.4328, abs=1e-3)

    def test_case2_computed_values(self):
        _, z1, z2, z3 = CASE2_COMPUTED
        assert closed_form_case2(107, 97, "z1").log2 == pytest.approx(z1, abs=0.01)
        assert closed_form_case2(107, 97, "z2").log2 == pytest.approx(z2, abs=0.01)
        assert closed_form_case2(107, 97, "z3").log2 == pytest.approx(z3, abs=0.01)

    def test_case2_near_reference_row(self):
        _, z1, z2, z3 = CASE2_REFERENCE
        assert abs(closed_form_case2(107, 97, "z1").log2 - z1) <= 1.5
        assert abs(closed_form_case2(107, 97, "z2").log2 - z2) <= 1.5
        assert abs(closed_form_case2(107, 97, "z3").log2 - z3) <= 1.5

    def test_wrong_regime(self):
        with pytest.raises(WrongRegime):
            closed_form_case1(107, 97, "z1")
        with pytest.raises(WrongRegime):
            closed_form_case2(5, 257, "z1")
        with pytest.raises(WrongRegime):
            closed_form_case1(7, 23, "z2")
        with pytest.raises(WrongRegime):
            closed_form_case2(7, 23, "z2")

    def test_dispatch(self):
        assert closed_form(5, 257, "z1").log2 == closed_form_case1(5, 257, "z1").log2
        assert closed_form(107, 97, "z3").log2 == closed_form_case2(107, 97, "z3").log2
        assert closed_form(7, 23, "z1") is None

    def test_unknown_name(self):
        with pytest.raises(ValueError):
            closed_form_case1(5, 257, "z9")

    def test_ln_log2_consistency(self):
        lb = closed_form_case1(5, 257, "z1")
        assert lb.log2 == pytest.approx(lb.ln / math.log(2))


class TestDominance:
    def test_exact_dominates_closed_form_case1(self):
        # the closed form is a lower estimate of the exact partition count
        for p, r in ((5, 257), (3, 401), (11, 1009), (2, 11), (2, 13), (3, 37), (5, 103)):
            if classify_regime(p, r) != "case1":
                continue
            for name, exact in (
                ("z1", exact_bound_z1(p, r)),
                ("z2", exact_bound_z2(p, r)),
                ("z3", exact_bound_z3(p, r)),
            ):
                assert log2_int(exact) >= closed_form_case1(p, r, name).log2, (p, r, name)

    def test_exact_dominates_closed_form_case2(self):
        assert math.log2(count_partitions(95)) > closed_form_case2(107, 97, "z1").log2

    def test_bounds_do_not_exceed_group_order(self):
        for p, r in EXAMPLE_PAIRS:
            rep = table_row(p, r)
            for value in (rep.log2_z1, rep.log2_z2, rep.log2_z3):
                assert value is not None and value <= rep.log2_group_order
            for value in (rep.exact_bound_z1, rep.exact_bound_z2, rep.exact_bound_z3):
                assert log2_int(value) <= rep.log2_group_order


class TestTableRow:
    def test_case1_row(self):
        rep = table_row(5, 257)
        assert rep.regime == "case1"
        assert rep.log2_group_order == pytest.approx(594.41, abs=0.05)
        assert rep.log2_z1 == pytest.approx(26.93, abs=0.1)
        assert rep.log2_z2 == pytest.approx(27.03, abs=0.1)
        assert rep.log2_z3 == pytest.approx(64.43, abs=0.1)
        assert rep.exact_bound_z1 == count_partitions_bounded(255, 4)

    def test_case2_row(self):
        rep = table_row(107, 97)
        assert rep.regime == "case2"
        assert rep.log2_group_order == pytest.approx(647.18, abs=0.05)

    def test_gap_row(self):
        rep = table_row(7, 23)
        assert rep.regime == "gap"
        assert rep.log2_z1 is None and rep.log2_z2 is None and rep.log2_z3 is None
        assert rep.exact_bound_z1 == count_partitions_bounded(21, 6)
        assert rep.exact_bound_z3 == 12519

    def test_exact_flag(self):
        rep = table_row(5, 257, exact=False)
        assert rep.exact_bound_z1 is None
        assert rep.log2_z1 is not None

    def test_validates_params(self):
        with pytest.raises(NotPrime):
            table_row(4, 9)

    def test_json_roundtrip(self):
        for p, r in ((5, 257), (107, 97), (7, 23)):
            rep = table_row(p, r)
            assert BoundReport.from_dict(json.loads(json.dumps(rep.to_dict()))) == rep

    def test_render(self):
        text = render_table([table_row(5, 257), table_row(7, 23)])
        lines = text.splitlines()
        assert len(lines) == 3
        assert "594.41" in lines[1] and "26.93" in lines[1]
        assert "gap" in lines[2] and "-" in lines[2]


class TestLog2Int:
    def test_matches_math_log2_small(self):
        for n in (1, 2, 3, 10, 2**52 + 7, 10**200):
            assert log2_int(n) == pytest.approx(math.log2(n))

    def test_huge_values(self):
        n = (1 << 5000) + 12345
        assert log2_int(n) == pytest.approx(5000.0, abs=1e-9)
        k = 3**4000
        assert log2_int(k) == pytest.approx(4000 * math.log2(3), rel=1e-12)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            log2_int(0)
