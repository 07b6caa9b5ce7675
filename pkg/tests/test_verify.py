import itertools
import json

import pytest

from gaussorder.errors import BadConstant, CapExceeded, ZeroConstant
from gaussorder.field import make_params
from gaussorder.verify import (
    PRODUCT_VARIANTS,
    SweepReport,
    check_frobenius_conjugates,
    check_gauss_period_subfield,
    check_partition_products_distinct,
    sweep,
)


class TestPartitionProducts:
    def test_small_instances(self):
        p25 = make_params(2, 5)
        assert check_partition_products_distinct(p25, 1, 1, "element")
        p57 = make_params(5, 7)
        assert check_partition_products_distinct(p57, 0, 2, "w")
        assert check_partition_products_distinct(p57, 0, 2, "v")
        assert check_partition_products_distinct(p57, 0, 2, "element")

    def test_all_variants_exhaustively(self):
        for p, r in ((2, 5), (3, 5), (5, 7), (3, 7)):
            params = make_params(p, r)
            for variant in PRODUCT_VARIANTS:
                for e, a in itertools.product(range(r), range(1, p)):
                    if variant != "element" and a in (1, p - 1):
                        continue
                    assert check_partition_products_distinct(params, e, a, variant), (
                        p, r, e, a, variant,
                    )

    def test_result_independent_of_e(self):
        # the theta power common to all same-total products cancels
        params = make_params(5, 7)
        results = {
            check_partition_products_distinct(params, e, 3, "element") for e in range(7)
        }
        assert results == {True}

    def test_preconditions(self):
        params = make_params(5, 7)
        with pytest.raises(ZeroConstant):
            check_partition_products_distinct(params, 0, 0, "element")
        with pytest.raises(BadConstant):
            check_partition_products_distinct(params, 0, 1, "w")
        with pytest.raises(BadConstant):
            check_partition_products_distinct(params, 0, 4, "v")
        with pytest.raises(ValueError):
            check_partition_products_distinct(params, 0, 2, "nonsense")

    def test_cap(self):
        params = make_params(5, 7)
        with pytest.raises(CapExceeded):
            check_partition_products_distinct(params, 0, 2, "element", cap=4)


class TestGaussPeriodSubfield:
    def test_desk_scale(self):
        for p, r in ((2, 5), (3, 5), (5, 7), (2, 11), (7, 11)):
            assert check_gauss_period_subfield(make_params(p, r))

    def test_large_scale_without_factoring(self):
        # (5, 257): exponent 5^128 - 1, pure square-and-multiply
        assert check_gauss_period_subfield(make_params(5, 257))


class TestFrobeniusConjugates:
    def test_small_instances(self):
        assert check_frobenius_conjugates(make_params(2, 5), 1, 1)
        assert check_frobenius_conjugates(make_params(3, 5), 0, 2)

    def test_exhaustive_small_fields(self):
        for p, r in ((2, 5), (3, 5), (5, 7), (2, 13)):
            params = make_params(p, r)
            for e, a in itertools.product(range(r), range(1, p)):
                assert check_frobenius_conjugates(params, e, a), (p, r, e, a)


class TestSweep:
    def test_small_sweep_clean(self):
        report = sweep(p_max=3, r_max=5)
        assert report.zero_violations
        assert report.pairs_checked == [[2, 3], [2, 5], [3, 5]]
        assert report.pairs_skipped == []
        assert report.instances_checked > 0
        # z checks need p >= 5, so none here
        assert "z_bound" not in report.checks
        # one z1 check per (e, f, a) cell: r * (r-1) * (p-1) per pair
        assert report.checks["order_vs_z1"] == 3 * 2 * 1 + 5 * 4 * 1 + 5 * 4 * 2
        assert report.max_order_to_bound_ratio >= 1.0

    def test_sweep_with_z_checks(self):
        report = sweep(p_max=5, r_max=7)
        assert report.zero_violations
        assert [5, 7] in report.pairs_checked
        # a in {2, 3} for each of the two p = 5 pairs, (5, 3) and (5, 7)
        assert report.checks["z_bound"] == 4
        assert report.checks["z_order_product"] == 4
        assert report.checks["products_element"] > 0
        assert report.checks["products_w"] > 0

    def test_empty_range(self):
        report = sweep(p_max=2, r_max=2)
        assert report.pairs_checked == [] and report.zero_violations
        assert report.max_order_to_bound_ratio is None
        assert report.instances_checked == 0

    def test_guard_skips_are_recorded(self):
        report = sweep(p_max=3, r_max=5, bit_guard=4)
        # group orders: (2,3)->3 bits<... wait 3 has 2 bits, (3,3) invalid,
        # (2,5)->15 (4 bits), (3,5)->80 (7 bits, skipped)
        assert [2, 3] in report.pairs_checked
        assert [2, 5] in report.pairs_checked
        assert [p_r[:2] for p_r in report.pairs_skipped] == [[3, 5]]
        assert report.zero_violations

    def test_cap_skips_are_recorded(self):
        report = sweep(p_max=3, r_max=7, enumeration_cap=3)
        # r = 5 and r = 7 put the element-variant total (r - 2) above cap 3
        assert report.checks_skipped.get("products_element", 0) > 0
        assert report.zero_violations

    def test_json_roundtrip(self):
        report = sweep(p_max=3, r_max=5)
        text = json.dumps(report.to_dict())
        assert SweepReport.from_dict(json.loads(text)) == report

    def test_summary_line(self):
        report = sweep(p_max=2, r_max=3)
        line = report.summary()
        assert "0 violation(s)" in line and "1 field(s)" in line
