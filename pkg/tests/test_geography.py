import pytest
from hypothesis import given, strategies as st

from swcalc.geography import (basic_class_bound, chart_rows, classify,
                              spin_congruence)
from swcalc.manifolds import elliptic, horikawa, cp2
from swcalc.errors import InvalidParameters, OutOfBand, TypeOdd


class TestClassify:
    def test_elliptic_line(self):
        for n in range(1, 6):
            v = elliptic(n).invariants
            tags = classify(v.chi_h, v.c)
            assert "elliptic-line" in tags
            assert "sigma-negative" in tags

    def test_rational_region(self):
        v = cp2().invariants
        tags = classify(v.chi_h, v.c)
        assert {"rational-region", "bmy-line", "sigma-positive"} <= set(tags)

    def test_noether_line_horikawa(self):
        for n in range(3, 8):
            v = horikawa(3, n).invariants
            tags = classify(v.chi_h, v.c)
            assert "noether-line" in tags
            assert "general-type-wedge" in tags
            assert "one-basic-class-band" in tags

    def test_negative_c(self):
        assert "negative-c" in classify(2, -1)
        assert "negative-c" not in classify(2, 0)

    def test_bmy_wall(self):
        assert "bmy-line" in classify(5, 45)
        assert "beyond-bmy" in classify(5, 46)
        assert "beyond-bmy" not in classify(5, 45)

    def test_arctic_strip(self):
        # the strip strictly between signature zero and the bmy wall
        assert "arctic" in classify(5, 41)
        assert "arctic" not in classify(5, 40)
        assert "arctic" not in classify(5, 45)

    def test_no_complex_structure_gap(self):
        # below the noether line nothing carries a complex structure,
        # but the simply connected smooth population is still there
        tags = classify(5, 1)
        assert "no-complex-structure" in tags
        assert "many-basic-classes-band" in tags
        assert "no-complex-structure" not in classify(1, 1)

    def test_band_split(self):
        # chi - 3 is the crossover between the two count bands
        assert "one-basic-class-band" in classify(5, 4)
        assert "many-basic-classes-band" in classify(5, 2)
        assert "many-basic-classes-band" in classify(5, 0)

    def test_sigma_zero(self):
        assert "sigma-zero" in classify(1, 8)

    def test_validation(self):
        with pytest.raises(InvalidParameters):
            classify(0, 0)
        with pytest.raises(InvalidParameters):
            classify(-1, 3)

    @given(st.integers(min_value=1, max_value=40),
           st.integers(min_value=-10, max_value=400))
    def test_tag_consistency(self, chi, c):
        tags = set(classify(chi, c))
        assert len({"sigma-positive", "sigma-negative",
                    "sigma-zero"} & tags) == 1
        assert ("negative-c" in tags) == (c < 0)
        assert not ({"bmy-line", "beyond-bmy"} <= tags)
        if "arctic" in tags:
            assert 8 * chi < c < 9 * chi


class TestSpinCongruence:
    def test_spin_families(self):
        # even elliptic surfaces and spin general-type points pass
        assert spin_congruence(2, 0)
        assert spin_congruence(3, 8)

    def test_failing_point(self):
        assert not spin_congruence(2, 1)

    def test_odd_forms_rejected(self):
        with pytest.raises(TypeOdd):
            spin_congruence(1, 9, parity=1)

    @given(st.integers(min_value=1, max_value=30),
           st.integers(min_value=0, max_value=240))
    def test_matches_mod_sixteen(self, chi, c):
        assert spin_congruence(chi, c) == ((c - 8 * chi) % 16 == 0)


class TestBasicClassBound:
    def test_values_in_band(self):
        assert basic_class_bound(10, 5) == 3
        assert basic_class_bound(5, 4) == 0
        assert basic_class_bound(3, 0) == 1

    def test_elliptic_count_matches(self):
        # E(n) sits at (n, 0) and realizes n - 2 + 1... the bound is
        # a floor, the surface has n - 1 basic classes for n >= 3
        from swcalc.sw import count_basic_classes, sw_elliptic
        for n in range(3, 9):
            bound = basic_class_bound(n, 0)
            assert count_basic_classes(sw_elliptic(n)) >= bound

    def test_out_of_band(self):
        with pytest.raises(OutOfBand):
            basic_class_bound(5, -1)
        with pytest.raises(OutOfBand):
            basic_class_bound(5, 5)


class TestChartRows:
    def test_header_and_shape(self):
        rows = list(chart_rows(3))
        assert rows[0] == "chi_h\tc\ttags"
        body = rows[1:]
        # c sweeps -1 .. 9 chi + 1 for each chi
        expect = sum((9 * chi + 3) for chi in range(1, 4))
        assert len(body) == expect

    def test_row_content(self):
        rows = list(chart_rows(1))
        line = next(r for r in rows[1:] if r.startswith("1\t9\t"))
        assert "bmy-line" in line
        assert "rational-region" in line

    def test_tags_comma_joined(self):
        rows = list(chart_rows(1))
        line = next(r for r in rows[1:] if r.startswith("1\t0\t"))
        fields = line.split("\t")
        assert len(fields) == 3
        assert "," in fields[2]

    def test_validation(self):
        with pytest.raises(InvalidParameters):
            list(chart_rows(0))
