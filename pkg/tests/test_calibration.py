import math

import pytest
from hypothesis import given, settings, strategies as st

from edgecap import calibration as cal
from edgecap.model import PlatformProfile

SIDES = (100, 200, 300, 500, 800, 1000)


class TestParseMeasurements:
    def test_single_row(self):
        text = "platform,side_pixels,inference_ms\ncoral,300,21.07\n"
        (sample,) = cal.parse_measurements(text)
        assert sample.platform == "coral"
        assert sample.side == 300
        assert sample.inference_time == pytest.approx(0.02107, rel=1e-12)

    def test_empty_data_section(self):
        assert cal.parse_measurements("platform,side_pixels,inference_ms\n") == []

    def test_comments_and_blank_lines(self):
        text = (
            "# digitized, approximate\n"
            "platform,side_pixels,inference_ms\n"
            "\n"
            "coral,300,21.07\n"
            "# trailing note\n"
        )
        assert len(cal.parse_measurements(text)) == 1

    def test_non_numeric_side_names_line(self):
        text = "platform,side_pixels,inference_ms\ncoral,abc,5\n"
        with pytest.raises(cal.CalibrationError, match="line 2"):
            cal.parse_measurements(text)

    def test_wrong_column_count(self):
        text = "platform,side_pixels,inference_ms\ncoral,300\n"
        with pytest.raises(cal.CalibrationError, match="line 2"):
            cal.parse_measurements(text)

    def test_nonpositive_time(self):
        text = "platform,side_pixels,inference_ms\ncoral,300,0\n"
        with pytest.raises(cal.CalibrationError, match="line 2"):
            cal.parse_measurements(text)

    def test_missing_header(self):
        with pytest.raises(cal.CalibrationError, match="header"):
            cal.parse_measurements("coral,300,21.07\n")


class TestFitPlatform:
    @pytest.mark.parametrize("a_ms,b_ms", [(3.23, 9.56e-10), (20.98, 3.37e-9), (41.10, 7.15e-9)])
    def test_generate_then_fit_roundtrip(self, a_ms, b_ms):
        truth = PlatformProfile.from_ms("dev", a_ms, b_ms)
        report = cal.fit_platform(cal.generate_samples(truth, SIDES))
        assert report.profile.a == pytest.approx(truth.a, rel=1e-9)
        assert report.profile.b == pytest.approx(truth.b, rel=1e-9)
        assert report.rmse <= 1e-12
        assert not report.clamped

    def test_two_points_interpolate_exactly(self):
        truth = PlatformProfile.from_ms("dev", 5.0, 2e-9)
        report = cal.fit_platform(cal.generate_samples(truth, (100, 1000)))
        assert report.rmse == pytest.approx(0.0, abs=1e-12)
        assert report.max_abs_residual == pytest.approx(0.0, abs=1e-12)
        assert report.sample_count == 2

    def test_identical_sides_rejected(self):
        samples = [cal.MeasurementSample("dev", 300, 0.02 + 0.001 * i) for i in range(5)]
        with pytest.raises(cal.CalibrationError, match="degenerate"):
            cal.fit_platform(samples)

    def test_mixed_platforms_rejected(self):
        samples = [
            cal.MeasurementSample("a", 100, 0.01),
            cal.MeasurementSample("b", 200, 0.02),
        ]
        with pytest.raises(cal.CalibrationError, match="mix"):
            cal.fit_platform(samples)

    def test_too_few_samples(self):
        with pytest.raises(cal.CalibrationError, match="at least 2"):
            cal.fit_platform([cal.MeasurementSample("a", 100, 0.01)])

    def test_negative_slope_clamps(self):
        # decreasing times force a negative OLS b
        samples = [
            cal.MeasurementSample("dev", 100, 0.050),
            cal.MeasurementSample("dev", 1000, 0.010),
        ]
        report = cal.fit_platform(samples)
        assert report.clamped
        assert report.profile.b == 0.0
        assert report.rmse <= report.max_abs_residual

    @given(
        st.floats(min_value=1e-4, max_value=100.0),
        st.floats(min_value=0.0, max_value=1e-8),
    )
    @settings(max_examples=50)
    def test_fit_idempotence(self, a_ms, b_ms):
        truth = PlatformProfile.from_ms("dev", a_ms, b_ms)
        report = cal.fit_platform(cal.generate_samples(truth, SIDES))
        assert report.profile.a == pytest.approx(truth.a, rel=1e-9, abs=1e-15)
        assert report.profile.b == pytest.approx(truth.b, rel=1e-9, abs=1e-21)

    def test_residual_optimality(self):
        samples = [
            cal.MeasurementSample("dev", s, 0.02 + 3e-12 * s ** 3 + noise)
            for s, noise in zip(SIDES, (1e-4, -2e-4, 5e-5, -1e-4, 2e-4, -5e-5))
        ]
        report = cal.fit_platform(samples)

        def sse(a, b):
            return sum((s.inference_time - (a + b * s.side ** 3)) ** 2 for s in samples)

        best = sse(report.profile.a, report.profile.b)
        for da in (-1e-6, 0.0, 1e-6):
            for db in (-1e-6 * 1e-9, 0.0, 1e-6 * 1e-9):
                assert sse(report.profile.a + da, report.profile.b + db) >= best - 1e-18

    def test_scale_covariance(self):
        samples = [
            cal.MeasurementSample("dev", s, 0.02 + 3e-12 * s ** 3 + noise)
            for s, noise in zip(SIDES, (1e-4, -2e-4, 5e-5, -1e-4, 2e-4, -5e-5))
        ]
        base = cal.fit_platform(samples)
        lam = 3.5
        scaled = cal.fit_platform(
            [cal.MeasurementSample("dev", s.side, s.inference_time * lam) for s in samples]
        )
        assert scaled.profile.a == pytest.approx(base.profile.a * lam, rel=1e-9)
        assert scaled.profile.b == pytest.approx(base.profile.b * lam, rel=1e-9)
        assert scaled.rmse == pytest.approx(base.rmse * lam, rel=1e-9)


class TestPresets:
    def test_exactly_three(self):
        names = [p.name for p in cal.presets()]
        assert names == ["central-server", "coral-dev", "jetson-nano"]

    def test_table_values_in_ms(self):
        assert cal.preset("central-server").a == pytest.approx(3.23e-3)
        assert cal.preset("jetson-nano").b == pytest.approx(7.15e-9 * 1e-3)

    def test_all_reasonable_at_600(self):
        for p in cal.presets():
            t = p.predict(600)
            assert 0 < t < 0.100

    def test_unknown_name(self):
        with pytest.raises(KeyError):
            cal.preset("raspberry-pi")


class TestSelectResolution:
    POINTS = [
        cal.AccuracyPoint(100, 0.05),
        cal.AccuracyPoint(200, 0.12),
        cal.AccuracyPoint(300, 0.22),
        cal.AccuracyPoint(500, 0.33),
        cal.AccuracyPoint(800, 0.42),
        cal.AccuracyPoint(1000, 0.44),
    ]

    def test_threshold_between_500_and_800(self):
        assert cal.select_resolution(self.POINTS, 0.40) == 800

    def test_zero_threshold_picks_smallest(self):
        assert cal.select_resolution(self.POINTS, 0.0) == 100

    def test_unsatisfiable_threshold(self):
        assert cal.select_resolution(self.POINTS, 1.01) is None

    def test_monotone_in_threshold(self):
        previous = 0
        for threshold in (0.0, 0.1, 0.2, 0.3, 0.4, 0.43, 0.45):
            side = cal.select_resolution(self.POINTS, threshold)
            if side is None:
                break
            assert side >= previous
            previous = side

    def test_empty_table(self):
        with pytest.raises(cal.CalibrationError):
            cal.select_resolution([], 0.5)


class TestProfileJson:
    def test_roundtrip(self):
        p = PlatformProfile.from_ms("coral-dev", 20.98, 3.37e-9)
        again = cal.profile_from_json(cal.profile_to_json(p))
        assert again.name == p.name
        # ms <-> seconds conversion may cost one ulp
        assert again.a == pytest.approx(p.a, rel=1e-15)
        assert again.b == pytest.approx(p.b, rel=1e-15)

    def test_rejects_garbage(self):
        with pytest.raises(cal.CalibrationError):
            cal.profile_from_json("{}")
        with pytest.raises(cal.CalibrationError):
            cal.profile_from_json("not json")


class TestAccuracyCsv:
    def test_parse(self):
        text = "side_pixels,mean_accuracy\n500,0.33\n800,0.42\n"
        points = cal.parse_accuracy(text)
        assert points == [cal.AccuracyPoint(500, 0.33), cal.AccuracyPoint(800, 0.42)]

    def test_out_of_range_accuracy(self):
        with pytest.raises(cal.CalibrationError, match="line 2"):
            cal.parse_accuracy("side_pixels,mean_accuracy\n500,1.2\n")

    def test_shipped_data_file_selects_above_500(self):
        import pathlib

        data = pathlib.Path(__file__).resolve().parent.parent / "data" / "accuracy_fig2b.csv"
        points = cal.parse_accuracy(data.read_text())
        assert cal.select_resolution(points, 0.40) > 500
