import math

import pytest
from hypothesis import given, strategies as st

from edgecap import model
from edgecap.calibration import preset

HR = model.HIGH_RESPONSIVENESS
MR = model.MID_RESPONSIVENESS
LR = model.LOW_RESPONSIVENESS

FRAME = model.FrameSpec(side=600, color_depth=8)
LOW_CAP = model.WirelessChannel(goodput=450e6)
HIGH_CAP = model.WirelessChannel(goodput=1e9)

# Table 2 coefficients evaluated at side 600, computed by hand:
# central: 3.23e-3 + 9.56e-13 * 600**3 = 3.436496e-3 s, etc.
PSI_CENTRAL_600 = 3.436496e-3
PSI_CORAL_600 = 21.70792e-3
PSI_JETSON_600 = 42.6444e-3


def scenario(users, aps, arch=model.Architecture.CENTRALIZED, channel=LOW_CAP, platform=None):
    return model.Scenario(
        total_users=users,
        ap_count=aps,
        architecture=arch,
        channel=channel,
        platform=platform or preset("central-server"),
        frame=FRAME,
    )


class TestFrameSize:
    def test_default_frame(self):
        assert model.frame_size_bits(FRAME) == 2_880_000

    def test_smallest_frame(self):
        assert model.frame_size_bits(model.FrameSpec(side=1, color_depth=1)) == 1

    def test_300p(self):
        assert model.frame_size_bits(model.FrameSpec(side=300, color_depth=8)) == 720_000

    @pytest.mark.parametrize("side,depth", [(0, 8), (600, 0), (-1, 8)])
    def test_invalid(self, side, depth):
        with pytest.raises(ValueError):
            model.FrameSpec(side=side, color_depth=depth)


class TestWirelessLatency:
    def test_single_user(self):
        assert model.wireless_latency(FRAME, 1, LOW_CAP) == pytest.approx(6.4e-3, rel=1e-12)

    def test_three_users_exceed_hr(self):
        lw = model.wireless_latency(FRAME, 3, LOW_CAP)
        assert lw == pytest.approx(19.2e-3, rel=1e-12)
        assert lw > HR.l_required

    def test_fourteen_users_high_cap(self):
        assert model.wireless_latency(FRAME, 14, HIGH_CAP) == pytest.approx(40.32e-3, rel=1e-12)

    def test_rejects_zero_sharers(self):
        with pytest.raises(ValueError):
            model.wireless_latency(FRAME, 0, LOW_CAP)

    @given(st.integers(min_value=1, max_value=10_000))
    def test_linear_in_sharers(self, n):
        one = model.wireless_latency(FRAME, n, LOW_CAP)
        two = model.wireless_latency(FRAME, 2 * n, LOW_CAP)
        assert two == pytest.approx(2 * one, rel=1e-15)


class TestInferenceLatency:
    def test_central_600(self):
        assert model.inference_latency(preset("central-server"), 600) == pytest.approx(
            PSI_CENTRAL_600, rel=1e-12
        )

    def test_coral_600(self):
        assert model.inference_latency(preset("coral-dev"), 600) == pytest.approx(
            PSI_CORAL_600, rel=1e-12
        )

    def test_side_one_is_a_plus_b(self):
        p = preset("jetson-nano")
        assert model.inference_latency(p, 1) == pytest.approx(p.a + p.b, rel=1e-12)

    def test_central_order_of_magnitude_below_jetson(self):
        ratio = PSI_JETSON_600 / PSI_CENTRAL_600
        assert 10 < ratio < 15

    @given(st.integers(min_value=1, max_value=2000), st.integers(min_value=1, max_value=2000))
    def test_nondecreasing_in_side(self, s1, s2):
        lo, hi = sorted((s1, s2))
        p = preset("coral-dev")
        assert model.inference_latency(p, lo) <= model.inference_latency(p, hi)


class TestProcessingLatency:
    def test_single_sharer_is_inference(self):
        p = preset("central-server")
        assert model.processing_latency(p, FRAME, 1) == model.inference_latency(p, 600)

    def test_coral_fourteen(self):
        assert model.processing_latency(preset("coral-dev"), FRAME, 14) == pytest.approx(
            14 * PSI_CORAL_600, rel=1e-12
        )


class TestSystemLatency:
    def test_single_user_centralized(self):
        bd = model.system_latency(scenario(1, 1))
        assert bd.wireless == pytest.approx(6.4e-3, rel=1e-12)
        assert bd.processing == pytest.approx(PSI_CENTRAL_600, rel=1e-12)
        assert bd.total == pytest.approx(9.836496e-3, rel=1e-12)
        assert bd.total <= HR.l_required

    def test_architectures_coincide_at_one_ap(self):
        cen = model.system_latency(scenario(7, 1, model.Architecture.CENTRALIZED))
        dis = model.system_latency(scenario(7, 1, model.Architecture.DISTRIBUTED))
        assert cen == dis

    def test_large_centralized_population(self):
        bd = model.system_latency(scenario(1400, 105, channel=HIGH_CAP))
        assert bd.processing == pytest.approx(1400 * PSI_CENTRAL_600, rel=1e-12)
        assert bd.total > LR.l_required

    def test_total_is_sum(self):
        ch = model.WirelessChannel(goodput=450e6, backhaul_latency=2e-3)
        bd = model.system_latency(scenario(5, 2, channel=ch))
        assert bd.total == bd.wireless + bd.processing + bd.backhaul
        assert bd.backhaul == 2e-3

    @given(
        st.integers(min_value=1, max_value=2000),
        st.integers(min_value=1, max_value=2000),
        st.integers(min_value=1, max_value=120),
    )
    def test_monotone_in_users(self, u1, u2, aps):
        lo, hi = sorted((u1, u2))
        t_lo = model.system_latency(scenario(lo, aps)).total
        t_hi = model.system_latency(scenario(hi, aps)).total
        assert t_lo <= t_hi

    @given(
        st.integers(min_value=2, max_value=2000),
        st.integers(min_value=2, max_value=120),
    )
    def test_distributed_processing_dominance(self, users, aps):
        # more users than APs: splitting the load must strictly help
        if users <= aps:
            users = aps + 1
        cen = model.system_latency(scenario(users, aps, model.Architecture.CENTRALIZED))
        dis = model.system_latency(scenario(users, aps, model.Architecture.DISTRIBUTED))
        assert dis.processing < cen.processing
        assert dis.wireless == cen.wireless


class TestMaxUsers:
    @pytest.mark.parametrize(
        "channel,req,expected",
        [
            (LOW_CAP, HR, 2),
            (HIGH_CAP, HR, 5),
            (LOW_CAP, MR, 15),
            (HIGH_CAP, MR, 34),
            (LOW_CAP, LR, 78),
            (HIGH_CAP, LR, 173),
        ],
    )
    def test_paper_capacities(self, channel, req, expected):
        assert model.max_users(channel, FRAME, req) == expected

    @given(
        st.floats(min_value=1e6, max_value=1e10, allow_nan=False),
        st.floats(min_value=1e-3, max_value=10.0, allow_nan=False),
        st.integers(min_value=1, max_value=2000),
        st.integers(min_value=1, max_value=32),
    )
    def test_capacity_boundary(self, goodput, budget, side, depth):
        channel = model.WirelessChannel(goodput=goodput)
        frame = model.FrameSpec(side=side, color_depth=depth)
        req = model.Requirement("custom", budget)
        n = model.max_users(channel, frame, req)
        assert n * frame.size_bits <= goodput * budget
        assert (n + 1) * frame.size_bits > goodput * budget

    @given(
        st.floats(min_value=1e6, max_value=1e10, allow_nan=False),
        st.floats(min_value=1e6, max_value=1e10, allow_nan=False),
    )
    def test_monotone_in_goodput(self, r1, r2):
        lo, hi = sorted((r1, r2))
        assert model.max_users(
            model.WirelessChannel(lo), FRAME, MR
        ) <= model.max_users(model.WirelessChannel(hi), FRAME, MR)

    def test_monotone_in_budget_and_frame(self):
        assert model.max_users(LOW_CAP, FRAME, HR) <= model.max_users(LOW_CAP, FRAME, MR)
        small = model.FrameSpec(side=300, color_depth=8)
        assert model.max_users(LOW_CAP, small, MR) >= model.max_users(LOW_CAP, FRAME, MR)


class TestCheckRequirement:
    def test_two_users_fail_hr(self):
        ok, bd = model.check_requirement(scenario(2, 1), HR)
        assert not ok
        assert bd.total == pytest.approx(19.672992e-3, rel=1e-12)

    def test_distributed_coral_large_scale_lr(self):
        s = scenario(1400, 105, model.Architecture.DISTRIBUTED, HIGH_CAP, preset("coral-dev"))
        ok, bd = model.check_requirement(s, LR)
        assert ok
        assert s.users_per_ap == 14
        assert bd.total == pytest.approx(344.23088e-3, rel=1e-9)

    def test_boundary_is_inclusive(self):
        s = scenario(1, 1)
        bd = model.system_latency(s)
        exact = model.Requirement("exact", bd.total)
        ok, _ = model.check_requirement(s, exact)
        assert ok

    @given(
        st.integers(min_value=1, max_value=500),
        st.integers(min_value=1, max_value=50),
        st.sampled_from([HR, MR, LR]),
        st.sampled_from([HR, MR, LR]),
    )
    def test_requirement_nesting(self, users, aps, r1, r2):
        if r2.l_required < r1.l_required:
            r1, r2 = r2, r1
        s = scenario(users, aps)
        ok1, _ = model.check_requirement(s, r1)
        ok2, _ = model.check_requirement(s, r2)
        if ok1:
            assert ok2


class TestBestRequirement:
    def test_single_user_gets_hr(self):
        assert model.best_requirement(scenario(1, 1), model.DEFAULT_REQUIREMENTS) is HR

    def test_saturated_centralized_gets_none(self):
        s = scenario(1400, 105, channel=HIGH_CAP)
        assert model.best_requirement(s, model.DEFAULT_REQUIREMENTS) is None

    def test_empty_list(self):
        assert model.best_requirement(scenario(1, 1), []) is None


class TestScenario:
    @given(st.integers(min_value=1, max_value=5000), st.integers(min_value=1, max_value=200))
    def test_ceiling_consistency(self, users, aps):
        s = scenario(users, aps)
        n = s.users_per_ap
        assert n * aps >= users
        assert (n - 1) * aps < users

    def test_invalid_counts(self):
        with pytest.raises(ValueError):
            scenario(0, 1)
        with pytest.raises(ValueError):
            scenario(1, 0)


class TestRequirement:
    def test_framerate(self):
        assert HR.min_framerate == pytest.approx(62.5)
        assert LR.min_framerate == pytest.approx(2.0)

    def test_requires_positive_budget(self):
        with pytest.raises(ValueError):
            model.Requirement("bad", 0.0)
