import pytest

from edgecap import model, sweep
from edgecap.calibration import preset, presets
from edgecap.model import Architecture, WirelessChannel

REQ_ORDER = {"HR": 0, "MR": 1, "LR": 2, None: 3}  # lower is more stringent


@pytest.fixture(scope="module")
def default_cells():
    grid = sweep.SweepGrid(platforms=presets())
    return sweep.run_sweep(grid), grid


def find(cells, **criteria):
    matches = [
        c
        for c in cells
        if all(getattr(c, key) == value for key, value in criteria.items())
    ]
    assert matches, f"no cell matching {criteria}"
    return matches


class TestRunSweep:
    def test_grid_size_and_order(self, default_cells):
        cells, grid = default_cells
        expected = (
            len(grid.channels)
            * len(grid.architectures)
            * len(grid.platforms)
            * len(grid.user_counts)
            * len(grid.ap_counts)
        )
        assert len(cells) == expected
        # row-major: the innermost index (aps) varies fastest
        assert [c.aps for c in cells[: len(grid.ap_counts)]] == list(grid.ap_counts)

    def test_two_users_one_ap_low_cap_gets_mr(self, default_cells):
        cells, _ = default_cells
        (cell,) = find(
            cells,
            users=2,
            aps=1,
            architecture=Architecture.CENTRALIZED,
            platform="central-server",
            goodput=450e6,
        )
        assert cell.best == "MR"
        assert cell.breakdown.total == pytest.approx(19.672992e-3, rel=1e-12)

    def test_distributed_coral_full_scale_gets_lr(self, default_cells):
        cells, _ = default_cells
        (cell,) = find(
            cells,
            users=1400,
            aps=105,
            architecture=Architecture.DISTRIBUTED,
            platform="coral-dev",
            goodput=1e9,
        )
        assert cell.best == "LR"
        assert cell.n_per_ap == 14

    def test_centralized_full_scale_gets_none(self, default_cells):
        cells, _ = default_cells
        for cell in find(
            cells, users=1400, architecture=Architecture.CENTRALIZED, platform="central-server"
        ):
            assert cell.best is None

    def test_consistency_with_model(self, default_cells):
        cells, grid = default_cells
        by_name = {p.name: p for p in grid.platforms}
        for cell in cells[:: 37]:  # spot sample across the grid
            scenario = model.Scenario(
                total_users=cell.users,
                ap_count=cell.aps,
                architecture=cell.architecture,
                channel=WirelessChannel(goodput=cell.goodput),
                platform=by_name[cell.platform],
                frame=grid.frame,
            )
            best = model.best_requirement(scenario, grid.requirements)
            assert (best.name if best else None) == cell.best

    def test_monotone_in_users(self, default_cells):
        cells, grid = default_cells
        for aps in grid.ap_counts:
            for arch in grid.architectures:
                ranks = [
                    REQ_ORDER[c.best]
                    for c in cells
                    if c.aps == aps
                    and c.architecture == arch
                    and c.platform == "coral-dev"
                    and c.goodput == 450e6
                ]
                assert ranks == sorted(ranks)  # never improves as users grow

    def test_monotone_in_aps_distributed(self, default_cells):
        cells, grid = default_cells
        for users in grid.user_counts:
            ranks = [
                REQ_ORDER[c.best]
                for c in cells
                if c.users == users
                and c.architecture == Architecture.DISTRIBUTED
                and c.platform == "jetson-nano"
                and c.goodput == 1e9
            ]
            assert ranks == sorted(ranks, reverse=True)  # never degrades with more APs

    def test_goodput_dominance(self, default_cells):
        cells, _ = default_cells
        low = {
            (c.users, c.aps, c.architecture, c.platform): REQ_ORDER[c.best]
            for c in cells
            if c.goodput == 450e6
        }
        for c in cells:
            if c.goodput == 1e9:
                key = (c.users, c.aps, c.architecture, c.platform)
                assert REQ_ORDER[c.best] <= low[key]

    def test_rejects_empty_fields(self):
        with pytest.raises(ValueError, match="nonempty"):
            sweep.SweepGrid(platforms=())

    def test_rejects_unsorted_requirements(self):
        with pytest.raises(ValueError, match="sorted"):
            sweep.SweepGrid(
                platforms=presets(),
                requirements=(model.LOW_RESPONSIVENESS, model.HIGH_RESPONSIVENESS),
            )


class TestSerialization:
    def test_serialization_is_deterministic(self, default_cells):
        cells, grid = default_cells
        text = sweep.cells_to_csv(cells)
        assert sweep.cells_to_csv(sweep.run_sweep(grid)) == text
        assert sweep.cells_to_json(sweep.run_sweep(grid)) == sweep.cells_to_json(cells)

    def test_csv_roundtrip(self, default_cells):
        cells, _ = default_cells
        again = sweep.cells_from_csv(sweep.cells_to_csv(cells))
        assert len(again) == len(cells)
        for a, b in zip(again, cells):
            assert (a.users, a.aps, a.architecture, a.platform, a.n_per_ap, a.best) == (
                b.users, b.aps, b.architecture, b.platform, b.n_per_ap, b.best
            )
            assert a.goodput == pytest.approx(b.goodput, rel=1e-12)
            # the ms <-> seconds unit conversion may cost one ulp per field
            assert a.breakdown.total == pytest.approx(b.breakdown.total, rel=1e-12)
            assert a.breakdown.wireless == pytest.approx(b.breakdown.wireless, rel=1e-12)
            assert a.breakdown.processing == pytest.approx(b.breakdown.processing, rel=1e-12)

    def test_csv_header(self, default_cells):
        cells, _ = default_cells
        first_line = sweep.cells_to_csv(cells).splitlines()[0]
        assert first_line == sweep.CSV_HEADER

    def test_best_column_vocabulary(self, default_cells):
        cells, _ = default_cells
        import csv as csv_mod
        import io

        rows = list(csv_mod.DictReader(io.StringIO(sweep.cells_to_csv(cells))))
        assert {row["best_requirement"] for row in rows} <= {"HR", "MR", "LR", "none"}

    def test_json_mirror_field_names(self, default_cells):
        import json

        cells, _ = default_cells
        rows = json.loads(sweep.cells_to_json(cells[:3]))
        assert list(rows[0]) == sweep.CSV_HEADER.split(",")
        assert rows[0]["users"] == cells[0].users

    def test_csv_rejects_wrong_header(self):
        with pytest.raises(ValueError, match="header"):
            sweep.cells_from_csv("users,aps\n")


class TestSpotValidate:
    @pytest.fixture(scope="class")
    @staticmethod
    def small_cells():
        grid = sweep.SweepGrid(
            user_counts=(1, 4, 1400),
            ap_counts=(1, 2, 105),
            platforms=presets(),
        )
        return sweep.run_sweep(grid)

    def test_empty_selection(self):
        assert sweep.spot_validate([], presets()) == []

    def test_satisfied_cell_is_consistent(self, small_cells):
        cells = find(
            small_cells,
            users=4,
            aps=2,
            architecture=Architecture.DISTRIBUTED,
            platform="central-server",
            goodput=1e9,
        )
        checks = sweep.spot_validate(cells, presets(), duration=20.0, warmup=2.0)
        assert all(c.consistent for c in checks)
        assert all(c.cell.best is not None for c in checks)

    def test_processing_saturated_cell_exceeds_budget_in_sim(self, small_cells):
        cells = find(
            small_cells,
            users=1400,
            aps=1,
            architecture=Architecture.CENTRALIZED,
            platform="coral-dev",
            goodput=1e9,
        )
        # one shared PU serving 1400 users cannot fit the loosest budget
        checks = sweep.spot_validate(cells, presets(), duration=40.0, warmup=35.0)
        for check in checks:
            assert check.cell.best is None
            assert check.consistent
            assert check.simulated_mean > model.LOW_RESPONSIVENESS.l_required

    def test_unknown_platform_rejected(self, small_cells):
        central_only = [preset("central-server")]
        coral_cells = [c for c in small_cells if c.platform == "coral-dev"]
        with pytest.raises(KeyError, match="coral-dev"):
            sweep.spot_validate(coral_cells[:1], central_only)
