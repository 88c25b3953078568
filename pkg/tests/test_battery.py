"""The reusable property battery behind the verify command."""

from mahler2d import named_polygon
from mahler2d.battery import run_battery


def test_battery_passes_on_named_polygons():
    for name in ("diamond", "hex6", "hex6b", "oct8"):
        results = run_battery(named_polygon(name), invariance_maps=10)
        assert all(r.passed for r in results), [r for r in results if not r.passed]


def test_battery_skips_gracefully_on_parallelograms():
    results = run_battery(named_polygon("square"), invariance_maps=10)
    assert all(r.passed for r in results)
    skipped = [r for r in results if "not applicable" in r.detail]
    assert skipped  # the n >= 3 checks report as skipped, not failed


def test_battery_result_repr():
    results = run_battery(named_polygon("hex6"), invariance_maps=5)
    assert repr(results[0]).startswith("[PASS]")
