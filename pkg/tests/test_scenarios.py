import json

import numpy as np
import pytest

from shotnoise.scenarios import REGISTRY, histogram_monotone_excess, run_scenario

# the sampling scenarios run at a reduced size here; the acceptance suite runs full size
SMALL = {"gamma-sn": 20_000, "stable-ratio": 20_000, "fixed-point": 20_000,
         "mode-at-zero": 50_000, "index-recovery": 100_000}


@pytest.mark.parametrize("name", sorted(REGISTRY))
def test_scenario_passes(name):
    res = run_scenario(name, np.random.default_rng(2024), SMALL.get(name))
    assert res.passed, res.to_dict()
    json.dumps(res.to_dict(), default=float)


def test_registry_entries_are_described():
    assert len(REGISTRY) >= 12
    for name, sc in REGISTRY.items():
        assert sc.name == name and sc.anchor


def test_unknown_scenario():
    with pytest.raises(KeyError):
        run_scenario("nope", np.random.default_rng(0))


def test_histogram_rule():
    rng = np.random.default_rng(3)
    assert histogram_monotone_excess(rng.exponential(size=100_000)) <= 0
    assert histogram_monotone_excess(rng.gamma(3.0, size=100_000)) > 0
