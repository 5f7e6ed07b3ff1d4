"""
Tests for the named catalog and its known facts.
"""

import pytest

from services.catalog import (
    UNBOUNDED,
    Provenance,
    catalog_currents,
    catalog_entries,
    catalog_entry,
    evaluate,
)
from services.catalog.facts import radial_power_max_order
from services.hermitian import Setting


class TestCatalogEntries:
    """Shape of the named catalog."""

    def test_cylinder_only_when_orders_allow(self):
        assert "cylinder" in {e.name for e in catalog_entries(Setting(n=4, m=2))}
        assert "cylinder" not in {e.name for e in catalog_entries(Setting(n=3, m=2))}
        assert "cylinder" not in {e.name for e in catalog_entries(Setting(n=4, m=3))}

    @pytest.mark.parametrize("n,m,expected", [(2, 1, 2.0), (3, 2, 6.0), (4, 2, 4.0), (4, 3, 12.0)])
    def test_fundamental_exponent(self, n, m, expected):
        facts = catalog_entry(Setting(n=n, m=m), "fund").facts
        assert facts.iota_at_pole == pytest.approx(expected)

    def test_cylinder_exponent_exceeds_fundamental(self):
        setting = Setting(n=4, m=2)
        assert catalog_entry(setting, "cylinder").facts.iota_at_pole == pytest.approx(6.0)
        assert setting.exponent_upper == pytest.approx(4.0)

    def test_bounded_entries(self):
        entry = catalog_entry(Setting(n=3, m=2), "quad-shifted")
        assert entry.facts.bounded
        assert entry.facts.iota_at_pole == UNBOUNDED
        assert evaluate(entry.function, [0.5, 0.0, 0.0]) < 0.0

    def test_two_pole_lelong_values(self):
        facts = catalog_entry(Setting(n=3, m=2), "two-pole").facts
        assert [nu for _, nu in facts.pole_lelong] == [1.0, 2.0]

    def test_every_entry_has_provenance(self):
        for entry in catalog_entries(Setting(n=4, m=2)):
            assert isinstance(entry.provenance, Provenance)

    def test_unknown_entry(self):
        with pytest.raises(KeyError):
            catalog_entry(Setting(n=3, m=2), "missing")


class TestCatalogCurrents:
    """Shape of the current catalog."""

    @pytest.mark.parametrize("n,m", [(2, 1), (3, 2), (4, 2), (4, 3)])
    def test_lelong_currents_satisfy_bidimension(self, n, m):
        for entry in catalog_currents(Setting(n=n, m=m)):
            entry.current.require_lelong()

    def test_t0_lelong_exponent(self):
        current = {e.name: e.current for e in catalog_currents(Setting(n=3, m=2))}["t0"]
        assert current.bidimension == 2
        assert current.lelong_exponent == pytest.approx(3.0)
        assert current.ddc() is not None

    def test_closed_current_has_no_ddc(self):
        current = {e.name: e.current for e in catalog_currents(Setting(n=3, m=2))}["ddc-fund"]
        assert current.ddc() is None


@pytest.mark.parametrize("n,s,expected", [(3, 0.5, 2), (4, 1.0, 2), (4, 0.0001, 3), (3, 5.0, 0)])
def test_radial_power_max_order(n, s, expected):
    assert radial_power_max_order(n, s) == expected
