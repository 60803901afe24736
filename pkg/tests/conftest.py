import pytest

from tetrasym import families


class FamilyCache:
    """Session-wide memo so expensive family builds happen once per run."""

    def __init__(self):
        self._memo = {}

    def _get(self, key, builder):
        if key not in self._memo:
            self._memo[key] = builder()
        return self._memo[key]

    def gamma(self, t, sign):
        return self._get(("gamma", t, sign), lambda: families.gamma(t, sign))

    def crs(self, r, s):
        return self._get(("crs", r, s), lambda: families.praeger_xu_coset(r, s))

    def wreath(self, r):
        return self._get(("wreath", r), lambda: families.wreath_graph(r))

    def delta(self, m=2):
        return self._get(("delta", m), lambda: families.delta(m))


@pytest.fixture(scope="session")
def fam():
    return FamilyCache()
