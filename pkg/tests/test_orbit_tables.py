import pytest

from unipotent_sqint.orbit_data import DISTINGUISHED, DUAL_ORBITS
from unipotent_sqint.orbit_gen import bala_carter, is_distinguished
from unipotent_sqint.rootsys import EXCEPTIONAL, build_root_system

COUNTS = {"G2": 5, "F4": 16, "E6": 21, "E7": 45, "E8": 70}


@pytest.mark.parametrize("name", EXCEPTIONAL)
def test_embedded_tables_match_generation(name):
    dual = build_root_system(name).dual
    got = sorted((o.label, "".join(map(str, o.diagram)), o.dim) for o in bala_carter(dual))
    assert got == sorted(DUAL_ORBITS[name])
    assert len(got) == COUNTS[name]


@pytest.mark.parametrize("name", EXCEPTIONAL)
def test_distinguished_lists(name):
    # these lists use the algebra's own numbering, not the dual group's coroot order
    rs = build_root_system(name)
    want = sorted((o.label, "".join(map(str, o.diagram))) for o in bala_carter(rs)
                  if is_distinguished(rs, o.diagram))
    assert sorted(DISTINGUISHED[name]) == want


def test_regular_and_zero_orbits():
    for name in EXCEPTIONAL:
        rs = build_root_system(name)
        rows = {lab: (d, dim) for lab, d, dim in DUAL_ORBITS[name]}
        assert rows["0"] == ("0" * rs.rank, 0)
        assert rows[name] == ("2" * rs.rank, 2 * len(rs.positive_roots))
