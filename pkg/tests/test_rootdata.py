import pytest

from heckesat import rootdata as rdm
from heckesat.rootdata import (
    RootDatumError,
    build_group,
    dominant_representative,
    dual,
    enumerate_dominant_minuscule,
    is_dominant,
    is_minuscule,
    named_cocharacter,
    orbit,
    parabolic_data,
    weyl_group,
    weyl_order_formula,
)

GROUPS = ["GL(2)", "GL(3)", "GL(4)", "SL(2)", "SL(3)",
          "GSp(4)", "GSp(6)", "GSO(8)", "GSpin(7)"]


@pytest.mark.parametrize("name", GROUPS)
def test_weyl_order_matches_formula(name):
    rd = build_group(name)
    w = weyl_group(rd)
    assert len(w.elements) == weyl_order_formula(rd)


def test_weyl_orders_explicit():
    expected = {"GL(2)": 2, "GL(3)": 6, "GL(4)": 24, "GSp(4)": 8,
                "GSp(6)": 48, "GSO(8)": 192, "GSpin(7)": 48}
    for name, order in expected.items():
        assert len(weyl_group(build_group(name)).elements) == order


def test_root_counts():
    assert len(build_group("GL(4)").roots) == 12
    assert len(build_group("GSp(4)").roots) == 8
    assert len(build_group("GSpin(7)").roots) == 18
    assert len(build_group("GSO(8)").roots) == 24


@pytest.mark.parametrize("name", GROUPS)
def test_dual_involution(name):
    rd = build_group(name)
    dd = dual(dual(rd))
    assert dd.roots == rd.roots
    assert dd.coroots == rd.coroots
    assert dd.simple_indices == rd.simple_indices
    assert dd.name == rd.name


def test_gspin_dual_is_symplectic_type():
    # the coroots of GSpin(7) include the long vectors 2f_i - f_0
    rd = build_group("GSpin(7)")
    assert (2, 0, 0, -1) in rd.coroots


def test_name_parsing_variants():
    assert build_group("gl4").name == "GL(4)"
    assert build_group("GSp(6)").name == "GSp(6)"
    assert build_group("GSpin7").name == "GSpin(7)"
    with pytest.raises(RootDatumError):
        build_group("E8")
    with pytest.raises(RootDatumError):
        build_group("GSp(5)")


def test_delta_values():
    assert build_group("GL(2)").delta() == (1, -1)
    assert build_group("GL(4)").delta() == (3, 1, -1, -3)
    assert build_group("GSp(4)").delta() == (4, 2, -3)
    assert build_group("GSO(8)").delta() == (6, 4, 2, 0, -6)
    assert build_group("GSpin(7)").delta() == (5, 3, 1, 0)


def test_minuscule_and_dominant():
    rd = build_group("GL(2)")
    assert is_minuscule(rd, (1, 0))
    assert is_minuscule(rd, (1, 1))
    assert not is_minuscule(rd, (2, 0))
    assert is_dominant(rd, (1, 0))
    assert not is_dominant(rd, (0, 1))


def test_dominant_representative_is_orbit_invariant():
    rd = build_group("GSp(4)")
    w = weyl_group(rd)
    mu = named_cocharacter(rd, "siegel")
    for lam in orbit(w, mu):
        assert dominant_representative(rd, lam) == mu


@pytest.mark.parametrize("name,alias,orbit_size,d", [
    ("GL(2)", "std", 2, 1),
    ("GL(4)", "std", 4, 3),
    ("GSp(4)", "siegel", 4, 3),
    ("GSp(6)", "siegel", 8, 6),
    ("GSO(8)", "half-spin", 8, 6),
    ("GSpin(7)", "spin", 6, 5),
])
def test_parabolic_data(name, alias, orbit_size, d):
    rd = build_group(name)
    mu = named_cocharacter(rd, alias)
    pd = parabolic_data(rd, mu)
    assert pd.d == d
    assert len(orbit(weyl_group(rd), mu)) == orbit_size
    # the three computations of d agree by construction; spot check two
    assert rd.pairing(pd.delta, mu) == d
    assert len(pd.unipotent_root_indices) == d


def test_parabolic_rejects_bad_input():
    rd = build_group("GL(2)")
    with pytest.raises(RootDatumError):
        parabolic_data(rd, (2, 0))
    with pytest.raises(RootDatumError):
        parabolic_data(rd, (0, 1))


def test_central_cocharacter_pairs_zero():
    for name in ["GSp(4)", "GSO(8)", "GSpin(7)"]:
        rd = build_group(name)
        z = named_cocharacter(rd, "central")
        assert all(rd.pairing(a, z) == 0 for a in rd.roots)


def test_enumerate_dominant_minuscule():
    rd = build_group("GL(3)")
    assert enumerate_dominant_minuscule(rd) == [
        (0, 0, 0), (1, 0, 0), (1, 1, 0), (1, 1, 1)]
    rd = build_group("GSpin(7)")
    mus = enumerate_dominant_minuscule(rd)
    assert (1, 0, 0, 0) in mus


def test_json_roundtrip():
    for name in GROUPS:
        rd = build_group(name)
        assert rdm.from_json(rdm.to_json(rd)) == rd


def test_sl_realization():
    rd = build_group("SL(2)")
    assert rd.rank == 1
    assert set(rd.roots) == {(2,), (-2,)}
    assert set(rd.coroots) == {(1,), (-1,)}
