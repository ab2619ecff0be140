import pytest

from seshconf.arrangement import invariants, validate, verify_count_identity
from seshconf.geometry import hesse_conics, klein, preset, quasi_pencil, wiman


def test_klein():
    arr = klein()
    s = invariants(arr)
    assert arr.d == 21 and s.t == {3: 28, 4: 21} and s.f0 == 49
    assert set(s.b.values()) == {8}
    rep = verify_count_identity(arr)
    assert rep.holds and rep.lhs == 210 == 6 * 21 + 3 * 28
    assert validate(arr, "lattice") == []


def test_wiman():
    arr = wiman()
    s = invariants(arr)
    assert arr.d == 45 and s.t == {3: 120, 4: 45, 5: 36}
    assert set(s.b.values()) == {16}
    rep = verify_count_identity(arr)
    assert rep.holds and rep.lhs == 990 == 3 * 120 + 6 * 45 + 10 * 36


def test_hesse_conics():
    arr = hesse_conics()
    s = invariants(arr)
    assert arr.d == 12 and s.t == {2: 12, 8: 9}
    assert set(s.b.values()) == {8}
    assert verify_count_identity(arr).holds
    assert validate(arr, "lattice") == []


@pytest.mark.parametrize("k", range(4, 9))
def test_quasi_pencil(k):
    arr = quasi_pencil(k)
    s = invariants(arr)
    assert s.t == ({2: k - 1, k - 1: 1} if k > 3 else {})
    assert verify_count_identity(arr).holds


def test_preset_lookup():
    assert preset("klein") is klein()
    assert preset("hesse-conics") is hesse_conics()
    assert preset("quasi_pencil(6)") == quasi_pencil(6)
    assert preset("quasi_pencil:6") == preset("quasi_pencil", 6)
    assert invariants(preset("fermat_plane_combinatorial", 4)).t == {3: 16, 4: 3}
    for bad in ("nope", "quasi_pencil", "quasi_pencil(2)"):
        with pytest.raises(ValueError):
            preset(bad)
    with pytest.raises(ValueError):
        preset("quasi_pencil(5)", 6)
