# -*- coding: utf-8 -*-

from fractions import Fraction

import pytest

from online_thue_kit.exc import HorizonExceeded, PaletteFormatError
from online_thue_kit.universal.horizon import Target
from online_thue_kit.universal.ktree import get_universe
from online_thue_kit.palette.frozen import (
    VerificationKind,
    Verification,
    FrozenPalette,
    color_of,
    dumps_palette,
    loads_palette,
    save,
    load,
)

O2_ASSIGNMENT = {
    "0/2^0": 1,
    "1/2^0": 2,
    "-1/2^0": 2,
    "1/2^1": 3,
    "2/2^0": 3,
}


def o2_palette(**kwargs) -> FrozenPalette:
    params = dict(
        target=Target.o(),
        horizon=2,
        palette_size=4,
        assignment=dict(O2_ASSIGNMENT),
        verification=Verification.full(),
    )
    params.update(kwargs)
    return FrozenPalette(**params)


def test_verification():
    assert Verification.parse("full") == Verification.full()
    assert Verification.parse("vertical-full") == Verification.vertical_full()
    assert Verification.parse("bounded:6") == Verification.bounded(6)
    sampled = Verification.parse("sampled:4:100:12:7")
    assert sampled == Verification.sampled(4, 100, 12, 7)
    assert sampled.label == "sampled(L=4,n=100,len=12,seed=7)"
    assert Verification.bounded(6).label == "bounded(6)"
    assert Verification.full().label == "full"
    assert Verification.full().is_exhaustive
    assert Verification.vertical_full().is_exhaustive
    assert not Verification.bounded(3).is_exhaustive
    assert Verification.from_record(sampled.to_record()) == sampled

    for bad in ["bounded", "bounded:x", "full:3", "sampled:4:100", "nothing"]:
        with pytest.raises(ValueError):
            Verification.parse(bad)
    with pytest.raises(ValueError):
        Verification(kind=VerificationKind.bounded, max_half=0)
    with pytest.raises(ValueError):
        Verification(kind=VerificationKind.sampled, max_half=2)


def test_frozen_palette_validation():
    p = o2_palette()
    assert len(p) == 5
    assert p.header()["target"] == "O"
    assert p.header()["k"] is None
    with pytest.raises(ValueError):
        o2_palette(horizon=0)
    with pytest.raises(ValueError):
        o2_palette(palette_size=2)


def test_color_of():
    p = o2_palette()
    assert color_of(p, Fraction(0)) == 1
    assert color_of(p, Fraction(1, 2)) == 3
    with pytest.raises(HorizonExceeded) as e:
        color_of(p, Fraction(1, 4))
    assert e.value.stage == 3
    assert e.value.horizon == 2

    missing = dict(O2_ASSIGNMENT)
    del missing["2/2^0"]
    with pytest.raises(PaletteFormatError):
        color_of(o2_palette(assignment=missing), Fraction(2))


def test_color_of_u():
    universe = get_universe(1)
    b0, b1 = universe.bases()
    d = universe.derived([b0], 1)
    p = FrozenPalette(
        target=Target.u(1),
        horizon=1,
        palette_size=4,
        assignment={"b0": 1, "b1": 2},
        verification=Verification.full(),
    )
    assert color_of(p, b1) == 2
    with pytest.raises(HorizonExceeded):
        color_of(p, d)


def test_dumps_loads():
    p = o2_palette(verification=Verification.sampled(3, 10, 8, 1))
    text = dumps_palette(p)
    lines = text.splitlines()
    assert lines[0].startswith('{"format":"online-thue-palette","version":1')
    # records are sorted by canonical text
    assert lines[1:] == sorted(lines[1:])
    assert loads_palette(text) == p
    assert dumps_palette(loads_palette(text)) == text


def test_loads_errors():
    text = dumps_palette(o2_palette())
    with pytest.raises(PaletteFormatError):
        loads_palette("")
    with pytest.raises(PaletteFormatError):
        loads_palette("not json\n")
    with pytest.raises(PaletteFormatError):
        loads_palette(text.replace("online-thue-palette", "other"))
    with pytest.raises(PaletteFormatError):
        loads_palette(text.replace('"version":1', '"version":99'))
    with pytest.raises(PaletteFormatError):
        loads_palette(text.replace('"palette_size":4', '"palette_size":1'))


def test_save_load(tmp_path):
    path = tmp_path / "o2.palette.jsonl"
    p = o2_palette()
    save(p, path)
    assert load(path) == p
    assert load(path, reverify=False) == p

    broken = dict(O2_ASSIGNMENT)
    broken["1/2^0"] = 1
    save(o2_palette(assignment=broken), path)
    assert load(path, reverify=False).assignment["1/2^0"] == 1
    with pytest.raises(PaletteFormatError):
        load(path)


if __name__ == "__main__":
    from online_thue_kit.tests import run_cov_test

    run_cov_test(
        __file__,
        "online_thue_kit.palette.frozen",
        preview=False,
    )
