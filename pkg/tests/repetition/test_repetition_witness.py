# -*- coding: utf-8 -*-

import pytest

from online_thue_kit.repetition.witness import RepetitionWitness, revalidate


def test_witness():
    w = RepetitionWitness.new([4, 5, 6, 7])
    assert w.half_len == 2
    assert w.first_half == (4, 5)
    assert w.second_half == (6, 7)
    assert w.to_record() == {"path": [4, 5, 6, 7], "half_len": 2}
    assert RepetitionWitness.new([1, 2]).sort_key() < w.sort_key()
    assert str(w) == "[4, 5, 6, 7] (half length 2)"
    with pytest.raises(ValueError):
        RepetitionWitness.new([1, 2, 3])
    with pytest.raises(ValueError):
        RepetitionWitness.new([])


def test_revalidate():
    colors = {1: 1, 2: 2, 3: 1, 4: 2}
    adjacent = lambda a, b: abs(a - b) == 1
    assert revalidate(RepetitionWitness.new([1, 2, 3, 4]), colors, adjacent)
    # not a path
    assert not revalidate(RepetitionWitness.new([1, 3, 2, 4]), colors, adjacent)
    # not a square
    assert not revalidate(RepetitionWitness.new([1, 2]), colors, adjacent)
    # repeats a vertex
    assert not revalidate(RepetitionWitness.new([1, 2, 1, 2]), colors, adjacent)


if __name__ == "__main__":
    from online_thue_kit.tests import run_cov_test

    run_cov_test(
        __file__,
        "online_thue_kit.repetition.witness",
        preview=False,
    )
