import itertools
import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.append(str(Path(__file__).resolve().parents[1]))

from graphcycles.models import Permutation, Picture
from graphcycles.services.errors import InvalidParameterError
from graphcycles.services.generators import build_turbo_graph
from graphcycles.services.pictures import (
    cycle_choices,
    embed_picture,
    enumerate_pictures,
    ldpc_picture_count,
    path_choices,
    picture_count,
    pictures_by_cross_count,
    total_pictures,
)

TOTALS = {4: 4, 5: 10, 6: 18, 7: 28, 8: 56, 9: 126, 10: 270, 11: 528, 12: 1012, 13: 2002, 14: 4074, 15: 8260, 16: 16496}


def _brute_cycle_choices(a, b):
    return sum(
        1
        for chosen in itertools.combinations(range(a), b)
        if all((edge + 1) % a not in chosen for edge in chosen)
    )


def test_path_choices_examples():
    assert path_choices(0, 0) == 1
    assert path_choices(7, 0) == 1
    assert path_choices(5, 2) == 6
    assert path_choices(3, 2) == 1
    assert path_choices(2, 2) == 0


def test_cycle_choices_examples():
    assert cycle_choices(4, 2) == 2
    assert cycle_choices(5, 2) == 5
    assert cycle_choices(6, 3) == 2
    assert cycle_choices(3, 2) == 0


@pytest.mark.parametrize("a, b", [(-1, 0), (2, -1)])
def test_path_choices_rejects_negative(a, b):
    with pytest.raises(InvalidParameterError):
        path_choices(a, b)


def test_cycle_choices_preconditions():
    with pytest.raises(InvalidParameterError):
        cycle_choices(2, 1)
    with pytest.raises(InvalidParameterError):
        cycle_choices(6, 0)


def test_path_choices_recurrence():
    for a in range(2, 31):
        for b in range(1, a + 1):
            assert path_choices(a, b) == path_choices(a - 1, b) + path_choices(a - 2, b - 1)


def test_cycle_choices_recurrence():
    for a in range(3, 31):
        for b in range(1, a + 1):
            assert cycle_choices(a, b) == path_choices(a - 1, b) + path_choices(a - 3, b - 1)


def test_cycle_choices_matches_direct_count():
    for a in range(3, 13):
        for b in range(1, a // 2 + 2):
            assert cycle_choices(a, b) == _brute_cycle_choices(a, b)


def test_picture_count_examples():
    assert picture_count(4, 2) == 4
    assert picture_count(8, 4) == 16
    assert picture_count(12, 6) == 64
    assert picture_count(8, 2) == 40
    assert picture_count(12, 4) == 840


@pytest.mark.parametrize("k, m", [(8, 3), (8, 0), (8, 6), (3, 2), (65, 2)])
def test_picture_count_preconditions(k, m):
    with pytest.raises(InvalidParameterError):
        picture_count(k, m)


def test_total_pictures():
    for k, expected in TOTALS.items():
        assert total_pictures(k) == expected
    assert 0.5 < total_pictures(12) / 2**10 < 2


@pytest.mark.parametrize("k", range(4, 13))
def test_enumeration_matches_formula(k):
    pictures = enumerate_pictures(k)
    assert len(pictures) == total_pictures(k)
    assert len(set(pictures)) == len(pictures)
    assert pictures_by_cross_count(k) == {m: picture_count(k, m) for m in range(2, k // 2 + 1, 2)}


@pytest.mark.parametrize("k", range(4, 11))
def test_enumerated_pictures_are_valid(k):
    for picture in enumerate_pictures(k):
        assert picture.validate() is picture
        assert picture.k == k


@pytest.mark.parametrize("k", range(4, 11))
def test_reversal_closes_the_picture_set(k):
    pictures = set(enumerate_pictures(k))
    for picture in pictures:
        flipped = picture.reversed()
        assert flipped != picture
        assert flipped not in pictures
        assert flipped.canonical() == picture
        assert flipped.reversed() == picture


def test_enumeration_length_limits():
    with pytest.raises(InvalidParameterError):
        enumerate_pictures(3)
    with pytest.raises(InvalidParameterError):
        enumerate_pictures(17)


@pytest.mark.parametrize("label", ["XXFB", "FBXX", "FXFB", "FFFF", "FXB", "FXQX", "FXBXFX"])
def test_invalid_pictures(label):
    with pytest.raises(InvalidParameterError):
        Picture.from_label(label).validate()


def test_valid_picture_labels():
    assert Picture.from_label("fxbx").label == "FXBX"
    assert Picture.from_label("FXBX").validate().cross_count == 2
    assert Picture.from_label("FFXBBX").validate().k == 6


def test_embed_picture_on_square(square_turbo):
    assert embed_picture(square_turbo, (0, 0), Picture.from_label("FXBX")) is True
    assert embed_picture(square_turbo, (0, 0), Picture.from_label("XFXB")) is True
    assert embed_picture(square_turbo, (0, 0), Picture.from_label("FXFX")) is False
    assert embed_picture(square_turbo, (0, 0), Picture.from_label("BXFX")) is False


def test_embed_picture_rejects_repeated_node():
    graph = build_turbo_graph(Permutation.identity(3))
    # closes the square after four of its eight edges
    assert embed_picture(graph, (0, 0), Picture.from_label("FXBXFXBX").validate()) is False


def test_ldpc_picture_counts(caplog):
    assert ldpc_picture_count(2, 3, 6) == 162
    assert ldpc_picture_count(2, 1, 2) == 2
    with caplog.at_level("WARNING"):
        assert ldpc_picture_count(3, 3, 5) == Fraction(3375, 2)
    assert "não inteira" in caplog.text
