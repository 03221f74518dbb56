from data_objects.WeightedTournament import WeightedTournament
from file_interfaces.TournamentFileInterface import TournamentFileInterface
from helpers.EnumerationHelper import default_magnitudes, enumerate_assignments, pairs
from hypothesis import strategies as st
from os.path import dirname, join, realpath

import numpy as np
import pytest

DATA_DIRECTORY = join(dirname(dirname(realpath(__file__))), "data")
LABELS = "ABCDEFG"


def tournament_path(name: str):

    return join(DATA_DIRECTORY, "tournaments", f"{name}.tournament")


def load_tournament(name: str):

    return TournamentFileInterface(tournament_path(name)).tournament


@pytest.fixture()
def tournaments():

    """Load a named tournament from data/tournaments."""

    return load_tournament


@pytest.fixture()
def settings_file(tmp_path):

    """A settings file that keeps log files out of the working directory."""

    path = tmp_path / "settings.yml"
    path.write_text("logging:\n  directory: ''\n  level: WARNING\n", encoding="utf-8")
    return str(path)


def tournament_from_pairs(size: int, values: list):

    rows = [[0] * size for _ in range(size)]
    pairs = [(i, j) for i in range(size) for j in range(i + 1, size)]
    for (i, j), value in zip(pairs, values):
        rows[i][j], rows[j][i] = value, -value

    return WeightedTournament(list(LABELS[:size]), rows)


@st.composite
def weighted_tournaments(draw, min_size=2, max_size=5, max_margin=20, even=False, zero_free=False):

    size = draw(st.integers(min_size, max_size))
    count = size * (size - 1) // 2

    margins = st.integers(-max_margin, max_margin)
    if even:
        margins = margins.map(lambda value: value - value % 2)
    if zero_free:
        margins = margins.filter(lambda value: value != 0)

    return tournament_from_pairs(size, draw(st.lists(margins, min_size=count, max_size=count)))


@st.composite
def uniquely_weighted_tournaments(draw, min_size=2, max_size=5):

    size = draw(st.integers(min_size, max_size))
    count = size * (size - 1) // 2

    magnitudes = draw(st.lists(st.integers(1, 40), min_size=count, max_size=count, unique=True))
    signs = draw(st.lists(st.sampled_from((1, -1)), min_size=count, max_size=count))

    return tournament_from_pairs(size, [sign * magnitude for sign, magnitude in zip(signs, magnitudes)])


def enumeration_stack(size: int, magnitudes: list = None):

    """Stack the margin matrices of every tournament an exhaustive audit visits, in enumeration order."""

    magnitudes = default_magnitudes(size) if magnitudes is None else magnitudes
    assignments = np.array(list(enumerate_assignments(size, magnitudes)), dtype=np.int64)

    stack = np.zeros((len(assignments), size, size), dtype=np.int64)
    for column, (i, j) in enumerate(pairs(size)):
        stack[:, i, j] = assignments[:, column]
        stack[:, j, i] = -assignments[:, column]

    return stack
