from conftest import DATA_DIRECTORY, tournament_from_pairs, weighted_tournaments
from data_objects.Ballot import Ballot
from data_objects.Profile import Profile, from_dict, margins_of_profile
from data_objects.WeightedTournament import WeightedTournament
from file_interfaces.BallotFileInterface import BallotFileInterface, parse_ballot_line, parse_ballots
from file_interfaces.TournamentFileInterface import parse_tournament
from helpers.RealizationHelper import RealizationHelper
from hypothesis import given, settings
from os.path import join

import exceptions as Exceptions
import networkx as nx
import numpy as np
import pytest


@pytest.fixture()
def realization_helper():

    return RealizationHelper()


class TestBallotFiles:

    def test_majority_file(self):

        profile = BallotFileInterface(join(DATA_DIRECTORY, "ballots", "majority.ballots")).profile
        assert profile.voter_count == 5
        assert profile.margins().margin("A", "B") == 1

    def test_candidates_in_order_of_appearance(self):

        profile = parse_ballots("B>C\n2: A>B\n")
        assert profile.candidates == ("B", "C", "A")
        assert profile.voter_count == 3

    def test_identical_rankings_are_aggregated(self):

        profile = parse_ballots("candidates: A,B\n2: A>B\nA>B\n")
        assert profile.ballots == [Ballot(["A", "B"], 3)]

    @pytest.mark.parametrize("text, error", [
        ("0: A>B\n", Exceptions.InvalidBallotCount),
        ("x: A>B\n", Exceptions.InvalidBallotCount),
        ("A>B>A\n", Exceptions.DuplicateBallotCandidate),
        ("candidates: A,B\nA>C\n", Exceptions.MalformedLine),
        ("A>>B\n", Exceptions.MalformedLine),
        ("# nothing but a comment\n", Exceptions.EmptyProfile)
    ])
    def test_malformed_ballots(self, text, error):

        with pytest.raises(error):
            parse_ballots(text)

    def test_missing_file(self):

        with pytest.raises(Exceptions.NoInputFileFound):
            BallotFileInterface(join(DATA_DIRECTORY, "ballots", "missing.ballots"))


class TestTournamentFiles:

    def test_comments_and_blank_lines(self):

        tournament = parse_tournament("# header below\n\ncandidates: A, B\nA B 3  # A ahead\n")
        assert tournament.labels == ("A", "B")
        assert tournament.margin("B", "A") == -3

    @pytest.mark.parametrize("text, error", [
        ("A B 3\n", Exceptions.MissingCandidateHeader),
        ("", Exceptions.MissingCandidateHeader),
        ("candidates: A,B\nA B\n", Exceptions.MalformedLine),
        ("candidates: A,B\nA B three\n", Exceptions.MalformedLine),
        ("candidates: A,B\nA C 3\n", Exceptions.MalformedLine),
        ("candidates: A,B\nA A 3\n", Exceptions.MalformedLine),
        ("candidates: A,B\nA B 3\nB A 3\n", Exceptions.MalformedLine),
        ("candidates: A,A\n", Exceptions.MalformedLine)
    ])
    def test_malformed_tournaments(self, text, error):

        with pytest.raises(error):
            parse_tournament(text)

    def test_consistent_repetition(self):

        assert parse_tournament("candidates: A,B\nA B 3\nB A -3\n").margin("A", "B") == 3


class TestProfile:

    def test_unranked_candidates_share_the_bottom(self):

        profile = Profile(["A", "B", "C"], [Ballot(["A"], 2)])
        tournament = profile.margins()
        assert tournament.margin("A", "B") == 2
        assert tournament.margin("A", "C") == 2
        assert tournament.margin("B", "C") == 0

    def test_neutral_reversal_keeps_margins(self):

        profile = Profile(["A", "B", "C"], [Ballot(["A", "B", "C"], 3)])
        extended = profile.with_neutral_reversal(["C", "A", "B"], 2)
        assert extended.voter_count == 7
        assert extended.margins() == profile.margins()

    def test_ballot_checks(self):

        with pytest.raises(Exceptions.UnknownCandidate):
            Profile(["A", "B"], [Ballot(["A", "C"])])
        with pytest.raises(Exceptions.DuplicateCandidate):
            Profile(["A", "B"], [Ballot(["A", "A"])])
        with pytest.raises(Exceptions.NonPositiveBallotCount):
            Profile(["A", "B"], [Ballot(["A", "B"], 0)])

    def test_ballot_count_error_names_the_line(self):

        with pytest.raises(Exceptions.InvalidBallotCount) as error:
            Profile(["A", "B"], [Ballot(["A", "B"], 0, line_number=7)])
        assert error.value.line_number == 7
        assert str(error.value).startswith("Line 7:")

    def test_parsed_ballots_keep_their_line(self):

        ballot = parse_ballot_line(3, "2: B>A")
        assert ballot == Ballot(["B", "A"], 2)
        assert ballot.line_number == 3

    @pytest.mark.parametrize("ranking", [["A", "B"], ["A", "B", "B"], ["A", "B", "D"], ["A", "B", "C", "D"]])
    def test_neutral_reversal_needs_a_full_ranking(self, ranking):

        profile = Profile(["A", "B", "C"], [])
        with pytest.raises(Exceptions.IncompleteRanking):
            profile.with_neutral_reversal(ranking)
        assert profile.voter_count == 0

    def test_dictionary_roundtrip(self):

        profile = Profile(["A", "B", "C"], [Ballot(["B", "A"], 2), Ballot(["C"])])
        copy = from_dict(profile.to_dict())
        assert copy.candidates == profile.candidates
        assert copy.ballots == profile.ballots

    def test_text_roundtrip(self):

        profile = Profile(["A", "B", "C"], [Ballot(["B", "A", "C"], 2), Ballot(["C", "A", "B"])])
        assert parse_ballots(profile.to_text()).margins() == profile.margins()


class TestDebordRealization:

    @given(weighted_tournaments(even=True))
    @settings(max_examples=60)
    def test_even_margins_are_reproduced(self, tournament):

        profile = RealizationHelper().debord_realize(tournament)
        assert profile.margins() == tournament

    @given(weighted_tournaments(max_size=4).map(
        lambda tournament: WeightedTournament(tournament.labels, [
            [value if i == j or abs(value) % 2 == 1 else value + (1 if i < j else -1) for j, value in enumerate(row)]
            for i, row in enumerate(tournament.matrix)])))
    @settings(max_examples=60)
    def test_odd_margins_are_reproduced(self, tournament):

        profile = RealizationHelper().debord_realize(tournament, "odd")
        assert profile.margins() == tournament
        assert profile.voter_count % 2 == 1

    def test_seeded_even_tournaments(self, realization_helper):

        rng = np.random.default_rng(6)
        for _ in range(1000):
            size = int(rng.integers(3, 6))
            values = 2 * rng.integers(-10, 11, size=size * (size - 1) // 2)
            tournament = tournament_from_pairs(size, values.tolist())

            assert margins_of_profile(realization_helper.debord_realize(tournament)) == tournament

    def test_four_cycle(self, tournaments, realization_helper):

        tournament = tournaments("ls_four_cycle")
        profile = realization_helper.debord_realize(tournament)
        assert profile.margins() == tournament
        assert all(len(ballot.ranked) == 4 for ballot in profile.ballots)

    def test_all_zero_margins(self, realization_helper):

        tournament = WeightedTournament(["A", "B", "C"], [[0] * 3 for _ in range(3)])
        profile = realization_helper.debord_realize(tournament)
        assert profile.voter_count == 2
        assert profile.margins() == tournament

    def test_mixed_parity(self, realization_helper):

        tournament = WeightedTournament(["A", "B", "C"], [[0, 2, 3], [-2, 0, 4], [-3, -4, 0]])
        with pytest.raises(Exceptions.MixedParity):
            realization_helper.debord_realize(tournament)
        with pytest.raises(Exceptions.MixedParity):
            realization_helper.debord_realize(tournament, "odd")

    def test_unsupported_parity(self, tournaments, realization_helper):

        with pytest.raises(Exceptions.UnsupportedParity):
            realization_helper.debord_realize(tournaments("ls_four_cycle"), "prime")


class TestMcGarveyRealization:

    def test_three_cycle(self, realization_helper):

        tournament = WeightedTournament(["A", "B", "C"], [[0, 5, -1], [-5, 0, 3], [1, -3, 0]])
        profile = realization_helper.mcgarvey_realize(tournament)

        assert profile.voter_count == 6
        margins = profile.margins()
        assert margins.margin("A", "B") == 2
        assert margins.margin("B", "C") == 2
        assert margins.margin("C", "A") == 2

    def test_digraph_input(self, realization_helper):

        graph = nx.DiGraph([("x", "y"), ("y", "z"), ("x", "z")])
        margins = realization_helper.mcgarvey_realize(graph).margins()
        assert margins.labels == ("x", "y", "z")
        assert margins.condorcet_winner().label == "x"
        assert set(margins.magnitudes()) == {2}

    def test_missing_defeat(self, realization_helper):

        with pytest.raises(Exceptions.NotATournament):
            realization_helper.mcgarvey_realize(nx.DiGraph([("x", "y"), ("y", "z")]))
        with pytest.raises(Exceptions.NotATournament):
            realization_helper.mcgarvey_realize(nx.DiGraph([("x", "y"), ("y", "x")]))
        with pytest.raises(Exceptions.NotATournament):
            realization_helper.mcgarvey_realize(WeightedTournament(["A", "B"], [[0, 0], [0, 0]]))
