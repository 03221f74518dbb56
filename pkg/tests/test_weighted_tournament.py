from conftest import enumeration_stack, weighted_tournaments, uniquely_weighted_tournaments
from data_objects.WeightedTournament import build_tournament, from_dict, from_matrix
from file_interfaces.TournamentFileInterface import parse_tournament
from helpers.EnumerationHelper import enumerate_assignments, tournament_from_assignment
from hypothesis import given, strategies as st
from itertools import permutations

import exceptions as Exceptions
import numpy as np
import pytest


class TestConstruction:

    def test_unspecified_pairs_default_to_zero(self):

        tournament = build_tournament(["A", "B", "C"], [("A", "B", 3)])
        assert tournament.margin("A", "B") == 3
        assert tournament.margin("B", "A") == -3
        assert tournament.margin("A", "C") == 0
        assert not tournament.is_zero_free()

    def test_repeated_entry_with_same_margin_is_accepted(self):

        tournament = build_tournament(["A", "B"], [("A", "B", 2), ("B", "A", -2)])
        assert tournament.margin("A", "B") == 2

    def test_conflicting_entry(self):

        with pytest.raises(Exceptions.ConflictingMargin):
            build_tournament(["A", "B"], [("A", "B", 2), ("B", "A", 2)])

    def test_unknown_and_duplicate_candidates(self):

        with pytest.raises(Exceptions.UnknownCandidate):
            build_tournament(["A", "B"], [("A", "C", 2)])
        with pytest.raises(Exceptions.DuplicateCandidate):
            build_tournament(["A", "A"], [])
        with pytest.raises(Exceptions.EmptyCandidateList):
            build_tournament([], [])

    def test_self_pair(self):

        with pytest.raises(Exceptions.SelfPair):
            build_tournament(["A", "B"], [("A", "A", 1)])

    def test_matrix_must_be_antisymmetric(self):

        with pytest.raises(Exceptions.ConflictingMargin):
            from_matrix(["A", "B"], [[0, 2], [2, 0]])

    def test_dictionary_roundtrip(self, tournaments):

        tournament = tournaments("ls_four_cycle")
        assert from_dict(tournament.to_dict()) == tournament

    def test_matrix_export(self, tournaments):

        matrix = tournaments("ls_four_cycle").to_matrix()
        assert isinstance(matrix, np.ndarray)
        assert np.array_equal(matrix, -matrix.T)


class TestWinsAndLosses:

    def test_copeland_winners_of_the_four_cycle(self, tournaments):

        tournament = tournaments("ls_four_cycle")
        winners, score = tournament.copeland_winners()
        assert [candidate.label for candidate in winners] == ["N", "E"]
        assert score == 2
        assert tournament.condorcet_winner() is None

    def test_loss_profile(self, tournaments):

        tournament = tournaments("ls_four_cycle")
        profile = tournament.loss_profile("W")
        assert [(adversary.label, margin) for adversary, margin in profile] == [("S", 4), ("E", 6)]
        assert profile.worst_loss == 6
        assert profile.smallest_loss == 4

    def test_loss_profile_of_condorcet_winner_is_empty(self, tournaments):

        profile = tournaments("linear_order").loss_profile("N")
        assert len(profile) == 0
        assert profile.worst_loss == 0

    def test_condorcet_winner_and_loser(self, tournaments):

        tournament = tournaments("linear_order")
        assert tournament.condorcet_winner().label == "N"
        assert tournament.condorcet_loser().label == "S"

    def test_uncovered_set(self, tournaments):

        uncovered = tournaments("uncovered_minimax").uncovered_set()
        assert [candidate.label for candidate in uncovered] == ["W", "N", "E"]

        flipped = tournaments("uncovered_minimax_flipped").uncovered_set()
        assert [candidate.label for candidate in flipped] == ["N", "E", "S"]

    def test_dominance_in_wins(self, tournaments):

        tournament = build_tournament(["A", "B", "C"], [("A", "B", 2), ("A", "C", 10), ("B", "C", 4)])
        assert tournament.dominates_in_wins("A", "B")
        assert not tournament.dominates_in_wins("B", "A")
        with pytest.raises(Exceptions.IdenticalCandidates):
            tournament.dominates_in_wins("A", "A")

        # W beats S by less than E does
        assert not tournaments("linear_order").dominates_in_wins("W", "E")

    def test_uniquely_weighted(self, tournaments):

        assert tournaments("ls_four_cycle").is_uniquely_weighted()
        assert not build_tournament(["A", "B", "C"], [("A", "B", 2), ("B", "C", 2), ("C", "A", 4)]) \
            .is_uniquely_weighted()


class TestPerturbations:

    def test_improve_margin_can_flip_a_defeat(self, tournaments):

        tournament = tournaments("borda_tiebreak")
        improved = tournament.improve_margin("N", "W", 3)
        assert improved.margin("N", "W") == 1
        assert improved.condorcet_winner().label == "N"
        assert tournament.margin("N", "W") == -2

    def test_negative_improvement(self, tournaments):

        with pytest.raises(Exceptions.NegativeImprovement):
            tournaments("borda_tiebreak").improve_margin("N", "W", -1)

    def test_improve_all_margins(self, tournaments):

        tournament = tournaments("borda_tiebreak").improve_all_margins("E", 6)
        assert tournament.margin("E", "N") == 0
        assert tournament.margin("E", "W") == 14
        assert tournament.condorcet_winner() is None

    def test_remove_and_add_candidate(self, tournaments):

        tournament = tournaments("ls_four_cycle")
        restricted = tournament.remove_candidate("S")
        assert restricted.labels == ("W", "N", "E")
        assert restricted.margin("E", "W") == 6

        restored = restricted.add_candidate("S", {"W": 4, "N": -10, "E": -12})
        assert restored == tournament

    def test_remove_last_candidate(self):

        with pytest.raises(Exceptions.EmptyTournament):
            build_tournament(["A"], []).remove_candidate("A")

    def test_with_margin(self, tournaments):

        tournament = tournaments("ls_four_cycle").with_margin("S", "W", -4)
        assert tournament == tournaments("ls_four_cycle_flipped")

    def test_copeland_distance(self, tournaments):

        tournament = tournaments("pentagram")
        assert tournament.copeland_distance_of(tournament.index_of("b")) == 5
        assert tournament.single_copeland_threshold_of(tournament.index_of("a")) == (3, tournament.index_of("c"))


class TestProperties:

    @given(weighted_tournaments())
    def test_antisymmetry(self, tournament):

        for i in range(tournament.size):
            for j in range(tournament.size):
                assert tournament.matrix[i][j] == -tournament.matrix[j][i]

    @given(weighted_tournaments())
    def test_text_roundtrip(self, tournament):

        assert parse_tournament(tournament.to_text()) == tournament

    @given(uniquely_weighted_tournaments(min_size=3))
    def test_relabelling_keeps_copeland_scores(self, tournament):

        relabelled = tournament.relabel({label: label.lower() for label in tournament.labels})
        assert relabelled.copeland_scores() == tournament.copeland_scores()

    @given(uniquely_weighted_tournaments(min_size=3))
    def test_permutation_keeps_margins(self, tournament):

        order = list(reversed(tournament.labels))
        permuted = tournament.permute(order)
        for first in tournament.labels:
            for second in tournament.labels:
                assert permuted.margin(first, second) == tournament.margin(first, second)

    @given(weighted_tournaments(max_margin=8))
    def test_m_covering_implies_covering_and_dominance(self, tournament):

        for a in range(tournament.size):
            for b in range(tournament.size):
                if a != b and tournament.m_covers(a, b):
                    assert tournament.covers(a, b)
                    assert tournament.dominates_in_wins(a, b)

    def test_converse_witnesses(self):

        covering_only, dominance_only = None, None
        for assignment in enumerate_assignments(3, [2, 4, 6]):
            tournament = tournament_from_assignment(3, assignment)
            for a, b in permutations(range(3), 2):
                if tournament.m_covers(a, b):
                    continue
                if tournament.covers(a, b):
                    covering_only = covering_only or (tournament, a, b)
                if tournament.dominates_in_wins(a, b):
                    dominance_only = dominance_only or (tournament, a, b)

        assert covering_only is not None
        assert dominance_only is not None

        # A covers B but wins against C by less than B does
        tournament = build_tournament(["A", "B", "C"], [("A", "B", 6), ("A", "C", 2), ("B", "C", 4)])
        assert tournament.covers("A", "B") and not tournament.m_covers("A", "B")

        # B wins nothing, A loses to C by more than B does
        tournament = build_tournament(["A", "B", "C"], [("A", "B", 2), ("C", "A", 6), ("C", "B", 4)])
        assert tournament.dominates_in_wins("A", "B") and not tournament.m_covers("A", "B")

    @given(weighted_tournaments(min_size=3), st.data())
    def test_removal_commutes_with_improvement(self, tournament, data):

        a, x, removed = data.draw(st.permutations(range(tournament.size)))[:3]
        n = data.draw(st.integers(0, 25))
        label = tournament.labels[removed]
        first, second = tournament.labels[a], tournament.labels[x]

        assert tournament.improve_margin(first, second, n).remove_candidate(label) == \
            tournament.remove_candidate(label).improve_margin(first, second, n)

    @given(weighted_tournaments())
    def test_uncovered_set_is_never_empty(self, tournament):

        assert len(tournament.uncovered_set()) > 0

    def test_four_candidate_copeland_winners_lose_at_most_once(self):

        stack = enumeration_stack(4)
        scores = (stack > 0).sum(axis=2)
        losses = (stack < 0).sum(axis=2)

        winners = scores == scores.max(axis=1, keepdims=True)
        assert losses[winners].max() <= 1
        assert len(stack) == 46080
