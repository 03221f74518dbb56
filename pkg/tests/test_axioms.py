from axioms.AxiomRegistry import check, get_axiom, valid_axioms
from axioms.ProximityCondorcet import ProximityCondorcet
from axioms.ProximityCopeland import ProximityCopeland
from conftest import tournament_from_pairs, uniquely_weighted_tournaments, weighted_tournaments
from data_objects.Counterexample import Counterexample, from_dict, step
from data_objects.SelectionResult import SelectionStage
from data_objects.WeightedTournament import build_tournament
from hypothesis import given, settings
from methods.AbstractMethod import AbstractMethod

import exceptions as Exceptions
import numpy as np
import pytest


class FixedChoice(AbstractMethod):
    """Always selects the same label."""

    def __init__(self, label: str):

        self.name = f"fixed_{label}"
        self.label = label

    def stages(self, tournament):

        return [SelectionStage("fixed", [tournament.index_of(self.label)])]


def assert_reproducible(verdict, method=None):

    counterexample = verdict.counterexample
    assert counterexample.verify(method)

    copy = from_dict(counterexample.to_dict())
    assert copy.to_dict() == counterexample.to_dict()
    assert copy.verify(method)


class TestProximityCondorcet:

    def test_borda_tie_breaking_violates(self, tournaments):

        verdict = check("ProximityCondorcet", "cgb_plus", tournaments("borda_tiebreak"))

        assert not verdict.holds
        counterexample = verdict.counterexample
        assert counterexample.actors == {"A": "N", "B": "E", "X": "W"}
        assert counterexample.n == 3
        assert counterexample.perturbation == [step("improve_margin", "N", "W", 3),
                                               step("improve_all_margins", "E", 3, from_primary=True)]
        improved_n, improved_e = counterexample.outcomes()
        assert improved_n == counterexample.secondary
        assert improved_n.condorcet_winner().label == "N"
        assert improved_e.condorcet_winner() is None
        assert counterexample.winners_before == ("E",)
        assert counterexample.winners_after == ("N",)
        assert_reproducible(verdict)

    def test_mwsl_holds(self, tournaments):

        assert check("ProximityCondorcet", "mwsl", tournaments("borda_tiebreak")).holds

    def test_thresholds(self, tournaments):

        tournament = tournaments("borda_tiebreak")
        index = tournament.index_of
        assert ProximityCondorcet.condorcet_threshold_of(tournament, index("N")) == (3, index("W"))
        assert ProximityCondorcet.condorcet_threshold_of(tournament, index("S")) == (None, None)
        assert ProximityCondorcet.condorcet_threshold_of(tournaments("linear_order"), 1) == (0, None)

    @given(weighted_tournaments(min_size=2, max_size=4, max_margin=8, zero_free=True))
    @settings(max_examples=40, deadline=None)
    def test_closed_form_matches_explicit_search(self, tournament):

        axiom = ProximityCondorcet()
        bound = axiom.default_bound(tournament)
        assert set(axiom.excluded(tournament, bound)) == axiom.explicit_excluded(tournament, bound)

    @pytest.mark.slow
    def test_closed_form_matches_explicit_search_on_seeded_tournaments(self):

        axiom = ProximityCondorcet()
        rng = np.random.default_rng(11)
        for _ in range(10000):
            size = int(rng.integers(2, 6))
            count = size * (size - 1) // 2
            values = rng.integers(1, 11, size=count) * rng.choice(np.array([1, -1]), size=count)
            tournament = tournament_from_pairs(size, values.tolist())

            bound = axiom.default_bound(tournament)
            assert set(axiom.excluded(tournament, bound)) == axiom.explicit_excluded(tournament, bound)


class TestProximityCopeland:

    def test_copeland_global_minimax_violates(self, tournaments):

        verdict = check("ProximityCopeland", "cgm", tournaments("pentagram"))

        assert not verdict.holds
        counterexample = verdict.counterexample
        assert counterexample.actors == {"A": "a", "B": "b", "X": "c"}
        assert counterexample.n == 3
        assert counterexample.winners_after == ("a",)
        assert_reproducible(verdict)

    def test_mwsl_holds(self, tournaments):

        assert check("ProximityCopeland", "mwsl", tournaments("pentagram")).holds

    def test_small_bound_hides_the_violation(self, tournaments):

        assert check("ProximityCopeland", "cgm", tournaments("pentagram"), bound=2).holds

    @given(weighted_tournaments(min_size=2, max_size=4, max_margin=8, zero_free=True))
    @settings(max_examples=40, deadline=None)
    def test_closed_form_matches_explicit_search(self, tournament):

        axiom = ProximityCopeland()
        bound = axiom.default_bound(tournament)
        assert set(axiom.excluded(tournament, bound)) == axiom.explicit_excluded(tournament, bound)


class TestIndependenceOfIrrelevantDefeats:

    def test_local_variant_violates(self, tournaments):

        verdict = check("IID", "variant_local_min", tournaments("ls_four_cycle"))

        assert not verdict.holds
        counterexample = verdict.counterexample
        assert counterexample.actors == {"A": "N", "B": "E", "C": "W", "D": "S"}
        assert counterexample.perturbation == [step("with_margin", "W", "S", 2)]
        assert counterexample.winners_after == ("E",)
        assert_reproducible(verdict)

    def test_mwsl_holds(self, tournaments):

        assert check("IID", "mwsl", tournaments("ls_four_cycle")).holds

    def test_uncovered_minimax_violates(self, tournaments):

        verdict = check("IID", "uncovered_minimax", tournaments("uncovered_minimax"))

        assert not verdict.holds
        assert verdict.counterexample.actors["A"] == "W"
        assert verdict.counterexample.winners_after == ("E",)
        assert_reproducible(verdict)

    def test_replacements_keep_parity(self):

        assert get_axiom("IID").replacements(2, 4) == [-4, -2, 4]
        assert get_axiom("IID").replacements(-1, 3) == [-3, 1, 3]

    def test_zero_margins_are_rejected(self):

        with pytest.raises(Exceptions.ZeroMargins):
            check("IID", "mwsl", build_tournament(["A", "B", "C"], [("A", "B", 2), ("B", "C", 4)]))


class TestWinMonotonicity:

    def test_irregular_pattern_violates(self, tournaments):

        verdict = check("WinMonotonicity", "g_fixture", tournaments("pattern_g"))

        assert not verdict.holds
        counterexample = verdict.counterexample
        assert counterexample.actors["A"] == "S"
        assert counterexample.winners_before == ("S",)
        assert counterexample.winners_after == ("E",)
        assert_reproducible(verdict)

    def test_mwsl_holds(self, tournaments):

        assert check("WinMonotonicity", "mwsl", tournaments("pattern_g")).holds

    def test_irregular_pattern_keeps_other_axioms(self, tournaments):

        for axiom in ("ProximityCondorcet", "ProximityCopeland", "WinDominance", "RareTies", "CondorcetCriterion"):
            assert check(axiom, "g_fixture", tournaments("pattern_g")).holds


class TestImmunitySpoilers:

    def test_local_variant_violates(self, tournaments):

        verdict = check("ImmunitySpoilers", "variant_local_min", tournaments("ls_four_cycle"))

        assert not verdict.holds
        counterexample = verdict.counterexample
        assert counterexample.actors == {"A": "E", "B": "S", "C": "N"}
        assert counterexample.secondary.labels == ("W", "N", "E")
        assert_reproducible(verdict)

    def test_borda_tie_breaking_violates(self, tournaments):

        verdict = check("ImmunitySpoilers", "cgb", tournaments("borda_spoiler"))

        assert not verdict.holds
        assert verdict.counterexample.actors == {"A": "E", "B": "S", "C": "N"}
        assert_reproducible(verdict)

    def test_mwsl_holds(self, tournaments):

        assert check("ImmunitySpoilers", "mwsl", tournaments("ls_four_cycle")).holds
        assert check("ImmunitySpoilers", "mwsl", tournaments("borda_spoiler")).holds

    def test_needs_three_candidates(self):

        with pytest.raises(Exceptions.UnsupportedCandidateCount):
            check("ImmunitySpoilers", "mwsl", build_tournament(["A", "B"], [("A", "B", 1)]))


class TestSingleTournamentAxioms:

    def test_copeland_ties(self, tournaments):

        verdict = check("RareTies", "copeland", tournaments("ls_four_cycle"))

        assert not verdict.holds
        assert verdict.counterexample.winners_before == ("N", "E")
        assert verdict.counterexample.secondary is None
        assert_reproducible(verdict)

    def test_rare_ties_needs_unique_weights(self):

        with pytest.raises(Exceptions.NotUniquelyWeighted):
            check("RareTies", "mwsl", build_tournament(["A", "B", "C"], [("A", "B", 2), ("B", "C", 2), ("C", "A", 4)]))

    def test_condorcet_criterion(self, tournaments):

        assert check("CondorcetCriterion", "minimax", tournaments("linear_order")).holds
        assert check("CondorcetCriterion", "copeland", tournaments("ls_four_cycle")).holds

        method = FixedChoice("W")
        verdict = check("CondorcetCriterion", method, tournaments("linear_order"))
        assert not verdict.holds
        assert verdict.counterexample.actors == {"A": "N"}
        assert_reproducible(verdict, method)

    def test_win_dominance(self):

        tournament = build_tournament(["A", "B", "C"], [("A", "B", 2), ("A", "C", 10), ("B", "C", 4)])
        assert set(get_axiom("WinDominance").excluded(tournament, 11)) == {1, 2}

        method = FixedChoice("B")
        verdict = check("WinDominance", method, tournament)
        assert not verdict.holds
        assert verdict.counterexample.actors == {"A": "A", "B": "B"}
        assert verdict.counterexample.perturbation == []
        assert_reproducible(verdict, method)

        assert check("WinDominance", "mwsl", tournament).holds


class TestCounterexample:

    def test_unknown_step_is_not_replayed(self, tournaments):

        counterexample = Counterexample("IID", "mwsl", tournaments("ls_four_cycle"),
                                        perturbation=[step("clear", "W", "N")])
        with pytest.raises(Exceptions.UnknownPerturbationStep):
            counterexample.replay()

    def test_tampered_winners_fail_verification(self, tournaments):

        verdict = check("IID", "variant_local_min", tournaments("ls_four_cycle"))
        data = verdict.counterexample.to_dict()
        data["winners_after"] = ["W"]
        assert not from_dict(data).verify()

    def test_changed_improvement_fails_verification(self, tournaments):

        verdict = check("ProximityCopeland", "cgm", tournaments("pentagram"))
        data = verdict.counterexample.to_dict()
        data["perturbation"][1]["arguments"][1] = 2
        assert not from_dict(data).verify()

    def test_premise_of_another_axiom_fails_verification(self, tournaments):

        verdict = check("RareTies", "copeland", tournaments("ls_four_cycle"))
        data = verdict.counterexample.to_dict()
        assert from_dict(data).verify()

        # The four cycle has no Condorcet winner
        data["axiom"] = "CondorcetCriterion"
        data["actors"] = {"A": "N"}
        assert not from_dict(data).verify()

    def test_premise_is_rechecked(self, tournaments):

        verdict = check("ImmunitySpoilers", "variant_local_min", tournaments("ls_four_cycle"))
        assert verdict.counterexample.verify()

        # The recorded step removes S, not the claimed spoiler E
        data = verdict.counterexample.to_dict()
        data["actors"] = {"A": "S", "B": "E", "C": "N"}
        assert not from_dict(data).verify()

    def test_unknown_axiom(self, tournaments):

        with pytest.raises(Exceptions.UnknownAxiom):
            check("Monotonicity", "mwsl", tournaments("ls_four_cycle"))


class TestMostWinsSmallestLoss:

    @given(uniquely_weighted_tournaments(min_size=3, max_size=4))
    @settings(max_examples=25, deadline=None)
    def test_every_axiom_holds(self, tournament):

        for name in valid_axioms:
            verdict = check(name, "mwsl", tournament)
            assert verdict.holds, verdict.counterexample.to_dict()
