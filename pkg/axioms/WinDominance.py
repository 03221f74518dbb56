from axioms.AbstractAxiom import ExclusionAxiom, ZERO_FREE
from data_objects.WeightedTournament import WeightedTournament


class WinDominance(ExclusionAxiom):

    def __init__(self):

        self.name = "WinDominance"
        self.description = "Do not select B alone if another candidate dominates B in wins."
        self.requirement = ZERO_FREE

    def excluded(self, tournament: WeightedTournament, bound: int):

        excluded = {}
        for b in range(tournament.size):
            for a in range(tournament.size):
                if a != b and tournament.dominates_in_wins(a, b):
                    excluded[b] = ({"A": a, "B": b}, None, None)
                    break

        return excluded

    def confirms(self, counterexample):

        actors = counterexample.actors
        return (counterexample.winners_before == (actors["B"],)
                and counterexample.primary.dominates_in_wins(actors["A"], actors["B"]))
