from axioms.AbstractAxiom import AbstractAxiom
from data_objects.WeightedTournament import WeightedTournament
from methods.AbstractMethod import AbstractMethod


class CondorcetCriterion(AbstractAxiom):

    def __init__(self):

        self.name = "CondorcetCriterion"
        self.description = "Select the Condorcet winner, and only the Condorcet winner, whenever there is one."

    def search(self, method: AbstractMethod, tournament: WeightedTournament, winners: frozenset, bound: int,
               cache: dict):

        winner = tournament.condorcet_winner_index()
        if winner is None or winners == frozenset((winner,)):
            return None

        return self.counterexample(method, tournament, winners, {"A": winner})

    def confirms(self, counterexample):

        primary = counterexample.primary
        winner = primary.condorcet_winner_index()
        return (winner is not None and primary.labels[winner] == counterexample.actors["A"]
                and counterexample.winners_before != (counterexample.actors["A"],))
