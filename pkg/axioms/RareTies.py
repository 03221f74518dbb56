from axioms.AbstractAxiom import AbstractAxiom, UNIQUELY_WEIGHTED
from data_objects.WeightedTournament import WeightedTournament
from methods.AbstractMethod import AbstractMethod


class RareTies(AbstractAxiom):

    def __init__(self):

        self.name = "RareTies"
        self.description = "Select exactly one candidate in every uniquely-weighted tournament."
        self.requirement = UNIQUELY_WEIGHTED

    def search(self, method: AbstractMethod, tournament: WeightedTournament, winners: frozenset, bound: int,
               cache: dict):

        if len(winners) == 1:
            return None

        return self.counterexample(method, tournament, winners, {})

    def confirms(self, counterexample):

        return counterexample.primary.is_uniquely_weighted() and len(counterexample.winners_before) != 1
