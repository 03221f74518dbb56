from data_objects.WeightedTournament import WeightedTournament
from methods.AbstractMethod import AbstractMethod


class Copeland(AbstractMethod):

    def __init__(self):

        self.name = "copeland"
        self.description = "Select the candidates with the most head-to-head wins."

    def stages(self, tournament: WeightedTournament):

        return [self.copeland_stage(tournament)]

    def winners(self, tournament: WeightedTournament):

        return frozenset(tournament.copeland_winner_indices())

    def winner_masks(self, tournament: WeightedTournament, stack):

        return self.copeland_masks(stack)
