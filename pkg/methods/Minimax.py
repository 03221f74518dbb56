from data_objects.SelectionResult import SelectionStage
from data_objects.WeightedTournament import WeightedTournament
from methods.AbstractMethod import AbstractMethod

import numpy as np


class Minimax(AbstractMethod):

    def __init__(self):

        self.name = "minimax"
        self.description = "Select the candidates whose worst head-to-head loss is smallest."

    def stages(self, tournament: WeightedTournament):

        """Runs Minimax according to the following logic:
        Every candidate scores its worst loss, 0 if it loses to no one. The lowest score wins.

        :param tournament: The tournament to select from.
        :type tournament: WeightedTournament

        :return: A single "worst_loss" stage.
        :rtype: list
        """

        scores = {i: tournament.worst_loss_of(i) for i in range(tournament.size)}
        return [SelectionStage("worst_loss", self.argmin(scores), scores)]

    def winners(self, tournament: WeightedTournament):

        return frozenset(self.argmin({i: tournament.worst_loss_of(i) for i in range(tournament.size)}))

    def winner_masks(self, tournament: WeightedTournament, stack):

        worst = self.worst_losses(stack)
        return self.lowest(worst, np.ones(worst.shape, dtype=bool))
