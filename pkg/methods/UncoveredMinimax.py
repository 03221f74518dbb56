from data_objects.SelectionResult import SelectionStage
from data_objects.WeightedTournament import WeightedTournament
from methods.AbstractMethod import AbstractMethod

import numpy as np


class UncoveredMinimax(AbstractMethod):

    def __init__(self):

        self.name = "uncovered_minimax"
        self.description = "Among the uncovered candidates, select the one whose worst loss is smallest."

    def stages(self, tournament: WeightedTournament):

        # Score every candidate by the number of candidates covering it
        coverers = {b: sum(1 for a in range(tournament.size) if a != b and tournament.covers(a, b))
                    for b in range(tournament.size)}
        uncovered = [b for b, count in coverers.items() if count == 0]

        losses = {x: tournament.worst_loss_of(x) for x in uncovered}
        return [SelectionStage("uncovered", uncovered, coverers),
                SelectionStage("worst_loss", self.argmin(losses), losses)]

    def winner_masks(self, tournament: WeightedTournament, stack):

        beats = stack > 0

        # Entry [K, a, b] is True when a beats b and every candidate b beats
        covers = beats & (~beats[:, np.newaxis, :, :] | beats[:, :, np.newaxis, :]).all(axis=3)
        uncovered = ~covers.any(axis=1)

        return self.lowest(self.worst_losses(stack), uncovered)
