from data_objects.SelectionResult import SelectionStage
from data_objects.WeightedTournament import WeightedTournament
from methods.AbstractMethod import AbstractMethod

import numpy as np


class CopelandBorda(AbstractMethod):
    """
    Restricts to the Copeland winners and then picks the largest sum of margins.

    Globally (cgb) the sum runs over the margins against all candidates, which is the
    symmetric Borda score. Locally (clb) it only runs over the other Copeland winners.
    """

    local: bool = None

    def __init__(self, name: str = "cgb", local: bool = False):

        self.name = name
        self.local = local
        self.description = ("Among the Copeland winners, select the largest sum of margins against the other "
                            "Copeland winners." if local else
                            "Among the Copeland winners, select the greatest symmetric Borda score.")

    def stages(self, tournament: WeightedTournament):

        copeland = self.copeland_stage(tournament)
        finalists = copeland.candidates

        if self.local:
            scores = {x: sum(tournament.matrix[x][y] for y in finalists) for x in finalists}
            name = "local_borda"
        else:
            scores = {x: tournament.symmetric_borda(x) for x in finalists}
            name = "symmetric_borda"

        return [copeland, SelectionStage(name, self.argmax(scores), scores)]

    def winner_masks(self, tournament: WeightedTournament, stack):

        finalists = self.copeland_masks(stack)
        if self.local:
            scores = (stack * finalists[:, np.newaxis, :]).sum(axis=2)
        else:
            scores = stack.sum(axis=2)

        return self.highest(scores, finalists)
