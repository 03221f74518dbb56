from data_objects.SelectionResult import SelectionStage
from data_objects.WeightedTournament import WeightedTournament
from methods.AbstractMethod import AbstractMethod
from methods.CopelandThenLoss import CopelandThenLoss
from itertools import permutations

import numpy as np


class GFixture(AbstractMethod):
    """
    A deliberately irregular method that agrees with Most Wins, Smallest Loss except on one pattern.

    On four candidates playing the roles W, N, E, S with m(W,N) > 10, m(N,E) = 10, m(E,W) = 6,
    m(S,W) = 8, m(N,S) = 4 and m(E,S) = 2 it selects S. It passes every axiom of the four
    candidate characterization except Win Monotonicity.
    """

    # (winner, loser, margin) with the roles W=0, N=1, E=2, S=3
    pattern: tuple = ((1, 2, 10), (2, 0, 6), (3, 0, 8), (1, 3, 4), (2, 3, 2))
    minimum_open_margin: int = 10

    def __init__(self):

        self.name = "g_fixture"
        self.description = "Select S on one fixed four candidate pattern, otherwise agree with mwsl."
        self.fallback = CopelandThenLoss("mwsl")

    def match(self, tournament: WeightedTournament):

        """Find the candidates playing W, N, E and S in the pattern.

        :param tournament: The tournament to match.
        :type tournament: WeightedTournament

        :return: The indices of W, N, E and S, None if the tournament doesn't have the pattern.
        :rtype: tuple
        """

        if tournament.size != 4:
            return None

        m = tournament.matrix
        for roles in permutations(range(4)):
            if m[roles[0]][roles[1]] <= self.minimum_open_margin:
                continue
            if all(m[roles[winner]][roles[loser]] == margin for winner, loser, margin in self.pattern):
                return roles

        return None

    def stages(self, tournament: WeightedTournament):

        roles = self.match(tournament)
        if roles is None:
            return self.fallback.stages(tournament)

        return [SelectionStage("pattern", [roles[3]], {i: role for role, i in zip("WNES", roles)})]

    def winners(self, tournament: WeightedTournament):

        roles = self.match(tournament)
        if roles is None:
            return self.fallback.winners(tournament)

        return frozenset((roles[3],))

    def winner_masks(self, tournament: WeightedTournament, stack):

        masks = self.fallback.winner_masks(tournament, stack)
        if tournament.size != 4:
            return masks

        # The first role assignment that fits a matrix decides, as in match
        matched = np.zeros(len(stack), dtype=bool)
        for roles in permutations(range(4)):
            fits = ~matched & (stack[:, roles[0], roles[1]] > self.minimum_open_margin)
            for winner, loser, margin in self.pattern:
                fits &= stack[:, roles[winner], roles[loser]] == margin

            masks[fits] = False
            masks[fits, roles[3]] = True
            matched |= fits

        return masks
