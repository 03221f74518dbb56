from data_objects.SelectionResult import SelectionStage
from data_objects.WeightedTournament import WeightedTournament
from methods.AbstractMethod import AbstractMethod

import exceptions as Exceptions
import numpy as np

GLOBAL = "global"
LOCAL = "local"
SMALLEST = "min"
WORST = "max"


class CopelandThenLoss(AbstractMethod):
    """
    Restricts to the Copeland winners and then picks the one whose loss statistic is lowest.

    The scope decides whose victories count as losses: every candidate ("global") or only the
    other Copeland winners ("local"). The statistic is the smallest ("min") or the worst ("max")
    of those losses, 0 when there are none.

        global, min: Most Wins, Smallest Loss (mwsl)
        global, max: Copeland-Global-Minimax (cgm)
        local, max:  Copeland-Local-Minimax (clm)
        local, min:  variant_local_min
    """

    scope: str = None
    statistic: str = None

    def __init__(self, name: str, scope: str = GLOBAL, statistic: str = SMALLEST, description: str = None):

        """Initialises a Copeland-then-loss method.

        :param name: The name of the method in the registry.
        :type name: str
        :param scope: Either "global" or "local".
        :type scope: str
        :param statistic: Either "min" or "max".
        :type statistic: str
        :param description: A one line description for the command line.
        :type description: str

        :raise InvalidMethodConfiguration: Raised for an unknown scope or statistic.

        :return: An instance of CopelandThenLoss.
        :rtype: CopelandThenLoss
        """

        if scope not in (GLOBAL, LOCAL):
            raise Exceptions.InvalidMethodConfiguration("scope", scope, (GLOBAL, LOCAL))
        if statistic not in (SMALLEST, WORST):
            raise Exceptions.InvalidMethodConfiguration("statistic", statistic, (SMALLEST, WORST))

        self.name = name
        self.scope = scope
        self.statistic = statistic
        self.description = description

    @property
    def stage_name(self):

        name = "smallest_loss" if self.statistic == SMALLEST else "worst_loss"
        return name if self.scope == GLOBAL else f"local_{name}"

    def loss_statistics(self, tournament: WeightedTournament, finalists: list):

        # The loss statistic of every finalist, by index
        m = tournament.matrix
        pool = range(tournament.size) if self.scope == GLOBAL else finalists
        reduce = min if self.statistic == SMALLEST else max

        statistics = {}
        for x in finalists:
            losses = [m[y][x] for y in pool if m[y][x] > 0]
            statistics[x] = reduce(losses) if losses else 0

        return statistics

    def stages(self, tournament: WeightedTournament):

        copeland = self.copeland_stage(tournament)
        finalists = list(copeland.candidates)
        statistics = self.loss_statistics(tournament, finalists)

        return [copeland, SelectionStage(self.stage_name, self.argmin(statistics), statistics)]

    def winners(self, tournament: WeightedTournament):

        finalists = tournament.copeland_winner_indices()
        if len(finalists) == 1:
            return frozenset(finalists)

        return frozenset(self.argmin(self.loss_statistics(tournament, finalists)))

    def winner_masks(self, tournament: WeightedTournament, stack):

        finalists = self.copeland_masks(stack)

        # Entry [K, x, y] is the margin of y over x, counted as a loss of x
        losses = np.transpose(stack, (0, 2, 1))
        counted = losses > 0
        if self.scope == LOCAL:
            counted = counted & finalists[:, np.newaxis, :]

        if self.statistic == SMALLEST:
            statistics = np.where(counted, losses, np.iinfo(np.int64).max).min(axis=2)
            statistics = np.where(counted.any(axis=2), statistics, 0)
        else:
            statistics = np.where(counted, losses, 0).max(axis=2)

        return self.lowest(statistics, finalists)


def copeland_then_loss(tournament: WeightedTournament, scope: str, statistic: str):

    """Select from the Copeland winners by a loss statistic.

    :param tournament: The tournament to select from.
    :type tournament: WeightedTournament
    :param scope: Either "global" or "local".
    :type scope: str
    :param statistic: Either "min" or "max".
    :type statistic: str

    :rtype: SelectionResult
    """

    return CopelandThenLoss(f"copeland_then_{scope}_{statistic}", scope, statistic).select(tournament)
