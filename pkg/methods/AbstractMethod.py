from abc import abstractmethod
from data_objects.SelectionResult import SelectionResult, SelectionStage
from data_objects.WeightedTournament import WeightedTournament

import numpy as np


class AbstractMethod:

    name: str = None
    description: str = None

    @abstractmethod
    def stages(self, tournament: WeightedTournament):

        """Runs the method and records every stage according to the following logic:
        {Method description here}

        :param tournament: The tournament to select from. It is never changed.
        :type tournament: WeightedTournament

        :return: The selection stages, the last one holds the winners.
        :rtype: list
        """

        pass

    def winners(self, tournament: WeightedTournament):

        """Get the indices of the selected candidates without building a trace.
        Methods used in audits override this with a direct computation.

        :param tournament: The tournament to select from.
        :type tournament: WeightedTournament

        :return: The indices of the winners.
        :rtype: frozenset
        """

        return frozenset(self.stages(tournament)[-1].candidates)

    def winner_masks(self, tournament: WeightedTournament, stack: np.ndarray):

        """Select the winners of many tournaments over the candidates of one tournament at once.
        Methods used in audits override this with array operations over the whole stack.

        :param tournament: The tournament whose candidates the stacked margins are about.
        :type tournament: WeightedTournament
        :param stack: The margin matrices, of shape (K, k, k).
        :type stack: numpy.ndarray

        :return: Of shape (K, k), True where the candidate is a winner of that matrix.
        :rtype: numpy.ndarray
        """

        masks = np.zeros(stack.shape[:2], dtype=bool)
        for row, matrix in enumerate(stack):
            masks[row, sorted(self.winners(tournament.derive(matrix.tolist())))] = True

        return masks

    def select(self, tournament: WeightedTournament):

        """Select the winners of a tournament.

        :param tournament: The tournament to select from.
        :type tournament: WeightedTournament

        :return: The nonempty set of winners with the stages that led to it.
        :rtype: SelectionResult
        """

        return SelectionResult(self.name, tournament, self.stages(tournament))

    def copeland_stage(self, tournament: WeightedTournament):

        """Keep the candidates with the most head-to-head wins.

        :rtype: SelectionStage
        """

        scores = tournament.copeland_scores()
        return SelectionStage("copeland", tournament.copeland_winner_indices(), dict(enumerate(scores)))

    @staticmethod
    def argmin(scores: dict):

        """Get every key with the smallest value, ties included.

        :rtype: list
        """

        best = min(scores.values())
        return [key for key, value in scores.items() if value == best]

    @staticmethod
    def argmax(scores: dict):

        """Get every key with the largest value, ties included.

        :rtype: list
        """

        best = max(scores.values())
        return [key for key, value in scores.items() if value == best]

    # Stacked counterparts of the stages, every array has the matrices along its first axis
    @staticmethod
    def lowest(scores: np.ndarray, candidates: np.ndarray):

        """Mark the candidates with the lowest score among the marked ones, ties included.

        :param scores: The scores, of shape (K, k).
        :type scores: numpy.ndarray
        :param candidates: The candidates taking part, of shape (K, k), at least one per row.
        :type candidates: numpy.ndarray

        :rtype: numpy.ndarray
        """

        masked = np.where(candidates, scores, np.inf)
        return candidates & (masked == masked.min(axis=1, keepdims=True))

    @staticmethod
    def highest(scores: np.ndarray, candidates: np.ndarray):

        masked = np.where(candidates, scores, -np.inf)
        return candidates & (masked == masked.max(axis=1, keepdims=True))

    @staticmethod
    def copeland_masks(stack: np.ndarray):

        scores = (stack > 0).sum(axis=2)
        return scores == scores.max(axis=1, keepdims=True)

    @staticmethod
    def worst_losses(stack: np.ndarray):

        # Entry [K, x, y] of the transpose is the margin of y over x
        losses = np.transpose(stack, (0, 2, 1))
        return np.where(losses > 0, losses, 0).max(axis=2)

    def __repr__(self):

        return f"{type(self).__name__}({self.name!r})"
