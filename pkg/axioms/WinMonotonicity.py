from axioms.AbstractAxiom import AbstractAxiom, ZERO_FREE
from data_objects.Counterexample import step
from data_objects.WeightedTournament import WeightedTournament
from methods.AbstractMethod import AbstractMethod

import numpy as np


class WinMonotonicity(AbstractAxiom):
    """
    If A is the unique winner, improving one of A's margins of victory by n together with one of B's
    margins of victory over some X other than A by the same n keeps A the unique winner.
    """

    def __init__(self):

        self.name = "WinMonotonicity"
        self.description = ("Improving a victory of the unique winner and a victory of a rival by the same amount "
                            "keeps the winner.")
        self.requirement = ZERO_FREE

    @staticmethod
    def improvements(tournament: WeightedTournament, a: int, bound: int):

        """Stack every pair of improvements of a victory of A and a victory of a rival.

        The rows are ordered by A's beaten candidate Y, then by the rival's victory (B, X), then by n.

        :param tournament: The tournament.
        :type tournament: WeightedTournament
        :param a: The index of the unique winner.
        :type a: int
        :param bound: The largest improvement n.
        :type bound: int

        :return: The (Y, B, X, n) of every row and the improved margin matrices.
        :rtype: tuple
        """

        m = tournament.matrix
        size = tournament.size
        victories = [(b, x) for b in range(size) for x in range(size)
                     if b != a and x != a and m[b][x] > 0]

        combinations = np.array([(y, b, x, n)
                                 for y in range(size) if m[a][y] > 0
                                 for b, x in victories
                                 for n in range(1, bound + 1)], dtype=np.int64).reshape(-1, 4)

        # The pair (B, X) never contains A, so the two changes touch different entries
        y, b, x, n = combinations.T
        rows = np.arange(len(combinations))
        stack = np.repeat(tournament.to_matrix()[np.newaxis], len(combinations), axis=0)
        stack[rows, a, y] += n
        stack[rows, y, a] -= n
        stack[rows, b, x] += n
        stack[rows, x, b] -= n

        return combinations, stack

    def search(self, method: AbstractMethod, tournament: WeightedTournament, winners: frozenset, bound: int,
               cache: dict):

        if len(winners) != 1:
            return None
        (a,) = winners

        # Methods electing the same winner share the improved tournaments
        key = (self.name, a, bound)
        if key not in cache:
            cache[key] = self.improvements(tournament, a, bound)
        combinations, stack = cache[key]
        if len(combinations) == 0:
            return None

        masks = method.winner_masks(tournament, stack)
        violations = np.flatnonzero(~masks[:, a] | (masks.sum(axis=1) != 1))
        if len(violations) == 0:
            return None

        y, b, x, n = (int(value) for value in combinations[violations[0]])
        perturbation = [step("improve_margin", tournament.labels[a], tournament.labels[y], n),
                        step("improve_margin", tournament.labels[b], tournament.labels[x], n)]
        return self.counterexample(method, tournament, winners, {"A": a, "Y": y, "B": b, "X": x}, n, perturbation)

    def confirms(self, counterexample):

        actors, n = counterexample.actors, counterexample.n
        primary = counterexample.primary
        expected = [step("improve_margin", actors["A"], actors["Y"], n),
                    step("improve_margin", actors["B"], actors["X"], n)]

        return (counterexample.perturbation == expected and n > 0
                and actors["A"] not in (actors["B"], actors["X"])
                and primary.margin(actors["A"], actors["Y"]) > 0
                and primary.margin(actors["B"], actors["X"]) > 0
                and counterexample.winners_before == (actors["A"],)
                and counterexample.winners_after != (actors["A"],))
