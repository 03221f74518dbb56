from axioms.AbstractAxiom import AbstractAxiom, ZERO_FREE
from data_objects.Counterexample import step
from data_objects.WeightedTournament import WeightedTournament
from methods.AbstractMethod import AbstractMethod

import numpy as np


class IndependenceOfIrrelevantDefeats(AbstractAxiom):
    """
    If A is the unique winner, changing the margin between two candidates C and D that are neither A nor B
    may not make B the unique winner.

    Replacement margins keep the parity of the original margin and are never 0.
    """

    def __init__(self):

        self.name = "IID"
        self.description = ("Changing a margin between two other candidates doesn't turn the unique winner A "
                            "into another unique winner B.")
        self.requirement = ZERO_FREE

    @staticmethod
    def replacements(current: int, bound: int):

        return [value for value in range(-bound, bound + 1)
                if value != 0 and value != current and (value - current) % 2 == 0]

    def changes(self, tournament: WeightedTournament, a: int, bound: int):

        """Stack every replacement of a margin between two candidates other than A.

        The rows are ordered by the pair (C, D) with C before D, then by the new margin.

        :return: The (C, D, value) of every row and the changed margin matrices.
        :rtype: tuple
        """

        m = tournament.matrix
        combinations = np.array([(c, d, value)
                                 for c in range(tournament.size)
                                 for d in range(c + 1, tournament.size) if a not in (c, d)
                                 for value in self.replacements(m[c][d], bound)], dtype=np.int64).reshape(-1, 3)

        c, d, values = combinations.T
        rows = np.arange(len(combinations))
        stack = np.repeat(tournament.to_matrix()[np.newaxis], len(combinations), axis=0)
        stack[rows, c, d] = values
        stack[rows, d, c] = -values

        return combinations, stack

    def search(self, method: AbstractMethod, tournament: WeightedTournament, winners: frozenset, bound: int,
               cache: dict):

        if len(winners) != 1:
            return None
        (a,) = winners

        key = (self.name, a, bound)
        if key not in cache:
            cache[key] = self.changes(tournament, a, bound)
        combinations, stack = cache[key]
        if len(combinations) == 0:
            return None

        masks = method.winner_masks(tournament, stack)
        new_winners = masks.argmax(axis=1)
        c, d, _ = combinations.T

        # The new unique winner may not be A or one of the changed pair
        violations = np.flatnonzero((masks.sum(axis=1) == 1) & (new_winners != a)
                                    & (new_winners != c) & (new_winners != d))
        if len(violations) == 0:
            return None

        row = violations[0]
        c, d, value = (int(entry) for entry in combinations[row])
        b = int(new_winners[row])

        perturbation = [step("with_margin", tournament.labels[c], tournament.labels[d], value)]
        return self.counterexample(method, tournament, winners, {"A": a, "B": b, "C": c, "D": d},
                                   perturbation=perturbation)

    def confirms(self, counterexample):

        actors = counterexample.actors
        if len(counterexample.perturbation) != 1 or len({actors[role] for role in "ABCD"}) != 4:
            return False

        (change,) = counterexample.perturbation
        if change["operation"] != "with_margin" or change["arguments"][:2] != [actors["C"], actors["D"]]:
            return False

        # Zero-free and parity preserving
        value = change["arguments"][2]
        if value == 0 or (value - counterexample.primary.margin(actors["C"], actors["D"])) % 2 != 0:
            return False

        return counterexample.winners_before == (actors["A"],) and counterexample.winners_after == (actors["B"],)
