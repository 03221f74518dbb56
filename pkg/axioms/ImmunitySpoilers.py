from axioms.AbstractAxiom import AbstractAxiom, ZERO_FREE
from data_objects.Counterexample import step
from data_objects.WeightedTournament import WeightedTournament
from methods.AbstractMethod import AbstractMethod


class ImmunitySpoilers(AbstractAxiom):
    """
    If A is the unique winner once B is removed and A beats B head-to-head, adding B back may not make a
    third candidate C the unique winner.
    """

    def __init__(self):

        self.name = "ImmunitySpoilers"
        self.description = ("A candidate that loses to the winner without it doesn't hand the election to a third "
                            "candidate.")
        self.requirement = ZERO_FREE
        self.minimum_candidates = 3

    def search(self, method: AbstractMethod, tournament: WeightedTournament, winners: frozenset, bound: int,
               cache: dict):

        if len(winners) != 1:
            return None
        (c,) = winners

        # The restrictions only depend on the tournament
        if self.name not in cache:
            cache[self.name] = [tournament.remove_candidate(b) for b in range(tournament.size)]
        restrictions = cache[self.name]

        for b in range(tournament.size):
            if b == c:
                continue

            remaining = method.winners(restrictions[b])
            if len(remaining) != 1:
                continue

            # Indices after the removed candidate shift down by one
            (position,) = remaining
            a = position if position < b else position + 1
            if a != c and tournament.matrix[a][b] > 0:
                perturbation = [step("remove_candidate", tournament.labels[b])]
                return self.counterexample(method, tournament, winners, {"A": a, "B": b, "C": c},
                                           perturbation=perturbation)

        return None

    def confirms(self, counterexample):

        actors = counterexample.actors
        return (counterexample.perturbation == [step("remove_candidate", actors["B"])]
                and actors["A"] != actors["C"]
                and counterexample.primary.margin(actors["A"], actors["B"]) > 0
                and counterexample.winners_before == (actors["C"],)
                and counterexample.winners_after == (actors["A"],))
