from axioms.AbstractAxiom import ExclusionAxiom, ZERO_FREE, proximity_outcomes
from data_objects.Counterexample import step
from data_objects.WeightedTournament import WeightedTournament


class ProximityCopeland(ExclusionAxiom):
    """
    If improving one of A's margins by n makes A the unique Copeland winner, while improving all of
    B's margins by the same n doesn't make B the unique Copeland winner, B may not be the unique winner.

    Both improvements are monotone in n, so B is excluded exactly when the least single improvement for
    some A is within the bound and smaller than B's distance to Copeland.
    """

    def __init__(self):

        self.name = "ProximityCopeland"
        self.description = ("Do not select B alone if a single margin improvement makes another candidate the unique "
                            "Copeland winner, while the same improvement of all of B's margins doesn't.")
        self.requirement = ZERO_FREE

    def excluded(self, tournament: WeightedTournament, bound: int):

        thresholds = {a: tournament.single_copeland_threshold_of(a) for a in range(tournament.size)}

        excluded = {}
        for b in range(tournament.size):
            distance = tournament.copeland_distance_of(b)
            candidates = [(n, a) for a, (n, _) in thresholds.items()
                          if a != b and n is not None and n <= bound and n < distance]
            if not candidates:
                continue

            n, a = min(candidates)
            x = thresholds[a][1]
            if x is None:
                x = b
            perturbation = [step("improve_margin", tournament.labels[a], tournament.labels[x], n),
                            step("improve_all_margins", tournament.labels[b], n, from_primary=True)]
            excluded[b] = ({"A": a, "B": b, "X": x}, n, perturbation)

        return excluded

    def explicit_excluded(self, tournament: WeightedTournament, bound: int = None):

        """Find the excluded candidates by trying every improvement up to the bound.

        :param tournament: A zero-free tournament.
        :type tournament: WeightedTournament
        :param bound: The largest improvement tried, defaults to max|m| + 1.
        :type bound: int

        :return: The indices of the excluded candidates.
        :rtype: set
        """

        bound = self.default_bound(tournament) if bound is None else bound
        size = tournament.size

        def unique_copeland_winner(candidate: WeightedTournament):
            winners = candidate.copeland_winner_indices()
            return winners[0] if len(winners) == 1 else None

        reachable = {n: {a for a in range(size) for x in range(size)
                         if x != a and unique_copeland_winner(tournament.improve_margin(a, x, n)) == a}
                     for n in range(bound + 1)}

        excluded = set()
        for b in range(size):
            for n, winners in reachable.items():
                if winners - {b} and unique_copeland_winner(tournament.improve_all_margins(b, n)) != b:
                    excluded.add(b)
                    break

        return excluded

    def confirms(self, counterexample):

        outcomes = proximity_outcomes(counterexample)
        if outcomes is None or counterexample.winners_before != (counterexample.actors["B"],):
            return False

        improved_a, improved_b = outcomes
        return (improved_a.copeland_winner_indices() == [improved_a.index_of(counterexample.actors["A"])]
                and improved_b.copeland_winner_indices() != [improved_b.index_of(counterexample.actors["B"])])
