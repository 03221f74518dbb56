from axioms.AbstractAxiom import ExclusionAxiom, ZERO_FREE, proximity_outcomes
from data_objects.Counterexample import step
from data_objects.WeightedTournament import WeightedTournament


class ProximityCondorcet(ExclusionAxiom):
    """
    If improving one of A's margins by n makes A the Condorcet winner, while improving all of B's
    margins by the same n doesn't make B the Condorcet winner, B may not be the unique winner.
    """

    def __init__(self):

        self.name = "ProximityCondorcet"
        self.description = ("Do not select B alone if a single margin improvement turns another candidate into the "
                            "Condorcet winner, while the same improvement of all of B's margins doesn't.")
        self.requirement = ZERO_FREE

    @staticmethod
    def condorcet_threshold_of(tournament: WeightedTournament, index: int):

        """Get the least single-margin improvement that makes a candidate the Condorcet winner.

        :param tournament: A zero-free tournament.
        :type tournament: WeightedTournament
        :param index: The index of the candidate.
        :type index: int

        :return: The improvement and the adversary whose margin is improved, (None, None) for a candidate with
            more than one loss. The adversary is None for a Condorcet winner.
        :rtype: tuple
        """

        adversaries = [j for j in range(tournament.size) if tournament.matrix[j][index] > 0]
        if not adversaries:
            return 0, None
        if len(adversaries) > 1:
            return None, None

        adversary = adversaries[0]
        return tournament.matrix[adversary][index] + 1, adversary

    def excluded(self, tournament: WeightedTournament, bound: int):

        # The search bound never matters, n_A <= worst_loss(B) <= max|m|
        thresholds = {a: self.condorcet_threshold_of(tournament, a) for a in range(tournament.size)}

        excluded = {}
        for b in range(tournament.size):
            worst_loss = tournament.worst_loss_of(b)
            candidates = [(n, a) for a, (n, _) in thresholds.items()
                          if a != b and n is not None and n <= worst_loss]
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

        # Every n for which some candidate can be made the Condorcet winner with one improvement
        reachable = {n: {a for a in range(size) for x in range(size)
                         if x != a and tournament.improve_margin(a, x, n).condorcet_winner_index() == a}
                     for n in range(bound + 1)}

        excluded = set()
        for b in range(size):
            for n, winners in reachable.items():
                if winners - {b} and tournament.improve_all_margins(b, n).condorcet_winner_index() != b:
                    excluded.add(b)
                    break

        return excluded

    def confirms(self, counterexample):

        outcomes = proximity_outcomes(counterexample)
        if outcomes is None or counterexample.winners_before != (counterexample.actors["B"],):
            return False

        improved_a, improved_b = outcomes
        return (improved_a.condorcet_winner_index() == improved_a.index_of(counterexample.actors["A"])
                and improved_b.condorcet_winner_index() != improved_b.index_of(counterexample.actors["B"]))
