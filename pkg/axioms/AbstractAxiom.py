from abc import abstractmethod
from data_objects.AxiomVerdict import AxiomVerdict
from data_objects.Counterexample import Counterexample, step
from data_objects.WeightedTournament import WeightedTournament
from methods.AbstractMethod import AbstractMethod
from methods.MethodRegistry import get_method

import exceptions as Exceptions

# Preconditions on the checked tournament
ZERO_FREE = "zero_free"
UNIQUELY_WEIGHTED = "uniquely_weighted"


def winner_labels(tournament: WeightedTournament, winners):

    return tuple(tournament.labels[i] for i in sorted(winners))


def proximity_outcomes(counterexample: Counterexample):

    """Get the tournaments after the single improvement of A and after the improvement of all of B's margins.

    :param counterexample: A counterexample to one of the proximity axioms.
    :type counterexample: Counterexample

    :return: The two tournaments, None if the perturbation isn't those two improvements by the same n.
    :rtype: tuple
    """

    actors, n = counterexample.actors, counterexample.n
    expected = [step("improve_margin", actors["A"], actors["X"], n),
                step("improve_all_margins", actors["B"], n, from_primary=True)]
    if counterexample.perturbation != expected:
        return None

    return tuple(counterexample.outcomes())


class AbstractAxiom:

    name: str = None
    description: str = None
    requirement: str = None
    minimum_candidates: int = 2

    def check_preconditions(self, tournament: WeightedTournament):

        """Check that the axiom is defined on a tournament.

        :param tournament: The tournament to check.
        :type tournament: WeightedTournament

        :raise ZeroMargins: Raised if the axiom needs a zero-free tournament and a margin is 0.
        :raise NotUniquelyWeighted: Raised if the axiom needs a uniquely-weighted tournament.
        :raise UnsupportedCandidateCount: Raised if the tournament has too few candidates.
        """

        if tournament.size < self.minimum_candidates:
            raise Exceptions.UnsupportedCandidateCount(tournament.size,
                                                       f"at least {self.minimum_candidates} candidates")
        if self.requirement == ZERO_FREE and not tournament.is_zero_free():
            raise Exceptions.ZeroMargins
        if self.requirement == UNIQUELY_WEIGHTED and not tournament.is_uniquely_weighted():
            raise Exceptions.NotUniquelyWeighted

    def check(self, method, tournament: WeightedTournament, bound: int = None):

        """Check whether a method satisfies the axiom on one tournament.

        :param method: The method, by name or instance.
        :type method: str or AbstractMethod
        :param tournament: The tournament to check.
        :type tournament: WeightedTournament
        :param bound: The largest improvement or replacement magnitude searched, defaults to max|m| + 1.
        :type bound: int

        :return: The verdict, with a counterexample if the axiom is violated.
        :rtype: AxiomVerdict
        """

        method = get_method(method)
        self.check_preconditions(tournament)

        bound = self.default_bound(tournament) if bound is None else bound
        counterexample = self.search(method, tournament, method.winners(tournament), bound, {})
        return AxiomVerdict(self.name, method.name, counterexample)

    @staticmethod
    def default_bound(tournament: WeightedTournament):

        return tournament.max_magnitude() + 1

    @abstractmethod
    def search(self, method: AbstractMethod, tournament: WeightedTournament, winners: frozenset, bound: int,
               cache: dict):

        """Look for a violation of the axiom starting from one tournament.

        :param method: The method to check.
        :type method: AbstractMethod
        :param tournament: The tournament, its preconditions already checked.
        :type tournament: WeightedTournament
        :param winners: The indices the method selects in the tournament.
        :type winners: frozenset
        :param bound: The largest improvement or replacement magnitude searched.
        :type bound: int
        :param cache: Results that don't depend on the method, shared by all methods checked on the tournament.
        :type cache: dict

        :return: The first violation found, None if there is none.
        :rtype: Counterexample
        """

        pass

    @abstractmethod
    def confirms(self, counterexample: Counterexample):

        """Check that a recorded counterexample meets the premise of the axiom and breaks its conclusion.
        The recorded winners are trusted here, Counterexample.verify re-runs the method before.

        :param counterexample: The counterexample, its tournaments already replayed.
        :type counterexample: Counterexample

        :rtype: bool
        """

        pass

    def counterexample(self,
                       method: AbstractMethod,
                       tournament: WeightedTournament,
                       winners: frozenset,
                       actors: dict,
                       n: int = None,
                       perturbation: list = None):

        """Package a violation, replaying the perturbation to record the second tournament and its winners.

        :param actors: The candidate index playing every role of the axiom.
        :type actors: dict

        :rtype: Counterexample
        """

        counterexample = Counterexample(self.name,
                                        method.name,
                                        tournament,
                                        actors={role: tournament.labels[i] for role, i in actors.items()},
                                        n=n,
                                        perturbation=perturbation,
                                        winners_before=winner_labels(tournament, winners))

        if counterexample.perturbation:
            secondary = counterexample.replay()
            counterexample.secondary = secondary
            counterexample.winners_after = winner_labels(secondary, method.winners(secondary))

        return counterexample

    def __repr__(self):

        return f"{type(self).__name__}({self.name!r})"


class ExclusionAxiom(AbstractAxiom):
    """
    An axiom that forbids selecting certain candidates alone, whichever method is used.
    The excluded candidates of a tournament are computed once and shared by every checked method.
    """

    @abstractmethod
    def excluded(self, tournament: WeightedTournament, bound: int):

        """Get the candidates a method may not select as the unique winner.

        :param tournament: The tournament.
        :type tournament: WeightedTournament
        :param bound: The largest improvement searched.
        :type bound: int

        :return: For every excluded candidate index, the witness as a tuple (actors, n, perturbation).
        :rtype: dict
        """

        pass

    def search(self, method: AbstractMethod, tournament: WeightedTournament, winners: frozenset, bound: int,
               cache: dict):

        if len(winners) != 1:
            return None

        if self.name not in cache:
            cache[self.name] = self.excluded(tournament, bound)
        excluded = cache[self.name]

        (winner,) = winners
        if winner not in excluded:
            return None

        actors, n, perturbation = excluded[winner]
        return self.counterexample(method, tournament, winners, actors, n, perturbation)
