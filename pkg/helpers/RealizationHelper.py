from data_objects.Ballot import Ballot
from data_objects.Profile import Profile, margins_of_profile
from data_objects.WeightedTournament import WeightedTournament

import exceptions as Exceptions
import networkx as nx

EVEN = "even"
ODD = "odd"


class RealizationHelper:

    def __init__(self):

        """A helper class responsible for building ballot profiles whose margins form a given tournament.

        :return: An instance of RealizationHelper
        :rtype: RealizationHelper
        """

        pass

    @staticmethod
    def pair_gadgets(tournament: WeightedTournament):

        """Build two ballots per pair of margin 2 that together move only that margin.

        For A beating B the gadget is A>B>R and reverse(R)>A>B, where R holds the remaining candidates in
        canonical order. Every other pair is ranked once each way.

        :param tournament: A tournament with even margins.
        :type tournament: WeightedTournament

        :return: The ballots, counts already multiplied out.
        :rtype: list
        """

        labels = tournament.labels
        ballots = []
        for i in range(tournament.size):
            for j in range(i + 1, tournament.size):
                value = tournament.matrix[i][j]
                if value == 0:
                    continue

                winner, loser = (i, j) if value > 0 else (j, i)
                rest = [labels[r] for r in range(tournament.size) if r not in (i, j)]
                copies = abs(value) // 2
                ballots.append(Ballot([labels[winner], labels[loser]] + rest, copies))
                ballots.append(Ballot(list(reversed(rest)) + [labels[winner], labels[loser]], copies))

        return ballots

    @staticmethod
    def check_parity(tournament: WeightedTournament, parity: str):

        """Check that every margin between distinct candidates has the requested parity.

        :raise UnsupportedParity: Raised if the parity is neither even nor odd.
        :raise MixedParity: Raised if a margin has the other parity.
        """

        if parity not in (EVEN, ODD):
            raise Exceptions.UnsupportedParity(parity)

        remainder = 0 if parity == EVEN else 1
        if any(magnitude % 2 != remainder for magnitude in tournament.magnitudes()):
            raise Exceptions.MixedParity(parity)

    def debord_realize(self, tournament: WeightedTournament, parity: str = EVEN):

        """Build a profile of linear ballots whose margins are exactly the tournament's.

        Odd margins are handled by one ballot in canonical order, realizing the even remainder with gadgets.

        :param tournament: The target tournament.
        :type tournament: WeightedTournament
        :param parity: The parity all margins share, "even" or "odd".
        :type parity: str

        :raise UnsupportedParity: Raised if the parity is neither even nor odd.
        :raise MixedParity: Raised if not all margins have the requested parity.
        :raise RealizationMismatch: Raised if the profile doesn't reproduce the margins.

        :return: The realizing profile.
        :rtype: Profile
        """

        self.check_parity(tournament, parity)

        target = tournament
        base = None
        if parity == ODD:
            # Subtract the +1 the canonical ballot adds to every m(i, j) with i < j
            base = Ballot(tournament.labels)
            rows = [[value - 1 if i < j else value + 1 if i > j else 0 for j, value in enumerate(row)]
                    for i, row in enumerate(tournament.matrix)]
            target = WeightedTournament(tournament.labels, rows)

        profile = Profile(tournament.labels, self.pair_gadgets(target))
        if base is not None:
            profile.add_ballot(base)

        # Zero margins everywhere leave no ballots, a reversed pair keeps them at zero
        if profile.voter_count == 0:
            profile = profile.with_neutral_reversal(tournament.labels)

        if margins_of_profile(profile) != tournament:
            raise Exceptions.RealizationMismatch
        return profile

    def mcgarvey_realize(self, tournament):

        """Build a profile whose margins have the defeat pattern of an unweighted tournament.

        Every defeat is realized with a margin of 2.

        :param tournament: The tournament, as a weighted tournament of which only the signs are used or as a
            digraph with an edge from every winner to its loser.
        :type tournament: WeightedTournament or networkx.DiGraph

        :raise NotATournament: Raised if a pair has no defeat or both.

        :return: The realizing profile.
        :rtype: Profile
        """

        signs = self.defeat_signs(tournament)
        doubled = WeightedTournament(signs.labels, [[2 * value for value in row] for row in signs.matrix])

        profile = Profile(signs.labels, self.pair_gadgets(doubled))
        if profile.voter_count == 0:
            profile = profile.with_neutral_reversal(signs.labels)

        if margins_of_profile(profile) != doubled:
            raise Exceptions.RealizationMismatch
        return profile

    @staticmethod
    def defeat_signs(tournament):

        """Reduce a tournament to margins of +1 and -1.

        :raise NotATournament: Raised if a pair has no defeat or both.

        :rtype: WeightedTournament
        """

        if isinstance(tournament, nx.DiGraph):
            labels = list(tournament.nodes)
            rows = [[0] * len(labels) for _ in labels]
            for i, first in enumerate(labels):
                if tournament.has_edge(first, first):
                    raise Exceptions.NotATournament
                for j in range(i + 1, len(labels)):
                    second = labels[j]
                    forward, backward = tournament.has_edge(first, second), tournament.has_edge(second, first)
                    if forward == backward:
                        raise Exceptions.NotATournament
                    rows[i][j] = 1 if forward else -1
                    rows[j][i] = -rows[i][j]
            return WeightedTournament(labels, rows)

        if not tournament.is_zero_free():
            raise Exceptions.NotATournament

        return WeightedTournament(tournament.labels,
                                  [[(value > 0) - (value < 0) for value in row] for row in tournament.matrix])
