from data_objects.Ballot import Ballot, from_dict as ballot_from_dict
from data_objects.WeightedTournament import WeightedTournament, from_matrix, index_labels

import exceptions as Exceptions
import numpy as np


def from_dict(data: dict):

    """Construct a profile from a dictionary.

    :param data: The input data, with "candidates" and "ballots".
    :type data: dict

    :return: The constructed profile.
    :rtype: Profile
    """

    return Profile(data["candidates"], [ballot_from_dict(ballot) for ballot in data["ballots"]])


class Profile:
    """
    A multiset of ballots over a fixed set of candidates.

    Attributes:
        candidates (tuple): The candidate labels in canonical order.
        ballots (list): The ballots, identical rankings aggregated into one ballot.
    """

    candidates: tuple = None
    ballots: list = None

    def __init__(self, candidates: list, ballots: list):

        """Initialises a profile.

        :param candidates: The candidate labels.
        :type candidates: list
        :param ballots: The ballots of the profile.
        :type ballots: list

        :raise UnknownCandidate: Raised if a ballot ranks a candidate outside the profile.
        :raise DuplicateCandidate: Raised if a ballot ranks a candidate twice.
        :raise InvalidBallotCount: Raised if a ballot read from a file has a count below 1.
        :raise NonPositiveBallotCount: Raised if any other ballot has a count below 1.

        :return: An instance of a profile.
        :rtype: Profile
        """

        self._index = index_labels(candidates)
        self.candidates = tuple(candidates)
        self.ballots = []

        for ballot in ballots:
            self.add_ballot(ballot)

    def add_ballot(self, ballot: Ballot):

        """Add a ballot, merging it with an existing ballot with the same ranking.

        :param ballot: The ballot to add.
        :type ballot: Ballot
        """

        # Check the ballot against the candidate set
        if ballot.count < 1 and ballot.line_number is not None:
            raise Exceptions.InvalidBallotCount(ballot.line_number, ballot.to_text())
        if ballot.count < 1:
            raise Exceptions.NonPositiveBallotCount(ballot.to_text())
        if len(set(ballot.ranked)) != len(ballot.ranked):
            duplicate = next(label for label in ballot.ranked if ballot.ranked.count(label) > 1)
            raise Exceptions.DuplicateCandidate(duplicate)
        for label in ballot.ranked:
            if label not in self._index:
                raise Exceptions.UnknownCandidate(label)

        # Aggregate identical rankings
        for existing in self.ballots:
            if existing.ranked == ballot.ranked:
                existing.count += ballot.count
                return
        self.ballots.append(Ballot(ballot.ranked, ballot.count))

    @property
    def voter_count(self):

        return sum(ballot.count for ballot in self.ballots)

    def margins(self):

        """Get the associated weighted tournament of the profile.

        Every ballot contributes its count to m(A,B) when it ranks A strictly above B.
        Two unranked candidates share the bottom and contribute nothing to each other.

        :return: The margins of the profile.
        :rtype: WeightedTournament
        """

        size = len(self.candidates)
        totals = np.zeros((size, size), dtype=np.int64)

        for ballot in self.ballots:
            # Unranked candidates all take the position after the last ranked one
            positions = np.full(size, len(ballot.ranked), dtype=np.int64)
            for position, label in enumerate(ballot.ranked):
                positions[self._index[label]] = position

            # A lower position means ranked higher
            totals += ballot.count * np.sign(positions[np.newaxis, :] - positions[:, np.newaxis])

        return from_matrix(list(self.candidates), totals)

    def with_neutral_reversal(self, ranking: list, count: int = 1):

        """Get a copy of the profile extended with a linear ballot and its exact reverse.

        :param ranking: A full ranking of the candidates.
        :type ranking: list
        :param count: How many copies of the pair to add.
        :type count: int

        :raise IncompleteRanking: Raised if the ranking isn't a permutation of all candidates.

        :rtype: Profile
        """

        if len(ranking) != len(self.candidates) or set(ranking) != set(self.candidates):
            raise Exceptions.IncompleteRanking(ranking, self.candidates)

        profile = Profile(self.candidates, self.ballots)
        ballot = Ballot(ranking, count)
        profile.add_ballot(ballot)
        profile.add_ballot(ballot.reversed())
        return profile

    def to_text(self):

        """Write the profile in the ballot file format, header included.

        :return: The file contents.
        :rtype: str
        """

        lines = ["candidates: " + ",".join(self.candidates)]
        lines.extend(ballot.to_text() for ballot in self.ballots)
        return "\n".join(lines) + "\n"

    def to_dict(self):

        return {
            "candidates": list(self.candidates),
            "ballots": [ballot.to_dict() for ballot in self.ballots]
        }


def margins_of_profile(profile: Profile) -> WeightedTournament:

    """Get the associated weighted tournament of a profile.

    :param profile: The profile.
    :type profile: Profile

    :rtype: WeightedTournament
    """

    return profile.margins()
