def from_dict(data: dict):

    """Construct a ballot from a dictionary.

    :param data: The input data.
    :type data: dict

    :return: The constructed ballot.
    :rtype: Ballot
    """

    return Ballot(data["ranked"], data.get("count", 1))


class Ballot:
    """
    A strict ranking of some candidates, cast by one or more voters.
    Candidates missing from the ranking share one indifference class below all ranked candidates.

    Attributes:
        ranked (tuple): The ranked candidate labels, from top to bottom.
        count (int): The number of voters casting this ballot.
        line_number (int): The line of the ballot file it was read from, None for ballots built in code.
    """

    ranked: tuple = None
    count: int = None
    line_number: int = None

    def __init__(self, ranked: list, count: int = 1, line_number: int = None):

        self.ranked = tuple(ranked)
        self.count = count
        self.line_number = line_number

    def reversed(self):

        """Get the ballot with the exact reverse ranking and the same count.

        :rtype: Ballot
        """

        return Ballot(tuple(reversed(self.ranked)), self.count)

    def to_text(self):

        return f"{self.count}: " + ">".join(self.ranked)

    def __eq__(self, other):

        return isinstance(other, Ballot) and self.ranked == other.ranked and self.count == other.count

    def __repr__(self):

        return f"Ballot({list(self.ranked)}, {self.count})"

    def to_dict(self):

        return {
            "ranked": list(self.ranked),
            "count": self.count
        }
