def from_dict(data: dict):

    """Construct a candidate from a dictionary.

    :param data: The input data.
    :type data: dict

    :return: The constructed candidate.
    :rtype: Candidate
    """

    return Candidate(data["index"], data["label"])


class Candidate:

    index: int = None
    label: str = None

    def __init__(self, index: int, label: str):

        """Initialises a candidate data object.

        :param index: The position of the candidate in its tournament, dense from 0 to k-1.
        :type index: int
        :param label: The display label, unique within the tournament.
        :type label: str

        :return: An instance of a candidate object.
        :rtype: Candidate
        """

        self.index = index
        self.label = label

    def __eq__(self, other):

        return isinstance(other, Candidate) and self.index == other.index and self.label == other.label

    def __lt__(self, other):

        return self.index < other.index

    def __hash__(self):

        return hash((self.index, self.label))

    def __repr__(self):

        return f"Candidate({self.index}, {self.label!r})"

    def __str__(self):

        return self.label

    def to_dict(self):

        """Get the candidate information as a dictionary.

        :return: The index and label of the candidate.
        :rtype: dict
        """

        return {
            "index": self.index,
            "label": self.label
        }
