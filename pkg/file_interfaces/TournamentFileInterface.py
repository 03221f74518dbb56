from data_objects.WeightedTournament import WeightedTournament
from exceptions import MalformedLine, MissingCandidateHeader
from file_interfaces.AbstractFileInterface import AbstractFileInterface, content_lines, parse_header


class TournamentFileInterface(AbstractFileInterface):
    """
    The tournament interface reads a weighted tournament from a text file.

        candidates: W,N,E,S
        W N 8      # m(W,N) = 8
        N E 2

    Attributes:
        tournament (WeightedTournament): The tournament in the file.
    """

    def __init__(self, path: str):

        super().__init__(path)
        self.tournament: WeightedTournament = parse_tournament(self.text)

    @staticmethod
    def write(tournament: WeightedTournament, path: str):

        """Write a tournament to a file in the tournament format.

        :param tournament: The tournament to write.
        :type tournament: WeightedTournament
        :param path: The file to write to.
        :type path: str
        """

        with open(path, "w", encoding="utf-8") as file:
            file.write(tournament.to_text())


def parse_tournament(text: str):

    """Parse a tournament from the text of a tournament file.

    :param text: The file contents.
    :type text: str

    :raise MissingCandidateHeader: Raised if the first content line isn't a header.
    :raise MalformedLine: Raised for lines that aren't "A B margin", unknown candidates and conflicting margins.

    :return: The tournament.
    :rtype: WeightedTournament
    """

    lines = content_lines(text)
    if len(lines) == 0:
        raise MissingCandidateHeader

    # The first content line lists the candidates
    number, content = lines[0]
    labels = parse_header(number, content)
    if labels is None:
        raise MissingCandidateHeader
    index = {label: position for position, label in enumerate(labels)}

    rows = [[0] * len(labels) for _ in labels]
    given_on_line = {}

    for number, content in lines[1:]:
        # Every other line is "A B margin"
        tokens = content.split()
        if len(tokens) != 3:
            raise MalformedLine(number, content, "expected 'A B margin'")
        first, second, value = tokens
        try:
            value = int(value)
        except ValueError:
            raise MalformedLine(number, content, f"the margin '{value}' isn't an integer")

        # Check the candidates
        for label in (first, second):
            if label not in index:
                raise MalformedLine(number, content, f"unknown candidate '{label}'")
        if first == second:
            if value != 0:
                raise MalformedLine(number, content, "a candidate can't have a margin against itself")
            continue

        # Reject a second, different margin for the same pair
        i, j = index[first], index[second]
        pair = frozenset((i, j))
        if pair in given_on_line and rows[i][j] != value:
            raise MalformedLine(number, content, f"conflicts with line {given_on_line[pair]}")
        given_on_line[pair] = number

        rows[i][j], rows[j][i] = value, -value

    return WeightedTournament(labels, rows)
