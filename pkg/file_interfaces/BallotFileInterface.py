from data_objects.Ballot import Ballot
from data_objects.Profile import Profile
from exceptions import DuplicateBallotCandidate, EmptyProfile, InvalidBallotCount, MalformedLine
from file_interfaces.AbstractFileInterface import AbstractFileInterface, content_lines, parse_header


class BallotFileInterface(AbstractFileInterface):
    """
    The ballot interface reads a preference profile from a text file.

        candidates: A,B,C      # optional
        3: A>B>C
        2: B>A                 # C unranked, tied at the bottom
        C>A                    # count defaults to 1

    Attributes:
        profile (Profile): The profile in the file.
    """

    def __init__(self, path: str):

        super().__init__(path)
        self.profile: Profile = parse_ballots(self.text)

    @staticmethod
    def write(profile: Profile, path: str):

        """Write a profile to a file in the ballot format.

        :param profile: The profile to write.
        :type profile: Profile
        :param path: The file to write to.
        :type path: str
        """

        with open(path, "w", encoding="utf-8") as file:
            file.write(profile.to_text())


def parse_ballot_line(number: int, content: str, known: dict = None):

    """Parse one "<count>: X>Y>Z" line.

    :param number: The line number, for error messages.
    :type number: int
    :param content: The line without comment.
    :type content: str
    :param known: The candidates of the header by label, None when there is no header.
    :type known: dict

    :raise InvalidBallotCount: Raised if the count isn't a positive integer.
    :raise DuplicateBallotCandidate: Raised if a candidate is ranked twice.
    :raise MalformedLine: Raised for unknown candidates.

    :return: The ballot.
    :rtype: Ballot
    """

    # The count is optional
    count = 1
    if ":" in content:
        count_text, _, content = content.partition(":")
        try:
            count = int(count_text.strip())
        except ValueError:
            raise InvalidBallotCount(number, count_text + ":" + content)
        if count < 1:
            raise InvalidBallotCount(number, count_text + ":" + content)

    # An empty ranking leaves every candidate unranked
    ranked = [label.strip() for label in content.split(">")] if content.strip() else []
    seen = set()
    for label in ranked:
        if not label:
            raise MalformedLine(number, content, "empty candidate in ranking")
        if label in seen:
            raise DuplicateBallotCandidate(number, content, label)
        if known is not None and label not in known:
            raise MalformedLine(number, content, f"unknown candidate '{label}'")
        seen.add(label)

    return Ballot(ranked, count, number)


def parse_ballots(text: str):

    """Parse a profile from the text of a ballot file.

    Without a header the candidates are taken in order of first appearance.

    :param text: The file contents.
    :type text: str

    :raise EmptyProfile: Raised if the file contains no ballots.

    :return: The profile with identical rankings aggregated.
    :rtype: Profile
    """

    lines = content_lines(text)

    # An optional header lists the candidates
    labels = None
    if lines:
        labels = parse_header(*lines[0])
        if labels is not None:
            lines = lines[1:]

    known = None if labels is None else {label: True for label in labels}
    ballots = [parse_ballot_line(number, content, known) for number, content in lines]
    if len(ballots) == 0:
        raise EmptyProfile

    if labels is None:
        labels = []
        for ballot in ballots:
            labels.extend(label for label in ballot.ranked if label not in labels)
        if len(labels) == 0:
            raise EmptyProfile

    return Profile(labels, ballots)
