from exceptions import NoInputFileFound, MalformedLine
from utility_functions import strip_comment

import sys


class AbstractFileInterface:

    path: str = None
    text: str = None

    def __init__(self, path: str, error: Exception = NoInputFileFound):

        """Initialises an interface for a text file.
        The whole file is read on initialisation, "-" reads standard input instead.
        NOTE: Don't initialise this class directly. Please create a custom class.

        :param path: The path to the file that the interface will read.
        :type path: str

        :raise NoInputFileFound: Raised if the file can't be found or read.

        :return: An instance of AbstractFileInterface.
        :rtype: AbstractFileInterface
        """

        self.path = path

        try:
            if path == "-":
                self.text = sys.stdin.read()
            else:
                with open(path, "r", encoding="utf-8") as file:
                    self.text = file.read()
        except OSError:
            raise error(path)


def content_lines(text: str):

    """Get the numbered lines of a text format that carry content.

    :param text: The raw text.
    :type text: str

    :return: Pairs of (line number, content), comments and blank lines left out.
    :rtype: list
    """

    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        content = strip_comment(raw)
        if content:
            lines.append((number, content))

    return lines


def parse_header(number: int, content: str):

    """Parse a "candidates: A,B,C" header line.

    :param number: The line number, for error messages.
    :type number: int
    :param content: The line without comment.
    :type content: str

    :raise MalformedLine: Raised if the header lists no candidates.

    :return: The candidate labels, None if the line isn't a header.
    :rtype: list
    """

    key, separator, value = content.partition(":")
    if not separator or key.strip().lower() != "candidates":
        return None

    labels = [label.strip() for label in value.split(",") if label.strip()]
    if len(labels) == 0:
        raise MalformedLine(number, content, "the header lists no candidates")
    if len(set(labels)) != len(labels):
        raise MalformedLine(number, content, "the header lists a candidate twice")

    return labels
