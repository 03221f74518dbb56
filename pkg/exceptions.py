class InputError(Exception):
    """Base class of every error caused by user input. The command line maps it to exit code 1."""


# Not supported
class UnsupportedCandidateCount(InputError):

    def __init__(self, count: int, supported: str):

        self.count = count
        super().__init__(f"A tournament with {count} candidates is not supported here, expected {supported}. "
                         f"Please check the input tournament.")


class UnsupportedAuditMode(InputError):

    def __init__(self, mode: str):

        self.mode = mode
        super().__init__(f"The audit mode '{mode}' is not supported. Please use 'exhaustive' or 'sample'.")


class UnsupportedParity(InputError):

    def __init__(self, parity: str):

        self.parity = parity
        super().__init__(f"The parity '{parity}' is not supported. Please use 'even' or 'odd'.")


# Not found
class UnknownCandidate(InputError):

    def __init__(self, label):

        self.label = label
        super().__init__(f"The candidate '{label}' is not part of the tournament. Please check the candidate labels.")


class UnknownMethod(InputError):

    def __init__(self, name: str):

        self.name = name
        super().__init__(f"The method '{name}' doesn't exist. Please check the documentation for the valid methods.")


class UnknownAxiom(InputError):

    def __init__(self, name: str):

        self.name = name
        super().__init__(f"The axiom '{name}' doesn't exist. Please check the documentation for the valid axioms.")


class NoSchemaFileFound(Exception):

    def __init__(self):

        super().__init__("The specified schema file couldn't be found and is required. Please check the path to the file.")


class NoInputFileFound(InputError):

    def __init__(self, path: str):

        self.path = path
        super().__init__(f"The file '{path}' couldn't be found. Please check the path to the file.")


# Wrong input
class DuplicateCandidate(InputError):

    def __init__(self, label: str):

        self.label = label
        super().__init__(f"The candidate '{label}' is listed more than once. Candidate labels must be unique.")


class EmptyCandidateList(InputError):

    def __init__(self):

        super().__init__("A tournament needs at least one candidate. Please check the candidate list.")


class ConflictingMargin(InputError):

    def __init__(self, first: str, second: str):

        self.pair = (first, second)
        super().__init__(f"The margin between '{first}' and '{second}' is given more than once. "
                         f"Please specify every pair at most once.")


class SelfPair(InputError):

    def __init__(self, label: str):

        self.label = label
        super().__init__(f"The candidate '{label}' can't have a nonzero margin against itself.")


class IdenticalCandidates(InputError):

    def __init__(self, label: str):

        self.label = label
        super().__init__(f"The operation needs two different candidates, but got '{label}' twice.")


class NegativeImprovement(InputError):

    def __init__(self, amount: int):

        self.amount = amount
        super().__init__(f"A margin can only be improved by a non-negative amount, got {amount}.")


class EmptyTournament(InputError):

    def __init__(self):

        super().__init__("Removing the candidate would leave an empty tournament.")


class MalformedLine(InputError):

    def __init__(self, line_number: int, line: str, reason: str):

        self.line_number = line_number
        self.line = line
        super().__init__(f"Line {line_number}: {reason} ('{line.strip()}').")


class DuplicateBallotCandidate(MalformedLine):

    def __init__(self, line_number: int, line: str, label: str):

        super().__init__(line_number, line, f"the candidate '{label}' is ranked more than once")


class InvalidBallotCount(MalformedLine):

    def __init__(self, line_number: int, line: str):

        super().__init__(line_number, line, "the ballot count must be a positive integer")


class IncompleteRanking(InputError):

    def __init__(self, ranking: list, candidates: tuple):

        self.ranking = list(ranking)
        super().__init__(f"The ranking {'>'.join(map(str, ranking))} isn't a full ranking of the candidates "
                         f"{', '.join(candidates)}. Every candidate must be ranked exactly once.")


class NonPositiveBallotCount(InputError):

    def __init__(self, ballot: str):

        self.ballot = ballot
        super().__init__(f"The ballot '{ballot}' has a count below 1. Every ballot needs at least one voter.")


class EmptyProfile(InputError):

    def __init__(self):

        super().__init__("The ballot file contains no ballots. A profile needs at least one voter.")


class MissingCandidateHeader(InputError):

    def __init__(self):

        super().__init__("The tournament file has no 'candidates:' header. Please add it as the first line.")


class ZeroMargins(InputError):

    def __init__(self):

        super().__init__("The tournament has zero margins between some candidates. "
                         "This check is only defined on tournaments without ties.")


class NotUniquelyWeighted(InputError):

    def __init__(self):

        super().__init__("The tournament isn't uniquely weighted. "
                         "All margins must be nonzero and have pairwise distinct magnitudes.")


class ClassMismatch(InputError):

    def __init__(self, given: str, actual: str):

        self.given = given
        self.actual = actual
        super().__init__(f"The tournament belongs to the class '{actual}', not to '{given}'.")


class MixedParity(InputError):

    def __init__(self, parity: str):

        self.parity = parity
        super().__init__(f"Not all margins are {parity}. A profile of linear orders needs margins of one parity.")


class InvalidMagnitudes(InputError):

    def __init__(self, reason: str):

        super().__init__(f"The magnitude set is invalid: {reason}.")


class InvalidAuditParameter(InputError):

    def __init__(self, name: str, value):

        self.name = name
        super().__init__(f"The audit parameter '{name}' must be a positive integer, got {value}.")


class NotATournament(InputError):

    def __init__(self):

        super().__init__("The input isn't a tournament. Every pair of candidates needs exactly one defeat.")


class InvalidMethodConfiguration(InputError):

    def __init__(self, option: str, value: str, valid: tuple):

        self.option = option
        self.value = value
        super().__init__(f"The {option} '{value}' is not supported. Please use one of: {', '.join(valid)}.")


class UnknownPerturbationStep(InputError):

    def __init__(self, operation: str):

        self.operation = operation
        super().__init__(f"The perturbation step '{operation}' can't be replayed. "
                         f"Please check the operation names of the counterexample.")


class InvalidSettingsFile(InputError):

    def __init__(self, path: str):

        self.path = path
        super().__init__(f"The settings file '{path}' couldn't be read as a mapping. Please check the YAML syntax.")


# Internal Error
class UnclassifiableTournament(Exception):

    def __init__(self):

        super().__init__("The tournament matches none of the known five candidate classes. "
                         "This should be impossible, please report it with the input tournament.")


class RealizationMismatch(Exception):

    def __init__(self):

        super().__init__("The realized profile doesn't reproduce the target margins. "
                         "This should be impossible, please report it with the input tournament.")
