from data_objects.Profile import Profile
from data_objects.SelectionResult import SelectionResult
from data_objects.TournamentClass import TournamentClass
from data_objects.WeightedTournament import WeightedTournament
from file_interfaces.BallotFileInterface import BallotFileInterface
from file_interfaces.TournamentFileInterface import TournamentFileInterface
from json import loads, dumps
from jsonschema import validate
from Logger import Logger
from os import makedirs
from os.path import dirname, exists, join, realpath
from utility_functions import parameter_string_to_tupled_list

import exceptions as Exceptions

SCHEMA_DIRECTORY = join(dirname(realpath(__file__)), "validation_schemas")


def read_tournament(path: str):
    """
    Read a tournament file, "-" for standard input.

    Parameters:
        path (str): The path to the tournament file.

    Returns:
        WeightedTournament: The tournament in the file.

    Raises:
        NoInputFileFound: The file can't be read.
        MalformedLine: A line of the file can't be parsed.
    """

    Logger.log(f"Reading tournament from {path}")
    return TournamentFileInterface(path).tournament


def read_profile(path: str):
    """
    Read a ballot file, "-" for standard input.

    Parameters:
        path (str): The path to the ballot file.

    Returns:
        Profile: The profile in the file.

    Raises:
        NoInputFileFound: The file can't be read.
        MalformedLine: A line of the file can't be parsed.
    """

    Logger.log(f"Reading ballots from {path}")
    return BallotFileInterface(path).profile


def get_names_from_option(value, default: list):
    """
    Get a list of names from a comma separated option, falling back to the settings.

    Parameters:
        value (str): The option value, None if the option wasn't given.
        default (list): The names from the settings.

    Returns:
        tuple: The names.
    """

    if value is None:
        return tuple(default)
    return parameter_string_to_tupled_list(value)


def get_magnitudes_from_option(value, default):
    """
    Get the audit magnitudes from a comma separated option, falling back to the settings.

    Parameters:
        value (str): The option value, None if the option wasn't given.
        default (list): The magnitudes from the settings, None for the built-in default.

    Returns:
        tuple: The magnitudes, None for the built-in default.

    Raises:
        InvalidMagnitudes: A value isn't an integer.
    """

    if value is None:
        return None if default is None else tuple(default)

    try:
        return tuple(int(magnitude) for magnitude in parameter_string_to_tupled_list(value))
    except ValueError:
        raise Exceptions.InvalidMagnitudes(f"'{value}' isn't a comma separated list of integers")


def format_matrix(tournament: WeightedTournament):
    """
    Format the margin matrix as an aligned table, rows beating columns.

    Parameters:
        tournament (WeightedTournament): The tournament.

    Returns:
        str: The table.
    """

    cells = [[""] + list(tournament.labels)]
    for label, row in zip(tournament.labels, tournament.matrix):
        cells.append([label] + [str(value) for value in row])

    width = max(len(cell) for row in cells for cell in row)
    return "\n".join(" ".join(cell.rjust(width) for cell in row) for row in cells)


def format_records(tournament: WeightedTournament):
    """
    Format the head-to-head wins and losses of every candidate.

    Parameters:
        tournament (WeightedTournament): The tournament.

    Returns:
        str: One line per candidate.
    """

    lines = []
    for candidate in tournament.candidates:
        wins = ", ".join(f"{other.label} by {tournament.margin(candidate, other)}"
                         for other in tournament.wins(candidate))
        losses = ", ".join(f"{adversary.label} by {margin}" for adversary, margin in tournament.loss_profile(candidate))
        lines.append(f"{candidate.label}: {tournament.copeland_score(candidate)} wins ({wins or '-'}), "
                     f"losses ({losses or '-'})")

    return "\n".join(lines)


def format_selection(result: SelectionResult):
    """
    Format the stages of a selection as a narrative.

    Parameters:
        result (SelectionResult): The selection.

    Returns:
        str: The narrative, one paragraph per stage and the outcome.
    """

    lines = [f"Method {result.method}:"]
    for number, stage in enumerate(result.trace, start=1):
        scores = ", ".join(f"{label}={score}" for label, score in stage["scores"].items())
        lines.append(f"  {number}. {stage['stage']}: {scores or '-'}")
        lines.append(f"     kept {', '.join(stage['candidates'])}")

    if result.is_unique:
        decided = f" (decided by {result.decisive_stage})" if result.decisive_stage else ""
        lines.append(f"Winner: {result.winner.label}{decided}")
    else:
        lines.append(f"Tied winners: {', '.join(result.labels)}")

    return "\n".join(lines)


def format_tally(profile: Profile, result: SelectionResult):
    """
    Format the outcome of a ballot tally.

    Parameters:
        profile (Profile): The tallied profile.
        result (SelectionResult): The selection on its margins.

    Returns:
        str: The margin matrix, the records of all candidates and the selection.
    """

    return "\n\n".join([
        f"{profile.voter_count} voters, {len(profile.candidates)} candidates",
        format_matrix(result.tournament),
        format_records(result.tournament),
        format_selection(result)
    ])


def format_classification(tournament_class: TournamentClass, expected=None):
    """
    Format a tournament class with its role witness.

    Parameters:
        tournament_class (TournamentClass): The class.
        expected (Candidate): The expected winner for four candidates, None otherwise.

    Returns:
        str: The class label, the expected winner and the roles.
    """

    header = tournament_class.label
    if expected is not None:
        header += f", expected winner {expected.label}"

    roles = ", ".join(f"{role}={candidate.label}" for role, candidate in tournament_class.witness.items())
    return f"{header}\nroles: {roles}"


def format_audit_table(report: dict):
    """
    Format the satisfaction matrix of an audit, methods as columns.

    Parameters:
        report (dict): The audit report.

    Returns:
        str: The table, "yes" for a satisfied axiom and "-" for a violation.
    """

    methods = list(dict.fromkeys(result["method"] for result in report["results"]))
    axioms = list(dict.fromkeys(result["axiom"] for result in report["results"]))
    if not methods:
        return "No methods audited."

    holds = {(result["method"], result["axiom"]): result["holds"] for result in report["results"]}
    first = max(len(axiom) for axiom in axioms)
    widths = [max(len(method), 3) for method in methods]

    lines = [" " * first + "  " + "  ".join(method.rjust(width) for method, width in zip(methods, widths))]
    for axiom in axioms:
        marks = ["yes" if holds[(method, axiom)] else "-" for method in methods]
        lines.append(axiom.ljust(first) + "  " + "  ".join(mark.rjust(width) for mark, width in zip(marks, widths)))

    space = report["space"]
    lines.append(f"\n{space['tournaments']} tournaments, {space['candidates']} candidates ({space['mode']})")
    return "\n".join(lines)


def validate_report_with_schema(schema: str, report: dict, strict: bool = True):
    """
    Check whether a report matches its validation schema.

    Parameters:
        schema (str): The name of the validation schema to be used.
        report (dict): The report.
        strict (bool): Whether to raise an error if the schema doesn't exist, defaults to True.

    Raises:
        NoSchemaFileFound: Raised if the validation schema does not exist and strict-mode is used.
        ValidationError: Raised if the report doesn't match the schema.
    """

    path = join(SCHEMA_DIRECTORY, f"{schema}.json")

    # Check whether the schema exists, open it if it does
    if exists(path):
        with open(path, "r", encoding="utf-8") as file:
            validate(report, loads(file.read()))

    elif strict:
        raise Exceptions.NoSchemaFileFound


def format_output(data: dict):
    """
    Serialise data as JSON, keys sorted so equal data gives equal text.

    Parameters:
        data (dict): The data.

    Returns:
        str: The JSON text.
    """

    return dumps(data, sort_keys=True, indent=2)


def write_report(report: dict, out: str):
    """
    Write an audit report and the tournaments of its counterexamples.

    The report goes to <out>/report.json, every counterexample to
    <out>/counterexamples/<method>__<axiom>__primary.tournament and __secondary.tournament.

    Parameters:
        report (dict): The validated audit report.
        out (str): The output directory.

    Returns:
        str: The path of the JSON report.
    """

    Logger.log(f"Writing audit report to {out}")
    validate_report_with_schema("audit_report", report)

    makedirs(join(out, "counterexamples"), exist_ok=True)
    path = join(out, "report.json")
    with open(path, "w", encoding="utf-8") as file:
        file.write(format_output(report) + "\n")

    # One file per recorded tournament
    for result in report["results"]:
        counterexample = result["counterexample"]
        if counterexample is None:
            continue
        for role, text in counterexample["tournaments"].items():
            if text is None:
                continue
            name = f"{result['method']}__{result['axiom']}__{role}.tournament"
            with open(join(out, "counterexamples", name), "w", encoding="utf-8") as file:
                file.write(text)

    return path
