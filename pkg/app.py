from AuditModel import AuditModel
from exceptions import InputError
from helpers.ClassificationHelper import ClassificationHelper
from helpers.RealizationHelper import RealizationHelper
from Logger import Logger
from methods.MethodRegistry import get_method
from utility_functions import load_settings

import click
import command_functions as helper
import sys

# Exit codes
SUCCESS = 0
INPUT_ERROR = 1
TIED_RESULT = 2
VIOLATIONS_FOUND = 3


class CommandGroup(click.Group):
    """
    A command group that turns the return value of a command into the exit code.
    Input errors and usage errors both end with exit code 1.
    """

    def main(self, args=None, prog_name=None, complete_var=None, standalone_mode=True, **extra):

        try:
            code = super().main(args, prog_name, complete_var, standalone_mode=False, **extra)
        except click.exceptions.Abort:
            click.echo("Aborted!", err=True)
            code = INPUT_ERROR
        except click.ClickException as exception:
            exception.show()
            code = INPUT_ERROR
        except InputError as exception:
            Logger.error(str(exception))
            click.echo(f"Error: {exception}", err=True)
            code = INPUT_ERROR

        code = SUCCESS if code is None else code
        if standalone_mode:
            sys.exit(code)
        return code


def selection_exit_code(result):

    if result.is_unique:
        return SUCCESS

    Logger.warning(f"{result.method} selected no single winner: {', '.join(result.labels)}")
    return TIED_RESULT


@click.group(cls=CommandGroup)
@click.option("--settings", "settings_path", default="settings.yml", show_default=True,
              help="The YAML settings file, built-in defaults are used if it doesn't exist.")
@click.pass_context
def cli(context: click.Context, settings_path: str):
    """
    Tally ballots, classify weighted tournaments, audit voting methods against axioms,
    realize tournaments as ballot profiles and explain selections.
    """

    settings = load_settings(settings_path)
    logging = settings["logging"]
    Logger.initialize(logging["timezone"], logging["level"], logging["directory"])

    context.obj = settings


@cli.command()
@click.argument("ballot_file")
@click.option("--method", default=None, help="The voting method, defaults to the tally method of the settings.")
@click.option("--json", "as_json", is_flag=True, help="Print the machine-readable result.")
@click.pass_obj
def tally(settings: dict, ballot_file: str, method: str, as_json: bool):
    """
    Count the ballots in BALLOT_FILE ("-" for standard input) and select the winners.
    Exits with 0 for a single winner and 2 for a tie.
    """

    profile = helper.read_profile(ballot_file)
    method = get_method(method or settings["tally"]["method"])

    Logger.log(f"Tallying {profile.voter_count} voters with {method.name}")
    result = method.select(profile.margins())

    if as_json:
        click.echo(helper.format_output({
            "voters": profile.voter_count,
            "tournament": result.tournament.to_dict(),
            "selection": result.to_dict()
        }))
    else:
        click.echo(helper.format_tally(profile, result))

    return selection_exit_code(result)


@cli.command()
@click.argument("tournament_file")
@click.option("--json", "as_json", is_flag=True, help="Print the machine-readable result.")
def classify(tournament_file: str, as_json: bool):
    """
    Classify the uniquely-weighted four or five candidate tournament in TOURNAMENT_FILE.
    """

    tournament = helper.read_tournament(tournament_file)
    classification_helper = ClassificationHelper()
    tournament_class = classification_helper.classify(tournament)

    # The class structure prescribes a winner for four candidates only
    expected = None
    if tournament.size == 4:
        expected = classification_helper.expected_winner(tournament_class, tournament)

    if as_json:
        data = tournament_class.to_dict()
        data["expected_winner"] = None if expected is None else expected.label
        click.echo(helper.format_output(data))
    else:
        click.echo(helper.format_classification(tournament_class, expected))

    return SUCCESS


@cli.command()
@click.option("--candidates", type=int, default=None, help="The number of candidates, 2 to 5.")
@click.option("--methods", default=None, help="Comma separated method names.")
@click.option("--axioms", default=None, help="Comma separated axiom names.")
@click.option("--mode", default=None, help="exhaustive or sample.")
@click.option("--magnitudes", default=None, help="Comma separated distinct positive margin magnitudes.")
@click.option("--samples", type=int, default=None, help="The number of sampled tournaments.")
@click.option("--seed", type=int, default=None, help="The seed of the sample.")
@click.option("--out", default=None, help="The directory for the report and the counterexample tournaments.")
@click.option("--workers", type=int, default=None, help="The number of worker processes.")
@click.pass_obj
def audit(settings: dict, candidates, methods, axioms, mode, magnitudes, samples, seed, out, workers):
    """
    Check voting methods against axioms on every or on sampled uniquely-weighted tournaments.
    Exits with 3 if any axiom is violated.
    """

    defaults = settings["audit"]
    model = AuditModel(helper.get_names_from_option(methods, defaults["methods"]),
                       helper.get_names_from_option(axioms, defaults["axioms"]),
                       candidates=defaults["candidates"] if candidates is None else candidates,
                       mode=mode or defaults["mode"],
                       magnitudes=helper.get_magnitudes_from_option(magnitudes, defaults["magnitudes"]),
                       samples=defaults["samples"] if samples is None else samples,
                       seed=defaults["seed"] if seed is None else seed,
                       workers=defaults["workers"] if workers is None else workers,
                       chunk_size=defaults["chunk_size"],
                       stratum_size=defaults["stratum_size"])

    report = model.run()
    path = helper.write_report(report, out or defaults["out"])

    click.echo(helper.format_audit_table(report))
    click.echo(f"Report written to {path}")

    if any(not result["holds"] for result in report["results"]):
        return VIOLATIONS_FOUND
    return SUCCESS


@cli.command()
@click.argument("tournament_file")
@click.option("--parity", default="even", show_default=True, help="The parity all margins share, even or odd.")
@click.option("--construction", type=click.Choice(["debord", "mcgarvey"]), default="debord", show_default=True,
              help="debord reproduces every margin, mcgarvey only the defeats.")
@click.option("--out", default="-", show_default=True, help="The ballot file to write, - for standard output.")
def realize(tournament_file: str, parity: str, construction: str, out: str):
    """
    Build a ballot profile whose margins form the tournament in TOURNAMENT_FILE.
    """

    tournament = helper.read_tournament(tournament_file)
    realization_helper = RealizationHelper()

    if construction == "debord":
        profile = realization_helper.debord_realize(tournament, parity)
    else:
        profile = realization_helper.mcgarvey_realize(tournament)

    Logger.log(f"Realized {tournament.size} candidates with {profile.voter_count} voters ({construction})")
    if out == "-":
        click.echo(profile.to_text(), nl=False)
    else:
        with open(out, "w", encoding="utf-8") as file:
            file.write(profile.to_text())

    return SUCCESS


@cli.command()
@click.argument("tournament_file")
@click.option("--method", default=None, help="The voting method, defaults to the tally method of the settings.")
@click.option("--json", "as_json", is_flag=True, help="Print the machine-readable trace.")
@click.pass_obj
def explain(settings: dict, tournament_file: str, method: str, as_json: bool):
    """
    Show stage by stage how a method selects the winners of the tournament in TOURNAMENT_FILE.
    Exits with 0 for a single winner and 2 for a tie.
    """

    tournament = helper.read_tournament(tournament_file)
    result = get_method(method or settings["tally"]["method"]).select(tournament)

    if as_json:
        click.echo(helper.format_output(result.to_dict()))
    else:
        click.echo(helper.format_matrix(tournament))
        click.echo()
        click.echo(helper.format_selection(result))

    return selection_exit_code(result)


if __name__ == "__main__":

    cli()
