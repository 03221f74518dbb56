from app import cli, INPUT_ERROR, SUCCESS, TIED_RESULT, VIOLATIONS_FOUND
from click.testing import CliRunner
from conftest import DATA_DIRECTORY, tournament_path
from file_interfaces.BallotFileInterface import parse_ballots
from json import loads
from os.path import exists, join

import pytest


@pytest.fixture()
def invoke(settings_file):

    """Run the command line with settings that don't write log files."""

    runner = CliRunner()

    def run(*arguments):
        return runner.invoke(cli, ["--settings", settings_file] + [str(argument) for argument in arguments])

    return run


class TestTally:

    def test_majority(self, invoke):

        result = invoke("tally", join(DATA_DIRECTORY, "ballots", "majority.ballots"))
        assert result.exit_code == SUCCESS
        assert "5 voters, 2 candidates" in result.output
        assert "Winner: A" in result.output

    def test_json(self, invoke):

        result = invoke("tally", join(DATA_DIRECTORY, "ballots", "majority.ballots"), "--json")
        assert result.exit_code == SUCCESS

        data = loads(result.output)
        assert data["voters"] == 5
        assert data["tournament"]["margins"] == [[0, 1], [-1, 0]]
        assert data["selection"]["winners"] == ["A"]

    def test_realized_four_cycle(self, invoke, tmp_path):

        ballots = tmp_path / "four_cycle.ballots"
        result = invoke("realize", tournament_path("ls_four_cycle"), "--out", ballots)
        assert result.exit_code == SUCCESS

        mwsl = invoke("tally", ballots, "--method", "mwsl")
        assert mwsl.exit_code == SUCCESS
        assert "Winner: E (decided by smallest_loss)" in mwsl.output

        variant = invoke("tally", ballots, "--method", "variant_local_min")
        assert variant.exit_code == SUCCESS
        assert "Winner: N" in variant.output

    def test_tie(self, invoke, tmp_path):

        ballots = tmp_path / "tie.ballots"
        ballots.write_text("A>B\nB>A\n", encoding="utf-8")

        result = invoke("tally", ballots)
        assert result.exit_code == TIED_RESULT
        assert "Tied winners: A, B" in result.output

    def test_malformed_ballots(self, invoke, tmp_path):

        ballots = tmp_path / "broken.ballots"
        ballots.write_text("candidates: A,B\n2: A>C\n", encoding="utf-8")

        result = invoke("tally", ballots)
        assert result.exit_code == INPUT_ERROR
        assert "unknown candidate 'C'" in result.output

    def test_unknown_method(self, invoke):

        result = invoke("tally", join(DATA_DIRECTORY, "ballots", "majority.ballots"), "--method", "borda")
        assert result.exit_code == INPUT_ERROR


class TestRealize:

    def test_standard_output(self, invoke):

        result = invoke("realize", tournament_path("ls_four_cycle"))
        assert result.exit_code == SUCCESS
        assert result.output.startswith("candidates: W,N,E,S\n")

    def test_mcgarvey(self, invoke, tmp_path):

        ballots = tmp_path / "defeats.ballots"
        result = invoke("realize", tournament_path("pentagram"), "--construction", "mcgarvey", "--out", ballots)
        assert result.exit_code == SUCCESS

        margins = parse_ballots(ballots.read_text(encoding="utf-8")).margins()
        assert set(margins.magnitudes()) == {2}
        assert margins.margin("a", "d") == 2

    def test_mixed_parity(self, invoke):

        result = invoke("realize", tournament_path("ls_four_cycle"), "--parity", "odd")
        assert result.exit_code == INPUT_ERROR

    def test_unknown_construction(self, invoke):

        result = invoke("realize", tournament_path("ls_four_cycle"), "--construction", "kemeny")
        assert result.exit_code == INPUT_ERROR


class TestClassify:

    def test_four_cycle(self, invoke):

        result = invoke("classify", tournament_path("ls_four_cycle"))
        assert result.exit_code == SUCCESS
        assert result.output.startswith("LSFourCycle, expected winner E")
        assert "roles: N=N, W=W, E=E, S=S" in result.output

    def test_json(self, invoke):

        data = loads(invoke("classify", tournament_path("pentagram"), "--json").output)
        assert data["label"] == "Pentagram_T12"
        assert data["expected_winner"] is None
        assert sorted(data["witness"].values()) == ["a", "b", "c", "d", "e"]

    def test_three_candidates(self, invoke, tmp_path):

        tournament = tmp_path / "three.tournament"
        tournament.write_text("candidates: A,B,C\nA B 2\nB C 4\nC A 6\n", encoding="utf-8")

        result = invoke("classify", tournament)
        assert result.exit_code == INPUT_ERROR

    def test_missing_file(self, invoke, tmp_path):

        result = invoke("classify", tmp_path / "missing.tournament")
        assert result.exit_code == INPUT_ERROR


class TestAudit:

    def test_violations(self, invoke, tmp_path):

        out = tmp_path / "report"
        result = invoke("audit", "--candidates", 3, "--magnitudes", "2,4,6", "--methods", "copeland,mwsl",
                        "--axioms", "RareTies,CondorcetCriterion", "--out", out)

        assert result.exit_code == VIOLATIONS_FOUND
        assert f"Report written to {join(out, 'report.json')}" in result.output

        report = loads((out / "report.json").read_text(encoding="utf-8"))
        assert report["space"]["tournaments"] == 48
        assert exists(join(out, "counterexamples", "copeland__RareTies__primary.tournament"))
        assert not exists(join(out, "counterexamples", "copeland__RareTies__secondary.tournament"))

    def test_no_violations(self, invoke, tmp_path):

        result = invoke("audit", "--candidates", 3, "--magnitudes", "2,4,6", "--methods", "mwsl",
                        "--axioms", "RareTies,ImmunitySpoilers", "--out", tmp_path / "report")
        assert result.exit_code == SUCCESS
        assert "48 tournaments, 3 candidates (exhaustive)" in result.output

    def test_same_seed_gives_identical_files(self, invoke, tmp_path):

        arguments = ("audit", "--candidates", 4, "--mode", "sample", "--samples", 150, "--seed", 5,
                     "--methods", "minimax,mwsl", "--axioms", "WinDominance,RareTies")

        first_run = invoke(*arguments, "--out", tmp_path / "first")
        second_run = invoke(*arguments, "--out", tmp_path / "second")
        assert first_run.exit_code == second_run.exit_code
        assert first_run.exit_code in (SUCCESS, VIOLATIONS_FOUND)

        first = (tmp_path / "first" / "report.json").read_bytes()
        second = (tmp_path / "second" / "report.json").read_bytes()
        assert first == second

    def test_invalid_magnitudes(self, invoke, tmp_path):

        result = invoke("audit", "--candidates", 3, "--magnitudes", "2,four,6", "--out", tmp_path / "report")
        assert result.exit_code == INPUT_ERROR

    def test_exhaustive_five_candidates(self, invoke, tmp_path):

        result = invoke("audit", "--candidates", 5, "--mode", "exhaustive", "--out", tmp_path / "report")
        assert result.exit_code == INPUT_ERROR
        assert "five candidates are sampled" in result.output
        assert not (tmp_path / "report").exists()

    def test_unsupported_mode(self, invoke, tmp_path):

        result = invoke("audit", "--mode", "random", "--out", tmp_path / "report")
        assert result.exit_code == INPUT_ERROR


class TestExplain:

    def test_pentagram(self, invoke):

        result = invoke("explain", tournament_path("pentagram"), "--method", "cgm")
        assert result.exit_code == SUCCESS
        assert "Method cgm:" in result.output
        assert "Winner: b (decided by worst_loss)" in result.output

    def test_tie(self, invoke):

        result = invoke("explain", tournament_path("ls_four_cycle"), "--method", "copeland")
        assert result.exit_code == TIED_RESULT
        assert "Tied winners: N, E" in result.output

    def test_json(self, invoke):

        data = loads(invoke("explain", tournament_path("borda_tiebreak"), "--method", "cgb", "--json").output)
        assert data["winners"] == ["E"]
        assert data["trace"][-1]["scores"] == {"W": -2, "N": 14, "E": 16}

    def test_malformed_tournament(self, invoke, tmp_path):

        tournament = tmp_path / "broken.tournament"
        tournament.write_text("candidates: A,B\nA B 3\nB A 3\n", encoding="utf-8")

        result = invoke("explain", tournament)
        assert result.exit_code == INPUT_ERROR
        assert "Line 3: conflicts with line 2" in result.output


class TestCommandLine:

    def test_unknown_command(self, invoke):

        assert invoke("vote").exit_code == INPUT_ERROR

    def test_invalid_settings_file(self, tmp_path):

        settings = tmp_path / "settings.yml"
        settings.write_text("- a list\n- not a mapping\n", encoding="utf-8")

        result = CliRunner().invoke(cli, ["--settings", str(settings), "classify", tournament_path("pentagram")])
        assert result.exit_code == INPUT_ERROR
