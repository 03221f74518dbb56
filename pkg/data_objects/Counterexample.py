from data_objects.WeightedTournament import WeightedTournament
from file_interfaces.TournamentFileInterface import parse_tournament
from methods.MethodRegistry import get_method

import exceptions as Exceptions

# The tournament operations a perturbation may replay
REPLAYABLE_OPERATIONS = ("improve_margin", "improve_all_margins", "with_margin", "remove_candidate")


def from_dict(data: dict):

    """Construct a counterexample from its report dictionary.

    :param data: The input data.
    :type data: dict

    :return: The constructed counterexample.
    :rtype: Counterexample
    """

    tournaments = data["tournaments"]
    secondary = tournaments.get("secondary")
    counterexample = Counterexample(data["axiom"],
                                    data["method"],
                                    parse_tournament(tournaments["primary"]),
                                    parse_tournament(secondary) if secondary else None,
                                    data["actors"],
                                    data["n"],
                                    data["perturbation"],
                                    data["winners_before"],
                                    data["winners_after"])
    counterexample.index = data.get("index")
    counterexample.classes = data.get("classes", {})

    return counterexample


class Counterexample:

    axiom: str = None
    method: str = None
    primary: WeightedTournament = None
    secondary: WeightedTournament = None
    actors: dict = None
    n: int = None
    perturbation: list = None
    winners_before: tuple = None
    winners_after: tuple = None
    index: int = None
    classes: dict = None

    def __init__(self,
                 axiom: str,
                 method: str,
                 primary: WeightedTournament,
                 secondary: WeightedTournament = None,
                 actors: dict = None,
                 n: int = None,
                 perturbation: list = None,
                 winners_before: list = (),
                 winners_after: list = None):

        """Initialises a counterexample to an axiom.

        :param axiom: The name of the violated axiom.
        :type axiom: str
        :param method: The name of the violating method.
        :type method: str
        :param primary: The tournament the axiom starts from.
        :type primary: WeightedTournament
        :param secondary: The tournament the perturbation leads to, None for single tournament axioms.
        :type secondary: WeightedTournament
        :param actors: The candidates playing the roles of the axiom (A, B, C, X, ...), by role.
        :type actors: dict
        :param n: The size of the improvement, if the axiom has one.
        :type n: int
        :param perturbation: The steps that turn the primary into the secondary tournament. Every step is a
            dictionary with an "operation" and its "arguments".
        :type perturbation: list
        :param winners_before: The labels the method selects in the primary tournament.
        :type winners_before: list
        :param winners_after: The labels the method selects in the secondary tournament.
        :type winners_after: list

        :return: An instance of a counterexample.
        :rtype: Counterexample
        """

        self.axiom = axiom
        self.method = method
        self.primary = primary
        self.secondary = secondary
        self.actors = actors or {}
        self.n = n
        self.perturbation = perturbation or []
        self.winners_before = tuple(winners_before)
        self.winners_after = None if winners_after is None else tuple(winners_after)
        self.classes = {}

    def outcomes(self):

        """Apply the perturbation steps to the primary tournament.

        Steps apply to the result of the previous step, a step marked "from_primary" starts a new branch from
        the primary tournament.

        :raise UnknownPerturbationStep: Raised for a step that isn't a replayable tournament operation.

        :return: The tournament at the end of every branch, in the recorded order.
        :rtype: list
        """

        outcomes = []
        tournament = self.primary
        for position, step in enumerate(self.perturbation):
            if step["operation"] not in REPLAYABLE_OPERATIONS:
                raise Exceptions.UnknownPerturbationStep(step["operation"])
            if position > 0 and step.get("from_primary"):
                outcomes.append(tournament)
                tournament = self.primary
            tournament = getattr(tournament, step["operation"])(*step["arguments"])

        return outcomes + [tournament] if self.perturbation else outcomes

    def replay(self):

        """Apply the perturbation steps to the primary tournament.

        :raise UnknownPerturbationStep: Raised for a step that isn't a replayable tournament operation.

        :return: The tournament at the end of the first branch, the secondary tournament.
        :rtype: WeightedTournament
        """

        outcomes = self.outcomes()
        return outcomes[0] if outcomes else self.primary

    def verify(self, method=None):

        """Re-run the method and check that the recorded tournaments and winners are reproduced,
        and that the tournaments still meet the premise of the axiom and break its conclusion.

        :param method: The method to re-run, defaults to the recorded method.
        :type method: str or AbstractMethod

        :return: Whether the counterexample reproduces exactly.
        :rtype: bool
        """

        from axioms.AxiomRegistry import get_axiom

        method = get_method(method or self.method)

        # The recorded winners of the primary tournament
        if method.select(self.primary).labels != self.winners_before:
            return False

        # Single tournament axioms have no secondary tournament
        if self.secondary is None:
            if self.perturbation:
                return False
        elif self.replay() != self.secondary or method.select(self.secondary).labels != self.winners_after:
            return False

        return get_axiom(self.axiom).confirms(self)

    def to_dict(self):

        return {
            "axiom": self.axiom,
            "method": self.method,
            "index": self.index,
            "tournaments": {
                "primary": self.primary.to_text(),
                "secondary": None if self.secondary is None else self.secondary.to_text()
            },
            "actors": dict(self.actors),
            "n": self.n,
            "perturbation": [dict(step, arguments=list(step["arguments"])) for step in self.perturbation],
            "winners_before": list(self.winners_before),
            "winners_after": None if self.winners_after is None else list(self.winners_after),
            "classes": dict(self.classes)
        }


def step(operation: str, *arguments, from_primary: bool = False):

    """Describe one replayable perturbation step.

    :param operation: The name of the tournament operation.
    :type operation: str
    :param from_primary: Whether the step starts a new branch from the primary tournament.
    :type from_primary: bool

    :rtype: dict
    """

    if from_primary:
        return {"operation": operation, "arguments": list(arguments), "from_primary": True}
    return {"operation": operation, "arguments": list(arguments)}
