from data_objects.WeightedTournament import WeightedTournament


class SelectionStage:
    """
    One step of a selection: the scores a method computed and the candidates it kept.

    Attributes:
        name (str): The name of the stage, for example "copeland" or "smallest_loss".
        candidates (tuple): The indices of the candidates kept after the stage.
        scores (dict): The score of every candidate considered in the stage, by index.
    """

    name: str = None
    candidates: tuple = None
    scores: dict = None

    def __init__(self, name: str, candidates, scores: dict = None):

        self.name = name
        self.candidates = tuple(sorted(candidates))
        self.scores = scores or {}

    def to_dict(self, tournament: WeightedTournament):

        """Get the stage as a dictionary with candidate labels.

        :param tournament: The tournament the stage belongs to.
        :type tournament: WeightedTournament

        :rtype: dict
        """

        return {
            "stage": self.name,
            "scores": {tournament.labels[i]: score for i, score in sorted(self.scores.items())},
            "candidates": [tournament.labels[i] for i in self.candidates]
        }


class SelectionResult:
    """
    The nonempty set of candidates a method selects, with the stages that led to it.

    Attributes:
        method (str): The name of the method.
        tournament (WeightedTournament): The tournament the method was applied to.
        stages (list): The selection stages in order, the last one holds the winners.
    """

    method: str = None
    tournament: WeightedTournament = None
    stages: list = None

    def __init__(self, method: str, tournament: WeightedTournament, stages: list):

        self.method = method
        self.tournament = tournament
        self.stages = stages

    @property
    def winner_indices(self):

        return self.stages[-1].candidates

    @property
    def winners(self):

        return tuple(self.tournament.candidates[i] for i in self.winner_indices)

    @property
    def labels(self):

        return tuple(self.tournament.labels[i] for i in self.winner_indices)

    @property
    def is_unique(self):

        return len(self.winner_indices) == 1

    @property
    def winner(self):

        """The single winner, None when the selection is tied."""

        return self.winners[0] if self.is_unique else None

    @property
    def decisive_stage(self):

        """
        The name of the first stage after which a single candidate was left.

        Returns:
            str: The stage name, None if the selection stays tied.
        """

        for stage in self.stages:
            if len(stage.candidates) == 1:
                return stage.name
        return None

    @property
    def trace(self):

        return [stage.to_dict(self.tournament) for stage in self.stages]

    def to_dict(self):

        return {
            "method": self.method,
            "winners": list(self.labels),
            "decisive_stage": self.decisive_stage,
            "trace": self.trace
        }
