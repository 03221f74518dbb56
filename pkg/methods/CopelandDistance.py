from data_objects.SelectionResult import SelectionStage
from data_objects.WeightedTournament import WeightedTournament
from methods.AbstractMethod import AbstractMethod


class CopelandDistance(AbstractMethod):

    def __init__(self):

        self.name = "copeland_distance"
        self.description = ("Select the candidates who need the smallest improvement of all their margins "
                            "to become the unique Copeland winner.")

    def stages(self, tournament: WeightedTournament):

        """Runs the distance to Copeland rule according to the following logic:
        Every candidate scores the least n such that improving every one of its margins by n makes it the
        unique Copeland winner. A Condorcet winner scores 0. The lowest score wins.

        :param tournament: The tournament to select from.
        :type tournament: WeightedTournament

        :return: A single "copeland_distance" stage.
        :rtype: list
        """

        scores = {i: tournament.copeland_distance_of(i) for i in range(tournament.size)}
        return [SelectionStage("copeland_distance", self.argmin(scores), scores)]
