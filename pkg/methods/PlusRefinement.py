from data_objects.SelectionResult import SelectionStage
from data_objects.WeightedTournament import WeightedTournament
from methods.AbstractMethod import AbstractMethod


class PlusRefinement(AbstractMethod):

    base: AbstractMethod = None

    def __init__(self, base: AbstractMethod):

        """Adds a final Minimax tie-breaking step to a method.

        :param base: The method whose winners are refined.
        :type base: AbstractMethod

        :return: An instance of PlusRefinement, named after the base with a "_plus" suffix.
        :rtype: PlusRefinement
        """

        self.base = base
        self.name = f"{base.name}_plus"
        self.description = f"Break the ties of {base.name} by the smallest worst loss."

    def stages(self, tournament: WeightedTournament):

        stages = self.base.stages(tournament)
        finalists = stages[-1].candidates
        scores = {x: tournament.worst_loss_of(x) for x in finalists}

        return stages + [SelectionStage("worst_loss", self.argmin(scores), scores)]

    def winner_masks(self, tournament: WeightedTournament, stack):

        return self.lowest(self.worst_losses(stack), self.base.winner_masks(tournament, stack))


def plus_refine(base, tournament: WeightedTournament):

    """Select with a method and break its ties by the smallest worst loss.

    :param base: The method to refine, by name or instance.
    :type base: str or AbstractMethod
    :param tournament: The tournament to select from.
    :type tournament: WeightedTournament

    :rtype: SelectionResult
    """

    from methods.MethodRegistry import get_method

    return PlusRefinement(get_method(base)).select(tournament)
