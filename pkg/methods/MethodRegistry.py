from data_objects.WeightedTournament import WeightedTournament
from exceptions import UnknownMethod
from methods.AbstractMethod import AbstractMethod
from methods.Copeland import Copeland
from methods.CopelandBorda import CopelandBorda
from methods.CopelandDistance import CopelandDistance
from methods.CopelandThenLoss import CopelandThenLoss, GLOBAL, LOCAL, SMALLEST, WORST
from methods.GFixture import GFixture
from methods.Minimax import Minimax
from methods.PlusRefinement import PlusRefinement
from methods.UncoveredMinimax import UncoveredMinimax

# Initialise every method once, the instances hold no state between selections
copeland = Copeland()
minimax = Minimax()
mwsl = CopelandThenLoss("mwsl", GLOBAL, SMALLEST,
                        "Among the Copeland winners, select the one with the smallest head-to-head loss.")
variant_local_min = CopelandThenLoss("variant_local_min", LOCAL, SMALLEST,
                                     "Among the Copeland winners, select the one with the smallest loss "
                                     "to another Copeland winner.")
cgm = CopelandThenLoss("cgm", GLOBAL, WORST,
                       "Among the Copeland winners, select the one whose worst loss is smallest.")
clm = CopelandThenLoss("clm", LOCAL, WORST,
                       "Among the Copeland winners, select the one whose worst loss to another Copeland "
                       "winner is smallest.")
cgb = CopelandBorda("cgb")

valid_methods = {method.name: method for method in (
    copeland,
    minimax,
    mwsl,
    variant_local_min,
    cgm,
    clm,
    cgb,
    PlusRefinement(cgb),
    UncoveredMinimax(),
    GFixture(),
    CopelandBorda("clb", local=True),
    CopelandDistance()
)}


def get_method(method):

    """Resolve a method given by name or instance.

    :param method: The method name, as used on the command line, or a method instance.
    :type method: str or AbstractMethod

    :raise UnknownMethod: Raised if there is no method with the name.

    :return: The method.
    :rtype: AbstractMethod
    """

    if isinstance(method, AbstractMethod):
        return method
    if method not in valid_methods:
        raise UnknownMethod(method)

    return valid_methods[method]


def select(method, tournament: WeightedTournament):

    """Select the winners of a tournament with a method.

    :param method: The method name or instance.
    :type method: str or AbstractMethod
    :param tournament: The tournament.
    :type tournament: WeightedTournament

    :raise UnknownMethod: Raised if there is no method with the name.

    :return: The winners with the selection trace.
    :rtype: SelectionResult
    """

    return get_method(method).select(tournament)


def winners(method, tournament: WeightedTournament):

    """Get the indices of the winners, without a trace.

    :rtype: frozenset
    """

    return get_method(method).winners(tournament)
