from axioms.AbstractAxiom import AbstractAxiom
from axioms.CondorcetCriterion import CondorcetCriterion
from axioms.ImmunitySpoilers import ImmunitySpoilers
from axioms.IndependenceOfIrrelevantDefeats import IndependenceOfIrrelevantDefeats
from axioms.ProximityCondorcet import ProximityCondorcet
from axioms.ProximityCopeland import ProximityCopeland
from axioms.RareTies import RareTies
from axioms.WinDominance import WinDominance
from axioms.WinMonotonicity import WinMonotonicity
from data_objects.WeightedTournament import WeightedTournament
from exceptions import UnknownAxiom

valid_axioms = {axiom.name: axiom for axiom in (
    ProximityCondorcet(),
    ProximityCopeland(),
    IndependenceOfIrrelevantDefeats(),
    WinMonotonicity(),
    WinDominance(),
    RareTies(),
    ImmunitySpoilers(),
    CondorcetCriterion()
)}


def get_axiom(axiom):

    """Resolve an axiom given by name or instance.

    :param axiom: The axiom name, as used on the command line, or an axiom instance.
    :type axiom: str or AbstractAxiom

    :raise UnknownAxiom: Raised if there is no axiom with the name.

    :rtype: AbstractAxiom
    """

    if isinstance(axiom, AbstractAxiom):
        return axiom
    if axiom not in valid_axioms:
        raise UnknownAxiom(axiom)

    return valid_axioms[axiom]


def check(axiom, method, tournament: WeightedTournament, bound: int = None):

    """Check one axiom for one method on one tournament.

    :rtype: AxiomVerdict
    """

    return get_axiom(axiom).check(method, tournament, bound)
