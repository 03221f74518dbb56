from data_objects.Candidate import Candidate

# Four candidate classes
LINEAR_ORDER = "LinearOrder"
CONDORCET_WINNER_BOTTOM_CYCLE = "CondorcetWinnerBottomCycle"
ASCENDING_TOP_CYCLE = "AscendingTopCycle"
DESCENDING_TOP_CYCLE = "DescendingTopCycle"
SL_FOUR_CYCLE = "SLFourCycle"
LS_FOUR_CYCLE = "LSFourCycle"

# Five candidate classes
UNIQUE_COPELAND_WINNER = "UniqueCopelandWinner5"
TOP_TOP_CYCLE = "TopTopCycle_T4"
TOP_FOUR_CYCLE = "TopFourCycle_T6"
MID_CYCLE_ORDER = "MidCycleOrder_T7"
GYROSCOPE = "Gyroscope_T8"
PENTAGRAM = "Pentagram_T12"

FOUR_CANDIDATE_CLASSES = (LINEAR_ORDER, CONDORCET_WINNER_BOTTOM_CYCLE, ASCENDING_TOP_CYCLE,
                          DESCENDING_TOP_CYCLE, SL_FOUR_CYCLE, LS_FOUR_CYCLE)
FIVE_CANDIDATE_CLASSES = (UNIQUE_COPELAND_WINNER, TOP_TOP_CYCLE, TOP_FOUR_CYCLE,
                          MID_CYCLE_ORDER, GYROSCOPE, PENTAGRAM)


class TournamentClass:
    """
    A named class of uniquely-weighted tournaments with the role every candidate plays in it.

    Attributes:
        label (str): The class label.
        witness (dict): The candidate playing each role, by role name.
    """

    label: str = None
    witness: dict = None

    def __init__(self, label: str, witness: dict):

        self.label = label
        self.witness = witness

    @property
    def size(self):

        return 4 if self.label in FOUR_CANDIDATE_CLASSES else 5

    def role(self, name: str) -> Candidate:

        return self.witness[name]

    def __eq__(self, other):

        return isinstance(other, TournamentClass) and self.label == other.label and self.witness == other.witness

    def __repr__(self):

        roles = ", ".join(f"{role}={candidate.label}" for role, candidate in self.witness.items())
        return f"TournamentClass({self.label}: {roles})"

    def to_dict(self):

        return {
            "label": self.label,
            "witness": {role: candidate.label for role, candidate in self.witness.items()}
        }
