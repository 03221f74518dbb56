from data_objects.Counterexample import Counterexample


class AxiomVerdict:
    """
    The outcome of checking one axiom for one method.
    A violated axiom always carries a counterexample that can be checked on its own.

    Attributes:
        axiom (str): The name of the axiom.
        method (str): The name of the method.
        holds (bool): Whether no violation was found.
        counterexample (Counterexample): The witness of the violation, None when the axiom holds.
        checked (int): The number of tournaments the verdict is based on.
    """

    axiom: str = None
    method: str = None
    holds: bool = None
    counterexample: Counterexample = None
    checked: int = None

    def __init__(self, axiom: str, method: str, counterexample: Counterexample = None, checked: int = 1):

        self.axiom = axiom
        self.method = method
        self.holds = counterexample is None
        self.counterexample = counterexample
        self.checked = checked

    def __bool__(self):

        return self.holds

    def __repr__(self):

        return f"AxiomVerdict({self.method}, {self.axiom}, holds={self.holds})"

    def to_dict(self):

        return {
            "method": self.method,
            "axiom": self.axiom,
            "holds": self.holds,
            "checked": self.checked,
            "counterexample": None if self.counterexample is None else self.counterexample.to_dict()
        }
