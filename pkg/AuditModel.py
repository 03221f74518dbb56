from axioms.AxiomRegistry import get_axiom
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from data_objects.AxiomVerdict import AxiomVerdict
from data_objects.WeightedTournament import WeightedTournament
from functools import partial
from helpers.ClassificationHelper import ClassificationHelper
from helpers.EnumerationHelper import EXHAUSTIVE, SAMPLE, count_assignments, default_magnitudes, \
    enumerate_assignments, sample_assignments, tournament_from_assignment, validate_magnitudes
from itertools import islice
from Logger import Logger
from methods.MethodRegistry import get_method, mwsl

import exceptions as Exceptions

BOUND_ASSUMPTION = ("Improvements n and replacement margins range over 0 .. max|m| + 1 of the checked tournament. "
                    "Beyond that bound no margin changes sign and no new order between magnitudes appears.")


def audit_chunk(size: int, method_names: tuple, axiom_names: tuple, closed: frozenset, chunk: list):

    """Check every method against every axiom on a chunk of the audit space.

    Runs in worker processes, so it only takes and returns picklable values.

    :param size: The number of candidates.
    :type size: int
    :param method_names: The methods to check.
    :type method_names: tuple
    :param axiom_names: The axioms to check, all defined for the number of candidates.
    :type axiom_names: tuple
    :param closed: The (method, axiom) pairs that already have a counterexample and can be skipped.
    :type closed: frozenset
    :param chunk: The enumeration index and signed margins of every tournament in the chunk.
    :type chunk: list

    :return: The first counterexample per (method, axiom) pair, the class histogram, and the number of
        expected-winner mismatches with the index of the first one.
    :rtype: tuple
    """

    methods = [get_method(name) for name in method_names]
    axioms = [get_axiom(name) for name in axiom_names]
    classification_helper = ClassificationHelper()

    found = {}
    histogram = Counter()
    mismatches, first_mismatch = 0, None

    for index, assignment in chunk:
        tournament = tournament_from_assignment(size, assignment)
        bound = tournament.max_magnitude() + 1
        cache = {}

        for method in methods:
            winners = method.winners(tournament)
            for axiom in axioms:
                key = (method.name, axiom.name)
                if key in closed or key in found:
                    continue

                counterexample = axiom.search(method, tournament, winners, bound, cache)
                if counterexample is not None:
                    counterexample.index = index
                    found[key] = counterexample

        # Classes of the audited tournaments
        if size in (4, 5):
            tournament_class = classification_helper.classify(tournament)
            histogram[tournament_class.label] += 1

            if size == 4:
                expected = classification_helper.expected_winner(tournament_class, tournament)
                if mwsl.winners(tournament) != frozenset((expected.index,)):
                    mismatches += 1
                    first_mismatch = index if first_mismatch is None else first_mismatch

    return found, dict(histogram), (mismatches, first_mismatch)


def chunked(items, size: int):

    iterator = iter(items)
    while True:
        chunk = list(islice(iterator, size))
        if not chunk:
            return
        yield chunk


class AuditModel:
    """
    Enumerates or samples uniquely-weighted tournaments and checks methods against axioms on all of them.

    Attributes:
        candidates (int): The number of candidates of the audited tournaments.
        mode (str): "exhaustive" or "sample".
        magnitudes (tuple): The margin magnitudes, one per pair or a pool to sample from.
        samples (int): The number of sampled tournaments.
        seed (int): The seed of the sample.
        methods (tuple): The names of the audited methods.
        axioms (tuple): The names of the audited axioms.
    """

    candidates: int = None
    mode: str = None
    magnitudes: tuple = None
    samples: int = None
    seed: int = None
    workers: int = None
    chunk_size: int = None
    stratum_size: int = None
    methods: tuple = None
    axioms: tuple = None
    verdicts: list = None

    def __init__(self,
                 methods: tuple,
                 axioms: tuple,
                 candidates: int = 4,
                 mode: str = EXHAUSTIVE,
                 magnitudes: tuple = None,
                 samples: int = 100000,
                 seed: int = 1,
                 workers: int = 1,
                 chunk_size: int = 48,
                 stratum_size: int = 25):

        """Initialises an audit.

        :param methods: The names of the methods to audit.
        :type methods: tuple
        :param axioms: The names of the axioms to check.
        :type axioms: tuple
        :param candidates: The number of candidates, 2 to 5.
        :type candidates: int
        :param mode: "exhaustive" to visit every assignment of the magnitudes, "sample" to draw tournaments.
        :type mode: str
        :param magnitudes: Distinct positive magnitudes, defaults to the even numbers 2, 4, ... one per pair.
        :type magnitudes: tuple
        :param samples: The number of tournaments to draw in sample mode.
        :type samples: int
        :param seed: The seed of the sample.
        :type seed: int
        :param workers: The number of processes, 1 to stay in this process.
        :type workers: int
        :param chunk_size: The number of tournaments handed to a worker at once.
        :type chunk_size: int
        :param stratum_size: The number of draws per rare five candidate class in sample mode.
        :type stratum_size: int

        :raise UnknownMethod: Raised if a method doesn't exist.
        :raise UnknownAxiom: Raised if an axiom doesn't exist.
        :raise UnsupportedAuditMode: Raised for an unknown mode.
        :raise UnsupportedCandidateCount: Raised if the number of candidates is outside 2 to 5.
        :raise InvalidMagnitudes: Raised if the magnitudes don't fit the mode.
        :raise InvalidAuditParameter: Raised if the samples, workers or chunk size aren't positive.

        :return: An instance of AuditModel.
        :rtype: AuditModel
        """

        # Resolve the names early so unknown ones fail before any work
        self.methods = tuple(get_method(name).name for name in methods)
        self.axioms = tuple(get_axiom(name).name for name in axioms)

        magnitudes = default_magnitudes(candidates) if not magnitudes else list(magnitudes)
        validate_magnitudes(candidates, magnitudes, mode)
        for name, value in (("samples", samples), ("workers", workers), ("chunk_size", chunk_size)):
            if value < 1:
                raise Exceptions.InvalidAuditParameter(name, value)

        self.candidates = candidates
        self.mode = mode
        self.magnitudes = tuple(sorted(magnitudes))
        self.samples = samples
        self.seed = seed
        self.workers = workers
        self.chunk_size = chunk_size
        self.stratum_size = stratum_size

    @property
    def total(self):

        if self.mode == EXHAUSTIVE:
            return count_assignments(self.candidates, self.magnitudes)
        return self.samples

    def space(self):

        """Describe the audited space for the report.

        :rtype: dict
        """

        return {
            "mode": self.mode,
            "candidates": self.candidates,
            "magnitudes": list(self.magnitudes),
            "sample_count": self.samples if self.mode == SAMPLE else None,
            "seed": self.seed if self.mode == SAMPLE else None,
            "tournaments": self.total
        }

    def assignments(self):

        """Generate the signed margins of every audited tournament in enumeration order.

        :rtype: generator
        """

        if self.mode == EXHAUSTIVE:
            return enumerate_assignments(self.candidates, self.magnitudes)
        return sample_assignments(self.candidates, self.samples, self.seed, self.magnitudes, self.stratum_size)

    def applicable_axioms(self):

        return tuple(name for name in self.axioms if get_axiom(name).minimum_candidates <= self.candidates)

    def run(self):

        """Run the audit and build the report.

        :return: The report, ready to be written as JSON.
        :rtype: dict
        """

        found, histogram, (mismatches, first_mismatch) = self.evaluate()

        # One verdict per (method, axiom), in the requested order
        verdicts = []
        applicable = self.applicable_axioms()
        for method in self.methods:
            for axiom in self.axioms:
                checked = self.total if axiom in applicable else 0
                counterexample = found.get((method, axiom))
                if counterexample is not None:
                    counterexample.classes = self.classes_of(counterexample)
                verdicts.append(AxiomVerdict(axiom, method, counterexample, checked))

        consistency = {"class_histogram": dict(sorted(histogram.items()))}
        if self.candidates == 4:
            consistency["expected_winner_mismatches"] = mismatches
            consistency["first_mismatch_index"] = first_mismatch

        self.verdicts = verdicts
        return {
            "space": self.space(),
            "results": [verdict.to_dict() for verdict in verdicts],
            "consistency": consistency,
            "spoiler_condorcet_implication": self.spoiler_condorcet_implication(verdicts),
            "majority_rule": self.majority_rule(),
            "bound_assumption": BOUND_ASSUMPTION
        }

    def evaluate(self):

        """Evaluate all chunks, in this process or in a pool of workers.

        :return: The first counterexample per (method, axiom) pair by enumeration index, the class histogram
            and the expected-winner mismatches.
        :rtype: tuple
        """

        found = {}
        histogram = Counter()
        mismatches, first_mismatch = 0, None

        # An empty method list gives an empty report
        if not self.methods:
            return found, histogram, (mismatches, first_mismatch)

        chunks = chunked(enumerate(self.assignments()), self.chunk_size)
        total_chunks = -(-self.total // self.chunk_size)
        worker = partial(audit_chunk, self.candidates, self.methods, self.applicable_axioms())

        def merge(result, done: int):
            nonlocal mismatches, first_mismatch
            chunk_found, chunk_histogram, (chunk_mismatches, chunk_first) = result

            # The earliest counterexample wins, whatever order chunks finish in
            for key, counterexample in chunk_found.items():
                if key not in found or counterexample.index < found[key].index:
                    found[key] = counterexample
            histogram.update(chunk_histogram)
            mismatches += chunk_mismatches
            if chunk_first is not None and (first_mismatch is None or chunk_first < first_mismatch):
                first_mismatch = chunk_first

            Logger.progress("Audited chunks", done, total_chunks, every=100)

        Logger.log(f"Auditing {self.total} tournaments of {self.candidates} candidates ({self.mode})")
        if self.workers == 1:
            for done, chunk in enumerate(chunks, start=1):
                merge(worker(frozenset(found), chunk), done)
        else:
            with ProcessPoolExecutor(max_workers=self.workers) as executor:
                results = executor.map(partial(worker, frozenset()), chunks)
                for done, result in enumerate(results, start=1):
                    merge(result, done)

        return found, histogram, (mismatches, first_mismatch)

    def classes_of(self, counterexample):

        """Classify the tournaments of a counterexample where a class is defined.

        :rtype: dict
        """

        classification_helper = ClassificationHelper()
        classes = {}
        for role, tournament in (("primary", counterexample.primary), ("secondary", counterexample.secondary)):
            if tournament is None or tournament.size not in (4, 5) or not tournament.is_uniquely_weighted():
                continue
            classes[role] = classification_helper.classify(tournament).label

        return classes

    def spoiler_condorcet_implication(self, verdicts: list):

        """Check that every method passing Rare Ties and Immunity to Spoilers passes the Condorcet Criterion.

        :param verdicts: The verdicts of the audit.
        :type verdicts: list

        :return: Per method whether it passes the first two axioms and the Condorcet Criterion, and whether
            the implication holds for all of them. Not applicable unless all three axioms were audited.
        :rtype: dict
        """

        required = ("RareTies", "ImmunitySpoilers", "CondorcetCriterion")
        if not all(axiom in self.applicable_axioms() for axiom in required):
            return {"applicable": False, "methods": {}, "implication_holds": None}

        holds = {(verdict.method, verdict.axiom): verdict.holds for verdict in verdicts}
        methods = {}
        for method in self.methods:
            premises = holds[(method, "RareTies")] and holds[(method, "ImmunitySpoilers")]
            methods[method] = {
                "rare_ties_and_immunity": premises,
                "condorcet_criterion": holds[(method, "CondorcetCriterion")]
            }

        return {
            "applicable": True,
            "methods": methods,
            "implication_holds": all(entry["condorcet_criterion"] for entry in methods.values()
                                     if entry["rare_ties_and_immunity"])
        }

    def majority_rule(self):

        """Check that every audited method elects the majority winner between two candidates.

        :return: Per method whether both orientations of a two candidate tournament elect the winner.
        :rtype: dict
        """

        margin = self.magnitudes[0]
        tournaments = (WeightedTournament(["A", "B"], [[0, margin], [-margin, 0]]),
                       WeightedTournament(["A", "B"], [[0, -margin], [margin, 0]]))

        return {method: all(get_method(method).winners(tournament) == frozenset((winner,))
                            for winner, tournament in enumerate(tournaments))
                for method in self.methods}
