from data_objects.WeightedTournament import WeightedTournament
from helpers.GraphHelper import REFERENCE_DIGRAPHS
from itertools import permutations, product
from math import factorial

import exceptions as Exceptions
import numpy as np

EXHAUSTIVE = "exhaustive"
SAMPLE = "sample"
MINIMUM_CANDIDATES = 2
MAXIMUM_CANDIDATES = 5
MAXIMUM_EXHAUSTIVE_CANDIDATES = 4


def labels(size: int):

    return [chr(ord("A") + i) for i in range(size)]


def pairs(size: int):

    """Get the unordered pairs of candidate indices in enumeration order.

    :rtype: list
    """

    return [(i, j) for i in range(size) for j in range(i + 1, size)]


def default_magnitudes(size: int):

    """Get the even magnitudes 2, 4, ... with one value per pair of candidates.

    :rtype: list
    """

    return [2 * (i + 1) for i in range(len(pairs(size)))]


def validate_magnitudes(size: int, magnitudes: list, mode: str):

    """Check an audit space before enumerating it.

    :param size: The number of candidates.
    :type size: int
    :param magnitudes: The magnitudes to assign to the pairs.
    :type magnitudes: list
    :param mode: "exhaustive" or "sample".
    :type mode: str

    :raise UnsupportedAuditMode: Raised for an unknown mode.
    :raise UnsupportedCandidateCount: Raised if the size is outside 2 to 5, or above 4 in an exhaustive audit.
    :raise InvalidMagnitudes: Raised if the magnitudes don't fit the mode.
    """

    if mode not in (EXHAUSTIVE, SAMPLE):
        raise Exceptions.UnsupportedAuditMode(mode)
    if not MINIMUM_CANDIDATES <= size <= MAXIMUM_CANDIDATES:
        raise Exceptions.UnsupportedCandidateCount(size, f"{MINIMUM_CANDIDATES} to {MAXIMUM_CANDIDATES} candidates")
    if mode == EXHAUSTIVE and size > MAXIMUM_EXHAUSTIVE_CANDIDATES:
        raise Exceptions.UnsupportedCandidateCount(size, f"at most {MAXIMUM_EXHAUSTIVE_CANDIDATES} candidates in an "
                                                         f"exhaustive audit, five candidates are sampled")

    # Check the values themselves
    if any(isinstance(value, bool) or not isinstance(value, int) or value <= 0 for value in magnitudes):
        raise Exceptions.InvalidMagnitudes("all magnitudes must be positive integers")
    if len(set(magnitudes)) != len(magnitudes):
        raise Exceptions.InvalidMagnitudes("all magnitudes must be distinct")

    # Check the number of values against the number of pairs
    count = len(pairs(size))
    if mode == EXHAUSTIVE and len(magnitudes) != count:
        raise Exceptions.InvalidMagnitudes(f"an exhaustive audit of {size} candidates needs exactly {count} magnitudes")
    if mode == SAMPLE and len(magnitudes) < count:
        raise Exceptions.InvalidMagnitudes(f"a sample of {size} candidates needs at least {count} magnitudes")


def count_assignments(size: int, magnitudes: list):

    """Get the number of uniquely-weighted tournaments an exhaustive audit visits.

    :rtype: int
    """

    count = len(pairs(size))
    return factorial(len(magnitudes)) // factorial(len(magnitudes) - count) * 2 ** count


def enumerate_assignments(size: int, magnitudes: list):

    """Generate every assignment of the magnitudes to the pairs, with every orientation.

    :param size: The number of candidates.
    :type size: int
    :param magnitudes: Distinct positive magnitudes, one per pair.
    :type magnitudes: list

    :return: Signed margins m(i, j), aligned with pairs(size).
    :rtype: generator
    """

    count = len(pairs(size))
    for ordering in permutations(sorted(magnitudes), count):
        for signs in product((1, -1), repeat=count):
            yield tuple(sign * magnitude for sign, magnitude in zip(signs, ordering))


def tournament_from_assignment(size: int, assignment: tuple):

    """Build the tournament with the signed margins of an assignment.

    :rtype: WeightedTournament
    """

    rows = [[0] * size for _ in range(size)]
    for (i, j), value in zip(pairs(size), assignment):
        rows[i][j] = value
        rows[j][i] = -value

    return WeightedTournament(labels(size), rows)


def sample_assignments(size: int, count: int, seed: int, magnitudes: list, stratum_size: int = 0):

    """Draw random uniquely-weighted tournaments, reproducibly from a seed.

    For five candidates the first draws are stratified: every class without a unique Copeland winner gets
    stratum_size tournaments, with random roles and magnitudes. The remaining draws are uniform.

    :param size: The number of candidates.
    :type size: int
    :param count: The total number of draws.
    :type count: int
    :param seed: The seed of the numpy generator.
    :type seed: int
    :param magnitudes: The pool the magnitudes are drawn from without replacement.
    :type magnitudes: list
    :param stratum_size: The number of draws per rare class.
    :type stratum_size: int

    :return: Signed margins m(i, j), aligned with pairs(size).
    :rtype: generator
    """

    rng = np.random.default_rng(seed)
    pool = np.array(sorted(magnitudes), dtype=np.int64)
    pair_list = pairs(size)
    drawn = 0

    # Stratified draws from the reference digraphs
    if size == MAXIMUM_CANDIDATES and stratum_size > 0:
        for reference in REFERENCE_DIGRAPHS.values():
            roles = list(reference.nodes)
            for _ in range(stratum_size):
                if drawn == count:
                    return
                order = rng.permutation(size)
                seats = {roles[position]: int(order[position]) for position in range(size)}
                beats = {(seats[winner], seats[loser]) for winner, loser in reference.edges}
                values = rng.choice(pool, size=len(pair_list), replace=False)
                yield tuple(int(value) if (i, j) in beats else -int(value)
                            for (i, j), value in zip(pair_list, values))
                drawn += 1

    # Uniform draws
    while drawn < count:
        values = rng.choice(pool, size=len(pair_list), replace=False)
        signs = rng.choice(np.array([1, -1]), size=len(pair_list))
        yield tuple(int(sign * value) for sign, value in zip(signs, values))
        drawn += 1
