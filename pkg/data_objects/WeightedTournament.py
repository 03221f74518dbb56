from data_objects.Candidate import Candidate
from data_objects.LossProfile import LossProfile

import exceptions as Exceptions
import numpy as np


def build_tournament(labels: list, entries: list):

    """Construct a weighted tournament from candidate labels and margin entries.

    :param labels: The candidate labels in their canonical order.
    :type labels: list
    :param entries: Triples (A, B, v) meaning m(A,B) = v. Unspecified pairs default to 0.
    :type entries: list

    :raise EmptyCandidateList: Raised if there are no labels.
    :raise DuplicateCandidate: Raised if a label is listed twice.
    :raise UnknownCandidate: Raised if an entry names a label that isn't listed.
    :raise SelfPair: Raised if an entry gives a candidate a nonzero margin against itself.
    :raise ConflictingMargin: Raised if a pair is given twice with different margins.

    :return: The constructed tournament.
    :rtype: WeightedTournament
    """

    index = index_labels(labels)
    size = len(labels)
    rows = [[0] * size for _ in range(size)]
    given = {}

    for first, second, value in entries:
        # Check the candidates of the entry
        for label in (first, second):
            if label not in index:
                raise Exceptions.UnknownCandidate(label)
        if first == second:
            if value != 0:
                raise Exceptions.SelfPair(first)
            continue

        # Check for a conflicting entry in either orientation
        i, j = index[first], index[second]
        if (i, j) in given and given[(i, j)] != value:
            raise Exceptions.ConflictingMargin(first, second)
        given[(i, j)] = value
        given[(j, i)] = -value

        rows[i][j] = value
        rows[j][i] = -value

    return WeightedTournament(labels, rows)


def from_matrix(labels: list, matrix):

    """Construct a weighted tournament from a square margin matrix.

    :param labels: The candidate labels.
    :type labels: list
    :param matrix: A k by k integer matrix, nested sequences or a numpy array.
    :type matrix: list or numpy.ndarray

    :raise ConflictingMargin: Raised if the matrix isn't antisymmetric.

    :return: The constructed tournament.
    :rtype: WeightedTournament
    """

    array = np.asarray(matrix, dtype=np.int64)
    size = len(labels)
    if array.shape != (size, size):
        raise Exceptions.NotATournament

    # Antisymmetry, which also forces a zero diagonal
    if not np.array_equal(array, -array.T):
        rows, columns = np.nonzero(array != -array.T)
        raise Exceptions.ConflictingMargin(labels[rows[0]], labels[columns[0]])

    return WeightedTournament(labels, array.tolist())


def from_dict(data: dict):

    """Construct a weighted tournament from a dictionary.

    :param data: The input data, with "candidates" and "margins".
    :type data: dict

    :return: The constructed tournament.
    :rtype: WeightedTournament
    """

    return from_matrix(data["candidates"], data["margins"])


def index_labels(labels: list):

    """Map every label to its position.

    :param labels: The candidate labels.
    :type labels: list

    :raise EmptyCandidateList: Raised if there are no labels.
    :raise DuplicateCandidate: Raised if a label is listed twice.

    :return: The position of every label.
    :rtype: dict
    """

    if len(labels) == 0:
        raise Exceptions.EmptyCandidateList

    index = {}
    for label in labels:
        if label in index:
            raise Exceptions.DuplicateCandidate(label)
        index[label] = len(index)

    return index


class WeightedTournament:
    """
    A set of candidates together with an antisymmetric integer margin function.

    The matrix entry [i][j] is the margin of candidate i over candidate j in votes.
    Instances are immutable, every perturbation returns a new tournament.
    Operations accept a candidate as a label, an index or a Candidate.

    Attributes:
        labels (tuple): The candidate labels in canonical order.
        candidates (tuple): The candidates in canonical order.
        matrix (tuple): The margin matrix as a tuple of rows.
        size (int): The number of candidates.
    """

    labels: tuple = None
    candidates: tuple = None
    matrix: tuple = None
    size: int = None

    def __init__(self, labels: list, rows: list):

        """Initialises a weighted tournament.

        :param labels: The candidate labels.
        :type labels: list
        :param rows: The margin matrix, assumed to be antisymmetric.
        :type rows: list

        :return: An instance of a weighted tournament.
        :rtype: WeightedTournament
        """

        self._assign(tuple(labels), index_labels(labels), tuple(tuple(int(v) for v in row) for row in rows))

    def _assign(self, labels: tuple, index: dict, matrix: tuple, candidates: tuple = None):

        self.labels = labels
        self._index = index
        self.matrix = matrix
        self.size = len(labels)
        self.candidates = candidates or tuple(Candidate(i, label) for i, label in enumerate(labels))
        self._copeland_scores = None

    def derive(self, rows: list):

        # Same candidates, new margins, no validation
        tournament = WeightedTournament.__new__(WeightedTournament)
        tournament._assign(self.labels, self._index, tuple(tuple(row) for row in rows), self.candidates)
        return tournament

    # Candidates
    def index_of(self, candidate):

        """Resolve a candidate given as label, index or Candidate.

        :param candidate: The candidate to resolve.
        :type candidate: str or int or Candidate

        :raise UnknownCandidate: Raised if the candidate isn't part of the tournament.

        :return: The index of the candidate.
        :rtype: int
        """

        if isinstance(candidate, Candidate):
            if candidate.index < self.size and self.labels[candidate.index] == candidate.label:
                return candidate.index
            raise Exceptions.UnknownCandidate(candidate.label)

        if isinstance(candidate, (int, np.integer)) and not isinstance(candidate, bool):
            if 0 <= candidate < self.size:
                return int(candidate)
            raise Exceptions.UnknownCandidate(candidate)

        if candidate in self._index:
            return self._index[candidate]
        raise Exceptions.UnknownCandidate(candidate)

    def candidate(self, candidate):

        return self.candidates[self.index_of(candidate)]

    def _pair(self, first, second):

        i, j = self.index_of(first), self.index_of(second)
        if i == j:
            raise Exceptions.IdenticalCandidates(self.labels[i])
        return i, j

    # Margins
    def margin(self, first, second):

        """Get the margin m(A,B) of the first candidate over the second.

        :return: The margin in votes, 0 for a candidate against itself.
        :rtype: int
        """

        return self.matrix[self.index_of(first)][self.index_of(second)]

    def magnitudes(self):

        """Get the magnitudes |m(A,B)| of all unordered pairs of distinct candidates.

        :return: The magnitudes in pair order.
        :rtype: list
        """

        return [abs(self.matrix[i][j]) for i in range(self.size) for j in range(i + 1, self.size)]

    def max_magnitude(self):

        return max(self.magnitudes(), default=0)

    def is_zero_free(self):

        return all(magnitude != 0 for magnitude in self.magnitudes())

    def is_uniquely_weighted(self):

        """Check whether all margins are nonzero and have pairwise distinct magnitudes.

        :return: Whether the tournament is uniquely weighted.
        :rtype: bool
        """

        magnitudes = self.magnitudes()
        return 0 not in magnitudes and len(set(magnitudes)) == len(magnitudes)

    def symmetric_borda(self, candidate):

        """Get the sum of the candidate's margins against all candidates.

        :return: The symmetric Borda score.
        :rtype: int
        """

        return sum(self.matrix[self.index_of(candidate)])

    # Wins and losses
    def copeland_scores(self):

        """Get the number of head-to-head wins of every candidate, by index.

        :return: The Copeland scores.
        :rtype: list
        """

        if self._copeland_scores is None:
            self._copeland_scores = [sum(1 for value in row if value > 0) for row in self.matrix]
        return self._copeland_scores

    def copeland_score(self, candidate):

        return self.copeland_scores()[self.index_of(candidate)]

    def wins(self, candidate):

        """Get the candidates beaten by the given candidate.

        :return: The beaten candidates, sorted by index.
        :rtype: tuple
        """

        row = self.matrix[self.index_of(candidate)]
        return tuple(self.candidates[j] for j, value in enumerate(row) if value > 0)

    def copeland_winner_indices(self):

        scores = self.copeland_scores()
        best = max(scores)
        return [i for i, score in enumerate(scores) if score == best]

    def copeland_winners(self):

        """Get the candidates with the most head-to-head wins.

        :return: The winners sorted by index and their number of wins.
        :rtype: tuple
        """

        scores = self.copeland_scores()
        return tuple(self.candidates[i] for i in self.copeland_winner_indices()), max(scores)

    def condorcet_winner_index(self):

        for i, score in enumerate(self.copeland_scores()):
            if score == self.size - 1:
                return i
        return None

    def condorcet_winner(self):

        """Get the candidate who beats every other candidate head-to-head.

        :return: The Condorcet winner, None if there is none.
        :rtype: Candidate
        """

        index = self.condorcet_winner_index()
        return None if index is None else self.candidates[index]

    def condorcet_loser(self):

        """Get the candidate who loses to every other candidate head-to-head.

        :return: The Condorcet loser, None if there is none.
        :rtype: Candidate
        """

        for i in range(self.size):
            if all(self.matrix[j][i] > 0 for j in range(self.size) if j != i):
                return self.candidates[i]
        return None

    def losses_of(self, index: int):

        # Positive incoming margins of one candidate, by index
        return [self.matrix[j][index] for j in range(self.size) if self.matrix[j][index] > 0]

    def worst_loss_of(self, index: int):

        return max(self.losses_of(index), default=0)

    def smallest_loss_of(self, index: int):

        return min(self.losses_of(index), default=0)

    def loss_profile(self, candidate):

        """Get the head-to-head losses of a candidate.

        :param candidate: The candidate whose losses are collected.
        :type candidate: str or int or Candidate

        :return: The losses sorted by margin.
        :rtype: LossProfile
        """

        index = self.index_of(candidate)
        losses = [(self.candidates[j], self.matrix[j][index])
                  for j in range(self.size) if self.matrix[j][index] > 0]
        return LossProfile(self.candidates[index], losses)

    # Derived relations
    def dominates_in_wins(self, first, second):

        """Check whether A beats B and beats everyone B beats by at least as much as B does.

        :raise IdenticalCandidates: Raised if A and B are the same candidate.

        :rtype: bool
        """

        a, b = self._pair(first, second)
        m = self.matrix
        if m[a][b] <= 0:
            return False
        return all(m[a][x] >= m[b][x] for x in range(self.size) if x not in (a, b) and m[b][x] > 0)

    def covers(self, first, second):

        """Check whether A beats B and beats everyone B beats.

        :raise IdenticalCandidates: Raised if A and B are the same candidate.

        :rtype: bool
        """

        a, b = self._pair(first, second)
        m = self.matrix
        if m[a][b] <= 0:
            return False
        return all(m[a][x] > 0 for x in range(self.size) if x not in (a, b) and m[b][x] > 0)

    def m_covers(self, first, second):

        """Check whether A beats B and has a margin at least as large as B's against every third candidate.

        :raise IdenticalCandidates: Raised if A and B are the same candidate.

        :rtype: bool
        """

        a, b = self._pair(first, second)
        m = self.matrix
        if m[a][b] <= 0:
            return False
        return all(m[a][x] >= m[b][x] for x in range(self.size) if x not in (a, b))

    def uncovered_indices(self):

        return [b for b in range(self.size)
                if not any(self.covers(a, b) for a in range(self.size) if a != b)]

    def uncovered_set(self):

        """Get the candidates that no other candidate covers.

        :return: The uncovered candidates, sorted by index.
        :rtype: tuple
        """

        return tuple(self.candidates[i] for i in self.uncovered_indices())

    # Copeland thresholds
    def _unique_copeland_after(self, index: int, changes: dict):

        # Copeland uniqueness of one candidate after adding changes[j] to m(index, j)
        m = self.matrix
        scores = list(self.copeland_scores())
        for j, amount in changes.items():
            before = m[index][j]
            after = before + amount
            if before <= 0 < after:
                scores[index] += 1
            if before < 0 <= after:
                scores[j] -= 1
        own = scores[index]
        return all(score < own for j, score in enumerate(scores) if j != index)

    def copeland_distance_of(self, index: int):

        """Get the least n such that improving every margin of a candidate by n makes it the unique Copeland winner.

        :param index: The index of the candidate.
        :type index: int

        :return: The least such n, 0 for a candidate that already is the unique Copeland winner.
        :rtype: int
        """

        m = self.matrix
        others = [j for j in range(self.size) if j != index]

        # Outcomes only change where a margin reaches zero or turns positive
        thresholds = {0}
        for j in others:
            if m[j][index] >= 0:
                thresholds.update((m[j][index], m[j][index] + 1))

        for n in sorted(thresholds):
            if self._unique_copeland_after(index, {j: n for j in others}):
                return n

        # Beating everyone makes a unique Copeland winner
        return max(thresholds)

    def single_copeland_threshold_of(self, index: int):

        """Get the least n such that improving one margin of a candidate by n makes it the unique Copeland winner.

        :param index: The index of the candidate.
        :type index: int

        :return: The least such n and the opponent of the improved margin, (None, None) if no single
            improvement suffices. The opponent is None when n is 0.
        :rtype: tuple
        """

        if self._unique_copeland_after(index, {}):
            return 0, None

        m = self.matrix
        best = (None, None)
        for j in range(self.size):
            if j == index or m[index][j] > 0:
                continue

            # A tie takes the win away from j, one more vote turns it into a win
            for n in (-m[index][j], -m[index][j] + 1):
                if n > 0 and self._unique_copeland_after(index, {j: n}):
                    if best[0] is None or n < best[0]:
                        best = (n, j)
                    break

        return best

    # Perturbations
    def improve_margin(self, first, second, amount: int):

        """Improve the margin of A over X by n, hence m(X,A) decreases by n.

        :raise NegativeImprovement: Raised if n is negative.
        :raise IdenticalCandidates: Raised if A and X are the same candidate.

        :return: The perturbed tournament.
        :rtype: WeightedTournament
        """

        if amount < 0:
            raise Exceptions.NegativeImprovement(amount)
        a, x = self._pair(first, second)

        rows = [list(row) for row in self.matrix]
        rows[a][x] += amount
        rows[x][a] -= amount
        return self.derive(rows)

    def improve_all_margins(self, candidate, amount: int):

        """Improve the margin of B over every other candidate by n.

        :raise NegativeImprovement: Raised if n is negative.

        :return: The perturbed tournament.
        :rtype: WeightedTournament
        """

        if amount < 0:
            raise Exceptions.NegativeImprovement(amount)
        b = self.index_of(candidate)

        rows = [list(row) for row in self.matrix]
        for v in range(self.size):
            if v != b:
                rows[b][v] += amount
                rows[v][b] -= amount
        return self.derive(rows)

    def with_margin(self, first, second, value: int):

        """Replace the margin of A over B by a new value, keeping all other margins.

        :raise IdenticalCandidates: Raised if A and B are the same candidate.

        :return: The changed tournament.
        :rtype: WeightedTournament
        """

        a, b = self._pair(first, second)

        rows = [list(row) for row in self.matrix]
        rows[a][b] = value
        rows[b][a] = -value
        return self.derive(rows)

    def remove_candidate(self, candidate):

        """Restrict the tournament to all candidates but one.

        :raise EmptyTournament: Raised if the candidate is the only one.

        :return: The restricted tournament.
        :rtype: WeightedTournament
        """

        removed = self.index_of(candidate)
        if self.size < 2:
            raise Exceptions.EmptyTournament

        kept = [i for i in range(self.size) if i != removed]
        return WeightedTournament([self.labels[i] for i in kept],
                                  [[self.matrix[i][j] for j in kept] for i in kept])

    def add_candidate(self, label: str, margins: dict):

        """Extend the tournament with a new last candidate.

        :param label: The label of the new candidate.
        :type label: str
        :param margins: The margins of the new candidate over existing candidates by label, missing ones are 0.
        :type margins: dict

        :return: The extended tournament.
        :rtype: WeightedTournament
        """

        for other in margins:
            self.index_of(other)

        row = [margins.get(other, 0) for other in self.labels]
        rows = [list(existing) + [-row[i]] for i, existing in enumerate(self.matrix)]
        rows.append(row + [0])
        return WeightedTournament(list(self.labels) + [label], rows)

    def relabel(self, mapping: dict):

        """Rename candidates, keeping their order and margins.

        :param mapping: New labels by old label, unmapped labels are kept.
        :type mapping: dict

        :rtype: WeightedTournament
        """

        return WeightedTournament([mapping.get(label, label) for label in self.labels], self.matrix)

    def permute(self, order: list):

        """Reorder the candidates.

        :param order: All candidates in their new order.
        :type order: list

        :rtype: WeightedTournament
        """

        indices = [self.index_of(candidate) for candidate in order]
        if sorted(indices) != list(range(self.size)):
            raise Exceptions.NotATournament

        return WeightedTournament([self.labels[i] for i in indices],
                                  [[self.matrix[i][j] for j in indices] for i in indices])

    # Output
    def to_matrix(self):

        return np.array(self.matrix, dtype=np.int64)

    def to_dict(self):

        """Get the tournament as a dictionary.

        :return: The candidate labels and the margin matrix.
        :rtype: dict
        """

        return {
            "candidates": list(self.labels),
            "margins": [list(row) for row in self.matrix]
        }

    def to_text(self):

        """Write the tournament in the tournament file format.

        Every nonzero margin is written once, in the orientation of the winner.

        :return: The file contents.
        :rtype: str
        """

        lines = ["candidates: " + ",".join(self.labels)]
        for i in range(self.size):
            for j in range(i + 1, self.size):
                value = self.matrix[i][j]
                if value > 0:
                    lines.append(f"{self.labels[i]} {self.labels[j]} {value}")
                elif value < 0:
                    lines.append(f"{self.labels[j]} {self.labels[i]} {-value}")

        return "\n".join(lines) + "\n"

    def __eq__(self, other):

        return isinstance(other, WeightedTournament) and self.labels == other.labels and self.matrix == other.matrix

    def __hash__(self):

        return hash((self.labels, self.matrix))

    def __repr__(self):

        return f"WeightedTournament({list(self.labels)}, {[list(row) for row in self.matrix]})"
