from data_objects.TournamentClass import TournamentClass, LINEAR_ORDER, CONDORCET_WINNER_BOTTOM_CYCLE, \
    ASCENDING_TOP_CYCLE, DESCENDING_TOP_CYCLE, SL_FOUR_CYCLE, LS_FOUR_CYCLE, UNIQUE_COPELAND_WINNER
from data_objects.WeightedTournament import WeightedTournament
from functools import lru_cache
from helpers.GraphHelper import GraphHelper, REFERENCE_DIGRAPHS, digraph_from_edges

import exceptions as Exceptions


@lru_cache(maxsize=None)
def reference_roles(defeats: tuple):

    """Match a five candidate defeat pattern against the reference digraphs.

    There are only 1024 defeat patterns, so every one is matched at most once per process.

    :param defeats: For every pair of candidate indices (i, j) with i < j in order, whether i beats j.
    :type defeats: tuple

    :return: The class label and the (role, candidate index) pairs, None if no reference digraph matches.
    :rtype: tuple
    """

    pairs = [(i, j) for i in range(5) for j in range(i + 1, 5)]
    digraph = digraph_from_edges(list(range(5)), [(i, j) if beats else (j, i)
                                                  for (i, j), beats in zip(pairs, defeats)])

    graph_helper = GraphHelper()
    for label, reference in REFERENCE_DIGRAPHS.items():
        mapping = graph_helper.find_isomorphism(reference, digraph)
        if mapping is not None:
            return label, tuple((role, mapping[role]) for role in reference.nodes)

    return None


class ClassificationHelper:

    def __init__(self):

        """A helper class responsible for sorting uniquely-weighted tournaments into their named classes.

        :return: An instance of ClassificationHelper
        :rtype: ClassificationHelper
        """

        pass

    @staticmethod
    def check_tournament(tournament: WeightedTournament, size: int):

        """Check the size of a tournament and whether it is uniquely weighted.

        :raise UnsupportedCandidateCount: Raised if the size is wrong.
        :raise NotUniquelyWeighted: Raised if two margins share a magnitude or a margin is zero.
        """

        if tournament.size != size:
            raise Exceptions.UnsupportedCandidateCount(tournament.size, f"{size} candidates")
        if not tournament.is_uniquely_weighted():
            raise Exceptions.NotUniquelyWeighted

    def classify(self, tournament: WeightedTournament):

        """Classify a four or five candidate tournament.

        :param tournament: A uniquely-weighted tournament.
        :type tournament: WeightedTournament

        :raise UnsupportedCandidateCount: Raised for any other number of candidates.

        :rtype: TournamentClass
        """

        if tournament.size == 4:
            return self.classify4(tournament)
        if tournament.size == 5:
            return self.classify5(tournament)

        raise Exceptions.UnsupportedCandidateCount(tournament.size, "4 or 5 candidates")

    def classify4(self, tournament: WeightedTournament):

        """Sort a four candidate tournament into one of six classes by its Copeland scores and margins.

        The witness names the candidates playing the roles N, W, E and S. N is the candidate a method
        following the class structure selects, except in the LS four cycle where it is E.

        :param tournament: A uniquely-weighted tournament with four candidates.
        :type tournament: WeightedTournament

        :raise UnsupportedCandidateCount: Raised if the tournament doesn't have four candidates.
        :raise NotUniquelyWeighted: Raised if the tournament isn't uniquely weighted.

        :return: The class with its role witness.
        :rtype: TournamentClass
        """

        self.check_tournament(tournament, 4)

        m = tournament.matrix
        scores = tournament.copeland_scores()
        by_score = {}
        for i, score in enumerate(scores):
            by_score.setdefault(score, []).append(i)
        pattern = tuple(sorted(scores, reverse=True))

        def beaten_by(winner: int, among: list):
            return next(j for j in among if m[winner][j] > 0)

        if pattern == (3, 2, 1, 0):
            label = LINEAR_ORDER
            n, w, e, s = by_score[3][0], by_score[2][0], by_score[1][0], by_score[0][0]

        elif pattern == (3, 1, 1, 1):
            # A Condorcet winner above a three-cycle
            label = CONDORCET_WINNER_BOTTOM_CYCLE
            n = by_score[3][0]
            cycle = by_score[1]
            w = cycle[0]
            e = beaten_by(w, cycle)
            s = beaten_by(e, cycle)

        elif pattern == (2, 2, 2, 0):
            # A three-cycle above a Condorcet loser, W beats N by the smallest cycle margin
            s = by_score[0][0]
            cycle = by_score[2]
            edges = [(m[i][j], i, j) for i in cycle for j in cycle if m[i][j] > 0]
            _, w, n = min(edges)
            e = beaten_by(n, [j for j in cycle if j != w])
            label = ASCENDING_TOP_CYCLE if m[n][e] < m[e][w] else DESCENDING_TOP_CYCLE

        elif pattern == (2, 2, 1, 1):
            # N and E share the most wins and N beats E, W is the other candidate beating N
            first, second = by_score[2]
            n, e = (first, second) if m[first][second] > 0 else (second, first)
            w = next(j for j in by_score[1] if m[j][n] > 0)
            s = next(j for j in by_score[1] if j != w)
            label = SL_FOUR_CYCLE if m[w][n] < m[n][e] else LS_FOUR_CYCLE

        else:
            raise Exceptions.UnclassifiableTournament

        candidates = tournament.candidates
        return TournamentClass(label, {"N": candidates[n], "W": candidates[w], "E": candidates[e], "S": candidates[s]})

    def classify5(self, tournament: WeightedTournament):

        """Sort a five candidate tournament by the isomorphism class of its defeat digraph.

        Tournaments with a unique Copeland winner form one class. The remaining ones are isomorphic to
        exactly one of five reference digraphs, the witness maps every reference role to a candidate.

        :param tournament: A uniquely-weighted tournament with five candidates.
        :type tournament: WeightedTournament

        :raise UnsupportedCandidateCount: Raised if the tournament doesn't have five candidates.
        :raise NotUniquelyWeighted: Raised if the tournament isn't uniquely weighted.
        :raise UnclassifiableTournament: Raised if no reference digraph matches.

        :return: The class with its role witness.
        :rtype: TournamentClass
        """

        self.check_tournament(tournament, 5)

        winners = tournament.copeland_winner_indices()
        if len(winners) == 1:
            return TournamentClass(UNIQUE_COPELAND_WINNER, {"winner": tournament.candidates[winners[0]]})

        m = tournament.matrix
        match = reference_roles(tuple(m[i][j] > 0 for i in range(5) for j in range(i + 1, 5)))
        if match is None:
            raise Exceptions.UnclassifiableTournament

        label, roles = match
        return TournamentClass(label, {role: tournament.candidates[index] for role, index in roles})

    def expected_winner(self, tournament_class: TournamentClass, tournament: WeightedTournament):

        """Get the winner the four candidate class structure prescribes.

        :param tournament_class: The class of the tournament, as returned by classify4.
        :type tournament_class: TournamentClass
        :param tournament: The classified tournament.
        :type tournament: WeightedTournament

        :raise ClassMismatch: Raised if the tournament belongs to another class.

        :return: E for the LS four cycle, N for every other class.
        :rtype: Candidate
        """

        actual = self.classify4(tournament)
        if actual.label != tournament_class.label:
            raise Exceptions.ClassMismatch(tournament_class.label, actual.label)

        return actual.role("E") if actual.label == LS_FOUR_CYCLE else actual.role("N")
