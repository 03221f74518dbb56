from data_objects.TournamentClass import TOP_TOP_CYCLE, TOP_FOUR_CYCLE, MID_CYCLE_ORDER, GYROSCOPE, PENTAGRAM
from data_objects.WeightedTournament import WeightedTournament
from exceptions import UnsupportedCandidateCount
from networkx.algorithms.isomorphism import DiGraphMatcher

import networkx as nx


def digraph_from_edges(nodes: list, edges: list):

    """Build a defeat digraph, an edge (A, B) meaning that A beats B.

    :param nodes: The vertices in order.
    :type nodes: list
    :param edges: The defeats.
    :type edges: list

    :rtype: networkx.DiGraph
    """

    digraph = nx.DiGraph()
    digraph.add_nodes_from(nodes)
    digraph.add_edges_from(edges)
    return digraph


def _beats_all(winners: list, losers: list):

    return [(winner, loser) for winner in winners for loser in losers]


# The five candidate tournaments without a unique Copeland winner, with role names as vertices
REFERENCE_DIGRAPHS = {
    # A top three-cycle above Z, everyone above Y
    TOP_TOP_CYCLE: digraph_from_edges(
        ["X1", "X2", "X3", "Z", "Y"],
        [("X1", "X2"), ("X2", "X3"), ("X3", "X1"), ("Z", "Y")] + _beats_all(["X1", "X2", "X3"], ["Z", "Y"])),

    # A four-cycle X1 > X2 > Z2 > X1 with chords X1 > Z1 > Z2 and X2 > Z1, everyone above Y
    TOP_FOUR_CYCLE: digraph_from_edges(
        ["X1", "X2", "Z1", "Z2", "Y"],
        [("X1", "X2"), ("X1", "Z1"), ("X2", "Z1"), ("X2", "Z2"), ("Z1", "Z2"), ("Z2", "X1")]
        + _beats_all(["X1", "X2", "Z1", "Z2"], ["Y"])),

    # The order X > Z > Y > V, V beats U and U beats X, Z and Y
    MID_CYCLE_ORDER: digraph_from_edges(
        ["X", "Z", "Y", "V", "U"],
        [("X", "Z"), ("X", "Y"), ("Z", "Y"), ("V", "U")]
        + _beats_all(["X", "Z", "Y"], ["V"]) + _beats_all(["U"], ["X", "Z", "Y"])),

    # Two winners X and P with P > X, Y > V > U and U > Y, U > P
    GYROSCOPE: digraph_from_edges(
        ["X", "P", "U", "Y", "V"],
        [("P", "X"), ("X", "U"), ("U", "P"), ("U", "Y"), ("Y", "V"), ("V", "U")]
        + _beats_all(["X", "P"], ["Y", "V"])),

    # Every vertex beats the two labels preceding it cyclically, a beats e and d
    PENTAGRAM: digraph_from_edges(
        ["a", "b", "c", "d", "e"],
        [("a", "e"), ("a", "d"), ("b", "a"), ("b", "e"), ("c", "b"),
         ("c", "a"), ("d", "c"), ("d", "b"), ("e", "d"), ("e", "c")])
}


class GraphHelper:

    maximum_size: int = 7

    def __init__(self):

        """A helper class responsible for defeat digraphs and their isomorphisms using networkx.

        :return: An instance of GraphHelper
        :rtype: GraphHelper
        """

        pass

    def to_digraph(self, tournament: WeightedTournament):

        """Get the defeat digraph of a tournament, every edge weighted with its margin.

        :param tournament: The tournament.
        :type tournament: WeightedTournament

        :return: The digraph with the candidate labels as vertices.
        :rtype: networkx.DiGraph
        """

        digraph = nx.DiGraph()
        digraph.add_nodes_from(tournament.labels)
        for i, row in enumerate(tournament.matrix):
            for j, margin in enumerate(row):
                if margin > 0:
                    digraph.add_edge(tournament.labels[i], tournament.labels[j], margin=margin)

        return digraph

    @staticmethod
    def score_sequence(digraph: nx.DiGraph):

        return tuple(sorted((degree for _, degree in digraph.out_degree()), reverse=True))

    def find_isomorphism(self, first: nx.DiGraph, second: nx.DiGraph):

        """Find a defeat-preserving bijection between the vertices of two digraphs.

        :param first: The digraph to map from.
        :type first: networkx.DiGraph
        :param second: The digraph to map to.
        :type second: networkx.DiGraph

        :return: The vertex of the second digraph for every vertex of the first, None if they aren't isomorphic.
        :rtype: dict
        """

        # Different score sequences rule out an isomorphism
        if self.score_sequence(first) != self.score_sequence(second):
            return None

        matcher = DiGraphMatcher(first, second)
        if not matcher.is_isomorphic():
            return None

        return dict(matcher.mapping)

    def tournaments_isomorphic(self, first: WeightedTournament, second: WeightedTournament):

        """Decide whether two tournaments have isomorphic defeat digraphs.

        :param first: The first tournament.
        :type first: WeightedTournament
        :param second: The second tournament.
        :type second: WeightedTournament

        :raise UnsupportedCandidateCount: Raised if the sizes differ or exceed seven candidates.

        :return: The label in the second tournament for every label of the first, None if not isomorphic.
        :rtype: dict
        """

        if first.size != second.size:
            raise UnsupportedCandidateCount(second.size, f"{first.size} candidates, like the first tournament")
        if first.size > self.maximum_size:
            raise UnsupportedCandidateCount(first.size, f"at most {self.maximum_size}")

        return self.find_isomorphism(self.to_digraph(first), self.to_digraph(second))
