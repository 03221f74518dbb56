from data_objects.Candidate import Candidate


class LossProfile:
    """
    The head-to-head losses of one candidate, sorted from the smallest to the largest margin.

    Attributes:
        owner (Candidate): The candidate who suffers the losses.
        losses (tuple): Pairs of (adversary, margin), every margin strictly positive.
    """

    owner: Candidate = None
    losses: tuple = None

    def __init__(self, owner: Candidate, losses: list):

        self.owner = owner
        self.losses = tuple(sorted(losses, key=lambda loss: (loss[1], loss[0].index)))

    @property
    def count(self):

        return len(self.losses)

    @property
    def worst_loss(self):
        """
        The largest losing margin, 0 when the candidate loses to no one.

        Returns:
            int: The worst loss.
        """

        return self.losses[-1][1] if self.losses else 0

    @property
    def smallest_loss(self):
        """
        The smallest losing margin, 0 when the candidate loses to no one.

        Returns:
            int: The smallest loss.
        """

        return self.losses[0][1] if self.losses else 0

    @property
    def adversaries(self):

        return tuple(adversary for adversary, _ in self.losses)

    def __iter__(self):

        return iter(self.losses)

    def __len__(self):

        return len(self.losses)

    def to_dict(self):

        """Get the loss profile as a dictionary.

        :return: The owner, the losses and the worst and smallest loss.
        :rtype: dict
        """

        return {
            "owner": self.owner.label,
            "losses": [[adversary.label, margin] for adversary, margin in self.losses],
            "worst_loss": self.worst_loss,
            "smallest_loss": self.smallest_loss
        }
