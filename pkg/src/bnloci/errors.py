"""Exception types shared across the package."""


class SlopeOutOfRange(ValueError):
    """Slope d/n is outside the range where the section bound applies."""


class InvalidQuotientRank(ValueError):
    """k >= n, so the quotient bundle would have rank <= 0."""


class ThresholdViolated(ValueError):
    """n > d + (n-k)g: no extensions with k independent classes exist."""


class OutOfStrip(ValueError):
    """Degree is outside the slope strip this operation covers."""


class RankOne(ValueError):
    """Rank-1 queries belong to classical line-bundle theory, not here."""


class EmptyLocus(ValueError):
    """The locus is empty, so the requested derived data does not exist."""


class InvalidK(ValueError):
    """Section count k is outside the admissible range for this operation."""
