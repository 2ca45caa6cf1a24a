"""Exception types shared across the package."""


class NotATree(ValueError):
    """The graph is not connected and acyclic."""


class Unreachable(ValueError):
    """Two vertices lie in different connected components."""


class TooLarge(ValueError):
    """Input exceeds the configured brute-force cap."""


class BadParams(ValueError):
    """Parameters outside the constructor's legal range."""


class MixedArity(ValueError):
    """Monomials over different variable counts were mixed."""


class IdealMismatch(ValueError):
    """The ideal does not match the graph it is claimed to come from."""


class NotANeighborhood(ValueError):
    """The monomial's support is not a closed neighborhood of the tree."""


class NotAGenerator(ValueError):
    """The vertex does not contribute a minimal generator."""


class NotAPartition(ValueError):
    """The generator sets do not partition the ideal's generators."""


class NotPrime(ValueError):
    """The field characteristic must be prime."""


class MixedDegrees(ValueError):
    """The operation requires all generators to share one degree."""


class ParseError(ValueError):
    """Malformed graph, ideal or order file."""
