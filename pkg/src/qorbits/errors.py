"""Domain errors raised by the toolkit."""


class QOrbitsError(Exception):
    """Base class for every domain error raised by this package."""


class InvalidType(QOrbitsError):
    """Cartan family/rank combination outside the finite classification."""


class UnrecognizedDiagram(QOrbitsError):
    """A connected Cartan matrix matched no finite type (closure bug)."""


class NotAnAutomorphism(QOrbitsError):
    """A base permutation does not preserve the Cartan matrix."""


class RankBoundExceeded(QOrbitsError):
    """A brute-force enumeration was requested above its configured rank bound."""


class SingularSystem(QOrbitsError):
    """A coweight solve hit a singular Cartan system (corrupted subsystem)."""


class NotQDistinguished(QOrbitsError):
    """Pair construction failed; `step` records which check broke.

    step is one of "bad base value", "rank deficit", "non-distinguished datum".
    """

    def __init__(self, message: str, *, step: str, dim_q: int, dim_one: int):
        super().__init__(message)
        self.step = step
        self.dim_q = dim_q
        self.dim_one = dim_one


class NonTrivialCompactPart(QOrbitsError):
    """An operation requiring a purely hyperbolic element got compact angles."""


class InvalidSetting(QOrbitsError):
    """A pole-ledger setting violates its structural invariants."""


class UnknownLine(QOrbitsError):
    """A relative-root line label is not part of the setting."""


class IllegalDifference(QOrbitsError):
    """A line dimension difference outside {-2, 1, 0} (malformed input data)."""


class BoundViolated(QOrbitsError):
    """The centralizer rank exceeds the parabolic rank (invalid setting)."""


class MalformedSkeleton(QOrbitsError):
    """A parameter skeleton with structurally inconsistent fields."""


class NotHyperbolicCenter(QOrbitsError):
    """The Frobenius twist is not carried by the central hyperbolic directions."""


class NonDominantUnresolvable(QOrbitsError):
    """A twist pairs to zero against a direction outside the tempered block."""
