"""Exception hierarchy shared across the package."""


class GroupDiffError(Exception):
    """Base class for all groupdiff errors."""


class SpecSyntaxError(GroupDiffError):
    """Group-spec text does not conform to the grammar.

    Carries the byte offset of the first offending character.
    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class SpecRangeError(GroupDiffError):
    """Group-spec parameter outside the supported bounds (e.g. "D2")."""


class CapacityError(GroupDiffError):
    """Requested group order exceeds the configured maximum."""


class ValidationError(GroupDiffError):
    """Cayley table violates a group law.

    ``law`` names the violated law; ``witness`` is a tuple of element
    indices demonstrating the violation.
    """

    def __init__(self, law: str, witness: tuple, message: str | None = None):
        super().__init__(message or f"{law} violated at {witness}")
        self.law = law
        self.witness = witness


class NotNilpotentError(GroupDiffError):
    """Operation requires a nilpotent group."""


class DomainError(GroupDiffError):
    """Input outside the mathematical domain of the operation."""


class IdentityError(GroupDiffError):
    """The identity element is not accepted here (always isolated)."""


class VertexError(GroupDiffError):
    """Referenced vertex is not part of the graph."""


class EmptyGraphError(GroupDiffError):
    """Operation requires a nonempty graph."""


class BudgetExceededError(GroupDiffError):
    """No dominating set within the size budget; carries the proven lower bound."""

    def __init__(self, budget: int, lower_bound: int):
        super().__init__(
            f"no dominating set of size <= {budget}; gamma >= {lower_bound}"
        )
        self.budget = budget
        self.lower_bound = lower_bound


class TooLargeError(GroupDiffError):
    """Exhaustive enumeration refused (instance too large)."""


class UnknownTheoremError(GroupDiffError):
    """Unknown verification id."""
