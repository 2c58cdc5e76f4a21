"""Exception types shared across the package.

All are ValueError subclasses so callers that do not care about the
fine-grained kind can catch the builtin.
"""


class NotSelfAdjointError(ValueError):
    """Input element has an imaginary residue beyond tolerance."""


class NotHermitianError(ValueError):
    """Matrix deviates from its conjugate transpose beyond tolerance."""


class NotHaarFormError(ValueError):
    """Operator or map carries linear terms where a trace-state form is required."""


class NotSymmetricError(ValueError):
    """Operator is not invariant under swapping the two tensor legs."""


class NotApplicableError(ValueError):
    """Requested check needs a certified sphere-preserving trace-state map."""
