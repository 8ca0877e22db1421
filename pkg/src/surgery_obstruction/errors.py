"""Exception hierarchy shared by every module.

Each error carries a ``kind`` string (the class name) that the CLI reports
verbatim, and belongs to one of two families that map to exit codes.
"""


class SurgeryError(Exception):
    exit_code = 2

    @property
    def kind(self) -> str:
        return type(self).__name__


class DomainError(SurgeryError):
    """Arithmetic or admissibility failure for the given inputs (exit 2)."""

    exit_code = 2


class HypothesisViolated(SurgeryError):
    """Inputs fall outside the hypotheses a statement is made under (exit 3)."""

    exit_code = 3


class ZeroDenominator(DomainError, ZeroDivisionError):
    pass


class DenominatorNotInvertible(DomainError):
    pass


class NotCoprime(DomainError):
    pass


class NonIntegral(DomainError):
    pass


class NonHalfInteger(DomainError):
    pass


class DegenerateMatrix(DomainError):
    pass


class NotHomologyCompatible(DomainError):
    pass


class NullHomologousKnot(DomainError):
    pass


class DivisibilityFailure(DomainError):
    pass


class Ell0DivisibleByThree(DomainError):
    """p | ell^2 and p does not divide ell, yet 3 | ell^2/p.

    Happens only when the cofactor p/9 is not squarefree (e.g. p=36, ell=18).
    """


class InconsistentUnknowns(DomainError):
    """The mod-3 residue changed when the free knot invariants changed."""


class InvalidTorusParameter(DomainError):
    pass


class MissingCoverData(DomainError):
    pass
