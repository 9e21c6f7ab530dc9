# # Errors

"""This module defines the exceptions raised by `ninthvar`.

All of them derive from `ValueError`, since every failure in this library
comes from an input that doesn't satisfy some algebraic precondition
(a polynomial that doesn't divide another, a sequence that isn't monic, etc.),
so you can always catch `ValueError` if you don't care about the details.
"""

# ## Ring errors


class AlgebraError(ValueError):
    pass


# Failures of the ring operations themselves. Inside a character or a check
# they mean an internal computation went wrong, not that the input was bad.


class ComputationError(AlgebraError):
    pass


class NotDivisible(ComputationError):
    pass


class NonSquare(ComputationError):
    pass


class NonUnitConstantTerm(ComputationError):
    pass


class NonInvertibleImage(ComputationError):
    pass


class NegativeSeriesExponent(ComputationError):
    pass


# ## Sequence errors

# Admissibility failures share a common base so that `custom_sequence`
# callers can catch all of them at once.


class NotAdmissible(AlgebraError):
    pass


class NotMonic(NotAdmissible):
    pass


class WrongDegree(NotAdmissible):
    pass


class F0NotOne(NotAdmissible):
    pass


class NegativePartWrongOrder(NotAdmissible):
    pass


class NonInvertibleLeadingCoefficient(AlgebraError):
    pass


class SequenceTooShort(AlgebraError):
    pass


# ## Character errors


class LengthExceedsN(AlgebraError):
    pass


class NegativePartsUnsupported(AlgebraError):
    pass


class OddHalfExponentResidue(ComputationError):
    pass


class CapTooSmall(AlgebraError):
    pass


# ## Identity errors


class NotConstantTermFree(AlgebraError):
    pass


class SplitMismatch(AlgebraError):
    pass


class HypothesisViolated(AlgebraError):
    pass


class UnknownIdentity(AlgebraError):
    pass
