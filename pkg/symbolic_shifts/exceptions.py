from django.utils.translation import gettext_lazy as _
from rest_framework import status
from rest_framework.exceptions import APIException


class ShiftError(APIException):
    """
    Base class for every domain error raised by the library.
    The shifts command turns these into exit code 1.
    """
    status_code = status.HTTP_422_UNPROCESSABLE_ENTITY
    default_detail = _('The shift computation could not be completed.')
    default_code = 'shift_error'


class HorizonExceeded(ShiftError):
    """Raised when a length is requested beyond an oracle's reliable horizon."""
    default_detail = _('The requested length exceeds the reliable horizon.')
    default_code = 'horizon_exceeded'

    def __init__(self, requested, horizon, detail=None):
        self.requested = requested
        self.horizon = horizon
        if detail is None:
            detail = _('Length {requested} exceeds the reliable horizon {horizon}.').format(
                requested=requested, horizon=horizon
            )
        super().__init__(detail)


class AlphabetMismatch(ShiftError):
    status_code = status.HTTP_400_BAD_REQUEST
    default_detail = _('The operands are over different alphabets.')
    default_code = 'alphabet_mismatch'


class UndefinedEntropy(ShiftError):
    """Raised when entropy is requested for the empty shift."""
    default_detail = _('Entropy is undefined for the empty shift.')
    default_code = 'undefined_entropy'


class EnumerationCapExceeded(ShiftError):
    default_detail = _('The enumeration cap was exceeded.')
    default_code = 'enumeration_cap_exceeded'

    def __init__(self, count, cap):
        self.count = count
        self.cap = cap
        super().__init__(
            _('{count} items exceed the enumeration cap {cap}.').format(count=count, cap=cap)
        )


class IncompleteBlockCode(ShiftError):
    """Raised when a block code rule is not total on its windows."""
    status_code = status.HTTP_400_BAD_REQUEST
    default_detail = _('The block code rule is not defined on every window.')
    default_code = 'incomplete_block_code'


class NotAnAutomorphism(ShiftError):
    default_detail = _('The codes do not compose to the identity on the language.')
    default_code = 'not_an_automorphism'


class ReducibleGraph(ShiftError):
    default_detail = _('The graph is reducible; run max_entropy_decomposition first.')
    default_code = 'reducible_graph'


class AmbiguousDigit(ShiftError):
    """
    Raised when a β-digit floor stays ambiguous at the precision ceiling.
    Carries the digit index.
    """
    default_detail = _('A β-expansion digit could not be certified.')
    default_code = 'ambiguous_digit'

    def __init__(self, index, precision):
        self.index = index
        self.precision = precision
        super().__init__(
            _('Digit {index} is ambiguous at {precision} bits.').format(
                index=index, precision=precision
            )
        )


class WrongExpansionStatus(ShiftError):
    default_detail = _('The expansion does not have the required status.')
    default_code = 'wrong_expansion_status'


class InsufficientDigits(ShiftError):
    default_detail = _('Not enough digits of the expansion are known.')
    default_code = 'insufficient_digits'


class CannotClose(ShiftError):
    """Raised when a truncated digit stream is asked for a finite presentation."""
    default_detail = _('A truncated digit stream cannot be closed into a graph.')
    default_code = 'cannot_close'


class NonGrowingSubstitution(ShiftError):
    default_detail = _('The substitution does not grow from its seed.')
    default_code = 'non_growing_substitution'


class ReturnTimeCapExceeded(ShiftError):
    default_detail = _('A first-return time exceeds the configured cap.')
    default_code = 'return_time_cap_exceeded'


class EmptyClopenSet(ShiftError):
    default_detail = _('The clopen set meets no word of the base language.')
    default_code = 'empty_clopen_set'


class EmptySupport(ShiftError):
    """Raised when no periodic points exist up to the requested period."""
    default_detail = _('There are no periodic points up to the requested period.')
    default_code = 'empty_support'


class CutoffTooSmall(ShiftError):
    default_detail = _('Some component has no periodic points below the cutoff.')
    default_code = 'cutoff_too_small'


class DepthExceeded(ShiftError):
    default_detail = _('The measure is not known to the requested depth.')
    default_code = 'depth_exceeded'


class InfeasibleLengths(ShiftError):
    status_code = status.HTTP_400_BAD_REQUEST
    default_detail = _('Every requested length must be at least 3.')
    default_code = 'infeasible_lengths'


class UnsupportedSpec(ShiftError):
    status_code = status.HTTP_400_BAD_REQUEST
    default_detail = _('This kind of shift is not supported here.')
    default_code = 'unsupported_spec'
