from django.core.validators import RegexValidator
from django.utils.translation import gettext_lazy as _

# poly:<expression in x>@[lo,hi], a rational p/q, or a decimal literal
beta_literal_validator = RegexValidator(
    regex=r'^(poly:[^@]+@\[\s*[-+0-9./eE]+\s*,\s*[-+0-9./eE]+\s*\]|\d+(/\d+)?|\d*\.\d+|\d+\.\d*)$',
    message=_("β must be 'poly:<expr>@[lo,hi]', a rational 'p/q' or a decimal literal."),
)

# Words given as plain strings use single-character symbols
word_literal_validator = RegexValidator(
    regex=r'^\S*$',
    message=_("Words written as strings may not contain whitespace."),
)
