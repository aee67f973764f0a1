from typing import Callable

import sympy
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from .exceptions import UnsupportedSpec

_n = sympy.Symbol('n', integer=True, positive=True)


def rate_function(expression: str) -> Callable[[int], int]:
    """
    Parse a rate such as ``n``, ``2`` or ``n^2 + 1`` into a function of n.
    Values are rounded down and must be positive.
    """
    try:
        expr = parse_expr(str(expression), local_dict={'n': _n},
                          transformations=standard_transformations + (convert_xor,))
    except (SyntaxError, TypeError, sympy.SympifyError) as exc:
        raise UnsupportedSpec(f'Cannot read the rate {expression!r}: {exc}')
    if expr.free_symbols - {_n}:
        raise UnsupportedSpec(f'The rate {expression!r} may only use n.')

    def rate(value: int) -> int:
        result = int(sympy.floor(expr.subs(_n, value)))
        if result < 1:
            raise UnsupportedSpec(f'The rate {expression!r} is not positive at n={value}.')
        return result

    return rate
