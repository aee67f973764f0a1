from symbolic_shifts.specs import BlockCode, FiniteTypeSpec, InducedSpec, SoficSpec, Substitution
from symbolic_shifts.words import Alphabet

BINARY = Alphabet(('0', '1'))
TERNARY = Alphabet(('0', '1', '2'))


def word(text):
    return tuple(text)


def words(*texts):
    return [tuple(t) for t in texts]


def golden_mean():
    return FiniteTypeSpec(BINARY, (word('11'),), label='golden mean')


def full_shift(alphabet=BINARY):
    return FiniteTypeSpec(alphabet, (), label='full shift')


def even_shift():
    transitions = (('E', '0', 'E'), ('E', '1', 'O'), ('O', '1', 'E'))
    return SoficSpec(BINARY, transitions, label='even shift')


def even_shift_image():
    source = FiniteTypeSpec(TERNARY, tuple(words('02', '10', '11', '22')))
    code = BlockCode.from_letters(TERNARY, BINARY, {'0': '0', '1': '1', '2': '1'})
    return SoficSpec(BINARY, source=source, code=code, label='even shift image')


def fibonacci():
    return Substitution(BINARY, {'0': word('01'), '1': word('0')}, '0', label='fibonacci')


def doubling_runs():
    return Substitution(BINARY, {'0': word('010'), '1': word('11')}, '0', label='doubling runs')


def fibonacci_first_return():
    return InducedSpec(fibonacci(), 1, tuple(words('000', '001', '100', '101')), label='return to [0]')


def two_golden_components():
    alphabet = Alphabet(('0', '1', '2', '3'))
    cross = [a + b for a in '01' for b in '23'] + [b + a for a in '01' for b in '23']
    return FiniteTypeSpec(alphabet, tuple(words('11', '33', *cross)), label='two components')


def cycle(length):
    """The single periodic orbit 012…(length−1)."""
    alphabet = Alphabet(tuple(str(i) for i in range(length)))
    forbidden = [
        (str(i), str(j)) for i in range(length) for j in range(length) if j != (i + 1) % length
    ]
    return FiniteTypeSpec(alphabet, tuple(forbidden), label=f'cycle {length}')
