"""
Exception hierarchy for the algebra kernel
"""


class MultiQSymError(Exception):
    """Base class for every domain error raised by the kernel"""


class LevelMismatchError(MultiQSymError, ValueError):
    """Operands live at different levels, or an index has the wrong length"""


class PreconditionError(MultiQSymError, ValueError):
    """An operation precondition does not hold"""


class InputFormatError(MultiQSymError, ValueError):
    """Malformed index, coefficient or JSON payload"""


class PosetError(MultiQSymError, ValueError):
    """A poset violates the axioms of its type"""
