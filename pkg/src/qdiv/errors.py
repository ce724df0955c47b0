"""Exception types raised across the package."""


class QDivError(Exception):
    """Base class for all errors raised by qdiv."""


class OperandOutOfRange(QDivError, IndexError):
    pass


class InvalidGate(QDivError, ValueError):
    """Wrong operand count or repeated operands."""


class LevelViolation(QDivError, ValueError):
    """Gate kind not allowed at the circuit's abstraction level."""


class UnexportableGate(QDivError, ValueError):
    pass


class WrongKind(QDivError, ValueError):
    pass


class InvalidDirection(QDivError, ValueError):
    """Lowering was asked to raise the abstraction level."""


class BadWidth(QDivError, ValueError):
    pass


class OverlappingRegisters(QDivError, ValueError):
    pass


class CtrlOverlap(QDivError, ValueError):
    pass


class LayoutExhausted(QDivError, ValueError):
    """No spare zero qubit is left for another divider iteration."""


class NonPermutationGate(QDivError, TypeError):
    """A basis-state simulation met H, T or S; use the state-vector path."""


class WidthLimitExceeded(QDivError, ValueError):
    pass


class WidthMismatch(QDivError, ValueError):
    pass


class DivisionByZero(QDivError, ZeroDivisionError):
    pass


class DomainViolation(QDivError, ValueError):
    """Operands outside the range the divider circuit handles correctly."""
