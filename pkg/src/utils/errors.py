"""Exception hierarchy shared by the library and the CLI"""


class MeixnerError(Exception):
    """Base class for every failure raised by this package"""

    exit_code: int = 1


class DomainError(MeixnerError, ValueError):
    """Argument outside the domain of the requested function"""

    exit_code = 2


class PoleError(DomainError):
    """Argument sits on a pole of the gamma function"""


class BranchError(DomainError):
    """Argument on a branch cut with no side chosen, or an argument-range violation"""


class SingularPointError(DomainError):
    """Evaluation requested at (or too close to) 0, a or b"""

    exit_code = 3


class OracleConvergenceError(MeixnerError, ArithmeticError):
    """Precision escalation hit its cap before two precisions agreed"""

    exit_code = 4

    def __init__(self, message: str, bits: int, rel_err: float):
        super().__init__(message)
        self.bits = bits
        self.rel_err = rel_err
