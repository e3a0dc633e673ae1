"""Exception hierarchy shared by every latcut module."""


class LatcutError(Exception):
    """Base class for all errors raised by latcut."""


class PosetError(LatcutError, ValueError):
    """Invalid poset construction input."""


class EmptyError(PosetError):
    pass


class BoundsError(PosetError, IndexError):
    pass


class CycleError(PosetError):
    def __init__(self, message, cycle=None):
        super().__init__(message)
        self.cycle = cycle


class RedundantEdgeError(PosetError):
    """Raised in strict mode when an input edge is not a cover."""

    def __init__(self, message, edge=None):
        super().__init__(message)
        self.edge = edge


class SizeError(PosetError):
    pass


class ParamError(PosetError):
    pass


class LimitError(LatcutError):
    """An enumeration budget was exhausted before completion."""


class NotComparableError(LatcutError, ValueError):
    def __init__(self, x, y, message=None):
        super().__init__(message or f"elements {x} and {y} are not comparable as required")
        self.pair = (x, y)


class NotLatticeError(LatcutError, ValueError):
    """Meet or join of a pair is not unique (or does not exist).

    ``bounds`` holds the maximal lower bounds (for meet) or the minimal
    upper bounds (for join) that were found.
    """

    def __init__(self, pair, bounds=(), op="meet", message=None):
        if message is None:
            message = f"{op} of {pair[0]} and {pair[1]} is not unique: candidates {list(bounds)}"
        super().__init__(message)
        self.pair = tuple(pair)
        self.bounds = tuple(bounds)
        self.op = op


class NotGradedError(LatcutError, ValueError):
    def __init__(self, interval, chains=(), message=None):
        super().__init__(message or f"interval [{interval[0]}, {interval[1]}] has maximal chains of different lengths")
        self.interval = tuple(interval)
        self.chains = tuple(chains)


class NotSemimodularError(LatcutError, ValueError):
    def __init__(self, witness=None, message=None):
        if message is None:
            message = "lattice is not semimodular"
            if witness is not None:
                message += f" (violating pair x={witness[0]}, y={witness[1]})"
        super().__init__(message)
        self.witness = witness


class NoLeastElementError(LatcutError, ValueError):
    pass


class NotAntichainError(LatcutError, ValueError):
    def __init__(self, pair, message=None):
        super().__init__(message or f"set is not an antichain: {pair[0]} < {pair[1]}")
        self.pair = tuple(pair)


class IsLevelClassError(LatcutError, ValueError):
    pass


class ChainError(LatcutError, ValueError):
    """A sequence passed as a maximal chain is not one."""


class DocumentError(LatcutError, ValueError):
    """Malformed poset document; ``position`` locates the problem."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{position}: {message}"
        super().__init__(message)
        self.position = position


class InternalError(LatcutError, RuntimeError):
    """A postcondition that the algorithms guarantee was violated."""
