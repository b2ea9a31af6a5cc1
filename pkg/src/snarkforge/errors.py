"""Exception types shared across the package."""


class DomainError(ValueError):
    """An operation was called outside its documented domain."""


class CyclicConnectivityUndefinedError(DomainError):
    """Cyclic edge connectivity is undefined: the graph has no pair of
    vertex-disjoint cycles."""


class Graph6ParseError(ValueError):
    """Malformed graph6 input.  ``offset`` is the byte position of the
    first offending character."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class CountContradictionError(RuntimeError):
    """An exact count violated a divisibility guarantee.  This indicates
    a bug in the counting kernel, never bad input."""


class BudgetExceededError(RuntimeError):
    """A search exceeded its configured node or size budget."""


class LedgerIntegrityError(RuntimeError):
    """A persisted ledger record failed validation.  ``record_id`` is the
    1-based line number of the offending record."""

    def __init__(self, message: str, record_id: int):
        super().__init__(f"record {record_id}: {message}")
        self.record_id = record_id
