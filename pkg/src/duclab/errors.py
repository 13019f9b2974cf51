"""Exception types shared across the package."""


class DimensionError(ValueError):
    """Operands act on different numbers of qubits."""


class DomainError(ValueError):
    """An argument is outside the domain an operation is defined on."""


class CapExhausted(RuntimeError):
    """A search (period, closure) hit its configured cap before finishing."""

    def __init__(self, what: str, cap: int):
        super().__init__(f"{what} not found within cap={cap}")
        self.what = what
        self.cap = cap


class ResourceGuardError(ValueError):
    """A dense computation would exceed the size guard."""
