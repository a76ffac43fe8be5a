# Exception hierarchy shared by every layer of the engine


class RadicalLabError(Exception):
    """Base class for all engine errors."""


class AxiomViolation(RadicalLabError):
    """A table failed a ring, module or substructure axiom."""

    def __init__(self, axiom, witness=(), label=""):
        self.axiom = axiom
        self.witness = tuple(witness)
        self.label = label
        where = f" in {label}" if label else ""
        super().__init__(f"axiom '{axiom}' fails{where}, witness {self.witness}")


class KindMismatch(RadicalLabError):
    pass


class RingMismatch(RadicalLabError):
    pass


class ParentMismatch(RadicalLabError):
    pass


class EmptyList(RadicalLabError):
    pass


class DegenerateRing(RadicalLabError):
    """The zero ring was offered as the base ring of a module."""


class SizeGuardExceeded(RadicalLabError):
    def __init__(self, what, size, limit):
        self.what = what
        self.size = size
        self.limit = limit
        super().__init__(f"{what} has size {size}, over the configured limit {limit}")


class NotProper(RadicalLabError):
    pass


class InvariantBreach(RadicalLabError):
    """An internal invariant failed; reported, never repaired."""


class CharacterizationMismatch(RadicalLabError):
    """The three 2-primality criteria for a ring disagree."""


class NotEpimorphism(RadicalLabError):
    pass


class KernelNotContained(RadicalLabError):
    pass


class ConfigError(RadicalLabError):
    def __init__(self, path, message):
        self.path = path
        self.message = message
        super().__init__(f"{path or '<root>'}: {message}")


class UnknownSuite(RadicalLabError):
    pass


class BudgetExhausted(RadicalLabError):
    pass
