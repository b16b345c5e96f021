"""Exception hierarchy shared by the library and the CLI."""


class JInvariantError(Exception):
    """Base class for domain errors (CLI exit code 1)."""


class UnsupportedRootSystem(JInvariantError, ValueError):
    pass


class CapExceeded(JInvariantError):
    def __init__(self, order: int, cap: int):
        super().__init__(f"Weyl group has {order} elements, above the cap of {cap}")
        self.order = order
        self.cap = cap


class InvalidLatticeChoice(JInvariantError, ValueError):
    pass


class InvalidSignature(JInvariantError, ValueError):
    pass


class GuardExceeded(JInvariantError):
    pass


class InconsistentProfile(JInvariantError, ValueError):
    """An index profile or status combination ruled out by a known invariant.

    ``invariant`` names the violated rule so the CLI can report it.
    """

    def __init__(self, invariant: str, detail: str = ""):
        msg = invariant if not detail else f"{invariant}: {detail}"
        super().__init__(msg)
        self.invariant = invariant


class UndocumentedCase(JInvariantError, ValueError):
    pass
