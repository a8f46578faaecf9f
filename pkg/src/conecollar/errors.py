"""Exception hierarchy shared by the geometry modules."""


class GeometryError(ValueError):
    """Base class for invalid geometric data."""


class DomainError(GeometryError):
    """An argument lies outside the domain of a guarded function."""


class InvalidHexagonError(GeometryError):
    """The three sides do not bound a right-angled hexagon."""


class NonexistenceError(GeometryError):
    """No polygon with the requested data exists."""


class DegenerateError(GeometryError):
    """Input is too close to a degenerate configuration to be resolved."""


class InadmissibleSignatureError(GeometryError):
    """The signature (g, n) is not admissible: need (g, n) >= (0, 4), (g, n) != (1, 0)."""


class InvalidEventError(GeometryError):
    """A ledger event is illegal for the current ledger state."""
