"""Exception types shared across the package."""


class CarrierError(ValueError):
    """A point does not belong to the carrier set of the chosen metric."""


class UnreachableError(ValueError):
    """Two graph vertices have no connecting path, so their distance is not
    finite and the vertex set is not a metric space."""


class DegenerateGeometryError(ValueError):
    """A geometric construction has no unique answer (e.g. every point of a
    circle is equidistant from the query point)."""
