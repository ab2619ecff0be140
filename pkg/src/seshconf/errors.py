"""Exception types shared across the package."""


class SeshconfError(Exception):
    pass


class SurfaceMismatch(SeshconfError, ValueError):
    """Two divisor classes (or a class and a surface) live on different lattices."""


class UnsupportedSurface(SeshconfError):
    """No nef/ample criterion is implemented for this surface; the caller has to
    supply external evidence (e.g. declare known nef or ample classes)."""


class MissingData(SeshconfError, ValueError):
    """A computation needs data (a class, a genus, Chern numbers) that is absent."""


class InvalidArrangement(SeshconfError, ValueError):
    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        msg = "; ".join(str(d) for d in self.diagnostics) or "invalid arrangement"
        super().__init__(msg)


class HypothesisError(SeshconfError, ValueError):
    """A theorem's hypotheses do not hold for the given input."""


class VacuousBound(HypothesisError):
    """The closed-form bound has a nonpositive denominator."""
