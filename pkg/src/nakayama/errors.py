"""Exception hierarchy shared by every module of the package."""


class NakayamaError(ValueError):
    pass


class EmptySeries(NakayamaError):
    def __init__(self):
        super().__init__("Kupisch series must be non-empty")


class ConstraintViolation(NakayamaError):
    """A Kupisch series breaks one of its defining inequalities.

    ``index`` is the 1-based position of the first offending entry.
    """

    def __init__(self, index: int, reason: str):
        self.index = index
        self.reason = reason
        super().__init__(f"constraint violated at i={index}: {reason}")


class VertexOutOfRange(NakayamaError):
    def __init__(self, vertex: int, n: int):
        self.vertex = vertex
        self.n = n
        super().__init__(f"vertex {vertex} outside 1..{n}")


class InvalidModulePoint(NakayamaError):
    pass


class InvalidOrdering(NakayamaError):
    pass


class PreconditionInfiniteGldim(NakayamaError):
    def __init__(self, series):
        super().__init__(f"{series} has infinite global dimension")


class CutoffExceeded(NakayamaError):
    def __init__(self, n: int, cutoff: int):
        self.n = n
        self.cutoff = cutoff
        super().__init__(f"ordering search needs n <= {cutoff}, got n = {n}")


class UnsupportedFormat(NakayamaError):
    pass
