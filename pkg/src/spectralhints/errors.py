"""Exception types shared across the package."""


class ShapeError(ValueError):
    """Dimensions are inconsistent or violate a type invariant."""


class FormatError(ValueError):
    """A serialized payload (.sht, PGM/PPM, meta file) is malformed."""


class DivergenceError(RuntimeError):
    """An optimization run produced a non-finite loss."""

    def __init__(self, step: int, loss: float):
        super().__init__(f"loss became non-finite at step {step}: {loss!r}")
        self.step = step
        self.loss = loss
