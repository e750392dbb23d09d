from typing import Any, Dict, Optional

from pydantic import BaseModel, ValidationError


class StableCohomologyError(Exception):
    """
    Base class of every error raised by the computations.
    """
    status_code: int = 422

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        self.message = message
        self.details = details or {}
        super().__init__(self.message)


class SizeLimitError(StableCohomologyError):
    """
    Raised when a size parameter is outside the supported range.
    """
    status_code = 413

    def __init__(self, what: str, value: int, low: int, high: int):
        super().__init__(
            f"{what}={value} is outside the supported range [{low}, {high}]",
            {"parameter": what, "value": value, "min": low, "max": high},
        )


class ResourceLimitError(StableCohomologyError):
    """
    Raised when an explicit construction would exceed its basis cap.
    """
    status_code = 413


class GroundSizeMismatchError(StableCohomologyError):
    """
    Raised when two objects live on ground sets of different sizes.
    """
    def __init__(self, left: int, right: int):
        super().__init__(
            f"ground sizes differ: {left} != {right}",
            {"left": left, "right": right},
        )


class PartitionSizeMismatchError(StableCohomologyError):
    """
    Raised when a partition and a cycle type (or class function) have different sizes.
    """
    def __init__(self, partition_size: int, other_size: int):
        super().__init__(
            f"partition of {partition_size} paired with an object of size {other_size}",
            {"partition_size": partition_size, "other_size": other_size},
        )


class InvalidWindowError(StableCohomologyError):
    """
    Raised for a degree window whose bounds make no sense.
    """


class WindowUnderflowError(InvalidWindowError):
    """
    Raised when a shift pushes a series below the representable degree floor.
    """


class TruncationError(StableCohomologyError):
    """
    Raised when a coefficient is requested beyond the exact window of a series.
    """


class IncompatibleSeriesError(StableCohomologyError):
    """
    Raised when series with different gradings are combined additively.
    """


class ConsistencyError(StableCohomologyError):
    """
    Raised when an exact computation produces an impossible value (an internal bug).
    """
    status_code = 500


class DegenerateInputError(StableCohomologyError):
    """
    Raised when the requested graded piece is zero for parity reasons.
    """


class UnsupportedPartitionError(StableCohomologyError):
    """
    Raised when a closed form is requested for a partition it does not cover.
    """


class StabilityRangeError(StableCohomologyError):
    """
    Raised when the genus is too small for the requested identification.
    """


class InvalidBaseModelError(StableCohomologyError):
    """
    Raised when a user-supplied base series violates the base-model invariants.
    """


class ErrorResponse(BaseModel):
    """
    JSON body of a failed HTTP request
    """
    message: str
    status_code: int
    details: Optional[Dict[str, Any]] = None

    def to_dict(self) -> Dict[str, Any]:
        return self.model_dump(exclude_none=True)

    @classmethod
    def from_exception(cls, exc: StableCohomologyError) -> "ErrorResponse":
        return cls(
            message=exc.message,
            status_code=exc.status_code,
            details={"error": type(exc).__name__, **exc.details},
        )

    @classmethod
    def from_validation_error(cls, exc: ValidationError) -> "ErrorResponse":
        return cls(message="invalid input", status_code=422, details={"errors": [e["msg"] for e in exc.errors()]})
