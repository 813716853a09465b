"""Line-bundle cohomology on simplicial complete toric varieties.

The heavy lifting happens in the C++ extension; this package re-exports the
main operations and adds small file-based conveniences.
"""

from ._core import (
    ClassElement,
    ClassGroup,
    CohomologyEngine,
    Fan,
    OracleContext,
    ParseError,
    ValidationError,
    parse_fan,
    reduced_homology_dims,
    serialize_fan,
    validate,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "ClassElement",
    "ClassGroup",
    "CohomologyEngine",
    "Fan",
    "OracleContext",
    "ParseError",
    "ValidationError",
    "cohomology",
    "load_fan",
    "parse_fan",
    "reduced_homology_dims",
    "serialize_fan",
    "validate",
    "verify",
]


def load_fan(path):
    """Parse a fan JSON document from a file path."""
    with open(path, "r", encoding="utf-8") as fh:
        return parse_fan(fh.read())


def cohomology(fan, divisor):
    """One-shot h-vector for a single divisor.

    Builds a fresh engine; reuse a :class:`CohomologyEngine` when querying
    many divisors on the same fan.
    """
    return CohomologyEngine(fan).cohomology(divisor)["h"]
