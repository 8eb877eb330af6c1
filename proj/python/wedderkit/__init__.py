"""Exact Wedderburn data, central units and primitive idempotents of ZG.

Thin wrapper over the C++ core; see the project README for the group spec
grammar and the certificate schema.
"""

try:
    from ._wedderkit import (  # packaged layout (wheel)
        ConsistencyError,
        UnsupportedClassError,
        ValidationError,
        central_basis,
        class_counts,
        cyclotomic_polynomial,
        idempotents,
        rank,
        unit_generators,
        verify_certificate,
        wedderburn,
    )
except ImportError:  # in-tree build: module next to the build directory
    from _wedderkit import (
        ConsistencyError,
        UnsupportedClassError,
        ValidationError,
        central_basis,
        class_counts,
        cyclotomic_polynomial,
        idempotents,
        rank,
        unit_generators,
        verify_certificate,
        wedderburn,
    )

__all__ = [
    "ConsistencyError",
    "UnsupportedClassError",
    "ValidationError",
    "central_basis",
    "class_counts",
    "cyclotomic_polynomial",
    "idempotents",
    "rank",
    "unit_generators",
    "verify_certificate",
    "wedderburn",
]
