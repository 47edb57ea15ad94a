"""Longest palindromic substring toolkit.

The core engine runs Manacher's scan over virtual augmented-string
indices, so it never builds the dummy-interleaved buffer. Reference
implementations (quadratic naive, materialized augmentation) back it up
for testing and benchmarking, and a seeded generator plus a bench harness
round out the package. See the ``lps`` command for the CLI.
"""

from .core import (
    CompareStats,
    LpsResult,
    Span,
    compute_radii,
    longest_palindrome,
)
from .generator import GenSpec, InvalidAlphabet, gen_text
from .reference import (
    DummyUnavailable,
    OracleCapExceeded,
    augment,
    augmented_lps,
    augmented_radii,
    choose_dummy,
    naive_lps,
    naive_radii,
)

__version__ = "0.1.0"

__all__ = [
    "CompareStats",
    "DummyUnavailable",
    "GenSpec",
    "InvalidAlphabet",
    "LpsResult",
    "OracleCapExceeded",
    "Span",
    "augment",
    "augmented_lps",
    "augmented_radii",
    "choose_dummy",
    "compute_radii",
    "gen_text",
    "longest_palindrome",
    "naive_lps",
    "naive_radii",
]
