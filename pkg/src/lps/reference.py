"""Ground-truth solvers: a quadratic naive oracle and the literal
augmented-string Manacher.

Both exist to check and benchmark the index-mapped engine in
:mod:`lps.core`. The naive oracle expands around every center directly in
original index space and shares no machinery with the linear engine,
which is what makes it trustworthy. The augmented solver materializes the
real 2N+1-symbol buffer the core deliberately avoids, so the two can be
compared for both output and cost.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import CompareStats, LpsResult, RadiiTable, Text, argmax, to_original_span

ORACLE_CAP = 100_000

__all__ = [
    "AugmentedText",
    "DummyUnavailable",
    "ORACLE_CAP",
    "OracleCapExceeded",
    "augment",
    "augmented_lps",
    "augmented_radii",
    "choose_dummy",
    "naive_lps",
    "naive_radii",
]


class OracleCapExceeded(ValueError):
    """Input too long for the O(N^2) oracle; pass a larger ``cap`` to override."""


class DummyUnavailable(ValueError):
    """Every symbol of the alphabet occurs in the text, so no dummy exists."""


def naive_radii(text: Text, *, cap: int = ORACLE_CAP, stats: CompareStats | None = None) -> RadiiTable:
    """Radii table by symmetric expansion around every center.

    Quadratic in the worst case, hence the cap. Works with two plain
    indices walking outward in the original string; when ``stats`` is
    given, every symbol comparison is counted into it.
    """
    n = len(text)
    if n > cap:
        raise OracleCapExceeded(f"text length {n} exceeds oracle cap {cap}")
    radii = [0] * (2 * n + 1)
    for mid in range(n):
        # character center: odd palindrome, augmented index 2*mid + 1
        lo, hi, length = mid - 1, mid + 1, 1
        while lo >= 0 and hi < n:
            if stats is not None:
                stats.comparisons += 1
            if text[lo] != text[hi]:
                break
            length += 2
            lo -= 1
            hi += 1
        radii[2 * mid + 1] = length
    for mid in range(n + 1):
        # boundary center: even palindrome, augmented index 2*mid
        lo, hi, length = mid - 1, mid, 0
        while lo >= 0 and hi < n:
            if stats is not None:
                stats.comparisons += 1
            if text[lo] != text[hi]:
                break
            length += 2
            lo -= 1
            hi += 1
        radii[2 * mid] = length
    return radii


def naive_lps(text: Text, *, cap: int = ORACLE_CAP) -> LpsResult:
    """Longest palindromic substring via the naive oracle, leftmost on ties."""
    radii = naive_radii(text, cap=cap)
    center = argmax(radii)
    length = radii[center]
    return LpsResult(span=to_original_span(center, length), length=length, center=center)


def choose_dummy(text: Text):
    """First symbol, scanning from the minimum upward, absent from ``text``.

    Candidates are NUL, then successive code points for ``str``; byte
    value 0, then successive values for ``bytes``. The fixed order makes
    both the result and the failure deterministic. DummyUnavailable is
    the string-augmentation failure mode that index mapping does not
    have.
    """
    if isinstance(text, (bytes, bytearray)):
        seen = set(text)
        for value in range(256):
            if value not in seen:
                return value
        raise DummyUnavailable("all 256 byte values occur in the text")
    if isinstance(text, str):
        seen = set(text)
        for value in range(0x110000):
            ch = chr(value)
            if ch not in seen:
                return ch
        raise DummyUnavailable("every Unicode scalar value occurs in the text")
    raise TypeError(f"choose_dummy supports str and bytes, got {type(text).__name__}")


@dataclass(frozen=True)
class AugmentedText:
    """The literal 2N+1 interleave: dummy at even positions, originals at odd."""

    symbols: Text
    dummy: object

    def __len__(self) -> int:
        return len(self.symbols)

    def original(self) -> Text:
        """Strip the dummies back out (round-trip of :func:`augment`)."""
        return self.symbols[1::2]


def augment(text: Text, dummy, *, alloc_cap: int | None = None) -> AugmentedText:
    """Materialize the augmented string for ``text``.

    ``dummy`` must not occur in ``text``, otherwise results downstream
    would be spurious. ``alloc_cap`` (a symbol count) makes the buffer
    allocation fallible, so callers can treat oversized inputs as an
    out-of-memory condition instead of crashing the process.
    """
    if dummy in text:
        raise ValueError("dummy symbol occurs in the text")
    size = 2 * len(text) + 1
    if alloc_cap is not None and size > alloc_cap:
        raise MemoryError(f"augmented buffer of {size} symbols exceeds cap {alloc_cap}")
    if isinstance(text, (bytes, bytearray)):
        buf = bytearray(size)
        buf[0::2] = bytes([dummy]) * (len(text) + 1)
        buf[1::2] = text
        return AugmentedText(symbols=bytes(buf), dummy=dummy)
    if isinstance(text, str):
        if not isinstance(dummy, str) or len(dummy) != 1:
            raise ValueError("dummy for a str text must be a single character")
        symbols = dummy + dummy.join(text) + dummy if text else dummy
        return AugmentedText(symbols=symbols, dummy=dummy)
    buf = [dummy] * size
    buf[1::2] = list(text)
    return AugmentedText(symbols=tuple(buf), dummy=dummy)


def augmented_radii(text: Text, *, alloc_cap: int | None = None) -> tuple[RadiiTable, CompareStats]:
    """Manacher's scan over the literal augmented string.

    Every position is treated uniformly, so dummy-vs-dummy tests count in
    the stats; the surplus over the core engine's count is exactly the
    overhead that virtual augmentation removes. A palindrome's radius in
    the augmented string equals its length in the original, so the
    returned table matches :func:`lps.core.compute_radii` entrywise.
    """
    dummy = choose_dummy(text)
    symbols = augment(text, dummy, alloc_cap=alloc_cap).symbols
    size = len(symbols)
    radii = [0] * size
    stats = CompareStats()
    ref = 0
    right = 0
    for i in range(size):
        radius = min(right - i, radii[2 * ref - i]) if i < right else 0
        p, q = i - radius - 1, i + radius + 1
        while p >= 0 and q < size:
            stats.comparisons += 1
            if symbols[p] != symbols[q]:
                break
            radius += 1
            p -= 1
            q += 1
        radii[i] = radius
        if i + radius > right:
            ref = i
            right = i + radius
    return radii, stats


def augmented_lps(text: Text) -> LpsResult:
    """Longest palindromic substring via the augmented solver."""
    radii, _ = augmented_radii(text)
    center = argmax(radii)
    length = radii[center]
    return LpsResult(span=to_original_span(center, length), length=length, center=center)
