"""Frame of discernment and focal-set bitmask algebra.

Focal sets are plain ``int`` bitmasks: bit ``i`` stands for the ``i``-th
singleton of the frame. Distinct singletons are mutually exclusive, so
set intersection is bitwise AND and the empty set is ``0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import EmptyFocalSetError, FusionError, OutOfFrameError

FocalSet = int

MAX_FRAME_SIZE = 64


@dataclass(frozen=True)
class Frame:
    """Ordered list of mutually exclusive hypothesis names.

    The order fixes the bit layout: singleton ``i`` owns bit ``2**i``.
    Frames are immutable; all derived masks are computed on demand.
    """

    singletons: tuple[str, ...]

    def __init__(self, singletons: Iterable[str]):
        names = tuple(singletons)
        if not names:
            raise FusionError("a frame needs at least one singleton")
        if len(names) > MAX_FRAME_SIZE:
            raise FusionError(
                f"frame has {len(names)} singletons, maximum is {MAX_FRAME_SIZE}"
            )
        seen: set[str] = set()
        for name in names:
            if not isinstance(name, str) or not name:
                raise FusionError("singleton names must be non-empty strings")
            if name in seen:
                raise FusionError(f"duplicate singleton name {name!r}")
            seen.add(name)
        object.__setattr__(self, "singletons", names)

    def __len__(self) -> int:
        return len(self.singletons)

    @property
    def full_set(self) -> FocalSet:
        """Bitmask of the whole frame (total ignorance)."""
        return (1 << len(self.singletons)) - 1

    def bit(self, name: str) -> FocalSet:
        """Bitmask of a single named hypothesis."""
        try:
            return 1 << self.singletons.index(name)
        except ValueError:
            raise OutOfFrameError(f"unknown singleton {name!r}") from None

    def contains(self, bits: FocalSet) -> bool:
        """True if ``bits`` is a subset of the frame (0 allowed)."""
        return 0 <= bits <= self.full_set

    def members(self, bits: FocalSet) -> Iterator[str]:
        """Singleton names contained in ``bits``, in frame order."""
        for i, name in enumerate(self.singletons):
            if bits >> i & 1:
                yield name

    def make_set(self, names: Iterable[str]) -> FocalSet:
        """Bitmask for a collection of singleton names."""
        bits = 0
        for name in names:
            bits |= self.bit(name)
        return bits

    def parse_set(self, key: str) -> FocalSet:
        """Parse a ``"A|B"`` style key into a bitmask.

        Keys are order-insensitive; repeating a name within one key is
        rejected rather than silently collapsed.
        """
        parts = key.split("|")
        bits = 0
        for part in parts:
            b = self.bit(part)
            if bits & b:
                raise EmptyFocalSetError(f"duplicate singleton {part!r} in key {key!r}")
            bits |= b
        return bits

    def format_set(self, bits: FocalSet) -> str:
        """Render a bitmask as a ``"A|B"`` key in frame order."""
        if bits == 0:
            return "{}"
        if not self.contains(bits):
            raise OutOfFrameError(f"bitmask {bits:#x} does not fit this frame")
        return "|".join(self.members(bits))


def intersect_all(sets: Iterable[FocalSet]) -> FocalSet:
    """Bitwise intersection of one or more focal sets; 0 means empty.

    Commutative and associative, so the iteration order is irrelevant.
    """
    it = iter(sets)
    try:
        acc = next(it)
    except StopIteration:
        raise FusionError("intersect_all needs at least one set") from None
    for bits in it:
        acc &= bits
    return acc
