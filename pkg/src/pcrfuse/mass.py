"""Mass functions (basic belief assignments) and the core operations on them.

A mass function maps focal sets (bitmasks over its frame) to masses that
sum to one. Instances are canonical: keys ascend by bitmask value, zero
entries are dropped, the empty set never appears. Everything here is
immutable and pure, so values can be shared freely across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import (
    AlphaOutOfRangeError,
    EmptyFocalSetError,
    EmptySourceListError,
    FrameMismatchError,
    NegativeMassError,
    NonUnitSumError,
    OutOfFrameError,
)
from .frame import FocalSet, Frame

SUM_TOLERANCE = 1e-9


@dataclass(frozen=True)
class MassFunction:
    """A canonical basic belief assignment over a frame.

    Build instances with :func:`validate_mass` (or :func:`vacuous`);
    the constructor itself trusts its input. ``masses`` must already be
    canonical: ascending bitmask keys, strictly positive values, no
    empty set.
    """

    frame: Frame
    masses: dict[FocalSet, float]

    def __getitem__(self, bits: FocalSet) -> float:
        """Mass of a focal set; absent entries read as 0."""
        return self.masses.get(bits, 0.0)

    def __iter__(self) -> Iterator[FocalSet]:
        return iter(self.masses)

    def items(self) -> Iterable[tuple[FocalSet, float]]:
        return self.masses.items()

    def focal_sets(self) -> tuple[FocalSet, ...]:
        return tuple(self.masses)

    def as_named(self) -> dict[str, float]:
        """Masses keyed by ``"A|B"`` style names, canonical order."""
        return {self.frame.format_set(b): v for b, v in self.masses.items()}

    def __repr__(self) -> str:
        body = ", ".join(f"{k}: {v:g}" for k, v in self.as_named().items())
        return f"MassFunction({{{body}}})"


def validate_mass(
    raw: Mapping[FocalSet, float] | Iterable[tuple[FocalSet, float]],
    frame: Frame,
) -> MassFunction:
    """Check and canonicalize raw (focal set, mass) pairs.

    Duplicate focal sets are merged by summation, entries with mass
    exactly zero are dropped, and keys are put in ascending bitmask
    order. The masses must be non-negative and sum to one within
    ``SUM_TOLERANCE``.
    """
    pairs = raw.items() if isinstance(raw, Mapping) else raw
    merged: dict[FocalSet, float] = {}
    for bits, mass in pairs:
        if not isinstance(bits, int) or bits < 0 or not frame.contains(bits):
            raise OutOfFrameError(f"focal set {bits!r} does not fit the frame")
        if bits == 0:
            raise EmptyFocalSetError("the empty set cannot carry input mass")
        if not (mass >= 0.0):
            raise NegativeMassError(f"mass {mass!r} for {frame.format_set(bits)!r}")
        merged[bits] = merged.get(bits, 0.0) + mass
    total = math.fsum(merged.values())
    if not (abs(total - 1.0) <= SUM_TOLERANCE):
        raise NonUnitSumError(f"masses sum to {total!r}, expected 1 within {SUM_TOLERANCE}")
    canonical = {bits: merged[bits] for bits in sorted(merged) if merged[bits] != 0.0}
    return MassFunction(frame, canonical)


def vacuous(frame: Frame) -> MassFunction:
    """The totally ignorant source: all mass on the full frame."""
    return MassFunction(frame, {frame.full_set: 1.0})


def discount(m: MassFunction, alpha: float) -> MassFunction:
    """Classical reliability discounting by a factor ``alpha`` in [0, 1].

    Every focal set except the full frame keeps ``alpha`` times its mass;
    the full frame receives the remainder, ``alpha * m(full) + (1 - alpha)``.
    ``alpha = 1`` is the identity, ``alpha = 0`` yields the vacuous source.
    """
    if not (0.0 <= alpha <= 1.0):
        raise AlphaOutOfRangeError(f"discount factor {alpha!r} outside [0, 1]")
    theta = m.frame.full_set
    scaled = {bits: alpha * v for bits, v in m.masses.items() if bits != theta}
    scaled[theta] = alpha * m[theta] + (1.0 - alpha)
    return validate_mass(scaled, m.frame)


def max_distance(m: MassFunction, m2: MassFunction) -> float:
    """Largest per-focal-set mass gap between two sources.

    The maximum of ``|m(X) - m2(X)|`` over the union of focal sets,
    with absent entries reading as zero. A metric on canonical mass
    functions.
    """
    if m.frame != m2.frame:
        raise FrameMismatchError("mass functions live on different frames")
    keys = set(m.masses) | set(m2.masses)
    return max(abs(m[b] - m2[b]) for b in keys)


def common_frame(sources: Sequence[MassFunction]) -> Frame:
    """The shared frame of a non-empty source list, or an error."""
    if not sources:
        raise EmptySourceListError("no sources given")
    frame = sources[0].frame
    for m in sources[1:]:
        if m.frame != frame:
            raise FrameMismatchError("sources live on different frames")
    return frame
