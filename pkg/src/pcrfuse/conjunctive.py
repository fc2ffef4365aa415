"""Conjunctive combination of any number of sources, plus the Dempster baseline.

The conjunctive rule enumerates every tuple of focal sets (one per
source) and accumulates the tuple's mass product onto the joint
intersection. Products whose intersection is empty accumulate into the
``conflict`` figure instead of being renormalized away; redistributing
that conflict is the job of the PCR rules.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import TotalConflictError
from .frame import FocalSet, Frame
from .mass import MassFunction, common_frame, validate_mass


@dataclass(frozen=True)
class ConjunctiveResult:
    """Partial combined masses plus the total conflict.

    ``masses`` is canonical (ascending bitmask keys, positive values);
    the empty-set accumulator is reported separately as ``conflict``.
    Masses and conflict sum to one for validated inputs.
    """

    frame: Frame
    masses: dict[FocalSet, float]
    conflict: float


def canonical_order(sources: list[MassFunction]) -> list[MassFunction]:
    """Sort a source list into a content-determined order.

    Combination rules are commutative; evaluating them on a canonical
    permutation makes the floating-point output bit-identical for any
    input order.
    """
    return sorted(sources, key=lambda m: tuple(m.masses.items()))


def conjunctive_combine(sources: list[MassFunction]) -> ConjunctiveResult:
    """Combine ``sources`` under the conjunctive rule.

    For a single source the result is the source itself with zero
    conflict. Enumeration covers the full cartesian product of focal
    sets, so cost grows with the product of focal counts; intended for
    desk-scale inputs.
    """
    frame = common_frame(sources)
    if len(sources) == 1:
        return ConjunctiveResult(frame, dict(sources[0].masses), 0.0)
    buckets: dict[FocalSet, float] = {}
    focal_items = [tuple(m.masses.items()) for m in canonical_order(sources)]
    for combo in product(*focal_items):
        inter, p = combo[0]
        for bits, v in combo[1:]:
            inter &= bits
            p *= v
        if p == 0.0:
            continue
        buckets[inter] = buckets.get(inter, 0.0) + p
    conflict = buckets.pop(0, 0.0)
    masses = {b: buckets[b] for b in sorted(buckets) if buckets[b] != 0.0}
    return ConjunctiveResult(frame, masses, conflict)


def dempster_normalize(result: ConjunctiveResult) -> MassFunction:
    """Dempster's rule: scale the partial masses by 1 / (1 - conflict).

    Provided as a classical baseline for comparison with the
    redistribution rules. Fails when the sources are in total conflict.
    """
    if result.conflict >= 1.0 - 1e-12:
        raise TotalConflictError("total conflict, nothing left to normalize")
    scale = 1.0 - result.conflict
    return validate_mass({b: v / scale for b, v in result.masses.items()}, result.frame)
