"""Proportional conflict redistribution: the PCR5 and PCR6 rules.

Both rules start from the conjunctive combination and hand every
conflicting mass product back to the focal sets that produced it,
proportionally to per-set weights:

* PCR5 multiplies the masses of identical focal sets within a tuple
  into one group weight;
* PCR6 adds them (the Martin-Oswald semantics).

With two sources a conflicting tuple can never repeat a focal set, so
the two rules coincide exactly. The dedicated 3-source closed forms
evaluate the same redistribution without enumerating tuples and serve
as an independent cross-check of the general engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Literal

from .conjunctive import canonical_order, conjunctive_combine
from .errors import FusionError, TooManySourcesError
from .frame import FocalSet
from .mass import MassFunction, common_frame, validate_mass

MAX_SOURCES_DEFAULT = 12

Rule = Literal["pcr5", "pcr6"]

RULES: tuple[str, ...] = ("pcr5", "pcr6")


@dataclass(frozen=True)
class ConflictTuple:
    """One per-source assignment of focal sets with empty intersection.

    ``assignment`` holds ``(source index, focal set, mass)`` triples in
    source order; ``product`` is the product of the masses. Tuples with
    zero product are never materialized.
    """

    assignment: tuple[tuple[int, FocalSet, float], ...]
    product: float

    def focal_sets(self) -> tuple[FocalSet, ...]:
        return tuple(bits for _, bits, _ in self.assignment)


@dataclass(frozen=True)
class TraceEntry:
    """One redistribution step: a conflicting tuple with its weights and shares."""

    conflict: ConflictTuple
    rule: str
    weights: dict[FocalSet, float]
    shares: dict[FocalSet, float]


@dataclass(frozen=True)
class RedistributionTrace:
    """Every redistribution step of a fusion, in enumeration order.

    Summing all share vectors on top of the conjunctive masses
    reproduces the fused output.
    """

    rule: str
    entries: tuple[TraceEntry, ...]


def _group_weights(pairs: Iterable[tuple[FocalSet, float]], rule: str) -> dict[FocalSet, float]:
    # Groups keep first-occurrence order so that both rules perform
    # identical arithmetic when every focal set appears once.
    weights: dict[FocalSet, float] = {}
    if rule == "pcr5":
        for bits, mass in pairs:
            weights[bits] = weights.get(bits, 1.0) * mass
    elif rule == "pcr6":
        for bits, mass in pairs:
            weights[bits] = weights.get(bits, 0.0) + mass
    else:
        raise FusionError(f"unknown redistribution rule {rule!r}")
    return weights


def _shares_from_weights(p: float, weights: dict[FocalSet, float]) -> dict[FocalSet, float]:
    denom = 0.0
    for w in weights.values():
        denom += w
    return {bits: p * w / denom for bits, w in weights.items()}


def pcr5_shares(t: ConflictTuple) -> dict[FocalSet, float]:
    """PCR5 split of one conflicting product.

    Identical focal sets multiply their masses into a single group
    weight; each set then receives ``product * weight / sum(weights)``.
    The shares always sum back to the tuple's product.
    """
    weights = _group_weights(((b, v) for _, b, v in t.assignment), "pcr5")
    return _shares_from_weights(t.product, weights)


def pcr6_shares(t: ConflictTuple) -> dict[FocalSet, float]:
    """PCR6 split of one conflicting product.

    Each focal set weighs in with the sum of the masses proposing it,
    and the denominator is the sum of all masses in the tuple.
    """
    weights = _group_weights(((b, v) for _, b, v in t.assignment), "pcr6")
    return _shares_from_weights(t.product, weights)


def enumerate_conflict_tuples(sources: list[MassFunction]) -> list[ConflictTuple]:
    """All focal-set tuples with empty joint intersection, in canonical order.

    Order is lexicographic by per-source bitmask, following the input
    source order (not the internal canonical order used for fusion).
    """
    common_frame(sources)
    if len(sources) < 2:
        raise FusionError("conflict enumeration needs at least two sources")
    out: list[ConflictTuple] = []
    focal_items = [tuple(m.masses.items()) for m in sources]
    for combo in product(*focal_items):
        inter, p = combo[0]
        for bits, v in combo[1:]:
            inter &= bits
            p *= v
        if inter == 0 and p > 0.0:
            assignment = tuple((i, bits, v) for i, (bits, v) in enumerate(combo))
            out.append(ConflictTuple(assignment, p))
    return out


def _check_pcr_sources(sources: list[MassFunction], max_sources: int) -> None:
    common_frame(sources)
    if len(sources) < 2:
        raise FusionError("PCR fusion needs at least two sources")
    if len(sources) > max_sources:
        raise TooManySourcesError(
            f"{len(sources)} sources exceed the enumeration cap of {max_sources}"
        )


def _fuse(sources: list[MassFunction], rule: str, max_sources: int) -> MassFunction:
    _check_pcr_sources(sources, max_sources)
    ordered = canonical_order(sources)
    buckets: dict[FocalSet, float] = {}
    focal_items = [tuple(m.masses.items()) for m in ordered]
    for combo in product(*focal_items):
        inter, p = combo[0]
        for bits, v in combo[1:]:
            inter &= bits
            p *= v
        if p == 0.0:
            continue
        if inter:
            buckets[inter] = buckets.get(inter, 0.0) + p
        else:
            weights = _group_weights(combo, rule)
            denom = 0.0
            for w in weights.values():
                denom += w
            for bits, w in weights.items():
                buckets[bits] = buckets.get(bits, 0.0) + p * w / denom
    masses = {b: buckets[b] for b in sorted(buckets) if buckets[b] != 0.0}
    return validate_mass(masses, sources[0].frame)


def fuse_pcr5(
    sources: list[MassFunction], *, max_sources: int = MAX_SOURCES_DEFAULT
) -> MassFunction:
    """Fuse under PCR5: conjunctive masses plus multiplicative-group shares.

    The two- and three-source cases follow the standard closed forms;
    larger source counts generalize the same per-tuple grouping. The
    result is invariant under permutation of ``sources`` (bit-exact)
    and assigns nothing to the empty set.
    """
    return _fuse(sources, "pcr5", max_sources)


def fuse_pcr6(
    sources: list[MassFunction], *, max_sources: int = MAX_SOURCES_DEFAULT
) -> MassFunction:
    """Fuse under PCR6: conjunctive masses plus additive-group shares.

    Equivalent to the permutation-sum formulation of the rule, evaluated
    tuple by tuple to avoid the factorial blowup. Coincides with
    :func:`fuse_pcr5` exactly for two sources.
    """
    return _fuse(sources, "pcr6", max_sources)


def trace(
    sources: list[MassFunction], rule: Rule, *, max_sources: int = MAX_SOURCES_DEFAULT
) -> RedistributionTrace:
    """Per-tuple redistribution record mirroring a by-hand computation.

    Entries follow the input source order so they can be read against
    the sources as given. Conjunctive masses plus the per-set share
    totals reconcile with the fused output to within accumulation
    round-off (the fuser evaluates in canonical source order).
    """
    if rule not in RULES:
        raise FusionError(f"unknown redistribution rule {rule!r}")
    _check_pcr_sources(sources, max_sources)
    entries = []
    for t in enumerate_conflict_tuples(sources):
        weights = _group_weights(((b, v) for _, b, v in t.assignment), rule)
        shares = _shares_from_weights(t.product, weights)
        entries.append(TraceEntry(t, rule, weights, shares))
    return RedistributionTrace(rule, tuple(entries))


def _closed_form_3(
    m1: MassFunction, m2: MassFunction, m3: MassFunction, rule: str
) -> MassFunction:
    """Shared skeleton of the 3-source closed forms.

    Walks every candidate element A of the combined focal universe and
    accumulates the nine redistribution terms: one block for tuples of
    three distinct sets, one for a repeated non-A set, one for A itself
    appearing twice. Zero-mass terms are skipped before any division.
    """
    common_frame([m1, m2, m3])
    base = conjunctive_combine([m1, m2, m3])
    g1, g2, g3 = m1.masses.get, m2.masses.get, m3.masses.get
    universe = sorted(set(m1.masses) | set(m2.masses) | set(m3.masses))
    pcr5 = rule == "pcr5"

    gains: dict[FocalSet, float] = {}
    for a in universe:
        a1, a2, a3 = g1(a, 0.0), g2(a, 0.0), g3(a, 0.0)
        acc = 0.0

        # Three distinct sets: no grouping, denominators are plain sums.
        for x in universe:
            if x == a:
                continue
            for y in universe:
                if y == a or y == x or a & x & y:
                    continue
                num = a1 * a1 * g2(x, 0.0) * g3(y, 0.0)
                if num:
                    acc += num / (a1 + g2(x, 0.0) + g3(y, 0.0))
                num = g1(y, 0.0) * a2 * a2 * g3(x, 0.0)
                if num:
                    acc += num / (g1(y, 0.0) + a2 + g3(x, 0.0))
                num = g1(x, 0.0) * g2(y, 0.0) * a3 * a3
                if num:
                    acc += num / (g1(x, 0.0) + g2(y, 0.0) + a3)

        for x in universe:
            if a & x:
                continue
            x1, x2, x3 = g1(x, 0.0), g2(x, 0.0), g3(x, 0.0)

            # A once, the other set repeated in the remaining two sources.
            num = a1 * a1 * x2 * x3
            if num:
                acc += num / (a1 + x2 * x3 if pcr5 else a1 + x2 + x3)
            num = x1 * a2 * a2 * x3
            if num:
                acc += num / (x1 * x3 + a2 if pcr5 else x1 + a2 + x3)
            num = x1 * x2 * a3 * a3
            if num:
                acc += num / (x1 * x2 + a3 if pcr5 else x1 + x2 + a3)

            # A repeated in two sources, the other set once.
            if pcr5:
                num = a1 * a1 * a2 * a2 * x3
                if num:
                    acc += num / (a1 * a2 + x3)
                num = x1 * a2 * a2 * a3 * a3
                if num:
                    acc += num / (x1 + a2 * a3)
                num = a1 * a1 * x2 * a3 * a3
                if num:
                    acc += num / (a1 * a3 + x2)
            else:
                num = (a1 * a1 * a2 + a1 * a2 * a2) * x3
                if num:
                    acc += num / (a1 + a2 + x3)
                num = x1 * (a2 * a2 * a3 + a2 * a3 * a3)
                if num:
                    acc += num / (x1 + a2 + a3)
                num = (a1 * a1 * a3 + a1 * a3 * a3) * x2
                if num:
                    acc += num / (a1 + x2 + a3)

        if acc:
            gains[a] = acc

    out: dict[FocalSet, float] = {}
    for b in sorted(set(base.masses) | set(gains)):
        v = base.masses.get(b, 0.0) + gains.get(b, 0.0)
        if v != 0.0:
            out[b] = v
    return validate_mass(out, m1.frame)


def closed_form_pcr5_3(
    m1: MassFunction, m2: MassFunction, m3: MassFunction
) -> MassFunction:
    """Direct 3-source PCR5 evaluation, without tuple enumeration.

    Repeated focal sets contribute squared masses in the numerators and
    multiplied group weights in the denominators. Agrees with
    :func:`fuse_pcr5` to within floating-point round-off.
    """
    return _closed_form_3(m1, m2, m3, "pcr5")


def closed_form_pcr6_3(
    m1: MassFunction, m2: MassFunction, m3: MassFunction
) -> MassFunction:
    """Direct 3-source PCR6 evaluation, without tuple enumeration.

    Same distinct-set terms as the PCR5 form; repeated sets contribute
    additively and every denominator is the plain sum of the three
    masses. Agrees with :func:`fuse_pcr6` to within round-off.
    """
    return _closed_form_3(m1, m2, m3, "pcr6")
