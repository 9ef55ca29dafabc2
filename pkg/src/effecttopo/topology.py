"""Order convergence and the order/interval topologies on finite carriers.

A sequence converges in order to ``a`` when monotone bounding sequences
``u`` (increasing with supremum ``a``) and ``v`` (decreasing with infimum
``a``) squeeze it.  Sequences are represented as *lassos* -- a finite
prefix followed by a cycle repeated forever -- which is enough to describe
every eventually-periodic sequence over a finite carrier.

In a finite poset a monotone sequence stabilizes, so a lasso converges in
order to ``a`` exactly when its cycle is constantly ``a``.  That reduction
is what :func:`order_converges` implements; the test suite keeps it honest
against an exhaustive search for bounding lassos that never uses the
shortcut.

Closed sets of the order topology are the sets closed under order limits.
Limits are a property of the tail, so quantifying over the cyclic tails of
lassos inside a candidate set covers every sequence the definition ranges
over; any limit escaping the set would knock the set out.  Both topologies
come out discrete on finite carriers -- computed, not assumed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import kernels
from .algebra import EffectAlgebra, _bits
from .errors import CarrierCapError, DimensionMismatchError

DEFAULT_TOPOLOGY_CAP = 16
DEFAULT_MAX_CYCLE = 3


@dataclass(frozen=True)
class LassoSequence:
    """An eventually periodic sequence: ``prefix`` then ``cycle`` forever."""

    prefix: tuple[int, ...]
    cycle: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(int(x) for x in self.prefix))
        object.__setattr__(self, "cycle", tuple(int(x) for x in self.cycle))
        if not self.cycle:
            raise ValueError("lasso cycle must be non-empty")

    def value_at(self, i: int) -> int:
        if i < len(self.prefix):
            return self.prefix[i]
        return self.cycle[(i - len(self.prefix)) % len(self.cycle)]

    def values(self) -> set[int]:
        return set(self.prefix) | set(self.cycle)


def _check_elements(alg: EffectAlgebra, seq: LassoSequence, limit: int) -> None:
    n = alg.n
    if not 0 <= limit < n:
        raise ValueError(f"limit index {limit} outside carrier of size {n}")
    for x in itertools.chain(seq.prefix, seq.cycle):
        if not 0 <= x < n:
            raise ValueError(f"sequence element {x} outside carrier of size {n}")


def order_converges(alg: EffectAlgebra, seq: LassoSequence, limit: int) -> bool:
    """Does the lasso converge in order to ``limit``?

    Monotone sequences in a finite poset are eventually constant, so the
    bounding pair exists iff the tail is eventually (hence cyclically)
    constant at the limit.  The 0-constant prefix always completes the
    increasing witness, and dually with 1 for the decreasing one.
    """
    alg._require_valid()
    _check_elements(alg, seq, limit)
    return all(x == limit for x in seq.cycle)


@dataclass(frozen=True)
class ClosedSetFamily:
    """A family of closed subsets of a finite carrier, as bitmasks."""

    carrier_size: int
    masks: frozenset[int]

    @property
    def full_mask(self) -> int:
        return (1 << self.carrier_size) - 1

    def contains(self, mask: int) -> bool:
        return mask in self.masks

    def is_discrete(self) -> bool:
        return len(self.masks) == 1 << self.carrier_size

    def closure_defects(self, *, pair_limit: int = 1 << 20, rng=None, samples: int = 2000) -> list[str]:
        """Violations of the closed-family laws, if any.

        Checks membership of the empty set and the carrier and closure under
        pairwise union/intersection -- exhaustively when the number of pairs
        is below ``pair_limit``, otherwise on a random sample.
        """
        out = []
        if 0 not in self.masks:
            out.append("empty set missing")
        if self.full_mask not in self.masks:
            out.append("carrier missing")
        members = sorted(self.masks)
        k = len(members)
        if k * k <= pair_limit:
            pairs = ((a, b) for a in members for b in members)
        else:
            if rng is None:
                import random

                rng = random.Random(0)
            pairs = ((rng.choice(members), rng.choice(members)) for _ in range(samples))
        for a, b in pairs:
            if a | b not in self.masks:
                out.append(f"union of {a} and {b} escapes the family")
                break
        for a, b in ((x, y) for x in members for y in members) if k * k <= pair_limit else ():
            if a & b not in self.masks:
                out.append(f"intersection of {a} and {b} escapes the family")
                break
        return out

    def member_sets(self) -> list[tuple[int, ...]]:
        return [tuple(_bits(m)) for m in sorted(self.masks)]

    def to_json_dict(self, labels) -> dict:
        return {
            "carrier": list(labels),
            "count": len(self.masks),
            "closed_sets": [[labels[i] for i in s] for s in self.member_sets()],
        }


def _cap_check(alg: EffectAlgebra, cap: int) -> None:
    if alg.n > cap:
        raise CarrierCapError(
            f"carrier size {alg.n} exceeds the power-set enumeration cap {cap}"
        )


def order_topology(
    alg: EffectAlgebra,
    *,
    carrier_cap: int = DEFAULT_TOPOLOGY_CAP,
    max_cycle: int = DEFAULT_MAX_CYCLE,
) -> ClosedSetFamily:
    """Closed sets of the order topology, from the definition.

    First pass: every cyclic tail over the carrier (up to ``max_cycle``) is
    asked, via :func:`order_converges`, for the limits it reaches; a pair
    (tail support, limit) with the limit outside the support would be the
    only way a set containing the tail could fail to contain the limit.
    Second pass: each of the ``2^n`` subsets is kept iff no escaping pair
    applies to it.  On finite carriers no pair escapes and the family comes
    out as the whole power set.
    """
    alg._require_valid()
    _cap_check(alg, carrier_cap)
    n = alg.n
    escapes: list[tuple[int, int]] = []
    for length in range(1, max_cycle + 1):
        for cyc in itertools.product(range(n), repeat=length):
            seq = LassoSequence((), cyc)
            support = 0
            for x in cyc:
                support |= 1 << x
            for a in range(n):
                if order_converges(alg, seq, a) and not support >> a & 1:
                    escapes.append((support, 1 << a))
    closed = []
    for mask in range(1 << n):
        ok = True
        for support, limit_bit in escapes:
            if support & ~mask == 0 and limit_bit & mask == 0:
                ok = False
                break
        if ok:
            closed.append(mask)
    return ClosedSetFamily(n, frozenset(closed))


def interval_topology(
    alg: EffectAlgebra,
    *,
    carrier_cap: int = DEFAULT_TOPOLOGY_CAP,
) -> ClosedSetFamily:
    """Closed sets generated by the order intervals ``[a, b]``.

    The intervals (plus the empty set and the carrier) form the closed
    subbasis; finite unions of them are the basic closed sets, and arbitrary
    intersections of those give the topology.  Both closure passes run on
    bitmasks in the kernel backend.
    """
    alg._require_valid()
    _cap_check(alg, carrier_cap)
    n = alg.n
    order = alg.order
    sub = {0, (1 << n) - 1}
    for a in range(n):
        for b in _bits(order.up[a]):
            sub.add(order.up[a] & order.down[b])
    basis = kernels.union_closure(sub, n)
    closed = kernels.intersection_closure(basis, n)
    return ClosedSetFamily(n, frozenset(closed))


def compare_topologies(first: ClosedSetFamily, second: ClosedSetFamily) -> str:
    """Relation of two closed-set families on the same carrier.

    Returns ``"equal"``, ``"finer"`` (first strictly contains second),
    ``"coarser"`` or ``"incomparable"``.
    """
    if first.carrier_size != second.carrier_size:
        raise DimensionMismatchError("cannot compare topologies on different carriers")
    if first.masks == second.masks:
        return "equal"
    if first.masks > second.masks:
        return "finer"
    if first.masks < second.masks:
        return "coarser"
    return "incomparable"
