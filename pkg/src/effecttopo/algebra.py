"""Finite effect algebras as explicit partial-sum tables.

An effect algebra is a carrier with two distinguished elements ``0`` and
``1`` and a *partial* binary sum subject to four laws:

* commutativity: if ``a+b`` is defined then so is ``b+a`` and they agree;
* associativity: if ``a+b`` and ``(a+b)+c`` are defined, then ``b+c``
  and ``a+(b+c)`` are defined and ``(a+b)+c = a+(b+c)``;
* orthosupplementation: every ``a`` has exactly one ``a'`` with ``a+a' = 1``;
* the zero-one law: if ``a+1`` is defined then ``a = 0``.

Everything here is desk scale.  The carrier is a list of labelled elements
addressed by index, the sum is a dense ``(n, n)`` integer table with ``-1``
for "undefined", and every law is checked by exhaustive enumeration rather
than trusted.  Derived structure -- the order ``a <= b`` iff ``a + c = b``
for some ``c``, orthosupplements, sharpness, covering edges -- is computed
only from tables that pass validation, and is cached immutably.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Mapping, Sequence

import numpy as np

from .errors import CarrierCapError, InvalidAlgebraError, MalformedTableError

UNDEFINED = -1
DEFAULT_CARRIER_CAP = 256

_ATOM_LETTERS = "pqrstuvw"


@dataclass(frozen=True)
class Violation:
    """One failed axiom instance: which law, which elements, and why."""

    axiom: str
    witness: tuple[int, ...]
    message: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def by_axiom(self, axiom: str) -> tuple[Violation, ...]:
        return tuple(v for v in self.violations if v.axiom == axiom)

    def witnesses(self, axiom: str) -> set[tuple[int, ...]]:
        return {v.witness for v in self.by_axiom(axiom)}


@dataclass(frozen=True)
class DerivedOrder:
    """Order structure computed from a validated table.

    ``up[a]`` / ``down[a]`` are bitmasks over the carrier: bit ``b`` of
    ``up[a]`` is set iff ``a <= b``.  ``ortho[a]`` is the unique index with
    ``a + ortho[a] = 1``.
    """

    up: tuple[int, ...]
    down: tuple[int, ...]
    ortho: tuple[int, ...]

    def leq(self, a: int, b: int) -> bool:
        return bool(self.up[a] >> b & 1)


def _bits(mask: int) -> Iterator[int]:
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


class EffectAlgebra:
    """A finite partial-sum table over labelled elements.

    ``sums`` may contain either or both orientations of each pair; the
    missing orientation is filled in here.  Supplying *conflicting*
    orientations is a hard structural error, not an axiom violation.
    """

    def __init__(
        self,
        labels: Sequence[str],
        zero: int,
        one: int,
        sums: Mapping[tuple[int, int], int],
        *,
        name: str = "",
        carrier_cap: int = DEFAULT_CARRIER_CAP,
    ):
        labels = tuple(str(x) for x in labels)
        n = len(labels)
        if n < 2:
            raise MalformedTableError("carrier needs at least the elements 0 and 1")
        if n > carrier_cap:
            raise CarrierCapError(f"carrier size {n} exceeds cap {carrier_cap}")
        if len(set(labels)) != n:
            raise MalformedTableError("duplicate element labels in carrier")
        if not (0 <= zero < n and 0 <= one < n):
            raise MalformedTableError("zero/one indices out of range")
        if zero == one:
            raise MalformedTableError("zero and one must be distinct")

        table = np.full((n, n), UNDEFINED, dtype=np.int32)
        for (a, b), c in sums.items():
            for x in (a, b, c):
                if not (0 <= int(x) < n):
                    raise MalformedTableError(
                        f"sum clause ({a}, {b}) -> {c} references an unknown element"
                    )
            prev = int(table[a, b])
            if prev != UNDEFINED and prev != c:
                raise MalformedTableError(
                    f"conflicting results for {labels[a]} + {labels[b]}: "
                    f"{labels[prev]} vs {labels[c]}"
                )
            mirrored = int(table[b, a])
            if mirrored != UNDEFINED and mirrored != c:
                raise MalformedTableError(
                    f"conflicting orientations for {labels[a]} + {labels[b]}: "
                    f"{labels[mirrored]} vs {labels[c]}"
                )
            table[a, b] = c
            table[b, a] = c
        table.setflags(write=False)

        self._labels = labels
        self._zero = int(zero)
        self._one = int(one)
        self._table = table
        self._name = name or "algebra"

    # -- plain accessors -------------------------------------------------

    @property
    def n(self) -> int:
        return len(self._labels)

    @property
    def labels(self) -> tuple[str, ...]:
        return self._labels

    @property
    def zero(self) -> int:
        return self._zero

    @property
    def one(self) -> int:
        return self._one

    @property
    def name(self) -> str:
        return self._name

    @property
    def table(self) -> np.ndarray:
        return self._table

    def label(self, a: int) -> str:
        return self._labels[a]

    def index(self, label: str) -> int:
        try:
            return self._labels.index(label)
        except ValueError:
            raise KeyError(f"no element labelled {label!r}") from None

    def defined(self, a: int, b: int) -> bool:
        return int(self._table[a, b]) != UNDEFINED

    def sum_of(self, a: int, b: int) -> int | None:
        c = int(self._table[a, b])
        return None if c == UNDEFINED else c

    def to_sum_dict(self, *, skip_zero: bool = False) -> dict[tuple[int, int], int]:
        """One orientation (a <= b) of every defined clause.

        ``skip_zero`` drops clauses involving the zero element, which are
        implicit in the text format.
        """
        out: dict[tuple[int, int], int] = {}
        for a in range(self.n):
            for b in range(a, self.n):
                c = int(self._table[a, b])
                if c == UNDEFINED:
                    continue
                if skip_zero and (a == self._zero or b == self._zero):
                    continue
                out[(a, b)] = c
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EffectAlgebra):
            return NotImplemented
        return (
            self._labels == other._labels
            and self._zero == other._zero
            and self._one == other._one
            and np.array_equal(self._table, other._table)
        )

    def __hash__(self) -> int:
        return hash((self._labels, self._zero, self._one, self._table.tobytes()))

    def __repr__(self) -> str:
        return f"EffectAlgebra({self._name!r}, n={self.n})"

    # -- validation ------------------------------------------------------

    def validate(self) -> ValidationReport:
        """Check all four laws exhaustively.  The report is cached."""
        cached = getattr(self, "_report", None)
        if cached is not None:
            return cached
        out: list[Violation] = []
        out.extend(self._check_commutativity())
        out.extend(self._check_associativity())
        out.extend(self._check_orthosupplements())
        out.extend(self._check_unit_law())
        report = ValidationReport(tuple(out))
        object.__setattr__(self, "_report", report)
        return report

    def _check_commutativity(self) -> list[Violation]:
        tab = self._table
        out = []
        for a, b in np.argwhere(tab != tab.T):
            a, b = int(a), int(b)
            if a < b:
                out.append(
                    Violation(
                        "commutativity",
                        (a, b),
                        f"{self.label(a)} + {self.label(b)} disagrees with its mirror",
                    )
                )
        return out

    def _check_associativity(self) -> list[Violation]:
        tab = self._table
        labels = self._labels
        out = []
        for pair in np.argwhere(tab != UNDEFINED):
            a, b = int(pair[0]), int(pair[1])
            s = int(tab[a, b])
            cs = np.nonzero(tab[s] != UNDEFINED)[0]
            if cs.size == 0:
                continue
            bc = tab[b, cs]
            for c in cs[bc == UNDEFINED]:
                c = int(c)
                out.append(
                    Violation(
                        "associativity",
                        (a, b, c),
                        f"({labels[a]}+{labels[b]})+{labels[c]} is defined "
                        f"but {labels[b]}+{labels[c]} is not",
                    )
                )
            keep = bc != UNDEFINED
            cs2 = cs[keep]
            bc2 = bc[keep]
            lhs = tab[s, cs2]
            rhs = tab[a, bc2]
            for c, u, left, right in zip(cs2, bc2, lhs, rhs):
                c, u, left, right = int(c), int(u), int(left), int(right)
                if right == UNDEFINED:
                    out.append(
                        Violation(
                            "associativity",
                            (a, b, c),
                            f"({labels[a]}+{labels[b]})+{labels[c]} is defined "
                            f"but {labels[a]}+({labels[b]}+{labels[c]}) is not",
                        )
                    )
                elif right != left:
                    out.append(
                        Violation(
                            "associativity",
                            (a, b, c),
                            f"({labels[a]}+{labels[b]})+{labels[c]} = {labels[left]} "
                            f"but {labels[a]}+({labels[b]}+{labels[c]}) = {labels[right]}",
                        )
                    )
        return out

    def _check_orthosupplements(self) -> list[Violation]:
        tab = self._table
        out = []
        for a in range(self.n):
            partners = [int(b) for b in np.nonzero(tab[a] == self._one)[0]]
            if not partners:
                out.append(
                    Violation(
                        "orthosupplement", (a,), f"{self.label(a)} has no orthosupplement"
                    )
                )
            elif len(partners) > 1:
                names = ", ".join(self.label(b) for b in partners)
                out.append(
                    Violation(
                        "orthosupplement",
                        (a, *partners),
                        f"{self.label(a)} has several orthosupplements: {names}",
                    )
                )
        return out

    def _check_unit_law(self) -> list[Violation]:
        tab = self._table
        out = []
        for b in np.nonzero(tab[self._one] != UNDEFINED)[0]:
            b = int(b)
            if b != self._zero:
                out.append(
                    Violation(
                        "zero-one",
                        (b,),
                        f"{self.label(b)} + 1 is defined but {self.label(b)} is not 0",
                    )
                )
        return out

    def _require_valid(self) -> None:
        report = self.validate()
        if not report.ok:
            first = report.violations[0]
            raise InvalidAlgebraError(
                f"{self._name}: {len(report.violations)} axiom violation(s); "
                f"first: [{first.axiom}] {first.message}"
            )

    # -- derived structure ----------------------------------------------

    @cached_property
    def order(self) -> DerivedOrder:
        """The induced order, with its own sanity sweep.

        A table that passed validation always yields a bounded poset with
        an involutive, antitone orthosupplementation; the sweep below is a
        guard against validator bugs, not a mathematical necessity.
        """
        self._require_valid()
        tab = self._table
        n = self.n
        up = [0] * n
        for a in range(n):
            mask = 0
            for v in np.unique(tab[a][tab[a] != UNDEFINED]):
                mask |= 1 << int(v)
            up[a] = mask
        down = [0] * n
        for a in range(n):
            m = up[a]
            bit = 1 << a
            for b in _bits(m):
                down[b] |= bit
        ortho = [int(np.nonzero(tab[a] == self._one)[0][0]) for a in range(n)]

        full = (1 << n) - 1
        for a in range(n):
            if not up[a] >> a & 1:
                raise InvalidAlgebraError(f"order not reflexive at {self.label(a)}")
            if up[a] & down[a] != 1 << a:
                raise InvalidAlgebraError(f"order not antisymmetric at {self.label(a)}")
            for b in _bits(up[a]):
                if up[b] & ~up[a]:
                    raise InvalidAlgebraError("order not transitive")
                if not up[ortho[b]] >> ortho[a] & 1:
                    raise InvalidAlgebraError("orthosupplement not antitone")
            if ortho[ortho[a]] != a:
                raise InvalidAlgebraError("orthosupplement not involutive")
        if up[self._zero] != full or down[self._one] != full:
            raise InvalidAlgebraError("0 and 1 are not the bounds of the order")
        return DerivedOrder(tuple(up), tuple(down), tuple(ortho))

    def leq(self, a: int, b: int) -> bool:
        return self.order.leq(a, b)

    def ortho(self, a: int) -> int:
        return self.order.ortho[a]

    def is_sharp(self, a: int) -> bool:
        """True iff the only common lower bound of ``a`` and ``a'`` is 0.

        Works in any effect algebra: no meet operation is assumed, the set
        of common lower bounds is inspected directly.
        """
        order = self.order
        common = order.down[a] & order.down[order.ortho[a]]
        return common == 1 << self._zero

    def hasse_edges(self) -> list[tuple[int, int]]:
        """Covering pairs ``(a, b)``: ``a < b`` with nothing in between."""
        order = self.order
        edges = []
        for a in range(self.n):
            strict_up = order.up[a] & ~(1 << a)
            for b in _bits(strict_up):
                between = strict_up & order.down[b] & ~(1 << b)
                if between == 0:
                    edges.append((a, b))
        return edges


# -- module-level operation surface --------------------------------------


def validate_axioms(alg: EffectAlgebra) -> ValidationReport:
    return alg.validate()


def derive_order(alg: EffectAlgebra) -> DerivedOrder:
    return alg.order


def is_sharp(alg: EffectAlgebra, a: int) -> bool:
    return alg.is_sharp(a)


def hasse_diagram(alg: EffectAlgebra) -> list[tuple[int, int]]:
    return alg.hasse_edges()


# -- standard constructions ----------------------------------------------


def chain(n: int, *, carrier_cap: int = DEFAULT_CARRIER_CAP) -> EffectAlgebra:
    """The linear algebra {0, 1/n, ..., 1} with i+j defined iff i+j <= n."""
    if n < 1:
        raise ValueError("chain(n) needs n >= 1")
    if n + 1 > carrier_cap:
        raise CarrierCapError(f"chain({n}) has {n + 1} elements, cap is {carrier_cap}")
    labels = ["0"] + [f"{i}/{n}" for i in range(1, n)] + ["1"]
    sums = {
        (i, j): i + j for i in range(n + 1) for j in range(i, n + 1) if i + j <= n
    }
    return EffectAlgebra(labels, 0, n, sums, name=f"chain{n}", carrier_cap=carrier_cap)


def boolean_algebra(k: int, *, carrier_cap: int = DEFAULT_CARRIER_CAP) -> EffectAlgebra:
    """Subsets of a k-element set; the sum is union of disjoint subsets."""
    if k < 1:
        raise ValueError("boolean_algebra(k) needs k >= 1")
    if k > len(_ATOM_LETTERS):
        raise CarrierCapError(f"boolean_algebra supports at most k={len(_ATOM_LETTERS)}")
    size = 1 << k
    if size > carrier_cap:
        raise CarrierCapError(f"boolean_algebra({k}) has {size} elements, cap is {carrier_cap}")
    full = size - 1

    def _label(mask: int) -> str:
        if mask == 0:
            return "0"
        if mask == full:
            return "1"
        return "".join(_ATOM_LETTERS[i] for i in range(k) if mask >> i & 1)

    labels = [_label(m) for m in range(size)]
    sums = {
        (a, b): a | b for a in range(size) for b in range(a, size) if a & b == 0
    }
    return EffectAlgebra(labels, 0, full, sums, name=f"boolean{k}", carrier_cap=carrier_cap)


def horizontal_sum(
    parts: Sequence[EffectAlgebra],
    *,
    name: str = "",
    carrier_cap: int = DEFAULT_CARRIER_CAP,
) -> EffectAlgebra:
    """Glue algebras at their shared 0 and 1; cross-component sums stay undefined.

    Each part must itself be valid.  Middle elements keep their labels,
    prefixed with a component letter to stay unique.
    """
    if len(parts) < 2:
        raise ValueError("horizontal_sum needs at least two components")
    for part in parts:
        part._require_valid()

    labels = ["0"]
    # global index of each part's element, filled per component
    maps: list[dict[int, int]] = []
    for i, part in enumerate(parts):
        local: dict[int, int] = {}
        for a in range(part.n):
            if a == part.zero:
                local[a] = 0
            elif a == part.one:
                local[a] = -1  # patched to the final index below
            else:
                local[a] = len(labels)
                labels.append(f"{chr(ord('a') + i)}:{part.label(a)}")
        maps.append(local)
    one_index = len(labels)
    labels.append("1")
    if len(labels) > carrier_cap:
        raise CarrierCapError(f"horizontal sum has {len(labels)} elements, cap is {carrier_cap}")
    for local in maps:
        for a, g in local.items():
            if g == -1:
                local[a] = one_index

    sums: dict[tuple[int, int], int] = {(0, g): g for local in maps for g in local.values()}
    sums[(0, 0)] = 0
    sums[(0, one_index)] = one_index
    for part, local in zip(parts, maps):
        for a in range(part.n):
            for b in range(a, part.n):
                c = part.sum_of(a, b)
                if c is None:
                    continue
                sums[(local[a], local[b])] = local[c]
    return EffectAlgebra(
        labels, 0, one_index, sums,
        name=name or "hsum(" + ",".join(p.name for p in parts) + ")",
        carrier_cap=carrier_cap,
    )


def diamond() -> EffectAlgebra:
    """Four elements 0 < a, b < 1 with a+a = b+b = 1 and a+b undefined."""
    return horizontal_sum([chain(2), chain(2)], name="diamond")


def standard_corpus(
    *,
    max_chain: int = 64,
    max_boolean: int = 4,
) -> list[EffectAlgebra]:
    """The fixed family of reference algebras used by the test batteries."""
    corpus = [chain(n) for n in range(1, max_chain + 1)]
    corpus += [boolean_algebra(k) for k in range(1, max_boolean + 1)]
    corpus.append(diamond())
    corpus.append(horizontal_sum([chain(2), chain(2), chain(2)], name="hsum3xC2"))
    corpus.append(horizontal_sum([chain(3), chain(2)], name="hsumC3C2"))
    corpus.append(horizontal_sum([boolean_algebra(2), chain(4)], name="hsumB2C4"))
    return corpus
