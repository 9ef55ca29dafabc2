"""Parser, formatter and lowering for the ``.ea`` partial-sum table format.

The format is line oriented.  ``#`` starts a comment anywhere on a line and
blank lines are ignored.  The first directive must be the header::

    algebra <name>

followed by one or more element declarations and the defined sums::

    elements 0 a b 1
    sum a b = 1

Element labels are free-form tokens; they may not contain ``=`` or ``#``.
The labels ``0`` and ``1`` are mandatory and name the neutral element and
the top element.  Sums involving ``0`` never need to be written -- lowering
injects ``0 + x = x`` for every element -- but writing them is allowed as
long as they do not contradict the identity.  A clause may appear in either
orientation; repeating a clause with the same result is a warning, with a
different result an error.

Parsing never raises on bad input.  It returns a :class:`ParseOutcome`
holding the document (``None`` when any error was found) plus a list of
:class:`Diagnostic` records with 1-based line and column positions.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .algebra import DEFAULT_CARRIER_CAP, EffectAlgebra
from .errors import LoweringError

_TOKEN = re.compile(r"\S+")
_BAD_LABEL_CHARS = re.compile(r"[=#]")


@dataclass(frozen=True)
class Diagnostic:
    severity: str  # "error" | "warning"
    message: str
    line: int  # 1-based
    col: int  # 1-based

    def __str__(self) -> str:
        return f"{self.line}:{self.col}: {self.severity}: {self.message}"


@dataclass(frozen=True)
class SumClause:
    left: str
    right: str
    result: str
    line: int = 0
    left_col: int = 0
    right_col: int = 0
    result_col: int = 0

    @property
    def triple(self) -> tuple[str, str, str]:
        return (self.left, self.right, self.result)

    @property
    def pair(self) -> frozenset[str]:
        """Unordered operand pair; ``a + b`` and ``b + a`` share it."""
        return frozenset((self.left, self.right))


class EaDocument:
    """A parsed table: header name, element labels, explicit sum clauses.

    Equality ignores source positions, so a document survives a
    format/parse round trip unchanged.
    """

    def __init__(self, name: str, labels: tuple[str, ...], clauses: tuple[SumClause, ...]):
        self.name = name
        self.labels = tuple(labels)
        self.clauses = tuple(clauses)

    def _content(self):
        return (self.name, self.labels, tuple(c.triple for c in self.clauses))

    def __eq__(self, other) -> bool:
        if not isinstance(other, EaDocument):
            return NotImplemented
        return self._content() == other._content()

    def __hash__(self) -> int:
        return hash(self._content())

    def __repr__(self) -> str:
        return (
            f"EaDocument(name={self.name!r}, {len(self.labels)} elements, "
            f"{len(self.clauses)} clauses)"
        )


@dataclass
class ParseOutcome:
    document: EaDocument | None
    diagnostics: list[Diagnostic] = field(default_factory=list)

    @property
    def errors(self) -> list[Diagnostic]:
        return [d for d in self.diagnostics if d.severity == "error"]

    @property
    def warnings(self) -> list[Diagnostic]:
        return [d for d in self.diagnostics if d.severity == "warning"]

    @property
    def ok(self) -> bool:
        return self.document is not None


def _tokenize(line: str) -> list[tuple[str, int]]:
    """Split a line into (token, 1-based column) pairs, honouring comments."""
    cut = line.find("#")
    if cut >= 0:
        line = line[:cut]
    return [(m.group(), m.start() + 1) for m in _TOKEN.finditer(line)]


def parse_ea(text: str) -> ParseOutcome:
    diags: list[Diagnostic] = []

    def err(msg: str, line: int, col: int) -> None:
        diags.append(Diagnostic("error", msg, line, col))

    def warn(msg: str, line: int, col: int) -> None:
        diags.append(Diagnostic("warning", msg, line, col))

    name: str | None = None
    labels: list[str] = []
    label_set: set[str] = set()
    clauses: list[SumClause] = []
    first_elements_line: int | None = None
    header_line: int | None = None
    saw_directive = False

    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = _tokenize(raw)
        if not tokens:
            continue
        (head, head_col), rest = tokens[0], tokens[1:]

        if not saw_directive and head != "algebra":
            err("expected 'algebra <name>' header first", lineno, head_col)
        saw_directive = True

        if head == "algebra":
            if header_line is not None:
                err("duplicate 'algebra' header", lineno, head_col)
                continue
            header_line = lineno
            if len(rest) != 1:
                err("'algebra' takes exactly one name", lineno, head_col)
                continue
            token, col = rest[0]
            if _BAD_LABEL_CHARS.search(token):
                err(f"invalid name {token!r}", lineno, col)
                continue
            name = token
        elif head == "elements":
            if first_elements_line is None:
                first_elements_line = lineno
            if not rest:
                err("'elements' needs at least one label", lineno, head_col)
                continue
            for token, col in rest:
                if _BAD_LABEL_CHARS.search(token):
                    err(f"invalid label {token!r}", lineno, col)
                elif token in label_set:
                    err(f"duplicate element label {token!r}", lineno, col)
                else:
                    label_set.add(token)
                    labels.append(token)
        elif head == "sum":
            if len(rest) != 4 or rest[2][0] != "=":
                if len(rest) == 4:
                    err("expected '=' as third token of a sum clause", lineno, rest[2][1])
                else:
                    err("sum clause must read 'sum <a> <b> = <c>'", lineno, head_col)
                continue
            (a, a_col), (b, b_col), _eq, (c, c_col) = rest
            bad = False
            for token, col in ((a, a_col), (b, b_col), (c, c_col)):
                if _BAD_LABEL_CHARS.search(token):
                    err(f"invalid label {token!r}", lineno, col)
                    bad = True
            if bad:
                continue
            clauses.append(SumClause(a, b, c, lineno, a_col, b_col, c_col))
        else:
            err(f"unknown directive {head!r}", lineno, head_col)

    if header_line is None:
        err("missing 'algebra <name>' header", 1, 1)
    if not labels:
        err("no elements declared", header_line or 1, 1)
    else:
        anchor = first_elements_line or 1
        for required in ("0", "1"):
            if required not in label_set:
                err(f"the element label {required!r} is required", anchor, 1)

    # label resolution is deferred so declaration order never matters
    kept: list[SumClause] = []
    by_pair: dict[frozenset[str], SumClause] = {}
    for clause in clauses:
        unknown = False
        for token, col in (
            (clause.left, clause.left_col),
            (clause.right, clause.right_col),
            (clause.result, clause.result_col),
        ):
            if token not in label_set:
                err(f"unknown element label {token!r}", clause.line, col)
                unknown = True
        if unknown:
            continue
        prior = by_pair.get(clause.pair)
        if prior is None:
            by_pair[clause.pair] = clause
            kept.append(clause)
        elif prior.result == clause.result:
            warn(
                f"duplicate clause {clause.left} + {clause.right} = {clause.result} "
                f"(first given at {prior.line}:{prior.left_col})",
                clause.line,
                clause.left_col,
            )
        else:
            err(
                f"contradictory clause {clause.left} + {clause.right} = {clause.result}; "
                f"{prior.left} + {prior.right} = {prior.result} at {prior.line}:{prior.left_col}",
                clause.line,
                clause.left_col,
            )

    if any(d.severity == "error" for d in diags):
        return ParseOutcome(None, diags)
    assert name is not None
    return ParseOutcome(EaDocument(name, tuple(labels), tuple(kept)), diags)


def lower(doc: EaDocument, *, carrier_cap: int = DEFAULT_CARRIER_CAP) -> EffectAlgebra:
    """Turn a document into an :class:`EffectAlgebra` table.

    The identity clauses ``0 + x = x`` are injected for every element.  An
    explicit clause contradicting one of them raises :class:`LoweringError`;
    axiom checking beyond that is left to ``validate()`` on the result.
    """
    index = {label: i for i, label in enumerate(doc.labels)}
    zero = index["0"]
    one = index["1"]
    sums: dict[tuple[int, int], int] = {}
    for clause in doc.clauses:
        a, b, c = index[clause.left], index[clause.right], index[clause.result]
        if (a == zero and c != b) or (b == zero and c != a):
            raise LoweringError(
                f"clause {clause.left} + {clause.right} = {clause.result} at line "
                f"{clause.line} contradicts the implicit identity 0 + x = x"
            )
        sums[(a, b)] = c
    for x in range(len(doc.labels)):
        sums.setdefault((zero, x), x)
    return EffectAlgebra(doc.labels, zero, one, sums, name=doc.name, carrier_cap=carrier_cap)


def format_document(doc: EaDocument) -> str:
    """Canonical text: header, one ``elements`` line, clauses in given order."""
    lines = [f"algebra {doc.name}", "elements " + " ".join(doc.labels)]
    for clause in doc.clauses:
        lines.append(f"sum {clause.left} {clause.right} = {clause.result}")
    return "\n".join(lines) + "\n"


def format_algebra(alg: EffectAlgebra) -> str:
    """Render a table as ``.ea`` text, omitting the implicit zero clauses.

    The neutral and top elements are renamed to the mandatory labels ``0``
    and ``1`` if the algebra calls them something else.
    """
    labels = list(alg.labels)
    for idx, required in ((alg.zero, "0"), (alg.one, "1")):
        if labels[idx] != required:
            if required in labels:
                raise ValueError(
                    f"cannot rename bound element to {required!r}: label already in use"
                )
            labels[idx] = required
    lines = [f"algebra {alg.name or 'table'}", "elements " + " ".join(labels)]
    for (a, b), c in sorted(alg.to_sum_dict(skip_zero=True).items()):
        lines.append(f"sum {labels[a]} {labels[b]} = {labels[c]}")
    return "\n".join(lines) + "\n"
