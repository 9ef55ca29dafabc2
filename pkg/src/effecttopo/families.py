"""Sequence-space counterexample families and convergence checkers.

The separation of the four topologies on effects -- interval, weak, strong,
order -- is carried by three classic families of operators on the square-
summable sequence space.  Each family acts on a finite block of coordinates
and vanishes elsewhere, so every quantity below is computed exactly on the
active block, for arbitrarily large indices:

``example3``
    Rank-one projections onto ``(cos(1/n), sin(1/n))`` in the first two
    coordinates.  Norm-converges to the projection onto the first basis
    vector; the two-parameter obstruction grid shows the limit set is
    order closed yet not strongly closed.
``example4``
    Projections onto ``(e_first + e_n)/sqrt(2)``: a half-block escaping to
    infinity.  Weakly null off the diagonal but the strong residual at the
    first basis vector stays 1/2, and the weak limit is the *unsharp*
    effect ``diag(1/2, 0, ...)``.
``example5``
    The same rotating block as ``example3`` read against Loewner intervals:
    no interval with a nonzero floor ever traps the tail, although the
    family norm-converges into the interval's interior.

``vigier_check`` and ``squeeze_sot_check`` exercise the positive direction:
monotone bounded chains of effects converge strongly to their least upper
bound, which is the mechanism placing the strong topology below the order
topology.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable, Mapping

import numpy as np

from . import matrices
from .errors import NumericsError, ScenarioFormatError
from .matrices import DEFAULT_TOL, Tolerances


class SparseVector:
    """A finitely supported vector with integer coordinates.

    Inner products and norms are exact over the support; iteration order is
    always sorted coordinate order so repeated evaluations are bit-stable.
    """

    __slots__ = ("_d",)

    def __init__(self, entries: Mapping[int, complex] | Iterable[tuple[int, complex]] = ()):
        d = dict(entries)
        clean: dict[int, complex] = {}
        for k, val in d.items():
            k = int(k)
            if k < 0:
                raise ValueError("coordinates must be non-negative")
            val = complex(val)
            if val != 0:
                clean[k] = val
        self._d = clean

    @classmethod
    def basis(cls, i: int) -> "SparseVector":
        return cls({i: 1.0})

    def coeff(self, i: int) -> complex:
        return self._d.get(i, 0j)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self._d))

    def inner(self, other: "SparseVector") -> complex:
        # linear in the first argument: (x, y) = sum x_i * conj(y_i)
        total = 0j
        for i in self.support:
            yi = other._d.get(i)
            if yi is not None:
                total += self._d[i] * yi.conjugate()
        return total

    def norm(self) -> float:
        return math.sqrt(sum(abs(v) ** 2 for v in self._d.values()))

    def add(self, other: "SparseVector") -> "SparseVector":
        keys = set(self._d) | set(other._d)
        return SparseVector({k: self.coeff(k) + other.coeff(k) for k in keys})

    def sub(self, other: "SparseVector") -> "SparseVector":
        keys = set(self._d) | set(other._d)
        return SparseVector({k: self.coeff(k) - other.coeff(k) for k in keys})

    def scale(self, c: complex) -> "SparseVector":
        return SparseVector({k: c * v for k, v in self._d.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, SparseVector) and self._d == other._d

    def __repr__(self) -> str:
        inside = ", ".join(f"{k}: {v:.6g}" for k, v in sorted(self._d.items()))
        return f"SparseVector({{{inside}}})"


@dataclass(frozen=True)
class OperatorFamily:
    """A sequence of operators given by their active blocks.

    ``block(n)`` returns ``(coords, matrix)``: the finitely many coordinates
    the n-th operator touches and its dense matrix there.  The operator acts
    as zero outside the block.
    """

    name: str
    limit_label: str
    block: Callable[[int], tuple[tuple[int, ...], np.ndarray]]
    limit_block: tuple[tuple[int, ...], np.ndarray]

    def _apply_block(self, coords, m, x: SparseVector) -> SparseVector:
        vals = [x.coeff(c) for c in coords]
        out = m @ np.array(vals, dtype=np.complex128)
        return SparseVector({c: out[i] for i, c in enumerate(coords)})

    def apply(self, n: int, x: SparseVector) -> SparseVector:
        coords, m = self.block(n)
        return self._apply_block(coords, m, x)

    def limit_apply(self, x: SparseVector) -> SparseVector:
        coords, m = self.limit_block
        return self._apply_block(coords, m, x)

    def active_coords(self, n: int) -> tuple[int, ...]:
        return self.block(n)[0]

    def difference_matrix(self, n: int) -> np.ndarray:
        """Dense matrix of ``P_n - limit`` on the union of active blocks."""
        coords_n, m_n = self.block(n)
        coords_l, m_l = self.limit_block
        coords = tuple(sorted(set(coords_n) | set(coords_l)))
        pos = {c: i for i, c in enumerate(coords)}
        diff = np.zeros((len(coords), len(coords)), dtype=np.complex128)
        for i, ci in enumerate(coords_n):
            for j, cj in enumerate(coords_n):
                diff[pos[ci], pos[cj]] += m_n[i, j]
        for i, ci in enumerate(coords_l):
            for j, cj in enumerate(coords_l):
                diff[pos[ci], pos[cj]] -= m_l[i, j]
        return diff


def _require_index(n: int) -> None:
    if n < 1:
        raise ValueError(f"family index must be >= 1, got {n}")


def _rotating_block(n: int) -> tuple[tuple[int, ...], np.ndarray]:
    _require_index(n)
    theta = 1.0 / n
    co, si = math.cos(theta), math.sin(theta)
    m = np.array(
        [[co * co, si * co], [si * co, si * si]], dtype=np.complex128
    )
    return (0, 1), m


def _escaping_half_block(n: int) -> tuple[tuple[int, ...], np.ndarray]:
    _require_index(n)
    if n == 1:
        return (0,), np.array([[1.0]], dtype=np.complex128)
    return (0, n - 1), np.array([[0.5, 0.5], [0.5, 0.5]], dtype=np.complex128)


_RANK_ONE_LIMIT = ((0,), np.array([[1.0]], dtype=np.complex128))
_HALF_LIMIT = ((0,), np.array([[0.5]], dtype=np.complex128))

FAMILIES: dict[str, OperatorFamily] = {
    "example3": OperatorFamily(
        "example3",
        "projection onto the first basis vector",
        _rotating_block,
        _RANK_ONE_LIMIT,
    ),
    "example4": OperatorFamily(
        "example4",
        "the unsharp effect (1/2) * projection onto the first basis vector",
        _escaping_half_block,
        _HALF_LIMIT,
    ),
    "example5": OperatorFamily(
        "example5",
        "projection onto the first basis vector",
        _rotating_block,
        _RANK_ONE_LIMIT,
    ),
}


def family(name: str) -> OperatorFamily:
    try:
        return FAMILIES[name]
    except KeyError:
        raise ValueError(f"unknown family {name!r}; known: {sorted(FAMILIES)}") from None


def wot_residual(fam: OperatorFamily, n: int, x: SparseVector, y: SparseVector) -> float:
    """``|(P_n x, y) - (P x, y)|`` against the family's limit."""
    return abs(fam.apply(n, x).inner(y) - fam.limit_apply(x).inner(y))


def sot_residual(fam: OperatorFamily, n: int, x: SparseVector) -> float:
    """``||P_n x - P x||`` against the family's limit."""
    return fam.apply(n, x).sub(fam.limit_apply(x)).norm()


def norm_distance(fam: OperatorFamily, n: int, tol: Tolerances = DEFAULT_TOL) -> float:
    """Operator norm ``||P_n - P||``, exact on the joint active block."""
    diff = fam.difference_matrix(n)
    w, _ = matrices.eig_sym(diff, tol, vectors=False)
    return float(max(abs(w[0]), abs(w[-1])))


def upper_bound_obstruction(n: int, c: float, tol: Tolerances = DEFAULT_TOL) -> bool:
    """Can no effect of the form ``limit + c * (complement)`` dominate ``P_n``?

    For the rotating family, an upper bound ``V`` of both the limit and the
    n-th projection forces the active block of ``V - P_n`` to be PSD with
    trailing diagonal ``c - sin^2``; its determinant is ``sin^2 * (c - 1)``,
    negative for every ``c`` in ``[0, 1)``.  Returns True iff the block
    fails PSD, i.e. the candidate bound is obstructed.  The determinant is
    cross-checked against the closed form and drift raises
    :class:`NumericsError`.
    """
    _require_index(n)
    if not 0.0 <= c < 1.0:
        raise ValueError(f"c must lie in [0, 1), got {c}")
    theta = 1.0 / n
    si, co = math.sin(theta), math.cos(theta)
    m = np.array(
        [
            [1.0 - co * co, -si * co],
            [-si * co, c - si * si],
        ],
        dtype=np.complex128,
    )
    det = (m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]).real
    analytic = si * si * (c - 1.0)
    if abs(det - analytic) > 1e-12:
        raise NumericsError(
            f"determinant drifted from its closed form: {det} vs {analytic}"
        )
    return not matrices.is_psd(m, tol)


def interval_floor_obstruction(n: int, r: float) -> bool:
    """Is ``diag(r, 0)`` refused as a Loewner floor of the n-th rotation?

    A closed interval trapping the tail of the rotating family would need a
    floor below every ``P_n``; any ``r > 0`` fails because the off-diagonal
    of the block never vanishes.  The question is the *sign* of the smallest
    eigenvalue of the 2x2 block of ``P_n - diag(r, 0)``, which for deep
    tails (large ``n``, tiny ``r``) sits far below any generic PSD tolerance
    band, so it is decided in closed form: the trace ``1 - r`` is
    nonnegative on the domain, hence the minimum eigenvalue is negative
    exactly when the determinant is.  The determinant of the numeric block
    is cross-checked against its analytic value ``-r * sin^2(1/n)``; drift
    raises :class:`NumericsError`.

    ``r = 0`` is genuinely below everything, which callers can confirm
    directly with :func:`matrices.loewner_leq`.
    """
    _require_index(n)
    if not 0.0 < r <= 1.0:
        raise ValueError(f"r must lie in (0, 1], got {r}")
    theta = 1.0 / n
    si, co = math.sin(theta), math.cos(theta)
    det = (co * co - r) * (si * si) - (si * co) ** 2
    analytic = -r * si * si
    if abs(det - analytic) > 1e-12:
        raise NumericsError(
            f"determinant drifted from its closed form: {det} vs {analytic}"
        )
    return det < 0.0


# -- monotone squeeze scenarios -------------------------------------------


@dataclass(frozen=True)
class SqueezeFamily:
    """Monotone operator chains squeezing a middle sequence onto a limit.

    ``lower`` increases to ``limit``, ``upper`` decreases to it, and
    ``middle`` rides in between.  ``n_max`` bounds the usable index for
    finite (file-loaded) scenarios; ``None`` means unbounded.
    """

    name: str
    dim: int
    lower: Callable[[int], np.ndarray]
    upper: Callable[[int], np.ndarray]
    middle: Callable[[int], np.ndarray]
    limit: np.ndarray
    n_max: int | None = None


@dataclass(frozen=True)
class StageResult:
    name: str
    passed: bool
    detail: str = ""
    witness: int | None = None
    residual: float | None = None


@dataclass(frozen=True)
class ConvergenceReport:
    scenario: str
    kind: str
    passed: bool
    stages: tuple[StageResult, ...]

    def stage(self, name: str) -> StageResult:
        for s in self.stages:
            if s.name == name:
                return s
        raise KeyError(name)

    def to_json_dict(self) -> dict:
        return {
            "scenario": self.scenario,
            "kind": self.kind,
            "passed": self.passed,
            "stages": [
                {
                    "name": s.name,
                    "passed": s.passed,
                    "detail": s.detail,
                    "witness": s.witness,
                    "residual": s.residual,
                }
                for s in self.stages
            ],
        }


def _residual_series(
    op: Callable[[int], np.ndarray],
    limit: np.ndarray,
    vectors,
    ns,
) -> list[float]:
    out = []
    for n in ns:
        diff = op(n) - limit
        out.append(max(float(np.linalg.norm(diff @ x)) for x in vectors))
    return out

def _decreasing_to_tolerance(series: list[float], slack: float) -> tuple[bool, int | None, float]:
    """(ok, first bad index, worst increase) for a should-be-decreasing series."""
    worst = 0.0
    bad = None
    for i in range(1, len(series)):
        inc = series[i] - series[i - 1]
        if inc > worst:
            worst = inc
        if inc > slack and bad is None:
            bad = i
    return bad is None, bad, worst


def _check_range(sf: SqueezeFamily, n_max: int) -> range:
    if sf.n_max is not None:
        n_max = min(n_max, sf.n_max)
    if n_max < 1:
        raise ValueError("need at least one index to check")
    return range(1, n_max + 1)


def vigier_check(
    sf: SqueezeFamily,
    n_max: int = 1000,
    test_vectors=None,
    tol: Tolerances = DEFAULT_TOL,
    slack: float | None = None,
) -> ConvergenceReport:
    """Monotone-chain convergence battery for a squeeze scenario.

    Verifies, index by index: the lower chain increases, the upper chain
    decreases, the chains bracket the middle one, everything stays below the
    limit from the right side, strong residuals against the limit decrease
    (within ``slack``), and -- when the family commutes with its limit --
    the limit matches the coordinatewise supremum of the lower chain in the
    limit's eigenbasis.
    """
    slack = tol.conv if slack is None else slack
    ns = _check_range(sf, n_max)
    vectors = dense_test_vectors(sf.dim) if test_vectors is None else test_vectors
    stages: list[StageResult] = []

    def chain_monotone(op, increasing: bool, name: str):
        for n in ns[:-1]:
            a, b = op(n), op(n + 1)
            lo, hi = (a, b) if increasing else (b, a)
            if not matrices.loewner_leq(lo, hi, tol):
                stages.append(
                    StageResult(name, False, "monotonicity breaks", witness=n)
                )
                return
        stages.append(StageResult(name, True, f"checked n=1..{ns[-1]}"))

    chain_monotone(sf.lower, True, "lower-chain-increasing")
    chain_monotone(sf.upper, False, "upper-chain-decreasing")

    between_bad = None
    for n in ns:
        if not (
            matrices.loewner_leq(sf.lower(n), sf.middle(n), tol)
            and matrices.loewner_leq(sf.middle(n), sf.upper(n), tol)
        ):
            between_bad = n
            break
    stages.append(
        StageResult(
            "chains-bracket-middle",
            between_bad is None,
            "lower <= middle <= upper" if between_bad is None else "bracketing fails",
            witness=between_bad,
        )
    )

    bounded_bad = None
    for n in ns:
        if not matrices.loewner_leq(sf.lower(n), sf.limit, tol):
            bounded_bad = n
            break
    stages.append(
        StageResult(
            "lower-chain-below-limit",
            bounded_bad is None,
            witness=bounded_bad,
        )
    )

    for label, op in (("lower", sf.lower), ("middle", sf.middle), ("upper", sf.upper)):
        series = _residual_series(op, sf.limit, vectors, ns)
        ok, bad, worst = _decreasing_to_tolerance(series, slack)
        stages.append(
            StageResult(
                f"{label}-residuals-decreasing",
                ok,
                f"final residual {series[-1]:.3e}, worst increase {worst:.3e}",
                witness=bad,
                residual=series[-1],
            )
        )

    stages.append(_supremum_stage(sf, ns, tol))

    passed = all(s.passed for s in stages)
    return ConvergenceReport(sf.name, "monotone-limit", passed, tuple(stages))


def _supremum_stage(sf: SqueezeFamily, ns: range, tol: Tolerances) -> StageResult:
    sample = sorted({ns[0], ns[len(ns) // 2], ns[-1], min(ns[-1], 7)})
    comm = max(
        float(np.linalg.norm(sf.lower(n) @ sf.limit - sf.limit @ sf.lower(n)))
        for n in sample
    )
    if comm > math.sqrt(tol.herm):
        return StageResult(
            "commuting-supremum", True, "family does not commute with its limit; skipped"
        )
    w, v = matrices.eig_sym(sf.limit, tol)
    running = np.full(sf.dim, -np.inf)
    off_worst = 0.0
    for n in ns:
        d = v.conj().T @ sf.lower(n) @ v
        off = float(np.linalg.norm(d - np.diag(np.diagonal(d))))
        off_worst = max(off_worst, off)
        running = np.maximum(running, np.diagonal(d).real)
    if off_worst > math.sqrt(tol.herm):
        return StageResult(
            "commuting-supremum", True, "no common eigenbasis found; skipped"
        )
    final_diff = sf.lower(ns[-1]) - sf.limit
    wd, _ = matrices.eig_sym(final_diff, tol, vectors=False)
    op_gap = float(max(abs(wd[0]), abs(wd[-1])))
    gap = float(np.max(np.abs(np.sort(running) - w)))
    ok = gap <= op_gap + 100 * tol.conv
    return StageResult(
        "commuting-supremum",
        ok,
        f"sup of lower chain within {gap:.3e} of the limit spectrum",
        residual=gap,
    )


def squeeze_sot_check(
    sf: SqueezeFamily,
    n_max: int = 1000,
    test_vectors=None,
    tol: Tolerances = DEFAULT_TOL,
    slack: float | None = None,
) -> ConvergenceReport:
    """Three-stage strong-convergence pipeline for a squeeze scenario.

    Stage 1: quadratic forms of the middle chain converge to those of the
    limit.  Stage 2: ``||sqrt(upper - middle) x||`` dies out, which is what
    turns quadratic-form convergence into vector convergence.  Stage 3: the
    strong residuals ``||(middle - limit) x||`` themselves go down.  Each
    series must decrease within ``slack`` over the tested range.
    """
    slack = tol.conv if slack is None else slack
    ns = _check_range(sf, n_max)
    vectors = dense_test_vectors(sf.dim) if test_vectors is None else test_vectors
    stages: list[StageResult] = []

    between_bad = None
    for n in ns:
        if not (
            matrices.loewner_leq(sf.lower(n), sf.middle(n), tol)
            and matrices.loewner_leq(sf.middle(n), sf.upper(n), tol)
        ):
            between_bad = n
            break
    stages.append(
        StageResult(
            "chains-bracket-middle",
            between_bad is None,
            witness=between_bad,
        )
    )

    if between_bad is None:
        quad = []
        root = []
        strong = []
        for n in ns:
            mid = sf.middle(n)
            diff = mid - sf.limit
            quad.append(
                max(abs(complex(np.vdot(x, diff @ x)).real) for x in vectors)
            )
            gap_root = matrices.sqrt_psd(sf.upper(n) - mid, tol)
            root.append(max(float(np.linalg.norm(gap_root @ x)) for x in vectors))
            strong.append(max(float(np.linalg.norm(diff @ x)) for x in vectors))
        for name, series in (
            ("quadratic-form-residuals", quad),
            ("gap-root-residuals", root),
            ("strong-residuals", strong),
        ):
            ok, bad, worst = _decreasing_to_tolerance(series, slack)
            stages.append(
                StageResult(
                    name,
                    ok,
                    f"final residual {series[-1]:.3e}",
                    witness=bad,
                    residual=series[-1],
                )
            )

    passed = all(s.passed for s in stages)
    return ConvergenceReport(sf.name, "squeeze-pipeline", passed, tuple(stages))


# -- built-in scenarios ----------------------------------------------------


def scaled_projection_scenario() -> SqueezeFamily:
    """A projection approached by its own scalar squeezes."""
    p = np.array([[0.5, 0.5], [0.5, 0.5]], dtype=np.complex128)
    eye = np.eye(2, dtype=np.complex128)

    def lower(n: int) -> np.ndarray:
        return (1.0 - 1.0 / n) * p

    def upper(n: int) -> np.ndarray:
        return p + (eye - p) / n

    return SqueezeFamily("scaled-projection", 2, lower, upper, lower, p)


def diagonal_scenario() -> SqueezeFamily:
    """Commuting diagonal chains increasing to diag(1, 1/2)."""
    limit = np.diag([1.0, 0.5]).astype(np.complex128)

    def lower(n: int) -> np.ndarray:
        return np.diag([1.0 - 1.0 / n, 0.5 - 0.5 / n]).astype(np.complex128)

    def upper(n: int) -> np.ndarray:
        return np.diag([1.0, 0.5 + 0.5 / n]).astype(np.complex128)

    return SqueezeFamily("diagonal", 2, lower, upper, lower, limit)


def commuting_rank2_scenario() -> SqueezeFamily:
    """A rank-two limit in a fixed rotated eigenbasis, dim 4."""
    rng = np.random.default_rng(1905)
    u = matrices.haar_unitary(4, rng)

    def conj(d) -> np.ndarray:
        return (u * np.asarray(d, dtype=np.complex128)) @ u.conj().T

    limit = conj([1.0, 0.5, 0.0, 0.0])

    def lower(n: int) -> np.ndarray:
        return conj([1.0 - 1.0 / n, 0.5 * (1.0 - 1.0 / n), 0.0, 0.0])

    def upper(n: int) -> np.ndarray:
        return conj([1.0, 0.5 + 0.25 / n, 0.5 / n, 0.5 / n])

    return SqueezeFamily("commuting-rank2", 4, lower, upper, lower, limit)


def builtin_scenarios() -> list[SqueezeFamily]:
    return [scaled_projection_scenario(), diagonal_scenario(), commuting_rank2_scenario()]


# -- JSON scenario loading -------------------------------------------------


def _matrix_from_json(name: str, raw, dim: int) -> np.ndarray:
    try:
        arr = np.array(
            [[complex(entry[0], entry[1]) for entry in row] for row in raw],
            dtype=np.complex128,
        )
    except (TypeError, IndexError, ValueError) as exc:
        raise ScenarioFormatError(
            f"matrix {name!r} must be nested lists of [re, im] pairs"
        ) from exc
    if arr.shape != (dim, dim):
        raise ScenarioFormatError(
            f"matrix {name!r} has shape {arr.shape}, expected ({dim}, {dim})"
        )
    if not matrices.is_hermitian(arr):
        raise ScenarioFormatError(f"matrix {name!r} is not Hermitian")
    return arr


def load_scenario(source) -> SqueezeFamily:
    """Build a finite squeeze scenario from its JSON description.

    The document holds ``dim``, a ``matrices`` table of named operators
    (entries as ``[re, im]`` pairs, row-major), an increasing ``chain`` of
    matrix names and the name of the ``limit``.  The chain doubles as both
    the lower and the middle sequence; the limit caps it from above.
    """
    fallback_name = "scenario"
    if isinstance(source, (str, bytes)):
        with open(source, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
        fallback_name = Path(os.fsdecode(source)).stem
    elif hasattr(source, "read"):
        doc = json.load(source)
    else:
        doc = source
    if not isinstance(doc, dict):
        raise ScenarioFormatError("scenario document must be a JSON object")
    missing = {"dim", "matrices", "chain", "limit"} - set(doc)
    if missing:
        raise ScenarioFormatError(f"scenario document lacks keys: {sorted(missing)}")
    dim = doc["dim"]
    if not isinstance(dim, int) or dim < 1:
        raise ScenarioFormatError("dim must be a positive integer")
    if not isinstance(doc["matrices"], dict) or not doc["matrices"]:
        raise ScenarioFormatError("matrices must be a non-empty object")
    table = {
        str(name): _matrix_from_json(str(name), raw, dim)
        for name, raw in doc["matrices"].items()
    }
    chain_names = doc["chain"]
    if not isinstance(chain_names, list) or not chain_names:
        raise ScenarioFormatError("chain must be a non-empty list of matrix names")
    for name in list(chain_names) + [doc["limit"]]:
        if name not in table:
            raise ScenarioFormatError(f"name {name!r} missing from the matrices table")
    chain = [table[name] for name in chain_names]
    limit = table[doc["limit"]]

    def at(n: int) -> np.ndarray:
        return chain[n - 1]

    name = str(doc.get("name", fallback_name))
    return SqueezeFamily(
        name, dim, at, lambda n: limit, at, limit, n_max=len(chain)
    )


# -- shared test vectors ---------------------------------------------------


def sparse_test_corpus(seed: int = 23, randoms: int = 16) -> list[SparseVector]:
    """Basis vectors on the first nine coordinates plus seeded sparse noise."""
    out = [SparseVector.basis(i) for i in range(9)]
    rng = np.random.default_rng(seed)
    for _ in range(randoms):
        size = int(rng.integers(1, 5))
        coords = rng.choice(9, size=size, replace=False)
        vec = {}
        for c in coords:
            vec[int(c)] = complex(rng.normal(), rng.normal())
        out.append(SparseVector(vec))
    return out


def dense_test_vectors(dim: int, count: int = 6, seed: int = 31) -> list[np.ndarray]:
    """Standard basis plus seeded random unit vectors of the given dimension."""
    rng = np.random.default_rng(seed + dim)
    out = [np.eye(dim, dtype=np.complex128)[:, i] for i in range(dim)]
    for _ in range(count):
        out.append(matrices.random_unit_vector(dim, rng))
    return out
