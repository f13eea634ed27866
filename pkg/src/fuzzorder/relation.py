"""Fuzzy relations on finite labeled carriers, and the order axioms.

A fuzzy relation assigns each ordered pair of carrier elements a membership
grade in [0, 1].  The algebra here uses only comparison, minimum and maximum,
so every grade that appears in any result is bit-identical to some input
grade, 0, or 1.  Equality checks are therefore exact; there are no epsilon
tolerances anywhere in this package.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence, Union

import numpy as np

__all__ = [
    "AxiomReport",
    "CarrierMismatchError",
    "Element",
    "ElementLike",
    "EmptyFamilyError",
    "FuzzyOrderError",
    "FuzzyRelation",
    "Pair",
    "PreconditionError",
    "Verdict",
    "check_order",
    "extends",
    "incomparable_pairs",
    "is_antisymmetric",
    "is_linear",
    "is_reflexive",
    "is_transitive",
    "pointwise_inf",
]


class FuzzyOrderError(Exception):
    """Base class for domain errors raised by this package."""


class CarrierMismatchError(FuzzyOrderError):
    """Two relations that must share a carrier have different element lists."""


class EmptyFamilyError(FuzzyOrderError):
    """An operation over a family of relations received no members."""


class PreconditionError(FuzzyOrderError):
    """A named operation precondition does not hold.

    ``reason`` is a short machine-readable code such as ``"not-an-order"``,
    ``"equal-pivots"``, ``"r(b,a)>0"`` or ``"r(a,b)=0"``.
    """

    def __init__(self, reason: str, message: str):
        super().__init__(message)
        self.reason = reason


@dataclass(frozen=True)
class Element:
    """A carrier element: a label plus its fixed position in the carrier."""

    label: str
    index: int


class Pair(NamedTuple):
    first: Element
    second: Element


ElementLike = Union[Element, str, int]


@dataclass(frozen=True)
class Verdict:
    """A pass/fail answer together with the complete list of violations.

    ``passed`` is True exactly when ``witnesses`` is empty, so a Verdict can
    be used directly in boolean context.
    """

    passed: bool
    witnesses: tuple = ()

    def __bool__(self) -> bool:
        return self.passed


@dataclass(frozen=True)
class AxiomReport:
    """Per-axiom verdicts with concrete counterexample witnesses.

    Witness lists are complete (every violation, row-major order), not
    first-found, so they can drive diagnostics as well as tests.
    """

    reflexive: bool
    antisymmetric: bool
    transitive: bool
    reflexivity_witnesses: tuple
    antisymmetry_witnesses: tuple
    transitivity_witnesses: tuple

    @property
    def is_order(self) -> bool:
        return self.reflexive and self.antisymmetric and self.transitive


@dataclass(frozen=True, eq=False)
class FuzzyRelation:
    """An immutable fuzzy relation: ordered labels plus an n-by-n grade grid.

    Entry ``grid[i, j]`` is the grade of (labels[i], labels[j]).  Construction
    validates the carrier (nonempty, distinct labels) and the grid (square,
    finite, every entry in [0, 1]) and freezes both; operations never mutate
    a relation, they build new ones.
    """

    labels: tuple[str, ...]
    grid: np.ndarray

    def __post_init__(self):
        labels = tuple(self.labels)
        if len(labels) == 0:
            raise ValueError("carrier must be nonempty")
        for lbl in labels:
            if not isinstance(lbl, str) or lbl == "":
                raise ValueError(f"element labels must be nonempty strings, got {lbl!r}")
        if len(set(labels)) != len(labels):
            raise ValueError("element labels must be pairwise distinct")
        grid = np.asarray(self.grid, dtype=np.float64)
        n = len(labels)
        if grid.shape != (n, n):
            raise ValueError(
                f"grid must be {n}x{n} to match the {n} labels, got shape {grid.shape}"
            )
        if not np.isfinite(grid).all():
            raise ValueError("grades must be finite (no NaN or infinity)")
        if (grid < 0.0).any() or (grid > 1.0).any():
            raise ValueError("grades must lie in the closed interval [0, 1]")
        grid = grid + 0.0  # fresh array; also canonicalizes -0.0 to +0.0
        grid.setflags(write=False)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "_pos", {lbl: i for i, lbl in enumerate(labels)})

    # -- carrier ----------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def elements(self) -> tuple[Element, ...]:
        return tuple(Element(lbl, i) for i, lbl in enumerate(self.labels))

    def index_of(self, x: ElementLike) -> int:
        """Resolve an element reference (Element, label, or index) to its index."""
        if isinstance(x, Element):
            x = x.label
        if isinstance(x, str):
            try:
                return self._pos[x]
            except KeyError:
                raise KeyError(f"unknown element label {x!r}") from None
        i = int(x)
        if not 0 <= i < self.n:
            raise IndexError(f"element index {i} out of range for carrier of size {self.n}")
        return i

    def element(self, x: ElementLike) -> Element:
        i = self.index_of(x)
        return Element(self.labels[i], i)

    # -- grades -----------------------------------------------------------

    def value(self, x: ElementLike, y: ElementLike) -> float:
        return float(self.grid[self.index_of(x), self.index_of(y)])

    def with_value(self, x: ElementLike, y: ElementLike, value: float) -> "FuzzyRelation":
        """A copy of this relation with one entry replaced."""
        g = np.array(self.grid)
        g[self.index_of(x), self.index_of(y)] = value
        return FuzzyRelation(self.labels, g)

    def tolists(self) -> list[list[float]]:
        return [[float(v) for v in row] for row in self.grid]

    # -- identity ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, FuzzyRelation):
            return NotImplemented
        return self.labels == other.labels and np.array_equal(self.grid, other.grid)

    def __hash__(self) -> int:
        return hash((self.labels, self.grid.tobytes()))

    def __repr__(self) -> str:
        return f"FuzzyRelation(labels={self.labels!r}, n={self.n})"


# -------------------------------------------------------------------------
# axiom predicates
# -------------------------------------------------------------------------


def is_reflexive(r: FuzzyRelation) -> Verdict:
    """Every element must be fully related to itself (diagonal exactly 1).

    Witnesses are ``(label, value)`` pairs for each diagonal entry below 1.
    """
    diag = np.diagonal(r.grid)
    bad = np.flatnonzero(diag != 1.0)
    witnesses = tuple((r.labels[i], float(diag[i])) for i in bad)
    return Verdict(not witnesses, witnesses)


def is_antisymmetric(r: FuzzyRelation) -> Verdict:
    """For distinct x, y at most one of the two directions may be positive.

    Witnesses are ``((x, y), r(x,y), r(y,x))`` per unordered pair, x before y
    in carrier order, with both directions strictly positive.
    """
    pos = r.grid > 0.0
    both = np.triu(pos & pos.T, k=1)
    witnesses = tuple(
        ((r.labels[i], r.labels[j]), float(r.grid[i, j]), float(r.grid[j, i]))
        for i, j in np.argwhere(both)
    )
    return Verdict(not witnesses, witnesses)


def is_transitive(r: FuzzyRelation) -> Verdict:
    """Max-min transitivity: r(x,z) >= min(r(x,y), r(y,z)) for all x, y, z.

    The supremum of the definition is a maximum here because carriers are
    finite by construction.  Witnesses are ``((x, y, z), r(x,z), bound)``
    triples in row-major order, where bound = min(r(x,y), r(y,z)) > r(x,z).
    """
    g = r.grid
    witnesses = []
    for x in range(r.n):
        via = np.minimum(g[x][:, None], g)  # [y, z] = min(r(x,y), r(y,z))
        for y, z in np.argwhere(via > g[x][None, :]):
            witnesses.append(
                ((r.labels[x], r.labels[y], r.labels[z]), float(g[x, z]), float(via[y, z]))
            )
    return Verdict(not witnesses, tuple(witnesses))


def check_order(r: FuzzyRelation) -> AxiomReport:
    """Check all three order axioms and collect every violation."""
    refl = is_reflexive(r)
    anti = is_antisymmetric(r)
    trans = is_transitive(r)
    return AxiomReport(
        reflexive=refl.passed,
        antisymmetric=anti.passed,
        transitive=trans.passed,
        reflexivity_witnesses=refl.witnesses,
        antisymmetry_witnesses=anti.witnesses,
        transitivity_witnesses=trans.witnesses,
    )


def _passes_order(grid: np.ndarray) -> bool:
    # Verdict-only fast path used by operation preconditions; no witnesses.
    n = grid.shape[0]
    if not (np.diagonal(grid) == 1.0).all():
        return False
    pos = grid > 0.0
    if np.triu(pos & pos.T, k=1).any():
        return False
    for x in range(n):
        bound = np.minimum(grid[x][:, None], grid).max(axis=0)
        if (grid[x] < bound).any():
            return False
    return True


def is_linear(r: FuzzyRelation) -> Verdict:
    """Linear (total): every pair of distinct elements is comparable.

    Witnesses are the incomparable pairs, as returned by
    :func:`incomparable_pairs`.
    """
    witnesses = tuple(incomparable_pairs(r))
    return Verdict(not witnesses, witnesses)


def incomparable_pairs(r: FuzzyRelation) -> list[Pair]:
    """All unordered pairs with grade zero in both directions, row-major.

    Pairs are canonicalized with the lower-indexed element first.
    """
    zero = (r.grid == 0.0) & (r.grid.T == 0.0)
    elems = r.elements
    return [Pair(elems[i], elems[j]) for i, j in np.argwhere(np.triu(zero, k=1))]


def extends(lo: FuzzyRelation, hi: FuzzyRelation) -> bool:
    """True when ``hi`` dominates ``lo`` entrywise over the same carrier."""
    if lo.labels != hi.labels:
        raise CarrierMismatchError(
            f"carriers differ: {lo.labels!r} vs {hi.labels!r}"
        )
    return bool((lo.grid <= hi.grid).all())


def pointwise_inf(family: Iterable[FuzzyRelation] | Sequence[FuzzyRelation]) -> FuzzyRelation:
    """Entrywise minimum of a nonempty family sharing one carrier."""
    members = list(family)
    if not members:
        raise EmptyFamilyError("pointwise infimum of an empty family is undefined")
    labels = members[0].labels
    for m in members[1:]:
        if m.labels != labels:
            raise CarrierMismatchError(
                f"carriers differ: {labels!r} vs {m.labels!r}"
            )
    return FuzzyRelation(labels, np.minimum.reduce([m.grid for m in members]))
