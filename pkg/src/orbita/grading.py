"""Characteristic elements and the ad(H)-grading they induce.

``H`` is stored in the dual basis ``E_1..E_N``; with the standard inner product
``alpha(H)`` is just the dot product of coordinate vectors.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Mapping, Sequence

import numpy as np

from . import linalg
from .errors import (
    DegenerateDiagram,
    DimensionMismatch,
    InconsistencyError,
    InvalidDiagram,
    NonDominant,
    NonIntegralLabel,
)
from .rootsys import LieTypeSpec, Root, RootSystem, format_vector


@dataclass(frozen=True)
class WeightedDiagram:
    """Node labels ``(alpha_1(H), ..., alpha_r(H))`` in simple-root order."""

    spec: LieTypeSpec
    labels: tuple[int, ...]

    def __post_init__(self):
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        if len(labels) != self.spec.rank:
            raise DimensionMismatch(f"{self.spec} needs {self.spec.rank} labels, got {len(labels)}")
        for x in labels:
            if x != int(x):
                raise NonIntegralLabel(f"label {x} is not an integer")
            if x < 0:
                raise NonDominant(f"label {x} is negative")
            if x > 2:
                raise NonIntegralLabel(f"label {x} is not in {{0,1,2}}")
        object.__setattr__(self, "labels", tuple(int(x) for x in labels))
        if not any(labels):
            raise DegenerateDiagram("all labels are zero")

    @classmethod
    def parse(cls, spec: LieTypeSpec, text: str) -> WeightedDiagram:
        try:
            labels = tuple(int(t) for t in text.replace(" ", "").split(",") if t != "")
        except ValueError:
            raise InvalidDiagram(f"labels must be comma-separated integers: {text!r}") from None
        return cls(spec, labels)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.labels)) + ")"


@dataclass(frozen=True)
class CharacteristicElement:
    coords: tuple[Fraction, ...]

    def value(self, root: Root) -> Fraction:
        return root.dot(Root(self.coords))

    def __str__(self) -> str:
        return format_vector(self.coords, "E")


class RootBuckets(Mapping):
    """Read-only map ``m -> frozenset of roots with alpha(H) = m``.

    Built from the eigenvalues of the positive roots; the root sets are only
    materialized on first access, while ``size`` answers from counts.
    """

    def __init__(self, positive: Sequence[Root], negative: Sequence[Root], values: np.ndarray):
        self._positive = positive
        self._negative = negative
        self._values = values
        sizes: dict[int, int] = {}
        for m, c in Counter(values.tolist()).items():
            sizes[m] = sizes.get(m, 0) + c
            sizes[-m] = sizes.get(-m, 0) + c
        self._sizes = dict(sorted(sizes.items()))
        self._sets: dict[int, frozenset[Root]] | None = None

    def size(self, m: int) -> int:
        return self._sizes.get(m, 0)

    def _materialize(self) -> dict[int, frozenset[Root]]:
        if self._sets is None:
            lists: dict[int, list[Root]] = {m: [] for m in self._sizes}
            for a, neg, v in zip(self._positive, self._negative, self._values.tolist()):
                lists[v].append(a)
                lists[-v].append(neg)
            self._sets = {m: frozenset(roots) for m, roots in lists.items()}
        return self._sets

    def __getitem__(self, m: int) -> frozenset[Root]:
        return self._materialize()[m]

    def __iter__(self) -> Iterator[int]:
        return iter(self._sizes)

    def __len__(self) -> int:
        return len(self._sizes)


@dataclass(frozen=True, eq=False)
class GradedDecomposition:
    """Roots bucketed by their eigenvalue ``alpha(H)``."""

    by_degree: Mapping[int, frozenset[Root]]
    cartan_rank: int

    def dim(self, m: int) -> int:
        size = getattr(self.by_degree, "size", None)
        n = size(m) if size else len(self.by_degree.get(m, ()))
        return n + self.cartan_rank if m == 0 else n

    @property
    def degrees(self) -> list[int]:
        return sorted(set(self.by_degree) | {0})

    @property
    def dims(self) -> dict[int, int]:
        return {m: self.dim(m) for m in self.degrees}

    @property
    def max_degree(self) -> int:
        return max((m for m in self.by_degree if self.dim(m)), default=0)

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    @property
    def nilradical_dim(self) -> int:
        """``dim n = sum of dim g(m) over m >= 2``."""
        return sum(d for m, d in self.dims.items() if m >= 2)


def _scaled(coords: Sequence[Fraction]) -> tuple[tuple[int, ...], int]:
    den = math.lcm(*(c.denominator for c in coords))
    return tuple(int(c * den) for c in coords), den


@lru_cache(maxsize=None)
def _h_system(rs: RootSystem) -> tuple[tuple[tuple[int, ...], ...], int]:
    """Inverse of [simple roots; ambient constraints] as an integer matrix over a denominator."""
    rows = [list(a.coords) for a in rs.simple_roots] + [list(c.coords) for c in rs.ambient_constraints]
    if len(rows) != rs.ambient_dim:
        raise InconsistencyError(f"{rs.spec}: {len(rows)} equations for {rs.ambient_dim} unknowns")
    inv = linalg.inverse(rows)
    den = math.lcm(*(x.denominator for row in inv for x in row))
    return tuple(tuple(int(x * den) for x in row) for row in inv), den


@lru_cache(maxsize=None)
def _positive_data(rs: RootSystem) -> tuple[tuple[Root, ...], tuple[Root, ...], np.ndarray]:
    """Positive roots, their negatives, and doubled coordinates as an integer matrix."""
    pos = rs.positive_roots
    twice = np.array([a.twice() for a in pos], dtype=np.int64)
    return pos, tuple(-a for a in pos), twice


def _check_spec(rs: RootSystem, wdd: WeightedDiagram):
    if wdd.spec != rs.spec:
        raise DimensionMismatch(f"diagram for {wdd.spec} used with {rs.spec}")


def characteristic_element(rs: RootSystem, wdd: WeightedDiagram) -> CharacteristicElement:
    """Solve ``alpha_i(H) = m_i`` together with the ambient constraints."""
    _check_spec(rs, wdd)
    inv, den = _h_system(rs)
    rhs = wdd.labels + (0,) * len(rs.ambient_constraints)
    coords = tuple(Fraction(sum(x * b for x, b in zip(row, rhs) if b), den) for row in inv)
    return CharacteristicElement(coords)


def weighted_diagram_of(rs: RootSystem, H: CharacteristicElement) -> WeightedDiagram:
    h = Root(H.coords)
    if h.dim != rs.ambient_dim:
        raise DimensionMismatch(f"H has {h.dim} coordinates, expected {rs.ambient_dim}")
    for c in rs.ambient_constraints:
        if c.dot(h) != 0:
            raise InvalidDiagram(f"H={H} violates the ambient constraint {c}")
    values = [a.dot(h) for a in rs.simple_roots]
    for v in values:
        if v < 0:
            raise NonDominant(f"H={H} has a negative simple-root value {v}")
        if v.denominator != 1 or v > 2:
            raise NonIntegralLabel(f"H={H} has simple-root value {v} outside {{0,1,2}}")
    return WeightedDiagram(rs.spec, tuple(int(v) for v in values))


def graded_decomposition(rs: RootSystem, H: CharacteristicElement) -> GradedDecomposition:
    if len(H.coords) != rs.ambient_dim:
        raise DimensionMismatch(f"H has {len(H.coords)} coordinates, expected {rs.ambient_dim}")
    h, den = _scaled(H.coords)
    pos, neg, twice = _positive_data(rs)
    raw = twice @ np.array(h, dtype=np.int64)
    values, rem = np.divmod(raw, 2 * den)
    if rem.any():
        bad = pos[int(np.flatnonzero(rem)[0])]
        raise InvalidDiagram(f"{bad} takes a non-integral value on H={H}")
    return GradedDecomposition(RootBuckets(pos, neg, values), rs.rank)


@lru_cache(maxsize=8192)
def grading_of(rs: RootSystem, wdd: WeightedDiagram) -> tuple[CharacteristicElement, GradedDecomposition]:
    """Characteristic element and grading for a diagram, memoized."""
    H = characteristic_element(rs, wdd)
    return H, graded_decomposition(rs, H)


def height_from_coefficients(rs: RootSystem, wdd: WeightedDiagram) -> int:
    """``k_1 m_1 + ... + k_r m_r`` with ``k`` the highest-root coefficients."""
    _check_spec(rs, wdd)
    return sum(k * m for k, m in zip(rs.highest_coeffs, wdd.labels))


def height_from_grading(rs: RootSystem, wdd: WeightedDiagram) -> int:
    """Largest ``m`` with ``g(m)`` nonzero."""
    return grading_of(rs, wdd)[1].max_degree


def height(rs: RootSystem, wdd: WeightedDiagram) -> int:
    by_coeffs = height_from_coefficients(rs, wdd)
    by_grading = height_from_grading(rs, wdd)
    if by_coeffs != by_grading:
        raise InconsistencyError(f"{rs.spec} {wdd}: height {by_coeffs} from coefficients, {by_grading} from grading")
    return by_coeffs


def is_height_spherical(rs: RootSystem, wdd: WeightedDiagram) -> bool:
    """Height 2 or 3; height 1 never comes from a nilpotent orbit."""
    return height(rs, wdd) in (2, 3)


def orbit_dimension(rs: RootSystem, wdd: WeightedDiagram) -> int:
    gd = grading_of(rs, wdd)[1]
    return rs.dim - gd.dim(0) - gd.dim(1)
