"""The nine families of simple root systems in explicit coordinates.

Conventions follow the usual Bourbaki realizations:

* ``A_{n-1}`` lives in ``R^n`` on the hyperplane ``sum(a_i) = 0``.
* ``B_n``, ``C_n``, ``D_n`` and ``F_4`` use ``R^n`` (``R^4`` for ``F_4``).
* ``E_8`` uses ``R^8``; ``E_7`` and ``E_6`` are cut out of it by the forms
  ``e8+e7`` (both) and ``e7-e6`` (``E_6`` only).
* ``G_2`` lives in ``R^3`` on the hyperplane ``sum(a_i) = 0``.

Simple roots are numbered so that weighted-diagram labels line up with the
usual diagram pictures: ``E``-types have node 2 attached to node 4, and
``F_4`` is numbered from the short end, ``alpha_1 = (e1-e2-e3-e4)/2``.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from . import linalg
from .errors import DimensionMismatch, NotARoot, UnsupportedRank

HALF = Fraction(1, 2)

FAMILIES = ("A", "B", "C", "D", "E", "F", "G")


@dataclass(frozen=True, order=True)
class Root:
    """A vector of exact rational coordinates in the ambient space."""

    coords: tuple[Fraction, ...]

    def __post_init__(self):
        if not all(type(c) is Fraction for c in self.coords):
            object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))
        object.__setattr__(self, "_hash", hash(self.coords))

    def __hash__(self):
        return self._hash

    def twice(self) -> tuple[int, ...]:
        """``2 * coords`` as integers; every root has half-integral coordinates."""
        out = tuple(int(2 * c) for c in self.coords)
        if any(2 * c != x for c, x in zip(self.coords, out)):
            raise ValueError(f"{self} is not half-integral")
        return out

    @classmethod
    def of(cls, *values) -> Root:
        return cls(tuple(Fraction(v) for v in values))

    @classmethod
    def unit(cls, dim: int, i: int) -> Root:
        """The basis vector ``e_i`` (1-based) of ``R^dim``."""
        return cls(tuple(Fraction(int(k == i - 1)) for k in range(dim)))

    @property
    def dim(self) -> int:
        return len(self.coords)

    def _check(self, other: Root):
        if other.dim != self.dim:
            raise DimensionMismatch(f"vectors of dimension {self.dim} and {other.dim}")

    def __add__(self, other: Root) -> Root:
        self._check(other)
        return Root(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: Root) -> Root:
        self._check(other)
        return Root(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> Root:
        return Root(tuple(-a for a in self.coords))

    def __rmul__(self, scalar) -> Root:
        s = Fraction(scalar)
        return Root(tuple(s * a for a in self.coords))

    def dot(self, other: Root) -> Fraction:
        self._check(other)
        return sum((a * b for a, b in zip(self.coords, other.coords)), Fraction(0))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __str__(self) -> str:
        return format_vector(self.coords, "e")


def format_vector(coords: Sequence[Fraction], basis: str = "e") -> str:
    """Render coordinates as ``e1+e2`` or ``1/2(e8-e7+...)``."""
    if not any(coords):
        return "0"
    if all(c.denominator == 1 for c in coords):
        return _format_terms(coords, basis)
    if all((2 * c).denominator == 1 for c in coords):
        return "1/2(" + _format_terms([2 * c for c in coords], basis) + ")"
    return _format_terms(coords, basis)


def _format_terms(coords, basis) -> str:
    out = []
    for i, c in enumerate(coords, start=1):
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        coef = "" if mag == 1 else str(mag)
        out.append(f"{sign}{coef}{basis}{i}")
    text = "".join(out)
    return text[1:] if text.startswith("+") else text


_TERM = re.compile(r"([+-]?)\s*(\d+(?:/\d+)?)?\s*e(\d+)")


def parse_root(text: str, dim: int) -> Root:
    """Parse ``"e1+e2"``, ``"-e1-e2+2e3"`` or ``"1/2(e8-e7+e1)"``."""
    s = text.replace(" ", "").replace("½", "1/2").replace("−", "-")
    scale = Fraction(1)
    m = re.fullmatch(r"(\d+/\d+|\d+)\((.*)\)", s)
    if m:
        scale = Fraction(m.group(1))
        s = m.group(2)
    coords = [Fraction(0)] * dim
    pos = 0
    for term in _TERM.finditer(s):
        if term.start() != pos:
            raise ValueError(f"cannot parse vector {text!r}")
        pos = term.end()
        idx = int(term.group(3))
        if not 1 <= idx <= dim:
            raise DimensionMismatch(f"e{idx} outside R^{dim} in {text!r}")
        c = Fraction(term.group(2) or 1)
        coords[idx - 1] += -c if term.group(1) == "-" else c
    if pos != len(s) or pos == 0:
        raise ValueError(f"cannot parse vector {text!r}")
    return Root(tuple(scale * c for c in coords))


@dataclass(frozen=True)
class LieTypeSpec:
    """Cartan type of a complex simple Lie algebra."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise UnsupportedRank(f"unknown family {self.family!r}")
        r = self.rank
        ok = {
            "A": r >= 1,
            "B": r >= 2,
            "C": r >= 2,
            "D": r >= 4,
            "E": r in (6, 7, 8),
            "F": r == 4,
            "G": r == 2,
        }[self.family]
        if not isinstance(r, int) or not ok:
            raise UnsupportedRank(f"{self.family}{r} is not a supported type")

    @classmethod
    def parse(cls, name: str, rank: int | None = None) -> LieTypeSpec:
        """Accept ``"E6"``, ``"G2"`` or a family letter plus explicit rank."""
        name = name.strip().upper()
        m = re.fullmatch(r"([A-G])(\d+)?", name)
        if not m:
            raise UnsupportedRank(f"unknown type {name!r}")
        fam, digits = m.group(1), m.group(2)
        if digits is not None:
            if rank is not None and rank != int(digits):
                raise UnsupportedRank(f"rank {rank} conflicts with {name}")
            rank = int(digits)
        if rank is None:
            raise UnsupportedRank(f"type {fam} needs a rank")
        return cls(fam, rank)

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def is_classical(self) -> bool:
        return self.family in "ABCD"

    @property
    def n(self) -> int:
        """Size parameter of the classical matrix realization (``sl(n)`` has rank n-1)."""
        return self.rank + 1 if self.family == "A" else self.rank

    @property
    def ambient_dim(self) -> int:
        if self.family == "A":
            return self.rank + 1
        if self.family == "E":
            return 8
        if self.family == "G":
            return 3
        return self.rank

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Roots, positive system and simple roots of one simple Lie algebra.

    Equality and hashing go through ``spec``: construction is deterministic.
    """

    spec: LieTypeSpec
    all_roots: frozenset[Root]
    positive_roots: tuple[Root, ...]
    simple_roots: tuple[Root, ...]
    highest_root: Root
    highest_coeffs: tuple[int, ...]
    ambient_constraints: tuple[Root, ...]
    _coeffs: dict = field(repr=False)

    def __eq__(self, other):
        return isinstance(other, RootSystem) and other.spec == self.spec

    def __hash__(self):
        return hash(("RootSystem", self.spec))

    @property
    def rank(self) -> int:
        return self.spec.rank

    @property
    def ambient_dim(self) -> int:
        return self.spec.ambient_dim

    @property
    def dim(self) -> int:
        """Dimension of the Lie algebra: roots plus Cartan subalgebra."""
        return len(self.all_roots) + self.rank

    @property
    def negative_roots(self) -> tuple[Root, ...]:
        return tuple(-a for a in self.positive_roots)

    def coefficients(self, root: Root) -> tuple[int, ...]:
        try:
            return self._coeffs[root]
        except KeyError:
            raise NotARoot(f"{root} is not a root of {self.spec}") from None

    def is_positive(self, root: Root) -> bool:
        return root in self._coeffs and sum(self._coeffs[root]) > 0

    def reflect(self, v: Root, alpha: Root) -> Root:
        return v - (2 * v.dot(alpha) / alpha.dot(alpha)) * alpha


def _vec(dim: int, entries: dict[int, Fraction | int]) -> Root:
    coords = [Fraction(0)] * dim
    for i, c in entries.items():
        coords[i - 1] = Fraction(c)
    return Root(tuple(coords))


def _pm_pairs(dim: int, indices: Iterable[int]) -> list[Root]:
    idx = list(indices)
    out = []
    for i, j in itertools.combinations(idx, 2):
        for si, sj in itertools.product((1, -1), repeat=2):
            out.append(_vec(dim, {i: si, j: sj}))
    return out


def _half_spinors(dim: int, fixed: dict[int, int], free: Sequence[int], parity: int) -> list[Root]:
    """Roots ``1/2(fixed + sum of +-e_j over free)`` with minus-sign count of given parity."""
    out = []
    for signs in itertools.product((1, -1), repeat=len(free)):
        if signs.count(-1) % 2 != parity:
            continue
        entries = {i: HALF * s for i, s in fixed.items()}
        entries.update({j: HALF * s for j, s in zip(free, signs)})
        out.append(_vec(dim, entries))
    return out


def _with_negatives(roots: Iterable[Root]) -> set[Root]:
    s = set(roots)
    return s | {-a for a in s}


def _roots_and_simple(spec: LieTypeSpec) -> tuple[set[Root], list[Root], list[Root]]:
    fam, r, N = spec.family, spec.rank, spec.ambient_dim
    e = lambda i: Root.unit(N, i)  # noqa: E731
    chain = [e(i) - e(i + 1) for i in range(1, N)]
    constraints: list[Root] = []

    if fam == "A":
        roots = {e(i) - e(j) for i in range(1, N + 1) for j in range(1, N + 1) if i != j}
        simple = chain
        constraints = [_vec(N, {i: 1 for i in range(1, N + 1)})]
    elif fam == "B":
        roots = set(_pm_pairs(N, range(1, N + 1))) | _with_negatives(e(i) for i in range(1, N + 1))
        simple = chain + [e(N)]
    elif fam == "C":
        roots = set(_pm_pairs(N, range(1, N + 1))) | _with_negatives(
            2 * e(i) for i in range(1, N + 1)
        )
        simple = chain + [2 * e(N)]
    elif fam == "D":
        roots = set(_pm_pairs(N, range(1, N + 1)))
        simple = chain + [e(N - 1) + e(N)]
    elif fam == "E":
        a1 = parse_root("1/2(e8-e7-e6-e5-e4-e3-e2+e1)", 8)
        simple = [a1, e(1) + e(2)] + [e(i - 1) - e(i - 2) for i in range(3, r + 1)]
        if r == 8:
            roots = set(_pm_pairs(8, range(1, 9)))
            roots |= _with_negatives(_half_spinors(8, {8: 1}, range(1, 8), 0))
        elif r == 7:
            roots = set(_pm_pairs(8, range(1, 7))) | _with_negatives([e(8) - e(7)])
            roots |= _with_negatives(_half_spinors(8, {8: 1, 7: -1}, range(1, 7), 1))
            constraints = [e(8) + e(7)]
        else:
            roots = set(_pm_pairs(8, range(1, 6)))
            roots |= _with_negatives(_half_spinors(8, {8: 1, 7: -1, 6: -1}, range(1, 6), 0))
            constraints = [e(8) + e(7), e(7) - e(6)]
    elif fam == "F":
        roots = set(_pm_pairs(4, range(1, 5))) | _with_negatives(e(i) for i in range(1, 5))
        roots |= set(_half_spinors(4, {}, range(1, 5), 0)) | set(_half_spinors(4, {}, range(1, 5), 1))
        simple = [parse_root("1/2(e1-e2-e3-e4)", 4), e(4), e(3) - e(4), e(2) - e(3)]
    else:
        positive = [
            parse_root(t, 3)
            for t in ("e1-e2", "-e2+e3", "-e1+e3", "-2e1+e2+e3", "e1-2e2+e3", "-e1-e2+2e3")
        ]
        roots = _with_negatives(positive)
        simple = [positive[0], positive[3]]
        constraints = [_vec(3, {1: 1, 2: 1, 3: 1})]
    return roots, simple, constraints


def _simple_coefficients(roots: Iterable[Root], simple: Sequence[Root]) -> dict[Root, tuple[int, ...]]:
    r = len(simple)
    rows = [list(a.coords) for a in simple]
    # pick r ambient coordinates on which the simple roots are independent
    cols = linalg._eliminate(linalg.to_matrix(rows))
    if len(cols) != r:
        raise ValueError("simple roots are linearly dependent")
    inv = linalg.inverse([[row[c] for c in cols] for row in rows])
    den = math.lcm(*(x.denominator for row in inv for x in row))
    inv_int = [[int(x * den) for x in row] for row in inv]
    simple2 = [s.twice() for s in simple]
    den2 = 2 * den
    out = {}
    for a in roots:
        a2 = a.twice()
        coeffs = []
        for i in range(r):
            q, rem = divmod(sum(a2[c] * inv_int[k][i] for k, c in enumerate(cols) if a2[c]), den2)
            if rem:
                raise ValueError(f"{a} is not an integral combination of simple roots")
            coeffs.append(q)
        recon = tuple(sum(x * s[j] for x, s in zip(coeffs, simple2)) for j in range(len(a2)))
        if recon != a2:
            raise ValueError(f"{a} is not in the span of the simple roots")
        if not (all(c >= 0 for c in coeffs) or all(c <= 0 for c in coeffs)):
            raise ValueError(f"{a} has mixed-sign simple coefficients {coeffs}")
        out[a] = tuple(coeffs)
    return out


@lru_cache(maxsize=None)
def build_root_system(spec: LieTypeSpec) -> RootSystem:
    roots, simple, constraints = _roots_and_simple(spec)
    coeffs = _simple_coefficients(roots, simple)
    positive = sorted((a for a in roots if sum(coeffs[a]) > 0), key=lambda a: (sum(coeffs[a]), coeffs[a]))
    top = max(sum(coeffs[a]) for a in positive)
    highest = [a for a in positive if sum(coeffs[a]) == top]
    if len(highest) != 1:
        raise ValueError(f"{spec}: no unique highest root")
    return RootSystem(
        spec=spec,
        all_roots=frozenset(roots),
        positive_roots=tuple(positive),
        simple_roots=tuple(simple),
        highest_root=highest[0],
        highest_coeffs=coeffs[highest[0]],
        ambient_constraints=tuple(constraints),
        _coeffs=coeffs,
    )


def root_in_simple_basis(rs: RootSystem, r: Root) -> tuple[int, ...]:
    """Integer coordinates of a root with respect to the simple roots."""
    if r.dim != rs.ambient_dim:
        raise DimensionMismatch(f"expected a vector in R^{rs.ambient_dim}, got R^{r.dim}")
    return rs.coefficients(r)


def is_root(rs: RootSystem, v: Root | Sequence) -> bool:
    if not isinstance(v, Root):
        v = Root(tuple(Fraction(x) for x in v))
    if v.dim != rs.ambient_dim:
        raise DimensionMismatch(f"expected a vector in R^{rs.ambient_dim}, got R^{v.dim}")
    return v in rs.all_roots
